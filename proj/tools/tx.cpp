#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tx/constructions.hpp"
#include "tx/error.hpp"
#include "tx/group.hpp"
#include "tx/image.hpp"
#include "tx/inverse.hpp"
#include "tx/signature.hpp"
#include "tx/suite.hpp"
#include "tx/sync.hpp"
#include "tx/textio.hpp"

using json = nlohmann::ordered_json;
using namespace tx;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    bool json = false;
    int depth = kDefaultGcpDepth;
    int cap = kDefaultInverseCap;
    std::vector<std::string> files;
    std::string name;
    int r = 1;
    int bound = 16;
    int orderCap = kDefaultOrderStateCap;
    int steps = 8;
    std::string cls;
    int n = 0;
    std::string sigs;
    std::string suite = "paper";
    int jobs = 1;
    int viableDepth = kDefaultViableDepth;
    int viableSize = -1;
    bool minimizeProduct = false;
};

bool stdinUsed = false;

std::string read_source(const std::string& path) {
    if (path == "-") {
        if (stdinUsed) throw UsageError("stdin ('-') can be used only once");
        stdinUsed = true;
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParsedMachine load(const std::string& path) {
    try {
        return parse_transducer(read_source(path));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + std::string(e.what()).substr(std::string(errc_name(e.code())).size() + 2));
    }
}

Transducer load_core(const std::string& path) {
    ParsedMachine pm = load(path);
    if (pm.m.r != 0) throw Error(Errc::InvalidInput, path + ": expected a machine over X_n (r=0)");
    return pm.m;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int x = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            v.push_back(x);
        } catch (const std::exception&) {
            throw UsageError("bad integer '" + tok + "' in list '" + s + "'");
        }
    }
    if (v.empty()) throw UsageError("empty list");
    return v;
}

std::string parse_arg_n(const std::string& spec, int& n) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return spec;
    try {
        std::size_t used = 0;
        n = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
        throw UsageError("bad example size in '" + spec + "'");
    }
    return spec.substr(0, colon);
}

Transducer example_by_name(const std::string& spec) {
    if (spec == "g4" || spec == "g") return example_g();
    int n = 0;
    std::string kind = parse_arg_n(spec, n);
    if (n == 0) throw UsageError("unknown example '" + spec + "'");
    if (kind == "T") return example_T(n);
    if (kind == "U") return example_U(n);
    if (kind == "A") return example_A(n);
    if (kind == "B") return example_B(n);
    if (kind == "piR") return pi_R(n);
    if (kind == "id") return identity(n);
    throw UsageError("unknown example '" + spec + "' (g4, T:<n>, U:<n>, A:<n>, B:<n>, piR:<n>, id:<n>)");
}

json clopen_json(const ClopenSet& s) {
    json a = json::array();
    for (const auto& w : s.cones()) a.push_back(format_word(w, s.n()));
    return a;
}

// Output of one command: human text plus a JSON result.
struct Outcome {
    std::string text;
    json result;
    int exit = 0;
};

Outcome machine_outcome(const Transducer& t, int initial = kNone) {
    Outcome o;
    o.text = serialize(t, initial);
    o.result = {{"machine", o.text}, {"states", t.size()}};
    return o;
}

Outcome run(const std::string& cmd, const Opts& o) {
    Outcome out;
    if (cmd == "parse") {
        ParsedMachine pm = load(o.files[0]);
        out = machine_outcome(pm.m, pm.initial);
        out.result["n"] = pm.m.n;
        out.result["r"] = pm.m.r;
    } else if (cmd == "minimize") {
        ParsedMachine pm = load(o.files[0]);
        bool rooted = pm.initial != kNone;
        Rooted m = minimize(Rooted{pm.m, rooted ? pm.initial : 0}, o.depth);
        out = machine_outcome(m.m, rooted ? m.root : kNone);
    } else if (cmd == "product") {
        ParsedMachine a = load(o.files[0]), b = load(o.files[1]);
        if (a.initial != kNone || b.initial != kNone) {
            if (a.initial == kNone || b.initial == kNone)
                throw Error(Errc::InvalidInput, "both machines need an initial state, or neither");
            Rooted p = product(Rooted{a.m, a.initial}, Rooted{b.m, b.initial});
            if (o.minimizeProduct) p = minimize(p, o.depth);
            out = machine_outcome(p.m, p.root);
        } else {
            Transducer p = product(a.m, b.m);
            if (o.minimizeProduct) p = core(minimize_rooted(p, 0, o.depth).m);
            out = machine_outcome(p);
        }
    } else if (cmd == "invert") {
        ParsedMachine pm = load(o.files[0]);
        InverseOptions io{o.cap, o.depth};
        if (pm.initial != kNone) {
            Rooted inv = minimize(invert_initial(Rooted{pm.m, pm.initial}, io), o.depth);
            out = machine_outcome(inv.m, inv.root);
        } else {
            out = machine_outcome(canonical_core_form(invert_core(pm.m, 0, io)));
        }
    } else if (cmd == "sync-level") {
        ParsedMachine pm = load(o.files[0]);
        int k = minimal_sync_level(pm.m);
        out.text = "level=" + std::to_string(k) + "\n";
        out.result = {{"level", k}};
    } else if (cmd == "core") {
        out = machine_outcome(core(load(o.files[0]).m));
    } else if (cmd == "analyze") {
        ParsedMachine pm = load(o.files[0]);
        std::ostringstream os;
        json states = json::array();
        for (const auto& s : analyze(pm.m)) {
            os << "state " << s.name << " image=" << format_clopen(s.image) << " m=" << s.m
               << " injective=" << (s.injective ? "true" : "false")
               << " homeomorphism=" << (s.homeomorphism ? "true" : "false") << "\n";
            states.push_back({{"state", s.name},
                              {"image", clopen_json(s.image)},
                              {"m", s.m},
                              {"injective", s.injective},
                              {"homeomorphism", s.homeomorphism}});
        }
        out.result = {{"states", states}};
        if (pm.m.r == 0) {
            const char* ori = orientation_name(orientation(pm.m));
            os << "orientation=" << ori << "\n";
            out.result["orientation"] = ori;
        }
        out.text = os.str();
    } else if (cmd == "sig") {
        SignatureReport s = signature(load_core(o.files[0]));
        std::string sig = s.sigExact ? std::to_string(s.sig) : "overflow";
        out.text = "sig=" + sig + " rsig=" + std::to_string(s.rsig) + "\n";
        out.result = {{"sync_level", s.syncLevel}, {"sig", s.sigExact ? json(s.sig) : json()}, {"rsig", s.rsig}};
        if (!s.perWordM.empty()) out.result["per_word_m"] = s.perWordM;
    } else if (cmd == "member") {
        Transducer t = load_core(o.files[0]);
        Verdict a = member_Onr(t, o.r), b = member_TOnr(t, o.r);
        std::ostringstream os;
        os << "O_{" << t.n << "," << o.r << "}=" << (a ? "true" : "false");
        if (!a.value) os << " (" << a.reason << ")";
        os << "\nTO_{" << t.n << "," << o.r << "}=" << (b ? "true" : "false");
        if (!b.value) os << " (" << b.reason << ")";
        os << "\n";
        out.text = os.str();
        out.result = {{"r", o.r}, {"member_Onr", a.value}, {"member_TOnr", b.value}};
        if (!a.value) out.result["Onr_reason"] = a.reason;
        if (!b.value) out.result["TOnr_reason"] = b.reason;
    } else if (cmd == "orient") {
        const char* ori = orientation_name(orientation(load_core(o.files[0])));
        out.text = std::string(ori) + "\n";
        out.result = {{"orientation", ori}};
    } else if (cmd == "example") {
        out = machine_outcome(example_by_name(o.name));
    } else if (cmd == "realize") {
        Transducer t = load_core(o.files[0]);
        Rooted a = realize_in_TBnr(t, o.r, RealizeOptions{o.viableDepth, o.viableSize});
        out = machine_outcome(a.m, a.root);
    } else if (cmd == "mul") {
        GroupElement a(load_core(o.files[0])), b(load_core(o.files[1]));
        out = machine_outcome(group_product(a, b).machine());
    } else if (cmd == "order") {
        OrderResult r = order(GroupElement(load_core(o.files[0])), o.bound, o.orderCap);
        if (r.finite) {
            out.text = "Finite(" + std::to_string(r.order) + ")\n";
            out.result = {{"finite", true}, {"order", r.order}};
        } else {
            std::string seq;
            for (int c : r.stateCounts) seq += (seq.empty() ? "" : ",") + std::to_string(c);
            out.text = "ExceedsBound(states=" + seq + ")\n";
            out.result = {{"finite", false}, {"state_counts", r.stateCounts}};
        }
    } else if (cmd == "orbit") {
        GroupElement g(load_core(o.files[0]));
        std::vector<int> letters = parse_int_list(o.cls);
        Word w(letters.begin(), letters.end());
        check_word(w, g.n());
        RotationClass c = rotation_class_of(w);
        std::ostringstream os;
        json classes = json::array();
        for (int i = 0; i <= o.steps; ++i) {
            if (i) c = rotation_action(g, c);
            os << "[" << format_word(c.rep, g.n()) << "] length=" << c.rep.size() << "\n";
            classes.push_back({{"class", format_word(c.rep, g.n())}, {"length", c.rep.size()}});
        }
        out.text = os.str();
        out.result = {{"orbit", classes}};
    } else if (cmd == "partition") {
        std::vector<int> v = parse_int_list(o.sigs);
        auto p = signature_class_partition(o.n, std::set<int>(v.begin(), v.end()));
        std::ostringstream os;
        for (std::size_t i = 0; i < p.size(); ++i) {
            os << (i ? " " : "") << "{";
            for (std::size_t j = 0; j < p[i].size(); ++j) os << (j ? "," : "") << p[i][j];
            os << "}";
        }
        out.text = os.str() + "\n";
        out.result = {{"classes", p}};
    } else if (cmd == "verify") {
        auto results = run_suite(suite_items(o.suite), o.jobs);
        std::ostringstream os;
        json items = json::array();
        int failed = 0;
        for (const auto& r : results) {
            os << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.pass) os << ": " << r.detail;
            os << "\n";
            items.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"elapsed_ms", r.elapsedMs}});
            failed += r.pass ? 0 : 1;
        }
        os << (failed ? "FAILED " : "ALL PASSED ") << results.size() - failed << "/" << results.size() << "\n";
        out.text = os.str();
        out.result = {{"items", items}, {"failed", failed}};
        out.exit = failed ? 1 : 0;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transducer calculator for the groups O_{n,r} and TO_{n,r}"};
    app.require_subcommand(1);
    app.fallthrough();
    Opts o;
    app.add_flag("--json", o.json, "Emit a JSON report");
    app.add_option("--depth", o.depth, "Bound for common prefix computations")->check(CLI::PositiveNumber);

    auto file1 = [&](CLI::App* s) { s->add_option("file", o.files, "Machine file or - for stdin")->required()->expected(1); };
    auto file2 = [&](CLI::App* s) { s->add_option("files", o.files, "Two machine files")->required()->expected(2); };

    file1(app.add_subcommand("parse", "Parse and re-emit a machine"));
    file1(app.add_subcommand("minimize", "Minimal omega-equivalent machine"));
    auto* prod = app.add_subcommand("product", "Product machine, first input flows through the first file");
    file2(prod);
    prod->add_flag("--minimize", o.minimizeProduct, "Minimize the product");
    auto* inv = app.add_subcommand("invert", "Inverse machine");
    file1(inv);
    inv->add_option("--cap", o.cap, "State cap for the inverse closure")->check(CLI::PositiveNumber);
    file1(app.add_subcommand("sync-level", "Minimal synchronizing level"));
    file1(app.add_subcommand("core", "Core of a synchronizing machine"));
    file1(app.add_subcommand("analyze", "Per-state images, injectivity and orientation"));
    file1(app.add_subcommand("sig", "Signature and reduced signature"));
    auto* mem = app.add_subcommand("member", "Membership in O_{n,r} and TO_{n,r}");
    file1(mem);
    mem->add_option("--r", o.r, "Number of roots")->required();
    file1(app.add_subcommand("orient", "Orientation of a core element"));
    auto* ex = app.add_subcommand("example", "Write a built-in machine");
    ex->add_option("--name", o.name, "g4, T:<n>, U:<n>, A:<n>, B:<n>, piR:<n>, id:<n>")->required();
    auto* rea = app.add_subcommand("realize", "Initial transducer over C_{n,r} with the given core");
    file1(rea);
    rea->add_option("--r", o.r, "Number of roots")->required();
    rea->add_option("--viable-depth", o.viableDepth, "Prefix depth bound")->check(CLI::NonNegativeNumber);
    rea->add_option("--viable-size", o.viableSize, "Combination size bound (-1: 3(n-1)+1)");
    file2(app.add_subcommand("mul", "Group product: first element, then second"));
    auto* ord = app.add_subcommand("order", "Order of an element");
    file1(ord);
    ord->add_option("--bound", o.bound, "Largest power tried")->check(CLI::PositiveNumber);
    ord->add_option("--cap", o.orderCap, "State cap for the powers")->check(CLI::PositiveNumber);
    auto* orb = app.add_subcommand("orbit", "Orbit of a rotation class");
    file1(orb);
    orb->add_option("--class", o.cls, "Class representative, e.g. 1,2")->required();
    orb->add_option("--steps", o.steps, "Number of steps")->check(CLI::NonNegativeNumber);
    auto* par = app.add_subcommand("partition", "Signature class partition of {1..n-1}");
    par->add_option("--n", o.n, "Alphabet size")->required()->check(CLI::Range(2, 1 << 20));
    par->add_option("--sigs", o.sigs, "Comma-separated signatures")->required();
    auto* ver = app.add_subcommand("verify", "Run a reproducibility suite");
    ver->add_option("--suite", o.suite, "paper or F-relations")->check(CLI::IsMember({"paper", "F-relations"}));
    ver->add_option("--jobs", o.jobs, "Parallel items")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    std::string error;
    int rc = 0;
    try {
        out = run(cmd, o);
        rc = out.exit;
    } catch (const UsageError& e) {
        std::cerr << "tx " << cmd << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        error = e.what();
        rc = 1;
    } catch (const std::exception& e) {
        error = std::string("internal-error: ") + e.what();
        rc = 1;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (o.json) {
        json inputs = {{"files", o.files}};
        if (cmd == "member" || cmd == "realize") inputs["r"] = o.r;
        if (cmd == "example") inputs["name"] = o.name;
        if (cmd == "orbit") inputs["class"] = o.cls, inputs["steps"] = o.steps;
        if (cmd == "partition") inputs["n"] = o.n, inputs["sigs"] = o.sigs;
        if (cmd == "verify") inputs["suite"] = o.suite, inputs["jobs"] = o.jobs;
        json bounds = {{"gcp_depth", o.depth},
                       {"inverse_state_cap", o.cap},
                       {"image_iterations", "max(32, 4 * states)"},
                       {"order_bound", o.bound},
                       {"order_state_cap", o.orderCap},
                       {"viable_depth", o.viableDepth},
                       {"viable_size", o.viableSize}};
        json rep = {{"command", cmd}, {"inputs", inputs}};
        if (error.empty())
            rep["result"] = out.result;
        else
            rep["result"] = {{"error", error}};
        rep["bounds"] = bounds;
        rep["elapsed_ms"] = ms;
        std::cout << rep.dump(2) << "\n";
    } else if (error.empty()) {
        std::cout << out.text;
    }
    if (!error.empty()) std::cerr << "tx " << cmd << ": " << error << "\n";
    return rc;
}
