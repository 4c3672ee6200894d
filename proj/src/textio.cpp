#include "tx/textio.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "tx/error.hpp"

namespace tx {

namespace {

struct Token {
    std::string_view text;
    std::size_t col;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t s = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > s) toks.push_back({line.substr(s, i - s), s + 1});
    }
    return toks;
}

[[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) {
    throw Error(Errc::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

bool parse_int(std::string_view s, int& v) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && p == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t p = s.find(sep, start);
        parts.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return parts;
}

// Parses one letter; returns false on malformed input. Dotted roots map to n+k.
bool parse_letter(std::string_view s, int n, int r, bool allowDotted, Letter& out) {
    int v = 0;
    if (!s.empty() && s[0] == '.') {
        if (!allowDotted || !parse_int(s.substr(1), v) || v < 0 || v >= r) return false;
        out = n + v;
        return true;
    }
    if (!parse_int(s, v) || v < 0 || v >= n) return false;
    out = v;
    return true;
}

bool valid_name(std::string_view s) {
    if (s.empty() || s == "-" || s[0] == '#') return false;
    for (char c : s)
        if (c == ',' || c == ' ' || c == '\t' || c == ':') return false;
    return true;
}

}  // namespace

Word parse_word(std::string_view s, int n, int r) {
    if (s == "e") return {};
    if (s.empty()) throw Error(Errc::Parse, "empty word token (use e for the empty word)");
    Word w;
    auto parts = split(s, ',');
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Letter a;
        if (!parse_letter(parts[i], n, r, i == 0, a))
            throw Error(Errc::Parse, "bad letter '" + std::string(parts[i]) + "' in word '" + std::string(s) + "'");
        w.push_back(a);
    }
    return w;
}

std::string format_word(const Word& w, int n) {
    if (w.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += w[i] >= n ? "." + std::to_string(w[i] - n) : std::to_string(w[i]);
    }
    return s;
}

EvPeriodicWord parse_evp(std::string_view s, int n) {
    auto bar = s.find('|');
    if (bar == std::string_view::npos) throw Error(Errc::Parse, "eventually periodic word needs u|v");
    Word u = parse_word(s.substr(0, bar), n);
    Word v = parse_word(s.substr(bar + 1), n);
    if (v.empty()) throw Error(Errc::Parse, "period must be nonempty");
    return EvPeriodicWord::make(std::move(u), std::move(v));
}

std::string format_evp(const EvPeriodicWord& x, int n) {
    return format_word(x.pre, n) + "|" + format_word(x.period, n);
}

std::string format_clopen(const ClopenSet& s) {
    std::string res = "{";
    for (std::size_t i = 0; i < s.cones().size(); ++i) {
        if (i) res += " ";
        res += format_word(s.cones()[i], s.n());
    }
    return res + "}";
}

ParsedMachine parse_transducer(std::string_view text) {
    ParsedMachine pm;
    bool header = false;
    std::map<std::string, int> ids;
    std::vector<std::vector<std::size_t>> seenAt;
    std::size_t lineNo = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++lineNo;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0].text[0] == '#') continue;
        if (!header) {
            if (toks.size() != 5 || toks[0].text != "TRANSDUCER")
                fail(lineNo, toks[0].col, "expected 'TRANSDUCER n=<int> r=<int> states=<ids> initial=<id|->'");
            const char* keys[] = {"n=", "r=", "states=", "initial="};
            std::string_view vals[4];
            for (int k = 0; k < 4; ++k) {
                std::string_view t = toks[k + 1].text;
                std::string_view key = keys[k];
                if (t.substr(0, key.size()) != key) fail(lineNo, toks[k + 1].col, "expected '" + std::string(key) + "'");
                vals[k] = t.substr(key.size());
            }
            int n = 0, r = 0;
            if (!parse_int(vals[0], n) || n < 2) fail(lineNo, toks[1].col, "n must be an integer >= 2");
            if (!parse_int(vals[1], r) || r < 0) fail(lineNo, toks[2].col, "r must be an integer >= 0");
            pm.m = Transducer(n, r);
            for (auto nm : split(vals[2], ',')) {
                if (!valid_name(nm)) fail(lineNo, toks[3].col, "bad state id '" + std::string(nm) + "'");
                if (ids.count(std::string(nm))) fail(lineNo, toks[3].col, "duplicate state id '" + std::string(nm) + "'");
                ids[std::string(nm)] = pm.m.add_state(std::string(nm));
            }
            seenAt.assign(static_cast<std::size_t>(pm.m.size()), std::vector<std::size_t>(static_cast<std::size_t>(pm.m.letters()), 0));
            if (vals[3] != "-") {
                auto it = ids.find(std::string(vals[3]));
                if (it == ids.end()) fail(lineNo, toks[4].col, "unknown initial state '" + std::string(vals[3]) + "'");
                pm.initial = it->second;
            } else if (r > 0) {
                fail(lineNo, toks[4].col, "machines with dotted roots need an initial state");
            }
            header = true;
            continue;
        }
        if (toks.size() != 6 || toks[2].text != "->" || toks[4].text != ":")
            fail(lineNo, toks[0].col, "expected '<state> <letter> -> <state> : <word|e>'");
        auto from = ids.find(std::string(toks[0].text));
        if (from == ids.end()) fail(lineNo, toks[0].col, "unknown state '" + std::string(toks[0].text) + "'");
        Letter a;
        if (!parse_letter(toks[1].text, pm.m.n, pm.m.r, true, a))
            fail(lineNo, toks[1].col, "bad letter '" + std::string(toks[1].text) + "'");
        if (pm.m.r > 0 && (from->second == pm.initial) != (a >= pm.m.n))
            fail(lineNo, toks[1].col,
                 from->second == pm.initial ? "the initial state reads only dotted roots" : "only the initial state reads dotted roots");
        auto to = ids.find(std::string(toks[3].text));
        if (to == ids.end()) fail(lineNo, toks[3].col, "unknown state '" + std::string(toks[3].text) + "'");
        Word w;
        try {
            w = parse_word(toks[5].text, pm.m.n, pm.m.r);
        } catch (const Error& e) {
            fail(lineNo, toks[5].col, e.what());
        }
        if (seenAt[from->second][a])
            fail(lineNo, toks[0].col, "duplicate transition (first given on line " +
                                          std::to_string(seenAt[from->second][a]) + ")");
        seenAt[from->second][a] = lineNo;
        pm.m.set(from->second, a, to->second, std::move(w));
    }
    if (!header) fail(lineNo, 1, "missing TRANSDUCER header");
    const Transducer& m = pm.m;
    int root = m.r > 0 ? pm.initial : kNone;
    for (int q = 0; q < m.size(); ++q)
        for (Letter a = 0; a < m.letters(); ++a) {
            bool expect = m.r == 0 || (q == root) == (a >= m.n);
            if (expect && m.next[q][a] == kNone)
                fail(lineNo, 1, "missing transition for state " + m.names[q] + " letter " + format_word({a}, m.n));
        }
    try {
        validate(pm.m);
    } catch (const Error& e) {
        fail(lineNo, 1, e.what());
    }
    return pm;
}

std::string serialize(const Transducer& t, int initial) {
    std::ostringstream os;
    os << "TRANSDUCER n=" << t.n << " r=" << t.r << " states=";
    for (int q = 0; q < t.size(); ++q) os << (q ? "," : "") << t.names[q];
    os << " initial=" << (initial == kNone ? std::string("-") : t.names[initial]) << "\n";
    for (int q = 0; q < t.size(); ++q)
        for (Letter a = 0; a < t.letters(); ++a)
            if (t.next[q][a] != kNone)
                os << t.names[q] << " " << format_word({a}, t.n) << " -> " << t.names[t.next[q][a]] << " : "
                   << format_word(t.out[q][a], t.n) << "\n";
    return os.str();
}

std::string serialize(const Rooted& t) { return serialize(t.m, t.root); }

}  // namespace tx
