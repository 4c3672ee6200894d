#pragma once

#include <string>
#include <string_view>

#include "tx/transducer.hpp"
#include "tx/words.hpp"

namespace tx {

// Text format, one machine per file:
//   TRANSDUCER n=<int> r=<int> states=<id,...> initial=<id|->
//   <state> <letter> -> <state> : <word|e>
// Letters are decimals, dotted roots are written .k, '#' starts a comment line.
struct ParsedMachine {
    Transducer m;
    int initial = kNone;
};

ParsedMachine parse_transducer(std::string_view text);
std::string serialize(const Transducer& t, int initial = kNone);
std::string serialize(const Rooted& t);

Word parse_word(std::string_view s, int n, int r = 0);
std::string format_word(const Word& w, int n);
// u|v denotes u v^omega.
EvPeriodicWord parse_evp(std::string_view s, int n);
std::string format_evp(const EvPeriodicWord& x, int n);
std::string format_clopen(const ClopenSet& s);

}  // namespace tx
