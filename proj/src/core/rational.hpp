#pragma once

#include <gmpxx.h>
#include <string>

#include "core/error.hpp"

namespace jps {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator, 0 stored as 0/1), which is exactly the invariant
// the rest of the library relies on.
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw invalid_arg("rational with zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

// Accepts "n" or "n/m" with optional sign; anything else is a parse error.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal", 0);
    std::size_t pos = 0;
    auto digits = [&](bool sign_ok) {
        if (sign_ok && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("malformed rational literal '" + s + "'", pos);
    };
    digits(true);
    if (pos < s.size()) {
        if (s[pos] != '/') throw parse_error("malformed rational literal '" + s + "'", pos);
        ++pos;
        digits(true);
        if (pos != s.size()) throw parse_error("malformed rational literal '" + s + "'", pos);
    }
    Rat q;
    if (q.set_str(s, 10) != 0) throw parse_error("malformed rational literal '" + s + "'", 0);
    if (q.get_den() == 0) throw parse_error("rational literal with zero denominator", 0);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

} // namespace jps
