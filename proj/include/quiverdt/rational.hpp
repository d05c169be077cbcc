#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace quiverdt {

// Exact rational scalar. mpq_class keeps the canonical form we need:
// gcd(|num|, den) = 1 and den >= 1.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("division by zero");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" with optional sign.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(mpz_class(s));
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("division by zero");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::domain_error("malformed rational: " + s);
    }
}

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

inline bool is_integer(const Rat& r) {
    return r.get_den() == 1;
}

}  // namespace quiverdt
