#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qtsym/error.hpp"

namespace qtsym {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::string to_string(const Rat& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

/// Parses "a/b" or "a" into an exact rational.
inline Rat parse_rational(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw DomainError("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace qtsym
