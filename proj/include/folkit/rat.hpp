#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "folkit/errors.hpp"

namespace folkit {

using Int = mpz_class;
using Rat = mpq_class; // always canonicalized: gcd(num, den) = 1, den > 0

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Canonical literal form: "a" or "a/b".
inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

// Parses "a" or "a/b" with optional sign; returns nullopt on malformed input.
inline std::optional<Rat> rat_parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        return std::nullopt;
    }
    mpq_canonicalize(q);
    Rat r(q);
    mpq_clear(q);
    return r;
}

inline Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    Rat b = exp > 0 ? base : Rat(1) / base;
    unsigned long e = exp > 0 ? exp : -exp;
    Rat acc(1);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Integer k-th root when exact; nullopt otherwise.
inline std::optional<Int> int_kth_root(const Int& n, unsigned long k) {
    if (sgn(n) < 0 && k % 2 == 0) return std::nullopt;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

// Exact rational k-th root when it exists in Q.
inline std::optional<Rat> rat_kth_root(const Rat& q, unsigned long k) {
    auto n = int_kth_root(q.get_num(), k);
    auto d = int_kth_root(q.get_den(), k);
    if (!n || !d) return std::nullopt;
    Rat r(*n, *d);
    r.canonicalize();
    return r;
}

} // namespace folkit
