#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

#include "verlab/errors.hpp"

namespace verlab {

// Exact rational arithmetic. mpq_class keeps values canonical (lowest terms,
// positive denominator) through all arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// Renders "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
    if (rat_is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p", "p/q", and decimal literals like "-0.25" or "1e-3".
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty");
    if (s.find_first_of(".eE") == std::string::npos) {
        Rat r;
        if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad literal '" + s + "'");
        r.canonicalize();
        return r;
    }
    // decimal: sign, digits, optional fraction, optional exponent
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
    std::string digits;
    long frac_digits = 0, expo = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos++];
            ++frac_digits;
        }
    }
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        expo = std::strtol(s.c_str() + pos + 1, nullptr, 10);
        pos = s.size();
    } else if (pos != s.size()) {
        throw std::invalid_argument("rat_from_string: bad literal '" + s + "'");
    }
    if (digits.empty()) throw std::invalid_argument("rat_from_string: bad literal '" + s + "'");
    Int mant(digits, 10);
    Rat r(mant);
    long e10 = expo - frac_digits;
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(e10 < 0 ? -e10 : e10));
    if (e10 >= 0) r *= Rat(p10);
    else r /= Rat(p10);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return rat(1);
    Rat b = e > 0 ? base : Rat(1 / base);
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat acc = rat(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Principal q-th root when it exists as an exact rational, false otherwise.
inline bool rat_exact_root(const Rat& a, unsigned long q, Rat& out) {
    if (q == 0) return false;
    if (q == 1) {
        out = a;
        return true;
    }
    if (sgn(a) < 0 && q % 2 == 0) return false;
    Int num = a.get_num(), den = a.get_den();
    Int rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), q);
    int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), q);
    if (!exact_n || !exact_d) return false;
    out = Rat(rn, rd);
    out.canonicalize();
    return true;
}

// Generalized binomial coefficient C(alpha, k) for rational alpha.
inline Rat rat_binom(const Rat& alpha, unsigned long k) {
    Rat acc = rat(1);
    for (unsigned long i = 0; i < k; ++i) {
        acc *= (alpha - Rat(static_cast<long>(i)));
        acc /= Rat(static_cast<long>(i + 1));
    }
    return acc;
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

} // namespace verlab
