#pragma once

#include <complex>
#include <optional>

#include "verlab/poly.hpp"

namespace verlab {

// Exact rational function of (z, s, v) as a numerator/denominator pair of
// integer-coefficient polynomials. The named expressions are constructed in
// factored-cancelled form, so the pairs share no common polynomial factor.
struct RationalFn3 {
    Poly3 num, den;

    RationalFn3() : num(Poly3::one()), den(Poly3::one()) {}
    RationalFn3(Poly3 n, Poly3 d) : num(std::move(n)), den(std::move(d)) {}

    friend RationalFn3 operator*(const RationalFn3& a, const RationalFn3& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend RationalFn3 operator+(const RationalFn3& a, const RationalFn3& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RationalFn3 operator-(const RationalFn3& a, const RationalFn3& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    RationalFn3 inverse() const { return {den, num}; }

    // z -> 1/z, cleared by monomials of z.
    RationalFn3 invert_z() const;

    template <typename T>
    std::optional<T> eval(const std::array<T, 3>& at) const {
        T d = den.eval(at);
        if constexpr (std::is_same_v<T, Rat>) {
            if (sgn(d) == 0) return std::nullopt;
        } else {
            if (std::abs(d) == 0) return std::nullopt;
        }
        return num.eval(at) / d;
    }

    // Cross-multiplied polynomial equality.
    friend bool identical(const RationalFn3& a, const RationalFn3& b) {
        return a.num * b.den == b.num * a.den;
    }
};

// z-variable index constants for Poly3 keys
inline constexpr int VZ = 0, VS = 1, VV = 2;
inline constexpr int WZ2 = 0, WS2 = 1, WZS = 2, WV = 3; // Poly4 keys

// The Bethe-equation rational function and its companions. f is the k = 2
// Bethe left-hand side; logderiv is z d/dz log f; h is the combination whose
// (g-1)-st power drives every index integrand.
RationalFn3 f_expr();
RationalFn3 logderiv_expr();            // z f'/f as a single rational function
RationalFn3 h_expr();
RationalFn3 w2_expr();                  // the functional-equation substitution for z^2
RationalFn3 wf_half_expr();             // compatible-branch product w * f^{1/2}
RationalFn3 bethe_lhs_expr(int k);      // general-level Bethe left-hand side
RationalFn3 hessian_expr(int k);        // Bethe Hessian determinant (abelian case)

// Partition into even/odd joint parity under (z,s) -> (-z,-s); a rational
// function of even parity can be rewritten in (Z, S, W) = (z^2, s^2, z s).
bool even_zs_parity(const Poly3& p);
bool odd_zs_parity(const Poly3& p);
Poly4 rewrite_zsw(const Poly3& p); // requires even parity

struct RationalFn4 {
    Poly4 num, den;
};

// f and h rewritten in the (Z, S, W, v) coordinates.
RationalFn4 f_in_zsw();
RationalFn4 h_in_zsw();

} // namespace verlab
