#pragma once

#include <algorithm>
#include <limits>

#include "verlab/mseries.hpp"

namespace verlab {

// Finite principal part plus a power-series tail in a distinguished variable
// x: the value is x^{-pole} * body. `known` is the largest x-exponent of the
// represented series whose coefficient is certified exact; it degrades when a
// body is shifted down past its truncation bound (inversion of x^m * unit).
class LaurentX {
public:
    LaurentX(const std::string& xvar, MSeries body, int pole = 0)
        : x_(xvar), body_(std::move(body)), pole_(pole) {
        if (pole_ < 0) throw std::invalid_argument("pole order must be nonnegative");
        known_ = trunc() - pole_;
    }

    const std::string& xvar() const { return x_; }
    const MSeries& body() const { return body_; }
    int pole() const { return pole_; }
    int known() const { return known_; }
    int trunc() const { return body_.registry()->order(body_.registry()->index(x_)); }
    bool is_zero() const { return body_.is_zero(); }

    // x-valuation of the represented series; throws when the body is
    // identically zero so no valuation is certifiable.
    int valuation() const {
        int m = body_.valuation(x_);
        if (m < 0) throw IdenticallyZeroWithinTruncation("valuation: zero within truncation");
        return m - pole_;
    }

    friend LaurentX operator*(const LaurentX& a, const LaurentX& b) {
        a.check(b);
        LaurentX r(a.x_, a.body_ * b.body_, a.pole_ + b.pole_);
        r.known_ = std::min(a.known_ - b.pole_, b.known_ - a.pole_);
        return r;
    }

    friend LaurentX operator+(const LaurentX& a, const LaurentX& b) {
        a.check(b);
        int p = std::max(a.pole_, b.pole_);
        MSeries body = a.body_.shift_up(a.x_, p - a.pole_) + b.body_.shift_up(b.x_, p - b.pole_);
        LaurentX r(a.x_, std::move(body), p);
        r.known_ = std::min(a.known_, b.known_);
        return r;
    }

    friend LaurentX operator-(const LaurentX& a, const LaurentX& b) { return a + (-b); }

    LaurentX operator-() const {
        LaurentX r(x_, -body_, pole_);
        r.known_ = known_;
        return r;
    }

    friend LaurentX operator*(const Rat& c, const LaurentX& a) {
        LaurentX r(a.x_, c * a.body_, a.pole_);
        r.known_ = a.known_;
        return r;
    }

    LaurentX scaled(const MSeries& u) const {
        LaurentX r(x_, body_ * u, pole_);
        r.known_ = known_;
        return r;
    }

    // Inverse of an operand that factors as x^m * unit; m is detected by
    // scanning for the lowest nonvanishing x-coefficient.
    LaurentX invert_unit_times_power() const {
        int m = body_.valuation(x_);
        if (m < 0) throw IdenticallyZeroWithinTruncation("invert: zero within truncation");
        MSeries unit = body_.shift_down(x_, m);
        if (sgn(unit.constant_term()) == 0)
            throw NotUnitOnePlus("invert: lowest x-coefficient is not a unit");
        MSeries iu = unit.invert();
        int val = m - pole_; // valuation of the represented series
        LaurentX r(x_, std::move(iu), std::max(0, val));
        if (val < 0) r.body_ = r.body_.shift_up(x_, -val);
        r.known_ = known_ - 2 * val;
        return r;
    }

    LaurentX pow_int(long n) const {
        if (n < 0) return invert_unit_times_power().pow_int(-n);
        LaurentX acc(x_, MSeries::one(body_.registry()), 0);
        LaurentX b = *this;
        unsigned long m = static_cast<unsigned long>(n);
        while (m) {
            if (m & 1) acc = acc * b;
            b = b * b;
            m >>= 1;
        }
        return acc;
    }

    // Exact coefficient of x^{-1}, as a series in the remaining variables.
    MSeries residue() const {
        if (known_ < -1)
            throw InsufficientTruncation("residue: x truncation too small for certified result");
        if (pole_ == 0) return MSeries::zero(body_.registry());
        return body_.coeff_of(x_, pole_ - 1);
    }

    // Exact coefficient of x^k.
    MSeries coeff(int k) const {
        if (known_ < k) throw InsufficientTruncation("coeff: beyond certified order");
        if (k + pole_ < 0) return MSeries::zero(body_.registry());
        return body_.coeff_of(x_, k + pole_);
    }

    // Minimal pole order: drops leading zero coefficients of the body.
    LaurentX normalized() const {
        if (pole_ == 0 || body_.is_zero()) return *this;
        int m = std::min(body_.valuation(x_), pole_);
        if (m == 0) return *this;
        LaurentX r(x_, body_.shift_down(x_, m), pole_ - m);
        r.known_ = known_;
        return r;
    }

    LaurentX derivative_x() const {
        // d/dx (x^{-P} B) = x^{-(P+1)} (x B' - P B)
        MSeries xb = body_.derivative(x_).shift_up(x_, 1);
        MSeries nb = xb - Rat(rat(pole_)) * body_;
        LaurentX r(x_, std::move(nb), pole_ + 1);
        r.known_ = known_ - 1;
        return r;
    }

    friend bool operator==(const LaurentX& a, const LaurentX& b) {
        a.check(b);
        int p = std::max(a.pole_, b.pole_);
        return a.body_.shift_up(a.x_, p - a.pole_) == b.body_.shift_up(b.x_, p - b.pole_);
    }

private:
    void check(const LaurentX& o) const {
        if (x_ != o.x_) throw RegistryMismatch("laurent variables differ");
        if (!(*body_.registry() == *o.body_.registry())) throw RegistryMismatch("registries differ");
    }

    std::string x_;
    MSeries body_;
    int pole_;
    int known_;
};

} // namespace verlab
