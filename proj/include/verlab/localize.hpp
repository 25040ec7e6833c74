#pragma once

#include "verlab/laurent.hpp"

namespace verlab {

// Local expansion of the contour integrands at the branch points z = ±v.
//
// Substituting z = sign * v * e^{x/2} turns every factor of the integrands
// into v^{shift} * x^{val} * unit over the series ring in (x, s, v), where
// the internal grading variable s is the exterior-power variable divided by
// t = v^2. With that rescaling x is the only variable needing a principal
// part, and all v-exponents stay even.
struct LocalSeries {
    int v_shift = 0; // exact monomial prefactor v^{v_shift}, any sign
    LaurentX lx;

    LocalSeries(int shift, LaurentX l) : v_shift(shift), lx(std::move(l)) {}

    friend LocalSeries operator*(const LocalSeries& a, const LocalSeries& b) {
        return {a.v_shift + b.v_shift, a.lx * b.lx};
    }
    friend LocalSeries operator*(const Rat& c, const LocalSeries& a) {
        return {a.v_shift, c * a.lx};
    }

    LocalSeries pow_int(long n) const { return {v_shift * static_cast<int>(n), lx.pow_int(n)}; }

    // Addition aligns the monomial prefactors; only valid when the body can
    // absorb the shift without touching the reported exponent window.
    friend LocalSeries operator+(const LocalSeries& a, const LocalSeries& b) {
        int m = std::min(a.v_shift, b.v_shift);
        MSeries ba = a.lx.body().shift_up("v", a.v_shift - m);
        MSeries bb = b.lx.body().shift_up("v", b.v_shift - m);
        LaurentX la(a.lx.xvar(), std::move(ba), a.lx.pole());
        LaurentX lb(b.lx.xvar(), std::move(bb), b.lx.pole());
        return {m, la + lb};
    }
};

// Named factors of the integrands, in the cleared form whose localization is
// monomial * x-power * unit.
enum class Atom {
    ZPow,            // z^m, m even
    OneMinusVVoverZZ, // 1 - v^2/z^2  -> x * unit
    OneMinusVVZZ,    // 1 - v^2 z^2
    OnePlusS_ZV,     // 1 + s/(z v)
    OnePlusSVZ,      // 1 + s v z
    OnePlusSVoverZ,  // 1 + s v / z
    OnePlusSZoverV,  // 1 + s z / v
};

// Registry for localized computation: variables (x, s, v).
RegistryPtr local_registry(int x_order, int s_order, int v_order);

// e^{k x / 2} as a series
MSeries exp_half_x(const RegistryPtr& reg, int k);

LocalSeries localize_atom(Atom a, int m, int sign, const RegistryPtr& reg);

// f, log-derivative and h in local form. sign selects the branch z = ±v e^{x/2}.
LocalSeries localize_f(int sign, const RegistryPtr& reg);
LocalSeries localize_logderiv(int sign, const RegistryPtr& reg);
LocalSeries localize_h(int sign, const RegistryPtr& reg);

// Full integrand of the graded index in its displayed product form.
LocalSeries localize_index_integrand(int g, int i, int sign, const RegistryPtr& reg);

// f composed with z -> 1/z, localized (for the inversion checks).
LocalSeries localize_f_inverted_z(int sign, const RegistryPtr& reg);

} // namespace verlab
