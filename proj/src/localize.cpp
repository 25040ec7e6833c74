#include "verlab/localize.hpp"

namespace verlab {

RegistryPtr local_registry(int x_order, int s_order, int v_order) {
    return make_registry({{"x", x_order}, {"s", s_order}, {"v", v_order}});
}

MSeries exp_half_x(const RegistryPtr& reg, int k) {
    return (MSeries::monomial(reg, "x", 1, rat(k, 2))).exp();
}

namespace {

MSeries svar(const RegistryPtr& reg, int vpow, const Rat& c = rat(1)) {
    return MSeries::monomial(reg, "s", 1, c) * MSeries::monomial(reg, "v", vpow);
}

} // namespace

LocalSeries localize_atom(Atom a, int m, int sign, const RegistryPtr& reg) {
    const Rat sg = rat(sign);
    MSeries one = MSeries::one(reg);
    switch (a) {
        case Atom::ZPow: {
            // z^m = (sign v)^m e^{m x / 2}; only even m occurs in the integrands
            if (m % 2 != 0) throw std::invalid_argument("localize: odd z power");
            return {m, LaurentX("x", exp_half_x(reg, m), 0)};
        }
        case Atom::OneMinusVVoverZZ: {
            // 1 - e^{-x} = x * unit
            MSeries unit = MSeries::zero(reg);
            Rat fact = rat(1);
            int xo = reg->order(reg->index("x"));
            for (int k = 0; k <= xo; ++k) {
                fact /= rat(k + 1);
                unit = unit + MSeries::monomial(reg, "x", k, (k % 2 == 0) ? fact : Rat(-fact));
            }
            return {0, LaurentX("x", unit.shift_up("x", 1), 0)};
        }
        case Atom::OneMinusVVZZ:
            return {0, LaurentX("x", one - MSeries::monomial(reg, "v", 4) * exp_half_x(reg, 2), 0)};
        case Atom::OnePlusS_ZV:
            return {0, LaurentX("x", one + sg * svar(reg, 0) * exp_half_x(reg, -1), 0)};
        case Atom::OnePlusSVZ:
            return {0, LaurentX("x", one + sg * svar(reg, 4) * exp_half_x(reg, 1), 0)};
        case Atom::OnePlusSVoverZ:
            return {0, LaurentX("x", one + sg * svar(reg, 2) * exp_half_x(reg, -1), 0)};
        case Atom::OnePlusSZoverV:
            return {0, LaurentX("x", one + sg * svar(reg, 2) * exp_half_x(reg, 1), 0)};
    }
    throw std::logic_error("localize_atom: unreachable");
}

LocalSeries localize_f(int sign, const RegistryPtr& reg) {
    LocalSeries r = localize_atom(Atom::ZPow, 4, sign, reg);
    r = r * localize_atom(Atom::OneMinusVVoverZZ, 0, sign, reg).pow_int(2);
    r = r * localize_atom(Atom::OnePlusS_ZV, 0, sign, reg);
    r = r * localize_atom(Atom::OnePlusSVZ, 0, sign, reg);
    r = r * localize_atom(Atom::OneMinusVVZZ, 0, sign, reg).pow_int(-2);
    r = r * localize_atom(Atom::OnePlusSVoverZ, 0, sign, reg).pow_int(-1);
    r = r * localize_atom(Atom::OnePlusSZoverV, 0, sign, reg).pow_int(-1);
    return r;
}

LocalSeries localize_f_inverted_z(int sign, const RegistryPtr& reg) {
    // f(1/z): swap each factor with its z -> 1/z partner
    LocalSeries r = localize_atom(Atom::ZPow, -4, sign, reg);
    r = r * localize_atom(Atom::OneMinusVVZZ, 0, sign, reg).pow_int(2);
    r = r * localize_atom(Atom::OnePlusSZoverV, 0, sign, reg);
    r = r * localize_atom(Atom::OnePlusSVoverZ, 0, sign, reg);
    r = r * localize_atom(Atom::OneMinusVVoverZZ, 0, sign, reg).pow_int(-2);
    r = r * localize_atom(Atom::OnePlusSVZ, 0, sign, reg).pow_int(-1);
    r = r * localize_atom(Atom::OnePlusS_ZV, 0, sign, reg).pow_int(-1);
    return r;
}

namespace {

// X/(1+X) for a localized unit 1+X
LaurentX fraction_of(const LocalSeries& one_plus) {
    MSeries x = one_plus.lx.body() - MSeries::one(one_plus.lx.body().registry());
    LaurentX num("x", std::move(x), 0);
    return num * one_plus.lx.invert_unit_times_power();
}

} // namespace

LocalSeries localize_logderiv(int sign, const RegistryPtr& reg) {
    MSeries one = MSeries::one(reg);
    LaurentX acc("x", rat(4) * one, 0);
    acc = acc + fraction_of(localize_atom(Atom::OnePlusSVoverZ, 0, sign, reg));
    acc = acc + fraction_of(localize_atom(Atom::OnePlusSVZ, 0, sign, reg));
    acc = acc - fraction_of(localize_atom(Atom::OnePlusS_ZV, 0, sign, reg));
    acc = acc - fraction_of(localize_atom(Atom::OnePlusSZoverV, 0, sign, reg));
    // 4 v^2 z^2/(1 - v^2 z^2) = 4 v^4 e^x / (1 - v^4 e^x)
    LocalSeries d1 = localize_atom(Atom::OneMinusVVZZ, 0, sign, reg);
    LaurentX t1("x", rat(4) * (MSeries::monomial(reg, "v", 4) * exp_half_x(reg, 2)), 0);
    acc = acc + t1 * d1.lx.invert_unit_times_power();
    // 4 (v^2/z^2)/(1 - v^2/z^2) = 4 e^{-x} / (x * unit)
    LocalSeries d2 = localize_atom(Atom::OneMinusVVoverZZ, 0, sign, reg);
    LaurentX t2("x", rat(4) * exp_half_x(reg, -2), 0);
    acc = acc + t2 * d2.lx.invert_unit_times_power();
    return {0, acc};
}

LocalSeries localize_h(int sign, const RegistryPtr& reg) {
    LocalSeries r = localize_f(sign, reg);
    r = r * localize_logderiv(sign, reg);
    r = r * localize_atom(Atom::OnePlusS_ZV, 0, sign, reg);
    r = r * localize_atom(Atom::OnePlusSVZ, 0, sign, reg);
    r = r * localize_atom(Atom::OnePlusSVoverZ, 0, sign, reg);
    r = r * localize_atom(Atom::OnePlusSZoverV, 0, sign, reg);
    r = r * localize_atom(Atom::OneMinusVVoverZZ, 0, sign, reg).pow_int(-1);
    r = r * localize_atom(Atom::OneMinusVVZZ, 0, sign, reg).pow_int(-1);
    return r;
}

LocalSeries localize_index_integrand(int g, int i, int sign, const RegistryPtr& reg) {
    const int ibar = g - 1 - i;
    LocalSeries r = localize_atom(Atom::ZPow, 4 * ibar, sign, reg);
    r = r * localize_atom(Atom::OnePlusS_ZV, 0, sign, reg).pow_int(g - 1 + ibar);
    r = r * localize_atom(Atom::OnePlusSVZ, 0, sign, reg).pow_int(g - 1 + ibar);
    r = r * localize_atom(Atom::OnePlusSVoverZ, 0, sign, reg).pow_int(i);
    r = r * localize_atom(Atom::OnePlusSZoverV, 0, sign, reg).pow_int(i);
    r = r * localize_atom(Atom::OneMinusVVZZ, 0, sign, reg).pow_int(-(2 * ibar + g - 1));
    r = r * localize_atom(Atom::OneMinusVVoverZZ, 0, sign, reg).pow_int(-(2 * i - g + 1));
    r = r * localize_logderiv(sign, reg).pow_int(g);
    return r;
}

} // namespace verlab
