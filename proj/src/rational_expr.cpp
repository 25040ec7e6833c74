#include "verlab/rational_expr.hpp"

namespace verlab {

namespace {

Poly3 Z(int k = 1) { return Poly3::var(VZ, k); }
Poly3 S(int k = 1) { return Poly3::var(VS, k); }
Poly3 V(int k = 1) { return Poly3::var(VV, k); }
Poly3 C(long n) { return Poly3::constant(rat(n)); }

// the recurring factors
Poly3 zz_minus_vv() { return Z(2) - V(2); }          // z^2 - v^2
Poly3 one_minus_vvzz() { return C(1) - V(2) * Z(2); } // 1 - v^2 z^2
Poly3 zv_plus_s() { return Z() * V() + S(); }        // zv + s     (z v (1 + s/(zv)))
Poly3 one_plus_svz() { return C(1) + S() * V() * Z(); }
Poly3 z_plus_sv() { return Z() + S() * V(); }        // z (1 + sv/z)
Poly3 v_plus_sz() { return V() + S() * Z();          /* v (1 + sz/v) */ }

} // namespace

RationalFn3 RationalFn3::invert_z() const {
    int dn = num.degree(VZ), dd = den.degree(VZ);
    Poly3 n = num.reverse_in(VZ), d = den.reverse_in(VZ);
    if (dn > dd) d = d * Z(dn - dd);
    else if (dd > dn) n = n * Z(dd - dn);
    return {n, d};
}

RationalFn3 f_expr() {
    // z^4 (1 - v^2/z^2)^2 (1 + s/(zv)) (1 + svz)
    // ------------------------------------------ , cleared of monomials
    // (1 - v^2 z^2)^2 (1 + sv/z) (1 + sz/v)
    Poly3 num = zz_minus_vv().pow(2) * zv_plus_s() * one_plus_svz();
    Poly3 den = one_minus_vvzz().pow(2) * z_plus_sv() * v_plus_sz();
    return {num, den};
}

RationalFn3 logderiv_expr() {
    // 4 + (sv/z)/(1+sv/z) + svz/(1+svz) + 4v^2z^2/(1-v^2z^2)
    //   + (4v^2/z^2)/(1-v^2/z^2) - (s/(zv))/(1+s/(zv)) - (sz/v)/(1+sz/v)
    RationalFn3 acc{C(4), C(1)};
    acc = acc + RationalFn3{S() * V(), z_plus_sv()};
    acc = acc + RationalFn3{S() * V() * Z(), one_plus_svz()};
    acc = acc + RationalFn3{C(4) * V(2) * Z(2), one_minus_vvzz()};
    acc = acc + RationalFn3{C(4) * V(2), zz_minus_vv()};
    acc = acc - RationalFn3{S(), zv_plus_s()};
    acc = acc - RationalFn3{S() * Z(), v_plus_sz()};
    return acc;
}

RationalFn3 h_expr() {
    // h = z f' * (1+s/(zv))(1+svz)(1+sv/z)(1+sz/v) / ((1-v^2/z^2)(1-v^2z^2))
    //   = f * logderiv * (zv+s)(1+svz)(z+sv)(v+sz) / (v^2 (z^2-v^2)(1-v^2z^2))
    RationalFn3 f = f_expr();
    RationalFn3 L = logderiv_expr();
    RationalFn3 extra{zv_plus_s() * one_plus_svz() * z_plus_sv() * v_plus_sz(),
                      V(2) * zz_minus_vv() * one_minus_vvzz()};
    return f * L * extra;
}

RationalFn3 w2_expr() {
    return {(S() * Z() + V()) * (V() * Z() + S()), (S() * Z() * V() + C(1)) * (S() * V() + Z())};
}

RationalFn3 wf_half_expr() {
    // z^2 (1 - v^2/z^2)(vz+s) / ((1 - v^2 z^2)(sv+z)) = (z^2-v^2)(vz+s) / ((1-v^2z^2)(sv+z))
    return {zz_minus_vv() * (V() * Z() + S()), one_minus_vvzz() * (S() * V() + Z())};
}

RationalFn3 bethe_lhs_expr(int k) {
    // z^{2k} ((1 - v^2/z^2)/(1 - v^2 z^2))^2 ((1 + s/(vz))/(1 + sz/v)) ((1+svz)/(1+sv/z))
    Poly3 num = Z(2 * k - 4) * zz_minus_vv().pow(2) * zv_plus_s() * one_plus_svz();
    Poly3 den = one_minus_vvzz().pow(2) * v_plus_sz() * z_plus_sv();
    if (2 * k - 4 < 0) {
        num = zz_minus_vv().pow(2) * zv_plus_s() * one_plus_svz();
        den = den * Z(4 - 2 * k);
    }
    return {num, den};
}

RationalFn3 hessian_expr(int k) {
    RationalFn3 acc{C(2 * k), C(1)};
    acc = acc + RationalFn3{C(4) * V(2) * Z(2), one_minus_vvzz()};
    acc = acc + RationalFn3{C(4) * V(2), zz_minus_vv()};
    acc = acc - RationalFn3{S() * Z(), v_plus_sz()};       // -(s z / v)/(1 + s z / v)
    acc = acc - RationalFn3{S(), zv_plus_s()};             // -(s/(vz))/(1 + s/(vz))
    acc = acc + RationalFn3{S() * V() * Z(), one_plus_svz()};
    acc = acc + RationalFn3{S() * V(), z_plus_sv()};       // (s v / z)/(1 + s v / z)
    return acc;
}

bool even_zs_parity(const Poly3& p) {
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if ((e[VZ] + e[VS]) % 2 != 0) return false;
    }
    return true;
}

bool odd_zs_parity(const Poly3& p) {
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if ((e[VZ] + e[VS]) % 2 != 1) return false;
    }
    return true;
}

Poly4 rewrite_zsw(const Poly3& p) {
    Poly4 r;
    for (const auto& [e, c] : p.terms()) {
        int a = e[VZ], b = e[VS];
        if ((a + b) % 2 != 0) throw std::invalid_argument("rewrite_zsw: odd parity monomial");
        Poly4 mono = Poly4::constant(c) * Poly4::var(WV, e[VV]);
        if (b <= a) mono = mono * Poly4::var(WZS, b) * Poly4::var(WZ2, (a - b) / 2);
        else mono = mono * Poly4::var(WZS, a) * Poly4::var(WS2, (b - a) / 2);
        r = r + mono;
    }
    return r;
}

RationalFn4 f_in_zsw() {
    RationalFn3 f = f_expr();
    // numerator and denominator are both odd; multiply through by z
    Poly3 n = Poly3::var(VZ) * f.num, d = Poly3::var(VZ) * f.den;
    return {rewrite_zsw(n), rewrite_zsw(d)};
}

RationalFn4 h_in_zsw() {
    RationalFn3 h = h_expr();
    Poly3 n = h.num, d = h.den;
    if (!even_zs_parity(n)) {
        n = Poly3::var(VZ) * n;
        d = Poly3::var(VZ) * d;
    }
    return {rewrite_zsw(n), rewrite_zsw(d)};
}

} // namespace verlab
