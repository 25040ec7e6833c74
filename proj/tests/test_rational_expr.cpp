#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlab/rational_expr.hpp"

using namespace verlab;

namespace {
std::array<Rat, 3> pt(const Rat& z, const Rat& s, const Rat& v) { return {z, s, v}; }
} // namespace

TEST_CASE("f(1/z) f(z) = 1 as a cleared polynomial identity") {
    RationalFn3 f = f_expr();
    RationalFn3 finv = f.invert_z();
    // f(1/z) = 1/f(z)  <=>  f(1/z) * f(z) = 1
    RationalFn3 prod = f * finv;
    CHECK(identical(prod, RationalFn3{}));
}

TEST_CASE("h/f is invariant under z -> 1/z (cleared polynomial identity)") {
    RationalFn3 f = f_expr(), h = h_expr();
    RationalFn3 hf = h * f.inverse();
    CHECK(identical(hf.invert_z(), hf));
}

TEST_CASE("logderiv agrees with z f'/f") {
    RationalFn3 f = f_expr();
    RationalFn3 zfp{Poly3::var(VZ) * f.num.derivative(VZ) * f.den -
                        Poly3::var(VZ) * f.den.derivative(VZ) * f.num,
                    f.den * f.den};
    RationalFn3 L = logderiv_expr();
    CHECK(identical(zfp * f.inverse(), L));
}

TEST_CASE("level-2 Bethe left-hand side equals f") {
    CHECK(identical(bethe_lhs_expr(2), f_expr()));
}

TEST_CASE("level-2 Bethe Hessian equals logderiv") {
    CHECK(identical(hessian_expr(2), logderiv_expr()));
}

TEST_CASE("f and h depend only on z^2, s^2, zs") {
    RationalFn3 f = f_expr(), h = h_expr();
    CHECK(odd_zs_parity(f.num));
    CHECK(odd_zs_parity(f.den));
    bool h_even = even_zs_parity(h.num) && even_zs_parity(h.den);
    bool h_odd = odd_zs_parity(h.num) && odd_zs_parity(h.den);
    CHECK((h_even || h_odd));
}

TEST_CASE("square-root branch compatibility: (w f^{1/2})^2 = w^2 f") {
    RationalFn3 lhs = wf_half_expr() * wf_half_expr();
    RationalFn3 rhs = w2_expr() * f_expr();
    CHECK(identical(lhs, rhs));
}

TEST_CASE("functional equation at an exact rational point") {
    // z = 2, s = 1/3, v = 1/5
    auto at = pt(rat(2), rat(1, 3), rat(1, 5));
    RationalFn4 F = f_in_zsw(), H = h_in_zsw();

    Rat w2 = *w2_expr().eval(at);
    Rat fv = *f_expr().eval(at);
    Rat ws = *wf_half_expr().eval(at);
    Rat hv = *h_expr().eval(at);

    std::array<Rat, 4> sub{w2, fv, ws, at[2]};
    Rat fden = F.den.eval(sub);
    REQUIRE(sgn(fden) != 0);
    CHECK(F.num.eval(sub) == at[1] * at[1] * fden); // f(w, f^{1/2}, v) = s^2

    Rat hden = H.den.eval(sub);
    REQUIRE(sgn(hden) != 0);
    CHECK(H.num.eval(sub) == hv * hden); // h(w, f^{1/2}, v) = h(z, s, v)
}

TEST_CASE("degenerate s = 0 ray: w^2 = v^2 and f(w,.,.) = 0 = s^2") {
    auto at = pt(rat(3), rat(0), rat(1, 7));
    Rat w2 = *w2_expr().eval(at);
    CHECK(w2 == at[2] * at[2]);
    Rat fv = *f_expr().eval(at);
    Rat ws = *wf_half_expr().eval(at);
    RationalFn4 F = f_in_zsw();
    std::array<Rat, 4> sub{w2, fv, ws, at[2]};
    Rat fden = F.den.eval(sub);
    REQUIRE(sgn(fden) != 0);
    CHECK(sgn(F.num.eval(sub)) == 0);
}

TEST_CASE("rewrite reproduces f at sample points") {
    RationalFn4 F = f_in_zsw();
    for (auto [z, s, v] : {std::array<long, 3>{2, 3, 5}, {7, 1, 2}, {-3, 2, 7}}) {
        auto at = pt(rat(z), rat(s, 4), rat(v, 9));
        Rat fv = *f_expr().eval(at);
        std::array<Rat, 4> sub{at[0] * at[0], at[1] * at[1], at[0] * at[1], at[2]};
        Rat den = F.den.eval(sub);
        REQUIRE(sgn(den) != 0);
        CHECK(F.num.eval(sub) == fv * den);
    }
}
