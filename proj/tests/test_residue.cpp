#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlab/residue_engine.hpp"

using namespace verlab;
using namespace verlab::engine_detail;

namespace {

// binomial C(n, k) as Rat
Rat binom(int n, int k) {
    Rat acc = rat(1);
    for (int i = 0; i < k; ++i) acc *= rat(n - i, i + 1);
    return acc;
}

} // namespace

TEST_CASE("localized f has x-valuation exactly 2 at s = 0") {
    auto reg = local_registry(8, 0, 12);
    LocalSeries f = localize_f(+1, reg);
    CHECK(f.lx.valuation() == 2);
    CHECK(f.v_shift == 4);
}

TEST_CASE("localized logderiv equals 2 d/dx log f") {
    auto reg = local_registry(10, 4, 12);
    LocalSeries f = localize_f(+1, reg);
    LocalSeries L = localize_logderiv(+1, reg);
    // 2 f'/f as Laurent series; compare with the localized closed form
    LaurentX two_dlog = rat(2) * (f.lx.derivative_x() * f.lx.invert_unit_times_power());
    LaurentX diff = two_dlog - L.lx;
    // compare on the certified window
    for (int k = -1; k <= std::min(two_dlog.known(), L.lx.known()); ++k)
        CHECK(diff.coeff(k).is_zero());
}

TEST_CASE("localized f times localized f(1/z) is 1") {
    auto reg = local_registry(10, 4, 12);
    LocalSeries f = localize_f(+1, reg);
    LocalSeries finv = localize_f_inverted_z(+1, reg);
    LocalSeries prod = f * finv;
    CHECK(prod.v_shift == 0);
    LaurentX norm = prod.lx.normalized();
    CHECK(norm.pole() == 0);
    for (int k = 0; k <= norm.known(); ++k)
        CHECK(norm.coeff(k) == (k == 0 ? MSeries::one(reg) : MSeries::zero(reg)));
}

TEST_CASE("the minus branch is the s -> -s image of the plus branch") {
    auto reg = local_registry(8, 3, 8);
    LocalSeries plus = localize_h(+1, reg);
    LocalSeries minus = localize_h(-1, reg);
    CHECK(plus.v_shift == minus.v_shift);
    CHECK(plus.lx.body().negate_var("s") == minus.lx.body());
    CHECK(plus.lx.pole() == minus.lx.pole());
}

TEST_CASE("frozen value: chi(g=2, i=0, j=0) = 16 t^2 / (1-t^2)^3") {
    IndexSeries s = index_pair(2, 0, 0, 12);
    for (int k = 0; k <= 12; ++k) {
        Rat want = rat(0);
        if (k >= 2 && k % 2 == 0) want = rat(16) * binom((k - 2) / 2 + 2, 2);
        CHECK(s.coeff(k) == want);
    }
    CHECK(s.integral());
    CHECK(s.principal_free());
}

TEST_CASE("index symmetry at g = 3") {
    IndexSeries a = index_pair(3, 0, 1, 10);
    IndexSeries b = index_pair(3, 1, 0, 10);
    CHECK(equal_series(a, b));
    CHECK(!a.is_zero());
}

TEST_CASE("vanishing beyond the exterior-power range") {
    IndexSeries s = index_pair(2, 0, 3, 8); // j = 3 > 2g-2 = 2
    CHECK(s.is_zero());
}

TEST_CASE("formal-mode vanishing for negative labels") {
    for (int i : {-2, -1}) {
        IndexSeries s = index_pair(3, i, 1, 8, /*formal=*/true);
        CHECK(s.is_zero());
    }
    for (int j : {-2, -1}) {
        IndexSeries s = index_pair(3, 0, j, 8, /*formal=*/true);
        CHECK(s.is_zero());
    }
}

TEST_CASE("geometric mode rejects out-of-range components") {
    CHECK_THROWS_AS(index_pair(3, 2, 0, 6), UnsupportedComponent);
    CHECK_THROWS_AS(index_pair(3, -1, 0, 6), UnsupportedComponent);
    CHECK_THROWS_AS(index_lambda_s(2, 1, 6, 4), UnsupportedComponent);
}

TEST_CASE("reflection symmetry of the formal contour integral") {
    // exponent i and 2g-2-i give equal residue sums; likewise j and 2g-2-j
    for (int g : {2, 3}) {
        for (int i = 0; i < g - 1; ++i) {
            for (int j = 0; j <= g - 1; ++j) {
                IndexSeries a = index_pair(g, i, j, 8, true);
                IndexSeries b = index_pair(g, 2 * g - 2 - i, j, 8, true);
                CHECK(equal_series(a, b));
                IndexSeries c = index_pair(g, i, 2 * g - 2 - j, 8, true);
                CHECK(equal_series(a, c));
            }
        }
    }
}

TEST_CASE("graded series matches pairwise extraction and is even in s") {
    for (int g : {2, 3}) {
        for (int i = 0; i < g - 1; ++i) {
            int smax = 2 * (2 * g - 2);
            SGradedIndex sg = index_lambda_s(g, i, 8, smax);
            for (int j = 0; j <= smax / 2; ++j) {
                IndexSeries direct = index_pair(g, i, j, 8);
                CHECK(equal_series(sg.at(j), direct));
            }
            // total s-degree bounded by twice the rank bound
            for (int j = 2 * g - 1; j <= smax / 2; ++j) CHECK(sg.at(j).is_zero());
        }
    }
}

TEST_CASE("graded integrand has no odd s-terms after branch averaging") {
    auto reg = sized_registry(2, 0, 2, 6);
    LocalSeries plus = localize_index_integrand(2, 0, +1, reg);
    LocalSeries minus = localize_index_integrand(2, 0, -1, reg);
    LaurentX avg = rat(1, 2) * (plus.lx + minus.lx);
    MSeries res = avg.residue();
    CHECK(res == res.even_part("s"));
}

TEST_CASE("consistency of the two integrand forms") {
    for (int g : {2, 3, 4}) {
        for (int i = 0; i < g - 1; ++i) {
            IdentityReport rep = consistency_main_vs_compact(g, i, 6, 4);
            INFO(rep.witness);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("integrality and support of production indices") {
    for (int g : {2, 3}) {
        for (int i = 0; i < g - 1; ++i) {
            for (int j = 0; j <= 2 * g - 2; ++j) {
                IndexSeries s = index_pair(g, i, j, 8);
                CHECK(s.integral());
                CHECK(s.principal_free());
            }
        }
    }
}

TEST_CASE("stack m0 term: frozen s^0 value at g = 2") {
    // 8 (1 + 4 t^2 + t^4) / (1 - t^2)^3, derived by direct series division
    SGradedIndex m0 = stack_m0_sgraded(2, 10, 4);
    IndexSeries s0 = m0.at(0);
    IndexSeries want;
    want.order = 10;
    for (int k = 0; k <= 10; k += 2) {
        int m = k / 2;
        Rat c = binom(m + 2, 2);
        if (m >= 1) c += rat(4) * binom(m - 1 + 2, 2);
        if (m >= 2) c += binom(m - 2 + 2, 2);
        want.set(k, rat(8) * c);
    }
    CHECK(equal_series(s0, want));
}

TEST_CASE("stack index s^0 at g = 2 equals the closed form 8(1+6t^2+t^4)/(1-t^2)^3") {
    SGradedIndex st = stack_index_sgraded(2, 10, 4);
    IndexSeries s0 = st.at(0);
    IndexSeries want;
    want.order = 10;
    for (int k = 0; k <= 10; k += 2) {
        int m = k / 2;
        Rat c = binom(m + 2, 2);
        if (m >= 1) c += rat(6) * binom(m - 1 + 2, 2);
        if (m >= 2) c += binom(m - 2 + 2, 2);
        want.set(k, rat(8) * c);
    }
    CHECK(equal_series(s0, want));
}
