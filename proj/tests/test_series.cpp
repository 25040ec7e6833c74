#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "verlab/laurent.hpp"
#include "verlab/mseries.hpp"
#include "verlab/series_io.hpp"

using namespace verlab;

namespace {

RegistryPtr reg_x(int n) { return make_registry({{"x", n}}); }

MSeries X(const RegistryPtr& r, int k = 1) { return MSeries::monomial(r, "x", k); }

// seeded random sparse series for property tests
MSeries random_series(const RegistryPtr& reg, std::mt19937_64& rng, bool unit_one = false) {
    std::uniform_int_distribution<int> coeff(-6, 6), den(1, 4), pick(0, 2);
    MSeries s = unit_one ? MSeries::one(reg) : MSeries::zero(reg);
    for (int i = 0; i < reg->size(); ++i) {
        for (int k = 0; k <= reg->order(i); ++k) {
            if (pick(rng) != 0) continue;
            if (unit_one && k == 0) continue;
            Rat c = rat(coeff(rng), den(rng));
            if (sgn(c) == 0) continue;
            s = s + MSeries::monomial(reg, reg->name(i), k, c);
        }
    }
    return s;
}

} // namespace

TEST_CASE("polynomial arithmetic identities") {
    auto r = make_registry({{"x", 4}, {"s", 4}});
    MSeries one = MSeries::one(r);
    MSeries x = MSeries::monomial(r, "x", 1);
    MSeries s = MSeries::monomial(r, "s", 1);

    CHECK((one + x) * (one - x) == one - MSeries::monomial(r, "x", 2));
    MSeries lhs = (one + s) * (one + s);
    MSeries want = one + rat(2) * s + MSeries::monomial(r, "s", 2);
    CHECK(lhs == want);
}

TEST_CASE("multiplication truncates at the per-variable bound") {
    auto r = reg_x(2);
    MSeries a = MSeries::one(r) + X(r) + X(r, 2);
    MSeries b = MSeries::one(r) + X(r);
    MSeries want = MSeries::one(r) + rat(2) * X(r) + rat(2) * X(r, 2);
    CHECK(a * b == want); // x^3 dropped
}

TEST_CASE("registry mismatch is rejected") {
    auto r1 = reg_x(3);
    auto r2 = reg_x(4);
    CHECK_THROWS_AS(MSeries::one(r1) + MSeries::one(r2), RegistryMismatch);
}

TEST_CASE("invert") {
    auto r = reg_x(3);
    MSeries geom = (MSeries::one(r) - X(r)).invert();
    CHECK(geom == MSeries::one(r) + X(r) + X(r, 2) + X(r, 3));
    CHECK(MSeries::constant(r, rat(2)).invert() == MSeries::constant(r, rat(1, 2)));
    CHECK_THROWS_AS(X(r).invert(), ZeroConstantTerm);
}

TEST_CASE("exp, log1p, rational powers") {
    auto r = reg_x(3);
    MSeries ex = X(r).exp();
    CHECK(ex == MSeries::one(r) + X(r) + rat(1, 2) * X(r, 2) + rat(1, 6) * X(r, 3));
    CHECK(MSeries::zero(r).exp() == MSeries::one(r));
    CHECK_THROWS_AS(MSeries::one(r).exp(), NonzeroConstantTerm);

    auto r2 = reg_x(2);
    MSeries a = MSeries::one(r2) + X(r2);
    MSeries root = a.pow_rational(1, 2);
    CHECK(root == MSeries::one(r2) + rat(1, 2) * X(r2) - rat(1, 8) * MSeries::monomial(r2, "x", 2));
    CHECK(root * root == a);
    CHECK_THROWS_AS(X(r2).pow_rational(1, 2), NotUnitOnePlus);
    // constants need an exact rational root
    CHECK(MSeries::constant(r2, rat(9, 4)).pow_rational(1, 2) == MSeries::constant(r2, rat(3, 2)));
    CHECK_THROWS_AS(MSeries::constant(r2, rat(2)).pow_rational(1, 2), NotUnitOnePlus);
}

TEST_CASE("ring axioms on seeded random series") {
    auto reg = make_registry({{"x", 3}, {"s", 2}, {"v", 3}});
    std::mt19937_64 rng(20240811u);
    for (int trial = 0; trial < 40; ++trial) {
        MSeries a = random_series(reg, rng);
        MSeries b = random_series(reg, rng);
        MSeries c = random_series(reg, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exp/log1p are mutually inverse on their domains") {
    auto reg = make_registry({{"x", 4}, {"s", 3}});
    std::mt19937_64 rng(7u);
    for (int trial = 0; trial < 15; ++trial) {
        MSeries w = random_series(reg, rng, /*unit_one=*/true) - MSeries::one(reg);
        CHECK(w.log1p().exp() == MSeries::one(reg) + w);
        MSeries a = w; // zero constant term
        CHECK((a.exp() - MSeries::one(reg)).log1p() == a);
    }
}

TEST_CASE("pow_rational(a,p/q)^q equals a^p") {
    auto reg = make_registry({{"x", 4}, {"s", 3}});
    std::mt19937_64 rng(99u);
    for (int trial = 0; trial < 12; ++trial) {
        MSeries a = random_series(reg, rng, /*unit_one=*/true);
        for (auto [p, q] : {std::pair<long, long>{1, 2}, {3, 2}, {-1, 3}, {2, 3}}) {
            MSeries r = a.pow_rational(p, q);
            CHECK(r.pow_int(q) == a.pow_int(p));
        }
    }
}

TEST_CASE("laurent residue basics") {
    auto r = reg_x(4);
    LaurentX inv_x(r->name(0), MSeries::one(r), 1);
    CHECK(inv_x.residue() == MSeries::one(r));

    LaurentX poly("x", MSeries::one(r) + X(r) + X(r, 2), 0);
    CHECK(poly.residue().is_zero());

    // (x + x^2) / x = 1 + x
    LaurentX num("x", X(r) + X(r, 2), 0);
    LaurentX xinv = LaurentX("x", X(r), 0).invert_unit_times_power();
    LaurentX q = num * xinv;
    CHECK(q.coeff(0) == MSeries::one(r));
    CHECK(q.coeff(1) == MSeries::one(r));
    CHECK(q.coeff(2).is_zero());

    CHECK_THROWS_AS(LaurentX("x", MSeries::zero(r), 0).invert_unit_times_power(),
                    IdenticallyZeroWithinTruncation);
}

TEST_CASE("residue is linear and kills exact derivatives") {
    auto reg = make_registry({{"x", 8}, {"s", 2}});
    std::mt19937_64 rng(314159u);
    for (int trial = 0; trial < 20; ++trial) {
        MSeries b1 = random_series(reg, rng);
        MSeries b2 = random_series(reg, rng);
        LaurentX w1("x", b1, 3), w2("x", b2, 2);
        Rat c = rat(3, 2);
        MSeries lhs = (w1 + c * w2).residue();
        CHECK(lhs == w1.residue() + c * w2.residue());
        CHECK(w1.derivative_x().residue().is_zero());
        CHECK(w2.derivative_x().residue().is_zero());
    }
}

TEST_CASE("laurent inversion round trip") {
    auto reg = make_registry({{"x", 9}, {"s", 2}});
    std::mt19937_64 rng(42u);
    for (int trial = 0; trial < 10; ++trial) {
        MSeries unit = random_series(reg, rng, /*unit_one=*/true);
        LaurentX a("x", unit.shift_up("x", 2), 1); // x^2 * unit / x
        LaurentX inv = a.invert_unit_times_power();
        LaurentX prod = (a * inv).normalized();
        CHECK(prod.coeff(0) == MSeries::one(reg));
        CHECK(prod.valuation() == 0);
    }
}

TEST_CASE("json round trip is exact") {
    auto reg = make_registry({{"x", 3}, {"v", 5}});
    std::mt19937_64 rng(8u);
    MSeries s = random_series(reg, rng);
    auto j = mseries_to_json(s);
    MSeries back = mseries_from_json(j);
    CHECK(back == s);
    CHECK(mseries_to_json(back) == j);
}
