#pragma once

#include "verlab/index_series.hpp"
#include "verlab/mseries.hpp"
#include "verlab/report.hpp"

namespace verlab {

// Exact integration over symmetric products of the curve, and the direct
// characteristic-class evaluation of the equivariant indices. This is the
// oracle route, independent of the contour/residue engine.

struct IndexQuery {
    int g = 2;          // genus, > 1
    int i = 0;          // component label, 0 <= i <= g-1
    int j = 0;          // exterior-power label
    int order_t = 8;
    int order_s = 0;    // grading order; 0 means "size from j"

    int ibar() const { return g - 1 - i; }
    void validate_direct() const;
};

// Polynomial in the cohomology generators eta (degree <= n) and theta
// (degree <= g) with series coefficients; out-of-range degrees are discarded
// since they integrate to zero.
class CohomClass {
public:
    CohomClass(int n, int g, RegistryPtr coeff_reg)
        : n_(n), g_(g), reg_(std::move(coeff_reg)) {}

    static CohomClass constant(int n, int g, RegistryPtr reg, const MSeries& c);
    static CohomClass one(int n, int g, RegistryPtr reg);

    int eta_bound() const { return n_; }
    int theta_bound() const { return g_; }
    const RegistryPtr& coeff_registry() const { return reg_; }

    MSeries coeff(int a, int b) const; // eta^a theta^b coefficient
    void set_coeff(int a, int b, MSeries s);
    bool is_zero() const;

    friend CohomClass operator+(const CohomClass& x, const CohomClass& y);
    friend CohomClass operator-(const CohomClass& x, const CohomClass& y);
    friend CohomClass operator*(const CohomClass& x, const CohomClass& y);
    friend CohomClass operator*(const MSeries& c, const CohomClass& x);
    friend CohomClass operator*(const Rat& c, const CohomClass& x);

    CohomClass pow_int(long k) const;
    CohomClass invert() const;        // unit (0,0)-part required
    CohomClass exp_class() const;     // exp of a class with no invertible scalar part

    // degree-sign involution eta -> -eta, theta -> -theta; the equivariant
    // parameter u (degree 2) flips alongside when present in the registry.
    CohomClass star() const;

    // integral over C_n: eta^a theta^b -> g(g-1)...(g-b+1) when a+b = n.
    MSeries integrate() const;

    friend bool operator==(const CohomClass& x, const CohomClass& y);

    std::string to_string() const;

private:
    int n_, g_;
    RegistryPtr reg_;
    std::map<std::pair<int, int>, MSeries> c_;
};

// Zagier's residue formula for integrals over the n-th symmetric product:
//   int_{C_n} A(eta) exp(B(eta) theta) = Res_{x=0} A(x)(1+xB(x))^g / x^{n+1}.
// A and B are dense coefficient vectors in the residue variable.
Rat zagier_residue(const std::vector<Rat>& A, const std::vector<Rat>& B, int n, int g);

// int_{C_n} of a class in (eta, theta) with rational coefficients.
Rat integrate_Cn(const CohomClass& c, int n, int g);

// The Chern data entering the index integrand, over the internal (s, v)
// registry with t = v^2 and s the grading variable divided by t.
struct ChernData {
    CohomClass chL2;        // ch of the square of the determinant bundle
    CohomClass sym;         // ch Sym_{t^2} E*
    CohomClass todd;        // td of the symmetric-product tangent bundle
    CohomClass lambda_avg;  // branch-averaged exterior-power generating class
    CohomClass lambda_plus; // unaveraged (+) branch, for parity tests
};

ChernData chern_data(const IndexQuery& q);

// Direct evaluation of the index by integration over C_{2i}; requires i < g-1.
SGradedIndex direct_index(const IndexQuery& q);

// Exterior-power class of one label j as a t-polynomial class family:
// entry k holds the coefficient class of t^k; the true class is the sum
// times t^{-2j}. Degree is bounded by 4j.
std::map<int, CohomClass> lambda_class_t_graded(const IndexQuery& q, int j);

// Dual-side verifications (the reflection/duality suite drives these).
IdentityReport verify_lidual(int g, int i, int order_u);
IndexSeries euler_form_L_side(int g, int i, int j, int order_t);     // starred determinant-side class
IndexSeries euler_form_Lambda_side(int g, int i, int j, int order_t); // t^{-g} exterior-side relation
IdentityReport verify_lambda_selfdual(const IndexQuery& q, int j);

} // namespace verlab
