#pragma once

#include "verlab/index_series.hpp"
#include "verlab/localize.hpp"
#include "verlab/report.hpp"

namespace verlab {

// Equivariant indices of the rank-2 moduli space via contour residues.
//
// All residues are taken at x = 0 after the substitution z = ±v e^{x/2};
// the z = -v branch equals the s -> -s image of the z = +v branch, and the
// two are averaged, which keeps exactly the even s-powers. The contour
// normalization is dz/z = dx/2 per branch, so
//   (1/2πi) ∮ F dz/z = (Res_+ + Res_-)/2 = even-s part of Res_+.
// The coefficient of the 2j-th exterior power is the internal s^{2j}
// coefficient times t^{-2j} (internal s is the grading variable over t).

// Graded index of L_i against the full exterior-power generating series,
// evaluated from the displayed product-form integrand.
SGradedIndex index_lambda_s(int g, int i, int order_t, int order_s);

// Single pair (i, j) via the compact h^{g-1} f^{-i} form. In formal mode any
// integers are admitted (out-of-range labels give the zero series); in
// geometric mode i must satisfy 0 <= i < g-1.
IndexSeries index_pair(int g, int i, int j, int order_t, bool formal = false);

// Exact equality of the two displayed integrand forms after localization.
IdentityReport consistency_main_vs_compact(int g, int i, int order_t, int order_s);

// Terms of the stack-level index: 1/2 * [m=0] + sum_{m=1}^{g-1} [f^m], all
// with the (h/f)^{g-1} df/f kernel. Coefficients may be half-integral.
SGradedIndex stack_index_sgraded(int g, int order_t, int order_s);

// The m = 0 term alone (used by the stack/moduli reconciliation identity).
SGradedIndex stack_m0_sgraded(int g, int order_t, int order_s);

namespace engine_detail {

// Internal helpers shared with the test suite.
RegistryPtr sized_registry(int g, int i_max_abs, int j_max, int order_t);
SGradedIndex extract_sgraded(const LocalSeries& G, int j_max, int order_t, const std::string& label);
LocalSeries compact_integrand(int g, int i, int sign, const RegistryPtr& reg);

} // namespace engine_detail

} // namespace verlab
