#include "verlab/residue_engine.hpp"

#include "verlab/errors.hpp"

namespace verlab {

namespace engine_detail {

RegistryPtr sized_registry(int g, int i_max_abs, int j_max, int order_t) {
    int pole = 2 * (g - 1) + 2 * i_max_abs + 1;
    int x_order = pole + 6;
    int s_order = std::max(0, 2 * j_max);
    int v_order = 2 * order_t + std::max(0, 4 * j_max);
    return local_registry(x_order, s_order, v_order);
}

SGradedIndex extract_sgraded(const LocalSeries& G, int j_max, int order_t, const std::string& label) {
    MSeries res = G.lx.residue();
    SGradedIndex out;
    out.jmax = j_max;
    const auto& reg = res.registry();
    int v_order = reg->order(reg->index("v"));
    for (int j = 0; j <= j_max; ++j) {
        IndexSeries s;
        s.label = label + " j=" + std::to_string(j);
        s.order = (v_order + G.v_shift - 4 * j) / 2;
        MSeries cj = res.coeff_of("s", 2 * j);
        for (const auto& [e, c] : cj.terms()) {
            int ev = e[reg->index("v")] + G.v_shift - 4 * j;
            if (ev % 2 != 0)
                throw std::logic_error("extract: odd power of v in an index series");
            int tk = ev / 2;
            if (tk <= s.order) s.set(tk, s.coeff(tk) + c);
        }
        out.parts[j] = std::move(s);
    }
    return out;
}

LocalSeries compact_integrand(int g, int i, int sign, const RegistryPtr& reg) {
    LocalSeries h = localize_h(sign, reg);
    LocalSeries f = localize_f(sign, reg);
    LocalSeries L = localize_logderiv(sign, reg);
    return h.pow_int(g - 1) * f.pow_int(-i) * L;
}

} // namespace engine_detail

using namespace engine_detail;

SGradedIndex index_lambda_s(int g, int i, int order_t, int order_s) {
    if (g < 2) throw UnsupportedComponent("index: genus must exceed 1");
    if (i < 0 || i >= g - 1) throw UnsupportedComponent("index: component label out of range");
    int j_max = order_s / 2;
    RegistryPtr reg = sized_registry(g, i, j_max, order_t);
    LocalSeries G = localize_index_integrand(g, i, +1, reg);
    // averaging the two branches keeps the even s-part
    LocalSeries even{G.v_shift, LaurentX(G.lx.xvar(), G.lx.body().even_part("s"), G.lx.pole())};
    SGradedIndex out = extract_sgraded(even, j_max, order_t, "L" + std::to_string(i));
    return out;
}

IndexSeries index_pair(int g, int i, int j, int order_t, bool formal) {
    if (g < 2) throw UnsupportedComponent("index: genus must exceed 1");
    if (!formal && (i < 0 || i >= g - 1))
        throw UnsupportedComponent("index: component label out of range for the contour form");
    std::string label = "chi(g=" + std::to_string(g) + ",i=" + std::to_string(i) +
                        ",j=" + std::to_string(j) + ")";
    if (j < 0) {
        IndexSeries zero;
        zero.order = order_t;
        zero.label = label;
        return zero;
    }
    RegistryPtr reg = sized_registry(g, std::abs(i), j, order_t);
    LocalSeries G = compact_integrand(g, i, +1, reg);
    SGradedIndex sg = extract_sgraded(G, j, order_t, label);
    IndexSeries out = sg.at(j).truncated(order_t);
    out.label = label;
    return out;
}

IdentityReport consistency_main_vs_compact(int g, int i, int order_t, int order_s) {
    IdentityReport rep;
    rep.name = "integrand product form equals compact contour form";
    rep.params = {{"g", g}, {"i", i}, {"order_t", order_t}, {"order_s", order_s}};
    RegistryPtr reg = sized_registry(g, std::max(i, g - 1), order_s / 2, order_t);
    LocalSeries main = localize_index_integrand(g, i, +1, reg);
    LocalSeries compact = compact_integrand(g, i, +1, reg);
    if (main.v_shift != compact.v_shift) {
        rep.pass = false;
        rep.witness = "monomial prefactor v^" + std::to_string(main.v_shift) + " vs v^" +
                      std::to_string(compact.v_shift);
        return rep;
    }
    LaurentX diff = main.lx - compact.lx;
    if (diff.body().is_zero()) {
        rep.pass = true;
        return rep;
    }
    const auto& term = *diff.body().terms().begin();
    const auto& r = *diff.body().registry();
    rep.pass = false;
    rep.witness = "first differing exponent (x,s,v) = (" +
                  std::to_string(term.first[r.index("x")] - diff.pole()) + "," +
                  std::to_string(term.first[r.index("s")]) + "," +
                  std::to_string(term.first[r.index("v")]) + ")";
    return rep;
}

namespace {

SGradedIndex stack_terms(int g, int order_t, int order_s, bool include_higher) {
    int j_max = order_s / 2;
    RegistryPtr reg = sized_registry(g, g - 1, j_max, order_t);
    LocalSeries h = localize_h(+1, reg);
    LocalSeries f = localize_f(+1, reg);
    LocalSeries L = localize_logderiv(+1, reg);
    LocalSeries base = h.pow_int(g - 1) * f.pow_int(-(g - 1)) * L; // (h/f)^{g-1} df/f kernel

    auto graded = [&](const LocalSeries& G, const std::string& lbl) {
        LocalSeries even{G.v_shift, LaurentX(G.lx.xvar(), G.lx.body().even_part("s"), G.lx.pole())};
        return extract_sgraded(even, j_max, order_t, lbl);
    };

    SGradedIndex acc;
    acc.jmax = j_max;
    SGradedIndex m0 = graded(base, "stack m=0");
    for (int j = 0; j <= j_max; ++j) acc.parts[j] = rat(1, 2) * m0.at(j);
    if (!include_higher) {
        for (int j = 0; j <= j_max; ++j) acc.parts[j] = m0.at(j); // full m=0 term
        return acc;
    }
    LocalSeries cur = base;
    for (int m = 1; m <= g - 1; ++m) {
        cur = cur * f;
        SGradedIndex tm = graded(cur, "stack m=" + std::to_string(m));
        for (int j = 0; j <= j_max; ++j) acc.parts[j] = acc.at(j) + tm.at(j);
    }
    return acc;
}

} // namespace

SGradedIndex stack_index_sgraded(int g, int order_t, int order_s) {
    return stack_terms(g, order_t, order_s, true);
}

SGradedIndex stack_m0_sgraded(int g, int order_t, int order_s) {
    return stack_terms(g, order_t, order_s, false);
}

} // namespace verlab
