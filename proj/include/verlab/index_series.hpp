#pragma once

#include <complex>
#include <map>
#include <string>

#include <json.hpp>

#include "verlab/rat.hpp"

namespace verlab {

// Laurent series in t with exact coefficients and a finite principal part.
// Production indices lie in Z[[t]]; stack-level indices may carry halves.
struct IndexSeries {
    std::map<int, Rat> c; // t-power -> coefficient, zeros omitted
    int order = 0;        // coefficients certified for powers <= order
    std::string label;

    void set(int k, const Rat& v) {
        if (sgn(v) == 0) c.erase(k);
        else c[k] = v;
    }
    Rat coeff(int k) const {
        auto it = c.find(k);
        return it == c.end() ? rat(0) : it->second;
    }
    bool is_zero() const { return c.empty(); }

    int valuation() const {
        return c.empty() ? 0 : c.begin()->first;
    }

    bool integral() const {
        for (const auto& [k, v] : c) {
            (void)k;
            if (!rat_is_integer(v)) return false;
        }
        return true;
    }
    bool principal_free() const { return c.empty() || c.begin()->first >= 0; }

    IndexSeries shifted(int d) const {
        IndexSeries r;
        r.order = order + d;
        r.label = label;
        for (const auto& [k, v] : c) r.c[k + d] = v;
        return r;
    }

    IndexSeries truncated(int new_order) const {
        IndexSeries r;
        r.order = std::min(order, new_order);
        r.label = label;
        for (const auto& [k, v] : c)
            if (k <= r.order) r.c[k] = v;
        return r;
    }

    friend IndexSeries operator+(const IndexSeries& a, const IndexSeries& b) {
        IndexSeries r;
        r.order = std::min(a.order, b.order);
        r.label = a.label;
        for (const auto& [k, v] : a.c)
            if (k <= r.order) r.c[k] = v;
        for (const auto& [k, v] : b.c) {
            if (k > r.order) continue;
            auto [it, ins] = r.c.try_emplace(k, v);
            if (!ins) {
                it->second += v;
                if (sgn(it->second) == 0) r.c.erase(it);
            }
        }
        return r;
    }
    friend IndexSeries operator-(const IndexSeries& a, const IndexSeries& b) {
        return a + (rat(-1) * b);
    }
    friend IndexSeries operator*(const Rat& m, const IndexSeries& a) {
        IndexSeries r;
        r.order = a.order;
        r.label = a.label;
        if (sgn(m) == 0) return r;
        for (const auto& [k, v] : a.c) r.c[k] = m * v;
        return r;
    }

    // equality on the common certified range
    friend bool equal_series(const IndexSeries& a, const IndexSeries& b) {
        int lim = std::min(a.order, b.order);
        for (const auto& [k, v] : a.c)
            if (k <= lim && b.coeff(k) != v) return false;
        for (const auto& [k, v] : b.c)
            if (k <= lim && a.coeff(k) != v) return false;
        return true;
    }

    // first power where the two differ, or none
    friend std::optional<int> first_difference(const IndexSeries& a, const IndexSeries& b) {
        int lim = std::min(a.order, b.order);
        std::optional<int> w;
        auto scan = [&](const IndexSeries& p, const IndexSeries& q) {
            for (const auto& [k, v] : p.c)
                if (k <= lim && q.coeff(k) != v && (!w || k < *w)) w = k;
        };
        scan(a, b);
        scan(b, a);
        return w;
    }

    std::string to_string() const {
        if (c.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : c) {
            std::string term = rat_to_string(v);
            if (k != 0) {
                term += "*t^" + std::to_string(k);
            }
            if (!out.empty()) out += " + ";
            out += term;
        }
        return out;
    }

    struct Eval {
        std::complex<double> value{};
        double tail_bound = 0.0; // |last retained coefficient| * |t|^order
        bool conclusive = true;  // tail bound within the comparison budget
    };

    // Horner evaluation with an explicit truncation-error budget.
    Eval evaluate(std::complex<double> t, double budget = 1e-8) const {
        Eval e;
        if (c.empty()) return e;
        int lo = c.begin()->first;
        std::complex<double> acc = 0.0;
        for (int k = order; k >= lo; --k) {
            acc = acc * t + rat_to_double(coeff(k));
        }
        e.value = acc * std::pow(t, lo);
        Rat last = c.rbegin()->second;
        e.tail_bound = std::abs(rat_to_double(last)) * std::pow(std::abs(t), order);
        e.conclusive = e.tail_bound < budget;
        return e;
    }

    nlohmann::json to_json() const {
        nlohmann::json coeffs = nlohmann::json::object();
        for (const auto& [k, v] : c) coeffs[std::to_string(k)] = rat_to_string(v);
        return {{"label", label}, {"order", order}, {"coeffs", coeffs}};
    }

    static IndexSeries from_json(const nlohmann::json& j) {
        IndexSeries r;
        r.label = j.value("label", "");
        r.order = j.at("order").get<int>();
        for (const auto& [k, v] : j.at("coeffs").items())
            r.c[std::stoi(k)] = rat_from_string(v.get<std::string>());
        return r;
    }
};

// s-graded family: exterior-power label j -> index series in t.
struct SGradedIndex {
    std::map<int, IndexSeries> parts;
    int jmax = 0;

    const IndexSeries& at(int j) const {
        static const IndexSeries zero{};
        auto it = parts.find(j);
        return it == parts.end() ? zero : it->second;
    }
};

} // namespace verlab
