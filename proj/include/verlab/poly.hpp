#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>

#include "verlab/rat.hpp"

namespace verlab {

// Exact multivariate polynomial over Rat with a small fixed variable count.
// Used for the rational expressions in (z, s, v) and their rewrites; no
// truncation here, unlike MSeries.
template <int N>
class PolyN {
public:
    using Key = std::array<int, N>;
    using Map = std::map<Key, Rat>;

    PolyN() = default;

    static PolyN constant(const Rat& c) {
        PolyN p;
        if (sgn(c) != 0) p.c_[Key{}] = c;
        return p;
    }
    static PolyN one() { return constant(rat(1)); }

    static PolyN var(int i, int k = 1, const Rat& c = rat(1)) {
        PolyN p;
        Key e{};
        e[static_cast<std::size_t>(i)] = k;
        if (sgn(c) != 0) p.c_[e] = c;
        return p;
    }

    const Map& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    friend PolyN operator+(const PolyN& a, const PolyN& b) {
        PolyN r = a;
        for (const auto& [e, c] : b.c_) r.accum(e, c);
        return r;
    }
    friend PolyN operator-(const PolyN& a, const PolyN& b) {
        PolyN r = a;
        for (const auto& [e, c] : b.c_) r.accum(e, Rat(-c));
        return r;
    }
    PolyN operator-() const {
        PolyN r;
        for (const auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }
    friend PolyN operator*(const PolyN& a, const PolyN& b) {
        PolyN r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) {
                Key e;
                for (int i = 0; i < N; ++i) e[static_cast<std::size_t>(i)] =
                    ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
                r.accum(e, Rat(ca * cb));
            }
        return r;
    }
    friend PolyN operator*(const Rat& c, const PolyN& a) {
        PolyN r;
        if (sgn(c) == 0) return r;
        for (const auto& [e, v] : a.c_) r.c_[e] = c * v;
        return r;
    }

    PolyN pow(unsigned n) const {
        PolyN acc = one(), b = *this;
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    PolyN derivative(int vi) const {
        PolyN r;
        for (const auto& [e, c] : c_) {
            int k = e[static_cast<std::size_t>(vi)];
            if (k == 0) continue;
            Key d = e;
            d[static_cast<std::size_t>(vi)] = k - 1;
            r.c_[d] = c * Rat(static_cast<long>(k));
        }
        return r;
    }

    int degree(int vi) const {
        int m = 0;
        for (const auto& [e, c] : c_) {
            (void)c;
            m = std::max(m, e[static_cast<std::size_t>(vi)]);
        }
        return m;
    }

    // x_vi -> 1/x_vi, cleared by x_vi^{deg}: returns the exponent-reversed polynomial.
    PolyN reverse_in(int vi) const {
        int d = degree(vi);
        PolyN r;
        for (const auto& [e, c] : c_) {
            Key k = e;
            k[static_cast<std::size_t>(vi)] = d - e[static_cast<std::size_t>(vi)];
            r.c_[k] = c;
        }
        return r;
    }

    template <typename T>
    T eval(const std::array<T, N>& at) const {
        T acc(0);
        for (const auto& [e, c] : c_) {
            T t(rat_to_double(c));
            if constexpr (std::is_same_v<T, Rat>) t = c;
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) t = t * at[static_cast<std::size_t>(i)];
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const PolyN& a, const PolyN& b) { return a.c_ == b.c_; }

private:
    void accum(const Key& e, const Rat& c) {
        auto [it, inserted] = c_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) c_.erase(it);
        } else if (sgn(c) == 0) {
            c_.erase(it);
        }
    }

    Map c_;
};

using Poly3 = PolyN<3>; // variables (z, s, v)
using Poly4 = PolyN<4>; // variables (Z, S, W, v) = (z^2, s^2, z s, v)

} // namespace verlab
