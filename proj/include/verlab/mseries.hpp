#pragma once

#include <map>
#include <string>
#include <utility>

#include "verlab/rat.hpp"
#include "verlab/registry.hpp"

namespace verlab {

// Truncated multivariate power series with exact rational coefficients.
// Sparse exponent-tuple map; multiplication discards any product exponent
// exceeding a truncation bound (jet semantics). Values are immutable after
// construction: every operation returns a new series.
class MSeries {
public:
    using Map = std::map<Expo, Rat>;

    explicit MSeries(RegistryPtr reg) : reg_(std::move(reg)) {}

    static MSeries zero(RegistryPtr reg) { return MSeries(std::move(reg)); }

    static MSeries constant(RegistryPtr reg, const Rat& c) {
        MSeries s(std::move(reg));
        if (sgn(c) != 0) s.c_[Expo{}] = c;
        return s;
    }

    static MSeries one(RegistryPtr reg) { return constant(std::move(reg), rat(1)); }

    // c * var^k
    static MSeries monomial(RegistryPtr reg, const std::string& var, int k, const Rat& c = rat(1)) {
        MSeries s(reg);
        int vi = reg->index(var);
        if (k < 0) throw std::invalid_argument("monomial: negative exponent");
        if (k <= reg->order(vi) && sgn(c) != 0) {
            Expo ex;
            ex[vi] = static_cast<std::int16_t>(k);
            s.c_[ex] = c;
        }
        return s;
    }

    const RegistryPtr& registry() const { return reg_; }
    const Map& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }

    Rat coeff(const Expo& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? rat(0) : it->second;
    }
    Rat constant_term() const { return coeff(Expo{}); }

    friend bool operator==(const MSeries& a, const MSeries& b) {
        return *a.reg_ == *b.reg_ && a.c_ == b.c_;
    }

    friend MSeries operator+(const MSeries& a, const MSeries& b) {
        a.check_reg(b);
        MSeries r = a;
        for (const auto& [e, c] : b.c_) r.accum(e, c);
        return r;
    }

    friend MSeries operator-(const MSeries& a, const MSeries& b) {
        a.check_reg(b);
        MSeries r = a;
        for (const auto& [e, c] : b.c_) r.accum(e, Rat(-c));
        return r;
    }

    MSeries operator-() const {
        MSeries r(reg_);
        for (const auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }

    friend MSeries operator*(const MSeries& a, const MSeries& b) {
        a.check_reg(b);
        MSeries r(a.reg_);
        const MSeries& outer = a.size() <= b.size() ? a : b;
        const MSeries& inner = a.size() <= b.size() ? b : a;
        const int n = a.reg_->size();
        for (const auto& [ea, ca] : outer.c_) {
            for (const auto& [eb, cb] : inner.c_) {
                Expo e = ea + eb;
                bool keep = true;
                for (int i = 0; i < n; ++i)
                    if (e[i] > outer.reg_->order(i)) {
                        keep = false;
                        break;
                    }
                if (keep) r.accum(e, Rat(ca * cb));
            }
        }
        return r;
    }

    friend MSeries operator*(const Rat& c, const MSeries& a) {
        MSeries r(a.reg_);
        if (sgn(c) == 0) return r;
        for (const auto& [e, v] : a.c_) r.c_[e] = c * v;
        return r;
    }
    friend MSeries operator*(const MSeries& a, const Rat& c) { return c * a; }

    // Multiplicative inverse; requires a nonzero constant term.
    MSeries invert() const {
        Rat c0 = constant_term();
        if (sgn(c0) == 0) throw ZeroConstantTerm("invert: constant term vanishes");
        MSeries y = constant(reg_, Rat(1 / c0));
        MSeries one_ = one(reg_);
        // Newton: y <- y(2 - a y); correct order doubles per step.
        int steps = 2;
        for (int t = reg_->total_order(); t > 0; t >>= 1) ++steps;
        for (int i = 0; i < steps; ++i) {
            MSeries ay = (*this) * y;
            if (ay == one_) return y;
            y = y * (constant(reg_, rat(2)) - ay);
        }
        if (((*this) * y) == one_) return y;
        throw std::logic_error("invert: Newton failed to converge");
    }

    // exp of a series with zero constant term.
    MSeries exp() const {
        if (sgn(constant_term()) != 0) throw NonzeroConstantTerm("exp: nonzero constant term");
        MSeries acc = one(reg_);
        MSeries term = one(reg_);
        for (long k = 1;; ++k) {
            term = term * (*this);
            term = Rat(rat(1, k)) * term;
            if (term.is_zero()) break;
            acc = acc + term;
        }
        return acc;
    }

    // log(1 + w) for w with zero constant term.
    MSeries log1p() const {
        if (sgn(constant_term()) != 0) throw NotUnitOnePlus("log1p: argument must have zero constant term");
        MSeries acc = zero(reg_);
        MSeries pw = one(reg_);
        for (long k = 1;; ++k) {
            pw = pw * (*this);
            if (pw.is_zero()) break;
            acc = acc + Rat(rat(k % 2 ? 1 : -1, k)) * pw;
        }
        return acc;
    }

    // a^(p/q) on the principal branch. The constant term must be 1, or have
    // an exact rational q-th root which is factored out.
    MSeries pow_rational(long p, long q) const {
        if (q <= 0) throw std::invalid_argument("pow_rational: q must be positive");
        Rat c0 = constant_term();
        if (sgn(c0) == 0) throw NotUnitOnePlus("pow_rational: zero constant term");
        Rat scale = rat(1);
        MSeries base = *this;
        if (c0 != 1) {
            Rat root;
            if (!rat_exact_root(c0, static_cast<unsigned long>(q), root))
                throw NotUnitOnePlus("pow_rational: constant term has no exact rational root");
            scale = rat_pow(root, p);
            base = Rat(1 / c0) * base;
        }
        MSeries w = base - one(reg_);
        Rat alpha = rat(p, q);
        MSeries acc = one(reg_);
        MSeries pw = one(reg_);
        for (unsigned long k = 1;; ++k) {
            pw = pw * w;
            if (pw.is_zero()) break;
            acc = acc + rat_binom(alpha, k) * pw;
        }
        return scale * acc;
    }

    MSeries pow_int(long n) const {
        if (n < 0) return invert().pow_int(-n);
        MSeries acc = one(reg_);
        MSeries b = *this;
        unsigned long m = static_cast<unsigned long>(n);
        while (m) {
            if (m & 1) acc = acc * b;
            b = b * b;
            m >>= 1;
        }
        return acc;
    }

    MSeries derivative(const std::string& var) const {
        int vi = reg_->index(var);
        MSeries r(reg_);
        for (const auto& [e, c] : c_) {
            if (e[vi] == 0) continue;
            Expo d = e;
            d[vi] = static_cast<std::int16_t>(e[vi] - 1);
            r.c_[d] = c * Rat(static_cast<long>(e[vi]));
        }
        return r;
    }

    // Coefficient of var^k, as a series in the remaining variables (same registry).
    MSeries coeff_of(const std::string& var, int k) const {
        int vi = reg_->index(var);
        MSeries r(reg_);
        for (const auto& [e, c] : c_) {
            if (e[vi] != k) continue;
            Expo d = e;
            d[vi] = 0;
            r.c_[d] = c;
        }
        return r;
    }

    // Multiply by var^k (k >= 0): exponents above the truncation bound drop.
    MSeries shift_up(const std::string& var, int k) const {
        if (k == 0) return *this;
        if (k < 0) throw std::invalid_argument("shift_up: negative shift");
        int vi = reg_->index(var);
        MSeries r(reg_);
        for (const auto& [e, c] : c_) {
            if (e[vi] + k > reg_->order(vi)) continue;
            Expo d = e;
            d[vi] = static_cast<std::int16_t>(e[vi] + k);
            r.c_[d] = c;
        }
        return r;
    }

    // Exact division by var^k; throws unless every term is divisible.
    MSeries shift_down(const std::string& var, int k) const {
        if (k == 0) return *this;
        int vi = reg_->index(var);
        MSeries r(reg_);
        for (const auto& [e, c] : c_) {
            if (e[vi] < k) throw std::domain_error("shift_down: not divisible by " + var);
            Expo d = e;
            d[vi] = static_cast<std::int16_t>(e[vi] - k);
            r.c_[d] = c;
        }
        return r;
    }

    // var -> -var
    MSeries negate_var(const std::string& var) const {
        int vi = reg_->index(var);
        MSeries r(reg_);
        for (const auto& [e, c] : c_) r.c_[e] = (e[vi] % 2) ? Rat(-c) : c;
        return r;
    }

    MSeries even_part(const std::string& var) const {
        int vi = reg_->index(var);
        MSeries r(reg_);
        for (const auto& [e, c] : c_)
            if (e[vi] % 2 == 0) r.c_[e] = c;
        return r;
    }

    // Lowest exponent of var among nonzero terms; -1 when the series is zero.
    int valuation(const std::string& var) const {
        int vi = reg_->index(var);
        int m = -1;
        for (const auto& [e, c] : c_) {
            (void)c;
            if (m < 0 || e[vi] < m) m = e[vi];
        }
        return m;
    }

    int max_exponent(const std::string& var) const {
        int vi = reg_->index(var);
        int m = -1;
        for (const auto& [e, c] : c_) {
            (void)c;
            if (e[vi] > m) m = e[vi];
        }
        return m;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : c_) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (int i = 0; i < reg_->size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += reg_->name(i);
                if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) out += rat_to_string(c);
            else if (c == 1) out += mono;
            else if (c == -1) out += "-" + mono;
            else out += rat_to_string(c) + "*" + mono;
        }
        return out;
    }

private:
    void check_reg(const MSeries& other) const {
        if (!(*reg_ == *other.reg_)) throw RegistryMismatch("series registries differ");
    }

    void accum(const Expo& e, const Rat& c) {
        auto [it, inserted] = c_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) c_.erase(it);
        } else if (sgn(c) == 0) {
            c_.erase(it);
        }
    }

    RegistryPtr reg_;
    Map c_;
};

} // namespace verlab
