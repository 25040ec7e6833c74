#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "verlab/errors.hpp"

namespace verlab {

// Ordered variable set with per-variable truncation order (maximum retained
// exponent). Fixed at creation; every binary series operation requires the
// two operands to carry equal registries.
class VarRegistry {
public:
    static constexpr int max_vars = 4;

    VarRegistry(std::initializer_list<std::pair<std::string, int>> vars) {
        for (const auto& [name, order] : vars) add(name, order);
    }
    VarRegistry() = default;

    void add(const std::string& name, int order) {
        if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
        if (size() >= max_vars) throw std::length_error("too many variables");
        if (find(name) >= 0) throw std::invalid_argument("duplicate variable " + name);
        names_.push_back(name);
        orders_.push_back(order);
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    int order(int i) const { return orders_[static_cast<std::size_t>(i)]; }

    int find(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (names_[static_cast<std::size_t>(i)] == name) return i;
        return -1;
    }
    int index(const std::string& name) const {
        int i = find(name);
        if (i < 0) throw std::invalid_argument("unknown variable " + name);
        return i;
    }

    int total_order() const {
        int t = 0;
        for (int o : orders_) t += o;
        return t;
    }

    friend bool operator==(const VarRegistry& a, const VarRegistry& b) {
        return a.names_ == b.names_ && a.orders_ == b.orders_;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> orders_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

inline RegistryPtr make_registry(std::initializer_list<std::pair<std::string, int>> vars) {
    return std::make_shared<const VarRegistry>(vars);
}

// Exponent tuple; unused slots stay zero so ordering is well defined.
struct Expo {
    std::array<std::int16_t, VarRegistry::max_vars> e{};

    std::int16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    std::int16_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Expo& a, const Expo& b) { return a.e == b.e; }
    friend bool operator<(const Expo& a, const Expo& b) { return a.e < b.e; }

    friend Expo operator+(const Expo& a, const Expo& b) {
        Expo r;
        for (int i = 0; i < VarRegistry::max_vars; ++i) r.e[static_cast<std::size_t>(i)] =
            static_cast<std::int16_t>(a.e[static_cast<std::size_t>(i)] + b.e[static_cast<std::size_t>(i)]);
        return r;
    }

    bool is_zero() const {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }
};

} // namespace verlab
