#pragma once

#include <stdexcept>
#include <string>

namespace verlab {

struct RegistryMismatch : std::invalid_argument {
    explicit RegistryMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroConstantTerm : std::domain_error {
    explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

struct NonzeroConstantTerm : std::domain_error {
    explicit NonzeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

struct NotUnitOnePlus : std::domain_error {
    explicit NotUnitOnePlus(const std::string& what) : std::domain_error(what) {}
};

// Raised when a valuation cannot be certified: every coefficient up to the
// truncation bound vanishes, so division/residue would be a guess.
struct IdenticallyZeroWithinTruncation : std::domain_error {
    explicit IdenticallyZeroWithinTruncation(const std::string& what) : std::domain_error(what) {}
};

struct InsufficientTruncation : std::length_error {
    explicit InsufficientTruncation(const std::string& what) : std::length_error(what) {}
};

struct UnsupportedComponent : std::invalid_argument {
    explicit UnsupportedComponent(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateParameters : std::runtime_error {
    explicit DegenerateParameters(const std::string& what) : std::runtime_error(what) {}
};

} // namespace verlab
