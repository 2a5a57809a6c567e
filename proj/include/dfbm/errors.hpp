#pragma once

#include <stdexcept>
#include <string>

namespace dfbm {

/// Input outside an operation's domain (non-finite entries, H outside its order window, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative method failed to converge within its budget.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Resolvent evaluated on the spectrum.
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& what) : DomainError(what) {}
};

/// Requested process order has no matrix approximation.
class UnsupportedOrderError : public DomainError {
public:
    explicit UnsupportedOrderError(const std::string& what) : DomainError(what) {}
};

} // namespace dfbm
