#pragma once

#include <stdexcept>
#include <string>

namespace cym {

// Input outside the declared domain of a model or operation.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A declared symmetry (hermitian, totally symmetric, ...) does not hold.
class symmetry_error : public std::runtime_error {
public:
    explicit symmetry_error(const std::string& what) : std::runtime_error(what) {}
};

// sqrt(-1) Q(Omega, conj Omega) <= 0: the point carries no metric.
class positivity_error : public std::runtime_error {
public:
    explicit positivity_error(const std::string& what) : std::runtime_error(what) {}
};

// Structural expectation failed (non-MUM operator, non-nilpotent N, ...).
class structure_error : public std::runtime_error {
public:
    explicit structure_error(const std::string& what) : std::runtime_error(what) {}
};

// Singular matrix where an inverse was required.
class inversion_error : public std::runtime_error {
public:
    explicit inversion_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation produced a non-finite value.
class evaluation_error : public std::runtime_error {
public:
    explicit evaluation_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical scheme could not reach the requested accuracy.  Carries the
// best value obtained and its error estimate; see fd_mixed_hessian.
class precision_error : public std::runtime_error {
public:
    precision_error(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

} // namespace cym
