#ifndef QDECAY_ERRORS_HPP
#define QDECAY_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace qdecay {

/// Thrown when an input violates a physical or mathematical precondition
/// (superluminal velocity, non-positive width, bad parameter ordering, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a numerical procedure fails to converge. Carries the best
/// available partial result and its estimated error so callers can decide
/// whether to salvage it.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, std::complex<double> partial,
                   double error_estimate)
        : std::runtime_error(what), partial_(partial), error_estimate_(error_estimate) {}

    std::complex<double> partial() const { return partial_; }
    double error_estimate() const { return error_estimate_; }

private:
    std::complex<double> partial_{0.0, 0.0};
    double error_estimate_ = 0.0;
};

} // namespace qdecay

#endif
