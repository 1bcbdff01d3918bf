#pragma once

#include <stdexcept>
#include <string>

namespace windsum {

/// Thrown when an adaptive routine exhausts its subdivision budget before
/// reaching the requested tolerance. Carries the best estimate it reached.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double estimate,
                  double achieved_error, double requested_tol)
        : std::runtime_error(what),
          estimate_(estimate),
          achieved_error_(achieved_error),
          requested_tol_(requested_tol) {}

    double estimate() const { return estimate_; }
    double achieved_error() const { return achieved_error_; }
    double requested_tol() const { return requested_tol_; }

private:
    double estimate_;
    double achieved_error_;
    double requested_tol_;
};

}  // namespace windsum
