#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace osgood {

/// Thrown when a quadrature or iterative solver cannot reach its requested
/// tolerance; carries the tolerance it did achieve.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double achieved, double requested)
      : std::runtime_error(what + " (achieved " + std::to_string(achieved) +
                           ", requested " + std::to_string(requested) + ")"),
        achieved_tol(achieved),
        requested_tol(requested) {}
  double achieved_tol;
  double requested_tol;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

/// Adaptive Gauss-Kronrod integration of f on [a,b] to the given relative
/// tolerance (falls back to an absolute floor for near-zero integrals).
/// Throws NumericError if the error estimate does not meet the request.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol, double abs_floor = 1e-300);

/// Same, but does not throw; caller inspects the error estimate.
QuadratureResult integrate_no_throw(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol);

/// Finds x in [lo, hi] with f(x) = target for strictly monotone f.
/// Terminates when |f(x) - target| <= value_tol(f(x)) or the bracket is
/// exhausted at double resolution. `increasing` states the monotonicity.
double solve_monotone(const std::function<double(double)>& f, double lo,
                      double hi, double target, bool increasing,
                      const std::function<double(double)>& value_tol,
                      int max_iter = 200);

/// Deterministic pairwise (fixed binary tree) sum; the result depends only on
/// the order of `terms`, never on thread count.
double pairwise_sum(std::span<const double> terms);

/// Runs fn(i) for i in [0, n) on `threads` threads with a fixed block
/// partition. Each index writes only its own output slot, so results are
/// identical for any thread count.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

/// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

}  // namespace osgood
