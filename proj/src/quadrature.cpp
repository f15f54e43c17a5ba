#include "osgood/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <thread>

namespace osgood {

namespace {
using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
}

QuadratureResult integrate_no_throw(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol) {
  QuadratureResult r;
  if (a == b) return r;
  double err = 0.0;
  r.value = GK::integrate(f, a, b, 15, rel_tol, &err);
  r.error = err;
  return r;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol, double abs_floor) {
  QuadratureResult r = integrate_no_throw(f, a, b, rel_tol);
  const double scale = std::max(std::abs(r.value), abs_floor);
  if (!std::isfinite(r.value) || r.error > 10.0 * rel_tol * scale) {
    throw NumericError("quadrature did not converge",
                       r.error / scale, rel_tol);
  }
  return r;
}

double solve_monotone(const std::function<double(double)>& f, double lo,
                      double hi, double target, bool increasing,
                      const std::function<double(double)>& value_tol,
                      int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (!increasing) {
    std::swap(lo, hi);
    std::swap(flo, fhi);
  }
  // After the swap the function is increasing from lo to hi along the
  // traversal direction; brackets may be reversed in x.
  if ((target < std::min(flo, fhi)) || (target > std::max(flo, fhi))) {
    throw std::range_error("solve_monotone: target outside bracket");
  }
  double best = lo;
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket exhausted
    const double fm = f(mid);
    best = mid;
    if (std::abs(fm - target) <= value_tol(fm)) return mid;
    if (fm < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return best;
}

double pairwise_sum(std::span<const double> terms) {
  const std::size_t n = terms.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t k =
      std::min<std::size_t>(std::max(threads, 1), n);
  if (k == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(k);
  const std::size_t chunk = (n + k - 1) / k;
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_slope: need >= 2 paired samples");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_slope: degenerate x data");
  return sxy / sxx;
}

}  // namespace osgood
