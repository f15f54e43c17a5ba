#include "osgood/weights.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "osgood/quadrature.hpp"

namespace osgood {

namespace {

constexpr double kUMax = 710.0;    // log-rho reach of the tables
constexpr int kPanels = 4096;
constexpr double kPhiFloor = 1e-9;  // smallest y the phi tables serve
constexpr double kInf = std::numeric_limits<double>::infinity();

using Gauss = boost::math::quadrature::gauss<double, 15>;

template <typename F>
double gauss15(const F& f, double a, double b) {
  if (a == b) return 0.0;
  const auto& xs = Gauss::abscissa();
  const auto& ws = Gauss::weights();
  const double c = 0.5 * (a + b);
  const double hh = 0.5 * (b - a);
  double sum = ws[0] * f(c);
  for (std::size_t k = 1; k < xs.size(); ++k) {
    sum += ws[k] * (f(c + hh * xs[k]) + f(c - hh * xs[k]));
  }
  return hh * sum;
}

double logaddexp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

/// log of int_a^b e^{E(u)} du for exponents far outside double range.
template <typename F>
double gauss15_log(const F& log_f, double a, double b) {
  if (a == b) return -kInf;
  const auto& xs = Gauss::abscissa();
  const auto& ws = Gauss::weights();
  const double c = 0.5 * (a + b);
  const double hh = 0.5 * (b - a);
  double es[15];
  double wt[15];
  int n = 0;
  es[n] = log_f(c);
  wt[n++] = ws[0];
  for (std::size_t k = 1; k < xs.size(); ++k) {
    es[n] = log_f(c + hh * xs[k]);
    wt[n++] = ws[k];
    es[n] = log_f(c - hh * xs[k]);
    wt[n++] = ws[k];
  }
  double m = -kInf;
  for (int i = 0; i < n; ++i) m = std::max(m, es[i]);
  if (m == -kInf) return -kInf;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += wt[i] * std::exp(es[i] - m);
  return m + std::log(hh * sum);
}

}  // namespace

WeightCalculus::WeightCalculus(Modulus m, double lambda, double q)
    : m_(std::move(m)), lambda_(lambda), q_(q) {
  if (!(lambda_ > 0.0) || !(q_ > 0.0)) {
    throw std::invalid_argument("WeightCalculus: lambda and q must be > 0");
  }
  if (m_.kind() == ModulusKind::Custom &&
      !check_modulus_axioms(m_, 64).all()) {
    throw std::invalid_argument(
        "WeightCalculus: custom modulus fails the axiom checks");
  }
  rho_floor_ = 1.0 / m_.s_max();
  u0_ = -std::log(m_.s_max());
  du_ = (kUMax - u0_) / kPanels;

  // Theta(u) = int_{u0}^{u} e^{-v} / omega(e^{-v}) dv, prefix over panels.
  const auto theta_integrand = [this](double v) {
    const double s = std::exp(-v);
    return s / m_(s);
  };
  theta_nodes_.resize(kPanels + 1);
  theta_nodes_[0] = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double a = u0_ + i * du_;
    theta_nodes_[i + 1] =
        theta_nodes_[i] + gauss15(theta_integrand, a, a + du_);
  }

  // phi(y) = -(1/lambda) int_{u0}^{u_y} e^{E(u)} du after substituting the
  // integration variable through theta; E stays in double range even where
  // psi itself overflows.
  const auto phi_exponent = [this](double u) {
    const double s = std::exp(-u);
    return -theta_at_u(u) / (lambda_ * q_) - std::log(m_(s));
  };
  philog_nodes_.resize(kPanels + 1);
  philog_nodes_[0] = -kInf;
  for (int i = 0; i < kPanels; ++i) {
    const double a = u0_ + i * du_;
    philog_nodes_[i + 1] = logaddexp(
        philog_nodes_[i], gauss15_log(phi_exponent, a, a + du_));
  }
}

double WeightCalculus::theta_at_u(double u) const {
  const auto theta_integrand = [this](double v) {
    const double s = std::exp(-v);
    return s / m_(s);
  };
  if (u <= u0_) return 0.0;
  if (u > kUMax) {
    throw std::range_error("theta: rho beyond table reach");
  }
  const int i = std::min(kPanels - 1, static_cast<int>((u - u0_) / du_));
  const double a = u0_ + i * du_;
  return theta_nodes_[i] + gauss15(theta_integrand, a, u);
}

double WeightCalculus::theta(double rho) const {
  if (!(rho >= rho_floor_ * (1.0 - 1e-12))) {
    throw std::domain_error("theta: rho below the modulus domain floor");
  }
  if (rho <= rho_floor_) return 0.0;
  return theta_at_u(std::log(rho));
}

double WeightCalculus::theta_inv_u(double x) const {
  if (!(x >= 0.0)) throw std::domain_error("theta_inv: x must be >= 0");
  if (x == 0.0) return u0_;
  if (x > theta_nodes_.back()) {
    throw std::range_error("theta_inv: x too large for the modulus");
  }
  const auto it =
      std::upper_bound(theta_nodes_.begin(), theta_nodes_.end(), x);
  const int i = static_cast<int>(it - theta_nodes_.begin()) - 1;
  const double a = u0_ + i * du_;
  const double b = std::min(kUMax, a + du_);
  const auto f = [this](double u) { return theta_at_u(u); };
  const auto tol = [x](double) { return 0.5e-8 * (1.0 + x); };
  return solve_monotone(f, a, b, x, /*increasing=*/true, tol);
}

double WeightCalculus::theta_inv(double x) const {
  const double u = theta_inv_u(x);
  if (u > 709.7) {
    throw std::range_error("theta_inv: result overflows double");
  }
  return std::exp(u);
}

double WeightCalculus::psi_log(double y) const {
  if (!(y > 0.0 && y <= 1.0)) {
    throw std::domain_error("psi: y must lie in (0,1]");
  }
  return theta_inv_u(-lambda_ * q_ * std::log(y));
}

double WeightCalculus::psi(double y) const {
  const double u = psi_log(y);
  if (u > 709.7) throw std::range_error("psi: value overflows double");
  return std::exp(u);
}

double WeightCalculus::phi_log_integral(double u) const {
  const auto phi_exponent = [this](double v) {
    const double s = std::exp(-v);
    return -theta_at_u(v) / (lambda_ * q_) - std::log(m_(s));
  };
  if (u <= u0_) return -kInf;
  const int i = std::min(kPanels - 1, static_cast<int>((u - u0_) / du_));
  const double a = u0_ + i * du_;
  return logaddexp(philog_nodes_[i], gauss15_log(phi_exponent, a, u));
}

double WeightCalculus::phi_log_abs(double y) const {
  if (!(y > 0.0 && y <= 1.0)) {
    throw std::domain_error("phi: y must lie in (0,1]");
  }
  if (y < kPhiFloor) {
    throw NumericError("phi: y below the table floor", y, kPhiFloor);
  }
  const double x = -lambda_ * q_ * std::log(y);
  const double u = theta_inv_u(x);
  return phi_log_integral(u) - std::log(lambda_);
}

double WeightCalculus::phi(double y) const {
  const double l = phi_log_abs(y);
  if (l > 709.7) throw std::range_error("phi: value overflows double");
  return -std::exp(l);
}

double WeightCalculus::phi_prime(double y) const { return q_ * psi(y); }

double WeightCalculus::log_h(double tau, double z) const {
  if (!(tau > 0.0)) throw std::domain_error("h: tau must be > 0");
  if (!(z > 0.0 && z < 1.0)) throw std::domain_error("h: z must be in (0,1)");
  // -2 tau phi(z)/z + log phi'(z); the first term may be gigantic but its
  // double value is what downstream admissibility comparisons need.
  const double labs = phi_log_abs(z);
  const double first = 2.0 * tau * std::exp(labs) / z;
  return first + std::log(q_) + psi_log(z);
}

double WeightCalculus::h_weight(double tau, double z) const {
  const double lh = log_h(tau, z);
  if (lh > 709.7) return kInf;
  return std::exp(lh);
}

double WeightCalculus::h_inv_log(double tau, double log_y) const {
  const double z_lo = 1e-8;
  const double z_hi = 1.0 - 1e-9;
  const double top = log_h(tau, z_lo);
  const double bot = log_h(tau, z_hi);
  if (!(log_y > bot)) {
    throw std::domain_error("h_inv: y at or below the h floor");
  }
  if (!(log_y < top)) {
    throw std::range_error("h_inv: y beyond the tabulated range of h");
  }
  const auto f = [this, tau](double z) { return log_h(tau, z); };
  const auto tol = [](double) { return 0.5e-6; };
  return solve_monotone(f, z_lo, z_hi, log_y, /*increasing=*/false, tol);
}

double WeightCalculus::h_inv(double tau, double y) const {
  if (!(y > q_)) throw std::domain_error("h_inv: y must exceed q");
  return h_inv_log(tau, std::log(y));
}

double WeightCalculus::Lambda_log_abs(double zeta) const {
  if (!(zeta >= 1.0)) throw std::domain_error("Lambda: y must be >= 1");
  if (zeta > 1.0 / kPhiFloor) {
    throw NumericError("Lambda: y beyond the phi table floor", zeta,
                       1.0 / kPhiFloor);
  }
  return std::log(zeta) + phi_log_abs(1.0 / zeta);
}

double WeightCalculus::Lambda(double y) const {
  if (y == 1.0) return 0.0;
  const double l = Lambda_log_abs(y);
  if (l > 709.7) throw std::range_error("Lambda: value overflows double");
  return -std::exp(l);
}

double WeightCalculus::Lambda_inv(double x) const {
  if (!(x <= 0.0)) throw std::domain_error("Lambda_inv: x must be <= 0");
  if (x == 0.0) return 1.0;
  const double y_hi = 1.0 / kPhiFloor;
  if (x < Lambda(y_hi)) {
    throw std::range_error("Lambda_inv: x below the tabulated range");
  }
  const auto f = [this](double y) { return Lambda(y); };
  const auto tol = [x](double) { return 0.5e-6 * (1.0 + std::abs(x)); };
  return solve_monotone(f, 1.0, y_hi, x, /*increasing=*/false, tol);
}

double WeightCalculus::max_residual_phi_ode(
    std::span<const double> grid) const {
  double worst = 0.0;
  for (double y : grid) {
    if (!(y >= 1e-3 && y <= 1.0 - 1e-3)) {
      throw std::domain_error("check_phi_ode: grid point outside (1e-3, 1-1e-3)");
    }
    const double h = 1e-4 * y;
    const double second =
        (phi_prime(y + h) - phi_prime(y - h)) / (2.0 * h);
    const double fp = phi_prime(y);
    const double rhs = lambda_ * fp * fp * m_(q_ / fp);
    const double resid = std::abs(y * second + rhs) / (1.0 + std::abs(rhs));
    worst = std::max(worst, resid);
  }
  return worst;
}

double closed_form_psi_sec4(double lambda, double q, double y) {
  if (!(y > 0.0 && y <= 1.0)) {
    throw std::domain_error("closed_form_psi_sec4: y must lie in (0,1]");
  }
  const double w = std::pow(y, -lambda * q);
  // exp(e^w - 1) must stay below DBL_MAX.
  const double w_cap = std::log(709.7 + 1.0);
  if (w > w_cap) {
    throw std::range_error(
        "closed_form_psi_sec4: overflow; smallest representable y is " +
        std::to_string(std::pow(w_cap, -1.0 / (lambda * q))));
  }
  return std::exp(std::expm1(w));
}

}  // namespace osgood
