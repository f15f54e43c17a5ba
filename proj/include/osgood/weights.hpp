#pragma once

#include <span>
#include <vector>

#include "osgood/modulus.hpp"

namespace osgood {

/// The weight calculus built from an Osgood modulus omega and parameters
/// (lambda, q):
///
///   theta(rho) = int_{1/rho}^{s_max} ds / omega(s)        (increasing, 0 at floor)
///   psi(y)     = theta^{-1}(-lambda q log y)              (decreasing, >= 1/s_max)
///   phi(y)     = q int_1^y psi(z) dz                      (increasing, <= 0)
///   h(z)       = e^{-2 tau phi(z)/z} phi'(z)              (decreasing, > q)
///   Lambda(y)  = y phi(1/y)                               (decreasing, 0 at 1)
///
/// Everything is table-backed over u = log(rho); inverses are bisections on
/// certified-monotone maps. The *_log companions evaluate logarithms of
/// quantities whose plain values overflow double for large lambda*q — the
/// conditional-stability constants live in that regime.
///
/// Immutable after construction; safe for concurrent reads.
class WeightCalculus {
 public:
  WeightCalculus(Modulus m, double lambda, double q);

  double theta(double rho) const;
  double theta_inv(double x) const;

  double psi(double y) const;
  double psi_log(double y) const;  // log psi(y), defined whenever theta reaches

  double phi(double y) const;          // y in [1e-9, 1]
  double phi_log_abs(double y) const;  // log(-phi(y)); -inf at y = 1
  double phi_prime(double y) const;    // = q psi(y)

  double h_weight(double tau, double z) const;  // may overflow to +inf
  double log_h(double tau, double z) const;
  double h_inv(double tau, double y) const;
  double h_inv_log(double tau, double log_y) const;

  double Lambda(double y) const;      // y >= 1
  double Lambda_inv(double x) const;  // x <= 0
  double Lambda_log_abs(double zeta) const;

  /// Max relative residual of y phi'' = -lambda (phi')^2 omega(q/phi') over
  /// the grid, with phi'' by central differences of phi_prime.
  double max_residual_phi_ode(std::span<const double> grid) const;

  const Modulus& modulus() const { return m_; }
  double lambda() const { return lambda_; }
  double q() const { return q_; }
  double rho_floor() const { return rho_floor_; }

 private:
  double theta_at_u(double u) const;      // Theta(u) = theta(e^u)
  double theta_inv_u(double x) const;     // u with Theta(u) = x
  double phi_log_integral(double u) const;  // log int_{u0}^{u} g, see .cpp

  Modulus m_;
  double lambda_;
  double q_;
  double rho_floor_;  // 1 / s_max
  double u0_;         // log(rho_floor)
  double du_;
  std::vector<double> theta_nodes_;    // Theta at u0 + i du
  std::vector<double> philog_nodes_;   // log-prefix of the phi integrand
};

/// Section-4 closed form psi_{lambda,q}(y) = exp(e^{y^{-lambda q}} - 1).
/// Throws std::range_error on overflow, reporting the smallest safe y.
double closed_form_psi_sec4(double lambda, double q, double y);

}  // namespace osgood
