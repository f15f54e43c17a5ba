#include "osgood/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "osgood/quadrature.hpp"

namespace osgood {

namespace {

// LogLogLip is only increasing (and positive) up to s ~ 0.145; 1/8 keeps a
// margin while staying a round binary value.
constexpr double kLogLogLipSMax = 0.125;

double eval_kind(ModulusKind k, double param, double s) {
  switch (k) {
    case ModulusKind::Lipschitz:
      return s;
    case ModulusKind::Hoelder:
      return std::pow(s, param);
    case ModulusKind::LogLip:
      return s * std::log1p(1.0 / s);
    case ModulusKind::LogLogLip: {
      const double l = std::log1p(1.0 / s);
      return s * l * std::log(l);
    }
    case ModulusKind::Sec4: {
      const double l = 1.0 - std::log(s);
      return s * l * std::log(l);
    }
    case ModulusKind::PowerLog:
      return s * std::pow(1.0 - std::log(s), param);
    case ModulusKind::Custom:
      break;
  }
  throw std::logic_error("eval_kind: custom handled by caller");
}

}  // namespace

Modulus::Modulus(ModulusKind k, double s_max, double param, std::string name,
                 std::function<double(double)> f)
    : kind_(k), s_max_(s_max), param_(param), name_(std::move(name)),
      custom_(std::move(f)) {}

Modulus Modulus::lipschitz() {
  return Modulus(ModulusKind::Lipschitz, 1.0, 0.0, "lipschitz");
}

Modulus Modulus::hoelder(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw std::invalid_argument("hoelder: tau must lie in (0,1)");
  }
  return Modulus(ModulusKind::Hoelder, 1.0, tau,
                 "hoelder:" + std::to_string(tau));
}

Modulus Modulus::loglip() {
  return Modulus(ModulusKind::LogLip, 1.0, 0.0, "loglip");
}

Modulus Modulus::logloglip() {
  return Modulus(ModulusKind::LogLogLip, kLogLogLipSMax, 0.0, "logloglip");
}

Modulus Modulus::sec4() {
  return Modulus(ModulusKind::Sec4, std::exp(1.0 - std::exp(1.0)), 0.0,
                 "sec4");
}

Modulus Modulus::powerlog(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("powerlog: p must lie in (0,1)");
  }
  return Modulus(ModulusKind::PowerLog, 1.0, p,
                 "powerlog:" + std::to_string(p));
}

Modulus Modulus::custom(std::function<double(double)> f, double s_max,
                        std::string name) {
  if (!f) throw std::invalid_argument("custom: empty evaluator");
  if (!(s_max > 0.0 && s_max <= 1.0)) {
    throw std::invalid_argument("custom: s_max must lie in (0,1]");
  }
  return Modulus(ModulusKind::Custom, s_max, 0.0, std::move(name),
                 std::move(f));
}

Modulus Modulus::parse(std::string_view name) {
  if (name == "lipschitz") return lipschitz();
  if (name == "loglip") return loglip();
  if (name == "logloglip") return logloglip();
  if (name == "sec4") return sec4();
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const std::string head(name.substr(0, colon));
    const std::string arg(name.substr(colon + 1));
    try {
      if (head == "hoelder") return hoelder(std::stod(arg));
      if (head == "powerlog") return powerlog(std::stod(arg));
    } catch (const std::invalid_argument&) {
      // fall through to the common diagnostic
    }
  }
  throw std::invalid_argument("unknown modulus name: " + std::string(name));
}

double Modulus::operator()(double s) const {
  if (!(s > 0.0)) throw std::domain_error("modulus: s must be positive");
  const double x = std::min(s, s_max_);
  if (kind_ == ModulusKind::Custom) return custom_(x);
  return eval_kind(kind_, param_, x);
}

double osgood_integral(const Modulus& m, double eps) {
  const double upper = m.kind() == ModulusKind::Sec4 ? m.s_max() : 1.0;
  if (!(eps > 0.0 && eps <= upper)) {
    throw std::domain_error("osgood_integral: eps outside (0, upper]");
  }
  if (eps == upper) return 0.0;
  // Substitute s = e^{-u}; the 1/mu singularity at s -> 0 becomes an O(1)
  // integrand in u. Split at s_max where the constant extension kicks in.
  const auto g = [&m](double u) {
    const double s = std::exp(-u);
    return s / m(s);
  };
  const double u_lo = -std::log(upper);
  const double u_hi = -std::log(eps);
  const double u_break = -std::log(m.s_max());
  double total = 0.0;
  if (u_break > u_lo && u_break < u_hi) {
    total += integrate(g, u_lo, u_break, 1e-9).value;
    total += integrate(g, u_break, u_hi, 1e-9).value;
  } else {
    total += integrate(g, u_lo, u_hi, 1e-9).value;
  }
  return total;
}

std::string to_string(OsgoodClass c) {
  switch (c) {
    case OsgoodClass::Osgood: return "Osgood";
    case OsgoodClass::NonOsgood: return "NonOsgood";
    case OsgoodClass::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

OsgoodClass classify_osgood(const Modulus& m) {
  const double upper = m.kind() == ModulusKind::Sec4 ? m.s_max() : 1.0;
  std::vector<double> values;
  for (int k = 1; k <= 12; ++k) {
    const double eps = std::min(std::pow(10.0, -k), upper);
    values.push_back(osgood_integral(m, eps));
  }
  std::vector<double> inc;
  for (std::size_t i = 1; i < values.size(); ++i) {
    inc.push_back(values[i] - values[i - 1]);
  }
  bool diverging = true;
  for (std::size_t i = 0; i < inc.size(); ++i) {
    if (!(inc[i] >= 1e-3 * values[i + 1])) {
      diverging = false;
      break;
    }
  }
  if (diverging) return OsgoodClass::Osgood;
  // Convergence: geometric decay of the decade increments, or an already
  // negligible last increment.
  if (inc.back() < 1e-6) return OsgoodClass::NonOsgood;
  double worst_ratio = 0.0;
  for (std::size_t i = inc.size() - 3; i + 1 < inc.size(); ++i) {
    if (inc[i] <= 0.0) return OsgoodClass::NonOsgood;
    worst_ratio = std::max(worst_ratio, inc[i + 1] / inc[i]);
  }
  if (worst_ratio <= 0.8) return OsgoodClass::NonOsgood;
  return OsgoodClass::Inconclusive;
}

RegularityReport seminorm(std::span<const double> times,
                          std::span<const double> values, const Modulus& m) {
  if (times.size() != values.size()) {
    throw std::invalid_argument("seminorm: times/values size mismatch");
  }
  if (times.size() < 2) {
    throw std::invalid_argument("seminorm: need at least 2 samples");
  }
  RegularityReport rep;
  for (std::size_t i = 0; i < times.size(); ++i) {
    for (std::size_t j = i + 1; j < times.size(); ++j) {
      const double gap = std::abs(times[i] - times[j]);
      if (!(gap > 0.0 && gap < 1.0)) continue;
      const double ratio = std::abs(values[i] - values[j]) / m(gap);
      if (ratio > rep.seminorm) {
        rep.seminorm = ratio;
        rep.witness_t = times[i];
        rep.witness_s = times[j];
      }
    }
  }
  return rep;
}

AxiomReport check_modulus_axioms(const Modulus& m, int grid_size) {
  if (grid_size < 3) {
    throw std::invalid_argument("check_modulus_axioms: grid_size >= 3");
  }
  const double s_hi = m.s_max();
  const double s_lo = s_hi * 1e-8;
  std::vector<double> grid(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double t = static_cast<double>(i) / (grid_size - 1);
    grid[i] = s_lo * std::pow(s_hi / s_lo, t);
  }
  AxiomReport rep;
  rep.monotone = true;
  for (int i = 0; i + 1 < grid_size; ++i) {
    if (!(m(grid[i]) < m(grid[i + 1]))) rep.monotone = false;
  }
  rep.concave = true;
  for (int i = 0; i < grid_size; ++i) {
    for (int j = i + 1; j < grid_size; ++j) {
      const double mid = 0.5 * (grid[i] + grid[j]);
      const double chord = 0.5 * (m(grid[i]) + m(grid[j]));
      if (m(mid) < chord * (1.0 - 1e-12)) {
        rep.concave = false;
        break;
      }
    }
    if (!rep.concave) break;
  }
  rep.vanishes = true;
  double prev = m(std::min(0.1, s_hi));
  for (int k = 2; k <= 15; ++k) {
    const double v = m(std::pow(10.0, -k));
    if (!(v < prev)) rep.vanishes = false;
    prev = v;
  }
  if (!(prev < 1e-6)) rep.vanishes = false;
  return rep;
}

}  // namespace osgood
