#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace osgood {

enum class ModulusKind {
  Lipschitz,   // mu(s) = s
  Hoelder,     // mu(s) = s^tau, tau in (0,1)
  LogLip,      // mu(s) = s log(1 + 1/s)
  LogLogLip,   // mu(s) = s log(1 + 1/s) log(log(1 + 1/s)), valid near 0
  Sec4,        // mu(s) = s (1 - log s) log(1 - log s) on (0, e^{1-e}]
  PowerLog,    // mu(s) = s (1 - log s)^p, p in (0,1); Osgood, not Lipschitz
  Custom,
};

/// A modulus of continuity: continuous, increasing, concave, mu(0) = 0,
/// evaluable on (0, s_max]. For s > s_max evaluation extends by the constant
/// mu(s_max). Values are immutable after construction.
class Modulus {
 public:
  static Modulus lipschitz();
  static Modulus hoelder(double tau);
  static Modulus loglip();
  static Modulus logloglip();
  static Modulus sec4();
  static Modulus powerlog(double p);
  static Modulus custom(std::function<double(double)> f, double s_max,
                        std::string name = "custom");

  /// Parses the config-file names: "lipschitz", "hoelder:<tau>", "loglip",
  /// "logloglip", "sec4", "powerlog:<p>". Throws std::invalid_argument.
  static Modulus parse(std::string_view name);

  /// mu(s); constant extension above s_max; throws std::domain_error
  /// for s <= 0.
  double operator()(double s) const;

  ModulusKind kind() const { return kind_; }
  double s_max() const { return s_max_; }
  double parameter() const { return param_; }  // tau or p where applicable
  const std::string& name() const { return name_; }

 private:
  Modulus(ModulusKind k, double s_max, double param, std::string name,
          std::function<double(double)> f = {});

  ModulusKind kind_;
  double s_max_;
  double param_;
  std::string name_;
  std::function<double(double)> custom_;
};

/// Truncated Osgood integral: int_eps^upper ds / mu(s), where the upper limit
/// is 1 except for Sec4 (its s_max). Relative tolerance 1e-9.
double osgood_integral(const Modulus& m, double eps);

enum class OsgoodClass { Osgood, NonOsgood, Inconclusive };

std::string to_string(OsgoodClass c);

/// Desk-precision divergence detector over eps = 10^{-k}, k = 1..12.
/// Osgood when every decade's increment stays above 1e-3 of the running
/// total; NonOsgood when the increments decay geometrically (tail ratio
/// <= 0.8) or the last increment is below 1e-6.
OsgoodClass classify_osgood(const Modulus& m);

struct RegularityReport {
  double seminorm = 0.0;
  double witness_t = 0.0;
  double witness_s = 0.0;
};

/// sup over sampled pairs with 0 < |t-s| < 1 of |f(t)-f(s)| / mu(|t-s|).
RegularityReport seminorm(std::span<const double> times,
                          std::span<const double> values, const Modulus& m);

struct AxiomReport {
  bool monotone = false;
  bool concave = false;
  bool vanishes = false;
  bool all() const { return monotone && concave && vanishes; }
};

/// Evaluates the modulus axioms on a log-spaced grid of the given size.
AxiomReport check_modulus_axioms(const Modulus& m, int grid_size);

}  // namespace osgood
