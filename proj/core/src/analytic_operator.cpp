#include <cmath>
#include <numbers>
#include <stdexcept>

#include "freeclt/analytic.hpp"
#include "freeclt/errors.hpp"

namespace freeclt::analytic {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex cut_sqrt4(Complex z) { return std::sqrt(z - 2.0) * std::sqrt(z + 2.0); }

// Standard semicircle: G = (z - s)/2 = 2/(z + s), G' = -G/s, G'' = 2/s^3,
// s = sqrt(z^2 - 4).
Complex chi_g(Complex z) { return 2.0 / (z + cut_sqrt4(z)); }
Complex chi_dg(Complex z) { return -chi_g(z) / cut_sqrt4(z); }
Complex chi_d2g(Complex z) {
  const Complex s = cut_sqrt4(z);
  return 2.0 / (s * s * s);
}

double beta_for(double alpha) {
  if (alpha != 2.0) {
    throw std::invalid_argument("transition_omega: only alpha = 2 is supported");
  }
  return 1.0 / std::numbers::sqrt2;
}

}  // namespace

Complex AnalyticFunction::d(Complex z) const {
  if (derivative) return derivative(z);
  const double h = 1e-6 * std::max(1.0, std::abs(z));
  return (value(z + h) - value(z - h)) / (2.0 * h);
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<Complex> coefficients) {
  AnalyticFunction f;
  f.value = [c = coefficients](Complex w) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + *it;
    return acc;
  };
  f.derivative = [c = std::move(coefficients)](Complex w) {
    Complex acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * w + static_cast<double>(i) * c[i];
    return acc;
  };
  return f;
}

AnalyticFunction AnalyticFunction::zero() {
  return {[](Complex) { return Complex(0.0); }, [](Complex) { return Complex(0.0); }};
}

Complex transition_omega(Complex z, double alpha) {
  const double beta = beta_for(alpha);
  if (!(z.imag() > 0.0)) {
    throw DomainError("transition_omega: z must lie in the upper half-plane");
  }
  // K_chi(w) = w + 1/w in closed form.
  const Complex w = beta * chi_g(z);
  return w + 1.0 / w;
}

Complex transition_omega_derivative(Complex z, double alpha) {
  const double h = 1e-6 * std::max(1.0, std::abs(z));
  const double step = std::min(h, 0.5 * z.imag());
  return (transition_omega(z + step, alpha) - transition_omega(z - step, alpha)) / (2.0 * step);
}

Complex dt_action_on_psi(const AnalyticFunction& psi, Complex z) {
  return 2.0 * psi(transition_omega(z)) * transition_omega_derivative(z);
}

AnalyticFunction semicircle_eigen_psi(Complex a, double phase) {
  const Complex rot = std::exp(kI * phase);
  AnalyticFunction f;
  f.value = [a, rot](Complex z) { return rot * chi_dg(z) * std::pow(chi_g(z), a); };
  f.derivative = [a, rot](Complex z) {
    const Complex g = chi_g(z);
    const Complex dg = chi_dg(z);
    return rot * (chi_d2g(z) * std::pow(g, a) + a * dg * dg * std::pow(g, a - 1.0));
  };
  return f;
}

double pde_theorem_check(const AnalyticMeasure& nu, const AnalyticFunction& psi, Complex z,
                         double t) {
  const Complex lhs = nu.cauchy_derivative(z) * psi(nu.cauchy(z));
  const Complex dgdt = (deformed_cauchy(nu, psi, z, t) - deformed_cauchy(nu, psi, z, -t)) / (2.0 * t);
  return std::abs(lhs + dgdt);
}

Complex perturbation_psi(const AnalyticMeasure& mu, const AnalyticMeasure& nu, Complex w) {
  const Complex k = invert_K(mu, w);
  return (nu.cauchy(k) - mu.cauchy(k)) / mu.cauchy_derivative(k);
}

double perturbation_remainder(const AnalyticMeasure& mu, const AnalyticMeasure& nu, Complex w,
                              double eps) {
  const AnalyticMeasure mixed = AnalyticMeasure::mix(mu, nu, eps);
  const Complex exact = r_transform(mixed, w);
  const Complex linear = r_transform(mu, w) - eps * perturbation_psi(mu, nu, w);
  return std::abs(exact - linear);
}

Complex reconstruct_cauchy(const AnalyticMeasure& mu, const AnalyticMeasure& nu, Complex z) {
  const Complex g = mu.cauchy(z);
  return g + perturbation_psi(mu, nu, g) * mu.cauchy_derivative(z);
}

bool EigenParameter::admissible() const {
  return x() >= 1.0 || (x() >= -1.0 && y() == 0.0);
}

Complex eigen_cauchy(const EigenParameter& params, Complex z) {
  if (z.imag() == 0.0) {
    throw DomainError("eigen_cauchy: z must lie off the real axis");
  }
  const Complex s = cut_sqrt4(z);
  return std::exp(kI * params.phase) * std::pow(2.0 / (z + s), params.exponent) / s;
}

double eigen_density(const EigenParameter& params, double t) {
  const double x = params.x();
  const double y = params.y();
  const double phi = params.phase;
  if (std::abs(t) == 2.0) {
    throw DomainError("eigen_density: singular at t = +-2");
  }
  if (std::abs(t) < 2.0) {
    const double theta = std::acos(t / 2.0);
    return std::exp(y * theta) * std::cos(x * theta - phi) / std::sqrt(4.0 - t * t);
  }
  const double root = std::sqrt(t * t - 4.0);
  const double w = 0.5 * (std::abs(t) - root);
  if (t > 2.0) {
    return -std::pow(w, x) * std::sin(phi + y * std::log(w)) / root;
  }
  return std::pow(w, x) * std::exp(y * std::numbers::pi) *
         std::sin(phi + y * std::log(w) - x * std::numbers::pi) / root;
}

std::vector<double> necessary_condition_probe(const EigenParameter& params, double angle,
                                              const std::vector<double>& radii) {
  std::vector<double> out;
  out.reserve(radii.size());
  const Complex rot = std::exp(kI * params.phase);
  for (double r : radii) {
    const Complex z = std::polar(r, angle);
    out.push_back(std::abs(z * rot * std::pow(z, params.exponent)));
  }
  return out;
}

double classical_fourier_check(unsigned n, double t) {
  const double beta = 1.0 / std::numbers::sqrt2;
  const Complex in = std::pow(kI, static_cast<int>(n));
  const double bt = beta * t;
  const Complex lhs = 2.0 * in * std::pow(bt, static_cast<int>(n)) * std::exp(-bt * bt);
  const Complex rhs = std::pow(2.0, 1.0 - 0.5 * n) * in * std::pow(t, static_cast<int>(n)) *
                      std::exp(-0.5 * t * t);
  return std::abs(lhs - rhs);
}

}  // namespace freeclt::analytic
