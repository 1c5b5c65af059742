#pragma once

// Floating-point layer: Cauchy transforms, their functional inverses, the
// R-transform, free additive convolution, Stieltjes inversion, and the
// linearized free central limit operator acting on analytic functions.
//
// Branch convention throughout: sqrt(z^2 - r^2) is sqrt(z - r) sqrt(z + r)
// with principal roots, which has its cut on [-r, r] and behaves like z at
// infinity, so every closed-form Cauchy transform satisfies G(z) ~ mass / z.

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace freeclt::analytic {

using Complex = std::complex<double>;

class AnalyticMeasure;

struct Semicircle {
  double center = 0.0;
  double radius = 2.0;  // variance radius^2 / 4
};

struct CauchyLaw {
  double location = 0.0;
  double scale = 1.0;
};

/// Signed measure T_n(t/2) / (pi sqrt(4 - t^2)) dt on [-2, 2]; its Cauchy
/// transform is w^n / sqrt(z^2 - 4) with w = (z - sqrt(z^2 - 4)) / 2.
struct ChebyshevEigen {
  unsigned n = 1;
};

/// Piecewise-linear density through (grid[i], values[i]), zero outside.
struct DensityTable {
  std::vector<double> grid;
  std::vector<double> values;
};

struct AtomMixture {
  std::vector<double> points;
  std::vector<double> weights;
};

/// Weighted sum of other measures.
struct Mixture {
  std::vector<std::pair<double, std::shared_ptr<const AnalyticMeasure>>> components;
};

/// A measure on the real line known through its Cauchy transform
/// G(z) = int dmu(t) / (z - t).
class AnalyticMeasure {
 public:
  using Descriptor =
      std::variant<Semicircle, CauchyLaw, ChebyshevEigen, DensityTable, AtomMixture, Mixture>;

  /// Validates the descriptor (positive radius/scale, sorted grid, matching
  /// lengths, ...); throws std::invalid_argument otherwise.
  explicit AnalyticMeasure(Descriptor descriptor);

  static AnalyticMeasure semicircle(double center = 0.0, double radius = 2.0) {
    return AnalyticMeasure(Semicircle{center, radius});
  }
  static AnalyticMeasure cauchy_law(double location = 0.0, double scale = 1.0) {
    return AnalyticMeasure(CauchyLaw{location, scale});
  }
  static AnalyticMeasure chebyshev_eigen(unsigned n) { return AnalyticMeasure(ChebyshevEigen{n}); }
  static AnalyticMeasure atoms(std::vector<double> points, std::vector<double> weights) {
    return AnalyticMeasure(AtomMixture{std::move(points), std::move(weights)});
  }
  static AnalyticMeasure table(std::vector<double> grid, std::vector<double> values) {
    return AnalyticMeasure(DensityTable{std::move(grid), std::move(values)});
  }
  /// (1 - eps) a + eps b
  static AnalyticMeasure mix(const AnalyticMeasure& a, const AnalyticMeasure& b, double eps);

  const Descriptor& descriptor() const { return descriptor_; }
  std::string type_name() const;

  /// G(z) for z off the real line. For z in the lower half-plane this is the
  /// integral itself, so G(conj z) = conj G(z) for real measures.
  /// Throws DomainError when Im z == 0.
  Complex cauchy(Complex z) const;
  Complex cauchy_derivative(Complex z) const;

  double mass() const;
  bool is_positive() const;
  bool compactly_supported() const;
  /// Closed interval containing the support, when compactly supported.
  std::optional<std::pair<double, double>> support_hull() const;
  /// Density at a real point, where the descriptor has one (semicircle,
  /// Cauchy law, table, Chebyshev eigen away from +-2).
  std::optional<double> density(double x) const;

 private:
  Descriptor descriptor_;
};

/// Pushforward under x -> r x (r > 0).
AnalyticMeasure dilate(const AnalyticMeasure& mu, double r);

/// G_mu(z) for z in the upper half-plane; DomainError otherwise.
Complex cauchy_transform(const AnalyticMeasure& mu, Complex z);

struct NewtonOptions {
  int max_iterations = 50;
  double tolerance = 1e-12;
  /// Give up once the residual has grown this many steps in a row.
  int divergence_window = 5;
  /// Post-condition on |G(K(w)) - w|.
  double accept_residual = 1e-10;
};

/// Nontangential sector at 0 inside the lower half-plane:
/// |w| < radius and |arg w + pi/2| < half_angle.
struct StolzRegion {
  double half_angle = 1.0;  // radians, < pi/2
  double radius = 0.4;

  bool contains(Complex w) const;
  /// Deterministic sample of `count` interior points (polar grid).
  std::vector<Complex> sample(std::size_t count) const;
};

/// K_mu(w) = G_mu^{-1}(w) by damped Newton seeded at 1/w, iterates kept in
/// the upper half-plane. Throws InversionFailure on non-convergence.
Complex invert_K(const AnalyticMeasure& mu, Complex w, const NewtonOptions& options = {});

/// R_mu(w) = K_mu(w) - 1/w.
Complex r_transform(const AnalyticMeasure& mu, Complex w, const NewtonOptions& options = {});

/// Stieltjes inversion offsets; the limit eps -> 0 of -(1/pi) Im G(x + i eps)
/// is taken by polynomial (Richardson/Neville) extrapolation through them.
struct StieltjesOptions {
  std::vector<double> offsets{1e-4, 5e-5, 2.5e-5};
};

double stieltjes_density(const std::function<Complex(Complex)>& cauchy, double x,
                         const StieltjesOptions& options = {});

/// Uniform grid lo, ..., hi with `count` points (count >= 2).
struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t count = 2;

  /// Parses "lo:hi:n".
  static Grid parse(const std::string& text);
  std::vector<double> points() const;
};

/// G_{mu boxplus nu}(z) for Im z > 0.
///
/// K_{mu boxplus nu}(g) = K_mu(g) + K_nu(g) - 1/g is inverted through the
/// points a = K_mu(g), b = K_nu(g), which solve
///   G_mu(a) = G_nu(b),   a + b - 1/G_mu(a) = z.
/// Newton on (a, b), continued from z + i*height (where a = b = z is a good
/// seed) down to z.
Complex free_convolution_cauchy(const AnalyticMeasure& mu, const AnalyticMeasure& nu, Complex z);

/// Density table of mu boxplus nu on `grid` by Stieltjes inversion of
/// free_convolution_cauchy. For compactly supported operands, a mass
/// deficit above 1e-3 on the grid is reported as an error.
AnalyticMeasure free_convolve(const AnalyticMeasure& mu, const AnalyticMeasure& nu, const Grid& grid,
                              const StieltjesOptions& options = {});

/// An analytic function with an optional derivative. Without one, callers
/// fall back to central differences.
struct AnalyticFunction {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> derivative;

  Complex operator()(Complex z) const { return value(z); }
  Complex d(Complex z) const;

  /// c0 + c1 w + c2 w^2 + ...
  static AnalyticFunction polynomial(std::vector<Complex> coefficients);
  static AnalyticFunction zero();
};

/// Transition function omega(z) = K_chi(beta G_chi(z)), beta = 2^{-1/alpha}.
/// Only alpha = 2 (chi = standard semicircle) is supported.
Complex transition_omega(Complex z, double alpha = 2.0);
/// omega'(z) by central difference with step 1e-6 max(1, |z|).
Complex transition_omega_derivative(Complex z, double alpha = 2.0);

/// Linearized free central limit operator on the R-side:
/// 2 psi(omega(z)) omega'(z).
Complex dt_action_on_psi(const AnalyticFunction& psi, Complex z);

/// e^{i phase} G_chi'(z) G_chi(z)^a, an eigenfunction of dt_action_on_psi
/// with eigenvalue 2^{1 - (a+1)/2}.
AnalyticFunction semicircle_eigen_psi(Complex a, double phase = 0.0);

/// G(z, t): the inverse of K_nu + t psi evaluated at z, i.e. the g solving
/// g = G_nu(z - t psi(g)), by Newton from g = G_nu(z).
Complex deformed_cauchy(const AnalyticMeasure& nu, const AnalyticFunction& psi, Complex z,
                        double t, const NewtonOptions& options = {});

/// |G_nu'(z) psi(G_nu(z)) + (G(z,t) - G(z,-t)) / (2t)|
double pde_theorem_check(const AnalyticMeasure& nu, const AnalyticFunction& psi, Complex z,
                         double t = 1e-4);

/// psi(w) = K_mu'(w) (G_nu - G_mu)(K_mu(w)): first-order change of R under
/// mu -> (1 - eps) mu + eps nu is -eps psi.
Complex perturbation_psi(const AnalyticMeasure& mu, const AnalyticMeasure& nu, Complex w);

/// |R_{(1-eps) mu + eps nu}(w) - (R_mu(w) - eps psi(w))|
double perturbation_remainder(const AnalyticMeasure& mu, const AnalyticMeasure& nu, Complex w,
                              double eps);

/// G_nu(z) rebuilt as G_mu(z) + psi(G_mu(z)) G_mu'(z).
Complex reconstruct_cauchy(const AnalyticMeasure& mu, const AnalyticMeasure& nu, Complex z);

/// Exponent a = x + i y and phase phi of an eigenfunction of the linearized
/// operator around the semicircle.
struct EigenParameter {
  Complex exponent{1.0, 0.0};
  double phase = 0.0;

  double x() const { return exponent.real(); }
  double y() const { return exponent.imag(); }
  /// Re a >= 1, or (Re a >= -1 and Im a = 0).
  bool admissible() const;
};

/// e^{i phi} w(z)^a / sqrt(z^2 - 4), w = (z - sqrt(z^2 - 4))/2, principal
/// power. For a = n, phi = 0 this is the Cauchy transform of
/// ChebyshevEigen{n}, whose moments are binom(n+2k, k); in terms of the
/// semicircle it equals -G_chi' G_chi^{a-1}.
Complex eigen_cauchy(const EigenParameter& params, Complex z);

/// Boundary values -Im eigen_cauchy(t + i0):
///   |t| < 2:  exp(y theta) cos(x theta - phi) / sqrt(4 - t^2),  theta = acos(t/2)
///   t > 2:   -w^x sin(phi + y log w) / sqrt(t^2 - 4),           w = (t - sqrt(t^2-4))/2
///   t < -2:   |w|^x e^{y pi} sin(phi + y log|w| - x pi) / sqrt(t^2 - 4)
/// Throws DomainError at |t| = 2.
double eigen_density(const EigenParameter& params, double t);

/// |z psi(z)| for psi(z) = e^{i phi} z^a along the ray z = r e^{i angle}, one
/// value per radius. The first necessary condition for positivity asks for
/// this to vanish as r -> 0.
std::vector<double> necessary_condition_probe(const EigenParameter& params, double angle,
                                              const std::vector<double>& radii);

/// |2 (i beta t)^n e^{-(beta t)^2} - 2^{1-n/2} (i t)^n e^{-t^2/2}| with beta = 1/sqrt 2:
/// the classical linearized operator on the Fourier side applied to the
/// n-th Hermite eigenfunction, minus its eigenvalue times the input.
double classical_fourier_check(unsigned n, double t);

}  // namespace freeclt::analytic
