#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "freeclt/analytic.hpp"
#include "freeclt/errors.hpp"

namespace freeclt::analytic {

namespace {

// Halve `step` until current + step stays in the upper half-plane.
Complex keep_upper(Complex current, Complex step) {
  for (int i = 0; i < 60 && (current + step).imag() <= 0.0; ++i) step *= 0.5;
  return step;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Complex invert_K(const AnalyticMeasure& mu, Complex w, const NewtonOptions& options) {
  if (!(w.imag() < 0.0)) {
    throw DomainError("invert_K: w must lie in the lower half-plane");
  }
  const double m = mu.mass();
  if (!(m > 0.0)) {
    throw DomainError("invert_K: measure must have positive mass");
  }
  Complex z = m / w;
  double residual = std::abs(mu.cauchy(z) - w);
  double previous = residual;
  int growing = 0;
  for (int it = 0; it < options.max_iterations && residual > options.tolerance; ++it) {
    const Complex f = mu.cauchy(z) - w;
    const Complex df = mu.cauchy_derivative(z);
    if (df == Complex(0.0) || !finite(df)) break;
    z += keep_upper(z, -f / df);
    residual = std::abs(mu.cauchy(z) - w);
    if (!std::isfinite(residual)) break;
    growing = residual > previous ? growing + 1 : 0;
    if (growing >= options.divergence_window) break;
    previous = residual;
  }
  if (residual <= options.tolerance) {
    // Converged iterates are typically one step from full precision.
    const Complex f = mu.cauchy(z) - w;
    const Complex df = mu.cauchy_derivative(z);
    const Complex polished = z + keep_upper(z, -f / df);
    const double r = std::abs(mu.cauchy(polished) - w);
    if (r < residual) {
      z = polished;
      residual = r;
    }
  }
  if (!(residual <= options.accept_residual)) {
    throw InversionFailure("invert_K: Newton iteration did not converge", residual);
  }
  return z;
}

Complex r_transform(const AnalyticMeasure& mu, Complex w, const NewtonOptions& options) {
  return invert_K(mu, w, options) - 1.0 / w;
}

namespace {

struct Subordination {
  Complex a;
  Complex b;
};

double sub_residual(const AnalyticMeasure& mu, const AnalyticMeasure& nu, Complex z,
                    const Subordination& s) {
  const Complex gm = mu.cauchy(s.a);
  const Complex gn = nu.cauchy(s.b);
  return std::abs(gm - gn) + std::abs(s.a + s.b - z - 1.0 / gm) * std::abs(gm) * std::abs(gm);
}

// Newton on F1 = G_mu(a) - G_nu(b), F2 = a + b - z - 1/G_mu(a).
bool sub_newton(const AnalyticMeasure& mu, const AnalyticMeasure& nu, Complex z, Subordination& s,
                double tolerance) {
  const NewtonOptions opts;
  double residual = sub_residual(mu, nu, z, s);
  double previous = residual;
  int growing = 0;
  for (int it = 0; it < opts.max_iterations && residual > tolerance; ++it) {
    const Complex gm = mu.cauchy(s.a);
    const Complex gn = nu.cauchy(s.b);
    const Complex dgm = mu.cauchy_derivative(s.a);
    const Complex dgn = nu.cauchy_derivative(s.b);
    const Complex f1 = gm - gn;
    const Complex f2 = s.a + s.b - z - 1.0 / gm;
    const Complex j11 = dgm;
    const Complex j12 = -dgn;
    const Complex j21 = 1.0 + dgm / (gm * gm);
    const Complex j22 = 1.0;
    const Complex det = j11 * j22 - j12 * j21;
    if (det == Complex(0.0) || !finite(det)) return false;
    Complex da = -(j22 * f1 - j12 * f2) / det;
    Complex db = -(-j21 * f1 + j11 * f2) / det;
    double scale = 1.0;
    for (int k = 0; k < 60; ++k) {
      if ((s.a + scale * da).imag() > 0.0 && (s.b + scale * db).imag() > 0.0) break;
      scale *= 0.5;
    }
    s.a += scale * da;
    s.b += scale * db;
    residual = sub_residual(mu, nu, z, s);
    if (!std::isfinite(residual)) return false;
    growing = residual > previous ? growing + 1 : 0;
    if (growing >= opts.divergence_window) return false;
    previous = residual;
  }
  if (residual <= tolerance) {
    // one polishing step
    Subordination t = s;
    const Complex gm = mu.cauchy(t.a);
    const Complex dgm = mu.cauchy_derivative(t.a);
    const Complex dgn = nu.cauchy_derivative(t.b);
    const Complex f1 = gm - nu.cauchy(t.b);
    const Complex f2 = t.a + t.b - z - 1.0 / gm;
    const Complex j21 = 1.0 + dgm / (gm * gm);
    const Complex det = dgm + dgn * j21;
    if (det != Complex(0.0) && finite(det)) {
      t.a -= (f1 + dgn * f2) / det;
      t.b -= (-j21 * f1 + dgm * f2) / det;
      if (t.a.imag() > 0.0 && t.b.imag() > 0.0 && sub_residual(mu, nu, z, t) < residual) s = t;
    }
    return true;
  }
  return residual <= 1e-10;
}

}  // namespace

Complex free_convolution_cauchy(const AnalyticMeasure& mu, const AnalyticMeasure& nu, Complex z) {
  if (!(z.imag() > 0.0)) {
    throw DomainError("free_convolution_cauchy: z must lie in the upper half-plane");
  }
  const double height = std::max(50.0, 10.0 * std::abs(z.real()));
  Complex zc(z.real(), z.imag() + height);
  Subordination s{zc, zc};
  if (!sub_newton(mu, nu, zc, s, 1e-12)) {
    throw InversionFailure("free_convolution_cauchy: no convergence at the starting height",
                           sub_residual(mu, nu, zc, s));
  }
  double step = 0.7;
  while (zc != z) {
    const double next_im = std::max(z.imag(), z.imag() + (zc.imag() - z.imag()) * step);
    Complex target(z.real(), next_im);
    if (target.imag() - z.imag() < 1e-3 * z.imag()) target = z;
    Subordination trial = s;
    // linear predictor: a - z and b - z move slowly
    trial.a += target - zc;
    trial.b += target - zc;
    if (trial.a.imag() <= 0.0) trial.a = s.a;
    if (trial.b.imag() <= 0.0) trial.b = s.b;
    if (sub_newton(mu, nu, target, trial, 1e-12)) {
      s = trial;
      zc = target;
      step = std::min(0.7, step * 0.8 + 0.2 * 0.7);
    } else {
      step = 1.0 - 0.5 * (1.0 - step);
      if (step > 0.999) {
        throw InversionFailure("free_convolution_cauchy: continuation stalled",
                               sub_residual(mu, nu, target, trial));
      }
    }
  }
  return mu.cauchy(s.a);
}

AnalyticMeasure free_convolve(const AnalyticMeasure& mu, const AnalyticMeasure& nu, const Grid& grid,
                              const StieltjesOptions& options) {
  const auto xs = grid.points();
  std::vector<double> values(xs.size());
  const auto g = [&](Complex z) { return free_convolution_cauchy(mu, nu, z); };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    values[i] = std::max(0.0, stieltjes_density(g, xs[i], options));
  }
  AnalyticMeasure out = AnalyticMeasure::table(xs, values);
  if (mu.compactly_supported() && nu.compactly_supported()) {
    const double deficit = mu.mass() * nu.mass() - out.mass();
    if (deficit > 1e-3) {
      throw std::invalid_argument("free_convolve: grid misses mass " + std::to_string(deficit) +
                                  "; the grid is too narrow or too coarse");
    }
  }
  return out;
}

Complex deformed_cauchy(const AnalyticMeasure& nu, const AnalyticFunction& psi, Complex z,
                        double t, const NewtonOptions& options) {
  if (!(z.imag() > 0.0)) {
    throw DomainError("deformed_cauchy: z must lie in the upper half-plane");
  }
  Complex g = nu.cauchy(z);
  if (t == 0.0) return g;
  // The finite differences taken over t amplify errors in g by 1/t, so keep
  // iterating past the nominal tolerance until the residual stops shrinking.
  const auto h = [&](Complex x) { return nu.cauchy(z - t * psi(x)) - x; };
  double residual = std::abs(h(g));
  int growing = 0;
  for (int it = 0; it < options.max_iterations && residual > 0.0; ++it) {
    const Complex arg = z - t * psi(g);
    const Complex dh = -t * nu.cauchy_derivative(arg) * psi.d(g) - 1.0;
    const Complex next = g - (nu.cauchy(arg) - g) / dh;
    const double r = std::abs(h(next));
    if (!std::isfinite(r)) break;
    if (r >= residual) {
      if (residual <= options.tolerance) break;
      if (++growing >= options.divergence_window) break;
    } else {
      growing = 0;
    }
    g = next;
    residual = r;
  }
  if (!(residual <= options.accept_residual)) {
    throw InversionFailure("deformed_cauchy: Newton iteration did not converge", residual);
  }
  return g;
}

}  // namespace freeclt::analytic
