#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <stdexcept>

#include "freeclt/analytic.hpp"
#include "freeclt/errors.hpp"

namespace freeclt::analytic {

namespace {

constexpr Complex kI{0.0, 1.0};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// sqrt(z - r) sqrt(z + r): cut on [-r, r], ~ z at infinity.
Complex cut_sqrt(Complex z, double r) { return std::sqrt(z - r) * std::sqrt(z + r); }

void validate(const Semicircle& s) {
  if (!(s.radius > 0.0) || !std::isfinite(s.center)) {
    throw std::invalid_argument("semicircle: radius must be positive");
  }
}

void validate(const CauchyLaw& c) {
  if (!(c.scale > 0.0) || !std::isfinite(c.location)) {
    throw std::invalid_argument("cauchy_law: scale must be positive");
  }
}

void validate(const ChebyshevEigen& c) {
  if (c.n < 1) throw std::invalid_argument("chebyshev_eigen: n must be at least 1");
}

void validate(const DensityTable& t) {
  if (t.grid.size() < 2 || t.grid.size() != t.values.size()) {
    throw std::invalid_argument("density_table: need >= 2 grid points and matching values");
  }
  for (std::size_t i = 1; i < t.grid.size(); ++i) {
    if (!(t.grid[i] > t.grid[i - 1])) {
      throw std::invalid_argument("density_table: grid must be strictly increasing");
    }
  }
}

void validate(const AtomMixture& a) {
  if (a.points.empty() || a.points.size() != a.weights.size()) {
    throw std::invalid_argument("atom_mixture: need matching, nonempty points and weights");
  }
}

void validate(const Mixture& m) {
  if (m.components.empty()) throw std::invalid_argument("mixture: no components");
  for (const auto& [w, mu] : m.components) {
    if (!mu) throw std::invalid_argument("mixture: null component");
  }
}

// Exact integral of the piecewise-linear interpolant against 1/(z - t).
// On [t0, t1] with p(t) = p(z) - s (z - t):
//   int p(t)/(z - t) dt = p(z) [log(z - t0) - log(z - t1)] - s (t1 - t0).
// Far from the segment that difference cancels, so expand about the
// midpoint m instead: with p = a + b u, u = t - m, half-width c,
//   int p/(z - t) = sum_n (a mu_n + b mu_{n+1}) / (z - m)^{n+1},
// mu_n = 2 c^{n+1} / (n + 1) for even n and 0 for odd n.
Complex segment_multipole(double a, double b, double c, Complex d, bool derivative) {
  const auto mu = [c](int n) { return n % 2 ? 0.0 : 2.0 * std::pow(c, n + 1) / (n + 1); };
  const Complex inv = 1.0 / d;
  Complex power = derivative ? inv * inv : inv;
  Complex acc = 0.0;
  for (int n = 0; n < 60; ++n) {
    const double coeff = a * mu(n) + b * mu(n + 1);
    const Complex term = (derivative ? -(n + 1.0) : 1.0) * coeff * power;
    acc += term;
    if (n > 2 && std::abs(term) <= 1e-17 * std::abs(acc)) break;
    power *= inv;
  }
  return acc;
}

Complex table_cauchy(const DensityTable& t, Complex z, bool derivative) {
  Complex acc = 0.0;
  for (std::size_t i = 1; i < t.grid.size(); ++i) {
    const double t0 = t.grid[i - 1];
    const double t1 = t.grid[i];
    const double v0 = t.values[i - 1];
    const double v1 = t.values[i];
    if (v0 == 0.0 && v1 == 0.0) continue;
    const double slope = (v1 - v0) / (t1 - t0);
    const double mid = 0.5 * (t0 + t1);
    const Complex d = z - mid;
    if (std::abs(d) > 4.0 * (t1 - t0)) {
      acc += segment_multipole(0.5 * (v0 + v1), slope, 0.5 * (t1 - t0), d, derivative);
      continue;
    }
    const Complex pz = v0 + slope * (z - t0);
    const Complex log_ratio = std::log(z - t0) - std::log(z - t1);
    if (derivative) {
      acc += slope * log_ratio + pz * (1.0 / (z - t0) - 1.0 / (z - t1));
    } else {
      acc += pz * log_ratio - slope * (t1 - t0);
    }
  }
  return acc;
}

}  // namespace

AnalyticMeasure::AnalyticMeasure(Descriptor descriptor) : descriptor_(std::move(descriptor)) {
  std::visit([](const auto& d) { validate(d); }, descriptor_);
}

AnalyticMeasure AnalyticMeasure::mix(const AnalyticMeasure& a, const AnalyticMeasure& b,
                                     double eps) {
  Mixture m;
  m.components.emplace_back(1.0 - eps, std::make_shared<const AnalyticMeasure>(a));
  m.components.emplace_back(eps, std::make_shared<const AnalyticMeasure>(b));
  return AnalyticMeasure(std::move(m));
}

std::string AnalyticMeasure::type_name() const {
  return std::visit(Overloaded{
                        [](const Semicircle&) { return std::string("semicircle"); },
                        [](const CauchyLaw&) { return std::string("cauchy_law"); },
                        [](const ChebyshevEigen&) { return std::string("chebyshev_eigen"); },
                        [](const DensityTable&) { return std::string("density_table"); },
                        [](const AtomMixture&) { return std::string("atom_mixture"); },
                        [](const Mixture&) { return std::string("mixture"); },
                    },
                    descriptor_);
}

Complex AnalyticMeasure::cauchy(Complex z) const {
  if (z.imag() == 0.0) {
    throw DomainError("Cauchy transform evaluated on the real axis");
  }
  return std::visit(
      Overloaded{
          [&](const Semicircle& s) {
            // (2/r^2)(zeta - sqrt(zeta^2 - r^2)), rationalized
            const Complex zeta = z - s.center;
            return 2.0 / (zeta + cut_sqrt(zeta, s.radius));
          },
          [&](const CauchyLaw& c) {
            const double side = z.imag() > 0.0 ? 1.0 : -1.0;
            return 1.0 / (z - c.location + side * kI * c.scale);
          },
          [&](const ChebyshevEigen& c) {
            const Complex s = cut_sqrt(z, 2.0);
            return std::pow(2.0 / (z + s), static_cast<int>(c.n)) / s;
          },
          [&](const DensityTable& t) { return table_cauchy(t, z, false); },
          [&](const AtomMixture& a) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < a.points.size(); ++i) acc += a.weights[i] / (z - a.points[i]);
            return acc;
          },
          [&](const Mixture& m) {
            Complex acc = 0.0;
            for (const auto& [w, mu] : m.components) acc += w * mu->cauchy(z);
            return acc;
          },
      },
      descriptor_);
}

Complex AnalyticMeasure::cauchy_derivative(Complex z) const {
  if (z.imag() == 0.0) {
    throw DomainError("Cauchy transform evaluated on the real axis");
  }
  return std::visit(
      Overloaded{
          [&](const Semicircle& s) {
            const Complex zeta = z - s.center;
            const Complex root = cut_sqrt(zeta, s.radius);
            return -2.0 / ((zeta + root) * root);
          },
          [&](const CauchyLaw& c) {
            const double side = z.imag() > 0.0 ? 1.0 : -1.0;
            const Complex d = z - c.location + side * kI * c.scale;
            return -1.0 / (d * d);
          },
          [&](const ChebyshevEigen& c) {
            // w' = -w/s, s' = z/s  =>  (w^n/s)' = -w^n (n/s^2 + z/s^3)
            const Complex s = cut_sqrt(z, 2.0);
            const Complex wn = std::pow(2.0 / (z + s), static_cast<int>(c.n));
            return -wn * (static_cast<double>(c.n) / (s * s) + z / (s * s * s));
          },
          [&](const DensityTable& t) { return table_cauchy(t, z, true); },
          [&](const AtomMixture& a) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < a.points.size(); ++i) {
              const Complex d = z - a.points[i];
              acc -= a.weights[i] / (d * d);
            }
            return acc;
          },
          [&](const Mixture& m) {
            Complex acc = 0.0;
            for (const auto& [w, mu] : m.components) acc += w * mu->cauchy_derivative(z);
            return acc;
          },
      },
      descriptor_);
}

double AnalyticMeasure::mass() const {
  return std::visit(
      Overloaded{
          [](const Semicircle&) { return 1.0; },
          [](const CauchyLaw&) { return 1.0; },
          [](const ChebyshevEigen&) { return 0.0; },
          [](const DensityTable& t) {
            double acc = 0.0;
            for (std::size_t i = 1; i < t.grid.size(); ++i) {
              acc += 0.5 * (t.values[i] + t.values[i - 1]) * (t.grid[i] - t.grid[i - 1]);
            }
            return acc;
          },
          [](const AtomMixture& a) {
            double acc = 0.0;
            for (double w : a.weights) acc += w;
            return acc;
          },
          [](const Mixture& m) {
            double acc = 0.0;
            for (const auto& [w, mu] : m.components) acc += w * mu->mass();
            return acc;
          },
      },
      descriptor_);
}

bool AnalyticMeasure::is_positive() const {
  return std::visit(
      Overloaded{
          [](const Semicircle&) { return true; },
          [](const CauchyLaw&) { return true; },
          [](const ChebyshevEigen&) { return false; },
          [](const DensityTable& t) {
            return std::all_of(t.values.begin(), t.values.end(), [](double v) { return v >= 0.0; });
          },
          [](const AtomMixture& a) {
            return std::all_of(a.weights.begin(), a.weights.end(), [](double w) { return w >= 0.0; });
          },
          [](const Mixture& m) {
            return std::all_of(m.components.begin(), m.components.end(),
                               [](const auto& c) { return c.first >= 0.0 && c.second->is_positive(); });
          },
      },
      descriptor_);
}

bool AnalyticMeasure::compactly_supported() const { return support_hull().has_value(); }

std::optional<std::pair<double, double>> AnalyticMeasure::support_hull() const {
  using Hull = std::optional<std::pair<double, double>>;
  return std::visit(
      Overloaded{
          [](const Semicircle& s) -> Hull {
            return std::make_pair(s.center - s.radius, s.center + s.radius);
          },
          [](const CauchyLaw&) -> Hull { return std::nullopt; },
          [](const ChebyshevEigen&) -> Hull { return std::make_pair(-2.0, 2.0); },
          [](const DensityTable& t) -> Hull { return std::make_pair(t.grid.front(), t.grid.back()); },
          [](const AtomMixture& a) -> Hull {
            const auto [lo, hi] = std::minmax_element(a.points.begin(), a.points.end());
            return std::make_pair(*lo, *hi);
          },
          [](const Mixture& m) -> Hull {
            double lo = std::numeric_limits<double>::infinity();
            double hi = -lo;
            for (const auto& [w, mu] : m.components) {
              const auto h = mu->support_hull();
              if (!h) return std::nullopt;
              lo = std::min(lo, h->first);
              hi = std::max(hi, h->second);
            }
            return std::make_pair(lo, hi);
          },
      },
      descriptor_);
}

std::optional<double> AnalyticMeasure::density(double x) const {
  using Value = std::optional<double>;
  return std::visit(
      Overloaded{
          [x](const Semicircle& s) -> Value {
            const double d = x - s.center;
            if (std::abs(d) >= s.radius) return 0.0;
            return 2.0 / (std::numbers::pi * s.radius * s.radius) * std::sqrt(s.radius * s.radius - d * d);
          },
          [x](const CauchyLaw& c) -> Value {
            const double d = x - c.location;
            return c.scale / (std::numbers::pi * (d * d + c.scale * c.scale));
          },
          [x](const ChebyshevEigen& c) -> Value {
            if (std::abs(x) == 2.0) return std::nullopt;
            if (std::abs(x) > 2.0) return 0.0;
            return std::cos(c.n * std::acos(x / 2.0)) / (std::numbers::pi * std::sqrt(4.0 - x * x));
          },
          [x](const DensityTable& t) -> Value {
            if (x < t.grid.front() || x > t.grid.back()) return 0.0;
            const auto it = std::upper_bound(t.grid.begin(), t.grid.end(), x);
            if (it == t.grid.end()) return t.values.back();
            const std::size_t i = static_cast<std::size_t>(it - t.grid.begin());
            const double u = (x - t.grid[i - 1]) / (t.grid[i] - t.grid[i - 1]);
            return (1.0 - u) * t.values[i - 1] + u * t.values[i];
          },
          [](const AtomMixture&) -> Value { return std::nullopt; },
          [x](const Mixture& m) -> Value {
            double acc = 0.0;
            for (const auto& [w, mu] : m.components) {
              const auto d = mu->density(x);
              if (!d) return std::nullopt;
              acc += w * *d;
            }
            return acc;
          },
      },
      descriptor_);
}

AnalyticMeasure dilate(const AnalyticMeasure& mu, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("dilate: factor must be positive");
  return std::visit(
      Overloaded{
          [r](const Semicircle& s) { return AnalyticMeasure::semicircle(r * s.center, r * s.radius); },
          [r](const CauchyLaw& c) { return AnalyticMeasure::cauchy_law(r * c.location, r * c.scale); },
          [](const ChebyshevEigen&) -> AnalyticMeasure {
            throw std::invalid_argument("dilate: chebyshev_eigen has fixed support [-2, 2]");
          },
          [r](const DensityTable& t) {
            DensityTable out = t;
            for (auto& x : out.grid) x *= r;
            for (auto& v : out.values) v /= r;
            return AnalyticMeasure(std::move(out));
          },
          [r](const AtomMixture& a) {
            AtomMixture out = a;
            for (auto& p : out.points) p *= r;
            return AnalyticMeasure(std::move(out));
          },
          [r](const Mixture& m) {
            Mixture out;
            for (const auto& [w, c] : m.components) {
              out.components.emplace_back(w, std::make_shared<const AnalyticMeasure>(dilate(*c, r)));
            }
            return AnalyticMeasure(std::move(out));
          },
      },
      mu.descriptor());
}

Complex cauchy_transform(const AnalyticMeasure& mu, Complex z) {
  if (!(z.imag() > 0.0)) {
    throw DomainError("cauchy_transform: z must lie in the upper half-plane");
  }
  return mu.cauchy(z);
}

bool StolzRegion::contains(Complex w) const {
  if (!(std::abs(w) < radius) || w == Complex(0.0)) return false;
  return std::abs(std::arg(w) + std::numbers::pi / 2.0) < half_angle;
}

std::vector<Complex> StolzRegion::sample(std::size_t count) const {
  // Rings of 5 angles at shrinking radii.
  std::vector<Complex> out;
  const std::size_t per_ring = 5;
  const std::size_t rings = (count + per_ring - 1) / per_ring;
  for (std::size_t ring = 0; ring < rings && out.size() < count; ++ring) {
    const double rad = radius * (0.9 - 0.8 * static_cast<double>(ring) / static_cast<double>(rings));
    for (std::size_t j = 0; j < per_ring && out.size() < count; ++j) {
      const double frac = (static_cast<double>(j) + 0.5) / static_cast<double>(per_ring);
      const double angle = -std::numbers::pi / 2.0 + half_angle * 0.9 * (2.0 * frac - 1.0);
      out.push_back(std::polar(rad, angle));
    }
  }
  return out;
}

double stieltjes_density(const std::function<Complex(Complex)>& cauchy, double x,
                         const StieltjesOptions& options) {
  const auto& eps = options.offsets;
  if (eps.empty()) throw std::invalid_argument("stieltjes_density: no offsets");
  std::vector<double> p;
  p.reserve(eps.size());
  for (double e : eps) {
    if (!(e > 0.0)) throw std::invalid_argument("stieltjes_density: offsets must be positive");
    p.push_back(-cauchy(Complex(x, e)).imag() / std::numbers::pi);
  }
  // Neville's scheme evaluated at eps = 0.
  for (std::size_t level = 1; level < p.size(); ++level) {
    for (std::size_t i = p.size() - 1; i >= level; --i) {
      const double hi = eps[i - level];
      const double lo = eps[i];
      p[i] = (hi * p[i] - lo * p[i - 1]) / (hi - lo);
      if (i == level) break;
    }
  }
  return p.back();
}

Grid Grid::parse(const std::string& text) {
  const auto bad = [&text]() {
    return std::invalid_argument("grid must look like lo:hi:n with hi > lo and n >= 2, got '" +
                                 text + "'");
  };
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) throw bad();
  Grid g;
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, first);
    g.lo = std::stod(lo, &used);
    if (used != lo.size()) throw bad();
    const std::string hi = text.substr(first + 1, second - first - 1);
    g.hi = std::stod(hi, &used);
    if (used != hi.size()) throw bad();
    const std::string n = text.substr(second + 1);
    const long long count = std::stoll(n, &used);
    if (used != n.size() || count < 2) throw bad();
    g.count = static_cast<std::size_t>(count);
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (!(g.hi > g.lo)) throw bad();
  return g;
}

std::vector<double> Grid::points() const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

}  // namespace freeclt::analytic
