// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "freeclt/analytic.hpp"
#include "freeclt/clt.hpp"
#include "freeclt/cumulants.hpp"
#include "freeclt/partition_sums.hpp"
#include "freeclt/partitions.hpp"
#include "freeclt/special_functions.hpp"
#include "generators.hpp"

namespace {

using namespace freeclt;
using namespace freeclt::analytic;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no individual limit
  std::function<Outcome()> body;
};

std::string str(const auto& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

BigInt gmp_binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt gmp_factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// 2^{h/2} in Q[sqrt 2] for any integer h.
QSqrt2 pow_sqrt2(long h) {
  const long q = h >= 0 ? h / 2 : -((-h + 1) / 2);
  const BigInt p = BigInt(1) << (q >= 0 ? q : -q);
  const Rational base = q >= 0 ? Rational(p) : Rational(BigInt(1), p);
  return h - 2 * q == 1 ? QSqrt2(Rational(0), base) : QSqrt2(base);
}

// Moments of the normal law of each flavor: Catalan numbers and double
// factorials on even orders.
Rational normal_moment(Flavor flavor, unsigned k) {
  if (k % 2) return Rational(0);
  const unsigned h = k / 2;
  if (flavor == Flavor::free) return Rational(gmp_binomial(2 * h, h)) / Rational(BigInt(h + 1));
  BigInt df = 1;
  for (unsigned j = 1; j < k; j += 2) df *= j;
  return Rational(df);
}

Outcome kreweras_counts() {
  Outcome o;
  for (int n = 1; n <= 13; ++n) {
    for (int k = 0; n + 2 * k <= 13; ++k) {
      const BigInt brute = count_profile({n, k}, Flavor::free);
      if (n + 2 * k <= 11 && count_profile_unpruned({n, k}, Flavor::free) != brute) {
        o.fail("pruned and plain enumeration differ at n=" + str(n) + " k=" + str(k));
      }
      const BigInt expected = gmp_binomial(n + 2 * k, k);
      if (brute != expected) o.fail("n=" + str(n) + " k=" + str(k) + ": " + brute.get_str());
    }
  }
  return o;
}

Outcome classical_counts() {
  Outcome o;
  for (int n = 1; n <= 13; ++n) {
    for (int k = 0; n + 2 * k <= 13; ++k) {
      // count_profile already carries the (n-1)! block weight.
      const BigInt brute = count_profile({n, k}, Flavor::classical);
      if (n + 2 * k <= 11 && count_profile_unpruned({n, k}, Flavor::classical) != brute) {
        o.fail("pruned and plain enumeration differ at n=" + str(n) + " k=" + str(k));
      }
      const BigInt expected = gmp_factorial(n + 2 * k) / (BigInt(n) * gmp_factorial(k) * (BigInt(1) << k));
      if (brute != expected) o.fail("n=" + str(n) + " k=" + str(k) + ": " + brute.get_str());
    }
  }
  return o;
}

Outcome transform_bijection() {
  Outcome o;
  std::mt19937_64 rng(testing::kSeed);
  for (Flavor f : {Flavor::free, Flavor::classical}) {
    for (int i = 0; i < 500; ++i) {
      const Sequence m = testing::random_sequence(rng, f, SequenceKind::moments, 10, 0.0);
      const Sequence c = testing::random_sequence(rng, f, SequenceKind::cumulants, 10, 0.0);
      if (cumulants_to_moments(moments_to_cumulants(m)) != m) o.fail(to_string(f) + " m->c->m #" + str(i));
      if (moments_to_cumulants(cumulants_to_moments(c)) != c) o.fail(to_string(f) + " c->m->c #" + str(i));
    }
    const auto tables = PartitionSumTables::build(f, 12);
    for (std::size_t len = 1; len <= 12; ++len) {
      for (int i = 0; i < 3; ++i) {
        const Sequence c(f, SequenceKind::cumulants, testing::random_entries(rng, len));
        const Sequence m(f, SequenceKind::moments, testing::random_entries(rng, len));
        if (cumulants_to_moments_by_partitions(c, tables) != cumulants_to_moments(c)) {
          o.fail(to_string(f) + " partition c->m, length " + str(len));
        }
        if (moments_to_cumulants_by_partitions(m, tables) != moments_to_cumulants(m)) {
          o.fail(to_string(f) + " partition m->c, length " + str(len));
        }
      }
    }
  }
  return o;
}

Outcome eigen_relation() {
  Outcome o;
  const std::size_t size = 16;
  for (Flavor f : {Flavor::free, Flavor::classical}) {
    const LinMatrix a = LinMatrix::build(f, size);
    for (std::size_t j = 1; j <= size; ++j) {
      const Sequence col = a.column(j);
      const QSqrt2 lambda = pow_sqrt2(2 - static_cast<long>(j));
      std::vector<QSqrt2> scaled;
      for (const auto& e : col.entries()) scaled.push_back(lambda * e);
      if (apply_DT_at_chi(col) != col.with_entries(scaled)) o.fail(to_string(f) + " column " + str(j));
    }
    for (const auto& check : eigencheck(f, size)) {
      if (!check.exact) o.fail(to_string(f) + " eigencheck column " + str(check.column));
    }
  }
  return o;
}

Outcome clt_decay() {
  Outcome o;
  const std::size_t len = 10;
  const std::size_t steps = 8;
  for (Flavor f : {Flavor::free, Flavor::classical}) {
    std::vector<QSqrt2> bern(len);
    for (std::size_t k = 2; k <= len; k += 2) bern[k - 1] = QSqrt2(1);
    const CltReport report = iterate_T(Sequence(f, SequenceKind::moments, bern), steps);
    if (report.steps.size() != steps + 1) {
      o.fail("expected " + str(steps + 1) + " steps");
      continue;
    }
    if (!report.decay_exact) o.fail(to_string(f) + " decay_exact flag");
    const Sequence& c0 = report.steps[0].cumulants;
    for (std::size_t n = 0; n <= steps; ++n) {
      const CltStep& s = report.steps[n];
      for (std::size_t k = 1; k <= len; ++k) {
        const QSqrt2 factor = pow_sqrt2(static_cast<long>(n) * (2 - static_cast<long>(k)));
        if (s.cumulants.at(k) != factor * c0.at(k)) o.fail(to_string(f) + " c_" + str(k) + " step " + str(n));
        const QSqrt2 gap = s.moments.at(k) - QSqrt2(normal_moment(f, k));
        if (s.gaps.at(k) != gap) o.fail(to_string(f) + " gap field m_" + str(k) + " step " + str(n));
        if (n > 0 && k % 2 == 0 && k >= 4) {
          const QSqrt2 prev = report.steps[n - 1].moments.at(k) - QSqrt2(normal_moment(f, k));
          const auto abs = [](const QSqrt2& x) { return x.sign() < 0 ? -x : x; };
          if (!(abs(gap) < abs(prev))) o.fail(to_string(f) + " gap not decreasing m_" + str(k) + " step " + str(n));
        }
      }
    }
    // The gap bound shrinks to zero: after 8 steps every even gap is below 1/4
    // of its initial size.
    for (std::size_t k = 4; k <= len; k += 2) {
      const double g0 = std::abs((report.steps[0].moments.at(k) - QSqrt2(normal_moment(f, k))).to_double());
      const double g8 = std::abs(report.steps[steps].gaps.at(k).to_double());
      if (!(g8 < 0.25 * g0)) o.fail(to_string(f) + " m_" + str(k) + " not approaching the limit");
    }
  }
  return o;
}

// a_{N,n} for the classical flavor by differentiating
//   m_N = sum_j binom(N-1, j-1) (j-1)! c_j m_{N-j}
// at the normal law (c_2 = 1) in the direction c_n.
std::vector<BigInt> classical_column(unsigned n, unsigned max_order) {
  std::vector<BigInt> normal(max_order + 1, 0);
  normal[0] = 1;
  for (unsigned k = 2; k <= max_order; k += 2) normal[k] = normal[k - 2] * (k - 1);
  std::vector<BigInt> a(max_order + 1, 0);
  for (unsigned N = n; N <= max_order; ++N) {
    a[N] = gmp_binomial(N - 1, n - 1) * gmp_factorial(n - 1) * normal[N - n];
    if (N >= 2) a[N] += BigInt(N - 1) * a[N - 2];
  }
  return a;
}

Outcome fourier_identity() {
  Outcome o;
  for (unsigned n = 1; n <= 30; ++n) {
    const auto a = classical_column(n, 30);
    for (unsigned k = 0; n + 2 * k <= 30; ++k) {
      const Rational lhs = Rational(a[n + 2 * k]) / Rational(gmp_factorial(n + 2 * k));
      const Rational rhs =
          Rational(BigInt(1), BigInt(n) * (BigInt(1) << k) * gmp_factorial(k));
      if (lhs != rhs) o.fail("oracle n=" + str(n) + " k=" + str(k));
      const auto [lib_lhs, lib_rhs] = fourier_identity_coefficients(n, k);
      if (lib_lhs != lhs || lib_rhs != rhs) o.fail("library n=" + str(n) + " k=" + str(k));
    }
  }
  return o;
}

Outcome lemma_and_rothe() {
  Outcome o;
  for (unsigned n = 1; n <= 6; ++n) {
    if (!lemma_Fn_identity(n, 30)) o.fail("lemma n=" + str(n));
  }
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned m = 1; m <= 10; ++m) {
      for (unsigned t = 0; t <= 10; ++t) {
        const RotheSides s = rothe_identity(n, m, t);
        const Rational expected = Rational(BigInt(n + m), BigInt(n + m + 2 * t)) *
                                  Rational(gmp_binomial(n + m + 2 * t, t));
        if (s.lhs != s.rhs || s.rhs != expected) {
          o.fail("rothe n=" + str(n) + " m=" + str(m) + " t=" + str(t));
        }
      }
    }
  }
  return o;
}

Outcome free_convolution() {
  Outcome o;
  const auto chi = AnalyticMeasure::semicircle();
  const auto sum = free_convolve(chi, chi, Grid{-3.0, 3.0, 601});
  const auto& table = std::get<DensityTable>(sum.descriptor());
  double sup = 0.0;
  for (std::size_t i = 0; i < table.grid.size(); ++i) {
    const double x = table.grid[i];
    const double exact = x * x < 8.0 ? std::sqrt(8.0 - x * x) / (4.0 * std::numbers::pi) : 0.0;
    sup = std::max(sup, std::abs(table.values[i] - exact));
  }
  if (!(sup <= 1e-3)) o.fail("semicircle sup error " + str(sup));

  const auto cauchy = AnalyticMeasure::cauchy_law();
  const auto wide = AnalyticMeasure::cauchy_law(0.0, 2.0);
  const auto csum = free_convolve(cauchy, cauchy, Grid{-10.0, 10.0, 100});
  const auto& ct = std::get<DensityTable>(csum.descriptor());
  double worst = 0.0;
  for (std::size_t i = 0; i < ct.grid.size(); ++i) {
    worst = std::max(worst, std::abs(ct.values[i] - *wide.density(ct.grid[i])));
  }
  if (!(worst <= 1e-4)) o.fail("cauchy pointwise error " + str(worst));
  if (o.passed) o.detail = "semicircle sup " + str(sup) + ", cauchy max " + str(worst);
  return o;
}

Outcome pde_residual() {
  Outcome o;
  const auto chi = AnalyticMeasure::semicircle();
  double worst = 0.0;
  for (unsigned p = 1; p <= 3; ++p) {
    std::vector<Complex> c(p + 1, 0.0);
    c[p] = 1.0;
    const auto psi = AnalyticFunction::polynomial(c);
    for (double x : {-2.5, -1.0, 0.0, 1.2, 3.0}) {
      for (double y : {0.4, 1.0, 2.0, 3.5}) {
        const double r = pde_theorem_check(chi, psi, Complex(x, y));
        worst = std::max(worst, r);
        if (!(r <= 1e-6)) o.fail("w^" + str(p) + " at " + str(Complex(x, y)) + ": " + str(r));
      }
    }
  }
  if (o.passed) o.detail = "max residual " + str(worst);
  return o;
}

Outcome section_bridge() {
  Outcome o;
  const LinMatrix a = LinMatrix::build(Flavor::free, 12);
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned order = 1; order <= n + 8; ++order) {
      const double q = chebyshev_quadrature_moment(n, order);
      const double exact = a.at(order, n).to_double();
      if (!(std::abs(q - exact) <= 1e-8)) o.fail("moment n=" + str(n) + " order " + str(order) + ": " + str(q));
    }
  }
  double worst = 0.0;
  for (unsigned n = 1; n <= 4; ++n) {
    const EigenParameter p{{static_cast<double>(n), 0.0}, 0.0};
    const auto g = [&](Complex z) { return eigen_cauchy(p, z); };
    for (int i = 0; i < 10; ++i) {
      const double t = -1.8 + 0.4 * i;
      // eigen_density carries no 1/pi
      const double err = std::abs(std::numbers::pi * stieltjes_density(g, t) - eigen_density(p, t));
      worst = std::max(worst, err);
      if (!(err <= 1e-4)) o.fail("boundary n=" + str(n) + " t=" + str(t) + ": " + str(err));
    }
  }
  if (o.passed) o.detail = "max boundary error " + str(worst);
  return o;
}

Outcome omega_conjugacy() {
  Outcome o;
  const auto chi = AnalyticMeasure::semicircle();
  const double beta = 1.0 / std::sqrt(2.0);
  double worst = 0.0;
  std::vector<Complex> points;
  for (int i = 0; i < 10; ++i) {
    for (double y : {0.05, 0.3, 1.0, 2.5, 6.0}) points.emplace_back(-4.5 + i, y);
  }
  for (Complex z : points) {
    const double r = std::abs(chi.cauchy(transition_omega(z)) - beta * chi.cauchy(z));
    worst = std::max(worst, r);
    if (!(r <= 1e-9)) o.fail("omega at " + str(z) + ": " + str(r));
  }
  double worst_rel = 0.0;
  for (unsigned n = 1; n <= 5; ++n) {
    const auto psi = semicircle_eigen_psi(static_cast<double>(n - 1));
    const double lambda = std::pow(2.0, 1.0 - n / 2.0);
    for (Complex z : {Complex(0.3, 0.5), Complex(-1.7, 1.2), Complex(2.4, 0.8), Complex(0.0, 3.0)}) {
      const Complex expected = lambda * psi(z);
      const double rel = std::abs(dt_action_on_psi(psi, z) - expected) / std::abs(expected);
      worst_rel = std::max(worst_rel, rel);
      if (!(rel <= 1e-6)) o.fail("dt n=" + str(n) + " at " + str(z) + ": " + str(rel));
    }
  }
  if (o.passed) o.detail = "omega max " + str(worst) + ", dt max rel " + str(worst_rel);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "noncrossing profile counts equal binom(n+2k,k), n+2k<=13", 60.0, kreweras_counts},
      {2, "classical profile counts equal (n+2k)!/(n k! 2^k), n+2k<=13", 60.0, classical_counts},
      {3, "moment/cumulant bijection and partition-sum agreement", 0.0, transform_bijection},
      {4, "D T maps column j of A to 2^{1-j/2} column j, j<=16", 30.0, eigen_relation},
      {5, "CLT cumulant decay and convergence from Bernoulli", 0.0, clt_decay},
      {6, "Fourier coefficients a_{n+2k,n}/(n+2k)!, n+2k<=30", 0.0, fourier_identity},
      {7, "lemma F_n through order 30 and Rothe identity", 0.0, lemma_and_rothe},
      {8, "free convolution of semicircles and Cauchy laws", 60.0, free_convolution},
      {9, "deformation identity residual for w, w^2, w^3", 0.0, pde_residual},
      {10, "eigen-density moments and boundary values", 0.0, section_bridge},
      {11, "omega conjugacy and D T eigenfunctions", 0.0, omega_conjugacy},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0.0 && secs > c.limit_seconds) {
      out.fail("took " + str(secs) + " s, limit " + str(c.limit_seconds) + " s");
    }
    if (!out.passed) ++failures;
    std::printf("%s %2d %s (%.2f s)%s%s\n", out.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
