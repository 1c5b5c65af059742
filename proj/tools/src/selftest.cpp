#include "selftest.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "freeclt/analytic.hpp"
#include "freeclt/clt.hpp"
#include "freeclt/cumulants.hpp"
#include "freeclt/partitions.hpp"
#include "freeclt/special_functions.hpp"

namespace freeclt::cli {

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  return Rational(num(rng), den(rng));
}

Sequence random_sequence(std::mt19937_64& rng, Flavor flavor, SequenceKind kind) {
  std::uniform_int_distribution<std::size_t> len(1, 10);
  std::bernoulli_distribution irrational(0.25);
  std::vector<QSqrt2> entries(len(rng));
  for (auto& e : entries) {
    e = irrational(rng) ? QSqrt2(random_rational(rng), random_rational(rng))
                        : QSqrt2(random_rational(rng));
  }
  return Sequence(flavor, kind, std::move(entries));
}

SelftestResult check(std::string name, const std::function<std::string()>& body) {
  try {
    const std::string failure = body();
    return {std::move(name), failure.empty(), failure};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed) {
  std::vector<SelftestResult> out;

  out.push_back(check("profile counts match closed forms (n+2k <= 10)", [] {
    for (int total = 1; total <= 10; ++total) {
      for (int k = 0; 2 * k < total; ++k) {
        const BlockProfile p{total - 2 * k, k};
        if (count_profile(p, Flavor::free) != kreweras_count(p.n, p.k)) {
          return "free n=" + std::to_string(p.n) + " k=" + std::to_string(k);
        }
        if (count_profile(p, Flavor::classical) != classical_profile_count(p.n, p.k)) {
          return "classical n=" + std::to_string(p.n) + " k=" + std::to_string(k);
        }
      }
    }
    return std::string();
  }));

  out.push_back(check("moment/cumulant round trip (100 random sequences per flavor)", [seed] {
    std::mt19937_64 rng(seed);
    for (Flavor f : {Flavor::free, Flavor::classical}) {
      for (int i = 0; i < 100; ++i) {
        const Sequence m = random_sequence(rng, f, SequenceKind::moments);
        if (cumulants_to_moments(moments_to_cumulants(m)) != m) return "m2c2m " + to_string(f);
        const Sequence c = random_sequence(rng, f, SequenceKind::cumulants);
        if (moments_to_cumulants(cumulants_to_moments(c)) != c) return "c2m2c " + to_string(f);
      }
    }
    return std::string();
  }));

  out.push_back(check("recursion agrees with partition sums (length 8)", [seed] {
    std::mt19937_64 rng(seed + 1);
    for (Flavor f : {Flavor::free, Flavor::classical}) {
      const auto tables = PartitionSumTables::build(f, 8);
      for (int i = 0; i < 10; ++i) {
        std::vector<QSqrt2> e(8);
        for (auto& x : e) x = random_rational(rng);
        const Sequence c(f, SequenceKind::cumulants, e);
        if (cumulants_to_moments(c) != cumulants_to_moments_by_partitions(c, tables)) {
          return "flavor " + to_string(f);
        }
      }
    }
    return std::string();
  }));

  out.push_back(check("eigen relation on columns of A (size 12)", [] {
    for (Flavor f : {Flavor::free, Flavor::classical}) {
      for (const auto& col : eigencheck(f, 12)) {
        if (!col.exact) return to_string(f) + " column " + std::to_string(col.column);
      }
    }
    return std::string();
  }));

  out.push_back(check("cumulant decay under T (k <= 10, 6 steps)", [] {
    for (Flavor f : {Flavor::free, Flavor::classical}) {
      if (!iterate_T(bernoulli_moments(f, 10), 6).decay_exact) return to_string(f);
    }
    return std::string();
  }));

  out.push_back(check("Fourier identity coefficients (n+2k <= 20)", [] {
    for (unsigned n = 1; n <= 20; ++n) {
      for (unsigned k = 0; n + 2 * k <= 20; ++k) {
        const auto [a, b] = fourier_identity_coefficients(n, k);
        if (a != b) return "n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
    }
    return std::string();
  }));

  out.push_back(check("lemma series and Rothe identity", [] {
    for (unsigned n = 1; n <= 6; ++n) {
      if (!lemma_Fn_identity(n, 20)) return "lemma n=" + std::to_string(n);
    }
    for (unsigned n = 1; n <= 6; ++n) {
      for (unsigned m = 1; m <= 6; ++m) {
        for (unsigned t = 0; t <= 6; ++t) {
          const auto s = rothe_identity(n, m, t);
          if (s.lhs != s.rhs) return "rothe " + std::to_string(n) + "," + std::to_string(m);
        }
      }
    }
    return std::string();
  }));

  out.push_back(check("semicircle boxplus semicircle density", [] {
    using namespace analytic;
    const auto chi = AnalyticMeasure::semicircle();
    const auto target = AnalyticMeasure::semicircle(0.0, 2.0 * std::sqrt(2.0));
    const auto table = free_convolve(chi, chi, Grid{-3.0, 3.0, 121});
    const auto& t = std::get<DensityTable>(table.descriptor());
    for (std::size_t i = 0; i < t.grid.size(); ++i) {
      if (std::abs(t.values[i] - *target.density(t.grid[i])) > 1e-3) {
        return "x = " + std::to_string(t.grid[i]);
      }
    }
    return std::string();
  }));

  out.push_back(check("omega conjugacy and pde residual", [] {
    using namespace analytic;
    const auto chi = AnalyticMeasure::semicircle();
    const Complex z(0.4, 0.9);
    const Complex w = transition_omega(z);
    if (std::abs(chi.cauchy(w) - chi.cauchy(z) / std::sqrt(2.0)) > 1e-9) return std::string("omega");
    const auto psi = AnalyticFunction::polynomial({0.0, 0.0, 1.0});
    if (pde_theorem_check(chi, psi, Complex(1.0, 2.0)) > 1e-6) return std::string("pde");
    return std::string();
  }));

  return out;
}

}  // namespace freeclt::cli
