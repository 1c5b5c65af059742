#include <gtest/gtest.h>

#include <random>

#include "dual.hpp"
#include "freeclt/cumulants.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace freeclt;
namespace ft = freeclt::testing;

namespace {

Sequence seq(Flavor f, SequenceKind k, std::vector<QSqrt2> e) { return Sequence(f, k, std::move(e)); }

std::vector<QSqrt2> ints(std::initializer_list<long> xs) {
  std::vector<QSqrt2> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Tangent of the moment->cumulant map by pushing dual numbers through the
// partition sums.
std::vector<QSqrt2> dual_tangent(const Sequence& base, const Sequence& direction,
                                 const PartitionSumTables& tables) {
  using D = ft::Dual<QSqrt2>;
  std::vector<D> m;
  for (std::size_t i = 1; i <= base.length(); ++i) m.emplace_back(base.at(i), direction.at(i));
  const auto c = cumulants_by_partition_sum<D>(m, tables);
  std::vector<QSqrt2> out;
  for (const auto& x : c) out.push_back(x.d);
  return out;
}

}  // namespace

TEST(Sequence, Basics) {
  EXPECT_ANY_THROW(Sequence(Flavor::free, SequenceKind::moments, {}));
  const Sequence s = seq(Flavor::free, SequenceKind::moments, ints({0, 1, 0, 2}));
  EXPECT_EQ(s.at(2), QSqrt2(1));
  EXPECT_ANY_THROW(s.at(0));
  EXPECT_ANY_THROW(s.at(5));
  EXPECT_TRUE(s.variance_nonnegative());
  EXPECT_FALSE(seq(Flavor::free, SequenceKind::moments, ints({2, 1})).variance_nonnegative());
  EXPECT_EQ(parse_flavor("classical"), Flavor::classical);
  EXPECT_ANY_THROW(parse_flavor("quantum"));
  EXPECT_EQ(parse_sequence_kind("cumulants"), SequenceKind::cumulants);
}

TEST(Transforms, SemicircleHasOnlySecondFreeCumulant) {
  const Sequence c = moments_to_cumulants(chi_moments(Flavor::free, 12));
  for (std::size_t k = 1; k <= 12; ++k) EXPECT_EQ(c.at(k), QSqrt2(k == 2 ? 1 : 0)) << k;
}

TEST(Transforms, GaussianHasOnlySecondClassicalCumulant) {
  const Sequence c = moments_to_cumulants(chi_moments(Flavor::classical, 12));
  for (std::size_t k = 1; k <= 12; ++k) EXPECT_EQ(c.at(k), QSqrt2(k == 2 ? 1 : 0)) << k;
}

TEST(Transforms, ChiMomentsAreCatalanAndDoubleFactorial) {
  const auto catalan = ft::catalan_numbers(8);
  const Sequence free_m = chi_moments(Flavor::free, 16);
  const Sequence classical_m = chi_moments(Flavor::classical, 16);
  BigInt double_factorial = 1;
  for (std::size_t k = 1; k <= 16; ++k) {
    if (k % 2) {
      EXPECT_TRUE(free_m.at(k).is_zero());
      EXPECT_TRUE(classical_m.at(k).is_zero());
      continue;
    }
    double_factorial *= static_cast<unsigned long>(k - 1);
    EXPECT_EQ(free_m.at(k), QSqrt2(Rational(catalan[k / 2])));
    EXPECT_EQ(classical_m.at(k), QSqrt2(Rational(double_factorial)));
  }
}

TEST(Transforms, BernoulliCumulants) {
  // Free cumulants of the symmetric Bernoulli law alternate along the Catalan numbers.
  const Sequence free_c = moments_to_cumulants(bernoulli_moments(Flavor::free, 8));
  EXPECT_EQ(free_c.entries()[1], QSqrt2(1));
  EXPECT_EQ(free_c.entries()[3], QSqrt2(-1));
  EXPECT_EQ(free_c.entries()[5], QSqrt2(2));
  EXPECT_EQ(free_c.entries()[7], QSqrt2(-5));
  // Classical: kappa_4 = -2 stored as kappa_4 / 3!.
  const Sequence cl_c = moments_to_cumulants(bernoulli_moments(Flavor::classical, 6));
  EXPECT_EQ(cl_c.at(2), QSqrt2(1));
  EXPECT_EQ(cl_c.at(4), QSqrt2(Rational(-1, 3)));
  EXPECT_EQ(cl_c.at(6), QSqrt2(Rational(16, 120)));
}

TEST(Transforms, ClassicalDeltaTwoGivesDoubleFactorials) {
  const Sequence c = seq(Flavor::classical, SequenceKind::cumulants, ints({0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(cumulants_to_moments(c).entries()[5], QSqrt2(15));
  EXPECT_EQ(cumulants_to_moments(c).entries()[3], QSqrt2(3));
}

TEST(Transforms, KindIsChecked) {
  const Sequence m = chi_moments(Flavor::free, 4);
  EXPECT_ANY_THROW(cumulants_to_moments(m));
  EXPECT_ANY_THROW(moments_to_cumulants(moments_to_cumulants(m)));
}

TEST(Transforms, RoundTripOnRandomSequences) {
  std::mt19937_64 rng(ft::kSeed);
  for (Flavor f : {Flavor::free, Flavor::classical}) {
    for (int i = 0; i < 200; ++i) {
      const Sequence m = ft::random_sequence(rng, f, SequenceKind::moments, 10);
      EXPECT_EQ(cumulants_to_moments(moments_to_cumulants(m)), m);
      const Sequence c = ft::random_sequence(rng, f, SequenceKind::cumulants, 10);
      EXPECT_EQ(moments_to_cumulants(cumulants_to_moments(c)), c);
    }
  }
}

TEST(Transforms, PrefixStability) {
  std::mt19937_64 rng(ft::kSeed + 7);
  for (Flavor f : {Flavor::free, Flavor::classical}) {
    const auto entries = ft::random_entries(rng, 9);
    const Sequence full = moments_to_cumulants(seq(f, SequenceKind::moments, entries));
    const Sequence prefix = moments_to_cumulants(
        seq(f, SequenceKind::moments, std::vector<QSqrt2>(entries.begin(), entries.begin() + 5)));
    for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(full.at(k), prefix.at(k));
  }
}

TEST(Transforms, RecursionAgreesWithPartitionSums) {
  std::mt19937_64 rng(ft::kSeed + 1);
  for (Flavor f : {Flavor::free, Flavor::classical}) {
    const auto tables = PartitionSumTables::build(f, 9);
    for (int i = 0; i < 25; ++i) {
      const Sequence c = ft::random_sequence(rng, f, SequenceKind::cumulants, 9);
      EXPECT_EQ(cumulants_to_moments(c), cumulants_to_moments_by_partitions(c, tables));
      const Sequence m = ft::random_sequence(rng, f, SequenceKind::moments, 9);
      EXPECT_EQ(moments_to_cumulants(m), moments_to_cumulants_by_partitions(m, tables));
    }
  }
}

TEST(Transforms, ClassicalCumulantsAddUnderConvolution) {
  std::mt19937_64 rng(ft::kSeed + 2);
  for (int i = 0; i < 40; ++i) {
    const auto a = seq(Flavor::classical, SequenceKind::moments, ft::random_entries(rng, 8));
    const auto b = seq(Flavor::classical, SequenceKind::moments, ft::random_entries(rng, 8));
    const Sequence sum = moments_to_cumulants(classical_moment_convolution(a, b));
    const Sequence expected =
        linear_combination(QSqrt2(1), moments_to_cumulants(a), QSqrt2(1), moments_to_cumulants(b));
    EXPECT_EQ(sum, expected);
  }
}

TEST(Gateaux, MatchesDualNumberOracle) {
  std::mt19937_64 rng(ft::kSeed + 3);
  for (Flavor f : {Flavor::free, Flavor::classical}) {
    const auto tables = PartitionSumTables::build(f, 8);
    for (int i = 0; i < 30; ++i) {
      std::uniform_int_distribution<std::size_t> len(1, 8);
      const std::size_t n = len(rng);
      const Sequence base = seq(f, SequenceKind::moments, ft::random_entries(rng, n));
      const Sequence dir = seq(f, SequenceKind::moments, ft::random_entries(rng, n));
      const Sequence got = gateaux_derivative(base, dir);
      const auto expected = dual_tangent(base, dir, tables);
      ASSERT_EQ(got.length(), expected.size());
      for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(got.at(k), expected[k - 1]) << k;
      EXPECT_EQ(got.kind(), SequenceKind::cumulants);
    }
  }
}

TEST(Gateaux, LinearInTheDirection) {
  std::mt19937_64 rng(ft::kSeed + 4);
  for (Flavor f : {Flavor::free, Flavor::classical}) {
    const Sequence base = seq(f, SequenceKind::moments, ft::random_entries(rng, 7));
    const Sequence x = seq(f, SequenceKind::moments, ft::random_entries(rng, 7));
    const Sequence y = seq(f, SequenceKind::moments, ft::random_entries(rng, 7));
    const QSqrt2 a(Rational(3, 5), Rational(1));
    const QSqrt2 b(-2);
    EXPECT_EQ(gateaux_derivative(base, linear_combination(a, x, b, y)),
              linear_combination(a, gateaux_derivative(base, x), b, gateaux_derivative(base, y)));
  }
}

TEST(Gateaux, AtChiIsTheInverseMatrixOfTheFirstBlocks) {
  // At the semicircle, the tangent of c_1 is dm_1 and of c_2 is dm_2 - 2 m_1 dm_1 = dm_2.
  const Sequence chi = chi_moments(Flavor::free, 4);
  const Sequence e1 = seq(Flavor::free, SequenceKind::moments, ints({1, 0, 0, 0}));
  const Sequence d = gateaux_derivative(chi, e1);
  EXPECT_EQ(d.at(1), QSqrt2(1));
  EXPECT_EQ(d.at(2), QSqrt2(0));
  // m_3 = c_3 + 3 c_1 c_2 + c_1^3 => dc_3 = dm_3 - 3 dm_1 at chi.
  EXPECT_EQ(d.at(3), QSqrt2(-3));
}

TEST(Gateaux, DirectionalDerivativeBundle) {
  const Sequence chi = chi_moments(Flavor::classical, 5);
  const Sequence dir = seq(Flavor::classical, SequenceKind::moments, ints({0, 0, 1, 0, 0}));
  const auto dd = DirectionalDerivative::compute(chi, dir);
  EXPECT_EQ(dd.result, gateaux_derivative(chi, dir));
  EXPECT_EQ(dd.base, chi);
}
