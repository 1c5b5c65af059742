#include "freeclt/cumulants.hpp"

#include <stdexcept>

namespace freeclt {

namespace {

using Table = std::vector<std::vector<QSqrt2>>;

void require_kind(const Sequence& s, SequenceKind kind, const char* what) {
  if (s.kind() != kind) {
    throw std::invalid_argument(std::string(what) + ": expected a " + to_string(kind) +
                                " sequence, got " + to_string(s.kind()));
  }
}

// powers[s][j] = [z^j] M(z)^s with M(z) = 1 + sum_{i>=1} m_i z^i, for
// 0 <= s, j <= L. Column j only needs m_1..m_j.
class MomentPowers {
 public:
  explicit MomentPowers(std::size_t length) : length_(length), table_(length + 1) {
    for (auto& row : table_) row.assign(length + 1, QSqrt2());
    for (std::size_t s = 0; s <= length; ++s) table_[s][0] = QSqrt2(1);
    moments_.push_back(QSqrt2(1));
  }

  // Appends m_j (j = number of moments pushed so far) and fills column j.
  void push(const QSqrt2& m) {
    moments_.push_back(m);
    const std::size_t j = moments_.size() - 1;
    for (std::size_t s = 1; s <= length_; ++s) {
      QSqrt2 acc;
      for (std::size_t i = 0; i <= j; ++i) {
        if (moments_[i].is_zero() || table_[s - 1][j - i].is_zero()) continue;
        acc += moments_[i] * table_[s - 1][j - i];
      }
      table_[s][j] = std::move(acc);
    }
  }

  const QSqrt2& at(std::size_t s, std::size_t j) const { return table_[s][j]; }

 private:
  std::size_t length_;
  Table table_;
  std::vector<QSqrt2> moments_;
};

// (k-1)! / (k-s)!: ways to choose and order the s-1 companions of element 1.
Rational falling(std::size_t k, std::size_t s) {
  return Rational(factorial(static_cast<unsigned>(k - 1))) /
         Rational(factorial(static_cast<unsigned>(k - s)));
}

std::vector<QSqrt2> free_c2m(std::span<const QSqrt2> c) {
  const std::size_t L = c.size();
  MomentPowers powers(L);
  std::vector<QSqrt2> m;
  for (std::size_t k = 1; k <= L; ++k) {
    QSqrt2 mk;
    for (std::size_t s = 1; s <= k; ++s) {
      if (!c[s - 1].is_zero()) mk += c[s - 1] * powers.at(s, k - s);
    }
    powers.push(mk);
    m.push_back(std::move(mk));
  }
  return m;
}

std::vector<QSqrt2> free_m2c(std::span<const QSqrt2> m, const MomentPowers& powers) {
  std::vector<QSqrt2> c;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    QSqrt2 ck = m[k - 1];
    for (std::size_t s = 1; s < k; ++s) {
      if (!c[s - 1].is_zero()) ck -= c[s - 1] * powers.at(s, k - s);
    }
    c.push_back(std::move(ck));
  }
  return c;
}

MomentPowers powers_of(std::span<const QSqrt2> m) {
  MomentPowers powers(m.size());
  for (const auto& x : m) powers.push(x);
  return powers;
}

// m_k = sum_{s=1}^k (k-1)!/(k-s)! c_s m_{k-s}
std::vector<QSqrt2> classical_c2m(std::span<const QSqrt2> c) {
  std::vector<QSqrt2> m{QSqrt2(1)};
  for (std::size_t k = 1; k <= c.size(); ++k) {
    QSqrt2 mk;
    for (std::size_t s = 1; s <= k; ++s) {
      if (c[s - 1].is_zero() || m[k - s].is_zero()) continue;
      mk += QSqrt2(falling(k, s)) * c[s - 1] * m[k - s];
    }
    m.push_back(std::move(mk));
  }
  m.erase(m.begin());
  return m;
}

std::vector<QSqrt2> classical_m2c(std::span<const QSqrt2> m_in) {
  std::vector<QSqrt2> m{QSqrt2(1)};
  m.insert(m.end(), m_in.begin(), m_in.end());
  std::vector<QSqrt2> c;
  for (std::size_t k = 1; k < m.size(); ++k) {
    QSqrt2 rest;
    for (std::size_t s = 1; s < k; ++s) {
      if (c[s - 1].is_zero() || m[k - s].is_zero()) continue;
      rest += QSqrt2(falling(k, s)) * c[s - 1] * m[k - s];
    }
    const Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(k - 1)));
    c.push_back((m[k] - rest) * QSqrt2(inv));
  }
  return c;
}

}  // namespace

Sequence moments_to_cumulants(const Sequence& moments) {
  require_kind(moments, SequenceKind::moments, "moments_to_cumulants");
  const auto m = moments.entries();
  std::vector<QSqrt2> c = moments.flavor() == Flavor::free ? free_m2c(m, powers_of(m))
                                                           : classical_m2c(m);
  return Sequence(moments.flavor(), SequenceKind::cumulants, std::move(c));
}

Sequence cumulants_to_moments(const Sequence& cumulants) {
  require_kind(cumulants, SequenceKind::cumulants, "cumulants_to_moments");
  const auto c = cumulants.entries();
  std::vector<QSqrt2> m =
      cumulants.flavor() == Flavor::free ? free_c2m(c) : classical_c2m(c);
  return Sequence(cumulants.flavor(), SequenceKind::moments, std::move(m));
}

Sequence cumulants_to_moments_by_partitions(const Sequence& cumulants,
                                            const PartitionSumTables& tables) {
  require_kind(cumulants, SequenceKind::cumulants, "cumulants_to_moments_by_partitions");
  if (tables.flavor != cumulants.flavor()) {
    throw std::invalid_argument("partition tables built for the other flavor");
  }
  return Sequence(cumulants.flavor(), SequenceKind::moments,
                  moments_by_partition_sum<QSqrt2>(cumulants.entries(), tables));
}

Sequence moments_to_cumulants_by_partitions(const Sequence& moments,
                                            const PartitionSumTables& tables) {
  require_kind(moments, SequenceKind::moments, "moments_to_cumulants_by_partitions");
  if (tables.flavor != moments.flavor()) {
    throw std::invalid_argument("partition tables built for the other flavor");
  }
  return Sequence(moments.flavor(), SequenceKind::cumulants,
                  cumulants_by_partition_sum<QSqrt2>(moments.entries(), tables));
}

Sequence cumulants_to_moments_by_partitions(const Sequence& cumulants, int max_ground_size) {
  return cumulants_to_moments_by_partitions(
      cumulants,
      PartitionSumTables::build(cumulants.flavor(), cumulants.length(), max_ground_size));
}

Sequence moments_to_cumulants_by_partitions(const Sequence& moments, int max_ground_size) {
  return moments_to_cumulants_by_partitions(
      moments, PartitionSumTables::build(moments.flavor(), moments.length(), max_ground_size));
}

Sequence gateaux_derivative(const Sequence& base_moments, const Sequence& direction_moments) {
  require_kind(base_moments, SequenceKind::moments, "gateaux_derivative (base)");
  require_kind(direction_moments, SequenceKind::moments, "gateaux_derivative (direction)");
  if (base_moments.flavor() != direction_moments.flavor() ||
      base_moments.length() != direction_moments.length()) {
    throw std::invalid_argument("gateaux_derivative: base and direction must share flavor and length");
  }
  const std::size_t L = base_moments.length();
  const auto dm = direction_moments.entries();
  std::vector<QSqrt2> f;
  f.reserve(L);

  if (base_moments.flavor() == Flavor::free) {
    // Differentiate m_k = sum_s c_s [z^{k-s}] M^s:
    //   dm_k = sum_s f_s [z^{k-s}] M^s + sum_s c_s s [z^{k-s}] (M^{s-1} dM).
    const MomentPowers powers = powers_of(base_moments.entries());
    const std::vector<QSqrt2> c = free_m2c(base_moments.entries(), powers);
    for (std::size_t k = 1; k <= L; ++k) {
      QSqrt2 fk = dm[k - 1];
      for (std::size_t s = 1; s < k; ++s) {
        if (!f[s - 1].is_zero()) fk -= f[s - 1] * powers.at(s, k - s);
        if (c[s - 1].is_zero()) continue;
        QSqrt2 mixed;
        for (std::size_t i = 1; i <= k - s; ++i) {
          if (!dm[i - 1].is_zero()) mixed += dm[i - 1] * powers.at(s - 1, k - s - i);
        }
        fk -= c[s - 1] * QSqrt2(static_cast<long>(s)) * mixed;
      }
      f.push_back(std::move(fk));
    }
  } else {
    // Differentiate m_k = sum_s (k-1)!/(k-s)! c_s m_{k-s}.
    std::vector<QSqrt2> m{QSqrt2(1)};
    for (const auto& x : base_moments.entries()) m.push_back(x);
    std::vector<QSqrt2> d{QSqrt2()};
    for (const auto& x : dm) d.push_back(x);
    const std::vector<QSqrt2> c = classical_m2c(base_moments.entries());
    for (std::size_t k = 1; k <= L; ++k) {
      QSqrt2 rest;
      for (std::size_t s = 1; s < k; ++s) {
        const QSqrt2 w(falling(k, s));
        rest += w * (f[s - 1] * m[k - s] + c[s - 1] * d[k - s]);
      }
      const Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(k - 1)));
      f.push_back((d[k] - rest) * QSqrt2(inv));
    }
  }
  return Sequence(base_moments.flavor(), SequenceKind::cumulants, std::move(f));
}

Sequence chi_moments(Flavor flavor, std::size_t length) {
  std::vector<QSqrt2> m;
  for (std::size_t k = 1; k <= length; ++k) {
    if (k % 2 == 1) {
      m.emplace_back();
      continue;
    }
    const unsigned h = static_cast<unsigned>(k / 2);
    if (flavor == Flavor::free) {
      m.emplace_back(Rational(binomial(2 * h, h)) / Rational(static_cast<long>(h + 1)));
    } else {
      // (2h-1)!! = (2h)! / (h! 2^h)
      BigInt denom = factorial(h);
      denom <<= h;
      m.emplace_back(Rational(BigInt(factorial(2 * h) / denom)));
    }
  }
  return Sequence(flavor, SequenceKind::moments, std::move(m));
}

Sequence bernoulli_moments(Flavor flavor, std::size_t length) {
  std::vector<QSqrt2> m;
  for (std::size_t k = 1; k <= length; ++k) m.emplace_back(k % 2 == 0 ? 1L : 0L);
  return Sequence(flavor, SequenceKind::moments, std::move(m));
}

Sequence classical_moment_convolution(const Sequence& a, const Sequence& b) {
  require_kind(a, SequenceKind::moments, "classical_moment_convolution");
  require_kind(b, SequenceKind::moments, "classical_moment_convolution");
  if (a.length() != b.length()) {
    throw std::invalid_argument("classical_moment_convolution: lengths differ");
  }
  auto entry = [](const Sequence& s, std::size_t j) { return j == 0 ? QSqrt2(1) : s.at(j); };
  std::vector<QSqrt2> out;
  for (std::size_t k = 1; k <= a.length(); ++k) {
    QSqrt2 acc;
    for (std::size_t j = 0; j <= k; ++j) {
      acc += QSqrt2(Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)))) *
             entry(a, j) * entry(b, k - j);
    }
    out.push_back(std::move(acc));
  }
  return Sequence(a.flavor(), SequenceKind::moments, std::move(out));
}

}  // namespace freeclt
