#pragma once

// Independent reference computations. Nothing here calls into the library
// beyond its number types.

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <vector>

#include "freeclt/rational.hpp"

namespace freeclt::testing {

using Blocks = std::vector<std::vector<int>>;

/// All set partitions of {1..k}, built by inserting element i into each
/// existing block or a new one.
inline std::vector<Blocks> all_partitions(int k) {
  std::vector<Blocks> out;
  Blocks current;
  std::function<void(int)> place = [&](int i) {
    if (i > k) {
      out.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(i);
      place(i + 1);
      current[b].pop_back();
    }
    current.push_back({i});
    place(i + 1);
    current.pop_back();
  };
  place(1);
  return out;
}

/// Two blocks cross iff their elements interleave as a < b < c < d.
inline bool blocks_cross(const std::vector<int>& x, const std::vector<int>& y) {
  for (int a : x) {
    for (int c : x) {
      if (c <= a) continue;
      bool inside = false;
      bool outside = false;
      for (int b : y) {
        if (a < b && b < c) inside = true;
        if (b < a || b > c) outside = true;
      }
      if (inside && outside) return true;
    }
  }
  return false;
}

inline bool oracle_noncrossing(const Blocks& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (blocks_cross(p[i], p[j])) return false;
    }
  }
  return true;
}

/// Bell numbers by the Bell triangle.
inline std::vector<BigInt> bell_numbers(int up_to) {
  std::vector<BigInt> bell{1};
  std::vector<BigInt> row{1};
  for (int n = 1; n <= up_to; ++n) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

/// Catalan numbers by C_{n+1} = sum C_i C_{n-i}.
inline std::vector<BigInt> catalan_numbers(int up_to) {
  std::vector<BigInt> c{1};
  for (int n = 1; n <= up_to; ++n) {
    BigInt s = 0;
    for (int i = 0; i < n; ++i) s += c[i] * c[n - 1 - i];
    c.push_back(s);
  }
  return c;
}

/// Composite Simpson rule on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace freeclt::testing
