#pragma once

// Random instance families for property tests. Everything is driven by an explicit seed.

#include <cstdint>
#include <random>
#include <vector>

#include "oseq/combinatorics.hpp"
#include "oseq/complex.hpp"
#include "oseq/monomial.hpp"

namespace gen {

// Exact determinant of a small integer matrix by fraction-free elimination.
inline std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = static_cast<std::int64_t>(v / prev);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Column matroid of a random d x n integer matrix with entries in [-range, range].
// Small ranges give parallel elements and loops; retries until the rank is d.
inline oseq::Matroid random_matroid(std::mt19937_64& rng, std::size_t d, std::size_t n, int range = 2) {
  std::uniform_int_distribution<int> entry(-range, range);
  while (true) {
    std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(d));
    for (auto& c : cols) {
      for (auto& x : c) x = entry(rng);
    }
    std::vector<oseq::VertexSet> bases;
    std::vector<std::uint32_t> pick(d);
    for (std::uint32_t i = 0; i < d; ++i) pick[i] = i;
    do {
      std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) m[r][c] = cols[pick[c]][r];
      }
      if (bareiss_det(m) != 0) {
        oseq::VertexSet b = 0;
        for (auto v : pick) b |= oseq::vertex_bit(v + 1);
        bases.push_back(b);
      }
    } while (oseq::colex_next(pick, static_cast<std::uint32_t>(n)));
    if (!bases.empty()) return oseq::Matroid::assume_valid(oseq::SimplicialComplex(n, std::move(bases)));
  }
}

// Pure order ideal with t random generators of degree s in d variables.
inline oseq::OrderIdeal random_pure_ideal(std::mt19937_64& rng, std::size_t d, std::uint32_t s, std::size_t t) {
  const auto all = oseq::monomials_of_degree(d, s);
  std::vector<oseq::Monomial> gens;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (std::size_t i = 0; i < t; ++i) gens.push_back(all[pick(rng)]);
  return oseq::OrderIdeal(d, std::move(gens));
}

inline std::vector<std::uint32_t> random_weights(std::mt19937_64& rng, std::size_t p, std::uint32_t max) {
  std::uniform_int_distribution<std::uint32_t> w(1, max);
  std::vector<std::uint32_t> a(p);
  for (auto& x : a) x = w(rng);
  return a;
}

}  // namespace gen
