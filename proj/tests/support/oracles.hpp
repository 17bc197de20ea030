#pragma once

// Slow, obviously-correct reference computations used to check the library. None of
// these call into the code paths they are compared against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "oseq/complex.hpp"
#include "oseq/monomial.hpp"

namespace oracle {

using oseq::Exponent;
using oseq::Monomial;
using oseq::VertexSet;

inline bool divides(const std::vector<Exponent>& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Walks the whole box below the largest exponents and counts divisors by degree.
inline std::vector<std::uint64_t> monomial_f(const std::vector<Monomial>& gens, std::size_t vars) {
  if (gens.empty()) return {1};
  std::vector<Exponent> top(vars, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < vars; ++i) top[i] = std::max(top[i], g[i]);
  }
  std::vector<std::uint64_t> counts;
  std::vector<Exponent> e(vars, 0);
  while (true) {
    if (std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(e, g); })) {
      std::size_t deg = 0;
      for (auto x : e) deg += x;
      if (counts.size() <= deg) counts.resize(deg + 1, 0);
      ++counts[deg];
    }
    std::size_t i = 0;
    while (i < vars && e[i] == top[i]) e[i++] = 0;
    if (i == vars) break;
    ++e[i];
  }
  return counts;
}

// All subsets of the support checked against every facet.
inline std::vector<std::uint64_t> complex_f(const oseq::SimplicialComplex& c) {
  if (c.facets().empty()) return {};
  const auto vs = oseq::vertices_of(c.support());
  std::vector<std::uint64_t> counts(vs.size() + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    VertexSet s = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (mask >> i & 1) s |= oseq::vertex_bit(vs[i]);
    }
    if (std::any_of(c.facets().begin(), c.facets().end(), [&](VertexSet f) { return (s & ~f) == 0; })) {
      ++counts[static_cast<std::size_t>(std::popcount(mask))];
    }
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

// Expands sum_i f_i (x-1)^{d-i} as a polynomial and reads coefficients of x^{d-i}.
inline std::vector<std::int64_t> h_from_f(const std::vector<std::uint64_t>& f) {
  if (f.empty()) return {};
  const std::size_t d = f.size() - 1;
  std::vector<std::int64_t> poly(d + 1, 0);  // poly[k] = coefficient of x^k
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<std::int64_t> term{static_cast<std::int64_t>(f[i])};
    for (std::size_t r = 0; r < d - i; ++r) {
      std::vector<std::int64_t> next(term.size() + 1, 0);
      for (std::size_t k = 0; k < term.size(); ++k) {
        next[k + 1] += term[k];
        next[k] -= term[k];
      }
      term = std::move(next);
    }
    for (std::size_t k = 0; k < term.size(); ++k) poly[k] += term[k];
  }
  std::vector<std::int64_t> h(d + 1);
  for (std::size_t i = 0; i <= d; ++i) h[i] = poly[d - i];
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

// Independence augmentation over all faces; the complex must be small.
inline bool is_matroid(const oseq::SimplicialComplex& c) {
  if (c.facets().empty()) return false;
  std::vector<VertexSet> faces;
  const auto vs = oseq::vertices_of(c.ground());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    VertexSet s = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (mask >> i & 1) s |= oseq::vertex_bit(vs[i]);
    }
    if (std::any_of(c.facets().begin(), c.facets().end(), [&](VertexSet f) { return (s & ~f) == 0; })) {
      faces.push_back(s);
    }
  }
  const std::set<VertexSet> face_set(faces.begin(), faces.end());
  for (VertexSet i : faces) {
    for (VertexSet j : faces) {
      if (std::popcount(i) >= std::popcount(j)) continue;
      bool ok = false;
      for (VertexSet x = j & ~i; x && !ok; x &= x - 1) ok = face_set.contains(i | (x & (~x + 1)));
      if (!ok) return false;
    }
  }
  return true;
}

inline std::vector<Monomial> degree_monomials(std::size_t vars, std::uint32_t deg) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(vars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == vars) {
      e[i] = static_cast<Exponent>(left);
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t x = 0; x <= left; ++x) {
      e[i] = static_cast<Exponent>(x);
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, deg);
  return out;
}

// Every t-subset of degree-s monomials, no shortcut.
inline std::set<std::vector<std::uint64_t>> pure_o_sequences(std::size_t d, std::uint32_t s, std::size_t t) {
  const auto mons = degree_monomials(d, s);
  std::set<std::vector<std::uint64_t>> out;
  std::vector<Monomial> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == t) {
      out.insert(monomial_f(pick, d));
      return;
    }
    for (std::size_t i = from; i < mons.size(); ++i) {
      pick.push_back(mons[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace oracle
