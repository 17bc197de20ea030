#include "oseq/constructions.hpp"

#include <numeric>

#include "oseq/combinatorics.hpp"
#include "oseq/errors.hpp"
#include "text_util.hpp"

namespace oseq {

namespace {

constexpr std::uint64_t kMaxGeneratedFacets = 10'000'000;

std::vector<VertexSet> all_subsets(std::size_t n, std::size_t d) {
  const auto count = binomial_checked(n, d);
  if (!count || *count > kMaxGeneratedFacets) throw OverflowError("too many facets to generate");
  std::vector<VertexSet> out;
  out.reserve(*count);
  std::vector<std::uint32_t> pick(d);
  std::iota(pick.begin(), pick.end(), 0u);
  do {
    VertexSet f = 0;
    for (auto i : pick) f |= vertex_bit(i + 1);
    out.push_back(f);
  } while (d > 0 && colex_next(pick, static_cast<std::uint32_t>(n)));
  return out;
}

// Whitespace-separated facets written as digit strings, e.g. "123 124".
std::vector<VertexSet> digit_facets(std::string_view text) {
  std::vector<VertexSet> out;
  for (auto token : detail::split_ws(text)) {
    VertexSet f = 0;
    for (char ch : token) f |= vertex_bit(static_cast<std::size_t>(ch - '0'));
    out.push_back(f);
  }
  return out;
}

void check_weights(std::size_t p, const Weights& a) {
  if (a.size() != p) {
    throw InputError("expected " + std::to_string(p) + " weights, got " + std::to_string(a.size()));
  }
  for (auto w : a) {
    if (w == 0) throw InputError("weights must be positive");
  }
}

void check_delta_params(std::size_t d, std::size_t p, std::size_t t) {
  if (d < 2 || d > p) throw InputError("need 2 <= d <= p, got d=" + std::to_string(d) + ", p=" + std::to_string(p));
  if (t > d - 2) throw InputError("need t <= d-2, got t=" + std::to_string(t));
}

}  // namespace

Matroid uniform(std::size_t d, std::size_t n) {
  if (n > kMaxVertices) throw OverflowError("at most 64 vertices are supported");
  if (d > n) throw InputError("uniform matroid needs d <= n");
  return Matroid::assume_valid(SimplicialComplex(n, all_subsets(n, d)));
}

Matroid schubert(std::size_t n, const std::vector<std::size_t>& s) {
  if (n > kMaxVertices) throw OverflowError("at most 64 vertices are supported");
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == 0 || s[j] > n || (j > 0 && s[j] <= s[j - 1])) {
      throw InputError("Schubert bounds must be strictly increasing within 1.." + std::to_string(n));
    }
  }
  std::vector<VertexSet> facets;
  for (VertexSet f : all_subsets(n, s.size())) {
    const auto vs = vertices_of(f);
    bool ok = true;
    for (std::size_t j = 0; j < vs.size() && ok; ++j) ok = vs[j] <= s[j];
    if (ok) facets.push_back(f);
  }
  return Matroid::assume_valid(SimplicialComplex(n, std::move(facets)));
}

Matroid delta_t(std::size_t d, std::size_t p, const Weights& a, std::size_t t) {
  check_delta_params(d, p, t);
  check_weights(p, a);
  VertexSet tail = 0;
  for (std::size_t i = p - t + 1; i <= p; ++i) tail |= vertex_bit(i);
  std::vector<VertexSet> facets;
  for (VertexSet f : all_subsets(p - t, d - t)) facets.push_back(f | tail);
  return Matroid::assume_valid(expand_weighted(SimplicialComplex(p, std::move(facets)), a));
}

Matroid complete_matroid(std::size_t d, std::size_t p, const Weights& a) { return delta_t(d, p, a, 0); }

Matroid fano() {
  static const char* kFacets =
      "123 124 125 127 135 136 137 145 146 147 156 167 234 235 236 246 247 256 257 267 "
      "345 346 347 357 367 456 457 567";
  return Matroid::assume_valid(SimplicialComplex(7, digit_facets(kFacets)));
}

Matroid fano_series_extension() {
  static const char* kFacets =
      "1235 1236 1237 1238 1245 1246 1247 1248 1256 1257 1268 1278 1345 1346 1347 "
      "1348 1357 1358 1367 1368 1456 1458 1467 1478 1567 1568 1578 1678 2356 2357 "
      "2358 2456 2457 2458 2568 2578 3456 3457 3458 3567 3568 4567 4578 5678";
  return Matroid::assume_valid(SimplicialComplex(8, digit_facets(kFacets)));
}

std::vector<PartitionMonomial> gamma_t_partitions(std::size_t d, std::size_t p, const Weights& a,
                                                  std::size_t t) {
  check_delta_params(d, p, t);
  check_weights(p, a);
  std::vector<PartitionMonomial> out;
  for (auto& blocks : interval_partitions(1, static_cast<std::uint32_t>(p - t), d - t)) {
    for (std::size_t i = p - t + 1; i <= p; ++i) blocks.push_back({static_cast<std::uint32_t>(i)});
    out.push_back({std::move(blocks), a});
  }
  return out;
}

OrderIdeal gamma_t(std::size_t d, std::size_t p, const Weights& a, std::size_t t) {
  std::vector<Monomial> gens;
  for (const auto& pm : gamma_t_partitions(d, p, a, t)) gens.push_back(realize_partition(pm));
  return OrderIdeal(d, std::move(gens));
}

}  // namespace oseq
