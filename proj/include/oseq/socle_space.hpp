#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "oseq/monomial.hpp"

namespace oseq {

// Fast face counting for pure order ideals with a fixed number of variables and socle
// degree s. Every monomial of degree < s gets one bit; layer k occupies its own run of
// whole words. A degree-s monomial is represented by the row of bits of its divisors,
// so the face numbers of a socle are popcounts of the union of its rows, taken layer by
// layer from the top.
class SocleSpace {
 public:
  SocleSpace(std::size_t num_vars, std::uint32_t socle_degree);

  std::size_t num_vars() const { return num_vars_; }
  std::uint32_t socle_degree() const { return socle_degree_; }

  // Degree-s monomials, lexicographically ascending.
  const std::vector<Monomial>& top() const { return top_; }
  std::optional<std::size_t> top_index(const Monomial& m) const;

  // Words per divisor row.
  std::size_t words() const { return words_; }
  std::size_t layer_begin(std::uint32_t k) const { return layer_word_begin_[k]; }
  std::size_t layer_end(std::uint32_t k) const { return layer_word_begin_[k + 1]; }
  std::size_t layer_size(std::uint32_t k) const { return layers_[k].size(); }

  // Divisor bits of a degree-s monomial.
  std::vector<std::uint64_t> divisor_row(const Monomial& m) const;

  // Rows of all top monomials, laid out contiguously; computed once.
  void precompute_rows();
  bool has_rows() const { return !rows_.empty() || top_.empty(); }
  const std::uint64_t* row(std::size_t top_index) const { return rows_.data() + top_index * words_; }

  // Compares the ideal generated by the socle whose divisor rows are given against
  // `target`, descending from the top and stopping at the first disagreement. Rows must
  // belong to distinct monomials. `scratch` needs words() entries.
  PruneResult match(std::span<const std::uint64_t* const> rows, const FVector& target,
                    std::uint64_t* scratch) const;

  FVector f_vector(std::span<const std::uint64_t* const> rows, std::uint64_t* scratch) const;

  // Count of set bits of `bits` inside layer k.
  std::uint64_t layer_count(const std::uint64_t* bits, std::uint32_t k) const;

 private:
  std::size_t num_vars_;
  std::uint32_t socle_degree_;
  bool packed_;
  std::vector<Monomial> top_;
  std::vector<std::vector<Monomial>> layers_;
  std::vector<std::vector<std::uint64_t>> packed_layers_;
  std::vector<std::size_t> layer_word_begin_;
  std::size_t words_ = 0;
  std::unordered_map<Monomial, std::size_t, MonomialHash> top_lookup_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace oseq
