#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "oseq/complex.hpp"
#include "oseq/monomial.hpp"

namespace oseq {

// Class sizes a_1..a_p, all positive.
using Weights = std::vector<std::uint32_t>;

// All d-subsets of [n].
Matroid uniform(std::size_t d, std::size_t n);

// Rank |s| on [n]: facets {i_1 < ... < i_d} with i_j <= s_j. s must be strictly increasing
// within 1..n.
Matroid schubert(std::size_t n, const std::vector<std::size_t>& s);

// Facets A_{i_1} ... A_{i_{d-t}} A_{p-t+1} ... A_p for i_1 < ... < i_{d-t} <= p-t, where
// class A_i occupies a_i consecutive labels. Needs 2 <= d <= p and t <= d-2.
Matroid delta_t(std::size_t d, std::size_t p, const Weights& a, std::size_t t);
Matroid complete_matroid(std::size_t d, std::size_t p, const Weights& a);

// Simple rank-3 matroid on 7 points (28 bases).
Matroid fano();
// Simple rank-4 matroid on 8 points in which {1,5} is a cocircuit (44 bases).
Matroid fano_series_extension();

// Ordered blocks over elements of [p] (1-based) together with the weights a_1..a_p.
struct PartitionMonomial {
  std::vector<std::vector<std::uint32_t>> blocks;
  Weights weights;

  // "[1|2,3|4]"
  std::string to_string() const;
  friend bool operator==(const PartitionMonomial&, const PartitionMonomial&) = default;
};

// Exponent i is (sum of a_j over block i) - 1.
Monomial realize_partition(const PartitionMonomial& pm);

// The interval partitions [l_0..l_1-1 | l_1..l_2-1 | ... ] of {first, ..., last} into k
// blocks, lexicographic in (l_1, ..., l_{k-1}). The empty range has one partition into
// zero blocks.
std::vector<std::vector<std::vector<std::uint32_t>>> interval_partitions(std::uint32_t first,
                                                                          std::uint32_t last,
                                                                          std::size_t k);

// Partitions P(l_0..l_{d-t}) | p-t+1 | ... | p, in generator order.
std::vector<PartitionMonomial> gamma_t_partitions(std::size_t d, std::size_t p, const Weights& a,
                                                  std::size_t t);
OrderIdeal gamma_t(std::size_t d, std::size_t p, const Weights& a, std::size_t t);

}  // namespace oseq
