#include <algorithm>
#include <numeric>

#include "oseq/combinatorics.hpp"
#include "oseq/constructions.hpp"
#include "oseq/errors.hpp"

namespace oseq {

std::string PartitionMonomial::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks[i][j]);
    }
  }
  return out + "]";
}

Monomial realize_partition(const PartitionMonomial& pm) {
  std::vector<bool> used(pm.weights.size() + 1, false);
  std::vector<Exponent> exps;
  for (const auto& block : pm.blocks) {
    if (block.empty()) throw InputError("partition " + pm.to_string() + " has an empty block");
    std::uint64_t sum = 0;
    for (std::uint32_t j : block) {
      if (j == 0 || j > pm.weights.size()) {
        throw InputError("partition " + pm.to_string() + " uses element " + std::to_string(j) +
                         " without a weight");
      }
      if (used[j]) throw InputError("partition " + pm.to_string() + " repeats element " + std::to_string(j));
      if (pm.weights[j - 1] == 0) throw InputError("weights must be positive");
      used[j] = true;
      sum += pm.weights[j - 1];
    }
    if (sum - 1 > kMaxDegree) throw OverflowError("partition exponent too large");
    exps.push_back(static_cast<Exponent>(sum - 1));
  }
  return Monomial(std::move(exps));
}

std::vector<std::vector<std::vector<std::uint32_t>>> interval_partitions(std::uint32_t first,
                                                                          std::uint32_t last,
                                                                          std::size_t k) {
  std::vector<std::vector<std::vector<std::uint32_t>>> out;
  const std::size_t m = last >= first ? last - first + 1 : 0;
  if (k == 0) {
    if (m == 0) out.emplace_back();
    return out;
  }
  if (m < k) return out;
  // Cut points chosen from the m-1 gaps, lexicographically.
  std::vector<std::uint32_t> cuts(k - 1);
  std::iota(cuts.begin(), cuts.end(), first + 1);
  while (true) {
    std::vector<std::vector<std::uint32_t>> blocks;
    std::uint32_t start = first;
    for (std::size_t b = 0; b < k; ++b) {
      const std::uint32_t stop = b + 1 < k ? cuts[b] : last + 1;
      std::vector<std::uint32_t> block(stop - start);
      std::iota(block.begin(), block.end(), start);
      blocks.push_back(std::move(block));
      start = stop;
    }
    out.push_back(std::move(blocks));
    // Lexicographic successor of the cut vector within first+1..last.
    std::size_t i = cuts.size();
    while (i > 0 && cuts[i - 1] == last - (cuts.size() - i)) --i;
    if (i == 0) break;
    ++cuts[i - 1];
    for (std::size_t j = i; j < cuts.size(); ++j) cuts[j] = cuts[j - 1] + 1;
  }
  return out;
}

}  // namespace oseq
