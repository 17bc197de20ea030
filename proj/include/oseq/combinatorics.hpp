#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oseq {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k) in 64 bits; nullopt when the value does not fit.
std::optional<std::uint64_t> binomial_checked(std::uint64_t n, std::uint64_t k);

// C(n, k) in 64 bits; throws OverflowError when it does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

BigInt binomial_big(std::uint64_t n, std::uint64_t k);

// Colex ranking of t-subsets of {0, ..., n-1}. The subset c_0 < c_1 < ... < c_{t-1}
// has rank sum_i C(c_i, i + 1). Rank 0 is {0, ..., t-1}.
std::uint64_t colex_rank(std::span<const std::uint32_t> subset);
std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::uint32_t n, std::uint32_t t);

// Advances to the colex successor in place. Returns false after the last subset.
bool colex_next(std::span<std::uint32_t> subset, std::uint32_t n);

// Half-open interval of combination ranks.
struct RankRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  std::uint64_t size() const { return end > begin ? end - begin : 0; }
  friend bool operator==(const RankRange&, const RankRange&) = default;
};

// Splits [range.begin, range.end) into at most `parts` contiguous, ordered pieces.
std::vector<RankRange> split_range(RankRange range, std::size_t parts);

}  // namespace oseq
