#include "oseq/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "oseq/errors.hpp"

namespace oseq {

std::optional<std::uint64_t> binomial_checked(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i is exact at every step.
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  auto v = binomial_checked(n, k);
  if (!v) {
    throw OverflowError("C(" + std::to_string(n) + "," + std::to_string(k) +
                        ") exceeds 64 bits");
  }
  return *v;
}

BigInt binomial_big(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;
  }
  return acc;
}

std::uint64_t colex_rank(std::span<const std::uint32_t> subset) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) rank += binomial(subset[i], i + 1);
  return rank;
}

std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::uint32_t n, std::uint32_t t) {
  auto total = binomial_checked(n, t);
  if (total && rank >= *total) {
    throw InputError("rank " + std::to_string(rank) + " out of range for C(" +
                     std::to_string(n) + "," + std::to_string(t) + ")");
  }
  std::vector<std::uint32_t> out(t);
  std::uint32_t hi = n;
  for (std::uint32_t i = t; i > 0; --i) {
    // largest c < hi with C(c, i) <= rank
    std::uint32_t lo = i - 1;
    std::uint32_t c = hi - 1;
    while (c > lo && binomial(c, i) > rank) --c;
    out[i - 1] = c;
    rank -= binomial(c, i);
    hi = c;
  }
  return out;
}

bool colex_next(std::span<std::uint32_t> subset, std::uint32_t n) {
  const std::size_t t = subset.size();
  if (t == 0) return false;
  for (std::size_t i = 0; i < t; ++i) {
    const std::uint32_t limit = (i + 1 < t) ? subset[i + 1] : n;
    if (subset[i] + 1 < limit) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<std::uint32_t>(j);
      return true;
    }
  }
  return false;
}

std::vector<RankRange> split_range(RankRange range, std::size_t parts) {
  std::vector<RankRange> out;
  const std::uint64_t total = range.size();
  if (total == 0 || parts == 0) return out;
  parts = static_cast<std::size_t>(std::min<std::uint64_t>(parts, total));
  const std::uint64_t base = total / parts;
  const std::uint64_t extra = total % parts;
  std::uint64_t at = range.begin;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::uint64_t len = base + (i < extra ? 1 : 0);
    out.push_back({at, at + len});
    at += len;
  }
  return out;
}

}  // namespace oseq
