#include <bit>

#include "impl.hpp"

namespace oseq::kernels::scalar {

namespace {

inline bool divides_packed(std::uint64_t a, std::uint64_t b) {
  for (int byte = 0; byte < 8; ++byte) {
    const auto ea = static_cast<std::uint8_t>(a >> (8 * byte));
    const auto eb = static_cast<std::uint8_t>(b >> (8 * byte));
    if (ea > eb) return false;
  }
  return true;
}

}  // namespace

void divisor_mask(const std::uint64_t* table, std::size_t n, std::uint64_t m, std::uint64_t* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (divides_packed(table[j], m)) out[j / 64] |= std::uint64_t{1} << (j % 64);
  }
}

std::uint64_t union_popcount(const std::uint64_t* base, const std::uint64_t* const* rows,
                             std::size_t nrows, std::size_t begin, std::size_t end,
                             std::uint64_t* out) {
  std::uint64_t count = 0;
  for (std::size_t w = begin; w < end; ++w) {
    std::uint64_t acc = base ? base[w] : 0;
    for (std::size_t r = 0; r < nrows; ++r) acc |= rows[r][w];
    out[w] = acc;
    count += static_cast<std::uint64_t>(std::popcount(acc));
  }
  return count;
}

std::uint64_t popcount(const std::uint64_t* words, std::size_t begin, std::size_t end) {
  std::uint64_t count = 0;
  for (std::size_t w = begin; w < end; ++w) count += static_cast<std::uint64_t>(std::popcount(words[w]));
  return count;
}

}  // namespace oseq::kernels::scalar
