#include <arm_neon.h>

#include <bit>

#include "impl.hpp"

namespace oseq::kernels::neon {

void divisor_mask(const std::uint64_t* table, std::size_t n, std::uint64_t m, std::uint64_t* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  const uint8x16_t target = vreinterpretq_u8_u64(vdupq_n_u64(m));
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const uint8x16_t a = vreinterpretq_u8_u64(vld1q_u64(table + j));
    // bytes where a <= m are all-ones; a lane divides iff all eight bytes are set
    const uint64x2_t le = vreinterpretq_u64_u8(vcleq_u8(a, target));
    const uint64x2_t full = vceqq_u64(le, vdupq_n_u64(~std::uint64_t{0}));
    const std::uint64_t bits = (vgetq_lane_u64(full, 0) & 1u) | ((vgetq_lane_u64(full, 1) & 1u) << 1);
    out[j / 64] |= bits << (j % 64);
  }
  for (; j < n; ++j) {
    bool ok = true;
    for (int byte = 0; byte < 8 && ok; ++byte) {
      ok = static_cast<std::uint8_t>(table[j] >> (8 * byte)) <= static_cast<std::uint8_t>(m >> (8 * byte));
    }
    if (ok) out[j / 64] |= std::uint64_t{1} << (j % 64);
  }
}

std::uint64_t union_popcount(const std::uint64_t* base, const std::uint64_t* const* rows,
                             std::size_t nrows, std::size_t begin, std::size_t end,
                             std::uint64_t* out) {
  std::size_t w = begin;
  uint64x2_t total = vdupq_n_u64(0);
  for (; w + 2 <= end; w += 2) {
    uint64x2_t acc = base ? vld1q_u64(base + w) : vdupq_n_u64(0);
    for (std::size_t r = 0; r < nrows; ++r) acc = vorrq_u64(acc, vld1q_u64(rows[r] + w));
    vst1q_u64(out + w, acc);
    total = vaddq_u64(total, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(acc))))));
  }
  std::uint64_t count = vgetq_lane_u64(total, 0) + vgetq_lane_u64(total, 1);
  for (; w < end; ++w) {
    std::uint64_t acc = base ? base[w] : 0;
    for (std::size_t r = 0; r < nrows; ++r) acc |= rows[r][w];
    out[w] = acc;
    count += static_cast<std::uint64_t>(std::popcount(acc));
  }
  return count;
}

std::uint64_t popcount(const std::uint64_t* words, std::size_t begin, std::size_t end) {
  std::size_t w = begin;
  uint64x2_t total = vdupq_n_u64(0);
  for (; w + 2 <= end; w += 2) {
    total = vaddq_u64(total, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(words + w)))))));
  }
  std::uint64_t count = vgetq_lane_u64(total, 0) + vgetq_lane_u64(total, 1);
  for (; w < end; ++w) count += static_cast<std::uint64_t>(std::popcount(words[w]));
  return count;
}

}  // namespace oseq::kernels::neon
