#include <immintrin.h>

#include <bit>

#include "impl.hpp"

namespace oseq::kernels::avx2 {

namespace {

// Nibble-table popcount of four 64-bit lanes, summed per lane.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t hsum_lanes(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

void divisor_mask(const std::uint64_t* table, std::size_t n, std::uint64_t m, std::uint64_t* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  const __m256i target = _mm256_set1_epi64x(static_cast<long long>(m));
  std::size_t j = 0;
  // a | m bytewise  <=>  max(a, m) == m in every byte  <=>  the 64-bit lane is unchanged.
  for (; j + 4 <= n; j += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + j));
    const __m256i eq = _mm256_cmpeq_epi64(_mm256_max_epu8(a, target), target);
    const auto bits = static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)));
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
  __m256i total = _mm256_setzero_si256();
  for (; w + 4 <= end; w += 4) {
    __m256i acc = base ? _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + w))
                       : _mm256_setzero_si256();
    for (std::size_t r = 0; r < nrows; ++r) {
      acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows[r] + w)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), acc);
    total = _mm256_add_epi64(total, popcount_lanes(acc));
  }
  std::uint64_t count = hsum_lanes(total);
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
  __m256i total = _mm256_setzero_si256();
  for (; w + 4 <= end; w += 4) {
    total = _mm256_add_epi64(total, popcount_lanes(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + w))));
  }
  std::uint64_t count = hsum_lanes(total);
  for (; w < end; ++w) count += static_cast<std::uint64_t>(std::popcount(words[w]));
  return count;
}

}  // namespace oseq::kernels::avx2
