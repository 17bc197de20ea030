#pragma once

// Per-ISA entry points. Only dispatch.cpp and the kernel sources see these.

#include <cstddef>
#include <cstdint>

namespace oseq::kernels {

namespace scalar {
void divisor_mask(const std::uint64_t* table, std::size_t n, std::uint64_t m, std::uint64_t* out);
std::uint64_t union_popcount(const std::uint64_t* base, const std::uint64_t* const* rows,
                             std::size_t nrows, std::size_t begin, std::size_t end,
                             std::uint64_t* out);
std::uint64_t popcount(const std::uint64_t* words, std::size_t begin, std::size_t end);
}  // namespace scalar

#if defined(OSEQ_BUILD_AVX2)
namespace avx2 {
void divisor_mask(const std::uint64_t* table, std::size_t n, std::uint64_t m, std::uint64_t* out);
std::uint64_t union_popcount(const std::uint64_t* base, const std::uint64_t* const* rows,
                             std::size_t nrows, std::size_t begin, std::size_t end,
                             std::uint64_t* out);
std::uint64_t popcount(const std::uint64_t* words, std::size_t begin, std::size_t end);
}  // namespace avx2
#endif

#if defined(OSEQ_BUILD_NEON)
namespace neon {
void divisor_mask(const std::uint64_t* table, std::size_t n, std::uint64_t m, std::uint64_t* out);
std::uint64_t union_popcount(const std::uint64_t* base, const std::uint64_t* const* rows,
                             std::size_t nrows, std::size_t begin, std::size_t end,
                             std::uint64_t* out);
std::uint64_t popcount(const std::uint64_t* words, std::size_t begin, std::size_t end);
}  // namespace neon
#endif

}  // namespace oseq::kernels
