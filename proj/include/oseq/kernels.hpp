#pragma once

// Data-parallel inner loops of the face counter. Every kernel has a scalar reference
// version; vector versions are selected at runtime from what the CPU reports and must
// agree with the reference bit for bit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "oseq/monomial.hpp"

namespace oseq::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

// Monomials in at most kPackedVars variables with exponents at most kPackedMaxExponent
// are packed one exponent per byte, variable i in byte i.
inline constexpr std::size_t kPackedVars = 8;
inline constexpr std::uint32_t kPackedMaxExponent = 127;

bool packable(const Monomial& m);
std::uint64_t pack(const Monomial& m);
Monomial unpack(std::uint64_t packed, std::size_t num_vars);

struct KernelTable {
  Isa isa;

  // Sets bit j of out (ceil(n/64) words, fully overwritten) iff table[j] divides m
  // bytewise.
  void (*divisor_mask)(const std::uint64_t* table, std::size_t n, std::uint64_t m,
                       std::uint64_t* out);

  // out[w] = base[w] | rows[0][w] | ... | rows[nrows-1][w] for w in [begin, end), and
  // returns the number of set bits written. `base` may be null.
  std::uint64_t (*union_popcount)(const std::uint64_t* base, const std::uint64_t* const* rows,
                                  std::size_t nrows, std::size_t begin, std::size_t end,
                                  std::uint64_t* out);

  // Set bits of words[begin, end).
  std::uint64_t (*popcount)(const std::uint64_t* words, std::size_t begin, std::size_t end);
};

// ISAs this binary was built with and the CPU supports; Scalar is always first.
std::vector<Isa> supported();

const KernelTable& table_for(Isa isa);

// The kernels in use. Defaults to the widest supported ISA unless the OSEQ_KERNEL
// environment variable names another one.
const KernelTable& active();

// Switches the process-wide selection. Throws InputError for an unsupported ISA.
void select(Isa isa);

}  // namespace oseq::kernels
