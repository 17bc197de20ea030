#include <atomic>
#include <cstdlib>
#include <string>

#include "impl.hpp"
#include "oseq/errors.hpp"
#include "oseq/kernels.hpp"

namespace oseq::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, scalar::divisor_mask, scalar::union_popcount,
                              scalar::popcount};
#if defined(OSEQ_BUILD_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, avx2::divisor_mask, avx2::union_popcount, avx2::popcount};
#endif
#if defined(OSEQ_BUILD_NEON)
constexpr KernelTable kNeon{Isa::Neon, neon::divisor_mask, neon::union_popcount, neon::popcount};
#endif

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(OSEQ_BUILD_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(OSEQ_BUILD_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* initial_selection() {
  if (const char* env = std::getenv("OSEQ_KERNEL")) {
    if (auto isa = parse_isa(env); isa && cpu_has(*isa)) return &table_for(*isa);
  }
  return &table_for(supported().back());
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> selected{initial_selection()};
  return selected;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (isa_name(isa) == name) return isa;
  }
  return std::nullopt;
}

bool packable(const Monomial& m) {
  if (m.num_vars() > kPackedVars) return false;
  for (Exponent e : m.exponents()) {
    if (e > kPackedMaxExponent) return false;
  }
  return true;
}

std::uint64_t pack(const Monomial& m) {
  if (!packable(m)) throw InputError("monomial " + m.to_string() + " cannot be packed");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < m.num_vars(); ++i) out |= std::uint64_t{m[i]} << (8 * i);
  return out;
}

Monomial unpack(std::uint64_t packed, std::size_t num_vars) {
  std::vector<Exponent> exps(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) exps[i] = static_cast<Exponent>((packed >> (8 * i)) & 0xFF);
  return Monomial(std::move(exps));
}

std::vector<Isa> supported() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Neon, Isa::Avx2}) {
    if (cpu_has(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& table_for(Isa isa) {
  if (!cpu_has(isa)) throw InputError("kernel ISA '" + std::string(isa_name(isa)) + "' is not available");
  switch (isa) {
    case Isa::Scalar: return kScalar;
#if defined(OSEQ_BUILD_AVX2)
    case Isa::Avx2: return kAvx2;
#endif
#if defined(OSEQ_BUILD_NEON)
    case Isa::Neon: return kNeon;
#endif
    default: break;
  }
  throw InternalError("no kernel table for an available ISA");
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) { current().store(&table_for(isa), std::memory_order_release); }

}  // namespace oseq::kernels
