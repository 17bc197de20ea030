#include <algorithm>

#include "oseq/search.hpp"

namespace oseq {

namespace {

std::uint64_t block_weight(const PartitionMonomial& pm, std::size_t i) {
  std::uint64_t sum = 0;
  for (std::uint32_t j : pm.blocks[i]) {
    if (j == 0 || j > pm.weights.size()) throw InputError("partition element without a weight");
    sum += pm.weights[j - 1];
  }
  return sum;
}

void require_same_weights(const PartitionMonomial& p, const PartitionMonomial& q) {
  if (p.weights != q.weights) throw InputError("partitions compared under different weights");
}

// Variable-wise shifted copy: out[i] = f[i - shift], zero below.
std::uint64_t shifted(const FVector& f, std::size_t i, std::size_t shift) {
  return i >= shift ? f.at(i - shift) : 0;
}

}  // namespace

bool leq_a(const PartitionMonomial& p, const PartitionMonomial& q) {
  if (p.blocks.size() != q.blocks.size()) {
    throw InputError("leq_a needs equal block counts, got " + std::to_string(p.blocks.size()) +
                     " and " + std::to_string(q.blocks.size()));
  }
  require_same_weights(p, q);
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (block_weight(p, i) > block_weight(q, i)) return false;
  }
  return true;
}

bool leq_a_r(const PartitionMonomial& p, const PartitionMonomial& q, std::size_t r) {
  if (p.blocks.size() != q.blocks.size() + 1 || r >= p.blocks.size()) {
    throw InputError("leq_a_r needs d and d-1 blocks with r < d");
  }
  PartitionMonomial reduced = p;
  reduced.blocks.erase(reduced.blocks.begin() + static_cast<std::ptrdiff_t>(r));
  return leq_a(reduced, q);
}

bool r_compatible(const std::vector<PartitionMonomial>& ps, const std::vector<PartitionMonomial>& qs,
                  std::size_t r) {
  return std::all_of(ps.begin(), ps.end(), [&](const PartitionMonomial& p) {
    return std::any_of(qs.begin(), qs.end(), [&](const PartitionMonomial& q) { return leq_a_r(p, q, r); });
  });
}

std::optional<Monomial> compatibility_witness(const OrderIdeal& gamma1, const OrderIdeal& gamma2,
                                              std::size_t r) {
  if (!gamma1.empty() && !gamma2.empty() && gamma1.num_vars() != gamma2.num_vars()) {
    throw InputError("ideals in different numbers of variables");
  }
  for (const auto& n : gamma1.generators()) {
    if (r >= n.num_vars()) throw InputError("variable index out of range");
    const Monomial stripped = n.without_var(r);
    const bool covered = std::any_of(gamma2.generators().begin(), gamma2.generators().end(),
                                     [&](const Monomial& m) { return divides(stripped, m); });
    if (!covered) return n;
  }
  return std::nullopt;
}

bool r_compatible(const OrderIdeal& gamma1, const OrderIdeal& gamma2, std::size_t r) {
  return !compatibility_witness(gamma1, gamma2, r);
}

CompatibilityError::CompatibilityError(Monomial witness)
    : InputError("generator " + witness.pretty() + " has no compatible partner"),
      witness_(std::move(witness)) {}

GlueResult glue(const OrderIdeal& gamma1, const OrderIdeal& gamma2, std::size_t r, std::uint32_t a_p) {
  if (a_p == 0) throw InputError("a_p must be positive");
  if (gamma1.empty() && gamma2.empty()) throw InputError("nothing to glue");
  if (!gamma1.empty() && !gamma2.empty() && gamma1.num_vars() != gamma2.num_vars()) {
    throw InputError("ideals in different numbers of variables");
  }
  const std::size_t vars = gamma1.empty() ? gamma2.num_vars() : gamma1.num_vars();
  if (r >= vars) throw InputError("variable index out of range");
  for (const auto& m : gamma2.generators()) {
    if (m[r] != 0) throw InputError("second ideal uses y" + std::to_string(r + 1) + " in " + m.pretty());
  }
  if (auto w = compatibility_witness(gamma1, gamma2, r)) throw CompatibilityError(*w);

  std::vector<Monomial> gens;
  for (const auto& n : gamma1.generators()) gens.push_back(n.times_power(r, a_p));
  for (const auto& m : gamma2.generators()) gens.push_back(m.times_power(r, a_p - 1));
  GlueResult out{OrderIdeal(vars, std::move(gens)), false};
  out.pure = out.ideal.is_pure();

  const FVector f = f_vector(out.ideal);
  const FVector f1 = gamma1.empty() ? FVector{} : f_vector(gamma1);
  const FVector f2 = gamma2.empty() ? FVector{} : f_vector(gamma2);
  const std::size_t top = std::max({f.size(), f1.size() + a_p, f2.size() + a_p});
  for (std::size_t i = 0; i < top; ++i) {
    std::uint64_t rhs = shifted(f1, i, a_p);
    for (std::size_t j = 0; j < a_p; ++j) rhs += shifted(f2, i, j);
    if (f.at(i) != rhs) {
      throw InternalError("glue identity fails at degree " + std::to_string(i) + ": " +
                          std::to_string(f.at(i)) + " != " + std::to_string(rhs));
    }
  }
  return out;
}

std::vector<PartitionMonomial> glue_partitions(const std::vector<PartitionMonomial>& ps,
                                               const std::vector<PartitionMonomial>& qs,
                                               std::size_t r, std::uint32_t p) {
  std::vector<PartitionMonomial> out;
  for (auto pm : ps) {
    if (r >= pm.blocks.size()) throw InputError("block index out of range");
    if (p > pm.weights.size()) throw InputError("element " + std::to_string(p) + " has no weight");
    pm.blocks[r].push_back(p);
    out.push_back(std::move(pm));
  }
  for (auto qm : qs) {
    if (r > qm.blocks.size()) throw InputError("block index out of range");
    if (p > qm.weights.size()) throw InputError("element " + std::to_string(p) + " has no weight");
    qm.blocks.insert(qm.blocks.begin() + static_cast<std::ptrdiff_t>(r), std::vector<std::uint32_t>{p});
    out.push_back(std::move(qm));
  }
  return out;
}

}  // namespace oseq
