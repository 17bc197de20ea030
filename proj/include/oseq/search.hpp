#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oseq/combinatorics.hpp"
#include "oseq/complex.hpp"
#include "oseq/constructions.hpp"
#include "oseq/errors.hpp"
#include "oseq/monomial.hpp"

namespace oseq {

// Block and variable indices below are 0-based.

// Blockwise weight sums of p are at most those of q. Both need the same block count.
bool leq_a(const PartitionMonomial& p, const PartitionMonomial& q);
// p has d blocks, q has d-1; block r of p is dropped before comparing.
bool leq_a_r(const PartitionMonomial& p, const PartitionMonomial& q, std::size_t r);
bool r_compatible(const std::vector<PartitionMonomial>& ps, const std::vector<PartitionMonomial>& qs,
                  std::size_t r);

// First generator N of gamma1 such that N / y_r^{n} divides no generator of gamma2, where
// n is the full power of y_r in N. nullopt when the pair is compatible.
std::optional<Monomial> compatibility_witness(const OrderIdeal& gamma1, const OrderIdeal& gamma2,
                                              std::size_t r);
bool r_compatible(const OrderIdeal& gamma1, const OrderIdeal& gamma2, std::size_t r);

class CompatibilityError : public InputError {
 public:
  explicit CompatibilityError(Monomial witness);
  const Monomial& witness() const { return witness_; }

 private:
  Monomial witness_;
};

struct GlueResult {
  OrderIdeal ideal;
  bool pure = false;
};

// <y_r^{a_p} N_i, y_r^{a_p - 1} M_j>. gamma2 must avoid y_r and the pair must be
// r-compatible (else CompatibilityError). The face-number identity
//   f_i = f_{i-a_p}(gamma1) + sum_{j<a_p} f_{i-j}(gamma2)
// is verified on every call; an empty ideal contributes nothing to it.
GlueResult glue(const OrderIdeal& gamma1, const OrderIdeal& gamma2, std::size_t r, std::uint32_t a_p);

// Partition form of the same step: element p joins block r of each ps entry, and {p} is
// inserted as block r of each qs entry. Weights must already cover p.
std::vector<PartitionMonomial> glue_partitions(const std::vector<PartitionMonomial>& ps,
                                               const std::vector<PartitionMonomial>& qs,
                                               std::size_t r, std::uint32_t p);

struct SocleCount {
  std::uint64_t monomials = 0;  // N_{d,s}
  BigInt socles;                // C(N_{d,s}, t)
};
SocleCount count_socle_space(std::size_t d, std::uint32_t s, std::uint64_t t);

// 1-based elements; colex order on t-subsets of [n].
std::vector<std::uint32_t> unrank_combination(std::uint64_t rank, std::uint32_t n, std::uint32_t t);
std::uint64_t rank_combination(const std::vector<std::uint32_t>& subset);

enum class ChoiceOrder { Deterministic, SeededRandom };

struct SearchConfig {
  std::optional<std::uint64_t> max_candidates;
  std::optional<RankRange> range;
  ChoiceOrder order = ChoiceOrder::Deterministic;
  std::uint64_t seed = 0;
  // Block receiving {j, ..., p} in the guided search; the last block when unset.
  std::optional<std::size_t> insertion_position;
  std::size_t jobs = 1;
  bool lex_shortcut = true;
};

enum class SearchStatus { Realized, Exhausted, LimitReached, Infeasible };
std::string status_name(SearchStatus status);

struct SearchStats {
  std::uint64_t examined = 0;
  std::uint64_t skipped = 0;
  // Degree at which a candidate was rejected -> count.
  std::map<std::size_t, std::uint64_t> prune_histogram;

  void merge(const SearchStats& other);
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<OrderIdeal> ideal;
  SearchStats stats;
  std::string note;
};

// {"status", "order_ideal"?, "examined", "prune_histogram"}
std::string to_json(const SearchOutcome& outcome);

struct EnumerationResult {
  std::set<FVector> f_vectors;
  SearchStats stats;
  bool limit_reached = false;
};

// f-vectors of all pure order ideals generated by t monomials of degree s in d variables,
// scanning t-subsets in colex rank order (restricted to cfg.range when set).
EnumerationResult enumerate_pure_o_sequences(std::size_t d, std::uint32_t s, std::uint64_t t,
                                             const SearchConfig& cfg);

// Looks for a pure order ideal in exactly h_1 variables whose f-vector is h.
SearchOutcome is_pure_o_sequence(const FVector& h, const SearchConfig& cfg);

// Method of gluing parallel classes one at a time. class_order lists indices into
// parallel_classes(m) (0-based); its first rank(m) classes must span a basis.
SearchOutcome guided_search(const Matroid& m, const std::vector<std::size_t>& class_order,
                            const SearchConfig& cfg);

// Class orders whose first rank(m) classes span a basis, lexicographically, at most limit.
std::vector<std::vector<std::size_t>> feasible_orderings(const Matroid& m, std::size_t limit);

}  // namespace oseq
