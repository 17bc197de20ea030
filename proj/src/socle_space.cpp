#include "oseq/socle_space.hpp"

#include "oseq/combinatorics.hpp"
#include "oseq/errors.hpp"
#include "oseq/kernels.hpp"

namespace oseq {

namespace {

// Bits below degree s, summed over layers; beyond this the tables stop being cheap.
constexpr std::uint64_t kMaxLowerMonomials = std::uint64_t{1} << 24;
constexpr std::uint64_t kMaxRowWords = std::uint64_t{1} << 26;

}  // namespace

SocleSpace::SocleSpace(std::size_t num_vars, std::uint32_t socle_degree)
    : num_vars_(num_vars), socle_degree_(socle_degree) {
  if (num_vars == 0) throw InputError("socle space needs at least one variable");
  const auto lower = binomial_checked(socle_degree + num_vars - 1, num_vars);
  if (!lower || *lower > kMaxLowerMonomials) {
    throw OverflowError("too many monomials below degree " + std::to_string(socle_degree) +
                        " in " + std::to_string(num_vars) + " variables");
  }
  packed_ = num_vars <= kernels::kPackedVars && socle_degree <= kernels::kPackedMaxExponent;

  top_ = monomials_of_degree(num_vars, socle_degree);
  for (std::size_t i = 0; i < top_.size(); ++i) top_lookup_.emplace(top_[i], i);

  layer_word_begin_.push_back(0);
  for (std::uint32_t k = 0; k < socle_degree; ++k) {
    layers_.push_back(monomials_of_degree(num_vars, k));
    if (packed_) {
      std::vector<std::uint64_t> packed;
      packed.reserve(layers_.back().size());
      for (const auto& m : layers_.back()) packed.push_back(kernels::pack(m));
      packed_layers_.push_back(std::move(packed));
    }
    layer_word_begin_.push_back(layer_word_begin_.back() + (layers_.back().size() + 63) / 64);
  }
  words_ = layer_word_begin_.back();
}

std::optional<std::size_t> SocleSpace::top_index(const Monomial& m) const {
  auto it = top_lookup_.find(m);
  if (it == top_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint64_t> SocleSpace::divisor_row(const Monomial& m) const {
  if (m.num_vars() != num_vars_ || m.degree() != socle_degree_) {
    throw InputError("monomial " + m.to_string() + " is not of degree " +
                     std::to_string(socle_degree_) + " in " + std::to_string(num_vars_) +
                     " variables");
  }
  std::vector<std::uint64_t> row(words_, 0);
  if (packed_) {
    const auto& k = kernels::active();
    const std::uint64_t pm = kernels::pack(m);
    for (std::uint32_t deg = 0; deg < socle_degree_; ++deg) {
      k.divisor_mask(packed_layers_[deg].data(), packed_layers_[deg].size(), pm,
                     row.data() + layer_word_begin_[deg]);
    }
    return row;
  }
  for (std::uint32_t deg = 0; deg < socle_degree_; ++deg) {
    const auto& layer = layers_[deg];
    for (std::size_t j = 0; j < layer.size(); ++j) {
      if (divides(layer[j], m)) row[layer_word_begin_[deg] + j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  return row;
}

void SocleSpace::precompute_rows() {
  if (!rows_.empty()) return;
  if (static_cast<std::uint64_t>(top_.size()) * words_ > kMaxRowWords) {
    throw OverflowError("divisor table for " + std::to_string(top_.size()) +
                        " socle monomials is too large");
  }
  rows_.assign(top_.size() * words_, 0);
  for (std::size_t i = 0; i < top_.size(); ++i) {
    const auto r = divisor_row(top_[i]);
    std::copy(r.begin(), r.end(), rows_.begin() + static_cast<std::ptrdiff_t>(i * words_));
  }
}

PruneResult SocleSpace::match(std::span<const std::uint64_t* const> rows, const FVector& target,
                              std::uint64_t* scratch) const {
  if (!target.empty() && target.top_degree() > socle_degree_) {
    return PruneResult::mismatch(target.top_degree(), 0);
  }
  std::size_t built = 1;
  if (rows.size() != target.at(socle_degree_)) return PruneResult::mismatch(socle_degree_, built);
  const auto& k = kernels::active();
  for (std::uint32_t deg = socle_degree_; deg-- > 0;) {
    ++built;
    const std::uint64_t c = k.union_popcount(nullptr, rows.data(), rows.size(),
                                             layer_word_begin_[deg], layer_word_begin_[deg + 1],
                                             scratch);
    if (c != target.at(deg)) return PruneResult::mismatch(deg, built);
  }
  return PruneResult::matched(built);
}

FVector SocleSpace::f_vector(std::span<const std::uint64_t* const> rows,
                             std::uint64_t* scratch) const {
  std::vector<std::uint64_t> counts(socle_degree_ + 1, 0);
  if (rows.empty()) return FVector{1};
  counts[socle_degree_] = rows.size();
  const auto& k = kernels::active();
  for (std::uint32_t deg = 0; deg < socle_degree_; ++deg) {
    counts[deg] = k.union_popcount(nullptr, rows.data(), rows.size(), layer_word_begin_[deg],
                                   layer_word_begin_[deg + 1], scratch);
  }
  return FVector(std::move(counts));
}

std::uint64_t SocleSpace::layer_count(const std::uint64_t* bits, std::uint32_t k) const {
  return kernels::active().popcount(bits, layer_word_begin_[k], layer_word_begin_[k + 1]);
}

}  // namespace oseq
