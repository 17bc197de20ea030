#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <unordered_map>

#include "oseq/search.hpp"
#include "oseq/socle_space.hpp"
#include "socle_dfs.hpp"

namespace oseq {

namespace {

VertexSet representatives(const std::vector<VertexSet>& classes, std::size_t count) {
  VertexSet reps = 0;
  for (std::size_t i = 0; i < count; ++i) reps |= classes[i] & (~classes[i] + 1);
  return reps;
}

std::vector<VertexSet> reorder(const ParallelPartition& part, const std::vector<std::size_t>& order) {
  std::vector<bool> seen(part.size(), false);
  if (order.size() != part.size()) {
    throw InputError("class order has " + std::to_string(order.size()) + " entries for " +
                     std::to_string(part.size()) + " parallel classes");
  }
  std::vector<VertexSet> out;
  for (std::size_t i : order) {
    if (i >= part.size() || seen[i]) throw InputError("class order is not a permutation");
    seen[i] = true;
    out.push_back(part.classes[i]);
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> feasible_orderings(const Matroid& m, std::size_t limit) {
  const auto part = parallel_classes(m.complex());
  const std::size_t d = m.rank();
  std::vector<std::size_t> order(part.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    if (m.complex().contains(representatives(reorder(part, order), d))) out.push_back(order);
  } while (out.size() < limit && std::next_permutation(order.begin(), order.end()));
  return out;
}

SearchOutcome guided_search(const Matroid& m, const std::vector<std::size_t>& class_order,
                            const SearchConfig& cfg) {
  SearchOutcome out;
  const auto part = parallel_classes(m.complex());
  const auto classes = reorder(part, class_order);
  const std::size_t d = m.rank();
  const std::size_t p = classes.size();
  if (d == 0) throw InputError("guided search needs rank at least 1");
  if (!m.complex().contains(representatives(classes, d))) {
    throw InputError("the first " + std::to_string(d) + " classes of the order do not span a basis");
  }
  Weights a;
  for (VertexSet c : classes) a.push_back(static_cast<std::uint32_t>(std::popcount(c)));
  const std::size_t pos = cfg.insertion_position.value_or(d - 1);
  if (pos >= d) throw InputError("insertion position must be below the rank");

  const HVector target_h = cover_h_vector(m);
  std::vector<std::uint64_t> target(target_h.begin(), target_h.end());
  const std::size_t s = target.size() - 1;
  const std::uint64_t n = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  if (s != n - d) {
    out.note = "socle degree " + std::to_string(s) + " differs from n-d = " + std::to_string(n - d);
    return out;
  }

  // Level i = d..p (1-based): candidates lifted from the (d-1)-block interval partitions
  // of [i-1], and c_i from the link of A_i in the restriction to A_1..A_i.
  std::vector<std::vector<Monomial>> candidates;
  std::vector<std::size_t> picks;
  VertexSet prefix = 0;
  for (std::size_t i = 0; i < d - 1; ++i) prefix |= classes[i];
  for (std::size_t i = d; i <= p; ++i) {
    std::vector<Monomial> level;
    for (auto& blocks : interval_partitions(1, static_cast<std::uint32_t>(i - 1), d - 1)) {
      std::vector<std::uint32_t> tail(p - i + 1);
      std::iota(tail.begin(), tail.end(), static_cast<std::uint32_t>(i));
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(pos), std::move(tail));
      level.push_back(realize_partition({std::move(blocks), a}));
    }
    const auto link = link_class(restrict_to(m.complex(), prefix | classes[i - 1]), classes[i - 1]);
    const auto c = static_cast<std::size_t>(cover_h_vector(Matroid::assume_valid(link)).back());
    if (c > level.size()) {
      out.status = SearchStatus::Infeasible;
      out.note = "class " + std::to_string(i) + " needs " + std::to_string(c) + " generators but only " +
                 std::to_string(level.size()) + " candidates exist";
      return out;
    }
    candidates.push_back(std::move(level));
    picks.push_back(c);
    prefix |= classes[i - 1];
  }
  const std::size_t total = std::accumulate(picks.begin(), picks.end(), std::size_t{0});
  if (total != target.back()) {
    out.note = "the levels pick " + std::to_string(total) + " generators, the type is " +
               std::to_string(target.back());
    return out;
  }

  SocleSpace space(d, static_cast<std::uint32_t>(s));
  std::vector<std::vector<std::uint64_t>> row_store;
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  std::vector<detail::DfsGroup> groups;
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t l = 0; l < candidates.size(); ++l) {
    std::vector<std::size_t> perm(candidates[l].size());
    std::iota(perm.begin(), perm.end(), 0);
    if (cfg.order == ChoiceOrder::SeededRandom) std::shuffle(perm.begin(), perm.end(), rng);
    detail::DfsGroup g;
    g.picks = picks[l];
    for (std::size_t j : perm) {
      const Monomial& mono = candidates[l][j];
      const auto idx = space.top_index(mono);
      if (!idx) throw InternalError("candidate " + mono.pretty() + " has the wrong degree");
      if (!row_of.contains(mono)) {
        row_of.emplace(mono, row_store.size());
        row_store.push_back(space.divisor_row(mono));
      }
      g.ids.push_back(*idx);
      g.rows.push_back(nullptr);
    }
    groups.push_back(std::move(g));
  }
  for (auto& g : groups) {
    for (std::size_t j = 0; j < g.ids.size(); ++j) g.rows[j] = row_store[row_of.at(space.top()[g.ids[j]])].data();
  }

  detail::SocleDfs dfs(space, std::move(groups), target);
  auto build = [&](const std::vector<std::size_t>& ids) {
    std::vector<Monomial> gens;
    for (auto i : ids) gens.push_back(space.top()[i]);
    return OrderIdeal(d, std::move(gens));
  };
  const FVector want(target);
  auto accept = [&](const std::vector<std::size_t>& ids) {
    if (f_vector(build(ids)) != want) throw InternalError("bit-table count disagrees with degree descent");
    return true;
  };
  auto res = dfs.run(cfg.jobs, cfg.max_candidates, accept);
  out.stats = std::move(res.stats);
  if (res.found) {
    out.status = SearchStatus::Realized;
    out.ideal = build(res.ids);
  } else if (res.limit_reached) {
    out.status = SearchStatus::LimitReached;
    out.note = "candidate limit reached";
  } else {
    out.note = "no choice of generators for this class order realizes the cover h-vector";
  }
  return out;
}

}  // namespace oseq
