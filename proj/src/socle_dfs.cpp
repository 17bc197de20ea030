#include "socle_dfs.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <thread>

#include "oseq/kernels.hpp"

namespace oseq::detail {

SocleDfs::SocleDfs(const SocleSpace& space, std::vector<DfsGroup> groups,
                   std::vector<std::uint64_t> target)
    : space_(space), groups_(std::move(groups)), target_(std::move(target)) {
  target_.resize(space_.socle_degree() + 1, 0);
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    for (std::size_t q = 0; q < groups_[g].picks; ++q) slots_.push_back({g, q});
  }
  const std::size_t words = space_.words();
  suffix_.resize(groups_.size());
  std::vector<std::uint64_t> acc(words, 0);
  for (std::size_t g = groups_.size(); g-- > 0;) {
    const auto& rows = groups_[g].rows;
    suffix_[g].assign(rows.size() + 1, {});
    suffix_[g][rows.size()] = acc;
    for (std::size_t j = rows.size(); j-- > 0;) {
      for (std::size_t w = 0; w < words; ++w) acc[w] |= rows[j][w];
      suffix_[g][j] = acc;
    }
  }
}

struct SocleDfs::Worker {
  const SocleDfs& dfs;
  const kernels::KernelTable& k = kernels::active();
  std::atomic<std::uint64_t>& nodes;
  std::optional<std::uint64_t> max_nodes;
  const std::function<bool(const std::vector<std::size_t>&)>* accept = nullptr;
  const std::atomic<std::size_t>* best = nullptr;
  std::size_t index = 0;

  SearchStats stats;
  bool limit = false;
  bool found = false;
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::uint64_t>> buffers;
  std::vector<std::uint64_t> scratch;

  Worker(const SocleDfs& d, std::atomic<std::uint64_t>& n, std::optional<std::uint64_t> max)
      : dfs(d), nodes(n), max_nodes(max),
        buffers(d.slots_.size(), std::vector<std::uint64_t>(d.space_.words())),
        scratch(d.space_.words()) {}

  std::uint32_t s() const { return dfs.space_.socle_degree(); }

  bool cancelled() const { return best && best->load(std::memory_order_relaxed) < index; }

  bool charge() {
    ++stats.examined;
    if (!max_nodes) return true;
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > *max_nodes) {
      limit = true;
      return false;
    }
    return true;
  }

  // Degree below which the reachable union falls short, if any.
  std::optional<std::size_t> short_layer(const std::uint64_t* bits, const std::uint64_t* rest) {
    const std::uint64_t* rows[1] = {rest};
    for (std::uint32_t deg = s(); deg-- > 0;) {
      const auto c = k.union_popcount(bits, rows, 1, dfs.space_.layer_begin(deg),
                                      dfs.space_.layer_end(deg), scratch.data());
      if (c < dfs.target_[deg]) return deg;
    }
    return std::nullopt;
  }

  // Writes bits | row into out; returns the first degree exceeding the target, if any.
  std::optional<std::size_t> compose(const std::uint64_t* bits, const std::uint64_t* row,
                                     std::uint64_t* out) {
    const std::uint64_t* rows[1] = {row};
    std::optional<std::size_t> over;
    for (std::uint32_t deg = s(); deg-- > 0;) {
      const auto c = k.union_popcount(bits, rows, 1, dfs.space_.layer_begin(deg),
                                      dfs.space_.layer_end(deg), out);
      if (c > dfs.target_[deg] && !over) over = deg;
    }
    return over;
  }

  bool leaf(const std::uint64_t* bits) {
    auto distinct = chosen;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() != dfs.target_[s()]) {
      ++stats.prune_histogram[s()];
      return false;
    }
    for (std::uint32_t deg = s(); deg-- > 0;) {
      if (dfs.space_.layer_count(bits, deg) != dfs.target_[deg]) {
        ++stats.prune_histogram[deg];
        return false;
      }
    }
    if ((*accept)(chosen)) {
      found = true;
      return true;
    }
    return false;
  }

  // True when the search should stop: found, out of budget or cancelled.
  bool descend(std::size_t slot, std::size_t next_pos, const std::uint64_t* bits) {
    if (slot == dfs.slots_.size()) return leaf(bits);
    const auto [g, q] = dfs.slots_[slot];
    const auto& group = dfs.groups_[g];
    const std::size_t remaining = group.picks - q;
    if (group.rows.size() < remaining) return false;
    const std::size_t last = group.rows.size() - remaining;
    for (std::size_t pos = next_pos; pos <= last; ++pos) {
      if (slot == 0 && !dfs.first_allowed_.empty() && !dfs.first_allowed_[pos]) {
        ++stats.skipped;
        continue;
      }
      if (auto deg = short_layer(bits, dfs.suffix_[g][pos].data())) {
        ++stats.prune_histogram[*deg];
        break;
      }
      if (!charge() || cancelled()) return true;
      std::uint64_t* out = buffers[slot].data();
      if (auto deg = compose(bits, group.rows[pos], out)) {
        ++stats.prune_histogram[*deg];
        continue;
      }
      chosen.push_back(group.ids[pos]);
      if (descend(slot + 1, remaining > 1 ? pos + 1 : 0, out)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

std::vector<SocleDfs::State> SocleDfs::frontier(std::size_t min_states, SearchStats& stats) const {
  std::vector<State> states(1);
  states[0].bits.assign(space_.words(), 0);
  std::atomic<std::uint64_t> unused{0};
  Worker w(*this, unused, std::nullopt);
  bool grew = true;
  while (states.size() < min_states && grew) {
    grew = false;
    std::vector<State> next;
    for (auto& st : states) {
      if (st.slot == slots_.size()) {
        next.push_back(std::move(st));
        continue;
      }
      grew = true;
      const auto [g, q] = slots_[st.slot];
      const auto& group = groups_[g];
      const std::size_t remaining = group.picks - q;
      if (group.rows.size() < remaining) continue;
      for (std::size_t pos = st.next_pos; pos + remaining <= group.rows.size(); ++pos) {
        if (st.slot == 0 && !first_allowed_.empty() && !first_allowed_[pos]) {
          ++stats.skipped;
          continue;
        }
        if (auto deg = w.short_layer(st.bits.data(), suffix_[g][pos].data())) {
          ++stats.prune_histogram[*deg];
          break;
        }
        ++stats.examined;
        State child;
        child.slot = st.slot + 1;
        child.next_pos = remaining > 1 ? pos + 1 : 0;
        child.bits.assign(space_.words(), 0);
        if (auto deg = w.compose(st.bits.data(), group.rows[pos], child.bits.data())) {
          ++stats.prune_histogram[*deg];
          continue;
        }
        child.chosen = st.chosen;
        child.chosen.push_back(group.ids[pos]);
        next.push_back(std::move(child));
      }
    }
    states = std::move(next);
  }
  return states;
}

DfsResult SocleDfs::run(std::size_t jobs, std::optional<std::uint64_t> max_nodes,
                        const std::function<bool(const std::vector<std::size_t>&)>& accept) const {
  DfsResult result;
  std::atomic<std::uint64_t> nodes{0};
  if (jobs <= 1) {
    Worker w(*this, nodes, max_nodes);
    w.accept = &accept;
    std::vector<std::uint64_t> zero(space_.words(), 0);
    w.descend(0, 0, zero.data());
    result.found = w.found;
    result.limit_reached = w.limit && !w.found;
    result.ids = std::move(w.chosen);
    if (!result.found) result.ids.clear();
    result.stats = std::move(w.stats);
    return result;
  }

  const auto states = frontier(8 * jobs, result.stats);
  nodes.store(result.stats.examined);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_budget{false};
  std::vector<std::optional<std::vector<std::size_t>>> hits(states.size());
  std::mutex merge;

  auto work = [&] {
    Worker w(*this, nodes, max_nodes);
    w.accept = &accept;
    w.best = &best;
    while (!out_of_budget.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= states.size() || i > best.load()) break;
      const auto& st = states[i];
      w.index = i;
      w.found = false;
      w.chosen = st.chosen;
      w.descend(st.slot, st.next_pos, st.bits.data());
      if (w.found) {
        hits[i] = w.chosen;
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {}
      }
      if (w.limit) out_of_budget.store(true);
    }
    std::lock_guard lock(merge);
    result.stats.merge(w.stats);
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  for (auto& hit : hits) {
    if (hit) {
      result.found = true;
      result.ids = std::move(*hit);
      break;
    }
  }
  result.limit_reached = !result.found && out_of_budget.load();
  return result;
}

}  // namespace oseq::detail
