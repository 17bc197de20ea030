#pragma once

// Backtracking over socles assembled group by group: group g contributes exactly
// picks[g] of its candidates, chosen in increasing position. Partial unions of divisor
// rows bound every layer from above (counts only grow) and, together with the union of
// everything still selectable, from below.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oseq/search.hpp"
#include "oseq/socle_space.hpp"

namespace oseq::detail {

struct DfsGroup {
  std::vector<const std::uint64_t*> rows;
  std::vector<std::size_t> ids;  // caller-side identifiers, e.g. indices into space.top()
  std::size_t picks = 0;
};

struct DfsResult {
  bool found = false;
  bool limit_reached = false;
  std::vector<std::size_t> ids;  // chosen ids, group by group
  SearchStats stats;
};

class SocleDfs {
 public:
  // target holds the wanted counts for degrees 0..s.
  SocleDfs(const SocleSpace& space, std::vector<DfsGroup> groups, std::vector<std::uint64_t> target);

  // Restricts the very first pick to positions with allowed[pos] set.
  void set_first_filter(std::vector<bool> allowed) { first_allowed_ = std::move(allowed); }

  // accept() sees leaves whose layer counts all match and may still reject them. The
  // returned leaf is the first one in sequential order no matter how many jobs run.
  DfsResult run(std::size_t jobs, std::optional<std::uint64_t> max_nodes,
                const std::function<bool(const std::vector<std::size_t>&)>& accept) const;

 private:
  struct Slot {
    std::size_t group;
    std::size_t ordinal;  // pick number within the group
  };
  struct State {
    std::size_t slot = 0;
    std::size_t next_pos = 0;
    std::vector<std::uint64_t> bits;
    std::vector<std::size_t> chosen;  // ids
  };
  struct Worker;

  std::vector<State> frontier(std::size_t min_states, SearchStats& stats) const;

  const SocleSpace& space_;
  std::vector<DfsGroup> groups_;
  std::vector<std::uint64_t> target_;
  std::vector<Slot> slots_;
  // suffix_[g][j]: union of rows g[j..] and every later group.
  std::vector<std::vector<std::vector<std::uint64_t>>> suffix_;
  std::vector<bool> first_allowed_;
};

}  // namespace oseq::detail
