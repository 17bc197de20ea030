#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "oseq/search.hpp"
#include "oseq/socle_space.hpp"
#include "socle_dfs.hpp"

namespace oseq {

namespace {

bool weakly_increasing(const Monomial& m) {
  const auto e = m.exponents();
  return std::is_sorted(e.begin(), e.end());
}

struct ChunkResult {
  std::set<FVector> f_vectors;
  SearchStats stats;
  bool limit = false;
};

}  // namespace

void SearchStats::merge(const SearchStats& other) {
  examined += other.examined;
  skipped += other.skipped;
  for (const auto& [deg, n] : other.prune_histogram) prune_histogram[deg] += n;
}

std::string status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::Realized: return "realized";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::LimitReached: return "limit_reached";
    case SearchStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

SocleCount count_socle_space(std::size_t d, std::uint32_t s, std::uint64_t t) {
  if (d == 0 || s == 0 || t == 0) throw InputError("d, s and t must be at least 1");
  const std::uint64_t n = binomial(s + d - 1, d - 1);
  return {n, binomial_big(n, t)};
}

std::vector<std::uint32_t> unrank_combination(std::uint64_t rank, std::uint32_t n, std::uint32_t t) {
  auto subset = colex_unrank(rank, n, t);
  for (auto& c : subset) ++c;
  return subset;
}

std::uint64_t rank_combination(const std::vector<std::uint32_t>& subset) {
  std::vector<std::uint32_t> zero_based;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] == 0 || (i > 0 && subset[i] <= subset[i - 1])) {
      throw InputError("combination must be strictly increasing and 1-based");
    }
    zero_based.push_back(subset[i] - 1);
  }
  return colex_rank(zero_based);
}

EnumerationResult enumerate_pure_o_sequences(std::size_t d, std::uint32_t s, std::uint64_t t,
                                             const SearchConfig& cfg) {
  const auto count = count_socle_space(d, s, t);
  if (count.socles > std::numeric_limits<std::uint64_t>::max()) {
    throw OverflowError("C(" + std::to_string(count.monomials) + ", " + std::to_string(t) +
                        ") = " + count.socles.str() + " socles exceed the 64-bit rank range");
  }
  const auto total = count.socles.convert_to<std::uint64_t>();
  const RankRange range = cfg.range.value_or(RankRange{0, total});
  if (range.begin > range.end || range.end > total) {
    throw InputError("rank range " + std::to_string(range.begin) + ".." + std::to_string(range.end) +
                     " outside 0.." + std::to_string(total));
  }

  EnumerationResult out;
  if (range.size() == 0) return out;

  SocleSpace space(d, s);
  space.precompute_rows();
  const auto n = static_cast<std::uint32_t>(count.monomials);
  const auto tt = static_cast<std::uint32_t>(t);
  std::vector<bool> allowed(space.top().size());
  for (std::size_t i = 0; i < allowed.size(); ++i) allowed[i] = weakly_increasing(space.top()[i]);

  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> stop{false};
  auto scan = [&](RankRange chunk) {
    ChunkResult res;
    std::vector<std::uint64_t> scratch(space.words());
    std::vector<const std::uint64_t*> rows(tt);
    auto subset = colex_unrank(chunk.begin, n, tt);
    for (std::uint64_t r = chunk.begin; r < chunk.end; ++r) {
      if (r != chunk.begin) colex_next(subset, n);
      // The socle's lexicographically first monomial is its lowest index.
      if (cfg.lex_shortcut && !allowed[subset[0]]) {
        ++res.stats.skipped;
        continue;
      }
      if (cfg.max_candidates) {
        if (stop.load(std::memory_order_relaxed) ||
            used.fetch_add(1, std::memory_order_relaxed) >= *cfg.max_candidates) {
          stop.store(true);
          res.limit = true;
          break;
        }
      }
      ++res.stats.examined;
      for (std::uint32_t i = 0; i < tt; ++i) rows[i] = space.row(subset[i]);
      res.f_vectors.insert(space.f_vector(rows, scratch.data()));
    }
    return res;
  };

  const std::size_t jobs = std::max<std::size_t>(cfg.jobs, 1);
  const auto chunks = split_range(range, jobs == 1 ? 1 : jobs * 8);
  std::vector<ChunkResult> results(chunks.size());
  if (jobs == 1) {
    results[0] = scan(chunks[0]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < chunks.size();) results[i] = scan(chunks[i]);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& r : results) {
    out.f_vectors.merge(r.f_vectors);
    out.stats.merge(r.stats);
    out.limit_reached = out.limit_reached || r.limit;
  }
  return out;
}

SearchOutcome is_pure_o_sequence(const FVector& h, const SearchConfig& cfg) {
  SearchOutcome out;
  if (h.empty() || h.at(0) != 1) throw InputError("h_0 must be 1, got " + h.to_string());
  const std::size_t s = h.top_degree();
  for (std::size_t k = 0; k <= s; ++k) {
    if (h.at(k) == 0) {
      out.note = "internal zero at degree " + std::to_string(k);
      return out;
    }
  }
  if (s == 0) {
    out.status = SearchStatus::Realized;
    out.ideal = OrderIdeal(1, {Monomial::one(1)});
    return out;
  }
  HVector hv(h.counts().begin(), h.counts().end());
  if (!satisfies_hibi(hv)) {
    out.note = "fails Hibi's inequalities";
    return out;
  }
  const std::size_t d = h.at(1);
  if (s > kMaxDegree) throw OverflowError("socle degree too large");
  SocleSpace space(d, static_cast<std::uint32_t>(s));
  const std::uint64_t t = h.at(s);
  if (t > space.top().size()) {
    out.note = "type exceeds the number of degree-" + std::to_string(s) + " monomials";
    return out;
  }
  for (std::size_t k = 0; k < s; ++k) {
    if (h.at(k) > space.layer_size(static_cast<std::uint32_t>(k))) {
      out.note = "h_" + std::to_string(k) + " exceeds the number of monomials of that degree";
      return out;
    }
  }
  space.precompute_rows();

  detail::DfsGroup group;
  group.picks = t;
  for (std::size_t i = 0; i < space.top().size(); ++i) {
    group.rows.push_back(space.row(i));
    group.ids.push_back(i);
  }
  detail::SocleDfs dfs(space, {std::move(group)}, h.counts());
  if (cfg.lex_shortcut) {
    std::vector<bool> allowed(space.top().size());
    for (std::size_t i = 0; i < allowed.size(); ++i) allowed[i] = weakly_increasing(space.top()[i]);
    dfs.set_first_filter(std::move(allowed));
  }
  auto build = [&](const std::vector<std::size_t>& ids) {
    std::vector<Monomial> gens;
    for (auto i : ids) gens.push_back(space.top()[i]);
    return OrderIdeal(d, std::move(gens));
  };
  auto accept = [&](const std::vector<std::size_t>& ids) {
    if (f_vector(build(ids)) != h) throw InternalError("bit-table count disagrees with degree descent");
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
    out.note = "no socle of " + std::to_string(t) + " monomials of degree " + std::to_string(s) +
               " in " + std::to_string(d) + " variables realizes " + h.to_string();
  }
  return out;
}

}  // namespace oseq
