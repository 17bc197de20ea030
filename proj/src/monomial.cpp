#include "oseq/monomial.hpp"

#include <algorithm>
#include <unordered_set>

#include "oseq/errors.hpp"

namespace oseq {

namespace {

std::uint32_t checked_degree(std::span<const Exponent> exps) {
  std::uint64_t sum = 0;
  for (Exponent e : exps) sum += e;
  if (sum > kMaxDegree) {
    throw OverflowError("monomial degree " + std::to_string(sum) + " exceeds " +
                        std::to_string(kMaxDegree));
  }
  return static_cast<std::uint32_t>(sum);
}

Exponent checked_exponent(std::uint64_t e) {
  if (e > kMaxDegree) throw OverflowError("exponent " + std::to_string(e) + " too large");
  return static_cast<Exponent>(e);
}

void require_same_vars(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw InputError("monomials in " + std::to_string(a.num_vars()) + " and " +
                     std::to_string(b.num_vars()) + " variables");
  }
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)), degree_(checked_degree(exponents_)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

Monomial Monomial::one(std::size_t num_vars) {
  return Monomial(std::vector<Exponent>(num_vars, 0));
}

Monomial Monomial::times_power(std::size_t var, std::uint32_t power) const {
  if (var >= num_vars()) throw InputError("variable index out of range");
  auto exps = exponents_;
  exps[var] = checked_exponent(std::uint64_t{exps[var]} + power);
  return Monomial(std::move(exps));
}

Monomial Monomial::without_var(std::size_t var) const {
  if (var >= num_vars()) throw InputError("variable index out of range");
  auto exps = exponents_;
  exps[var] = 0;
  return Monomial(std::move(exps));
}

Monomial Monomial::concat(const Monomial& other) const {
  auto exps = exponents_;
  exps.insert(exps.end(), other.exponents_.begin(), other.exponents_.end());
  return Monomial(std::move(exps));
}

Monomial Monomial::insert_var(std::size_t var, std::uint32_t power) const {
  if (var > num_vars()) throw InputError("variable index out of range");
  auto exps = exponents_;
  exps.insert(exps.begin() + static_cast<std::ptrdiff_t>(var), checked_exponent(power));
  return Monomial(std::move(exps));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(exponents_[i]);
  }
  return out;
}

std::string Monomial::pretty() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'y' + std::to_string(i + 1);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ m.num_vars();
  for (Exponent e : m.exponents()) {
    h ^= e + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::uint32_t max_power(const Monomial& m, std::size_t var) {
  if (var >= m.num_vars()) {
    throw InputError("variable " + std::to_string(var) + " out of range for " +
                     std::to_string(m.num_vars()) + " variables");
  }
  return m[var];
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.push_back(Monomial::one(0));
    return out;
  }
  // Odometer over exponent vectors in lex order, skipping those of the wrong degree
  // by construction: the last coordinate absorbs the remainder.
  std::vector<Exponent> exps(num_vars, 0);
  exps[num_vars - 1] = static_cast<Exponent>(degree);
  while (true) {
    out.emplace_back(exps);
    // Find rightmost position i < last that can be incremented (remainder in tail > 0).
    std::size_t i = num_vars - 1;
    std::uint32_t tail = exps[num_vars - 1];
    bool advanced = false;
    while (i-- > 0) {
      if (tail > 0) {
        ++exps[i];
        --tail;
        for (std::size_t j = i + 1; j < num_vars; ++j) exps[j] = 0;
        exps[num_vars - 1] = static_cast<Exponent>(tail);
        advanced = true;
        break;
      }
      tail += exps[i];
    }
    if (!advanced) break;
  }
  return out;
}

FVector::FVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

FVector::FVector(std::initializer_list<std::uint64_t> counts)
    : FVector(std::vector<std::uint64_t>(counts)) {}

std::string FVector::to_string() const { return "(" + to_csv() + ")"; }

std::string FVector::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out;
}

FVector convolve(const FVector& a, const FVector& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.at(i) * b.at(j);
  }
  return FVector(std::move(out));
}

OrderIdeal::OrderIdeal(std::size_t num_vars, std::vector<Monomial> generators)
    : num_vars_(num_vars) {
  if (num_vars == 0) throw InputError("an order ideal needs at least one variable");
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars) {
      throw InputError("generator " + g.to_string() + " is not in " + std::to_string(num_vars) +
                       " variables");
    }
  }
  std::vector<bool> keep(generators.size(), true);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < generators.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (generators[i] == generators[j]) {
        // keep the earlier copy
        if (j < i) keep[i] = false;
      } else if (divides(generators[i], generators[j])) {
        keep[i] = false;
      }
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (keep[i]) generators_.push_back(std::move(generators[i]));
  }
}

bool OrderIdeal::is_pure() const {
  return std::all_of(generators_.begin(), generators_.end(), [&](const Monomial& g) {
    return g.degree() == generators_.front().degree();
  });
}

std::optional<std::uint32_t> OrderIdeal::socle_degree() const {
  if (generators_.empty() || !is_pure()) return std::nullopt;
  return generators_.front().degree();
}

std::uint32_t OrderIdeal::top_degree() const {
  std::uint32_t top = 0;
  for (const auto& g : generators_) top = std::max(top, g.degree());
  return top;
}

namespace {

using Layer = std::unordered_set<Monomial, MonomialHash>;

// Walks layers from `top` down to 0. `visit(k, layer)` returns false to stop early.
template <typename Visit>
std::size_t descend(const OrderIdeal& ideal, std::uint32_t top, Visit&& visit) {
  std::vector<const Monomial*> seeds;
  Monomial unit;
  if (ideal.empty()) {
    unit = Monomial::one(std::max<std::size_t>(ideal.num_vars(), 1));
    seeds.push_back(&unit);
  } else {
    for (const auto& g : ideal.generators()) seeds.push_back(&g);
  }

  Layer current;
  std::size_t built = 0;
  for (std::int64_t k = top; k >= 0; --k) {
    Layer next;
    for (const Monomial* g : seeds) {
      if (g->degree() == static_cast<std::uint32_t>(k)) next.insert(*g);
    }
    for (const Monomial& m : current) {
      for (std::size_t v = 0; v < m.num_vars(); ++v) {
        if (m[v] == 0) continue;
        auto exps = std::vector<Exponent>(m.exponents().begin(), m.exponents().end());
        --exps[v];
        next.emplace(std::move(exps));
      }
    }
    current = std::move(next);
    ++built;
    if (!visit(static_cast<std::size_t>(k), current)) break;
  }
  return built;
}

}  // namespace

FVector f_vector(const OrderIdeal& ideal) {
  const std::uint32_t top = ideal.top_degree();
  std::vector<std::uint64_t> counts(top + 1, 0);
  descend(ideal, top, [&](std::size_t k, const Layer& layer) {
    counts[k] = layer.size();
    return true;
  });
  return FVector(std::move(counts));
}

PruneResult f_vector_pruned(const OrderIdeal& ideal, const FVector& candidate) {
  std::uint32_t top = ideal.top_degree();
  if (!candidate.empty()) top = std::max<std::uint32_t>(top, candidate.top_degree());
  std::optional<std::size_t> bad;
  const std::size_t built = descend(ideal, top, [&](std::size_t k, const Layer& layer) {
    if (layer.size() != candidate.at(k)) {
      bad = k;
      return false;
    }
    return true;
  });
  if (bad) return PruneResult::mismatch(*bad, built);
  return PruneResult::matched(built);
}

OrderIdeal join(const OrderIdeal& a, const OrderIdeal& b) {
  auto gens_or_unit = [](const OrderIdeal& x) {
    if (!x.empty()) return x.generators();
    return std::vector<Monomial>{Monomial::one(x.num_vars())};
  };
  const auto ga = gens_or_unit(a);
  const auto gb = gens_or_unit(b);
  std::vector<Monomial> out;
  out.reserve(ga.size() * gb.size());
  for (const auto& x : ga) {
    for (const auto& y : gb) out.push_back(x.concat(y));
  }
  return OrderIdeal(a.num_vars() + b.num_vars(), std::move(out));
}

}  // namespace oseq
