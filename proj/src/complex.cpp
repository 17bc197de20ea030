#include "oseq/complex.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

#include "oseq/combinatorics.hpp"
#include "oseq/errors.hpp"

namespace oseq {

namespace {

// Same-size sets compare like their sorted vertex lists.
bool facet_less(VertexSet a, VertexSet b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const VertexSet diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

std::vector<VertexSet> normalize_facets(std::vector<VertexSet> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  const bool uniform = std::all_of(facets.begin(), facets.end(), [&](VertexSet f) {
    return std::popcount(f) == std::popcount(facets.front());
  });
  if (!uniform) {
    std::sort(facets.begin(), facets.end(),
              [](VertexSet a, VertexSet b) { return std::popcount(a) > std::popcount(b); });
    std::vector<VertexSet> kept;
    for (VertexSet f : facets) {
      const bool covered =
          std::any_of(kept.begin(), kept.end(), [&](VertexSet g) { return (f & ~g) == 0; });
      if (!covered) kept.push_back(f);
    }
    facets = std::move(kept);
  }
  std::sort(facets.begin(), facets.end(), facet_less);
  return facets;
}

// Face counts by the superset-closure transform over the compressed support.
std::vector<std::uint64_t> count_faces_dense(const std::vector<VertexSet>& facets,
                                             VertexSet support) {
  const auto labels = vertices_of(support);
  const std::size_t m = labels.size();
  auto compress = [&](VertexSet f) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (f & vertex_bit(labels[i])) out |= std::uint32_t{1} << i;
    }
    return out;
  };
  std::vector<std::uint8_t> face(std::size_t{1} << m, 0);
  for (VertexSet f : facets) face[compress(f)] = 1;
  for (std::size_t b = 0; b < m; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < face.size(); ++s) {
      if (!(s & bit)) face[s] |= face[s | bit];
    }
  }
  std::vector<std::uint64_t> counts(m + 1, 0);
  for (std::size_t s = 0; s < face.size(); ++s) {
    if (face[s]) ++counts[static_cast<std::size_t>(std::popcount(s))];
  }
  return counts;
}

// Layer-by-layer descent from the facets, deduplicating each layer.
std::vector<std::uint64_t> count_faces_descent(const std::vector<VertexSet>& facets,
                                               std::size_t rank) {
  std::vector<std::uint64_t> counts(rank + 1, 0);
  std::unordered_set<VertexSet> layer;
  for (std::size_t k = rank + 1; k-- > 0;) {
    std::unordered_set<VertexSet> next;
    for (VertexSet f : layer) {
      for (VertexSet rest = f; rest; rest &= rest - 1) next.insert(f & ~(rest & (~rest + 1)));
    }
    for (VertexSet f : facets) {
      if (static_cast<std::size_t>(std::popcount(f)) == k) next.insert(f);
    }
    counts[k] = next.size();
    layer = std::move(next);
  }
  return counts;
}

}  // namespace

std::vector<std::size_t> vertices_of(VertexSet s) {
  std::vector<std::size_t> out;
  for (; s; s &= s - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(s)) + 1);
  return out;
}

VertexSet set_of(const std::vector<std::size_t>& vertices) {
  VertexSet s = 0;
  for (std::size_t v : vertices) {
    if (v == 0 || v > kMaxVertices) throw OverflowError("vertex label " + std::to_string(v) + " out of range 1..64");
    s |= vertex_bit(v);
  }
  return s;
}

std::string format_set(VertexSet s) {
  const auto vs = vertices_of(s);
  const bool compact = std::all_of(vs.begin(), vs.end(), [](std::size_t v) { return v <= 9; });
  std::string out = compact ? "" : "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(vs[i]);
  }
  if (!compact) out += '}';
  if (vs.empty()) out = "{}";
  return out;
}

std::string format_h(const HVector& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(h[i]);
  }
  return out + ")";
}

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<VertexSet> facets) {
  if (n > kMaxVertices) throw OverflowError("at most 64 vertices are supported, got " + std::to_string(n));
  *this = on_ground(first_vertices(n), std::move(facets));
}

SimplicialComplex SimplicialComplex::on_ground(VertexSet ground, std::vector<VertexSet> facets) {
  for (VertexSet f : facets) {
    if (f & ~ground) throw InputError("facet " + format_set(f) + " uses a vertex outside the vertex set");
  }
  SimplicialComplex c;
  c.ground_ = ground;
  c.facets_ = normalize_facets(std::move(facets));
  return c;
}

std::size_t SimplicialComplex::num_vertices() const {
  return static_cast<std::size_t>(std::popcount(ground_));
}

std::size_t SimplicialComplex::max_label() const {
  return ground_ ? 64 - static_cast<std::size_t>(std::countl_zero(ground_)) : 0;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](VertexSet f) {
    return std::popcount(f) == std::popcount(facets_.front());
  });
}

std::size_t SimplicialComplex::rank() const {
  // Facets are sorted by size, the last is largest.
  return facets_.empty() ? 0 : static_cast<std::size_t>(std::popcount(facets_.back()));
}

VertexSet SimplicialComplex::support() const {
  VertexSet s = 0;
  for (VertexSet f : facets_) s |= f;
  return s;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return (face & ~f) == 0; });
}

Matroid Matroid::from_complex(SimplicialComplex c) {
  if (!is_matroid(c)) throw NotMatroidError("facets do not satisfy basis exchange");
  return Matroid(std::move(c));
}

FVector f_vector_complex(const SimplicialComplex& c) {
  if (c.is_void()) return FVector{};
  const VertexSet support = c.support();
  const std::size_t m = static_cast<std::size_t>(std::popcount(support));
  std::vector<std::uint64_t> counts;
  // The dense transform costs m 2^m; the descent costs roughly the number of faces times
  // the rank, which is far smaller for few low-rank facets.
  std::uint64_t descent_estimate = 0;
  for (VertexSet f : c.facets()) {
    descent_estimate += std::uint64_t{1} << std::min(std::popcount(f), 40);
    if (descent_estimate > (std::uint64_t{1} << 40)) break;
  }
  if (m <= 24 && (std::uint64_t{m} << m) < descent_estimate * 4) {
    counts = count_faces_dense(c.facets(), support);
  } else {
    counts = count_faces_descent(c.facets(), c.rank());
  }
  return FVector(std::move(counts));
}

HVector h_vector_untrimmed(const FVector& f, std::size_t d) {
  HVector h(d + 1, 0);
  for (std::size_t i = 0; i <= d; ++i) {
    BigInt sum = 0;
    for (std::size_t k = 0; k <= i; ++k) {
      BigInt term = binomial_big(d - k, i - k) * f.at(k);
      if ((i - k) % 2) sum -= term; else sum += term;
    }
    if (sum > std::numeric_limits<std::int64_t>::max() || sum < std::numeric_limits<std::int64_t>::min()) {
      throw OverflowError("h-vector entry does not fit in 64 bits");
    }
    h[i] = sum.convert_to<std::int64_t>();
  }
  return h;
}

HVector h_vector(const FVector& f) {
  if (f.empty()) return {};
  HVector h = h_vector_untrimmed(f, f.top_degree());
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

bool is_matroid(const SimplicialComplex& c) {
  if (c.is_void() || !c.is_pure()) return false;
  const auto& bases = c.facets();
  const std::unordered_set<VertexSet> lookup(bases.begin(), bases.end());
  for (VertexSet b1 : bases) {
    for (VertexSet b2 : bases) {
      for (VertexSet xs = b1 & ~b2; xs; xs &= xs - 1) {
        const VertexSet without = b1 & ~(xs & (~xs + 1));
        bool repaired = false;
        for (VertexSet ys = b2 & ~b1; ys && !repaired; ys &= ys - 1) {
          repaired = lookup.contains(without | (ys & (~ys + 1)));
        }
        if (!repaired) return false;
      }
    }
  }
  return true;
}

Matroid dual(const Matroid& m) {
  const VertexSet ground = m.complex().ground();
  std::vector<VertexSet> facets;
  facets.reserve(m.bases().size());
  for (VertexSet b : m.bases()) facets.push_back(ground & ~b);
  return Matroid::assume_valid(SimplicialComplex::on_ground(ground, std::move(facets)));
}

HVector cover_h_vector(const Matroid& m) { return h_vector(f_vector_complex(dual(m).complex())); }

SimplicialComplex link_vertex(const SimplicialComplex& c, std::size_t v) {
  if (v == 0 || v > kMaxVertices || !(c.ground() & vertex_bit(v))) {
    throw InputError("vertex " + std::to_string(v) + " is not in the complex");
  }
  const VertexSet bit = vertex_bit(v);
  std::vector<VertexSet> facets;
  for (VertexSet f : c.facets()) {
    if (f & bit) facets.push_back(f & ~bit);
  }
  if (facets.empty()) throw VoidComplexError("vertex " + std::to_string(v) + " is a loop; its link is void");
  return SimplicialComplex::on_ground(c.ground() & ~bit, std::move(facets));
}

SimplicialComplex delete_vertices(const SimplicialComplex& c, VertexSet s) {
  std::vector<VertexSet> facets;
  facets.reserve(c.facets().size());
  for (VertexSet f : c.facets()) facets.push_back(f & ~s);
  if (c.is_void()) facets.clear();
  return SimplicialComplex::on_ground(c.ground() & ~s, std::move(facets));
}

SimplicialComplex restrict_to(const SimplicialComplex& c, VertexSet s) {
  return delete_vertices(c, c.ground() & ~s);
}

SimplicialComplex link_class(const SimplicialComplex& c, VertexSet cls) {
  if (cls == 0) throw InputError("empty class");
  const std::size_t v = static_cast<std::size_t>(std::countr_zero(cls)) + 1;
  return delete_vertices(link_vertex(c, v), cls & ~vertex_bit(v));
}

bool is_cone_point(const SimplicialComplex& c, std::size_t v) {
  return !c.is_void() && std::all_of(c.facets().begin(), c.facets().end(),
                                     [&](VertexSet f) { return f & vertex_bit(v); });
}

SimplicialComplex skeleton(const SimplicialComplex& c, std::size_t k) {
  if (c.is_void() || k + 1 > c.rank()) {
    throw InputError("skeleton dimension " + std::to_string(k) + " out of range");
  }
  std::unordered_set<VertexSet> faces;
  for (VertexSet f : c.facets()) {
    const auto vs = vertices_of(f);
    if (vs.size() <= k + 1) {
      faces.insert(f);
      continue;
    }
    std::vector<std::uint32_t> pick(k + 1);
    for (std::uint32_t i = 0; i <= k; ++i) pick[i] = i;
    do {
      VertexSet g = 0;
      for (auto i : pick) g |= vertex_bit(vs[i]);
      faces.insert(g);
    } while (colex_next(pick, static_cast<std::uint32_t>(vs.size())));
  }
  return SimplicialComplex::on_ground(c.ground(), {faces.begin(), faces.end()});
}

SimplicialComplex join_complexes(const SimplicialComplex& a, const SimplicialComplex& b) {
  const std::size_t shift = a.max_label();
  if (b.ground() && shift + b.max_label() > kMaxVertices) throw OverflowError("join needs more than 64 vertices");
  const VertexSet ground = a.ground() | (shift >= 64 ? 0 : b.ground() << shift);
  std::vector<VertexSet> facets;
  for (VertexSet fa : a.facets()) {
    for (VertexSet fb : b.facets()) facets.push_back(fa | (shift >= 64 ? 0 : fb << shift));
  }
  return SimplicialComplex::on_ground(ground, std::move(facets));
}

namespace {

struct IsoSearch {
  std::vector<std::size_t> av, bv;
  std::vector<std::size_t> adeg, bdeg;
  std::vector<std::vector<VertexSet>> facets_at;  // facets of a whose largest vertex is av[i]
  std::unordered_set<VertexSet> bfacets;
  std::vector<int> image;  // index into bv
  std::vector<bool> used;

  VertexSet map(VertexSet f) const {
    VertexSet out = 0;
    for (std::size_t i = 0; i < av.size(); ++i) {
      if (f & vertex_bit(av[i])) out |= vertex_bit(bv[static_cast<std::size_t>(image[i])]);
    }
    return out;
  }

  bool extend(std::size_t i) {
    if (i == av.size()) return true;
    for (std::size_t j = 0; j < bv.size(); ++j) {
      if (used[j] || adeg[i] != bdeg[j]) continue;
      image[i] = static_cast<int>(j);
      used[j] = true;
      const bool ok = std::all_of(facets_at[i].begin(), facets_at[i].end(),
                                  [&](VertexSet f) { return bfacets.contains(map(f)); });
      if (ok && extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.num_vertices() != b.num_vertices() || a.facets().size() != b.facets().size()) return false;
  if (f_vector_complex(a) != f_vector_complex(b)) return false;
  IsoSearch s;
  s.av = vertices_of(a.ground());
  s.bv = vertices_of(b.ground());
  auto degrees = [](const SimplicialComplex& c, const std::vector<std::size_t>& vs) {
    std::vector<std::size_t> deg;
    for (std::size_t v : vs) {
      deg.push_back(static_cast<std::size_t>(std::count_if(
          c.facets().begin(), c.facets().end(), [&](VertexSet f) { return f & vertex_bit(v); })));
    }
    return deg;
  };
  s.adeg = degrees(a, s.av);
  s.bdeg = degrees(b, s.bv);
  {
    auto x = s.adeg, y = s.bdeg;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  s.facets_at.resize(s.av.size());
  for (VertexSet f : a.facets()) {
    if (f == 0) continue;
    const std::size_t top = 64 - static_cast<std::size_t>(std::countl_zero(f));
    const auto pos = std::find(s.av.begin(), s.av.end(), top) - s.av.begin();
    s.facets_at[static_cast<std::size_t>(pos)].push_back(f);
  }
  s.bfacets.insert(b.facets().begin(), b.facets().end());
  s.image.assign(s.av.size(), -1);
  s.used.assign(s.bv.size(), false);
  return s.extend(0);
}

SimplicialComplex expand_weighted(const SimplicialComplex& simple,
                                  const std::vector<std::uint32_t>& weights) {
  const std::size_t p = weights.size();
  if (simple.max_label() > p) throw InputError("facet uses a class beyond the weight list");
  std::vector<std::size_t> offset(p + 1, 0);
  for (std::size_t i = 0; i < p; ++i) {
    if (weights[i] == 0) throw InputError("weights must be positive");
    offset[i + 1] = offset[i] + weights[i];
  }
  if (offset[p] > kMaxVertices) throw OverflowError("weighted expansion needs more than 64 vertices");
  std::vector<VertexSet> facets;
  for (VertexSet f : simple.facets()) {
    std::vector<VertexSet> partial{0};
    for (std::size_t cls : vertices_of(f)) {
      std::vector<VertexSet> next;
      next.reserve(partial.size() * weights[cls - 1]);
      for (VertexSet g : partial) {
        for (std::size_t j = 1; j <= weights[cls - 1]; ++j) next.push_back(g | vertex_bit(offset[cls - 1] + j));
      }
      partial = std::move(next);
    }
    facets.insert(facets.end(), partial.begin(), partial.end());
  }
  if (simple.is_void()) facets.clear();
  return SimplicialComplex::on_ground(first_vertices(offset[p]), std::move(facets));
}

}  // namespace oseq
