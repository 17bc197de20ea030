#include <algorithm>
#include <bit>
#include <unordered_set>

#include "oseq/complex.hpp"
#include "oseq/errors.hpp"

namespace oseq {

std::vector<std::uint32_t> ParallelPartition::sizes() const {
  std::vector<std::uint32_t> out;
  for (VertexSet c : classes) out.push_back(static_cast<std::uint32_t>(std::popcount(c)));
  return out;
}

ParallelPartition parallel_classes(const SimplicialComplex& c) {
  if (c.loops()) throw LoopError("loops " + format_set(c.loops()) + " have no parallel class");
  // adjacent[v]: vertices sharing a facet with v, v included.
  std::vector<VertexSet> adjacent(kMaxVertices + 1, 0);
  for (VertexSet f : c.facets()) {
    for (std::size_t v : vertices_of(f)) adjacent[v] |= f;
  }
  const VertexSet support = c.support();
  ParallelPartition out;
  VertexSet seen = 0;
  for (std::size_t v : vertices_of(support)) {
    if (seen & vertex_bit(v)) continue;
    const VertexSet cls = (support & ~adjacent[v]) | vertex_bit(v);
    for (std::size_t u : vertices_of(cls)) {
      if (((support & ~adjacent[u]) | vertex_bit(u)) != cls) {
        throw InternalError("parallelism is not transitive at vertices " + std::to_string(v) +
                            " and " + std::to_string(u));
      }
    }
    out.classes.push_back(cls);
    seen |= cls;
  }
  return out;
}

Matroid simplify(const Matroid& m) {
  const auto part = parallel_classes(m.complex());
  std::vector<VertexSet> facets;
  facets.reserve(m.bases().size());
  for (VertexSet b : m.bases()) {
    VertexSet f = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
      const int hits = std::popcount(b & part.classes[i]);
      if (hits > 1) throw InternalError("a basis contains two parallel vertices");
      if (hits) f |= vertex_bit(i + 1);
    }
    facets.push_back(f);
  }
  return Matroid::assume_valid(SimplicialComplex(part.size(), std::move(facets)));
}

bool has_spanning_circuit(const Matroid& m) {
  const auto& bases = m.bases();
  const std::unordered_set<VertexSet> lookup(bases.begin(), bases.end());
  const VertexSet ground = m.complex().ground();
  // Every spanning circuit contains a basis, so B + x covers all candidates.
  for (VertexSet b : bases) {
    for (VertexSet xs = ground & ~b; xs; xs &= xs - 1) {
      const VertexSet x = xs & (~xs + 1);
      bool all = true;
      for (VertexSet ys = b; ys && all; ys &= ys - 1) all = lookup.contains((b & ~(ys & (~ys + 1))) | x);
      if (all) return true;
    }
  }
  return false;
}

Matroid dual_graph(const Matroid& m) {
  const auto part = parallel_classes(m.complex());
  if (part.size() != m.rank() + 2) {
    throw InputError("dual graph needs rank+2 = " + std::to_string(m.rank() + 2) +
                     " parallel classes, found " + std::to_string(part.size()));
  }
  return dual(simplify(m));
}

}  // namespace oseq
