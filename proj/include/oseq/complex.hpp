#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oseq/monomial.hpp"

namespace oseq {

// Vertex v (1..64) is bit v-1.
using VertexSet = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

constexpr VertexSet vertex_bit(std::size_t v) { return VertexSet{1} << (v - 1); }
// {1, ..., n}
constexpr VertexSet first_vertices(std::size_t n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
std::vector<std::size_t> vertices_of(VertexSet s);
VertexSet set_of(const std::vector<std::size_t>& vertices);
// "124" style when every label is a single digit, "{1,2,14}" otherwise.
std::string format_set(VertexSet s);

// Entries h_0..h_s.
using HVector = std::vector<std::int64_t>;
std::string format_h(const HVector& h);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Vertex set {1..n}. Facets are reduced to an inclusion antichain and sorted.
  SimplicialComplex(std::size_t n, std::vector<VertexSet> facets);
  // Arbitrary ground set of labels; vertices of the ground set in no facet are loops.
  static SimplicialComplex on_ground(VertexSet ground, std::vector<VertexSet> facets);

  VertexSet ground() const { return ground_; }
  std::size_t num_vertices() const;
  // Largest label in the ground set, 0 if empty.
  std::size_t max_label() const;
  const std::vector<VertexSet>& facets() const { return facets_; }

  // No faces at all, not even the empty one.
  bool is_void() const { return facets_.empty(); }
  bool is_pure() const;
  // Largest facet cardinality.
  std::size_t rank() const;
  VertexSet support() const;
  VertexSet loops() const { return ground_ & ~support(); }
  bool contains(VertexSet face) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  VertexSet ground_ = 0;
  std::vector<VertexSet> facets_;
};

class Matroid {
 public:
  Matroid() = default;
  // Throws NotMatroidError if basis exchange fails.
  static Matroid from_complex(SimplicialComplex c);
  // For constructions that are matroids by design.
  static Matroid assume_valid(SimplicialComplex c) { return Matroid(std::move(c)); }

  const SimplicialComplex& complex() const { return complex_; }
  std::size_t rank() const { return complex_.rank(); }
  const std::vector<VertexSet>& bases() const { return complex_.facets(); }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  explicit Matroid(SimplicialComplex c) : complex_(std::move(c)) {}
  SimplicialComplex complex_;
};

FVector f_vector_complex(const SimplicialComplex& c);

// h_i = sum_{k<=i} (-1)^{i-k} C(d-k, i-k) f_k with d the top index of f. Trailing zeros
// are trimmed; the untrimmed form has d+1 entries.
HVector h_vector(const FVector& f);
HVector h_vector_untrimmed(const FVector& f, std::size_t d);

bool is_matroid(const SimplicialComplex& c);

// Facets are complements of bases within the ground set.
Matroid dual(const Matroid& m);
HVector cover_h_vector(const Matroid& m);

// Throws VoidComplexError when v lies in no facet.
SimplicialComplex link_vertex(const SimplicialComplex& c, std::size_t v);
SimplicialComplex delete_vertices(const SimplicialComplex& c, VertexSet s);
SimplicialComplex restrict_to(const SimplicialComplex& c, VertexSet s);
// Link at the smallest vertex of `cls`, then deletion of the rest of it.
SimplicialComplex link_class(const SimplicialComplex& c, VertexSet cls);
bool is_cone_point(const SimplicialComplex& c, std::size_t v);

struct ParallelPartition {
  // Ordered by smallest vertex.
  std::vector<VertexSet> classes;

  std::size_t size() const { return classes.size(); }
  std::vector<std::uint32_t> sizes() const;
};

// Throws LoopError when the complex has loops.
ParallelPartition parallel_classes(const SimplicialComplex& c);
// Class i becomes vertex i+1.
Matroid simplify(const Matroid& m);

// Facets are the faces of cardinality min(|F|, k+1).
SimplicialComplex skeleton(const SimplicialComplex& c, std::size_t k);

bool has_spanning_circuit(const Matroid& m);

// dual(simplify(m)); needs exactly rank+2 parallel classes.
Matroid dual_graph(const Matroid& m);

// b's labels are shifted past a's largest label.
SimplicialComplex join_complexes(const SimplicialComplex& a, const SimplicialComplex& b);

// Relabeling search; meant for small complexes.
bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

// Blows up vertex i of `simple` (vertices 1..p) into weights[i-1] consecutive labels.
SimplicialComplex expand_weighted(const SimplicialComplex& simple,
                                  const std::vector<std::uint32_t>& weights);

struct FilterLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct FilterReport {
  std::vector<FilterLine> lines;
  bool all_pass() const;
};

struct TypeHint {
  std::size_t classes = 0;
  std::size_t rank = 0;
};

// Hibi's inequalities, Brown-Colbourn for b = 1..b_max, and h_s >= p-d+1 when a hint
// is supplied.
FilterReport filter_checks(const HVector& h, std::uint32_t b_max,
                           std::optional<TypeHint> hint = std::nullopt);
// Just the Hibi part, used as a cheap reject.
bool satisfies_hibi(const HVector& h);

// Text format:
//   n=<int>
//   weights a1 ... ap      (optional; facets are then over classes 1..p)
//   facet v1 v2 ...
// A leading '{' switches to the JSON mirror {"n", "weights"?, "facets"}.
struct ComplexFile {
  SimplicialComplex complex;  // expanded when weights were given
  std::optional<std::vector<std::uint32_t>> weights;
};
ComplexFile parse_complex(std::string_view text);
std::string format_complex(const SimplicialComplex& c);
std::string format_complex_json(const SimplicialComplex& c);

}  // namespace oseq
