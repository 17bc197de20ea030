#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "oseq/complex.hpp"
#include "oseq/constructions.hpp"
#include "oseq/errors.hpp"

using namespace oseq;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(OSEQ_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t n) {
  std::vector<VertexSet> facets;
  const std::size_t count = 1 + rng() % 6;
  for (std::size_t i = 0; i < count; ++i) facets.push_back(rng() & first_vertices(n));
  return SimplicialComplex(n, facets);
}

std::vector<std::uint64_t> as_vec(const FVector& f) { return f.counts(); }

}  // namespace

TEST_CASE("vertex set helpers") {
  CHECK(vertices_of(0b1011) == std::vector<std::size_t>{1, 2, 4});
  CHECK(set_of({1, 2, 4}) == 0b1011);
  CHECK(format_set(0b1011) == "124");
  CHECK(format_set(set_of({1, 2, 14})) == "{1,2,14}");
  CHECK(format_h({1, 4, 10, 13}) == "(1,4,10,13)");
}

TEST_CASE("facets are normalized to a sorted antichain") {
  const SimplicialComplex c(4, {0b0011, 0b0001, 0b0111, 0b1000});
  CHECK(c.facets() == std::vector<VertexSet>{0b1000, 0b0111});
  CHECK_FALSE(c.is_pure());
  CHECK(c.rank() == 3);
  CHECK(c.contains(0b0101));
  CHECK_FALSE(c.contains(0b1001));
  CHECK(SimplicialComplex(3, {}).is_void());
  const auto l = SimplicialComplex::on_ground(0b11111, {0b00011, 0b00110});
  CHECK(l.loops() == 0b11000);
  CHECK(l.num_vertices() == 5);
  CHECK(l.max_label() == 5);
}

TEST_CASE("f- and h-vectors agree with the subset and polynomial oracles") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const auto c = random_complex(rng, 1 + rng() % 12);
    const auto f = f_vector_complex(c);
    CHECK(as_vec(f) == oracle::complex_f(c));
    CHECK(h_vector(f) == oracle::h_from_f(f.counts()));
  }
  // Larger supports exercise the non-dense path.
  for (int iter = 0; iter < 20; ++iter) {
    const auto c = random_complex(rng, 26);
    CHECK(as_vec(f_vector_complex(c)) == oracle::complex_f(c));
  }
  CHECK(h_vector_untrimmed(FVector{1, 3, 3}, 3) == HVector{1, 0, 0, -1});
}

TEST_CASE("is_matroid agrees with independence augmentation") {
  std::mt19937_64 rng(8);
  int yes = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t n = 1 + rng() % 6;
    SimplicialComplex c;
    if (iter % 2) {
      c = random_complex(rng, n);
    } else {
      const std::size_t d = 1 + rng() % n;
      c = gen::random_matroid(rng, d, n, 1).complex();
    }
    const bool want = oracle::is_matroid(c);
    CHECK(is_matroid(c) == want);
    yes += want;
    if (want) {
      CHECK_NOTHROW(Matroid::from_complex(c));
    } else {
      CHECK_THROWS_AS(Matroid::from_complex(c), NotMatroidError);
    }
  }
  CHECK(yes > 150);
}

TEST_CASE("Fano plane") {
  const auto f = parse_complex(read_file("fano.txt")).complex;
  CHECK(f == fano().complex());
  CHECK(is_matroid(f));
  CHECK(f_vector_complex(f) == FVector{1, 7, 21, 28});
  CHECK(h_vector(f_vector_complex(f)) == HVector{1, 4, 10, 13});
  CHECK(cover_h_vector(fano()) == HVector{1, 3, 6, 10, 8});
  CHECK_FALSE(has_spanning_circuit(dual(fano())));
  CHECK(has_spanning_circuit(fano()));
  CHECK(parallel_classes(f).size() == 7);
}

TEST_CASE("duality, links and deletions") {
  const auto u = uniform(2, 4);
  CHECK(dual(dual(u)) == u);
  CHECK(dual(u).complex().facets().size() == 6);
  CHECK(cover_h_vector(u) == HVector{1, 2, 3});
  const auto l = link_vertex(u.complex(), 1);
  CHECK(f_vector_complex(l) == FVector{1, 3});
  CHECK(l.ground() == 0b1110);
  const auto del = delete_vertices(u.complex(), 0b0001);
  CHECK(del.facets().size() == 3);
  CHECK(restrict_to(u.complex(), 0b0011).facets() == std::vector<VertexSet>{0b0011});
  const auto with_loop = SimplicialComplex::on_ground(0b111, {0b011});
  CHECK_THROWS_AS(link_vertex(with_loop, 3), VoidComplexError);
  CHECK_THROWS_AS(link_vertex(with_loop, 5), InputError);
  CHECK(is_cone_point(with_loop, 1));
  CHECK_FALSE(is_cone_point(u.complex(), 1));
}

TEST_CASE("parallel classes and simplification") {
  const auto m = complete_matroid(2, 3, {2, 1, 3});
  const auto part = parallel_classes(m.complex());
  CHECK(part.classes == std::vector<VertexSet>{0b000011, 0b000100, 0b111000});
  CHECK(part.sizes() == std::vector<std::uint32_t>{2, 1, 3});
  CHECK(simplify(m) == uniform(2, 3));
  CHECK(link_class(m.complex(), 0b000011).facets().size() == 4);
  const auto loopy = Matroid::assume_valid(SimplicialComplex::on_ground(0b111, {0b011}));
  CHECK_THROWS_AS(parallel_classes(loopy.complex()), LoopError);
  CHECK(expand_weighted(uniform(2, 3).complex(), {2, 1, 3}) == m.complex());
}

TEST_CASE("skeletons and spanning circuits") {
  const auto u = uniform(3, 5);
  const auto s = skeleton(u.complex(), 1);
  CHECK(s == uniform(2, 5).complex());
  CHECK_THROWS_AS(skeleton(u.complex(), 3), InputError);
  CHECK(has_spanning_circuit(uniform(2, 4)));
  CHECK_FALSE(has_spanning_circuit(uniform(3, 3)));
}

TEST_CASE("dual graph needs rank plus two classes") {
  const auto m = complete_matroid(2, 4, {1, 2, 1, 1});
  const auto g = dual_graph(m);
  CHECK(g == dual(uniform(2, 4)));
  CHECK_THROWS_AS(dual_graph(uniform(2, 3)), InputError);
}

TEST_CASE("join and isomorphism") {
  const auto a = uniform(1, 2).complex();
  const auto b = uniform(1, 3).complex();
  const auto j = join_complexes(a, b);
  CHECK(j.facets().size() == 6);
  CHECK(f_vector_complex(j) == FVector{1, 5, 6});
  CHECK(isomorphic(j, join_complexes(b, a)));
  CHECK_FALSE(isomorphic(uniform(2, 4).complex(), complete_matroid(2, 3, {2, 1, 1}).complex()));
  const auto f7 = fano();
  std::vector<VertexSet> shuffled;
  for (VertexSet f : f7.bases()) {
    VertexSet g = 0;
    for (auto v : vertices_of(f)) g |= vertex_bit(8 - v);
    shuffled.push_back(g);
  }
  CHECK(isomorphic(fano().complex(), SimplicialComplex(7, shuffled)));
}

TEST_CASE("filters") {
  const auto ok = filter_checks({1, 3, 6, 5}, 2);
  CHECK(ok.all_pass());
  REQUIRE(ok.lines.size() == 4);
  CHECK(ok.lines[0].name == "hibi-monotone");
  CHECK(ok.lines[2].name == "brown-colbourn b=1");
  CHECK(ok.lines[2].detail == "partial sums 1,2,4,1");
  CHECK_FALSE(filter_checks({1, 0, 1}, 1).all_pass());
  CHECK_FALSE(satisfies_hibi({1, 5, 2, 4}));
  CHECK(satisfies_hibi({1, 4, 10, 13}));
  const auto typed = filter_checks({1, 3, 6, 10, 8}, 1, TypeHint{7, 3});
  CHECK(typed.lines.back().name == "type-bound");
  CHECK(typed.lines.back().pass);
  CHECK_FALSE(filter_checks({1, 3, 2}, 1, TypeHint{7, 3}).lines.back().pass);
}

TEST_CASE("complex files") {
  const auto text = format_complex(uniform(2, 3).complex());
  CHECK(text == "n=3\nfacet 1 2\nfacet 1 3\nfacet 2 3\n");
  CHECK(parse_complex(text).complex == uniform(2, 3).complex());
  const auto js = format_complex_json(uniform(2, 3).complex());
  CHECK(parse_complex(js).complex == uniform(2, 3).complex());
  const auto w = parse_complex("n=3\nweights 2 1 3\nfacet 1 2\nfacet 1 3\nfacet 2 3\n");
  CHECK(w.weights == std::vector<std::uint32_t>{2, 1, 3});
  CHECK(w.complex == complete_matroid(2, 3, {2, 1, 3}).complex());
  CHECK(parse_complex("{\"n\":3,\"weights\":[2,1,3],\"facets\":[[1,2],[1,3],[2,3]]}").complex == w.complex);
  CHECK_THROWS_AS(parse_complex("n=3\nfacet 1 4\n"), InputError);
  CHECK_THROWS_AS(parse_complex("facet 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_complex("n=3\nweights 1 2\nfacet 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_complex("{\"n\": 3, \"facets\": [[1, \"x\"]]}"), InputError);
  try {
    parse_complex("n=3\nfacet 1 2\nfacet 1 q\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("weighted Delta_a file") {
  const auto file = parse_complex(read_file("delta_a.txt"));
  CHECK(file.complex.num_vertices() == 20);
  CHECK(simplify(Matroid::assume_valid(file.complex)) == fano_series_extension());
  CHECK(parallel_classes(file.complex).sizes() == std::vector<std::uint32_t>{1, 2, 3, 4, 1, 3, 4, 2});
}
