#include <doctest.h>

#include <json.hpp>
#include <numeric>
#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "oseq/constructions.hpp"
#include "oseq/errors.hpp"
#include "oseq/search.hpp"

using namespace oseq;

namespace {

PartitionMonomial pm(std::vector<std::vector<std::uint32_t>> blocks, Weights a) { return {std::move(blocks), std::move(a)}; }

FVector oracle_f(const OrderIdeal& g) { return FVector(oracle::monomial_f(g.generators(), g.num_vars())); }

}  // namespace

TEST_CASE("partition orders") {
  const Weights a{1, 2, 3, 1};
  CHECK(leq_a(pm({{1}, {2, 3}, {4}}, a), pm({{1, 2}, {3}, {4}}, a)) == false);
  CHECK(leq_a(pm({{1}, {2}, {3, 4}}, a), pm({{1, 2}, {3}, {4}}, a)) == false);
  CHECK(leq_a(pm({{1}, {2}, {4}}, a), pm({{1, 2}, {3}, {4}}, a)));
  CHECK(leq_a_r(pm({{1}, {2, 3}, {4}}, a), pm({{1}, {2, 3, 4}}, a), 2));
  CHECK_THROWS_AS(leq_a_r(pm({{1}, {2}}, a), pm({{1}, {2}}, a), 0), InputError);
  CHECK_THROWS_AS(leq_a(pm({{1}}, a), pm({{1}}, {1})), InputError);
}

TEST_CASE("3-compatibility of the four-class example holds iff a2 <= a4") {
  for (std::uint32_t a2 = 1; a2 <= 4; ++a2) {
    for (std::uint32_t a4 = 1; a4 <= 4; ++a4) {
      const Weights a{2, a2, 1, a4};
      const std::vector<PartitionMonomial> ps{pm({{1}, {2}, {3, 4}}, a), pm({{1}, {2, 3}, {4}}, a),
                                              pm({{1, 2}, {3}, {4}}, a)};
      const std::vector<PartitionMonomial> qs{pm({{1, 2}, {3, 4}}, a)};
      CHECK(r_compatible(ps, qs, 2) == (a2 <= a4));
      CHECK(leq_a_r(ps[1], qs[0], 2) == (a2 <= a4));
      CHECK(leq_a_r(ps[0], qs[0], 2) == (a2 <= 1 + a4));
      std::vector<Monomial> g1, g2;
      for (const auto& p : ps) g1.push_back(realize_partition(p));
      for (const auto& q : qs) g2.push_back(realize_partition(q).insert_var(2, 0));
      CHECK(r_compatible(OrderIdeal(3, g1), OrderIdeal(3, g2), 2) == (a2 <= a4));
    }
  }
}

TEST_CASE("the five-class collections are compatible for every block") {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 30; ++iter) {
    const auto a = gen::random_weights(rng, 5, 4);
    const std::vector<PartitionMonomial> ps{pm({{1}, {2, 3}, {4, 5}}, a), pm({{1, 2}, {3}, {4, 5}}, a)};
    const std::vector<PartitionMonomial> qs{pm({{1}, {2, 3, 4, 5}}, a), pm({{1, 2}, {3, 4, 5}}, a),
                                            pm({{1, 2, 3}, {4, 5}}, a), pm({{1, 2, 3, 4}, {5}}, a)};
    for (std::size_t r = 0; r < 3; ++r) CHECK(r_compatible(ps, qs, r));
  }
}

TEST_CASE("gluing the five-class example realizes its cover h-vector") {
  std::mt19937_64 rng(10);
  for (int iter = 0; iter < 20; ++iter) {
    auto a = gen::random_weights(rng, 5, 3);
    if (a[1] > a[3]) std::swap(a[1], a[3]);
    const std::vector<PartitionMonomial> ps{pm({{1}, {2}, {3, 4}}, a), pm({{1}, {2, 3}, {4}}, a),
                                            pm({{1, 2}, {3}, {4}}, a)};
    const std::vector<PartitionMonomial> qs{pm({{1, 2}, {3, 4}}, a)};
    const auto glued = glue_partitions(ps, qs, 2, 5);
    std::vector<std::string> names;
    for (const auto& g : glued) names.push_back(g.to_string());
    CHECK(names == std::vector<std::string>{"[1|2|3,4,5]", "[1|2,3|4,5]", "[1,2|3|4,5]", "[1,2|3,4|5]"});
    std::vector<Monomial> gens;
    for (const auto& g : glued) gens.push_back(realize_partition(g));
    const OrderIdeal gamma(3, gens);

    // A1A2A3, A1A2A4, A1A3A4, A2A3A4, A1A3A5, A1A4A5, A2A3A5, A2A4A5
    const std::vector<VertexSet> simple{0b00111, 0b01011, 0b01101, 0b01110, 0b10101, 0b11001, 0b10110, 0b11010};
    const auto m = Matroid::from_complex(expand_weighted(SimplicialComplex(5, simple), a));
    const auto h = cover_h_vector(m);
    const auto f = oracle_f(gamma);
    CHECK(std::vector<std::int64_t>(f.counts().begin(), f.counts().end()) == h);
  }
}

TEST_CASE("glue rejects bad input") {
  const OrderIdeal g1(2, {Monomial{1, 1}});
  CHECK_THROWS_AS(glue(g1, OrderIdeal(2, {Monomial{1, 1}}), 1, 1), InputError);
  try {
    glue(g1, OrderIdeal(2, {Monomial{0, 0}}), 1, 2);
    FAIL("expected a compatibility error");
  } catch (const CompatibilityError& e) {
    CHECK(e.witness() == Monomial{1, 1});
  }
  const auto ok = glue(g1, OrderIdeal(2, {Monomial{3, 0}}), 1, 2);
  CHECK(ok.pure);
  CHECK(ok.ideal.generators() == std::vector<Monomial>{Monomial{1, 3}, Monomial{3, 1}});
  CHECK_FALSE(glue(g1, OrderIdeal(2, {Monomial{2, 0}}), 1, 2).pure);
  CHECK(f_vector(glue(OrderIdeal(), OrderIdeal(2, {Monomial{1, 0}}), 1, 2).ideal) == FVector{1, 2, 1});
}

TEST_CASE("socle counting and combination ranks") {
  const auto c = count_socle_space(4, 6, 6);
  CHECK(c.monomials == 84);
  CHECK(c.socles == 406481544);
  CHECK(count_socle_space(5, 10, 7).socles == binomial_big(1001, 7));
  std::vector<std::uint32_t> s{1, 2, 3};
  for (std::uint64_t r = 0; r < binomial(7, 3); ++r) {
    const auto u = unrank_combination(r, 7, 3);
    CHECK(rank_combination(u) == r);
  }
  CHECK(unrank_combination(0, 7, 3) == s);
  CHECK(unrank_combination(34, 7, 3) == std::vector<std::uint32_t>{5, 6, 7});
}

TEST_CASE("enumeration equals the unfiltered oracle") {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::uint32_t s = 1; s <= 3; ++s) {
      for (std::uint64_t t = 1; t <= 3; ++t) {
        if (t > binomial(s + d - 1, d - 1)) continue;
        CAPTURE(d);
        CAPTURE(s);
        CAPTURE(t);
        const auto want = oracle::pure_o_sequences(d, s, t);
        for (bool shortcut : {true, false}) {
          SearchConfig cfg;
          cfg.lex_shortcut = shortcut;
          const auto got = enumerate_pure_o_sequences(d, s, t, cfg);
          std::set<std::vector<std::uint64_t>> as_vec;
          for (const auto& f : got.f_vectors) as_vec.insert(f.counts());
          CHECK(as_vec == want);
          if (!shortcut) CHECK(got.stats.skipped == 0);
        }
      }
    }
  }
}

TEST_CASE("enumeration ranges and threads") {
  SearchConfig whole;
  const auto full = enumerate_pure_o_sequences(3, 3, 3, whole);
  CHECK(full.stats.examined + full.stats.skipped == binomial(10, 3));
  std::set<FVector> merged;
  for (auto r : split_range({0, binomial(10, 3)}, 5)) {
    SearchConfig part;
    part.range = r;
    const auto got = enumerate_pure_o_sequences(3, 3, 3, part);
    merged.insert(got.f_vectors.begin(), got.f_vectors.end());
  }
  CHECK(merged == full.f_vectors);
  SearchConfig par;
  par.jobs = 4;
  const auto threaded = enumerate_pure_o_sequences(3, 3, 3, par);
  CHECK(threaded.f_vectors == full.f_vectors);
  CHECK(threaded.stats.examined == full.stats.examined);
  SearchConfig lim;
  lim.max_candidates = 10;
  CHECK(enumerate_pure_o_sequences(3, 3, 3, lim).limit_reached);
  SearchConfig bad;
  bad.range = RankRange{5, 1000};
  CHECK_THROWS_AS(enumerate_pure_o_sequences(3, 3, 3, bad), InputError);
  CHECK_THROWS_AS(enumerate_pure_o_sequences(4, 40, 30, whole), OverflowError);
}

TEST_CASE("pure O-sequence recognition") {
  std::mt19937_64 rng(12);
  SearchConfig cfg;
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t d = 1 + rng() % 4;
    const auto g = gen::random_pure_ideal(rng, d, 1 + rng() % 4, 1 + rng() % 4);
    const FVector f = f_vector(g);
    const auto out = is_pure_o_sequence(f, cfg);
    REQUIRE(out.status == SearchStatus::Realized);
    REQUIRE(out.ideal);
    CHECK(oracle_f(*out.ideal) == f);
    CHECK(out.ideal->num_vars() == f[1]);
  }
  CHECK(is_pure_o_sequence(FVector{1, 3, 1}, cfg).status == SearchStatus::Exhausted);
  CHECK(is_pure_o_sequence(FVector{1, 2, 4}, cfg).status == SearchStatus::Exhausted);
  const auto one = is_pure_o_sequence(FVector{1}, cfg);
  CHECK(one.status == SearchStatus::Realized);
  CHECK_THROWS_AS(is_pure_o_sequence(FVector{2, 3}, cfg), InputError);
  // Every pure O-sequence of small parameters is recognized, every other vector is not.
  for (const auto& want : oracle::pure_o_sequences(3, 3, 2)) {
    CHECK(is_pure_o_sequence(FVector(want), cfg).status == SearchStatus::Realized);
  }
  SearchConfig tiny;
  tiny.max_candidates = 1;
  CHECK(is_pure_o_sequence(FVector{1, 4, 10, 20, 35, 56, 84, 100, 90}, tiny).status == SearchStatus::LimitReached);
}

TEST_CASE("guided search") {
  SearchConfig cfg;
  const auto m = complete_matroid(2, 4, {1, 1, 1, 1});
  const auto out = guided_search(m, {0, 1, 2, 3}, cfg);
  REQUIRE(out.status == SearchStatus::Realized);
  const auto f = oracle_f(*out.ideal);
  const auto h = cover_h_vector(m);
  CHECK(std::vector<std::int64_t>(f.counts().begin(), f.counts().end()) == h);

  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 15; ++iter) {
    const std::size_t p = 3 + rng() % 3;
    const std::size_t d = 2 + rng() % (p - 1);
    const std::size_t t = rng() % (d - 1);
    const auto a = gen::random_weights(rng, p, 3);
    const auto dm = delta_t(d, p, a, t);
    const auto order = feasible_orderings(dm, 1).front();
    SearchConfig seeded;
    seeded.order = ChoiceOrder::SeededRandom;
    seeded.seed = iter;
    const auto res = guided_search(dm, order, seeded);
    CHECK(res.status == SearchStatus::Realized);
    if (res.ideal) {
      const auto got = oracle_f(*res.ideal);
      CHECK(std::vector<std::int64_t>(got.counts().begin(), got.counts().end()) == cover_h_vector(dm));
    }
  }
  CHECK_THROWS_AS(guided_search(m, {0, 1, 2}, cfg), InputError);
  CHECK_THROWS_AS(guided_search(m, {0, 0, 1, 2}, cfg), InputError);
  CHECK(feasible_orderings(m, 5).size() == 5);
  CHECK(feasible_orderings(m, 1000).size() == 24);
}

TEST_CASE("guided search is reproducible across jobs and seeds") {
  const auto m = fano_series_extension();
  const std::vector<std::size_t> order{0, 1, 2, 6, 3, 7, 5, 4};
  SearchConfig one;
  const auto a = guided_search(m, order, one);
  SearchConfig four;
  four.jobs = 4;
  const auto b = guided_search(m, order, four);
  CHECK(a.status == b.status);
  CHECK(a.ideal == b.ideal);
  CHECK(to_json(a) == to_json(a));
}

TEST_CASE("outcome JSON") {
  SearchOutcome out;
  out.status = SearchStatus::Realized;
  out.ideal = OrderIdeal(2, {Monomial{1, 1}});
  out.stats.examined = 3;
  out.stats.prune_histogram[2] = 5;
  const auto doc = nlohmann::json::parse(to_json(out));
  CHECK(doc["status"] == "realized");
  CHECK(doc["order_ideal"]["vars"] == 2);
  CHECK(doc["order_ideal"]["generators"][0] == nlohmann::json::array({1, 1}));
  CHECK(doc["examined"] == 3);
  CHECK(doc["prune_histogram"]["2"] == 5);
  CHECK(to_json(out).rfind("{\"status\"", 0) == 0);
  CHECK(status_name(SearchStatus::LimitReached) == "limit_reached");
  CHECK(status_name(SearchStatus::Infeasible) == "infeasible");
}
