#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "sgpcover/builders.hpp"
#include "sgpcover/covering.hpp"

using namespace sgpcover;

namespace {
  std::vector<Transformation> const example13{
      Transformation{1, 6, 11, 12, 11, 10, 7, 13, 7, 1, 2, 1, 1},
      Transformation{2, 10, 3, 3, 8, 7, 2, 4, 5, 6, 5, 3, 4}};

  Emulation emulate(std::vector<Transformation> const& gens, Method const& method) {
    auto built = build_morphism(method, gens);
    return build_emulation(gens, built.theta, built.phi);
  }

  // 123, 132, 111, 222, 333 with 2 and 3 identified
  std::vector<Transformation> const small{Transformation{1, 2, 3}, Transformation{1, 3, 2},
                                          Transformation{1, 1, 1}, Transformation{2, 2, 2},
                                          Transformation{3, 3, 3}};
}  // namespace

TEST_CASE("psi lifts each state to its labels", "[covering]") {
  auto e = emulate(example13, CongruenceMethod{{{1, 2}, {3, 4}}});
  CHECK(e.top_size() == 4);
  CHECK(e.bottom_size() == 5);
  CHECK(e.lift(10) == std::vector<CascadeState>{{1, 5}});
  CHECK(e.lift(9) == std::vector<CascadeState>{{3, 1}});
  CHECK(e.lift(13) == std::vector<CascadeState>{{4, 3}});

  auto nn = emulate({Transformation{2, 3, 1}}, Nn1Method{});
  CHECK(nn.lift(2) == std::vector<CascadeState>{{1, 1}, {3, 2}});
}

TEST_CASE("mu reproduces the 13-state dependency tables", "[covering]") {
  auto e = emulate(example13, CongruenceMethod{{{1, 2}, {3, 4}}});
  REQUIRE(e.lifts(0).size() == 1);
  REQUIRE(e.lifts(1).size() == 1);
  CHECK(dependency_listing(e.lifts(0)[0])
        == "<trans cascade with 2 levels with (4, 5) pts, 5 dependencies>\n"
           "[] -> Transformation([1,4,1,1])\n"
           "[1] -> Transformation([1,3,5,4,1])\n"
           "[2] -> Transformation([1,2,1,3])\n"
           "[3] -> Transformation([4,2,3,4])\n"
           "[4] -> Transformation([2,1,1])\n");
  CHECK(dependency_listing(e.lifts(1)[0])
        == "<trans cascade with 2 levels with (4, 5) pts, 5 dependencies>\n"
           "[] -> Transformation([1,2,2,2])\n"
           "[1] -> Transformation([2,5,4,2,3])\n"
           "[2] -> Transformation([1,1,4,2])\n"
           "[3] -> Transformation([3,2,3])\n"
           "[4] -> Transformation([3,1,2])\n");
}

TEST_CASE("mu refuses lifts that break the action condition", "[covering]") {
  StateRelation theta(2, {{1}, {1}, {2}, {2}});
  auto          w = squash_labelling(theta);
  CHECK_THROWS_AS(mu(Transformation{3, 3, 3, 4}, {Transformation{1, 2}}, theta, w),
                  MorphismViolation);
  CHECK_THROWS_AS(build_emulation({Transformation{3, 3, 3, 4}}, theta,
                                  GenRelation(2, {{Transformation{1, 2}}})),
                  MorphismViolation);
  auto ok = mu(Transformation{3, 3, 3, 4}, {Transformation{2, 2}}, theta, w);
  REQUIRE(ok.size() == 1);
  CHECK(ok[0].dep()(1) == Transformation{1, 1});
}

TEST_CASE("interpretation inverts the lifts", "[covering]") {
  auto e = emulate(example13, CongruenceMethod{{{1, 2}, {3, 4}}});
  for (State x = 1; x <= 13; ++x) {
    for (auto const& p : e.lift(x)) {
      CHECK(e.interpret(p) == x);
    }
  }
  CHECK(e.interpret(e.lifts(0)[0]) == example13[0]);
  CHECK(e.interpret(e.lifts(1)[0]) == example13[1]);
  CHECK_THROWS_AS(e.interpret(CascadeState{3, 2}), NotALift);
  CHECK_THROWS_AS(e.interpret(CascadeState{5, 1}), NotALift);
  CHECK(e.cover() == std::vector<State>{1, 2, 3, 4});
}

TEST_CASE("mu inverse detects non-lifts", "[covering]") {
  // theta(x) = X \ {x} on 3 states: every state is seen from two top states,
  // so two patches must agree.
  auto e = emulate({Transformation{2, 3, 1}}, Nn1Method{});
  CHECK(e.interpret(e.lifts(0)[0]) == Transformation{2, 3, 1});

  // top identity, bottom swaps at y = 1 only: state 2 read at y = 1 goes to
  // 3, but read at y = 3 it stays 2
  DependencyFunction d(3, 2);
  d.set(1, Transformation{2, 1});
  CascadeTransformation conflict(Transformation::identity(3), d);
  CHECK_THROWS_AS(e.interpret(conflict), NotALift);

  // top constant 1 with bottom constant 2 sends everything to (1, 2), which
  // decodes to 3, consistently
  DependencyFunction c(3, 2);
  for (State y = 1; y <= 3; ++y) {
    c.set(y, Transformation{2, 2});
  }
  CHECK(e.interpret(CascadeTransformation(Transformation{1, 1, 1}, c))
        == Transformation{3, 3, 3});
}

TEST_CASE("greedy cover prefers large preimages", "[covering]") {
  StateRelation theta(3, {{2}, {2}, {3}, {1}, {3}, {3}});
  auto          w = squash_labelling(theta);
  CHECK(greedy_cover(theta, w) == std::vector<State>{1, 2, 3});
  StateRelation overlap(3, {{1, 2}, {2}, {2, 3}});
  CHECK(greedy_cover(overlap, squash_labelling(overlap)) == std::vector<State>{2});
  StateRelation nn(3, {{2, 3}, {1, 3}, {1, 2}});
  CHECK(greedy_cover(nn, squash_labelling(nn)) == std::vector<State>{1, 2});
}

TEST_CASE("local components of the three-state example", "[covering]") {
  auto e = emulate(small, CongruenceMethod{{{2, 3}}});
  CHECK(e.theta().images() == std::vector<std::vector<State>>{{1}, {2}, {2}});
  auto const& p_lift = e.lifts(1);
  REQUIRE(p_lift.size() == 1);
  CHECK(p_lift[0].dep()(2) == Transformation{2, 1});

  auto comps = local_components(e);
  REQUIRE(comps.components.size() == 2);
  auto const& u1 = comps.components[0];
  auto const& u2 = comps.components[1];
  CHECK(u1.top_state == 1);
  CHECK(u1.is_trivial());
  CHECK(u2.top_state == 2);
  CHECK(u2.elements.size() == 4);
  CHECK(u2.contains(Transformation{2, 1}));
  CHECK(u2.contains(Transformation{1, 1}));
  CHECK(u2.contains(Transformation{2, 2}));
  CHECK(u2.contains(Transformation{1, 2}));
  CHECK(u1.embedding_verified);
  CHECK(u2.embedding_verified);
  for (std::size_t i = 0; i < u2.elements.size(); ++i) {
    CHECK_FALSE(u2.witnesses[i].empty());
  }
}

TEST_CASE("local components of the 13-state example", "[covering]") {
  auto e     = emulate(example13, CongruenceMethod{{{1, 2}, {3, 4}}});
  auto comps = local_components(e);
  CHECK(comps.product_size == 11948);
  CHECK(comps.complete);
  for (auto const& u : comps.components) {
    CHECK(u.embedding_verified);
    for (auto const& t : u.elements) {
      CHECK(t.degree() == 5);
      for (State z = static_cast<State>(u.local_size) + 1; z <= 5; ++z) {
        CHECK(t[z] == z);
      }
    }
  }
  CHECK_THROWS_AS(local_components(e, 1000), LocalComponentsIncomplete);
  try {
    local_components(e, 1000);
  } catch (LocalComponentsIncomplete const& err) {
    CHECK_FALSE(err.partial().complete);
    CHECK(err.budget() == 1000);
  }
}

TEST_CASE("identity theta leaves nothing for the bottom level", "[covering]") {
  std::vector<Transformation> gens{Transformation{2, 3, 1, 4}, Transformation{1, 1, 3, 3}};
  auto                        e = build_emulation(gens, StateRelation::identity(4),
                                                  GenRelation(4, {{gens[0]}, {gens[1]}}));
  CHECK(e.bottom_size() == 1);
  for (std::size_t a = 0; a < gens.size(); ++a) {
    CHECK(e.lifts(a)[0].dep().count() == 0);
  }
  for (auto const& u : local_components(e).components) {
    CHECK(u.is_trivial());
  }
}

TEST_CASE("constant theta puts the generators on the bottom level", "[covering]") {
  std::vector<Transformation> gens{Transformation{2, 3, 1, 4}, Transformation{1, 1, 3, 3}};
  auto                        e = emulate(gens, ConstantMethod{});
  CHECK(e.top_size() == 1);
  CHECK(e.bottom_size() == 4);
  CHECK(e.lifts(0)[0].dep()(1) == gens[0]);
  CHECK(e.lifts(1)[0].dep()(1) == gens[1]);
}

TEST_CASE("local embeddings hold on random instances", "[covering]") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> deg(2, 5);
    auto const                                 n    = deg(rng);
    auto const                                 gens = oracle::random_generators(rng, n, 3);
    Method method = trial % 2 == 0 ? Method{Nn1Method{}}
                                   : Method{CongruenceMethod{oracle::random_seed(rng, n)}};
    auto e = emulate(gens, method);
    for (auto const& u : local_components(e).components) {
      INFO("degree " << n << ", top state " << u.top_state);
      CHECK(u.embedding_verified);
      CHECK(u.embedding_failure.empty());
    }
  }
}
