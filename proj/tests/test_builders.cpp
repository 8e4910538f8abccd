#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "sgpcover/builders.hpp"

using namespace sgpcover;

namespace {
  // All set partitions of {1..n} as block-index vectors (restricted growth
  // strings), block[x - 1] = block of x.
  std::vector<std::vector<unsigned>> all_partitions(std::size_t n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned>              rgs(n, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned max) -> void {
      if (i == n) {
        out.push_back(rgs);
        return;
      }
      for (unsigned b = 0; b <= max + 1; ++b) {
        rgs[i] = b;
        self(self, i + 1, std::max(max, b));
      }
    };
    rgs[0] = 0;
    rec(rec, 1, 0);
    return out;
  }

  bool compatible(std::vector<unsigned> const&       block,
                  std::vector<Transformation> const& gens) {
    for (auto const& g : gens) {
      for (std::size_t x = 0; x < block.size(); ++x) {
        for (std::size_t y = 0; y < block.size(); ++y) {
          if (block[x] == block[y] && block[g.images()[x] - 1] != block[g.images()[y] - 1]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool contains_seed(std::vector<unsigned> const&           block,
                     std::vector<std::vector<State>> const& seed) {
    for (auto const& c : seed) {
      for (State x : c) {
        if (block[x - 1] != block[c.front() - 1]) {
          return false;
        }
      }
    }
    return true;
  }

  // Every class of the partition lies inside one block.
  bool refines(Partition const& p, std::vector<unsigned> const& block) {
    for (auto const& c : p.classes()) {
      for (State x : c) {
        if (block[x - 1] != block[c.front() - 1]) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("union-find", "[builders]") {
  UnionFind uf(6);
  CHECK(uf.unite(1, 2));
  CHECK(uf.unite(3, 4));
  CHECK_FALSE(uf.unite(2, 1));
  CHECK(uf.unite(2, 4));
  CHECK(uf.find(1) == uf.find(3));
  CHECK(uf.find(5) != uf.find(1));
  CHECK(uf.size() == 6);
}

TEST_CASE("partitions are normalized and validated", "[builders]") {
  Partition p(5, {{5, 3}, {2, 1}, {4}});
  CHECK(p.to_string() == "[[1,2],[3,5],[4]]");
  CHECK(p.class_of(5) == 2);
  CHECK(p.size() == 3);
  CHECK_THROWS_AS(Partition(3, {{1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Partition(3, {{1, 2}, {2, 3}}), InvalidArgument);
  CHECK_THROWS_AS(Partition(3, {{1, 2, 3}, {}}), InvalidArgument);
  CHECK_THROWS_AS(Partition(2, {{1, 2, 3}}), InvalidArgument);
}

TEST_CASE("congruence closure of the 13-state example", "[builders]") {
  std::vector<Transformation> gens{
      Transformation{1, 6, 11, 12, 11, 10, 7, 13, 7, 1, 2, 1, 1},
      Transformation{2, 10, 3, 3, 8, 7, 2, 4, 5, 6, 5, 3, 4}};
  auto p = congruence_closure(gens, {{1, 2}, {3, 4}});
  CHECK(p.to_string() == "[[1,2,6,7,10],[3,4,5,8],[9],[11,12,13]]");
  CHECK(p.is_right_congruence(gens));

  auto [theta, phi] = theta_phi_congruence(p, gens);
  CHECK(phi[0] == std::vector<Transformation>{Transformation{1, 4, 1, 1}});
  CHECK(phi[1] == std::vector<Transformation>{Transformation{1, 2, 2, 2}});
  CHECK_FALSE(check_morphism(theta, phi, gens).has_value());
}

TEST_CASE("congruence closure is the finest congruence containing the seed", "[builders]") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 2; n <= 5; ++n) {
    auto const partitions = all_partitions(n);
    for (int trial = 0; trial < 40; ++trial) {
      auto gens = oracle::random_generators(rng, n, 3);
      auto seed = oracle::random_seed(rng, n);
      auto p    = congruence_closure(gens, seed);
      REQUIRE(p.is_right_congruence(gens));
      std::vector<unsigned> own(n);
      for (State x = 1; x <= n; ++x) {
        own[x - 1] = p.class_of(x);
      }
      CHECK(contains_seed(own, seed));
      for (auto const& block : partitions) {
        if (compatible(block, gens) && contains_seed(block, seed)) {
          CHECK(refines(p, block));
        }
      }
    }
  }
}

TEST_CASE("congruence closure input checks", "[builders]") {
  std::vector<Transformation> gens{Transformation{2, 1, 3}};
  CHECK(congruence_closure(gens, {}).size() == 3);
  CHECK_THROWS_AS(congruence_closure(gens, {{1, 4}}), InvalidArgument);
  CHECK_THROWS_AS(congruence_closure(gens, {{1, 2}, {2, 3}}), InvalidArgument);
  CHECK_THROWS_AS(theta_phi_congruence(Partition(3, {{1, 3}, {2}}), gens), InvalidArgument);
}

TEST_CASE("n(n-1) builder", "[builders]") {
  std::vector<Transformation> gens{Transformation{2, 3, 1}, Transformation{1, 1, 3}};
  auto [theta, phi] = theta_phi_nn1(gens, 3);
  CHECK(theta(2) == std::vector<State>{1, 3});
  CHECK(phi[0] == std::vector<Transformation>{Transformation{2, 3, 1}});
  CHECK(phi[1] == std::vector<Transformation>{Transformation{2, 2, 2}});
  CHECK_FALSE(check_morphism(theta, phi, gens).has_value());
  CHECK_THROWS_AS(theta_phi_nn1({Transformation{1}}, 1), InvalidArgument);
}

TEST_CASE("local monoid builder", "[builders]") {
  std::vector<Transformation> gens{Transformation{1, 1, 1}, Transformation{3, 3, 3}};
  auto [theta, phi] = theta_phi_local_monoid(gens, Transformation{1, 1, 3});
  CHECK(theta.target_degree() == 2);
  CHECK(theta(2) == std::vector<State>{1});
  CHECK(phi[1] == std::vector<Transformation>{Transformation{2, 2}});

  auto [id_theta, id_phi] = theta_phi_local_monoid(gens, Transformation::identity(3));
  CHECK(is_functionally_bijective(id_theta));
  CHECK(id_phi[0] == std::vector<Transformation>{Transformation{1, 1, 1}});

  CHECK_THROWS_AS(theta_phi_local_monoid(gens, Transformation{2, 3, 1}), InvalidArgument);

  // x = 3: (3 . e) . (e a e) = 2 but (3 . a) . e = 1
  std::vector<Transformation> bad{Transformation{3, 3, 1}};
  CHECK_THROWS_AS(theta_phi_local_monoid(bad, Transformation{1, 2, 2}), MorphismViolation);
  try {
    theta_phi_local_monoid(bad, Transformation{1, 2, 2});
  } catch (MorphismViolation const& e) {
    CHECK(e.counterexample().state == 3);
  }
}

TEST_CASE("constant builder", "[builders]") {
  std::vector<Transformation> gens{Transformation{2, 3, 1}, Transformation{1, 1, 2}};
  auto [theta, phi] = theta_phi_constant(gens, 3);
  CHECK(theta.target_degree() == 1);
  CHECK(phi[1] == std::vector<Transformation>{Transformation{1}});
  CHECK_FALSE(check_morphism(theta, phi, gens).has_value());
}

TEST_CASE("method dispatch", "[builders]") {
  std::vector<Transformation> gens{Transformation{2, 1, 3, 4}, Transformation{3, 3, 3, 4}};
  CHECK(method_name(Nn1Method{}) == "nn1");
  CHECK(method_name(LocalMonoidMethod{Transformation{1}}) == "local-monoid");

  auto built = build_morphism(CongruenceMethod{{{1, 2}}}, gens);
  REQUIRE(built.partition.has_value());
  CHECK(built.partition->to_string() == "[[1,2],[3],[4]]");
  CHECK_FALSE(build_morphism(ConstantMethod{}, gens).partition.has_value());
  CHECK(build_morphism(Nn1Method{}, gens).theta.target_degree() == 4);

  ExplicitMethod wrong{StateRelation(1, {{1}, {1}}), GenRelation(1, {{Transformation{1}}})};
  CHECK_THROWS_AS(build_morphism(wrong, gens), InvalidArgument);
  CHECK_THROWS_AS(build_morphism(Nn1Method{}, {}), InvalidArgument);
}
