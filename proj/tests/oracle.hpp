// Brute-force reference computations on plain image vectors, independent of
// the library.

#ifndef SGPCOVER_TESTS_ORACLE_HPP_
#define SGPCOVER_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "sgpcover/transformation.hpp"

namespace oracle {

  using Map = std::vector<unsigned>;  // 1-based images

  inline Map compose(Map const& a, Map const& b) {
    Map r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      r[i] = b[a[i] - 1];
    }
    return r;
  }

  //! Fixpoint iteration: keep multiplying by generators until nothing new.
  inline std::set<Map> closure(std::vector<Map> const& gens) {
    std::set<Map> all(gens.begin(), gens.end());
    bool          grew = true;
    while (grew) {
      grew = false;
      std::vector<Map> now(all.begin(), all.end());
      for (auto const& s : now) {
        for (auto const& g : gens) {
          if (all.insert(compose(s, g)).second) {
            grew = true;
          }
        }
      }
    }
    return all;
  }

  //! No element generates a cyclic group of order > 1: the powers s, s^2, ...
  //! reach a repeated value whose period is 1.
  inline bool aperiodic(std::set<Map> const& elements) {
    for (auto const& s : elements) {
      std::vector<Map> powers{s};
      while (true) {
        Map  next = compose(powers.back(), s);
        auto it   = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end()) {
          if (it != powers.end() - 1) {
            return false;
          }
          break;
        }
        powers.push_back(next);
      }
    }
    return true;
  }

  inline Map images(sgpcover::Transformation const& t) {
    return Map(t.images().begin(), t.images().end());
  }

  inline sgpcover::Transformation to_transformation(Map const& m) {
    return sgpcover::Transformation(
        std::vector<sgpcover::State>(m.begin(), m.end()));
  }

  inline Map random_map(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<unsigned> d(1, static_cast<unsigned>(n));
    Map                                     m(n);
    for (auto& v : m) {
      v = d(rng);
    }
    return m;
  }

  inline Map random_permutation(std::mt19937_64& rng, std::size_t n) {
    Map m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = static_cast<unsigned>(i + 1);
    }
    std::shuffle(m.begin(), m.end(), rng);
    return m;
  }

  //! Random generator set of the given degree with 1..max_gens generators,
  //! mixing permutations and arbitrary maps.
  inline std::vector<sgpcover::Transformation>
  random_generators(std::mt19937_64& rng, std::size_t n, std::size_t max_gens) {
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::bernoulli_distribution                perm(0.35);
    std::vector<sgpcover::Transformation>      gens;
    for (std::size_t i = count(rng); i > 0; --i) {
      gens.push_back(to_transformation(perm(rng) ? random_permutation(rng, n)
                                                 : random_map(rng, n)));
    }
    return gens;
  }

  //! Random disjoint seed classes of size >= 2 inside {1..n}.
  inline std::vector<std::vector<sgpcover::State>>
  random_seed(std::mt19937_64& rng, std::size_t n) {
    Map pts = random_permutation(rng, n);
    std::vector<std::vector<sgpcover::State>> seed;
    std::uniform_int_distribution<std::size_t> classes(0, 2);
    std::size_t                                used = 0;
    for (std::size_t c = classes(rng); c > 0 && used + 2 <= n; --c) {
      std::uniform_int_distribution<std::size_t> size(2, std::min<std::size_t>(3, n - used));
      std::vector<sgpcover::State>               cls;
      for (std::size_t k = size(rng); k > 0; --k) {
        cls.push_back(pts[used++]);
      }
      seed.push_back(cls);
    }
    return seed;
  }

}  // namespace oracle

#endif  // SGPCOVER_TESTS_ORACLE_HPP_
