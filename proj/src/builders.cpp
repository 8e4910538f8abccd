#include "sgpcover/builders.hpp"

#include <algorithm>  // for sort, binary_search
#include <deque>      // for deque
#include <numeric>    // for iota
#include <sstream>    // for ostringstream

#include "sgpcover/errors.hpp"

namespace sgpcover {

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    void require_degree(std::vector<Transformation> const& gens,
                        std::size_t                        n) {
      if (gens.empty()) {
        throw InvalidArgument("at least one generator is required");
      }
      for (auto const& g : gens) {
        if (g.degree() != n) {
          throw InvalidArgument("generator " + g.to_string()
                                + " does not have degree "
                                + std::to_string(n));
        }
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // UnionFind
  ////////////////////////////////////////////////////////////////////////

  UnionFind::UnionFind(std::size_t n) : _parent(n + 1), _weight(n + 1, 1) {
    std::iota(_parent.begin(), _parent.end(), State(0));
  }

  State UnionFind::find(State x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool UnionFind::unite(State x, State y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (_weight[x] < _weight[y]) {
      std::swap(x, y);
    }
    _parent[y] = x;
    _weight[x] += _weight[y];
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::size_t degree, std::vector<std::vector<State>> classes)
      : _classes(std::move(classes)), _class_of(degree, 0) {
    for (auto& c : _classes) {
      if (c.empty()) {
        throw InvalidArgument("partition classes must be nonempty");
      }
      std::sort(c.begin(), c.end());
    }
    std::sort(_classes.begin(), _classes.end(), [](auto const& a, auto const& b) {
      return a.front() < b.front();
    });
    for (std::size_t i = 0; i < _classes.size(); ++i) {
      for (State x : _classes[i]) {
        if (x < 1 || x > degree) {
          throw InvalidArgument("partition state " + std::to_string(x)
                                + " out of range for degree "
                                + std::to_string(degree));
        }
        if (_class_of[x - 1] != 0) {
          throw InvalidArgument("state " + std::to_string(x)
                                + " appears in two partition classes");
        }
        _class_of[x - 1] = static_cast<State>(i + 1);
      }
    }
    for (std::size_t x = 0; x < degree; ++x) {
      if (_class_of[x] == 0) {
        throw InvalidArgument("partition does not cover state "
                              + std::to_string(x + 1));
      }
    }
  }

  State Partition::class_of(State x) const {
    if (x < 1 || x > _class_of.size()) {
      throw InvalidArgument("state " + std::to_string(x)
                            + " out of range for partition");
    }
    return _class_of[x - 1];
  }

  bool Partition::is_right_congruence(
      std::vector<Transformation> const& gens) const {
    for (auto const& a : gens) {
      if (a.degree() != degree()) {
        return false;
      }
      for (auto const& c : _classes) {
        State const target = class_of(a[c.front()]);
        for (State x : c) {
          if (class_of(a[x]) != target) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::string Partition::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < _classes.size(); ++i) {
      if (i != 0) {
        out << ',';
      }
      out << '[';
      for (std::size_t j = 0; j < _classes[i].size(); ++j) {
        if (j != 0) {
          out << ',';
        }
        out << _classes[i][j];
      }
      out << ']';
    }
    out << ']';
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence closure
  ////////////////////////////////////////////////////////////////////////

  Partition congruence_closure(std::vector<Transformation> const&     gens,
                               std::vector<std::vector<State>> const& seed,
                               std::size_t                            degree) {
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw InvalidArgument("generator " + g.to_string()
                              + " does not have degree "
                              + std::to_string(degree));
      }
    }
    std::vector<bool> seen(degree + 1, false);
    for (auto const& c : seed) {
      for (State x : c) {
        if (x < 1 || x > degree) {
          throw InvalidArgument("seed state " + std::to_string(x)
                                + " out of range for degree "
                                + std::to_string(degree));
        }
        if (seen[x]) {
          throw InvalidArgument("seed classes overlap at state "
                                + std::to_string(x));
        }
        seen[x] = true;
      }
    }

    // worklist of pairs to identify; a merge queues the images of the pair
    UnionFind                          uf(degree);
    std::deque<std::pair<State, State>> pending;
    for (auto const& c : seed) {
      for (std::size_t i = 1; i < c.size(); ++i) {
        pending.emplace_back(c.front(), c[i]);
      }
    }
    while (!pending.empty()) {
      auto [p, q] = pending.front();
      pending.pop_front();
      if (uf.unite(p, q)) {
        for (auto const& a : gens) {
          pending.emplace_back(a[p], a[q]);
        }
      }
    }

    std::vector<std::vector<State>> by_root(degree + 1);
    for (State x = 1; x <= degree; ++x) {
      by_root[uf.find(x)].push_back(x);
    }
    std::vector<std::vector<State>> classes;
    for (auto& c : by_root) {
      if (!c.empty()) {
        classes.push_back(std::move(c));
      }
    }
    return Partition(degree, std::move(classes));
  }

  Partition congruence_closure(std::vector<Transformation> const&     gens,
                               std::vector<std::vector<State>> const& seed) {
    if (gens.empty()) {
      throw InvalidArgument("at least one generator is required");
    }
    return congruence_closure(gens, seed, gens.front().degree());
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphism builders
  ////////////////////////////////////////////////////////////////////////

  Morphism theta_phi_congruence(Partition const&                   partition,
                                std::vector<Transformation> const& gens) {
    require_degree(gens, partition.degree());
    if (!partition.is_right_congruence(gens)) {
      throw InvalidArgument("partition " + partition.to_string()
                            + " is not a right congruence");
    }
    auto const                      m = partition.size();
    std::vector<std::vector<State>> theta(partition.degree());
    for (State x = 1; x <= partition.degree(); ++x) {
      theta[x - 1] = {partition.class_of(x)};
    }
    std::vector<std::vector<Transformation>> phi;
    for (auto const& a : gens) {
      std::vector<State> induced(m);
      for (std::size_t i = 0; i < m; ++i) {
        induced[i] = partition.class_of(a[partition.classes()[i].front()]);
      }
      phi.push_back({Transformation(std::move(induced))});
    }
    return {StateRelation(m, std::move(theta)), GenRelation(m, std::move(phi))};
  }

  Morphism theta_phi_nn1(std::vector<Transformation> const& gens, std::size_t n) {
    if (n < 2) {
      throw InvalidArgument("the n(n-1) method needs at least 2 states");
    }
    require_degree(gens, n);
    std::vector<std::vector<State>> theta(n);
    for (State x = 1; x <= n; ++x) {
      for (State y = 1; y <= n; ++y) {
        if (y != x) {
          theta[x - 1].push_back(y);
        }
      }
    }
    std::vector<std::vector<Transformation>> phi;
    for (auto const& a : gens) {
      if (a.is_permutation()) {
        phi.push_back({a});
        continue;
      }
      auto const                  img = a.image_set();
      std::vector<Transformation> constants;
      for (State j = 1; j <= n; ++j) {
        if (!std::binary_search(img.begin(), img.end(), j)) {
          constants.push_back(Transformation::constant(n, j));
        }
      }
      phi.push_back(std::move(constants));
    }
    return {StateRelation(n, std::move(theta)), GenRelation(n, std::move(phi))};
  }

  Morphism theta_phi_local_monoid(std::vector<Transformation> const& gens,
                                  Transformation const&              e) {
    require_degree(gens, e.degree());
    if (!e.is_idempotent()) {
      throw InvalidArgument(e.to_string() + " is not idempotent");
    }
    auto const         xe = e.image_set();
    auto const         m  = xe.size();
    std::vector<State> position(e.degree() + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      position[xe[i]] = static_cast<State>(i + 1);
    }
    std::vector<std::vector<State>> theta(e.degree());
    for (State x = 1; x <= e.degree(); ++x) {
      theta[x - 1] = {position[e[x]]};
    }
    std::vector<std::vector<Transformation>> phi;
    for (auto const& a : gens) {
      // Points of Xe are fixed by e, so e a e on Xe is s -> (s . a) . e.
      std::vector<State> local(m);
      for (std::size_t i = 0; i < m; ++i) {
        local[i] = position[e[a[xe[i]]]];
      }
      phi.push_back({Transformation(std::move(local))});
    }
    StateRelation th(m, std::move(theta));
    GenRelation   ph(m, std::move(phi));
    if (auto ce = check_morphism(th, ph, gens)) {
      throw MorphismViolation("local monoid is not a homomorphic image",
                              std::move(*ce));
    }
    return {std::move(th), std::move(ph)};
  }

  Morphism theta_phi_constant(std::vector<Transformation> const& gens,
                              std::size_t                        n) {
    require_degree(gens, n);
    std::vector<std::vector<State>>          theta(n, std::vector<State>{1});
    std::vector<std::vector<Transformation>> phi(
        gens.size(), std::vector<Transformation>{Transformation::identity(1)});
    return {StateRelation(1, std::move(theta)), GenRelation(1, std::move(phi))};
  }

  std::string method_name(Method const& method) {
    return std::visit(overloaded{[](Nn1Method const&) { return "nn1"; },
                                 [](CongruenceMethod const&) { return "congruence"; },
                                 [](LocalMonoidMethod const&) { return "local-monoid"; },
                                 [](ConstantMethod const&) { return "constant"; },
                                 [](ExplicitMethod const&) { return "explicit"; }},
                      method);
  }

  BuiltMorphism build_morphism(Method const&                      method,
                               std::vector<Transformation> const& gens) {
    if (gens.empty()) {
      throw InvalidArgument("at least one generator is required");
    }
    auto const n = gens.front().degree();
    return std::visit(
        overloaded{
            [&](Nn1Method const&) {
              auto [theta, phi] = theta_phi_nn1(gens, n);
              return BuiltMorphism{std::move(theta), std::move(phi), {}};
            },
            [&](CongruenceMethod const& m) {
              auto partition    = congruence_closure(gens, m.seed, n);
              auto [theta, phi] = theta_phi_congruence(partition, gens);
              return BuiltMorphism{
                  std::move(theta), std::move(phi), std::move(partition)};
            },
            [&](LocalMonoidMethod const& m) {
              auto [theta, phi] = theta_phi_local_monoid(gens, m.idempotent);
              return BuiltMorphism{std::move(theta), std::move(phi), {}};
            },
            [&](ConstantMethod const&) {
              auto [theta, phi] = theta_phi_constant(gens, n);
              return BuiltMorphism{std::move(theta), std::move(phi), {}};
            },
            [&](ExplicitMethod const& m) {
              if (m.theta.source_degree() != n) {
                throw InvalidArgument("explicit theta does not match the "
                                      "generator degree");
              }
              return BuiltMorphism{m.theta, m.phi, {}};
            }},
        method);
  }

}  // namespace sgpcover
