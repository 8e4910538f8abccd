#include "sgpcover/covering.hpp"

#include <algorithm>      // for sort, find
#include <numeric>        // for iota
#include <unordered_set>  // for unordered_set

namespace sgpcover {

  std::vector<CascadeState> psi(State                x,
                                StateRelation const& theta,
                                Labelling const&     labelling) {
    std::vector<CascadeState> result;
    for (State y : theta(x)) {
      auto z = labelling.encode(y, x);
      if (!z) {
        throw InvalidArgument("labelling does not encode state "
                              + std::to_string(x) + " in context "
                              + std::to_string(y));
      }
      result.push_back({y, *z});
    }
    return result;  // theta(x) is sorted, hence so is this
  }

  std::vector<CascadeTransformation>
  mu(Transformation const&              a,
     std::vector<Transformation> const& lifts,
     StateRelation const&               theta,
     Labelling const&                   labelling,
     std::size_t                        gen) {
    auto const m = theta.target_degree();
    auto const k = labelling.bottom_size();
    if (a.degree() != theta.source_degree()) {
      throw InvalidArgument("generator " + a.to_string()
                            + " does not act on the source states");
    }
    std::vector<CascadeTransformation> result;
    result.reserve(lifts.size());
    for (auto const& t : lifts) {
      if (t.degree() != m) {
        throw InvalidArgument("lift " + t.to_string()
                              + " does not act on the top states");
      }
      DependencyFunction dep(m, k);
      for (State y = 1; y <= m; ++y) {
        auto const size = labelling.preimage_size(y);
        if (size == 0) {
          continue;
        }
        State const        yt = t[y];
        std::vector<State> bottom(k);
        std::iota(bottom.begin(), bottom.end(), State(1));
        for (State z = 1; z <= size; ++z) {
          State x     = *labelling.decode(y, z);
          auto  label = labelling.encode(yt, a[x]);
          if (!label) {
            throw MorphismViolation("cannot lift generator",
                                    Counterexample{x, gen, y, t});
          }
          bottom[z - 1] = *label;
        }
        dep.set(y, Transformation(std::move(bottom)));
      }
      result.emplace_back(t, std::move(dep));
    }
    return result;
  }

  State psi_inverse(CascadeState const& pair, Labelling const& labelling) {
    if (pair.top < 1 || pair.top > labelling.top_size()) {
      throw NotALift("top state " + std::to_string(pair.top)
                     + " out of range");
    }
    auto x = labelling.decode(pair.top, pair.bottom);
    if (!x) {
      throw NotALift("(" + std::to_string(pair.top) + ","
                     + std::to_string(pair.bottom)
                     + ") is not the lift of any state");
    }
    return *x;
  }

  std::vector<State> greedy_cover(StateRelation const& theta,
                                  Labelling const&     labelling) {
    auto const         inv = inverse(theta);
    std::vector<State> order(labelling.top_size());
    std::iota(order.begin(), order.end(), State(1));
    std::stable_sort(order.begin(), order.end(), [&](State a, State b) {
      return labelling.preimage_size(a) > labelling.preimage_size(b);
    });
    std::vector<bool>  covered(theta.source_degree() + 1, false);
    std::size_t        remaining = theta.source_degree();
    std::vector<State> result;
    for (State y : order) {
      if (remaining == 0) {
        break;
      }
      bool useful = false;
      for (State x : inv(y)) {
        if (!covered[x]) {
          covered[x] = true;
          --remaining;
          useful = true;
        }
      }
      if (useful) {
        result.push_back(y);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  Transformation mu_inverse(CascadeTransformation const& c,
                            StateRelation const&         theta,
                            Labelling const&             labelling,
                            std::vector<State> const&    cover) {
    auto const n = theta.source_degree();
    if (c.top_size() != labelling.top_size()) {
      throw NotALift("cascade top size does not match the labelling");
    }
    std::vector<State> images(n, 0);
    for (State y : cover) {
      auto const size = labelling.preimage_size(y);
      State const yt   = c.top()(y);
      auto const  d    = c.dep()(y);
      for (State z = 1; z <= size; ++z) {
        State x      = *labelling.decode(y, z);
        auto  target = labelling.decode(yt, d[z]);
        if (!target) {
          throw NotALift("bottom image " + std::to_string(d[z])
                         + " has no decoding in context "
                         + std::to_string(yt));
        }
        if (images[x - 1] != 0 && images[x - 1] != *target) {
          throw NotALift("contexts disagree on the image of state "
                         + std::to_string(x));
        }
        images[x - 1] = *target;
      }
    }
    auto missing = std::find(images.begin(), images.end(), State(0));
    if (missing != images.end()) {
      throw NotALift("cover misses state "
                     + std::to_string(missing - images.begin() + 1));
    }
    return Transformation(std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Emulation
  ////////////////////////////////////////////////////////////////////////

  Emulation::Emulation(std::vector<Transformation> gens,
                       StateRelation               theta,
                       GenRelation                 phi,
                       Labelling                   labelling)
      : _gens(std::move(gens)),
        _theta(std::move(theta)),
        _theta_inverse(inverse(_theta)),
        _phi(std::move(phi)),
        _labelling(std::move(labelling)) {
    _theta.require_fully_defined();
    if (_gens.empty()) {
      throw InvalidArgument("an emulation needs at least one generator");
    }
    if (_phi.size() != _gens.size()) {
      throw InvalidArgument("generator relation size does not match the "
                            "generator list");
    }
    if (_phi.target_degree() != _theta.target_degree()) {
      throw InvalidArgument("state and generator relations disagree on the "
                            "target degree");
    }
    if (_labelling.source_degree() != _theta.source_degree()
        || _labelling.top_size() != _theta.target_degree()) {
      throw InvalidArgument("labelling does not match the state relation");
    }
    for (State y = 1; y <= _theta.target_degree(); ++y) {
      if (_labelling.encoding(y).domain() != _theta_inverse(y)) {
        throw InvalidArgument("labelling for top state " + std::to_string(y)
                              + " is not defined exactly on its preimage");
      }
    }
    _psi.reserve(_theta.source_degree());
    for (State x = 1; x <= _theta.source_degree(); ++x) {
      _psi.push_back(psi(x, _theta, _labelling));
    }
    _mu.reserve(_gens.size());
    for (std::size_t a = 0; a < _gens.size(); ++a) {
      _mu.push_back(mu(_gens[a], _phi[a], _theta, _labelling, a));
    }
    _cover = greedy_cover(_theta, _labelling);
  }

  Emulation Emulation::from_tables(
      std::vector<Transformation>                     gens,
      StateRelation                                   theta,
      GenRelation                                     phi,
      Labelling                                       labelling,
      std::vector<std::vector<CascadeState>>          psi_table,
      std::vector<std::vector<CascadeTransformation>> lifts) {
    Emulation e;
    e._gens          = std::move(gens);
    e._theta         = std::move(theta);
    e._theta_inverse = inverse(e._theta);
    e._phi           = std::move(phi);
    e._labelling     = std::move(labelling);
    e._psi           = std::move(psi_table);
    e._mu            = std::move(lifts);
    e._cover         = greedy_cover(e._theta, e._labelling);
    return e;
  }

  std::vector<CascadeState> const& Emulation::lift(State x) const {
    if (x < 1 || x > _psi.size()) {
      throw InvalidArgument("state " + std::to_string(x) + " out of range");
    }
    return _psi[x - 1];
  }

  std::vector<CascadeTransformation> Emulation::cascade_generators() const {
    std::vector<CascadeTransformation> result;
    for (auto const& lifts : _mu) {
      result.insert(result.end(), lifts.begin(), lifts.end());
    }
    return result;
  }

  std::vector<std::size_t> Emulation::cascade_generator_origins() const {
    std::vector<std::size_t> result;
    for (std::size_t a = 0; a < _mu.size(); ++a) {
      result.insert(result.end(), _mu[a].size(), a);
    }
    return result;
  }

  State Emulation::interpret(CascadeState const& pair) const {
    return psi_inverse(pair, _labelling);
  }

  Transformation Emulation::interpret(CascadeTransformation const& c) const {
    return mu_inverse(c, _theta, _labelling, _cover);
  }

  Emulation build_emulation(std::vector<Transformation> gens,
                            StateRelation               theta,
                            GenRelation                 phi) {
    theta.require_fully_defined();
    auto labelling = squash_labelling(theta);
    return Emulation(std::move(gens),
                     std::move(theta),
                     std::move(phi),
                     std::move(labelling));
  }

  ////////////////////////////////////////////////////////////////////////
  // Local components
  ////////////////////////////////////////////////////////////////////////

  bool LocalComponent::is_trivial() const {
    return std::all_of(elements.begin(), elements.end(), [](auto const& u) {
      return u.is_identity();
    });
  }

  bool LocalComponent::contains(Transformation const& u) const {
    return std::find(elements.begin(), elements.end(), u) != elements.end();
  }

  namespace {
    // f_y(u) = w_y u w_y^-1, listed by label: entry z - 1 is the image of
    // w_y^-1(z), or 0 where the decoding is undefined.
    std::vector<State> conjugate_back(Transformation const& u,
                                      State                 y,
                                      Labelling const&      labelling) {
      auto const         size = labelling.preimage_size(y);
      std::vector<State> result(size, 0);
      for (State z = 1; z <= size; ++z) {
        if (auto x = labelling.decode(y, u[z])) {
          result[z - 1] = *x;
        }
      }
      return result;
    }
  }  // namespace

  LocalComponent local_component(State                 y,
                                 Emulation const&      emulation,
                                 CascadeProduct const& product,
                                 std::size_t           pair_cap) {
    auto const& labelling = emulation.labelling();
    auto const  k         = labelling.bottom_size();
    auto const  size      = labelling.preimage_size(y);

    LocalComponent result;
    result.top_state  = y;
    result.local_size = size;

    std::unordered_set<Transformation, TransformationHash> seen;
    std::string                                            failure;
    for (std::size_t i = 0; i < product.size(); ++i) {
      auto const& c = product.elements()[i];
      if (c.top()[y] != y) {
        continue;
      }
      auto const         d = c.dep()(y);
      std::vector<State> restricted(k);
      std::iota(restricted.begin(), restricted.end(), State(1));
      for (State z = 1; z <= size; ++z) {
        if (d[z] > size && failure.empty()) {
          failure = "a stabilizer of " + std::to_string(y)
                    + " moves a local label outside the context";
        }
        restricted[z - 1] = d[z];
      }
      Transformation u(std::move(restricted));
      if (seen.insert(u).second) {
        result.elements.push_back(std::move(u));
        result.witnesses.push_back(product.word(i));
      }
    }

    // f_y against the source elements named by the witnesses.
    auto const  origins = emulation.cascade_generator_origins();
    auto const& gens    = emulation.generators();
    std::vector<std::vector<State>> images;
    for (std::size_t i = 0; i < result.elements.size() && failure.empty(); ++i) {
      Word source;
      for (auto letter : result.witnesses[i]) {
        source.push_back(origins.at(letter));
      }
      auto const s = evaluate(source, gens);
      auto const f = conjugate_back(result.elements[i], y, labelling);
      for (State z = 1; z <= size; ++z) {
        State x = *labelling.decode(y, z);
        if (f[z - 1] != s[x]) {
          failure = "f_y of " + result.elements[i].to_string()
                    + " disagrees with its source element "
                    + s.to_string() + " at state " + std::to_string(x);
          break;
        }
      }
      images.push_back(f);
    }
    if (failure.empty()) {
      auto sorted = images;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        failure = "f_y is not injective";
      }
    }
    auto const cap = std::min(pair_cap, result.elements.size());
    for (std::size_t i = 0; i < cap && failure.empty(); ++i) {
      for (std::size_t j = 0; j < cap && failure.empty(); ++j) {
        auto const uv = result.elements[i] * result.elements[j];
        if (product.is_complete() && !seen.contains(uv)) {
          failure = "U_y is not closed under composition";
          break;
        }
        // f(u) f(v) on theta^-1(y), composing as right actions
        auto const fuv = conjugate_back(uv, y, labelling);
        for (std::size_t p = 0; p < size; ++p) {
          State via = images[i][p];
          auto  z   = labelling.encode(y, via);
          State two = z ? images[j][*z - 1] : 0;
          if (two != fuv[p]) {
            failure = "f_y is not multiplicative";
            break;
          }
        }
      }
    }
    result.embedding_verified = failure.empty();
    result.embedding_failure  = failure;
    return result;
  }

  LocalComponents local_components(Emulation const& emulation,
                                   std::size_t      budget) {
    CascadeProduct  product(emulation.cascade_generators(), budget, true);
    LocalComponents result;
    result.product_size = product.size();
    result.complete     = product.is_complete();
    for (State y : emulation.theta().image()) {
      result.components.push_back(local_component(y, emulation, product));
    }
    if (!result.complete) {
      throw LocalComponentsIncomplete(std::move(result), budget);
    }
    return result;
  }

}  // namespace sgpcover
