#include "sgpcover/relation.hpp"

#include <algorithm>  // for sort, unique, binary_search
#include <sstream>    // for ostringstream

namespace sgpcover {

  namespace {
    template <typename T>
    void sort_unique(std::vector<T>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }  // namespace

  StateRelation::StateRelation(std::size_t                     target_degree,
                               std::vector<std::vector<State>> images)
      : _target_degree(target_degree), _images(std::move(images)) {
    for (std::size_t x = 0; x < _images.size(); ++x) {
      for (State y : _images[x]) {
        if (y < 1 || y > _target_degree) {
          throw InvalidArgument("relation image " + std::to_string(y)
                                + " of point " + std::to_string(x + 1)
                                + " out of range for target degree "
                                + std::to_string(_target_degree));
        }
      }
      sort_unique(_images[x]);
    }
  }

  StateRelation StateRelation::identity(std::size_t degree) {
    std::vector<std::vector<State>> images(degree);
    for (std::size_t x = 0; x < degree; ++x) {
      images[x] = {static_cast<State>(x + 1)};
    }
    return StateRelation(degree, std::move(images));
  }

  std::vector<State> const& StateRelation::operator()(State x) const {
    if (x < 1 || x > _images.size()) {
      throw InvalidArgument("state " + std::to_string(x)
                            + " out of range for relation on "
                            + std::to_string(_images.size()) + " points");
    }
    return _images[x - 1];
  }

  bool StateRelation::is_fully_defined() const {
    return std::none_of(_images.begin(), _images.end(), [](auto const& s) {
      return s.empty();
    });
  }

  void StateRelation::require_fully_defined() const {
    for (std::size_t x = 0; x < _images.size(); ++x) {
      if (_images[x].empty()) {
        throw InvalidArgument("state relation is not fully defined at point "
                              + std::to_string(x + 1));
      }
    }
  }

  std::vector<State> StateRelation::image() const {
    std::vector<State> result;
    for (auto const& s : _images) {
      result.insert(result.end(), s.begin(), s.end());
    }
    sort_unique(result);
    return result;
  }

  std::vector<State> StateRelation::domain() const {
    std::vector<State> result;
    for (std::size_t x = 0; x < _images.size(); ++x) {
      if (!_images[x].empty()) {
        result.push_back(static_cast<State>(x + 1));
      }
    }
    return result;
  }

  StateRelation inverse(StateRelation const& theta) {
    std::vector<std::vector<State>> images(theta.target_degree());
    for (State x = 1; x <= theta.source_degree(); ++x) {
      for (State y : theta(x)) {
        images[y - 1].push_back(x);
      }
    }
    return StateRelation(theta.source_degree(), std::move(images));
  }

  GenRelation::GenRelation(std::size_t target_degree,
                           std::vector<std::vector<Transformation>> lifts)
      : _target_degree(target_degree), _lifts(std::move(lifts)) {
    for (std::size_t a = 0; a < _lifts.size(); ++a) {
      if (_lifts[a].empty()) {
        throw InvalidArgument("generator relation is not fully defined at "
                              "generator "
                              + std::to_string(a + 1));
      }
      for (auto const& t : _lifts[a]) {
        if (t.degree() != _target_degree) {
          throw InvalidArgument("lift " + t.to_string() + " of generator "
                                + std::to_string(a + 1)
                                + " does not have target degree "
                                + std::to_string(_target_degree));
        }
      }
      sort_unique(_lifts[a]);
    }
  }

  std::vector<Transformation> GenRelation::image() const {
    std::vector<Transformation> result;
    for (auto const& s : _lifts) {
      result.insert(result.end(), s.begin(), s.end());
    }
    sort_unique(result);
    return result;
  }

  std::string Counterexample::to_string() const {
    std::ostringstream out;
    out << "state " << state << " under generator " << generator + 1
        << ": top state " << top_state << " under lift " << lift.to_string()
        << " leaves theta(" << state << " . a)";
    return out.str();
  }

  std::optional<Counterexample>
  check_morphism(StateRelation const&               theta,
                 GenRelation const&                 phi,
                 std::vector<Transformation> const& gens) {
    if (phi.size() != gens.size()) {
      throw InvalidArgument("generator relation has "
                            + std::to_string(phi.size()) + " entries for "
                            + std::to_string(gens.size()) + " generators");
    }
    if (phi.target_degree() != theta.target_degree()) {
      throw InvalidArgument("state and generator relations disagree on the "
                            "target degree");
    }
    for (auto const& g : gens) {
      if (g.degree() != theta.source_degree()) {
        throw InvalidArgument("generator " + g.to_string()
                              + " does not match the source degree "
                              + std::to_string(theta.source_degree()));
      }
    }
    theta.require_fully_defined();
    for (State x = 1; x <= theta.source_degree(); ++x) {
      for (std::size_t a = 0; a < gens.size(); ++a) {
        auto const& target = theta(gens[a][x]);
        for (State y : theta(x)) {
          for (auto const& t : phi[a]) {
            if (!std::binary_search(target.begin(), target.end(), t[y])) {
              return Counterexample{x, a, y, t};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_surjective(StateRelation const& theta,
                     GenRelation const&   phi,
                     std::size_t          target_states) {
    if (phi.target_degree() != target_states) {
      return false;
    }
    auto img = theta.image();
    return img.size() == target_states
           && (img.empty() || img.back() == target_states);
  }

  bool is_injective(StateRelation const& theta) {
    std::vector<bool> seen(theta.target_degree() + 1, false);
    for (auto const& s : theta.images()) {
      for (State y : s) {
        if (seen[y]) {
          return false;
        }
        seen[y] = true;
      }
    }
    return true;
  }

  bool is_injective_on_gens(GenRelation const&                 phi,
                            std::vector<Transformation> const& gens) {
    for (std::size_t a = 0; a < phi.size(); ++a) {
      for (std::size_t b = a + 1; b < phi.size(); ++b) {
        if (a < gens.size() && b < gens.size() && gens[a] == gens[b]) {
          continue;
        }
        for (auto const& t : phi[a]) {
          if (std::binary_search(phi[b].begin(), phi[b].end(), t)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_functionally_bijective(StateRelation const& theta) {
    if (theta.source_degree() != theta.target_degree()) {
      return false;
    }
    for (auto const& s : theta.images()) {
      if (s.size() != 1) {
        return false;
      }
    }
    return is_injective(theta);
  }

}  // namespace sgpcover
