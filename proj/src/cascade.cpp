#include "sgpcover/cascade.hpp"

#include <set>      // for set
#include <sstream>  // for ostringstream

#include "sgpcover/errors.hpp"

namespace sgpcover {

  namespace {
    std::vector<Transformation>
    flatten_all(std::vector<CascadeTransformation> const& gens) {
      if (gens.empty()) {
        throw InvalidArgument("a cascade product needs at least one generator");
      }
      std::vector<Transformation> result;
      result.reserve(gens.size());
      for (auto const& c : gens) {
        if (c.top_size() != gens.front().top_size()
            || c.bottom_size() != gens.front().bottom_size()) {
          throw InvalidArgument("cascade generators of mixed sizes");
        }
        result.push_back(flatten(c));
      }
      return result;
    }
  }  // namespace

  void DependencyFunction::set(State y, Transformation value) {
    if (y < 1 || y > _top_size) {
      throw InvalidArgument("dependency argument " + std::to_string(y)
                            + " out of range for top size "
                            + std::to_string(_top_size));
    }
    if (value.degree() != _bottom_size) {
      throw InvalidArgument("dependency value " + value.to_string()
                            + " does not have bottom degree "
                            + std::to_string(_bottom_size));
    }
    if (value.is_identity()) {
      _deps.erase(y);
    } else {
      _deps.insert_or_assign(y, std::move(value));
    }
  }

  Transformation DependencyFunction::operator()(State y) const {
    auto it = _deps.find(y);
    if (it == _deps.end()) {
      return Transformation::identity(_bottom_size);
    }
    return it->second;
  }

  CascadeTransformation::CascadeTransformation(Transformation     top,
                                               DependencyFunction dep)
      : _top(std::move(top)), _dep(std::move(dep)) {
    if (_top.degree() != _dep.top_size()) {
      throw InvalidArgument("top transformation of degree "
                            + std::to_string(_top.degree())
                            + " with a dependency function over "
                            + std::to_string(_dep.top_size()) + " states");
    }
  }

  CascadeTransformation CascadeTransformation::identity(std::size_t top_size,
                                                        std::size_t bottom_size) {
    return CascadeTransformation(Transformation::identity(top_size),
                                 DependencyFunction(top_size, bottom_size));
  }

  CascadeState cascade_act(CascadeState const& s, CascadeTransformation const& c) {
    if (s.top < 1 || s.top > c.top_size() || s.bottom < 1
        || s.bottom > c.bottom_size()) {
      throw InvalidArgument("cascade state (" + std::to_string(s.top) + ","
                            + std::to_string(s.bottom)
                            + ") out of range for sizes ("
                            + std::to_string(c.top_size()) + ","
                            + std::to_string(c.bottom_size()) + ")");
    }
    auto const& deps = c.dep().entries();
    auto        it   = deps.find(s.top);
    State       z    = it == deps.end() ? s.bottom : it->second[s.bottom];
    return {c.top()[s.top], z};
  }

  CascadeTransformation cascade_compose(CascadeTransformation const& c1,
                                        CascadeTransformation const& c2) {
    if (c1.top_size() != c2.top_size() || c1.bottom_size() != c2.bottom_size()) {
      throw InvalidArgument("cannot compose cascades of sizes ("
                            + std::to_string(c1.top_size()) + ","
                            + std::to_string(c1.bottom_size()) + ") and ("
                            + std::to_string(c2.top_size()) + ","
                            + std::to_string(c2.bottom_size()) + ")");
    }
    DependencyFunction dep(c1.top_size(), c1.bottom_size());
    for (State y = 1; y <= c1.top_size(); ++y) {
      dep.set(y, c1.dep()(y) * c2.dep()(c1.top()[y]));
    }
    return CascadeTransformation(c1.top() * c2.top(), std::move(dep));
  }

  Transformation flatten(CascadeTransformation const& c) {
    auto const         k = c.bottom_size();
    std::vector<State> images(c.top_size() * k);
    for (State y = 1; y <= c.top_size(); ++y) {
      Transformation d = c.dep()(y);
      for (State z = 1; z <= k; ++z) {
        images[flat_index({y, z}, k) - 1] = flat_index({c.top()[y], d[z]}, k);
      }
    }
    return Transformation(std::move(images));
  }

  CascadeTransformation unflatten(Transformation const& t,
                                  std::size_t           top_size,
                                  std::size_t           bottom_size) {
    if (bottom_size == 0 || t.degree() != top_size * bottom_size) {
      throw InvalidArgument("transformation of degree "
                            + std::to_string(t.degree())
                            + " cannot be a cascade over ("
                            + std::to_string(top_size) + ","
                            + std::to_string(bottom_size) + ")");
    }
    std::vector<State> top(top_size);
    DependencyFunction dep(top_size, bottom_size);
    for (State y = 1; y <= top_size; ++y) {
      std::vector<State> bottom(bottom_size);
      for (State z = 1; z <= bottom_size; ++z) {
        auto img = unflat_index(t[flat_index({y, z}, bottom_size)], bottom_size);
        if (z == 1) {
          top[y - 1] = img.top;
        } else if (img.top != top[y - 1]) {
          throw InvalidArgument("transformation " + t.to_string()
                                + " does not respect the cascade blocks");
        }
        bottom[z - 1] = img.bottom;
      }
      dep.set(y, Transformation(std::move(bottom)));
    }
    return CascadeTransformation(Transformation(std::move(top)), std::move(dep));
  }

  std::string dependency_listing(CascadeTransformation const& c) {
    std::ostringstream out;
    out << "<trans cascade with 2 levels with (" << c.top_size() << ", "
        << c.bottom_size() << ") pts, " << c.dep().count() + 1
        << " dependencies>\n";
    out << "[] -> Transformation(" << c.top().to_trimmed_string() << ")\n";
    for (auto const& [y, d] : c.dep().entries()) {
      out << "[" << y << "] -> Transformation(" << d.to_trimmed_string()
          << ")\n";
    }
    return out.str();
  }

  CascadeProduct::CascadeProduct(std::vector<CascadeTransformation> gens,
                                 std::size_t                        budget,
                                 bool allow_partial)
      : _top_size(gens.empty() ? 0 : gens.front().top_size()),
        _bottom_size(gens.empty() ? 0 : gens.front().bottom_size()),
        _gens(std::move(gens)),
        _flat(flatten_all(_gens)),
        _elements() {
    if (allow_partial) {
      _flat.enumerate_partial(budget);
    } else {
      _flat.enumerate(budget);
    }
    _elements.reserve(_flat.size());
    for (auto const& t : _flat.elements()) {
      _elements.push_back(unflatten(t, _top_size, _bottom_size));
    }
  }

  std::vector<CascadeTransformation>
  cascade_closure(std::vector<CascadeTransformation> const& gens,
                  std::size_t                               budget) {
    flatten_all(gens);  // validation only
    std::vector<CascadeTransformation> result;
    std::set<CascadeTransformation>    seen;
    auto add = [&](CascadeTransformation c) {
      if (seen.contains(c)) {
        return;
      }
      if (result.size() == budget) {
        throw BudgetExceeded("cascade closure", budget);
      }
      seen.insert(c);
      result.push_back(std::move(c));
    };
    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t pos = 0; pos < result.size(); ++pos) {
      for (auto const& g : gens) {
        add(cascade_compose(result[pos], g));
      }
    }
    return result;
  }

}  // namespace sgpcover
