#include "sgpcover/semigroup.hpp"

#include <algorithm>  // for all_of

#include "sgpcover/errors.hpp"

namespace sgpcover {

  Transformation evaluate(Word const&                        word,
                          std::vector<Transformation> const& gens) {
    if (word.empty()) {
      throw InvalidArgument("cannot evaluate the empty word");
    }
    for (std::size_t letter : word) {
      if (letter >= gens.size()) {
        throw InvalidArgument("word letter " + std::to_string(letter)
                              + " out of range for "
                              + std::to_string(gens.size()) + " generators");
      }
    }
    Transformation result = gens[word.front()];
    for (std::size_t i = 1; i < word.size(); ++i) {
      result = result * gens[word[i]];
    }
    return result;
  }

  TransformationSemigroup::TransformationSemigroup(
      std::vector<Transformation> gens)
      : _degree(0), _gens(std::move(gens)), _elements() {
    if (_gens.empty()) {
      throw InvalidArgument("a semigroup needs at least one generator");
    }
    _degree = _gens.front().degree();
    if (_degree == 0) {
      throw InvalidArgument("generators must have positive degree");
    }
    for (auto const& g : _gens) {
      if (g.degree() != _degree) {
        throw InvalidArgument("generators of mixed degree "
                              + std::to_string(_degree) + " and "
                              + std::to_string(g.degree()));
      }
    }
  }

  void TransformationSemigroup::enumerate(std::size_t budget) {
    run(budget, false);
  }

  bool TransformationSemigroup::enumerate_partial(std::size_t budget) {
    run(budget, true);
    return _elements->complete;
  }

  namespace {
    struct Overflow {};
  }  // namespace

  void TransformationSemigroup::run(std::size_t budget, bool allow_partial) {
    if (_elements && _elements->complete) {
      return;
    }
    Enumeration e;
    auto        add = [&](Transformation t, Word w) {
      if (e.index.contains(t)) {
        return;
      }
      if (e.elements.size() == budget) {
        if (allow_partial) {
          throw Overflow{};
        }
        throw BudgetExceeded("semigroup enumeration of degree "
                                 + std::to_string(_degree),
                             budget);
      }
      e.index.emplace(t, e.elements.size());
      e.elements.push_back(std::move(t));
      e.words.push_back(std::move(w));
    };
    try {
      for (std::size_t i = 0; i < _gens.size(); ++i) {
        add(_gens[i], Word{i});
      }
      // Elements are appended in order of discovery, so scanning the list
      // front to back visits words in nondecreasing length.
      for (std::size_t pos = 0; pos < e.elements.size(); ++pos) {
        for (std::size_t i = 0; i < _gens.size(); ++i) {
          Transformation product = e.elements[pos] * _gens[i];
          if (!e.index.contains(product)) {
            Word w = e.words[pos];
            w.push_back(i);
            add(std::move(product), std::move(w));
          }
        }
      }
    } catch (Overflow const&) {
      e.complete = false;
    }
    _elements = std::move(e);
  }

  TransformationSemigroup::Enumeration const&
  TransformationSemigroup::enumeration() const {
    if (!_elements) {
      throw InvalidArgument("semigroup has not been enumerated");
    }
    return *_elements;
  }

  std::size_t TransformationSemigroup::size() const {
    return enumeration().elements.size();
  }

  std::vector<Transformation> const& TransformationSemigroup::elements() const {
    return enumeration().elements;
  }

  Word const& TransformationSemigroup::word(std::size_t index) const {
    return enumeration().words.at(index);
  }

  std::optional<std::size_t>
  TransformationSemigroup::position(Transformation const& t) const {
    auto const& idx = enumeration().index;
    auto        it  = idx.find(t);
    if (it == idx.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  TransformationSemigroup closure(std::vector<Transformation> gens,
                                  std::size_t                 budget) {
    TransformationSemigroup result(std::move(gens));
    result.enumerate(budget);
    return result;
  }

  bool is_aperiodic_element(Transformation const& s) {
    // The index of s is at most its degree, so s^n lies on the cycle of
    // powers; the period is 1 iff multiplying by s fixes it.
    Transformation high = power(s, std::max<std::size_t>(s.degree(), 1));
    return high * s == high;
  }

  bool is_aperiodic(TransformationSemigroup const& sgp) {
    if (!sgp.is_enumerated()) {
      TransformationSemigroup copy(sgp.generators());
      copy.enumerate();
      return is_aperiodic(copy);
    }
    auto const& elts = sgp.elements();
    return std::all_of(elts.begin(), elts.end(), is_aperiodic_element);
  }

}  // namespace sgpcover
