#ifndef SGPCOVER_CASCADE_HPP_
#define SGPCOVER_CASCADE_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <map>      // for map
#include <string>   // for string
#include <vector>   // for vector

#include "semigroup.hpp"
#include "transformation.hpp"

namespace sgpcover {

  //! A coordinate pair (y, z): top state y, bottom state z.
  struct CascadeState {
    State top;
    State bottom;

    friend bool operator==(CascadeState const&, CascadeState const&) = default;
    friend std::strong_ordering operator<=>(CascadeState const&,
                                            CascadeState const&)
        = default;
  };

  //! Sparse map from top states to bottom transformations. Absent entries are
  //! the identity, and identities are never stored.
  class DependencyFunction {
   public:
    DependencyFunction() = default;
    DependencyFunction(std::size_t top_size, std::size_t bottom_size)
        : _top_size(top_size), _bottom_size(bottom_size) {}

    std::size_t top_size() const noexcept {
      return _top_size;
    }
    std::size_t bottom_size() const noexcept {
      return _bottom_size;
    }

    //! Sets the value at y; storing the identity erases the entry.
    void set(State y, Transformation value);

    //! The value at y (identity if absent).
    Transformation operator()(State y) const;

    //! Number of stored (non-identity) entries.
    std::size_t count() const noexcept {
      return _deps.size();
    }
    std::map<State, Transformation> const& entries() const noexcept {
      return _deps;
    }

    friend bool operator==(DependencyFunction const&,
                           DependencyFunction const&)
        = default;
    friend std::strong_ordering operator<=>(DependencyFunction const&,
                                            DependencyFunction const&)
        = default;

   private:
    std::size_t                     _top_size    = 0;
    std::size_t                     _bottom_size = 0;
    std::map<State, Transformation> _deps;
  };

  //! A two-level cascade transformation (t, d) acting on Y x Z by
  //! (y, z) . (t, d) = (y . t, z . d(y)).
  class CascadeTransformation {
   public:
    CascadeTransformation() = default;
    //! Throws InvalidArgument if the sizes of top and dep disagree.
    CascadeTransformation(Transformation top, DependencyFunction dep);

    static CascadeTransformation identity(std::size_t top_size,
                                          std::size_t bottom_size);

    std::size_t top_size() const noexcept {
      return _top.degree();
    }
    std::size_t bottom_size() const noexcept {
      return _dep.bottom_size();
    }
    Transformation const& top() const noexcept {
      return _top;
    }
    DependencyFunction const& dep() const noexcept {
      return _dep;
    }

    friend bool operator==(CascadeTransformation const&,
                           CascadeTransformation const&)
        = default;
    friend std::strong_ordering operator<=>(CascadeTransformation const&,
                                            CascadeTransformation const&)
        = default;

   private:
    Transformation     _top;
    DependencyFunction _dep;
  };

  //! Throws InvalidArgument if the state is out of range.
  CascadeState cascade_act(CascadeState const& s, CascadeTransformation const& c);

  //! (t, d)(t', d') = (t t', y -> d(y) d'(y . t)). Throws InvalidArgument on
  //! size mismatch.
  CascadeTransformation cascade_compose(CascadeTransformation const& c1,
                                        CascadeTransformation const& c2);

  //! Position of (y, z) in the flattened state set: (y - 1) * |Z| + z.
  inline State flat_index(CascadeState s, std::size_t bottom_size) {
    return static_cast<State>((s.top - 1) * bottom_size + s.bottom);
  }
  inline CascadeState unflat_index(State i, std::size_t bottom_size) {
    auto const k = static_cast<State>(bottom_size);
    return {(i - 1) / k + 1, (i - 1) % k + 1};
  }

  //! The cascade as a plain transformation of degree |Y| |Z|.
  Transformation flatten(CascadeTransformation const& c);

  //! Inverse of flatten. Throws InvalidArgument if t does not respect the
  //! block structure (the top coordinate of an image must depend on the top
  //! coordinate of the argument only).
  CascadeTransformation unflatten(Transformation const& t,
                                  std::size_t           top_size,
                                  std::size_t           bottom_size);

  //! GAP-style listing of a cascade transformation: a summary line, the
  //! top level as "[] -> Transformation([...])", then one line
  //! "[y] -> Transformation([...])" per stored dependency. Trailing fixed
  //! points are trimmed from every image list.
  std::string dependency_listing(CascadeTransformation const& c);

  //! A subsemigroup of the wreath product given by cascade generators, with
  //! its elements enumerated.
  class CascadeProduct {
   public:
    //! Enumerates the closure of gens through flattening. Throws
    //! InvalidArgument for an empty or inconsistent generator list and
    //! BudgetExceeded past budget elements, unless allow_partial is set, in
    //! which case the enumeration is truncated and is_complete() is false.
    CascadeProduct(std::vector<CascadeTransformation> gens,
                   std::size_t                        budget = DEFAULT_BUDGET,
                   bool                               allow_partial = false);

    bool is_complete() const noexcept {
      return _flat.is_complete();
    }

    std::size_t top_size() const noexcept {
      return _top_size;
    }
    std::size_t bottom_size() const noexcept {
      return _bottom_size;
    }
    std::vector<CascadeTransformation> const& generators() const noexcept {
      return _gens;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::vector<CascadeTransformation> const& elements() const noexcept {
      return _elements;
    }
    //! Word over generator indices witnessing elements()[i].
    Word const& word(std::size_t i) const {
      return _flat.word(i);
    }
    TransformationSemigroup const& flattened() const noexcept {
      return _flat;
    }

   private:
    std::size_t                        _top_size;
    std::size_t                        _bottom_size;
    std::vector<CascadeTransformation> _gens;
    TransformationSemigroup            _flat;
    std::vector<CascadeTransformation> _elements;
  };

  //! Closure of cascade generators computed with cascade_compose directly,
  //! in the same breadth-first order as TransformationSemigroup.
  std::vector<CascadeTransformation>
  cascade_closure(std::vector<CascadeTransformation> const& gens,
                  std::size_t                               budget = DEFAULT_BUDGET);

}  // namespace sgpcover

#endif  // SGPCOVER_CASCADE_HPP_
