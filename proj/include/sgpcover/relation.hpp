#ifndef SGPCOVER_RELATION_HPP_
#define SGPCOVER_RELATION_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "errors.hpp"
#include "transformation.hpp"

namespace sgpcover {

  //! A set-valued map theta from {1..n} to subsets of {1..m}.
  //!
  //! Image sets are kept sorted and duplicate-free. Empty image sets are
  //! allowed, as in inverses; relations used as morphism inputs must be fully
  //! defined, see require_fully_defined().
  class StateRelation {
   public:
    StateRelation() = default;

    //! Throws InvalidArgument if a target lies outside {1..target_degree}.
    StateRelation(std::size_t target_degree,
                  std::vector<std::vector<State>> images);

    static StateRelation identity(std::size_t degree);

    std::size_t source_degree() const noexcept {
      return _images.size();
    }
    std::size_t target_degree() const noexcept {
      return _target_degree;
    }

    //! theta(x); throws InvalidArgument if x is out of range.
    std::vector<State> const& operator()(State x) const;

    std::vector<std::vector<State>> const& images() const noexcept {
      return _images;
    }

    bool is_fully_defined() const;
    void require_fully_defined() const;

    //! Sorted union of all image sets.
    std::vector<State> image() const;
    //! Points with nonempty image sets.
    std::vector<State> domain() const;

    friend bool operator==(StateRelation const&, StateRelation const&)
        = default;

   private:
    std::size_t                     _target_degree = 0;
    std::vector<std::vector<State>> _images;
  };

  //! y in theta(x) iff x in inverse(theta)(y). Points outside the image of
  //! theta get empty sets.
  StateRelation inverse(StateRelation const& theta);

  //! phi restricted to generators: one nonempty sorted set of target
  //! transformations per source generator.
  class GenRelation {
   public:
    GenRelation() = default;

    //! Throws InvalidArgument for an empty lift set or a lift of the wrong
    //! degree.
    GenRelation(std::size_t target_degree,
                std::vector<std::vector<Transformation>> lifts);

    std::size_t target_degree() const noexcept {
      return _target_degree;
    }
    std::size_t size() const noexcept {
      return _lifts.size();
    }
    std::vector<Transformation> const& operator[](std::size_t gen) const {
      return _lifts.at(gen);
    }
    std::vector<std::vector<Transformation>> const& lifts() const noexcept {
      return _lifts;
    }

    //! Sorted union of all lift sets: the target generating set.
    std::vector<Transformation> image() const;

    friend bool operator==(GenRelation const&, GenRelation const&) = default;

   private:
    std::size_t                              _target_degree = 0;
    std::vector<std::vector<Transformation>> _lifts;
  };

  //! A witness that theta(x) . phi(a) is not contained in theta(x . a):
  //! y in theta(x), t in phi(a), but y . t not in theta(x . a).
  struct Counterexample {
    State          state;
    std::size_t    generator;  // 0-based index into the generator list
    State          top_state;
    Transformation lift;

    std::string to_string() const;
  };

  //! Input that does not form a relational morphism.
  class MorphismViolation : public Error {
   public:
    explicit MorphismViolation(Counterexample ce)
        : Error("not a relational morphism: " + ce.to_string()),
          _ce(std::move(ce)) {}
    MorphismViolation(std::string const& what, Counterexample ce)
        : Error(what + ": " + ce.to_string()), _ce(std::move(ce)) {}

    Counterexample const& counterexample() const noexcept {
      return _ce;
    }

   private:
    Counterexample _ce;
  };

  //! Exhaustive check of the action condition over states x generators x
  //! lifts. Returns the first counterexample in the order states ascending,
  //! generators in input order, y ascending, lifts ascending; nullopt on
  //! success. Throws InvalidArgument on inconsistent degrees or sizes.
  std::optional<Counterexample>
  check_morphism(StateRelation const&               theta,
                 GenRelation const&                 phi,
                 std::vector<Transformation> const& gens);

  //! The images of theta cover {1..target_states} and every lift has that
  //! degree. Lifts generate the target by definition, so this is all there is
  //! to check at generator level.
  bool is_surjective(StateRelation const& theta,
                     GenRelation const&   phi,
                     std::size_t          target_states);

  //! Image sets of distinct points are disjoint.
  bool is_injective(StateRelation const& theta);

  //! Lift sets of functionally distinct generators are disjoint.
  bool is_injective_on_gens(GenRelation const&                 phi,
                            std::vector<Transformation> const& gens);

  //! Every image set is a singleton and distinct points have distinct images.
  bool is_functionally_bijective(StateRelation const& theta);

}  // namespace sgpcover

#endif  // SGPCOVER_RELATION_HPP_
