#ifndef SGPCOVER_BUILDERS_HPP_
#define SGPCOVER_BUILDERS_HPP_

#include <cstddef>  // for size_t
#include <optional>  // for optional
#include <string>   // for string
#include <utility>  // for pair
#include <variant>  // for variant
#include <vector>   // for vector

#include "relation.hpp"
#include "transformation.hpp"

namespace sgpcover {

  //! Disjoint-set forest over {1..n} with path halving and union by size.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n);

    State find(State x);
    //! Returns false if x and y were already joined.
    bool unite(State x, State y);

    std::size_t size() const noexcept {
      return _parent.size() - 1;
    }

   private:
    std::vector<State>       _parent;
    std::vector<std::size_t> _weight;
  };

  //! An ordered list of disjoint, nonempty state classes covering {1..n}.
  //! Classes are sorted internally and ordered by their minimum element; the
  //! class index is the 1-based position.
  class Partition {
   public:
    Partition() = default;
    //! Throws InvalidArgument unless classes are disjoint, nonempty and cover
    //! {1..degree}. Classes are normalized into canonical order.
    Partition(std::size_t degree, std::vector<std::vector<State>> classes);

    std::size_t degree() const noexcept {
      return _class_of.size();
    }
    std::size_t size() const noexcept {
      return _classes.size();
    }
    std::vector<std::vector<State>> const& classes() const noexcept {
      return _classes;
    }
    //! 1-based index of the class containing x.
    State class_of(State x) const;

    //! x ~ x' implies x . a ~ x' . a for every generator a.
    bool is_right_congruence(std::vector<Transformation> const& gens) const;

    std::string to_string() const;

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    std::vector<std::vector<State>> _classes;
    std::vector<State>              _class_of;
  };

  //! The finest right congruence for gens in which every seed class lies in
  //! one class. States not mentioned by the seed start as singletons. Throws
  //! InvalidArgument for overlapping or out-of-range seed classes.
  Partition congruence_closure(std::vector<Transformation> const&     gens,
                               std::vector<std::vector<State>> const& seed,
                               std::size_t                            degree);

  //! As above, with the degree taken from the generators.
  Partition congruence_closure(std::vector<Transformation> const&     gens,
                               std::vector<std::vector<State>> const& seed);

  using Morphism = std::pair<StateRelation, GenRelation>;

  //! theta(x) = {class of x}, phi(a) = {the induced map on classes}. Throws
  //! InvalidArgument if the partition is not a right congruence for gens.
  Morphism theta_phi_congruence(Partition const&                   partition,
                                std::vector<Transformation> const& gens);

  //! theta(x) = X \ {x}; phi(a) = {a} for a permutation, otherwise the
  //! constant maps onto points missing from the image of a. Throws
  //! InvalidArgument if n < 2.
  Morphism theta_phi_nn1(std::vector<Transformation> const& gens, std::size_t n);

  //! The local monoid (Xe, eSe): theta(x) = {position of x . e in the sorted
  //! image of e}, phi(a) = {e a e restricted to Xe}. Throws InvalidArgument
  //! unless e is idempotent, and MorphismViolation when the result fails the
  //! action condition.
  Morphism theta_phi_local_monoid(std::vector<Transformation> const& gens,
                                  Transformation const&              e);

  //! Everything collapses onto the trivial monoid on one state.
  Morphism theta_phi_constant(std::vector<Transformation> const& gens,
                              std::size_t                        n);

  //! Builder selection. New theta constructions are added as alternatives
  //! here and in build_morphism().
  struct Nn1Method {};
  struct CongruenceMethod {
    std::vector<std::vector<State>> seed;
  };
  struct LocalMonoidMethod {
    Transformation idempotent;
  };
  struct ConstantMethod {};
  //! theta and phi supplied directly.
  struct ExplicitMethod {
    StateRelation theta;
    GenRelation   phi;
  };

  using Method = std::variant<Nn1Method,
                              CongruenceMethod,
                              LocalMonoidMethod,
                              ConstantMethod,
                              ExplicitMethod>;

  std::string method_name(Method const& method);

  struct BuiltMorphism {
    StateRelation theta;
    GenRelation   phi;
    //! Set for the congruence method.
    std::optional<Partition> partition;
  };

  BuiltMorphism build_morphism(Method const&                      method,
                               std::vector<Transformation> const& gens);

}  // namespace sgpcover

#endif  // SGPCOVER_BUILDERS_HPP_
