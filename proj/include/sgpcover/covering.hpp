#ifndef SGPCOVER_COVERING_HPP_
#define SGPCOVER_COVERING_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "cascade.hpp"
#include "errors.hpp"
#include "labelling.hpp"
#include "relation.hpp"
#include "semigroup.hpp"
#include "transformation.hpp"

namespace sgpcover {

  //! Raised by the interpretation maps when a cascade state or cascade
  //! transformation is not the lift of anything in the source.
  class NotALift : public Error {
   public:
    using Error::Error;
  };

  //! psi(x) = {(y, w_y(x)) : y in theta(x)}, sorted.
  std::vector<CascadeState> psi(State                x,
                                StateRelation const& theta,
                                Labelling const&     labelling);

  //! mu(a) = {(t, w_y^-1 a w_{y.t}) : t in lifts}, one cascade per lift, in
  //! the order of lifts. Bottom states that w_y^-1 leaves undefined are fixed.
  //! Throws MorphismViolation (naming generator index gen) when some
  //! x in theta^-1(y) has x . a outside theta^-1(y . t).
  std::vector<CascadeTransformation>
  mu(Transformation const&              a,
     std::vector<Transformation> const& lifts,
     StateRelation const&               theta,
     Labelling const&                   labelling,
     std::size_t                        gen = 0);

  //! psi^-1(y, z) = w_y^-1(z). Throws NotALift if z is not a label in
  //! context y.
  State psi_inverse(CascadeState const& pair, Labelling const& labelling);

  //! Top states chosen greedily by decreasing |theta^-1(y)| (ties: smallest
  //! y first) until their preimages cover the source states. Returned in
  //! ascending order.
  std::vector<State> greedy_cover(StateRelation const& theta,
                                  Labelling const&     labelling);

  //! Patches the partial maps w_y dep(y) w_{y.t}^-1 for y in cover into one
  //! total transformation of the source states. Throws NotALift on a patch
  //! conflict, on a bottom image without a decoding, or if the cover misses
  //! a state.
  Transformation mu_inverse(CascadeTransformation const& c,
                            StateRelation const&         theta,
                            Labelling const&             labelling,
                            std::vector<State> const&    cover);

  //! The emulation E(psi, mu) of (X, S) in (Y, T) wr (Z, U) built from a
  //! relational morphism given on generators.
  class Emulation {
   public:
    //! Lifts every state and generator. Throws InvalidArgument on
    //! inconsistent inputs and MorphismViolation if (theta, phi) fails the
    //! action condition.
    Emulation(std::vector<Transformation> gens,
              StateRelation               theta,
              GenRelation                 phi,
              Labelling                   labelling);

    //! Assembles an emulation from precomputed tables without any checks.
    //! Meant for exercising the verifiers on deliberately broken data.
    static Emulation
    from_tables(std::vector<Transformation>                     gens,
                StateRelation                                   theta,
                GenRelation                                     phi,
                Labelling                                       labelling,
                std::vector<std::vector<CascadeState>>          psi_table,
                std::vector<std::vector<CascadeTransformation>> lifts);

    std::size_t source_degree() const noexcept {
      return _theta.source_degree();
    }
    std::size_t top_size() const noexcept {
      return _theta.target_degree();
    }
    std::size_t bottom_size() const noexcept {
      return _labelling.bottom_size();
    }

    std::vector<Transformation> const& generators() const noexcept {
      return _gens;
    }
    StateRelation const& theta() const noexcept {
      return _theta;
    }
    StateRelation const& theta_inverse() const noexcept {
      return _theta_inverse;
    }
    GenRelation const& phi() const noexcept {
      return _phi;
    }
    Labelling const& labelling() const noexcept {
      return _labelling;
    }

    //! psi(x)
    std::vector<CascadeState> const& lift(State x) const;
    std::vector<std::vector<CascadeState>> const& psi_table() const noexcept {
      return _psi;
    }

    //! mu(a) for the generator with 0-based index gen.
    std::vector<CascadeTransformation> const& lifts(std::size_t gen) const {
      return _mu.at(gen);
    }
    std::vector<std::vector<CascadeTransformation>> const&
    mu_table() const noexcept {
      return _mu;
    }

    //! All lifted generators in generator order: the generators of the
    //! cascade product.
    std::vector<CascadeTransformation> cascade_generators() const;
    //! For each entry of cascade_generators(), the source generator it lifts.
    std::vector<std::size_t> cascade_generator_origins() const;

    //! psi^-1 and mu^-1 with this emulation's labelling and greedy cover.
    State                interpret(CascadeState const& pair) const;
    Transformation       interpret(CascadeTransformation const& c) const;
    std::vector<State> const& cover() const noexcept {
      return _cover;
    }

   private:
    Emulation() = default;

    std::vector<Transformation>                     _gens;
    StateRelation                                   _theta;
    StateRelation                                   _theta_inverse;
    GenRelation                                     _phi;
    Labelling                                       _labelling;
    std::vector<std::vector<CascadeState>>          _psi;
    std::vector<std::vector<CascadeTransformation>> _mu;
    std::vector<State>                              _cover;
  };

  //! Emulation with the squashing labelling.
  Emulation build_emulation(std::vector<Transformation> gens,
                            StateRelation               theta,
                            GenRelation                 phi);

  //! The local component (Z, U_y) at top state y.
  //!
  //! elements holds U_y: the dependency values at y of those cascade-product
  //! elements whose top fixes y, restricted to the labels {1..local_size}
  //! of theta^-1(y) and fixed above it, deduplicated in enumeration order.
  //! Each element has a witness word over the cascade generators.
  struct LocalComponent {
    State                       top_state  = 0;
    std::size_t                 local_size = 0;
    std::vector<Transformation> elements;
    std::vector<Word>           witnesses;
    //! f_y(u) = w_y u w_y^-1 equals, on theta^-1(y), the source element
    //! named by the witness; it maps theta^-1(y) into itself; f_y is
    //! injective and multiplicative.
    bool        embedding_verified = false;
    std::string embedding_failure;

    bool is_trivial() const;
    bool contains(Transformation const& u) const;
  };

  //! U_y computed from an enumerated cascade product generated by
  //! emulation.cascade_generators(). At most pair_cap elements take part in
  //! the pairwise multiplicativity check.
  LocalComponent local_component(State                 y,
                                 Emulation const&      emulation,
                                 CascadeProduct const& product,
                                 std::size_t           pair_cap = 200);

  struct LocalComponents {
    std::vector<LocalComponent> components;  // one per y in image theta
    std::size_t                 product_size = 0;
    bool                        complete     = true;
  };

  //! A budget overrun while enumerating the cascade product. The components
  //! computed from the truncated enumeration are attached.
  class LocalComponentsIncomplete : public BudgetExceeded {
   public:
    LocalComponentsIncomplete(LocalComponents partial, std::size_t budget)
        : BudgetExceeded("cascade product enumeration", budget),
          _partial(std::move(partial)) {}

    LocalComponents const& partial() const noexcept {
      return _partial;
    }

   private:
    LocalComponents _partial;
  };

  //! Enumerates the cascade product and extracts U_y for every y in the
  //! image of theta. Throws LocalComponentsIncomplete past budget.
  LocalComponents local_components(Emulation const& emulation,
                                   std::size_t      budget = DEFAULT_BUDGET);

}  // namespace sgpcover

#endif  // SGPCOVER_COVERING_HPP_
