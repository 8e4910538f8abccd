#ifndef SGPCOVER_LABELLING_HPP_
#define SGPCOVER_LABELLING_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "relation.hpp"
#include "transformation.hpp"

namespace sgpcover {

  //! The family of encodings w_y of the preimage sets theta^-1(y) into the
  //! bottom state set Z = {1..bottom_size}, one per top state y, together
  //! with their inverses.
  //!
  //! Each encoding is injective and its image is the initial segment
  //! {1..|theta^-1(y)|}. For top states outside the image of theta both maps
  //! are empty.
  class Labelling {
   public:
    Labelling() = default;

    //! Builds the labelling from explicit encodings, one per top state.
    //! Throws InvalidArgument if an encoding is not injective or its image is
    //! not an initial segment.
    Labelling(std::size_t source_degree,
              std::vector<PartialTransformation> encodings);

    std::size_t source_degree() const noexcept {
      return _source_degree;
    }
    std::size_t top_size() const noexcept {
      return _encode.size();
    }
    //! max_y |theta^-1(y)|
    std::size_t bottom_size() const noexcept {
      return _bottom_size;
    }

    //! |theta^-1(y)|
    std::size_t preimage_size(State y) const;

    //! w_y as a partial map X -> Z.
    PartialTransformation const& encoding(State y) const;
    //! w_y^-1 as a partial map Z -> X.
    PartialTransformation const& decoding(State y) const;

    std::optional<State> encode(State y, State x) const {
      return encoding(y)(x);
    }
    std::optional<State> decode(State y, State z) const {
      return decoding(y)(z);
    }

    friend bool operator==(Labelling const&, Labelling const&) = default;

   private:
    std::size_t                        _source_degree = 0;
    std::size_t                        _bottom_size   = 0;
    std::vector<PartialTransformation> _encode;
    std::vector<PartialTransformation> _decode;
    std::vector<std::size_t>           _sizes;
  };

  //! The squashing labelling: theta^-1(y) = {x_1 < ... < x_k} is sent to
  //! x_i -> i.
  Labelling squash_labelling(StateRelation const& theta);

  //! The labelling for theta(x) = X \ {x} on n states: w_y(x) = x below the
  //! hole y and x - 1 above it. Throws InvalidArgument if n < 2.
  Labelling nn1_labelling(std::size_t n);

}  // namespace sgpcover

#endif  // SGPCOVER_LABELLING_HPP_
