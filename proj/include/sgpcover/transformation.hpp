#ifndef SGPCOVER_TRANSFORMATION_HPP_
#define SGPCOVER_TRANSFORMATION_HPP_

#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <initializer_list>  // for initializer_list
#include <optional>          // for optional
#include <string>            // for string
#include <string_view>       // for string_view
#include <utility>           // for move
#include <vector>            // for vector

#include "errors.hpp"

namespace sgpcover {

  //! A state of a transformation semigroup. States are 1-based everywhere in
  //! the public interface; 0 never denotes a state.
  using State = std::uint32_t;

  //! A total function on {1, ..., n}, stored as its image list.
  //!
  //! Composition is written as right action: (a * b)(x) = b(a(x)).
  class Transformation {
   public:
    Transformation() = default;

    //! Throws InvalidArgument if an image lies outside {1, ..., images.size()}.
    explicit Transformation(std::vector<State> images);
    Transformation(std::initializer_list<State> images)
        : Transformation(std::vector<State>(images)) {}

    static Transformation identity(std::size_t degree);
    static Transformation constant(std::size_t degree, State value);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    //! Image of x, with range checking.
    State operator()(State x) const;

    //! Image of x, unchecked.
    State operator[](State x) const noexcept {
      return _images[x - 1];
    }

    std::vector<State> const& images() const noexcept {
      return _images;
    }

    bool is_identity() const noexcept;
    bool is_permutation() const;
    bool is_idempotent() const;
    //! The image as a sorted set.
    std::vector<State> image_set() const;
    std::size_t rank() const {
      return image_set().size();
    }

    //! Bracketed 1-based image list, e.g. "[2,3,1]".
    std::string to_string() const;
    //! The image list with trailing fixed points removed, but long enough to
    //! contain every image shown: "[3,2,3]" for [3,2,3,4,5].
    std::string to_trimmed_string() const;

    friend bool operator==(Transformation const&, Transformation const&)
        = default;
    friend std::strong_ordering operator<=>(Transformation const&,
                                            Transformation const&)
        = default;

   private:
    struct Unchecked {};
    Transformation(std::vector<State> images, Unchecked)
        : _images(std::move(images)) {}

    friend Transformation compose(Transformation const&, Transformation const&);

    std::vector<State> _images;
  };

  //! (a * b)(x) = b(a(x)). Throws InvalidArgument on degree mismatch.
  Transformation compose(Transformation const& a, Transformation const& b);

  inline Transformation operator*(Transformation const& a,
                                  Transformation const& b) {
    return compose(a, b);
  }

  //! x . s, with range checking.
  inline State act(State x, Transformation const& s) {
    return s(x);
  }

  //! s^k for k >= 1.
  Transformation power(Transformation const& s, std::size_t k);

  //! Parses "[2,3,1]" (whitespace tolerated). Throws InvalidArgument.
  Transformation parse_transformation(std::string_view text);

  struct TransformationHash {
    std::size_t operator()(Transformation const& t) const noexcept;
  };

  //! A partial map from {1, ..., degree} to {1, ..., codomain}.
  class PartialTransformation {
   public:
    PartialTransformation() = default;
    PartialTransformation(std::size_t degree, std::size_t codomain)
        : _codomain(codomain), _images(degree, 0) {}

    std::size_t degree() const noexcept {
      return _images.size();
    }
    std::size_t codomain() const noexcept {
      return _codomain;
    }

    std::optional<State> operator()(State x) const;

    //! Defines x -> value. Throws InvalidArgument on out-of-range arguments.
    void set(State x, State value);

    bool is_defined(State x) const noexcept {
      return x >= 1 && x <= _images.size() && _images[x - 1] != 0;
    }

    //! Sorted list of points where the map is defined.
    std::vector<State> domain() const;
    //! Sorted list of image points.
    std::vector<State> image_set() const;

    bool is_injective() const;

    //! Inverse of an injective partial map. Throws InvalidArgument otherwise.
    PartialTransformation inverse() const;

    //! Fills undefined points with themselves. Requires degree == codomain.
    Transformation complete_with_identity() const;

    //! Throws InvalidArgument unless the map is total and degree == codomain.
    Transformation to_total() const;

    std::string to_string() const;

    friend bool operator==(PartialTransformation const&,
                           PartialTransformation const&)
        = default;

   private:
    std::size_t        _codomain = 0;
    std::vector<State> _images;  // 0 marks an undefined point
  };

  //! (a * b)(x) = b(a(x)), defined where a(x) is defined and in the domain of
  //! b.
  PartialTransformation compose(PartialTransformation const& a,
                                PartialTransformation const& b);

}  // namespace sgpcover

#endif  // SGPCOVER_TRANSFORMATION_HPP_
