#ifndef SGPCOVER_SEMIGROUP_HPP_
#define SGPCOVER_SEMIGROUP_HPP_

#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "errors.hpp"
#include "transformation.hpp"

namespace sgpcover {

  //! A word over generator indices (0-based positions in a generator list).
  using Word = std::vector<std::size_t>;

  inline constexpr std::size_t DEFAULT_BUDGET = 100000;

  //! Product of the generators named by a nonempty word.
  Transformation evaluate(Word const& word, std::vector<Transformation> const& gens);

  //! A finite transformation semigroup given by generators, optionally with
  //! its enumerated elements.
  //!
  //! Elements are stored as functions, so the action is faithful by
  //! construction. Each element carries the first word found for it by a
  //! breadth-first search; the word has minimal length, but among words of
  //! that length it is simply the first one reached.
  class TransformationSemigroup {
   public:
    //! Throws InvalidArgument for an empty list or mixed degrees.
    explicit TransformationSemigroup(std::vector<Transformation> gens);

    std::size_t degree() const noexcept {
      return _degree;
    }

    std::vector<Transformation> const& generators() const noexcept {
      return _gens;
    }

    bool is_enumerated() const noexcept {
      return _elements.has_value();
    }

    //! Enumerates all elements breadth-first (by word length, then by the
    //! index of the generator appended). Throws BudgetExceeded if more than
    //! budget elements are found.
    void enumerate(std::size_t budget = DEFAULT_BUDGET);

    //! As enumerate(), but on overflow keeps the first budget elements and
    //! returns false instead of throwing. A truncated enumeration is not
    //! closed under multiplication; see is_complete().
    bool enumerate_partial(std::size_t budget);

    bool is_complete() const noexcept {
      return _elements.has_value() && _elements->complete;
    }

    //! The following require is_enumerated().
    std::size_t size() const;
    std::vector<Transformation> const& elements() const;
    Word const& word(std::size_t index) const;
    std::optional<std::size_t> position(Transformation const& t) const;
    bool contains(Transformation const& t) const {
      return position(t).has_value();
    }

   private:
    struct Enumeration {
      std::vector<Transformation> elements;
      std::vector<Word>           words;
      std::unordered_map<Transformation, std::size_t, TransformationHash> index;
      bool complete = true;
    };

    void run(std::size_t budget, bool allow_partial);

    Enumeration const& enumeration() const;

    std::size_t                 _degree;
    std::vector<Transformation> _gens;
    std::optional<Enumeration>  _elements;
  };

  //! The enumerated semigroup generated by gens.
  TransformationSemigroup closure(std::vector<Transformation> gens,
                                  std::size_t budget = DEFAULT_BUDGET);

  //! true iff every element s satisfies s^k = s^(k+1) for some k, i.e. the
  //! semigroup has no non-trivial subgroup. Enumerates if necessary.
  bool is_aperiodic(TransformationSemigroup const& sgp);

  //! true iff the cyclic subsemigroup generated by s has period 1.
  bool is_aperiodic_element(Transformation const& s);

}  // namespace sgpcover

#endif  // SGPCOVER_SEMIGROUP_HPP_
