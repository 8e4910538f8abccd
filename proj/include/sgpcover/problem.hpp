#ifndef SGPCOVER_PROBLEM_HPP_
#define SGPCOVER_PROBLEM_HPP_

#include <cstddef>      // for size_t
#include <filesystem>   // for path
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "builders.hpp"
#include "errors.hpp"
#include "transformation.hpp"

namespace sgpcover {

  //! A problem file that could not be read or does not follow the grammar.
  class ParseError : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
  };

  //! A generator set with an optional method and budget, as read from a file.
  struct Problem {
    std::size_t                 degree = 0;
    std::vector<Transformation> generators;
    std::optional<Method>       method;
    std::optional<std::size_t>  budget;
  };

  //! Text starting with '{' is read as a JSON problem document; anything
  //! else as plain text with one image list per line, either "[2,3,1]" or
  //! "2 3 1", where '#' starts a comment. Throws ParseError.
  Problem parse_problem(std::string_view text);

  Problem load_problem(std::filesystem::path const& file);

  //! "nn1", "congruence", "local-monoid" or "constant". seed_classes is used
  //! by congruence only and idempotent by local-monoid only. Throws
  //! ParseError for an unknown kind or a missing idempotent.
  Method make_method(std::string const&                     kind,
                     std::vector<std::vector<State>> const& seed_classes,
                     std::optional<Transformation> const&   idempotent);

  //! "[[1,2],[3,4]]"
  std::vector<std::vector<State>> parse_seed_classes(std::string_view text);

}  // namespace sgpcover

#endif  // SGPCOVER_PROBLEM_HPP_
