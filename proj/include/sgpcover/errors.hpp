#ifndef SGPCOVER_ERRORS_HPP_
#define SGPCOVER_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace sgpcover {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed input: out-of-range states, degree mismatches, bad files.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! An enumeration hit its element budget before completing.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string const& what, std::size_t budget)
        : Error(what + " (budget " + std::to_string(budget) + " exceeded)"),
          _budget(budget) {}

    std::size_t budget() const noexcept {
      return _budget;
    }

   private:
    std::size_t _budget;
  };

}  // namespace sgpcover

#endif  // SGPCOVER_ERRORS_HPP_
