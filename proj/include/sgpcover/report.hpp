#ifndef SGPCOVER_REPORT_HPP_
#define SGPCOVER_REPORT_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "json.hpp"

#include "builders.hpp"
#include "covering.hpp"
#include "semigroup.hpp"
#include "verify.hpp"

namespace sgpcover {

  struct PipelineOptions {
    std::size_t   budget      = DEFAULT_BUDGET;
    bool          flat_oracle = false;
    std::uint64_t seed        = FlatOracleOptions{}.seed;
  };

  //! Everything the decompose command reports on.
  struct Decomposition {
    std::vector<Transformation> generators;
    std::string                 method;
    std::size_t                 semigroup_size = 0;
    bool                        aperiodic      = false;
    BuiltMorphism               morphism;
    //! The semigroup generated by all lifts of phi; size unset past budget.
    std::optional<std::size_t>  image_size;
    bool                        image_aperiodic = false;
    Emulation                   emulation;
    LocalComponents             components;
    VerificationReport          verification;
    std::vector<std::string>    warnings;

    bool passed() const {
      return verification.all_passed();
    }
  };

  //! Builds theta and phi with the method, checks them, lifts to the cascade,
  //! computes the local components and runs the verifiers. Throws
  //! InvalidArgument for bad method parameters, MorphismViolation when
  //! (theta, phi) fails the action condition and BudgetExceeded when the
  //! source semigroup or the cascade product is larger than the budget.
  Decomposition decompose(std::vector<Transformation> const& gens,
                          Method const&                      method,
                          PipelineOptions const&             options = {});

  //! The emulation and the full verification suite (flat oracle included)
  //! without the enumerations needed only for reporting.
  VerificationReport verify_problem(std::vector<Transformation> const& gens,
                                    Method const&                      method,
                                    PipelineOptions const& options = {});

  //! At most this many elements of each U_y are listed in a report.
  constexpr std::size_t REPORT_ELEMENT_LIMIT = 32;

  nlohmann::json to_json(Decomposition const& d);
  nlohmann::json to_json(VerificationReport const& r);

  //! Human-readable renderings of the documents produced by to_json.
  std::string render_decomposition(nlohmann::json const& doc);
  std::string render_verification(nlohmann::json const& doc);

}  // namespace sgpcover

#endif  // SGPCOVER_REPORT_HPP_
