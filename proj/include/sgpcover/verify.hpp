#ifndef SGPCOVER_VERIFY_HPP_
#define SGPCOVER_VERIFY_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <optional> // for optional
#include <string>   // for string
#include <vector>   // for vector

#include "covering.hpp"
#include "semigroup.hpp"

namespace sgpcover {

  enum class CheckStatus { pass, fail, skipped };

  std::string to_string(CheckStatus status);

  struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    //! Counterexample for a failure, a note for a skip, a summary otherwise.
    std::string detail;
  };

  //! Outcome of a set of brute-force checks on one decomposition.
  struct VerificationReport {
    std::vector<Check> checks;
    std::size_t        source_degree   = 0;
    std::size_t        generator_count = 0;
    std::size_t        top_size        = 0;
    std::size_t        bottom_size     = 0;
    std::string        method;
    //! Some check fell back to sampling past the budget.
    bool partial = false;

    //! No check failed (skipped checks do not count as failures).
    bool all_passed() const;
    Check const* find(std::string const& name) const;
    void merge(VerificationReport const& other);
    std::string to_string() const;
  };

  //! psi-disjoint, emulation-morphism (psi(x) . mu(a) inside psi(x . a) for
  //! every lift choice) and mu-disjoint across functionally distinct
  //! generators. Counterexamples are the first found with states ascending
  //! and generators in input order.
  VerificationReport verify_emulation(Emulation const& emulation);

  //! psi^-1 psi = id on states, mu^-1 mu = id on generators, and every
  //! lifted pair (y, z) lies in psi(psi^-1(y, z)); the same for every lift
  //! in mu(mu^-1(c)).
  VerificationReport verify_identities(Emulation const& emulation);

  //! For a functionally bijective theta: every lifted dependency function is
  //! empty and phi is injective on functionally distinct generators. Skipped
  //! otherwise.
  VerificationReport verify_blocked(Emulation const& emulation);

  struct FlatOracleOptions {
    std::size_t budget = DEFAULT_BUDGET;
    //! Force sampling with this many random words even below the budget.
    std::optional<std::size_t> samples;
    //! Used when the budget is exceeded and samples is unset.
    std::size_t   fallback_samples = 500;
    std::uint64_t seed             = 20240101;
    std::size_t   max_word_length  = 24;
    //! Lift combinations tried per word; all of them if there are no more.
    std::size_t lift_cap = 64;
  };

  //! Re-derives the emulation property from flattened cascades only: for
  //! each source element s (by its generator word) and each matching word
  //! of lifts, the flattened product sends every flat index of psi(x) into
  //! the flat indices of psi(x . s). Exhaustive over the source semigroup
  //! when it fits in the budget, sampled otherwise.
  VerificationReport flat_oracle(Emulation const&         emulation,
                                 FlatOracleOptions const& options = {});

  //! verify_emulation, verify_identities and verify_blocked, plus
  //! flat_oracle when with_flat_oracle is set.
  VerificationReport verify_all(Emulation const&         emulation,
                                bool                     with_flat_oracle,
                                FlatOracleOptions const& options = {});

}  // namespace sgpcover

#endif  // SGPCOVER_VERIFY_HPP_
