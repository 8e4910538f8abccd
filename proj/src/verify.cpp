#include "sgpcover/verify.hpp"

#include <algorithm>  // for binary_search, sort
#include <random>     // for mt19937_64, uniform_int_distribution
#include <sstream>    // for ostringstream

namespace sgpcover {

  namespace {
    std::string pair_string(CascadeState const& p) {
      return "(" + std::to_string(p.top) + "," + std::to_string(p.bottom) + ")";
    }

    VerificationReport summary_of(Emulation const& e) {
      VerificationReport r;
      r.source_degree   = e.source_degree();
      r.generator_count = e.generators().size();
      r.top_size        = e.top_size();
      r.bottom_size     = e.bottom_size();
      return r;
    }

    void add(VerificationReport& r,
             std::string         name,
             std::string const&  failure,
             std::string         summary = {}) {
      if (failure.empty()) {
        r.checks.push_back({std::move(name), CheckStatus::pass, std::move(summary)});
      } else {
        r.checks.push_back({std::move(name), CheckStatus::fail, failure});
      }
    }
  }  // namespace

  std::string to_string(CheckStatus status) {
    switch (status) {
      case CheckStatus::pass:
        return "PASS";
      case CheckStatus::fail:
        return "FAIL";
      case CheckStatus::skipped:
        return "SKIP";
    }
    return "?";
  }

  bool VerificationReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](Check const& c) {
      return c.status == CheckStatus::fail;
    });
  }

  Check const* VerificationReport::find(std::string const& name) const {
    for (auto const& c : checks) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  void VerificationReport::merge(VerificationReport const& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    partial = partial || other.partial;
  }

  std::string VerificationReport::to_string() const {
    std::ostringstream out;
    for (auto const& c : checks) {
      out << "[" << sgpcover::to_string(c.status) << "] " << c.name;
      if (!c.detail.empty()) {
        out << ": " << c.detail;
      }
      out << "\n";
    }
    return out.str();
  }

  VerificationReport verify_emulation(Emulation const& e) {
    auto        report = summary_of(e);
    auto const  n      = e.source_degree();
    auto const& gens   = e.generators();

    std::string failure;
    for (State x = 1; x <= n && failure.empty(); ++x) {
      if (e.lift(x).empty()) {
        failure = "psi(" + std::to_string(x) + ") is empty";
      }
      for (State x2 = x + 1; x2 <= n && failure.empty(); ++x2) {
        for (auto const& p : e.lift(x)) {
          auto const& other = e.lift(x2);
          if (std::find(other.begin(), other.end(), p) != other.end()) {
            failure = pair_string(p) + " lifts both " + std::to_string(x)
                      + " and " + std::to_string(x2);
            break;
          }
        }
      }
    }
    add(report, "psi-disjoint", failure);

    failure.clear();
    for (State x = 1; x <= n && failure.empty(); ++x) {
      for (std::size_t a = 0; a < gens.size() && failure.empty(); ++a) {
        auto target = e.lift(gens[a][x]);
        std::sort(target.begin(), target.end());
        for (auto const& c : e.lifts(a)) {
          for (auto const& p : e.lift(x)) {
            auto q = cascade_act(p, c);
            if (!std::binary_search(target.begin(), target.end(), q)) {
              failure = "psi(" + std::to_string(x) + ") . mu(generator "
                        + std::to_string(a + 1) + "): " + pair_string(p)
                        + " goes to " + pair_string(q) + ", not in psi("
                        + std::to_string(gens[a][x]) + ")";
              break;
            }
          }
          if (!failure.empty()) {
            break;
          }
        }
      }
    }
    add(report, "emulation-morphism", failure);

    failure.clear();
    for (std::size_t a = 0; a < gens.size() && failure.empty(); ++a) {
      for (std::size_t b = a + 1; b < gens.size() && failure.empty(); ++b) {
        if (gens[a] == gens[b]) {
          continue;
        }
        for (auto const& c : e.lifts(a)) {
          auto const& other = e.lifts(b);
          if (std::find(other.begin(), other.end(), c) != other.end()) {
            failure = "generators " + std::to_string(a + 1) + " and "
                      + std::to_string(b + 1) + " share a lift";
            break;
          }
        }
      }
    }
    add(report, "mu-disjoint", failure);
    return report;
  }

  VerificationReport verify_identities(Emulation const& e) {
    auto        report = summary_of(e);
    auto const  n      = e.source_degree();
    auto const& gens   = e.generators();

    std::string failure;
    for (State x = 1; x <= n && failure.empty(); ++x) {
      for (auto const& p : e.lift(x)) {
        try {
          State back = e.interpret(p);
          if (back != x) {
            failure = "psi^-1" + pair_string(p) + " = " + std::to_string(back)
                      + ", expected " + std::to_string(x);
          }
        } catch (NotALift const& err) {
          failure = err.what();
        }
        if (!failure.empty()) {
          break;
        }
      }
    }
    add(report, "psi-roundtrip", failure);

    failure.clear();
    for (std::size_t a = 0; a < gens.size() && failure.empty(); ++a) {
      for (auto const& c : e.lifts(a)) {
        try {
          auto back = e.interpret(c);
          if (back != gens[a]) {
            failure = "mu^-1 of a lift of generator " + std::to_string(a + 1)
                      + " is " + back.to_string() + ", expected "
                      + gens[a].to_string();
          }
        } catch (NotALift const& err) {
          failure = "generator " + std::to_string(a + 1) + ": " + err.what();
        }
        if (!failure.empty()) {
          break;
        }
      }
    }
    add(report, "mu-roundtrip", failure);

    failure.clear();
    auto const& labelling = e.labelling();
    for (State y = 1; y <= e.top_size() && failure.empty(); ++y) {
      for (State z = 1; z <= labelling.preimage_size(y); ++z) {
        CascadeState p{y, z};
        try {
          auto const& lifted = e.lift(e.interpret(p));
          if (std::find(lifted.begin(), lifted.end(), p) == lifted.end()) {
            failure = pair_string(p) + " is not in psi(psi^-1"
                      + pair_string(p) + ")";
          }
        } catch (NotALift const& err) {
          failure = err.what();
        }
        if (!failure.empty()) {
          break;
        }
      }
    }
    add(report, "psi-section", failure);

    failure.clear();
    for (std::size_t a = 0; a < gens.size() && failure.empty(); ++a) {
      for (auto const& c : e.lifts(a)) {
        try {
          auto const back  = e.interpret(c);
          bool       found = false;
          for (std::size_t b = 0; b < gens.size() && !found; ++b) {
            if (gens[b] == back) {
              auto const& lifts = e.lifts(b);
              found = std::find(lifts.begin(), lifts.end(), c) != lifts.end();
            }
          }
          if (!found) {
            failure = "a lift of generator " + std::to_string(a + 1)
                      + " is not in mu(mu^-1(c))";
          }
        } catch (NotALift const& err) {
          failure = err.what();
        }
        if (!failure.empty()) {
          break;
        }
      }
    }
    add(report, "mu-section", failure);
    return report;
  }

  VerificationReport verify_blocked(Emulation const& e) {
    auto report = summary_of(e);
    if (!is_functionally_bijective(e.theta())) {
      report.checks.push_back({"blocked-transfer",
                               CheckStatus::skipped,
                               "theta is not bijective as a function"});
      return report;
    }
    std::string failure;
    for (std::size_t a = 0; a < e.generators().size() && failure.empty(); ++a) {
      for (auto const& c : e.lifts(a)) {
        if (c.dep().count() != 0) {
          failure = "a lift of generator " + std::to_string(a + 1) + " has "
                    + std::to_string(c.dep().count())
                    + " non-identity dependencies";
          break;
        }
      }
    }
    if (failure.empty() && !is_injective_on_gens(e.phi(), e.generators())) {
      failure = "phi is not injective on functionally distinct generators";
    }
    add(report, "blocked-transfer", failure);
    return report;
  }

  VerificationReport flat_oracle(Emulation const&         e,
                                 FlatOracleOptions const& options) {
    auto        report = summary_of(e);
    auto const& gens   = e.generators();
    auto const  n      = e.source_degree();
    auto const  k      = e.bottom_size();

    std::vector<std::vector<Transformation>> flat_lifts;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      std::vector<Transformation> row;
      for (auto const& c : e.lifts(a)) {
        row.push_back(flatten(c));
      }
      flat_lifts.push_back(std::move(row));
    }
    std::vector<std::vector<State>> flat_psi(n + 1);
    for (State x = 1; x <= n; ++x) {
      for (auto const& p : e.lift(x)) {
        flat_psi[x].push_back(flat_index(p, k));
      }
      std::sort(flat_psi[x].begin(), flat_psi[x].end());
    }

    std::mt19937_64 rng(options.seed);
    std::size_t     combos_checked = 0;

    // Returns a failure description, or the empty string.
    auto check_word = [&](Word const& word) -> std::string {
      auto const s = evaluate(word, gens);
      std::size_t total = 1;
      bool        all   = true;
      for (auto letter : word) {
        if (flat_lifts[letter].empty()) {
          return "generator " + std::to_string(letter + 1) + " has no lift";
        }
        total *= flat_lifts[letter].size();
        if (total > options.lift_cap) {
          all = false;
          break;
        }
      }
      std::size_t const rounds = all ? total : options.lift_cap;
      std::vector<std::size_t> choice(word.size(), 0);
      for (std::size_t r = 0; r < rounds; ++r) {
        if (all) {
          // mixed-radix counter over lift indices
          std::size_t rest = r;
          for (std::size_t i = 0; i < word.size(); ++i) {
            auto const radix = flat_lifts[word[i]].size();
            choice[i]        = rest % radix;
            rest /= radix;
          }
        } else {
          for (std::size_t i = 0; i < word.size(); ++i) {
            std::uniform_int_distribution<std::size_t> pick(
                0, flat_lifts[word[i]].size() - 1);
            choice[i] = pick(rng);
          }
        }
        Transformation product = flat_lifts[word[0]][choice[0]];
        for (std::size_t i = 1; i < word.size(); ++i) {
          product = product * flat_lifts[word[i]][choice[i]];
        }
        ++combos_checked;
        for (State x = 1; x <= n; ++x) {
          auto const& target = flat_psi[s[x]];
          for (State i : flat_psi[x]) {
            if (!std::binary_search(target.begin(), target.end(), product[i])) {
              std::ostringstream out;
              out << "word of length " << word.size() << ": lift of state " << x
                  << " at flat index " << i << " goes to " << product[i]
                  << ", outside the lifts of " << s[x];
              return out.str();
            }
          }
        }
      }
      return {};
    };

    auto sample = [&](std::size_t count) -> std::string {
      std::uniform_int_distribution<std::size_t> length(1, options.max_word_length);
      std::uniform_int_distribution<std::size_t> letter(0, gens.size() - 1);
      for (std::size_t i = 0; i < count; ++i) {
        Word w(length(rng));
        for (auto& l : w) {
          l = letter(rng);
        }
        auto failure = check_word(w);
        if (!failure.empty()) {
          return failure;
        }
      }
      return {};
    };

    std::string failure;
    std::string summary;
    if (options.samples) {
      failure = sample(*options.samples);
      summary = "sampled " + std::to_string(*options.samples) + " words";
    } else {
      TransformationSemigroup sgp(gens);
      if (sgp.enumerate_partial(options.budget)) {
        for (std::size_t i = 0; i < sgp.size() && failure.empty(); ++i) {
          failure = check_word(sgp.word(i));
        }
        summary = "exhaustive over " + std::to_string(sgp.size())
                  + " elements";
      } else {
        report.partial = true;
        failure        = sample(options.fallback_samples);
        summary        = "sampled " + std::to_string(options.fallback_samples)
                  + " words (budget " + std::to_string(options.budget)
                  + " exceeded)";
      }
    }
    summary += ", " + std::to_string(combos_checked) + " lift combinations";
    add(report, "flat-oracle", failure, summary);
    return report;
  }

  VerificationReport verify_all(Emulation const&         emulation,
                                bool                     with_flat_oracle,
                                FlatOracleOptions const& options) {
    auto report = verify_emulation(emulation);
    report.merge(verify_identities(emulation));
    report.merge(verify_blocked(emulation));
    if (with_flat_oracle) {
      report.merge(flat_oracle(emulation, options));
    }
    return report;
  }

}  // namespace sgpcover
