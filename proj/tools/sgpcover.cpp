// sgpcover: decompose a transformation semigroup into a two-level cascade.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 theta/phi
// violate the action condition, 4 budget exceeded.

#include <cstdlib>   // for getenv
#include <fstream>   // for ofstream
#include <iostream>  // for cout, cerr
#include <optional>  // for optional
#include <string>    // for string

#include "CLI11.hpp"
#include "json.hpp"

#include "sgpcover/problem.hpp"
#include "sgpcover/report.hpp"

using namespace sgpcover;

namespace {

  enum Exit { ok = 0, failed = 1, bad_input = 2, violation = 3, over_budget = 4 };

  struct Flags {
    std::string                file;
    std::optional<std::string> method;
    std::optional<std::string> seed_classes;
    std::optional<std::string> idempotent;
    std::optional<std::size_t> budget;
    std::optional<std::string> report;
    std::string                format = "text";
    bool                       verify = false;
    bool                       list   = false;
    std::uint64_t              seed   = FlatOracleOptions{}.seed;
  };

  std::size_t resolve_budget(Flags const& f, Problem const& p) {
    if (f.budget) {
      return *f.budget;
    }
    if (p.budget) {
      return *p.budget;
    }
    if (char const* env = std::getenv("SGPCOVER_BUDGET")) {
      try {
        return std::stoul(env);
      } catch (std::exception const&) {
        throw ParseError(std::string("SGPCOVER_BUDGET is not a number: ") + env);
      }
    }
    return DEFAULT_BUDGET;
  }

  Method resolve_method(Flags const& f, Problem const& p) {
    if (f.method) {
      std::vector<std::vector<State>> seed;
      if (f.seed_classes) {
        seed = parse_seed_classes(*f.seed_classes);
      }
      std::optional<Transformation> e;
      if (f.idempotent) {
        e = parse_transformation(*f.idempotent);
      }
      return make_method(*f.method, seed, e);
    }
    if (p.method) {
      return *p.method;
    }
    return Nn1Method{};
  }

  void emit(Flags const& f, std::string const& text) {
    if (f.report) {
      std::ofstream out(*f.report);
      if (!out) {
        throw ParseError("cannot write " + *f.report);
      }
      out << text;
    } else {
      std::cout << text;
    }
  }

  std::string format(Flags const&                              f,
                     nlohmann::json const&                     doc,
                     std::string (*render)(nlohmann::json const&)) {
    return f.format == "machine" ? doc.dump(2) + "\n" : render(doc);
  }

  int run_decompose(Flags const& f) {
    auto const problem = load_problem(f.file);
    auto const d       = decompose(problem.generators,
                             resolve_method(f, problem),
                                   {.budget      = resolve_budget(f, problem),
                                    .flat_oracle = f.verify,
                                    .seed        = f.seed});
    emit(f, format(f, to_json(d), render_decomposition));
    return d.passed() ? ok : failed;
  }

  int run_verify(Flags const& f) {
    auto const problem = load_problem(f.file);
    auto const r       = verify_problem(problem.generators,
                                  resolve_method(f, problem),
                                  {.budget = resolve_budget(f, problem),
                                   .seed   = f.seed});
    emit(f, format(f, to_json(r), render_verification));
    return r.all_passed() ? ok : failed;
  }

  int run_enumerate(Flags const& f) {
    auto const problem = load_problem(f.file);
    auto const sgp     = closure(problem.generators, resolve_budget(f, problem));
    nlohmann::json doc = {{"size", sgp.size()}, {"aperiodic", is_aperiodic(sgp)}};
    if (f.list) {
      nlohmann::json elements = nlohmann::json::array();
      for (auto const& s : sgp.elements()) {
        elements.push_back(s.to_string());
      }
      doc["elements"] = elements;
    }
    emit(f, format(f, doc, [](nlohmann::json const& j) {
           std::string out = "elements: " + std::to_string(j["size"].get<std::size_t>())
                             + "\naperiodic: "
                             + (j["aperiodic"].get<bool>() ? "yes" : "no") + "\n";
           if (j.contains("elements")) {
             for (auto const& s : j["elements"]) {
               out += s.get<std::string>() + "\n";
             }
           }
           return out;
         }));
    return ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cascade decompositions of finite transformation semigroups"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", f.file, "problem file (JSON or one generator per line)")
        ->required();
    cmd->add_option("--budget", f.budget,
                    "element budget for enumerations (default: $SGPCOVER_BUDGET "
                    "or 100000)");
    cmd->add_option("--report", f.report, "write the report here instead of stdout");
    cmd->add_option("--format", f.format, "report format")
        ->check(CLI::IsMember({"text", "machine"}));
  };
  auto add_method = [&](CLI::App* cmd) {
    cmd->add_option("--method", f.method, "theta construction")
        ->check(CLI::IsMember({"nn1", "congruence", "local-monoid", "constant"}));
    cmd->add_option("--seed-classes", f.seed_classes,
                    "congruence seed, e.g. [[1,2],[3,4]]");
    cmd->add_option("--idempotent", f.idempotent,
                    "idempotent for local-monoid, e.g. [1,2,2]");
    cmd->add_option("--seed", f.seed, "random seed for sampled verification");
  };

  auto* decompose_cmd
      = app.add_subcommand("decompose", "build and report a cascade decomposition");
  add_common(decompose_cmd);
  add_method(decompose_cmd);
  decompose_cmd->add_flag("--verify", f.verify, "also run the flattened-cascade oracle");

  auto* verify_cmd = app.add_subcommand("verify", "run every verification suite");
  add_common(verify_cmd);
  add_method(verify_cmd);

  auto* enumerate_cmd
      = app.add_subcommand("enumerate", "size and aperiodicity of the semigroup");
  add_common(enumerate_cmd);
  enumerate_cmd->add_flag("--list", f.list, "list every element");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return bad_input;
  }

  try {
    if (*decompose_cmd) {
      return run_decompose(f);
    }
    if (*verify_cmd) {
      return run_verify(f);
    }
    return run_enumerate(f);
  } catch (MorphismViolation const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return violation;
  } catch (BudgetExceeded const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return over_budget;
  } catch (InvalidArgument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  }
}
