#include "sgpcover/report.hpp"

#include <algorithm>  // for any_of
#include <sstream>    // for ostringstream

namespace sgpcover {

  using json = nlohmann::json;

  namespace {
    Emulation checked_emulation(std::vector<Transformation> const& gens,
                                BuiltMorphism const&               built) {
      if (auto ce = check_morphism(built.theta, built.phi, gens)) {
        throw MorphismViolation("theta and phi do not satisfy the action "
                                "condition",
                                std::move(*ce));
      }
      return build_emulation(gens, built.theta, built.phi);
    }

    FlatOracleOptions oracle_options(PipelineOptions const& options) {
      FlatOracleOptions result;
      result.budget = options.budget;
      result.seed   = options.seed;
      return result;
    }

    json cascade_json(CascadeTransformation const& c) {
      json deps = json::array();
      for (auto const& [y, d] : c.dep().entries()) {
        deps.push_back({{"top_state", y}, {"map", d.to_trimmed_string()}});
      }
      return {{"top", c.top().to_trimmed_string()}, {"dependencies", deps}};
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::string state_set(json const& states) {
      std::string out = "{";
      bool        first = true;
      for (auto const& s : states) {
        out += (first ? "" : ",") + std::to_string(s.get<std::size_t>());
        first = false;
      }
      return out + "}";
    }

    void render_checks(std::ostringstream& out, json const& v) {
      for (auto const& c : v["checks"]) {
        out << "[" << c["status"].get<std::string>() << "] "
            << c["name"].get<std::string>();
        if (!c["detail"].get<std::string>().empty()) {
          out << ": " << c["detail"].get<std::string>();
        }
        out << "\n";
      }
      out << "verdict: " << (v["passed"].get<bool>() ? "PASS" : "FAIL");
      if (v["partial"].get<bool>()) {
        out << " (partly sampled)";
      }
      out << "\n";
    }
  }  // namespace

  Decomposition decompose(std::vector<Transformation> const& gens,
                          Method const&                      method,
                          PipelineOptions const&             options) {
    auto source = closure(gens, options.budget);
    auto built  = build_morphism(method, gens);
    auto emu    = checked_emulation(gens, built);

    TransformationSemigroup image(built.phi.image());
    std::optional<std::size_t> image_size;
    bool                       image_aperiodic = false;
    if (image.enumerate_partial(options.budget)) {
      image_size      = image.size();
      image_aperiodic = is_aperiodic(image);
    }

    auto components   = local_components(emu, options.budget);
    auto verification = verify_all(
        emu, options.flat_oracle, oracle_options(options));
    std::string failure;
    for (auto const& u : components.components) {
      if (!u.embedding_verified) {
        failure = "U_" + std::to_string(u.top_state) + ": " + u.embedding_failure;
        break;
      }
    }
    verification.checks.push_back(
        {"local-embeddings",
         failure.empty() ? CheckStatus::pass : CheckStatus::fail,
         failure});
    verification.method = method_name(method);

    std::vector<std::string> warnings;
    if (emu.top_size() == 1) {
      warnings.emplace_back("unbalanced: entire action on bottom level");
    }

    return Decomposition{gens,
                         method_name(method),
                         source.size(),
                         is_aperiodic(source),
                         std::move(built),
                         image_size,
                         image_aperiodic,
                         std::move(emu),
                         std::move(components),
                         std::move(verification),
                         std::move(warnings)};
  }

  VerificationReport verify_problem(std::vector<Transformation> const& gens,
                                    Method const&                      method,
                                    PipelineOptions const&             options) {
    auto built  = build_morphism(method, gens);
    auto emu    = checked_emulation(gens, built);
    auto report = verify_all(
        emu, true, oracle_options(options));
    report.method = method_name(method);
    return report;
  }

  json to_json(VerificationReport const& r) {
    json checks = json::array();
    for (auto const& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"status", to_string(c.status)},
                        {"detail", c.detail}});
    }
    return {{"method", r.method},
            {"source_degree", r.source_degree},
            {"generators", r.generator_count},
            {"top_size", r.top_size},
            {"bottom_size", r.bottom_size},
            {"partial", r.partial},
            {"passed", r.all_passed()},
            {"checks", checks}};
  }

  json to_json(Decomposition const& d) {
    auto const& e = d.emulation;

    json gens = json::array();
    for (auto const& g : d.generators) {
      gens.push_back(g.to_string());
    }
    json theta = json::array();
    for (auto const& img : e.theta().images()) {
      theta.push_back(img);
    }
    json phi = json::array();
    for (auto const& lifts : e.phi().lifts()) {
      json row = json::array();
      for (auto const& t : lifts) {
        row.push_back(t.to_string());
      }
      phi.push_back(row);
    }
    json psi = json::array();
    for (State x = 1; x <= e.source_degree(); ++x) {
      json row = json::array();
      for (auto const& p : e.lift(x)) {
        row.push_back({p.top, p.bottom});
      }
      psi.push_back(row);
    }
    json mu = json::array();
    for (auto const& lifts : e.mu_table()) {
      json row = json::array();
      for (auto const& c : lifts) {
        row.push_back(cascade_json(c));
      }
      mu.push_back(row);
    }
    json components = json::array();
    for (auto const& u : d.components.components) {
      json elements = json::array();
      for (std::size_t i = 0; i < u.elements.size() && i < REPORT_ELEMENT_LIMIT;
           ++i) {
        elements.push_back(u.elements[i].to_trimmed_string());
      }
      bool const has_permutation
          = std::any_of(u.elements.begin(), u.elements.end(), [](auto const& t) {
              return t.is_permutation() && !t.is_identity();
            });
      components.push_back({{"top_state", u.top_state},
                            {"local_size", u.local_size},
                            {"size", u.elements.size()},
                            {"trivial", u.is_trivial()},
                            {"has_permutation", has_permutation},
                            {"embedding_verified", u.embedding_verified},
                            {"embedding_failure", u.embedding_failure},
                            {"elements", elements}});
    }

    json doc = {
        {"source",
         {{"degree", e.source_degree()},
          {"generators", gens},
          {"size", d.semigroup_size},
          {"aperiodic", d.aperiodic}}},
        {"method", d.method},
        {"partition",
         d.morphism.partition ? json(d.morphism.partition->to_string()) : json()},
        {"theta", theta},
        {"phi", phi},
        {"image",
         {{"size", d.image_size ? json(*d.image_size) : json()},
          {"aperiodic", d.image_size ? json(d.image_aperiodic) : json()}}},
        {"cascade", {{"top_size", e.top_size()}, {"bottom_size", e.bottom_size()}}},
        {"psi", psi},
        {"mu", mu},
        {"local_components",
         {{"product_size", d.components.product_size}, {"components", components}}},
        {"verification", to_json(d.verification)},
        {"warnings", d.warnings}};
    return doc;
  }

  std::string render_verification(json const& doc) {
    std::ostringstream out;
    out << "method: " << doc["method"].get<std::string>() << "\n";
    out << "cascade: (" << doc["top_size"].get<std::size_t>() << ", "
        << doc["bottom_size"].get<std::size_t>() << ")\n";
    render_checks(out, doc);
    return out.str();
  }

  std::string render_decomposition(json const& doc) {
    std::ostringstream out;
    auto const&        src = doc["source"];
    out << "source: degree " << src["degree"].get<std::size_t>() << ", "
        << src["generators"].size() << " generators\n";
    std::size_t i = 1;
    for (auto const& g : src["generators"]) {
      out << "  g" << i++ << " = " << g.get<std::string>() << "\n";
    }
    out << "semigroup: " << src["size"].get<std::size_t>() << " elements, aperiodic: "
        << yes_no(src["aperiodic"].get<bool>()) << "\n";
    out << "method: " << doc["method"].get<std::string>() << "\n";
    if (!doc["partition"].is_null()) {
      out << "partition: " << doc["partition"].get<std::string>() << "\n";
    }

    out << "theta:\n";
    i = 1;
    for (auto const& img : doc["theta"]) {
      out << "  " << i++ << " -> " << state_set(img) << "\n";
    }
    out << "phi:\n";
    i = 1;
    for (auto const& lifts : doc["phi"]) {
      out << "  g" << i++ << " ->";
      for (auto const& t : lifts) {
        out << " " << t.get<std::string>();
      }
      out << "\n";
    }
    auto const& image = doc["image"];
    out << "image semigroup: ";
    if (image["size"].is_null()) {
      out << "over budget\n";
    } else {
      out << image["size"].get<std::size_t>() << " elements, aperiodic: "
          << yes_no(image["aperiodic"].get<bool>()) << "\n";
    }

    auto const top    = doc["cascade"]["top_size"].get<std::size_t>();
    auto const bottom = doc["cascade"]["bottom_size"].get<std::size_t>();
    out << "cascade: (" << top << ", " << bottom << ")\n";
    out << "psi:\n";
    i = 1;
    for (auto const& row : doc["psi"]) {
      out << "  " << i++ << " ->";
      for (auto const& p : row) {
        out << " (" << p[0].get<std::size_t>() << "," << p[1].get<std::size_t>()
            << ")";
      }
      out << "\n";
    }
    out << "mu:\n";
    i = 1;
    for (auto const& lifts : doc["mu"]) {
      std::size_t j = 1;
      for (auto const& c : lifts) {
        out << "g" << i << " lift " << j++ << " of " << lifts.size() << ":\n";
        out << "<trans cascade with 2 levels with (" << top << ", " << bottom
            << ") pts, " << c["dependencies"].size() + 1 << " dependencies>\n";
        out << "[] -> Transformation(" << c["top"].get<std::string>() << ")\n";
        for (auto const& d : c["dependencies"]) {
          out << "[" << d["top_state"].get<std::size_t>() << "] -> Transformation("
              << d["map"].get<std::string>() << ")\n";
        }
      }
      ++i;
    }

    auto const& lc = doc["local_components"];
    out << "local components (cascade product: "
        << lc["product_size"].get<std::size_t>() << " elements):\n";
    for (auto const& u : lc["components"]) {
      auto const size = u["size"].get<std::size_t>();
      out << "  U_" << u["top_state"].get<std::size_t>() << ": "
          << u["local_size"].get<std::size_t>() << " labels, " << size
          << " elements, trivial: " << yes_no(u["trivial"].get<bool>())
          << ", non-trivial permutation: "
          << yes_no(u["has_permutation"].get<bool>()) << ", embedding: "
          << (u["embedding_verified"].get<bool>()
                  ? std::string("verified")
                  : u["embedding_failure"].get<std::string>())
          << "\n   ";
      for (auto const& t : u["elements"]) {
        out << " " << t.get<std::string>();
      }
      if (size > u["elements"].size()) {
        out << " ... (" << size - u["elements"].size() << " more)";
      }
      out << "\n";
    }

    out << "verification:\n";
    render_checks(out, doc["verification"]);
    for (auto const& w : doc["warnings"]) {
      out << "warning: " << w.get<std::string>() << "\n";
    }
    return out.str();
  }

}  // namespace sgpcover
