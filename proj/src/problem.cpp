#include "sgpcover/problem.hpp"

#include <fstream>  // for ifstream
#include <sstream>  // for istringstream, ostringstream

#include "json.hpp"

namespace sgpcover {

  namespace {
    using json = nlohmann::json;

    Transformation to_transformation(json const& j, std::string const& where) {
      if (!j.is_array()) {
        throw ParseError(where + ": expected an image list");
      }
      std::vector<State> images;
      for (auto const& v : j) {
        if (!v.is_number_unsigned()) {
          throw ParseError(where + ": images must be positive integers");
        }
        images.push_back(v.get<State>());
      }
      try {
        return Transformation(std::move(images));
      } catch (InvalidArgument const& e) {
        throw ParseError(where + ": " + e.what());
      }
    }

    std::vector<std::vector<State>> to_classes(json const&        j,
                                               std::string const& where) {
      if (!j.is_array()) {
        throw ParseError(where + ": expected a list of lists of states");
      }
      std::vector<std::vector<State>> classes;
      for (auto const& c : j) {
        if (!c.is_array()) {
          throw ParseError(where + ": expected a list of lists of states");
        }
        std::vector<State> states;
        for (auto const& v : c) {
          if (!v.is_number_unsigned()) {
            throw ParseError(where + ": states must be positive integers");
          }
          states.push_back(v.get<State>());
        }
        classes.push_back(std::move(states));
      }
      return classes;
    }

    Method to_method(json const& j) {
      if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError("method: expected an object with a string \"kind\"");
      }
      auto const kind = j["kind"].get<std::string>();
      if (kind == "explicit") {
        if (!j.contains("theta") || !j.contains("phi")) {
          throw ParseError("explicit method needs \"theta\" and \"phi\"");
        }
        auto theta = to_classes(j["theta"], "method.theta");
        if (!j["phi"].is_array()) {
          throw ParseError("method.phi: expected one list of lifts per generator");
        }
        std::vector<std::vector<Transformation>> phi;
        for (auto const& lifts : j["phi"]) {
          if (!lifts.is_array()) {
            throw ParseError("method.phi: expected one list of lifts per generator");
          }
          std::vector<Transformation> row;
          for (auto const& t : lifts) {
            row.push_back(to_transformation(t, "method.phi"));
          }
          phi.push_back(std::move(row));
        }
        std::size_t top = 0;
        if (j.contains("top_degree")) {
          top = j["top_degree"].get<std::size_t>();
        } else if (!phi.empty() && !phi.front().empty()) {
          top = phi.front().front().degree();
        } else {
          throw ParseError("explicit method needs \"top_degree\"");
        }
        try {
          return ExplicitMethod{StateRelation(top, std::move(theta)),
                                GenRelation(top, std::move(phi))};
        } catch (InvalidArgument const& e) {
          throw ParseError(std::string("explicit method: ") + e.what());
        }
      }
      std::vector<std::vector<State>> seed;
      if (j.contains("seed_classes")) {
        seed = to_classes(j["seed_classes"], "method.seed_classes");
      }
      std::optional<Transformation> idempotent;
      if (j.contains("idempotent")) {
        idempotent = to_transformation(j["idempotent"], "method.idempotent");
      }
      return make_method(kind, seed, idempotent);
    }

    Problem parse_json(std::string_view text) {
      json j;
      try {
        j = json::parse(text);
      } catch (json::parse_error const& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
      }
      if (!j.is_object() || !j.contains("generators")) {
        throw ParseError("problem document needs a \"generators\" list");
      }
      Problem p;
      try {
        if (!j["generators"].is_array() || j["generators"].empty()) {
          throw ParseError("\"generators\" must be a nonempty list");
        }
        std::size_t i = 1;
        for (auto const& g : j["generators"]) {
          p.generators.push_back(
              to_transformation(g, "generator " + std::to_string(i++)));
        }
        p.degree = j.contains("degree") ? j["degree"].get<std::size_t>()
                                        : p.generators.front().degree();
        if (j.contains("method")) {
          p.method = to_method(j["method"]);
        }
        if (j.contains("budget")) {
          p.budget = j["budget"].get<std::size_t>();
        }
      } catch (json::exception const& e) {
        throw ParseError(std::string("bad problem document: ") + e.what());
      }
      return p;
    }

    Problem parse_plain(std::string_view text) {
      Problem            p;
      std::istringstream in{std::string(text)};
      std::string        line;
      std::size_t        line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
          line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
          continue;
        }
        std::string normal = line;
        if (normal.find('[') == std::string::npos) {
          std::istringstream words(line);
          std::string        w;
          normal = "[";
          bool first = true;
          while (words >> w) {
            normal += (first ? "" : ",") + w;
            first = false;
          }
          normal += "]";
        }
        try {
          p.generators.push_back(parse_transformation(normal));
        } catch (InvalidArgument const& e) {
          throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
      }
      if (p.generators.empty()) {
        throw ParseError("no generators found");
      }
      p.degree = p.generators.front().degree();
      return p;
    }
  }  // namespace

  Problem parse_problem(std::string_view text) {
    auto const start = text.find_first_not_of(" \t\r\n");
    Problem    p     = (start != std::string_view::npos && text[start] == '{')
                           ? parse_json(text)
                           : parse_plain(text);
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      if (p.generators[i].degree() != p.degree) {
        throw ParseError("generator " + std::to_string(i + 1) + " has degree "
                         + std::to_string(p.generators[i].degree())
                         + ", expected " + std::to_string(p.degree));
      }
    }
    return p;
  }

  Problem load_problem(std::filesystem::path const& file) {
    std::ifstream in(file);
    if (!in) {
      throw ParseError("cannot read " + file.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str());
  }

  Method make_method(std::string const&                     kind,
                     std::vector<std::vector<State>> const& seed_classes,
                     std::optional<Transformation> const&   idempotent) {
    if (kind == "nn1") {
      return Nn1Method{};
    }
    if (kind == "congruence") {
      return CongruenceMethod{seed_classes};
    }
    if (kind == "local-monoid") {
      if (!idempotent) {
        throw ParseError("the local-monoid method needs an idempotent");
      }
      return LocalMonoidMethod{*idempotent};
    }
    if (kind == "constant") {
      return ConstantMethod{};
    }
    throw ParseError("unknown method \"" + kind + "\"");
  }

  std::vector<std::vector<State>> parse_seed_classes(std::string_view text) {
    try {
      return to_classes(json::parse(text), "seed classes");
    } catch (json::parse_error const& e) {
      throw ParseError(std::string("malformed seed classes: ") + e.what());
    }
  }

}  // namespace sgpcover
