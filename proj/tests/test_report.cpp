#include <catch2/catch_amalgamated.hpp>

#include "sgpcover/problem.hpp"
#include "sgpcover/report.hpp"

using namespace sgpcover;

namespace {
  std::filesystem::path data(char const* name) {
    return std::filesystem::path(SGPCOVER_TEST_DATA) / name;
  }
}  // namespace

TEST_CASE("JSON problems", "[cli]") {
  auto p = load_problem(data("random13.json"));
  CHECK(p.degree == 13);
  REQUIRE(p.generators.size() == 2);
  CHECK(p.generators[1] == Transformation{2, 10, 3, 3, 8, 7, 2, 4, 5, 6, 5, 3, 4});
  REQUIRE(p.method.has_value());
  REQUIRE(std::holds_alternative<CongruenceMethod>(*p.method));
  CHECK(std::get<CongruenceMethod>(*p.method).seed
        == std::vector<std::vector<State>>{{1, 2}, {3, 4}});
  CHECK_FALSE(p.budget.has_value());

  auto q = parse_problem(R"({"generators": [[1,1]], "budget": 7,
                             "method": {"kind": "local-monoid", "idempotent": [1,1]}})");
  CHECK(q.degree == 2);
  CHECK(q.budget == 7u);
  CHECK(std::holds_alternative<LocalMonoidMethod>(*q.method));

  auto x = load_problem(data("corrupted_phi.json"));
  REQUIRE(std::holds_alternative<ExplicitMethod>(*x.method));
  CHECK(std::get<ExplicitMethod>(*x.method).theta.target_degree() == 2);
}

TEST_CASE("plain-text problems", "[cli]") {
  auto p = parse_problem("# comment\n2 3 1\n\n[2,1,3]  # swap\n1 1 3\n");
  CHECK(p.degree == 3);
  CHECK(p.generators
        == std::vector<Transformation>{Transformation{2, 3, 1}, Transformation{2, 1, 3},
                                       Transformation{1, 1, 3}});
  CHECK_FALSE(p.method.has_value());
  CHECK(load_problem(data("t3.txt")).generators.size() == 3);
}

TEST_CASE("malformed problems", "[cli]") {
  CHECK_THROWS_AS(parse_problem("{"), ParseError);
  CHECK_THROWS_AS(parse_problem("{}"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"generators": []})"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"generators": [[1,3]]})"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"generators": [[1,-1]]})"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"degree": 3, "generators": [[1,2]]})"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"generators": [[1,2]], "method": {"kind": "magic"}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"generators": [[1,2]], "method": {"kind": "local-monoid"}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"generators": [[1,2]], "budget": "lots"})"), ParseError);
  CHECK_THROWS_AS(parse_problem("1 2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("# nothing\n"), ParseError);
  CHECK_THROWS_AS(load_problem(data("missing.json")), ParseError);
  CHECK_THROWS_AS(parse_seed_classes("[[1,2"), ParseError);
  CHECK(parse_seed_classes("[[1,2],[3]]") == std::vector<std::vector<State>>{{1, 2}, {3}});
}

TEST_CASE("decomposition report content", "[cli]") {
  auto p    = load_problem(data("random13.json"));
  auto d    = decompose(p.generators, *p.method);
  auto doc  = to_json(d);
  auto text = render_decomposition(doc);
  CHECK(d.passed());
  CHECK(doc["source"]["size"] == 9221);
  CHECK(doc["partition"] == "[[1,2,6,7,10],[3,4,5,8],[9],[11,12,13]]");
  CHECK(doc["image"]["size"] == 5);
  CHECK(doc["image"]["aperiodic"] == true);
  CHECK(doc["local_components"]["product_size"] == 11948);
  CHECK(text.find("semigroup: 9221 elements") != std::string::npos);
  CHECK(text.find("partition: [[1,2,6,7,10],[3,4,5,8],[9],[11,12,13]]") != std::string::npos);
  CHECK(text.find("  g1 -> [1,4,1,1]\n  g2 -> [1,2,2,2]\n") != std::string::npos);
  CHECK(text.find(dependency_listing(d.emulation.lifts(0)[0])) != std::string::npos);
  CHECK(text.find(dependency_listing(d.emulation.lifts(1)[0])) != std::string::npos);
  CHECK(text.find("warning:") == std::string::npos);
}

TEST_CASE("text and machine reports carry the same data", "[cli]") {
  auto p   = load_problem(data("three_state.json"));
  auto doc = to_json(decompose(p.generators, *p.method));
  // the machine document round-trips through its serialization, and the text
  // is a function of it
  auto reread = nlohmann::json::parse(doc.dump(2));
  CHECK(reread == doc);
  CHECK(render_decomposition(reread) == render_decomposition(doc));
  auto text = render_decomposition(doc);
  for (auto const& u : doc["local_components"]["components"]) {
    for (auto const& t : u["elements"]) {
      CHECK(text.find(t.get<std::string>()) != std::string::npos);
    }
  }
  CHECK(text.find("U_2: 2 labels, 4 elements, trivial: no, non-trivial permutation: yes")
        != std::string::npos);
}

TEST_CASE("reports are byte-stable", "[cli]") {
  auto p  = load_problem(data("cyclic_bad.json"));
  auto d1 = to_json(decompose(p.generators, *p.method, {.budget = 100000, .flat_oracle = true}));
  auto d2 = to_json(decompose(p.generators, *p.method, {.budget = 100000, .flat_oracle = true}));
  CHECK(d1.dump() == d2.dump());
  CHECK(render_decomposition(d1) == render_decomposition(d2));
}

TEST_CASE("pipeline errors", "[cli]") {
  auto p = load_problem(data("corrupted_phi.json"));
  CHECK_THROWS_AS(decompose(p.generators, *p.method), MorphismViolation);
  CHECK_THROWS_AS(verify_problem(p.generators, *p.method), MorphismViolation);
  auto b = load_problem(data("random13.json"));
  CHECK_THROWS_AS(decompose(b.generators, *b.method, {.budget = 1000}), BudgetExceeded);
  CHECK_THROWS_AS(decompose({Transformation{1}}, Nn1Method{}), InvalidArgument);
}

TEST_CASE("constant method warns about balance", "[cli]") {
  auto p   = load_problem(data("t3.txt"));
  auto d   = decompose(p.generators, ConstantMethod{});
  auto doc = to_json(d);
  CHECK(d.passed());
  CHECK(render_decomposition(doc).find("warning: unbalanced: entire action on bottom level")
        != std::string::npos);
}

TEST_CASE("verification report document", "[cli]") {
  auto p   = load_problem(data("t3.txt"));
  auto r   = verify_problem(p.generators, Nn1Method{});
  auto doc = to_json(r);
  CHECK(doc["passed"] == true);
  CHECK(doc["method"] == "nn1");
  auto text = render_verification(doc);
  CHECK(text.find("[PASS] flat-oracle: exhaustive over 27 elements") != std::string::npos);
  CHECK(text.find("verdict: PASS\n") != std::string::npos);
}
