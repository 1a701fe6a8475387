#include <doctest.h>

#include <string>

#include "xmodbar/errors.hpp"
#include "xmodbar/workspace.hpp"

using namespace xmodbar;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_workspace(text, "ws.json");
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("workspace") {

TEST_CASE("the F1 fixture loads") {
  const Workspace ws = load_workspace(std::string(XMODBAR_FIXTURES) + "/f1.json");
  CHECK(ws.modulus == 2);
  CHECK(ws.algebras.size() == 2);
  CHECK(ws.homs.size() == 1);
  CHECK(ws.actions.size() == 1);
  CHECK(ws.xmods.size() == 1);
  CHECK(ws.options.levels == std::optional<std::size_t>(4));
  CHECK(ws.options.seed == std::optional<std::uint64_t>(20240917));
  CHECK(ws.xmod("F1").S().carrier.orders() == std::vector<Residue>{2, 2});
}

TEST_CASE("an empty document is an empty workspace") {
  const Workspace ws = parse_workspace("  \n ");
  CHECK(ws.algebras.empty());
  CHECK(ws.xmods.empty());
  CHECK(parse_workspace("{}").algebras.empty());
}

TEST_CASE("a dangling reference names the identifier and its position") {
  const std::string text =
      "{\n"
      "  \"modulus\": 2,\n"
      "  \"algebras\": { \"R\": { \"orders\": [2], \"mul\": [[[0]]] } },\n"
      "  \"homs\": { \"eta\": { \"from\": \"R\", \"to\": \"Q\", \"images\": [[0]] } }\n"
      "}\n";
  const std::string err = error_of(text);
  CHECK(err.find("ws.json:4:") == 0);
  CHECK(err.find("'Q'") != std::string::npos);
  CHECK(err.find("/homs/eta/to") != std::string::npos);
}

TEST_CASE("syntax errors carry a line and column") {
  const std::string err = error_of("{\n  \"modulus\": 2,\n  \"algebras\": { ,\n}");
  CHECK(err.find("ws.json:3:") == 0);
  CHECK(err.find("syntax error") != std::string::npos);
}

TEST_CASE("torsion-incompatible tensors point at the offending coordinate") {
  const std::string text =
      "{ \"modulus\": 4,\n"
      "  \"algebras\": { \"A\": { \"orders\": [2, 4], \"mul\": [[[0, 0], [0, 1]], [[0, 0], [0, 0]]] } } }";
  const std::string err = error_of(text);
  CHECK(err.find("/algebras/A/mul/0/1/1") != std::string::npos);
  CHECK(err.find("torsion") != std::string::npos);
}

TEST_CASE("unknown keys and bad orders are rejected") {
  CHECK(error_of("{ \"modulus\": 2, \"extras\": {} }").find("unknown key \"extras\"") != std::string::npos);
  CHECK(error_of("{ \"modulus\": 4, \"algebras\": { \"A\": { \"orders\": [3], \"mul\": [[[0]]] } } }")
            .find("/algebras/A/orders/0") != std::string::npos);
  CHECK(error_of("{ \"algebras\": { \"A\": { \"orders\": [2], \"mul\": [[[0]]] } } }").find("modulus") !=
        std::string::npos);
}

TEST_CASE("lookups of missing names throw") {
  const Workspace ws = load_workspace(std::string(XMODBAR_FIXTURES) + "/f1.json");
  CHECK_THROWS_AS(ws.xmod("F9"), InputError);
  CHECK_THROWS_AS(ws.cim("none"), InputError);
  CHECK_THROWS_AS(load_workspace("/nonexistent/ws.json"), InputError);
}

TEST_CASE("locate_pointer") {
  const std::string text = "{\n  \"a\": {\n    \"b\": [10, 20]\n  }\n}";
  CHECK(locate_pointer(text, "/a/b/1") == std::pair<std::size_t, std::size_t>{3, 15});
  CHECK(locate_pointer(text, "/a") == std::pair<std::size_t, std::size_t>{2, 8});
  // Missing leaves fall back to the deepest existing ancestor.
  CHECK(locate_pointer(text, "/a/zz") == locate_pointer(text, "/a"));
}

}  // TEST_SUITE
