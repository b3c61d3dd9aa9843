#include <doctest.h>

#include "leaftype/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::string message_of(std::string const& text) {
  try {
    parse_config(text);
  } catch (InvalidInput const& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("malformed JSON reports line and column") {
  auto m = message_of("{\n  \"kind\": \"homogeneous\",\n  \"exponents\": [1,]\n}");
  CHECK(m.find("line 3") != std::string::npos);
  CHECK(m.find("column") != std::string::npos);
}

TEST_CASE("schema errors") {
  CHECK(message_of(R"({"kind":"sheaf"})").find("kind") != std::string::npos);
  CHECK(message_of(R"({"kind":"representation","target":"circle",
                      "surface":{"genus":0,"punctures":2},"images":{"c3":"1/2"}})")
            .find("c3") != std::string::npos);
  CHECK(message_of(R"({"kind":"representation","target":"permutation","degree":3,
                      "surface":{"genus":0,"punctures":2},"images":{"c1":[1,0]}})")
            .find("degree") != std::string::npos);
  CHECK(message_of(R"({"kind":"homogeneous","exponents":["q"]})").find("exponents[0]") !=
        std::string::npos);
}

TEST_CASE("representation config") {
  auto c = parse_config(R"({"kind":"representation","target":"circle","symbols":["t"],
      "surface":{"genus":0,"punctures":3},"derive_last_boundary":true,
      "images":{"c1":"t","c2":"1/2"}})");
  auto rep = working_representation(c);
  CHECK(rep.surface().punctures() == 3);
  CHECK(rep.in_kernel(surface_relator(rep.surface())));
}

TEST_CASE("bundled configs load") {
  for (auto const* name : {"blooming_cantor_tree.json", "four_lines.json", "homogeneous_case2.json",
                           "permutation_cover.json"}) {
    CAPTURE(name);
    auto c = load_config(config_path(name));
    CHECK(working_representation(c).surface().rank() > 0);
  }
}
