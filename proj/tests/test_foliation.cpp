#include <doctest.h>

#include "leaftype/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

LogFoliationSpec lines(std::vector<std::string> const& residues) {
  LogFoliationSpec spec;
  spec.normal_crossing = true;
  for (auto const& r : residues) {
    spec.components.push_back({1, parse_exponent(r, SymbolTable{})});
  }
  return spec;
}

}  // namespace

TEST_CASE("residue checks") {
  SymbolTable st;
  auto ok = validate_log_spec(lines({"1", "i", "-1 - i"}), st);
  CHECK_FALSE(ok.failure);
  CHECK(ok.notes.size() == 3);
  CHECK_THROWS_AS(validate_log_spec(lines({"1", "1", "1"}), st), InvalidInput);
  CHECK_THROWS_AS(validate_log_spec(lines({"1", "0", "-1"}), st), InvalidInput);
  CHECK(validate_log_spec(lines({"1", "-1"}), st).failure);
  CHECK(validate_log_spec(lines({"1", "2", "-3"}), st).failure);
}

TEST_CASE("symbolic residues need an assertion when undecidable") {
  SymbolTable st({"s", "w"});
  LogFoliationSpec spec;
  spec.normal_crossing = true;
  spec.mode = ResidueMode::explicit_ratios;
  spec.components = {{1, parse_exponent("s", st)},
                     {1, parse_exponent("w", st)},
                     {1, parse_exponent("-s - w", st)}};
  CHECK(validate_log_spec(spec, st).failure);
  spec.ratios_not_negative_real = true;
  CHECK_FALSE(validate_log_spec(spec, st).failure);
}

TEST_CASE("component holonomy") {
  auto spec = lines({"1", "i", "1 + 2*i", "-2 - 3*i"});
  auto rep = component_holonomy(spec, 1);
  CHECK(rep.surface().genus() == 0);
  CHECK(rep.surface().punctures() == 3);
  CHECK(std::get<CircleElement>(rep.image(rep.surface().c(1))).exponent() ==
        ExponentScalar(Rational(0), Rational(1)));
  LogFoliationSpec conic;
  conic.normal_crossing = true;
  conic.components = {{2, parse_exponent("1", SymbolTable{})},
                      {1, parse_exponent("i", SymbolTable{})},
                      {1, parse_exponent("-2 - i", SymbolTable{})}};
  auto c = component_holonomy(conic, 1);
  CHECK(c.surface().genus() == 0);
  CHECK(c.surface().punctures() == 4);
  LogFoliationSpec cubic = conic;
  cubic.components[0].degree = 3;
  cubic.components[2].residue = parse_exponent("-3 - i", SymbolTable{});
  CHECK(component_holonomy(cubic, 1).surface().genus() == 1);
}

TEST_CASE("logarithmic decision tree") {
  SymbolTable st;
  CHECK(classify_logarithmic(lines({"1", "i", "-1 - i"}), st).label == "plane_biholomorphic_to_C");
  auto four = classify_logarithmic(lines({"1", "i", "1 + 2*i", "-2 - 3*i"}), st);
  CHECK(four.label == "loch_ness_monster");
  CHECK(four.evidence["witness_status"] == "verified on component 1");
  CHECK_THROWS_AS(classify_logarithmic(lines({"2", "-2"}), st), InvalidInput);
  auto no_nc = lines({"1", "i", "-1 - i"});
  no_nc.normal_crossing = false;
  CHECK_THROWS_AS(classify_logarithmic(no_nc, st), InvalidInput);
}

TEST_CASE("homogeneous front-end") {
  SymbolTable st({"t", "u"});
  auto ex = [&](std::vector<std::string> const& v) {
    std::vector<ExponentScalar> out;
    for (auto const& s : v) {
      out.push_back(parse_exponent(s, st));
    }
    return out;
  };
  CHECK(classify_homogeneous(ex({"t", "1 - t"}), st).label == "plane");
  CHECK(classify_homogeneous(ex({"1/3", "2/3"}), st).label == "finite_cover{genus=0,punctures=2}");
  CHECK(classify_homogeneous(ex({"t", "1", "-t"}), st).label == "plane_minus_discrete");
  CHECK(classify_homogeneous(ex({"t", "1/2", "1/2 - t"}), st).label == "lnm_minus_discrete");
  CHECK(classify_homogeneous(ex({"t", "u", "1 - t - u"}), st).label == "loch_ness_monster");
}

TEST_CASE("riccati front-end") {
  auto v = classify_riccati(translation_rep());
  CHECK(v.label == "jacobs_ladder");
  CHECK(v.caveats.size() == 1);
  auto j = to_json(v);
  CHECK(j.contains("theorem_route"));
  CHECK(j.contains("computational_evidence"));
  SymbolTable st({"t"});
  CHECK_THROWS_AS(classify_riccati(circle_rep(0, 2, {"t", "-t"}, st)), InvalidInput);
}
