#include <doctest.h>

#include "leaftype/error.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("rational circle elements have the reduced denominator as order") {
  CHECK(element_order(CircleElement(ExponentScalar(Rational(1, 2)))) == ElementOrder::finite(2));
  CHECK(element_order(CircleElement(ExponentScalar(Rational(4, 6)))) == ElementOrder::finite(3));
  CHECK(element_order(CircleElement(ExponentScalar(Rational(5)))) == ElementOrder::finite(1));
  SymbolTable st({"t"});
  CHECK(element_order(CircleElement(parse_exponent("t", st))).kind ==
        ElementOrder::Kind::infinite);
  CHECK(element_order(CircleElement(parse_exponent("i", st))).kind ==
        ElementOrder::Kind::infinite);
}

TEST_CASE("moebius orders from the trace invariant") {
  CHECK(element_order(mat(1, 1, 0, 1)).kind == ElementOrder::Kind::infinite);
  CHECK(element_order(mat(0, -1, 1, 0)) == ElementOrder::finite(2));
  CHECK(element_order(mat(0, -1, 1, 1)) == ElementOrder::finite(3));
  CHECK(element_order(mat(1, -1, 1, 2)) == ElementOrder::finite(6));
  CHECK(element_order(mat(0, -1, 1, -1)) == ElementOrder::finite(3));
  CHECK(element_order(mat(1, -1, 1, 1)) == ElementOrder::finite(4));
  CHECK(element_order(mat(2, 0, 0, 1)).kind == ElementOrder::Kind::infinite);
  CHECK(element_order(MoebiusElement()) == ElementOrder::finite(1));
}

TEST_CASE("scalar matrices are the identity in PSL") {
  CHECK(is_identity(Element(mat(3, 0, 0, 3))));
  CHECK(element_key(Element(mat(2, 4, 0, 2))) == element_key(Element(mat(1, 2, 0, 1))));
}

TEST_CASE("commutator of the free parabolics is not the identity") {
  auto rep = free_parabolic_rep(3);
  auto const& s = rep.surface();
  auto w = commutator(generator_power(s, s.a(1), 1), generator_power(s, s.a(2), 1));
  auto e = std::get<MoebiusElement>(rep.evaluate(w));
  // e1 e2 e1^-1 e2^-1 by hand with x = 2
  auto e1 = mat(1, 2, 0, 1);
  auto e2 = mat(1, 0, 2, 1);
  CHECK(e == e1 * e2 * e1.inverse() * e2.inverse());
  CHECK_FALSE(e.is_identity());
}

TEST_CASE("ping-pong certificate needs |x| >= 2") {
  CHECK(ping_pong_free_certificate(mat(1, 2, 0, 1), mat(1, 0, 2, 1)));
  CHECK_FALSE(ping_pong_free_certificate(mat(1, 1, 0, 1), mat(1, 0, 1, 1)));
}

TEST_CASE("abelian structure of circle images") {
  SymbolTable st({"t", "u"});
  CHECK(abelian_structure(circle_rep(0, 3, {"t", "1", "-t"}, st)).free_rank == 1);
  auto two = abelian_structure(circle_rep(0, 3, {"t", "1/2", "1/2 - t"}, st));
  CHECK(two.free_rank == 1);
  CHECK(two.torsion == 2);
  CHECK(abelian_structure(circle_rep(0, 3, {"t", "u", "1 - t - u"}, st)).free_rank == 2);
  auto fin = abelian_structure(circle_rep(0, 3, {"1/4", "1/6", "-5/12"}, st));
  CHECK(fin.is_finite());
  CHECK(fin.torsion == 12);
}

TEST_CASE("relation violations are rejected") {
  SurfacePresentation s(0, 2);
  CHECK_THROWS_AS(Representation(s, {CircleElement(ExponentScalar(Rational(1, 3))),
                                     CircleElement(ExponentScalar(Rational(1, 3)))}),
                  InvalidInput);
  CHECK_THROWS_AS(Representation(s, {CircleElement(), PermElement({0, 1})}), InvalidInput);
}
