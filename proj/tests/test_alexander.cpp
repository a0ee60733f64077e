#include <doctest.h>

#include "alexfoam/alexander.hpp"

using namespace alexfoam;

namespace {

LaurentPoly sym3(long outer, long mid) {
	// a t^-1 + b + a t
	return LaurentPoly::mono(Rational(outer), -1) + LaurentPoly(Rational(mid)) +
	       LaurentPoly::mono(Rational(outer), 1);
}

}  // namespace

TEST_CASE("alexander of small knots") {
	// unknot, three presentations
	CHECK(alexander(BraidWord{1, {}}) == LaurentPoly(Rational(1)));
	CHECK(alexander(BraidWord{2, {1}}) == LaurentPoly(Rational(1)));
	CHECK(alexander(BraidWord{2, {-1}}) == LaurentPoly(Rational(1)));
	CHECK(alexander(BraidWord{2, {1, 1, -1}}) == LaurentPoly(Rational(1)));

	// trefoil: t - 1 + t^-1, both presentations and the mirror
	CHECK(alexander(BraidWord{2, {1, 1, 1}}) == sym3(1, -1));
	CHECK(alexander(BraidWord{3, {1, 2, 1, 2}}) == sym3(1, -1));
	CHECK(alexander(BraidWord{2, {-1, -1, -1}}) == sym3(1, -1));

	// figure eight: -t + 3 - t^-1
	CHECK(alexander(BraidWord{3, {1, -2, 1, -2}}) == sym3(-1, 3));

	// 5_2: 2t - 3 + 2 t^-1
	CHECK(alexander(BraidWord{3, {1, 1, 1, 2, -1, 2}}) == sym3(2, -3));

	// torus knot T(2,5): t^2 - t + 1 - t^-1 + t^-2
	LaurentPoly t25 = LaurentPoly::var(2) - LaurentPoly::var(1) + LaurentPoly(Rational(1)) -
	                  LaurentPoly::var(-1) + LaurentPoly::var(-2);
	CHECK(alexander(BraidWord{2, {1, 1, 1, 1, 1}}) == t25);
}

TEST_CASE("normalization invariants") {
	for (auto w : {BraidWord{2, {1, 1, 1}}, BraidWord{3, {1, -2, 1, -2}},
	               BraidWord{3, {1, 1, 1, 2, -1, 2}}}) {
		LaurentPoly d = alexander(w);
		CHECK(d.symmetric());
		CHECK(d.at_one() == 1);
	}
}

TEST_CASE("links are rejected") {
	CHECK_THROWS_AS(alexander(BraidWord{3, {1}}), std::invalid_argument);
	CHECK_THROWS_AS(alexander(BraidWord{2, {1, 1}}), std::invalid_argument);
}

TEST_CASE("q substitution") {
	LaurentPoly a = alexander_q(BraidWord{2, {1, 1, 1}});
	// q^2 - 1 + q^-2
	CHECK(a == LaurentPoly::var(2) - LaurentPoly(Rational(1)) + LaurentPoly::var(-2));
}
