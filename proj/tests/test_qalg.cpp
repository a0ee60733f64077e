#include <doctest.h>

#include "alexfoam/qalg.hpp"

using namespace alexfoam;

TEST_CASE("quantum integers") {
	CHECK(qint(0) == LaurentPoly());
	CHECK(qint(1) == LaurentPoly(Rational(1)));
	CHECK(qint(2) == LaurentPoly::var(1) + LaurentPoly::var(-1));
	// [3] = q^2 + 1 + q^-2
	LaurentPoly three = LaurentPoly::var(2) + LaurentPoly(Rational(1)) + LaurentPoly::var(-2);
	CHECK(qint(3) == three);
	CHECK(qint(4).at_one() == 4);
	CHECK(qint(5).symmetric());
}

TEST_CASE("quantum binomials") {
	CHECK(qbinom(4, 0) == LaurentPoly(Rational(1)));
	CHECK(qbinom(2, 3) == LaurentPoly());  // a > n
	CHECK(qbinom(4, 2).at_one() == 6);
	CHECK(qbinom(4, 2) == qbinom(4, 2).reciprocal());
	// [4 choose 1] = [4]
	CHECK(qbinom(4, 1) == qint(4));
}

TEST_CASE("pell ladder") {
	CHECK(pell(0) == LaurentPoly(Rational(1)));
	CHECK(pell(1) == qint(2));
	// p2 = [2] p1 + p0 = q^2 + 3 + q^-2
	LaurentPoly p2 = LaurentPoly::var(2) + LaurentPoly(Rational(3)) + LaurentPoly::var(-2);
	CHECK(pell(2) == p2);
	CHECK(pell(2) == qint(2) * pell(1) + pell(0));
	CHECK(pell(7) == qint(2) * pell(6) + pell(5));
	// integer Pell numbers at q = 1: 1, 2, 5, 12, 29, ...
	CHECK(pell(4).at_one() == 29);
	CHECK(pell(6).symmetric());
}

TEST_CASE("laurent arithmetic") {
	LaurentPoly a = LaurentPoly::var(2) - LaurentPoly(Rational(1));
	LaurentPoly b = LaurentPoly::var(1) + LaurentPoly(Rational(1));
	LaurentPoly q;
	CHECK(LaurentPoly::try_divide(a * b, b, q));
	CHECK(q == a);
	// division across Laurent shifts, including unit factors
	CHECK(LaurentPoly::try_divide(a.shifted(-3), b, q));
	CHECK(q == (LaurentPoly::var(1) - LaurentPoly(Rational(1))).shifted(-3));
	CHECK_FALSE(LaurentPoly::try_divide(a + LaurentPoly(Rational(1)), b, q));
	CHECK(a.subst_power(2) == LaurentPoly::var(4) - LaurentPoly(Rational(1)));
	CHECK(a.reciprocal() == LaurentPoly::var(-2) - LaurentPoly(Rational(1)));
}

TEST_CASE("laurent printing") {
	CHECK(LaurentPoly().str() == "0");
	LaurentPoly p = LaurentPoly::var(-2) + LaurentPoly(Rational(2)) + LaurentPoly::var(2);
	CHECK(p.str() == "q^-2 + 2 + q^2");
	LaurentPoly m = -LaurentPoly::var(1) + LaurentPoly(Rational(3));
	CHECK(m.str("t") == "3 - t");
	CHECK((LaurentPoly::var(1) * LaurentPoly::mono(Rational(-2), 0)).str() == "-2q");
}

TEST_CASE("bigraded printing") {
	BiGradedPoly p;
	p.add(0, 2, 1);
	p.add(1, 0, 1);
	p.add(2, -2, 1);
	CHECK(p.str() == "q^2 + t + t^2 q^-2");
	CHECK(p.at_t_sign(1) == LaurentPoly::var(2) + LaurentPoly(Rational(1)) + LaurentPoly::var(-2));
	CHECK(p.at_t_sign(-1) ==
	      LaurentPoly::var(2) - LaurentPoly(Rational(1)) + LaurentPoly::var(-2));
}
