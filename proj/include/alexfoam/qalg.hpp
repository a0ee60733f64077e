#ifndef ALEXFOAM_QALG_HPP
#define ALEXFOAM_QALG_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace alexfoam {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator), which is exactly the invariant we need.
using Rational = mpq_class;

std::string rat_str(const Rational& r);

// Laurent polynomials in one variable with rational coefficients.
// The variable is only named at print time, so the same type serves
// for q (graded dimensions) and t (Alexander polynomials).
class LaurentPoly {
   public:
	LaurentPoly() = default;
	explicit LaurentPoly(const Rational& c) {
		if (c != 0) c_[0] = c;
	}
	static LaurentPoly mono(const Rational& c, int e) {
		LaurentPoly p;
		if (c != 0) p.c_[e] = c;
		return p;
	}
	static LaurentPoly var(int e = 1) { return mono(1, e); }

	const std::map<int, Rational>& terms() const { return c_; }
	bool is_zero() const { return c_.empty(); }
	Rational coeff(int e) const {
		auto it = c_.find(e);
		return it == c_.end() ? Rational(0) : it->second;
	}
	int min_exp() const { return c_.begin()->first; }
	int max_exp() const { return c_.rbegin()->first; }

	LaurentPoly& operator+=(const LaurentPoly& o);
	LaurentPoly& operator-=(const LaurentPoly& o);
	LaurentPoly operator+(const LaurentPoly& o) const {
		LaurentPoly r(*this);
		r += o;
		return r;
	}
	LaurentPoly operator-(const LaurentPoly& o) const {
		LaurentPoly r(*this);
		r -= o;
		return r;
	}
	LaurentPoly operator*(const LaurentPoly& o) const;
	LaurentPoly operator-() const;
	bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
	bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

	// multiply by q^e
	LaurentPoly shifted(int e) const;
	// q -> q^m (exponent scaling); used for t = q^2
	LaurentPoly subst_power(int m) const;
	// q -> q^{-1}
	LaurentPoly reciprocal() const;
	Rational at_one() const;
	bool symmetric() const { return *this == reciprocal(); }

	// exact division; returns false (and leaves quot empty) on nonzero remainder
	static bool try_divide(const LaurentPoly& num, const LaurentPoly& den,
	                       LaurentPoly& quot);

	std::string str(const std::string& var = "q") const;

   private:
	std::map<int, Rational> c_;
};

LaurentPoly qint(int n);
LaurentPoly qfact(int n);
LaurentPoly qbinom(int n, int a);
LaurentPoly pell(int n);

// Laurent polynomials in (t, q); Poincare polynomials of bigraded homology.
class BiGradedPoly {
   public:
	using Key = std::pair<int, int>;  // (t exponent, q exponent)

	BiGradedPoly() = default;
	void add(int t, int q, const Rational& c);
	const std::map<Key, Rational>& terms() const { return c_; }
	bool is_zero() const { return c_.empty(); }
	bool operator==(const BiGradedPoly& o) const { return c_ == o.c_; }
	bool operator!=(const BiGradedPoly& o) const { return !(*this == o); }

	// specialize t to +1/-1 (sign per t-degree), giving a poly in q
	LaurentPoly at_t_sign(int sign) const;

	std::string str() const;

   private:
	std::map<Key, Rational> c_;
};

}  // namespace alexfoam

#endif
