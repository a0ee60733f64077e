#include "alexfoam/qalg.hpp"

#include <sstream>

namespace alexfoam {

std::string rat_str(const Rational& r) { return r.get_str(); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
	for (const auto& [e, v] : o.c_) {
		Rational& c = c_[e];
		c += v;
		if (c == 0) c_.erase(e);
	}
	return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
	for (const auto& [e, v] : o.c_) {
		Rational& c = c_[e];
		c -= v;
		if (c == 0) c_.erase(e);
	}
	return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
	LaurentPoly r;
	for (const auto& [e1, v1] : c_)
		for (const auto& [e2, v2] : o.c_) {
			Rational& c = r.c_[e1 + e2];
			c += v1 * v2;
			if (c == 0) r.c_.erase(e1 + e2);
		}
	return r;
}

LaurentPoly LaurentPoly::operator-() const {
	LaurentPoly r;
	for (const auto& [e, v] : c_) r.c_[e] = -v;
	return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
	LaurentPoly r;
	for (const auto& [k, v] : c_) r.c_[k + e] = v;
	return r;
}

LaurentPoly LaurentPoly::subst_power(int m) const {
	LaurentPoly r;
	for (const auto& [k, v] : c_) r.c_[k * m] = v;
	return r;
}

LaurentPoly LaurentPoly::reciprocal() const { return subst_power(-1); }

Rational LaurentPoly::at_one() const {
	Rational s = 0;
	for (const auto& [e, v] : c_) s += v;
	return s;
}

bool LaurentPoly::try_divide(const LaurentPoly& num, const LaurentPoly& den,
                             LaurentPoly& quot) {
	quot = LaurentPoly();
	if (den.is_zero()) return false;
	if (num.is_zero()) return true;
	// normalize to ordinary polynomials (min exponent 0) and long-divide;
	// the overall q-shift is reattached at the end
	const int shift = num.min_exp() - den.min_exp();
	LaurentPoly rem = num.shifted(-num.min_exp());
	LaurentPoly d = den.shifted(-den.min_exp());
	const int dlead = d.max_exp();
	const Rational dc = d.coeff(dlead);
	LaurentPoly q;
	while (!rem.is_zero() && rem.max_exp() >= dlead) {
		LaurentPoly t = mono(rem.coeff(rem.max_exp()) / dc, rem.max_exp() - dlead);
		q += t;
		rem -= t * d;
	}
	if (!rem.is_zero()) return false;
	quot = q.shifted(shift);
	return true;
}

std::string LaurentPoly::str(const std::string& var) const {
	if (c_.empty()) return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [e, v] : c_) {
		Rational a = v;
		if (first) {
			if (a < 0) {
				os << "-";
				a = -a;
			}
		} else {
			os << (a < 0 ? " - " : " + ");
			if (a < 0) a = -a;
		}
		if (e == 0) {
			os << rat_str(a);
		} else {
			if (a != 1) os << rat_str(a);
			os << var;
			if (e != 1) os << "^" << e;
		}
		first = false;
	}
	return os.str();
}

LaurentPoly qint(int n) {
	if (n < 0) throw std::invalid_argument("qint: n must be >= 0");
	LaurentPoly p;
	for (int e = n - 1; e >= -(n - 1); e -= 2) p += LaurentPoly::var(e);
	return p;
}

LaurentPoly qfact(int n) {
	LaurentPoly p{Rational(1)};
	for (int i = 2; i <= n; ++i) p = p * qint(i);
	return p;
}

LaurentPoly qbinom(int n, int a) {
	if (n < 0 || a < 0) throw std::invalid_argument("qbinom: negative argument");
	if (a > n) return LaurentPoly();
	LaurentPoly quot;
	bool ok = LaurentPoly::try_divide(qfact(n), qfact(a) * qfact(n - a), quot);
	if (!ok) throw std::logic_error("qbinom: division not exact");
	return quot;
}

LaurentPoly pell(int n) {
	if (n < 0) throw std::invalid_argument("pell: n must be >= 0");
	LaurentPoly p0{Rational(1)};
	if (n == 0) return p0;
	LaurentPoly p1 = qint(2);
	for (int i = 1; i < n; ++i) {
		LaurentPoly next = qint(2) * p1 + p0;
		p0 = p1;
		p1 = next;
	}
	return p1;
}

void BiGradedPoly::add(int t, int q, const Rational& c) {
	Key k{t, q};
	Rational& v = c_[k];
	v += c;
	if (v == 0) c_.erase(k);
}

LaurentPoly BiGradedPoly::at_t_sign(int sign) const {
	LaurentPoly r;
	for (const auto& [k, v] : c_) {
		Rational c = v;
		if (sign < 0 && (k.first % 2 != 0)) c = -c;
		r += LaurentPoly::mono(c, k.second);
	}
	return r;
}

std::string BiGradedPoly::str() const {
	if (c_.empty()) return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [k, v] : c_) {
		Rational a = v;
		if (first) {
			if (a < 0) {
				os << "-";
				a = -a;
			}
		} else {
			os << (a < 0 ? " - " : " + ");
			if (a < 0) a = -a;
		}
		const auto [te, qe] = k;
		std::string body;
		if (te != 0) {
			body += "t";
			if (te != 1) body += "^" + std::to_string(te);
		}
		if (qe != 0) {
			if (!body.empty()) body += " ";
			body += "q";
			if (qe != 1) body += "^" + std::to_string(qe);
		}
		if (body.empty()) {
			os << rat_str(a);
		} else {
			if (a != 1) os << rat_str(a);
			os << body;
		}
		first = false;
	}
	return os.str();
}

}  // namespace alexfoam
