#include "alexfoam/alexander.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace alexfoam {

namespace {

// dense (k-1) x (k-1) matrices over Laurent polynomials; these stay tiny
struct PolyMatrix {
	int n = 0;
	std::vector<LaurentPoly> a;

	explicit PolyMatrix(int n_) : n(n_), a(size_t(n_) * n_) {}
	LaurentPoly& at(int r, int c) { return a[size_t(r) * n + c]; }
	const LaurentPoly& at(int r, int c) const { return a[size_t(r) * n + c]; }

	static PolyMatrix identity(int n) {
		PolyMatrix m(n);
		for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(Rational(1));
		return m;
	}
	PolyMatrix operator*(const PolyMatrix& o) const {
		PolyMatrix r(n);
		for (int i = 0; i < n; ++i)
			for (int k = 0; k < n; ++k) {
				if (at(i, k).is_zero()) continue;
				for (int j = 0; j < n; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
			}
		return r;
	}
	PolyMatrix operator-(const PolyMatrix& o) const {
		PolyMatrix r(n);
		for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
		return r;
	}
};

LaurentPoly det(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
	if (rows.empty()) return LaurentPoly(Rational(1));
	LaurentPoly r;
	int sign = 1;
	const int top = rows.front();
	std::vector<int> sub_rows(rows.begin() + 1, rows.end());
	for (size_t j = 0; j < cols.size(); ++j) {
		const LaurentPoly& e = m.at(top, cols[j]);
		if (!e.is_zero()) {
			std::vector<int> sub_cols;
			for (size_t x = 0; x < cols.size(); ++x)
				if (x != j) sub_cols.push_back(cols[x]);
			LaurentPoly d = e * det(m, sub_rows, sub_cols);
			if (sign < 0) d = -d;
			r += d;
		}
		sign = -sign;
	}
	return r;
}

LaurentPoly det(const PolyMatrix& m) {
	std::vector<int> idx;
	for (int i = 0; i < m.n; ++i) idx.push_back(i);
	return det(m, idx, idx);
}

// Reduced Burau matrix of sigma_i^{sign} on k strands, acting on e_1..e_{k-1}.
// Columns hold images: sigma_i sends e_{i-1} -> e_{i-1} + t e_i, e_i -> -t e_i,
// e_{i+1} -> e_i + e_{i+1}; the negative block is the exact inverse.
PolyMatrix burau(int k, int i, int sign) {
	const int n = k - 1;
	PolyMatrix m = PolyMatrix::identity(n);
	const LaurentPoly one(Rational(1));
	const LaurentPoly t = LaurentPoly::var(1);
	const LaurentPoly tinv = LaurentPoly::var(-1);
	const int c = i - 1;  // row/column of e_i
	if (sign > 0) {
		m.at(c, c) = -t;
		if (c > 0) m.at(c, c - 1) = t;
		if (c + 1 < n) m.at(c, c + 1) = one;
	} else {
		m.at(c, c) = -tinv;
		if (c > 0) m.at(c, c - 1) = one;
		if (c + 1 < n) m.at(c, c + 1) = tinv;
	}
	return m;
}

}  // namespace

LaurentPoly alexander(const BraidWord& w) {
	if (!w.closure_is_knot())
		throw std::invalid_argument("alexander: multi-component link unsupported");
	const int k = w.strands;
	if (k == 1) return LaurentPoly(Rational(1));

	PolyMatrix rho = PolyMatrix::identity(k - 1);
	for (int l : w.letters) rho = rho * burau(k, std::abs(l), l > 0 ? 1 : -1);

	LaurentPoly d = det(PolyMatrix::identity(k - 1) - rho);
	LaurentPoly cyc;  // 1 + t + ... + t^{k-1}
	for (int i = 0; i < k; ++i) cyc += LaurentPoly::var(i);
	LaurentPoly delta;
	if (!LaurentPoly::try_divide(d, cyc, delta))
		throw std::logic_error("alexander: Burau determinant not divisible");
	if (delta.is_zero()) throw std::logic_error("alexander: vanishing determinant");

	// center the exponents, then fix the sign at t = 1
	const int c = delta.min_exp() + delta.max_exp();
	if (c % 2 != 0) throw std::logic_error("alexander: odd exponent spread");
	delta = delta.shifted(-c / 2);
	Rational one = delta.at_one();
	if (one == -1) delta = -delta;
	else if (one != 1)
		throw std::logic_error("alexander: normalization failed");
	return delta;
}

LaurentPoly alexander_q(const BraidWord& w) { return alexander(w).subst_power(2); }

}  // namespace alexfoam
