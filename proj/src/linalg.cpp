#include "alexfoam/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace alexfoam {

Matrix Matrix::identity(int n) {
	Matrix m(n, n);
	for (int i = 0; i < n; ++i) m(i, i) = 1;
	return m;
}

Matrix Matrix::transpose() const {
	Matrix m(cols, rows);
	for (int i = 0; i < rows; ++i)
		for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
	return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
	if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
	Matrix m(rows, o.cols);
	for (int i = 0; i < rows; ++i)
		for (int k = 0; k < cols; ++k) {
			const Rational& v = (*this)(i, k);
			if (v == 0) continue;
			for (int j = 0; j < o.cols; ++j) m(i, j) += v * o(k, j);
		}
	return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
	Matrix m(rows, cols);
	for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
	return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
	Matrix m(rows, cols);
	for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] - o.a[i];
	return m;
}

Matrix Matrix::operator-() const {
	Matrix m(rows, cols);
	for (size_t i = 0; i < a.size(); ++i) m.a[i] = -a[i];
	return m;
}

bool Matrix::is_zero() const {
	for (const Rational& v : a)
		if (v != 0) return false;
	return true;
}

long rank(const Matrix& m, Kernel kernel) {
	const int R = m.rows, C = m.cols;
	if (R == 0 || C == 0) return 0;
	// clear denominators row-wise so Bareiss runs on integers
	std::vector<mpz_class> w(size_t(R) * C);
	for (int i = 0; i < R; ++i) {
		mpz_class l = 1;
		for (int j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
		for (int j = 0; j < C; ++j) {
			mpq_class v = m(i, j) * Rational(l);
			w[size_t(i) * C + j] = v.get_num();
		}
	}
	auto at = [&](int i, int j) -> mpz_class& { return w[size_t(i) * C + j]; };
	long r = 0;
	mpz_class prev = 1;
	for (int c = 0; c < C && r < R; ++c) {
		int piv = -1;
		for (int i = r; i < R; ++i)
			if (at(i, c) != 0) {
				piv = i;
				break;
			}
		if (piv < 0) continue;
		if (piv != r)
			for (int j = c; j < C; ++j) std::swap(at(piv, j), at(r, j));
		const mpz_class p = at(r, c);
		const bool par = (kernel == Kernel::Parallel);
#pragma omp parallel for schedule(dynamic) if (par)
		for (int i = r + 1; i < R; ++i) {
			if (at(i, c) == 0) {
				for (int j = c + 1; j < C; ++j) {
					mpz_class t = at(i, j) * p;
					mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
				}
				continue;
			}
			const mpz_class f = at(i, c);
			for (int j = c + 1; j < C; ++j) {
				mpz_class t = at(i, j) * p - f * at(r, j);
				mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
			}
			at(i, c) = 0;
		}
		prev = p;
		++r;
	}
	return r;
}

Matrix inverse(const Matrix& m) {
	if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
	const int n = m.rows;
	Matrix A = m, I = Matrix::identity(n);
	for (int c = 0; c < n; ++c) {
		int piv = -1;
		for (int i = c; i < n; ++i)
			if (A(i, c) != 0) {
				piv = i;
				break;
			}
		if (piv < 0) throw std::runtime_error("inverse: singular matrix");
		if (piv != c)
			for (int j = 0; j < n; ++j) {
				std::swap(A(piv, j), A(c, j));
				std::swap(I(piv, j), I(c, j));
			}
		Rational p = A(c, c);
		for (int j = 0; j < n; ++j) {
			A(c, j) /= p;
			I(c, j) /= p;
		}
		for (int i = 0; i < n; ++i) {
			if (i == c || A(i, c) == 0) continue;
			Rational f = A(i, c);
			for (int j = 0; j < n; ++j) {
				A(i, j) -= f * A(c, j);
				I(i, j) -= f * I(c, j);
			}
		}
	}
	return I;
}

Matrix solve(const Matrix& A, const Matrix& B) { return inverse(A) * B; }

Matrix nullspace(const Matrix& A) {
	const int R = A.rows, C = A.cols;
	Matrix M = A;
	std::vector<int> pivcol;
	int r = 0;
	for (int c = 0; c < C && r < R; ++c) {
		int piv = -1;
		for (int i = r; i < R; ++i)
			if (M(i, c) != 0) {
				piv = i;
				break;
			}
		if (piv < 0) continue;
		if (piv != r)
			for (int j = 0; j < C; ++j) std::swap(M(piv, j), M(r, j));
		Rational p = M(r, c);
		for (int j = 0; j < C; ++j) M(r, j) /= p;
		for (int i = 0; i < R; ++i) {
			if (i == r || M(i, c) == 0) continue;
			Rational f = M(i, c);
			for (int j = 0; j < C; ++j) M(i, j) -= f * M(r, j);
		}
		pivcol.push_back(c);
		++r;
	}
	std::vector<int> freecol;
	{
		size_t pi = 0;
		for (int c = 0; c < C; ++c) {
			if (pi < pivcol.size() && pivcol[pi] == c)
				++pi;
			else
				freecol.push_back(c);
		}
	}
	Matrix N(C, int(freecol.size()));
	for (size_t f = 0; f < freecol.size(); ++f) {
		N(freecol[f], int(f)) = 1;
		for (size_t i = 0; i < pivcol.size(); ++i) N(pivcol[i], int(f)) = -M(int(i), freecol[f]);
	}
	return N;
}

void select_invertible(const Matrix& m, std::vector<int>& rows_out,
                       std::vector<int>& cols_out) {
	rows_out.clear();
	cols_out.clear();
	Matrix A = m;
	std::vector<bool> rused(m.rows, false), cused(m.cols, false);
	for (;;) {
		int pr = -1, pc = -1;
		for (int i = 0; i < m.rows && pr < 0; ++i) {
			if (rused[i]) continue;
			for (int j = 0; j < m.cols; ++j) {
				if (cused[j]) continue;
				if (A(i, j) != 0) {
					pr = i;
					pc = j;
					break;
				}
			}
		}
		if (pr < 0) break;
		rows_out.push_back(pr);
		cols_out.push_back(pc);
		rused[pr] = true;
		cused[pc] = true;
		const Rational p = A(pr, pc);
		for (int i = 0; i < m.rows; ++i) {
			if (rused[i] || A(i, pc) == 0) continue;
			Rational f = A(i, pc) / p;
			for (int j = 0; j < m.cols; ++j) {
				if (cused[j]) continue;
				A(i, j) -= f * A(pr, j);
			}
		}
	}
}

std::vector<int> select_principal_invertible(const Matrix& m) {
	const int n = m.rows;
	Matrix S = m;
	std::vector<bool> used(n, false);
	std::vector<int> sel;
	auto eliminate_one = [&](int i) {
		const Rational p = S(i, i);
		for (int u = 0; u < n; ++u) {
			if (used[u] || u == i || S(u, i) == 0) continue;
			Rational f = S(u, i) / p;
			for (int v = 0; v < n; ++v) {
				if (used[v] || v == i) continue;
				S(u, v) -= f * S(i, v);
			}
		}
	};
	auto eliminate_pair = [&](int i, int j) {
		// residual diagonal is zero here, so the 2x2 block is [[0,s],[s,0]]
		const Rational s = S(i, j);
		std::vector<Rational> coli(n), colj(n);
		for (int u = 0; u < n; ++u) {
			coli[u] = S(u, i);
			colj[u] = S(u, j);
		}
		for (int u = 0; u < n; ++u) {
			if (used[u] || u == i || u == j) continue;
			for (int v = 0; v < n; ++v) {
				if (used[v] || v == i || v == j) continue;
				S(u, v) -= (coli[u] * S(j, v) + colj[u] * S(i, v)) / s;
			}
		}
	};
	for (;;) {
		int one = -1;
		for (int i = 0; i < n; ++i)
			if (!used[i] && S(i, i) != 0) {
				one = i;
				break;
			}
		if (one >= 0) {
			eliminate_one(one);
			used[one] = true;
			sel.push_back(one);
			continue;
		}
		int pi = -1, pj = -1;
		for (int i = 0; i < n && pi < 0; ++i) {
			if (used[i]) continue;
			for (int j = i + 1; j < n; ++j) {
				if (used[j]) continue;
				if (S(i, j) != 0) {
					pi = i;
					pj = j;
					break;
				}
			}
		}
		if (pi < 0) break;
		eliminate_pair(pi, pj);
		used[pi] = used[pj] = true;
		sel.push_back(pi);
		sel.push_back(pj);
	}
	std::sort(sel.begin(), sel.end());
	return sel;
}

}  // namespace alexfoam
