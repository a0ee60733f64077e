#ifndef ALEXFOAM_LINALG_HPP
#define ALEXFOAM_LINALG_HPP

#include <vector>

#include "alexfoam/qalg.hpp"

namespace alexfoam {

// which elimination kernel to run; Serial is the reference implementation
// used to cross-check the OpenMP one
enum class Kernel { Serial, Parallel };

struct Matrix {
	int rows = 0, cols = 0;
	std::vector<Rational> a;

	Matrix() = default;
	Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Rational(0)) {}

	Rational& operator()(int r, int c) { return a[size_t(r) * cols + c]; }
	const Rational& operator()(int r, int c) const { return a[size_t(r) * cols + c]; }

	static Matrix identity(int n);
	Matrix transpose() const;
	Matrix operator*(const Matrix& o) const;
	Matrix operator+(const Matrix& o) const;
	Matrix operator-(const Matrix& o) const;
	Matrix operator-() const;
	bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
	bool is_zero() const;
};

// rank by fraction-free (Bareiss) elimination after clearing denominators
long rank(const Matrix& m, Kernel kernel = Kernel::Parallel);

// Gauss-Jordan inverse; throws std::runtime_error when singular
Matrix inverse(const Matrix& m);

// solve A X = B with A square invertible
Matrix solve(const Matrix& A, const Matrix& B);

// right null space of A: columns form a basis of {x : A x = 0}
Matrix nullspace(const Matrix& A);

// Greedy maximal invertible submatrix. Rows are scanned in index order and
// within each row columns in index order; the first nonzero residual entry
// becomes the next pivot. Deterministic.
void select_invertible(const Matrix& m, std::vector<int>& rows_out,
                       std::vector<int>& cols_out);

// Greedy maximal invertible principal submatrix of a symmetric matrix.
// Grows by one index when some residual diagonal entry is nonzero, else by a
// hyperbolic pair (zero diagonal, nonzero off-diagonal has determinant -s^2).
std::vector<int> select_principal_invertible(const Matrix& m);

}  // namespace alexfoam

#endif
