#ifndef ALEXFOAM_STATESPACE_HPP
#define ALEXFOAM_STATESPACE_HPP

#include <memory>
#include <vector>

#include "alexfoam/domino.hpp"
#include "alexfoam/eval.hpp"
#include "alexfoam/linalg.hpp"
#include "alexfoam/vinyl.hpp"

namespace alexfoam {

// State space of a marked vinyl graph: decorations modulo the radical of the
// gl0 pairing, with a basis picked degree by degree against the complementary
// dot degree. B = split_count - (level - 1); a basis decoration of dot degree
// d sits in q-degree 2d - B. B = -1 flags the zero space (disconnected graph).
struct QuotientSpace {
	std::shared_ptr<const VinylGraph> graph;
	std::shared_ptr<const Colorings> col;
	int B = -1;
	std::vector<Decoration> basis;
	std::vector<int> deg;
	std::vector<int> qdeg;
	std::vector<std::vector<int>> basis_at;  // per dot degree 0..B: global basis indices
	std::vector<Matrix> invA;  // per degree d: inverse of [pair(basis_d[j], basis_{B-d}[i])]_{ij}
	Matrix gram;               // full pairing matrix on the basis
	LaurentPoly graded_dim;

	int dim() const { return int(basis.size()); }
};

struct LinearMap {
	int qshift = 0;
	Matrix m;  // dim(target) x dim(source)
};

// all monomial decorations with per-segment exponent <= k-1 and total degree
// <= split_count - (k-1); ordered by degree then lexicographically
std::vector<Decoration> spanning_set(const VinylGraph& g);

QuotientSpace state_space(const VinylGraph& g, Kernel kernel = Kernel::Parallel);

// coordinates of the class of a decoration (exponents >= k collapse to 0)
std::vector<Rational> express(const QuotientSpace& sp, const Decoration& d);

Rational pair_vectors(const QuotientSpace& sp, const std::vector<Rational>& u,
                      const std::vector<Rational>& v);

std::vector<Rational> apply(const Matrix& m, const std::vector<Rational>& v);

LinearMap dot_operator(const QuotientSpace& sp, int segment);
LinearMap ve_operator(const QuotientSpace& sp, int dumble_index);
LinearMap se_operator(const QuotientSpace& sp, int dumble_index);

// decoration transport along the splitting cobordism: the dumble at slice
// `slice_idx` of src's graph opens into two parallel strands in tgt's graph
LinearMap unzip_map(const QuotientSpace& src, const QuotientSpace& tgt, int slice_idx);

// Gram-adjoint of the corresponding unzip
LinearMap zip_map(const QuotientSpace& src, const QuotientSpace& tgt, int slice_idx);

// x(s) (side top) / y(s) (side bottom) vectors on the reference graph
std::vector<Rational> domino_vector(const QuotientSpace& sp, const PiknGraph& pg,
                                    const DominoConfig& s, bool top);

}  // namespace alexfoam

#endif
