#ifndef ALEXFOAM_EVAL_HPP
#define ALEXFOAM_EVAL_HPP

#include <utility>
#include <vector>

#include "alexfoam/linalg.hpp"
#include "alexfoam/qalg.hpp"
#include "alexfoam/vinyl.hpp"

namespace alexfoam {

// dot exponents, one per label-1 segment of a fixed graph
using Decoration = std::vector<int>;

inline int degree(const Decoration& d) {
	int s = 0;
	for (int e : d) s += e;
	return s;
}

// Constant term of the evaluation state sum. The sum is homogeneous of
// degree deg(d) - split_count, so it vanishes unless deg(d) = split_count,
// and is then a constant recovered exactly at the generic point X_i = i.
Rational eval_infty_constant(const VinylGraph& g, const Colorings& col, const Decoration& d);
Rational eval_infty_constant(const VinylGraph& g, const Decoration& d);

// The raw state sum at an arbitrary point with distinct coordinates
// (property-test hook for generic-point independence).
Rational eval_infty_at(const VinylGraph& g, const Colorings& col, const Decoration& d,
                       const std::vector<Rational>& X);

Rational pair_gl1(const VinylGraph& g, const Colorings& col, const Decoration& d1,
                  const Decoration& d2);
// gl0 pairing: gl1 pairing with k-1 extra dots on the marked segment
Rational pair_gl0(const VinylGraph& g, const Colorings& col, const Decoration& d1,
                  const Decoration& d2);

// Bulk Gram-block fill: entry (i,j) = pairing of rows[i] and cols[j] with the
// extra decoration added (the marked-edge insertion). OpenMP-parallel over
// entries; Kernel::Serial is the reference path.
Matrix gram_block(const VinylGraph& g, const Colorings& col,
                  const std::vector<Decoration>& rows, const std::vector<Decoration>& cols,
                  const Decoration& extra, Kernel kernel = Kernel::Parallel);

struct RootedTree {
	int n = 1;
	int root = 0;
	std::vector<std::pair<int, int>> edges;  // directed
};

// sum over bijections of prod_{v != root} X_{phi(v)} / prod_{a->b} (X_a - X_b),
// evaluated at X_i = i; always an integer
Rational tree_eval(const RootedTree& t, int k);

}  // namespace alexfoam

#endif
