#ifndef ALEXFOAM_CHAIN_HPP
#define ALEXFOAM_CHAIN_HPP

#include <map>
#include <utility>
#include <vector>

#include "alexfoam/braid.hpp"
#include "alexfoam/statespace.hpp"

namespace alexfoam {

// Cube of resolutions of a marked closure. State bit x resolves crossing x:
// a positive crossing opens to a dumble on bit 0 and smooths on bit 1, a
// negative crossing the other way round, so every bit flip 0 -> 1 raises the
// homological degree t = |s| - n_minus by one. Edge maps are unzip (positive
// crossings) or zip (negative crossings) with Koszul signs in word order.
struct ResolutionCube {
	MarkedClosure closure;
	int L = 0;        // number of crossings
	int n_minus = 0;  // negative crossings

	std::vector<QuotientSpace> spaces;  // indexed by state bitmask

	struct Edge {
		unsigned from = 0, to = 0;  // to = from | (1 << crossing)
		int crossing = 0;
		int sign = 1;
		LinearMap map;
	};
	std::vector<Edge> edges;

	int tdeg(unsigned s) const { return __builtin_popcount(s) - n_minus; }
	// global q shift of a state; edge maps carry qshift +1 so total q-degree
	// qdeg(element) + qshift(state) is preserved by the differential
	int qshift(unsigned s) const { return n_minus - __builtin_popcount(s); }
	int tmin() const { return -n_minus; }
	int tmax() const { return L - n_minus; }
};

ResolutionCube build_cube(const MarkedClosure& c, Kernel kernel = Kernel::Parallel);

// the full differential out of homological degree t, all q-degrees at once
Matrix total_differential(const ResolutionCube& cube, int t);

bool check_d2(const ResolutionCube& cube);

struct HomologyResult {
	std::map<std::pair<int, int>, long> betti;  // (t, q) -> dimension
	BiGradedPoly poincare;
	int tmin = 0;
	std::vector<long> vertex_dims;  // total chain dimension at t = tmin + i
	std::vector<long> diff_ranks;   // rank of the differential out of t = tmin + i
};

HomologyResult homology(const ResolutionCube& cube, Kernel kernel = Kernel::Parallel);

// graded Euler characteristic, q variable
LaurentPoly euler(const HomologyResult& h);

}  // namespace alexfoam

#endif
