#ifndef ALEXFOAM_VINYL_HPP
#define ALEXFOAM_VINYL_HPP

#include <cstdint>
#include <vector>

#include "alexfoam/braid.hpp"
#include "alexfoam/qalg.hpp"

namespace alexfoam {

// Annular slice-word graph on k strands. Slice t sits between interval
// level (t-1 mod LV) below and level t above; level LV-1 is the closure
// region (both bottom and top boundary). Label-1 segments are the classes
// of strand intervals glued across non-dumble positions.
struct VinylGraph {
	int level = 1;            // k
	std::vector<int> slices;  // 0 = identity slice, p >= 1 = dumble at strands (p, p+1)

	// derived
	int LV = 1;                         // number of interval levels (max(#slices, 1))
	std::vector<std::vector<int>> seg;  // seg[h][p-1] = segment id of interval (h, p)
	int nsegs = 0;
	struct Dumble {
		int slice = 0, pos = 0;          // slice index, strand pair (pos, pos+1)
		int sw = 0, se = 0, nw = 0, ne = 0;  // adjacent label-1 segments
	};
	std::vector<Dumble> dumbles;
	int mark_level = 0, mark_pos = 1;  // interval carrying the base point
	int marked_seg = 0;
	bool connected = true;
	int depth = 0;  // labels crossing the base-point ray beyond the mark

	int split_count() const { return int(dumbles.size()); }
};

// resolve a marked closure at the given state (one bit per crossing):
// positive crossing bit 0 -> dumble, bit 1 -> smoothing; negative reversed
VinylGraph resolve(const MarkedClosure& c, const std::vector<int>& state);

// build directly from a slice word with a mark at interval (mark_level, mark_pos)
VinylGraph make_graph(int k, const std::vector<int>& slices, int mark_level, int mark_pos);

// The depth-one reference graph: a staircase of k-n-1 single dumbles followed
// by n doubled positions (all lower ones, then all upper ones), closed up,
// marked on the bottom interval of strand k-1. ebot/etop index into dumbles.
struct PiknGraph {
	VinylGraph g;
	std::vector<int> ebot, etop;  // dumble indices for pairs i=1..n
};
PiknGraph make_pikn(int k, int n);

struct GraphStats {
	int level = 0;
	int split_count = 0;
	bool connected = false;
	int depth_of_mark = 0;
};
GraphStats graph_stats(const VinylGraph& g);

// all omnichrome colorings, with the split-denominator evaluated at the
// generic point X_i = i
struct Colorings {
	int k = 1;
	std::vector<std::vector<uint8_t>> pigment;  // per coloring: pigment of each segment
	std::vector<long long> qhat;                // per coloring: product over dumbles of (X_nw - X_ne)
	size_t size() const { return pigment.size(); }
};
Colorings enumerate_colorings(const VinylGraph& g);

}  // namespace alexfoam

#endif
