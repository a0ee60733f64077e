#include "alexfoam/vinyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace alexfoam {

namespace {

struct UnionFind {
	std::vector<int> p;
	explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
	int find(int x) {
		while (p[x] != x) x = p[x] = p[p[x]];
		return x;
	}
	void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

VinylGraph make_graph(int k, const std::vector<int>& slices, int mark_level, int mark_pos) {
	VinylGraph g;
	g.level = k;
	g.slices = slices;
	const int L = int(slices.size());
	g.LV = std::max(L, 1);
	const int LV = g.LV;

	auto iid = [&](int h, int p) { return h * k + (p - 1); };  // p is 1-based
	UnionFind uf(LV * k);
	for (int t = 0; t < L; ++t) {
		const int below = (t - 1 + LV) % LV, above = t;
		const int d = slices[t];
		for (int p = 1; p <= k; ++p) {
			if (d != 0 && (p == d || p == d + 1)) continue;
			uf.join(iid(below, p), iid(above, p));
		}
	}
	// number segments by their smallest interval (deterministic ids)
	std::vector<int> segid(LV * k, -1);
	g.nsegs = 0;
	for (int h = 0; h < LV; ++h)
		for (int p = 1; p <= k; ++p) {
			int r = uf.find(iid(h, p));
			if (segid[r] < 0) segid[r] = g.nsegs++;
		}
	g.seg.assign(LV, std::vector<int>(k));
	for (int h = 0; h < LV; ++h)
		for (int p = 1; p <= k; ++p) g.seg[h][p - 1] = segid[uf.find(iid(h, p))];

	for (int t = 0; t < L; ++t) {
		const int d = slices[t];
		if (d == 0) continue;
		VinylGraph::Dumble e;
		e.slice = t;
		e.pos = d;
		const int below = (t - 1 + LV) % LV, above = t;
		e.sw = g.seg[below][d - 1];
		e.se = g.seg[below][d];
		e.nw = g.seg[above][d - 1];
		e.ne = g.seg[above][d];
		g.dumbles.push_back(e);
	}

	g.mark_level = mark_level;
	g.mark_pos = mark_pos;
	g.marked_seg = g.seg[mark_level][mark_pos - 1];
	g.depth = k - mark_pos;

	// connectivity as a 1-complex: segments glued through dumbles
	UnionFind cc(g.nsegs);
	for (const auto& e : g.dumbles) {
		cc.join(e.sw, e.se);
		cc.join(e.sw, e.nw);
		cc.join(e.sw, e.ne);
	}
	int comps = 0;
	for (int s = 0; s < g.nsegs; ++s)
		if (cc.find(s) == s) ++comps;
	g.connected = (comps == 1);
	return g;
}

VinylGraph resolve(const MarkedClosure& c, const std::vector<int>& state) {
	const int k = c.word.strands;
	const int L = int(c.word.letters.size());
	if (int(state.size()) != L)
		throw std::invalid_argument("resolve: state length must match word length");
	std::vector<int> slices(L, 0);
	for (int t = 0; t < L; ++t) {
		const int l = c.word.letters[t];
		const bool dumble = (l > 0) ? (state[t] == 0) : (state[t] == 1);
		slices[t] = dumble ? std::abs(l) : 0;
	}
	const int LV = std::max(L, 1);
	const int mark_level = (c.bp_height == 0) ? LV - 1 : (c.bp_height - 1);
	return make_graph(k, slices, mark_level, c.bp_pos);
}

PiknGraph make_pikn(int k, int n) {
	if (!(n >= 0 && n < k)) throw std::invalid_argument("make_pikn: need 0 <= n < k");
	std::vector<int> slices;
	for (int j = 1; j <= k - n - 1; ++j) slices.push_back(j);
	for (int i = 1; i <= n; ++i) slices.push_back(k - n - 1 + i);  // lower of pair i
	for (int i = 1; i <= n; ++i) slices.push_back(k - n - 1 + i);  // upper of pair i
	const int LV = std::max(int(slices.size()), 1);
	const int mark_pos = (k >= 2) ? k - 1 : 1;
	PiknGraph pg;
	pg.g = make_graph(k, slices, LV - 1, mark_pos);
	const int singles = k - n - 1;
	for (int i = 1; i <= n; ++i) {
		pg.ebot.push_back(singles + i - 1);
		pg.etop.push_back(singles + n + i - 1);
	}
	return pg;
}

GraphStats graph_stats(const VinylGraph& g) {
	return GraphStats{g.level, g.split_count(), g.connected, g.depth};
}

Colorings enumerate_colorings(const VinylGraph& g) {
	const int k = g.level;
	Colorings out;
	out.k = k;
	const int L = int(g.slices.size());
	std::vector<uint8_t> seed(k);
	std::iota(seed.begin(), seed.end(), uint8_t(1));
	std::sort(seed.begin(), seed.end());
	do {
		// propagate bottom to top; branch on the two exits of each dumble
		std::vector<uint8_t> cur = seed;
		std::vector<uint8_t> pig(g.nsegs, 0);
		for (int p = 1; p <= k; ++p) pig[g.seg[(0 - 1 + g.LV) % g.LV][p - 1]] = cur[p - 1];
		long long q = 1;
		auto rec = [&](auto&& self, int t, long long qacc) -> void {
			if (t == L) {
				if (cur == seed) {
					out.pigment.push_back(pig);
					out.qhat.push_back(qacc);
				}
				return;
			}
			const int d = g.slices[t];
			if (d == 0) {
				std::vector<uint8_t> saved;
				for (int p = 1; p <= k; ++p) {
					int s = g.seg[t][p - 1];
					saved.push_back(pig[s]);
					pig[s] = cur[p - 1];
				}
				self(self, t + 1, qacc);
				for (int p = 1; p <= k; ++p) pig[g.seg[t][p - 1]] = saved[p - 1];
				return;
			}
			for (int swap_exit = 0; swap_exit < 2; ++swap_exit) {
				std::vector<uint8_t> nxt = cur;
				if (swap_exit) std::swap(nxt[d - 1], nxt[d]);
				std::vector<uint8_t> saved;
				std::vector<uint8_t> prev_cur = cur;
				cur = nxt;
				for (int p = 1; p <= k; ++p) {
					int s = g.seg[t][p - 1];
					saved.push_back(pig[s]);
					pig[s] = cur[p - 1];
				}
				long long qh = qacc * (static_cast<long long>(cur[d - 1]) - cur[d]);
				self(self, t + 1, qh);
				for (int p = 1; p <= k; ++p) pig[g.seg[t][p - 1]] = saved[p - 1];
				cur = prev_cur;
			}
		};
		if (L == 0) {
			out.pigment.push_back(pig);
			out.qhat.push_back(q);
		} else {
			rec(rec, 0, q);
		}
	} while (std::next_permutation(seed.begin(), seed.end()));
	return out;
}

}  // namespace alexfoam
