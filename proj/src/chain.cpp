#include "alexfoam/chain.hpp"

#include <stdexcept>

namespace alexfoam {

ResolutionCube build_cube(const MarkedClosure& c, Kernel kernel) {
	ResolutionCube cube;
	cube.closure = c;
	cube.L = int(c.word.letters.size());
	cube.n_minus = c.word.n_minus();
	if (cube.L > 20) throw std::invalid_argument("build_cube: too many crossings");

	const unsigned N = 1u << cube.L;
	cube.spaces.resize(N);
	for (unsigned s = 0; s < N; ++s) {
		std::vector<int> state(cube.L);
		for (int x = 0; x < cube.L; ++x) state[x] = int((s >> x) & 1u);
		cube.spaces[s] = state_space(resolve(c, state), kernel);
	}

	for (unsigned s = 0; s < N; ++s)
		for (int x = 0; x < cube.L; ++x) {
			if ((s >> x) & 1u) continue;
			ResolutionCube::Edge e;
			e.from = s;
			e.to = s | (1u << x);
			e.crossing = x;
			int ones = 0;
			for (int y = 0; y < x; ++y) ones += int((s >> y) & 1u);
			e.sign = (ones % 2 == 0) ? 1 : -1;
			const QuotientSpace& src = cube.spaces[e.from];
			const QuotientSpace& tgt = cube.spaces[e.to];
			if (c.word.letters[x] > 0)
				e.map = unzip_map(src, tgt, x);
			else
				e.map = zip_map(src, tgt, x);
			cube.edges.push_back(std::move(e));
		}
	return cube;
}

namespace {

// per state: offset of its basis inside the concatenated degree-t chain group
struct Layout {
	std::vector<long> offset;  // -1 for states of a different t
	long dim = 0;
};

Layout layout_at(const ResolutionCube& cube, int t) {
	Layout lay;
	lay.offset.assign(cube.spaces.size(), -1);
	for (unsigned s = 0; s < cube.spaces.size(); ++s) {
		if (cube.tdeg(s) != t) continue;
		lay.offset[s] = lay.dim;
		lay.dim += cube.spaces[s].dim();
	}
	return lay;
}

}  // namespace

Matrix total_differential(const ResolutionCube& cube, int t) {
	Layout src = layout_at(cube, t), tgt = layout_at(cube, t + 1);
	Matrix m(int(tgt.dim), int(src.dim));
	for (const auto& e : cube.edges) {
		if (cube.tdeg(e.from) != t) continue;
		const long ro = tgt.offset[e.to], co = src.offset[e.from];
		for (int i = 0; i < e.map.m.rows; ++i)
			for (int j = 0; j < e.map.m.cols; ++j)
				if (e.map.m(i, j) != 0) m(int(ro + i), int(co + j)) = e.sign * e.map.m(i, j);
	}
	return m;
}

bool check_d2(const ResolutionCube& cube) {
	for (int t = cube.tmin(); t + 1 < cube.tmax(); ++t) {
		Matrix a = total_differential(cube, t);
		Matrix b = total_differential(cube, t + 1);
		if (a.rows == 0 || b.rows == 0) continue;
		if (!(b * a).is_zero()) return false;
	}
	return true;
}

HomologyResult homology(const ResolutionCube& cube, Kernel kernel) {
	HomologyResult h;
	h.tmin = cube.tmin();
	const int nt = cube.tmax() - cube.tmin() + 1;

	// elements of the degree-t chain group, bucketed by total q-degree;
	// each element is (state, local basis index)
	using Bucket = std::map<int, std::vector<std::pair<unsigned, int>>>;
	std::vector<Bucket> slot(nt);
	for (unsigned s = 0; s < cube.spaces.size(); ++s) {
		const QuotientSpace& sp = cube.spaces[s];
		const int ti = cube.tdeg(s) - h.tmin;
		for (int i = 0; i < sp.dim(); ++i)
			slot[ti][sp.qdeg[i] + cube.qshift(s)].emplace_back(s, i);
	}
	h.vertex_dims.assign(nt, 0);
	for (int ti = 0; ti < nt; ++ti)
		for (const auto& [q, v] : slot[ti]) h.vertex_dims[ti] += long(v.size());

	// position of each chain element inside its (t, q) block
	std::vector<std::vector<int>> pos(cube.spaces.size());
	for (int ti = 0; ti < nt; ++ti)
		for (const auto& [q, v] : slot[ti])
			for (size_t r = 0; r < v.size(); ++r) {
				auto [s, i] = v[r];
				if (pos[s].empty()) pos[s].assign(cube.spaces[s].dim(), -1);
				pos[s][i] = int(r);
			}

	// edges grouped by source homological degree
	std::vector<std::vector<const ResolutionCube::Edge*>> by_t(nt);
	for (const auto& e : cube.edges) by_t[cube.tdeg(e.from) - h.tmin].push_back(&e);

	// rank of the differential restricted to each (t, q) block
	std::vector<std::map<int, long>> rk(nt);
	h.diff_ranks.assign(nt, 0);
	for (int ti = 0; ti + 1 < nt; ++ti) {
		for (const auto& [q, cols] : slot[ti]) {
			auto it = slot[ti + 1].find(q);
			if (it == slot[ti + 1].end()) continue;
			const auto& rows = it->second;
			Matrix m(int(rows.size()), int(cols.size()));
			for (const auto* e : by_t[ti]) {
				for (int j = 0; j < e->map.m.cols; ++j) {
					const int cj = pos[e->from][j];
					// the block is q-homogeneous; skip columns in other blocks
					if (cube.spaces[e->from].qdeg[j] + cube.qshift(e->from) != q) continue;
					for (int i = 0; i < e->map.m.rows; ++i)
						if (e->map.m(i, j) != 0) m(pos[e->to][i], cj) = e->sign * e->map.m(i, j);
				}
			}
			long r = rank(m, kernel);
			rk[ti][q] = r;
			h.diff_ranks[ti] += r;
		}
	}

	for (int ti = 0; ti < nt; ++ti)
		for (const auto& [q, v] : slot[ti]) {
			long b = long(v.size());
			auto out = rk[ti].find(q);
			if (out != rk[ti].end()) b -= out->second;
			if (ti > 0) {
				auto in = rk[ti - 1].find(q);
				if (in != rk[ti - 1].end()) b -= in->second;
			}
			if (b < 0) throw std::logic_error("homology: negative Betti number");
			if (b > 0) {
				h.betti[{h.tmin + ti, q}] = b;
				h.poincare.add(h.tmin + ti, q, Rational(b));
			}
		}
	return h;
}

LaurentPoly euler(const HomologyResult& h) { return h.poincare.at_t_sign(-1); }

}  // namespace alexfoam
