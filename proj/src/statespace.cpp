#include "alexfoam/statespace.hpp"

#include <algorithm>
#include <stdexcept>

namespace alexfoam {

namespace {

// monomials of the given total degree with per-segment cap, ascending lex
void gen_monomials(int nsegs, int cap, int total, std::vector<Decoration>& out) {
	Decoration cur(nsegs, 0);
	auto rec = [&](auto&& self, int idx, int rem) -> void {
		if (idx == nsegs) {
			if (rem == 0) out.push_back(cur);
			return;
		}
		int hi = std::min(cap, rem);
		// keep enough capacity in the remaining segments
		for (int e = 0; e <= hi; ++e) {
			if (long(rem - e) > long(cap) * (nsegs - idx - 1)) continue;
			cur[idx] = e;
			self(self, idx + 1, rem - e);
		}
		cur[idx] = 0;
	};
	rec(rec, 0, total);
}

Decoration mark_insertion(const VinylGraph& g) {
	Decoration extra(g.nsegs, 0);
	extra[g.marked_seg] += g.level - 1;
	return extra;
}

}  // namespace

std::vector<Decoration> spanning_set(const VinylGraph& g) {
	std::vector<Decoration> out;
	const int B = g.split_count() - (g.level - 1);
	if (B < 0) return out;
	for (int d = 0; d <= B; ++d) gen_monomials(g.nsegs, g.level - 1, d, out);
	return out;
}

QuotientSpace state_space(const VinylGraph& g, Kernel kernel) {
	QuotientSpace sp;
	sp.graph = std::make_shared<VinylGraph>(g);
	if (!g.connected) return sp;  // zero space

	sp.col = std::make_shared<Colorings>(enumerate_colorings(g));
	const int B = g.split_count() - (g.level - 1);
	sp.B = B;
	const Decoration extra = mark_insertion(g);

	std::vector<std::vector<Decoration>> span(B + 1);
	for (int d = 0; d <= B; ++d) gen_monomials(g.nsegs, g.level - 1, d, span[d]);

	std::vector<std::vector<Decoration>> chosen(B + 1);
	for (int d = 0; 2 * d <= B; ++d) {
		const int e = B - d;
		Matrix M = gram_block(g, *sp.col, span[d], span[e], extra, kernel);
		if (d == e) {
			std::vector<int> P = select_principal_invertible(M);
			for (int i : P) chosen[d].push_back(span[d][i]);
		} else {
			std::vector<int> R, C;
			select_invertible(M, R, C);
			std::sort(R.begin(), R.end());
			std::sort(C.begin(), C.end());
			for (int i : R) chosen[d].push_back(span[d][i]);
			for (int j : C) chosen[e].push_back(span[e][j]);
		}
	}

	sp.basis_at.assign(B + 1, {});
	for (int d = 0; d <= B; ++d)
		for (const auto& dec : chosen[d]) {
			sp.basis_at[d].push_back(int(sp.basis.size()));
			sp.basis.push_back(dec);
			sp.deg.push_back(d);
			sp.qdeg.push_back(2 * d - B);
			sp.graded_dim += LaurentPoly::var(2 * d - B);
		}

	// small solve blocks and the full Gram matrix on the basis
	sp.invA.assign(B + 1, Matrix());
	const int n = sp.dim();
	sp.gram = Matrix(n, n);
	for (int d = 0; d <= B; ++d) {
		const auto& own = sp.basis_at[d];
		const auto& comp = sp.basis_at[B - d];
		if (own.empty()) continue;
		std::vector<Decoration> ob, cb;
		for (int i : own) ob.push_back(sp.basis[i]);
		for (int i : comp) cb.push_back(sp.basis[i]);
		Matrix A(int(comp.size()), int(own.size()));
		Matrix P = gram_block(g, *sp.col, ob, cb, extra, kernel);  // P(j,i) = pair(own j, comp i)
		for (size_t i = 0; i < comp.size(); ++i)
			for (size_t j = 0; j < own.size(); ++j) A(int(i), int(j)) = P(int(j), int(i));
		sp.invA[d] = inverse(A);
		for (size_t j = 0; j < own.size(); ++j)
			for (size_t i = 0; i < comp.size(); ++i) sp.gram(own[j], comp[i]) = P(int(j), int(i));
	}
	return sp;
}

std::vector<Rational> express(const QuotientSpace& sp, const Decoration& d) {
	std::vector<Rational> v(sp.dim(), Rational(0));
	if (sp.B < 0) return v;
	const VinylGraph& g = *sp.graph;
	for (int e : d)
		if (e >= g.level) return v;  // x^k acts by zero
	const int deg = degree(d);
	if (deg < 0 || deg > sp.B) return v;
	const auto& own = sp.basis_at[deg];
	if (own.empty()) return v;
	const auto& comp = sp.basis_at[sp.B - deg];
	Matrix p(int(comp.size()), 1);
	for (size_t i = 0; i < comp.size(); ++i)
		p(int(i), 0) = pair_gl0(g, *sp.col, d, sp.basis[comp[i]]);
	Matrix coords = sp.invA[deg] * p;
	for (size_t j = 0; j < own.size(); ++j) v[own[j]] = coords(int(j), 0);
	return v;
}

Rational pair_vectors(const QuotientSpace& sp, const std::vector<Rational>& u,
                      const std::vector<Rational>& v) {
	Rational r = 0;
	for (int i = 0; i < sp.dim(); ++i) {
		if (u[i] == 0) continue;
		for (int j = 0; j < sp.dim(); ++j) {
			if (v[j] == 0) continue;
			r += u[i] * sp.gram(i, j) * v[j];
		}
	}
	return r;
}

std::vector<Rational> apply(const Matrix& m, const std::vector<Rational>& v) {
	std::vector<Rational> out(m.rows, Rational(0));
	for (int i = 0; i < m.rows; ++i)
		for (int j = 0; j < m.cols; ++j)
			if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
	return out;
}

LinearMap dot_operator(const QuotientSpace& sp, int segment) {
	LinearMap lm;
	lm.qshift = 2;
	lm.m = Matrix(sp.dim(), sp.dim());
	for (int j = 0; j < sp.dim(); ++j) {
		Decoration d = sp.basis[j];
		d[segment] += 1;
		auto v = express(sp, d);
		for (int i = 0; i < sp.dim(); ++i) lm.m(i, j) = v[i];
	}
	return lm;
}

LinearMap ve_operator(const QuotientSpace& sp, int dumble_index) {
	const auto& e = sp.graph->dumbles.at(dumble_index);
	LinearMap a = dot_operator(sp, e.nw), b = dot_operator(sp, e.sw);
	return LinearMap{2, a.m - b.m};
}

LinearMap se_operator(const QuotientSpace& sp, int dumble_index) {
	const auto& e = sp.graph->dumbles.at(dumble_index);
	LinearMap a = dot_operator(sp, e.nw), b = dot_operator(sp, e.se);
	return LinearMap{2, a.m - b.m};
}

namespace {

// segment correspondence: fine graph (dumble at slice) -> coarse graph
// (identity there); every interval keeps its coordinates
std::vector<int> transport_table(const VinylGraph& fine, const VinylGraph& coarse,
                                 int slice_idx) {
	if (fine.slices.size() != coarse.slices.size() || fine.level != coarse.level)
		throw std::invalid_argument("transport: graphs not parallel");
	if (fine.slices[slice_idx] == 0 || coarse.slices[slice_idx] != 0)
		throw std::invalid_argument("transport: slice mismatch at crossing");
	for (size_t t = 0; t < fine.slices.size(); ++t)
		if (int(t) != slice_idx && fine.slices[t] != coarse.slices[t])
			throw std::invalid_argument("transport: graphs differ away from crossing");
	std::vector<int> to(fine.nsegs, -1);
	for (int h = 0; h < fine.LV; ++h)
		for (int p = 0; p < fine.level; ++p) to[fine.seg[h][p]] = coarse.seg[h][p];
	return to;
}

// push a decoration through the table, adding exponents; false when the
// image has an exponent >= k (the class collapses to 0)
bool transport(const Decoration& d, const std::vector<int>& to, int k, int ncoarse,
               Decoration& out) {
	out.assign(ncoarse, 0);
	for (size_t s = 0; s < d.size(); ++s) {
		out[to[s]] += d[s];
		if (out[to[s]] >= k) return false;
	}
	return true;
}

}  // namespace

LinearMap unzip_map(const QuotientSpace& src, const QuotientSpace& tgt, int slice_idx) {
	LinearMap lm;
	lm.qshift = 1;
	lm.m = Matrix(tgt.dim(), src.dim());
	if (src.dim() == 0 || tgt.dim() == 0) return lm;
	auto to = transport_table(*src.graph, *tgt.graph, slice_idx);
	for (int j = 0; j < src.dim(); ++j) {
		Decoration img;
		if (!transport(src.basis[j], to, src.graph->level, tgt.graph->nsegs, img)) continue;
		auto v = express(tgt, img);
		for (int i = 0; i < tgt.dim(); ++i) lm.m(i, j) = v[i];
	}
	return lm;
}

LinearMap zip_map(const QuotientSpace& src, const QuotientSpace& tgt, int slice_idx) {
	LinearMap lm;
	lm.qshift = 1;
	lm.m = Matrix(tgt.dim(), src.dim());
	if (src.dim() == 0 || tgt.dim() == 0) return lm;
	// adjointness: (zip(D), E)_dumble = (D, unzip(E))_smooth for all E
	auto to = transport_table(*tgt.graph, *src.graph, slice_idx);
	const int k = src.graph->level;
	for (int j = 0; j < src.dim(); ++j) {
		const int a = src.deg[j];
		const int td = a + 1;
		if (td > tgt.B) continue;
		const auto& own = tgt.basis_at[td];
		if (own.empty()) continue;
		const auto& comp = tgt.basis_at[tgt.B - td];
		Matrix p(int(comp.size()), 1);
		for (size_t i = 0; i < comp.size(); ++i) {
			Decoration img;
			if (!transport(tgt.basis[comp[i]], to, k, src.graph->nsegs, img)) continue;
			p(int(i), 0) = pair_gl0(*src.graph, *src.col, src.basis[j], img);
		}
		Matrix coords = tgt.invA[td] * p;
		for (size_t i = 0; i < own.size(); ++i) lm.m(own[i], j) = coords(int(i), 0);
	}
	return lm;
}

std::vector<Rational> domino_vector(const QuotientSpace& sp, const PiknGraph& pg,
                                    const DominoConfig& s, bool top) {
	const auto boxes = s.boxes();
	const int n = int(boxes.size());
	if (int(pg.ebot.size()) != n)
		throw std::invalid_argument("domino_vector: configuration length mismatch");
	std::vector<Rational> v = express(sp, Decoration(sp.graph->nsegs, 0));
	for (int i = 0; i < n; ++i) {
		const int e = top ? pg.etop[i] : pg.ebot[i];
		switch (boxes[i]) {
			case Box::Minus:
			case Box::ZeroA: break;
			case Box::Plus: v = alexfoam::apply(se_operator(sp, e).m, v); break;
			case Box::ZeroB: v = alexfoam::apply(ve_operator(sp, e).m, v); break;
		}
	}
	return v;
}

}  // namespace alexfoam
