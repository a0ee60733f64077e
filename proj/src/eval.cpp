#include "alexfoam/eval.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace alexfoam {

namespace {

void check_decoration(const VinylGraph& g, const Decoration& d) {
	if (int(d.size()) != g.nsegs)
		throw std::invalid_argument("decoration does not match graph segments");
}

// per-entry evaluation with int64 accumulation grouped by denominator;
// safe because pigments are <= k <= small and degrees are desk-scale
struct DenAcc {
	// qhat values repeat heavily; a tiny linear map is faster than a hash
	std::vector<std::pair<long long, long long>> acc;  // (den, numerator sum)
	void add(long long den, long long num) {
		for (auto& [d, s] : acc)
			if (d == den) {
				s += num;
				return;
			}
		acc.emplace_back(den, num);
	}
	Rational total() const {
		Rational r = 0;
		for (const auto& [d, s] : acc) {
			if (s == 0) continue;
			Rational t(static_cast<long>(s));
			t /= Rational(static_cast<long>(d));
			r += t;
		}
		return r;
	}
};

long long ipow(long long b, int e) {
	long long r = 1;
	while (e-- > 0) r *= b;
	return r;
}

Rational sum_over_colorings_int(const Colorings& col, const Decoration& d) {
	DenAcc acc;
	for (size_t c = 0; c < col.size(); ++c) {
		const auto& pig = col.pigment[c];
		long long prod = 1;
		for (size_t s = 0; s < d.size(); ++s)
			if (d[s] > 0) prod *= ipow(pig[s], d[s]);
		acc.add(col.qhat[c], prod);
	}
	return acc.total();
}

}  // namespace

Rational eval_infty_constant(const VinylGraph& g, const Colorings& col, const Decoration& d) {
	check_decoration(g, d);
	if (degree(d) != g.split_count()) return 0;
	return sum_over_colorings_int(col, d);
}

Rational eval_infty_constant(const VinylGraph& g, const Decoration& d) {
	Colorings col = enumerate_colorings(g);
	return eval_infty_constant(g, col, d);
}

Rational eval_infty_at(const VinylGraph& g, const Colorings& col, const Decoration& d,
                       const std::vector<Rational>& X) {
	check_decoration(g, d);
	if (int(X.size()) != g.level) throw std::invalid_argument("point size must equal level");
	Rational total = 0;
	for (size_t c = 0; c < col.size(); ++c) {
		const auto& pig = col.pigment[c];
		Rational num = 1;
		for (size_t s = 0; s < d.size(); ++s)
			for (int e = 0; e < d[s]; ++e) num *= X[pig[s] - 1];
		Rational den = 1;
		for (const auto& e : g.dumbles) den *= X[pig[e.nw] - 1] - X[pig[e.ne] - 1];
		total += num / den;
	}
	return total;
}

Rational pair_gl1(const VinylGraph& g, const Colorings& col, const Decoration& d1,
                  const Decoration& d2) {
	check_decoration(g, d1);
	check_decoration(g, d2);
	Decoration d(d1);
	for (size_t i = 0; i < d.size(); ++i) d[i] += d2[i];
	return eval_infty_constant(g, col, d);
}

Rational pair_gl0(const VinylGraph& g, const Colorings& col, const Decoration& d1,
                  const Decoration& d2) {
	check_decoration(g, d1);
	check_decoration(g, d2);
	Decoration d(d1);
	for (size_t i = 0; i < d.size(); ++i) d[i] += d2[i];
	d[g.marked_seg] += g.level - 1;
	return eval_infty_constant(g, col, d);
}

Matrix gram_block(const VinylGraph& g, const Colorings& col,
                  const std::vector<Decoration>& rows, const std::vector<Decoration>& cols,
                  const Decoration& extra, Kernel kernel) {
	const int R = int(rows.size()), C = int(cols.size());
	Matrix m(R, C);
	if (R == 0 || C == 0) return m;
	const int S = g.split_count();

	// int64 safety: ncolorings * k^maxdeg must stay far from overflow
	int maxdeg = degree(extra);
	int mr = 0, mc = 0;
	for (const auto& d : rows) mr = std::max(mr, degree(d));
	for (const auto& d : cols) mc = std::max(mc, degree(d));
	maxdeg += mr + mc;
	long double bound = (long double)col.size();
	for (int i = 0; i < maxdeg; ++i) bound *= g.level;
	const bool fits = bound < 4.0e18L / 4;

	const bool par = (kernel == Kernel::Parallel);
#pragma omp parallel for collapse(2) schedule(dynamic) if (par)
	for (int i = 0; i < R; ++i)
		for (int j = 0; j < C; ++j) {
			Decoration d(rows[i]);
			for (size_t s = 0; s < d.size(); ++s) d[s] += cols[j][s] + extra[s];
			if (degree(d) != S) continue;  // entry stays 0
			if (fits) {
				m(i, j) = sum_over_colorings_int(col, d);
			} else {
				Rational total = 0;
				for (size_t c = 0; c < col.size(); ++c) {
					const auto& pig = col.pigment[c];
					Rational num = 1;
					for (size_t s = 0; s < d.size(); ++s)
						for (int e = 0; e < d[s]; ++e) num *= int(pig[s]);
					total += num / Rational(static_cast<long>(col.qhat[c]));
				}
				m(i, j) = total;
			}
		}
	return m;
}

Rational tree_eval(const RootedTree& t, int k) {
	if (t.n != k) throw std::invalid_argument("tree_eval: vertex count must equal k");
	std::vector<int> phi(k);
	std::iota(phi.begin(), phi.end(), 1);
	Rational total = 0;
	do {
		Rational num = 1;
		for (int v = 0; v < k; ++v)
			if (v != t.root) num *= phi[v];
		Rational den = 1;
		for (const auto& [a, b] : t.edges) den *= phi[a] - phi[b];
		total += num / den;
	} while (std::next_permutation(phi.begin(), phi.end()));
	if (total.get_den() != 1) throw std::logic_error("tree_eval: non-integer result");
	return total;
}

}  // namespace alexfoam
