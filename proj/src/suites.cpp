#include "alexfoam/suites.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "alexfoam/chain.hpp"
#include "alexfoam/domino.hpp"
#include "alexfoam/report.hpp"

namespace alexfoam {

namespace {

SuiteResult ok(std::string name) { return SuiteResult{std::move(name), true, ""}; }

SuiteResult fail(std::string name, std::string detail) {
	return SuiteResult{std::move(name), false, std::move(detail)};
}

MarkedClosure random_closure(std::mt19937_64& rng, int max_strands, int max_len) {
	MarkedClosure c;
	c.word.strands = 2 + int(rng() % std::max(1, max_strands - 1));
	const int len = 1 + int(rng() % max_len);
	for (int i = 0; i < len; ++i) {
		int pos = 1 + int(rng() % (c.word.strands - 1));
		c.word.letters.push_back((rng() & 1) ? pos : -pos);
	}
	c.bp_pos = 1 + int(rng() % c.word.strands);
	return c;
}

// random connected resolution of a random closure, with at least one dumble
VinylGraph random_connected_graph(std::mt19937_64& rng, int max_strands, int max_len) {
	for (;;) {
		MarkedClosure c = random_closure(rng, max_strands, max_len);
		std::vector<int> state(c.word.letters.size());
		for (auto& b : state) b = int(rng() & 1);
		VinylGraph g = resolve(c, state);
		if (g.connected && g.split_count() > 0) return g;
	}
}

std::string poly_mismatch(const std::string& what, const LaurentPoly& got,
                          const LaurentPoly& want) {
	return what + ": got " + got.str() + ", want " + want.str();
}

}  // namespace

SuiteResult suite_dominoes() {
	const std::string name = "dominoes";
	for (int n = 0; n <= 12; ++n) {
		auto configs = enumerate_dominoes(n);
		LaurentPoly sum;
		for (const auto& s : configs) sum += LaurentPoly::var(s.weight());
		if (sum != pell(n))
			return fail(name, poly_mismatch("weight sum at n=" + std::to_string(n), sum, pell(n)));
		for (size_t i = 0; i < configs.size(); ++i) {
			const auto& s = configs[i];
			if (s.dual().dual() != s) return fail(name, "dual not an involution");
			if (s.dual().weight() != -s.weight()) return fail(name, "dual does not negate weight");
			if (i + 1 < configs.size() && !(s < configs[i + 1]))
				return fail(name, "enumeration not strictly increasing");
			// the duality reverses the ordering
			if (s.dual() != configs[configs.size() - 1 - i])
				return fail(name, "dual does not reverse the order");
		}
	}
	return ok(name);
}

namespace {

// all labelled trees on n vertices via Prufer sequences
std::vector<std::vector<std::pair<int, int>>> all_trees(int n) {
	std::vector<std::vector<std::pair<int, int>>> out;
	if (n == 1) {
		out.push_back({});
		return out;
	}
	std::vector<int> seq(std::max(0, n - 2), 0);
	for (;;) {
		std::vector<int> deg(n, 1);
		for (int v : seq) ++deg[v];
		std::vector<std::pair<int, int>> edges;
		std::vector<int> d = deg;
		std::vector<bool> used(n, false);
		for (int v : seq) {
			int leaf = -1;
			for (int u = 0; u < n; ++u)
				if (d[u] == 1 && !used[u]) {
					leaf = u;
					break;
				}
			edges.emplace_back(leaf, v);
			used[leaf] = true;
			--d[v];
		}
		std::vector<int> rest;
		for (int u = 0; u < n; ++u)
			if (!used[u] && d[u] == 1) rest.push_back(u);
		edges.emplace_back(rest[0], rest[1]);
		out.push_back(edges);

		int i = int(seq.size()) - 1;
		while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
		if (i < 0) break;
		++seq[i];
	}
	return out;
}

}  // namespace

SuiteResult suite_trees(int max_vertices) {
	const std::string name = "trees";
	for (int n = 1; n <= max_vertices; ++n) {
		for (const auto& edges : all_trees(n)) {
			std::vector<std::vector<int>> adj(n);
			for (auto [a, b] : edges) {
				adj[a].push_back(b);
				adj[b].push_back(a);
			}
			for (int root = 0; root < n; ++root) {
				RootedTree t;
				t.n = n;
				t.root = root;
				// orient edges away from the root
				std::vector<int> stack{root}, par(n, -1);
				std::vector<bool> seen(n, false);
				seen[root] = true;
				while (!stack.empty()) {
					int v = stack.back();
					stack.pop_back();
					for (int u : adj[v])
						if (!seen[u]) {
							seen[u] = true;
							t.edges.emplace_back(v, u);
							stack.push_back(u);
						}
				}
				try {
					tree_eval(t, n);  // throws on a non-integer value
				} catch (const std::exception& e) {
					return fail(name, std::string("n=") + std::to_string(n) + ": " + e.what());
				}
			}
		}
	}
	return ok(name);
}

SuiteResult suite_pell(Kernel kernel) {
	const std::string name = "pell dims";
	const std::pair<int, int> cases[] = {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}};
	for (auto [k, n] : cases) {
		PiknGraph pg = make_pikn(k, n);
		QuotientSpace sp = state_space(pg.g, kernel);
		if (sp.graded_dim != pell(n))
			return fail(name, poly_mismatch("k=" + std::to_string(k) + " n=" + std::to_string(n),
			                                sp.graded_dim, pell(n)));
	}
	return ok(name);
}

SuiteResult suite_generic_point(uint64_t seed) {
	const std::string name = "generic point";
	std::mt19937_64 rng(seed);
	for (int it = 0; it < 50; ++it) {
		VinylGraph g = random_connected_graph(rng, 3, 5);
		Colorings col = enumerate_colorings(g);
		// a decoration of total degree split_count, spread at random
		Decoration d(g.nsegs, 0);
		for (int rem = g.split_count(); rem > 0; --rem) ++d[rng() % g.nsegs];
		Rational c0 = eval_infty_constant(g, col, d);
		// distinct rational coordinates
		std::vector<int> pool(60);
		std::iota(pool.begin(), pool.end(), 1);
		std::shuffle(pool.begin(), pool.end(), rng);
		const int den = 1 + int(rng() % 5);
		std::vector<Rational> X;
		for (int i = 0; i < g.level; ++i) X.push_back(Rational(pool[i], den));
		Rational c1 = eval_infty_at(g, col, d, X);
		if (c0 != c1)
			return fail(name, "iteration " + std::to_string(it) + ": " + rat_str(c0) +
			                      " vs " + rat_str(c1));
	}
	return ok(name);
}

SuiteResult suite_dot_nilpotent(uint64_t seed, Kernel kernel) {
	const std::string name = "dot nilpotent";
	std::mt19937_64 rng(seed + 17);
	for (int it = 0; it < 10; ++it) {
		VinylGraph g = random_connected_graph(rng, 3, 4);
		QuotientSpace sp = state_space(g, kernel);
		if (sp.dim() == 0) continue;
		const int seg = int(rng() % g.nsegs);
		Matrix p = Matrix::identity(sp.dim());
		Matrix d = dot_operator(sp, seg).m;
		for (int e = 0; e < g.level; ++e) p = p * d;
		if (!p.is_zero()) return fail(name, "dot^k nonzero at iteration " + std::to_string(it));
	}
	return ok(name);
}

namespace {

// check the three identities tying zip and unzip together at one crossing
std::string edge_map_identities(const QuotientSpace& smooth, const QuotientSpace& dumble,
                                int slice_idx) {
	LinearMap U = unzip_map(dumble, smooth, slice_idx);
	LinearMap Z = zip_map(smooth, dumble, slice_idx);

	// adjointness: <Z x, y>_dumble = <x, U y>_smooth
	if (!(Z.m.transpose() * dumble.gram == smooth.gram * U.m)) return "adjointness failed";

	int di = -1;
	for (size_t i = 0; i < dumble.graph->dumbles.size(); ++i)
		if (dumble.graph->dumbles[i].slice == slice_idx) di = int(i);
	if (di < 0) return "no dumble at the crossing";
	if (!(Z.m * U.m == ve_operator(dumble, di).m)) return "zip o unzip != V";

	const int pos = dumble.graph->dumbles[di].pos;
	const int left = smooth.graph->seg[slice_idx][pos - 1];
	const int right = smooth.graph->seg[slice_idx][pos];
	Matrix want = dot_operator(smooth, left).m - dot_operator(smooth, right).m;
	if (!(U.m * Z.m == want)) return "unzip o zip != dot difference";
	return "";
}

}  // namespace

SuiteResult suite_edge_maps(Kernel kernel) {
	const std::string name = "edge maps";

	// positive crossing: first letter of the trefoil
	{
		MarkedClosure c = parse_closure("strands=2; word=1 1 1; bp=2");
		QuotientSpace dumble = state_space(resolve(c, {0, 0, 0}), kernel);
		QuotientSpace smooth = state_space(resolve(c, {1, 0, 0}), kernel);
		std::string err = edge_map_identities(smooth, dumble, 0);
		if (!err.empty()) return fail(name, "trefoil crossing 0: " + err);
	}
	// negative crossing: second letter of the figure eight
	{
		MarkedClosure c = parse_closure("strands=3; word=1 -2 1 -2; bp=3");
		QuotientSpace smooth = state_space(resolve(c, {0, 0, 0, 0}), kernel);
		QuotientSpace dumble = state_space(resolve(c, {0, 1, 0, 0}), kernel);
		std::string err = edge_map_identities(smooth, dumble, 1);
		if (!err.empty()) return fail(name, "figure eight crossing 1: " + err);
	}
	return ok(name);
}

SuiteResult suite_d2(const SuiteOptions& opt) {
	const std::string name = "d^2 = 0";
	std::mt19937_64 rng(opt.seed + 101);
	for (int it = 0; it < opt.n_random; ++it) {
		// keep the rectified word length within budget
		MarkedClosure c;
		for (;;) {
			c = random_closure(rng, opt.max_strands, opt.max_crossings);
			const int grown =
			    int(c.word.letters.size()) + 2 * (c.word.strands - c.bp_pos);
			if (grown <= std::min(opt.max_crossings, 6)) break;
		}
		ResolutionCube cube = build_cube(rectify(c), opt.kernel);
		if (!check_d2(cube))
			return fail(name, "iteration " + std::to_string(it) + ": " + closure_str(c));
	}
	return ok(name);
}

SuiteResult suite_invariance(Kernel kernel) {
	const std::string name = "invariance";
	auto pc = [&](const std::string& s) {
		return run_pipeline(parse_closure(s), true, kernel).hom.poincare;
	};

	BiGradedPoly tre2 = pc("strands=2; word=1 1 1; bp=2");
	BiGradedPoly tre3 = pc("strands=3; word=1 2 1 2; bp=3");
	if (tre2 != tre3) return fail(name, "trefoil: 2-strand vs 3-strand presentations differ");

	// positive and negative stabilization of the trefoil and the unknot
	MarkedClosure tre = parse_closure("strands=2; word=1 1 1; bp=2");
	for (int sign : {1, -1}) {
		BiGradedPoly st = run_pipeline(markov_stabilize(tre, sign), true, kernel).hom.poincare;
		if (st != tre2)
			return fail(name, std::string("trefoil: stabilization sign ") +
			                      (sign > 0 ? "+" : "-") + " changes homology");
	}
	MarkedClosure unk;
	unk.word.strands = 1;
	unk.bp_pos = 1;
	BiGradedPoly u0 = run_pipeline(unk, true, kernel).hom.poincare;
	for (int sign : {1, -1}) {
		BiGradedPoly st = run_pipeline(markov_stabilize(unk, sign), true, kernel).hom.poincare;
		if (st != u0)
			return fail(name, std::string("unknot: stabilization sign ") +
			                      (sign > 0 ? "+" : "-") + " changes homology");
	}

	// base point on the other strand, forcing rectification
	BiGradedPoly tre_bp1 = pc("strands=2; word=1 1 1; bp=1");
	if (tre_bp1 != tre2) return fail(name, "trefoil: base point move changes homology");
	return ok(name);
}

SuiteResult suite_antitriangular(Kernel kernel) {
	const std::string name = "anti-triangular pairing";
	PiknGraph pg = make_pikn(3, 2);
	QuotientSpace sp = state_space(pg.g, kernel);
	auto configs = enumerate_dominoes(2);
	for (const auto& s : configs) {
		std::vector<Rational> x = domino_vector(sp, pg, s, true);
		for (const auto& sp2 : configs) {
			std::vector<Rational> y = domino_vector(sp, pg, sp2, false);
			Rational p = pair_vectors(sp, x, y);
			if (s.dual() < sp2 && p != 0)
				return fail(name, "nonzero above the anti-diagonal at x(" + s.str() + "), y(" +
				                      sp2.str() + ")");
			if (sp2 == s.dual() && p == 0)
				return fail(name, "zero on the anti-diagonal at x(" + s.str() + ")");
		}
	}
	return ok(name);
}

SuiteResult suite_kernels(uint64_t seed) {
	const std::string name = "kernel agreement";
	std::mt19937_64 rng(seed + 7919);
	for (int it = 0; it < 20; ++it) {
		const int r = 3 + int(rng() % 8), c = 3 + int(rng() % 8);
		Matrix m(r, c);
		for (int i = 0; i < r; ++i)
			for (int j = 0; j < c; ++j) {
				const long num = long(rng() % 19) - 9;
				const long den = 1 + long(rng() % 4);
				m(i, j) = Rational(num, den);
			}
		if (rank(m, Kernel::Serial) != rank(m, Kernel::Parallel))
			return fail(name, "rank mismatch at iteration " + std::to_string(it));
	}
	for (int it = 0; it < 5; ++it) {
		VinylGraph g = random_connected_graph(rng, 3, 4);
		Colorings col = enumerate_colorings(g);
		std::vector<Decoration> rows, cols;
		const int B = g.split_count() - (g.level - 1);
		if (B < 0) continue;
		auto span = spanning_set(g);
		for (const auto& d : span) {
			rows.push_back(d);
			Decoration rev(d.rbegin(), d.rend());
			cols.push_back(rev);
		}
		Decoration extra(g.nsegs, 0);
		extra[g.marked_seg] = g.level - 1;
		Matrix a = gram_block(g, col, rows, cols, extra, Kernel::Serial);
		Matrix b = gram_block(g, col, rows, cols, extra, Kernel::Parallel);
		if (!(a == b)) return fail(name, "gram block mismatch at iteration " + std::to_string(it));
	}
	return ok(name);
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt) {
	std::vector<SuiteResult> out;
	out.push_back(suite_dominoes());
	out.push_back(suite_trees(opt.max_tree_vertices));
	out.push_back(suite_pell(opt.kernel));
	out.push_back(suite_generic_point(opt.seed));
	out.push_back(suite_dot_nilpotent(opt.seed, opt.kernel));
	out.push_back(suite_edge_maps(opt.kernel));
	out.push_back(suite_d2(opt));
	out.push_back(suite_invariance(opt.kernel));
	out.push_back(suite_antitriangular(opt.kernel));
	out.push_back(suite_kernels(opt.seed));
	return out;
}

}  // namespace alexfoam
