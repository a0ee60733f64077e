#include <doctest.h>

#include "alexfoam/statespace.hpp"

using namespace alexfoam;

TEST_CASE("zero and rank one spaces") {
	// disconnected graph gives the zero space
	VinylGraph two_circles = make_graph(2, {0}, 0, 2);
	QuotientSpace z = state_space(two_circles);
	CHECK(z.B == -1);
	CHECK(z.dim() == 0);
	CHECK(z.graded_dim.is_zero());
	CHECK(spanning_set(two_circles).empty());

	// plain circle
	VinylGraph circle = make_graph(1, {}, 0, 1);
	QuotientSpace u = state_space(circle);
	CHECK(u.B == 0);
	CHECK(u.dim() == 1);
	CHECK(u.graded_dim == LaurentPoly(Rational(1)));
	auto v = express(u, {0});
	CHECK(v == std::vector<Rational>{1});

	// single dumble closure: one splitting, one basis class in degree 0
	VinylGraph g = make_graph(2, {1}, 0, 2);
	QuotientSpace sp = state_space(g);
	CHECK(sp.B == 0);
	CHECK(sp.dim() == 1);
	CHECK(sp.gram(0, 0) == -1);
	// a dot is killed by the degree cap B = 0
	CHECK(dot_operator(sp, 0).m.is_zero());
}

TEST_CASE("reference graph dimensions") {
	QuotientSpace p21 = state_space(make_pikn(2, 1).g);
	CHECK(p21.B == 1);
	CHECK(p21.dim() == 2);
	CHECK(p21.graded_dim == pell(1));

	QuotientSpace p32 = state_space(make_pikn(3, 2).g);
	CHECK(p32.B == 2);
	CHECK(p32.dim() == 5);
	CHECK(p32.graded_dim == pell(2));
}

TEST_CASE("trefoil all dumble vertex") {
	MarkedClosure c = parse_closure("strands=2; word=1 1 1; bp=2");
	QuotientSpace sp = state_space(resolve(c, {0, 0, 0}));
	CHECK(sp.B == 2);
	CHECK(sp.dim() == 4);
	LaurentPoly want =
	    LaurentPoly::var(-2) + LaurentPoly(Rational(2)) + LaurentPoly::var(2);
	CHECK(sp.graded_dim == want);

	// express is a projection: basis vectors map to unit coordinates
	for (int j = 0; j < sp.dim(); ++j) {
		auto v = express(sp, sp.basis[j]);
		for (int i = 0; i < sp.dim(); ++i) CHECK(v[i] == (i == j ? 1 : 0));
	}
	// exponent >= k collapses to zero
	Decoration big(sp.graph->nsegs, 0);
	big[0] = 2;
	auto v = express(sp, big);
	for (const auto& x : v) CHECK(x == 0);

	// dots are nilpotent of order k
	Matrix d = dot_operator(sp, 0).m;
	CHECK((d * d).is_zero());
}

TEST_CASE("edge map gradings") {
	MarkedClosure c = parse_closure("strands=2; word=1 1 1; bp=2");
	QuotientSpace dumble = state_space(resolve(c, {0, 0, 0}));
	QuotientSpace smooth = state_space(resolve(c, {1, 0, 0}));
	LinearMap u = unzip_map(dumble, smooth, 0);
	LinearMap z = zip_map(smooth, dumble, 0);
	CHECK(u.qshift == 1);
	CHECK(z.qshift == 1);
	CHECK(u.m.rows == smooth.dim());
	CHECK(u.m.cols == dumble.dim());
	// both maps raise the dot degree filtration by at most their q-shift
	for (int j = 0; j < dumble.dim(); ++j)
		for (int i = 0; i < smooth.dim(); ++i)
			if (u.m(i, j) != 0) CHECK(smooth.qdeg[i] == dumble.qdeg[j] + 1);
	for (int j = 0; j < smooth.dim(); ++j)
		for (int i = 0; i < dumble.dim(); ++i)
			if (z.m(i, j) != 0) CHECK(dumble.qdeg[i] == smooth.qdeg[j] + 1);
}

TEST_CASE("pairing of expressed vectors matches the evaluation") {
	QuotientSpace sp = state_space(make_pikn(3, 2).g);
	const VinylGraph& g = *sp.graph;
	Decoration a(g.nsegs, 0), b(g.nsegs, 0);
	a[g.marked_seg] = 1;
	b[0] = 1;
	auto va = express(sp, a), vb = express(sp, b);
	CHECK(pair_vectors(sp, va, vb) == pair_gl0(g, *sp.col, a, b));
}
