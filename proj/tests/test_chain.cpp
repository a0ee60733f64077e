#include <doctest.h>

#include "alexfoam/alexander.hpp"
#include "alexfoam/chain.hpp"

using namespace alexfoam;

namespace {

BiGradedPoly single_class() {
	BiGradedPoly p;
	p.add(0, 0, 1);
	return p;
}

}  // namespace

TEST_CASE("unknot closures") {
	MarkedClosure trivial;
	trivial.word.strands = 1;
	trivial.bp_pos = 1;
	HomologyResult h0 = homology(build_cube(trivial));
	CHECK(h0.poincare == single_class());

	for (const char* s : {"strands=2; word=1; bp=2", "strands=2; word=-1; bp=2"}) {
		HomologyResult h = homology(build_cube(parse_closure(s)));
		CHECK(h.poincare == single_class());
	}
}

TEST_CASE("trefoil") {
	ResolutionCube cube = build_cube(parse_closure("strands=2; word=1 1 1; bp=2"));
	CHECK(check_d2(cube));
	HomologyResult h = homology(cube);

	CHECK(h.tmin == 0);
	CHECK(h.vertex_dims == std::vector<long>{4, 6, 3, 0});
	CHECK(h.diff_ranks == std::vector<long>{3, 2, 0, 0});

	BiGradedPoly want;
	want.add(0, 2, 1);
	want.add(1, 0, 1);
	want.add(2, -2, 1);
	CHECK(h.poincare == want);
	CHECK(euler(h) == alexander_q(cube.closure.word));
}

TEST_CASE("figure eight") {
	ResolutionCube cube = build_cube(parse_closure("strands=3; word=1 -2 1 -2; bp=3"));
	CHECK(check_d2(cube));
	HomologyResult h = homology(cube);
	CHECK(euler(h) == alexander_q(cube.closure.word));
	// total rank equals the determinant
	long total = 0;
	for (const auto& [tq, d] : h.betti) total += d;
	CHECK(total == 5);
	// homology is symmetric under (t, q) -> (-t, -q) up to the mirror pairing
	CHECK(h.poincare.at_t_sign(-1).symmetric() ==
	      alexander_q(cube.closure.word).symmetric());
}

TEST_CASE("negative trefoil mirrors the positive one") {
	HomologyResult pos = homology(build_cube(parse_closure("strands=2; word=1 1 1; bp=2")));
	HomologyResult neg = homology(build_cube(parse_closure("strands=2; word=-1 -1 -1; bp=2")));
	BiGradedPoly mirrored;
	for (const auto& [tq, d] : pos.betti) mirrored.add(-tq.first, -tq.second, Rational(d));
	CHECK(neg.poincare == mirrored);
}

TEST_CASE("total differential assembles the cube") {
	ResolutionCube cube = build_cube(parse_closure("strands=2; word=1 1; bp=2"));
	Matrix d0 = total_differential(cube, 0);
	long dim0 = 0, dim1 = 0;
	for (unsigned s = 0; s < cube.spaces.size(); ++s) {
		if (cube.tdeg(s) == 0) dim0 += cube.spaces[s].dim();
		if (cube.tdeg(s) == 1) dim1 += cube.spaces[s].dim();
	}
	CHECK(d0.rows == dim1);
	CHECK(d0.cols == dim0);
	CHECK(check_d2(cube));
}
