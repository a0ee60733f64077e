#include <doctest.h>

#include <algorithm>

#include "alexfoam/vinyl.hpp"

using namespace alexfoam;

TEST_CASE("single dumble closure") {
	// closure of one dumble slice on two strands
	VinylGraph g = make_graph(2, {1}, 0, 2);
	CHECK(g.level == 2);
	CHECK(g.LV == 1);
	CHECK(g.nsegs == 2);
	CHECK(g.split_count() == 1);
	CHECK(g.connected);
	CHECK(g.depth == 0);
	REQUIRE(g.dumbles.size() == 1);
	CHECK(g.dumbles[0].sw == g.dumbles[0].nw);
	CHECK(g.dumbles[0].se == g.dumbles[0].ne);

	Colorings col = enumerate_colorings(g);
	REQUIRE(col.size() == 2);
	std::vector<long long> qs(col.qhat);
	std::sort(qs.begin(), qs.end());
	CHECK(qs == std::vector<long long>{-1, 1});
}

TEST_CASE("identity closure is disconnected") {
	// two parallel circles
	VinylGraph g = make_graph(2, {0}, 0, 2);
	CHECK(g.nsegs == 2);
	CHECK(g.split_count() == 0);
	CHECK_FALSE(g.connected);
	// a single circle is connected
	VinylGraph u = make_graph(1, {}, 0, 1);
	CHECK(u.nsegs == 1);
	CHECK(u.connected);
	CHECK(enumerate_colorings(u).size() == 1);
}

TEST_CASE("resolve states") {
	MarkedClosure c = parse_closure("strands=2; word=1 -1; bp=2");
	// positive crossing: bit 0 keeps the dumble; negative: bit 1 does
	VinylGraph g00 = resolve(c, {0, 0});
	CHECK(g00.split_count() == 1);
	CHECK(g00.dumbles[0].slice == 0);
	VinylGraph g11 = resolve(c, {1, 1});
	CHECK(g11.split_count() == 1);
	CHECK(g11.dumbles[0].slice == 1);
	VinylGraph g01 = resolve(c, {0, 1});
	CHECK(g01.split_count() == 2);
	VinylGraph g10 = resolve(c, {1, 0});
	CHECK(g10.split_count() == 0);
	CHECK_THROWS(resolve(c, {0}));
}

TEST_CASE("mark placement") {
	MarkedClosure c = parse_closure("strands=2; word=1 1; bp=1");
	VinylGraph g = resolve(c, {0, 0});
	CHECK(g.mark_level == 1);  // closure region with two slices
	CHECK(g.mark_pos == 1);
	CHECK(g.depth == 1);
	c.bp_height = 1;  // just above the first letter
	VinylGraph h = resolve(c, {0, 0});
	CHECK(h.mark_level == 0);
}

TEST_CASE("reference graphs") {
	PiknGraph p32 = make_pikn(3, 2);
	CHECK(p32.g.level == 3);
	CHECK(p32.g.split_count() == 4);
	CHECK(p32.g.connected);
	CHECK(p32.g.depth == 1);
	REQUIRE(p32.ebot.size() == 2);
	REQUIRE(p32.etop.size() == 2);
	// pair i sits at strand pair i for k - n - 1 = 0 singles
	CHECK(p32.g.dumbles[p32.ebot[0]].pos == 1);
	CHECK(p32.g.dumbles[p32.etop[0]].pos == 1);
	CHECK(p32.g.dumbles[p32.ebot[1]].pos == 2);

	PiknGraph p43 = make_pikn(4, 3);
	CHECK(p43.g.split_count() == 6);
	CHECK(p43.g.connected);

	PiknGraph p41 = make_pikn(4, 1);
	CHECK(p41.g.split_count() == 4);  // 2 singles + 1 doubled pair
	CHECK(p41.g.connected);
	CHECK(graph_stats(p41.g).depth_of_mark == 1);
}

TEST_CASE("coloring counts") {
	// nested circles: smoothing both crossings of the 2-strand identity-free word
	MarkedClosure c = parse_closure("strands=2; word=1 1; bp=2");
	VinylGraph smooth = resolve(c, {1, 1});
	CHECK_FALSE(smooth.connected);
	CHECK(enumerate_colorings(smooth).size() == 2);

	VinylGraph full = resolve(c, {0, 0});
	Colorings col = enumerate_colorings(full);
	// per seed: all-straight and all-swapped survive
	for (long long q : col.qhat) CHECK((q == 1 || q == -1));
	CHECK(col.size() == 4);
}
