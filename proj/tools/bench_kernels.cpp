// Compares the serial reference kernels against the OpenMP ones on the two
// hot spots: Gram block fill and exact rank computation.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "alexfoam/chain.hpp"

#ifdef ALEXFOAM_OPENMP
#include <omp.h>
#endif

using namespace alexfoam;

namespace {

double time_ms(const std::function<void()>& f) {
	auto t0 = std::chrono::steady_clock::now();
	f();
	return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
	    .count();
}

}  // namespace

int main() {
#ifdef ALEXFOAM_OPENMP
	std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
	std::printf("OpenMP disabled; both kernels run serially\n");
#endif

	// Gram fill on the largest reference graph we ship checks for
	{
		PiknGraph pg = make_pikn(4, 3);
		Colorings col = enumerate_colorings(pg.g);
		std::vector<Decoration> span = spanning_set(pg.g);
		Decoration extra(pg.g.nsegs, 0);
		extra[pg.g.marked_seg] = pg.g.level - 1;
		Matrix ms, mp;
		double ts = time_ms([&] { ms = gram_block(pg.g, col, span, span, extra, Kernel::Serial); });
		double tp = time_ms([&] { mp = gram_block(pg.g, col, span, span, extra, Kernel::Parallel); });
		std::printf("gram fill %4dx%-4d  serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  %s\n",
		            ms.rows, ms.cols, ts, tp, ts / tp, ms == mp ? "match" : "MISMATCH");
	}

	// rank of a random dense rational matrix
	{
		std::mt19937_64 rng(42);
		const int n = 160;
		Matrix m(n, n + 40);
		for (int i = 0; i < m.rows; ++i)
			for (int j = 0; j < m.cols; ++j)
				m(i, j) = Rational(long(rng() % 2001) - 1000, 1 + long(rng() % 7));
		long rs = 0, rp = 0;
		double ts = time_ms([&] { rs = rank(m, Kernel::Serial); });
		double tp = time_ms([&] { rp = rank(m, Kernel::Parallel); });
		std::printf("rank     %4dx%-4d  serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  %s\n",
		            m.rows, m.cols, ts, tp, ts / tp, rs == rp ? "match" : "MISMATCH");
	}

	// end to end: trefoil homology
	{
		MarkedClosure c = parse_closure("strands=3; word=1 2 1 2; bp=3");
		HomologyResult hs, hp;
		double ts = time_ms([&] { hs = homology(build_cube(c, Kernel::Serial), Kernel::Serial); });
		double tp =
		    time_ms([&] { hp = homology(build_cube(c, Kernel::Parallel), Kernel::Parallel); });
		std::printf("trefoil homology    serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  %s\n",
		            ts, tp, ts / tp, hs.poincare == hp.poincare ? "match" : "MISMATCH");
	}
	return 0;
}
