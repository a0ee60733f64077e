// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "alexfoam/report.hpp"
#include "alexfoam/suites.hpp"

using namespace alexfoam;

namespace {

int failures = 0;

struct Timer {
	std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
	double s() const {
		return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	}
};

void report(const std::string& name, bool pass, double secs, const std::string& detail = "") {
	std::printf("%s  %-38s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", name.c_str(), secs,
	            detail.empty() ? "" : "  ", detail.c_str());
	if (!pass) ++failures;
}

BiGradedPoly poincare_of(const std::string& s) {
	return run_pipeline(parse_closure(s)).hom.poincare;
}

BiGradedPoly torus_poincare(int n) {
	// closure of sigma_1^{2n+1}: sum_{i=0}^{2n} t^i q^{2n-2i}
	BiGradedPoly p;
	for (int i = 0; i <= 2 * n; ++i) p.add(i, 2 * n - 2 * i, 1);
	return p;
}

}  // namespace

int main() {
	// 1: unknot
	{
		Timer tm;
		BiGradedPoly one;
		one.add(0, 0, 1);
		bool pass = poincare_of("strands=2; word=1; bp=2") == one &&
		            poincare_of("strands=2; word=-1; bp=2") == one;
		double s = tm.s();
		report("1 unknot homology", pass && s < 1.0, s, s >= 1.0 ? "over budget" : "");
	}

	// 2: trefoil Betti data
	{
		Timer tm;
		Report r = run_pipeline(parse_closure("strands=2; word=1 1 1; bp=2"));
		bool pass = r.hom.poincare == torus_poincare(1);
		pass = pass && r.hom.vertex_dims == std::vector<long>{4, 6, 3, 0};
		pass = pass && r.hom.diff_ranks.size() == 4 && r.hom.diff_ranks[0] == 3 &&
		       r.hom.diff_ranks[1] == 2 && r.hom.diff_ranks[2] == 0;
		double s = tm.s();
		report("2 trefoil homology", pass && s < 5.0, s, s >= 5.0 ? "over budget" : "");
	}

	// 3: larger torus knots
	{
		Timer tm;
		bool pass = poincare_of("strands=2; word=1 1 1 1 1; bp=2") == torus_poincare(2) &&
		            poincare_of("strands=2; word=1 1 1 1 1 1 1; bp=2") == torus_poincare(3);
		double s = tm.s();
		report("3 torus knots T(2,5), T(2,7)", pass && s < 60.0, s,
		       s >= 60.0 ? "over budget" : "");
	}

	// 4: graded Euler characteristic equals the Alexander polynomial
	{
		Timer tm;
		const char* knots[] = {
		    "strands=1; word=; bp=1",               // unknot
		    "strands=2; word=1 1 1; bp=2",          // 3_1
		    "strands=3; word=1 -2 1 -2; bp=3",      // 4_1
		    "strands=2; word=1 1 1 1 1; bp=2",      // 5_1
		    "strands=3; word=1 1 1 2 -1 2; bp=3",   // 5_2
		};
		bool pass = true;
		std::string detail;
		for (const char* k : knots) {
			Report r = run_pipeline(parse_closure(k));
			if (!r.euler_matches) {
				pass = false;
				detail = std::string("mismatch for ") + k;
				break;
			}
		}
		double s = tm.s();
		report("4 euler = alexander on knot suite", pass && s < 300.0, s,
		       s >= 300.0 ? "over budget" : detail);
	}

	// 5: graded dimensions of the reference graphs
	{
		Timer tm;
		SuiteResult r = suite_pell(Kernel::Parallel);
		double s = tm.s();
		report("5 reference graph dimensions", r.pass && s < 120.0, s,
		       s >= 120.0 ? "over budget" : r.detail);
	}

	// 6: anti-triangularity of the domino pairing
	{
		Timer tm;
		SuiteResult r = suite_antitriangular(Kernel::Parallel);
		report("6 anti-triangular pairing", r.pass, tm.s(), r.detail);
	}

	// 7: invariance under stabilization and base point moves
	{
		Timer tm;
		SuiteResult r = suite_invariance(Kernel::Parallel);
		report("7 invariance", r.pass, tm.s(), r.detail);
	}

	// 8: structural property suites
	{
		Timer tm;
		SuiteOptions opt;
		bool pass = true;
		std::string detail;
		for (const SuiteResult& r :
		     {suite_dominoes(), suite_trees(opt.max_tree_vertices), suite_generic_point(opt.seed),
		      suite_dot_nilpotent(opt.seed, opt.kernel), suite_edge_maps(opt.kernel),
		      suite_d2(opt), suite_kernels(opt.seed)}) {
			if (!r.pass) {
				pass = false;
				detail = r.name + ": " + r.detail;
				break;
			}
		}
		report("8 property suites", pass, tm.s(), detail);
	}

	return failures == 0 ? 0 : 1;
}
