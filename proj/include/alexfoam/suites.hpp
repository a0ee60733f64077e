#ifndef ALEXFOAM_SUITES_HPP
#define ALEXFOAM_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "alexfoam/linalg.hpp"

namespace alexfoam {

// Self-check suites shared by the CLI `check` command and the acceptance
// runner. Each suite verifies one structural identity of the calculator.
struct SuiteResult {
	std::string name;
	bool pass = false;
	std::string detail;
};

struct SuiteOptions {
	uint64_t seed = 1;
	int max_strands = 3;    // random closures
	int max_crossings = 6;  // random closures, before rectification
	int n_random = 20;
	int max_tree_vertices = 5;
	Kernel kernel = Kernel::Parallel;
};

SuiteResult suite_dominoes();                       // weight enumeration and duality
SuiteResult suite_trees(int max_vertices);          // integrality of tree evaluations
SuiteResult suite_pell(Kernel kernel);              // graded dims of reference graphs
SuiteResult suite_generic_point(uint64_t seed);     // evaluation point independence
SuiteResult suite_dot_nilpotent(uint64_t seed, Kernel kernel);  // dot^k = 0
SuiteResult suite_edge_maps(Kernel kernel);         // adjointness and composites
SuiteResult suite_d2(const SuiteOptions& opt);      // d^2 = 0 on random closures
SuiteResult suite_invariance(Kernel kernel);        // stabilization / base point moves
SuiteResult suite_antitriangular(Kernel kernel);    // pairing shape on the reference graph
SuiteResult suite_kernels(uint64_t seed);           // serial vs parallel agreement

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt);

}  // namespace alexfoam

#endif
