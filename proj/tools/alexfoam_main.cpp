#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alexfoam/report.hpp"
#include "alexfoam/suites.hpp"

#ifdef ALEXFOAM_OPENMP
#include <omp.h>
#endif

namespace {

// exit codes: 0 success, 1 failed check/mismatch, 2 bad input
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void set_threads(int threads) {
#ifdef ALEXFOAM_OPENMP
	if (threads > 0) omp_set_num_threads(threads);
#else
	(void)threads;
#endif
}

int cmd_homology(const std::string& input, bool json, bool no_rectify, int threads,
                 bool serial) {
	set_threads(threads);
	alexfoam::MarkedClosure c;
	try {
		c = alexfoam::parse_closure(input);
	} catch (const alexfoam::ParseError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	try {
		alexfoam::Report r = alexfoam::run_pipeline(
		    c, !no_rectify, serial ? alexfoam::Kernel::Serial : alexfoam::Kernel::Parallel);
		std::cout << (json ? alexfoam::report_json(r) : alexfoam::report_text(r)) << "\n";
		return r.euler_matches ? 0 : kExitFail;
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
}

int cmd_statespace(const std::string& input, const std::string& bits, bool json, int threads) {
	set_threads(threads);
	alexfoam::MarkedClosure c;
	try {
		c = alexfoam::parse_closure(input);
	} catch (const alexfoam::ParseError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	if (bits.size() != c.word.letters.size()) {
		std::cerr << "error: expected " << c.word.letters.size() << " resolution bits, got "
		          << bits.size() << "\n";
		return kExitUsage;
	}
	std::vector<int> state;
	for (char b : bits) {
		if (b != '0' && b != '1') {
			std::cerr << "error: resolution bits must be 0 or 1\n";
			return kExitUsage;
		}
		state.push_back(b - '0');
	}
	alexfoam::VinylGraph g = alexfoam::resolve(c, state);
	alexfoam::QuotientSpace sp = alexfoam::state_space(g);
	if (json) {
		std::cout << "{\"connected\": " << (g.connected ? "true" : "false")
		          << ", \"splits\": " << g.split_count() << ", \"segments\": " << g.nsegs
		          << ", \"dim\": " << sp.dim() << ", \"graded_dim\": \""
		          << sp.graded_dim.str() << "\"}\n";
	} else {
		std::cout << "graph: " << g.nsegs << " segments, " << g.split_count() << " splits, "
		          << (g.connected ? "connected" : "disconnected") << "\n";
		std::cout << "dim: " << sp.dim() << "\n";
		std::cout << "graded dim: " << sp.graded_dim.str() << "\n";
	}
	return 0;
}

int cmd_check(const std::string& suite, uint64_t seed, int max_k, int max_vertices,
              int threads) {
	set_threads(threads);
	alexfoam::SuiteOptions opt;
	opt.seed = seed;
	opt.max_strands = max_k;
	opt.max_tree_vertices = max_vertices;
	std::vector<alexfoam::SuiteResult> results;
	if (suite.empty()) {
		results = alexfoam::run_all_suites(opt);
	} else if (suite == "dominoes") {
		results.push_back(alexfoam::suite_dominoes());
	} else if (suite == "trees") {
		results.push_back(alexfoam::suite_trees(opt.max_tree_vertices));
	} else if (suite == "pell") {
		results.push_back(alexfoam::suite_pell(opt.kernel));
	} else if (suite == "generic-point") {
		results.push_back(alexfoam::suite_generic_point(opt.seed));
	} else if (suite == "dot") {
		results.push_back(alexfoam::suite_dot_nilpotent(opt.seed, opt.kernel));
	} else if (suite == "edge-maps") {
		results.push_back(alexfoam::suite_edge_maps(opt.kernel));
	} else if (suite == "d2") {
		results.push_back(alexfoam::suite_d2(opt));
	} else if (suite == "invariance") {
		results.push_back(alexfoam::suite_invariance(opt.kernel));
	} else if (suite == "anti-triangular") {
		results.push_back(alexfoam::suite_antitriangular(opt.kernel));
	} else if (suite == "kernels") {
		results.push_back(alexfoam::suite_kernels(opt.seed));
	} else {
		std::cerr << "error: unknown suite '" << suite << "'\n";
		return kExitUsage;
	}
	bool all = true;
	for (const auto& r : results) {
		std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
		if (!r.pass) std::cout << "  (" << r.detail << ")";
		std::cout << "\n";
		all = all && r.pass;
	}
	return all ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"bigraded homology of marked braid closures"};
	app.require_subcommand(1);

	std::string input, bits, suite;
	bool json = false, no_rectify = false, serial = false;
	int threads = 0, max_k = 3, max_vertices = 5;
	uint64_t seed = 1;

	auto* hom = app.add_subcommand("homology", "compute the bigraded Betti table of a closure");
	hom->add_option("closure", input, "closure, e.g. \"strands=2; word=1 1 1; bp=2\"")
	    ->required();
	hom->add_flag("--json", json, "machine readable output");
	hom->add_flag("--no-rectify", no_rectify,
	              "skip base point rectification (experimental)");
	hom->add_flag("--serial", serial, "use the serial reference kernels");
	hom->add_option("--threads", threads, "worker thread count (0 = default)");

	auto* ss = app.add_subcommand("statespace", "inspect the state space of one resolution");
	ss->add_option("closure", input, "closure description")->required();
	ss->add_option("bits", bits, "resolution bits, one per crossing")->required();
	ss->add_flag("--json", json, "machine readable output");
	ss->add_option("--threads", threads, "worker thread count (0 = default)");

	auto* chk = app.add_subcommand("check", "run the self-check suites");
	chk->add_option("--suite", suite, "run a single suite by name");
	chk->add_option("--seed", seed, "random seed");
	chk->add_option("--max-k", max_k, "max strand count for random closures");
	chk->add_option("--max-vertices", max_vertices, "max vertices in the tree suite");
	chk->add_option("--threads", threads, "worker thread count (0 = default)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : kExitUsage;
	}

	try {
		if (hom->parsed()) return cmd_homology(input, json, no_rectify, threads, serial);
		if (ss->parsed()) return cmd_statespace(input, bits, json, threads);
		return cmd_check(suite, seed, max_k, max_vertices, threads);
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitFail;
	}
}
