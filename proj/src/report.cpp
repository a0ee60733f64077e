#include "alexfoam/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#ifdef ALEXFOAM_OPENMP
#include <omp.h>
#endif

namespace alexfoam {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
	return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
	    .count();
}

}  // namespace

Report run_pipeline(const MarkedClosure& c, bool do_rectify, Kernel kernel) {
	if (!c.word.closure_is_knot())
		throw std::invalid_argument("multi-component link unsupported");

	Report r;
	r.input = closure_str(c);
	r.run = c;
	if (do_rectify && c.bp_pos != c.word.strands) {
		r.run = rectify(c);
		r.rectified = true;
	}
	r.experimental = !do_rectify && c.bp_pos != c.word.strands;
#ifdef ALEXFOAM_OPENMP
	r.threads = omp_get_max_threads();
#endif

	auto t0 = std::chrono::steady_clock::now();
	ResolutionCube cube = build_cube(r.run, kernel);
	r.build_ms = ms_since(t0);

	t0 = std::chrono::steady_clock::now();
	r.hom = homology(cube, kernel);
	r.homology_ms = ms_since(t0);

	t0 = std::chrono::steady_clock::now();
	r.alex_q = alexander_q(c.word);
	r.alexander_ms = ms_since(t0);
	r.euler_matches = (euler(r.hom) == r.alex_q);
	return r;
}

std::string report_json(const Report& r) {
	nlohmann::json j;
	j["input"] = r.input;
	j["strands"] = r.run.word.strands;
	j["word"] = r.run.word.letters;
	j["bp"] = r.run.bp_pos;
	j["rectified"] = r.rectified;
	j["experimental"] = r.experimental;
	j["threads"] = r.threads;
	j["betti"] = nlohmann::json::array();
	for (const auto& [tq, d] : r.hom.betti)
		j["betti"].push_back({{"t", tq.first}, {"q", tq.second}, {"dim", d}});
	j["poincare"] = r.hom.poincare.str();
	j["euler"] = euler(r.hom).str();
	j["alexander_q"] = r.alex_q.str();
	j["euler_matches_alexander"] = r.euler_matches;
	j["tmin"] = r.hom.tmin;
	j["vertex_dims"] = r.hom.vertex_dims;
	j["diff_ranks"] = r.hom.diff_ranks;
	j["timings_ms"] = {{"build", r.build_ms},
	                   {"homology", r.homology_ms},
	                   {"alexander", r.alexander_ms}};
	return j.dump(2);
}

std::string report_text(const Report& r) {
	std::ostringstream os;
	os << "input: " << r.input << "\n";
	if (r.rectified) os << "rectified: " << closure_str(r.run) << "\n";
	if (r.experimental) os << "warning: rectification skipped (experimental)\n";
	os << "poincare: " << r.hom.poincare.str() << "\n";
	for (const auto& [tq, d] : r.hom.betti)
		os << "  betti t=" << tq.first << " q=" << tq.second << " dim=" << d << "\n";
	os << "euler: " << euler(r.hom).str() << "\n";
	os << "alexander (t=q^2): " << r.alex_q.str() << "\n";
	os << "euler matches alexander: " << (r.euler_matches ? "yes" : "no") << "\n";
	os << "timings: build " << r.build_ms << " ms, homology " << r.homology_ms
	   << " ms, alexander " << r.alexander_ms << " ms (threads " << r.threads << ")\n";
	return os.str();
}

}  // namespace alexfoam
