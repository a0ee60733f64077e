#ifndef ALEXFOAM_REPORT_HPP
#define ALEXFOAM_REPORT_HPP

#include <string>

#include "alexfoam/alexander.hpp"
#include "alexfoam/chain.hpp"

namespace alexfoam {

struct Report {
	std::string input;
	MarkedClosure run;  // the closure actually resolved (after rectification)
	bool rectified = false;
	bool experimental = false;  // rectification was skipped on request
	HomologyResult hom;
	LaurentPoly alex_q;  // Alexander polynomial at t = q^2
	bool euler_matches = false;
	double build_ms = 0, homology_ms = 0, alexander_ms = 0;
	int threads = 1;
};

// full pipeline: rectify (unless skipped), build the cube, take homology,
// cross-check the graded Euler characteristic against the Alexander
// polynomial; throws std::invalid_argument when the closure is not a knot
Report run_pipeline(const MarkedClosure& c, bool do_rectify = true,
                    Kernel kernel = Kernel::Parallel);

std::string report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace alexfoam

#endif
