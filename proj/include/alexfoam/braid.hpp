#ifndef ALEXFOAM_BRAID_HPP
#define ALEXFOAM_BRAID_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace alexfoam {

struct ParseError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct BraidWord {
	int strands = 1;
	// letter i means sigma_{|i|} with sign(i); positions are 1..strands-1
	std::vector<int> letters;

	int n_plus() const;
	int n_minus() const;
	// perm[p-1] = position at the top of the strand entering at bottom position p
	std::vector<int> permutation() const;
	bool closure_is_knot() const;
};

struct MarkedClosure {
	BraidWord word;
	int bp_pos = 1;     // strand position carrying the base point
	int bp_height = 0;  // 0 = on the closure arc; h>=1 = just above letter h

	bool operator==(const MarkedClosure& o) const {
		return word.strands == o.word.strands && word.letters == o.word.letters &&
		       bp_pos == o.bp_pos && bp_height == o.bp_height;
	}
};

// grammar: strands=<int>; word=<space separated signed ints>; bp=<strand>
MarkedClosure parse_closure(const std::string& text);

// pull the base-point strand over every strand to its right and back, leaving
// the base point at the rightmost position (between the two excursions)
MarkedClosure rectify(const MarkedClosure& c);

// add a strand and a curl sigma_k^{sign}; base point moves to the curl strand
MarkedClosure markov_stabilize(const MarkedClosure& c, int sign);

std::string closure_str(const MarkedClosure& c);

}  // namespace alexfoam

#endif
