#include "alexfoam/braid.hpp"

#include <sstream>

namespace alexfoam {

int BraidWord::n_plus() const {
	int n = 0;
	for (int l : letters) n += (l > 0);
	return n;
}

int BraidWord::n_minus() const {
	int n = 0;
	for (int l : letters) n += (l < 0);
	return n;
}

std::vector<int> BraidWord::permutation() const {
	std::vector<int> perm(strands);
	for (int p = 0; p < strands; ++p) perm[p] = p;
	// track positions bottom to top; a crossing at position i swaps i, i+1
	for (int l : letters) {
		int i = std::abs(l) - 1;
		for (int p = 0; p < strands; ++p) {
			if (perm[p] == i)
				perm[p] = i + 1;
			else if (perm[p] == i + 1)
				perm[p] = i;
		}
	}
	std::vector<int> out(strands);
	for (int p = 0; p < strands; ++p) out[p] = perm[p] + 1;
	return out;
}

bool BraidWord::closure_is_knot() const {
	auto perm = permutation();
	int cur = 1, len = 0;
	do {
		cur = perm[cur - 1];
		++len;
	} while (cur != 1 && len <= strands);
	return len == strands;
}

namespace {

std::string trim(const std::string& s) {
	size_t a = s.find_first_not_of(" \t");
	if (a == std::string::npos) return "";
	size_t b = s.find_last_not_of(" \t");
	return s.substr(a, b - a + 1);
}

int parse_int(const std::string& tok, const std::string& what) {
	try {
		size_t pos = 0;
		int v = std::stoi(tok, &pos);
		if (pos != tok.size()) throw std::invalid_argument("");
		return v;
	} catch (...) {
		throw ParseError("malformed " + what + " token: '" + tok + "'");
	}
}

}  // namespace

MarkedClosure parse_closure(const std::string& text) {
	std::string strands_s, word_s, bp_s;
	bool have_strands = false, have_word = false, have_bp = false;
	std::stringstream ss(text);
	std::string part;
	while (std::getline(ss, part, ';')) {
		part = trim(part);
		if (part.empty()) continue;
		size_t eq = part.find('=');
		if (eq == std::string::npos) throw ParseError("expected key=value, got '" + part + "'");
		std::string key = trim(part.substr(0, eq));
		std::string val = trim(part.substr(eq + 1));
		if (key == "strands") {
			strands_s = val;
			have_strands = true;
		} else if (key == "word") {
			word_s = val;
			have_word = true;
		} else if (key == "bp") {
			bp_s = val;
			have_bp = true;
		} else {
			throw ParseError("unknown key '" + key + "'");
		}
	}
	if (!have_strands) throw ParseError("missing 'strands'");
	if (!have_word) throw ParseError("missing 'word'");
	if (!have_bp) throw ParseError("missing base point 'bp'");

	MarkedClosure c;
	c.word.strands = parse_int(strands_s, "strands");
	if (c.word.strands < 1) throw ParseError("strands must be >= 1");
	std::stringstream ws(word_s);
	std::string tok;
	while (ws >> tok) {
		int l = parse_int(tok, "word letter");
		if (l == 0 || std::abs(l) > c.word.strands - 1)
			throw ParseError("word letter out of range: '" + tok + "'");
		c.word.letters.push_back(l);
	}
	c.bp_pos = parse_int(bp_s, "bp");
	if (c.bp_pos < 1 || c.bp_pos > c.word.strands)
		throw ParseError("base point strand out of range: '" + bp_s + "'");
	c.bp_height = 0;
	return c;
}

MarkedClosure rectify(const MarkedClosure& c) {
	const int k = c.word.strands;
	if (c.bp_pos == k) return c;
	MarkedClosure r = c;
	const int j = c.bp_pos;
	// travel rightward passing over (positive crossings), then back over
	// (negative); the two halves cancel pairwise by Reidemeister 2
	for (int p = j; p <= k - 1; ++p) r.word.letters.push_back(p);
	r.bp_pos = k;
	r.bp_height = int(r.word.letters.size());
	for (int p = k - 1; p >= j; --p) r.word.letters.push_back(-p);
	return r;
}

MarkedClosure markov_stabilize(const MarkedClosure& c, int sign) {
	const int k = c.word.strands;
	if (c.bp_pos != k) throw std::invalid_argument("markov_stabilize: base point must be rightmost");
	MarkedClosure r = c;
	r.word.strands = k + 1;
	r.word.letters.push_back(sign > 0 ? k : -k);
	r.bp_pos = k + 1;
	r.bp_height = 0;
	return r;
}

std::string closure_str(const MarkedClosure& c) {
	std::ostringstream os;
	os << "strands=" << c.word.strands << "; word=";
	bool first = true;
	for (int l : c.word.letters) {
		if (!first) os << " ";
		os << l;
		first = false;
	}
	os << "; bp=" << c.bp_pos;
	if (c.bp_height != 0) os << " (interior height " << c.bp_height << ")";
	return os.str();
}

}  // namespace alexfoam
