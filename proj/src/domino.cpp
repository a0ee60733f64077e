#include "alexfoam/domino.hpp"

#include <algorithm>

namespace alexfoam {

int DominoConfig::length() const {
	int n = 0;
	for (Domino d : dominos) n += (d == Domino::Zero) ? 2 : 1;
	return n;
}

int DominoConfig::weight() const {
	int w = 0;
	for (Domino d : dominos) {
		if (d == Domino::Plus) ++w;
		if (d == Domino::Minus) --w;
	}
	return w;
}

DominoConfig DominoConfig::dual() const {
	DominoConfig r;
	r.dominos.reserve(dominos.size());
	for (Domino d : dominos) {
		if (d == Domino::Plus)
			r.dominos.push_back(Domino::Minus);
		else if (d == Domino::Minus)
			r.dominos.push_back(Domino::Plus);
		else
			r.dominos.push_back(Domino::Zero);
	}
	return r;
}

std::vector<Box> DominoConfig::boxes() const {
	std::vector<Box> b;
	for (Domino d : dominos) {
		switch (d) {
			case Domino::Minus: b.push_back(Box::Minus); break;
			case Domino::Plus: b.push_back(Box::Plus); break;
			case Domino::Zero:
				b.push_back(Box::ZeroA);
				b.push_back(Box::ZeroB);
				break;
		}
	}
	return b;
}

namespace {
int box_rank(Box b) {
	switch (b) {
		case Box::Minus: return 0;
		case Box::ZeroA:
		case Box::ZeroB: return 1;
		case Box::Plus: return 2;
	}
	return 0;
}
}  // namespace

bool DominoConfig::operator<(const DominoConfig& o) const {
	auto a = boxes(), b = o.boxes();
	// configurations of equal length only; compare right to left
	for (size_t i = a.size(); i-- > 0;) {
		int ra = box_rank(a[i]), rb = box_rank(b[i]);
		if (ra != rb) return ra < rb;
	}
	return false;
}

std::string DominoConfig::str() const {
	std::string s = "[";
	bool first = true;
	for (Domino d : dominos) {
		if (!first) s += " ";
		s += (d == Domino::Plus ? "+" : d == Domino::Minus ? "-" : "00");
		first = false;
	}
	return s + "]";
}

std::vector<DominoConfig> enumerate_dominoes(int n) {
	std::vector<DominoConfig> out;
	DominoConfig cur;
	auto rec = [&](auto&& self, int rem) -> void {
		if (rem == 0) {
			out.push_back(cur);
			return;
		}
		for (Domino d : {Domino::Minus, Domino::Zero, Domino::Plus}) {
			int len = (d == Domino::Zero) ? 2 : 1;
			if (len > rem) continue;
			cur.dominos.push_back(d);
			self(self, rem - len);
			cur.dominos.pop_back();
		}
	};
	rec(rec, n);
	std::sort(out.begin(), out.end());
	return out;
}

}  // namespace alexfoam
