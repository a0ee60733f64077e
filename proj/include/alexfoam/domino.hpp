#ifndef ALEXFOAM_DOMINO_HPP
#define ALEXFOAM_DOMINO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace alexfoam {

// Dominos: plus and minus occupy one box, zero occupies two.
enum class Domino : uint8_t { Minus = 0, Zero = 1, Plus = 2 };

// Box alphabet: a zero domino contributes boxes ZeroA then ZeroB.
enum class Box : uint8_t { Minus, ZeroA, ZeroB, Plus };

struct DominoConfig {
	std::vector<Domino> dominos;

	int length() const;  // number of boxes
	int weight() const;  // #plus - #minus
	DominoConfig dual() const;
	std::vector<Box> boxes() const;
	std::string str() const;

	bool operator==(const DominoConfig& o) const { return dominos == o.dominos; }
	bool operator!=(const DominoConfig& o) const { return !(*this == o); }
	// anti-lexicographic on box sequences (compared right to left),
	// minus < zero < plus
	bool operator<(const DominoConfig& o) const;
};

// all configurations of box-length n, sorted ascending
std::vector<DominoConfig> enumerate_dominoes(int n);

}  // namespace alexfoam

#endif
