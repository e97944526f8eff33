// random -- seeded random expressions over {a, b}
#ifndef NRE_RANDOM_HPP
#define NRE_RANDOM_HPP

#include <random>

#include "nre/nre.hpp"

namespace nre {

class RandomNre {
public:
	explicit RandomNre(unsigned seed) : rng_(seed) {}

	// Random expression with at most max_size nodes and nesting depth <= max_depth.
	Nre make(int max_size, int max_depth) { return gen(max_size, max_depth); }

private:
	Nre gen(int size, int depth) {
		std::uniform_int_distribution<int> pick(0, 9);
		int choice = size <= 1 ? 0 : pick(rng_);
		if (choice <= 3) {
			std::uniform_int_distribution<int> leaf(0, 8);
			int l = leaf(rng_);
			if (l == 8)
				return Nre::epsilon();
			return Nre::atom(l % 4 < 2 ? "a" : "b", l % 2 == 1);
		}
		if (choice <= 5 && size >= 3) {
			std::uniform_int_distribution<int> split(1, size - 2);
			int left = split(rng_);
			Nre l = gen(left, depth), r = gen(size - 1 - left, depth);
			return choice == 4 ? Nre::concat(l, r) : Nre::alt(l, r);
		}
		if (choice <= 7 || depth <= 1)
			return Nre::star(gen(size - 1, depth));
		return Nre::nest(gen(size - 1, depth - 1));
	}

	std::mt19937 rng_;
};

} // namespace nre

#endif
