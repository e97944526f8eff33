// hash.hpp -- hashing for vector keys in the memo tables
#ifndef NRE_SRC_HASH_HPP
#define NRE_SRC_HASH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nre {

struct VectorHash {
	template <class T>
	std::size_t operator()(const std::vector<T>& v) const noexcept {
		std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
		for (const auto& x : v) {
			h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
		}
		return static_cast<std::size_t>(h);
	}
};

} // namespace nre

#endif
