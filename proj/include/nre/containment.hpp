// containment -- the semipath and general containment pipelines
#ifndef NRE_CONTAINMENT_HPP
#define NRE_CONTAINMENT_HPP

#include <cstddef>
#include <stdexcept>

#include "nre/nre.hpp"
#include "nre/oneway.hpp"
#include "nre/verdict.hpp"

namespace nre {

struct ContainmentOptions {
	enum class Strategy { Exact, Bounded, Both };
	Strategy strategy = Strategy::Exact;
	// bounded search: words with at most this many non-marker tokens
	std::size_t max_len = 6;
	std::size_t state_budget = default_state_budget();
};

/// Raised when a counterexample fails the naive_eval double check, or the
/// exact and bounded strategies contradict each other.
class ContainmentBug : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

/// Containment over simple semipaths.
Verdict sp_contains(const Nre& lhs, const Nre& rhs, const ContainmentOptions& opts = {});

/// Containment over k-branch semipaths with k = nesting_depth(lhs).
Verdict gen_contains(const Nre& lhs, const Nre& rhs, const ContainmentOptions& opts = {});

/// Throws ContainmentBug unless the pair is in [[lhs]] and not in [[rhs]] on
/// the counterexample graph.
void verify_counterexample(const Nre& lhs, const Nre& rhs, const Counterexample& cx);

} // namespace nre

#endif
