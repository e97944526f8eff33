#ifndef NRE_VERDICT_HPP
#define NRE_VERDICT_HPP

#include <optional>
#include <string>
#include <utility>

#include "nre/graph.hpp"

namespace nre {

struct Counterexample {
	GraphDb graph;
	std::pair<std::string, std::string> pair;
	// marked word the decision procedure found, empty for oracle verdicts
	std::string witness;
};

struct Verdict {
	enum class Outcome { Contained, NotContained, Unknown };

	Outcome outcome = Outcome::Unknown;
	std::optional<Counterexample> counterexample;
	// why the answer is Unknown, or the bound a Contained answer holds up to
	std::string note;

	bool contained() const noexcept { return outcome == Outcome::Contained; }
	bool not_contained() const noexcept { return outcome == Outcome::NotContained; }
};

std::string to_string(Verdict::Outcome o);

} // namespace nre

#endif
