// oracle -- brute-force ground truth for testing the decision procedures
#ifndef NRE_ORACLE_HPP
#define NRE_ORACLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "nre/evaluator.hpp"
#include "nre/graph.hpp"
#include "nre/kbranch.hpp"
#include "nre/nre.hpp"
#include "nre/verdict.hpp"

namespace nre::oracle {

struct EnumSpec {
	std::vector<std::string> labels{"a", "b"};
	int max_size = 3; // letters for semipaths, edges for trees
	int k = 1;
	bool inverses = true;
};

/// Literal transcription of the inductive semantics; star iterates unions to a fixpoint.
NodeRelation naive_eval(const Nre& e, const GraphDb& g);

std::vector<Symbol> alphabet(const EnumSpec& spec);

/// Every letter sequence of length 0..max_size, shortest first, over canonical ids u1...
void enum_semipaths(const EnumSpec& spec, const std::function<void(const Semipath&)>& visit);
std::vector<Semipath> semipaths(const EnumSpec& spec);

/// Every valid k-branch semipath with at most max_size edges, fewest edges first.
void enum_kbranch(const EnumSpec& spec, const std::function<void(const KBranchSemipath&)>& visit);
std::vector<KBranchSemipath> kbranch_trees(const EnumSpec& spec);

enum class Mode { Semipath, KBranch };

/// First graph (in enumeration order) with a pair in [[lhs]] \ [[rhs]]. A
/// Contained answer only holds up to the enumeration bound.
Verdict oracle_contains(const Nre& lhs, const Nre& rhs, const EnumSpec& spec, Mode mode);

/// Parallel over the enumerated graphs. Returns the same verdict as oracle_contains.
Verdict oracle_contains_parallel(const Nre& lhs, const Nre& rhs, const EnumSpec& spec, Mode mode);

} // namespace nre::oracle

#endif
