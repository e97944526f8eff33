// evaluator -- NRE evaluation over graph databases
#ifndef NRE_EVALUATOR_HPP
#define NRE_EVALUATOR_HPP

#include <memory>
#include <set>
#include <string>
#include <utility>

#include "nre/graph.hpp"
#include "nre/kbranch.hpp"
#include "nre/nre.hpp"

namespace nre {

using NodeRelation = std::set<std::pair<std::string, std::string>>;

/// Full relation [[e]]_G. Sources are processed in parallel when built with OpenMP.
NodeRelation eval(const Nre& e, const GraphDb& g);

/// Same result as eval, single-threaded. Kept as the reference for the parallel path.
NodeRelation eval_serial(const Nre& e, const GraphDb& g);

/// (u,v) in [[e]]_G in O(|G| * |e|): nested tests are resolved bottom-up to node
/// sets, then a single search runs over the product of G with the expression automaton.
/// Throws GraphError for unknown node ids.
bool eval_check(const Nre& e, const GraphDb& g, const std::string& u, const std::string& v);

/// Reusable form of eval_check for repeated queries on one graph; g must
/// outlive the checker.
class PairChecker {
public:
	PairChecker(const Nre& e, const GraphDb& g);
	~PairChecker();
	PairChecker(const PairChecker&) = delete;
	PairChecker& operator=(const PairChecker&) = delete;

	bool check(const std::string& u, const std::string& v) const;

private:
	struct Impl;
	std::unique_ptr<Impl> impl_;
};

/// T has the shape of e: atoms are single edges, concatenation splits T at an
/// element w into the part outside w's subtree (plus w) and w's subtree, stars
/// chain such splits, nesting defers to its operand. Epsilon is canonical on
/// single-node trees.
bool is_canonical(const KBranchSemipath& t, const Nre& e);

} // namespace nre

#endif
