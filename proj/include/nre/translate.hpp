// translate -- NRE to A2FA compilers and the helper automata of the two
// containment pipelines
#ifndef NRE_TRANSLATE_HPP
#define NRE_TRANSLATE_HPP

#include <set>
#include <string>

#include "nre/a2fa.hpp"
#include "nre/nre.hpp"
#include "nre/oneway.hpp"

namespace nre {

/// Output of the inductive construction, before the wrapper. `marked` is the
/// single marked final state.
struct MarkedA2fa {
	A2fa automaton;
	StateId marked;
};

/// Semipath construction over a semipath alphabet (Alphabet::semipath).
MarkedA2fa compile_sp(const Nre& e, const AlphabetPtr& alphabet);
/// Same, over labels(e) with the S/E markers available.
MarkedA2fa compile_sp(const Nre& e);

/// k-branch construction over a Gamma alphabet with the same k.
MarkedA2fa compile_gen(const Nre& e, const AlphabetPtr& alphabet);
MarkedA2fa compile_gen(const Nre& e, int k);

/// Adds the backward-scanning initial state and lets every final state run
/// to the end of the word.
A2fa wrap(const MarkedA2fa& m);

/// Endpoint pinning with the S/E markers: starts right after the S token,
/// and the marked branch must end on the node right after the E token. The
/// alphabet of m must contain the markers.
A2fa mark_se(const MarkedA2fa& m);

/// Full words %w1 S w2 E w3& (ordered) or with one S and one E token in any
/// order (ordered = false), all other tokens marker-free.
Nfa shape_automaton(const AlphabetPtr& alphabet, bool ordered = true);

/// Token strings (no % or &) of one branch leaving level i into level j.
/// `literal` keeps only letter tokens inside the branch.
Nfa build_Lij(int i, int j, const AlphabetPtr& gamma, bool literal = false);
Nfa build_Bi(int i, const AlphabetPtr& gamma, bool literal = false);
/// Backward scanner from (j,$,j) to the token opening the branch.
A2fa build_Bj_minus(int j, const AlphabetPtr& gamma);

/// Accepts exactly the encodings %trans(t)& of k-branch semipaths with at
/// least one edge. With markers in the alphabet, marker tokens are accepted
/// as the only edge leaving a node.
Nfa encoding_validator(const AlphabetPtr& gamma);

/// Marked word for the semipath letters w with S before a_i and E before a_j
/// (1-based, up to |w|+1). For i == j the S comes first.
std::vector<TokenId> place_markers(const Alphabet& alphabet, const std::vector<TokenId>& w, std::size_t i,
                                   std::size_t j);

/// All (i,j) whose S/E placement is accepted by a.
std::set<std::pair<std::size_t, std::size_t>> endpoints(const A2fa& a, const std::vector<TokenId>& w);

/// Sorted union of the base labels of the expressions.
std::vector<std::string> shared_labels(const Nre& a, const Nre& b);

} // namespace nre

#endif
