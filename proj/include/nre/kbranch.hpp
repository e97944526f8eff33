// kbranch -- k-branch semipaths and their string encoding over K x (Sigma + $) x K
//
// Tree elements are digit strings over 1..k rooted at "1". The encoding of a
// node emits its higher-class children in ascending class order and its
// same-class child last; a leaf of class c encodes as (c,$,c).
#ifndef NRE_KBRANCH_HPP
#define NRE_KBRANCH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nre/graph.hpp"
#include "nre/nre.hpp"

namespace nre {

using Element = std::string;

inline int element_class(const Element& x) { return x.back() - '0'; }
inline Element parent_of(const Element& x) { return x.substr(0, x.size() - 1); }

class KBranchError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

struct KBranchSemipath {
	int k = 1;
	std::set<Element> domain{"1"};
	// label of the edge parent_of(child) -> child
	std::map<Element, Symbol> labels;

	std::vector<Element> children(const Element& x) const;
	std::size_t edge_count() const noexcept { return labels.size(); }
	std::size_t leaf_count() const;
	bool contains(const Element& x) const { return domain.contains(x); }

	friend bool operator==(const KBranchSemipath&, const KBranchSemipath&) = default;
};

// Throws KBranchError describing the first violated structural condition.
void validate(const KBranchSemipath& t);
bool is_valid(const KBranchSemipath& t);

KBranchSemipath tree_from_edges(int k, const std::vector<std::pair<Element, Symbol>>& child_labels);

/// One letter of the encoding. `label == nullopt` is the leaf terminator $.
struct GammaToken {
	int from = 1;
	std::optional<Symbol> label;
	int to = 1;

	bool is_leaf() const noexcept { return !label.has_value(); }
	std::string str() const;

	friend auto operator<=>(const GammaToken&, const GammaToken&) = default;
	friend bool operator==(const GammaToken&, const GammaToken&) = default;
};

/// Tokens between the implicit % and & markers.
struct EncodedWord {
	std::vector<GammaToken> tokens;

	std::string str() const;
	friend bool operator==(const EncodedWord&, const EncodedWord&) = default;
};

/// Parses the text rendering `%(1,a,1)(1,$,1)&`.
EncodedWord parse_encoded(std::string_view text);

EncodedWord trans(const KBranchSemipath& t);

/// 1-based index over the marked word (% at index 1) of the first token of
/// the encoding of `node`.
std::size_t pos(const KBranchSemipath& t, const Element& node);

/// The tree whose encoding is w, if w encodes a valid k-branch semipath.
std::optional<KBranchSemipath> decode(const EncodedWord& w, int k);

/// T[u -> S, v -> E]: u gains a single S-labelled child that adopts its former
/// children, then the node carrying v's content gets an E-labelled child the same way.
KBranchSemipath expand_markers(const KBranchSemipath& t, const Element& u, const Element& v);

struct MarkedTree {
	KBranchSemipath tree;
	Element u, v;
};

/// Inverse of expand_markers.
std::optional<MarkedTree> contract_markers(const KBranchSemipath& t);

GraphDb to_graph(const KBranchSemipath& t);

KBranchSemipath semipath_to_tree(const std::vector<Symbol>& letters);
std::optional<std::vector<Symbol>> tree_to_letters(const KBranchSemipath& t);

std::string to_json(const KBranchSemipath& t);
KBranchSemipath tree_from_json(std::string_view text);

} // namespace nre

#endif
