// graph -- edge-labeled graph databases and semipaths
#ifndef NRE_GRAPH_HPP
#define NRE_GRAPH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nre/nre.hpp"

namespace nre {

struct Edge {
	std::string source;
	std::string label;
	std::string target;

	friend auto operator<=>(const Edge&, const Edge&) = default;
	friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Finite edge-labeled directed graph. Edge labels are always forward;
/// inverse traversal is a query-level notion.
class GraphDb {
public:
	void add_node(const std::string& id) { intern_node(id); }
	void add_edge(const std::string& source, const std::string& label, const std::string& target);

	const std::set<std::string>& nodes() const noexcept { return nodes_; }
	const std::set<Edge>& edges() const noexcept { return edges_; }
	bool has_node(const std::string& id) const { return nodes_.contains(id); }

	// every node and edge of *this is in other
	bool subgraph_of(const GraphDb& other) const;

	// Flat view in insertion order: node i is node_names()[i], and each
	// triple is (source id, label id, target id).
	const std::vector<std::string>& node_names() const noexcept { return node_names_; }
	const std::vector<std::string>& label_names() const noexcept { return label_names_; }
	const std::vector<std::array<std::uint32_t, 3>>& triples() const noexcept { return triples_; }
	std::optional<std::uint32_t> node_id(const std::string& id) const;

	friend bool operator==(const GraphDb& a, const GraphDb& b) { return a.nodes_ == b.nodes_ && a.edges_ == b.edges_; }

private:
	std::uint32_t intern_node(const std::string& id);

	std::set<std::string> nodes_;
	std::set<Edge> edges_;
	std::vector<std::string> node_names_, label_names_;
	std::unordered_map<std::string, std::uint32_t> node_ids_, label_ids_;
	std::vector<std::array<std::uint32_t, 3>> triples_;
};

/// Parses `source<TAB>label<TAB>target` lines. Blank lines and lines starting
/// with '#' are skipped. A line holding a single field declares an isolated node.
GraphDb load_graph(std::string_view text);
GraphDb load_graph_file(const std::string& path);
std::string to_tsv(const GraphDb& g);

/// u1 a1 u2 a2 ... um am um+1 with pairwise distinct nodes.
struct Semipath {
	std::vector<std::string> nodes;
	std::vector<Symbol> letters;

	friend bool operator==(const Semipath&, const Semipath&) = default;
};

/// Semipath over canonical node ids u1..u{n+1}.
Semipath make_semipath(const std::vector<Symbol>& letters);
GraphDb to_graph(const Semipath& p);

/// The simple semipath whose nodes and witnessing edges are exactly those of g,
/// read from the lexicographically smaller endpoint.
std::optional<Semipath> resembles_semipath(const GraphDb& g);

/// Dense view used by the evaluators, with adjacency stored per label in
/// compressed rows. Node numbering follows GraphDb::node_names(); the graph
/// must outlive the view.
class IndexedGraph {
public:
	explicit IndexedGraph(const GraphDb& g);
	IndexedGraph(const IndexedGraph&) = delete;
	IndexedGraph& operator=(const IndexedGraph&) = delete;

	std::size_t node_count() const noexcept { return g_.node_names().size(); }
	const std::string& name(std::size_t i) const { return g_.node_names()[i]; }
	std::optional<std::size_t> index(const std::string& id) const;

	std::optional<std::size_t> label_id(const std::string& label) const;

	// successors of u along a label (inverse = follow edges backwards)
	std::span<const std::uint32_t> neighbours(std::size_t u, std::size_t label, bool inverse) const {
		const Rows& r = inverse ? backward_[label] : forward_[label];
		return {r.targets.data() + r.offsets[u], r.targets.data() + r.offsets[u + 1]};
	}
	std::size_t edge_count() const noexcept { return g_.triples().size(); }

private:
	struct Rows {
		std::vector<std::uint32_t> offsets, targets;
	};

	const GraphDb& g_;
	std::vector<Rows> forward_, backward_;
};

} // namespace nre

#endif
