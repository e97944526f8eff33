#include "nre/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nre {

std::uint32_t GraphDb::intern_node(const std::string& id) {
	auto [it, fresh] = node_ids_.emplace(id, static_cast<std::uint32_t>(node_names_.size()));
	if (fresh) {
		node_names_.push_back(id);
		nodes_.insert(id);
	}
	return it->second;
}

void GraphDb::add_edge(const std::string& source, const std::string& label, const std::string& target) {
	std::uint32_t s = intern_node(source), t = intern_node(target);
	if (!edges_.insert(Edge{source, label, target}).second)
		return;
	auto [it, fresh] = label_ids_.emplace(label, static_cast<std::uint32_t>(label_names_.size()));
	if (fresh)
		label_names_.push_back(label);
	triples_.push_back({s, it->second, t});
}

std::optional<std::uint32_t> GraphDb::node_id(const std::string& id) const {
	auto it = node_ids_.find(id);
	if (it == node_ids_.end())
		return std::nullopt;
	return it->second;
}

bool GraphDb::subgraph_of(const GraphDb& other) const {
	return std::includes(other.nodes_.begin(), other.nodes_.end(), nodes_.begin(), nodes_.end()) &&
	       std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
	std::vector<std::string> out;
	std::size_t start = 0;
	for (;;) {
		std::size_t tab = line.find('\t', start);
		out.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
		if (tab == std::string_view::npos)
			return out;
		start = tab + 1;
	}
}

} // namespace

GraphDb load_graph(std::string_view text) {
	GraphDb g;
	std::size_t line_no = 0;
	std::size_t start = 0;
	while (start < text.size()) {
		std::size_t nl = text.find('\n', start);
		std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
		start = nl == std::string_view::npos ? text.size() : nl + 1;
		++line_no;
		if (!line.empty() && line.back() == '\r')
			line.remove_suffix(1);
		if (line.find_first_not_of(" \t") == std::string_view::npos || line.front() == '#')
			continue;
		auto fields = split_tabs(line);
		if (fields.size() == 1 && !fields[0].empty()) {
			g.add_node(fields[0]);
			continue;
		}
		if (fields.size() != 3 || fields[0].empty() || fields[2].empty())
			throw GraphError("line " + std::to_string(line_no) + ": expected source<TAB>label<TAB>target");
		try {
			validate_label(fields[1]);
		} catch (const SyntaxError& err) {
			throw GraphError("line " + std::to_string(line_no) + ": " + err.what());
		}
		g.add_edge(fields[0], fields[1], fields[2]);
	}
	return g;
}

GraphDb load_graph_file(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw GraphError("cannot open graph file '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return load_graph(buf.str());
}

std::string to_tsv(const GraphDb& g) {
	std::string out;
	std::set<std::string> touched;
	for (const auto& e : g.edges()) {
		out += e.source + "\t" + e.label + "\t" + e.target + "\n";
		touched.insert(e.source);
		touched.insert(e.target);
	}
	for (const auto& n : g.nodes())
		if (!touched.contains(n))
			out += n + "\n";
	return out;
}

Semipath make_semipath(const std::vector<Symbol>& letters) {
	Semipath p;
	p.letters = letters;
	for (std::size_t i = 0; i <= letters.size(); ++i)
		p.nodes.push_back("u" + std::to_string(i + 1));
	return p;
}

GraphDb to_graph(const Semipath& p) {
	GraphDb g;
	for (const auto& n : p.nodes)
		g.add_node(n);
	for (std::size_t i = 0; i < p.letters.size(); ++i) {
		const Symbol& s = p.letters[i];
		if (s.inverse)
			g.add_edge(p.nodes[i + 1], s.label, p.nodes[i]);
		else
			g.add_edge(p.nodes[i], s.label, p.nodes[i + 1]);
	}
	return g;
}

std::optional<Semipath> resembles_semipath(const GraphDb& g) {
	if (g.nodes().empty())
		return std::nullopt;
	if (g.edges().size() + 1 != g.nodes().size())
		return std::nullopt;
	// undirected incidence: node -> edges touching it
	std::map<std::string, std::vector<const Edge*>> incident;
	for (const auto& e : g.edges()) {
		if (e.source == e.target)
			return std::nullopt;
		incident[e.source].push_back(&e);
		incident[e.target].push_back(&e);
	}
	std::vector<std::string> ends;
	for (const auto& n : g.nodes()) {
		std::size_t deg = incident[n].size();
		if (deg > 2)
			return std::nullopt;
		if (deg <= 1)
			ends.push_back(n);
	}
	if (g.nodes().size() == 1)
		return Semipath{{*g.nodes().begin()}, {}};
	if (ends.size() != 2)
		return std::nullopt;

	Semipath p;
	std::string cur = ends.front(); // g.nodes() is ordered, so this is the smaller endpoint
	const Edge* came = nullptr;
	p.nodes.push_back(cur);
	for (;;) {
		const Edge* next = nullptr;
		for (const Edge* e : incident[cur])
			if (e != came)
				next = e;
		if (!next)
			break;
		bool forward = next->source == cur;
		std::string other = forward ? next->target : next->source;
		p.letters.push_back(Symbol{next->label, !forward});
		p.nodes.push_back(other);
		came = next;
		cur = other;
		if (p.nodes.size() > g.nodes().size())
			return std::nullopt;
	}
	if (p.nodes.size() != g.nodes().size())
		return std::nullopt; // disconnected, or the walk closed a cycle
	return p;
}

IndexedGraph::IndexedGraph(const GraphDb& g) : g_(g) {
	const std::size_t n = g.node_names().size(), labels = g.label_names().size();
	const auto& edges = g.triples();
	// counting sort of the triples into per-label rows
	auto fill = [&](std::vector<Rows>& rows, int from, int to) {
		rows.assign(labels, Rows{std::vector<std::uint32_t>(n + 1, 0), {}});
		for (const auto& e : edges)
			++rows[e[1]].offsets[e[from] + 1];
		for (auto& r : rows) {
			for (std::size_t i = 0; i < n; ++i)
				r.offsets[i + 1] += r.offsets[i];
			r.targets.resize(r.offsets[n]);
		}
		std::vector<std::vector<std::uint32_t>> cursor(labels);
		for (std::size_t l = 0; l < labels; ++l)
			cursor[l].assign(rows[l].offsets.begin(), rows[l].offsets.end() - 1);
		for (const auto& e : edges)
			rows[e[1]].targets[cursor[e[1]][e[from]]++] = e[to];
	};
	fill(forward_, 0, 2);
	fill(backward_, 2, 0);
}

std::optional<std::size_t> IndexedGraph::index(const std::string& id) const {
	if (auto i = g_.node_id(id))
		return *i;
	return std::nullopt;
}

std::optional<std::size_t> IndexedGraph::label_id(const std::string& label) const {
	const auto& names = g_.label_names();
	auto it = std::find(names.begin(), names.end(), label);
	if (it == names.end())
		return std::nullopt;
	return static_cast<std::size_t>(it - names.begin());
}

} // namespace nre
