#include "nre/kbranch.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

namespace nre {

std::vector<Element> KBranchSemipath::children(const Element& x) const {
	std::vector<Element> out;
	for (auto it = domain.upper_bound(x); it != domain.end() && it->starts_with(x); ++it)
		if (it->size() == x.size() + 1)
			out.push_back(*it);
	return out;
}

std::size_t KBranchSemipath::leaf_count() const {
	std::size_t n = 0;
	for (const auto& x : domain)
		if (children(x).empty())
			++n;
	return n;
}

void validate(const KBranchSemipath& t) {
	if (t.k < 1 || t.k > 9)
		throw KBranchError("k must be in 1..9");
	if (!t.domain.contains("1"))
		throw KBranchError("root element 1 missing");
	for (const auto& x : t.domain) {
		if (x.empty() || x.front() != '1')
			throw KBranchError("element '" + x + "' does not start with 1");
		for (std::size_t i = 0; i < x.size(); ++i) {
			if (x[i] < '1' || x[i] - '0' > t.k)
				throw KBranchError("element '" + x + "' uses a digit outside 1.." + std::to_string(t.k));
			if (i > 0 && x[i] < x[i - 1])
				throw KBranchError("element '" + x + "' has a decreasing digit pair");
		}
		if (x.size() > 1) {
			if (!t.domain.contains(parent_of(x)))
				throw KBranchError("domain not prefix-closed at '" + x + "'");
			if (!t.labels.contains(x))
				throw KBranchError("missing edge label for '" + x + "'");
		}
		if (!t.children(x).empty() && !t.domain.contains(x + x.back()))
			throw KBranchError("element '" + x + "' has children but no same-class child");
	}
	for (const auto& [child, _] : t.labels)
		if (!t.domain.contains(child) || child.size() < 2)
			throw KBranchError("edge label for non-edge element '" + child + "'");
}

bool is_valid(const KBranchSemipath& t) {
	try {
		validate(t);
		return true;
	} catch (const KBranchError&) {
		return false;
	}
}

KBranchSemipath tree_from_edges(int k, const std::vector<std::pair<Element, Symbol>>& child_labels) {
	KBranchSemipath t;
	t.k = k;
	for (const auto& [child, label] : child_labels) {
		t.domain.insert(child);
		t.labels[child] = label;
	}
	validate(t);
	return t;
}

std::string GammaToken::str() const {
	return "(" + std::to_string(from) + "," + (label ? label->str() : std::string("$")) + "," + std::to_string(to) + ")";
}

std::string EncodedWord::str() const {
	std::string out = "%";
	for (const auto& t : tokens)
		out += t.str();
	return out + "&";
}

EncodedWord parse_encoded(std::string_view text) {
	auto fail = [&](std::size_t at) -> KBranchError {
		return KBranchError("malformed encoded word at position " + std::to_string(at + 1));
	};
	EncodedWord w;
	std::size_t i = 0;
	auto skip = [&] {
		while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
			++i;
	};
	skip();
	if (i >= text.size() || text[i] != '%')
		throw fail(i);
	++i;
	for (;;) {
		skip();
		if (i >= text.size())
			throw fail(i);
		if (text[i] == '&')
			break;
		if (text[i] != '(')
			throw fail(i);
		std::size_t close = text.find(')', i);
		if (close == std::string_view::npos)
			throw fail(i);
		std::string_view body = text.substr(i + 1, close - i - 1);
		std::size_t c1 = body.find(','), c2 = body.rfind(',');
		if (c1 == std::string_view::npos || c1 == c2)
			throw fail(i);
		GammaToken tok;
		try {
			tok.from = std::stoi(std::string(body.substr(0, c1)));
			tok.to = std::stoi(std::string(body.substr(c2 + 1)));
		} catch (const std::exception&) {
			throw fail(i);
		}
		std::string label(body.substr(c1 + 1, c2 - c1 - 1));
		if (label != "$") {
			bool inverse = label.size() > 2 && label.ends_with("^-");
			if (inverse)
				label.resize(label.size() - 2);
			tok.label = Symbol{label, inverse};
		}
		w.tokens.push_back(std::move(tok));
		i = close + 1;
	}
	++i;
	skip();
	if (i != text.size())
		throw fail(i);
	return w;
}

namespace {

// Children in encoding order: higher classes ascending, same class last.
std::vector<Element> encoding_order(const KBranchSemipath& t, const Element& x) {
	auto kids = t.children(x);
	std::stable_partition(kids.begin(), kids.end(), [&](const Element& c) { return c.back() != x.back(); });
	return kids;
}

void emit(const KBranchSemipath& t, const Element& x, EncodedWord& out, std::map<Element, std::size_t>* positions) {
	if (positions)
		(*positions)[x] = out.tokens.size() + 2;
	int c = element_class(x);
	auto kids = encoding_order(t, x);
	if (kids.empty()) {
		out.tokens.push_back(GammaToken{c, std::nullopt, c});
		return;
	}
	for (const auto& child : kids) {
		out.tokens.push_back(GammaToken{c, t.labels.at(child), element_class(child)});
		emit(t, child, out, positions);
	}
}

class Decoder {
public:
	Decoder(const EncodedWord& w, int k) : w_(w), k_(k) {}

	std::optional<KBranchSemipath> run() {
		t_.k = k_;
		t_.domain = {"1"};
		if (!node("1") || i_ != w_.tokens.size())
			return std::nullopt;
		return t_;
	}

private:
	bool node(Element x) {
		// tail children are walked iteratively
		for (;;) {
			int c = element_class(x);
			if (i_ >= w_.tokens.size())
				return false;
			const GammaToken& first = w_.tokens[i_];
			if (first.is_leaf()) {
				if (first.from != c || first.to != c)
					return false;
				++i_;
				return true;
			}
			int last = c;
			for (;;) {
				if (i_ >= w_.tokens.size())
					return false;
				const GammaToken& tok = w_.tokens[i_];
				if (tok.is_leaf() || tok.from != c || tok.to < c || tok.to > k_)
					return false;
				++i_;
				Element child = x + static_cast<char>('0' + tok.to);
				t_.domain.insert(child);
				t_.labels[child] = *tok.label;
				if (tok.to == c) {
					x = child;
					break;
				}
				if (tok.to <= last)
					return false;
				last = tok.to;
				if (!node(child))
					return false;
			}
		}
	}

	const EncodedWord& w_;
	int k_;
	std::size_t i_ = 0;
	KBranchSemipath t_;
};

// Inserts a single `label`-edge below x whose endpoint adopts x's children.
KBranchSemipath insert_below(const KBranchSemipath& t, const Element& x, const Symbol& label) {
	KBranchSemipath out;
	out.k = t.k;
	out.domain.clear();
	char cls = x.back();
	auto rename = [&](const Element& y) {
		if (y.size() > x.size() && y.starts_with(x))
			return x + cls + y.substr(x.size());
		return y;
	};
	for (const auto& y : t.domain)
		out.domain.insert(rename(y));
	for (const auto& [y, s] : t.labels)
		out.labels[rename(y)] = s;
	out.domain.insert(x + cls);
	out.labels[x + cls] = label;
	return out;
}

Element renamed_after_insert(const Element& x, const Element& y) {
	if (y.starts_with(x))
		return x + x.back() + y.substr(x.size());
	return y;
}

// Removes the edge x -> x.c (c = class of x), merging the child into x.
KBranchSemipath remove_below(const KBranchSemipath& t, const Element& x) {
	KBranchSemipath out;
	out.k = t.k;
	out.domain.clear();
	Element y = x + x.back();
	auto rename = [&](const Element& z) {
		if (z.starts_with(y))
			return x + z.substr(y.size());
		return z;
	};
	for (const auto& z : t.domain)
		if (z != y)
			out.domain.insert(rename(z));
	for (const auto& [z, s] : t.labels)
		if (z != y)
			out.labels[rename(z)] = s;
	return out;
}

Element renamed_after_remove(const Element& x, const Element& z) {
	Element y = x + x.back();
	if (z.starts_with(y))
		return x + z.substr(y.size());
	return z;
}

std::optional<Element> find_marker(const KBranchSemipath& t, std::string_view label) {
	std::optional<Element> found;
	for (const auto& [child, s] : t.labels) {
		if (s.label != label)
			continue;
		if (found || s.inverse)
			return std::nullopt;
		found = child;
	}
	return found;
}

} // namespace

EncodedWord trans(const KBranchSemipath& t) {
	validate(t);
	EncodedWord w;
	emit(t, "1", w, nullptr);
	return w;
}

std::size_t pos(const KBranchSemipath& t, const Element& node) {
	if (!t.contains(node))
		throw KBranchError("element '" + node + "' not in domain");
	validate(t);
	EncodedWord w;
	std::map<Element, std::size_t> positions;
	emit(t, "1", w, &positions);
	return positions.at(node);
}

std::optional<KBranchSemipath> decode(const EncodedWord& w, int k) { return Decoder(w, k).run(); }

KBranchSemipath expand_markers(const KBranchSemipath& t, const Element& u, const Element& v) {
	validate(t);
	if (!t.contains(u))
		throw KBranchError("element '" + u + "' not in domain");
	if (!t.contains(v))
		throw KBranchError("element '" + v + "' not in domain");
	KBranchSemipath s = insert_below(t, u, Symbol{std::string(kStartMarkerLabel), false});
	Element v2 = renamed_after_insert(u, v);
	return insert_below(s, v2, Symbol{std::string(kEndMarkerLabel), false});
}

std::optional<MarkedTree> contract_markers(const KBranchSemipath& t) {
	if (!is_valid(t))
		return std::nullopt;
	auto s_child = find_marker(t, kStartMarkerLabel);
	auto e_child = find_marker(t, kEndMarkerLabel);
	if (!s_child || !e_child)
		return std::nullopt;
	// a marker edge must be the only edge leaving its source
	for (const auto& c : {*s_child, *e_child})
		if (c.back() != c[c.size() - 2] || t.children(parent_of(c)).size() != 1)
			return std::nullopt;

	// undo E first: it was inserted last
	Element ex = parent_of(*e_child);
	KBranchSemipath once = remove_below(t, ex);
	Element sx = renamed_after_remove(ex, parent_of(*s_child));
	Element v = ex;
	KBranchSemipath twice = remove_below(once, sx);
	Element v2 = renamed_after_remove(sx, v);
	if (!is_valid(twice))
		return std::nullopt;
	return MarkedTree{std::move(twice), sx, v2};
}

GraphDb to_graph(const KBranchSemipath& t) {
	GraphDb g;
	for (const auto& x : t.domain)
		g.add_node(x);
	for (const auto& [child, s] : t.labels) {
		if (s.inverse)
			g.add_edge(child, s.label, parent_of(child));
		else
			g.add_edge(parent_of(child), s.label, child);
	}
	return g;
}

KBranchSemipath semipath_to_tree(const std::vector<Symbol>& letters) {
	KBranchSemipath t;
	Element x = "1";
	for (const auto& s : letters) {
		x += '1';
		t.domain.insert(x);
		t.labels[x] = s;
	}
	return t;
}

std::optional<std::vector<Symbol>> tree_to_letters(const KBranchSemipath& t) {
	std::vector<Symbol> out;
	Element x = "1";
	for (;;) {
		auto kids = t.children(x);
		if (kids.empty())
			break;
		if (kids.size() != 1)
			return std::nullopt;
		x = kids.front();
		out.push_back(t.labels.at(x));
	}
	if (out.size() != t.edge_count())
		return std::nullopt;
	return out;
}

std::string to_json(const KBranchSemipath& t) {
	nlohmann::json j;
	j["k"] = t.k;
	j["edges"] = nlohmann::json::array();
	for (const auto& [child, s] : t.labels)
		j["edges"].push_back({{"parent", parent_of(child)}, {"child", child}, {"label", s.str()}});
	return j.dump();
}

KBranchSemipath tree_from_json(std::string_view text) {
	nlohmann::json j;
	try {
		j = nlohmann::json::parse(text);
	} catch (const nlohmann::json::exception& e) {
		throw KBranchError(std::string("invalid JSON: ") + e.what());
	}
	if (!j.contains("k") || !j["k"].is_number_integer())
		throw KBranchError("missing integer field 'k'");
	std::vector<std::pair<Element, Symbol>> edges;
	for (const auto& e : j.value("edges", nlohmann::json::array())) {
		std::string parent, child, label;
		try {
			parent = e.at("parent").get<std::string>();
			child = e.at("child").get<std::string>();
			label = e.at("label").get<std::string>();
		} catch (const nlohmann::json::exception&) {
			throw KBranchError("edges must be objects with string fields parent, child, label");
		}
		if (child.size() < 2 || parent_of(child) != parent)
			throw KBranchError("edge " + parent + " -> " + child + " is not a parent/child pair");
		bool inverse = label.size() > 2 && label.ends_with("^-");
		if (inverse)
			label.resize(label.size() - 2);
		edges.emplace_back(child, Symbol{label, inverse});
	}
	return tree_from_edges(j["k"].get<int>(), edges);
}

} // namespace nre
