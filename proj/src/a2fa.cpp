#include "nre/a2fa.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <json.hpp>

namespace nre {

StateId A2fa::add_state(std::string name, bool universal) {
	names_.push_back(std::move(name));
	universal_.push_back(universal);
	final_.push_back(false);
	delta_.emplace_back(alphabet_->size() + 1);
	return names_.size() - 1;
}

void A2fa::add(StateId from, TokenId token, StateId to, int dir) {
	auto& moves = delta_.at(from).at(token + 1);
	Move m{to, dir};
	if (std::find(moves.begin(), moves.end(), m) == moves.end())
		moves.push_back(m);
}

void A2fa::add_epsilon(StateId from, StateId to) {
	auto& moves = delta_.at(from).at(0);
	Move m{to, 0};
	if (std::find(moves.begin(), moves.end(), m) == moves.end())
		moves.push_back(m);
}

std::vector<StateId> A2fa::finals() const {
	std::vector<StateId> out;
	for (StateId q = 0; q < size(); ++q)
		if (final_[q])
			out.push_back(q);
	return out;
}

bool A2fa::has_epsilon() const {
	for (const auto& row : delta_)
		if (!row[0].empty())
			return true;
	return false;
}

StateId A2fa::absorb(const A2fa& other, const std::string& prefix) {
	if (other.alphabet_ != alphabet_ && other.alphabet_->size() != alphabet_->size())
		throw std::invalid_argument("absorb: alphabet mismatch");
	StateId offset = size();
	for (StateId q = 0; q < other.size(); ++q) {
		StateId n = add_state(prefix + other.names_[q], other.universal_[q]);
		final_[n] = other.final_[q];
	}
	for (StateId q = 0; q < other.size(); ++q)
		for (std::size_t slot = 0; slot < other.delta_[q].size(); ++slot)
			for (const auto& m : other.delta_[q][slot])
				delta_[q + offset][slot].push_back(Move{m.target + offset, m.dir});
	return offset;
}

std::vector<Config> step(const A2fa& a, const std::vector<TokenId>& word, Config c) {
	std::vector<Config> out;
	const std::size_t n = word.size();
	if (c.position < 1 || c.position > n)
		return out;
	TokenId t = word[c.position - 1];
	auto push = [&](const Move& m) {
		if (m.dir == -1 && c.position == 1)
			return;
		Config next{m.target, static_cast<std::size_t>(static_cast<long>(c.position) + m.dir)};
		if (std::find(out.begin(), out.end(), next) == out.end())
			out.push_back(next);
	};
	for (const auto& m : a.on(c.state, t))
		push(m);
	for (const auto& m : a.on_epsilon(c.state))
		push(m);
	return out;
}

namespace {

// Winning configurations of the least fixpoint; rank records the order in
// which configurations were won.
struct Solved {
	std::vector<long> rank; // -1 = losing
	std::size_t positions;
	std::size_t index(Config c) const { return c.state * positions + (c.position - 1); }
};

Solved solve(const A2fa& a, const std::vector<TokenId>& word) {
	const std::size_t n = word.size();
	const std::size_t positions = n + 1;
	const std::size_t total = a.size() * positions;
	Solved s{std::vector<long>(total, -1), positions};
	std::vector<std::vector<std::size_t>> preds(total);
	std::vector<std::size_t> pending(total, 0);
	std::deque<std::size_t> queue;
	long next_rank = 0;

	for (StateId q = 0; q < a.size(); ++q)
		for (std::size_t i = 1; i <= positions; ++i) {
			Config c{q, i};
			std::size_t ci = s.index(c);
			auto succ = step(a, word, c);
			for (const auto& d : succ)
				preds[s.index(d)].push_back(ci);
			pending[ci] = a.universal(q) ? succ.size() : 1;
			if (i == positions && a.is_final(q)) {
				s.rank[ci] = next_rank++;
				queue.push_back(ci);
			}
		}
	while (!queue.empty()) {
		std::size_t ci = queue.front();
		queue.pop_front();
		for (std::size_t p : preds[ci]) {
			if (s.rank[p] >= 0 || pending[p] == 0)
				continue;
			if (--pending[p] == 0) {
				s.rank[p] = next_rank++;
				queue.push_back(p);
			}
		}
	}
	return s;
}

} // namespace

bool accepts(const A2fa& a, const std::vector<TokenId>& w) {
	auto word = marked(w);
	Solved s = solve(a, word);
	return s.rank[s.index(Config{a.initial(), word.size()})] >= 0;
}

std::size_t ComputationTree::node_count() const {
	std::size_t n = 1;
	for (const auto& c : children)
		n += c.node_count();
	return n;
}

namespace {

class TreeSearch {
public:
	TreeSearch(const A2fa& a, const std::vector<TokenId>& word, std::size_t budget)
		: a_(a), word_(word), budget_(budget) {}

	std::optional<ComputationTree> run() {
		Config root{a_.initial(), word_.size()};
		const std::size_t max_depth = a_.size() * (word_.size() + 1) + 1;
		for (std::size_t d = 1; d <= max_depth; ++d)
			if (auto t = search(root, d))
				return t;
		return std::nullopt;
	}

private:
	std::optional<ComputationTree> search(Config c, std::size_t depth) {
		if (++steps_ > budget_)
			throw BudgetExceeded("computation tree search budget exceeded");
		if (c.position == word_.size() + 1)
			return a_.is_final(c.state) ? std::optional<ComputationTree>(ComputationTree{c, {}}) : std::nullopt;
		if (depth == 0)
			return std::nullopt;
		auto key = std::make_pair(c.state, c.position);
		if (auto it = failed_.find(key); it != failed_.end() && it->second >= depth)
			return std::nullopt;
		auto succ = step(a_, word_, c);
		ComputationTree node{c, {}};
		bool ok = false;
		if (a_.universal(c.state)) {
			ok = !succ.empty();
			for (const auto& d : succ) {
				auto sub = search(d, depth - 1);
				if (!sub) {
					ok = false;
					break;
				}
				node.children.push_back(std::move(*sub));
			}
		} else {
			for (const auto& d : succ)
				if (auto sub = search(d, depth - 1)) {
					node.children.push_back(std::move(*sub));
					ok = true;
					break;
				}
		}
		if (ok)
			return node;
		auto& f = failed_[key];
		f = std::max(f, depth);
		return std::nullopt;
	}

	const A2fa& a_;
	const std::vector<TokenId>& word_;
	std::size_t budget_;
	std::size_t steps_ = 0;
	std::map<std::pair<StateId, std::size_t>, std::size_t> failed_;
};

bool tree_ok(const A2fa& a, const std::vector<TokenId>& word, const ComputationTree& t) {
	if (t.children.empty())
		return t.label.position == word.size() + 1 && a.is_final(t.label.state);
	auto succ = step(a, word, t.label);
	if (a.universal(t.label.state)) {
		if (t.children.size() != succ.size())
			return false;
		std::vector<Config> labels;
		for (const auto& c : t.children)
			labels.push_back(c.label);
		std::sort(labels.begin(), labels.end());
		std::sort(succ.begin(), succ.end());
		if (labels != succ)
			return false;
	} else {
		if (t.children.size() != 1 || std::find(succ.begin(), succ.end(), t.children[0].label) == succ.end())
			return false;
	}
	for (const auto& c : t.children)
		if (!tree_ok(a, word, c))
			return false;
	return true;
}

} // namespace

std::optional<ComputationTree> accepting_tree(const A2fa& a, const std::vector<TokenId>& w, std::size_t node_budget) {
	auto word = marked(w);
	return TreeSearch(a, word, node_budget).run();
}

bool is_accepting_tree(const A2fa& a, const std::vector<TokenId>& w, const ComputationTree& t) {
	auto word = marked(w);
	if (t.label != Config{a.initial(), word.size()})
		return false;
	return tree_ok(a, word, t);
}

A2fa eliminate_epsilon(const A2fa& a) {
	A2fa out(a.alphabet_ptr());
	for (StateId q = 0; q < a.size(); ++q) {
		out.add_state(a.name(q), a.universal(q));
		out.set_final(q, a.is_final(q));
	}
	out.set_initial(a.initial());
	out.set_marked(a.marked());
	const std::size_t tokens = a.alphabet().size();
	std::map<StateId, StateId> forward, backward;
	auto bounce = [&](std::map<StateId, StateId>& cache, StateId p, int dir, const char* tag) {
		auto it = cache.find(p);
		if (it != cache.end())
			return it->second;
		StateId r = out.add_state(a.name(p) + tag);
		for (TokenId t = 0; t < tokens; ++t)
			out.add(r, t, p, dir);
		cache.emplace(p, r);
		return r;
	};
	for (StateId q = 0; q < a.size(); ++q) {
		for (TokenId t = 0; t < tokens; ++t)
			for (const auto& m : a.on(q, t))
				out.add(q, t, m.target, m.dir);
		for (const auto& m : a.on_epsilon(q)) {
			StateId f = bounce(forward, m.target, -1, "~>");
			StateId b = bounce(backward, m.target, +1, "<~");
			for (TokenId t = 0; t < tokens; ++t) {
				if (t == kEnd)
					out.add(q, t, b, -1);
				else
					out.add(q, t, f, +1);
			}
		}
	}
	return out;
}

namespace {

std::string dot_escape(const std::string& s) {
	std::string out;
	for (char c : s) {
		if (c == '"' || c == '\\')
			out += '\\';
		out += c;
	}
	return out;
}

std::string move_str(int dir) { return dir > 0 ? "+1" : dir < 0 ? "-1" : "0"; }

} // namespace

std::string to_dot(const A2fa& a) {
	std::string out = "digraph a2fa {\n  rankdir=LR;\n  start [shape=point];\n";
	for (StateId q = 0; q < a.size(); ++q) {
		out += "  s" + std::to_string(q) + " [label=\"" + dot_escape(a.name(q)) +
		       (a.marked() == q ? " (marked)" : "") + "\"";
		out += a.universal(q) ? ", shape=doublecircle" : ", shape=circle";
		if (a.is_final(q))
			out += ", style=bold, color=blue";
		out += "];\n";
	}
	out += "  start -> s" + std::to_string(a.initial()) + ";\n";
	for (StateId q = 0; q < a.size(); ++q) {
		// group tokens per (target, move)
		std::map<Move, std::vector<std::string>> groups;
		for (const auto& m : a.on_epsilon(q))
			groups[m].push_back("eps");
		for (TokenId t = 0; t < a.alphabet().size(); ++t)
			for (const auto& m : a.on(q, t))
				groups[m].push_back(a.alphabet()[t].name);
		for (const auto& [m, toks] : groups) {
			std::string label;
			for (const auto& s : toks)
				label += (label.empty() ? "" : " ") + s;
			out += "  s" + std::to_string(q) + " -> s" + std::to_string(m.target) + " [label=\"" +
			       dot_escape(label) + " / " + move_str(m.dir) + "\"];\n";
		}
	}
	return out + "}\n";
}

std::string to_json(const A2fa& a) {
	nlohmann::json j;
	j["alphabet"] = nlohmann::json::array();
	for (const auto& t : a.alphabet().tokens())
		j["alphabet"].push_back(t.name);
	j["states"] = nlohmann::json::array();
	for (StateId q = 0; q < a.size(); ++q)
		j["states"].push_back({{"id", q}, {"name", a.name(q)}, {"universal", a.universal(q)}, {"final", a.is_final(q)}});
	j["initial"] = a.initial();
	j["marked"] = a.marked() ? nlohmann::json(*a.marked()) : nlohmann::json(nullptr);
	j["delta"] = nlohmann::json::array();
	for (StateId q = 0; q < a.size(); ++q) {
		for (const auto& m : a.on_epsilon(q))
			j["delta"].push_back({{"from", q}, {"token", "eps"}, {"to", m.target}, {"move", m.dir}});
		for (TokenId t = 0; t < a.alphabet().size(); ++t)
			for (const auto& m : a.on(q, t))
				j["delta"].push_back(
				    {{"from", q}, {"token", a.alphabet()[t].name}, {"to", m.target}, {"move", m.dir}});
	}
	return j.dump(2);
}

} // namespace nre
