#include "nre/oneway.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <unordered_map>

#include "hash.hpp"

namespace nre {

std::size_t default_state_budget() {
	if (const char* env = std::getenv("NRE_STATE_BUDGET")) {
		char* end = nullptr;
		unsigned long long v = std::strtoull(env, &end, 10);
		if (end != env && *end == '\0' && v > 0)
			return static_cast<std::size_t>(v);
	}
	return 400'000;
}

StateId Nfa::add_state(bool final) {
	final_.push_back(final);
	delta_.emplace_back(alphabet_->size());
	return final_.size() - 1;
}

void Nfa::add(StateId from, TokenId t, StateId to) {
	auto& v = delta_.at(from).at(t);
	if (std::find(v.begin(), v.end(), to) == v.end())
		v.push_back(to);
}

bool Nfa::accepts_full(const std::vector<TokenId>& word) const {
	std::vector<char> cur(size(), 0), nxt(size(), 0);
	for (StateId q : initials_)
		cur[q] = 1;
	for (TokenId t : word) {
		std::fill(nxt.begin(), nxt.end(), 0);
		for (StateId q = 0; q < size(); ++q)
			if (cur[q])
				for (StateId p : delta_[q][t])
					nxt[p] = 1;
		cur.swap(nxt);
	}
	for (StateId q = 0; q < size(); ++q)
		if (cur[q] && final_[q])
			return true;
	return false;
}

struct SubsetDfa::Impl {
	const Nfa& nfa;
	std::size_t budget;
	std::vector<std::vector<StateId>> sets;
	std::unordered_map<std::vector<StateId>, DState, VectorHash> index;
	std::vector<std::vector<DState>> table; // lazily filled, -1 = unknown

	DState intern(std::vector<StateId> s) {
		std::sort(s.begin(), s.end());
		s.erase(std::unique(s.begin(), s.end()), s.end());
		auto it = index.find(s);
		if (it != index.end())
			return it->second;
		if (sets.size() >= budget)
			throw BudgetExceeded("subset construction exceeded " + std::to_string(budget) + " states");
		DState id = static_cast<DState>(sets.size());
		index.emplace(s, id);
		sets.push_back(std::move(s));
		table.emplace_back(nfa.alphabet().size(), static_cast<DState>(-1));
		return id;
	}
};

SubsetDfa::SubsetDfa(const Nfa& nfa, std::size_t budget) : impl_(new Impl{nfa, budget, {}, {}, {}}) {
	impl_->intern(nfa.initials());
}
SubsetDfa::~SubsetDfa() = default;
const AlphabetPtr& SubsetDfa::alphabet_ptr() const { return impl_->nfa.alphabet_ptr(); }
DState SubsetDfa::start() { return 0; }

DState SubsetDfa::next(DState s, TokenId t) {
	DState cached = impl_->table[s][t];
	if (cached != static_cast<DState>(-1))
		return cached;
	std::vector<StateId> out;
	for (StateId q : impl_->sets[s])
		for (StateId p : impl_->nfa.on(q, t))
			out.push_back(p);
	DState d = impl_->intern(std::move(out));
	impl_->table[s][t] = d;
	return d;
}

bool SubsetDfa::accepting(DState s) {
	for (StateId q : impl_->sets[s])
		if (impl_->nfa.is_final(q))
			return true;
	return false;
}

bool SubsetDfa::dead(DState s) { return impl_->sets[s].empty(); }
std::size_t SubsetDfa::state_count() const { return impl_->sets.size(); }

Nfa explore(LazyDfa& d, std::size_t budget) {
	std::vector<DState> order;
	std::unordered_map<DState, StateId> id;
	std::deque<DState> queue;
	DState s0 = d.start();
	id.emplace(s0, 0);
	order.push_back(s0);
	queue.push_back(s0);
	const std::size_t tokens = d.alphabet().size();
	std::vector<std::pair<StateId, std::pair<TokenId, DState>>> pending;
	while (!queue.empty()) {
		DState s = queue.front();
		queue.pop_front();
		for (TokenId t = 0; t < tokens; ++t) {
			DState n = d.next(s, t);
			if (!id.contains(n)) {
				if (id.size() >= budget)
					throw BudgetExceeded("exploration exceeded " + std::to_string(budget) + " states");
				id.emplace(n, order.size());
				order.push_back(n);
				queue.push_back(n);
			}
			pending.push_back({id.at(s), {t, n}});
		}
	}
	Nfa out(d.alphabet_ptr());
	for (DState s : order)
		out.add_state(d.accepting(s));
	out.add_initial(0);
	for (const auto& [from, e] : pending)
		out.add(from, e.first, id.at(e.second));
	return out;
}

Nfa to_nfa(const A2fa& a, std::size_t budget) {
	SummaryDfa d(a, budget);
	return explore(d, budget);
}

Nfa complement_oneway(const Nfa& a, std::size_t budget) {
	SubsetDfa d(a, budget);
	Nfa det = explore(d, budget);
	for (StateId q = 0; q < det.size(); ++q)
		det.set_final(q, !det.is_final(q));
	return det;
}

Nfa intersect_oneway(const Nfa& a, const Nfa& b) {
	if (a.alphabet().size() != b.alphabet().size())
		throw std::invalid_argument("intersect_oneway: alphabet mismatch");
	Nfa out(a.alphabet_ptr());
	std::map<std::pair<StateId, StateId>, StateId> id;
	std::deque<std::pair<StateId, StateId>> queue;
	auto get = [&](StateId p, StateId q) {
		auto key = std::make_pair(p, q);
		auto it = id.find(key);
		if (it != id.end())
			return it->second;
		StateId s = out.add_state(a.is_final(p) && b.is_final(q));
		id.emplace(key, s);
		queue.push_back(key);
		return s;
	};
	for (StateId p : a.initials())
		for (StateId q : b.initials())
			out.add_initial(get(p, q));
	while (!queue.empty()) {
		auto [p, q] = queue.front();
		queue.pop_front();
		StateId s = id.at({p, q});
		for (TokenId t = 0; t < a.alphabet().size(); ++t)
			for (StateId p2 : a.on(p, t))
				for (StateId q2 : b.on(q, t))
					out.add(s, t, get(p2, q2));
	}
	return out;
}

std::optional<std::vector<TokenId>> shortest_word(const std::vector<Component>& parts, std::size_t budget) {
	if (parts.empty())
		throw std::invalid_argument("shortest_word: no components");
	// markers first: among equally short witnesses prefer endpoints early in the word
	const Alphabet& al = parts.front().dfa->alphabet();
	std::vector<TokenId> order;
	for (TokenId t = 0; t < al.size(); ++t)
		if (al[t].is_marker())
			order.push_back(t);
	for (TokenId t = 0; t < al.size(); ++t)
		if (!al[t].is_marker())
			order.push_back(t);
	using Key = std::vector<DState>;
	std::unordered_map<Key, std::size_t, VectorHash> id;
	std::vector<std::pair<std::size_t, TokenId>> parent;
	std::vector<Key> keys;
	auto wins = [&](const Key& k) {
		for (std::size_t i = 0; i < parts.size(); ++i)
			if (parts[i].dfa->accepting(k[i]) == parts[i].complemented)
				return false;
		return true;
	};
	auto trace = [&](std::size_t at) {
		std::vector<TokenId> w;
		while (at != 0) {
			w.push_back(parent[at].second);
			at = parent[at].first;
		}
		std::reverse(w.begin(), w.end());
		return w;
	};

	Key start;
	for (const auto& p : parts)
		start.push_back(p.dfa->start());
	id.emplace(start, 0);
	keys.push_back(start);
	parent.emplace_back(0, 0);
	if (wins(start))
		return std::vector<TokenId>{};
	for (std::size_t head = 0; head < keys.size(); ++head) {
		for (TokenId t : order) {
			Key next;
			next.reserve(parts.size());
			bool pruned = false;
			for (std::size_t i = 0; i < parts.size(); ++i) {
				DState n = parts[i].dfa->next(keys[head][i], t);
				if (!parts[i].complemented && parts[i].dfa->dead(n)) {
					pruned = true;
					break;
				}
				next.push_back(n);
			}
			if (pruned || id.contains(next))
				continue;
			if (keys.size() >= budget)
				throw BudgetExceeded("product search exceeded " + std::to_string(budget) + " states");
			id.emplace(next, keys.size());
			keys.push_back(next);
			parent.emplace_back(head, t);
			if (wins(next))
				return trace(keys.size() - 1);
		}
	}
	return std::nullopt;
}

std::optional<std::vector<TokenId>> shortest_word(const Nfa& a, std::size_t budget) {
	SubsetDfa d(a, budget);
	return shortest_word({Component{&d, false}}, budget);
}

std::optional<std::vector<TokenId>> unmark(const std::vector<TokenId>& full) {
	if (full.size() < 2 || full.front() != kBegin || full.back() != kEnd)
		return std::nullopt;
	std::vector<TokenId> w(full.begin() + 1, full.end() - 1);
	for (TokenId t : w)
		if (t == kBegin || t == kEnd)
			return std::nullopt;
	return w;
}

void for_each_word(const Alphabet& alphabet, std::size_t max_len,
                   const std::function<bool(const std::vector<TokenId>&)>& visit) {
	std::vector<TokenId> letters;
	for (TokenId t = 0; t < alphabet.size(); ++t)
		if (!alphabet[t].is_boundary())
			letters.push_back(t);
	for (std::size_t len = 0; len <= max_len; ++len) {
		std::vector<std::size_t> digits(len, 0);
		for (;;) {
			std::vector<TokenId> w;
			for (auto d : digits)
				w.push_back(letters[d]);
			if (!visit(w))
				return;
			std::size_t i = len;
			while (i > 0 && ++digits[i - 1] == letters.size())
				digits[--i] = 0;
			if (i == 0 || letters.empty())
				break;
		}
	}
}

std::optional<std::vector<TokenId>> is_empty(const A2fa& a, EmptinessStrategy strategy, std::size_t budget) {
	if (strategy.kind == EmptinessStrategy::Kind::Exact) {
		SummaryDfa d(a, budget);
		auto full = shortest_word({Component{&d, false}}, budget);
		if (!full)
			return std::nullopt;
		return unmark(*full);
	}
	std::optional<std::vector<TokenId>> found;
	for_each_word(a.alphabet(), strategy.max_len, [&](const std::vector<TokenId>& w) {
		if (accepts(a, w)) {
			found = w;
			return false;
		}
		return true;
	});
	return found;
}

} // namespace nre
