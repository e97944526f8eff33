#include <algorithm>
#include <bit>
#include <unordered_map>

#include "hash.hpp"
#include "nre/oneway.hpp"

namespace nre {

namespace {

using Word = std::uint64_t;
using Term = std::vector<Word>; // set of variables
using Dnf = std::vector<Term>;  // antichain of terms, sorted; empty = false

constexpr std::size_t kMaxTerms = 20'000;

class Algebra {
public:
	explicit Algebra(std::size_t vars) : words_((vars + 63) / 64) {}

	Dnf truth() const { return Dnf{Term(words_, 0)}; }
	Dnf var(std::size_t i) const {
		Term t(words_, 0);
		t[i / 64] |= Word{1} << (i % 64);
		return Dnf{t};
	}

	static bool subset(const Term& a, const Term& b) {
		for (std::size_t i = 0; i < a.size(); ++i)
			if (a[i] & ~b[i])
				return false;
		return true;
	}

	static void normalize(Dnf& d) {
		auto weight = [](const Term& t) {
			int n = 0;
			for (Word w : t)
				n += std::popcount(w);
			return n;
		};
		std::sort(d.begin(), d.end(), [&](const Term& a, const Term& b) {
			int wa = weight(a), wb = weight(b);
			return wa != wb ? wa < wb : a < b;
		});
		Dnf kept;
		for (auto& t : d) {
			bool covered = false;
			for (const auto& k : kept)
				if (subset(k, t)) {
					covered = true;
					break;
				}
			if (!covered)
				kept.push_back(std::move(t));
		}
		std::sort(kept.begin(), kept.end());
		if (kept.size() > kMaxTerms)
			throw BudgetExceeded("boolean summary exceeded " + std::to_string(kMaxTerms) + " terms");
		d = std::move(kept);
	}

	static Dnf lor(const Dnf& a, const Dnf& b) {
		if (a.empty())
			return b;
		if (b.empty())
			return a;
		Dnf out = a;
		out.insert(out.end(), b.begin(), b.end());
		normalize(out);
		return out;
	}

	static Dnf land(const Dnf& a, const Dnf& b) {
		if (a.empty() || b.empty())
			return {};
		Dnf out;
		out.reserve(a.size() * b.size());
		for (const auto& x : a)
			for (const auto& y : b) {
				Term t = x;
				for (std::size_t i = 0; i < t.size(); ++i)
					t[i] |= y[i];
				out.push_back(std::move(t));
			}
		normalize(out);
		return out;
	}

private:
	std::size_t words_;
};

enum : DState { kStart = 0, kDead = 1, kAccept = 2, kReject = 3, kFirstSummary = 4 };

} // namespace

struct SummaryDfa::Impl {
	const A2fa& a;
	std::size_t budget;
	std::vector<int> var_of, entry_of;
	std::vector<StateId> var_state, entry_state;
	std::vector<std::vector<std::vector<Move>>> moves; // [token][state]
	Algebra alg{0};
	std::vector<std::vector<Dnf>> summaries;
	std::unordered_map<std::vector<Word>, DState, VectorHash> index;
	std::vector<std::vector<DState>> table; // per summary
	std::optional<DState> first;

	Impl(const A2fa& automaton, std::size_t b) : a(automaton), budget(b) {
		const std::size_t n = a.size(), tokens = a.alphabet().size();
		var_of.assign(n, -1);
		entry_of.assign(n, -1);
		auto note_entry = [&](StateId q) {
			if (entry_of[q] < 0) {
				entry_of[q] = static_cast<int>(entry_state.size());
				entry_state.push_back(q);
			}
		};
		note_entry(a.initial());
		moves.assign(tokens, std::vector<std::vector<Move>>(n));
		for (StateId q = 0; q < n; ++q)
			for (TokenId t = 0; t < tokens; ++t) {
				auto& mv = moves[t][q];
				mv = a.on(q, t);
				for (const auto& m : a.on_epsilon(q))
					if (std::find(mv.begin(), mv.end(), m) == mv.end())
						mv.push_back(m);
				for (const auto& m : mv) {
					if (m.dir > 0 && var_of[m.target] < 0) {
						var_of[m.target] = static_cast<int>(var_state.size());
						var_state.push_back(m.target);
					}
					if (m.dir < 0)
						note_entry(m.target);
				}
			}
		alg = Algebra(var_state.size());
	}

	Dnf substitute(const Dnf& d, const std::vector<Dnf>& phi) const {
		Dnf out;
		for (const auto& term : d) {
			Dnf c = alg.truth();
			for (std::size_t w = 0; w < term.size() && !c.empty(); ++w)
				for (Word bits = term[w]; bits && !c.empty(); bits &= bits - 1) {
					std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
					c = Algebra::land(c, phi[var_state[v]]);
				}
			out = Algebra::lor(out, c);
		}
		return out;
	}

	// Least solution for every state at the current position, over the
	// variables of the next position.
	std::vector<Dnf> solve(const std::vector<Dnf>* prev, TokenId t) const {
		const std::size_t n = a.size();
		std::vector<Dnf> phi(n);
		for (bool changed = true; changed;) {
			changed = false;
			for (StateId q = 0; q < n; ++q) {
				const auto& mv = moves[t][q];
				const bool uni = a.universal(q);
				if (mv.empty())
					continue;
				Dnf acc = uni ? alg.truth() : Dnf{};
				bool any = false;
				for (const auto& m : mv) {
					Dnf c;
					if (m.dir == 0)
						c = phi[m.target];
					else if (m.dir > 0)
						c = alg.var(static_cast<std::size_t>(var_of[m.target]));
					else if (prev)
						c = substitute((*prev)[static_cast<std::size_t>(entry_of[m.target])], phi);
					else
						continue; // no position left of the start marker
					any = true;
					acc = uni ? Algebra::land(acc, c) : Algebra::lor(acc, c);
					if (uni && acc.empty())
						break;
				}
				if (!any)
					acc.clear();
				if (acc != phi[q]) {
					phi[q] = std::move(acc);
					changed = true;
				}
			}
		}
		return phi;
	}

	DState intern(const std::vector<Dnf>& phi) {
		std::vector<Dnf> s;
		s.reserve(entry_state.size());
		std::vector<Word> key;
		for (StateId q : entry_state) {
			s.push_back(phi[q]);
			key.push_back(phi[q].size());
			for (const auto& term : phi[q])
				key.insert(key.end(), term.begin(), term.end());
		}
		auto it = index.find(key);
		if (it != index.end())
			return it->second;
		if (summaries.size() >= budget)
			throw BudgetExceeded("two-way conversion exceeded " + std::to_string(budget) + " states");
		DState id = static_cast<DState>(kFirstSummary + summaries.size());
		index.emplace(std::move(key), id);
		summaries.push_back(std::move(s));
		table.emplace_back(a.alphabet().size(), static_cast<DState>(-1));
		return id;
	}

	bool accepted(const std::vector<Dnf>& phi) const {
		for (const auto& term : phi[a.initial()]) {
			bool ok = true;
			for (std::size_t w = 0; w < term.size() && ok; ++w)
				for (Word bits = term[w]; bits; bits &= bits - 1) {
					std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
					if (!a.is_final(var_state[v])) {
						ok = false;
						break;
					}
				}
			if (ok)
				return true;
		}
		return false;
	}

	DState compute(DState s, TokenId t) {
		if (s == kStart)
			return t == kBegin ? intern(solve(nullptr, t)) : kDead;
		if (s < kFirstSummary || t == kBegin)
			return kDead;
		const auto& prev = summaries[s - kFirstSummary];
		if (t == kEnd)
			return accepted(solve(&prev, t)) ? kAccept : kReject;
		return intern(solve(&prev, t));
	}
};

SummaryDfa::SummaryDfa(const A2fa& a, std::size_t budget) : impl_(new Impl(a, budget)) {}
SummaryDfa::~SummaryDfa() = default;
const AlphabetPtr& SummaryDfa::alphabet_ptr() const { return impl_->a.alphabet_ptr(); }
DState SummaryDfa::start() { return kStart; }

DState SummaryDfa::next(DState s, TokenId t) {
	if (s < kFirstSummary) {
		if (s != kStart || t != kBegin)
			return kDead;
		if (!impl_->first)
			impl_->first = impl_->compute(s, t);
		return *impl_->first;
	}
	DState cached = impl_->table[s - kFirstSummary][t];
	if (cached != static_cast<DState>(-1))
		return cached;
	DState d = impl_->compute(s, t);
	impl_->table[s - kFirstSummary][t] = d;
	return d;
}

bool SummaryDfa::accepting(DState s) { return s == kAccept; }
bool SummaryDfa::dead(DState s) { return s == kDead; }
std::size_t SummaryDfa::state_count() const { return kFirstSummary + impl_->summaries.size(); }

} // namespace nre
