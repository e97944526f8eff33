// oneway -- one-way automata over full marked words %w&, and the two-way to
// one-way conversion used by the containment pipelines
#ifndef NRE_ONEWAY_HPP
#define NRE_ONEWAY_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "nre/a2fa.hpp"
#include "nre/alphabet.hpp"

namespace nre {

using DState = std::uint32_t;

/// Default cap on explored automaton states; NRE_STATE_BUDGET overrides it.
std::size_t default_state_budget();

class Nfa {
public:
	explicit Nfa(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

	StateId add_state(bool final = false);
	void add(StateId from, TokenId t, StateId to);
	void add_initial(StateId q) { initials_.push_back(q); }

	std::size_t size() const noexcept { return final_.size(); }
	const Alphabet& alphabet() const noexcept { return *alphabet_; }
	const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
	bool is_final(StateId q) const { return final_[q]; }
	void set_final(StateId q, bool f) { final_[q] = f; }
	const std::vector<StateId>& initials() const noexcept { return initials_; }
	const std::vector<StateId>& on(StateId q, TokenId t) const { return delta_[q][t]; }

	/// Membership of a complete token sequence (markers included by the caller).
	bool accepts_full(const std::vector<TokenId>& word) const;
	/// Membership of %w&.
	bool accepts(const std::vector<TokenId>& w) const { return accepts_full(marked(w)); }

private:
	AlphabetPtr alphabet_;
	std::vector<char> final_;
	std::vector<StateId> initials_;
	std::vector<std::vector<std::vector<StateId>>> delta_;
};

/// Deterministic automaton whose states are produced on demand.
class LazyDfa {
public:
	virtual ~LazyDfa() = default;
	virtual const AlphabetPtr& alphabet_ptr() const = 0;
	const Alphabet& alphabet() const { return *alphabet_ptr(); }
	virtual DState start() = 0;
	virtual DState next(DState s, TokenId t) = 0;
	virtual bool accepting(DState s) = 0;
	/// True only for states from which nothing is accepted.
	virtual bool dead(DState) { return false; }
	virtual std::size_t state_count() const = 0;
};

/// Subset construction, computed lazily.
class SubsetDfa final : public LazyDfa {
public:
	explicit SubsetDfa(const Nfa& nfa, std::size_t budget = default_state_budget());
	~SubsetDfa() override;
	const AlphabetPtr& alphabet_ptr() const override;
	DState start() override;
	DState next(DState s, TokenId t) override;
	bool accepting(DState s) override;
	bool dead(DState s) override;
	std::size_t state_count() const override;

private:
	struct Impl;
	std::unique_ptr<Impl> impl_;
};

/// Two-way alternating automaton run left to right. A state records, for
/// every state that can be entered from the right, the positive boolean
/// condition on the states crossing rightwards that makes it win.
class SummaryDfa final : public LazyDfa {
public:
	explicit SummaryDfa(const A2fa& a, std::size_t budget = default_state_budget());
	~SummaryDfa() override;
	const AlphabetPtr& alphabet_ptr() const override;
	DState start() override;
	DState next(DState s, TokenId t) override;
	bool accepting(DState s) override;
	bool dead(DState s) override;
	std::size_t state_count() const override;

private:
	struct Impl;
	std::unique_ptr<Impl> impl_;
};

/// Materializes every reachable state (deterministic result).
Nfa explore(LazyDfa& d, std::size_t budget = default_state_budget());

/// Language-equal one-way automaton over the same alphabet.
Nfa to_nfa(const A2fa& a, std::size_t budget = default_state_budget());

Nfa complement_oneway(const Nfa& a, std::size_t budget = default_state_budget());
Nfa intersect_oneway(const Nfa& a, const Nfa& b);

struct Component {
	LazyDfa* dfa;
	bool complemented = false;
};

/// Breadth-first search of the product; returns a shortest full word accepted
/// by every component (complemented ones by rejection). Throws BudgetExceeded.
std::optional<std::vector<TokenId>> shortest_word(const std::vector<Component>& parts,
                                                  std::size_t budget = default_state_budget());

std::optional<std::vector<TokenId>> shortest_word(const Nfa& a, std::size_t budget = default_state_budget());

/// w for a full word %w&, nullopt for anything else.
std::optional<std::vector<TokenId>> unmark(const std::vector<TokenId>& full);

struct EmptinessStrategy {
	enum class Kind { Exact, Bounded };
	Kind kind = Kind::Exact;
	std::size_t max_len = 6;

	static EmptinessStrategy exact() { return {Kind::Exact, 0}; }
	static EmptinessStrategy bounded(std::size_t n) { return {Kind::Bounded, n}; }
};

/// Emptiness test returning an accepted word (unmarked) when there is one.
/// Bounded only looks at words of length <= max_len.
std::optional<std::vector<TokenId>> is_empty(const A2fa& a, EmptinessStrategy strategy,
                                             std::size_t budget = default_state_budget());

/// Calls visit on every word over the non-boundary tokens of `alphabet`
/// with length <= max_len, shortest first; stops when visit returns false.
void for_each_word(const Alphabet& alphabet, std::size_t max_len,
                   const std::function<bool(const std::vector<TokenId>&)>& visit);

} // namespace nre

#endif
