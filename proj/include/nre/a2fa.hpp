// a2fa -- alternating two-way finite automata
//
// Words are read between the markers % and & with 1-based head positions;
// position |%w&|+1 lies past the end marker and is where accepting
// configurations live. Runs start on the end marker. Epsilon entries are
// stay-moves available on every token.
#ifndef NRE_A2FA_HPP
#define NRE_A2FA_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nre/alphabet.hpp"

namespace nre {

using StateId = std::size_t;

struct Move {
	StateId target;
	int dir; // -1, 0, +1

	friend auto operator<=>(const Move&, const Move&) = default;
	friend bool operator==(const Move&, const Move&) = default;
};

class BudgetExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class A2fa {
public:
	explicit A2fa(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

	StateId add_state(std::string name, bool universal = false);
	void add(StateId from, TokenId token, StateId to, int dir);
	void add_epsilon(StateId from, StateId to);

	std::size_t size() const noexcept { return names_.size(); }
	const Alphabet& alphabet() const noexcept { return *alphabet_; }
	const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
	const std::string& name(StateId q) const { return names_[q]; }

	bool universal(StateId q) const { return universal_[q]; }
	void set_universal(StateId q, bool u) { universal_[q] = u; }
	bool is_final(StateId q) const { return final_[q]; }
	void set_final(StateId q, bool f) { final_[q] = f; }
	std::vector<StateId> finals() const;

	StateId initial() const noexcept { return initial_; }
	void set_initial(StateId q) { initial_ = q; }
	std::optional<StateId> marked() const noexcept { return marked_; }
	void set_marked(std::optional<StateId> q) { marked_ = q; }

	const std::vector<Move>& on(StateId q, TokenId t) const { return delta_[q][t + 1]; }
	const std::vector<Move>& on_epsilon(StateId q) const { return delta_[q][0]; }
	bool has_epsilon() const;

	// copies every state of other, returning the offset added to its ids
	StateId absorb(const A2fa& other, const std::string& prefix = "");

private:
	AlphabetPtr alphabet_;
	std::vector<std::string> names_;
	std::vector<char> universal_, final_;
	StateId initial_ = 0;
	std::optional<StateId> marked_;
	// [state][token + 1]; slot 0 holds epsilon moves
	std::vector<std::vector<std::vector<Move>>> delta_;
};

struct Config {
	StateId state;
	std::size_t position; // 1-based over the marked word

	friend auto operator<=>(const Config&, const Config&) = default;
	friend bool operator==(const Config&, const Config&) = default;
};

/// All successors of c on the full marked word.
std::vector<Config> step(const A2fa& a, const std::vector<TokenId>& marked_word, Config c);

/// Acceptance of w (no markers) as alternating reachability over configurations.
bool accepts(const A2fa& a, const std::vector<TokenId>& w);

struct ComputationTree {
	Config label;
	std::vector<ComputationTree> children;

	std::size_t node_count() const;
};

/// Depth-bounded AND/OR search for an accepting computation tree, independent
/// of the fixpoint in `accepts`. Throws BudgetExceeded when more than
/// `node_budget` search steps are needed.
std::optional<ComputationTree> accepting_tree(const A2fa& a, const std::vector<TokenId>& w,
                                              std::size_t node_budget = 2'000'000);

/// Checks the computation-tree rules and that all leaves are accepting.
bool is_accepting_tree(const A2fa& a, const std::vector<TokenId>& w, const ComputationTree& t);

/// Replaces every epsilon move q -> p by a bounce through a fresh state: forward
/// then back, or back then forward when q reads the end marker.
A2fa eliminate_epsilon(const A2fa& a);

std::string to_dot(const A2fa& a);
std::string to_json(const A2fa& a);

} // namespace nre

#endif
