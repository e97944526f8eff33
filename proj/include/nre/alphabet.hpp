// alphabet -- token tables shared by the two-way and one-way automata
#ifndef NRE_ALPHABET_HPP
#define NRE_ALPHABET_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nre/kbranch.hpp"
#include "nre/nre.hpp"

namespace nre {

using TokenId = std::size_t;

/// Token 0 is the start marker %, token 1 the end marker &.
inline constexpr TokenId kBegin = 0;
inline constexpr TokenId kEnd = 1;

struct Token {
	enum class Kind { Begin, End, Letter, Leaf, StartMark, EndMark };
	Kind kind = Kind::Letter;
	Symbol symbol;   // Letter
	int from = 0;    // Gamma tokens only, 0 otherwise
	int to = 0;
	std::string name;

	bool is_marker() const noexcept { return kind == Kind::StartMark || kind == Kind::EndMark; }
	bool is_boundary() const noexcept { return kind == Kind::Begin || kind == Kind::End; }
};

class Alphabet {
public:
	/// Sigma' plus inverses, optionally with the S/E markers.
	static std::shared_ptr<const Alphabet> semipath(const std::vector<std::string>& labels, bool markers);

	/// K x (Sigma + $) x K for K = 1..k, optionally with (i,S,i) and (i,E,i).
	static std::shared_ptr<const Alphabet> gamma(int k, const std::vector<std::string>& labels, bool markers);

	std::size_t size() const noexcept { return tokens_.size(); }
	const Token& operator[](TokenId t) const { return tokens_[t]; }
	const std::vector<Token>& tokens() const noexcept { return tokens_; }
	std::optional<TokenId> find(const std::string& name) const;
	TokenId at(const std::string& name) const;

	bool is_gamma() const noexcept { return k_ > 0; }
	int k() const noexcept { return k_; }
	const std::vector<std::string>& labels() const noexcept { return labels_; }

	/// Semipath alphabets: tokens of a letter sequence. Gamma alphabets: tokens of an encoding.
	std::vector<TokenId> tokens_of(const std::vector<Symbol>& letters) const;
	std::vector<TokenId> tokens_of(const EncodedWord& w) const;
	std::string render(const std::vector<TokenId>& word) const;

private:
	Alphabet() = default;
	void add(Token t);

	std::vector<Token> tokens_;
	std::map<std::string, TokenId> index_;
	std::vector<std::string> labels_;
	int k_ = 0;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Full marked word %w&.
std::vector<TokenId> marked(const std::vector<TokenId>& w);

} // namespace nre

#endif
