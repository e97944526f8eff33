// nre -- nested regular expressions: symbols, syntax tree, parser, printer
#ifndef NRE_NRE_HPP
#define NRE_NRE_HPP

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nre {

/// Edge label with a traversal direction. `a^-` is the inverse of `a`.
struct Symbol {
	std::string label;
	bool inverse = false;

	Symbol inverted() const { return Symbol{label, !inverse}; }
	std::string str() const { return inverse ? label + "^-" : label; }

	friend auto operator<=>(const Symbol&, const Symbol&) = default;
	friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Labels reserved for the start/end markers of the containment encodings.
inline constexpr std::string_view kStartMarkerLabel = "S";
inline constexpr std::string_view kEndMarkerLabel = "E";

// Throws SyntaxError when the label is empty, contains a reserved character
// or whitespace, or collides with a reserved token.
void validate_label(std::string_view label);

class SyntaxError : public std::runtime_error {
public:
	SyntaxError(const std::string& what, std::size_t position)
		: std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
	std::size_t position() const noexcept { return position_; }

private:
	std::size_t position_;
};

class Nre {
public:
	enum class Kind { Epsilon, Atom, Concat, Alt, Star, Nest };

	static Nre epsilon();
	static Nre atom(Symbol s);
	static Nre atom(std::string label, bool inverse = false) { return atom(Symbol{std::move(label), inverse}); }
	static Nre concat(Nre l, Nre r);
	static Nre alt(Nre l, Nre r);
	static Nre star(Nre e);
	static Nre plus(const Nre& e) { return concat(e, star(e)); }
	static Nre nest(Nre e);

	Kind kind() const noexcept;
	const Symbol& symbol() const;
	const Nre& left() const;
	const Nre& right() const;
	// operand of Star / Nest
	const Nre& child() const;

	std::size_t size() const noexcept;
	const void* identity() const noexcept { return node_.get(); }

	friend bool operator==(const Nre& a, const Nre& b);

private:
	struct Node;
	explicit Nre(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
	std::shared_ptr<const Node> node_;
};

struct Nre::Node {
	Kind kind;
	Symbol symbol;
	std::unique_ptr<Nre> a, b;
	std::size_t size = 1;
};

inline Nre::Kind Nre::kind() const noexcept { return node_->kind; }
inline std::size_t Nre::size() const noexcept { return node_->size; }

Nre parse(std::string_view text);
std::string render(const Nre& e);

/// Epsilon and atoms have depth 1, star keeps the depth of its operand,
/// concatenation and alternation take the max, nesting adds one.
int nesting_depth(const Nre& e);

/// Base labels (without direction) occurring in e.
std::set<std::string> labels(const Nre& e);

} // namespace nre

#endif
