#include "nre/nre.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace nre {

namespace {

constexpr std::string_view kOperatorChars = "^.|*+[]()";
constexpr std::string_view kReservedChars = "%&$";

bool is_delimiter(char c) {
	return std::isspace(static_cast<unsigned char>(c)) || kOperatorChars.find(c) != std::string_view::npos;
}

struct LabelProblem {
	std::string message;
	std::size_t offset;
};

std::optional<LabelProblem> label_problem(std::string_view label) {
	if (label.empty())
		return LabelProblem{"empty label", 0};
	for (std::size_t i = 0; i < label.size(); ++i) {
		char c = label[i];
		if (kReservedChars.find(c) != std::string_view::npos)
			return LabelProblem{"reserved character '" + std::string(1, c) + "' in label '" + std::string(label) + "'", i};
		if (is_delimiter(c))
			return LabelProblem{"invalid character '" + std::string(1, c) + "' in label '" + std::string(label) + "'", i};
	}
	if (label == kStartMarkerLabel || label == kEndMarkerLabel || label == "eps")
		return LabelProblem{"label '" + std::string(label) + "' is reserved", 0};
	return std::nullopt;
}

} // namespace

void validate_label(std::string_view label) {
	if (auto p = label_problem(label))
		throw SyntaxError(p->message, p->offset + 1);
}

Nre Nre::epsilon() {
	auto n = std::make_shared<Node>();
	n->kind = Kind::Epsilon;
	return Nre(std::move(n));
}

Nre Nre::atom(Symbol s) {
	auto n = std::make_shared<Node>();
	n->kind = Kind::Atom;
	n->symbol = std::move(s);
	return Nre(std::move(n));
}

Nre Nre::concat(Nre l, Nre r) {
	auto n = std::make_shared<Node>();
	n->kind = Kind::Concat;
	n->size = 1 + l.size() + r.size();
	n->a = std::make_unique<Nre>(std::move(l));
	n->b = std::make_unique<Nre>(std::move(r));
	return Nre(std::move(n));
}

Nre Nre::alt(Nre l, Nre r) {
	auto n = std::make_shared<Node>();
	n->kind = Kind::Alt;
	n->size = 1 + l.size() + r.size();
	n->a = std::make_unique<Nre>(std::move(l));
	n->b = std::make_unique<Nre>(std::move(r));
	return Nre(std::move(n));
}

Nre Nre::star(Nre e) {
	auto n = std::make_shared<Node>();
	n->kind = Kind::Star;
	n->size = 1 + e.size();
	n->a = std::make_unique<Nre>(std::move(e));
	return Nre(std::move(n));
}

Nre Nre::nest(Nre e) {
	auto n = std::make_shared<Node>();
	n->kind = Kind::Nest;
	n->size = 1 + e.size();
	n->a = std::make_unique<Nre>(std::move(e));
	return Nre(std::move(n));
}

const Symbol& Nre::symbol() const {
	if (kind() != Kind::Atom)
		throw std::logic_error("Nre::symbol on non-atom");
	return node_->symbol;
}

const Nre& Nre::left() const {
	if (kind() != Kind::Concat && kind() != Kind::Alt)
		throw std::logic_error("Nre::left on non-binary node");
	return *node_->a;
}

const Nre& Nre::right() const {
	if (kind() != Kind::Concat && kind() != Kind::Alt)
		throw std::logic_error("Nre::right on non-binary node");
	return *node_->b;
}

const Nre& Nre::child() const {
	if (kind() != Kind::Star && kind() != Kind::Nest)
		throw std::logic_error("Nre::child on non-unary node");
	return *node_->a;
}

bool operator==(const Nre& x, const Nre& y) {
	if (x.node_ == y.node_)
		return true;
	if (x.kind() != y.kind() || x.size() != y.size())
		return false;
	switch (x.kind()) {
	case Nre::Kind::Epsilon: return true;
	case Nre::Kind::Atom: return x.symbol() == y.symbol();
	case Nre::Kind::Concat:
	case Nre::Kind::Alt: return x.left() == y.left() && x.right() == y.right();
	case Nre::Kind::Star:
	case Nre::Kind::Nest: return x.child() == y.child();
	}
	return false;
}

// expr := alt ; alt := cat ("|" cat)* ; cat := post ("." post)* ;
// post := prim ("*"|"+")* ; prim := "eps" | "(" expr ")" | "[" expr "]" | label ["^-"]
// Binary operators associate to the right.
namespace {

class Parser {
public:
	explicit Parser(std::string_view text) : text_(text) {}

	Nre run() {
		skip_ws();
		if (at_end())
			throw SyntaxError("empty expression", 1);
		Nre e = alt();
		skip_ws();
		if (!at_end())
			fail("unexpected '" + std::string(1, text_[pos_]) + "'");
		return e;
	}

private:
	Nre alt() {
		Nre l = cat();
		skip_ws();
		if (peek('|')) {
			++pos_;
			return Nre::alt(std::move(l), alt());
		}
		return l;
	}

	Nre cat() {
		Nre l = post();
		skip_ws();
		if (peek('.')) {
			++pos_;
			return Nre::concat(std::move(l), cat());
		}
		return l;
	}

	Nre post() {
		Nre e = prim();
		for (;;) {
			skip_ws();
			if (peek('*')) {
				++pos_;
				e = Nre::star(std::move(e));
			} else if (peek('+')) {
				++pos_;
				e = Nre::plus(e);
			} else {
				return e;
			}
		}
	}

	Nre prim() {
		skip_ws();
		if (at_end())
			fail("unexpected end of expression");
		char c = text_[pos_];
		if (c == '(') {
			++pos_;
			skip_ws();
			if (peek(')')) {
				++pos_;
				return Nre::epsilon();
			}
			Nre e = alt();
			expect(')');
			return e;
		}
		if (c == '[') {
			++pos_;
			Nre e = alt();
			expect(']');
			return Nre::nest(std::move(e));
		}
		if (is_delimiter(c))
			fail("unexpected '" + std::string(1, c) + "'");
		std::size_t start = pos_;
		while (!at_end() && !is_delimiter(text_[pos_]))
			++pos_;
		std::string_view label = text_.substr(start, pos_ - start);
		if (label == "eps")
			return Nre::epsilon();
		if (auto p = label_problem(label))
			throw SyntaxError(p->message, start + p->offset + 1);
		bool inverse = false;
		if (peek('^')) {
			if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '-')
				fail("expected '^-'");
			pos_ += 2;
			inverse = true;
		}
		return Nre::atom(std::string(label), inverse);
	}

	void expect(char c) {
		skip_ws();
		if (!peek(c))
			fail(std::string("expected '") + c + "'");
		++pos_;
	}

	[[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_ + 1); }
	bool at_end() const { return pos_ >= text_.size(); }
	bool peek(char c) const { return !at_end() && text_[pos_] == c; }
	void skip_ws() {
		while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

// 0 = alternation, 1 = concatenation, 2 = postfix, 3 = primary
int precedence(const Nre& e) {
	switch (e.kind()) {
	case Nre::Kind::Alt: return 0;
	case Nre::Kind::Concat: return 1;
	case Nre::Kind::Star: return 2;
	default: return 3;
	}
}

std::string render_at(const Nre& e, int min_prec) {
	std::string out;
	switch (e.kind()) {
	case Nre::Kind::Epsilon: out = "eps"; break;
	case Nre::Kind::Atom: out = e.symbol().str(); break;
	case Nre::Kind::Nest: out = "[" + render_at(e.child(), 0) + "]"; break;
	case Nre::Kind::Star: out = render_at(e.child(), 2) + "*"; break;
	case Nre::Kind::Concat: out = render_at(e.left(), 2) + " . " + render_at(e.right(), 1); break;
	case Nre::Kind::Alt: out = render_at(e.left(), 1) + " | " + render_at(e.right(), 0); break;
	}
	return precedence(e) < min_prec ? "(" + out + ")" : out;
}

void collect_labels(const Nre& e, std::set<std::string>& out) {
	switch (e.kind()) {
	case Nre::Kind::Epsilon: return;
	case Nre::Kind::Atom: out.insert(e.symbol().label); return;
	case Nre::Kind::Concat:
	case Nre::Kind::Alt:
		collect_labels(e.left(), out);
		collect_labels(e.right(), out);
		return;
	case Nre::Kind::Star:
	case Nre::Kind::Nest: collect_labels(e.child(), out); return;
	}
}

} // namespace

Nre parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Nre& e) { return render_at(e, 0); }

int nesting_depth(const Nre& e) {
	switch (e.kind()) {
	case Nre::Kind::Epsilon:
	case Nre::Kind::Atom: return 1;
	case Nre::Kind::Concat:
	case Nre::Kind::Alt: return std::max(nesting_depth(e.left()), nesting_depth(e.right()));
	case Nre::Kind::Star: return nesting_depth(e.child());
	case Nre::Kind::Nest: return nesting_depth(e.child()) + 1;
	}
	return 1;
}

std::set<std::string> labels(const Nre& e) {
	std::set<std::string> out;
	collect_labels(e, out);
	return out;
}

} // namespace nre
