#include <doctest.h>

#include "corpus.hpp"
#include "nre/a2fa.hpp"
#include "nre/oneway.hpp"
#include "nre/translate.hpp"

using namespace nre;

namespace {

AlphabetPtr ab() { return Alphabet::semipath({"a"}, false); }

std::vector<TokenId> word(const Alphabet& al, std::initializer_list<const char*> names) {
	std::vector<TokenId> w;
	for (auto n : names)
		w.push_back(al.at(n));
	return w;
}

} // namespace

TEST_CASE("step") {
	auto al = ab();
	A2fa a(al);
	StateId q = a.add_state("q"), p = a.add_state("p");
	TokenId x = al->at("a");
	a.add(q, x, p, +1);
	auto w = marked({x});
	CHECK(step(a, w, {q, 2}) == std::vector<Config>{{p, 3}});
	CHECK(step(a, w, {p, 2}).empty());

	A2fa b(al);
	q = b.add_state("q");
	p = b.add_state("p");
	b.add(q, kBegin, p, -1);
	b.add(q, kBegin, p, 0);
	CHECK(step(b, w, {q, 1}) == std::vector<Config>{{p, 1}});

	A2fa c(al);
	q = c.add_state("q");
	p = c.add_state("p");
	c.add_epsilon(q, p);
	CHECK(step(c, w, {q, 2}) == std::vector<Config>{{p, 2}});
	CHECK(step(c, w, {q, 3}) == std::vector<Config>{{p, 3}});
}

TEST_CASE("universal states need every successor") {
	auto al = ab();
	TokenId x = al->at("a"), y = al->at("a^-");
	A2fa a(al);
	StateId u = a.add_state("u", true), l = a.add_state("l"), r = a.add_state("r"), f = a.add_state("f");
	a.set_initial(u);
	a.set_final(f, true);
	// at &: both branches go back one step; l needs an a there, r accepts anything
	a.add(u, kEnd, l, -1);
	a.add(u, kEnd, r, -1);
	a.add(l, x, f, +1);
	a.add(f, kEnd, f, +1);
	for (TokenId t : {x, y})
		a.add(r, t, f, +1);
	CHECK(accepts(a, {x}));
	CHECK_FALSE(accepts(a, {y}));
	CHECK_FALSE(accepts(a, {})); // r and l are stuck on %
	auto t = accepting_tree(a, {x});
	REQUIRE(t);
	CHECK(t->children.size() == 2);
	CHECK(is_accepting_tree(a, {x}, *t));
	CHECK_FALSE(accepting_tree(a, {y}));

	a.set_universal(u, false);
	CHECK(accepts(a, {y}));
}

TEST_CASE("compiled atom membership") {
	auto m = compile_sp(parse("a"));
	A2fa a = wrap(m);
	const Alphabet& al = a.alphabet();
	CHECK(accepts(a, word(al, {"a"})));
	CHECK_FALSE(accepts(a, {}));
	CHECK(accepts(a, word(al, {"a^-"}))); // (u2,u1) is an a-edge
	auto ab2 = Alphabet::semipath({"a", "b"}, false);
	A2fa b = wrap(compile_sp(parse("a"), ab2));
	CHECK(accepts(b, word(*ab2, {"b", "a"})));
	CHECK_FALSE(accepts(b, word(*ab2, {"b", "b^-"})));
}

TEST_CASE("accepting trees agree with the fixpoint") {
	auto al = Alphabet::semipath({"a", "b"}, false);
	for (const auto& text : corpus::expressions()) {
		A2fa a = wrap(compile_sp(parse(text), al));
		for_each_word(*al, 4, [&](const std::vector<TokenId>& w) {
			bool acc = accepts(a, w);
			auto t = accepting_tree(a, w);
			CHECK_MESSAGE(acc == t.has_value(), text << " on " << al->render(w));
			if (t)
				CHECK(is_accepting_tree(a, w, *t));
			return true;
		});
	}
}

TEST_CASE("tree search budget is reported") {
	A2fa a = wrap(compile_sp(parse("(a . a^-)*")));
	std::vector<TokenId> w(6, a.alphabet().at("a"));
	CHECK_THROWS_AS(accepting_tree(a, w, 3), BudgetExceeded);
}

TEST_CASE("eliminate_epsilon") {
	auto al = ab();
	TokenId x = al->at("a");
	A2fa a(al);
	StateId q = a.add_state("q"), p = a.add_state("p"), f = a.add_state("f");
	a.set_final(f, true);
	a.add(q, kEnd, q, -1);
	a.add_epsilon(q, p);
	a.add(p, x, f, +1);
	a.add(f, x, f, +1);
	a.add(f, kEnd, f, +1);
	A2fa e = eliminate_epsilon(a);
	CHECK_FALSE(e.has_epsilon());
	CHECK(e.size() == a.size() + 2); // forward and end-marker bounce for p
	for_each_word(*al, 4, [&](const std::vector<TokenId>& w) {
		CHECK(accepts(a, w) == accepts(e, w));
		return true;
	});

	A2fa plain(al);
	plain.add_state("q");
	CHECK(eliminate_epsilon(plain).size() == 1);

	for (const auto& text : corpus::expressions()) {
		A2fa c = wrap(compile_sp(corpus::single_label(text)));
		A2fa once = eliminate_epsilon(c), twice = eliminate_epsilon(once);
		CHECK(twice.size() == once.size());
		for_each_word(c.alphabet(), 6, [&](const std::vector<TokenId>& w) {
			bool acc = accepts(c, w);
			CHECK_MESSAGE(acc == accepts(once, w), text << " on " << c.alphabet().render(w));
			CHECK(acc == accepts(twice, w));
			return true;
		});
	}
}

TEST_CASE("exports are deterministic") {
	A2fa a = eliminate_epsilon(wrap(compile_sp(parse("[a] . b"))));
	CHECK(to_dot(a) == to_dot(eliminate_epsilon(wrap(compile_sp(parse("[a] . b"))))));
	CHECK(to_dot(a).find("doublecircle") != std::string::npos);
	CHECK(to_dot(a).find("-1") != std::string::npos);
	CHECK(to_json(a).find("\"universal\"") != std::string::npos);
}
