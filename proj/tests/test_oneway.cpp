#include <doctest.h>

#include "corpus.hpp"
#include "nre/oneway.hpp"
#include "nre/translate.hpp"

using namespace nre;

namespace {

// every corpus expression over the two-token alphabet {a, a^-}
std::vector<A2fa> corpus_automata() {
	std::vector<A2fa> out;
	for (const auto& text : corpus::expressions())
		out.push_back(eliminate_epsilon(wrap(compile_sp(corpus::single_label(text)))));
	return out;
}

Nfa universal_nfa(const AlphabetPtr& al) {
	Nfa n(al);
	StateId s = n.add_state(), body = n.add_state(), end = n.add_state(true);
	n.add_initial(s);
	n.add(s, kBegin, body);
	for (TokenId t = 0; t < al->size(); ++t)
		if (!(*al)[t].is_boundary())
			n.add(body, t, body);
	n.add(body, kEnd, end);
	return n;
}

} // namespace

TEST_CASE("nfa basics") {
	auto al = Alphabet::semipath({"a"}, false);
	Nfa n(al);
	StateId s = n.add_state(), b = n.add_state(), f = n.add_state(true);
	n.add_initial(s);
	n.add(s, kBegin, b);
	n.add(b, al->at("a"), b);
	n.add(b, kEnd, f);
	CHECK(n.accepts({al->at("a"), al->at("a")}));
	CHECK_FALSE(n.accepts({al->at("a^-")}));
	CHECK(shortest_word(n)->size() == 2);
	CHECK(unmark(*shortest_word(n))->empty());
	CHECK_FALSE(unmark({al->at("a")}));
}

TEST_CASE("to_nfa preserves the language") {
	for (const auto& a : corpus_automata()) {
		Nfa n = to_nfa(a);
		for_each_word(a.alphabet(), 6, [&](const std::vector<TokenId>& w) {
			CHECK_MESSAGE(accepts(a, w) == n.accepts(w), a.alphabet().render(w));
			return true;
		});
	}
	auto al = Alphabet::semipath({"a"}, false);
	A2fa none(al);
	none.add_state("q");
	CHECK_FALSE(shortest_word(to_nfa(none)));
}

TEST_CASE("to_nfa on one-way automata") {
	auto al = Alphabet::semipath({"a"}, false);
	TokenId x = al->at("a"), y = al->at("a^-");
	// at & step back to the start, then read (a a^-)* forward
	A2fa a(al);
	StateId back = a.add_state("back"), p = a.add_state("p"), q = a.add_state("q"), f = a.add_state("f");
	a.set_initial(back);
	a.set_final(f, true);
	for (TokenId t : {kEnd, x, y})
		a.add(back, t, back, -1);
	a.add(back, kBegin, p, +1);
	a.add(p, x, q, +1);
	a.add(q, y, p, +1);
	a.add(p, kEnd, f, +1);
	Nfa n = to_nfa(a);
	for_each_word(*al, 6, [&](const std::vector<TokenId>& w) {
		bool expect = w.size() % 2 == 0;
		for (std::size_t i = 0; i < w.size(); ++i)
			expect = expect && w[i] == (i % 2 ? y : x);
		CHECK(accepts(a, w) == expect);
		CHECK(n.accepts(w) == expect);
		return true;
	});
}

TEST_CASE("complement and intersection") {
	auto automata = corpus_automata();
	for (std::size_t i = 0; i < automata.size(); ++i) {
		const A2fa& a = automata[i];
		Nfa n = to_nfa(a);
		Nfa co = complement_oneway(n);
		Nfa all = intersect_oneway(n, universal_nfa(a.alphabet_ptr()));
		for_each_word(a.alphabet(), 6, [&](const std::vector<TokenId>& w) {
			CHECK(n.accepts(w) != co.accepts(w));
			CHECK(all.accepts(w) == n.accepts(w));
			return true;
		});
		CHECK_FALSE(shortest_word(intersect_oneway(n, co)));
	}
}

TEST_CASE("lazy product with a complemented component") {
	for (const auto& a : corpus_automata()) {
		SummaryDfa d1(a), d2(a);
		CHECK_FALSE(shortest_word({{&d1, false}, {&d2, true}}));
	}
}

TEST_CASE("emptiness strategies") {
	A2fa a = wrap(compile_sp(parse("a")));
	auto w = is_empty(a, EmptinessStrategy::exact());
	REQUIRE(w);
	CHECK(a.alphabet().render(*w) == "a");
	auto b = is_empty(a, EmptinessStrategy::bounded(3));
	REQUIRE(b);
	CHECK(accepts(a, *b));

	A2fa none(a.alphabet_ptr());
	none.add_state("q");
	CHECK_FALSE(is_empty(none, EmptinessStrategy::exact()));
	CHECK_FALSE(is_empty(none, EmptinessStrategy::bounded(4)));

	for (const auto& c : corpus_automata()) {
		auto ex = is_empty(c, EmptinessStrategy::exact());
		auto bd = is_empty(c, EmptinessStrategy::bounded(6));
		if (ex) {
			CHECK(accepts(c, *ex));
			if (ex->size() <= 6) {
				REQUIRE(bd);
				CHECK(bd->size() == ex->size());
			}
		} else {
			CHECK_FALSE(bd);
		}
	}
}

TEST_CASE("state budget") {
	A2fa a = wrap(compile_sp(parse("(a . [b])* . b^-")));
	CHECK_THROWS_AS(to_nfa(a, 2), BudgetExceeded);
}
