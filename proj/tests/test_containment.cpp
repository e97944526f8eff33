#include <doctest.h>

#include "corpus.hpp"
#include "nre/containment.hpp"
#include "nre/oracle.hpp"

using namespace nre;

namespace {

ContainmentOptions with(ContainmentOptions::Strategy s, std::size_t max_len = 6) {
	ContainmentOptions o;
	o.strategy = s;
	o.max_len = max_len;
	return o;
}

using Pair = std::pair<std::string, std::string>;

} // namespace

TEST_CASE("semipath containment examples") {
	CHECK(sp_contains(parse("a"), parse("a | b")).contained());
	auto v = sp_contains(parse("a | b"), parse("a"));
	REQUIRE(v.not_contained());
	CHECK(v.counterexample->graph == load_graph("u1\tb\tu2"));
	CHECK(v.counterexample->pair == Pair{"u1", "u2"});
	CHECK(sp_contains(parse("[a] . b"), parse("b")).contained());
	v = sp_contains(parse("b"), parse("[a] . b"));
	REQUIRE(v.not_contained());
	CHECK(v.counterexample->graph == load_graph("u1\tb\tu2"));
	CHECK(sp_contains(parse("a . a^-"), parse("eps")).not_contained());
	CHECK(sp_contains(parse("[a^-]"), parse("a^- . a")).contained());
}

TEST_CASE("general containment examples") {
	CHECK(gen_contains(parse("[a . b]"), parse("[a]")).contained());
	auto v = gen_contains(parse("[a]"), parse("[a . b]"));
	REQUIRE(v.not_contained());
	CHECK(v.counterexample->graph == load_graph("1\ta\t11"));
	CHECK(v.counterexample->pair == Pair{"1", "1"});
	// needs a branching witness: a node with both an a-child and a b-child
	v = gen_contains(parse("[a] . [b]"), parse("[a . b]"));
	REQUIRE(v.not_contained());
	CHECK(v.counterexample->graph.edges().size() == 2);
	// needs a witness with a single node
	v = gen_contains(parse("eps"), parse("[a]"));
	REQUIRE(v.not_contained());
	CHECK(v.counterexample->graph.edges().empty());
}

TEST_CASE("containment is reflexive") {
	for (const auto& text : corpus::expressions()) {
		Nre e = parse(text);
		CHECK_MESSAGE(sp_contains(e, e).contained(), text);
		CHECK_MESSAGE(gen_contains(e, e).contained(), text);
	}
}

TEST_CASE("exact and bounded strategies never contradict") {
	for (const auto& [l, r] : corpus::pairs()) {
		Nre a = parse(l), b = parse(r);
		// Both raises ContainmentBug on a contradiction
		auto sp = sp_contains(a, b, with(ContainmentOptions::Strategy::Both, 5));
		auto bounded = sp_contains(a, b, with(ContainmentOptions::Strategy::Bounded, 5));
		if (bounded.not_contained())
			CHECK(sp.not_contained());
		CHECK(sp.outcome != Verdict::Outcome::Unknown);
		if (nesting_depth(a) <= 2) {
			auto gen = gen_contains(a, b, with(ContainmentOptions::Strategy::Both, 4));
			CHECK(gen.outcome != Verdict::Outcome::Unknown);
		}
	}
}

TEST_CASE("shortest counterexamples agree with the oracle") {
	oracle::EnumSpec spec;
	spec.max_size = 4;
	for (const auto& [l, r] : corpus::pairs()) {
		Nre a = parse(l), b = parse(r);
		auto v = sp_contains(a, b);
		auto o = oracle::oracle_contains(a, b, spec, oracle::Mode::Semipath);
		CHECK_MESSAGE(v.outcome == o.outcome, l << " <= " << r);
		if (v.not_contained() && o.not_contained())
			CHECK(v.counterexample->graph.edges().size() == o.counterexample->graph.edges().size());
	}
}

TEST_CASE("depth-one inputs: general and semipath pipelines agree") {
	for (const auto& [l, r] : corpus::pairs()) {
		Nre a = parse(l), b = parse(r);
		if (nesting_depth(a) != 1)
			continue;
		auto sp = sp_contains(a, b), gen = gen_contains(a, b);
		CHECK_MESSAGE(sp.outcome == gen.outcome, l << " <= " << r);
		if (gen.not_contained())
			CHECK(resembles_semipath(gen.counterexample->graph));
	}
}

TEST_CASE("budgets and bounds produce Unknown") {
	ContainmentOptions tiny;
	tiny.state_budget = 3;
	CHECK(sp_contains(parse("(a . [b])*"), parse("a*"), tiny).outcome == Verdict::Outcome::Unknown);
	auto v = sp_contains(parse("a | b"), parse("a"), with(ContainmentOptions::Strategy::Bounded, 0));
	CHECK(v.outcome == Verdict::Outcome::Unknown);
	CHECK(sp_contains(parse("a"), parse("a | b"), with(ContainmentOptions::Strategy::Bounded, 3)).outcome ==
	      Verdict::Outcome::Unknown);
}

TEST_CASE("counterexample verification rejects bogus witnesses") {
	Counterexample cx{load_graph("u1\ta\tu2"), {"u1", "u2"}, ""};
	CHECK_NOTHROW(verify_counterexample(parse("a"), parse("b"), cx));
	CHECK_THROWS_AS(verify_counterexample(parse("a"), parse("a | b"), cx), ContainmentBug);
	CHECK_THROWS_AS(verify_counterexample(parse("b"), parse("eps"), cx), ContainmentBug);
}

TEST_CASE("random pairs: every answer re-verifies") {
	corpus::RandomNre gen(4242);
	for (int i = 0; i < 40; ++i) {
		Nre a = gen.make(6, 2), b = gen.make(6, 2);
		// verification happens inside; a failure would throw ContainmentBug
		CHECK_NOTHROW(sp_contains(a, b));
	}
}
