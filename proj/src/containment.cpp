#include "nre/containment.hpp"

#include <optional>

#include "nre/kbranch.hpp"
#include "nre/oracle.hpp"
#include "nre/translate.hpp"

namespace nre {

std::string to_string(Verdict::Outcome o) {
	switch (o) {
	case Verdict::Outcome::Contained: return "CONTAINED";
	case Verdict::Outcome::NotContained: return "NOT CONTAINED";
	case Verdict::Outcome::Unknown: return "UNKNOWN";
	}
	return "UNKNOWN";
}

void verify_counterexample(const Nre& lhs, const Nre& rhs, const Counterexample& cx) {
	if (!oracle::naive_eval(lhs, cx.graph).contains(cx.pair))
		throw ContainmentBug("counterexample pair (" + cx.pair.first + "," + cx.pair.second + ") not in lhs: " +
		                     render(lhs));
	if (oracle::naive_eval(rhs, cx.graph).contains(cx.pair))
		throw ContainmentBug("counterexample pair (" + cx.pair.first + "," + cx.pair.second + ") is in rhs: " +
		                     render(rhs));
}

namespace {

struct Setup {
	AlphabetPtr alphabet;
	A2fa lhs, rhs;
	std::vector<Nfa> filters; // shape, then the encoding validator
	int k = 0;
};

Setup setup_sp(const Nre& e1, const Nre& e2) {
	auto al = Alphabet::semipath(shared_labels(e1, e2), true);
	Setup s{al, mark_se(compile_sp(e1, al)), mark_se(compile_sp(e2, al)), {}, 0};
	s.filters.push_back(shape_automaton(al, true));
	return s;
}

Setup setup_gen(const Nre& e1, const Nre& e2) {
	int k = nesting_depth(e1);
	auto al = Alphabet::gamma(k, shared_labels(e1, e2), true);
	Setup s{al, mark_se(compile_gen(e1, al)), mark_se(compile_gen(e2, al)), {}, k};
	s.filters.push_back(shape_automaton(al, false));
	s.filters.push_back(encoding_validator(al));
	return s;
}

std::optional<std::vector<TokenId>> exact_search(Setup& s, std::size_t budget) {
	std::vector<std::unique_ptr<LazyDfa>> owned;
	std::vector<Component> parts;
	for (const auto& f : s.filters) {
		owned.push_back(std::make_unique<SubsetDfa>(f, budget));
		parts.push_back({owned.back().get(), false});
	}
	owned.push_back(std::make_unique<SummaryDfa>(s.lhs, budget));
	parts.push_back({owned.back().get(), false});
	owned.push_back(std::make_unique<SummaryDfa>(s.rhs, budget));
	parts.push_back({owned.back().get(), true});
	auto full = shortest_word(parts, budget);
	if (!full)
		return std::nullopt;
	auto w = unmark(*full);
	if (!w)
		throw ContainmentBug("product witness is not a marked word");
	return w;
}

// Candidate words in length order, filtered by the shape (and validator),
// tested by direct membership.
std::optional<std::vector<TokenId>> bounded_search(Setup& s, std::size_t max_len, std::size_t budget) {
	std::vector<std::unique_ptr<SubsetDfa>> dfas;
	for (const auto& f : s.filters)
		dfas.push_back(std::make_unique<SubsetDfa>(f, budget));
	const Alphabet& al = *s.alphabet;
	struct Partial {
		std::vector<DState> states;
		std::vector<TokenId> word;
		std::size_t letters;
	};
	std::vector<Partial> layer;
	{
		Partial p{{}, {kBegin}, 0};
		for (auto& d : dfas)
			p.states.push_back(d->next(d->start(), kBegin));
		layer.push_back(std::move(p));
	}
	while (!layer.empty()) {
		std::vector<Partial> next;
		for (const auto& p : layer)
			for (TokenId t = 0; t < al.size(); ++t) {
				if (t == kBegin)
					continue;
				const bool letter = !al[t].is_marker() && t != kEnd;
				if (letter && p.letters == max_len)
					continue;
				Partial q{{}, p.word, p.letters + (letter ? 1 : 0)};
				bool alive = true;
				for (std::size_t i = 0; i < dfas.size() && alive; ++i) {
					DState d = dfas[i]->next(p.states[i], t);
					alive = !dfas[i]->dead(d);
					q.states.push_back(d);
				}
				if (!alive)
					continue;
				q.word.push_back(t);
				if (t != kEnd) {
					next.push_back(std::move(q));
					continue;
				}
				bool complete = true;
				for (std::size_t i = 0; i < dfas.size(); ++i)
					complete = complete && dfas[i]->accepting(q.states[i]);
				if (!complete)
					continue;
				auto w = *unmark(q.word);
				if (accepts(s.lhs, w) && !accepts(s.rhs, w))
					return w;
			}
		layer = std::move(next);
	}
	return std::nullopt;
}

Counterexample decode_sp(const Setup& s, const std::vector<TokenId>& w) {
	const Alphabet& al = *s.alphabet;
	std::vector<Symbol> letters;
	std::size_t i = 0, j = 0;
	for (TokenId t : w) {
		if (al[t].kind == Token::Kind::StartMark)
			i = letters.size() + 1;
		else if (al[t].kind == Token::Kind::EndMark)
			j = letters.size() + 1;
		else
			letters.push_back(al[t].symbol);
	}
	if (!i || !j)
		throw ContainmentBug("witness lacks a marker");
	Semipath p = make_semipath(letters);
	return Counterexample{to_graph(p), {p.nodes[i - 1], p.nodes[j - 1]}, al.render(marked(w))};
}

Counterexample decode_gen(const Setup& s, const std::vector<TokenId>& w) {
	const Alphabet& al = *s.alphabet;
	EncodedWord ew;
	for (TokenId t : w) {
		const Token& tok = al[t];
		GammaToken g{tok.from, std::nullopt, tok.to};
		if (tok.kind != Token::Kind::Leaf)
			g.label = tok.symbol;
		ew.tokens.push_back(g);
	}
	auto tree = decode(ew, s.k);
	if (!tree)
		throw ContainmentBug("witness " + ew.str() + " does not decode");
	auto m = contract_markers(*tree);
	if (!m)
		throw ContainmentBug("witness " + ew.str() + " has misplaced markers");
	return Counterexample{to_graph(m->tree), {m->u, m->v}, ew.str()};
}

using Decoder = Counterexample (*)(const Setup&, const std::vector<TokenId>&);

Verdict found(const Nre& lhs, const Nre& rhs, const Setup& s, Decoder dec, const std::vector<TokenId>& w,
              std::string note) {
	Counterexample cx = dec(s, w);
	verify_counterexample(lhs, rhs, cx);
	return Verdict{Verdict::Outcome::NotContained, std::move(cx), std::move(note)};
}

Verdict decide(const Nre& lhs, const Nre& rhs, Setup s, Decoder dec, const ContainmentOptions& opts) {
	using St = ContainmentOptions::Strategy;
	std::optional<Verdict> exact, bounded;
	if (opts.strategy != St::Bounded) {
		try {
			auto w = exact_search(s, opts.state_budget);
			exact = w ? found(lhs, rhs, s, dec, *w, "") : Verdict{Verdict::Outcome::Contained, std::nullopt, ""};
		} catch (const BudgetExceeded& e) {
			exact = Verdict{Verdict::Outcome::Unknown, std::nullopt, e.what()};
		}
	}
	if (opts.strategy != St::Exact) {
		try {
			auto w = bounded_search(s, opts.max_len, opts.state_budget);
			bounded = w ? found(lhs, rhs, s, dec, *w, "")
			            : Verdict{Verdict::Outcome::Unknown, std::nullopt,
			                      "no counterexample with at most " + std::to_string(opts.max_len) + " letters"};
		} catch (const BudgetExceeded& e) {
			bounded = Verdict{Verdict::Outcome::Unknown, std::nullopt, e.what()};
		}
	}
	if (!bounded)
		return *exact;
	if (!exact)
		return *bounded;
	if (exact->contained() && bounded->not_contained())
		throw ContainmentBug("exact search says contained, bounded search found " +
		                     bounded->counterexample->witness);
	return exact->outcome == Verdict::Outcome::Unknown ? *bounded : *exact;
}

} // namespace

Verdict sp_contains(const Nre& lhs, const Nre& rhs, const ContainmentOptions& opts) {
	return decide(lhs, rhs, setup_sp(lhs, rhs), decode_sp, opts);
}

Verdict gen_contains(const Nre& lhs, const Nre& rhs, const ContainmentOptions& opts) {
	return decide(lhs, rhs, setup_gen(lhs, rhs), decode_gen, opts);
}

} // namespace nre
