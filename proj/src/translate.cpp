#include "nre/translate.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace nre {

namespace {

using K = Token::Kind;

bool is_letter(const Token& t) { return t.kind == K::Letter; }

class Compiler {
public:
	Compiler(AlphabetPtr alphabet, bool gamma) : out_(std::move(alphabet)), gamma_(gamma) {}

	MarkedA2fa run(const Nre& e) {
		Frag f = build(e);
		out_.set_initial(f.q0);
		out_.set_marked(f.qm);
		return MarkedA2fa{std::move(out_), f.qm};
	}

private:
	struct Frag {
		StateId q0, qm;
	};

	std::string name(const std::string& base, int step) const {
		return step == 1 ? base : base + "_" + std::to_string(step);
	}

	const Alphabet& sigma() const { return out_.alphabet(); }

	Frag build(const Nre& e) {
		const int step = ++step_;
		StateId q0 = out_.add_state(name("q0", step));
		switch (e.kind()) {
		case Nre::Kind::Epsilon: {
			StateId qf = final_state(step);
			out_.add_epsilon(q0, qf);
			return {q0, qf};
		}
		case Nre::Kind::Atom: return gamma_ ? atom_gen(q0, e.symbol(), step) : atom_sp(q0, e.symbol(), step);
		case Nre::Kind::Alt: {
			Frag a = build(e.left()), b = build(e.right());
			StateId qf = final_state(step);
			unmark(a), unmark(b);
			out_.add_epsilon(q0, a.q0);
			out_.add_epsilon(q0, b.q0);
			out_.add_epsilon(a.qm, qf);
			out_.add_epsilon(b.qm, qf);
			return {q0, qf};
		}
		case Nre::Kind::Concat: {
			Frag a = build(e.left()), b = build(e.right());
			StateId qf = final_state(step);
			unmark(a), unmark(b);
			out_.add_epsilon(q0, a.q0);
			out_.add_epsilon(a.qm, b.q0);
			out_.add_epsilon(b.qm, qf);
			return {q0, qf};
		}
		case Nre::Kind::Star: {
			Frag a = build(e.child());
			StateId qf = final_state(step);
			unmark(a);
			out_.add_epsilon(q0, a.q0);
			out_.add_epsilon(a.q0, qf);
			out_.add_epsilon(a.qm, qf);
			out_.add_epsilon(a.qm, a.q0);
			return {q0, qf};
		}
		case Nre::Kind::Nest: {
			Frag a = build(e.child());
			StateId p = out_.add_state(name("p", step), true);
			StateId qf = final_state(step);
			out_.add_epsilon(q0, p);
			out_.add_epsilon(p, qf);
			out_.add_epsilon(p, a.q0);
			// the inner marked state stays final and runs to the end
			for (TokenId t = 0; t < sigma().size(); ++t)
				if (!sigma()[t].is_boundary() && !sigma()[t].is_marker())
					out_.add(a.qm, t, a.qm, +1);
			return {q0, qf};
		}
		}
		throw std::logic_error("unknown expression kind");
	}

	StateId final_state(int step) {
		StateId qf = out_.add_state(name("qf", step));
		out_.set_final(qf, true);
		return qf;
	}

	void unmark(const Frag& f) { out_.set_final(f.qm, false); }

	Frag atom_sp(StateId q0, const Symbol& s, int step) {
		StateId qf = final_state(step);
		StateId qr = out_.add_state(name("qr", step));
		for (TokenId t = 0; t < sigma().size(); ++t) {
			const Token& tok = sigma()[t];
			if (is_letter(tok)) {
				if (tok.symbol == s)
					out_.add(q0, t, qf, +1);
				out_.add(q0, t, qr, -1);
				if (tok.symbol == s.inverted())
					out_.add(qr, t, qf, 0);
			} else if (tok.kind == K::End) {
				out_.add(q0, t, qr, -1);
			}
		}
		return {q0, qf};
	}

	// Forward: from the first token of a node of class c, skip whole child
	// branches until an edge token labelled s. Backward: from the incoming
	// edge token, skip earlier sibling branches back to the parent's first token.
	Frag atom_gen(StateId q0, const Symbol& s, int step) {
		const int k = sigma().k();
		StateId qf = final_state(step);
		std::vector<StateId> sc(k + 1), back_over(k + 1);
		std::map<std::pair<int, int>, StateId> inside;
		for (int c = 1; c <= k; ++c) {
			sc[c] = out_.add_state(name("s" + std::to_string(c), step));
			out_.add_epsilon(q0, sc[c]);
		}
		for (int c = 1; c <= k; ++c)
			for (int j = c; j <= k; ++j)
				inside[{c, j}] = out_.add_state(name("in" + std::to_string(c) + std::to_string(j), step));
		StateId qr1 = out_.add_state(name("qr1", step));
		StateId qr2 = out_.add_state(name("qr2", step));
		StateId back = out_.add_state(name("back", step));
		for (int j = 1; j <= k; ++j)
			back_over[j] = out_.add_state(name("up" + std::to_string(j), step));

		for (TokenId t = 0; t < sigma().size(); ++t) {
			const Token& tok = sigma()[t];
			if (tok.is_marker())
				continue;
			if (tok.kind != K::Begin) {
				out_.add(q0, t, qr1, -1);
				out_.add(qr2, t, back, -1);
			}
			if (tok.kind == K::Leaf)
				out_.add(back, t, back_over[tok.from], -1);
			else if (tok.kind == K::Letter || tok.kind == K::Begin)
				out_.add(back, t, qf, +1);
			if (tok.kind == K::Letter) {
				const int a = tok.from, b = tok.to;
				if (tok.symbol == s)
					out_.add(sc[a], t, qf, +1);
				if (b >= a)
					out_.add(sc[a], t, inside.at({a, b}), +1);
				if (tok.symbol == s.inverted())
					out_.add(qr1, t, qr2, 0);
				for (int j = 1; j <= k; ++j) {
					if (a >= j && b >= j)
						out_.add(back_over[j], t, back_over[j], -1);
					if (a < j && b == j)
						out_.add(back_over[j], t, qr2, 0);
				}
			}
			if (tok.kind == K::Leaf)
				for (int j = 1; j <= k; ++j)
					if (tok.from >= j)
						out_.add(back_over[j], t, back_over[j], -1);
			// inside a child branch of class j
			if (tok.kind == K::Letter || tok.kind == K::Leaf)
				for (auto [cj, st] : inside) {
					int j = cj.second;
					if (tok.kind == K::Leaf && tok.from == j)
						out_.add(st, t, sc[cj.first], +1);
					else if (tok.from >= j && tok.to >= j)
						out_.add(st, t, st, +1);
				}
		}
		return {q0, qf};
	}

	A2fa out_;
	bool gamma_;
	int step_ = 0;
};

AlphabetPtr require(const AlphabetPtr& a, bool gamma) {
	if (!a)
		throw std::invalid_argument("null alphabet");
	if (a->is_gamma() != gamma)
		throw std::invalid_argument(gamma ? "expected a Gamma alphabet" : "expected a semipath alphabet");
	return a;
}

std::vector<std::string> label_list(const Nre& e) {
	auto s = labels(e);
	return {s.begin(), s.end()};
}

} // namespace

MarkedA2fa compile_sp(const Nre& e, const AlphabetPtr& alphabet) {
	return Compiler(require(alphabet, false), false).run(e);
}

MarkedA2fa compile_sp(const Nre& e) { return compile_sp(e, Alphabet::semipath(label_list(e), true)); }

MarkedA2fa compile_gen(const Nre& e, const AlphabetPtr& alphabet) {
	return Compiler(require(alphabet, true), true).run(e);
}

MarkedA2fa compile_gen(const Nre& e, int k) { return compile_gen(e, Alphabet::gamma(k, label_list(e), true)); }

A2fa wrap(const MarkedA2fa& m) {
	A2fa a = m.automaton;
	const Alphabet& al = a.alphabet();
	const StateId core = a.initial();
	auto finals = a.finals();
	StateId q0w = a.add_state("q0'");
	a.set_initial(q0w);
	for (TokenId t = 0; t < al.size(); ++t) {
		if (al[t].kind == K::Begin || al[t].is_marker())
			continue;
		a.add(q0w, t, core, 0);
		a.add(q0w, t, q0w, -1);
		for (StateId f : finals)
			a.add(f, t, f, +1);
	}
	return a;
}

A2fa mark_se(const MarkedA2fa& m) {
	const A2fa& core = m.automaton;
	const Alphabet& al = core.alphabet();
	std::vector<TokenId> markers;
	for (TokenId t = 0; t < al.size(); ++t)
		if (al[t].is_marker())
			markers.push_back(t);
	if (markers.empty())
		throw std::invalid_argument("mark_se: alphabet has no S/E markers");

	A2fa a(core.alphabet_ptr());
	for (StateId q = 0; q < core.size(); ++q)
		a.add_state(core.name(q), core.universal(q));
	// every head move of the core passes over marker tokens
	std::map<StateId, StateId> fwd, bwd;
	auto skip = [&](std::map<StateId, StateId>& cache, StateId p, int dir) {
		auto it = cache.find(p);
		if (it != cache.end())
			return it->second;
		StateId s = a.add_state(core.name(p) + (dir > 0 ? ">" : "<"));
		for (TokenId t = 0; t < al.size(); ++t)
			a.add(s, t, al[t].is_marker() ? s : p, al[t].is_marker() ? dir : 0);
		cache.emplace(p, s);
		return s;
	};
	for (StateId q = 0; q < core.size(); ++q) {
		for (const auto& mv : core.on_epsilon(q))
			a.add_epsilon(q, mv.target);
		for (TokenId t = 0; t < al.size(); ++t)
			for (const auto& mv : core.on(q, t)) {
				if (mv.dir == 0)
					a.add(q, t, mv.target, 0);
				else
					a.add(q, t, skip(mv.dir > 0 ? fwd : bwd, mv.target, mv.dir), mv.dir);
			}
	}

	StateId qs = a.add_state("q0^S");
	StateId qe = a.add_state("qE?");
	StateId qfe = a.add_state("qf^E");
	a.set_initial(qs);
	a.set_marked(qfe);
	StateId start = skip(fwd, core.initial(), +1);
	for (TokenId t = 0; t < al.size(); ++t) {
		const Token& tok = al[t];
		if (tok.kind == K::Begin)
			continue;
		if (tok.kind == K::StartMark) {
			a.add(qs, t, start, +1);
			a.add(qe, t, qe, -1);
		} else {
			a.add(qs, t, qs, -1);
		}
		if (tok.kind == K::EndMark)
			a.add(qe, t, qfe, 0);
		if (!tok.is_marker())
			a.add(m.marked, t, qe, -1);
		a.add(qfe, t, qfe, +1);
		for (StateId f : core.finals())
			if (f != m.marked)
				a.add(f, t, f, +1);
	}
	for (StateId f : core.finals())
		if (f != m.marked)
			a.set_final(f, true);
	a.set_final(qfe, true);
	return a;
}

Nfa shape_automaton(const AlphabetPtr& alphabet, bool ordered) {
	const Alphabet& al = *alphabet;
	Nfa n(alphabet);
	// states: 0 before %, 1..4 = (seen S, seen E) inside, 5 after &
	StateId pre = n.add_state();
	StateId in[2][2];
	for (int s = 0; s < 2; ++s)
		for (int e = 0; e < 2; ++e)
			in[s][e] = n.add_state();
	StateId post = n.add_state(true);
	n.add_initial(pre);
	n.add(pre, kBegin, in[0][0]);
	n.add(in[1][1], kEnd, post);
	for (TokenId t = 0; t < al.size(); ++t) {
		const Token& tok = al[t];
		for (int s = 0; s < 2; ++s)
			for (int e = 0; e < 2; ++e) {
				if (!tok.is_marker() && !tok.is_boundary())
					n.add(in[s][e], t, in[s][e]);
				if (tok.kind == K::StartMark && !s)
					n.add(in[s][e], t, in[1][e]);
				if (tok.kind == K::EndMark && !e && (s || !ordered))
					n.add(in[s][e], t, in[s][1]);
			}
	}
	return n;
}

Nfa build_Lij(int i, int j, const AlphabetPtr& gamma, bool literal) {
	const Alphabet& al = *require(gamma, true);
	const int k = al.k();
	if (i < 1 || j < i || j > k)
		throw std::out_of_range("build_Lij: need 1 <= i <= j <= k");
	Nfa n(gamma);
	StateId a = n.add_state(), b = n.add_state(), c = n.add_state(true);
	n.add_initial(a);
	for (TokenId t = 0; t < al.size(); ++t) {
		const Token& tok = al[t];
		if (tok.kind == K::Letter && tok.from == i && tok.to == j)
			n.add(a, t, b);
		if (tok.kind == K::Letter && tok.from >= j && tok.to >= j)
			n.add(b, t, b);
		if (tok.kind == K::Leaf && tok.from == tok.to) {
			if (tok.from == j)
				n.add(b, t, c);
			else if (!literal && tok.from > j)
				n.add(b, t, b);
		}
	}
	return n;
}

Nfa build_Bi(int i, const AlphabetPtr& gamma, bool literal) {
	const Alphabet& al = *require(gamma, true);
	const int k = al.k();
	if (i < 1 || i > k)
		throw std::out_of_range("build_Bi: need 1 <= i <= k");
	// star of the union: the start state is final and every L-accepting
	// transition may return to it
	Nfa n(gamma);
	StateId hub = n.add_state(true);
	n.add_initial(hub);
	for (int j = i; j <= k; ++j) {
		Nfa l = build_Lij(i, j, gamma, literal);
		std::vector<StateId> map(l.size());
		for (StateId q = 0; q < l.size(); ++q)
			map[q] = n.add_state();
		auto link = [&](StateId from, TokenId t, StateId to) {
			n.add(from, t, map[to]);
			if (l.is_final(to))
				n.add(from, t, hub);
		};
		for (StateId q = 0; q < l.size(); ++q)
			for (TokenId t = 0; t < al.size(); ++t)
				for (StateId p : l.on(q, t)) {
					link(map[q], t, p);
					for (StateId s0 : l.initials())
						if (s0 == q)
							link(hub, t, p);
				}
	}
	return n;
}

A2fa build_Bj_minus(int j, const AlphabetPtr& gamma) {
	const Alphabet& al = *require(gamma, true);
	if (j < 1 || j > al.k())
		throw std::out_of_range("build_Bj_minus: need 1 <= j <= k");
	A2fa a(gamma);
	StateId q0 = a.add_state("q0"), q1 = a.add_state("q1"), q2 = a.add_state("q2"), qf = a.add_state("qf");
	a.set_initial(q0);
	a.set_final(qf, true);
	for (TokenId t = 0; t < al.size(); ++t) {
		const Token& tok = al[t];
		if (tok.kind != K::Letter && tok.kind != K::Leaf)
			continue;
		a.add(q0, t, q1, -1);
		if (tok.kind == K::Leaf && tok.from == j)
			a.add(q1, t, q2, -1);
		if (tok.from >= j && tok.to >= j)
			a.add(q2, t, q2, -1);
		if (tok.kind == K::Letter && tok.from < j && tok.to == j)
			a.add(q2, t, qf, 0);
	}
	return a;
}

Nfa encoding_validator(const AlphabetPtr& gamma) {
	const Alphabet& al = *require(gamma, true);
	// frames of (class, highest child class emitted so far); depth <= k
	using Frame = std::pair<int, int>;
	struct State {
		int phase; // 0 before %, 1 inside, 2 tree closed, 3 after &
		bool started;
		std::vector<Frame> stack;
		auto operator<=>(const State&) const = default;
	};
	Nfa n(gamma);
	std::map<State, StateId> id;
	std::deque<State> queue;
	auto get = [&](const State& s) {
		auto it = id.find(s);
		if (it != id.end())
			return it->second;
		StateId q = n.add_state(s.phase == 3);
		id.emplace(s, q);
		queue.push_back(s);
		return q;
	};
	n.add_initial(get(State{0, false, {}}));
	while (!queue.empty()) {
		State s = queue.front();
		queue.pop_front();
		StateId from = id.at(s);
		for (TokenId t = 0; t < al.size(); ++t) {
			const Token& tok = al[t];
			std::optional<State> next;
			if (s.phase == 0 && tok.kind == K::Begin)
				next = State{1, false, {{1, 1}}};
			else if (s.phase == 2 && tok.kind == K::End)
				next = State{3, true, {}};
			else if (s.phase == 1 && !tok.is_boundary()) {
				State r = s;
				r.started = true;
				auto& [c, last] = r.stack.back();
				const int a = tok.from, b = tok.to;
				if (a != c)
					continue;
				if (tok.kind == K::Letter) {
					if (b > a && b > last) {
						last = b;
						r.stack.push_back({b, b});
						next = r;
					} else if (b == a) {
						last = a;
						next = r;
					}
				} else if (tok.is_marker()) {
					if (b == a && last == c)
						next = r;
				} else if (tok.kind == K::Leaf) {
					if (b == a && last == c && s.started) {
						r.stack.pop_back();
						if (r.stack.empty())
							r.phase = 2;
						next = r;
					}
				}
			}
			if (next)
				n.add(from, t, get(*next));
		}
	}
	return n;
}

std::vector<TokenId> place_markers(const Alphabet& alphabet, const std::vector<TokenId>& w, std::size_t i,
                                   std::size_t j) {
	if (alphabet.is_gamma())
		throw std::invalid_argument("place_markers: semipath alphabets only");
	if (i < 1 || j < 1 || i > w.size() + 1 || j > w.size() + 1)
		throw std::out_of_range("place_markers: position out of range");
	const TokenId s = alphabet.at(std::string(kStartMarkerLabel));
	const TokenId e = alphabet.at(std::string(kEndMarkerLabel));
	std::vector<TokenId> out;
	for (std::size_t p = 1; p <= w.size() + 1; ++p) {
		if (p == i)
			out.push_back(s);
		if (p == j)
			out.push_back(e);
		if (p <= w.size())
			out.push_back(w[p - 1]);
	}
	return out;
}

std::set<std::pair<std::size_t, std::size_t>> endpoints(const A2fa& a, const std::vector<TokenId>& w) {
	std::set<std::pair<std::size_t, std::size_t>> out;
	for (std::size_t i = 1; i <= w.size() + 1; ++i)
		for (std::size_t j = 1; j <= w.size() + 1; ++j)
			if (accepts(a, place_markers(a.alphabet(), w, i, j)))
				out.emplace(i, j);
	return out;
}

std::vector<std::string> shared_labels(const Nre& a, const Nre& b) {
	auto s = labels(a);
	auto t = labels(b);
	s.insert(t.begin(), t.end());
	return {s.begin(), s.end()};
}

} // namespace nre
