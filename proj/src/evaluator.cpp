#include "nre/evaluator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nre {

namespace {

// Expression automaton over graph moves. Nested tests are node predicates
// computed before the enclosing automaton is searched.
struct Program {
	struct Move {
		enum Kind { Eps, Step, Test } kind;
		std::size_t target;
		std::size_t label = 0; // Step: graph label id, Test: predicate index
		bool inverse = false;
		bool dead = false;     // label absent from the graph
	};

	std::vector<std::vector<Move>> out;
	std::size_t start = 0, accept = 0;

	std::size_t fresh() {
		out.emplace_back();
		return out.size() - 1;
	}
};

class Compiler {
public:
	explicit Compiler(const IndexedGraph& g) : g_(g) {}

	std::vector<std::vector<char>> predicates;

	Program compile(const Nre& e) {
		Program p;
		auto [s, f] = build(e, p);
		p.start = s;
		p.accept = f;
		return p;
	}

private:
	std::pair<std::size_t, std::size_t> build(const Nre& e, Program& p) {
		using K = Nre::Kind;
		std::size_t s = p.fresh(), f = p.fresh();
		switch (e.kind()) {
		case K::Epsilon: p.out[s].push_back({Program::Move::Eps, f}); break;
		case K::Atom: {
			auto id = g_.label_id(e.symbol().label);
			Program::Move m{Program::Move::Step, f, id.value_or(0), e.symbol().inverse, !id};
			p.out[s].push_back(m);
			break;
		}
		case K::Concat: {
			auto [s1, f1] = build(e.left(), p);
			auto [s2, f2] = build(e.right(), p);
			p.out[s].push_back({Program::Move::Eps, s1});
			p.out[f1].push_back({Program::Move::Eps, s2});
			p.out[f2].push_back({Program::Move::Eps, f});
			break;
		}
		case K::Alt: {
			auto [s1, f1] = build(e.left(), p);
			auto [s2, f2] = build(e.right(), p);
			p.out[s].push_back({Program::Move::Eps, s1});
			p.out[s].push_back({Program::Move::Eps, s2});
			p.out[f1].push_back({Program::Move::Eps, f});
			p.out[f2].push_back({Program::Move::Eps, f});
			break;
		}
		case K::Star: {
			auto [s1, f1] = build(e.child(), p);
			p.out[s].push_back({Program::Move::Eps, s1});
			p.out[s].push_back({Program::Move::Eps, f});
			p.out[f1].push_back({Program::Move::Eps, s1});
			p.out[f1].push_back({Program::Move::Eps, f});
			break;
		}
		case K::Nest: {
			Program inner = compile(e.child());
			predicates.push_back(domain_of(inner));
			p.out[s].push_back({Program::Move::Test, f, predicates.size() - 1});
			break;
		}
		}
		return {s, f};
	}

	// nodes u such that (u, start) reaches (v, accept) for some v
	std::vector<char> domain_of(const Program& p) {
		std::size_t n = g_.node_count(), states = p.out.size();
		std::vector<std::vector<Program::Move>> rev(states);
		for (std::size_t q = 0; q < states; ++q)
			for (auto m : p.out[q]) {
				std::size_t to = m.target;
				m.target = q;
				rev[to].push_back(m);
			}
		std::vector<char> seen(n * states, 0);
		std::deque<std::pair<std::size_t, std::size_t>> queue;
		for (std::size_t v = 0; v < n; ++v) {
			seen[v * states + p.accept] = 1;
			queue.emplace_back(v, p.accept);
		}
		auto visit = [&](std::size_t node, std::size_t q) {
			char& b = seen[node * states + q];
			if (!b) {
				b = 1;
				queue.emplace_back(node, q);
			}
		};
		while (!queue.empty()) {
			auto [w, q] = queue.front();
			queue.pop_front();
			for (const auto& m : rev[q]) {
				switch (m.kind) {
				case Program::Move::Eps: visit(w, m.target); break;
				case Program::Move::Test:
					if (predicates[m.label][w])
						visit(w, m.target);
					break;
				case Program::Move::Step:
					if (m.dead)
						break;
					for (std::size_t u : g_.neighbours(w, m.label, !m.inverse))
						visit(u, m.target);
					break;
				}
			}
		}
		std::vector<char> dom(n, 0);
		for (std::size_t u = 0; u < n; ++u)
			dom[u] = seen[u * states + p.start];
		return dom;
	}

	const IndexedGraph& g_;
};

// all (v, accept) reachable from (u, start); returns targets as node flags
std::vector<char> reach(const Program& p, const IndexedGraph& g, const std::vector<std::vector<char>>& preds,
                        std::size_t u, std::optional<std::size_t> stop_at = std::nullopt) {
	std::size_t n = g.node_count(), states = p.out.size();
	std::vector<char> seen(n * states, 0);
	std::vector<char> hit(n, 0);
	std::vector<std::pair<std::size_t, std::size_t>> stack{{u, p.start}};
	seen[u * states + p.start] = 1;
	while (!stack.empty()) {
		auto [w, q] = stack.back();
		stack.pop_back();
		if (q == p.accept) {
			hit[w] = 1;
			if (stop_at && *stop_at == w)
				return hit;
		}
		auto visit = [&](std::size_t node, std::size_t r) {
			char& b = seen[node * states + r];
			if (!b) {
				b = 1;
				stack.emplace_back(node, r);
			}
		};
		for (const auto& m : p.out[q]) {
			switch (m.kind) {
			case Program::Move::Eps: visit(w, m.target); break;
			case Program::Move::Test:
				if (preds[m.label][w])
					visit(w, m.target);
				break;
			case Program::Move::Step:
				if (m.dead)
					break;
				for (std::size_t x : g.neighbours(w, m.label, m.inverse))
					visit(x, m.target);
				break;
			}
		}
	}
	return hit;
}

NodeRelation eval_impl(const Nre& e, const GraphDb& gdb, bool parallel) {
	IndexedGraph g(gdb);
	Compiler c(g);
	Program p = c.compile(e);
	const long n = static_cast<long>(g.node_count());
	std::vector<std::vector<char>> rows(n);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
	for (long u = 0; u < n; ++u)
		rows[u] = reach(p, g, c.predicates, static_cast<std::size_t>(u));
	NodeRelation out;
	for (long u = 0; u < n; ++u)
		for (long v = 0; v < n; ++v)
			if (rows[u][v])
				out.emplace(g.name(u), g.name(v));
	return out;
}

} // namespace

NodeRelation eval(const Nre& e, const GraphDb& g) { return eval_impl(e, g, true); }

NodeRelation eval_serial(const Nre& e, const GraphDb& g) { return eval_impl(e, g, false); }

struct PairChecker::Impl {
	explicit Impl(const GraphDb& gdb) : g(gdb), compiler(g) {}
	IndexedGraph g;
	Compiler compiler;
	Program program;
};

PairChecker::PairChecker(const Nre& e, const GraphDb& g) : impl_(std::make_unique<Impl>(g)) {
	impl_->program = impl_->compiler.compile(e);
}

PairChecker::~PairChecker() = default;

bool PairChecker::check(const std::string& u, const std::string& v) const {
	auto ui = impl_->g.index(u), vi = impl_->g.index(v);
	if (!ui)
		throw GraphError("unknown node '" + u + "'");
	if (!vi)
		throw GraphError("unknown node '" + v + "'");
	return reach(impl_->program, impl_->g, impl_->compiler.predicates, *ui, *vi)[*vi];
}

bool eval_check(const Nre& e, const GraphDb& g, const std::string& u, const std::string& v) {
	return PairChecker(e, g).check(u, v);
}

namespace {

using ElementSet = std::set<Element>;

class CanonicalChecker {
public:
	explicit CanonicalChecker(const KBranchSemipath& t) : t_(t) {}

	bool check(const ElementSet& s, const Nre& e) {
		auto key = std::make_pair(s, e.identity());
		if (auto it = memo_.find(key); it != memo_.end())
			return it->second;
		bool r = compute(s, e);
		memo_[key] = r;
		return r;
	}

private:
	static const Element& root(const ElementSet& s) {
		return *std::min_element(s.begin(), s.end(), [](const Element& a, const Element& b) { return a.size() < b.size(); });
	}

	static std::pair<ElementSet, ElementSet> split(const ElementSet& s, const Element& w) {
		ElementSet upper{w}, lower;
		for (const auto& x : s) {
			if (x.starts_with(w))
				lower.insert(x);
			else
				upper.insert(x);
		}
		return {upper, lower};
	}

	bool compute(const ElementSet& s, const Nre& e) {
		using K = Nre::Kind;
		switch (e.kind()) {
		case K::Epsilon: return s.size() == 1;
		case K::Atom: {
			if (s.size() != 2)
				return false;
			const Element& a = *s.begin();
			const Element& b = *std::next(s.begin());
			const Element& child = a.size() < b.size() ? b : a;
			const Element& par = a.size() < b.size() ? a : b;
			return parent_of(child) == par && t_.labels.at(child) == e.symbol();
		}
		case K::Alt: return check(s, e.left()) || check(s, e.right());
		case K::Concat:
			for (const auto& w : s) {
				auto [upper, lower] = split(s, w);
				if (check(upper, e.left()) && check(lower, e.right()))
					return true;
			}
			return false;
		case K::Star: {
			if (s.size() == 1)
				return true;
			const Element& r = root(s);
			for (const auto& w : s) {
				if (w == r)
					continue;
				auto [upper, lower] = split(s, w);
				if (check(upper, e.child()) && check(lower, e))
					return true;
			}
			return false;
		}
		case K::Nest: return check(s, e.child());
		}
		return false;
	}

	const KBranchSemipath& t_;
	std::map<std::pair<ElementSet, const void*>, bool> memo_;
};

} // namespace

bool is_canonical(const KBranchSemipath& t, const Nre& e) {
	validate(t);
	return CanonicalChecker(t).check(t.domain, e);
}

} // namespace nre
