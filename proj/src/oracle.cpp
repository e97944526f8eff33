#include "nre/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nre::oracle {

namespace {

using Rel = std::set<std::pair<std::string, std::string>>;

Rel identity(const GraphDb& g) {
	Rel r;
	for (const auto& n : g.nodes())
		r.emplace(n, n);
	return r;
}

Rel compose(const Rel& a, const Rel& b) {
	Rel out;
	for (const auto& [u, w] : a)
		for (const auto& [w2, v] : b)
			if (w == w2)
				out.emplace(u, v);
	return out;
}

Rel naive(const Nre& e, const GraphDb& g) {
	using K = Nre::Kind;
	switch (e.kind()) {
	case K::Epsilon: return identity(g);
	case K::Atom: {
		Rel r;
		for (const auto& edge : g.edges())
			if (edge.label == e.symbol().label) {
				if (e.symbol().inverse)
					r.emplace(edge.target, edge.source);
				else
					r.emplace(edge.source, edge.target);
			}
		return r;
	}
	case K::Concat: return compose(naive(e.left(), g), naive(e.right(), g));
	case K::Alt: {
		Rel r = naive(e.left(), g);
		Rel s = naive(e.right(), g);
		r.insert(s.begin(), s.end());
		return r;
	}
	case K::Star: {
		// eps U n U n.n U ... until no new pair appears
		Rel base = naive(e.child(), g);
		Rel acc = identity(g);
		Rel power = acc;
		for (;;) {
			power = compose(power, base);
			std::size_t before = acc.size();
			acc.insert(power.begin(), power.end());
			if (acc.size() == before)
				return acc;
		}
	}
	case K::Nest: {
		Rel r;
		for (const auto& [u, v] : naive(e.child(), g))
			r.emplace(u, u);
		return r;
	}
	}
	return {};
}

// Subtrees below an element of class c using at most `budget` edges, as sets
// of descendant suffixes.
using Shape = std::vector<std::string>;

std::vector<Shape> shapes(int c, int k, int budget) {
	std::vector<Shape> out{Shape{}};
	if (budget <= 0)
		return out;
	// children: any subset of classes c+1..k plus the mandatory class-c child
	for (int mask = 0; mask < (1 << (k - c)); ++mask) {
		std::vector<int> classes;
		for (int j = c + 1; j <= k; ++j)
			if (mask & (1 << (j - c - 1)))
				classes.push_back(j);
		classes.push_back(c);
		if (static_cast<int>(classes.size()) > budget)
			continue;
		// distribute the remaining budget over the children subtrees
		std::vector<std::pair<Shape, int>> partial{{Shape{}, static_cast<int>(classes.size())}};
		for (int j : classes) {
			std::vector<std::pair<Shape, int>> next;
			for (const auto& [acc, used] : partial) {
				for (const auto& sub : shapes(j, k, budget - used)) {
					Shape merged = acc;
					std::string head(1, static_cast<char>('0' + j));
					merged.push_back(head);
					for (const auto& s : sub)
						merged.push_back(head + s);
					next.emplace_back(std::move(merged), used + static_cast<int>(sub.size()));
				}
			}
			partial = std::move(next);
		}
		for (auto& [s, used] : partial)
			out.push_back(std::move(s));
	}
	return out;
}

} // namespace

NodeRelation naive_eval(const Nre& e, const GraphDb& g) { return naive(e, g); }

std::vector<Symbol> alphabet(const EnumSpec& spec) {
	std::vector<Symbol> out;
	for (const auto& l : spec.labels) {
		out.push_back(Symbol{l, false});
		if (spec.inverses)
			out.push_back(Symbol{l, true});
	}
	return out;
}

void enum_semipaths(const EnumSpec& spec, const std::function<void(const Semipath&)>& visit) {
	auto sigma = alphabet(spec);
	for (int len = 0; len <= spec.max_size; ++len) {
		std::vector<std::size_t> digits(len, 0);
		for (;;) {
			std::vector<Symbol> letters;
			for (auto d : digits)
				letters.push_back(sigma[d]);
			visit(make_semipath(letters));
			int i = len - 1;
			while (i >= 0 && ++digits[i] == sigma.size())
				digits[i--] = 0;
			if (i < 0 || sigma.empty())
				break;
		}
	}
}

std::vector<Semipath> semipaths(const EnumSpec& spec) {
	std::vector<Semipath> out;
	enum_semipaths(spec, [&](const Semipath& p) { out.push_back(p); });
	return out;
}

void enum_kbranch(const EnumSpec& spec, const std::function<void(const KBranchSemipath&)>& visit) {
	auto sigma = alphabet(spec);
	auto all = shapes(1, spec.k, spec.max_size);
	std::stable_sort(all.begin(), all.end(), [](const Shape& a, const Shape& b) { return a.size() < b.size(); });
	for (const auto& shape : all) {
		std::vector<Element> elems;
		for (const auto& s : shape)
			elems.push_back("1" + s);
		std::sort(elems.begin(), elems.end());
		std::vector<std::size_t> digits(elems.size(), 0);
		for (;;) {
			KBranchSemipath t;
			t.k = spec.k;
			for (std::size_t i = 0; i < elems.size(); ++i) {
				t.domain.insert(elems[i]);
				t.labels[elems[i]] = sigma[digits[i]];
			}
			visit(t);
			int i = static_cast<int>(elems.size()) - 1;
			while (i >= 0 && ++digits[i] == sigma.size())
				digits[i--] = 0;
			if (i < 0 || sigma.empty())
				break;
		}
	}
}

std::vector<KBranchSemipath> kbranch_trees(const EnumSpec& spec) {
	std::vector<KBranchSemipath> out;
	enum_kbranch(spec, [&](const KBranchSemipath& t) { out.push_back(t); });
	return out;
}

namespace {

std::vector<GraphDb> graphs_for(const EnumSpec& spec, Mode mode) {
	std::vector<GraphDb> out;
	if (mode == Mode::Semipath)
		enum_semipaths(spec, [&](const Semipath& p) { out.push_back(to_graph(p)); });
	else
		enum_kbranch(spec, [&](const KBranchSemipath& t) { out.push_back(to_graph(t)); });
	return out;
}

std::optional<Counterexample> violation(const Nre& lhs, const Nre& rhs, const GraphDb& g) {
	Rel l = naive(lhs, g);
	Rel r = naive(rhs, g);
	for (const auto& p : l)
		if (!r.contains(p))
			return Counterexample{g, p, ""};
	return std::nullopt;
}

std::string bound_note(const EnumSpec& spec, Mode mode) {
	return std::string("up to ") + (mode == Mode::Semipath ? "semipaths of length " : "trees with edges ") + "<= " +
	       std::to_string(spec.max_size) + (mode == Mode::KBranch ? ", k = " + std::to_string(spec.k) : "");
}

} // namespace

Verdict oracle_contains(const Nre& lhs, const Nre& rhs, const EnumSpec& spec, Mode mode) {
	for (const auto& g : graphs_for(spec, mode))
		if (auto cx = violation(lhs, rhs, g))
			return Verdict{Verdict::Outcome::NotContained, std::move(cx), ""};
	return Verdict{Verdict::Outcome::Contained, std::nullopt, bound_note(spec, mode)};
}

Verdict oracle_contains_parallel(const Nre& lhs, const Nre& rhs, const EnumSpec& spec, Mode mode) {
	auto graphs = graphs_for(spec, mode);
	const long n = static_cast<long>(graphs.size());
	// smallest violating index wins, matching the serial scan
	std::atomic<long> first{n};
	std::vector<std::optional<Counterexample>> found(graphs.size());
#pragma omp parallel for schedule(dynamic, 16)
	for (long i = 0; i < n; ++i) {
		if (i > first.load(std::memory_order_relaxed))
			continue;
		if (auto cx = violation(lhs, rhs, graphs[i])) {
			found[i] = std::move(cx);
			long cur = first.load();
			while (i < cur && !first.compare_exchange_weak(cur, i)) {
			}
		}
	}
	if (first.load() < n)
		return Verdict{Verdict::Outcome::NotContained, std::move(found[first.load()]), ""};
	return Verdict{Verdict::Outcome::Contained, std::nullopt, bound_note(spec, mode)};
}

} // namespace nre::oracle
