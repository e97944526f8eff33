// bench -- parallel vs serial timings for the evaluator and the oracle
//
//   nre_bench [edges] [repeats]
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "nre/evaluator.hpp"
#include "nre/oracle.hpp"

namespace {

nre::GraphDb random_graph(std::size_t edges, unsigned seed) {
	std::mt19937 rng(seed);
	std::size_t nodes = std::max<std::size_t>(2, edges / 2);
	std::uniform_int_distribution<std::size_t> node(0, nodes - 1);
	std::bernoulli_distribution coin;
	nre::GraphDb g;
	while (g.triples().size() < edges)
		g.add_edge("n" + std::to_string(node(rng)), coin(rng) ? "a" : "b", "n" + std::to_string(node(rng)));
	return g;
}

template <class F>
double median_ms(int repeats, F&& f) {
	std::vector<double> t;
	for (int i = 0; i < repeats; ++i) {
		auto start = std::chrono::steady_clock::now();
		f();
		t.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
	}
	std::sort(t.begin(), t.end());
	return t[t.size() / 2];
}

} // namespace

int main(int argc, char** argv) {
	std::size_t edges = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2000;
	int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

	nre::Nre q = nre::parse("(a* . [b^-])*");
	auto g = random_graph(edges, 7);
	std::size_t pairs = 0;
	double par = median_ms(repeats, [&] { pairs = nre::eval(q, g).size(); });
	double ser = median_ms(repeats, [&] { nre::eval_serial(q, g); });
	std::cout << "eval  edges=" << edges << " pairs=" << pairs << "  parallel " << par << " ms  serial " << ser
	          << " ms\n";

	nre::Nre l = nre::parse("[a . [b]]"), r = nre::parse("[a]");
	nre::oracle::EnumSpec spec;
	spec.max_size = 4;
	spec.k = 2;
	double opar = median_ms(repeats, [&] {
		nre::oracle::oracle_contains_parallel(l, r, spec, nre::oracle::Mode::KBranch);
	});
	double oser = median_ms(repeats, [&] { nre::oracle::oracle_contains(l, r, spec, nre::oracle::Mode::KBranch); });
	std::cout << "oracle k=2 edges<=4  parallel " << opar << " ms  serial " << oser << " ms\n";
}
