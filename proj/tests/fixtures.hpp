// fixtures.hpp -- graphs shared by the tests
#ifndef NRE_TESTS_FIXTURES_HPP
#define NRE_TESTS_FIXTURES_HPP

#include <random>
#include <string>

#include "nre/graph.hpp"

namespace fixtures {

// Bibliography graph: a conference paper by Hopkroft and Vardi, a journal
// paper by Vardi and Wolper, and conference papers by Ullman and Fagin.
inline nre::GraphDb bibliography() {
	return nre::load_graph(":paper_hv\tcreator\t:John_E._Hopkroft\n"
	                       ":paper_hv\tcreator\t:Moshe_Y._Vardi\n"
	                       ":paper_hv\tpartOf\t:focs_1980\n"
	                       ":focs_1980\tseries\tconf:focs\n"
	                       ":paper_vw\tcreator\t:Moshe_Y._Vardi\n"
	                       ":paper_vw\tcreator\t:Pierre_Wolper\n"
	                       ":paper_vw\tjournal\t:jcss\n"
	                       ":paper_u\tcreator\t:Jeffrey_D._Ullman\n"
	                       ":paper_u\tpartOf\t:focs_1979\n"
	                       ":focs_1979\tseries\tconf:focs\n"
	                       ":paper_f\tcreator\t:Ronald_Fagin\n"
	                       ":paper_f\tpartOf\t:pods_1982\n"
	                       ":pods_1982\tseries\tconf:pods\n");
}

inline nre::GraphDb random_graph(std::mt19937& rng, int max_nodes, int max_edges) {
	std::uniform_int_distribution<int> nn(1, max_nodes);
	int n = nn(rng);
	std::uniform_int_distribution<int> ne(0, max_edges), node(1, n);
	std::bernoulli_distribution coin;
	nre::GraphDb g;
	for (int i = 1; i <= n; ++i)
		g.add_node(std::to_string(i));
	for (int i = ne(rng); i > 0; --i)
		g.add_edge(std::to_string(node(rng)), coin(rng) ? "a" : "b", std::to_string(node(rng)));
	return g;
}

// Random graph with exactly `edges` edges over labels a, b on edges / edges_per_node
// nodes. At the default density the a-edges alone form a giant component.
inline nre::GraphDb large_graph(std::size_t edges, unsigned seed, std::size_t edges_per_node = 4) {
	std::mt19937 rng(seed);
	std::size_t nodes = edges / edges_per_node;
	std::uniform_int_distribution<std::size_t> node(0, nodes - 1);
	std::bernoulli_distribution coin;
	nre::GraphDb g;
	while (g.triples().size() < edges)
		g.add_edge("n" + std::to_string(node(rng)), coin(rng) ? "a" : "b", "n" + std::to_string(node(rng)));
	return g;
}

} // namespace fixtures

#endif
