// nre -- command-line front end
//
//   nre eval -g graph.tsv -q "a . b" [--from u --to v]
//   nre contain --lhs "a" --rhs "a | b" [--mode semipath|general]
//   nre translate -q "a" [--mode ...] [-k 2] [--format dot|json] [--se]
//   nre encode tree.json
//
// Exit codes: 0 ok / contained, 1 not contained, 2 bad input, 3 unknown.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>


#include "nre/containment.hpp"
#include "nre/evaluator.hpp"
#include "nre/kbranch.hpp"
#include "nre/oracle.hpp"
#include "nre/random.hpp"
#include "nre/translate.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitInput = 2;

struct Input : std::runtime_error {
	using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
	if (path == "-") {
		std::stringstream ss;
		ss << std::cin.rdbuf();
		return ss.str();
	}
	std::ifstream in(path);
	if (!in)
		throw Input("cannot read " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

json graph_json(const nre::GraphDb& g) {
	json edges = json::array();
	for (const auto& e : g.edges())
		edges.push_back({e.source, e.label, e.target});
	return {{"nodes", g.nodes()}, {"edges", edges}};
}

int exit_code(nre::Verdict::Outcome o) {
	switch (o) {
	case nre::Verdict::Outcome::Contained: return 0;
	case nre::Verdict::Outcome::NotContained: return 1;
	case nre::Verdict::Outcome::Unknown: return 3;
	}
	return 3;
}

// ---- eval

struct EvalArgs {
	std::string graph, query, from, to, format = "text";
};

int run_eval(const EvalArgs& a) {
	nre::GraphDb g = nre::load_graph_file(a.graph);
	nre::Nre e = nre::parse(a.query);
	if (!a.from.empty() || !a.to.empty()) {
		if (a.from.empty() || a.to.empty())
			throw Input("--from and --to go together");
		bool r = nre::eval_check(e, g, a.from, a.to);
		if (a.format == "json")
			std::cout << json{{"result", r}}.dump() << "\n";
		else
			std::cout << (r ? "true" : "false") << "\n";
		return 0;
	}
	auto rel = nre::eval(e, g);
	if (a.format == "json") {
		json pairs = json::array();
		for (const auto& [u, v] : rel)
			pairs.push_back({u, v});
		std::cout << json{{"pairs", pairs}}.dump() << "\n";
	} else {
		for (const auto& [u, v] : rel)
			std::cout << u << "\t" << v << "\n";
	}
	return 0;
}

// ---- contain

struct ContainArgs {
	std::string lhs, rhs, mode = "semipath", strategy = "exact", format = "text", batch;
	std::size_t max_len = 6;
	std::size_t state_budget = 0;
	int jobs = 1;
	int random = 0;
	unsigned seed = 1;
};

nre::ContainmentOptions options(const ContainArgs& a) {
	nre::ContainmentOptions o;
	o.strategy = a.strategy == "bounded" ? nre::ContainmentOptions::Strategy::Bounded
	             : a.strategy == "both"  ? nre::ContainmentOptions::Strategy::Both
	                                     : nre::ContainmentOptions::Strategy::Exact;
	o.max_len = a.max_len;
	if (a.state_budget)
		o.state_budget = a.state_budget;
	return o;
}

nre::Verdict decide(const ContainArgs& a, const nre::Nre& l, const nre::Nre& r) {
	return a.mode == "general" ? nre::gen_contains(l, r, options(a)) : nre::sp_contains(l, r, options(a));
}

json verdict_json(const std::string& lhs, const std::string& rhs, const nre::Verdict& v) {
	json j{{"lhs", lhs}, {"rhs", rhs}, {"verdict", nre::to_string(v.outcome)}};
	if (!v.note.empty())
		j["note"] = v.note;
	if (v.counterexample) {
		j["graph"] = graph_json(v.counterexample->graph);
		j["pair"] = {v.counterexample->pair.first, v.counterexample->pair.second};
		j["witness"] = v.counterexample->witness;
	}
	return j;
}

void print_verdict(const nre::Verdict& v) {
	std::cout << nre::to_string(v.outcome) << "\n";
	if (v.counterexample) {
		std::cout << nre::to_tsv(v.counterexample->graph);
		std::cout << "(" << v.counterexample->pair.first << "," << v.counterexample->pair.second << ")\n";
	} else if (!v.note.empty() && !v.contained()) {
		std::cerr << v.note << "\n";
	}
}

int run_batch(const ContainArgs& a) {
	std::vector<std::pair<std::string, std::string>> items;
	if (!a.batch.empty()) {
		std::istringstream in(read_text(a.batch));
		std::string line;
		for (int n = 1; std::getline(in, line); ++n) {
			if (line.empty() || line[0] == '#')
				continue;
			auto tab = line.find('\t');
			if (tab == std::string::npos)
				throw Input("batch line " + std::to_string(n) + ": expected lhs<TAB>rhs");
			items.emplace_back(line.substr(0, tab), line.substr(tab + 1));
		}
	}
	nre::RandomNre gen(a.seed);
	for (int i = 0; i < a.random; ++i) {
		nre::Nre l = gen.make(6, 2), r = gen.make(6, 2);
		items.emplace_back(nre::render(l), nre::render(r));
	}

	std::vector<nre::Nre> lhs, rhs;
	for (const auto& [l, r] : items) {
		lhs.push_back(nre::parse(l));
		rhs.push_back(nre::parse(r));
	}
	std::vector<nre::Verdict> out(items.size());
	const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic) num_threads(a.jobs > 0 ? a.jobs : 1)
	for (long i = 0; i < n; ++i)
		out[i] = decide(a, lhs[i], rhs[i]);

	int worst = 0;
	for (std::size_t i = 0; i < items.size(); ++i) {
		if (a.format == "json")
			std::cout << verdict_json(items[i].first, items[i].second, out[i]).dump() << "\n";
		else
			std::cout << items[i].first << "\t" << items[i].second << "\t" << nre::to_string(out[i].outcome) << "\n";
		int c = exit_code(out[i].outcome);
		if (c == 3 || (c == 1 && worst == 0))
			worst = c;
	}
	return worst;
}

int run_contain(const ContainArgs& a) {
	if (!a.batch.empty() || a.random > 0)
		return run_batch(a);
	if (a.lhs.empty() || a.rhs.empty())
		throw Input("contain needs --lhs and --rhs (or --batch / --random)");
	nre::Nre l = nre::parse(a.lhs), r = nre::parse(a.rhs);
	nre::Verdict v = decide(a, l, r);
	if (a.format == "json")
		std::cout << verdict_json(a.lhs, a.rhs, v).dump() << "\n";
	else
		print_verdict(v);
	return exit_code(v.outcome);
}

// ---- translate / encode

struct TranslateArgs {
	std::string query, mode = "semipath", format = "dot";
	int k = 0;
	bool se = false;
};

int run_translate(const TranslateArgs& a) {
	nre::Nre e = nre::parse(a.query);
	nre::MarkedA2fa m = a.mode == "general" ? nre::compile_gen(e, a.k > 0 ? a.k : nre::nesting_depth(e))
	                                        : nre::compile_sp(e);
	nre::A2fa out = nre::eliminate_epsilon(a.se ? nre::mark_se(m) : nre::wrap(m));
	std::cout << (a.format == "json" ? nre::to_json(out) + "\n" : nre::to_dot(out));
	return 0;
}

int run_encode(const std::string& path) {
	auto t = nre::tree_from_json(read_text(path));
	std::cout << nre::trans(t).str() << "\n";
	return 0;
}

struct OracleArgs {
	std::string lhs, rhs, mode = "semipath";
	int max_size = 4, k = 1;
};

int run_oracle(const OracleArgs& a) {
	nre::oracle::EnumSpec spec;
	spec.labels = nre::shared_labels(nre::parse(a.lhs), nre::parse(a.rhs));
	spec.max_size = a.max_size;
	spec.k = a.k;
	auto v = nre::oracle::oracle_contains(nre::parse(a.lhs), nre::parse(a.rhs), spec,
	                                      a.mode == "general" ? nre::oracle::Mode::KBranch
	                                                          : nre::oracle::Mode::Semipath);
	print_verdict(v);
	if (v.contained())
		std::cout << "(" << v.note << ")\n";
	return exit_code(v.outcome);
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"nested regular expressions: evaluation and containment"};
	app.require_subcommand(1);

	EvalArgs ev;
	auto* eval = app.add_subcommand("eval", "evaluate a query over a graph (TSV: source, label, target)");
	eval->add_option("-g,--graph", ev.graph, "graph file")->required();
	eval->add_option("-q,--query", ev.query, "NRE")->required();
	eval->add_option("--from", ev.from, "source node");
	eval->add_option("--to", ev.to, "target node");
	eval->add_option("--format", ev.format)->check(CLI::IsMember({"text", "json"}));

	ContainArgs ca;
	auto* contain = app.add_subcommand("contain", "decide lhs <= rhs");
	contain->add_option("--lhs", ca.lhs);
	contain->add_option("--rhs", ca.rhs);
	contain->add_option("--mode", ca.mode)->check(CLI::IsMember({"semipath", "general"}));
	contain->add_option("--strategy", ca.strategy)->check(CLI::IsMember({"exact", "bounded", "both"}));
	contain->add_option("--max-len", ca.max_len, "bounded search length");
	contain->add_option("--state-budget", ca.state_budget, "automaton state cap (default: NRE_STATE_BUDGET or 400000)")
	    ->check(CLI::PositiveNumber);
	contain->add_option("--format", ca.format)->check(CLI::IsMember({"text", "json"}));
	contain->add_option("--batch", ca.batch, "file of lhs<TAB>rhs lines");
	contain->add_option("--random", ca.random, "append N random pairs")->check(CLI::NonNegativeNumber);
	contain->add_option("--seed", ca.seed, "seed for --random");
	contain->add_option("--jobs", ca.jobs, "parallel batch workers")->check(CLI::PositiveNumber);

	TranslateArgs ta;
	auto* translate = app.add_subcommand("translate", "print the compiled automaton (epsilon-free)");
	translate->add_option("-q,--query", ta.query)->required();
	translate->add_option("--mode", ta.mode)->check(CLI::IsMember({"semipath", "general"}));
	translate->add_option("-k", ta.k, "branching bound (general mode)")->check(CLI::Range(1, 9));
	translate->add_option("--format", ta.format)->check(CLI::IsMember({"dot", "json"}));
	translate->add_flag("--se", ta.se, "S/E-marked automaton instead of the plain wrapper");

	std::string tree_path = "-";
	auto* encode = app.add_subcommand("encode", "encode a k-branch semipath (JSON) as a Gamma word");
	encode->add_option("tree", tree_path, "tree JSON file, - for stdin");

	OracleArgs oa;
	auto* oracle = app.add_subcommand("oracle-contain", "brute-force containment")->group("");
	oracle->add_option("--lhs", oa.lhs)->required();
	oracle->add_option("--rhs", oa.rhs)->required();
	oracle->add_option("--mode", oa.mode)->check(CLI::IsMember({"semipath", "general"}));
	oracle->add_option("--max-size", oa.max_size)->check(CLI::Range(0, 8));
	oracle->add_option("-k", oa.k)->check(CLI::Range(1, 4));

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : kExitInput;
	}

	try {
		if (*eval)
			return run_eval(ev);
		if (*contain)
			return run_contain(ca);
		if (*translate)
			return run_translate(ta);
		if (*encode)
			return run_encode(tree_path);
		if (*oracle)
			return run_oracle(oa);
	} catch (const nre::ContainmentBug& e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return 4;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitInput;
	}
	return kExitInput;
}
