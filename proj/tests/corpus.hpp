// corpus.hpp -- expression corpus and random generators shared by the tests
#ifndef NRE_TESTS_CORPUS_HPP
#define NRE_TESTS_CORPUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "nre/nre.hpp"
#include "nre/random.hpp"

namespace corpus {

// Hand-picked expressions over {a, b}, nesting depth <= 2.
inline const std::vector<std::string>& expressions() {
	static const std::vector<std::string> list{
	    "eps",
	    "a",
	    "a^-",
	    "a . b",
	    "a | b",
	    "a*",
	    "[a]",
	    "[a] . b",
	    "a . a^-",
	    "(a . b)*",
	    "(a | b)*",
	    "[a . b]",
	    "[a^-] . b*",
	    "a . [b] . a",
	    "[[a] . b]",
	    "(a . [b])*",
	    "[a | b^-]",
	    "b^- . [a . a]",
	};
	return list;
}

// Containment pairs used by the agreement checks; mixes both answers.
inline const std::vector<std::pair<std::string, std::string>>& pairs() {
	static const std::vector<std::pair<std::string, std::string>> list{
	    {"a", "a | b"},
	    {"a | b", "a"},
	    {"[a] . b", "b"},
	    {"b", "[a] . b"},
	    {"a . b", "a . (b | a)"},
	    {"a . (b | a)", "a . b"},
	    {"a*", "(a | b)*"},
	    {"(a | b)*", "a*"},
	    {"a . a^-", "eps"},
	    {"eps", "a . a^-"},
	    {"[a]", "eps"},
	    {"eps", "[a]"},
	    {"[a . b]", "[a]"},
	    {"[a]", "[a . b]"},
	    {"(a . b)*", "(a | b)*"},
	    {"a . a*", "a*"},
	    {"a*", "a . a*"},
	    {"[a] . [b]", "[b] . [a]"},
	    {"[a] . b", "[a] . b . [b^-]"},
	    {"a . [b]", "a . [b] . [b]"},
	    {"[a . [b]]", "[a]"},
	    {"[a]", "[a . [b]]"},
	    {"a^- . a", "eps"},
	    {"[a^-]", "a^- . a"},
	    {"a^- . a", "[a^-]"},
	    {"(a . [b])*", "a*"},
	    {"a*", "(a . [b])*"},
	    {"[a | b]", "[a] | [b]"},
	    {"[a] | [b]", "[a | b]"},
	    {"b . [a] . b", "b . b"},
	    {"b . b", "b . [a] . b"},
	    {"[[a] . b]", "[b]"},
	    {"[b]", "[[a] . b]"},
	    {"a . b^-", "a . b^- . [b^-]"},
	    {"a . b^- . [b^-]", "a . b^-"},
	    {"a^- . a^-", "(a^-)*"},
	    {"[b] . a*", "a*"},
	    {"a . [b^-]", "a . b^- . b"},
	    {"a . b^- . b", "a . [b^-]"},
	    {"(a | b) . (a^- | b^-)", "(a . a^-) | (b . b^-)"},
	};
	return list;
}

using RandomNre = nre::RandomNre;

// The expression with every b replaced by a, so that its semipath alphabet
// has two tokens (a, a^-).
inline nre::Nre single_label(const std::string& text) {
	std::string out = text;
	for (auto& c : out)
		if (c == 'b')
			c = 'a';
	return nre::parse(out);
}

} // namespace corpus

#endif
