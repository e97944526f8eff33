#include "nre/alphabet.hpp"

#include <stdexcept>

namespace nre {

void Alphabet::add(Token t) {
	index_.emplace(t.name, tokens_.size());
	tokens_.push_back(std::move(t));
}

std::shared_ptr<const Alphabet> Alphabet::semipath(const std::vector<std::string>& labels, bool markers) {
	std::shared_ptr<Alphabet> a(new Alphabet());
	a->labels_ = labels;
	a->add(Token{Token::Kind::Begin, {}, 0, 0, "%"});
	a->add(Token{Token::Kind::End, {}, 0, 0, "&"});
	for (const auto& l : labels)
		for (bool inv : {false, true}) {
			Symbol s{l, inv};
			a->add(Token{Token::Kind::Letter, s, 0, 0, s.str()});
		}
	if (markers) {
		a->add(Token{Token::Kind::StartMark, {}, 0, 0, std::string(kStartMarkerLabel)});
		a->add(Token{Token::Kind::EndMark, {}, 0, 0, std::string(kEndMarkerLabel)});
	}
	return a;
}

std::shared_ptr<const Alphabet> Alphabet::gamma(int k, const std::vector<std::string>& labels, bool markers) {
	if (k < 1 || k > 9)
		throw std::invalid_argument("k must be in 1..9");
	std::shared_ptr<Alphabet> a(new Alphabet());
	a->labels_ = labels;
	a->k_ = k;
	a->add(Token{Token::Kind::Begin, {}, 0, 0, "%"});
	a->add(Token{Token::Kind::End, {}, 0, 0, "&"});
	for (int i = 1; i <= k; ++i)
		for (int j = 1; j <= k; ++j) {
			for (const auto& l : labels)
				for (bool inv : {false, true}) {
					GammaToken g{i, Symbol{l, inv}, j};
					a->add(Token{Token::Kind::Letter, *g.label, i, j, g.str()});
				}
			GammaToken leaf{i, std::nullopt, j};
			a->add(Token{Token::Kind::Leaf, {}, i, j, leaf.str()});
		}
	if (markers)
		for (int i = 1; i <= k; ++i) {
			Symbol s{std::string(kStartMarkerLabel), false}, e{std::string(kEndMarkerLabel), false};
			a->add(Token{Token::Kind::StartMark, s, i, i, GammaToken{i, s, i}.str()});
			a->add(Token{Token::Kind::EndMark, e, i, i, GammaToken{i, e, i}.str()});
		}
	return a;
}

std::optional<TokenId> Alphabet::find(const std::string& name) const {
	auto it = index_.find(name);
	if (it == index_.end())
		return std::nullopt;
	return it->second;
}

TokenId Alphabet::at(const std::string& name) const {
	auto t = find(name);
	if (!t)
		throw std::out_of_range("token '" + name + "' not in alphabet");
	return *t;
}

std::vector<TokenId> Alphabet::tokens_of(const std::vector<Symbol>& letters) const {
	std::vector<TokenId> out;
	for (const auto& s : letters)
		out.push_back(at(s.str()));
	return out;
}

std::vector<TokenId> Alphabet::tokens_of(const EncodedWord& w) const {
	std::vector<TokenId> out;
	for (const auto& t : w.tokens)
		out.push_back(at(t.str()));
	return out;
}

std::string Alphabet::render(const std::vector<TokenId>& word) const {
	std::string out;
	for (TokenId t : word) {
		if (!out.empty() && !is_gamma())
			out += ' ';
		out += tokens_[t].name;
	}
	return out;
}

std::vector<TokenId> marked(const std::vector<TokenId>& w) {
	std::vector<TokenId> out;
	out.reserve(w.size() + 2);
	out.push_back(kBegin);
	out.insert(out.end(), w.begin(), w.end());
	out.push_back(kEnd);
	return out;
}

} // namespace nre
