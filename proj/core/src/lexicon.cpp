#include "iwb/search/lexicon.hpp"

#include <limits>

#include "iwb/enumerator/length_lex.hpp"
#include "iwb/error.hpp"

namespace iwb::search {

const std::vector<std::string>& lexicon() {
  static const std::vector<std::string> tokens = [] {
    std::vector<std::string> t = {"\n", " ", ",", ". "};
    for (char c = '0'; c <= '9'; ++c) t.emplace_back(1, c);
    for (char c = 'a'; c <= 'z'; ++c) t.emplace_back(1, c);
    for (const char* phrase :
         {"vars:", "fbar(", ") is ", "int(", "(", ")", "+", " > ", " [premise]",
          " [axiom A1 {t := ", " [axiom A2 {t1 := ", ", t2 := ", " [axiom A3 {c := ",
          " [axiom FBAR(", " [rule R1 ", "}", "]"}) {
      t.emplace_back(phrase);
    }
    return t;
  }();
  return tokens;
}

std::string render(std::span<const std::size_t> tokens) {
  const auto& lex = lexicon();
  std::string out;
  for (std::size_t t : tokens) out += lex.at(t);
  return out;
}

std::optional<std::vector<std::size_t>> first_tokenization(std::string_view text) {
  const auto& lex = lexicon();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  const std::size_t n = text.size();
  // count[i], choice[i]: optimum for the suffix starting at i. Equal counts are
  // broken by the first token alone since the rest is already optimal.
  std::vector<std::size_t> count(n + 1, none), choice(n + 1, none);
  count[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t t = 0; t < lex.size(); ++t) {
      const auto& tok = lex[t];
      if (text.substr(i, tok.size()) != tok || count[i + tok.size()] == none) continue;
      const std::size_t c = count[i + tok.size()] + 1;
      if (c < count[i]) {
        count[i] = c;
        choice[i] = t;
      }
    }
  }
  if (count[0] == none) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; i += lex[choice[i]].size()) out.push_back(choice[i]);
  return out;
}

Natural literal_rank(std::string_view text) {
  auto tokens = first_tokenization(text);
  if (!tokens) throw DomainError("text is not expressible in the lexicon");
  return enumerator::rank_digits(lexicon().size(), *tokens);
}

}  // namespace iwb::search
