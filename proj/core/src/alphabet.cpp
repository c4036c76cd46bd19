#include "iwb/enumerator/alphabet.hpp"

#include <fstream>
#include <sstream>


namespace iwb::enumerator {

SymbolNotInAlphabet::SymbolNotInAlphabet(std::size_t position, std::string symbol)
    : DomainError("symbol '" + symbol + "' at position " + std::to_string(position) +
                  " is not in the alphabet"),
      position_(position),
      symbol_(std::move(symbol)) {}

namespace {

std::size_t sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 0;
}

}  // namespace

std::vector<std::string> split_codepoints(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t len = sequence_length(static_cast<unsigned char>(text[i]));
    if (len == 0 || i + len > text.size()) {
      throw DomainError("malformed UTF-8 at byte " + std::to_string(i));
    }
    for (std::size_t j = 1; j < len; ++j) {
      if ((static_cast<unsigned char>(text[i + j]) >> 6) != 0x2) {
        throw DomainError("malformed UTF-8 at byte " + std::to_string(i + j));
      }
    }
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw DomainError("alphabet must not be empty");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (split_codepoints(symbols_[i]).size() != 1) {
      throw DomainError("alphabet symbol '" + symbols_[i] + "' is not a single codepoint");
    }
    if (!index_.emplace(symbols_[i], i).second) {
      throw DomainError("duplicate alphabet symbol '" + symbols_[i] + "'");
    }
  }
}

Alphabet Alphabet::from_chars(std::string_view chars) {
  std::vector<std::string> symbols;
  symbols.reserve(chars.size());
  for (char c : chars) symbols.emplace_back(1, c);
  return Alphabet(std::move(symbols));
}

Alphabet Alphabet::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open alphabet file '" + path.string() + "'");
  }
  std::vector<std::string> symbols;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    symbols.push_back(line);
  }
  return Alphabet(std::move(symbols));
}

std::optional<Alphabet> Alphabet::named(std::string_view name) {
  if (name == "binary") return from_chars("01");
  if (name == "abc") return from_chars("abc");
  return std::nullopt;
}

Alphabet Alphabet::load(std::string_view spec) {
  if (auto builtin = named(spec)) return *builtin;
  return from_file(std::filesystem::path(std::string(spec)));
}

std::optional<std::size_t> Alphabet::index_of(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Alphabet::decompose(std::string_view text) const {
  const auto codepoints = split_codepoints(text);
  std::vector<std::size_t> out;
  out.reserve(codepoints.size());
  for (std::size_t i = 0; i < codepoints.size(); ++i) {
    auto index = index_of(codepoints[i]);
    if (!index) throw SymbolNotInAlphabet(i, codepoints[i]);
    out.push_back(*index);
  }
  return out;
}

std::string Alphabet::compose(std::span<const std::size_t> indices) const {
  std::string out;
  for (std::size_t i : indices) out += symbols_.at(i);
  return out;
}

}  // namespace iwb::enumerator
