#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "iwb/error.hpp"

namespace iwb::enumerator {

/// A symbol of the input was not a member of the alphabet.
class SymbolNotInAlphabet : public DomainError {
 public:
  SymbolNotInAlphabet(std::size_t position, std::string symbol);

  /// Codepoint offset of the offending symbol within the input.
  std::size_t position() const noexcept { return position_; }
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::size_t position_;
  std::string symbol_;
};

/// Splits UTF-8 text into one string per codepoint. Throws DomainError on malformed input.
std::vector<std::string> split_codepoints(std::string_view text);

/// Finite, ordered set of single-codepoint symbols. The declared order is the
/// lexicographic order used by every enumeration over this alphabet.
class Alphabet {
 public:
  /// Throws DomainError if `symbols` is empty, contains duplicates, or has an
  /// entry that is not exactly one codepoint.
  explicit Alphabet(std::vector<std::string> symbols);

  /// One symbol per character of an ASCII string, in order.
  static Alphabet from_chars(std::string_view chars);

  /// One symbol per non-empty line, order significant.
  static Alphabet from_file(const std::filesystem::path& path);

  /// Built-in alphabets: "binary" (0 1) and "abc" (a b c).
  static std::optional<Alphabet> named(std::string_view name);

  /// `named(spec)` if it is a built-in name, otherwise `from_file(spec)`.
  static Alphabet load(std::string_view spec);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(std::size_t index) const { return symbols_.at(index); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  std::optional<std::size_t> index_of(std::string_view symbol) const;

  /// Symbol indices of `text`. Throws SymbolNotInAlphabet at the first foreign codepoint.
  std::vector<std::size_t> decompose(std::string_view text) const;

  std::string compose(std::span<const std::size_t> indices) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace iwb::enumerator
