#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iwb/enumerator/alphabet.hpp"
#include "iwb/natural.hpp"

namespace iwb::enumerator {

/// 0-based position in length-then-lexicographic (shortlex) order. Rank 0 is
/// the empty string.
struct LengthLexIndex {
  Natural rank = 0;

  friend bool operator==(const LengthLexIndex&, const LengthLexIndex&) = default;
  friend std::strong_ordering operator<=>(const LengthLexIndex& a, const LengthLexIndex& b) {
    const int c = a.rank.compare(b.rank);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
};

// Index-level primitives. A "word" here is a sequence of digits in [0, base).
// Both directions are closed form: offset(len) = sum_{l<len} base^l, plus the
// base-`base` value of the digits.

/// Number of words shorter than `length`.
Natural shortlex_offset(std::size_t base, std::size_t length);

std::vector<std::size_t> unrank_digits(std::size_t base, const Natural& rank);
Natural rank_digits(std::size_t base, std::span<const std::size_t> digits);

std::string unrank(const Alphabet& alphabet, const LengthLexIndex& index);

/// Throws SymbolNotInAlphabet naming the first foreign codepoint.
LengthLexIndex rank(const Alphabet& alphabet, std::string_view text);

/// [unrank(from), ..., unrank(from + count - 1)].
std::vector<std::string> stream(const Alphabet& alphabet, const LengthLexIndex& from,
                                std::size_t count);

/// Steps through words in shortlex order without recomputing ranks.
class ShortlexCursor {
 public:
  ShortlexCursor(std::size_t base, const Natural& start);

  const std::vector<std::size_t>& digits() const noexcept { return digits_; }
  void advance();

 private:
  std::size_t base_;
  std::vector<std::size_t> digits_;
};

}  // namespace iwb::enumerator
