#include "iwb/enumerator/length_lex.hpp"

#include <algorithm>

#include "iwb/error.hpp"

namespace iwb::enumerator {

namespace {

Natural power(std::size_t base, std::size_t exponent) {
  return boost::multiprecision::pow(Natural(base), static_cast<unsigned>(exponent));
}

void require_base(std::size_t base) {
  if (base == 0) throw DomainError("shortlex base must be positive");
}

}  // namespace

Natural shortlex_offset(std::size_t base, std::size_t length) {
  require_base(base);
  if (base == 1) return Natural(length);
  return (power(base, length) - 1) / (base - 1);
}

std::vector<std::size_t> unrank_digits(std::size_t base, const Natural& rank) {
  require_base(base);
  if (rank < 0) throw DomainError("rank must be non-negative");
  if (base == 1) {
    return std::vector<std::size_t>(static_cast<std::size_t>(rank), 0);
  }

  // Largest length whose offset does not exceed rank; offsets grow geometrically
  // so this loop runs O(log rank) times.
  std::size_t length = 0;
  Natural block = 1;  // base^length
  Natural remaining = rank;
  while (remaining >= block) {
    remaining -= block;
    block *= base;
    ++length;
  }

  std::vector<std::size_t> digits(length, 0);
  for (std::size_t i = length; i-- > 0;) {
    digits[i] = static_cast<std::size_t>(remaining % base);
    remaining /= base;
  }
  return digits;
}

Natural rank_digits(std::size_t base, std::span<const std::size_t> digits) {
  require_base(base);
  Natural value = 0;
  for (std::size_t d : digits) {
    if (d >= base) throw DomainError("digit out of range for base");
    value = value * base + d;
  }
  return shortlex_offset(base, digits.size()) + value;
}

std::string unrank(const Alphabet& alphabet, const LengthLexIndex& index) {
  const auto digits = unrank_digits(alphabet.size(), index.rank);
  return alphabet.compose(digits);
}

LengthLexIndex rank(const Alphabet& alphabet, std::string_view text) {
  const auto digits = alphabet.decompose(text);
  return LengthLexIndex{rank_digits(alphabet.size(), digits)};
}

std::vector<std::string> stream(const Alphabet& alphabet, const LengthLexIndex& from,
                                std::size_t count) {
  std::vector<std::string> out;
  if (count == 0) return out;
  out.reserve(count);
  ShortlexCursor cursor(alphabet.size(), from.rank);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(alphabet.compose(cursor.digits()));
    cursor.advance();
  }
  return out;
}

ShortlexCursor::ShortlexCursor(std::size_t base, const Natural& start)
    : base_(base), digits_(unrank_digits(base, start)) {}

void ShortlexCursor::advance() {
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < base_) return;
    digits_[i] = 0;
  }
  // Every position wrapped: first word of the next length.
  digits_.assign(digits_.size() + 1, 0);
}

}  // namespace iwb::enumerator
