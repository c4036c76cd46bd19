#include "iwb/natural.hpp"

#include <limits>

#include "iwb/error.hpp"

namespace iwb {

std::string to_string(const Natural& n) { return n.str(); }

Natural parse_natural(std::string_view digits) {
  if (digits.empty()) {
    throw DomainError("expected a natural number, got an empty string");
  }
  Natural value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw DomainError("expected a natural number, got '" + std::string(digits) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

bool fits_u64(const Natural& n) {
  return n >= 0 && n <= Natural(std::numeric_limits<std::uint64_t>::max());
}

std::string ParseError::describe() const {
  std::string out = "parse error at position " + std::to_string(position);
  if (!message.empty()) {
    out += ": " + message;
  }
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i != 0) out += ", ";
      out += "'" + expected[i] + "'";
    }
    out += ")";
  }
  return out;
}

}  // namespace iwb
