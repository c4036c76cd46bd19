#pragma once

// Reference implementations used as test oracles. They share no code with
// the library beyond the parser used as a validity filter, which is what the
// brute-force checks are defined against.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iwb/qlang/program.hpp"

namespace oracle {

/// Every string of length <= max_len over `symbols`, sorted by length and
/// then by symbol position. Built by repeated extension, then sorted.
inline std::vector<std::string> shortlex_by_sorting(const std::vector<std::string>& symbols,
                                                    std::size_t max_len) {
  std::vector<std::vector<std::size_t>> words = {{}};
  std::vector<std::vector<std::size_t>> layer = {{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : layer) {
      for (std::size_t s = 0; s < symbols.size(); ++s) {
        auto longer = w;
        longer.push_back(s);
        next.push_back(std::move(longer));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    std::string text;
    for (std::size_t s : w) text += symbols[s];
    out.push_back(std::move(text));
  }
  return out;
}

/// All strings of exactly `len` characters over `symbols` (ASCII) accepted by
/// the Q-lang parser, in symbol-position order.
inline std::vector<std::string> valid_programs_of_length(std::string_view symbols, std::size_t len) {
  std::vector<std::string> out;
  if (len == 0) return out;
  std::vector<std::size_t> digit(len, 0);
  std::string text(len, symbols[0]);
  while (true) {
    if (iwb::qlang::is_valid(text)) out.push_back(text);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++digit[i] < symbols.size()) {
        text[i] = symbols[digit[i]];
        break;
      }
      digit[i] = 0;
      text[i] = symbols[0];
      if (i == 0) {
        std::sort(out.begin(), out.end(), [&](const std::string& a, const std::string& b) {
          for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] != b[k]) return symbols.find(a[k]) < symbols.find(b[k]);
          }
          return false;
        });
        return out;
      }
    }
  }
}

/// Valid programs of every length up to max_len, in list order (1-based
/// program i is element i-1).
inline std::vector<std::string> program_list(std::size_t max_len) {
  const std::string_view symbols = "x0123456789()+%=>!&|";
  std::vector<std::string> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto layer = valid_programs_of_length(symbols, len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Direct evaluator over program text, independent of the library's AST.
/// Values stay small for the short programs it is used on.
class Evaluator {
 public:
  Evaluator(std::string_view text, std::uint64_t x) : s_(text), x_(x) {}

  int run() {
    const std::uint64_t v = boolean();
    if (p_ != s_.size()) throw std::logic_error("trailing input in " + std::string(s_));
    return v != 0 ? 1 : 0;
  }

 private:
  std::uint64_t boolean() {
    if (s_[p_] == '!') {
      ++p_;
      return boolean() == 0 ? 1 : 0;
    }
    // '(' then either a comparison or a connective; try comparison first.
    const std::size_t start = p_;
    if (looks_arithmetic(start + 1)) {
      ++p_;
      const std::uint64_t a = arith();
      const char op = s_[p_++];
      const std::uint64_t b = arith();
      ++p_;  // ')'
      return op == '=' ? (a == b) : (a > b);
    }
    ++p_;
    const std::uint64_t a = boolean();
    const char op = s_[p_++];
    const std::uint64_t b = boolean();
    ++p_;
    return op == '&' ? (a && b) : (a || b);
  }

  // Boolean operands start with '!' or with a '(' whose contents eventually
  // hit '=', '>' or a connective at depth 0; arithmetic ones with x, a digit,
  // or '(' leading to '+' / '%' at depth 0 before any comparison.
  bool looks_arithmetic(std::size_t q) const {
    if (s_[q] == '!') return false;
    if (s_[q] == 'x' || (s_[q] >= '0' && s_[q] <= '9')) return true;
    // s_[q] == '(' : find the operator at depth 1 relative to q.
    int depth = 0;
    for (std::size_t k = q; k < s_.size(); ++k) {
      const char c = s_[k];
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (depth == 1 && (c == '+' || c == '%')) return true;
      else if (depth == 1 && (c == '=' || c == '>' || c == '&' || c == '|')) return false;
    }
    return false;
  }

  std::uint64_t arith() {
    const char c = s_[p_];
    if (c == 'x') {
      ++p_;
      return x_;
    }
    if (c >= '0' && c <= '9') {
      std::uint64_t v = 0;
      while (p_ < s_.size() && s_[p_] >= '0' && s_[p_] <= '9') v = v * 10 + (s_[p_++] - '0');
      return v;
    }
    ++p_;  // '('
    const std::uint64_t a = arith();
    const char op = s_[p_++];
    const std::uint64_t b = arith();
    ++p_;
    if (op == '+') return a + b;
    return b == 0 ? 0 : a % b;
  }

  std::string_view s_;
  std::uint64_t x_;
  std::size_t p_ = 0;
};

inline int eval(std::string_view program, std::uint64_t x) { return Evaluator(program, x).run(); }

}  // namespace oracle
