#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "iwb/error.hpp"

namespace iwb::detail {

/// Scanner with furthest-failure error tracking, shared by the statement and
/// derivation parsers.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  std::size_t pos() const noexcept { return pos_; }
  void reset(std::size_t pos) noexcept { pos_ = pos; }
  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }
  std::string_view rest() const { return text_.substr(std::min(pos_, text_.size())); }
  std::string_view text() const noexcept { return text_; }

  void skip_blanks() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool consume(std::string_view literal) {
    if (text_.substr(pos_, literal.size()) == literal) {
      pos_ += literal.size();
      return true;
    }
    return false;
  }

  /// consume() or record the literal as expected here.
  bool expect(std::string_view literal) {
    if (consume(literal)) return true;
    fail(std::string(literal));
    return false;
  }

  void fail(std::string expected, std::string message = {}) {
    if (pos_ < furthest_) return;
    if (pos_ > furthest_ || !has_error_) {
      furthest_ = pos_;
      expected_.clear();
      message_.clear();
      has_error_ = true;
    }
    if (!expected.empty()) expected_.push_back(std::move(expected));
    if (!message.empty()) message_ = std::move(message);
  }

  ParseError error() const {
    ParseError e;
    e.position = base_ + furthest_;
    e.expected = expected_;
    std::sort(e.expected.begin(), e.expected.end());
    e.expected.erase(std::unique(e.expected.begin(), e.expected.end()), e.expected.end());
    if (!message_.empty()) {
      e.message = message_;
    } else if (furthest_ < text_.size()) {
      e.message = "unexpected '" + std::string(1, text_[furthest_]) + "'";
    } else {
      e.message = "unexpected end of input";
    }
    return e;
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
  std::size_t furthest_ = 0;
  bool has_error_ = false;
  std::vector<std::string> expected_;
  std::string message_;
};

inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace iwb::detail
