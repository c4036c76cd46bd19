#include "iwb/qlang/table.hpp"

#include <string>

namespace iwb::qlang {

namespace {

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw DomainError(std::string(what) + " must be at least 1");
}

void require_budget(std::size_t cells, const TableLimits& limits) {
  if (cells > limits.max_cells) {
    throw ResourceLimitError(std::to_string(cells) + " table cells exceed the budget of " +
                             std::to_string(limits.max_cells));
  }
}

}  // namespace

Program nth_program(const Natural& i) {
  if (i < 1) throw DomainError("program index must be at least 1");
  return parse_or_throw(program_enumerator().unrank(i - 1));
}

BitTable::BitTable(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

int BitTable::cell(std::size_t i, std::size_t x) const {
  if (i < 1 || i > rows_ || x < 1 || x > cols_) throw DomainError("table cell out of range");
  return bits_[(i - 1) * cols_ + (x - 1)];
}

void BitTable::set(std::size_t i, std::size_t x, int bit) {
  if (i < 1 || i > rows_ || x < 1 || x > cols_) throw DomainError("table cell out of range");
  if (bit != 0 && bit != 1) throw DomainError("table cells hold bits");
  bits_[(i - 1) * cols_ + (x - 1)] = static_cast<std::uint8_t>(bit);
}

BitTable table(std::size_t rows, std::size_t cols, const TableLimits& limits) {
  require_positive(rows, "row count");
  require_positive(cols, "column count");
  if (cols != 0 && rows > limits.max_cells / cols) require_budget(limits.max_cells + 1, limits);
  require_budget(rows * cols, limits);

  BitTable out(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i) {
    const Program program = nth_program(i);
    for (std::size_t x = 1; x <= cols; ++x) out.set(i, x, eval(program, x));
  }
  return out;
}

std::vector<int> diagonal(std::size_t n, const TableLimits& limits) {
  require_positive(n, "diagonal length");
  require_budget(n, limits);
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(eval(nth_program(i), i));
  return out;
}

std::vector<int> diagonal_flip(const std::vector<int>& bits) {
  std::vector<int> out;
  out.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("diagonal_flip expects bits, got " + std::to_string(b));
    out.push_back(1 - b);
  }
  return out;
}

int fbar_truth(const Natural& x) {
  if (x < 1) throw DomainError("fbar is defined on positive integers");
  return 1 - eval(nth_program(x), x);
}

}  // namespace iwb::qlang
