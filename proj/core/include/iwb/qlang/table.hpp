#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "iwb/natural.hpp"
#include "iwb/qlang/program.hpp"

namespace iwb::qlang {

struct TableLimits {
  std::size_t max_cells = 1'000'000;
};

/// The i-th (1-based) valid program in length-then-lex order.
Program nth_program(const Natural& i);

/// Finite corner of the table T(i, x) = f_i(x), 1-based on both axes.
class BitTable {
 public:
  BitTable(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int cell(std::size_t i, std::size_t x) const;
  void set(std::size_t i, std::size_t x, int bit);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> bits_;
};

BitTable table(std::size_t rows, std::size_t cols, const TableLimits& limits = {});

/// [T(1,1), ..., T(n,n)].
std::vector<int> diagonal(std::size_t n, const TableLimits& limits = {});

/// Element-wise 1 - b. Throws DomainError on a non-bit element.
std::vector<int> diagonal_flip(const std::vector<int>& bits);

/// 1 - f_x(x): the diagonal function, computed over this enumeration.
int fbar_truth(const Natural& x);

}  // namespace iwb::qlang
