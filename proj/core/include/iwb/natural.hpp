#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace iwb {

/// Unbounded natural number. Used for enumeration ranks and for Q-lang values.
using Natural = boost::multiprecision::cpp_int;

std::string to_string(const Natural& n);

/// Parses a nonempty decimal digit string. Throws DomainError otherwise.
Natural parse_natural(std::string_view digits);

/// True when `n` fits in `std::uint64_t`.
bool fits_u64(const Natural& n);

}  // namespace iwb
