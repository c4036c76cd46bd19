#pragma once

#include <optional>

#include "iwb/pi/statement.hpp"
#include "text_cursor.hpp"

namespace iwb::pi::detail {

std::optional<Natural> parse_numeral_at(iwb::detail::TextCursor& cursor);
std::optional<std::string> parse_identifier_at(iwb::detail::TextCursor& cursor);
std::optional<Term> parse_term_at(iwb::detail::TextCursor& cursor);
std::optional<Statement> parse_statement_at(iwb::detail::TextCursor& cursor);

}  // namespace iwb::pi::detail
