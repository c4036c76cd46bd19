#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iwb/natural.hpp"

namespace iwb::search {

/// Π's finite vocabulary: single characters plus the fixed phrases of the
/// statement and justification syntax. Literal search enumerates token
/// sequences over this list in shortlex order.
const std::vector<std::string>& lexicon();

std::string render(std::span<const std::size_t> tokens);

/// The token sequence that literal enumeration reaches first among those
/// rendering to `text`: fewest tokens, then smallest token indices.
/// nullopt if `text` cannot be written with the lexicon.
std::optional<std::vector<std::size_t>> first_tokenization(std::string_view text);

/// Shortlex rank of first_tokenization(text). Throws DomainError when the
/// text is not expressible.
Natural literal_rank(std::string_view text);

}  // namespace iwb::search
