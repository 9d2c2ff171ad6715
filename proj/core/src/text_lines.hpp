#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace longhop::detail {

struct NumberedLine {
    std::size_t number;  // 1-based
    std::string text;    // trimmed, never empty
};

/// Splits text into trimmed, non-empty, non-comment lines.
std::vector<NumberedLine> content_lines(std::string_view text);

}  // namespace longhop::detail
