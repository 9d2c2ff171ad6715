#include "text_lines.hpp"

namespace longhop::detail {

std::vector<NumberedLine> content_lines(std::string_view text) {
    std::vector<NumberedLine> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        if (line.front() == '#') continue;
        out.push_back({number, std::string(line)});
        if (end == text.size()) break;
    }
    return out;
}

}  // namespace longhop::detail
