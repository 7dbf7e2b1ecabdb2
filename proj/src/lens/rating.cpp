#include "faultlens/lens/rating.hpp"

#include <regex>
#include <string>

#include "faultlens/error.hpp"

namespace faultlens::lens {

int parse_rating(std::string_view text) {
    static const std::regex pattern(R"(Rating:\s*\[\[\s*(\d+)\s*\]\])");
    const std::string owned(text);
    std::string last;
    for (auto it = std::sregex_iterator(owned.begin(), owned.end(), pattern); it != std::sregex_iterator(); ++it) {
        last = (*it)[1].str();
    }
    if (last.empty()) {
        throw InvalidArgumentError("no rating found");
    }
    if (last.size() > 2 || std::stoi(last) < 1 || std::stoi(last) > 10) {
        throw InvalidArgumentError("rating out of range: " + last);
    }
    return std::stoi(last);
}

std::optional<int> try_parse_rating(std::string_view text) {
    try {
        return parse_rating(text);
    } catch (const InvalidArgumentError&) {
        return std::nullopt;
    }
}

}  // namespace faultlens::lens
