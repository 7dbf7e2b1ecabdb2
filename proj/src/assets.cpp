#include "faultlens/assets.hpp"

#include <string>

#include "faultlens/error.hpp"

namespace faultlens::assets {

std::optional<std::string_view> find(std::string_view path) {
    for (const auto& entry : detail::entries()) {
        if (entry.path == path) {
            return entry.content;
        }
    }
    return std::nullopt;
}

std::string_view get(std::string_view path) {
    if (auto content = find(path)) {
        return *content;
    }
    throw NotFoundError("unknown asset '" + std::string(path) + "'");
}

std::vector<std::string_view> list(std::string_view prefix) {
    std::vector<std::string_view> paths;
    for (const auto& entry : detail::entries()) {
        if (entry.path.substr(0, prefix.size()) == prefix) {
            paths.push_back(entry.path);
        }
    }
    return paths;
}

}  // namespace faultlens::assets
