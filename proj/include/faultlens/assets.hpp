#pragma once

/// @file assets.hpp
/// @brief Read-only access to the files under assets/, compiled into the library.

#include <optional>
#include <string_view>
#include <vector>

namespace faultlens::assets {

/// Content of the asset at `path` (relative to assets/, '/'-separated), if present.
[[nodiscard]] std::optional<std::string_view> find(std::string_view path);

/// Like find(), but throws NotFoundError for unknown paths.
[[nodiscard]] std::string_view get(std::string_view path);

/// All asset paths starting with `prefix`, in lexicographic order.
[[nodiscard]] std::vector<std::string_view> list(std::string_view prefix = {});

namespace detail {
struct Entry {
    std::string_view path;
    std::string_view content;
};
const std::vector<Entry>& entries();
}  // namespace detail

}  // namespace faultlens::assets
