#pragma once

/// @file ledger.hpp
/// @brief Append-only JSON-lines record of every pipeline cell.

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace faultlens::lens {

/// Records carry a `cell` key; a later record for the same cell supersedes
/// an earlier one. Without a path the ledger lives in memory only.
class RunLedger {
  public:
    RunLedger() = default;
    /// Loads existing records from `path` and appends new ones to it.
    /// @throws ParseError for a malformed line
    explicit RunLedger(std::filesystem::path path);

    RunLedger(const RunLedger&) = delete;
    RunLedger& operator=(const RunLedger&) = delete;

    /// Latest record of `cell`, if any.
    [[nodiscard]] std::optional<nlohmann::json> find(std::string_view cell) const;
    /// Latest record per cell, in order of first appearance.
    [[nodiscard]] std::vector<nlohmann::json> current() const;
    [[nodiscard]] std::size_t size() const;

    /// @throws InvalidArgumentError if the record has no string `cell`
    void append(const nlohmann::json& record);

    /// Every appended line, newline-terminated.
    [[nodiscard]] std::string text() const;

  private:
    mutable std::mutex mutex_;
    std::optional<std::filesystem::path> path_;
    std::vector<nlohmann::json> records_;
    std::map<std::string, std::size_t, std::less<>> latest_;
};

}  // namespace faultlens::lens
