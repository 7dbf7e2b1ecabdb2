#pragma once

/// @file payloads.hpp
/// @brief JSON shapes shared by the HTTP API: circuit graphs, highlight sets and the layout sidecar.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "faultlens/circuit/circuit.hpp"

namespace faultlens::service {

/// `gate:N`, `source:N` or `sink:NAME`.
[[nodiscard]] std::string node_key(const circuit::Circuit& c, circuit::NodeId id);
[[nodiscard]] std::string sink_key(std::string_view sink);
[[nodiscard]] std::string endpoint_key(const circuit::Circuit& c, const circuit::Endpoint& endpoint);
/// `FROM->TO` with node keys.
[[nodiscard]] std::string edge_key(const circuit::Circuit& c, const circuit::Edge& edge);

struct Position {
    double x = 0.0;
    double y = 0.0;
};

/// Node positions per graph id, read from a `faultlens.layout/1` document:
///
///     {"schema": "faultlens.layout/1",
///      "graphs": {"circuit_1": {"gate:1": {"x": 1, "y": 0}, ...}, ...}}
class Layout {
  public:
    Layout() = default;

    /// @throws ParseError for malformed JSON or a wrong shape
    [[nodiscard]] static Layout parse(std::string_view text);
    /// @throws NotFoundError if the file cannot be read
    [[nodiscard]] static Layout load(const std::filesystem::path& path);

    /// Positions of one graph; empty when the sidecar does not cover it.
    [[nodiscard]] const std::map<std::string, Position, std::less<>>& graph(std::string_view id) const;
    [[nodiscard]] std::size_t size() const { return graphs_.size(); }

  private:
    std::map<std::string, std::map<std::string, Position, std::less<>>, std::less<>> graphs_;
};

/// Node and edge keys to emphasise in feedback.
struct Highlights {
    std::vector<std::string> nodes;
    std::vector<std::string> edges;
};

[[nodiscard]] nlohmann::json to_json(const Highlights& highlights);

/// Graph payload:
///
///     {"id": ..., "nodes": [{"id", "kind": "source|gate|sink", "display", "test_point",
///                            "position"?}], "edges": [{"id", "from", "to"}]}
///
/// `display` comes from `names` when given, else the gate number or sink
/// name; sources default to "". `position` appears only for nodes the layout covers.
[[nodiscard]] nlohmann::json graph_json(const circuit::Circuit& c, std::string_view graph_id, const Layout& layout,
                                        const std::map<std::string, std::string>& names = {});

/// `point`, the members of its exclusive-power set and every cable leaving a member.
///
/// With `include_sources` the batteries whose cables all end in the
/// highlighted set count as members too.
[[nodiscard]] Highlights exclusive_highlights(const circuit::Circuit& c, const circuit::Endpoint& point,
                                              bool include_sources = false);

}  // namespace faultlens::service
