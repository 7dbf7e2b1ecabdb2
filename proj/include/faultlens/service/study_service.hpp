#pragma once

/// @file study_service.hpp
/// @brief Participant sessions for the learning curriculum and the trial items.
///
/// A session moves through learning_1, learning_2, learning_3, trials and
/// complete, in that order. Each learning phase takes exactly one response;
/// the trials phase takes one response per item. Payloads for the two
/// groups differ only in the `explanation`, `highlights` and `sizes` fields,
/// which are null for the self_learning group.
///
/// With a data directory, session events are appended to
/// `sessions.jsonl` and replayed on start-up; finalised trial records are
/// appended to `records.jsonl` in the faultlens.trial_record/1 format.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "faultlens/service/payloads.hpp"
#include "faultlens/study/domains.hpp"

namespace faultlens::service {

enum class Group { SelfLearning, MachineExplained };
[[nodiscard]] std::string_view to_string(Group group);
/// @throws InvalidArgumentError for anything but self_learning and machine_explained
[[nodiscard]] Group parse_group(std::string_view name);

enum class Phase { Learning1, Learning2, Learning3, Trials, Complete };
[[nodiscard]] std::string_view to_string(Phase phase);
[[nodiscard]] Phase parse_phase(std::string_view name);

/// Everything a session serves: trial items, learning material and layout.
struct StudyContent {
    std::vector<study::TrialItem> items;
    Layout layout;
    nlohmann::json learning;

    /// @param trials trial set file; the shipped set when empty
    /// @param layout layout sidecar; the shipped one when empty
    [[nodiscard]] static StudyContent load(const std::optional<std::filesystem::path>& trials = std::nullopt,
                                           const std::optional<std::filesystem::path>& layout = std::nullopt);
};

class StudyService {
  public:
    /// Milliseconds on a monotonic clock.
    using Clock = std::function<std::int64_t()>;

    /// @throws ParseError if the event log in `data_dir` is malformed
    StudyService(StudyContent content, std::optional<std::filesystem::path> data_dir, std::uint64_t seed,
                 Clock clock = {});
    StudyService(const StudyService&) = delete;
    StudyService& operator=(const StudyService&) = delete;
    ~StudyService();

    /// Body: {"participant"?: string, "group"?: "self_learning"|"machine_explained"}.
    /// Without a group, one is drawn at random.
    [[nodiscard]] nlohmann::json create_session(const nlohmann::json& body);
    [[nodiscard]] nlohmann::json session_state(std::string_view id) const;
    /// Content of the current phase. The first request for a trial item starts its timer.
    [[nodiscard]] nlohmann::json phase_content(std::string_view id);
    /// Body carries the `phase` it answers plus the phase-specific answer.
    /// @throws ConflictError if `phase` is not the current phase
    [[nodiscard]] nlohmann::json submit(std::string_view id, const nlohmann::json& body);
    /// Trial items in the order this session serves them.
    [[nodiscard]] nlohmann::json trials(std::string_view id) const;
    /// @throws ConflictError unless every trial item was answered
    [[nodiscard]] nlohmann::json finalize(std::string_view id);
    /// Domain introduction and vocabulary.
    [[nodiscard]] nlohmann::json domain(std::string_view name) const;

    [[nodiscard]] std::size_t session_count() const;
    [[nodiscard]] const StudyContent& content() const { return content_; }

  private:
    struct Session;

    [[nodiscard]] std::shared_ptr<Session> find(std::string_view id) const;
    void log(const nlohmann::json& event);
    void replay(const std::filesystem::path& path);
    [[nodiscard]] std::vector<std::size_t> trial_order(std::uint64_t counter) const;

    [[nodiscard]] nlohmann::json learning_1(const Session& s) const;
    [[nodiscard]] nlohmann::json learning_2(const Session& s) const;
    [[nodiscard]] nlohmann::json learning_3(const Session& s) const;
    [[nodiscard]] nlohmann::json trial_content(Session& s);
    [[nodiscard]] nlohmann::json summary(const Session& s) const;

    [[nodiscard]] nlohmann::json answer_learning_1(Session& s, const nlohmann::json& body);
    [[nodiscard]] nlohmann::json answer_learning_2(Session& s, const nlohmann::json& body);
    [[nodiscard]] nlohmann::json answer_learning_3(Session& s, const nlohmann::json& body);
    [[nodiscard]] nlohmann::json answer_trial(Session& s, const nlohmann::json& body);

    StudyContent content_;
    std::optional<std::filesystem::path> data_dir_;
    std::uint64_t seed_;
    Clock clock_;

    mutable std::shared_mutex sessions_mutex_;
    std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
    std::uint64_t created_ = 0;

    std::mutex log_mutex_;
};

}  // namespace faultlens::service
