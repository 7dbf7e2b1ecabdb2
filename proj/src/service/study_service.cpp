#include "faultlens/service/study_service.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "../study/sampling.hpp"
#include "faultlens/assets.hpp"
#include "faultlens/circuit/facts.hpp"
#include "faultlens/error.hpp"
#include "faultlens/lens/clients.hpp"
#include "faultlens/strategy/strategy.hpp"
#include "faultlens/study/records.hpp"
#include "faultlens/study/scoring.hpp"
#include "faultlens/study/session.hpp"

namespace faultlens::service {

using circuit::Circuit;
using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 3> kGateChoices{"certainly_working", "potentially_faulty", "dont_know"};

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw NotFoundError("cannot open '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

Circuit asset_circuit(const json& path) { return circuit::parse_circuit(assets::get(path.get<std::string>())); }

std::string asset_text(const json& path) { return std::string(assets::get(path.get<std::string>())); }

const json& require_object(const json& body) {
    if (!body.is_object()) {
        throw InvalidArgumentError("request body must be a JSON object");
    }
    return body;
}

void require_keys(const json& body, std::initializer_list<std::string_view> keys) {
    for (const auto& [key, _] : body.items()) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw InvalidArgumentError("unexpected field '" + key + "'");
        }
    }
}

Phase next_phase(Phase phase) {
    switch (phase) {
    case Phase::Learning1:
        return Phase::Learning2;
    case Phase::Learning2:
        return Phase::Learning3;
    case Phase::Learning3:
        return Phase::Trials;
    case Phase::Trials:
    case Phase::Complete:
        break;
    }
    return Phase::Complete;
}

json vocabulary_json(study::Domain domain) {
    const auto& v = study::vocabulary(domain);
    return {{"source", v.source}, {"gate", v.gate}, {"sink", v.sink}, {"test", v.test}};
}

std::string intro_text(study::Domain domain) {
    return std::string(assets::get("study/intros/" + std::string(study::to_string(domain)) + ".txt"));
}

std::vector<std::string> gate_keys(const Circuit& c, const strategy::HypothesisSet& set) {
    std::vector<std::string> out;
    for (auto id : set.members()) {
        out.push_back(node_key(c, id));
    }
    return out;
}

}  // namespace

struct StudyService::Session {
    std::mutex mutex;
    std::string id;
    std::string participant;
    Group group = Group::SelfLearning;
    Phase phase = Phase::Learning1;
    std::vector<std::size_t> order;
    std::size_t next = 0;
    std::int64_t current_since = 0;
    std::optional<std::int64_t> served_at;
    std::vector<study::TrialRecord> records;

    [[nodiscard]] bool explained() const { return group == Group::MachineExplained; }
};

std::string_view to_string(Group group) {
    return group == Group::SelfLearning ? "self_learning" : "machine_explained";
}

Group parse_group(std::string_view name) {
    if (name == "self_learning") {
        return Group::SelfLearning;
    }
    if (name == "machine_explained") {
        return Group::MachineExplained;
    }
    throw InvalidArgumentError("unknown group '" + std::string(name) + "'");
}

std::string_view to_string(Phase phase) {
    switch (phase) {
    case Phase::Learning1:
        return "learning_1";
    case Phase::Learning2:
        return "learning_2";
    case Phase::Learning3:
        return "learning_3";
    case Phase::Trials:
        return "trials";
    case Phase::Complete:
        return "complete";
    }
    return "complete";
}

Phase parse_phase(std::string_view name) {
    for (auto phase : {Phase::Learning1, Phase::Learning2, Phase::Learning3, Phase::Trials, Phase::Complete}) {
        if (to_string(phase) == name) {
            return phase;
        }
    }
    throw InvalidArgumentError("unknown phase '" + std::string(name) + "'");
}

StudyContent StudyContent::load(const std::optional<std::filesystem::path>& trials,
                                const std::optional<std::filesystem::path>& layout) {
    StudyContent content;
    content.items = study::parse_trial_items(trials ? read_text(*trials) : std::string(assets::get("study/trials.jsonl")));
    if (content.items.empty()) {
        throw InvalidArgumentError("trial set is empty");
    }
    content.layout = layout ? Layout::load(*layout) : Layout::parse(assets::get("study/layout.json"));
    content.learning = json::parse(assets::get("study/learning.json"));
    return content;
}

StudyService::StudyService(StudyContent content, std::optional<std::filesystem::path> data_dir, std::uint64_t seed,
                           Clock clock)
    : content_(std::move(content)), data_dir_(std::move(data_dir)), seed_(seed), clock_(std::move(clock)) {
    if (!clock_) {
        clock_ = [] {
            return std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now().time_since_epoch())
                .count();
        };
    }
    if (data_dir_) {
        std::filesystem::create_directories(*data_dir_);
        const auto log_path = *data_dir_ / "sessions.jsonl";
        if (std::filesystem::exists(log_path)) {
            replay(log_path);
        }
    }
}

StudyService::~StudyService() = default;

std::shared_ptr<StudyService::Session> StudyService::find(std::string_view id) const {
    std::shared_lock lock(sessions_mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) {
        throw NotFoundError("unknown session '" + std::string(id) + "'");
    }
    return it->second;
}

std::size_t StudyService::session_count() const {
    std::shared_lock lock(sessions_mutex_);
    return sessions_.size();
}

void StudyService::log(const json& event) {
    if (!data_dir_) {
        return;
    }
    std::lock_guard lock(log_mutex_);
    std::ofstream out(*data_dir_ / "sessions.jsonl", std::ios::app | std::ios::binary);
    out << event.dump() << '\n';
    out.flush();
    if (!out) {
        throw Error("cannot append to the session log in '" + data_dir_->string() + "'");
    }
}

std::vector<std::size_t> StudyService::trial_order(std::uint64_t counter) const {
    // Circuits first, then the remaining domain blocks in a per-session random order.
    std::vector<study::Domain> blocks;
    for (const auto& item : content_.items) {
        if (item.domain != study::Domain::Circuits &&
            std::find(blocks.begin(), blocks.end(), item.domain) == blocks.end()) {
            blocks.push_back(item.domain);
        }
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32)};
    std::mt19937_64 rng(seq);
    for (std::size_t i = blocks.size(); i > 1; --i) {
        std::swap(blocks[i - 1], blocks[study::detail::uniform_index(rng, i)]);
    }
    blocks.insert(blocks.begin(), study::Domain::Circuits);

    std::vector<std::size_t> order;
    for (auto domain : blocks) {
        for (std::size_t i = 0; i < content_.items.size(); ++i) {
            if (content_.items[i].domain == domain) {
                order.push_back(i);
            }
        }
    }
    return order;
}

json StudyService::create_session(const json& body) {
    const json& request = body.is_null() ? json::object() : require_object(body);
    require_keys(request, {"participant", "group"});
    std::optional<std::string> participant;
    if (request.contains("participant")) {
        if (!request["participant"].is_string() || request["participant"].get<std::string>().empty()) {
            throw InvalidArgumentError("participant must be a non-empty string");
        }
        participant = request["participant"].get<std::string>();
    }
    std::optional<Group> group;
    if (request.contains("group")) {
        if (!request["group"].is_string()) {
            throw InvalidArgumentError("group must be a string");
        }
        group = parse_group(request["group"].get<std::string>());
    }

    auto session = std::make_shared<Session>();
    {
        std::unique_lock lock(sessions_mutex_);
        const std::uint64_t counter = created_++;
        char fallback[32];
        std::snprintf(fallback, sizeof fallback, "participant_%04llu", static_cast<unsigned long long>(counter + 1));
        session->participant = participant.value_or(fallback);
        if (!group) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                              static_cast<std::uint32_t>(counter), 0x67u};
            std::mt19937_64 rng(seq);
            group = (rng() >> 63) == 0 ? Group::SelfLearning : Group::MachineExplained;
        }
        session->group = *group;
        session->id = lens::sha256_hex(std::to_string(seed_) + ":" + std::to_string(counter) + ":" +
                                       session->participant)
                          .substr(0, 16);
        session->order = trial_order(counter);
        sessions_.emplace(session->id, session);
    }

    json order = json::array();
    for (auto i : session->order) {
        order.push_back(content_.items[i].id);
    }
    log({{"event", "created"},
         {"session", session->id},
         {"participant", session->participant},
         {"group", to_string(session->group)},
         {"order", order}});
    return {{"session", session->id},
            {"participant", session->participant},
            {"group", to_string(session->group)},
            {"phase", to_string(session->phase)}};
}

json StudyService::session_state(std::string_view id) const {
    const auto s = find(id);
    std::lock_guard lock(s->mutex);
    return {{"session", s->id},
            {"participant", s->participant},
            {"group", to_string(s->group)},
            {"phase", to_string(s->phase)},
            {"trials_answered", s->next},
            {"trials_total", s->order.size()}};
}

json StudyService::trials(std::string_view id) const {
    const auto s = find(id);
    std::lock_guard lock(s->mutex);
    json items = json::array();
    for (std::size_t k = 0; k < s->order.size(); ++k) {
        const auto& item = content_.items[s->order[k]];
        items.push_back({{"index", k}, {"id", item.id}, {"domain", study::to_string(item.domain)}, {"answered", k < s->next}});
    }
    return {{"session", s->id}, {"items", items}};
}

json StudyService::domain(std::string_view name) const {
    const auto d = study::parse_domain(name);
    return {{"domain", study::to_string(d)}, {"vocabulary", vocabulary_json(d)}, {"introduction", intro_text(d)},
            {"escape_option", study::kEscapeOption}};
}

json StudyService::phase_content(std::string_view id) {
    const auto s = find(id);
    std::lock_guard lock(s->mutex);
    json payload;
    switch (s->phase) {
    case Phase::Learning1:
        payload = learning_1(*s);
        break;
    case Phase::Learning2:
        payload = learning_2(*s);
        break;
    case Phase::Learning3:
        payload = learning_3(*s);
        break;
    case Phase::Trials:
        payload = trial_content(*s);
        break;
    case Phase::Complete:
        return summary(*s);
    }
    payload["session"] = s->id;
    return payload;
}

json StudyService::learning_1(const Session& s) const {
    const auto& spec = content_.learning.at("learning_1");
    const auto c = asset_circuit(spec.at("circuit"));
    const auto names = spec.at("names").get<std::map<std::string, std::string>>();
    const auto target = spec.at("target").get<std::string>();
    auto graph = graph_json(c, "learning_1", content_.layout, names);
    json options = json::array();
    for (const auto& node : graph["nodes"]) {
        options.push_back({{"id", node["id"]}, {"display", node["display"]}});
    }
    json payload{{"phase", "learning_1"},
                 {"task", spec.at("task")},
                 {"introduction", intro_text(study::Domain::Circuits)},
                 {"graph", std::move(graph)},
                 {"target", sink_key(target)},
                 {"options", std::move(options)},
                 {"multiple", true},
                 {"explanation", nullptr},
                 {"highlights", nullptr}};
    if (s.explained()) {
        payload["explanation"] = asset_text(spec.at("explanation"));
        payload["highlights"] = to_json(exclusive_highlights(c, circuit::Sink{target}, true));
    }
    return payload;
}

json StudyService::learning_2(const Session& s) const {
    const auto& spec = content_.learning.at("learning_2");
    json circuits = json::array();
    json highlights = json::array();
    for (const auto& entry : spec.at("circuits")) {
        const auto c = asset_circuit(entry.at("circuit"));
        const auto test = entry.at("test").get<std::string>();
        const auto gate = c.test_point(test).gate;
        circuits.push_back({{"graph", graph_json(c, entry.at("graph").get<std::string>(), content_.layout)},
                            {"test", test},
                            {"test_node", node_key(c, gate)},
                            {"outcome", entry.at("outcome")},
                            {"gates", gate_keys(c, strategy::HypothesisSet::all_gates(c))}});
        highlights.push_back(to_json(exclusive_highlights(c, gate)));
    }
    json payload{{"phase", "learning_2"},
                 {"task", spec.at("task")},
                 {"circuits", std::move(circuits)},
                 {"choices", kGateChoices},
                 {"explanation", nullptr},
                 {"highlights", nullptr}};
    if (s.explained()) {
        payload["explanation"] = asset_text(spec.at("explanation"));
        payload["highlights"] = std::move(highlights);
    }
    return payload;
}

json StudyService::learning_3(const Session& s) const {
    const auto& spec = content_.learning.at("learning_3");
    const auto c = asset_circuit(spec.at("circuit"));
    const circuit::NodeId fault{spec.at("fault").get<std::uint32_t>()};
    const auto all = strategy::HypothesisSet::all_gates(c);

    auto step_json = [&](const std::string& test, circuit::Outcome outcome, const strategy::PartitionSizes& sizes,
                         const strategy::HypothesisSet& remaining) {
        return json{{"test", test},
                    {"test_node", node_key(c, c.test_point(test).gate)},
                    {"outcome", circuit::to_string(outcome)},
                    {"remaining", gate_keys(c, remaining)},
                    {"sizes", s.explained() ? json{{"inside", sizes.inside}, {"outside", sizes.outside}} : json(nullptr)}};
    };

    json traces = json::array();
    for (const auto& trace_spec : spec.at("traces")) {
        json steps = json::array();
        const auto strategy_name = trace_spec.at("strategy").get<std::string>();
        if (strategy_name == "halving") {
            for (const auto& step : study::run_session(c, fault, all).steps) {
                steps.push_back(step_json(step.test, step.outcome, step.sizes, step.survivors));
            }
        } else if (strategy_name == "sequential") {
            auto remaining = all;
            for (const auto& tp : c.test_points()) {
                if (remaining.size() <= 1) {
                    break;
                }
                const auto evaluation = strategy::evaluate_test(c, tp.label, remaining);
                const auto outcome = circuit::observed_outcome(c, fault, tp.label);
                remaining = strategy::prune(remaining, evaluation, outcome);
                steps.push_back(step_json(tp.label, outcome, evaluation.partition.sizes(), remaining));
            }
        } else {
            throw InvalidArgumentError("unknown trace strategy '" + strategy_name + "'");
        }
        traces.push_back({{"id", trace_spec.at("id")}, {"steps", std::move(steps)}});
    }
    json options = json::array();
    for (const auto& t : traces) {
        options.push_back(t["id"]);
    }
    return {{"phase", "learning_3"},
            {"task", spec.at("task")},
            {"graph", graph_json(c, "learning_3", content_.layout)},
            {"fault", node_key(c, fault)},
            {"traces", std::move(traces)},
            {"options", std::move(options)},
            {"explanation", s.explained() ? json(asset_text(spec.at("explanation"))) : json(nullptr)}};
}

json StudyService::trial_content(Session& s) {
    json payload{{"phase", "trials"}, {"index", s.next}, {"total", s.order.size()}};
    if (s.next >= s.order.size()) {
        payload["item"] = nullptr;
        payload["introduction"] = nullptr;
        return payload;
    }
    const auto& item = content_.items[s.order[s.next]];
    if (!s.served_at) {
        s.served_at = clock_();
    }
    const bool block_start = s.next == 0 || content_.items[s.order[s.next - 1]].domain != item.domain;
    payload["introduction"] = block_start ? json(intro_text(item.domain)) : json(nullptr);
    payload["item"] = {{"id", item.id},
                       {"domain", study::to_string(item.domain)},
                       {"vocabulary", vocabulary_json(item.domain)},
                       {"graph", graph_json(*item.circuit, item.id, content_.layout)},
                       {"options", item.options},
                       {"escape_option", study::kEscapeOption}};
    return payload;
}

json StudyService::submit(std::string_view id, const json& body) {
    require_object(body);
    if (!body.contains("phase") || !body["phase"].is_string()) {
        throw InvalidArgumentError("response needs a 'phase' string");
    }
    const auto phase = parse_phase(body["phase"].get<std::string>());
    const auto s = find(id);
    std::lock_guard lock(s->mutex);
    if (phase != s->phase) {
        throw ConflictError("session is in phase " + std::string(to_string(s->phase)) + ", not " +
                            std::string(to_string(phase)));
    }
    json feedback;
    switch (phase) {
    case Phase::Learning1:
        feedback = answer_learning_1(*s, body);
        break;
    case Phase::Learning2:
        feedback = answer_learning_2(*s, body);
        break;
    case Phase::Learning3:
        feedback = answer_learning_3(*s, body);
        break;
    case Phase::Trials:
        return answer_trial(*s, body);
    case Phase::Complete:
        throw ConflictError("session is complete");
    }
    log({{"event", "learning"},
         {"session", s->id},
         {"phase", to_string(phase)},
         {"correct", feedback["correct"]},
         {"answer", body}});
    s->phase = next_phase(phase);
    if (s->phase == Phase::Trials) {
        s->current_since = clock_();
        s->served_at.reset();
    }
    feedback["next_phase"] = to_string(s->phase);
    return feedback;
}

json StudyService::answer_learning_1(Session& s, const json& body) {
    require_keys(body, {"phase", "selection"});
    const auto content = learning_1(s);
    if (!body.contains("selection") || !body["selection"].is_array()) {
        throw InvalidArgumentError("learning_1 response needs a 'selection' array of node ids");
    }
    std::set<std::string> known;
    for (const auto& option : content["options"]) {
        known.insert(option["id"].get<std::string>());
    }
    std::set<std::string> selected;
    for (const auto& v : body["selection"]) {
        if (!v.is_string() || !known.contains(v.get<std::string>())) {
            throw InvalidArgumentError("selection contains an unknown node id");
        }
        selected.insert(v.get<std::string>());
    }
    const auto& spec = content_.learning.at("learning_1");
    const auto c = asset_circuit(spec.at("circuit"));
    std::set<std::string> expected;
    for (const auto& node : exclusive_highlights(c, circuit::Sink{spec.at("target").get<std::string>()}, true).nodes) {
        if (!node.starts_with("sink:")) {
            expected.insert(node);
        }
    }
    json marks = json::array();
    for (const auto& option : content["options"]) {
        const auto key = option["id"].get<std::string>();
        marks.push_back({{"id", key}, {"selected", selected.contains(key)}, {"expected", expected.contains(key)}});
    }
    return {{"phase", "learning_1"},
            {"correct", selected == expected},
            {"expected", expected},
            {"marks", std::move(marks)},
            {"explanation", content["explanation"]},
            {"highlights", content["highlights"]}};
}

json StudyService::answer_learning_2(Session& s, const json& body) {
    require_keys(body, {"phase", "answers"});
    const auto& spec = content_.learning.at("learning_2");
    const auto& circuits = spec.at("circuits");
    if (!body.contains("answers") || !body["answers"].is_array() || body["answers"].size() != circuits.size()) {
        throw InvalidArgumentError("learning_2 response needs one 'answers' object per circuit");
    }
    const auto content = learning_2(s);
    bool all_correct = true;
    json results = json::array();
    for (std::size_t k = 0; k < circuits.size(); ++k) {
        const auto& answers = body["answers"][k];
        if (!answers.is_object()) {
            throw InvalidArgumentError("each learning_2 answer must map gate ids to choices");
        }
        const auto c = asset_circuit(circuits[k].at("circuit"));
        const auto all = strategy::HypothesisSet::all_gates(c);
        const auto part = strategy::partition(c, circuits[k].at("test").get<std::string>(), all);
        const bool lit = circuits[k].at("outcome") == "lit";
        for (const auto& [key, value] : answers.items()) {
            const auto keys = gate_keys(c, all);
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
                throw InvalidArgumentError("unknown gate id '" + key + "'");
            }
            if (!value.is_string() ||
                std::find(kGateChoices.begin(), kGateChoices.end(), value.get<std::string>()) == kGateChoices.end()) {
                throw InvalidArgumentError("choice for '" + key + "' must be one of certainly_working, "
                                           "potentially_faulty, dont_know");
            }
        }
        json marks = json::array();
        for (auto gate : all.members()) {
            const auto key = node_key(c, gate);
            const bool suspect = part.inside.contains(gate) == lit;
            const std::string expected = suspect ? "potentially_faulty" : "certainly_working";
            const std::string answer = answers.value(key, "dont_know");
            all_correct = all_correct && answer == expected;
            marks.push_back({{"id", key}, {"answer", answer}, {"expected", expected}, {"correct", answer == expected}});
        }
        results.push_back({{"graph", circuits[k].at("graph")}, {"marks", std::move(marks)}});
    }
    return {{"phase", "learning_2"},
            {"correct", all_correct},
            {"circuits", std::move(results)},
            {"explanation", content["explanation"]},
            {"highlights", content["highlights"]}};
}

json StudyService::answer_learning_3(Session&, const json& body) {
    require_keys(body, {"phase", "choice"});
    const auto& spec = content_.learning.at("learning_3");
    if (!body.contains("choice") || !body["choice"].is_string()) {
        throw InvalidArgumentError("learning_3 response needs a 'choice' string");
    }
    const auto choice = body["choice"].get<std::string>();
    bool known = false;
    for (const auto& t : spec.at("traces")) {
        known = known || t.at("id") == choice;
    }
    if (!known) {
        throw InvalidArgumentError("unknown option '" + choice + "'");
    }
    return {{"phase", "learning_3"}, {"correct", choice == spec.at("answer")}, {"expected", spec.at("answer")}};
}

json StudyService::answer_trial(Session& s, const json& body) {
    require_keys(body, {"phase", "item", "choice"});
    if (s.next >= s.order.size()) {
        throw ConflictError("every trial item has been answered; finalize the session");
    }
    const auto& item = content_.items[s.order[s.next]];
    if (!body.contains("item") || !body["item"].is_string()) {
        throw InvalidArgumentError("trial response needs an 'item' string");
    }
    if (body["item"] != item.id) {
        throw ConflictError("current trial item is '" + item.id + "', not '" + body["item"].get<std::string>() + "'");
    }
    if (!body.contains("choice") || !(body["choice"].is_null() || body["choice"].is_string())) {
        throw InvalidArgumentError("trial response needs a 'choice': a test label or null for the escape option");
    }
    const auto choice =
        body["choice"].is_null() ? study::Choice::escape() : study::Choice::of(body["choice"].get<std::string>());
    auto record = study::score_response(item, choice, s.participant);
    record.group = std::string(to_string(s.group));
    const auto now = clock_();
    record.elapsed_ms = static_cast<double>(now - s.served_at.value_or(s.current_since));

    log({{"event", "trial"}, {"session", s.id}, {"record", study::to_json(record)}});
    s.records.push_back(record);
    ++s.next;
    s.served_at.reset();
    s.current_since = now;
    return {{"phase", "trials"},
            {"record", study::to_json(record)},
            {"remaining", s.order.size() - s.next},
            {"next_item", s.next < s.order.size() ? json(content_.items[s.order[s.next]].id) : json(nullptr)}};
}

json StudyService::finalize(std::string_view id) {
    const auto s = find(id);
    std::lock_guard lock(s->mutex);
    if (s->phase == Phase::Complete) {
        throw ConflictError("session is already finalized");
    }
    if (s->phase != Phase::Trials || s->next < s->order.size()) {
        throw ConflictError("session cannot be finalized before every trial item is answered");
    }
    if (data_dir_) {
        std::lock_guard log_lock(log_mutex_);
        std::ofstream out(*data_dir_ / "records.jsonl", std::ios::app | std::ios::binary);
        out << study::format_records(s->records);
        if (!out) {
            throw Error("cannot append trial records in '" + data_dir_->string() + "'");
        }
    }
    log({{"event", "finalized"}, {"session", s->id}});
    s->phase = Phase::Complete;
    return summary(*s);
}

json StudyService::summary(const Session& s) const {
    json records = json::array();
    std::size_t scored = 0;
    std::size_t excluded = 0;
    std::size_t invalid = 0;
    double score_sum = 0.0;
    double time_sum = 0.0;
    std::size_t timed = 0;
    for (const auto& r : s.records) {
        records.push_back(study::to_json(r));
        switch (r.status) {
        case study::RecordStatus::Scored:
            ++scored;
            score_sum += r.normalized_score.value_or(0.0);
            break;
        case study::RecordStatus::Excluded:
            ++excluded;
            break;
        case study::RecordStatus::Invalid:
            ++invalid;
            break;
        }
        if (r.elapsed_ms) {
            time_sum += *r.elapsed_ms;
            ++timed;
        }
    }
    return {{"session", s.id},
            {"participant", s.participant},
            {"group", to_string(s.group)},
            {"phase", to_string(s.phase)},
            {"records", std::move(records)},
            {"scores",
             {{"scored", scored},
              {"excluded", excluded},
              {"invalid", invalid},
              {"mean_normalized_score", scored ? json(score_sum / static_cast<double>(scored)) : json(nullptr)},
              {"mean_elapsed_ms", timed ? json(time_sum / static_cast<double>(timed)) : json(nullptr)}}}};
}

void StudyService::replay(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::string line;
    std::size_t number = 0;
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t i = 0; i < content_.items.size(); ++i) {
        index.emplace(content_.items[i].id, i);
    }
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) {
            continue;
        }
        try {
            const auto event = json::parse(line);
            const auto type = event.at("event").get<std::string>();
            const auto id = event.at("session").get<std::string>();
            if (type == "created") {
                auto s = std::make_shared<Session>();
                s->id = id;
                s->participant = event.at("participant").get<std::string>();
                s->group = parse_group(event.at("group").get<std::string>());
                for (const auto& item : event.at("order")) {
                    const auto it = index.find(item.get<std::string>());
                    if (it == index.end()) {
                        throw NotFoundError("trial item '" + item.get<std::string>() + "' is not in the trial set");
                    }
                    s->order.push_back(it->second);
                }
                sessions_[id] = s;
                ++created_;
                continue;
            }
            const auto it = sessions_.find(id);
            if (it == sessions_.end()) {
                throw NotFoundError("event for unknown session '" + id + "'");
            }
            auto& s = *it->second;
            if (type == "learning") {
                s.phase = next_phase(parse_phase(event.at("phase").get<std::string>()));
            } else if (type == "trial") {
                s.records.push_back(study::parse_records(event.at("record").dump()).at(0));
                ++s.next;
            } else if (type == "finalized") {
                s.phase = Phase::Complete;
            } else {
                throw InvalidArgumentError("unknown event '" + type + "'");
            }
        } catch (const ParseError& e) {
            throw ParseError(std::string("session log: ") + e.what(), number, 1);
        } catch (const std::exception& e) {
            throw ParseError(std::string("session log: ") + e.what(), number, 1);
        }
    }
    const auto now = clock_();
    for (auto& [_, s] : sessions_) {
        s->current_since = now;
    }
}

}  // namespace faultlens::service
