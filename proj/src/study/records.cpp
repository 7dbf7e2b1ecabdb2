#include "faultlens/study/records.hpp"

#include <map>

#include "faultlens/circuit/facts.hpp"
#include "faultlens/error.hpp"

namespace faultlens::study {

using nlohmann::json;

namespace {

/// Calls `fn(object, line)` for every non-blank line.
template <typename Fn>
void for_each_line(std::string_view jsonl, std::string_view schema, Fn&& fn) {
    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= jsonl.size()) {
        const auto end = std::min(jsonl.find('\n', start), jsonl.size());
        const auto line = jsonl.substr(start, end - start);
        ++line_number;
        start = end + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
            continue;
        }
        json object;
        try {
            object = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), line_number, 1);
        }
        if (!object.is_object()) {
            throw ParseError("expected a JSON object", line_number, 1);
        }
        if (!object.contains("schema") || object["schema"] != schema) {
            throw ParseError("expected schema \"" + std::string(schema) + "\"", line_number, 1);
        }
        try {
            fn(object, line_number);
        } catch (const ParseError&) {
            throw;
        } catch (const json::exception& e) {
            throw ParseError(e.what(), line_number, 1);
        } catch (const Error& e) {
            throw ParseError(e.what(), line_number, 1);
        }
    }
}

void check_keys(const json& object, std::initializer_list<std::string_view> allowed, std::size_t line) {
    for (const auto& [key, value] : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ParseError("unknown field '" + key + "'", line, 1);
        }
    }
}

std::string require_string(const json& object, const char* key, std::size_t line) {
    if (!object.contains(key) || !object[key].is_string()) {
        throw ParseError(std::string("field '") + key + "' must be a string", line, 1);
    }
    return object[key].get<std::string>();
}

Choice choice_from_json(const json& value, std::size_t line) {
    if (value.is_null()) {
        return Choice::escape();
    }
    if (!value.is_string()) {
        throw ParseError("field 'choice' must be a string or null", line, 1);
    }
    return Choice::of(value.get<std::string>());
}

json choice_to_json(const Choice& choice) { return choice.is_escape() ? json(nullptr) : json(*choice.label); }

std::string dump_lines(const std::vector<json>& objects) {
    std::string out;
    for (const auto& object : objects) {
        out += object.dump();
        out += '\n';
    }
    return out;
}

}  // namespace

json to_json(const TrialItem& item) {
    std::vector<std::uint32_t> hypotheses;
    for (auto h : item.hypotheses.members()) {
        hypotheses.push_back(h.value);
    }
    return json{{"schema", kTrialItemSchema},
                {"id", item.id},
                {"domain", to_string(item.domain)},
                {"facts", circuit::to_facts(*item.circuit)},
                {"options", item.options},
                {"hypotheses", hypotheses}};
}

std::vector<TrialItem> parse_trial_items(std::string_view jsonl) {
    std::vector<TrialItem> items;
    std::map<std::string, std::size_t> by_id;
    for_each_line(jsonl, kTrialItemSchema, [&](const json& object, std::size_t line) {
        check_keys(object, {"schema", "id", "domain", "facts", "from", "length", "options", "hypotheses"}, line);
        const auto id = require_string(object, "id", line);
        const auto domain = parse_domain(require_string(object, "domain", line));
        if (by_id.contains(id)) {
            throw ParseError("duplicate item id '" + id + "'", line, 1);
        }
        const int sources = static_cast<int>(object.contains("facts")) +
                            static_cast<int>(object.contains("from")) +
                            static_cast<int>(object.contains("length"));
        if (sources != 1) {
            throw ParseError("exactly one of 'facts', 'from', 'length' is required", line, 1);
        }

        TrialItem item;
        if (object.contains("facts")) {
            item = make_item(id, domain, circuit::parse_circuit(require_string(object, "facts", line)));
        } else if (object.contains("from")) {
            const auto source = require_string(object, "from", line);
            const auto it = by_id.find(source);
            if (it == by_id.end() || items[it->second].domain != Domain::Circuits ||
                domain != Domain::Waterflow) {
                throw ParseError("'from' must name an earlier circuits item and build a waterflow item",
                                 line, 1);
            }
            item = map_waterflow(items[it->second]);
        } else {
            if (domain != Domain::Lists) {
                throw ParseError("'length' builds list items only", line, 1);
            }
            item = list_to_circuit(object["length"].get<std::size_t>());
        }
        item.id = id;

        if (object.contains("options") || object.contains("hypotheses")) {
            auto options = object.contains("options") ? object["options"].get<std::vector<std::string>>()
                                                      : item.options;
            auto hypotheses = item.hypotheses;
            if (object.contains("hypotheses")) {
                std::set<circuit::NodeId> members;
                for (auto v : object["hypotheses"].get<std::vector<std::uint32_t>>()) {
                    members.insert(circuit::NodeId{v});
                }
                hypotheses = HypothesisSet(std::move(members));
            }
            item = make_item(id, domain, Circuit(*item.circuit), std::move(options), std::move(hypotheses));
        }
        by_id.emplace(id, items.size());
        items.push_back(std::move(item));
    });
    return items;
}

std::string format_trial_items(std::span<const TrialItem> items) {
    std::vector<json> objects;
    for (const auto& item : items) {
        objects.push_back(to_json(item));
    }
    return dump_lines(objects);
}

json to_json(const Response& response) {
    json object{{"schema", kResponseSchema},
                {"participant", response.participant},
                {"group", response.group},
                {"item", response.item},
                {"choice", choice_to_json(response.choice)}};
    if (response.elapsed_ms) {
        object["elapsed_ms"] = *response.elapsed_ms;
    }
    return object;
}

std::vector<Response> parse_responses(std::string_view jsonl) {
    std::vector<Response> responses;
    for_each_line(jsonl, kResponseSchema, [&](const json& object, std::size_t line) {
        check_keys(object, {"schema", "participant", "group", "item", "choice", "elapsed_ms"}, line);
        Response r;
        r.participant = require_string(object, "participant", line);
        r.group = require_string(object, "group", line);
        r.item = require_string(object, "item", line);
        if (!object.contains("choice")) {
            throw ParseError("field 'choice' is required (null for the escape option)", line, 1);
        }
        r.choice = choice_from_json(object["choice"], line);
        if (object.contains("elapsed_ms")) {
            r.elapsed_ms = object["elapsed_ms"].get<double>();
        }
        responses.push_back(std::move(r));
    });
    return responses;
}

std::string format_responses(std::span<const Response> responses) {
    std::vector<json> objects;
    for (const auto& r : responses) {
        objects.push_back(to_json(r));
    }
    return dump_lines(objects);
}

json to_json(const TrialRecord& record) {
    json object{{"schema", kTrialRecordSchema},
                {"participant", record.participant},
                {"group", record.group},
                {"item", record.item},
                {"domain", to_string(record.domain)},
                {"choice", choice_to_json(record.choice)},
                {"status", to_string(record.status)},
                {"raw_entropy", record.raw_entropy},
                {"normalized_score",
                 record.normalized_score ? json(*record.normalized_score) : json(nullptr)}};
    if (record.elapsed_ms) {
        object["elapsed_ms"] = *record.elapsed_ms;
    }
    return object;
}

std::vector<TrialRecord> parse_records(std::string_view jsonl) {
    std::vector<TrialRecord> records;
    for_each_line(jsonl, kTrialRecordSchema, [&](const json& object, std::size_t line) {
        check_keys(object,
                   {"schema", "participant", "group", "item", "domain", "choice", "status", "raw_entropy",
                    "normalized_score", "elapsed_ms"},
                   line);
        TrialRecord r;
        r.participant = require_string(object, "participant", line);
        r.group = require_string(object, "group", line);
        r.item = require_string(object, "item", line);
        r.domain = parse_domain(require_string(object, "domain", line));
        r.choice = choice_from_json(object.at("choice"), line);
        r.status = parse_record_status(require_string(object, "status", line));
        r.raw_entropy = object.at("raw_entropy").get<double>();
        if (!object.at("normalized_score").is_null()) {
            r.normalized_score = object["normalized_score"].get<double>();
        }
        if ((r.status == RecordStatus::Scored) != r.normalized_score.has_value()) {
            throw ParseError("normalized_score must be set exactly for scored records", line, 1);
        }
        if (object.contains("elapsed_ms")) {
            r.elapsed_ms = object["elapsed_ms"].get<double>();
        }
        records.push_back(std::move(r));
    });
    return records;
}

std::string format_records(std::span<const TrialRecord> records) {
    std::vector<json> objects;
    for (const auto& r : records) {
        objects.push_back(to_json(r));
    }
    return dump_lines(objects);
}

std::vector<TrialRecord> score_responses(std::span<const TrialItem> items, std::span<const Response> responses) {
    std::map<std::string, const TrialItem*, std::less<>> by_id;
    for (const auto& item : items) {
        by_id.emplace(item.id, &item);
    }
    std::vector<TrialRecord> records;
    records.reserve(responses.size());
    for (const auto& response : responses) {
        const auto it = by_id.find(response.item);
        if (it == by_id.end()) {
            throw NotFoundError("response names unknown item '" + response.item + "'");
        }
        auto record = score_response(*it->second, response.choice, response.participant);
        record.group = response.group;
        record.elapsed_ms = response.elapsed_ms;
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<ParticipantScore> participant_means(std::span<const TrialRecord> records, std::string_view group,
                                                const std::set<std::string>& excluded) {
    std::map<std::string, std::pair<double, std::size_t>> sums;
    for (const auto& r : records) {
        if (r.group != group || r.status != RecordStatus::Scored || excluded.contains(r.participant)) {
            continue;
        }
        auto& [sum, count] = sums[r.participant];
        sum += *r.normalized_score;
        ++count;
    }
    std::vector<ParticipantScore> means;
    for (const auto& [participant, entry] : sums) {
        means.push_back({participant, entry.first / static_cast<double>(entry.second)});
    }
    return means;
}

}  // namespace faultlens::study
