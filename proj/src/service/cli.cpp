#include "faultlens/service/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "faultlens/assets.hpp"
#include "faultlens/circuit/facts.hpp"
#include "faultlens/circuit/simulate.hpp"
#include "faultlens/error.hpp"
#include "faultlens/lens/clients.hpp"
#include "faultlens/lens/ledger.hpp"
#include "faultlens/lens/report.hpp"
#include "faultlens/service/config.hpp"
#include "faultlens/service/http_api.hpp"
#include "faultlens/service/study_service.hpp"
#include "faultlens/strategy/strategy.hpp"
#include "faultlens/study/records.hpp"
#include "faultlens/study/responders.hpp"

namespace faultlens::service {

using nlohmann::json;

namespace {

enum class Format { Text, Json, Lines };

struct Globals {
    std::string config;
    std::uint64_t seed = 0;
    bool seed_given = false;
    Format format = Format::Text;
};

std::string fixed(double value, int digits = 6) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    return buffer;
}

std::string general(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", value);
    return buffer;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw NotFoundError("cannot open '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

AppConfig app_config(const Globals& g) {
    AppConfig config = g.config.empty() ? AppConfig{} : load_config(g.config);
    if (g.seed_given) {
        config.seed = g.seed;
    }
    return config;
}

std::vector<study::TrialItem> load_items(const std::string& path) {
    return study::parse_trial_items(path.empty() ? std::string(assets::get("study/trials.jsonl")) : read_file(path));
}

std::string join_ids(const std::set<circuit::NodeId>& ids) {
    std::string out;
    for (auto id : ids) {
        out += (out.empty() ? "" : " ") + std::to_string(id.value);
    }
    return out.empty() ? "-" : out;
}

json id_array(const std::set<circuit::NodeId>& ids) {
    json out = json::array();
    for (auto id : ids) {
        out.push_back(id.value);
    }
    return out;
}

void print_json(std::ostream& out, const json& value) { out << value.dump(2) << '\n'; }

// analyze ------------------------------------------------------------------

int analyze(const Globals& g, const std::string& file, const std::vector<std::uint32_t>& ids, std::ostream& out,
            std::ostream& err) {
    const auto c = circuit::load_circuit(file);
    for (const auto& w : c.report().warnings) {
        err << "warning: " << w.message << '\n';
    }
    strategy::HypothesisSet hypotheses = strategy::HypothesisSet::all_gates(c);
    if (!ids.empty()) {
        std::set<circuit::NodeId> members;
        for (auto id : ids) {
            if (!c.is_gate(circuit::NodeId{id})) {
                throw InvalidArgumentError("hypothesis " + std::to_string(id) + " is not a gate");
            }
            members.insert(circuit::NodeId{id});
        }
        hypotheses = strategy::HypothesisSet(std::move(members));
    }
    if (hypotheses.empty()) {
        throw InvalidArgumentError("circuit has no gates");
    }
    std::set<std::uint32_t> groups;
    for (auto id : hypotheses.members()) {
        groups.insert(circuit::circuit_group(id));
    }
    const auto best = strategy::optimal_test(c, hypotheses);

    json tests = json::array();
    for (const auto& tp : c.test_points()) {
        if (!groups.contains(circuit::circuit_group(tp.gate))) {
            continue;
        }
        const auto e = strategy::evaluate_test(c, tp.label, hypotheses);
        tests.push_back({{"test", tp.label},
                         {"gate", tp.gate.value},
                         {"inside", id_array(e.partition.inside)},
                         {"outside", id_array(e.partition.outside)},
                         {"excluded", id_array(e.partition.excluded)},
                         {"sizes", {e.partition.inside.size(), e.partition.outside.size()}},
                         {"minority_ratio", e.minority_ratio},
                         {"entropy", e.entropy},
                         {"optimal", tp.label == best.label}});
    }

    switch (g.format) {
    case Format::Lines:
        for (const auto& t : tests) {
            out << t.dump() << '\n';
        }
        break;
    case Format::Json:
        print_json(out, {{"circuit", file},
                         {"hypotheses", id_array(hypotheses.members())},
                         {"tests", tests},
                         {"optimal", {{"test", best.label}, {"sizes", {best.sizes.inside, best.sizes.outside}}}}});
        break;
    case Format::Text: {
        out << "circuit: " << file << " (" << c.gates().size() << " gates, " << c.test_points().size()
            << " test points)\n";
        out << "hypotheses: " << join_ids(hypotheses.members()) << "\n\n";
        char line[256];
        std::snprintf(line, sizeof line, "%-16s %5s %9s %9s  %-18s %s\n", "test", "gate", "minority", "entropy",
                      "inside", "outside");
        out << line;
        for (const auto& t : tests) {
            std::set<circuit::NodeId> inside;
            std::set<circuit::NodeId> outside;
            for (auto v : t["inside"]) {
                inside.insert(circuit::NodeId{v.get<std::uint32_t>()});
            }
            for (auto v : t["outside"]) {
                outside.insert(circuit::NodeId{v.get<std::uint32_t>()});
            }
            std::snprintf(line, sizeof line, "%-16s %5u %9s %9s  %-18s %s\n", t["test"].get<std::string>().c_str(),
                          t["gate"].get<unsigned>(), fixed(t["minority_ratio"].get<double>(), 4).c_str(),
                          fixed(t["entropy"].get<double>()).c_str(), join_ids(inside).c_str(),
                          join_ids(outside).c_str());
            out << line;
        }
        out << "\noptimal: " << best.label << " (" << best.sizes.inside << ", " << best.sizes.outside << ")\n";
        break;
    }
    }
    return 0;
}

// simulate -----------------------------------------------------------------

int simulate(const Globals& g, const std::string& file, std::uint32_t fault, const std::string& test,
             std::ostream& out) {
    const auto c = circuit::load_circuit(file);
    circuit::FaultScenario scenario{circuit::NodeId{fault}, std::nullopt};
    if (!test.empty()) {
        scenario.injection = test;
    }
    const auto state = circuit::simulate(c, scenario);
    std::optional<circuit::Outcome> outcome;
    if (!test.empty() && circuit::relevant_sinks(c, test).size() == 1) {
        outcome = circuit::observed_outcome(c, scenario.faulty_gate, test);
    }

    json nodes = json::array();
    for (const auto& [id, powered] : state.nodes) {
        nodes.push_back({{"id", id.value}, {"kind", c.is_source(id) ? "source" : "gate"}, {"powered", powered}});
    }
    json sinks = json::array();
    for (const auto& [name, lit] : state.sinks) {
        sinks.push_back({{"sink", name}, {"lit", lit}});
    }
    const json outcome_json = outcome ? json(circuit::to_string(*outcome)) : json(nullptr);

    switch (g.format) {
    case Format::Lines:
        for (const auto& n : nodes) {
            out << n.dump() << '\n';
        }
        for (const auto& s : sinks) {
            out << s.dump() << '\n';
        }
        break;
    case Format::Json:
        print_json(out, {{"fault", fault},
                         {"injection", test.empty() ? json(nullptr) : json(test)},
                         {"nodes", nodes},
                         {"sinks", sinks},
                         {"outcome", outcome_json}});
        break;
    case Format::Text:
        out << "fault: gate " << fault << '\n';
        out << "injection: " << (test.empty() ? "none" : test) << '\n';
        for (const auto& n : nodes) {
            out << (n["kind"] == "source" ? "battery " : "gate ") << n["id"].get<unsigned>() << ": "
                << (n["powered"].get<bool>() ? "powered" : "unpowered") << '\n';
        }
        for (const auto& s : sinks) {
            out << "sink " << s["sink"].get<std::string>() << ": " << (s["lit"].get<bool>() ? "lit" : "unlit")
                << '\n';
        }
        if (outcome) {
            out << "outcome: " << circuit::to_string(*outcome) << '\n';
        }
        break;
    }
    return 0;
}

// study --------------------------------------------------------------------

int study_score(const Globals& g, const std::string& items_path, const std::string& responses_path,
                std::ostream& out) {
    const auto items = load_items(items_path);
    const auto responses = study::parse_responses(read_file(responses_path));
    const auto records = study::score_responses(items, responses);
    std::map<study::RecordStatus, std::size_t> counts;
    for (const auto& r : records) {
        ++counts[r.status];
    }
    const json summary{{"records", records.size()},
                       {"scored", counts[study::RecordStatus::Scored]},
                       {"excluded", counts[study::RecordStatus::Excluded]},
                       {"invalid", counts[study::RecordStatus::Invalid]}};
    switch (g.format) {
    case Format::Lines:
        out << study::format_records(records);
        break;
    case Format::Json: {
        json array = json::array();
        for (const auto& r : records) {
            array.push_back(study::to_json(r));
        }
        print_json(out, {{"records", array}, {"summary", summary}});
        break;
    }
    case Format::Text:
        for (const auto& r : records) {
            out << r.participant << ' ' << r.item << ' '
                << (r.choice.is_escape() ? std::string(study::kEscapeOption) : *r.choice.label) << ' '
                << study::to_string(r.status);
            if (r.normalized_score) {
                out << ' ' << fixed(*r.normalized_score);
            }
            out << '\n';
        }
        out << "records: " << summary["records"] << "  scored: " << summary["scored"]
            << "  excluded: " << summary["excluded"] << "  invalid: " << summary["invalid"] << '\n';
        break;
    }
    return 0;
}

int study_baseline(const Globals& g, std::uint64_t seed, const std::string& items_path, std::size_t samples,
                   std::ostream& out) {
    const auto items = load_items(items_path);
    const auto values = study::random_baseline(items, samples, seed);
    std::string canonical;
    for (double v : values) {
        char buffer[40];
        std::snprintf(buffer, sizeof buffer, "%.17g\n", v);
        canonical += buffer;
    }
    const auto digest = lens::sha256_hex(canonical);
    const double mean =
        values.empty() ? 0.0 : std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    json per_item = json::array();
    for (const auto& item : items) {
        const auto expected = study::expected_random_score(item);
        per_item.push_back({{"item", item.id}, {"expected_random_score", expected ? json(*expected) : json(nullptr)}});
    }
    switch (g.format) {
    case Format::Lines:
        for (const auto& row : per_item) {
            out << row.dump() << '\n';
        }
        break;
    case Format::Json:
        print_json(out, {{"seed", seed},
                         {"samples_per_item", samples},
                         {"samples", values.size()},
                         {"mean", mean},
                         {"digest", digest},
                         {"items", per_item}});
        break;
    case Format::Text:
        for (const auto& row : per_item) {
            out << row["item"].get<std::string>() << ": "
                << (row["expected_random_score"].is_null() ? "invalid"
                                                           : fixed(row["expected_random_score"].get<double>()))
                << '\n';
        }
        out << "seed: " << seed << "\nsamples: " << values.size() << "\nmean: " << fixed(mean)
            << "\ndigest: " << digest << '\n';
        break;
    }
    return 0;
}

struct StatsOptions {
    std::string records;
    std::vector<std::string> exclude;
    double max_mean_seconds = 60.0;
    std::string self_group = "self_learning";
    std::string explained_group = "machine_explained";
};

int study_stats(const Globals& g, const AppConfig& config, const StatsOptions& o, std::ostream& out) {
    const auto records = study::parse_records(read_file(o.records));
    std::set<std::string> excluded(o.exclude.begin(), o.exclude.end());
    std::set<std::string> slow;
    if (o.max_mean_seconds > 0.0) {
        std::map<std::string, std::pair<double, std::size_t>> times;
        for (const auto& r : records) {
            if (r.elapsed_ms) {
                auto& [sum, n] = times[r.participant];
                sum += *r.elapsed_ms;
                ++n;
            }
        }
        for (const auto& [participant, t] : times) {
            if (t.first / static_cast<double>(t.second) > o.max_mean_seconds * 1000.0) {
                slow.insert(participant);
            }
        }
    }
    excluded.insert(slow.begin(), slow.end());
    const auto self = study::participant_means(records, o.self_group, excluded);
    const auto explained = study::participant_means(records, o.explained_group, excluded);
    const auto effect = study::comprehension_effect(self, explained, config.mwu);
    const auto& t = effect.test;

    const json report{{"groups",
                       {{"self", {{"name", o.self_group}, {"n", self.size()}, {"mean", effect.mean_self}}},
                        {"explained",
                         {{"name", o.explained_group}, {"n", explained.size()}, {"mean", effect.mean_explained}}}}},
                      {"excluded_participants", excluded},
                      {"slow_participants", slow},
                      {"effect", effect.effect},
                      {"u", t.u},
                      {"u_b", t.u_b},
                      {"p_two_sided", t.p_two_sided},
                      {"cles", t.cles},
                      {"method", study::to_string(t.method)}};
    switch (g.format) {
    case Format::Lines:
        out << report.dump() << '\n';
        break;
    case Format::Json:
        print_json(out, report);
        break;
    case Format::Text:
        out << "excluded participants: " << excluded.size() << " (" << slow.size() << " over "
            << general(o.max_mean_seconds) << " s mean per trial)\n";
        out << o.self_group << ": n=" << self.size() << " mean=" << fixed(effect.mean_self) << '\n';
        out << o.explained_group << ": n=" << explained.size() << " mean=" << fixed(effect.mean_explained) << '\n';
        out << "effect: " << fixed(effect.effect) << '\n';
        out << "Mann-Whitney U=" << general(t.u) << " (" << study::to_string(t.method)
            << ") p=" << general(t.p_two_sided) << (t.p_two_sided < 0.001 ? " (p < 0.001)" : "")
            << " CLES=" << fixed(t.cles, 4) << '\n';
        break;
    }
    return 0;
}

int study_simulate(const Globals& g, std::uint64_t seed, const std::string& items_path, const std::string& kind,
                   std::size_t participants, const std::string& group, std::ostream& out) {
    const auto items = load_items(items_path);
    const auto responses =
        study::simulate_responses(items, study::parse_responder_kind(kind), participants, group, seed);
    if (g.format == Format::Json) {
        json array = json::array();
        for (const auto& r : responses) {
            array.push_back(study::to_json(r));
        }
        print_json(out, array);
    } else {
        out << study::format_responses(responses);
    }
    return 0;
}

// lens ---------------------------------------------------------------------

json stage_json(const lens::StageSummary& s) {
    return {{"planned", s.planned}, {"executed", s.executed}, {"reused", s.reused}, {"failed", s.failed}};
}

std::filesystem::path ledger_for(const AppConfig& config, const std::string& override_path) {
    return override_path.empty() ? config.ledger_path() : std::filesystem::path(override_path);
}

int lens_run(const Globals& g, const AppConfig& config, bool judge_only, bool no_judge,
             const std::string& ledger_override, std::ostream& out) {
    if (g.config.empty()) {
        throw InvalidArgumentError("lens commands need --config naming the model clients");
    }
    const auto plan = config.lens_plan();
    const auto path = ledger_for(config, ledger_override);
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    lens::RunLedger ledger(path);
    const auto clients = lens::make_clients(plan.clients());
    lens::RunSummary summary;
    if (judge_only) {
        summary = lens::run_judging(plan, clients, ledger);
    } else if (no_judge) {
        summary = lens::run_explanations(plan, clients, ledger);
    } else {
        summary = lens::run_pipeline(plan, clients, ledger);
    }
    const json report{{"ledger", path.string()},
                      {"interpretations", stage_json(summary.interpretations)},
                      {"consensus", stage_json(summary.consensus)},
                      {"judgements", stage_json(summary.judgements)}};
    if (g.format == Format::Text) {
        out << "ledger: " << path.string() << '\n';
        for (const char* stage : {"interpretations", "consensus", "judgements"}) {
            const auto& s = report[stage];
            out << stage << ": planned " << s["planned"] << ", executed " << s["executed"] << ", reused "
                << s["reused"] << ", failed " << s["failed"] << '\n';
        }
    } else if (g.format == Format::Lines) {
        out << report.dump() << '\n';
    } else {
        print_json(out, report);
    }
    const auto failed = summary.interpretations.failed + summary.consensus.failed + summary.judgements.failed;
    return failed > 0 ? 1 : 0;
}

int lens_report(const Globals& g, const AppConfig& config, const std::string& ledger_override,
                std::optional<double> alpha, std::ostream& out) {
    const auto path = ledger_for(config, ledger_override);
    if (!std::filesystem::exists(path)) {
        throw NotFoundError("no ledger at '" + path.string() + "'");
    }
    const lens::RunLedger ledger(path);
    const auto report = lens::build_report(ledger, alpha.value_or(config.lens.alpha));
    switch (g.format) {
    case Format::Text:
        out << lens::format_text(report);
        break;
    case Format::Json:
        print_json(out, lens::to_json(report));
        break;
    case Format::Lines:
        for (const auto& c : lens::to_json(report)["conditions"]) {
            out << c.dump() << '\n';
        }
        break;
    }
    return 0;
}

// serve --------------------------------------------------------------------

std::atomic<HttpServer*> g_server{nullptr};

extern "C" void stop_server(int) {
    if (auto* server = g_server.load()) {
        server->stop();
    }
}

int serve(const AppConfig& config, const std::string& host, int port, std::ostream& out) {
    auto content = StudyContent::load(config.server.trials, config.server.layout);
    StudyService service(std::move(content), config.data_dir, config.seed);
    HttpServer server(service);
    const int bound = server.bind(host, port);
    out << "listening on http://" << host << ":" << bound << '\n' << std::flush;
    g_server = &server;
    std::signal(SIGINT, stop_server);
    std::signal(SIGTERM, stop_server);
    server.listen();
    g_server = nullptr;
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fault diagnosis strategy, explanation pipeline and study service.", "faultlens"};
    app.require_subcommand(1);
    Globals g;
    std::string format = "text";
    app.add_option("--config", g.config, "JSON config file");
    auto* seed_option = app.add_option("--seed", g.seed, "Random seed (overrides the config)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "lines"}));

    std::string file;
    std::vector<std::uint32_t> hypotheses;
    auto* analyze_cmd = app.add_subcommand("analyze", "Evaluate every test of a circuit");
    analyze_cmd->add_option("file", file, "Circuit .facts file")->required();
    analyze_cmd->add_option("--hypotheses", hypotheses, "Candidate gates, comma separated")->delimiter(',');

    std::uint32_t fault = 0;
    std::string test;
    auto* simulate_cmd = app.add_subcommand("simulate", "Simulate a fault and an optional injection");
    simulate_cmd->add_option("file", file, "Circuit .facts file")->required();
    simulate_cmd->add_option("--fault", fault, "Faulty gate")->required();
    simulate_cmd->add_option("--test", test, "Test point label to inject power at");

    auto* study_cmd = app.add_subcommand("study", "Trial scoring and statistics");
    study_cmd->require_subcommand(1);
    std::string items;
    std::string responses;
    auto* score_cmd = study_cmd->add_subcommand("score", "Score a response log");
    score_cmd->add_option("--responses", responses, "Response log (faultlens.response/1 lines)")->required();
    score_cmd->add_option("--items", items, "Trial set; the shipped set by default");
    std::size_t samples = 1000;
    auto* baseline_cmd = study_cmd->add_subcommand("baseline", "Random-responder score samples");
    baseline_cmd->add_option("--items", items, "Trial set; the shipped set by default");
    baseline_cmd->add_option("--samples", samples, "Samples per item")->check(CLI::PositiveNumber);
    StatsOptions stats;
    auto* stats_cmd = study_cmd->add_subcommand("stats", "Comprehension effect between two groups");
    stats_cmd->add_option("--records", stats.records, "Trial records (faultlens.trial_record/1 lines)")->required();
    stats_cmd->add_option("--exclude", stats.exclude, "Participants to drop, comma separated")->delimiter(',');
    stats_cmd->add_option("--max-mean-seconds", stats.max_mean_seconds,
                          "Drop participants slower than this mean per trial; 0 disables");
    stats_cmd->add_option("--self-group", stats.self_group, "Control group name");
    stats_cmd->add_option("--explained-group", stats.explained_group, "Treatment group name");
    std::string kind;
    std::string group;
    std::size_t participants = 20;
    auto* sim_cmd = study_cmd->add_subcommand("simulate", "Synthetic response log");
    sim_cmd->add_option("--kind", kind, "Responder")->required()->check(CLI::IsMember({"random", "optimal"}));
    sim_cmd->add_option("--group", group, "Group name written to each response")->required();
    sim_cmd->add_option("--participants", participants, "Number of participants")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--items", items, "Trial set; the shipped set by default");

    auto* lens_cmd = app.add_subcommand("lens", "Explanation pipeline");
    lens_cmd->require_subcommand(1);
    std::string ledger;
    bool no_judge = false;
    std::optional<double> alpha;
    double alpha_value = 0.05;
    auto* run_cmd = lens_cmd->add_subcommand("run", "Interpretation, consensus and judging");
    run_cmd->add_option("--ledger", ledger, "Run ledger; from the config by default");
    run_cmd->add_flag("--no-judge", no_judge, "Skip the judging stage");
    auto* judge_cmd = lens_cmd->add_subcommand("judge", "Judge the explanations already in the ledger");
    judge_cmd->add_option("--ledger", ledger, "Run ledger; from the config by default");
    auto* report_cmd = lens_cmd->add_subcommand("report", "Score summaries, ANOVA and Tukey HSD");
    report_cmd->add_option("--ledger", ledger, "Run ledger; from the config by default");
    auto* alpha_option = report_cmd->add_option("--alpha", alpha_value, "Significance level")->check(CLI::Range(0.0, 1.0));

    std::string host;
    int port = -1;
    std::string data_dir;
    auto* serve_cmd = app.add_subcommand("serve", "HTTP JSON API for the trial UI");
    serve_cmd->add_option("--host", host, "Bind address; from the config by default");
    serve_cmd->add_option("--port", port, "Port, 0 for any free port; from the config by default")
        ->check(CLI::Range(0, 65535));
    serve_cmd->add_option("--data-dir", data_dir, "Session store; from the config by default");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    g.seed_given = seed_option->count() > 0;
    g.format = format == "json" ? Format::Json : format == "lines" ? Format::Lines : Format::Text;
    if (alpha_option->count() > 0) {
        alpha = alpha_value;
    }

    try {
        const auto config = app_config(g);
        if (*analyze_cmd) {
            return analyze(g, file, hypotheses, out, err);
        }
        if (*simulate_cmd) {
            return simulate(g, file, fault, test, out);
        }
        if (*score_cmd) {
            return study_score(g, items, responses, out);
        }
        if (*baseline_cmd) {
            return study_baseline(g, config.seed, items, samples, out);
        }
        if (*stats_cmd) {
            return study_stats(g, config, stats, out);
        }
        if (*sim_cmd) {
            return study_simulate(g, config.seed, items, kind, participants, group, out);
        }
        if (*run_cmd) {
            return lens_run(g, config, false, no_judge, ledger, out);
        }
        if (*judge_cmd) {
            return lens_run(g, config, true, false, ledger, out);
        }
        if (*report_cmd) {
            return lens_report(g, config, ledger, alpha, out);
        }
        if (*serve_cmd) {
            auto effective = config;
            if (!data_dir.empty()) {
                effective.data_dir = data_dir;
            }
            return serve(effective, host.empty() ? config.server.host : host, port < 0 ? config.server.port : port,
                         out);
        }
    } catch (const faultlens::ParseError& e) {
        err << "faultlens: parse error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidCircuitError& e) {
        err << "faultlens: invalid circuit: " << e.what() << '\n';
        return 2;
    } catch (const InvalidArgumentError& e) {
        err << "faultlens: invalid argument: " << e.what() << '\n';
        return 2;
    } catch (const NotFoundError& e) {
        err << "faultlens: not found: " << e.what() << '\n';
        return 2;
    } catch (const ContradictoryEvidenceError& e) {
        err << "faultlens: " << e.what() << '\n';
        return 2;
    } catch (const IndistinguishableError& e) {
        err << "faultlens: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "faultlens: error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

}  // namespace faultlens::service
