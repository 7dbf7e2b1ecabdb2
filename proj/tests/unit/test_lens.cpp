/// @file test_lens.cpp
/// @brief Templates, anonymisation, judge ratings, clients, pipeline runs and the score report.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <unistd.h>

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <httplib.h>
#include <json.hpp>

#include "faultlens/assets.hpp"
#include "faultlens/error.hpp"
#include "faultlens/lens/anonymize.hpp"
#include "faultlens/lens/anova.hpp"
#include "faultlens/lens/clients.hpp"
#include "faultlens/lens/pipeline.hpp"
#include "faultlens/lens/rating.hpp"
#include "faultlens/lens/report.hpp"
#include "faultlens/lens/templates.hpp"

using namespace faultlens;
using namespace faultlens::lens;
using nlohmann::json;
using Catch::Approx;

namespace {

const std::filesystem::path kTestData{FAULTLENS_TEST_DATA_DIR};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

/// Fresh directory under the system temp dir, removed on destruction.
struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) {
        static std::atomic<int> counter{0};
        path = std::filesystem::temp_directory_path() /
               ("faultlens_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

ClientSpec fixture(const std::string& name, ClientRole role, const std::filesystem::path& dir) {
    ClientSpec spec;
    spec.name = name;
    spec.role = role;
    spec.type = ClientType::Fixture;
    spec.fixture_dir = dir;
    return spec;
}

ClientSpec echo(const std::string& name, ClientRole role) {
    ClientSpec spec;
    spec.name = name;
    spec.role = role;
    spec.type = ClientType::Echo;
    return spec;
}

/// 2 coding clients, 1 reasoning client and 3 judges, all fixture-backed.
LensPlan fixture_plan() {
    const auto dir = kTestData / "fixtures" / "lens";
    LensPlan plan;
    plan.tasks = {"circuit_1"};
    plan.coding = {fixture("coder_a", ClientRole::Coding, dir / "coder_a"),
                   fixture("coder_b", ClientRole::Coding, dir / "coder_b")};
    plan.reasoning = fixture("reasoner", ClientRole::Reasoning, dir / "reasoner");
    plan.judges = {fixture("judge_a", ClientRole::Judging, dir / "judge_a"),
                   fixture("judge_b", ClientRole::Judging, dir / "judge_b"),
                   fixture("judge_c", ClientRole::Judging, dir / "judge_c")};
    plan.retry.initial_backoff = std::chrono::milliseconds(0);
    return plan;
}

std::size_t count_stage(const RunLedger& ledger, const std::string& stage) {
    std::size_t n = 0;
    for (const auto& record : ledger.current()) {
        n += record.value("stage", "") == stage ? 1 : 0;
    }
    return n;
}

/// Fails the first `failures` calls, then answers "ok".
class FlakyClient : public ModelClient {
  public:
    explicit FlakyClient(int failures) : failures_(failures) {}
    [[nodiscard]] const std::string& name() const override { return name_; }
    [[nodiscard]] std::string complete(const ModelRequest&) override {
        ++calls;
        if (calls <= failures_) {
            throw TransportError("temporarily unavailable");
        }
        return "ok";
    }
    int calls = 0;

  private:
    std::string name_ = "flaky";
    int failures_;
};

}  // namespace

TEST_CASE("Rendered prompt pairs match the golden files", "[templates]") {
    const auto bindings = json::parse(read_file(kTestData / "golden" / "bindings.json"));
    REQUIRE(template_pair_ids().size() == 8);
    for (const auto& pair : template_pair_ids()) {
        INFO("pair " << pair);
        REQUIRE(bindings.contains(pair));
        Bindings b;
        for (const auto& [key, value] : bindings[pair].items()) {
            b[key] = value.get<std::string>();
        }
        const auto prompt = render_prompt(pair, b);
        CHECK(prompt.system_text == read_file(kTestData / "golden" / (pair + ".system.txt")));
        CHECK(prompt.user_text == read_file(kTestData / "golden" / (pair + ".user.txt")));
    }
}

TEST_CASE("Template rendering", "[templates]") {
    const auto coding = render_prompt("coding", {{"prolog", "a."}});
    CHECK(coding.user_text.find("```prolog\na.\n```") != std::string::npos);

    const auto judge = render_prompt(
        "judge", {{"instructions", "I"}, {"question", "Q"}, {"answer_ref", "R"}, {"answer", "A"}});
    CHECK(judge.user_text.find("[The Start of Reference Answer]") != std::string::npos);

    // Bound values are inserted once and never rescanned.
    const auto literal = render_prompt("coding", {{"prolog", "{prolog} {samples}"}});
    CHECK(literal.user_text.find("{prolog} {samples}") != std::string::npos);

    for (const auto& id : template_ids()) {
        for (const auto& name : placeholders(template_text(id))) {
            CHECK(known_placeholders().contains(name));
        }
    }
    CHECK(placeholders("{a} {prolog} {samples} {prolog}") == std::vector<std::string>{"prolog", "samples"});
}

TEST_CASE("Template errors", "[templates]") {
    try {
        (void)render_prompt("consensus", {{"description", "d"}, {"domain_context", "g"}});
        FAIL("expected missing bindings");
    } catch (const InvalidArgumentError& e) {
        const std::string message = e.what();
        CHECK(message.find("samples") != std::string::npos);
        CHECK(message.find("example") != std::string::npos);
    }
    try {
        (void)render_prompt("coding", {{"prolog", "a."}, {"samples", "x"}});
        FAIL("expected an unknown placeholder error");
    } catch (const InvalidArgumentError& e) {
        CHECK(std::string(e.what()).find("unknown placeholder") != std::string::npos);
    }
    CHECK_THROWS_AS(template_text("coding_v2"), NotFoundError);
    CHECK_THROWS_AS(template_pair("summary"), NotFoundError);
    CHECK_THROWS_AS(render_prompt("summary", {}), NotFoundError);
}

TEST_CASE("Predicate anonymisation", "[anonymize]") {
    const auto single = anonymize_predicates("exclusively_powers(A,B) :- is_connected(A,B).");
    CHECK(single.text == "p1(A,B) :- is_connected(A,B).");
    REQUIRE(single.renames.size() == 1);
    CHECK(single.renames[0] == Rename{"exclusively_powers", "p1"});

    const auto empty = anonymize_predicates("");
    CHECK(empty.text.empty());
    CHECK(empty.renames.empty());

    const auto mutual = anonymize_predicates(
        "even(0).\neven(N) :- N > 0, M is N - 1, odd(M).\nodd(N) :- N > 0, M is N - 1, even(M).\n");
    CHECK(mutual.text == "p1(0).\np1(N) :- N > 0, M is N - 1, p2(M).\np2(N) :- N > 0, M is N - 1, p1(M).\n");

    const auto invented = anonymize_predicates("q(X) :- inv1(X), gate(X).");
    CHECK(invented.text == "p1(X) :- p2(X), gate(X).");

    // p1 is taken by the comment, so numbering skips it.
    const auto taken = anonymize_predicates("% see p1\nfoo(a).");
    CHECK(taken.text == "% see p1\np2(a).");

    const auto quoted = anonymize_predicates("foo('foo', \"foo\"). /* foo/1 */ bar :- foo(x, y). % foobar");
    CHECK(quoted.text == "p1('foo', \"foo\"). /* p1/1 */ p2 :- p1(x, y). % foobar");
}

TEST_CASE("Anonymisation round-trips every shipped program", "[anonymize]") {
    for (const auto& name : assets::list()) {
        if (!name.starts_with("programs/")) {
            continue;
        }
        const std::string program(assets::get(name));
        for (std::uint64_t seed : {0ULL, 17ULL, 123456789ULL}) {
            INFO(name << " seed " << seed);
            const auto anon = anonymize_predicates(program, seed);
            CHECK_FALSE(anon.renames.empty());
            CHECK(deanonymize(anon.text, anon.renames) == program);
            for (const auto& r : anon.renames) {
                CHECK(anon.text.find(r.original + "(") == std::string::npos);
            }
            CHECK(anonymize_predicates(program, seed).text == anon.text);
        }
    }
    const auto& program = find_task("circuit_3").program;
    CHECK(anonymize_predicates(program, 5).text != anonymize_predicates(program, 0).text);
}

TEST_CASE("Anonymisation errors carry a position", "[anonymize]") {
    auto position = [](std::string_view text) {
        try {
            (void)anonymize_predicates(text);
        } catch (const ParseError& e) {
            return std::pair{e.line(), e.column()};
        }
        return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(position("foo(a).\nbar(b") != std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(position("foo(a).\n'bar(b).").first == 2);
    CHECK(position("foo(a).\n/* open").first == 2);
    CHECK(position("foo(a)).").first == 1);
    CHECK(position("foo(a).\n\nX :- foo(X).").first == 3);
    CHECK(position("foo(a)").first == 1);
}

TEST_CASE("Deanonymisation of free text", "[anonymize]") {
    const std::vector<Rename> renames{{"partition", "p1"}, {"optimal_test", "p2"}};
    CHECK(deanonymize("Predicate p1 splits; p2 calls p1. p10 stays.", renames) ==
          "Predicate partition splits; optimal_test calls partition. p10 stays.");
    CHECK(deanonymize("", renames).empty());
}

TEST_CASE("Judge rating extraction", "[rating]") {
    CHECK(parse_rating("Good answer.\nRating: [[5]]") == 5);
    CHECK(parse_rating("Format: \"Rating: [[5]]\"\nVerdict: Rating: [[8]]") == 8);
    CHECK(parse_rating("Rating: [[ 10 ]]") == 10);
    CHECK_THROWS_AS(parse_rating("Rating: [[11]]"), InvalidArgumentError);
    CHECK_THROWS_AS(parse_rating("Rating: [[0]]"), InvalidArgumentError);
    CHECK_THROWS_AS(parse_rating("I would give it 7."), InvalidArgumentError);
    CHECK_FALSE(try_parse_rating("no verdict").has_value());
    CHECK(try_parse_rating("Rating:[[3]]") == 3);
}

TEST_CASE("SHA-256 and request digests", "[clients]") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    const ModelRequest a{"m", "s", "u", 0.0, 0};
    ModelRequest b = a;
    CHECK(request_digest(a) == request_digest(b));
    b.repetition = 1;
    CHECK(request_digest(a) != request_digest(b));
    b = a;
    b.temperature = 0.7;
    CHECK(request_digest(a) != request_digest(b));
}

TEST_CASE("Fixture client", "[clients]") {
    TempDir dir("fixture");
    const ModelRequest request{"fx", "sys", "user", 0.0, 0};
    FixtureClient client("fx", dir.path);
    CHECK_THROWS_AS(client.complete(request), TransportError);

    std::ofstream(dir.path / "default.txt") << "fallback";
    CHECK(client.complete(request) == "fallback");

    std::ofstream(dir.path / (request_digest(request) + ".txt")) << "specific";
    CHECK(client.complete(request) == "specific");
    CHECK(client.complete({"fx", "sys", "user", 0.0, 1}) == "fallback");
}

TEST_CASE("Echo client is deterministic and judges with a rating", "[clients]") {
    EchoClient judge("j", ClientRole::Judging);
    const ModelRequest request{"j", "s", "u", 0.0, 0};
    CHECK(judge.complete(request) == judge.complete(request));
    CHECK(try_parse_rating(judge.complete(request)).has_value());
    EchoClient coder("c", ClientRole::Coding);
    CHECK_FALSE(coder.complete(request).empty());
}

TEST_CASE("Retry with exponential backoff", "[clients]") {
    RetryPolicy policy;
    policy.max_attempts = 4;
    policy.initial_backoff = std::chrono::milliseconds(100);
    std::vector<long long> sleeps;
    auto record = [&](std::chrono::milliseconds d) { sleeps.push_back(d.count()); };

    FlakyClient recovers(2);
    CHECK(complete_with_retry(recovers, {}, policy, record) == "ok");
    CHECK(recovers.calls == 3);
    CHECK(sleeps == std::vector<long long>{100, 200});

    sleeps.clear();
    FlakyClient broken(10);
    CHECK_THROWS_AS(complete_with_retry(broken, {}, policy, record), TransportError);
    CHECK(broken.calls == 4);
    CHECK(sleeps == std::vector<long long>{100, 200, 400});
}

TEST_CASE("HTTP chat client against a local endpoint", "[clients]") {
    httplib::Server server;
    json seen;
    std::string auth;
    server.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
        seen = json::parse(req.body);
        auth = req.get_header_value("Authorization");
        json reply{{"choices", {{{"message", {{"role", "assistant"}, {"content", "hello back"}}}}}}};
        res.set_content(reply.dump(), "application/json");
    });
    server.Post("/broken", [](const httplib::Request&, httplib::Response& res) {
        res.status = 503;
        res.set_content("busy", "text/plain");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread thread([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    ::setenv("FAULTLENS_TEST_KEY", "secret-token", 1);
    HttpEndpoint endpoint;
    endpoint.base_url = "http://127.0.0.1:" + std::to_string(port);
    endpoint.model = "test-model";
    endpoint.api_key_env = "FAULTLENS_TEST_KEY";
    endpoint.timeout = std::chrono::seconds(5);
    HttpChatClient client("remote", endpoint);
    CHECK(client.complete({"remote", "be brief", "hi", 0.3, 0}) == "hello back");
    CHECK(seen["model"] == "test-model");
    CHECK(seen["messages"][0]["role"] == "system");
    CHECK(seen["messages"][1]["content"] == "hi");
    CHECK(seen["temperature"].get<double>() == Approx(0.3));
    CHECK(auth == "Bearer secret-token");

    endpoint.path = "/broken";
    HttpChatClient broken("remote", endpoint);
    CHECK_THROWS_AS(broken.complete({"remote", "s", "u", 0.0, 0}), TransportError);

    server.stop();
    thread.join();

    HttpChatClient unreachable("remote", endpoint);
    CHECK_THROWS_AS(unreachable.complete({"remote", "s", "u", 0.0, 0}), TransportError);
}

TEST_CASE("Condition ids and prompt pairs", "[pipeline]") {
    const auto lattice = default_condition_lattice();
    REQUIRE(lattice.size() == 8);
    std::set<std::string> ids;
    std::set<std::string> pairs;
    for (const auto& c : lattice) {
        ids.insert(c.id());
        pairs.insert(c.prompt_pair());
        CHECK(Condition::parse(c.id()) == c);
    }
    CHECK(ids.size() == 8);
    CHECK(pairs == std::set<std::string>{"consensus", "consensus_no_gc", "consensus_no_lc", "consensus_no_gc_no_lc"});
    CHECK(Condition::parse("lens_ap_lc").prompt_pair() == "consensus_no_gc");
    CHECK(Condition::parse("direct_np").prompt_pair() == "direct");
    CHECK(Condition::parse("direct_ap_gc_lc").prompt_pair() == "direct_lc");
    CHECK_THROWS_AS(Condition::parse("lens_xp_gc"), InvalidArgumentError);
    CHECK_THROWS_AS(Condition::parse("lens_np_lc_gc"), InvalidArgumentError);
}

TEST_CASE("Shipped lens tasks", "[pipeline]") {
    REQUIRE(shipped_tasks().size() >= 1);
    for (const auto& task : shipped_tasks()) {
        CHECK_FALSE(task.program.empty());
        CHECK_FALSE(task.reference.empty());
        CHECK_NOTHROW(anonymize_predicates(task.program));
    }
    CHECK_THROWS_AS(find_task("nope"), NotFoundError);
}

TEST_CASE("One condition: 6 interpretations, 1 consensus, 9 judgements", "[pipeline]") {
    auto plan = fixture_plan();
    plan.conditions = {Condition::parse("lens_np_gc_lc")};
    const auto clients = make_clients(plan.clients());
    RunLedger ledger;
    const auto summary = run_pipeline(plan, clients, ledger);
    CHECK(summary.interpretations.planned == 6);
    CHECK(summary.interpretations.executed == 6);
    CHECK(summary.consensus.executed == 1);
    CHECK(summary.judgements.executed == 9);
    CHECK(summary.judgements.failed == 0);
    CHECK(count_stage(ledger, "interpretation") == 6);
    CHECK(count_stage(ledger, "consensus") == 1);
    CHECK(count_stage(ledger, "judgement") == 9);

    const auto runs = collect_runs(ledger);
    REQUIRE(runs.size() == 1);
    const auto& run = runs[0];
    CHECK(run.interpretations.size() == 6);
    CHECK(run.explanation == read_file(kTestData / "fixtures/lens/reasoner/default.txt"));
    REQUIRE(run.scores.size() == 9);
    std::multiset<int> ratings;
    for (const auto& s : run.scores) {
        REQUIRE(s.rating.has_value());
        ratings.insert(*s.rating);
    }
    CHECK(ratings == std::multiset<int>{6, 6, 6, 7, 7, 7, 8, 8, 8});

    // The consensus prompt lists interpretations in client-then-repetition order.
    for (const auto& record : ledger.current()) {
        if (record["stage"] == "consensus") {
            const std::string system = record["system"];
            const auto a = read_file(kTestData / "fixtures/lens/coder_a/default.txt");
            const auto b = read_file(kTestData / "fixtures/lens/coder_b/default.txt");
            const auto joined = a + "\n\n" + a + "\n\n" + a + "\n\n" + b + "\n\n" + b + "\n\n" + b;
            CHECK(system.find(joined) != std::string::npos);
            CHECK(system.find(find_task("circuit_1").domain_context) != std::string::npos);
        }
    }
}

TEST_CASE("Full lattice shares interpretations per naming", "[pipeline]") {
    auto plan = fixture_plan();
    const auto clients = make_clients(plan.clients());
    RunLedger ledger;
    const auto summary = run_pipeline(plan, clients, ledger);
    CHECK(summary.interpretations.executed == 12);
    CHECK(summary.consensus.executed == 8);
    CHECK(summary.judgements.executed == 72);
    CHECK(build_report(ledger).conditions.size() == 8);

    std::size_t anonymized = 0;
    for (const auto& record : ledger.current()) {
        if (record["stage"] == "interpretation" && record["naming"] == "anonymized") {
            ++anonymized;
            const std::string user = record["user"];
            CHECK(user.find("exclusively_powers") == std::string::npos);
            CHECK(user.find("p1(") != std::string::npos);
        }
    }
    CHECK(anonymized == 6);
}

TEST_CASE("Resuming a run reuses every cell", "[pipeline]") {
    TempDir dir("ledger");
    const auto path = dir.path / "run.jsonl";
    auto plan = fixture_plan();
    plan.conditions = {Condition::parse("lens_np_gc_lc"), Condition::parse("lens_ap")};
    const auto clients = make_clients(plan.clients());
    std::size_t lines = 0;
    {
        RunLedger ledger(path);
        const auto first = run_pipeline(plan, clients, ledger);
        CHECK(first.judgements.executed == 18);
        lines = ledger.size();
    }
    const auto before = read_file(path);
    RunLedger reopened(path);
    CHECK(reopened.size() == lines);
    const auto second = run_pipeline(plan, clients, reopened);
    CHECK(second.interpretations.executed == 0);
    CHECK(second.interpretations.reused == 12);
    CHECK(second.consensus.executed == 0);
    CHECK(second.judgements.executed == 0);
    CHECK(second.judgements.reused == 18);
    CHECK(read_file(path) == before);
}

TEST_CASE("Ledgers are byte-identical across parallelism", "[pipeline]") {
    auto plan = fixture_plan();
    plan.conditions = {Condition::parse("lens_np_gc_lc"), Condition::parse("lens_ap_gc")};
    plan.parallelism = 1;
    RunLedger serial;
    (void)run_pipeline(plan, make_clients(plan.clients()), serial);
    plan.parallelism = 8;
    RunLedger parallel;
    (void)run_pipeline(plan, make_clients(plan.clients()), parallel);
    CHECK(serial.text() == parallel.text());
    CHECK_FALSE(serial.text().empty());
}

TEST_CASE("Failed cells are recorded and retried on request", "[pipeline]") {
    TempDir empty("empty_fixture");
    auto plan = fixture_plan();
    plan.conditions = {Condition::parse("lens_np_gc_lc")};
    plan.coding = {fixture("coder_a", ClientRole::Coding, empty.path)};
    plan.retry.max_attempts = 2;
    RunLedger ledger;
    auto summary = run_pipeline(plan, make_clients(plan.clients()), ledger);
    CHECK(summary.interpretations.failed == 3);
    CHECK(summary.consensus.failed == 1);
    CHECK(summary.judgements.planned == 0);
    bool noted = false;
    for (const auto& record : ledger.current()) {
        if (record["stage"] == "consensus") {
            CHECK(record["status"] == "failed");
            noted = record["error"] == "no interpretations available";
        }
    }
    CHECK(noted);
    CHECK(build_report(ledger).failed_cells == 4);

    // Without retry_failed the failures stand; with it they are re-run.
    const auto size = ledger.size();
    summary = run_explanations(plan, make_clients(plan.clients()), ledger);
    CHECK(summary.interpretations.executed == 0);
    CHECK(ledger.size() == size);

    std::ofstream(empty.path / "default.txt") << "Now it answers.";
    plan.retry_failed = true;
    summary = run_pipeline(plan, make_clients(plan.clients()), ledger);
    CHECK(summary.interpretations.executed == 3);
    CHECK(summary.interpretations.failed == 0);
    CHECK(summary.consensus.executed == 1);
    CHECK(summary.judgements.executed == 9);
    CHECK(build_report(ledger).failed_cells == 1);
}

TEST_CASE("Direct prompting skips the coding clients", "[pipeline]") {
    auto plan = fixture_plan();
    plan.conditions = {Condition::parse("direct_np_gc_lc"), Condition::parse("direct_ap")};
    RunLedger ledger;
    const auto summary = run_pipeline(plan, make_clients(plan.clients()), ledger);
    CHECK(summary.interpretations.planned == 0);
    CHECK(summary.consensus.executed == 2);
    CHECK(summary.judgements.executed == 18);
    const auto& task = find_task("circuit_1");
    for (const auto& record : ledger.current()) {
        if (record["stage"] != "consensus") {
            continue;
        }
        const std::string system = record["system"];
        const std::string user = record["user"];
        if (record["condition"] == "direct_np_gc_lc") {
            CHECK(system.find(task.domain_context) != std::string::npos);
            CHECK(user.find(task.example) != std::string::npos);
        } else {
            // Without global context the program listing takes its place.
            CHECK(system.find(anonymize_predicates(task.program).text) != std::string::npos);
            CHECK(user.find(task.example) == std::string::npos);
        }
        CHECK(record["inputs"].empty());
    }
}

TEST_CASE("Judge responses without a rating are flagged", "[pipeline][report]") {
    TempDir silent("silent_judge");
    std::ofstream(silent.path / "default.txt") << "A fine explanation, I think.";
    auto plan = fixture_plan();
    plan.conditions = {Condition::parse("lens_np_gc_lc"), Condition::parse("lens_np")};
    plan.judges.push_back(fixture("judge_silent", ClientRole::Judging, silent.path));
    RunLedger ledger;
    (void)run_pipeline(plan, make_clients(plan.clients()), ledger);

    std::size_t flagged = 0;
    for (const auto& record : ledger.current()) {
        if (record["stage"] == "judgement" && record["judge"] == "judge_silent") {
            CHECK(record["flagged"] == true);
            CHECK(record["rating"].is_null());
            ++flagged;
        }
    }
    CHECK(flagged == 6);

    const auto report = build_report(ledger);
    REQUIRE(report.conditions.size() == 2);
    for (const auto& c : report.conditions) {
        CHECK(c.flagged == 3);
        CHECK(c.scores == 9);
        CHECK(c.mean == Approx(7.0));
    }
    REQUIRE(report.anova.has_value());
    CHECK(report.anova->f == Approx(0.0).margin(1e-12));
    REQUIRE(report.tukey.has_value());
    CHECK(report.tukey->comparisons.size() == 1);
    CHECK_FALSE(report.tukey->comparisons[0].significant);
    CHECK(report.top_quartile.size() == 2);

    const auto j = to_json(report);
    CHECK(j["conditions"].size() == 2);
    CHECK(j["conditions"][0]["flagged"] == 3);
    CHECK(format_text(report).find("lens_np_gc_lc") != std::string::npos);
}

TEST_CASE("Report with a single condition explains the missing tables", "[report]") {
    auto plan = fixture_plan();
    plan.conditions = {Condition::parse("lens_np_gc_lc")};
    RunLedger ledger;
    (void)run_pipeline(plan, make_clients(plan.clients()), ledger);
    const auto report = build_report(ledger);
    CHECK_FALSE(report.anova.has_value());
    CHECK_FALSE(report.statistics_note.empty());
    CHECK(to_json(report).contains("statistics_note"));
}

TEST_CASE("Report ranks the top quartile with echo clients", "[report]") {
    LensPlan plan;
    plan.tasks = {"circuit_1", "circuit_2", "circuit_3"};
    plan.coding = {echo("c1", ClientRole::Coding)};
    plan.coding_repetitions = 1;
    plan.reasoning = echo("r", ClientRole::Reasoning);
    plan.judges = {echo("j1", ClientRole::Judging), echo("j2", ClientRole::Judging)};
    plan.judge_repetitions = 2;
    RunLedger ledger;
    (void)run_pipeline(plan, make_clients(plan.clients()), ledger);
    const auto report = build_report(ledger);
    CHECK(report.conditions.size() == 8);
    REQUIRE(report.anova.has_value());
    REQUIRE(report.tukey.has_value());
    CHECK(report.tukey->comparisons.size() == 28);

    const auto runs = collect_runs(ledger);
    REQUIRE(runs.size() == 24);
    std::vector<double> means;
    for (const auto& run : runs) {
        double sum = 0;
        for (const auto& s : run.scores) {
            sum += *s.rating;
        }
        means.push_back(sum / static_cast<double>(run.scores.size()));
    }
    std::sort(means.begin(), means.end());
    // Linear interpolation at position 0.75 * (n - 1).
    const double pos = 0.75 * static_cast<double>(means.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const double threshold = means[lo] + (pos - static_cast<double>(lo)) * (means[lo + 1] - means[lo]);
    const auto expected = static_cast<std::size_t>(
        std::count_if(means.begin(), means.end(), [&](double m) { return m >= threshold; }));
    REQUIRE(report.top_quartile.size() == expected);
    for (std::size_t i = 0; i + 1 < report.top_quartile.size(); ++i) {
        CHECK(report.top_quartile[i].mean_rating >= report.top_quartile[i + 1].mean_rating);
    }
}

TEST_CASE("Incomplete beta agrees with Boost", "[anova]") {
    for (double a : {0.5, 1.0, 2.5, 7.0, 30.0}) {
        for (double b : {0.5, 1.5, 4.0, 12.0, 60.0}) {
            for (double x : {0.0, 0.01, 0.2, 0.5, 0.77, 0.99, 1.0}) {
                INFO(a << " " << b << " " << x);
                CHECK(regularized_incomplete_beta(a, b, x) ==
                      Approx(boost::math::ibeta(a, b, x)).margin(1e-8));
            }
        }
    }
    CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5), InvalidArgumentError);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, 1.5), InvalidArgumentError);
}

TEST_CASE("One-way ANOVA", "[anova]") {
    const std::vector<Sample> groups{{1, 2, 3}, {4, 5, 6}};
    const auto r = one_way_anova(groups);
    CHECK(r.f == Approx(13.5));
    CHECK(r.df_between == 1);
    CHECK(r.df_within == 4);
    CHECK(r.ss_between == Approx(13.5));
    CHECK(r.ss_within == Approx(4.0));
    const boost::math::fisher_f_distribution<double> dist(1.0, 4.0);
    CHECK(r.p == Approx(boost::math::cdf(boost::math::complement(dist, 13.5))).margin(1e-3));
    CHECK(r.p == Approx(boost::math::cdf(boost::math::complement(dist, 13.5))).margin(1e-10));

    const std::vector<Sample> same{{1, 2, 3}, {1, 2, 3}, {3, 2, 1}};
    const auto flat = one_way_anova(same);
    CHECK(flat.f == 0.0);
    CHECK(flat.p == Approx(1.0));

    CHECK_THROWS_AS(one_way_anova(std::vector<Sample>{{1, 1}, {2, 2}}), InvalidArgumentError);
    CHECK_THROWS_AS(one_way_anova(std::vector<Sample>{{1, 2}}), InvalidArgumentError);
    CHECK_THROWS_AS(one_way_anova(std::vector<Sample>{{1, 2}, {3}}), InvalidArgumentError);
    CHECK_THROWS_AS(one_way_anova(std::vector<Sample>{{1, 2}, {3, NAN}}), InvalidArgumentError);
}

TEST_CASE("Property: ANOVA is invariant under shift and positive scale", "[property]") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::uniform_int_distribution<int> sizes(2, 8);
    for (int i = 0; i < 200; ++i) {
        std::vector<Sample> groups(3);
        for (auto& g : groups) {
            for (int n = sizes(rng); n > 0; --n) {
                g.push_back(noise(rng));
            }
        }
        const double shift = noise(rng) * 10;
        const double scale = 0.1 + std::abs(noise(rng)) * 5;
        auto moved = groups;
        for (auto& g : moved) {
            for (auto& v : g) {
                v = v * scale + shift;
            }
        }
        const auto a = one_way_anova(groups);
        const auto b = one_way_anova(moved);
        CHECK(b.f == Approx(a.f).epsilon(1e-8));
        CHECK(b.p == Approx(a.p).margin(1e-9));
        const boost::math::fisher_f_distribution<double> dist(static_cast<double>(a.df_between),
                                                              static_cast<double>(a.df_within));
        CHECK(a.p == Approx(boost::math::cdf(boost::math::complement(dist, a.f))).margin(1e-8));
    }
}

TEST_CASE("Studentized range critical values", "[anova]") {
    // Published table entries.
    CHECK(studentized_range_critical(0.05, 3, 10) == Approx(3.877).margin(1e-3));
    CHECK(studentized_range_critical(0.05, 2, 20) == Approx(2.950).margin(1e-3));
    CHECK(studentized_range_critical(0.01, 4, 30) == Approx(4.799).margin(2e-3));
    // Untabulated df falls back to the next lower tabulated one.
    CHECK(studentized_range_critical(0.05, 3, 33) == studentized_range_critical(0.05, 3, 30));
    CHECK(studentized_range_critical(0.05, 3, 1e9) <= studentized_range_critical(0.05, 3, 120));
    try {
        (void)studentized_range_critical(0.02, 3, 10);
        FAIL("expected an untabulated alpha");
    } catch (const InvalidArgumentError& e) {
        CHECK(std::string(e.what()).find("alpha not tabulated") != std::string::npos);
    }
    CHECK_THROWS_AS(studentized_range_critical(0.05, 1, 10), InvalidArgumentError);
    CHECK_THROWS_AS(studentized_range_critical(0.05, 21, 10), InvalidArgumentError);
    CHECK_THROWS_AS(studentized_range_critical(0.05, 3, 1), InvalidArgumentError);
}

TEST_CASE("Tukey HSD", "[anova]") {
    const std::vector<Sample> same{{1, 2, 3}, {1, 2, 3}, {2, 1, 3}};
    const auto flat = tukey_hsd(same, 0.05);
    REQUIRE(flat.comparisons.size() == 3);
    for (const auto& c : flat.comparisons) {
        CHECK_FALSE(c.significant);
    }

    const std::vector<Sample> apart{{1, 2, 3, 2, 1}, {11, 12, 13, 12, 11}, {1.5, 2, 2.5, 2, 1}};
    const auto split = tukey_hsd(apart, 0.001);
    REQUIRE(split.comparisons.size() == 3);
    CHECK(split.comparisons[0].first == 0);
    CHECK(split.comparisons[0].second == 1);
    CHECK(split.comparisons[0].significant);
    CHECK(split.comparisons[1].significant == false);
    CHECK(split.comparisons[2].significant);
    CHECK(split.df_within == 12);
    CHECK(split.df_used == 12.0);
    CHECK(split.comparisons[0].mean_difference == Approx(10.0).margin(1e-9));

    CHECK_THROWS_AS(tukey_hsd(apart, 0.02), InvalidArgumentError);
}

TEST_CASE("Tukey q matches its definition", "[anova]") {
    const std::vector<Sample> groups{{3, 4, 5, 4}, {6, 7, 8}, {4, 5, 6, 5, 5}};
    const auto result = tukey_hsd(groups, 0.05);
    const auto anova = one_way_anova(groups);
    const double msw = anova.ss_within / static_cast<double>(anova.df_within);
    auto mean = [](const Sample& s) { return std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size()); };
    for (const auto& c : result.comparisons) {
        const auto& a = groups[c.first];
        const auto& b = groups[c.second];
        const double se = std::sqrt(msw / 2.0 * (1.0 / static_cast<double>(a.size()) + 1.0 / static_cast<double>(b.size())));
        CHECK(c.mean_difference == Approx(mean(b) - mean(a)));
        CHECK(c.q == Approx(std::abs(mean(b) - mean(a)) / se));
        CHECK(c.significant == (c.q > c.q_critical));
    }
}

TEST_CASE("Property: null-hypothesis rejection rates are calibrated", "[property]") {
    std::mt19937_64 rng(2718);
    std::normal_distribution<double> noise(5.0, 2.0);
    constexpr int kTrials = 4000;
    int anova_rejections = 0;
    int tukey_rejections = 0;
    for (int t = 0; t < kTrials; ++t) {
        std::vector<Sample> groups(4, Sample(6));
        for (auto& g : groups) {
            for (auto& v : g) {
                v = noise(rng);
            }
        }
        anova_rejections += one_way_anova(groups).p < 0.05 ? 1 : 0;
        const auto tukey = tukey_hsd(groups, 0.05);
        tukey_rejections += std::any_of(tukey.comparisons.begin(), tukey.comparisons.end(),
                                        [](const TukeyComparison& c) { return c.significant; })
                                ? 1
                                : 0;
    }
    // Binomial(4000, 0.05) has standard deviation about 0.0034.
    CHECK(anova_rejections / static_cast<double>(kTrials) == Approx(0.05).margin(0.015));
    CHECK(tukey_rejections / static_cast<double>(kTrials) == Approx(0.05).margin(0.015));
}
