#include "faultlens/lens/pipeline.hpp"

#include <algorithm>
#include <future>

#include "faultlens/assets.hpp"
#include "faultlens/error.hpp"
#include "faultlens/lens/rating.hpp"

namespace faultlens::lens {

using nlohmann::json;

namespace {

std::string naming_tag(ProgramNaming naming) { return naming == ProgramNaming::Named ? "np" : "ap"; }

std::string naming_name(ProgramNaming naming) { return naming == ProgramNaming::Named ? "named" : "anonymized"; }

std::string cell_key(const json& identity) { return sha256_hex(identity.dump()).substr(0, 24); }

/// One model call waiting to be executed and recorded.
struct Job {
    json record;
    ModelRequest request;
    bool judge = false;
};

ModelClient& client_for(const ClientSet& clients, const std::string& name) {
    const auto it = clients.find(name);
    if (it == clients.end() || !it->second) {
        throw NotFoundError("no client named '" + name + "'");
    }
    return *it->second;
}

json execute(const Job& job, ModelClient& client, const RetryPolicy& retry) {
    json record = job.record;
    try {
        const auto response = complete_with_retry(client, job.request, retry);
        record["status"] = "ok";
        record["response"] = response;
        if (job.judge) {
            const auto rating = try_parse_rating(response);
            record["rating"] = rating ? json(*rating) : json(nullptr);
            record["flagged"] = !rating.has_value();
        }
    } catch (const TransportError& e) {
        record["status"] = "failed";
        record["error"] = e.what();
    }
    return record;
}

bool needs_run(const RunLedger& ledger, const std::string& cell, bool retry_failed) {
    const auto existing = ledger.find(cell);
    return !existing || (retry_failed && existing->value("status", "") != "ok");
}

/// Runs jobs in batches of `parallelism` and appends their records in job order.
void run_jobs(const std::vector<Job>& jobs, const LensPlan& plan, const ClientSet& clients, RunLedger& ledger,
              StageSummary& summary) {
    std::vector<const Job*> pending;
    for (const auto& job : jobs) {
        ++summary.planned;
        if (needs_run(ledger, job.record["cell"].get<std::string>(), plan.retry_failed)) {
            pending.push_back(&job);
        } else {
            ++summary.reused;
        }
    }
    const std::size_t width = std::max<std::size_t>(1, plan.parallelism);
    for (std::size_t start = 0; start < pending.size(); start += width) {
        const std::size_t end = std::min(pending.size(), start + width);
        std::vector<std::future<json>> running;
        for (std::size_t i = start; i < end; ++i) {
            const Job* job = pending[i];
            ModelClient& client = client_for(clients, job->request.client);
            running.push_back(std::async(std::launch::async,
                                         [job, &client, &plan] { return execute(*job, client, plan.retry); }));
        }
        for (auto& future : running) {
            const json record = future.get();
            ++summary.executed;
            if (record["status"] != "ok") {
                ++summary.failed;
            }
            ledger.append(record);
        }
    }
}

Job make_job(json identity, const ClientSpec& spec, const PromptPair& prompt, std::size_t repetition) {
    Job job;
    job.request = {spec.name, prompt.system_text, prompt.user_text, spec.temperature, repetition};
    identity["request"] = request_digest(job.request);
    json record = identity;
    record["cell"] = cell_key(identity);
    record["temperature"] = spec.temperature;
    record["system"] = prompt.system_text;
    record["user"] = prompt.user_text;
    job.record = std::move(record);
    return job;
}

std::string program_text(const LensTask& task, ProgramNaming naming, const LensPlan& plan) {
    if (naming == ProgramNaming::Named) {
        return task.program;
    }
    return anonymize_predicates(task.program, plan.anonymization_seed, plan.allowlist).text;
}

std::vector<Job> interpretation_jobs(const LensPlan& plan, const LensTask& task, ProgramNaming naming) {
    const auto prompt = render_prompt("coding", {{"prolog", program_text(task, naming, plan)}});
    std::vector<Job> jobs;
    for (const auto& spec : plan.coding) {
        for (std::size_t r = 0; r < plan.coding_repetitions; ++r) {
            jobs.push_back(make_job(json{{"stage", "interpretation"},
                                         {"task", task.id},
                                         {"naming", naming_name(naming)},
                                         {"client", spec.name},
                                         {"repetition", r}},
                                    spec, prompt, r));
        }
    }
    return jobs;
}

Bindings consensus_bindings(const LensPlan& plan, const LensTask& task, const Condition& condition,
                            const std::string& samples) {
    Bindings b{{"description", task.description}};
    if (condition.local_context) {
        b["example_type"] = task.example_type;
        b["example"] = task.example;
    }
    if (condition.direct_prompting) {
        b["domain_context"] =
            condition.global_context ? task.domain_context : program_text(task, condition.naming, plan);
    } else {
        if (condition.global_context) {
            b["domain_context"] = task.domain_context;
        }
        b["samples"] = samples;
    }
    return b;
}

/// Latest successful consensus record per (task, condition, client), in ledger order.
std::vector<json> latest_consensus(const RunLedger& ledger) {
    std::vector<json> out;
    std::map<std::string, std::size_t> slot;
    for (const auto& record : ledger.current()) {
        if (record.value("stage", "") != "consensus" || record.value("status", "") != "ok") {
            continue;
        }
        const auto key = record["task"].get<std::string>() + "\n" + record["condition"].get<std::string>() + "\n" +
                         record["client"].get<std::string>();
        if (auto it = slot.find(key); it != slot.end()) {
            out[it->second] = record;
        } else {
            slot.emplace(key, out.size());
            out.push_back(record);
        }
    }
    return out;
}

}  // namespace

std::string Condition::id() const {
    std::string id = direct_prompting ? "direct_" : "lens_";
    id += naming_tag(naming);
    if (global_context) {
        id += "_gc";
    }
    if (local_context) {
        id += "_lc";
    }
    return id;
}

Condition Condition::parse(std::string_view id) {
    for (bool direct : {false, true}) {
        for (auto naming : {ProgramNaming::Named, ProgramNaming::Anonymized}) {
            for (bool gc : {false, true}) {
                for (bool lc : {false, true}) {
                    const Condition c{naming, gc, lc, direct};
                    if (c.id() == id) {
                        return c;
                    }
                }
            }
        }
    }
    throw InvalidArgumentError("malformed condition id '" + std::string(id) + "'");
}

std::string Condition::prompt_pair() const {
    if (direct_prompting) {
        return local_context ? "direct_lc" : "direct";
    }
    if (global_context) {
        return local_context ? "consensus" : "consensus_no_lc";
    }
    return local_context ? "consensus_no_gc" : "consensus_no_gc_no_lc";
}

std::vector<Condition> default_condition_lattice() {
    std::vector<Condition> lattice;
    for (auto naming : {ProgramNaming::Named, ProgramNaming::Anonymized}) {
        for (bool gc : {true, false}) {
            for (bool lc : {true, false}) {
                lattice.push_back({naming, gc, lc, false});
            }
        }
    }
    return lattice;
}

const std::vector<LensTask>& shipped_tasks() {
    static const std::vector<LensTask> tasks = [] {
        std::vector<LensTask> out;
        for (const auto& entry : json::parse(assets::get("lens/tasks.json"))) {
            LensTask task;
            task.id = entry.at("id").get<std::string>();
            task.domain_context = std::string(assets::get(entry.at("domain_context").get<std::string>()));
            task.description = entry.at("description").get<std::string>();
            task.example_type = entry.at("example_type").get<std::string>();
            task.example = std::string(assets::get(entry.at("example").get<std::string>()));
            task.question = entry.at("question").get<std::string>();
            task.instructions = std::string(assets::get(entry.at("instructions").get<std::string>()));
            task.reference = std::string(assets::get(entry.at("reference").get<std::string>()));
            for (const auto& program : entry.at("programs")) {
                task.program_ids.push_back(program.get<std::string>());
                if (!task.program.empty()) {
                    task.program += "\n";
                }
                task.program += assets::get("programs/" + task.program_ids.back() + ".pl");
            }
            out.push_back(std::move(task));
        }
        return out;
    }();
    return tasks;
}

const LensTask& find_task(std::string_view id) {
    for (const auto& task : shipped_tasks()) {
        if (task.id == id) {
            return task;
        }
    }
    throw NotFoundError("unknown lens task '" + std::string(id) + "'");
}

std::string_view to_string(ClientType type) {
    switch (type) {
    case ClientType::Fixture:
        return "fixture";
    case ClientType::Echo:
        return "echo";
    case ClientType::Http:
        return "http";
    }
    return "echo";
}

ClientType parse_client_type(std::string_view name) {
    for (auto type : {ClientType::Fixture, ClientType::Echo, ClientType::Http}) {
        if (to_string(type) == name) {
            return type;
        }
    }
    throw InvalidArgumentError("unknown client type '" + std::string(name) + "'");
}

std::shared_ptr<ModelClient> make_client(const ClientSpec& spec) {
    switch (spec.type) {
    case ClientType::Fixture:
        return std::make_shared<FixtureClient>(spec.name, spec.fixture_dir);
    case ClientType::Echo:
        return std::make_shared<EchoClient>(spec.name, spec.role);
    case ClientType::Http:
        return std::make_shared<HttpChatClient>(spec.name, spec.http);
    }
    throw InvalidArgumentError("unknown client type");
}

ClientSet make_clients(const std::vector<ClientSpec>& specs) {
    ClientSet clients;
    for (const auto& spec : specs) {
        if (clients.contains(spec.name)) {
            throw InvalidArgumentError("duplicate client name '" + spec.name + "'");
        }
        clients.emplace(spec.name, make_client(spec));
    }
    return clients;
}

std::vector<ClientSpec> LensPlan::clients() const {
    std::vector<ClientSpec> specs = coding;
    specs.push_back(reasoning);
    specs.insert(specs.end(), judges.begin(), judges.end());
    return specs;
}

RunSummary run_explanations(const LensPlan& plan, const ClientSet& clients, RunLedger& ledger) {
    RunSummary summary;
    for (const auto& task_id : plan.tasks) {
        const auto& task = find_task(task_id);

        std::map<ProgramNaming, std::vector<Job>> interpretations;
        for (const auto& condition : plan.conditions) {
            if (!condition.direct_prompting && !interpretations.contains(condition.naming)) {
                interpretations[condition.naming] = interpretation_jobs(plan, task, condition.naming);
                run_jobs(interpretations[condition.naming], plan, clients, ledger, summary.interpretations);
            }
        }

        std::vector<Job> consensus;
        for (const auto& condition : plan.conditions) {
            std::vector<std::string> inputs;
            std::string samples;
            if (!condition.direct_prompting) {
                for (const auto& job : interpretations[condition.naming]) {
                    const auto record = ledger.find(job.record["cell"].get<std::string>());
                    if (record && record->value("status", "") == "ok") {
                        inputs.push_back((*record)["cell"].get<std::string>());
                        if (!samples.empty()) {
                            samples += "\n\n";
                        }
                        samples += (*record)["response"].get<std::string>();
                    }
                }
            }
            json identity{{"stage", "consensus"},
                          {"task", task.id},
                          {"condition", condition.id()},
                          {"client", plan.reasoning.name},
                          {"inputs", inputs}};
            if (!condition.direct_prompting && inputs.empty()) {
                json record = identity;
                record["cell"] = cell_key(identity);
                if (!ledger.find(record["cell"].get<std::string>())) {
                    record["status"] = "failed";
                    record["error"] = "no interpretations available";
                    ledger.append(record);
                    ++summary.consensus.executed;
                }
                ++summary.consensus.planned;
                ++summary.consensus.failed;
                continue;
            }
            const auto prompt =
                render_prompt(condition.prompt_pair(), consensus_bindings(plan, task, condition, samples));
            consensus.push_back(make_job(std::move(identity), plan.reasoning, prompt, 0));
        }
        run_jobs(consensus, plan, clients, ledger, summary.consensus);
    }
    return summary;
}

RunSummary run_judging(const LensPlan& plan, const ClientSet& clients, RunLedger& ledger) {
    std::set<std::string> conditions;
    for (const auto& c : plan.conditions) {
        conditions.insert(c.id());
    }
    std::vector<Job> jobs;
    for (const auto& record : latest_consensus(ledger)) {
        const auto task_id = record["task"].get<std::string>();
        if (std::find(plan.tasks.begin(), plan.tasks.end(), task_id) == plan.tasks.end() ||
            !conditions.contains(record["condition"].get<std::string>()) ||
            record["client"] != plan.reasoning.name) {
            continue;
        }
        const auto& task = find_task(task_id);
        const auto prompt = render_prompt("judge", {{"instructions", task.instructions},
                                                    {"question", task.question},
                                                    {"answer_ref", task.reference},
                                                    {"answer", record["response"].get<std::string>()}});
        for (const auto& spec : plan.judges) {
            for (std::size_t r = 0; r < plan.judge_repetitions; ++r) {
                auto job = make_job(json{{"stage", "judgement"},
                                         {"task", task_id},
                                         {"condition", record["condition"]},
                                         {"explanation", record["cell"]},
                                         {"judge", spec.name},
                                         {"repetition", r}},
                                    spec, prompt, r);
                job.judge = true;
                jobs.push_back(std::move(job));
            }
        }
    }
    RunSummary summary;
    run_jobs(jobs, plan, clients, ledger, summary.judgements);
    return summary;
}

RunSummary run_pipeline(const LensPlan& plan, const ClientSet& clients, RunLedger& ledger) {
    auto summary = run_explanations(plan, clients, ledger);
    summary.judgements = run_judging(plan, clients, ledger).judgements;
    return summary;
}

std::vector<ExplanationRun> collect_runs(const RunLedger& ledger) {
    const auto records = ledger.current();
    std::map<std::string, const json*> by_cell;
    for (const auto& record : records) {
        by_cell.emplace(record["cell"].get<std::string>(), &record);
    }
    std::vector<ExplanationRun> runs;
    std::map<std::string, std::size_t> index;
    for (const auto& record : latest_consensus(ledger)) {
        ExplanationRun run;
        run.cell = record["cell"].get<std::string>();
        run.task = record["task"].get<std::string>();
        run.condition = Condition::parse(record["condition"].get<std::string>());
        run.explanation = record["response"].get<std::string>();
        for (const auto& input : record["inputs"]) {
            if (auto it = by_cell.find(input.get<std::string>()); it != by_cell.end()) {
                run.interpretations.push_back((*it->second)["response"].get<std::string>());
            }
        }
        index.emplace(run.cell, runs.size());
        runs.push_back(std::move(run));
    }
    for (const auto& record : records) {
        if (record.value("stage", "") != "judgement" || record.value("status", "") != "ok") {
            continue;
        }
        const auto it = index.find(record["explanation"].get<std::string>());
        if (it == index.end()) {
            continue;
        }
        JudgeScore score;
        score.judge = record["judge"].get<std::string>();
        score.repetition = record["repetition"].get<std::size_t>();
        if (!record["rating"].is_null()) {
            score.rating = record["rating"].get<int>();
        }
        score.justification = record["response"].get<std::string>();
        runs[it->second].scores.push_back(std::move(score));
    }
    return runs;
}

}  // namespace faultlens::lens
