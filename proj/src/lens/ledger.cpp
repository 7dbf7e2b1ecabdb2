#include "faultlens/lens/ledger.hpp"

#include <fstream>
#include <sstream>

#include "faultlens/error.hpp"

namespace faultlens::lens {

using nlohmann::json;

RunLedger::RunLedger(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(*path_);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) {
            continue;
        }
        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("ledger: ") + e.what(), number, 1);
        }
        if (!record.is_object() || !record.contains("cell") || !record["cell"].is_string()) {
            throw ParseError("ledger record without a cell key", number, 1);
        }
        latest_[record["cell"].get<std::string>()] = records_.size();
        records_.push_back(std::move(record));
    }
}

std::optional<json> RunLedger::find(std::string_view cell) const {
    std::lock_guard lock(mutex_);
    const auto it = latest_.find(cell);
    if (it == latest_.end()) {
        return std::nullopt;
    }
    return records_[it->second];
}

std::vector<json> RunLedger::current() const {
    std::lock_guard lock(mutex_);
    std::vector<json> out;
    std::map<std::string, bool, std::less<>> emitted;
    for (const auto& record : records_) {
        const auto& cell = record["cell"].get_ref<const std::string&>();
        if (emitted.emplace(cell, true).second) {
            out.push_back(records_[latest_.find(cell)->second]);
        }
    }
    return out;
}

std::size_t RunLedger::size() const {
    std::lock_guard lock(mutex_);
    return records_.size();
}

void RunLedger::append(const json& record) {
    if (!record.is_object() || !record.contains("cell") || !record["cell"].is_string()) {
        throw InvalidArgumentError("ledger records need a string 'cell' key");
    }
    const std::string line = record.dump() + "\n";
    std::lock_guard lock(mutex_);
    if (path_) {
        std::ofstream out(*path_, std::ios::app | std::ios::binary);
        out << line;
        out.flush();
        if (!out) {
            throw Error("cannot append to ledger " + path_->string());
        }
    }
    latest_[record["cell"].get<std::string>()] = records_.size();
    records_.push_back(record);
}

std::string RunLedger::text() const {
    std::lock_guard lock(mutex_);
    std::string out;
    for (const auto& record : records_) {
        out += record.dump();
        out += '\n';
    }
    return out;
}

}  // namespace faultlens::lens
