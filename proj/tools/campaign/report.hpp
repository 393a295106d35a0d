#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace zfx::campaign {

struct CorpusDescriptor {
    std::string source;  // "enumeration" or the graph6 file / literal
    int n_min = 0;
    int n_max = 0;
    std::vector<std::string> filters;
};

struct Counterexample {
    std::string graph6;
    std::optional<int> witness_k;
    std::vector<std::int64_t> margins;
    std::string note;
};

// A disagreement between two parts of the tool itself, as opposed to a counterexample.
struct Anomaly {
    std::string graph6;
    std::string detail;
};

struct VerificationReport {
    std::string campaign;
    CorpusDescriptor corpus;
    long scanned = 0;
    long verified = 0;
    long skipped = 0;
    std::map<std::string, long> skipped_reasons;
    std::vector<Counterexample> counterexamples;
    std::vector<Anomaly> anomalies;
    std::map<std::string, long> tallies;  // campaign-specific counters
    double seconds = 0;

    bool consistent() const { return verified + static_cast<long>(counterexamples.size()) + skipped == scanned; }
    bool clean() const { return counterexamples.empty() && anomalies.empty(); }
};

// Outcome of checking one graph; merged into a report in corpus order.
struct Outcome {
    enum class Status { verified, counterexample, skipped };
    Status status = Status::verified;
    std::string skip_reason;
    Counterexample counterexample;  // when status is counterexample
    std::vector<Anomaly> anomalies;
    std::map<std::string, long> tallies;

    static Outcome skip(std::string reason) {
        Outcome o;
        o.status = Status::skipped;
        o.skip_reason = std::move(reason);
        return o;
    }

    static Outcome fail(Counterexample c) {
        Outcome o;
        o.status = Status::counterexample;
        o.counterexample = std::move(c);
        return o;
    }
};

void absorb(VerificationReport& report, const Outcome& outcome);
// Sorts counterexamples and anomalies by graph6 so the report does not depend on scheduling.
void normalize(VerificationReport& report);

struct CampaignDocument {
    std::string campaign;
    nlohmann::ordered_json parameters;
    std::vector<VerificationReport> reports;

    bool clean() const;
    bool has_counterexamples() const;
    bool has_anomalies() const;
};

nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const CampaignDocument& d);
// Same document with every timing field and the job count removed.
nlohmann::ordered_json normalized(nlohmann::ordered_json doc);

std::string to_text(const CampaignDocument& d);

// 0 clean, 2 counterexamples, 1 anomalies (artifact bugs).
int exit_code(const CampaignDocument& d);

}  // namespace zfx::campaign
