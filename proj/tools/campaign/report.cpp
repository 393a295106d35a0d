#include "campaign/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace zfx::campaign {

void absorb(VerificationReport& report, const Outcome& outcome) {
    ++report.scanned;
    switch (outcome.status) {
        case Outcome::Status::verified: ++report.verified; break;
        case Outcome::Status::counterexample: report.counterexamples.push_back(outcome.counterexample); break;
        case Outcome::Status::skipped:
            ++report.skipped;
            ++report.skipped_reasons[outcome.skip_reason];
            break;
    }
    report.anomalies.insert(report.anomalies.end(), outcome.anomalies.begin(), outcome.anomalies.end());
    for (const auto& [key, value] : outcome.tallies) report.tallies[key] += value;
}

void normalize(VerificationReport& report) {
    std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(),
                     [](const Counterexample& a, const Counterexample& b) {
                         return std::tie(a.graph6, a.note) < std::tie(b.graph6, b.note);
                     });
    std::stable_sort(report.anomalies.begin(), report.anomalies.end(), [](const Anomaly& a, const Anomaly& b) {
        return std::tie(a.graph6, a.detail) < std::tie(b.graph6, b.detail);
    });
}

bool CampaignDocument::clean() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.clean(); });
}

bool CampaignDocument::has_counterexamples() const {
    return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return !r.counterexamples.empty(); });
}

bool CampaignDocument::has_anomalies() const {
    return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return !r.anomalies.empty(); });
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
    using nlohmann::ordered_json;
    ordered_json corpus{{"source", r.corpus.source},
                        {"n_min", r.corpus.n_min},
                        {"n_max", r.corpus.n_max},
                        {"filters", r.corpus.filters}};
    ordered_json cx = ordered_json::array();
    for (const auto& c : r.counterexamples) {
        ordered_json entry{{"graph6", c.graph6}};
        entry["witness_k"] = c.witness_k ? ordered_json(*c.witness_k) : ordered_json(nullptr);
        entry["margins"] = c.margins;
        entry["note"] = c.note;
        cx.push_back(std::move(entry));
    }
    ordered_json anomalies = ordered_json::array();
    for (const auto& a : r.anomalies) anomalies.push_back({{"graph6", a.graph6}, {"detail", a.detail}});

    ordered_json out;
    out["campaign"] = r.campaign;
    out["corpus"] = std::move(corpus);
    out["totals"] = {{"scanned", r.scanned},
                     {"verified", r.verified},
                     {"counterexamples", r.counterexamples.size()},
                     {"skipped", r.skipped}};
    out["skipped_reasons"] = ordered_json::object();
    for (const auto& [reason, count] : r.skipped_reasons) out["skipped_reasons"][reason] = count;
    out["counterexamples"] = std::move(cx);
    out["anomalies"] = std::move(anomalies);
    out["tallies"] = ordered_json::object();
    for (const auto& [key, count] : r.tallies) out["tallies"][key] = count;
    out["clean"] = r.clean();
    out["timing"] = {{"seconds", r.seconds}};
    return out;
}

nlohmann::ordered_json to_json(const CampaignDocument& d) {
    nlohmann::ordered_json out;
    out["campaign"] = d.campaign;
    out["parameters"] = d.parameters;
    out["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : d.reports) out["reports"].push_back(to_json(r));
    out["clean"] = d.clean();
    return out;
}

nlohmann::ordered_json normalized(nlohmann::ordered_json doc) {
    if (doc.contains("parameters")) doc["parameters"].erase("jobs");
    if (doc.contains("reports"))
        for (auto& r : doc["reports"]) r.erase("timing");
    return doc;
}

std::string to_text(const CampaignDocument& d) {
    std::ostringstream os;
    os << "campaign " << d.campaign << (d.clean() ? "  [clean]" : "  [NOT clean]") << '\n';
    for (const auto& r : d.reports) {
        os << '\n' << r.campaign << '\n';
        os << "  corpus       " << r.corpus.source << "  n=" << r.corpus.n_min << ".." << r.corpus.n_max;
        for (const auto& f : r.corpus.filters) os << "  " << f;
        os << '\n';
        os << "  scanned      " << std::setw(8) << r.scanned << '\n';
        os << "  verified     " << std::setw(8) << r.verified << '\n';
        os << "  counterex.   " << std::setw(8) << r.counterexamples.size() << '\n';
        os << "  skipped      " << std::setw(8) << r.skipped << '\n';
        for (const auto& [reason, count] : r.skipped_reasons)
            os << "    " << std::left << std::setw(28) << reason << std::right << std::setw(8) << count << '\n';
        for (const auto& [key, count] : r.tallies)
            os << "  " << std::left << std::setw(30) << key << std::right << std::setw(8) << count << '\n';
        os << "  seconds      " << std::fixed << std::setprecision(3) << std::setw(8) << r.seconds << '\n';
        for (const auto& c : r.counterexamples) {
            os << "  COUNTEREXAMPLE " << c.graph6;
            if (c.witness_k) os << " k=" << *c.witness_k;
            if (!c.note.empty()) os << "  " << c.note;
            os << '\n';
        }
        for (const auto& a : r.anomalies) os << "  ANOMALY " << a.graph6 << "  " << a.detail << '\n';
    }
    return os.str();
}

int exit_code(const CampaignDocument& d) {
    if (d.has_anomalies()) return 1;
    if (d.has_counterexamples()) return 2;
    return 0;
}

}  // namespace zfx::campaign
