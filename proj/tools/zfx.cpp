#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "campaign/campaigns.hpp"
#include "zfx/decompose.hpp"
#include "zfx/dh.hpp"
#include "zfx/enumerate.hpp"
#include "zfx/errors.hpp"
#include "zfx/extremal.hpp"
#include "zfx/graph6.hpp"

using nlohmann::ordered_json;
using namespace zfx;

namespace {

struct GraphInput {
    std::string g6;
    int path = 0;
    int cycle = 0;
    int complete = 0;
    int star = 0;

    void attach(CLI::App& app) {
        auto* group = app.add_option_group("graph", "graph to operate on (exactly one)");
        group->add_option("--g6", g6, "graph6 literal or file (first graph is used)");
        group->add_option("--path", path, "path on N vertices");
        group->add_option("--cycle", cycle, "cycle on N vertices");
        group->add_option("--complete", complete, "complete graph on N vertices");
        group->add_option("--star", star, "star on N vertices, center 0");
        group->require_option(1);
    }

    Graph graph() const {
        if (path > 0) return make_path(path);
        if (cycle > 0) return make_cycle(cycle);
        if (complete > 0) return make_complete(complete);
        if (star > 0) return make_star(star);
        auto corpus = campaign::graph6_corpus(g6);
        if (corpus.graphs.empty()) throw DomainError("no graph in " + g6);
        return corpus.graphs.front();
    }
};

struct Output {
    bool json = false;
    std::string out;

    void attach(CLI::App& app, bool with_json = true) {
        if (with_json) app.add_flag("--json", json, "emit JSON");
        app.add_option("--out", out, "write output to a file instead of stdout");
    }

    void emit(const std::string& text) const {
        if (out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(out);
        if (!f) throw DomainError("cannot write " + out);
        f << text;
    }
};

struct Budget {
    campaign::RunOptions run;

    void attach(CLI::App& app) {
        app.add_option("--budget-subsets", run.budgets.subsets, "largest order for subset enumeration")
            ->envname("ZFX_BUDGET_SUBSETS")
            ->check(CLI::Range(1, kMaxMemoOrder + 40));
        app.add_option("--budget-splits", run.budgets.splits, "largest order for the bipartition split search")
            ->check(CLI::Range(1, 64));
        app.add_option("--jobs", run.jobs, "worker threads")->envname("ZFX_JOBS")->check(CLI::PositiveNumber);
    }
};

std::string join(const std::vector<Count>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

std::string polynomial_text(const ZfProfile& p) {
    std::string s;
    const auto poly = p.polynomial();
    for (int k = 1; k <= poly.degree(); ++k) {
        const Count c = poly.coefficient(k);
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (c != 1) s += std::to_string(c);
        s += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

int cmd_profile(const GraphInput& input, const Output& output, const Budget& budget, bool against_path, bool csv) {
    const Graph g = input.graph();
    const auto profile = zf_profile(g, {.max_vertices = budget.run.budgets.subsets,
                                        .memo_limit = std::min(budget.run.budgets.subsets, 20)});
    const std::string id = write_graph6(g);
    std::optional<ExtremalVerdict> verdict;
    std::optional<PathProfile> path;
    if (against_path) {
        verdict = compare_with_path(profile, id);
        path = path_profile(g.order());
    }

    std::ostringstream os;
    if (output.json) {
        ordered_json j{{"graph6", id}, {"n", g.order()}, {"edges", g.edge_count()}};
        j["zf_number"] = profile.zf_number ? ordered_json(*profile.zf_number) : ordered_json(nullptr);
        j["z"] = profile.z;
        j["zprime"] = profile.zprime;
        std::vector<Count> coeffs;
        for (int k = 1; k <= profile.polynomial().degree(); ++k) coeffs.push_back(profile.polynomial().coefficient(k));
        j["polynomial"] = coeffs;
        if (verdict) {
            j["against_path"] = {{"path_z", path->z}, {"margin", verdict->margin}, {"is_path_extremal", verdict->is_path_extremal}};
            j["against_path"]["witness_k"] = verdict->witness_k ? ordered_json(*verdict->witness_k) : ordered_json(nullptr);
        }
        os << j.dump(2) << '\n';
    } else if (csv) {
        os << "k,z,zprime" << (verdict ? ",path_z,margin" : "") << '\n';
        for (int k = 0; k <= g.order(); ++k) {
            os << k << ',' << profile.z_at(k) << ',' << profile.zprime_at(k);
            if (verdict) os << ',' << path->z[static_cast<std::size_t>(k)] << ',' << verdict->margin[static_cast<std::size_t>(k)];
            os << '\n';
        }
    } else {
        os << "graph      " << id << '\n';
        os << "n          " << g.order() << '\n';
        os << "edges      " << g.edge_count() << '\n';
        os << "Z(G)       " << (profile.zf_number ? std::to_string(*profile.zf_number) : "-") << '\n';
        os << "z          " << join(profile.z) << '\n';
        os << "z'         " << join(profile.zprime) << '\n';
        os << "polynomial " << polynomial_text(profile) << "\n\n";
        os << std::setw(4) << "k" << std::setw(12) << "z(G;k)" << std::setw(12) << "z'(G;k)";
        if (verdict) os << std::setw(12) << "z(P_n;k)" << std::setw(10) << "margin";
        os << '\n';
        for (int k = 0; k <= g.order(); ++k) {
            os << std::setw(4) << k << std::setw(12) << profile.z_at(k) << std::setw(12) << profile.zprime_at(k);
            if (verdict)
                os << std::setw(12) << path->z[static_cast<std::size_t>(k)] << std::setw(10)
                   << verdict->margin[static_cast<std::size_t>(k)];
            os << '\n';
        }
        if (verdict) {
            os << "\npath-extremal " << (verdict->is_path_extremal ? "yes" : "no");
            if (verdict->witness_k) os << " (witness k=" << *verdict->witness_k << ")";
            os << '\n';
        }
    }
    output.emit(os.str());
    return 0;
}

int cmd_decompose(const GraphInput& input, const Output& output, const Budget& budget, bool check) {
    const Graph g = input.graph();
    const auto t = decompose(g, {.split = {.max_vertices = budget.run.budgets.splits}});
    const auto summary = summarize(t);
    if (check) {
        if (!(reconstruct(t) == g)) throw InvariantError("reconstructed graph differs from the input");
        const auto violations = validate_reduced(t);
        if (!violations.empty()) throw InvariantError("decomposition is not reduced: " + violations.front().detail);
    }

    std::vector<int> prime_sizes;
    for (const auto& p : summary.prime_labels) prime_sizes.push_back(p.order());
    std::ostringstream os;
    if (output.json) {
        ordered_json j{{"graph6", write_graph6(g)}};
        std::vector<std::string> lines;
        std::istringstream dump(dump_tree(t));
        for (std::string line; std::getline(dump, line);) lines.push_back(line);
        j["tree"] = lines;
        j["summary"] = {{"prime_bag_count", summary.prime_bag_count},
                        {"prime_sizes", prime_sizes},
                        {"is_dh", summary.is_dh},
                        {"unique_prime", summary.unique_prime ? ordered_json(*summary.unique_prime) : ordered_json(nullptr)},
                        {"star_centered_at_prime", summary.star_centered_at_prime}};
        if (check) j["checked"] = true;
        os << j.dump(2) << '\n';
    } else {
        os << dump_tree(t);
        os << "summary prime_bags=" << summary.prime_bag_count << " is_dh=" << (summary.is_dh ? "true" : "false")
           << " unique_prime=" << (summary.unique_prime ? std::to_string(*summary.unique_prime) : "-")
           << " star_centered=" << (summary.star_centered_at_prime ? "true" : "false") << " prime_sizes=";
        if (prime_sizes.empty()) os << '-';
        for (std::size_t i = 0; i < prime_sizes.size(); ++i) os << (i ? "," : "") << prime_sizes[i];
        os << '\n';
        if (check) os << "check ok\n";
    }
    output.emit(os.str());
    return 0;
}

std::string to_string(ConstructionOp op) {
    switch (op) {
        case ConstructionOp::pendant: return "pendant";
        case ConstructionOp::false_twin: return "false_twin";
        case ConstructionOp::true_twin: return "true_twin";
    }
    return "unknown";
}

int cmd_recognize_dh(const GraphInput& input, const Output& output) {
    const Graph g = input.graph();
    const auto trace = recognize_dh(g);
    std::optional<bool> oracle;
    if (g.order() <= kMaxMetricOracleOrder) oracle = dh_metric_oracle(g);

    std::ostringstream os;
    if (output.json) {
        ordered_json j{{"graph6", write_graph6(g)}, {"distance_hereditary", trace.has_value()}};
        j["metric_oracle"] = oracle ? ordered_json(*oracle) : ordered_json(nullptr);
        if (trace) {
            j["root"] = trace->root;
            j["steps"] = ordered_json::array();
            for (const auto& s : trace->steps)
                j["steps"].push_back({{"op", to_string(s.op)}, {"removed", s.removed}, {"anchor", s.anchor}});
        }
        os << j.dump(2) << '\n';
    } else {
        os << "distance_hereditary " << (trace ? "yes" : "no") << '\n';
        os << "metric_oracle       " << (oracle ? (*oracle ? "yes" : "no") : "-") << '\n';
        if (trace) {
            os << "root " << trace->root << '\n';
            for (const auto& s : trace->steps)
                os << std::left << std::setw(11) << to_string(s.op) << std::right << " removed=" << s.removed
                   << " anchor=" << s.anchor << '\n';
        }
    }
    output.emit(os.str());
    if (oracle && *oracle != trace.has_value()) {
        std::cerr << "zfx: recognisers disagree on " << write_graph6(g) << '\n';
        return 1;
    }
    return 0;
}

int emit_campaign(const campaign::CampaignDocument& doc, const Output& output) {
    output.emit(output.json ? campaign::to_json(doc).dump(2) + "\n" : campaign::to_text(doc));
    return campaign::exit_code(doc);
}

campaign::Corpus corpus_for(const std::string& g6, int nmax) {
    if (!g6.empty()) return campaign::graph6_corpus(g6);
    return campaign::enumerated_corpus(1, nmax, true);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero forcing extremality toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "zfx 0.1.0");

    GraphInput input;
    Output output;
    Budget budget;
    budget.run.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool against_path = false;
    bool csv = false;
    bool check = false;
    int nmax = 8;
    int nmin = 1;
    int m = 5;
    bool connected = false;
    std::string corpus_g6;

    auto* profile = app.add_subcommand("profile", "forcing-set counts z(G;k) and the polynomial");
    input.attach(*profile);
    output.attach(*profile);
    budget.attach(*profile);
    profile->add_flag("--against-path", against_path, "append z(P_n;k) and margins");
    profile->add_flag("--csv", csv, "CSV table");

    auto* dec = app.add_subcommand("decompose", "canonical split decomposition as a tree dump");
    input.attach(*dec);
    output.attach(*dec);
    budget.attach(*dec);
    dec->add_flag("--check", check, "re-reconstruct and validate reducedness");

    auto* rec = app.add_subcommand("recognize-dh", "distance-hereditary recognition with its elimination trace");
    input.attach(*rec);
    output.attach(*rec);

    auto* enumerate = app.add_subcommand("enumerate", "graph6 list of isomorphism classes");
    enumerate->add_option("--nmax", nmax, "largest order")->required()->check(CLI::Range(0, kMaxEnumerationOrder));
    enumerate->add_option("--nmin", nmin, "smallest order")->check(CLI::Range(0, kMaxEnumerationOrder));
    enumerate->add_flag("--connected", connected, "connected graphs only");
    output.attach(*enumerate, false);

    auto add_campaign = [&](const char* name, const char* help, bool with_m) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--nmax", nmax, "largest order of the built-in corpus")->check(CLI::Range(1, kMaxEnumerationOrder));
        sub->add_option("--g6", corpus_g6, "graph6 file or literal instead of the built-in corpus");
        if (with_m) sub->add_option("--m", m, "largest prime bag size")->check(CLI::Range(1, kMaxEnumerationOrder));
        output.attach(*sub);
        budget.attach(*sub);
        return sub;
    };
    auto* vdh = add_campaign("verify-dh", "path-extremality of connected distance-hereditary graphs", false);
    auto* vup = add_campaign("verify-unique-prime", "path-extremality of graphs with one small prime bag", true);
    auto* vsplit = add_campaign("verify-split", "round trip and reducedness of the split decomposition", false);
    auto* audit = app.add_subcommand("audit-lemmas", "leaf recurrence, fort, twin and prime-induction audits");
    audit->add_option("--nmax", nmax, "largest order for the leaf and prime audits")->check(CLI::Range(2, kMaxEnumerationOrder));
    output.attach(*audit);
    budget.attach(*audit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (profile->parsed()) return cmd_profile(input, output, budget, against_path, csv);
        if (dec->parsed()) return cmd_decompose(input, output, budget, check);
        if (rec->parsed()) return cmd_recognize_dh(input, output);
        if (enumerate->parsed()) {
            std::ostringstream os;
            for (int n = nmin; n <= nmax; ++n)
                for (const Graph& g : enumerate_graphs(n, connected)) os << write_graph6(g) << '\n';
            output.emit(os.str());
            return 0;
        }
        if (vdh->parsed()) return emit_campaign(campaign::verify_dh(corpus_for(corpus_g6, nmax), budget.run), output);
        if (vup->parsed())
            return emit_campaign(campaign::verify_unique_prime(corpus_for(corpus_g6, nmax), m, budget.run), output);
        if (vsplit->parsed()) return emit_campaign(campaign::verify_split(corpus_for(corpus_g6, nmax), budget.run), output);
        if (audit->parsed()) {
            const campaign::AuditLimits limits{nmax, std::min(nmax, 5), std::min(nmax, 6), nmax};
            return emit_campaign(campaign::audit_lemmas(limits, budget.run), output);
        }
    } catch (const std::exception& e) {
        std::cerr << "zfx: error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
