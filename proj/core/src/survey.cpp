#include "symedge/survey.hpp"

#include <atomic>
#include <thread>

#include "symedge/errors.hpp"
#include "symedge/graph6.hpp"

namespace symedge {

namespace {

struct Slot {
    bool parse_failed = false;
    std::string parse_message;
    bool filtered = false;
    std::optional<ConjectureReport> report;
};

Slot run_one(const std::string& line, const SurveyConfig& config) {
    Slot slot;
    Graph g;
    try {
        g = parse_graph6(line);
    } catch (const parse_error& e) {
        slot.parse_failed = true;
        slot.parse_message = e.what();
        return slot;
    }
    try {
        if (config.family && !in_family(g, *config.family)) {
            slot.filtered = true;
            return slot;
        }
        CheckOptions opts;
        opts.strategy = config.strategy;
        if (config.timeout_seconds > 0) opts.deadline = Deadline::after(config.timeout_seconds);
        if (config.conjecture == "A")
            slot.report = check_conjecture_A_cochordal(g, config.k, opts);
        else if (config.conjecture == "C")
            slot.report = check_conjecture_C(g, config.k, opts);
        else
            slot.report = check_conjecture_B(g, config.k, opts);
    } catch (const std::exception& e) {
        // Size guards and other resource limits settle for "unknown", never
        // a guess and never a crashed worker.
        ConjectureReport r;
        r.graph6 = line;
        r.n = g.vertex_count();
        r.conjecture = config.conjecture;
        r.k = config.k;
        r.status = ConjectureStatus::unknown;
        r.evidence["reason"] = e.what();
        slot.report = r;
    }
    return slot;
}

/// Refutations must replay from their own evidence before being reported;
/// an independent re-check pass guards against bookkeeping slips.
bool replay_refutation(const std::string& line, const SurveyConfig& config) {
    Slot again = run_one(line, config);
    return again.report && again.report->status == ConjectureStatus::refuted;
}

}  // namespace

SurveyResult survey(const std::vector<std::string>& graph6_lines, const SurveyConfig& config) {
    std::vector<Slot> slots(graph6_lines.size());

    const int jobs = std::max(1, config.jobs);
    if (jobs == 1 || graph6_lines.size() <= 1) {
        for (std::size_t i = 0; i < graph6_lines.size(); ++i)
            slots[i] = run_one(graph6_lines[i], config);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= graph6_lines.size()) return;
                slots[i] = run_one(graph6_lines[i], config);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SurveyResult result;
    nlohmann::ordered_json& report = result.report;
    report["schema"] = "1";
    report["config"] = {{"conjecture", config.conjecture},
                        {"k", config.k},
                        {"family", config.family ? to_string(*config.family) : "all"},
                        {"jobs", config.jobs},
                        {"timeout_seconds", config.timeout_seconds},
                        {"seed", config.seed}};
    report["graphs"] = nlohmann::ordered_json::array();
    report["errors"] = nlohmann::ordered_json::array();

    int holds = 0, unknown = 0, filtered = 0, hypothesis_unmet = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        Slot& slot = slots[i];
        if (slot.parse_failed) {
            ++result.input_errors;
            report["errors"].push_back(
                {{"line", i + 1}, {"message", slot.parse_message}});
            continue;
        }
        if (slot.filtered) {
            ++filtered;
            continue;
        }
        if (slot.report->status == ConjectureStatus::refuted) {
            if (!replay_refutation(graph6_lines[i], config))
                throw std::logic_error("refutation did not replay from its evidence");
            ++result.refutations;
        } else if (slot.report->status == ConjectureStatus::holds) {
            ++holds;
        } else if (slot.report->status == ConjectureStatus::hypothesis_unmet) {
            ++hypothesis_unmet;
        } else {
            ++unknown;
        }
        report["graphs"].push_back(slot.report->to_json());
    }
    report["aggregate"] = {{"checked", holds + unknown + result.refutations},
                           {"holds", holds},
                           {"refuted", result.refutations},
                           {"unknown", unknown},
                           {"hypothesis_unmet", hypothesis_unmet},
                           {"filtered", filtered},
                           {"input_errors", result.input_errors}};

    if (result.refutations > 0)
        result.exit_code = 3;
    else if (result.input_errors > 0)
        result.exit_code = 2;
    else
        result.exit_code = 0;
    return result;
}

std::vector<std::string> filter_family(const std::vector<std::string>& graph6_lines,
                                       Family family) {
    std::vector<std::string> out;
    for (const std::string& line : graph6_lines) {
        try {
            if (in_family(parse_graph6(line), family)) out.push_back(line);
        } catch (const parse_error&) {
            // malformed lines drop out of the filtered stream
        }
    }
    return out;
}

}  // namespace symedge
