// Command-line front end: symbolic powers, Betti tables, quotient-order
// construction and conjecture sweeps over graph corpora.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symedge/betti.hpp"
#include "symedge/certify.hpp"
#include "symedge/enumerate.hpp"
#include "symedge/errors.hpp"
#include "symedge/graph6.hpp"
#include "symedge/graph_classes.hpp"
#include "symedge/ideal_io.hpp"
#include "symedge/order_constructions.hpp"
#include "symedge/survey.hpp"

using namespace symedge;

namespace {

Graph load_graph(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::runtime_error("cannot open edge list file " + spec.substr(1));
        return parse_edge_list(in);
    }
    return parse_graph6(spec);
}

std::vector<std::string> load_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << content;
}

CertifyStrategy parse_strategy(const std::string& s) {
    if (s == "quotients") return CertifyStrategy::quotients;
    if (s == "betti") return CertifyStrategy::betti;
    return CertifyStrategy::both;
}

nlohmann::ordered_json order_json(const QuotientOrder& order) {
    nlohmann::ordered_json j;
    j["gens"] = nlohmann::ordered_json::array();
    for (const Monomial& m : order.gens) j["gens"].push_back(m.exponents());
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& step : order.steps) {
        nlohmann::ordered_json s = nlohmann::ordered_json::array();
        for (const auto& cv : step.colon_vars)
            s.push_back({{"var", cv.var}, {"witness", cv.witness}});
        j["steps"].push_back(s);
    }
    if (!order.relabeling.empty()) j["relabeling"] = order.relabeling;
    return j;
}

nlohmann::ordered_json betti_json(const BettiTable& table) {
    nlohmann::ordered_json j;
    j["characteristic"] = BettiTable::field_characteristic;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [ij, rank] : table.entries)
        if (rank > 0) j["entries"].push_back({ij.first, ij.second, rank});
    j["regularity"] = table.regularity();
    return j;
}

int run_symbolic(const std::string& graph_spec, int k, const std::string& method,
                 const std::string& system_path, bool as_json, const std::string& out_path) {
    Graph g = load_graph(graph_spec);

    if (!system_path.empty()) {
        std::ifstream in(system_path);
        if (!in) throw std::runtime_error("cannot open system file " + system_path);
        nlohmann::json sys_json = nlohmann::json::parse(in);
        CoverPrimeSystem sys = system_from_json(sys_json, g.vertex_count());
        MonomialIdeal j = veronese_intersection(sys);
        write_output(out_path, as_json ? ideal_to_json(j).dump(2) + "\n" : write_ideal_text(j));
        return 0;
    }

    MonomialIdeal result(std::max(g.vertex_count(), 1));
    if (method == "clique") {
        result = perfect_symbolic_power(g, k);
    } else if (method == "both") {
        result = symbolic_power(g, k);
        MonomialIdeal via_cliques = perfect_symbolic_power(g, k);
        if (!equals(result, via_cliques)) {
            std::cerr << "mismatch between intersection and clique routes\n";
            return 3;
        }
        std::cerr << "intersection and clique routes agree\n";
    } else {
        result = symbolic_power(g, k);
    }
    write_output(out_path,
                 as_json ? ideal_to_json(result).dump(2) + "\n" : write_ideal_text(result));
    return 0;
}

int run_betti(const std::string& ideal_path, bool as_json, const std::string& out_path) {
    std::ifstream in(ideal_path);
    if (!in) throw std::runtime_error("cannot open ideal file " + ideal_path);
    MonomialIdeal ideal = read_ideal_text(in);
    if (ideal.is_zero()) {
        write_output(out_path, as_json ? "{\"entries\":[]}\n" : "zero ideal\n");
        return 0;
    }
    BettiTable table = multigraded_betti(ideal);
    if (as_json) {
        write_output(out_path, betti_json(table).dump(2) + "\n");
        return 0;
    }
    std::ostringstream text;
    for (const auto& [ij, rank] : table.entries)
        if (rank > 0)
            text << "beta(" << ij.first << "," << ij.second << ") = " << rank << "\n";
    text << "regularity = " << table.regularity() << "\n";
    text << (has_linear_resolution(ideal) ? "linear resolution\n" : "not a linear resolution\n");
    write_output(out_path, text.str());
    return 0;
}

int run_order(const std::string& graph_spec, int k, const std::string& construct, bool verify,
              const std::string& out_path) {
    Graph g = load_graph(graph_spec);
    nlohmann::ordered_json j;
    j["construct"] = construct;
    j["power"] = k;

    if (construct == "i2") {
        if (k != 2) throw std::runtime_error("the i2 construction is specific to --power 2");
        QuotientOrder order = i2_order(g);
        if (verify && !replay_quotient_order(order))
            throw std::runtime_error("certificate failed to replay");
        j["order"] = order_json(order);
        j["verified"] = verify;
    } else if (construct == "peo-lex") {
        auto gc_peo = peo(complement(g));
        if (!gc_peo) throw std::runtime_error("graph is not cochordal");
        MonomialIdeal ideal = symbolic_power(g, k);
        CoverPrimeSystem sys = CoverPrimeSystem::uniform(g, k);
        j["components"] = nlohmann::ordered_json::object();
        for (int d : gen_degree_set(ideal)) {
            auto order = peo_lex_component_order(g, sys, d, *gc_peo);
            auto cert = check_linear_quotients_order(graded_component(ideal, d), order);
            if (!cert) {
                std::cerr << "component " << d << " rejected the peo-lex order\n";
                return 3;
            }
            cert->relabeling = *gc_peo;
            j["components"][std::to_string(d)] = order_json(*cert);
        }
        j["verified"] = true;
    } else if (construct == "search") {
        MonomialIdeal ideal = symbolic_power(g, k);
        SearchResult found = find_linear_quotients_order(ideal);
        if (found.status == SearchStatus::cap_exceeded)
            throw resource_limit_error("generator count above the search cap");
        if (found.status == SearchStatus::exhausted) {
            std::cerr << "no linear quotients order exists\n";
            return 3;
        }
        if (verify && !replay_quotient_order(*found.order))
            throw std::runtime_error("certificate failed to replay");
        j["order"] = order_json(*found.order);
        j["verified"] = verify;
    } else {
        throw std::runtime_error("unknown construction " + construct);
    }
    write_output(out_path, j.dump(2) + "\n");
    return 0;
}

int run_check(const std::string& conjecture, int k, const std::string& family_name,
              const std::string& input_path, int n, const SurveyConfig& base) {
    SurveyConfig config = base;
    config.conjecture = conjecture;
    config.k = k;
    if (!family_name.empty()) {
        auto family = family_from_string(family_name);
        if (!family) throw std::runtime_error("unknown family " + family_name);
        config.family = family;
    }

    std::vector<std::string> lines;
    if (!input_path.empty()) {
        lines = load_graph6_lines(input_path);
    } else {
        if (n < 1 || n > 7)
            throw std::runtime_error(
                "internal enumeration needs --n between 1 and 7; larger corpora via --input");
        enumerate_graphs(n, n <= 6, [&](const Graph& g) { lines.push_back(emit_graph6(g)); });
    }

    SurveyResult result = survey(lines, config);
    const auto& agg = result.report["aggregate"];
    std::cout << "checked " << agg["checked"] << " graphs: " << agg["holds"] << " hold, "
              << agg["refuted"] << " refuted, " << agg["unknown"] << " unknown, "
              << agg["filtered"] << " filtered out\n";
    if (result.refutations > 0) {
        for (const auto& entry : result.report["graphs"])
            if (entry["status"] == "refuted")
                std::cout << "refuted: " << entry["graph6"].get<std::string>() << "\n";
    }

    // For the intersection-of-prime-powers families, also spot-check random
    // exponent systems (seeded) against the peo-lex certificate.
    if (config.family && (*config.family == Family::co_block ||
                          *config.family == Family::co_interval ||
                          *config.family == Family::cond_c)) {
        std::mt19937 rng(static_cast<std::uint32_t>(config.seed));
        std::uniform_int_distribution<int> kdist(1, 3);
        long long systems = 0;
        for (const std::string& line : filter_family(lines, *config.family)) {
            Graph g = parse_graph6(line);
            auto gc_peo = peo(complement(g));
            if (!gc_peo) continue;
            CoverPrimeSystem sys;
            sys.nvars = g.vertex_count();
            for (VertexSet c : minimal_vertex_covers(g)) sys.entries.push_back({c, 1});
            for (int rep = 0; rep < 3; ++rep) {
                for (CoverEntry& e : sys.entries) e.k = kdist(rng);
                MonomialIdeal j = veronese_intersection(sys);
                for (int d : gen_degree_set(j)) {
                    MonomialIdeal comp = graded_component(j, d);
                    if (!check_linear_quotients_order(comp, peo_lex_order_of(comp, *gc_peo))) {
                        std::cout << "veronese system rejected at " << line << "\n";
                        return 3;
                    }
                }
                ++systems;
            }
        }
        std::cout << "veronese property check: " << systems
                  << " random exponent systems certified (seed " << config.seed << ")\n";
    }
    return result.exit_code;
}

int run_survey(const std::string& input_path, const std::string& out_path,
               const SurveyConfig& config) {
    SurveyResult result = survey(load_graph6_lines(input_path), config);
    write_output(out_path, result.report.dump(2) + "\n");
    std::cerr << "refutations: " << result.refutations
              << ", input errors: " << result.input_errors << "\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic powers of edge ideals: construction, certification, exploration"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    int jobs = 1;
    double timeout = 60;
    std::uint64_t seed = 1;
    std::string certify = "both";
    app.add_option("--jobs", jobs, "worker threads for corpus runs");
    app.add_option("--timeout", timeout, "per-graph timeout in seconds (0 disables)");
    app.add_option("--seed", seed, "seed for randomized property checks");
    app.add_option("--certify", certify, "certification strategy: quotients, betti or both")
        ->check(CLI::IsMember({"quotients", "betti", "both"}));

    auto* sym = app.add_subcommand("symbolic", "compute a symbolic power");
    std::string sym_graph, sym_method = "intersect", sym_system, sym_out;
    int sym_k = 1;
    bool sym_json = false;
    sym->add_option("--graph", sym_graph, "graph6 string or @edge-list-file")->required();
    sym->add_option("--k", sym_k, "power");
    sym->add_option("--method", sym_method, "intersect, clique or both")
        ->check(CLI::IsMember({"intersect", "clique", "both"}));
    sym->add_option("--system", sym_system,
                    "JSON file of {cover,k} entries; overrides --k/--method");
    sym->add_flag("--json", sym_json, "emit JSON instead of ideal text");
    sym->add_option("--out", sym_out, "output file (default stdout)");

    auto* bet = app.add_subcommand("betti", "Betti table of a monomial ideal");
    std::string bet_ideal, bet_out;
    bool bet_json = false;
    bet->add_option("--ideal", bet_ideal, "ideal text file")->required();
    bet->add_flag("--json", bet_json, "emit JSON");
    bet->add_option("--out", bet_out, "output file (default stdout)");

    auto* ord = app.add_subcommand("order", "construct a linear quotients order");
    std::string ord_graph, ord_construct = "search", ord_out;
    int ord_k = 2;
    bool ord_verify = false;
    ord->add_option("--graph", ord_graph, "graph6 string or @edge-list-file")->required();
    ord->add_option("--power", ord_k, "symbolic power");
    ord->add_option("--construct", ord_construct, "i2, peo-lex or search")
        ->check(CLI::IsMember({"i2", "peo-lex", "search"}));
    ord->add_flag("--verify", ord_verify, "replay the certificate before emitting");
    ord->add_option("--out", ord_out, "output file (default stdout)");

    auto* chk = app.add_subcommand("check", "check a conjecture over a corpus");
    std::string chk_conj, chk_family, chk_input;
    int chk_k = 2, chk_n = 0;
    chk->add_option("--conjecture", chk_conj, "A, B or C")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C"}));
    chk->add_option("--k", chk_k, "power");
    chk->add_option("--family", chk_family,
                    "cochordal, co-block, co-interval, cond-c or perfect");
    chk->add_option("--input", chk_input, "graph6 file (one record per line)");
    chk->add_option("--n", chk_n, "internal enumeration on n vertices (<= 7)");

    auto* sur = app.add_subcommand("survey", "full per-graph reports as JSON");
    std::string sur_input, sur_out;
    std::string sur_conj = "B";
    std::string sur_family;
    int sur_k = 2;
    sur->add_option("--input", sur_input, "graph6 file")->required();
    sur->add_option("--out", sur_out, "report file (default stdout)");
    sur->add_option("--conjecture", sur_conj, "A, B or C")
        ->check(CLI::IsMember({"A", "B", "C"}));
    sur->add_option("--k", sur_k, "power");
    sur->add_option("--family", sur_family, "optional family filter");

    CLI11_PARSE(app, argc, argv);

    SurveyConfig base;
    base.jobs = jobs;
    base.timeout_seconds = timeout;
    base.seed = seed;
    base.strategy = parse_strategy(certify);

    try {
        if (*sym)
            return run_symbolic(sym_graph, sym_k, sym_method, sym_system, sym_json, sym_out);
        if (*bet) return run_betti(bet_ideal, bet_json, bet_out);
        if (*ord) return run_order(ord_graph, ord_k, ord_construct, ord_verify, ord_out);
        if (*chk) return run_check(chk_conj, chk_k, chk_family, chk_input, chk_n, base);
        if (*sur) {
            SurveyConfig config = base;
            config.conjecture = sur_conj;
            config.k = sur_k;
            if (!sur_family.empty()) {
                auto family = family_from_string(sur_family);
                if (!family) throw std::runtime_error("unknown family " + sur_family);
                config.family = family;
            }
            return run_survey(sur_input, sur_out, config);
        }
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
