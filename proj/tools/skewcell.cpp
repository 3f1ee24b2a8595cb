// Command-line front end: branching graphs, dimension tables, path listings,
// skew module dimensions, Kronecker coefficients two ways, and the invariant
// verification suites.

#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewcell/algebra.hpp"
#include "skewcell/branching.hpp"
#include "skewcell/cellmod.hpp"
#include "skewcell/kronecker.hpp"
#include "skewcell/seminormal.hpp"
#include "skewcell/skew.hpp"
#include "skewcell/verify.hpp"

using nlohmann::json;
using namespace skewcell;

namespace {

// Levels on the command line: whole numbers or half levels written k.5.
int parse_twice_level(const std::string& s) {
    size_t dot = s.find('.');
    if (dot == std::string::npos) return 2 * std::stoi(s);
    std::string frac = s.substr(dot + 1);
    if (frac != "5") throw std::invalid_argument("levels must be integers or halves (k.5)");
    return 2 * std::stoi(s.substr(0, dot)) + 1;
}

struct Output {
    std::string format = "text";

    void emit_json(const json& j) const { std::cout << j.dump(2) << "\n"; }
};

int thread_cap() {
    const char* env = std::getenv("SKEWCELL_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v < 1 ? 1 : v;
}

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}

int cmd_graph(const std::string& family, int levels, const Output& out) {
    Family f = parse_family(family);
    json g = graph_json(f, 2 * levels);
    if (out.format == "csv") {
        std::cout << "level,from,to\n";
        for (const auto& rec : g)
            for (const auto& e : rec["edges"])
                std::cout << rec["level"].dump() << "," << csv_field(e[0].get<std::string>()) << ","
                          << csv_field(e[1].get<std::string>()) << "\n";
    } else {
        out.emit_json(g);
    }
    return 0;
}

int cmd_dims(const std::string& family, const std::string& level, const Output& out) {
    Family f = parse_family(family);
    int tl = parse_twice_level(level);
    auto table = dimension_table(f, tl);
    std::vector<Partition> order;
    for (const auto& [v, c] : table) order.push_back(v);
    std::sort(order.begin(), order.end(), vertex_list_less);
    if (out.format == "json") {
        json rows = json::array();
        for (const auto& v : order) rows.push_back(json{{"shape", v.str()}, {"dim", table.at(v)}});
        out.emit_json(json{{"family", family}, {"twice_level", tl}, {"dims", rows}});
    } else if (out.format == "csv") {
        std::cout << "shape,dim\n";
        for (const auto& v : order) std::cout << csv_field(v.str()) << "," << table.at(v) << "\n";
    } else {
        for (const auto& v : order) std::cout << v.str() << ": " << table.at(v) << "\n";
    }
    return 0;
}

int cmd_paths(const std::string& family, const std::string& from, const std::string& from_level,
              const std::string& to, const std::string& to_level, const Output& out) {
    Family f = parse_family(family);
    auto ps = paths(f, parse_partition(from), parse_twice_level(from_level), parse_partition(to),
                    parse_twice_level(to_level));
    if (out.format == "json") {
        json arr = json::array();
        for (const auto& p : ps) {
            json verts = json::array();
            for (const auto& v : p.verts) verts.push_back(v.str());
            arr.push_back(verts);
        }
        out.emit_json(json{{"count", ps.size()}, {"paths", arr}});
    } else if (out.format == "csv") {
        for (const auto& p : ps) {
            for (size_t i = 0; i < p.verts.size(); ++i) std::cout << (i ? "|" : "") << p.verts[i].str();
            std::cout << "\n";
        }
    } else {
        for (const auto& p : ps) std::cout << path_str(p) << "\n";
        std::cout << ps.size() << " paths\n";
    }
    return 0;
}

int cmd_skewdim(const std::string& family, const std::string& l, const std::string& v,
                const std::string& s, std::optional<int> r_opt, std::optional<long> n_opt, bool build,
                const Output& out) {
    Family f = parse_family(family);
    Partition lambda = parse_partition(l), nu = parse_partition(v);
    int s_level = std::stoi(s);
    int r_level = r_opt ? *r_opt : lambda.degree() + s_level;
    long count = path_count(f, lambda, 2 * (r_level - s_level), nu, 2 * r_level);
    long built = -1;
    if (build && count > 0) {
        long n = n_opt ? *n_opt : default_n(2 * r_level);
        TowerConfig cfg(f, n, 2 * r_level);
        built = skew_module(cfg, lambda, nu, r_level, s_level).dim();
    }
    if (out.format == "json") {
        json j{{"family", family}, {"lambda", lambda.str()}, {"nu", nu.str()},
               {"s", s_level},     {"r", r_level},           {"dim", count}};
        if (built >= 0) j["carrier_dim"] = built;
        out.emit_json(j);
    } else {
        std::cout << count << "\n";
        if (built >= 0) std::cout << "carrier " << built << (built == count ? " OK" : " MISMATCH") << "\n";
    }
    return (built >= 0 && built != count) ? 1 : 0;
}

int cmd_kron(const std::string& l, const std::string& m, const std::string& v,
             const std::string& method, const Output& out) {
    Partition lambda = parse_partition(l), mu = parse_partition(m), nu = parse_partition(v);
    std::optional<StableKronecker> via_char;
    std::optional<long> via_hom;
    if (method == "char" || method == "both") via_char = stable_kronecker(lambda, mu, nu);
    if (method == "hom" || method == "both") via_hom = stable_kronecker_via_hom(lambda, mu, nu);
    bool match = !(via_char && via_hom) || via_char->value == *via_hom;
    if (out.format == "json") {
        json j{{"lambda", lambda.str()}, {"mu", mu.str()}, {"nu", nu.str()}, {"method", method}};
        if (via_char) {
            j["char"] = via_char->value;
            j["stabilization_n"] = via_char->stabilization_n;
        }
        if (via_hom) j["hom"] = *via_hom;
        if (via_char && via_hom) j["match"] = match;
        out.emit_json(j);
    } else {
        if (via_char && via_hom)
            std::cout << via_char->value << " " << *via_hom << " " << (match ? "OK" : "MISMATCH") << "\n";
        else if (via_char)
            std::cout << via_char->value << "\n";
        else
            std::cout << *via_hom << "\n";
    }
    return match ? 0 : 1;
}

int cmd_verify(const std::string& suite, int max_level, uint64_t seed, const Output& out) {
    std::vector<std::string> names =
        (suite == "all") ? verify_suite_names() : std::vector<std::string>{suite};
    VerifyOptions opts;
    opts.max_level = max_level;
    opts.seed = seed;
    // Suites are pure; fan out in batches capped by SKEWCELL_THREADS and
    // print in a fixed order so output stays byte-identical.
    int cap = thread_cap();
    std::vector<VerifyReport> reports(names.size());
    for (size_t base = 0; base < names.size(); base += static_cast<size_t>(cap)) {
        std::vector<std::future<VerifyReport>> batch;
        for (size_t i = base; i < names.size() && i < base + static_cast<size_t>(cap); ++i)
            batch.push_back(std::async(cap > 1 ? std::launch::async : std::launch::deferred,
                                       [&, i] { return run_suite(names[i], opts); }));
        for (size_t i = 0; i < batch.size(); ++i) reports[base + i] = batch[i].get();
    }
    bool all = true;
    if (out.format == "json") {
        json arr = json::array();
        for (const auto& rep : reports) {
            json lines = json::array();
            for (const auto& line : rep.lines) {
                lines.push_back(json{{"check", line.name}, {"pass", line.pass}, {"detail", line.detail}});
                all = all && line.pass;
            }
            arr.push_back(json{{"suite", rep.suite}, {"checks", lines}});
        }
        out.emit_json(arr);
    } else {
        for (const auto& rep : reports)
            for (const auto& line : rep.lines) {
                std::cout << (line.pass ? "PASS" : "FAIL") << " " << rep.suite << "." << line.name;
                if (!line.detail.empty()) std::cout << " (" << line.detail << ")";
                std::cout << "\n";
                all = all && line.pass;
            }
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact diagram-algebra towers, skew cell modules and stable Kronecker coefficients"};
    app.require_subcommand(1);
    app.fallthrough();  // --format and --seed may follow the subcommand

    std::string format = "text";
    uint64_t seed = 0;
    app.add_option("--format", format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", seed, "seed for sampled checks");

    auto* graph = app.add_subcommand("graph", "branching graph levels as JSON");
    std::string g_family = "partition";
    int g_levels = 2;
    graph->add_option("--family", g_family, "partition, brauer or symmetric");
    graph->add_option("--levels", g_levels, "maximum whole level");

    auto* dims = app.add_subcommand("dims", "cell module dimensions at one level");
    std::string d_family = "partition", d_level = "1";
    dims->add_option("--family", d_family);
    dims->add_option("--level", d_level, "whole level or half level k.5");

    auto* pathsc = app.add_subcommand("paths", "paths between two vertices");
    std::string p_family = "partition", p_from, p_from_level = "0", p_to, p_to_level;
    pathsc->add_option("--family", p_family);
    pathsc->add_option("--from", p_from, "start partition, comma-joined parts");
    pathsc->add_option("--from-level", p_from_level);
    pathsc->add_option("--to", p_to);
    pathsc->add_option("--to-level", p_to_level)->required();

    auto* skewdim = app.add_subcommand("skewdim", "dimension of a skew cell module");
    std::string sd_family = "partition", sd_l, sd_v, sd_s = "1";
    std::optional<int> sd_r;
    std::optional<long> sd_n;
    bool sd_build = false;
    skewdim->add_option("--family", sd_family);
    skewdim->add_option("--l", sd_l, "lambda");
    skewdim->add_option("--v", sd_v, "nu");
    skewdim->add_option("--s", sd_s, "top level s");
    skewdim->add_option("--r", sd_r, "level of nu (default |lambda| + s)");
    skewdim->add_option("--n", sd_n, "loop parameter (default 2*r)");
    skewdim->add_flag("--build", sd_build, "also construct the carrier and cross-check");

    auto* kron = app.add_subcommand("kron", "stable Kronecker coefficient");
    std::string k_l, k_m, k_v, k_method = "both";
    kron->add_option("--l", k_l, "lambda");
    kron->add_option("--m", k_m, "mu");
    kron->add_option("--v", k_v, "nu");
    kron->add_option("--method", k_method)->check(CLI::IsMember({"char", "hom", "both"}));

    auto* verify = app.add_subcommand("verify", "run invariant suites");
    std::string v_suite = "all";
    int v_max_level = 0;
    verify->add_option("--suite", v_suite);
    verify->add_option("--max-level", v_max_level, "cap the levels the suite sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }

    Output out{format};
    try {
        if (graph->parsed()) return cmd_graph(g_family, g_levels, out);
        if (dims->parsed()) return cmd_dims(d_family, d_level, out);
        if (pathsc->parsed()) return cmd_paths(p_family, p_from, p_from_level, p_to, p_to_level, out);
        if (skewdim->parsed()) return cmd_skewdim(sd_family, sd_l, sd_v, sd_s, sd_r, sd_n, sd_build, out);
        if (kron->parsed()) return cmd_kron(k_l, k_m, k_v, k_method, out);
        if (verify->parsed()) return cmd_verify(v_suite, v_max_level, seed, out);
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
