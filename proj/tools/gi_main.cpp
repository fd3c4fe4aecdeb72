// girr command line front end: graph parsing, labeling constructions,
// verification, strength formulas/oracles, zero-sum partitions and a small
// deterministic family generator. Machine-readable JSON goes to stdout,
// human notes to stderr.
//
// Exit codes: 0 success/verified, 1 none_exists or verification failure,
// 2 usage error, 3 budget exhaustion.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "girr/abelian.hpp"
#include "girr/constructors.hpp"
#include "girr/graph.hpp"
#include "girr/labeling.hpp"
#include "girr/strength.hpp"
#include "girr/zerosum.hpp"

using nlohmann::ordered_json;
using namespace girr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json group_json(const AbelianGroup& g) {
    return ordered_json{{"spec", g.spec_string()}, {"factors", g.factors()}};
}

ordered_json element_json(const GroupElement& e) { return ordered_json(e); }

ordered_json labeling_json(const SimpleGraph& g, const EdgeLabeling& L, const std::string& strategy,
                           bool verified) {
    ordered_json out;
    out["schema"] = 1;
    out["group"] = group_json(L.group);
    ordered_json edges = ordered_json::array();
    for (std::size_t i = 0; i < L.labels.size(); ++i) {
        auto [u, v] = g.edges()[i];
        edges.push_back(ordered_json{{"u", u}, {"v", v}, {"label", element_json(L.labels[i])}});
    }
    out["edges"] = std::move(edges);
    ordered_json wmap;
    WeightMap w = weights(g, L);
    for (int v = 0; v < g.order(); ++v)
        wmap[std::to_string(v)] = element_json(w[static_cast<std::size_t>(v)]);
    out["weights"] = std::move(wmap);
    out["strategy"] = strategy;
    out["verified"] = verified;
    return out;
}

ordered_json strength_json(const StrengthResult& r) {
    ordered_json out;
    out["schema"] = 1;
    if (r.exact) {
        out["kind"] = "exact";
        out["value"] = r.value();
    } else {
        out["kind"] = "range";
        out["lower"] = r.lower;
        if (r.upper)
            out["upper"] = *r.upper;
        else
            out["upper"] = nullptr;
    }
    out["provenance"] = r.provenance;
    return out;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

int run_label(const std::string& graph_path, const std::string& group_spec,
              const std::string& strategy, long long budget) {
    SimpleGraph g = parse_graph(read_file(graph_path));

    LabelResult res;
    if (strategy == "pow2") {
        auto p2 = label_powers_of_two(g);
        if (!group_spec.empty() && !(parse_group_spec(group_spec) == p2.labeling.group))
            throw std::invalid_argument("pow2 strategy labels over " + p2.labeling.group.spec_string() +
                                        ", not " + group_spec);
        res = {LabelStatus::found, std::move(p2.labeling), "pow2", 0};
    } else {
        if (group_spec.empty()) throw std::invalid_argument("--group is required");
        AbelianGroup grp = parse_group_spec(group_spec);
        if (strategy == "auto") {
            res = label(g, grp, budget);
        } else if (strategy == "lemma8") {
            res = {LabelStatus::found, label_star_free_odd(g, grp), "lemma8", 0};
        } else if (strategy == "quad") {
            res = {LabelStatus::found, label_divisible_by_four(g, grp), "quad", 0};
        } else if (strategy == "prop10") {
            res = {LabelStatus::found, label_three_involutions(g, grp), "prop10", 0};
        } else {
            res = label_search(g, grp, budget);
        }
    }

    if (res.status == LabelStatus::none_exists) {
        emit({{"schema", 1}, {"result", "none_exists"}, {"strategy", res.strategy}});
        std::cerr << "no irregular labeling exists (search exhausted)\n";
        return kExitNegative;
    }
    if (res.status == LabelStatus::unknown) {
        emit({{"schema", 1}, {"result", "unknown"}, {"strategy", res.strategy}});
        std::cerr << "search budget exhausted before a conclusion\n";
        return kExitBudget;
    }
    auto rep = verify(g, res.labeling.group, res.labeling);
    emit(labeling_json(g, res.labeling, res.strategy, rep.ok));
    if (!rep.ok) {
        std::cerr << "internal error: labeling failed verification\n";
        return kExitNegative;
    }
    std::cerr << "verified labeling via " << res.strategy << "\n";
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& group_spec,
               const std::string& labeling_path) {
    SimpleGraph g = parse_graph(read_file(graph_path));
    AbelianGroup grp = parse_group_spec(group_spec);
    ordered_json doc;
    try {
        doc = ordered_json::parse(read_file(labeling_path));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("labeling file is not valid JSON: ") + e.what());
    }
    EdgeLabeling L = zero_labeling(g, grp); // unset edges default to zero
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw std::invalid_argument("labeling JSON needs an 'edges' array");
    for (const auto& item : doc["edges"]) {
        int u, v;
        GroupElement e;
        try {
            u = item.at("u").get<int>();
            v = item.at("v").get<int>();
            e = item.at("label").get<GroupElement>();
        } catch (const nlohmann::json::exception& ex) {
            throw std::invalid_argument(std::string("bad edge entry: ") + ex.what());
        }
        if (!grp.contains(e)) throw std::invalid_argument("label outside the group");
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
            throw std::invalid_argument("labeling references unknown edge " + std::to_string(u) + "-" +
                                        std::to_string(v));
        L.labels[static_cast<std::size_t>(g.edge_index(u, v))] = std::move(e);
    }
    auto rep = verify(g, grp, L);
    ordered_json out;
    out["schema"] = 1;
    out["ok"] = rep.ok;
    ordered_json wmap;
    for (int v = 0; v < g.order(); ++v)
        wmap[std::to_string(v)] = element_json(rep.weight_map[static_cast<std::size_t>(v)]);
    out["weights"] = std::move(wmap);
    if (rep.collision)
        out["collision"] = ordered_json{{"u", rep.collision->first}, {"v", rep.collision->second}};
    else
        out["collision"] = nullptr;
    emit(out);
    return rep.ok ? kExitOk : kExitNegative;
}

int run_strength(const std::string& graph_path, bool exact, long long max_s, long long budget) {
    SimpleGraph g = parse_graph(read_file(graph_path));
    StrengthResult r = exact ? sg_exact_bruteforce(g, max_s, budget) : sg_formula(g);
    emit(strength_json(r));
    if (exact && !r.exact) {
        std::cerr << "oracle could not settle the value within the budget\n";
        return kExitBudget;
    }
    return kExitOk;
}

int run_partition(const std::string& group_spec, const std::string& sizes_csv, bool exclude_zero,
                  long long budget) {
    AbelianGroup grp = parse_group_spec(group_spec);
    std::vector<int> sizes;
    std::stringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            sizes.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad size entry: " + tok);
        }
    }
    if (sizes.empty()) throw std::invalid_argument("--sizes must list at least one part");
    auto res = zero_sum_partition(grp, sizes, exclude_zero, budget);
    if (res.status == ZsStatus::infeasible) {
        std::cout << "infeasible\n";
        return kExitNegative;
    }
    if (res.status == ZsStatus::budget_exhausted) {
        std::cerr << "partition search budget exhausted\n";
        return kExitBudget;
    }
    for (const auto& part : res.partition.parts) {
        std::string line;
        for (const auto& e : part) {
            if (!line.empty()) line += ' ';
            line += '(';
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i) line += ',';
                line += std::to_string(e[i]);
            }
            line += ')';
        }
        std::cout << line << "\n";
    }
    return kExitOk;
}

int run_product(const std::string& graph_path, int r, const std::string& format) {
    SimpleGraph h = parse_graph(read_file(graph_path));
    SimpleGraph g = lexicographic_product(h, r);
    if (format == "graph6")
        std::cout << encode_graph6(g) << "\n";
    else
        std::cout << encode_edgelist(g);
    return kExitOk;
}

SimpleGraph family_atom(const std::string& spec) {
    std::vector<std::string> toks;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) toks.push_back(tok);
    if (toks.empty()) throw std::invalid_argument("empty family spec");

    auto num = [&](std::size_t i) {
        if (i >= toks.size()) throw std::invalid_argument("family spec missing a parameter: " + spec);
        try {
            return std::stoi(toks[i]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad family parameter: " + toks[i]);
        }
    };

    const std::string& name = toks[0];
    // shorthands like k4, c6, p5, s3
    if (toks.size() == 1 && name.size() >= 2 && std::isdigit(static_cast<unsigned char>(name[1]))) {
        int arg = std::stoi(name.substr(1));
        switch (name[0]) {
            case 'k': return make_complete(arg);
            case 'c': return make_cycle(arg);
            case 'p': return make_path(arg);
            case 's': return make_star(arg);
            default: break;
        }
        throw std::invalid_argument("unknown family shorthand: " + name);
    }
    if (name == "cycle") return make_cycle(num(1));
    if (name == "complete") return make_complete(num(1));
    if (name == "path") return make_path(num(1));
    if (name == "star") return make_star(num(1));
    if (name == "biclique") return make_complete_bipartite(num(1), num(2));
    throw std::invalid_argument("unknown family: " + name);
}

int run_genfamily(const std::string& name, const std::vector<std::string>& params) {
    SimpleGraph g;
    if (name == "union") {
        if (params.empty()) throw std::invalid_argument("union needs at least one member spec");
        g = family_atom(params[0]);
        for (std::size_t i = 1; i < params.size(); ++i) g = disjoint_union(g, family_atom(params[i]));
    } else if (name == "blowup") {
        if (params.size() != 2) throw std::invalid_argument("blowup needs a base spec and a factor");
        int r = 0;
        try {
            r = std::stoi(params[1]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad blow-up factor: " + params[1]);
        }
        g = lexicographic_product(family_atom(params[0]), r);
    } else {
        std::string spec = name;
        for (const auto& p : params) spec += ":" + p;
        g = family_atom(spec);
    }
    std::cout << encode_edgelist(g);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group irregularity strength toolkit"};
    app.require_subcommand(1);

    std::string graph_path, group_spec, labeling_path, strategy = "auto", sizes_csv, format = "edgelist";
    long long budget = default_search_budget();
    long long max_s = 16;
    bool exact = false, exclude_zero = false;
    int blowup = 1;
    std::string family;
    std::vector<std::string> family_params;

    auto* label_cmd = app.add_subcommand("label", "construct an irregular edge labeling");
    label_cmd->add_option("--graph", graph_path, "graph file (edge list or graph6)")->required();
    label_cmd->add_option("--group", group_spec, "group spec, e.g. Z4xZ2");
    label_cmd->add_option("--strategy", strategy, "auto|lemma8|quad|prop10|pow2|search")
        ->check(CLI::IsMember({"auto", "lemma8", "quad", "prop10", "pow2", "search"}));
    label_cmd->add_option("--budget", budget, "search node budget");

    auto* verify_cmd = app.add_subcommand("verify", "verify a labeling file");
    verify_cmd->add_option("--graph", graph_path, "graph file")->required();
    verify_cmd->add_option("--group", group_spec, "group spec")->required();
    verify_cmd->add_option("--labeling", labeling_path, "labeling JSON produced by `label`")->required();

    auto* strength_cmd = app.add_subcommand("strength", "group irregularity strength of a graph");
    strength_cmd->add_option("--graph", graph_path, "graph file")->required();
    strength_cmd->add_flag("--exact", exact, "run the brute-force oracle instead of the formulas");
    strength_cmd->add_option("--max-s", max_s, "largest order the oracle scans");
    strength_cmd->add_option("--budget", budget, "search node budget per group");

    auto* partition_cmd = app.add_subcommand("partition", "zero-sum partition of a group");
    partition_cmd->add_option("--group", group_spec, "group spec")->required();
    partition_cmd->add_option("--sizes", sizes_csv, "comma-separated part sizes")->required();
    partition_cmd->add_flag("--exclude-zero", exclude_zero, "partition G\\{0} instead of G");
    partition_cmd->add_option("--budget", budget, "search node budget");

    auto* product_cmd = app.add_subcommand("product", "lexicographic blow-up of a base graph");
    product_cmd->add_option("--graph", graph_path, "base graph file")->required();
    product_cmd->add_option("--r", blowup, "blow-up factor")->required();
    product_cmd->add_option("--format", format, "edgelist|graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));

    auto* gen_cmd = app.add_subcommand("genfamily", "emit a deterministic test graph");
    gen_cmd->add_option("family", family, "cycle|complete|path|star|biclique|union|blowup")->required();
    gen_cmd->add_option("params", family_params, "family parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*label_cmd) return run_label(graph_path, group_spec, strategy, budget);
        if (*verify_cmd) return run_verify(graph_path, group_spec, labeling_path);
        if (*strength_cmd) return run_strength(graph_path, exact, max_s, budget);
        if (*partition_cmd) return run_partition(group_spec, sizes_csv, exclude_zero, budget);
        if (*product_cmd) return run_product(graph_path, blowup, format);
        if (*gen_cmd) return run_genfamily(family, family_params);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitNegative;
    }
    return kExitUsage;
}
