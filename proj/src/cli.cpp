#include "lexidim/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "lexidim/error.hpp"
#include "lexidim/graph.hpp"
#include "lexidim/lexicographic.hpp"
#include "lexidim/profiles.hpp"
#include "lexidim/solver.hpp"
#include "lexidim/spec_parser.hpp"
#include "lexidim/theory.hpp"
#include "lexidim/twins.hpp"
#include "lexidim/version.hpp"

namespace lexidim::cli {
namespace {

using json = nlohmann::ordered_json;

struct Settings {
    bool pretty = false;
    int threads = 1;
};

struct CommandOutput {
    json inputs;
    json results;
    bool inconclusive = false;
    std::optional<int> exit_override = {};
};

json dimension_json(const DimensionResult& result) {
    return json{{"value", result.value},
                {"witness", result.witness},
                {"k", result.k},
                {"mode", to_string(result.mode)},
                {"method", result.method == DimensionResult::Method::oracle ? "oracle"
                                                                            : "formula"}};
}

json twin_partition_json(const TwinPartition& partition) {
    json classes = json::array();
    for (const TwinClass& cls : partition.classes) {
        classes.push_back(json{{"members", cls.members}, {"kind", to_string(cls.kind)}});
    }
    TwinFreenessReport freeness = twin_freeness_report(partition);
    return json{{"classes", classes},
                {"twins_free", freeness.twins_free},
                {"true_twins_free", freeness.true_twins_free},
                {"false_twins_free", freeness.false_twins_free}};
}

json global_min_json(const GlobalMin& min) {
    return json{{"value", min.value}, {"pair", json::array({min.x, min.y})}};
}

// base + per-vertex members, with the single-member uniform expansion.
GraphFamily load_family(const Graph& base, const std::string& members_text) {
    return expand_family(base.order(), parse_member_list(members_text));
}

// `product "K:2 | path:4; path:4"` is accepted as a combined spec.
void split_combined_product_spec(std::string& base_spec, std::string& members_text) {
    std::size_t bar = base_spec.find('|');
    if (members_text.empty() && bar != std::string::npos) {
        members_text = base_spec.substr(bar + 1);
        base_spec = base_spec.substr(0, bar);
    }
}

CommandOutput cmd_analyze(const std::string& spec) {
    Graph g = parse_graph_spec(spec);
    ConnectivityReport conn = connectivity_report(g);
    TwinPartition partition = twin_partition(g);

    json results{{"order", g.order()},
                 {"edges", g.edge_count()},
                 {"connected", conn.connected},
                 {"diameter", conn.diameter ? json(*conn.diameter) : json(nullptr)},
                 {"twin_partition", twin_partition_json(partition)}};
    results["D"] = (conn.connected && g.order() >= 2) ? global_min_json(global_D(g))
                                                      : json(nullptr);
    results["C"] = (g.order() >= 2) ? global_min_json(global_C(g)) : json(nullptr);
    return CommandOutput{json{{"spec", spec}}, std::move(results)};
}

CommandOutput cmd_dimension(const std::string& spec, int k, Mode mode) {
    Graph g = parse_graph_spec(spec);
    DimensionResult result =
        (mode == Mode::metric) ? lexidim::dim_k(g, k) : lexidim::adim_k(g, k);
    return CommandOutput{json{{"spec", spec}, {"k", k}}, dimension_json(result)};
}

CommandOutput cmd_product(std::string base_spec, std::string members_text, bool materialize) {
    split_combined_product_spec(base_spec, members_text);
    Graph base = parse_graph_spec(base_spec);
    GraphFamily family = load_family(base, members_text);
    LexiProduct product = build_product(base, family);

    json results{{"base_order", product.base_order},
                 {"member_orders", product.member_orders},
                 {"block_offsets", product.block_offsets},
                 {"order", product.flat.order()},
                 {"edges", product.flat.edge_count()}};
    if (materialize) {
        json edges = json::array();
        for (auto [u, v] : product.flat.edges()) {
            edges.push_back(json::array({u, v}));
        }
        results["edge_list"] = std::move(edges);
    }
    return CommandOutput{json{{"base", base_spec},
                              {"members", members_text},
                              {"materialize", materialize}},
                         std::move(results)};
}

CommandOutput cmd_dimensional(std::string base_spec, std::string members_text,
                              const Settings& settings) {
    split_combined_product_spec(base_spec, members_text);
    Graph base = parse_graph_spec(base_spec);
    GraphFamily family = load_family(base, members_text);
    DimensionalK result = dimensional_k(base, family, settings.threads);
    return CommandOutput{json{{"base", base_spec}, {"members", members_text}},
                         json{{"k", result.k},
                              {"T", result.T},
                              {"C_fam", result.C_fam},
                              {"T_vertex", result.T_vertex},
                              {"C_member", result.C_member}}};
}

json property_report_json(const PropertyReport& report) {
    json out{{"property", to_string(report.property)},
             {"outcome", to_string(report.outcome)},
             {"holds", report.holds()}};
    json witness = json::array();
    for (const auto& cls : report.witness) {
        json choices = json::array();
        for (const auto& choice : cls.choices) {
            choices.push_back(json{{"base_vertex", choice.base_vertex},
                                   {"basis", choice.basis},
                                   {"profile", choice.profile}});
        }
        witness.push_back(json{{"class", cls.class_id}, {"choices", choices}});
    }
    out["witness"] = std::move(witness);
    if (report.counterexample) {
        out["counterexample"] = json{{"class", report.counterexample->class_id},
                                     {"base_pair",
                                      json::array({report.counterexample->base_j,
                                                   report.counterexample->base_l})},
                                     {"inner_pair",
                                      json::array({report.counterexample->inner_x,
                                                   report.counterexample->inner_y})}};
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

PropertyId parse_property_id(const std::string& name) {
    if (name == "P1") return PropertyId::P1;
    if (name == "P2") return PropertyId::P2;
    if (name == "P3") return PropertyId::P3;
    if (name == "P4") return PropertyId::P4;
    throw Error("parse", "unknown property \"" + name + "\", expected P1..P4");
}

CommandOutput cmd_properties(std::string base_spec, std::string members_text, int k,
                             const std::string& which, std::size_t cap) {
    split_combined_product_spec(base_spec, members_text);
    Graph base = parse_graph_spec(base_spec);
    GraphFamily family = load_family(base, members_text);

    std::vector<PropertyId> ids;
    std::stringstream ss(which);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) {
            ids.push_back(parse_property_id(token));
        }
    }
    if (ids.empty()) {
        throw Error("parse", "--which selected no properties");
    }

    CommandOutput out{json{{"base", base_spec},
                           {"members", members_text},
                           {"k", k},
                           {"which", which},
                           {"cap", cap}},
                      json::array()};
    for (PropertyId id : ids) {
        PropertyReport report = check_property(base, family, k, id, cap);
        out.inconclusive =
            out.inconclusive || report.outcome == PropertyOutcome::inconclusive;
        out.results.push_back(property_report_json(report));
    }
    return out;
}

CommandOutput cmd_bases(const std::string& spec, int k, std::size_t cap) {
    Graph g = parse_graph_spec(spec);
    BasisEnumeration enumeration = enumerate_k_adjacency_bases(g, k, cap);
    json bases = json::array();
    for (const auto& basis : enumeration.bases) {
        bases.push_back(basis);
    }
    return CommandOutput{json{{"spec", spec}, {"k", k}, {"cap", cap}},
                         json{{"k", k},
                              {"size", enumeration.basis_size},
                              {"count", enumeration.bases.size()},
                              {"truncated", enumeration.truncated},
                              {"bases", std::move(bases)}},
                         enumeration.truncated};
}

// Splits a campaign line into argv tokens; double quotes group words.
std::vector<std::string> tokenize_line(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    bool quoted = false;
    bool have = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
            have = true;
            continue;
        }
        if (!quoted && (c == ' ' || c == '\t')) {
            if (have) {
                tokens.push_back(current);
                current.clear();
                have = false;
            }
            continue;
        }
        current.push_back(c);
        have = true;
    }
    if (have) {
        tokens.push_back(current);
    }
    return tokens;
}

struct Dispatcher;
json run_to_json(const std::vector<std::string>& argv, int* exit_code);

CommandOutput cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("parse", "cannot open campaign file \"" + path + "\"");
    }
    CommandOutput out{json{{"campaign", path}}, json::array()};
    bool any_error = false;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> argv = tokenize_line(line);
        if (argv.empty() || argv.front().front() == '#') {
            continue;
        }
        if (argv.front() == "verify") {
            any_error = true;
            out.results.push_back(json{
                {"command", line},
                {"error", json{{"code", "usage"}, {"message", "verify cannot nest"}}}});
            continue;
        }
        int code = kExitOk;
        json report = run_to_json(argv, &code);
        report.erase("tool");
        report.erase("version");
        any_error = any_error || code == kExitInputError;
        out.inconclusive = out.inconclusive || code == kExitInconclusive;
        out.results.push_back(std::move(report));
    }
    if (any_error) {
        out.exit_override = kExitInputError;
    }
    return out;
}

json make_envelope(const std::vector<std::string>& argv) {
    std::string echo;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        if (i > 0) {
            echo += ' ';
        }
        echo += argv[i];
    }
    return json{{"tool", kToolName}, {"version", kVersion}, {"command", echo}};
}

int settings_default_threads() {
    if (const char* env = std::getenv("LEXIDIM_THREADS")) {
        int value = std::atoi(env);
        if (value >= 1) {
            return value;
        }
    }
    return 1;
}

// Parses argv and runs the matched command. Returns the full report and
// sets *exit_code.
json run_to_json(const std::vector<std::string>& argv, int* exit_code) {
    json envelope = make_envelope(argv);
    Settings settings;
    settings.threads = settings_default_threads();

    CLI::App app{"k-metric and k-adjacency dimensions of graphs and lexicographic products"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_flag("--pretty", settings.pretty, "pretty-print the JSON report");
    app.add_option("--threads", settings.threads, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);

    std::string spec;
    std::string members;
    std::string which = "P1,P2,P3,P4";
    std::string campaign;
    int k = 1;
    std::size_t cap = 10000;
    bool materialize = false;

    CLI::App* analyze = app.add_subcommand("analyze", "twin partition, D(G), C(G), diameter");
    analyze->add_option("spec", spec)->required();

    CLI::App* dim = app.add_subcommand("dim", "k-metric dimension");
    dim->add_option("spec", spec)->required();
    dim->add_option("-k,--k", k)->required();

    CLI::App* adim = app.add_subcommand("adim", "k-adjacency dimension");
    adim->add_option("spec", spec)->required();
    adim->add_option("-k,--k", k)->required();

    CLI::App* product = app.add_subcommand("product", "build a lexicographic product");
    product->add_option("base", spec)->required();
    product->add_option("--members", members);
    product->add_flag("--materialize", materialize);

    CLI::App* dimensional =
        app.add_subcommand("dimensional", "largest valid k for a product, by formula");
    dimensional->add_option("base", spec)->required();
    dimensional->add_option("--members", members);

    CLI::App* properties = app.add_subcommand("properties", "check Properties P1-P4");
    properties->add_option("base", spec)->required();
    properties->add_option("--members", members);
    properties->add_option("-k,--k", k)->required();
    properties->add_option("--which", which);
    properties->add_option("--cap", cap);

    CLI::App* verify = app.add_subcommand("verify", "run a campaign file");
    verify->add_option("campaign", campaign)->required();

    CLI::App* bases = app.add_subcommand("bases", "enumerate k-adjacency bases");
    bases->add_option("spec", spec)->required();
    bases->add_option("-k,--k", k)->required();
    bases->add_option("--cap", cap);

    auto started = std::chrono::steady_clock::now();
    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);

        CommandOutput output;
        if (*analyze) {
            output = cmd_analyze(spec);
        } else if (*dim) {
            output = cmd_dimension(spec, k, Mode::metric);
        } else if (*adim) {
            output = cmd_dimension(spec, k, Mode::adjacency);
        } else if (*product) {
            output = cmd_product(spec, members, materialize);
        } else if (*dimensional) {
            output = cmd_dimensional(spec, members, settings);
        } else if (*properties) {
            output = cmd_properties(spec, members, k, which, cap);
        } else if (*verify) {
            output = cmd_verify(campaign);
        } else if (*bases) {
            output = cmd_bases(spec, k, cap);
        } else {
            throw Error("usage", "no command selected");
        }

        envelope["inputs"] = std::move(output.inputs);
        envelope["results"] = std::move(output.results);
        auto elapsed = std::chrono::steady_clock::now() - started;
        envelope["timing_ms"] =
            std::chrono::duration<double, std::milli>(elapsed).count();
        *exit_code = output.exit_override.value_or(output.inconclusive ? kExitInconclusive
                                                                       : kExitOk);
    } catch (const CLI::ParseError& e) {
        envelope["error"] = json{{"code", "usage"}, {"message", e.what()}};
        *exit_code = kExitInputError;
    } catch (const Error& e) {
        envelope["error"] = json{{"code", e.code()}, {"message", e.what()}};
        *exit_code = kExitInputError;
    } catch (const std::exception& e) {
        envelope["error"] = json{{"code", "internal"}, {"message", e.what()}};
        *exit_code = kExitInputError;
    }
    return envelope;
}

}  // namespace

RunResult run_command(const std::vector<std::string>& argv) {
    int exit_code = kExitOk;
    json report = run_to_json(argv, &exit_code);

    bool pretty = std::find(argv.begin(), argv.end(), "--pretty") != argv.end();
    RunResult result{exit_code, report.dump(pretty ? 2 : -1)};
    result.output.push_back('\n');
    return result;
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    RunResult result = run_command(args);
    std::cout << result.output;
    return result.exit_code;
}

}  // namespace lexidim::cli
