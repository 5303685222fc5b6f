#include "superlocal/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "superlocal/cliques.hpp"
#include "superlocal/edge_color.hpp"
#include "superlocal/errors.hpp"
#include "superlocal/frac_color.hpp"
#include "superlocal/graph6.hpp"
#include "superlocal/harness.hpp"
#include "superlocal/invariants.hpp"
#include "superlocal/multigraph.hpp"
#include "superlocal/oracles.hpp"

namespace superlocal::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::string input;
    std::string input_format = "auto";
    std::string format = "json";
    std::string out_path;
    std::optional<int> limit_n;
    std::uint64_t seed = 1;
    bool verify = false;

    std::string bound;  // frac
    int n = 0;          // search / gen enumeration
    bool all = false;   // gen: all graphs, not only connected
    std::string corpus;
    int count = 100;
    std::string claims = "all";
    std::string csv_path;
    std::string findings_path;
    unsigned threads = 0;
    bool timings = false;
};

// Thrown for unreadable files and malformed arguments.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& s) {
    std::ostringstream buf;
    buf << s.rdbuf();
    return buf.str();
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string load(const std::string& arg, std::istream& in) {
    if (arg.empty()) throw InputError("missing input");
    if (arg == "-") return read_all(in);
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream file(arg, std::ios::binary);
        if (!file) throw InputError("cannot read " + arg);
        return read_all(file);
    }
    return arg;
}

struct Input {
    std::optional<SimpleGraph> graph;
    std::optional<Multigraph> multigraph;
};

Input parse_input(const Config& cfg, std::istream& in) {
    std::string text = trim(load(cfg.input, in));
    std::string kind = cfg.input_format;
    if (kind == "auto") {
        bool multi = text.rfind("n ", 0) == 0 || text.rfind("n\t", 0) == 0 || text.find_first_of(" \t/#") != std::string::npos;
        if (text.rfind(">>graph6<<", 0) == 0) multi = false;
        kind = multi ? "mg" : "g6";
    }
    Input out;
    if (kind == "mg") {
        out.multigraph = parse_multigraph(text);
    } else {
        if (text.find('\n') != std::string::npos) throw InputError("expected a single graph6 line");
        out.graph = parse_graph6(text);
    }
    return out;
}

SimpleGraph require_graph(const Input& input) {
    if (!input.graph) throw InputError("this subcommand takes a graph6 simple graph");
    return *input.graph;
}

Multigraph require_multigraph(const Input& input) {
    if (input.multigraph) return *input.multigraph;
    const auto& g = *input.graph;
    std::vector<PairMultiplicity> pairs;
    for (auto [u, v] : g.edges()) pairs.push_back({u, v, 1});
    return Multigraph(g.order(), pairs);
}

std::string rat(const Rational& q) { return superlocal::to_string(q); }
long long as_int(const BigInt& b) { return b.convert_to<long long>(); }

Json vertex_list(VertexMask m) {
    Json out = Json::array();
    for_each_vertex(m, [&](int v) { out.push_back(v); });
    return out;
}

harness::Limits limits(const Config& cfg) {
    harness::Limits lim;
    if (cfg.limit_n) {
        if (*cfg.limit_n < 1) throw InputError("--limit-n must be positive");
        lim = lim.capped(*cfg.limit_n);
    }
    return lim;
}

// ------------------------------------------------------------------ rendering

bool scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string plain_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_cell(const Json& v) {
    std::string s = plain_value(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
}

std::string render(const Json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    std::string out;
    if (format == "plain") {
        for (const auto& [key, value] : j.items()) out += key + ": " + plain_value(value) + "\n";
        return out;
    }
    std::string header, row;
    for (const auto& [key, value] : j.items()) {
        if (!scalar(value)) continue;
        if (!header.empty()) {
            header += ',';
            row += ',';
        }
        header += key;
        row += csv_cell(value);
    }
    return header + "\n" + row + "\n";
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty() || cfg.out_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw InputError("cannot write " + cfg.out_path);
    file << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write " + path);
    file << text;
}

// ------------------------------------------------------------------ subcommands

Json graph_bounds_json(const SimpleGraph& g, const harness::Limits& lim) {
    auto b = graph_bounds(g);
    Json j;
    j["graph6"] = encode_graph6(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["max_degree"] = b.max_degree;
    j["omega"] = b.omega;
    j["gamma_prime"] = rat(b.gamma_prime);
    j["gamma"] = as_int(b.gamma);
    j["gamma_local_prime"] = rat(b.gamma_local_prime);
    j["gamma_local"] = as_int(b.gamma_local);
    j["gamma_ll_prime"] = rat(b.gamma_ll_prime);
    j["gamma_ll"] = as_int(b.gamma_ll);
    j["clique_average"] = rat(clique_average_bound(g));
    j["neighbourhood_average"] = rat(neighbourhood_average_bound(g));
    j["subgraph_neighbourhood_bound"] =
        g.order() <= lim.question ? Json(rat(subgraph_neighbourhood_bound(g, lim.question))) : Json(nullptr);
    Json vertices = Json::array();
    auto vb = vertex_bounds(g);
    for (int v = 0; v < g.order(); ++v)
        vertices.push_back({{"vertex", v}, {"degree", vb[v].degree}, {"omega", vb[v].omega},
                            {"gamma_local_prime", rat(vb[v].gamma_local_prime)}});
    j["vertices"] = vertices;
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({{"u", u}, {"v", v}, {"gamma_ll_prime", rat(gamma_ll_prime_edge(g, u, v))}});
    j["edges"] = edges;
    return j;
}

Json multigraph_bounds_json(const Multigraph& g) {
    Json j;
    j["multigraph"] = harness::one_line(g);
    j["n"] = g.order();
    j["edges"] = g.edge_count();
    j["gamma_bar_ll"] = gamma_bar_ll(g);
    Json pairs = Json::array();
    for (const auto& p : g.pairs()) pairs.push_back({{"u", p.u}, {"v", p.v}, {"mu", p.m}, {"t", t_value(g, p.u, p.v)}});
    j["pairs"] = pairs;
    return j;
}

int cmd_bounds(const Config& cfg, std::istream& in, std::ostream& out) {
    auto input = parse_input(cfg, in);
    auto lim = limits(cfg);
    emit(cfg, out, render(input.graph ? graph_bounds_json(*input.graph, lim) : multigraph_bounds_json(*input.multigraph), cfg.format));
    return kExitOk;
}

int cmd_oracle(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    auto g = require_graph(parse_input(cfg, in));
    auto lim = limits(cfg);
    auto chi = chromatic_number(g, lim.chromatic);
    auto lp = fractional_chromatic_number(g, lim.stable_sets);
    int alpha = stability_number(g, lim.stable_sets);

    Json j;
    j["graph6"] = encode_graph6(g);
    j["n"] = g.order();
    j["chi"] = chi.chi;
    j["colouring"] = chi.colouring.colour;
    j["chi_f"] = rat(lp.value);
    Json weights = Json::array();
    for (std::size_t i = 0; i < lp.columns.size(); ++i)
        if (lp.stable_set_weights[i] != 0)
            weights.push_back({{"set", vertex_list(lp.columns[i])}, {"weight", rat(lp.stable_set_weights[i])}});
    j["stable_set_weights"] = weights;
    Json clique = Json::array();
    for (const auto& y : lp.clique_weights) clique.push_back(rat(y));
    j["clique_weights"] = clique;
    j["alpha"] = alpha;
    j["chi_complement_matching"] =
        alpha <= 2 ? Json(chi_via_complement_matching(g, lim.matching).chi) : Json(nullptr);
    if (cfg.verify) {
        bool ok = is_proper(g, chi.colouring) && chi.colouring.k == chi.chi && harness::certificate_holds(g, lp);
        if (!ok) {
            err << "verification failed\n";
            return kExitInternal;
        }
        j["verify"] = "OK";
    }
    emit(cfg, out, render(j, cfg.format));
    return kExitOk;
}

int cmd_frac(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    auto g = require_graph(parse_input(cfg, in));
    auto lim = limits(cfg);
    Rational bound = cfg.bound.empty() ? gamma_ll_prime(g) : parse_rational(cfg.bound);
    auto sc = superlocal_fractional_colour(g, bound, lim.stable_sets);

    Json j;
    j["graph6"] = encode_graph6(g);
    j["bound"] = rat(sc.bound);
    j["total"] = rat(sc.total);
    Json weight_on = Json::array();
    for (const auto& w : sc.weight_on) weight_on.push_back(rat(w));
    j["weight_on"] = weight_on;
    Json weights = Json::array();
    for (const auto& [set, w] : sc.colouring.weights) weights.push_back({{"set", vertex_list(set)}, {"weight", rat(w)}});
    j["weights"] = weights;
    Json iterations = Json::array();
    for (const auto& it : sc.trace.iterations)
        iterations.push_back({{"vertices", vertex_list(it.vertices)},
                              {"low", rat(it.low)},
                              {"val", rat(it.val)},
                              {"maximum_sets", it.maximum_set_count},
                              {"total", rat(it.total)}});
    j["iterations"] = iterations;
    if (cfg.verify) {
        auto verdict = verify_fractional_colouring(g, sc.colouring, sc.bound);
        if (!verdict.valid()) {
            for (const auto& v : verdict.violations) err << v.describe() << "\n";
            return kExitInternal;
        }
        j["verify"] = "OK";
    }
    emit(cfg, out, render(j, cfg.format));
    return kExitOk;
}

int cmd_edgecolour(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    auto g = require_multigraph(parse_input(cfg, in));
    if (g.edge_count() == 0) throw InputError("multigraph has no edges");
    auto res = edge_colour(g);

    Json j;
    j["multigraph"] = harness::one_line(g);
    j["k"] = res.k;
    j["gamma_bar_ll"] = gamma_bar_ll(g);
    Json colours = Json::array();
    for (int e = 0; e < g.edge_count(); ++e)
        colours.push_back({{"edge", e}, {"u", g.edge(e).u}, {"v", g.edge(e).v}, {"colour", res.colouring.colour(e)}});
    j["colours"] = colours;
    j["stats"] = {{"direct", res.stats.direct},
                  {"rotation", res.stats.rotation},
                  {"rotation_swap", res.stats.rotation_swap},
                  {"fan_sequence", res.stats.fan_sequence},
                  {"beta_swap", res.stats.beta_swap}};
    if (cfg.verify) {
        bool ok = res.colouring.consistent() && res.colouring.coloured_count() == g.edge_count();
        // Independent properness check straight from the colour list.
        for (int v = 0; v < g.order() && ok; ++v) {
            std::vector<bool> seen(res.k + 1, false);
            for (int e : g.incident(v)) {
                int c = res.colouring.colour(e);
                if (c < 1 || c > res.k || seen[c]) ok = false;
                else seen[c] = true;
            }
        }
        if (!ok) {
            err << "verification failed\n";
            return kExitInternal;
        }
        j["verify"] = "OK";
    }
    if (cfg.format != "plain") {
        emit(cfg, out, render(j, cfg.format));
        return kExitOk;
    }
    std::string text = "k " + std::to_string(res.k) + "\n";
    for (int e = 0; e < g.edge_count(); ++e) text += std::to_string(e) + " " + std::to_string(res.colouring.colour(e)) + "\n";
    if (cfg.verify) text += "verify OK\n";
    emit(cfg, out, text);
    return kExitOk;
}

int cmd_linegraph(const Config& cfg, std::istream& in, std::ostream& out) {
    auto g = require_multigraph(parse_input(cfg, in));
    auto lg = line_graph(g);
    Json j;
    j["multigraph"] = harness::one_line(g);
    j["line_graph6"] = encode_graph6(lg);
    j["vertices"] = lg.order();
    j["gamma_bar_ll"] = gamma_bar_ll(g);
    j["line_gamma_ll"] = as_int(gamma_ll(lg));
    j["line_gamma_ll_prime"] = rat(gamma_ll_prime(lg));
    emit(cfg, out, render(j, cfg.format));
    return kExitOk;
}

harness::SearchSpace search_space(const Config& cfg, const harness::Limits& lim) {
    harness::SearchSpace space;
    if (!cfg.corpus.empty()) {
        if (cfg.n) throw InputError("use either --n or --corpus");
        space.kind = harness::SearchSpace::Kind::corpus;
        space.corpus = harness::parse_corpus_spec(cfg.corpus);
        space.seed = cfg.seed;
        space.count = cfg.count;
    } else {
        if (cfg.n < 1) throw InputError("search needs --n or --corpus");
        if (cfg.n > lim.enumeration)
            throw SizeLimitError("enumeration limited to " + std::to_string(lim.enumeration) + " vertices");
        space.max_n = cfg.n;
    }
    return space;
}

int cmd_search(const Config& cfg, std::ostream& out) {
    harness::CheckOptions options;
    options.claims = harness::parse_claims(cfg.claims);
    options.limits = limits(cfg);
    options.timings = cfg.timings;
    auto summary = harness::search_counterexamples(search_space(cfg, options.limits), options, cfg.threads);

    std::string reports;
    for (const auto& r : summary.reports) reports += to_json(r, cfg.timings).dump() + "\n";
    for (const auto& r : summary.multigraph_reports) reports += to_json(r, cfg.timings).dump() + "\n";
    std::string csv = harness::csv_header() + "\n";
    for (const auto& r : summary.reports) csv += harness::csv_row(r) + "\n";
    if (!summary.multigraph_reports.empty()) {
        csv += harness::multigraph_csv_header() + "\n";
        for (const auto& r : summary.multigraph_reports) csv += harness::multigraph_csv_row(r) + "\n";
    }
    std::string findings;
    for (const auto& f : summary.findings) findings += to_json(f).dump() + "\n";

    if (!cfg.out_path.empty()) write_file(cfg.out_path, reports);
    if (!cfg.csv_path.empty()) write_file(cfg.csv_path, csv);
    if (!cfg.findings_path.empty()) write_file(cfg.findings_path, findings);

    Json j = to_json(summary);
    if (cfg.format == "csv") out << csv;
    else if (cfg.format == "plain") out << render(j, "plain");
    else out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_gen(const Config& cfg, std::ostream& out) {
    auto lim = limits(cfg);
    std::string text;
    if (!cfg.corpus.empty()) {
        if (cfg.n) throw InputError("use either --n or --corpus");
        for (const auto& item : harness::random_corpus(harness::parse_corpus_spec(cfg.corpus), cfg.seed, cfg.count))
            text += (item.multigraph ? harness::one_line(*item.multigraph) : encode_graph6(item.graph)) + "\n";
    } else {
        if (cfg.n < 1) throw InputError("gen needs --n or --corpus");
        if (cfg.n > lim.enumeration)
            throw SizeLimitError("enumeration limited to " + std::to_string(lim.enumeration) + " vertices");
        auto graphs = cfg.all ? harness::enumerate_all_graphs(cfg.n) : harness::enumerate_connected_graphs(cfg.n);
        for (const auto& g : graphs) text += encode_graph6(g) + "\n";
    }
    emit(cfg, out, text);
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Superlocal colouring bounds, oracles and verification harness", "superlocal"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
        sub->add_option("--out", cfg.out_path, "Write output to a file");
        sub->add_option("--limit-n", cfg.limit_n, "Lower every size limit to this many vertices");
    };
    auto with_input = [&](CLI::App* sub) {
        common(sub);
        sub->add_option("input", cfg.input, "File path, - for stdin, or an inline encoding")->required();
        sub->add_option("--input-format", cfg.input_format, "Input encoding")->check(CLI::IsMember({"auto", "g6", "mg"}));
    };
    auto corpus_options = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "Enumerate connected graphs up to this order");
        sub->add_option("--corpus", cfg.corpus, "Random corpus, e.g. circular:n=3..10");
        sub->add_option("--seed", cfg.seed, "Corpus seed");
        sub->add_option("--count", cfg.count, "Corpus size")->check(CLI::NonNegativeNumber);
    };

    auto* bounds = app.add_subcommand("bounds", "Reed-type bounds of a graph or multigraph");
    with_input(bounds);
    auto* oracle = app.add_subcommand("oracle", "Exact chi, chi_f and alpha");
    with_input(oracle);
    oracle->add_flag("--verify", cfg.verify, "Re-check the colouring and the LP certificate");
    auto* frac = app.add_subcommand("frac", "Fractional colouring within the superlocal bound");
    with_input(frac);
    frac->add_option("--bound", cfg.bound, "Total weight budget (default gamma_ll_prime)");
    frac->add_flag("--verify", cfg.verify, "Check the weighting exactly");
    auto* edge = app.add_subcommand("edgecolour", "Edge colouring with gamma_bar_ll colours");
    with_input(edge);
    edge->add_flag("--verify", cfg.verify, "Check the colouring is proper");
    auto* line = app.add_subcommand("linegraph", "Line graph and its bounds");
    with_input(line);
    auto* search = app.add_subcommand("search", "Check claims over an enumeration or corpus");
    common(search);
    corpus_options(search);
    search->add_option("--claims", cfg.claims, "Comma separated: thm4,conj3,conj6,thm8,thm9,thm10,thm11,linegraph,question,all");
    search->add_option("--csv", cfg.csv_path, "Write the CSV summary");
    search->add_option("--findings", cfg.findings_path, "Write re-verified witnesses as JSON lines");
    search->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    search->add_flag("--timings", cfg.timings, "Include timings in reports");
    search->add_flag("--verify", cfg.verify, "Accepted for uniformity; witnesses are always re-verified");
    auto* gen = app.add_subcommand("gen", "Print an enumeration or corpus, one encoding per line");
    common(gen);
    corpus_options(gen);
    gen->add_flag("--all", cfg.all, "Enumerate disconnected graphs too");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
            out << sub->help();
            return kExitOk;
        }
        err << e.what() << "\n" << app.help();
        return kExitInput;
    }

    try {
        if (*bounds) return cmd_bounds(cfg, in, out);
        if (*oracle) return cmd_oracle(cfg, in, out, err);
        if (*frac) return cmd_frac(cfg, in, out, err);
        if (*edge) return cmd_edgecolour(cfg, in, out, err);
        if (*line) return cmd_linegraph(cfg, in, out);
        if (*search) return cmd_search(cfg, out);
        if (*gen) return cmd_gen(cfg, out);
    } catch (const SizeLimitError& e) {
        err << "size limit: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    err << app.help();
    return kExitInput;
}

}  // namespace superlocal::cli
