// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "test_support.hpp"

#include "superlocal/cliques.hpp"
#include "superlocal/edge_color.hpp"
#include "superlocal/families.hpp"
#include "superlocal/frac_color.hpp"
#include "superlocal/graph6.hpp"
#include "superlocal/harness.hpp"
#include "superlocal/invariants.hpp"
#include "superlocal/oracles.hpp"
#include "superlocal/stable_sets.hpp"

using namespace superlocal;
using namespace testsupport;
namespace h = superlocal::harness;

namespace {

constexpr std::uint64_t kMultigraphSeed = 2024;
constexpr std::uint64_t kCircularSeed = 88;
constexpr std::uint64_t kCotfSeed = 99;

struct Failure {
    std::string why;
};

void require(bool ok, const std::string& why) {
    if (!ok) throw Failure{why};
}

std::string str(const Rational& r) {
    std::ostringstream s;
    s << r;
    return s.str();
}

// Weights on stable sets, positive, covering every vertex exactly once, total within bound.
bool valid_weighting(const SimpleGraph& g, const FractionalColouring& fc, const Rational& bound) {
    Rational total = 0;
    std::vector<std::pair<VertexMask, Rational>> list;
    for (const auto& [s, w] : fc.weights) {
        if (!brute_is_stable(g, s) || w <= 0) return false;
        total += w;
        list.emplace_back(s, w);
    }
    for (const auto& c : coverage(g.order(), list))
        if (c != 1) return false;
    return total <= bound;
}

bool proper_and_total(const PartialEdgeColouring& c) {
    const auto& g = c.graph();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (c.colour(e) < 1 || c.colour(e) > c.k()) return false;
        for (int f = e + 1; f < g.edge_count(); ++f) {
            const auto& x = g.edge(e);
            const auto& y = g.edge(f);
            if ((x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) && c.colour(e) == c.colour(f)) return false;
        }
    }
    return true;
}

Multigraph simple_multigraph(const SimpleGraph& g) {
    std::vector<PairMultiplicity> pairs;
    for (auto [u, v] : g.edges()) pairs.push_back({u, v, 1});
    return Multigraph(g.order(), pairs);
}

std::string criterion1() {
    long graphs = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const auto& g : h::enumerate_connected_graphs(n)) {
            ++graphs;
            const Rational bound = brute_gamma_ll_prime(g);
            auto sc = superlocal_fractional_colour(g);
            require(sc.bound == bound, "bound mismatch on " + encode_graph6(g));
            require(valid_weighting(g, sc.colouring, bound), "invalid weighting on " + encode_graph6(g));
            auto lp = fractional_chromatic_number(g);
            require(h::certificate_holds(g, lp), "uncertified LP on " + encode_graph6(g));
            require(lp.value <= bound, "chi_f " + str(lp.value) + " > " + str(bound) + " on " + encode_graph6(g));
        }
    }
    require(graphs == 996, "expected 996 connected classes, got " + std::to_string(graphs));
    return std::to_string(graphs) + " connected graphs, zero violations";
}

std::string criterion2() {
    auto c5 = families::cycle(5);
    require(fractional_chromatic_number(c5).value == Rational(5, 2), "chi_f(C5)");
    require(gamma_ll_prime(c5) == Rational(5, 2), "gamma_ll_prime(C5)");
    require(brute_chromatic(c5) == 3 && chromatic_number(c5).chi == 3, "chi(C5)");
    require(gamma_ll(c5) == 3, "gamma_ll(C5)");
    return "chi_f = gamma_ll_prime = 5/2, chi = gamma_ll = 3";
}

std::string criterion3() {
    auto ds = families::double_star();
    auto sc = superlocal_fractional_colour(ds);
    require(sc.total == 3, "algorithm total " + str(sc.total));
    require(fractional_chromatic_number(ds).value == 2, "chi_f(double star)");
    require(subgraph_neighbourhood_bound(ds) == Rational(5, 2), "subgraph bound");

    const int k = 6;
    auto pc = families::pendant_clique(k);
    auto avg = neighbourhood_average_bound(pc);
    require(avg == Rational(3 * k, 4) + 1 && avg == Rational(11, 2), "neighbourhood average " + str(avg));
    auto chi_f = fractional_chromatic_number(pc, pc.order()).value;
    require(chi_f == k, "chi_f(pendant clique) " + str(chi_f));
    require(avg < chi_f, "neighbourhood average not below chi_f");
    require(clique_average_bound(pc) == Rational(3 * k, 2), "clique average " + str(clique_average_bound(pc)));
    return "T = 3, chi_f = 2, subgraph bound 5/2; 11/2 < chi_f = 6, clique average 9";
}

std::vector<h::CorpusItem> multigraph_corpus() {
    return h::random_corpus(h::parse_corpus_spec("multigraph:n=2..8,p=1/2,mu=3,edges=28"), kMultigraphSeed, 500);
}

std::string criterion4() {
    int brute = 0;
    for (const auto& item : multigraph_corpus()) {
        const auto& g = *item.multigraph;
        require(g.order() <= 8 && g.edge_count() <= 28, "corpus bounds on " + item.id);
        auto r = edge_colour(g);
        require(r.k == brute_gamma_bar_ll(g), "k differs from the bound on " + item.id);
        require(proper_and_total(r.colouring), "improper colouring on " + item.id);
        if (g.edge_count() <= 12) {
            ++brute;
            require(brute_chi_prime(g) <= r.k, "chi' exceeds the bound on " + item.id);
        }
    }
    for (int m = 1; m <= 6; ++m) require(edge_colour(make_multigraph(2, {{0, 1, m}})).k == m, "dipole");
    for (int mu = 1; mu <= 3; ++mu) {
        auto fat = make_multigraph(3, {{0, 1, mu}, {1, 2, mu}, {0, 2, mu}});
        auto r = edge_colour(fat);
        require(r.k == 3 * mu && proper_and_total(r.colouring) && brute_chi_prime(fat) == 3 * mu, "fat triangle");
    }
    auto pet = simple_multigraph(families::petersen());
    auto r = edge_colour(pet);
    require(r.k == 4 && proper_and_total(r.colouring) && brute_chi_prime(pet) == 4, "Petersen");
    return "500 multigraphs coloured with k colours, " + std::to_string(brute) +
           " checked by exhaustive chi'; fixed instances exact";
}

std::string criterion5() {
    int checked = 0;
    for (const auto& item : multigraph_corpus()) {
        const auto& g = *item.multigraph;
        if (g.edge_count() < 2) continue;
        ++checked;
        require(BigInt(gamma_bar_ll(g)) == gamma_ll(line_graph(g)), "line graph identity fails on " + item.id);
    }
    return std::to_string(checked) + " multigraphs with at least two edges";
}

std::string criterion6() {
    auto items = h::random_corpus(h::parse_corpus_spec("circular:n=3..10"), kCircularSeed, 200);
    for (const auto& item : items) {
        const auto& g = item.graph;
        require(g.order() <= 10, "order");
        int chi = h::brute_force_chromatic_number(g);
        require(chi == chromatic_number(g).chi, "chromatic oracles disagree on " + item.id);
        auto chi_f = fractional_chromatic_number(g).value;
        require(BigInt(chi) == ceil(chi_f), "chi != ceil(chi_f) on " + item.id);
        require(BigInt(chi) <= gamma_ll(g), "chi > gamma_ll on " + item.id);
    }
    return "200 circular-interval graphs";
}

std::string criterion7() {
    auto items = h::random_corpus(h::parse_corpus_spec("cotf:n=4..14"), kCotfSeed, 200);
    int compared = 0;
    for (const auto& item : items) {
        const auto& g = item.graph;
        require(g.order() <= 14, "order");
        auto r = chi_via_complement_matching(g);
        require(r.chi == g.order() - brute_matching(complement(g)), "matching formula on " + item.id);
        require(BigInt(r.chi) <= gamma_ll(g), "chi > gamma_ll on " + item.id);
        if (g.order() <= 12) {
            ++compared;
            require(chromatic_number(g).chi == r.chi, "branch and bound disagrees on " + item.id);
        }
    }
    return "200 co-triangle-free graphs, " + std::to_string(compared) + " compared with branch and bound";
}

std::string criterion8() {
    h::CheckOptions options;
    options.claims = {h::Claim::conjecture3, h::Claim::conjecture6};
    long violations = 0, instances = 0, findings = 0;
    auto absorb = [&](const h::SearchSummary& s) {
        instances += s.instances;
        for (auto c : options.claims) violations += s.tallies.count(c) ? s.tallies.at(c).violated : 0;
        for (const auto& f : s.findings) {
            ++findings;
            require(f.reverified, "unverified finding " + f.encoding);
        }
    };
    h::SearchSpace enumeration;
    enumeration.max_n = 7;
    absorb(h::search_counterexamples(enumeration, options));

    h::SearchSpace circular;
    circular.kind = h::SearchSpace::Kind::corpus;
    circular.corpus = h::parse_corpus_spec("circular:n=3..10");
    circular.seed = kCircularSeed;
    circular.count = 200;
    options.circular_interval = true;
    absorb(h::search_counterexamples(circular, options));
    options.circular_interval = false;

    h::SearchSpace cotf = circular;
    cotf.corpus = h::parse_corpus_spec("cotf:n=4..14");
    cotf.seed = kCotfSeed;
    absorb(h::search_counterexamples(cotf, options));

    return std::to_string(instances) + " instances, " + std::to_string(violations) + " counterexamples, " +
           std::to_string(findings) + " findings (all re-verified)";
}

std::string criterion9() {
    long graphs = 0, checks = 0;
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t code = 0; code < (1U << pairs); ++code) {
            std::vector<std::pair<int, int>> e;
            int b = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++b)
                    if (code >> b & 1) e.emplace_back(u, v);
            SimpleGraph g(n, e);
            ++graphs;
            // probabilities recomputed from the brute-force family
            auto family = brute_maximum_stable_sets(g);
            std::vector<Rational> p(n, 0);
            for (auto s : family)
                for (int v = 0; v < n; ++v)
                    if (s >> v & 1) p[v] += Rational(1, static_cast<long>(family.size()));
            require(p == membership_probabilities(g).p, "probabilities differ on " + encode_graph6(g));
            for (int v = 0; v < n; ++v) {
                Rational around = 0;
                for (int u = 0; u < n; ++u)
                    if (g.adjacent(u, v)) around += p[u];
                ++checks;
                require(around >= 2 - (brute_omega(g, bit(v)) + 1) * p[v], "vertex inequality on " + encode_graph6(g));
            }
            for (auto [u, v] : g.edges()) {
                Rational joint = 0, common = 0;
                for (int x = 0; x < n; ++x) {
                    if (g.adjacent(x, u) || g.adjacent(x, v)) joint += p[x];
                    if (g.adjacent(x, u) && g.adjacent(x, v)) common += p[x];
                }
                // joint neighbourhood excludes u and v themselves
                joint -= p[u] + p[v];
                ++checks;
                require(joint >= 4 - (brute_omega(g, bit(v)) + 2) * p[v] - (brute_omega(g, bit(u)) + 2) * p[u] - common,
                        "edge inequality on " + encode_graph6(g));
            }
        }
    }
    return std::to_string(graphs) + " labelled graphs, " + std::to_string(checks) + " inequalities";
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<std::string()>>> criteria{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
    int failed = 0;
    for (const auto& [number, check] : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict, detail;
        try {
            detail = check();
            verdict = "PASS";
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.why;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string("exception: ") + e.what();
        }
        failed += verdict == "FAIL";
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << verdict << " criterion " << number << ": " << detail << " [" << ms << " ms]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
