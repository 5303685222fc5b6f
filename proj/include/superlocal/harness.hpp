#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "superlocal/edge_color.hpp"
#include "superlocal/graph.hpp"
#include "superlocal/invariants.hpp"
#include "superlocal/multigraph.hpp"
#include "superlocal/oracles.hpp"
#include "superlocal/rational.hpp"

namespace superlocal::harness {

inline constexpr int kEnumerationLimit = 8;
inline constexpr int kQuestionLimit = kSubgraphScanLimit;
inline constexpr int kBruteForceEdgeLimit = 12;

// ---------------------------------------------------------------- enumeration

/// Minimum column-wise adjacency code over all labellings that respect the
/// colour-refinement partition. Equal codes iff isomorphic. n ≤ 8.
std::uint64_t canonical_code(const SimpleGraph& g);
SimpleGraph canonical_form(const SimpleGraph& g);

/// One representative per isomorphism class, in canonical form, sorted by
/// canonical code. DomainError for n < 1, SizeLimitError for n > 8.
std::vector<SimpleGraph> enumerate_all_graphs(int n);
std::vector<SimpleGraph> enumerate_connected_graphs(int n);

// --------------------------------------------------------------------- corpus

enum class CorpusKind { simple, multigraph, circular_interval, co_triangle_free };

struct CorpusSpec {
    CorpusKind kind = CorpusKind::simple;
    int min_n = 1;  // each instance draws its order uniformly from min_n..max_n
    int max_n = 1;
    Rational p{1, 2};
    int mu_max = 1;       // multigraph only
    int max_edges = 28;   // multigraph only; instances above this are redrawn
};

/// "simple:n=8,p=1/2", "multigraph:n=2..8,p=1/2,mu=3,edges=28",
/// "circular:n=3..10", "cotf:n=4..14". ParseError on bad syntax,
/// DomainError on out-of-range parameters.
CorpusSpec parse_corpus_spec(std::string_view text);
std::string to_string(const CorpusSpec& spec);

struct CorpusItem {
    std::string id;  // "<seed>-<index>"
    SimpleGraph graph;                     // the line graph for multigraph items
    std::optional<Multigraph> multigraph;  // multigraph items only
    bool circular_interval = false;
};

/// Deterministic in (spec, seed, count). Items are independent: item i
/// depends only on (spec, seed, i).
std::vector<CorpusItem> random_corpus(const CorpusSpec& spec, std::uint64_t seed, int count);

/// Circular-interval graph on points 0..n-1 of a circle of length n; each arc
/// is (start, length) covering start, start+1, ..., start+length (mod n).
struct CircularArc {
    int start = 0;
    int length = 0;  // ≥ n - 1 covers the whole circle
};
SimpleGraph realize_circular_interval(int n, const std::vector<CircularArc>& arcs);

// --------------------------------------------------------------------- checks

enum class Claim { theorem4, conjecture3, conjecture6, theorem8, theorem9, theorem10, theorem11, line_graph, question };
enum class Verdict { holds, violated, not_applicable };

std::string to_string(Claim c);
std::string to_string(Verdict v);
Claim parse_claim(std::string_view name);  // DomainError on an unknown name
std::set<Claim> parse_claims(std::string_view list);  // comma separated
const std::set<Claim>& all_claims();
/// Proven results whose violation signals an implementation bug.
bool is_proven(Claim c);

struct Limits {
    int stable_sets = kStableSetLimit;
    int chromatic = kChromaticLimit;
    int matching = kMatchingLimit;
    int question = kQuestionLimit;
    int enumeration = kEnumerationLimit;
    int brute_force_edges = kBruteForceEdgeLimit;

    /// Every limit lowered to at most n.
    Limits capped(int n) const;
};

struct CheckOptions {
    std::set<Claim> claims = all_claims();
    bool circular_interval = false;
    bool timings = false;
    Limits limits;
};

struct ClaimResult {
    Verdict verdict = Verdict::not_applicable;
    std::string note;  // reason for not_applicable or description of a violation
};

struct BoundReport {
    std::string id;
    std::string encoding;  // graph6
    int n = 0;
    std::size_t m = 0;
    GraphBounds bounds;
    Rational clique_average;
    std::optional<int> chi;
    std::optional<Rational> chi_f;
    std::optional<int> alpha;
    std::optional<int> chi_matching;  // n − ν(complement), α ≤ 2 only
    std::optional<Rational> algorithm_total;
    std::optional<Rational> question_bound;
    std::map<Claim, ClaimResult> claims;
    std::vector<std::pair<std::string, std::int64_t>> timings_us;

    Verdict verdict(Claim c) const;
    bool bug() const;  // a proven claim is violated
};

BoundReport check_graph(const SimpleGraph& g, const CheckOptions& options = {}, std::string id = {});

struct MultigraphReport {
    std::string id;
    std::string encoding;  // one-line multigraph text
    int n = 0;
    int edges = 0;
    int gamma_bar_ll = 0;
    int k = 0;  // colours used by edge_colour
    bool proper = false;
    std::optional<int> chi_prime;      // brute force, few edges only
    std::optional<BigInt> line_gamma_ll;
    EdgeColourStats stats;
    std::map<Claim, ClaimResult> claims;
    std::vector<std::pair<std::string, std::int64_t>> timings_us;

    Verdict verdict(Claim c) const;
    bool bug() const;
};

MultigraphReport check_multigraph(const Multigraph& g, const CheckOptions& options = {}, std::string id = {});

/// Single-line multigraph text ('/' separates lines).
std::string one_line(const Multigraph& g);

// --------------------------------------------------------------- independent brute force

/// χ by plain backtracking over colour assignments, no ordering heuristics.
int brute_force_chromatic_number(const SimpleGraph& g);
/// Checks an LP optimum against every vertex subset: primal weights are on
/// stable sets and cover each vertex, dual weights are nonnegative and give
/// at most 1 to every stable set, and both objectives equal `value`.
bool certificate_holds(const SimpleGraph& g, const FractionalChromaticResult& lp);

// --------------------------------------------------------------------- search

struct SearchSpace {
    enum class Kind { enumeration, corpus } kind = Kind::enumeration;
    int max_n = 1;  // enumeration: connected graphs on 1..max_n vertices
    CorpusSpec corpus;
    std::uint64_t seed = 0;
    int count = 0;
};

struct Finding {
    Claim claim;
    std::string encoding;
    std::string detail;
    bool reverified = false;
};

struct ClaimTally {
    long holds = 0;
    long violated = 0;
    long not_applicable = 0;
};

struct SearchSummary {
    long instances = 0;
    std::map<Claim, ClaimTally> tallies;
    std::vector<Finding> findings;
    std::vector<BoundReport> reports;                 // sorted by encoding, then id
    std::vector<MultigraphReport> multigraph_reports; // sorted by encoding, then id
};

/// Runs the checks over the space on `threads` workers (0 = hardware
/// concurrency). Reports are merged in encoding order so the summary does not
/// depend on scheduling. A violated proven claim throws InternalError naming
/// the instance; conjecture witnesses are re-verified by brute force first.
SearchSummary search_counterexamples(const SearchSpace& space, const CheckOptions& options, unsigned threads = 0);

// ---------------------------------------------------------------- serialisation

nlohmann::ordered_json to_json(const BoundReport& r, bool timings = false);
nlohmann::ordered_json to_json(const MultigraphReport& r, bool timings = false);
nlohmann::ordered_json to_json(const SearchSummary& s);
nlohmann::ordered_json to_json(const Finding& f);

std::string csv_header();
std::string csv_row(const BoundReport& r);
std::string multigraph_csv_header();
std::string multigraph_csv_row(const MultigraphReport& r);

}  // namespace superlocal::harness
