#include "superlocal/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "superlocal/cliques.hpp"
#include "superlocal/errors.hpp"
#include "superlocal/frac_color.hpp"
#include "superlocal/graph6.hpp"
#include "superlocal/stable_sets.hpp"

namespace superlocal::harness {

namespace {

// ------------------------------------------------------------------ canonical form

// Colour refinement starting from degrees. Colour ids are ranks of sorted
// signatures, so they do not depend on the labelling.
std::vector<int> refined_colours(const SimpleGraph& g) {
    const int n = g.order();
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for_each_vertex(g.neighbours(v), [&](int w) { sig[v].second.push_back(colour[w]); });
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        if (distinct.size() == classes) return colour;
        classes = distinct.size();
    }
}

struct Canonical {
    std::uint64_t code = 0;
    std::vector<int> order;  // position -> vertex
};

Canonical canonicalise(const SimpleGraph& g) {
    const int n = g.order();
    if (n > kEnumerationLimit)
        throw SizeLimitError("canonical form limited to " + std::to_string(kEnumerationLimit) + " vertices");
    auto colour = refined_colours(g);
    std::vector<int> slot(n);  // required colour per position
    {
        auto sorted = colour;
        std::sort(sorted.begin(), sorted.end());
        slot = sorted;
    }
    const int total_bits = n * (n - 1) / 2;

    Canonical best;
    bool have_best = false;
    std::vector<int> order(n);
    VertexMask used = 0;

    std::function<void(int, std::uint64_t)> place = [&](int j, std::uint64_t code) {
        if (j == n) {
            if (!have_best || code < best.code) {
                best.code = code;
                best.order = order;
                have_best = true;
            }
            return;
        }
        const int bits = j * (j + 1) / 2;
        for (int v = 0; v < n; ++v) {
            if ((used & bit(v)) || colour[v] != slot[j]) continue;
            std::uint64_t next = code;
            for (int i = 0; i < j; ++i) next = (next << 1) | (g.adjacent(order[i], v) ? 1U : 0U);
            if (have_best && next > (best.code >> (total_bits - bits))) continue;
            order[j] = v;
            used |= bit(v);
            place(j + 1, next);
            used &= ~bit(v);
        }
    };
    place(0, 0);
    return best;
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& order) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacent(order[i], order[j])) edges.emplace_back(i, j);
    return SimpleGraph(g.order(), edges);
}

// ------------------------------------------------------------------ randomness

std::mt19937_64 item_rng(std::uint64_t seed, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Probability {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};

Probability to_probability(const Rational& p) {
    return {boost::multiprecision::numerator(p).convert_to<std::uint64_t>(),
            boost::multiprecision::denominator(p).convert_to<std::uint64_t>()};
}

bool bernoulli(std::mt19937_64& rng, Probability p) { return rng() % p.den < p.num; }

SimpleGraph random_simple(std::mt19937_64& rng, int n, Probability p) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (bernoulli(rng, p)) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

SimpleGraph random_co_triangle_free(std::mt19937_64& rng, int n, Probability p) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
    std::vector<VertexMask> adj(n, 0);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : pairs) {
        if (!bernoulli(rng, p) || (adj[u] & adj[v])) continue;
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        edges.emplace_back(u, v);
    }
    return complement(SimpleGraph(n, edges));
}

// One arc from most points, lengths close to a common value, so powers of
// cycles (fractional χ_f) appear alongside interval-like graphs.
SimpleGraph random_circular(std::mt19937_64& rng, int n) {
    const int base = uniform(rng, 1, std::max(1, (n - 1) / 2));
    std::vector<CircularArc> arcs;
    for (int s = 0; s < n; ++s) {
        if (rng() % 8 == 0) continue;
        arcs.push_back({s, rng() % 4 == 0 ? base - 1 : base});
    }
    if (rng() % 16 == 0) arcs.push_back({uniform(rng, 0, n - 1), n - 1});
    return realize_circular_interval(n, arcs);
}

Multigraph random_multigraph(std::mt19937_64& rng, int n, Probability p, int mu_max, int max_edges) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<PairMultiplicity> pairs;
        int edges = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (!bernoulli(rng, p)) continue;
                int m = uniform(rng, 1, mu_max);
                pairs.push_back({u, v, m});
                edges += m;
            }
        if (edges >= 1 && edges <= max_edges) return Multigraph(n, pairs);
    }
    throw DomainError("multigraph corpus parameters rarely give 1.." + std::to_string(max_edges) + " edges");
}

// ------------------------------------------------------------------ timing

class Timer {
public:
    Timer(bool enabled, std::vector<std::pair<std::string, std::int64_t>>& out) : enabled_(enabled), out_(out) {}

    template <class F>
    auto operator()(const std::string& label, F&& f) {
        auto start = std::chrono::steady_clock::now();
        struct Record {
            Timer& t;
            const std::string& label;
            std::chrono::steady_clock::time_point start;
            ~Record() {
                if (!t.enabled_) return;
                auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
                t.out_.emplace_back(label, us.count());
            }
        } record{*this, label, start};
        return f();
    }

private:
    bool enabled_;
    std::vector<std::pair<std::string, std::int64_t>>& out_;
};

ClaimResult result(Verdict v, std::string note = {}) { return {v, std::move(note)}; }

ClaimResult compare(bool holds, std::string what) {
    return holds ? result(Verdict::holds) : result(Verdict::violated, std::move(what));
}

Verdict lookup(const std::map<Claim, ClaimResult>& claims, Claim c) {
    auto it = claims.find(c);
    return it == claims.end() ? Verdict::not_applicable : it->second.verdict;
}

bool any_bug(const std::map<Claim, ClaimResult>& claims) {
    for (const auto& [c, r] : claims)
        if (is_proven(c) && r.verdict == Verdict::violated) return true;
    return false;
}

std::string rat(const Rational& q) { return superlocal::to_string(q); }

// Stable sets by include/exclude branching; visit sees every stable set.
void for_each_stable_set(const SimpleGraph& g, const std::function<bool(VertexMask)>& visit) {
    const int n = g.order();
    std::function<bool(int, VertexMask, VertexMask)> go = [&](int v, VertexMask set, VertexMask blocked) {
        if (v == n) return visit(set);
        if (!go(v + 1, set, blocked)) return false;
        if (blocked & bit(v)) return true;
        return go(v + 1, set | bit(v), blocked | g.neighbours(v));
    };
    go(0, 0, 0);
}

}  // namespace

// ---------------------------------------------------------------- enumeration

std::uint64_t canonical_code(const SimpleGraph& g) { return canonicalise(g).code; }

SimpleGraph canonical_form(const SimpleGraph& g) { return relabel(g, canonicalise(g).order); }

std::vector<SimpleGraph> enumerate_all_graphs(int n) {
    if (n < 1) throw DomainError("enumeration needs at least one vertex");
    if (n > kEnumerationLimit) throw SizeLimitError("enumeration limited to " + std::to_string(kEnumerationLimit) + " vertices");
    std::map<std::uint64_t, SimpleGraph> level{{0, SimpleGraph(1)}};
    for (int m = 2; m <= n; ++m) {
        std::map<std::uint64_t, SimpleGraph> next;
        for (const auto& [code, g] : level) {
            auto base = g.edges();
            for (VertexMask mask = 0; mask < bit(m - 1); ++mask) {
                auto edges = base;
                for_each_vertex(mask, [&](int u) { edges.emplace_back(u, m - 1); });
                SimpleGraph h(m, edges);
                auto canon = canonicalise(h);
                if (!next.count(canon.code)) next.emplace(canon.code, relabel(h, canon.order));
            }
        }
        level = std::move(next);
    }
    std::vector<SimpleGraph> out;
    out.reserve(level.size());
    for (auto& [code, g] : level) out.push_back(std::move(g));
    return out;
}

std::vector<SimpleGraph> enumerate_connected_graphs(int n) {
    auto all = enumerate_all_graphs(n);
    std::vector<SimpleGraph> out;
    for (auto& g : all)
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

// --------------------------------------------------------------------- corpus

CorpusSpec parse_corpus_spec(std::string_view text) {
    CorpusSpec spec;
    auto colon = text.find(':');
    std::string_view kind = text.substr(0, colon);
    if (kind == "simple") {
        spec.kind = CorpusKind::simple;
    } else if (kind == "multigraph" || kind == "multi") {
        spec.kind = CorpusKind::multigraph;
        spec.mu_max = 3;
    } else if (kind == "circular") {
        spec.kind = CorpusKind::circular_interval;
    } else if (kind == "cotf") {
        spec.kind = CorpusKind::co_triangle_free;
    } else {
        throw ParseError("unknown corpus kind '" + std::string(kind) + "'", 0);
    }

    bool have_n = false;
    std::size_t pos = colon == std::string_view::npos ? text.size() : colon + 1;
    auto integer = [&](std::string_view s, std::size_t at) {
        if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("expected a non-negative integer", at);
        return std::stoi(std::string(s));
    };
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        auto end = comma == std::string_view::npos ? text.size() : comma;
        auto item = text.substr(pos, end - pos);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key=value", pos);
        auto key = item.substr(0, eq);
        auto value = item.substr(eq + 1);
        std::size_t at = pos + eq + 1;
        if (key == "n") {
            auto dots = value.find("..");
            if (dots == std::string_view::npos) {
                spec.min_n = spec.max_n = integer(value, at);
            } else {
                spec.min_n = integer(value.substr(0, dots), at);
                spec.max_n = integer(value.substr(dots + 2), at + dots + 2);
            }
            have_n = true;
        } else if (key == "p") {
            try {
                spec.p = parse_rational(value);
            } catch (const ParseError& err) {
                throw ParseError("bad probability", at + err.offset());
            }
        } else if (key == "mu" && spec.kind == CorpusKind::multigraph) {
            spec.mu_max = integer(value, at);
        } else if (key == "edges" && spec.kind == CorpusKind::multigraph) {
            spec.max_edges = integer(value, at);
        } else {
            throw ParseError("unknown corpus parameter '" + std::string(key) + "'", pos);
        }
        pos = end + (comma == std::string_view::npos ? 0 : 1);
    }
    if (!have_n) throw ParseError("corpus spec needs n", text.size());

    const int min_order = spec.kind == CorpusKind::multigraph ? 2 : 1;
    if (spec.min_n < min_order || spec.min_n > spec.max_n || spec.max_n > kMaxVertices)
        throw DomainError("corpus order range must lie in " + std::to_string(min_order) + ".." + std::to_string(kMaxVertices));
    if (spec.p < 0 || spec.p > 1) throw DomainError("probability must lie in [0, 1]");
    if (boost::multiprecision::denominator(spec.p) > BigInt(1) << 62) throw DomainError("probability denominator too large");
    if (spec.mu_max < 1) throw DomainError("mu must be at least 1");
    if (spec.max_edges < 1 || spec.max_edges > kMaxVertices) throw DomainError("edges must lie in 1..64");
    return spec;
}

std::string to_string(const CorpusSpec& spec) {
    std::string out;
    switch (spec.kind) {
        case CorpusKind::simple: out = "simple"; break;
        case CorpusKind::multigraph: out = "multigraph"; break;
        case CorpusKind::circular_interval: out = "circular"; break;
        case CorpusKind::co_triangle_free: out = "cotf"; break;
    }
    out += ":n=" + std::to_string(spec.min_n);
    if (spec.max_n != spec.min_n) out += ".." + std::to_string(spec.max_n);
    if (spec.kind != CorpusKind::circular_interval) out += ",p=" + rat(spec.p);
    if (spec.kind == CorpusKind::multigraph)
        out += ",mu=" + std::to_string(spec.mu_max) + ",edges=" + std::to_string(spec.max_edges);
    return out;
}

SimpleGraph realize_circular_interval(int n, const std::vector<CircularArc>& arcs) {
    if (n < 0 || n > kMaxVertices) throw DomainError("circular interval order must lie in 0..64");
    std::vector<VertexMask> adj(n, 0);
    for (const auto& arc : arcs) {
        if (arc.start < 0 || arc.start >= n || arc.length < 0) throw DomainError("arc outside the circle");
        VertexMask covered = 0;
        for (int s = 0; s <= std::min(arc.length, n - 1); ++s) covered |= bit((arc.start + s) % n);
        for_each_vertex(covered, [&](int v) { adj[v] |= covered & ~bit(v); });
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for_each_vertex(adj[u], [&](int v) {
            if (u < v) edges.emplace_back(u, v);
        });
    return SimpleGraph(n, edges);
}

std::vector<CorpusItem> random_corpus(const CorpusSpec& spec, std::uint64_t seed, int count) {
    if (count < 0) throw DomainError("corpus count must be non-negative");
    auto p = to_probability(spec.p);
    std::vector<CorpusItem> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        auto rng = item_rng(seed, i);
        CorpusItem item;
        item.id = std::to_string(seed) + "-" + std::to_string(i);
        int n = uniform(rng, spec.min_n, spec.max_n);
        switch (spec.kind) {
            case CorpusKind::simple: item.graph = random_simple(rng, n, p); break;
            case CorpusKind::co_triangle_free: item.graph = random_co_triangle_free(rng, n, p); break;
            case CorpusKind::circular_interval:
                item.graph = random_circular(rng, n);
                item.circular_interval = true;
                break;
            case CorpusKind::multigraph:
                item.multigraph = random_multigraph(rng, n, p, spec.mu_max, spec.max_edges);
                item.graph = line_graph(*item.multigraph);
                break;
        }
        out.push_back(std::move(item));
    }
    return out;
}

// --------------------------------------------------------------------- claims

namespace {
const std::pair<Claim, const char*> kClaimNames[] = {
    {Claim::theorem4, "thm4"},   {Claim::conjecture3, "conj3"}, {Claim::conjecture6, "conj6"},
    {Claim::theorem8, "thm8"},   {Claim::theorem9, "thm9"},     {Claim::theorem10, "thm10"},
    {Claim::theorem11, "thm11"}, {Claim::line_graph, "linegraph"}, {Claim::question, "question"},
};
}  // namespace

std::string to_string(Claim c) {
    for (auto [claim, name] : kClaimNames)
        if (claim == c) return name;
    return "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::not_applicable: return "n/a";
    }
    return "unknown";
}

Claim parse_claim(std::string_view name) {
    for (auto [claim, text] : kClaimNames)
        if (name == text) return claim;
    throw DomainError("unknown claim '" + std::string(name) + "'");
}

std::set<Claim> parse_claims(std::string_view list) {
    std::set<Claim> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        auto comma = list.find(',', pos);
        auto end = comma == std::string_view::npos ? list.size() : comma;
        auto name = list.substr(pos, end - pos);
        if (name == "all") {
            out.insert(all_claims().begin(), all_claims().end());
        } else if (!name.empty()) {
            out.insert(parse_claim(name));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw DomainError("no claims selected");
    return out;
}

const std::set<Claim>& all_claims() {
    static const std::set<Claim> all = [] {
        std::set<Claim> s;
        for (auto [claim, name] : kClaimNames) s.insert(claim);
        return s;
    }();
    return all;
}

bool is_proven(Claim c) {
    return c != Claim::conjecture3 && c != Claim::conjecture6 && c != Claim::question;
}

Limits Limits::capped(int n) const {
    Limits out = *this;
    for (int* limit : {&out.stable_sets, &out.chromatic, &out.matching, &out.question, &out.enumeration, &out.brute_force_edges})
        *limit = std::min(*limit, n);
    return out;
}

Verdict BoundReport::verdict(Claim c) const { return lookup(claims, c); }
bool BoundReport::bug() const { return any_bug(claims); }
Verdict MultigraphReport::verdict(Claim c) const { return lookup(claims, c); }
bool MultigraphReport::bug() const { return any_bug(claims); }

// --------------------------------------------------------------------- checks

BoundReport check_graph(const SimpleGraph& g, const CheckOptions& options, std::string id) {
    BoundReport r;
    r.id = std::move(id);
    r.encoding = encode_graph6(g);
    r.n = g.order();
    r.m = g.size();
    Timer time(options.timings, r.timings_us);
    const auto& lim = options.limits;
    auto wants = [&](Claim c) { return options.claims.count(c) > 0; };

    time("bounds", [&] {
        r.bounds = graph_bounds(g);
        r.clique_average = clique_average_bound(g);
    });

    std::string chi_note, chi_f_note, alpha_note;
    time("chi", [&] {
        try {
            r.chi = chromatic_number(g, lim.chromatic).chi;
        } catch (const SizeLimitError& err) {
            chi_note = err.what();
        }
    });
    time("alpha", [&] {
        try {
            r.alpha = stability_number(g, lim.stable_sets);
        } catch (const SizeLimitError& err) {
            alpha_note = err.what();
        }
    });
    time("chi_f", [&] {
        try {
            r.chi_f = fractional_chromatic_number(g, lim.stable_sets).value;
        } catch (const SizeLimitError& err) {
            chi_f_note = err.what();
        }
    });

    if (wants(Claim::theorem4)) {
        time("algorithm", [&] {
            ClaimResult cr;
            try {
                auto sc = superlocal_fractional_colour(g, r.bounds.gamma_ll_prime, lim.stable_sets);
                r.algorithm_total = sc.total;
                auto check = verify_fractional_colouring(g, sc.colouring, r.bounds.gamma_ll_prime);
                if (!check.valid())
                    cr = result(Verdict::violated, "algorithm output invalid: " + check.violations.front().describe());
                else if (r.chi_f)
                    cr = compare(*r.chi_f <= r.bounds.gamma_ll_prime,
                                 "chi_f " + rat(*r.chi_f) + " > gamma_ll_prime " + rat(r.bounds.gamma_ll_prime));
                else
                    cr = result(Verdict::holds, "certified by the algorithm only: " + chi_f_note);
            } catch (const SizeLimitError& err) {
                cr = result(Verdict::not_applicable, err.what());
            } catch (const InternalError& err) {
                cr = result(Verdict::violated, err.what());
            }
            r.claims[Claim::theorem4] = cr;
        });
    }

    auto need_chi = [&](Claim c, const std::function<ClaimResult()>& f) {
        if (!wants(c)) return;
        r.claims[c] = r.chi ? f() : result(Verdict::not_applicable, chi_note);
    };
    auto need_chi_f = [&](Claim c, const std::function<ClaimResult()>& f) {
        if (!wants(c)) return;
        r.claims[c] = r.chi_f ? f() : result(Verdict::not_applicable, chi_f_note);
    };
    const BigInt& gll = r.bounds.gamma_ll;

    need_chi(Claim::conjecture3, [&] {
        return compare(BigInt(*r.chi) <= gll, "chi " + std::to_string(*r.chi) + " > gamma_ll " + gll.str());
    });
    need_chi_f(Claim::conjecture6, [&] {
        return compare(*r.chi_f <= r.clique_average,
                       "chi_f " + rat(*r.chi_f) + " > clique average " + rat(r.clique_average));
    });

    if (options.circular_interval) {
        need_chi(Claim::theorem8, [&] {
            if (!r.chi_f) return result(Verdict::not_applicable, chi_f_note);
            return compare(BigInt(*r.chi) == ceil(*r.chi_f),
                           "chi " + std::to_string(*r.chi) + " != ceil(chi_f) for chi_f " + rat(*r.chi_f));
        });
        need_chi(Claim::theorem9, [&] {
            return compare(BigInt(*r.chi) <= gll, "chi " + std::to_string(*r.chi) + " > gamma_ll " + gll.str());
        });
    } else {
        for (Claim c : {Claim::theorem8, Claim::theorem9})
            if (wants(c)) r.claims[c] = result(Verdict::not_applicable, "not a circular interval input");
    }

    if (wants(Claim::theorem10)) {
        time("matching", [&] {
            if (!r.alpha) {
                r.claims[Claim::theorem10] = result(Verdict::not_applicable, alpha_note);
            } else if (*r.alpha > 2) {
                r.claims[Claim::theorem10] = result(Verdict::not_applicable, "alpha > 2");
            } else {
                try {
                    r.chi_matching = chi_via_complement_matching(g, lim.matching).chi;
                    std::string why;
                    if (BigInt(*r.chi_matching) > gll)
                        why = "matching chi " + std::to_string(*r.chi_matching) + " > gamma_ll " + gll.str();
                    else if (r.chi && *r.chi != *r.chi_matching)
                        why = "matching chi " + std::to_string(*r.chi_matching) + " != chi " + std::to_string(*r.chi);
                    r.claims[Claim::theorem10] = compare(why.empty(), why);
                } catch (const SizeLimitError& err) {
                    r.claims[Claim::theorem10] = result(Verdict::not_applicable, err.what());
                }
            }
        });
    }

    if (wants(Claim::question)) {
        time("question", [&] {
            if (g.order() > lim.question) {
                r.claims[Claim::question] =
                    result(Verdict::not_applicable, "more than " + std::to_string(lim.question) + " vertices");
                return;
            }
            r.question_bound = subgraph_neighbourhood_bound(g, lim.question);
            r.claims[Claim::question] = r.chi_f ? compare(*r.chi_f <= *r.question_bound, "chi_f " + rat(*r.chi_f) +
                                                                                            " > subgraph bound " +
                                                                                            rat(*r.question_bound))
                                                : result(Verdict::not_applicable, chi_f_note);
        });
    }
    return r;
}

std::string one_line(const Multigraph& g) {
    auto text = encode_multigraph(g);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    std::replace(text.begin(), text.end(), '\n', '/');
    return text;
}

MultigraphReport check_multigraph(const Multigraph& g, const CheckOptions& options, std::string id) {
    MultigraphReport r;
    r.id = std::move(id);
    r.encoding = one_line(g);
    r.n = g.order();
    r.edges = g.edge_count();
    Timer time(options.timings, r.timings_us);
    auto wants = [&](Claim c) { return options.claims.count(c) > 0; };

    if (r.edges == 0) {
        for (Claim c : {Claim::theorem11, Claim::line_graph})
            if (wants(c)) r.claims[c] = result(Verdict::not_applicable, "no edges");
        return r;
    }
    r.gamma_bar_ll = gamma_bar_ll(g);

    if (wants(Claim::theorem11)) {
        time("edge_colour", [&] {
            try {
                auto res = edge_colour(g);
                r.k = res.k;
                r.stats = res.stats;
                r.proper = res.colouring.consistent() && res.colouring.coloured_count() == r.edges;
                for (int e = 0; e < r.edges && r.proper; ++e)
                    r.proper = res.colouring.colour(e) >= 1 && res.colouring.colour(e) <= r.gamma_bar_ll;
            } catch (const InternalError& err) {
                r.claims[Claim::theorem11] = result(Verdict::violated, err.what());
            }
        });
        if (r.edges <= options.limits.brute_force_edges)
            time("chi_prime", [&] { r.chi_prime = brute_force_chromatic_number(line_graph(g)); });
        if (!r.claims.count(Claim::theorem11)) {
            std::string why;
            if (!r.proper)
                why = "edge colouring not proper";
            else if (r.k != r.gamma_bar_ll)
                why = "used k " + std::to_string(r.k) + " != gamma_bar_ll " + std::to_string(r.gamma_bar_ll);
            else if (r.chi_prime && *r.chi_prime > r.k)
                why = "brute force chi' " + std::to_string(*r.chi_prime) + " > k " + std::to_string(r.k);
            r.claims[Claim::theorem11] = compare(why.empty(), why);
        }
    }

    if (wants(Claim::line_graph)) {
        if (r.edges < 2) {
            r.claims[Claim::line_graph] = result(Verdict::not_applicable, "fewer than two edges");
        } else if (r.edges > kMaxVertices) {
            r.claims[Claim::line_graph] = result(Verdict::not_applicable, "line graph exceeds 64 vertices");
        } else {
            time("line_graph", [&] { r.line_gamma_ll = gamma_ll(line_graph(g)); });
            r.claims[Claim::line_graph] = compare(*r.line_gamma_ll == r.gamma_bar_ll,
                                                  "gamma_ll(L(G)) " + r.line_gamma_ll->str() + " != gamma_bar_ll " +
                                                      std::to_string(r.gamma_bar_ll));
        }
    }
    return r;
}

// --------------------------------------------------------------- brute force

int brute_force_chromatic_number(const SimpleGraph& g) {
    const int n = g.order();
    if (n > kChromaticLimit) throw SizeLimitError("brute force colouring limited to 16 vertices");
    std::vector<int> colour(n, -1);
    for (int k = n == 0 ? 0 : 1;; ++k) {
        std::function<bool(int, int)> extend = [&](int v, int used) {
            if (v == n) return true;
            for (int c = 0; c < std::min(k, used + 1); ++c) {
                bool ok = true;
                for (int u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && colour[u] == c);
                if (!ok) continue;
                colour[v] = c;
                if (extend(v + 1, std::max(used, c + 1))) return true;
            }
            return false;
        };
        if (extend(0, 0)) return k;
    }
}

bool certificate_holds(const SimpleGraph& g, const FractionalChromaticResult& lp) {
    const int n = g.order();
    if (n > 20) throw SizeLimitError("certificate check limited to 20 vertices");
    if (lp.columns.size() != lp.stable_set_weights.size() || static_cast<int>(lp.clique_weights.size()) != n) return false;

    Rational primal = 0;
    std::vector<Rational> cover(n);
    for (std::size_t j = 0; j < lp.columns.size(); ++j) {
        VertexMask s = lp.columns[j];
        if (s & ~g.vertices()) return false;
        bool stable = true;
        for_each_vertex(s, [&](int v) { stable = stable && !(g.neighbours(v) & s); });
        if (!stable || lp.stable_set_weights[j] < 0) return false;
        primal += lp.stable_set_weights[j];
        for_each_vertex(s, [&](int v) { cover[v] += lp.stable_set_weights[j]; });
    }
    for (int v = 0; v < n; ++v)
        if (cover[v] < 1 || lp.clique_weights[v] < 0) return false;

    Rational dual = 0;
    for (const auto& y : lp.clique_weights) dual += y;
    bool packing = true;
    for_each_stable_set(g, [&](VertexMask s) {
        Rational load = 0;
        for_each_vertex(s, [&](int v) { load += lp.clique_weights[v]; });
        packing = load <= 1;
        return packing;
    });
    return packing && primal == lp.value && dual == lp.value;
}

// --------------------------------------------------------------------- search

namespace {

struct Task {
    std::string id;
    SimpleGraph graph;
    std::optional<Multigraph> multigraph;
    bool circular = false;
};

struct Outcome {
    std::optional<BoundReport> report;
    std::optional<MultigraphReport> multigraph_report;
    std::exception_ptr error;
};

// Independent confirmation of a conjecture witness; false means the oracles disagree.
bool reverify(const BoundReport& r, Claim c, const SimpleGraph& g) {
    switch (c) {
        case Claim::conjecture3: return BigInt(brute_force_chromatic_number(g)) > gamma_ll(g);
        case Claim::conjecture6: {
            auto lp = fractional_chromatic_number(g);
            return certificate_holds(g, lp) && lp.value == *r.chi_f && lp.value > clique_average_bound(g);
        }
        case Claim::question: {
            auto lp = fractional_chromatic_number(g);
            return certificate_holds(g, lp) && lp.value == *r.chi_f && lp.value > subgraph_neighbourhood_bound(g);
        }
        default: return false;
    }
}

template <class Report>
void tally(std::map<Claim, ClaimTally>& tallies, const Report& r) {
    for (const auto& [c, res] : r.claims) {
        auto& t = tallies[c];
        switch (res.verdict) {
            case Verdict::holds: ++t.holds; break;
            case Verdict::violated: ++t.violated; break;
            case Verdict::not_applicable: ++t.not_applicable; break;
        }
    }
}

template <class Report>
void raise_if_bug(const Report& r) {
    for (const auto& [c, res] : r.claims)
        if (is_proven(c) && res.verdict == Verdict::violated)
            throw InternalError("proven claim " + to_string(c) + " violated on " + r.encoding + " (" + r.id + "): " + res.note);
}

template <class Report>
bool by_encoding(const Report& a, const Report& b) {
    return std::tie(a.encoding, a.id) < std::tie(b.encoding, b.id);
}

}  // namespace

SearchSummary search_counterexamples(const SearchSpace& space, const CheckOptions& options, unsigned threads) {
    std::vector<Task> tasks;
    if (space.kind == SearchSpace::Kind::enumeration) {
        if (space.max_n > options.limits.enumeration)
            throw SizeLimitError("enumeration limited to " + std::to_string(options.limits.enumeration) + " vertices");
        for (int n = 1; n <= space.max_n; ++n) {
            auto graphs = enumerate_connected_graphs(n);
            for (std::size_t i = 0; i < graphs.size(); ++i)
                tasks.push_back({"n" + std::to_string(n) + "-" + std::to_string(i), std::move(graphs[i]), std::nullopt, false});
        }
    } else {
        for (auto& item : random_corpus(space.corpus, space.seed, space.count))
            tasks.push_back({std::move(item.id), std::move(item.graph), std::move(item.multigraph), item.circular_interval});
    }

    std::vector<Outcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const auto& task = tasks[i];
            try {
                CheckOptions opt = options;
                opt.circular_interval = task.circular;
                outcomes[i].report = check_graph(task.graph, opt, task.id);
                if (task.multigraph) outcomes[i].multigraph_report = check_multigraph(*task.multigraph, opt, task.id);
            } catch (...) {
                outcomes[i].error = std::current_exception();
            }
        }
    };
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, tasks.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    for (const auto& o : outcomes)
        if (o.error) std::rethrow_exception(o.error);

    SearchSummary summary;
    summary.instances = static_cast<long>(tasks.size());
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i].report) summary.reports.push_back(std::move(*outcomes[i].report));
        if (outcomes[i].multigraph_report) summary.multigraph_reports.push_back(std::move(*outcomes[i].multigraph_report));
    }
    std::sort(summary.reports.begin(), summary.reports.end(), by_encoding<BoundReport>);
    std::sort(summary.multigraph_reports.begin(), summary.multigraph_reports.end(), by_encoding<MultigraphReport>);

    for (const auto& r : summary.reports) {
        raise_if_bug(r);
        tally(summary.tallies, r);
    }
    for (const auto& r : summary.multigraph_reports) {
        raise_if_bug(r);
        tally(summary.tallies, r);
    }

    for (const auto& r : summary.reports) {
        for (const auto& [c, res] : r.claims) {
            if (is_proven(c) || res.verdict != Verdict::violated) continue;
            auto g = parse_graph6(r.encoding);
            if (!reverify(r, c, g))
                throw InternalError("witness for " + to_string(c) + " on " + r.encoding + " failed brute-force re-verification");
            summary.findings.push_back({c, r.encoding, res.note, true});
        }
    }
    return summary;
}

// ---------------------------------------------------------------- serialisation

namespace {

using Json = nlohmann::ordered_json;

template <class T, class F>
Json optional_json(const std::optional<T>& v, F&& f) {
    return v ? Json(f(*v)) : Json(nullptr);
}

Json claims_json(const std::map<Claim, ClaimResult>& claims, bool notes) {
    Json out = Json::object();
    for (const auto& [c, r] : claims) {
        if (notes) {
            if (!r.note.empty()) out[to_string(c)] = r.note;
        } else {
            out[to_string(c)] = to_string(r.verdict);
        }
    }
    return out;
}

Json timings_json(const std::vector<std::pair<std::string, std::int64_t>>& t) {
    Json out = Json::object();
    for (const auto& [label, us] : t) out[label] = us;
    return out;
}

long long as_int(const BigInt& b) { return b.convert_to<long long>(); }

std::string csv_verdict(const std::map<Claim, ClaimResult>& claims, Claim c) {
    auto it = claims.find(c);
    return it == claims.end() ? "" : to_string(it->second.verdict);
}

}  // namespace

nlohmann::ordered_json to_json(const BoundReport& r, bool timings) {
    Json j;
    j["id"] = r.id;
    j["graph6"] = r.encoding;
    j["n"] = r.n;
    j["m"] = r.m;
    j["max_degree"] = r.bounds.max_degree;
    j["omega"] = r.bounds.omega;
    j["gamma_prime"] = rat(r.bounds.gamma_prime);
    j["gamma"] = as_int(r.bounds.gamma);
    j["gamma_local_prime"] = rat(r.bounds.gamma_local_prime);
    j["gamma_local"] = as_int(r.bounds.gamma_local);
    j["gamma_ll_prime"] = rat(r.bounds.gamma_ll_prime);
    j["gamma_ll"] = as_int(r.bounds.gamma_ll);
    j["clique_average"] = rat(r.clique_average);
    j["chi"] = optional_json(r.chi, [](int v) { return v; });
    j["chi_f"] = optional_json(r.chi_f, rat);
    j["alpha"] = optional_json(r.alpha, [](int v) { return v; });
    j["chi_matching"] = optional_json(r.chi_matching, [](int v) { return v; });
    j["algorithm_total"] = optional_json(r.algorithm_total, rat);
    j["question_bound"] = optional_json(r.question_bound, rat);
    j["verdicts"] = claims_json(r.claims, false);
    j["notes"] = claims_json(r.claims, true);
    if (timings) j["timings_us"] = timings_json(r.timings_us);
    return j;
}

nlohmann::ordered_json to_json(const MultigraphReport& r, bool timings) {
    Json j;
    j["id"] = r.id;
    j["multigraph"] = r.encoding;
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["gamma_bar_ll"] = r.gamma_bar_ll;
    j["k"] = r.k;
    j["proper"] = r.proper;
    j["chi_prime"] = optional_json(r.chi_prime, [](int v) { return v; });
    j["line_gamma_ll"] = optional_json(r.line_gamma_ll, as_int);
    j["stats"] = {{"direct", r.stats.direct},
                  {"rotation", r.stats.rotation},
                  {"rotation_swap", r.stats.rotation_swap},
                  {"fan_sequence", r.stats.fan_sequence},
                  {"beta_swap", r.stats.beta_swap}};
    j["verdicts"] = claims_json(r.claims, false);
    j["notes"] = claims_json(r.claims, true);
    if (timings) j["timings_us"] = timings_json(r.timings_us);
    return j;
}

nlohmann::ordered_json to_json(const Finding& f) {
    return Json{{"claim", to_string(f.claim)}, {"graph6", f.encoding}, {"detail", f.detail}, {"reverified", f.reverified}};
}

nlohmann::ordered_json to_json(const SearchSummary& s) {
    Json j;
    j["instances"] = s.instances;
    Json tallies = Json::object();
    for (const auto& [c, t] : s.tallies)
        tallies[to_string(c)] = {{"holds", t.holds}, {"violated", t.violated}, {"n/a", t.not_applicable}};
    j["claims"] = tallies;
    long conjecture_violations = 0;
    for (const auto& [c, t] : s.tallies)
        if (!is_proven(c)) conjecture_violations += t.violated;
    j["conjecture_violations"] = conjecture_violations;
    j["findings"] = Json::array();
    for (const auto& f : s.findings) j["findings"].push_back(to_json(f));
    return j;
}

std::string csv_header() {
    return "id,graph6,n,m,chi,chi_f,alpha,gamma_ll_prime,gamma_ll,clique_average,question_bound,"
           "thm4,conj3,conj6,thm8,thm9,thm10,question";
}

std::string csv_row(const BoundReport& r) {
    std::ostringstream out;
    auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    auto opt_rat = [](const std::optional<Rational>& v) { return v ? rat(*v) : std::string(); };
    out << r.id << ',' << r.encoding << ',' << r.n << ',' << r.m << ',' << opt_int(r.chi) << ',' << opt_rat(r.chi_f)
        << ',' << opt_int(r.alpha) << ',' << rat(r.bounds.gamma_ll_prime) << ',' << r.bounds.gamma_ll << ','
        << rat(r.clique_average) << ',' << opt_rat(r.question_bound);
    for (Claim c : {Claim::theorem4, Claim::conjecture3, Claim::conjecture6, Claim::theorem8, Claim::theorem9,
                    Claim::theorem10, Claim::question})
        out << ',' << csv_verdict(r.claims, c);
    return out.str();
}

std::string multigraph_csv_header() { return "id,multigraph,n,edges,gamma_bar_ll,k,chi_prime,line_gamma_ll,thm11,linegraph"; }

std::string multigraph_csv_row(const MultigraphReport& r) {
    std::ostringstream out;
    out << r.id << ',' << r.encoding << ',' << r.n << ',' << r.edges << ',' << r.gamma_bar_ll << ',' << r.k << ','
        << (r.chi_prime ? std::to_string(*r.chi_prime) : "") << ',' << (r.line_gamma_ll ? r.line_gamma_ll->str() : "")
        << ',' << csv_verdict(r.claims, Claim::theorem11) << ',' << csv_verdict(r.claims, Claim::line_graph);
    return out.str();
}

}  // namespace superlocal::harness
