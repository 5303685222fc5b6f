#include "superlocal/edge_color.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "superlocal/errors.hpp"
#include "superlocal/invariants.hpp"

namespace superlocal {

PartialEdgeColouring::PartialEdgeColouring(const Multigraph& g, int k)
    : g_(&g), k_(k), colour_(g.edge_count(), 0), at_(static_cast<std::size_t>(g.order()) * (k + 1), -1) {
    if (k < 0) throw DomainError("negative colour count");
}

int PartialEdgeColouring::coloured_count() const {
    return static_cast<int>(std::count_if(colour_.begin(), colour_.end(), [](int c) { return c != 0; }));
}

std::vector<int> PartialEdgeColouring::missing_colours(int v) const {
    std::vector<int> out;
    for (int c = 1; c <= k_; ++c)
        if (missing(v, c)) out.push_back(c);
    return out;
}

std::vector<int> PartialEdgeColouring::present_colours(int v) const {
    std::vector<int> out;
    for (int c = 1; c <= k_; ++c)
        if (!missing(v, c)) out.push_back(c);
    return out;
}

int PartialEdgeColouring::first_common_missing(int u, int v) const {
    for (int c = 1; c <= k_; ++c)
        if (missing(u, c) && missing(v, c)) return c;
    return 0;
}

void PartialEdgeColouring::assign(int edge, int c) {
    if (edge < 0 || edge >= g_->edge_count()) throw DomainError("edge id out of range");
    if (c < 1 || c > k_) throw DomainError("colour " + std::to_string(c) + " outside 1.." + std::to_string(k_));
    if (colour_[edge] != 0) throw DomainError("edge " + std::to_string(edge) + " is already coloured");
    const auto& e = g_->edge(edge);
    if (!missing(e.u, c) || !missing(e.v, c))
        throw DomainError("colour " + std::to_string(c) + " already present at an endpoint of edge " + std::to_string(edge));
    colour_[edge] = c;
    at_[index(e.u, c)] = edge;
    at_[index(e.v, c)] = edge;
}

void PartialEdgeColouring::uncolour(int edge) {
    int c = colour_[edge];
    if (c == 0) return;
    const auto& e = g_->edge(edge);
    at_[index(e.u, c)] = -1;
    at_[index(e.v, c)] = -1;
    colour_[edge] = 0;
}

bool PartialEdgeColouring::consistent() const {
    std::vector<int> rebuilt(at_.size(), -1);
    for (int id = 0; id < g_->edge_count(); ++id) {
        int c = colour_[id];
        if (c == 0) continue;
        if (c < 0 || c > k_) return false;
        const auto& e = g_->edge(id);
        for (int w : {e.u, e.v}) {
            if (rebuilt[index(w, c)] >= 0) return false;  // two edges of colour c meet at w
            rebuilt[index(w, c)] = id;
        }
    }
    return rebuilt == at_;
}

Fan build_maximal_fan(const PartialEdgeColouring& c, int edge, int hinge) {
    const auto& g = c.graph();
    const auto& e = g.edge(edge);
    if (c.coloured(edge)) throw DomainError("fan edge must be uncoloured");
    if (hinge != e.u && hinge != e.v) throw DomainError("hinge must be an endpoint of the fan edge");

    Fan fan;
    fan.uncoloured_edge = edge;
    fan.hinge = hinge;
    fan.members.push_back({e.other(hinge), edge, -1, 0});
    auto in_fan = [&](int v) {
        return std::any_of(fan.members.begin(), fan.members.end(), [&](const FanMember& m) { return m.vertex == v; });
    };
    for (bool extended = true; extended;) {
        extended = false;
        for (int i = 0; i < fan.size() && !extended; ++i) {
            for (int col = 1; col <= c.k() && !extended; ++col) {
                if (!c.missing(fan.members[i].vertex, col)) continue;
                int f = c.edge_at(hinge, col);
                if (f < 0) continue;
                int u = g.edge(f).other(hinge);
                if (in_fan(u)) continue;
                fan.members.push_back({u, f, i, col});
                extended = true;
            }
        }
    }
    fan.maximal = true;
    return fan;
}

PartialEdgeColouring rotate_fan(PartialEdgeColouring c, const Fan& fan, int j) {
    if (j < 1 || j > fan.size()) throw DomainError("fan index out of range");
    std::vector<int> chain;  // member indices from j back to 0
    for (int m = j - 1; m >= 0; m = fan.members[m].parent) chain.push_back(m);
    std::reverse(chain.begin(), chain.end());

    // members[chain[t]].edge takes the colour of members[chain[t+1]].edge.
    std::vector<int> shifted;
    for (std::size_t t = 1; t < chain.size(); ++t) {
        const auto& next = fan.members[chain[t]];
        if (next.parent != chain[t - 1] || c.colour(next.edge) != next.witness_colour)
            throw InternalError("fan witness chain broken at member " + std::to_string(chain[t]));
        shifted.push_back(next.witness_colour);
    }
    for (std::size_t t = 1; t < chain.size(); ++t) c.uncolour(fan.members[chain[t]].edge);
    try {
        for (std::size_t t = 0; t + 1 < chain.size(); ++t) c.assign(fan.members[chain[t]].edge, shifted[t]);
    } catch (const DomainError& err) {
        throw InternalError(std::string("fan rotation broke properness: ") + err.what());
    }
    return c;
}

namespace {

std::vector<int> kempe_path(const PartialEdgeColouring& c, int a, int b, int start, int* end) {
    std::vector<int> path;
    int cur = start;
    int col = c.missing(start, a) ? b : a;
    const int limit = c.graph().edge_count();
    for (int f = c.edge_at(cur, col); f >= 0; f = c.edge_at(cur, col)) {
        path.push_back(f);
        cur = c.graph().edge(f).other(cur);
        col = col == a ? b : a;
        if (static_cast<int>(path.size()) > limit) throw InternalError("alternating path did not terminate");
    }
    if (end) *end = cur;
    return path;
}

}  // namespace

int kempe_chain_end(const PartialEdgeColouring& c, int a, int b, int start) {
    int end = start;
    if (c.missing(start, a) || c.missing(start, b)) kempe_path(c, a, b, start, &end);
    return end;
}

PartialEdgeColouring kempe_swap(PartialEdgeColouring c, int a, int b, int start) {
    if (a == b) throw DomainError("kempe swap needs two distinct colours");
    if (a < 1 || b < 1 || a > c.k() || b > c.k()) throw DomainError("kempe swap colour out of range");
    if (!c.missing(start, a) && !c.missing(start, b))
        throw DomainError("kempe swap start vertex " + std::to_string(start) + " misses neither colour");
    auto path = kempe_path(c, a, b, start, nullptr);
    std::vector<int> old(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
        old[i] = c.colour(path[i]);
        c.uncolour(path[i]);
    }
    for (std::size_t i = 0; i < path.size(); ++i) c.assign(path[i], old[i] == a ? b : a);
    return c;
}

namespace {

bool try_direct(PartialEdgeColouring& c, int edge) {
    const auto& e = c.graph().edge(edge);
    if (int col = c.first_common_missing(e.u, e.v)) {
        c.assign(edge, col);
        return true;
    }
    return false;
}

enum class FanOutcome { unresolved, rotation, rotation_swap };

// Resolves the uncoloured fan edge when some two of the hinge and the fan
// members share a missing colour. Returns unresolved only for a size-2 fan
// whose missing sets are pairwise disjoint.
FanOutcome resolve_with_fan(PartialEdgeColouring& c, const Fan& fan) {
    const int h = fan.hinge;
    if (fan.size() < 2) throw InternalError("maximal fan of size 1 although direct colouring failed");

    for (int j = 1; j <= fan.size(); ++j) {
        if (!c.first_common_missing(h, fan.members[j - 1].vertex)) continue;
        c = rotate_fan(std::move(c), fan, j);
        int freed = fan.members[j - 1].edge;
        c.assign(freed, c.first_common_missing(h, fan.members[j - 1].vertex));
        return FanOutcome::rotation;
    }

    for (int j = 1; j < fan.size(); ++j) {
        for (int i = 0; i < j; ++i) {
            int alpha = c.first_common_missing(fan.members[i].vertex, fan.members[j].vertex);
            if (!alpha) continue;
            auto hinge_missing = c.missing_colours(h);
            if (hinge_missing.empty()) throw InternalError("hinge has no missing colour");
            int beta = hinge_missing.front();

            // At most one of members i, j ends the alpha/beta path through the hinge.
            int hinge_end = kempe_chain_end(c, alpha, beta, h);
            int x = fan.members[j].vertex == hinge_end ? i : j;
            c = kempe_swap(std::move(c), alpha, beta, fan.members[x].vertex);

            std::vector<int> chain;
            for (int m = x; m >= 0; m = fan.members[m].parent) chain.push_back(m);
            std::reverse(chain.begin(), chain.end());
            for (int m : chain) {
                if (!c.missing(fan.members[m].vertex, beta)) continue;
                c = rotate_fan(std::move(c), fan, m + 1);
                c.assign(fan.members[m].edge, beta);
                return FanOutcome::rotation_swap;
            }
            throw InternalError("no fan member misses beta after the kempe swap");
        }
    }

    if (fan.size() >= 3) throw InternalError("maximal fan of size >= 3 with pairwise disjoint missing sets");
    return FanOutcome::unresolved;
}

// For uncoloured xy: some β missing at x sits on yz; give that edge a colour
// γ missing at y and move β onto an edge zw of colour γ, provided w misses β.
// Then β is missing at both x and y.
bool try_beta_swap(PartialEdgeColouring& c, int edge) {
    const auto& g = c.graph();
    const auto& e = g.edge(edge);
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        for (int beta : c.missing_colours(x)) {
            int eb = c.edge_at(y, beta);
            if (eb < 0) continue;
            int z = g.edge(eb).other(y);
            for (int gamma : c.missing_colours(y)) {
                int f = c.edge_at(z, gamma);
                if (f < 0) continue;
                int w = g.edge(f).other(z);
                if (w == x || w == y || !c.missing(w, beta)) continue;
                c.uncolour(eb);
                c.uncolour(f);
                c.assign(eb, gamma);
                c.assign(f, beta);
                c.assign(edge, beta);
                return true;
            }
        }
    }
    return false;
}

bool try_fans(PartialEdgeColouring& c, int edge, EdgeColourStats* stats) {
    const auto& e = c.graph().edge(edge);
    for (int hinge : {e.v, e.u}) {
        auto outcome = resolve_with_fan(c, build_maximal_fan(c, edge, hinge));
        if (outcome == FanOutcome::unresolved) continue;
        if (stats) ++(outcome == FanOutcome::rotation ? stats->rotation : stats->rotation_swap);
        return true;
    }
    return false;
}

}  // namespace

PartialEdgeColouring fan_sequence_resolve(PartialEdgeColouring c, const Fan& start, EdgeColourStats* stats) {
    const auto& g = c.graph();
    if (start.size() != 2) throw DomainError("fan sequence starts from a maximal fan of size 2");

    int edge = start.uncoloured_edge;
    int tail = start.members[0].vertex;  // v_i
    int hinge = start.hinge;             // v_{i+1}
    std::vector<int> alphas;
    const long long guard = 4LL * std::max(1, c.k()) * std::max(1, g.edge_count());

    try {
        for (long long step = 0; step < guard; ++step) {
            if (stats) ++stats->sequence_steps;
            if (try_direct(c, edge)) {
                if (stats) ++stats->direct;
                return c;
            }
            if (try_fans(c, edge, stats)) return c;
            if (try_beta_swap(c, edge)) {
                if (stats) ++stats->beta_swap;
                return c;
            }

            Fan fan = build_maximal_fan(c, edge, hinge);
            int alpha = alphas.size() < 2 ? c.missing_colours(tail).front() : alphas[alphas.size() - 2];
            if (!c.missing(tail, alpha)) throw InternalError("alternating colour not missing along the fan sequence");
            alphas.push_back(alpha);

            int next = c.edge_at(hinge, alpha);
            if (next < 0) throw InternalError("fan sequence colour absent at the hinge; the fan was not maximal");
            int far = g.edge(next).other(hinge);
            if (far != fan.members[1].vertex) throw InternalError("fan sequence left its size-2 fan");

            c.uncolour(next);
            c.assign(edge, alpha);
            edge = next;
            tail = hinge;
            hinge = far;
        }
    } catch (const DomainError& err) {
        throw InternalError(std::string("fan sequence primitive failed: ") + err.what());
    }
    throw InternalError("fan sequence exceeded " + std::to_string(guard) + " steps");
}

void insert_edge(PartialEdgeColouring& c, int edge, EdgeColourStats* stats) {
    if (c.coloured(edge)) throw DomainError("edge " + std::to_string(edge) + " is already coloured");
    try {
        if (try_direct(c, edge)) {
            if (stats) ++stats->direct;
        } else if (!try_fans(c, edge, stats)) {
            if (stats) ++stats->fan_sequence;
            c = fan_sequence_resolve(std::move(c), build_maximal_fan(c, edge, c.graph().edge(edge).v), stats);
        }
    } catch (const DomainError& err) {
        throw InternalError(std::string("edge colouring primitive failed: ") + err.what());
    }
    if (!c.coloured(edge)) throw InternalError("edge " + std::to_string(edge) + " left uncoloured");
}

EdgeColouringResult edge_colour(const Multigraph& g) {
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    return edge_colour(g, order);
}

EdgeColouringResult edge_colour(const Multigraph& g, std::span<const int> order) {
    const int k = gamma_bar_ll(g);
    EdgeColouringResult result{k, PartialEdgeColouring(g, k), {}};
    std::vector<char> seen(g.edge_count(), 0);
    if (static_cast<int>(order.size()) != g.edge_count()) throw DomainError("insertion order must list every edge once");
    for (int id : order) {
        if (id < 0 || id >= g.edge_count() || seen[id]) throw DomainError("insertion order must list every edge once");
        seen[id] = 1;
    }

    for (int id : order) insert_edge(result.colouring, id, &result.stats);
    if (!result.colouring.consistent()) throw InternalError("final edge colouring is not proper");
    return result;
}

}  // namespace superlocal
