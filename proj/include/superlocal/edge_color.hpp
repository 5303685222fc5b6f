#pragma once

#include <span>
#include <vector>

#include "superlocal/multigraph.hpp"

namespace superlocal {

/// Colours are 1..k; colour 0 marks an uncoloured edge. For each vertex the
/// edge carrying each colour is indexed, so C(w) and C̄(w) are O(1) lookups.
/// Holds a pointer to its multigraph, which must outlive it.
class PartialEdgeColouring {
public:
    PartialEdgeColouring(const Multigraph& g, int k);

    const Multigraph& graph() const { return *g_; }
    int k() const { return k_; }

    int colour(int edge) const { return colour_[edge]; }
    bool coloured(int edge) const { return colour_[edge] != 0; }
    int coloured_count() const;

    /// Edge at v coloured c, or -1.
    int edge_at(int v, int c) const { return at_[index(v, c)]; }
    bool missing(int v, int c) const { return edge_at(v, c) < 0; }
    std::vector<int> missing_colours(int v) const;
    std::vector<int> present_colours(int v) const;
    int first_common_missing(int u, int v) const;  // 0 if none

    /// Colours an uncoloured edge; DomainError if c is present at an endpoint.
    void assign(int edge, int c);
    void uncolour(int edge);

    /// Proper and the per-vertex index agrees with a recomputation from the assignment.
    bool consistent() const;

private:
    std::size_t index(int v, int c) const { return static_cast<std::size_t>(v) * (k_ + 1) + c; }

    const Multigraph* g_;
    int k_;
    std::vector<int> colour_;
    std::vector<int> at_;
};

/// Member i of a fan hinged at `hinge`. Member 0 is the far end of the
/// uncoloured edge. For i ≥ 1, `edge` joins the hinge to `vertex` and its
/// colour `witness_colour` is missing at member `parent` < i.
struct FanMember {
    int vertex = -1;
    int edge = -1;
    int parent = -1;
    int witness_colour = 0;
};

struct Fan {
    int uncoloured_edge = -1;
    int hinge = -1;
    std::vector<FanMember> members;
    bool maximal = false;

    int size() const { return static_cast<int>(members.size()); }
};

/// Greedy maximal fan: repeatedly admits the first neighbour reachable from
/// the lowest-index member through its lowest missing colour.
Fan build_maximal_fan(const PartialEdgeColouring& c, int edge, int hinge);

/// Shifts colours along the witness chain from member j (1-based) back to
/// member 1, leaving the hinge–v_j edge uncoloured. j = 1 is the identity.
PartialEdgeColouring rotate_fan(PartialEdgeColouring c, const Fan& fan, int j);

/// Exchanges a and b along the maximal a/b-alternating path starting at
/// `start`. DomainError unless a ≠ b and start misses at least one of them;
/// if it misses both the colouring is returned unchanged.
PartialEdgeColouring kempe_swap(PartialEdgeColouring c, int a, int b, int start);

/// Other end of the a/b path from `start` (start itself if the path is empty).
int kempe_chain_end(const PartialEdgeColouring& c, int a, int b, int start);

struct EdgeColourStats {
    int direct = 0;         // endpoints shared a missing colour
    int rotation = 0;       // hinge shared a missing colour with a fan vertex
    int rotation_swap = 0;  // two fan vertices shared a missing colour
    int fan_sequence = 0;   // insertions that needed the fan sequence
    int beta_swap = 0;      // resolved by exchanging two edge colours
    int sequence_steps = 0;
};

/// Runs the overlapping size-2 fan sequence from a maximal fan whose
/// missing sets are pairwise disjoint, until some step admits a direct
/// colouring, a fan resolution or a β-swap. InternalError past 4·k·|E| steps.
PartialEdgeColouring fan_sequence_resolve(PartialEdgeColouring c, const Fan& start, EdgeColourStats* stats = nullptr);

/// Colours one uncoloured edge without adding colours, recolouring others as
/// needed: direct colouring, fan rotation, rotation plus Kempe swap, and
/// finally the fan sequence. Requires c.k() ≥ γ̄ℓℓ of the coloured edges
/// plus this one; InternalError if that guarantee fails.
void insert_edge(PartialEdgeColouring& c, int edge, EdgeColourStats* stats = nullptr);

struct EdgeColouringResult {
    int k = 0;
    PartialEdgeColouring colouring;
    EdgeColourStats stats;
};

/// Colours every edge with k = γ̄ℓℓ(G) colours, inserting edges in the given
/// order (id order by default). Throws InternalError if any guarantee fails.
EdgeColouringResult edge_colour(const Multigraph& g);
EdgeColouringResult edge_colour(const Multigraph& g, std::span<const int> order);

}  // namespace superlocal
