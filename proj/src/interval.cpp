#include "superlocal/interval.hpp"

#include "superlocal/errors.hpp"

namespace superlocal {

void validate(const LinearIntervalRepresentation& rep) {
    if (rep.points.size() > static_cast<std::size_t>(kMaxVertices)) throw DomainError("too many points");
    for (std::size_t i = 1; i < rep.points.size(); ++i)
        if (!(rep.points[i - 1] < rep.points[i])) throw DomainError("interval points must increase strictly");
    for (const auto& iv : rep.intervals)
        if (iv.hi < iv.lo) throw DomainError("interval with hi < lo");
}

SimpleGraph realize_linear_interval(const LinearIntervalRepresentation& rep) {
    validate(rep);
    const int n = static_cast<int>(rep.points.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            for (const auto& iv : rep.intervals) {
                if (iv.contains(rep.points[u]) && iv.contains(rep.points[v])) {
                    edges.emplace_back(u, v);
                    break;
                }
            }
        }
    }
    return SimpleGraph(n, edges);
}

}  // namespace superlocal
