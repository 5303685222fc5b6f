#include "superlocal/families.hpp"

#include <vector>

namespace superlocal::families {

namespace {
using EdgeList = std::vector<std::pair<int, int>>;
}

SimpleGraph empty(int n) { return SimpleGraph(n); }

SimpleGraph complete(int n) {
    EdgeList e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return SimpleGraph(n, e);
}

SimpleGraph path(int n) {
    EdgeList e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return SimpleGraph(n, e);
}

SimpleGraph cycle(int n) {
    EdgeList e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return SimpleGraph(n, e);
}

SimpleGraph star(int leaves) {
    EdgeList e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return SimpleGraph(leaves + 1, e);
}

SimpleGraph petersen() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return SimpleGraph(10, e);
}

SimpleGraph double_star() {
    EdgeList e{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
    return SimpleGraph(6, e);
}

SimpleGraph pendant_clique(int k) {
    EdgeList e;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
    int next = k;
    for (int u = 0; u < k; ++u)
        for (int i = 0; i < k; ++i) e.emplace_back(u, next++);
    return SimpleGraph(next, e);
}

SimpleGraph cocktail_party(int m) {
    EdgeList e;
    for (int u = 0; u < 2 * m; ++u)
        for (int v = u + 1; v < 2 * m; ++v)
            if (!(u % 2 == 0 && v == u + 1)) e.emplace_back(u, v);
    return SimpleGraph(2 * m, e);
}

}  // namespace superlocal::families
