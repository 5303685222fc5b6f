#include "superlocal/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <utility>

#include "superlocal/errors.hpp"

namespace superlocal {

namespace {
constexpr int kMaxMultigraphOrder = 4096;
}

Multigraph::Multigraph(int n, std::vector<MultiEdge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > kMaxMultigraphOrder) throw DomainError("multigraph order out of range");
    mu_.assign(static_cast<std::size_t>(n) * n, 0);
    incident_.assign(n, {});
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        auto& e = edges_[id];
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw DomainError("edge endpoint out of range");
        if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        ++mu_[static_cast<std::size_t>(e.u) * n + e.v];
        ++mu_[static_cast<std::size_t>(e.v) * n + e.u];
        incident_[e.u].push_back(static_cast<int>(id));
        incident_[e.v].push_back(static_cast<int>(id));
    }
}

Multigraph::Multigraph(int n, std::span<const PairMultiplicity> pairs)
    : Multigraph(n, [&] {
          std::vector<MultiEdge> edges;
          for (const auto& p : pairs) {
              if (p.m < 1) throw DomainError("multiplicity must be at least 1");
              for (int i = 0; i < p.m; ++i) edges.push_back({p.u, p.v});
          }
          return edges;
      }()) {}

std::vector<int> Multigraph::neighbours(int v) const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
        if (adjacent(v, w)) out.push_back(w);
    return out;
}

std::vector<int> Multigraph::common_neighbours(int u, int v) const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
        if (w != u && w != v && adjacent(u, w) && adjacent(v, w)) out.push_back(w);
    return out;
}

std::vector<PairMultiplicity> Multigraph::pairs() const {
    std::vector<PairMultiplicity> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (int m = multiplicity(u, v)) out.push_back({u, v, m});
    return out;
}

Multigraph parse_multigraph(std::string_view text) {
    struct Token {
        long long value;
        std::size_t offset;
    };
    auto tokenize = [&](std::size_t begin, std::size_t end) {
        std::vector<std::pair<std::string_view, std::size_t>> words;
        std::size_t i = begin;
        while (i < end) {
            while (i < end && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < end && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') ++i;
            if (i > start) words.emplace_back(text.substr(start, i - start), start);
        }
        return words;
    };
    auto number = [](std::string_view word, std::size_t offset) {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc() || ptr != word.data() + word.size()) throw ParseError("expected integer", offset);
        return Token{value, offset};
    };

    int n = -1;
    std::vector<PairMultiplicity> pairs;
    std::set<std::pair<int, int>> seen;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find_first_of("\n/", line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::size_t content_end = line_end;
        if (auto hash = text.substr(line_start, line_end - line_start).find('#'); hash != std::string_view::npos)
            content_end = line_start + hash;
        auto words = tokenize(line_start, content_end);
        if (!words.empty()) {
            if (n < 0) {
                if (words.size() != 2 || words[0].first != "n") throw ParseError("expected header \"n <count>\"", words[0].second);
                Token count = number(words[1].first, words[1].second);
                if (count.value < 0 || count.value > kMaxMultigraphOrder) throw ParseError("vertex count out of range", count.offset);
                n = static_cast<int>(count.value);
            } else {
                if (words.size() != 3) throw ParseError("expected \"u v m\"", words[0].second);
                Token u = number(words[0].first, words[0].second);
                Token v = number(words[1].first, words[1].second);
                Token m = number(words[2].first, words[2].second);
                if (u.value < 0 || u.value >= n) throw ParseError("vertex id out of range", u.offset);
                if (v.value < 0 || v.value >= n) throw ParseError("vertex id out of range", v.offset);
                if (u.value == v.value) throw ParseError("loop edge", u.offset);
                if (m.value <= 0) throw ParseError("multiplicity must be at least 1", m.offset);
                if (m.value > 1'000'000) throw ParseError("multiplicity too large", m.offset);
                std::pair<int, int> key = std::minmax(static_cast<int>(u.value), static_cast<int>(v.value));
                if (!seen.insert(key).second) throw ParseError("duplicate vertex pair", u.offset);
                pairs.push_back({static_cast<int>(u.value), static_cast<int>(v.value), static_cast<int>(m.value)});
            }
        }
        line_start = line_end + 1;
    }
    if (n < 0) throw ParseError("missing header \"n <count>\"", 0);
    return Multigraph(n, pairs);
}

std::string encode_multigraph(const Multigraph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    std::set<std::pair<int, int>> written;
    for (const auto& e : g.edges()) {
        if (!written.insert({e.u, e.v}).second) continue;
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(g.multiplicity(e.u, e.v)) + "\n";
    }
    return out;
}

SimpleGraph line_graph(const Multigraph& g) {
    if (g.edge_count() == 0) throw DomainError("line graph of an edgeless multigraph is empty");
    if (g.edge_count() > kMaxVertices) throw SizeLimitError("line graph would exceed " + std::to_string(kMaxVertices) + " vertices");
    std::vector<std::pair<int, int>> adjacency;
    for (int a = 0; a < g.edge_count(); ++a) {
        for (int b = a + 1; b < g.edge_count(); ++b) {
            const auto& x = g.edge(a);
            const auto& y = g.edge(b);
            if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) adjacency.emplace_back(a, b);
        }
    }
    return SimpleGraph(g.edge_count(), adjacency);
}

}  // namespace superlocal
