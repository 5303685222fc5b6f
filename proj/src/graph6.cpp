#include "superlocal/graph6.hpp"

#include <vector>

#include "superlocal/errors.hpp"

namespace superlocal {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int chunk(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("truncated graph6 data", pos);
    int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", pos);
    return c - 63;
}

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.starts_with(kHeader)) pos = kHeader.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);

    std::size_t header_at = pos;
    long long n = chunk(text, pos++);
    if (n == 63) {
        if (pos < text.size() && text[pos] == '~') {
            ++pos;
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | chunk(text, pos++);
        } else {
            n = 0;
            for (int i = 0; i < 3; ++i) n = (n << 6) | chunk(text, pos++);
        }
    }
    if (n > kMaxVertices)
        throw ParseError("vertex count " + std::to_string(n) + " out of range (max " + std::to_string(kMaxVertices) + ")",
                         header_at);

    const int order = static_cast<int>(n);
    const std::size_t bits = static_cast<std::size_t>(order) * (order - (order > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    // a stray byte is a better diagnosis than a length mismatch
    for (std::size_t i = pos; i < text.size(); ++i) chunk(text, i);
    if (text.size() - pos < bytes) throw ParseError("truncated adjacency bit field", text.size());
    if (text.size() - pos > bytes) throw ParseError("trailing bytes after adjacency bit field", pos + bytes);

    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int value = chunk(text, pos + k / 6);
            if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        int value = chunk(text, pos + bytes - 1);
        if (value & ((1 << (6 - bits % 6)) - 1)) throw ParseError("nonzero padding bits", pos + bytes - 1);
    }
    return SimpleGraph(order, edges);
}

std::string encode_graph6(const SimpleGraph& g) {
    std::string out;
    const int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int value = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

}  // namespace superlocal
