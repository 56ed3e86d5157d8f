// graph6 short-form text encoding (n <= 62): one header byte n+63, then the
// upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed big-endian into
// 6-bit groups, each printed as group+63.  Decoding is strict: bad header,
// truncated or overlong body, and nonzero padding bits are all rejected.

#pragma once

#include <string>
#include <string_view>

#include "graph.hpp"

namespace cliquecycles {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error("graph6: empty string");
    const int header = static_cast<unsigned char>(text[0]);
    if (header == 126) throw Graph6Error("graph6: long-form encodings (n > 62) not supported");
    if (header <= 63 || header > 63 + kMaxVertices)
        throw Graph6Error("graph6: malformed header byte");
    const int n = header - 63;
    const int body_bits = n * (n - 1) / 2;
    const std::size_t body_bytes = (body_bits + 5) / 6;
    if (text.size() != 1 + body_bytes)
        throw Graph6Error("graph6: body length mismatch (expected " +
                          std::to_string(body_bytes) + " bytes after header)");

    std::array<VertexSet, kMaxVertices> rows{};
    int i = 0, j = 1;
    for (std::size_t byte = 0; byte < body_bytes; ++byte) {
        const int c = static_cast<unsigned char>(text[1 + byte]);
        if (c < 63 || c > 126) throw Graph6Error("graph6: byte out of printable range");
        const int group = c - 63;
        for (int k = 5; k >= 0; --k) {
            const int b = (group >> k) & 1;
            if (j >= n) {
                if (b) throw Graph6Error("graph6: nonzero padding bit");
                continue;
            }
            if (b) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_rows(n, rows);
}

}  // namespace cliquecycles
