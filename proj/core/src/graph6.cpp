#include "zfx/graph6.hpp"

#include <istream>

#include "zfx/errors.hpp"

namespace zfx {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int decode_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6 line is truncated", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw ParseError("byte outside the graph6 range 63..126", pos);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t pos = 0;
    if (line.starts_with(kHeader)) pos = kHeader.size();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (pos >= line.size()) throw ParseError("empty graph6 line", pos);

    long n = decode_byte(line, pos);
    ++pos;
    if (n == 63) {
        // 63 <= n <= 258047: three 6-bit groups follow.
        if (pos < line.size() && line[pos] == '~') throw CapacityError("graph6 order above 258047 is not supported");
        n = 0;
        for (int i = 0; i < 3; ++i, ++pos) n = (n << 6) | decode_byte(line, pos);
    }
    if (n > kMaxVertices) throw CapacityError("graph6 order " + std::to_string(n) + " exceeds the 64-vertex capacity");

    const int order = static_cast<int>(n);
    const long bit_count = static_cast<long>(order) * (order - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bit_count + 5) / 6);
    if (line.size() < pos + body) throw ParseError("graph6 line is truncated", line.size());
    if (line.size() > pos + body) throw ParseError("unexpected trailing bytes", pos + body);

    GraphBuilder b(order);
    long t = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
            const std::size_t at = pos + static_cast<std::size_t>(t / 6);
            const int value = decode_byte(line, at);
            if ((value >> (5 - t % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (bit_count % 6 != 0) {
        const std::size_t last = pos + body - 1;
        const int pad_bits = static_cast<int>(6 - bit_count % 6);
        if ((decode_byte(line, last) & ((1 << pad_bits) - 1)) != 0) throw ParseError("nonzero padding bits", last);
    }
    return b.build();
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw e.with_prefix("line " + std::to_string(line_no) + ": ");
        }
    }
    return graphs;
}

}  // namespace zfx
