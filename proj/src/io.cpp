#include "rrr/io.hpp"

#include <charconv>
#include <vector>

namespace rrr {

namespace {

constexpr int kGraph6MaxN = 258047;  // largest n the 4-byte header can carry

struct Cursor {
    std::string_view text;
    size_t pos = 0;
    int line = 1;

    void skip_space_and_comments() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (c == '\n') {
                ++line;
                ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos;
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_space_and_comments();
        return pos == text.size();
    }

    int next_int(const char* what) {
        skip_space_and_comments();
        if (pos == text.size()) throw ParseError(std::string("expected ") + what, line);
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + pos)
            throw ParseError(std::string("expected ") + what, line);
        pos = static_cast<size_t>(ptr - text.data());
        return value;
    }
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
    Cursor cur{text};
    int n = cur.next_int("vertex count");
    int m = cur.next_int("edge count");
    if (n < 1) throw ParseError("vertex count must be >= 1", cur.line);
    if (m < 0) throw ParseError("edge count must be >= 0", cur.line);
    std::vector<VertexPair> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = cur.next_int("edge endpoint");
        int v = cur.next_int("edge endpoint");
        edges.emplace_back(u, v);
    }
    if (!cur.at_end()) throw ParseError("trailing content after edge list", cur.line);
    return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out =
        std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kGraph6MaxN) throw TooLargeError("graph6 supports at most 258047 vertices");
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    std::vector<char> adj(static_cast<size_t>(n) * n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<size_t>(u) * n + v] = 1;
        adj[static_cast<size_t>(v) * n + u] = 1;
    }
    int bit = 5;
    char acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (adj[static_cast<size_t>(i) * n + j]) acc |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(acc + 63));
    return out;
}

Graph parse_graph6(std::string_view line) {
    // tolerate a trailing newline and the optional ">>graph6<<" header
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 string");
    size_t pos = 0;
    auto data_byte = [&](const char* what) -> int {
        if (pos >= line.size()) throw ParseError(std::string("graph6 truncated: ") + what);
        unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte out of range at position " + std::to_string(pos - 1));
        return c - 63;
    };
    long n = data_byte("size byte");
    if (n == 63) {
        long a = data_byte("size byte");
        if (a == 63) throw ParseError("graph6 with n > 258047 is not supported");
        long b = data_byte("size byte");
        long c = data_byte("size byte");
        n = (a << 12) | (b << 6) | c;
    }
    if (n < 1) throw ParseError("graph6 with zero vertices");
    std::vector<VertexPair> edges;
    int bit = -1;
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit < 0) {
                acc = data_byte("adjacency bits");
                bit = 5;
            }
            if ((acc >> bit) & 1) edges.emplace_back(i, j);
            --bit;
        }
    }
    if (pos != line.size()) throw ParseError("trailing bytes after graph6 data");
    return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view content, GraphFormat fmt) {
    return fmt == GraphFormat::EdgeList ? parse_edge_list(content) : parse_graph6(content);
}

std::string render_graph(const Graph& g, GraphFormat fmt) {
    return fmt == GraphFormat::EdgeList ? to_edge_list(g) : to_graph6(g) + "\n";
}

}  // namespace rrr
