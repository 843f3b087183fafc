#include "symedge/graph6.hpp"

#include <sstream>

#include "symedge/errors.hpp"

namespace symedge {

namespace {

constexpr const char* kHeader = ">>graph6<<";

int sextet(const std::string& s, std::size_t pos) {
    if (pos >= s.size()) throw parse_error("graph6 record truncated", pos);
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw parse_error("graph6 byte out of range", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (text.compare(pos, 10, kHeader) == 0) pos += 10;

    if (pos >= text.size()) throw parse_error("empty graph6 record", pos);

    long long n;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
            throw parse_error("graph6 graphs beyond 64 vertices are not supported", pos);
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(text, pos + static_cast<std::size_t>(i));
        pos += 3;
    } else {
        n = sextet(text, pos);
        ++pos;
    }
    if (n > 64)
        throw parse_error("graph6 graphs beyond 64 vertices are not supported", pos);

    Graph g(static_cast<int>(n));
    const long long nbits = n * (n - 1) / 2;
    long long bit = 0;
    int acc = 0, have = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i, ++bit) {
            if (have == 0) {
                acc = sextet(text, pos);
                ++pos;
                have = 6;
            }
            if (acc & (1 << (have - 1))) g.add_edge(i, j);
            --have;
        }
    (void)nbits;
    // Anything after the packed bits other than trailing whitespace is junk.
    while (pos < text.size()) {
        const char c = text[pos];
        if (c != '\n' && c != '\r' && c != ' ' && c != '\t')
            throw parse_error("trailing bytes after graph6 record", pos);
        ++pos;
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, have = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                have = 0;
            }
        }
    if (have > 0) out.push_back(static_cast<char>((acc << (6 - have)) + 63));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    const auto offset = [&in]() -> std::size_t {
        const auto pos = in.tellg();
        return pos < 0 ? 0 : static_cast<std::size_t>(pos);
    };
    int n;
    if (!(in >> n)) throw parse_error("edge list must start with the vertex count", 0);
    Graph g(n);
    int i, j;
    while (in >> i >> j) {
        if (!(1 <= i && i < j && j <= n))
            throw parse_error("edge endpoints must satisfy 1 <= i < j <= n", offset());
        g.add_edge(i, j);
    }
    if (!in.eof()) {
        in.clear();
        throw parse_error("malformed edge line", offset());
    }
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
    return out.str();
}

}  // namespace symedge
