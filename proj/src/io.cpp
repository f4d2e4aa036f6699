#include "alliance/io.hpp"

#include <algorithm>
#include <sstream>

#include "alliance/errors.hpp"

namespace alliance {

namespace {

constexpr int g6_bias = 63;
constexpr int g6_max_order = 62;

std::string strip_trailing_ws(const std::string& s) {
    std::size_t end = s.size();
    while (end > 0 && (s[end - 1] == '\n' || s[end - 1] == '\r' || s[end - 1] == ' ' ||
                       s[end - 1] == '\t'))
        --end;
    return s.substr(0, end);
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
    std::string text = strip_trailing_ws(raw);
    if (text.empty()) throw ParseError("empty graph6 input", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte outside printable range 63..126 at offset " +
                                 std::to_string(i),
                             i);
    }
    int header = static_cast<unsigned char>(text[0]) - g6_bias;
    if (header > g6_max_order)
        throw ParseError("graph6 long form (n > 62) is not supported", 0);
    int n = header;

    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (text.size() - 1 != bytes_needed)
        throw ParseError("graph6 length mismatch: order " + std::to_string(n) + " needs " +
                             std::to_string(bytes_needed) + " data byte(s), got " +
                             std::to_string(text.size() - 1),
                         text.size() > bytes_needed + 1 ? bytes_needed + 1 : text.size());

    std::vector<std::pair<int, int>> edges;
    long bit_index = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit_index) {
            std::size_t byte = static_cast<std::size_t>(1 + bit_index / 6);
            int shift = 5 - static_cast<int>(bit_index % 6);
            int value = static_cast<unsigned char>(text[byte]) - g6_bias;
            if ((value >> shift & 1) != 0) edges.emplace_back(row, col);
        }
    }
    // padding bits must be zero
    for (long pad = bits_needed; pad < static_cast<long>(bytes_needed) * 6; ++pad) {
        std::size_t byte = static_cast<std::size_t>(1 + pad / 6);
        int shift = 5 - static_cast<int>(pad % 6);
        int value = static_cast<unsigned char>(text[byte]) - g6_bias;
        if ((value >> shift & 1) != 0)
            throw ParseError("graph6 trailing padding bits are not zero at offset " +
                                 std::to_string(byte),
                             byte);
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > g6_max_order)
        throw UnsupportedSize("graph6 short form supports n <= 62, got n = " + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + g6_bias));
    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    std::vector<int> data(bytes_needed, 0);
    long bit_index = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit_index) {
            if (g.adjacent(row, col))
                data[static_cast<std::size_t>(bit_index / 6)] |= 1 << (5 - bit_index % 6);
        }
    }
    for (int byte : data) out.push_back(static_cast<char>(byte + g6_bias));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::optional<int> n;
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;  // blank line
        if (first == "n") {
            if (line_no != 1) throw ParseError("header line allowed only first", {}, line_no);
            int count;
            if (!(fields >> count) || count < 0)
                throw ParseError("bad vertex count in header", {}, line_no);
            std::string extra;
            if (fields >> extra) throw ParseError("trailing tokens after header", {}, line_no);
            n = count;
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError("expected integer endpoint, got '" + first + "'", {}, line_no);
        }
        if (!(fields >> v)) throw ParseError("missing second endpoint", {}, line_no);
        std::string extra;
        if (fields >> extra) throw ParseError("trailing tokens after edge", {}, line_no);
        if (u < 0 || v < 0) throw ParseError("negative vertex index", {}, line_no);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), {}, line_no);
        if (n && (u >= *n || v >= *n))
            throw ParseError("vertex " + std::to_string(std::max(u, v)) + " >= declared order " +
                                 std::to_string(*n),
                             {}, line_no);
        for (auto [a, b] : edges)
            if (std::minmax(a, b) == std::minmax(u, v))
                throw ParseError("duplicate edge (" + std::to_string(std::min(u, v)) + "," +
                                     std::to_string(std::max(u, v)) + ")",
                                 {}, line_no);
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    int order = n.value_or(max_vertex + 1);
    return Graph::from_edges(order, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (auto [u, v] : g.edge_list()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace alliance
