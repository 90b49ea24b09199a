#include "planram/graph6.hpp"

#include "planram/error.hpp"

#include <istream>

namespace planram {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

} // namespace

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(std::string_view text)
{
    if (text.substr(0, kHeader.size()) == kHeader)
        text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty())
        throw Error(ErrorKind::ParseError, "empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw Error(ErrorKind::ParseError, "graph6 byte out of range");
    std::size_t pos = 0;
    int n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126)
            throw Error(ErrorKind::ParseError, "graph6 order beyond 64 is not supported");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    }
    if (n > kMaxOrder)
        throw Error(ErrorKind::OutOfRange, "graph6 order " + std::to_string(n) + " exceeds 64");
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (text.size() - pos != (bits + 5) / 6)
        throw Error(ErrorKind::ParseError, "graph6 length does not match order " + std::to_string(n));
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = text[pos + k / 6] - 63;
            if ((chunk >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

} // namespace planram
