#include "planram/planar_code.hpp"

#include "planram/error.hpp"

#include <ostream>
#include <sstream>

namespace planram {

std::string to_planar_code(const PlaneEmbedding& e)
{
    std::string out;
    out.push_back(static_cast<char>(e.order()));
    for (int v = 0; v < e.order(); ++v) {
        for (int u : e.rotation(v))
            out.push_back(static_cast<char>(u + 1));
        out.push_back(0);
    }
    return out;
}

void write_planar_code(std::ostream& out, const std::vector<PlaneEmbedding>& embeddings)
{
    out << kPlanarCodeHeader;
    for (const auto& e : embeddings)
        out << to_planar_code(e);
}

std::vector<PlaneEmbedding> read_planar_code(std::string_view bytes)
{
    if (bytes.substr(0, kPlanarCodeHeader.size()) == kPlanarCodeHeader)
        bytes.remove_prefix(kPlanarCodeHeader.size());
    std::vector<PlaneEmbedding> out;
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= bytes.size())
            throw Error(ErrorKind::ParseError, "truncated planar_code");
        return static_cast<unsigned char>(bytes[pos++]);
    };
    while (pos < bytes.size()) {
        const int n = next();
        if (n == 0 || n > kMaxOrder)
            throw Error(ErrorKind::ParseError, "planar_code order " + std::to_string(n) + " unsupported");
        Graph g(n);
        std::vector<std::vector<int>> rot(n);
        for (int v = 0; v < n; ++v)
            for (int u = next(); u != 0; u = next()) {
                if (u > n)
                    throw Error(ErrorKind::ParseError, "planar_code neighbour out of range");
                rot[v].push_back(u - 1);
                if (u - 1 == v)
                    throw Error(ErrorKind::ParseError, "planar_code loop");
                g.add_edge(v, u - 1);
            }
        out.emplace_back(std::move(g), std::move(rot));
    }
    return out;
}

std::string to_rotation_text(const PlaneEmbedding& e)
{
    std::ostringstream out;
    out << "order " << e.order() << '\n';
    for (int v = 0; v < e.order(); ++v) {
        out << v << ':';
        for (int u : e.rotation(v))
            out << ' ' << u;
        out << '\n';
    }
    return out.str();
}

PlaneEmbedding from_rotation_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> rot;
    VertexSet seen = 0;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head))
            continue;
        if (head == "order") {
            if (!(ls >> n) || n < 1 || n > kMaxOrder)
                throw Error(ErrorKind::ParseError, "bad order line");
            rot.assign(n, {});
            continue;
        }
        if (n < 0 || head.back() != ':')
            throw Error(ErrorKind::ParseError, "expected 'v:' line after order");
        int v = std::stoi(head.substr(0, head.size() - 1));
        if (v < 0 || v >= n || (seen & bit(v)))
            throw Error(ErrorKind::ParseError, "bad or repeated vertex " + head);
        seen |= bit(v);
        for (int u; ls >> u;)
            rot[v].push_back(u);
    }
    if (n < 0 || seen != first_n(n))
        throw Error(ErrorKind::ParseError, "rotation text does not list every vertex");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int u : rot[v]) {
            if (u < 0 || u >= n || u == v)
                throw Error(ErrorKind::ParseError, "bad neighbour of " + std::to_string(v));
            g.add_edge(v, u);
        }
    return PlaneEmbedding(std::move(g), std::move(rot));
}

} // namespace planram
