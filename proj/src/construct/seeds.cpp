#include "planram/construct.hpp"

#include "planram/error.hpp"
#include "planram/planar_code.hpp"
#include "planram/seed_data.hpp"
#include "planram/subgraph.hpp"

#include <algorithm>

namespace planram {

namespace {

struct SeedClaim {
    std::string_view name;
    ClaimedProperties claimed;
};

const std::vector<SeedClaim>& claims()
{
    // order, min degree, regular, C4-free, edges, faces of length >= 6, complement wheel-free rim
    static const std::vector<SeedClaim> table = {
        {"fig8a", {30, 4, true, true, 60, 0, 0}},
        {"fig8b", {36, 4, false, true, -1, 2, 0}},
        {"fig8c", {44, 4, false, true, -1, 0, 0}},
        {"fig8d", {46, 4, false, true, -1, 1, 0}},
        {"fig8e", {47, 4, false, true, -1, 1, 0}},
        {"fig10", {10, 3, false, true, -1, 0, 0}},
        {"fig12a", {8, 0, false, true, -1, 0, 4}},
        {"fig12b", {9, 0, false, true, -1, 0, 5}},
        {"fig12c", {8, 0, false, true, -1, 0, 6}},
    };
    return table;
}

} // namespace

std::vector<std::string> seed_names()
{
    std::vector<std::string> names;
    for (const SeedClaim& c : claims())
        names.emplace_back(c.name);
    return names;
}

std::string failed_claim(const PlaneEmbedding& e, const ClaimedProperties& claimed)
{
    const Graph& g = e.graph();
    if (g.order() != claimed.order)
        return "order is " + std::to_string(g.order()) + ", expected " + std::to_string(claimed.order);
    if (!e.is_plane())
        return "rotation system is not a plane embedding";
    if (claimed.c4free && contains_c4(g))
        return "graph contains a 4-cycle";
    if (g.min_degree() != claimed.min_degree && claimed.min_degree > 0)
        return "minimum degree is " + std::to_string(g.min_degree()) + ", expected " + std::to_string(claimed.min_degree);
    if (claimed.regular && g.max_degree() != claimed.min_degree)
        return "graph is not " + std::to_string(claimed.min_degree) + "-regular";
    if (claimed.edges >= 0 && g.edge_count() != claimed.edges)
        return "edge count is " + std::to_string(g.edge_count()) + ", expected " + std::to_string(claimed.edges);
    const auto long_faces = std::count_if(e.faces().begin(), e.faces().end(), [](const Face& f) { return f.length() >= 6; });
    if (long_faces < claimed.long_faces)
        return "only " + std::to_string(long_faces) + " faces of length >= 6";
    if (claimed.complement_wheel_free > 0 && contains_wheel(g.complement(), claimed.complement_wheel_free))
        return "complement contains W" + std::to_string(claimed.complement_wheel_free);
    if (claimed.c4free && g.is_connected() && g.order() >= 4 && edge_identity(e).residual != 0)
        return "face identity residual is nonzero";
    return {};
}

SeedGraphRecord load_seed(std::string_view name)
{
    auto it = std::find_if(claims().begin(), claims().end(), [&](const SeedClaim& c) { return c.name == name; });
    if (it == claims().end())
        throw Error(ErrorKind::UnknownSeed, "unknown seed '" + std::string(name) + "'");
    std::string_view text;
    for (const SeedText& s : seed_texts())
        if (s.name == name)
            text = s.text;
    if (text.empty())
        throw Error(ErrorKind::UnknownSeed, "no data for seed '" + std::string(name) + "'");
    SeedGraphRecord r;
    r.name = std::string(name);
    r.claimed = it->claimed;
    try {
        r.embedding = from_rotation_text(text);
    } catch (const Error& e) {
        throw Error(ErrorKind::PropertyCheckFailed, r.name + ": " + e.what());
    }
    r.graph = r.embedding.graph();
    r.graph.set_label(r.name);
    if (std::string why = failed_claim(r.embedding, r.claimed); !why.empty())
        throw Error(ErrorKind::PropertyCheckFailed, r.name + ": " + why);
    return r;
}

} // namespace planram
