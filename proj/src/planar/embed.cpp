#include "planram/planar.hpp"

#include "planram/error.hpp"

#include <algorithm>
#include <optional>

namespace planram {

namespace {

using Rotation = std::vector<std::vector<int>>;

// Edge sets of the biconnected components, as vertex masks (blocks are induced).
std::vector<VertexSet> blocks_of(const Graph& g)
{
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> stack;
    std::vector<VertexSet> blocks;
    int time = 0;
    auto dfs = [&](auto&& self, int v, int parent) -> void {
        disc[v] = low[v] = time++;
        for_each(g.neighbors(v), [&](int w) {
            if (disc[w] < 0) {
                stack.push_back({v, w});
                self(self, w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    VertexSet b = 0;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        b |= bit(e.u) | bit(e.v);
                        if (e.u == v && e.v == w)
                            break;
                    }
                    blocks.push_back(b);
                }
            } else if (w != parent && disc[w] < disc[v]) {
                stack.push_back({v, w});
                low[v] = std::min(low[v], disc[w]);
            }
        });
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0)
            dfs(dfs, v, -1);
    return blocks;
}

std::vector<int> shortest_cycle(const Graph& g, VertexSet within)
{
    std::vector<int> best;
    for_each(within, [&](int s) {
        // BFS from s; the first non-tree edge closing at s's level gives a short cycle through s.
        std::vector<int> parent(g.order(), -1), depth(g.order(), -1);
        std::vector<int> queue{s};
        depth[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            bool stop = false;
            for_each(g.neighbors(v) & within, [&](int w) {
                if (stop)
                    return;
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    // Cycle through the two tree paths if they only meet at s.
                    std::vector<int> pa{v}, pb{w};
                    while (parent[pa.back()] >= 0)
                        pa.push_back(parent[pa.back()]);
                    while (parent[pb.back()] >= 0)
                        pb.push_back(parent[pb.back()]);
                    VertexSet sa = 0;
                    for (std::size_t i = 0; i + 1 < pa.size(); ++i)
                        sa |= bit(pa[i]);
                    bool disjoint = true;
                    for (std::size_t i = 0; i + 1 < pb.size(); ++i)
                        disjoint = disjoint && !(sa & bit(pb[i]));
                    if (!disjoint)
                        return;
                    std::vector<int> c(pa.rbegin(), pa.rend());
                    for (std::size_t i = 0; i + 1 < pb.size(); ++i)
                        c.push_back(pb[i]);
                    if (best.empty() || c.size() < best.size())
                        best = c;
                    stop = true;
                }
            });
            if (stop)
                break;
        }
    });
    return best;
}

struct Fragment {
    VertexSet attachments = 0;
    VertexSet inner = 0;
    int chord_a = -1, chord_b = -1;
};

// Path-addition embedding of one 2-connected block. Returns oriented faces or nothing.
std::optional<std::vector<std::vector<int>>> embed_block(const Graph& g, VertexSet block)
{
    std::vector<int> cyc = shortest_cycle(g, block);
    std::vector<std::vector<int>> faces;
    faces.push_back(cyc);
    faces.emplace_back(cyc.rbegin(), cyc.rend());
    std::vector<VertexSet> face_sets(2, 0);
    for (int v : cyc)
        face_sets[0] |= bit(v);
    face_sets[1] = face_sets[0];
    VertexSet placed = face_sets[0];
    std::array<VertexSet, kMaxOrder> hadj{};
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        hadj[a] |= bit(b);
        hadj[b] |= bit(a);
    }
    int total_edges = 0;
    for_each(block, [&](int v) { total_edges += set_size(g.neighbors(v) & block); });
    total_edges /= 2;
    int placed_edges = static_cast<int>(cyc.size());

    while (placed_edges < total_edges) {
        std::vector<Fragment> frags;
        for_each(placed, [&](int u) {
            for_each(g.neighbors(u) & block & placed & ~hadj[u] & ~first_n(u + 1),
                     [&](int v) { frags.push_back({bit(u) | bit(v), 0, u, v}); });
        });
        VertexSet rest = block & ~placed;
        while (rest) {
            VertexSet comp = g.component_of(lowest(rest), rest);
            rest &= ~comp;
            VertexSet att = 0;
            for_each(comp, [&](int v) { att |= g.neighbors(v) & placed; });
            frags.push_back({att, comp});
        }
        std::vector<std::vector<int>> admissible(frags.size());
        int forced = -1;
        for (std::size_t i = 0; i < frags.size(); ++i) {
            for (std::size_t f = 0; f < faces.size(); ++f)
                if (!(frags[i].attachments & ~face_sets[f]))
                    admissible[i].push_back(static_cast<int>(f));
            if (admissible[i].empty())
                return std::nullopt;
            if (admissible[i].size() == 1 && forced < 0)
                forced = static_cast<int>(i);
        }
        const int pick = forced >= 0 ? forced : 0;
        const Fragment& fr = frags[pick];

        std::vector<int> path;
        if (fr.inner == 0) {
            path = {fr.chord_a, fr.chord_b};
        } else {
            // Shortest path through the fragment between its lowest attachment and another one.
            int a = lowest(fr.attachments);
            std::vector<int> parent(g.order(), -1);
            std::vector<int> queue;
            for_each(g.neighbors(a) & fr.inner, [&](int w) {
                parent[w] = a;
                queue.push_back(w);
            });
            int end = -1, b = -1;
            for (std::size_t qi = 0; qi < queue.size() && end < 0; ++qi) {
                int v = queue[qi];
                VertexSet out = g.neighbors(v) & fr.attachments & ~bit(a);
                if (out) {
                    end = v;
                    b = lowest(out);
                    break;
                }
                for_each(g.neighbors(v) & fr.inner, [&](int w) {
                    if (parent[w] < 0) {
                        parent[w] = v;
                        queue.push_back(w);
                    }
                });
            }
            path.push_back(b);
            for (int v = end; v != a; v = parent[v])
                path.push_back(v);
            path.push_back(a);
            std::reverse(path.begin(), path.end());
        }

        const int a = path.front(), b = path.back();
        const int p = static_cast<int>(path.size()) - 1;
        int chosen = admissible[pick][0];
        if (forced < 0) {
            // Keep triangles facial: avoid splitting 3-faces, prefer creating them.
            int best_score = -100;
            for (int f : admissible[pick]) {
                const auto& w = faces[f];
                const int len = static_cast<int>(w.size());
                int ia = static_cast<int>(std::find(w.begin(), w.end(), a) - w.begin());
                int ib = static_cast<int>(std::find(w.begin(), w.end(), b) - w.begin());
                int s1 = (ib - ia + len) % len;
                int s2 = len - s1;
                int score = (s1 + p == 3) + (s2 + p == 3) - 2 * (len == 3);
                if (score > best_score) {
                    best_score = score;
                    chosen = f;
                }
            }
        }

        const std::vector<int> w = faces[chosen];
        const int len = static_cast<int>(w.size());
        const int ia = static_cast<int>(std::find(w.begin(), w.end(), a) - w.begin());
        const int ib = static_cast<int>(std::find(w.begin(), w.end(), b) - w.begin());
        std::vector<int> f1, f2;
        for (int i = ia; i != ib; i = (i + 1) % len)
            f1.push_back(w[i]);
        f1.push_back(b);
        for (int i = p - 1; i >= 1; --i)
            f1.push_back(path[i]);
        for (int i = ib; i != ia; i = (i + 1) % len)
            f2.push_back(w[i]);
        f2.push_back(a);
        for (int i = 1; i <= p - 1; ++i)
            f2.push_back(path[i]);
        auto mask = [](const std::vector<int>& f) {
            VertexSet s = 0;
            for (int v : f)
                s |= bit(v);
            return s;
        };
        faces[chosen] = f1;
        face_sets[chosen] = mask(f1);
        faces.push_back(f2);
        face_sets.push_back(mask(f2));
        for (int i = 0; i < p; ++i) {
            hadj[path[i]] |= bit(path[i + 1]);
            hadj[path[i + 1]] |= bit(path[i]);
            placed |= bit(path[i]) | bit(path[i + 1]);
        }
        placed_edges += p;
    }
    return faces;
}

Rotation rotation_from_faces(int n, const std::vector<std::vector<int>>& faces)
{
    // succ[y][x] = z for every face corner x -> y -> z.
    std::vector<std::array<int, kMaxOrder>> succ(n);
    for (auto& s : succ)
        s.fill(-1);
    for (const auto& f : faces) {
        const int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i)
            succ[f[(i + 1) % len]][f[i]] = f[(i + 2) % len];
    }
    Rotation rot(n);
    for (int y = 0; y < n; ++y) {
        int start = -1;
        for (int x = 0; x < n && start < 0; ++x)
            if (succ[y][x] >= 0)
                start = x;
        if (start < 0)
            continue;
        int x = start;
        do {
            rot[y].push_back(x);
            x = succ[y][x];
        } while (x != start);
    }
    return rot;
}

// Faces of a partial rotation system, as (length, corner list) per face.
std::vector<std::vector<int>> trace(const Rotation& rot)
{
    const int n = static_cast<int>(rot.size());
    std::vector<std::vector<int>> faces;
    std::vector<std::vector<char>> used(n);
    for (int v = 0; v < n; ++v)
        used[v].assign(rot[v].size(), 0);
    auto pos = [&](int v, int u) {
        return static_cast<int>(std::find(rot[v].begin(), rot[v].end(), u) - rot[v].begin());
    };
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rot[v].size(); ++i) {
            if (used[v][i])
                continue;
            std::vector<int> f;
            int a = v, ai = static_cast<int>(i);
            while (!used[a][ai]) {
                used[a][ai] = 1;
                f.push_back(a);
                int b = rot[a][ai];
                int pb = pos(b, a);
                int c = rot[b][(pb + 1) % rot[b].size()];
                a = b;
                ai = pos(b, c);
            }
            faces.push_back(f);
        }
    return faces;
}

// Corner at c (the neighbour x with the corner x -> c -> succ) lying on the longest face.
int best_corner(const Rotation& rot, int c)
{
    auto faces = trace(rot);
    int best = -1, best_len = -1;
    for (int x : rot[c]) {
        // The face through dart x -> c.
        for (const auto& f : faces) {
            const int len = static_cast<int>(f.size());
            bool hit = false;
            for (int i = 0; i < len && !hit; ++i)
                hit = f[i] == x && f[(i + 1) % len] == c;
            if (hit) {
                if (len > best_len) {
                    best_len = len;
                    best = x;
                }
                break;
            }
        }
    }
    return best;
}

Rotation embed_connected(const Graph& g)
{
    const int n = g.order();
    Rotation rot(n);
    if (n <= 1)
        return rot;
    std::vector<VertexSet> blocks = blocks_of(g);
    std::vector<Rotation> block_rot;
    for (VertexSet b : blocks) {
        if (set_size(b) == 2) {
            Rotation r(n);
            int u = lowest(b), v = lowest(b & (b - 1));
            r[u] = {v};
            r[v] = {u};
            block_rot.push_back(r);
            continue;
        }
        int edges = 0;
        for_each(b, [&](int v) { edges += set_size(g.neighbors(v) & b); });
        if (edges / 2 > 3 * set_size(b) - 6)
            throw Error(ErrorKind::NotPlanar, "too many edges");
        auto faces = embed_block(g, b);
        if (!faces)
            throw Error(ErrorKind::NotPlanar, "block has no plane embedding");
        block_rot.push_back(rotation_from_faces(n, *faces));
    }
    std::vector<char> done(blocks.size(), 0);
    VertexSet covered = 0;
    for (std::size_t step = 0; step < blocks.size(); ++step) {
        std::size_t pick = blocks.size();
        for (std::size_t i = 0; i < blocks.size() && pick == blocks.size(); ++i)
            if (!done[i] && (step == 0 ? (blocks[i] & 1U) != 0 : (blocks[i] & covered) != 0))
                pick = i;
        done[pick] = 1;
        const VertexSet b = blocks[pick];
        const Rotation& br = block_rot[pick];
        if (step == 0) {
            for_each(b, [&](int v) { rot[v] = br[v]; });
            covered = b;
            continue;
        }
        const int c = lowest(b & covered);
        // Splice the block in at c, joining a longest face on each side.
        Rotation only_block(n);
        for_each(b, [&](int v) { only_block[v] = br[v]; });
        const int x_in = best_corner(only_block, c);
        const int a = best_corner(rot, c);
        for_each(b & ~bit(c), [&](int v) { rot[v] = br[v]; });
        const auto& bc = br[c];
        int start = static_cast<int>(std::find(bc.begin(), bc.end(), x_in) - bc.begin());
        start = (start + 1) % static_cast<int>(bc.size());
        std::vector<int> insert;
        for (std::size_t i = 0; i < bc.size(); ++i)
            insert.push_back(bc[(start + i) % bc.size()]);
        auto& rc = rot[c];
        auto at = std::find(rc.begin(), rc.end(), a) + 1;
        rc.insert(at, insert.begin(), insert.end());
        covered |= b;
    }
    return rot;
}

} // namespace

bool is_planar(const Graph& g)
{
    const int n = g.order();
    const int m = g.edge_count();
    if (n <= 4 || m <= 8)
        return true;
    for (VertexSet b : blocks_of(g)) {
        const int k = set_size(b);
        if (k <= 4)
            continue;
        int edges = 0;
        for_each(b, [&](int v) { edges += set_size(g.neighbors(v) & b); });
        edges /= 2;
        if (edges > 3 * k - 6)
            return false;
        if (edges <= 8)
            continue;
        if (!embed_block(g, b))
            return false;
    }
    return true;
}

PlaneEmbedding embed(const Graph& g)
{
    if (!g.is_connected())
        throw Error(ErrorKind::Disconnected, "embed needs a connected graph");
    Rotation rot = embed_connected(g);
    PlaneEmbedding e(g, std::move(rot));
    if (!e.is_plane())
        throw Error(ErrorKind::NotPlanar, "embedding failed the Euler check");
    return e;
}

} // namespace planram
