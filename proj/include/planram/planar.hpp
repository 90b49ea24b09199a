#ifndef PLANRAM_PLANAR_HPP
#define PLANRAM_PLANAR_HPP

#include "planram/graph.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace planram {

// Closed boundary walk; the darts are boundary[i] -> boundary[i+1] (cyclically).
// An isolated vertex has one face with an empty walk.
struct Face {
    std::vector<int> boundary;
    int length() const noexcept { return static_cast<int>(boundary.size()); }
};

// Rotation system: rotation(v) lists the neighbours of v in clockwise order.
// Faces are traced with the rule: after dart a->b comes b->c, c the successor of a around b.
class PlaneEmbedding {
public:
    PlaneEmbedding() = default;
    PlaneEmbedding(Graph base, std::vector<std::vector<int>> rotation);

    const Graph& graph() const noexcept { return base_; }
    int order() const noexcept { return base_.order(); }
    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    const std::vector<std::vector<int>>& rotations() const noexcept { return rotation_; }
    int successor(int v, int u) const;
    int predecessor(int v, int u) const;

    const std::vector<Face>& faces() const noexcept { return faces_; }
    // Index of the face whose walk contains the dart u->v.
    int face_of(int u, int v) const;
    // n - e + f; equals 2 for a connected plane embedding.
    int euler_characteristic() const;
    bool is_plane() const;
    // face length -> number of faces
    std::map<int, int> face_census() const;

    // Same rotation system with every list started at its smallest neighbour.
    PlaneEmbedding normalized() const;
    friend bool operator==(const PlaneEmbedding& a, const PlaneEmbedding& b);

private:
    Graph base_;
    std::vector<std::vector<int>> rotation_;
    std::vector<Face> faces_;
    // face_index_[u][i] is the face of the dart u -> rotation_[u][i]
    std::vector<std::vector<int>> face_index_;

    int position(int v, int u) const;
    void trace_faces();
};

bool is_planar(const Graph& g);
// Throws NotPlanar or Disconnected. Prefers embeddings in which triangles bound faces.
PlaneEmbedding embed(const Graph& g);

struct GammaReport {
    std::vector<Edge> gamma_edges;
    int tau = 0;
    VertexSet endpoints = 0;
    Graph induced;
};

// Edges lying in no triangle.
GammaReport gamma(const Graph& g);
int triangle_count(const Graph& g);

// One vertex per face of length >= 5, in face order. Two faces are adjacent when they
// share exactly one edge, or share no edge and exactly one vertex.
Graph vertex_edge_dual(const PlaneEmbedding& e);

struct EdgeIdentity {
    // 7e - [15(n-2) - 2 tau - sum_{k>=6} 3(k-5) f_k]
    long long residual = 0;
    // 7e <= 15(n-2)
    bool within_bound = false;
};

// Requires a connected C4-free plane embedding (NotC4Free, Disconnected, NotPlanar).
EdgeIdentity edge_identity(const PlaneEmbedding& e);
int nonfacial_triangles(const PlaneEmbedding& e);

// True iff both sides of the cycle contain a vertex. Throws NotACycle.
bool separating_cycle(const PlaneEmbedding& e, std::span<const int> cycle);

} // namespace planram

#endif
