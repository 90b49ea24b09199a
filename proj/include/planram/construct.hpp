#ifndef PLANRAM_CONSTRUCT_HPP
#define PLANRAM_CONSTRUCT_HPP

#include "planram/graph.hpp"
#include "planram/planar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace planram {

// Properties a seed drawing is supposed to have; checked every time a seed is loaded.
struct ClaimedProperties {
    int order = 0;
    int min_degree = 0;
    // Every vertex has degree min_degree.
    bool regular = false;
    bool c4free = true;
    // -1: not claimed.
    int edges = -1;
    // Number of faces of length >= 6 the drawing is expected to have, at least.
    int long_faces = 0;
    // Rim length m such that the complement has no W_m; 0: not claimed.
    int complement_wheel_free = 0;
};

struct SeedGraphRecord {
    std::string name;
    Graph graph;
    PlaneEmbedding embedding;
    ClaimedProperties claimed;
};

std::vector<std::string> seed_names();
// Throws UnknownSeed, or PropertyCheckFailed naming the first failed claim.
SeedGraphRecord load_seed(std::string_view name);
// Empty when all claims hold, otherwise a description of the first failure.
std::string failed_claim(const PlaneEmbedding& e, const ClaimedProperties& claimed);

// Operation A: face has length >= 6 and v sits three steps after u along its walk. u and v
// are split in two, and a new vertex inside the face joins the four halves. u keeps its id
// for the half next to the walk's successor, v for the half next to its successor; the
// other halves and the new vertex get ids n, n+1, n+2.
PlaneEmbedding operation_a(const PlaneEmbedding& e, int face, int u, int v);

// Operation B: degree-4 vertex v with rotation n0 n1 n2 n3 is split into v (keeping
// n_i, n_{i+1}) and a new vertex (keeping n_{i+2}, n_{i+3}), joined by an edge. The two
// faces that grow must have length >= 5. Without `split`, the first valid i is used.
PlaneEmbedding operation_b(const PlaneEmbedding& e, int v, std::optional<int> split = {});
// Merges the degree-3 ends of an edge. The merged vertex keeps min(u, v); the last vertex
// takes over the freed id.
PlaneEmbedding operation_b_inverse(const PlaneEmbedding& e, int u, int v);

// Operation C: edge tb lies on two faces of length >= 6. It is subdivided twice
// (t - p - q - b, with p = n and q = n + 1) and chords run from p and q into the two faces:
// p to the vertex two steps before b on the face through the dart b->t, and q to the
// vertex two steps before t on the face through t->b. `mirrored` swaps in the other
// chirality: p to the vertex two steps after b on the face through t->b, q to the vertex
// two steps after t on the face through b->t.
PlaneEmbedding operation_c(const PlaneEmbedding& e, int t, int b, bool mirrored = false);

enum class OperationKind { a, b, b_inverse, c };

struct TraceStep {
    OperationKind kind = OperationKind::a;
    // a: face u v; b: v split (-1: first valid); b_inverse: u v; c: t b mirrored
    std::vector<int> params;
};

// seed is a seed name or "cycle:<n>".
struct ConstructionTrace {
    std::string seed;
    std::vector<TraceStep> steps;
    PlaneEmbedding final_embedding;
};

PlaneEmbedding seed_embedding(const std::string& seed);
PlaneEmbedding apply(const PlaneEmbedding& e, const TraceStep& step);
PlaneEmbedding replay(const ConstructionTrace& trace);
// Line-oriented log: "planram-trace v1", "seed <name>", one line per step, "end".
std::string trace_to_text(const ConstructionTrace& trace);
// Parses and replays; the final embedding is recomputed.
ConstructionTrace trace_from_text(std::string_view text);

// Minimum-degree table: 2 for 5..9, 4 on {30,36,39,42} and n >= 44, otherwise 3.
int claimed_delta(int n);
bool in_delta4_set(int n);

// A C4-free plane graph on n vertices (5 <= n <= 64) whose minimum degree is claimed_delta(n).
ConstructionTrace build_delta_witness(int n);

// Planar Ramsey table value for the wheel W_m.
int claimed_pr(int n_wheel);
// A C4-free planar graph on claimed_pr(m) - 1 vertices whose complement has no W_m.
Graph build_ramsey_lower_witness(int n_wheel);

} // namespace planram

#endif
