#ifndef PLANRAM_PLANAR_CODE_HPP
#define PLANRAM_PLANAR_CODE_HPP

#include "planram/planar.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace planram {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

// Body of one embedding: order byte, then each vertex's neighbours (1-based) in
// clockwise order followed by 0.
std::string to_planar_code(const PlaneEmbedding& e);
void write_planar_code(std::ostream& out, const std::vector<PlaneEmbedding>& embeddings);
// Reads an optional header followed by any number of embeddings.
std::vector<PlaneEmbedding> read_planar_code(std::string_view bytes);

// Text form used for seed files: "order n" then "v: w1 w2 ..." lines; '#' starts a comment.
std::string to_rotation_text(const PlaneEmbedding& e);
PlaneEmbedding from_rotation_text(std::string_view text);

} // namespace planram

#endif
