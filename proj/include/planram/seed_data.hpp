#ifndef PLANRAM_SEED_DATA_HPP
#define PLANRAM_SEED_DATA_HPP

#include <string_view>
#include <vector>

namespace planram {

struct SeedText {
    std::string_view name;
    std::string_view text;
};

// Contents of data/seeds/*.rot, compiled in.
const std::vector<SeedText>& seed_texts();

} // namespace planram

#endif
