#ifndef GDWN_SEQUENCE_HPP
#define GDWN_SEQUENCE_HPP

#include <cstdint>
#include <vector>

#include "gdwn/game.hpp"

namespace gdwn {

/// One upper P-position (a_n, b_n); delta is the coordinate difference.
struct PPair {
    Coord a = 0;
    Coord b = 0;

    Coord delta() const { return b - a; }
    friend bool operator==(const PPair&, const PPair&) = default;
};

using PairList = std::vector<PPair>;

/**
 * The upper P-positions of a game, indexed from n = 0 at the origin. The
 * full P-set is the symmetric closure {(a,b), (b,a)}. For rulesets that
 * satisfy the extension property the a-sequence is strictly increasing,
 * a_n < b_n for n >= 1, and the coordinate sets are complementary.
 */
struct PSequence {
    GameSpec spec;
    PairList pairs;
};

} // namespace gdwn

#endif
