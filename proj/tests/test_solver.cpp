#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <chrono>
#include <set>

#include "gdwn/sequence_analysis.hpp"
#include "gdwn/solver.hpp"

using namespace gdwn;

namespace {

std::set<Position> p_cells(const PNGrid& grid) {
    std::set<Position> cells;
    for (Coord x = 0; x <= grid.max_x(); ++x)
        for (Coord y = 0; y <= grid.max_y(); ++y)
            if (grid.is_p(x, y)) cells.insert({x, y});
    return cells;
}

} // namespace

TEST_CASE("nim grid is the diagonal") {
    const PNGrid grid = brute_classify(GameSpec::nim(), 50, 50);
    for (Coord x = 0; x <= 50; ++x)
        for (Coord y = 0; y <= 50; ++y)
            CHECK(grid.is_p(x, y) == (x == y));
}

TEST_CASE("wythoff 20-grid P cells") {
    const PNGrid grid = brute_classify(GameSpec::wythoff(), 20, 20);
    std::set<Position> expect;
    for (u64 n = 0;; ++n) {
        const BeattyPair bp = beatty_pair(n);
        if (bp.a > 20) break;
        if (bp.b <= 20) {
            expect.insert({bp.a, bp.b});
            expect.insert({bp.b, bp.a});
        }
    }
    CHECK(p_cells(grid) == expect);
    CHECK(expect.count({11, 18}) == 1); // beyond the first seven pairs
    CHECK(expect.count({12, 20}) == 1);
}

TEST_CASE("gdwn(1,2) 20-grid upper P cells") {
    const PNGrid grid = brute_classify(GameSpec::gdwn(1, 2), 20, 20);
    std::set<Position> upper;
    for (const Position& pos : p_cells(grid))
        if (pos.x <= pos.y) upper.insert(pos);
    CHECK(upper == std::set<Position>{{0, 0},
                                      {1, 3},
                                      {2, 6},
                                      {4, 5},
                                      {7, 10},
                                      {8, 14},
                                      {9, 17},
                                      {13, 18}});
}

TEST_CASE("fast sequence reproduces the known prefixes") {
    const PSequence g12 = fast_p_sequence(GameSpec::gdwn(1, 2), 9);
    CHECK(g12.pairs == PairList{{0, 0}, {1, 3}, {2, 6}, {4, 5}, {7, 10}, {8, 14}, {9, 17}});
    const u64 expect_delta[] = {0, 2, 4, 1, 3, 6, 8};
    for (std::size_t n = 0; n < g12.pairs.size(); ++n)
        CHECK(g12.pairs[n].delta() == expect_delta[n]);

    const PSequence wyt = fast_p_sequence(GameSpec::wythoff(), 9);
    CHECK(wyt.pairs == PairList{{0, 0}, {1, 2}, {3, 5}, {4, 7}, {6, 10}, {8, 13}, {9, 15}});

    const PSequence nim = fast_p_sequence(GameSpec::nim(), 5);
    CHECK(nim.pairs == PairList{{0, 0}});

    CHECK(fast_p_sequence(GameSpec::wythoff(), 0).pairs == PairList{{0, 0}});
    CHECK(fast_p_sequence(GameSpec::gdwn(1, 2), 1).pairs == PairList{{0, 0}, {1, 3}});
}

TEST_CASE("fast sequence matches an independent brute-force run") {
    // frozen from a reference classification of the [0,40]x[0,95] board
    const PairList expect12 = {{0, 0},   {1, 3},   {2, 6},   {4, 5},   {7, 10},
                               {8, 14},  {9, 17},  {11, 25}, {12, 28}, {13, 18},
                               {15, 35}, {16, 23}, {19, 31}, {20, 29}, {21, 48},
                               {22, 32}, {24, 55}, {26, 37}, {27, 40}, {30, 68}};
    CHECK(fast_p_sequence(GameSpec::gdwn(1, 2), 30).pairs == expect12);

    const PairList expect23 = {{0, 0},   {1, 2},   {3, 6},   {4, 8},   {5, 7},
                               {9, 16},  {10, 18}, {11, 20}, {12, 17}, {13, 24},
                               {14, 26}, {15, 21}, {19, 34}, {22, 39}, {23, 41},
                               {25, 35}, {27, 48}, {28, 50}, {29, 52}, {30, 46}};
    CHECK(fast_p_sequence(GameSpec::gdwn(2, 3), 30).pairs == expect23);
}

TEST_CASE("solver equivalence on small windows") {
    for (const char* name : {"nim", "wythoff", "gdwn:1,2", "gdwn:2,3", "gdwn:1,3", "gdwn:3,4"}) {
        const EquivalenceReport report = verify_equivalence(parse_game_spec(name), 60);
        INFO(name << (report.first_mismatch ? ": " + report.first_mismatch->detail : ""));
        CHECK(report.ok);
    }
}

TEST_CASE("sequences satisfy complementarity and distinct deltas") {
    for (const char* name : {"wythoff", "gdwn:1,2", "gdwn:2,3", "gdwn:3,5"}) {
        const PSequence seq = fast_p_sequence(parse_game_spec(name), 2000);
        const PropertyWReport report = check_property_w(seq.pairs);
        INFO(name);
        CHECK(report.ok);
    }
}

TEST_CASE("no gdwn(1,2) pair lies on the doubling line") {
    const PSequence seq = fast_p_sequence(GameSpec::gdwn(1, 2), 2000);
    for (std::size_t n = 1; n < seq.pairs.size(); ++n)
        CHECK(seq.pairs[n].b != 2 * seq.pairs[n].a);
}

TEST_CASE("solve is deterministic") {
    const PSequence a = fast_p_sequence(GameSpec::gdwn(1, 2), 500);
    const PSequence b = fast_p_sequence(GameSpec::gdwn(1, 2), 500);
    CHECK(a.pairs == b.pairs);
}

TEST_CASE("a 50k solve stays within its time budget", "[perf]") {
    const auto start = std::chrono::steady_clock::now();
    const PSequence seq = fast_p_sequence(GameSpec::gdwn(1, 2), 50000);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(seq.pairs.size() == 31525);
    CHECK(seq.pairs.back().a == 50000);
    CHECK(elapsed < 10.0);
}

TEST_CASE("grid budget is enforced") {
    CHECK_THROWS_AS(brute_classify(GameSpec::nim(), 100000, 100000), ResourceError);
    CHECK_NOTHROW(brute_classify(GameSpec::nim(), 10, 10, 121));
    CHECK_THROWS_AS(brute_classify(GameSpec::nim(), 10, 10, 120), ResourceError);
}

TEST_CASE("upper pairs can be read back from a grid") {
    const PNGrid grid = brute_classify(GameSpec::gdwn(1, 2), 20, 20);
    const PairList upper = grid.upper_pairs();
    CHECK(upper.front() == PPair{0, 0});
    CHECK(std::count(upper.begin(), upper.end(), PPair{4, 5}) == 1);
}
