#ifndef GDWN_GAME_HPP
#define GDWN_GAME_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gdwn/errors.hpp"
#include "gdwn/intmath.hpp"

namespace gdwn {

using Coord = std::uint64_t;

/// A two-pile position. (x, y) and (y, x) are game-equivalent.
struct Position {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Position&, const Position&) = default;
    friend auto operator<=>(const Position&, const Position&) = default;
};

inline Position canonical(Position p) { return {std::min(p.x, p.y), std::max(p.x, p.y)}; }
inline Position reflect(Position p) { return {p.y, p.x}; }

/// Token removal (dx from the first pile, dy from the second); never both zero.
struct Move {
    Coord dx = 0;
    Coord dy = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

enum class GameKind { nim, wythoff, gdwn };

/**
 * Which ruleset governs move generation.
 *
 * nim      — remove from one pile
 * wythoff  — nim moves plus equal removal from both piles
 * gdwn     — wythoff moves plus removal of (p*t, q*t) or (q*t, p*t), t >= 1,
 *            with 1 <= p < q and gcd(p, q) = 1
 */
struct GameSpec {
    GameKind kind = GameKind::nim;
    Coord p = 0; // gdwn only
    Coord q = 0; // gdwn only

    friend bool operator==(const GameSpec&, const GameSpec&) = default;

    static GameSpec nim() { return {GameKind::nim, 0, 0}; }
    static GameSpec wythoff() { return {GameKind::wythoff, 0, 0}; }
    static GameSpec gdwn(Coord p, Coord q) {
        if (p < 1 || q <= p)
            throw ValidationError("gdwn requires 1 <= p < q, got p=" + std::to_string(p) +
                                  " q=" + std::to_string(q));
        if (gcd_u64(p, q) != 1)
            throw ValidationError("gdwn requires gcd(p, q) = 1, got p=" + std::to_string(p) +
                                  " q=" + std::to_string(q));
        return {GameKind::gdwn, p, q};
    }
};

inline std::string to_string(const GameSpec& spec) {
    switch (spec.kind) {
        case GameKind::nim: return "nim";
        case GameKind::wythoff: return "wythoff";
        case GameKind::gdwn:
            return "gdwn:" + std::to_string(spec.p) + "," + std::to_string(spec.q);
    }
    return "?";
}

/// Parses "nim", "wythoff", or "gdwn:p,q" (e.g. "gdwn:1,2").
inline GameSpec parse_game_spec(const std::string& text) {
    if (text == "nim") return GameSpec::nim();
    if (text == "wythoff") return GameSpec::wythoff();
    if (text.rfind("gdwn:", 0) == 0) {
        const std::string params = text.substr(5);
        const auto comma = params.find(',');
        if (comma == std::string::npos)
            throw ValidationError("bad game spec '" + text + "': expected gdwn:p,q");
        const std::string ps = params.substr(0, comma);
        const std::string qs = params.substr(comma + 1);
        Coord p = 0, q = 0;
        try {
            std::size_t used = 0;
            p = std::stoull(ps, &used);
            if (used != ps.size() || ps.empty()) throw std::invalid_argument(ps);
            q = std::stoull(qs, &used);
            if (used != qs.size() || qs.empty()) throw std::invalid_argument(qs);
        } catch (const std::exception&) {
            throw ValidationError("bad game spec '" + text + "': p and q must be positive integers");
        }
        return GameSpec::gdwn(p, q);
    }
    throw ValidationError("unknown game spec '" + text + "' (expected nim, wythoff, or gdwn:p,q)");
}

/// True iff (dx, dy) has the shape of a legal move of `spec`, from any
/// position large enough. Decided by pattern matching, not enumeration.
inline bool is_legal_move_shape(const GameSpec& spec, Move m) {
    if (m.dx == 0 && m.dy == 0) return false;
    if (m.dx == 0 || m.dy == 0) return true; // nim move
    if (spec.kind == GameKind::nim) return false;
    if (m.dx == m.dy) return true; // equal-removal diagonal
    if (spec.kind == GameKind::wythoff) return false;
    // slope families (p*t, q*t) and (q*t, p*t); with gcd(p,q)=1 a line match
    // implies an integer multiplier, so cross multiplication decides.
    const u128 qdx = u128(spec.q) * m.dx;
    const u128 pdy = u128(spec.p) * m.dy;
    if (qdx == pdy) return true;
    const u128 pdx = u128(spec.p) * m.dx;
    const u128 qdy = u128(spec.q) * m.dy;
    return pdx == qdy;
}

/// True iff `to` is an option of `from` under `spec` (O(1) test).
inline bool is_option(const GameSpec& spec, Position from, Position to) {
    if (to.x > from.x || to.y > from.y) return false;
    return is_legal_move_shape(spec, {from.x - to.x, from.y - to.y});
}

/**
 * Lazy enumeration of the option set of a position.
 *
 * Walks the move families in a fixed order (take-x, take-y, diagonal, then
 * the two gdwn slope families); the families are pairwise disjoint for
 * coprime p < q, so every option appears exactly once. Option sets have
 * size Theta(x + y), so callers that only scan should iterate rather than
 * materialize.
 */
class OptionRange {
public:
    OptionRange(const GameSpec& spec, Position from) : spec_(spec), from_(from) {}

    class iterator {
    public:
        using value_type = Position;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const GameSpec* spec, Position from, int family)
            : spec_(spec), from_(from), family_(family) {
            settle();
        }

        Position operator*() const {
            switch (family_) {
                case 0: return {from_.x - t_, from_.y};
                case 1: return {from_.x, from_.y - t_};
                case 2: return {from_.x - t_, from_.y - t_};
                case 3: return {from_.x - spec_->p * t_, from_.y - spec_->q * t_};
                default: return {from_.x - spec_->q * t_, from_.y - spec_->p * t_};
            }
        }

        iterator& operator++() {
            if (++t_ > t_max_) {
                ++family_;
                settle();
            }
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) {
            return a.family_ == b.family_ && a.t_ == b.t_;
        }

    private:
        static constexpr int kEndFamily = 5;

        Coord family_limit(int family) const {
            switch (family) {
                case 0: return from_.x;
                case 1: return from_.y;
                case 2:
                    return spec_->kind == GameKind::nim ? 0 : std::min(from_.x, from_.y);
                case 3:
                    return spec_->kind == GameKind::gdwn
                               ? std::min(from_.x / spec_->p, from_.y / spec_->q)
                               : 0;
                case 4:
                    return spec_->kind == GameKind::gdwn
                               ? std::min(from_.x / spec_->q, from_.y / spec_->p)
                               : 0;
                default: return 0;
            }
        }

        // move to the first family, at or after the current one, with a move
        void settle() {
            t_ = 1;
            while (family_ < kEndFamily) {
                t_max_ = family_limit(family_);
                if (t_max_ >= 1) return;
                ++family_;
            }
            t_ = 0; // end state
            t_max_ = 0;
        }

        const GameSpec* spec_ = nullptr;
        Position from_{};
        int family_ = kEndFamily;
        Coord t_ = 0;
        Coord t_max_ = 0;
    };

    iterator begin() const { return iterator(&spec_, from_, 0); }
    iterator end() const { return iterator(); }

private:
    GameSpec spec_;
    Position from_;
};

inline OptionRange option_range(const GameSpec& spec, Position from) {
    return OptionRange(spec, from);
}

/// Materialized option set (generation order; entries are distinct).
inline std::vector<Position> options(const GameSpec& spec, Position from) {
    std::vector<Position> out;
    for (Position o : option_range(spec, from)) out.push_back(o);
    return out;
}

} // namespace gdwn

#endif
