#pragma once

#include <vector>

#include "sympdeg/core.hpp"

namespace sympdeg {

/// A cut or shift on the coefficient quiver.
///
/// CUT(t, s, q) splits [t,s] into [t,q-1] and [q,s]; q is the first vertex of
/// the right-hand piece, so t < q <= s.
/// SHIFT(t, s, q, r) replaces [t,s] and [q,r] by [t,r] and [q,s], with
/// t < q <= r < s.
struct Move {
    enum class Kind { Cut, Shift };

    Kind kind = Kind::Cut;
    int t = 0;
    int s = 0;
    int q = 0;
    int r = 0;  // unused for cuts

    static Move cut(int t, int s, int q) { return {Kind::Cut, t, s, q, 0}; }
    static Move shift(int t, int s, int q, int r) { return {Kind::Shift, t, s, q, r}; }

    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;

    std::string str() const;
};

/// Throws InvalidMove unless the indices satisfy the Move invariants on A_n.
void validate(const Move& mv, int n);

/// The 0/1 pattern subtracted from the rank sequence by `mv`.
RankSequence move_rank_delta(int n, const Move& mv);

/// Counters shared by apply_move and apply_sym_move. Every application
/// recomputes ranks and compares against move_rank_delta.
struct MoveAudit {
    long checked = 0;
    long violations = 0;
};

MoveAudit move_audit();
void reset_move_audit();

/// Applies a move. Throws InsufficientMultiplicity when the consumed segments
/// are missing and InvariantViolation if the rank delta comes out wrong.
Representation apply_move(const Representation& rep, const Move& mv);

/// True when the segments consumed by `mv` are present in `rep`.
bool can_apply(const Representation& rep, const Move& mv);

/// Every move applicable to `rep`, in a fixed order.
std::vector<Move> applicable_moves(const Representation& rep);

/// r^M >= r^N entrywise with equal dimension vectors.
bool degenerates(const Representation& m, const Representation& n);

struct QuotientReport {
    RankSequence ranks_Q;
    RankSequence ranks_LQ;
    std::vector<Move> moves;
    bool summand = false;  // L already a direct summand; no moves needed
    int t1 = 0;
    int q1 = 0;
    int t2 = 0;
    int q2 = 0;
    /// Corners (q_p, t_p) of the zero staircase of f, in increasing q_p.
    std::vector<std::pair<int, int>> staircase;
};

/// Rank sequences of the generic quotient M / U_{q,s} and of U_{q,s} + Q,
/// with a chain of moves taking M to U_{q,s} + Q. Throws NoEmbedding.
///
/// The moves follow the staircase of zeros of
///   f(k,l) = r_{q,l} - r_{q,s+1} - r_{k,l} + r_{k,s+1},  k < q <= l <= s.
/// With one or two corners this is the familiar cut / shift / cut+shift /
/// shift+shift split; deeper staircases need one shift per extra corner.
QuotientReport generic_quotient(const Representation& m, int q, int s);

struct PathStep {
    Move move;
    Representation rep;
};

/// A sequence of moves from M to N, found by repeatedly peeling the projective
/// P_i (i maximal with r^N_{i,n'} > r^N_{i-1,n'}) off the top support vertex n'.
/// Throws NotComparable when N is not a degeneration of M.
std::vector<PathStep> degeneration_path(const Representation& m, const Representation& n);

}  // namespace sympdeg
