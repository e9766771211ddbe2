#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympdeg/degen.hpp"

namespace sympdeg {

/// (A_n, epsilon). The split types are (A_odd, -1) and (A_even, +1).
struct SymmetricType {
    int n = 1;
    int epsilon = -1;

    SymmetricType() = default;
    SymmetricType(int n_, int eps);

    bool split() const noexcept { return (n % 2 == 1) == (epsilon == -1); }

    /// Parses "odd-neg", "even-pos", "odd-pos", "even-neg" against a given n.
    static SymmetricType parse(const std::string& name, int n);
    std::string name() const;

    friend bool operator==(const SymmetricType&, const SymmetricType&) = default;
};

/// A representation together with the type whose epsilon-structure it admits.
class EpsilonRep {
public:
    /// Throws NotEpsilon when `rep` admits no epsilon-structure of type `sym`.
    EpsilonRep(Representation rep, SymmetricType sym);

    const Representation& rep() const noexcept { return rep_; }
    const SymmetricType& sym() const noexcept { return sym_; }

    friend bool operator==(const EpsilonRep&, const EpsilonRep&) = default;

private:
    Representation rep_;
    SymmetricType sym_;
};

bool is_epsilon_rank(const RankSequence& ranks, const SymmetricType& sym);
bool is_epsilon_rep(const Representation& rep, const SymmetricType& sym);

/// A move paired with its sigma-dual.
///
/// SYMCUT(t, s, q) cuts [t,s] after column q (t <= q < s) and then cuts the
/// dual segment at the mirrored column. SYMSHIFT(t, s, q, r) is SHIFT(t,s,q,r)
/// followed by its dual shift.
struct SymMove {
    enum class Kind { SymCut, SymShift };

    Kind kind = Kind::SymCut;
    int t = 0;
    int s = 0;
    int q = 0;
    int r = 0;

    static SymMove symcut(int t, int s, int q) { return {Kind::SymCut, t, s, q, 0}; }
    static SymMove symshift(int t, int s, int q, int r) { return {Kind::SymShift, t, s, q, r}; }

    /// The ordered pair of ordinary moves on A_n.
    std::pair<Move, Move> expand(int n) const;

    friend bool operator==(const SymMove&, const SymMove&) = default;
    friend auto operator<=>(const SymMove&, const SymMove&) = default;

    std::string str() const;
};

/// Throws NotSplitType, InsufficientMultiplicity, InvalidMove.
EpsilonRep apply_sym_move(const EpsilonRep& erep, const SymMove& mv);

/// Symmetric moves applicable to `erep` (both constituent moves succeed).
std::vector<SymMove> applicable_sym_moves(const EpsilonRep& erep);

/// Rank order on a common split type. Throws MismatchedType or NotSplitType.
bool sym_degenerates(const EpsilonRep& m, const EpsilonRep& n);

/// Least a with d_a > 0; the support is [a, sigma(a)]. Returns nullopt for
/// the zero dimension vector.
std::optional<Segment> symmetric_support(const DimVector& d);

/// Rank sequence of L^perp / L for a generic embedding of L = U_{q,n'}, where
/// n' is the top vertex of the symmetric support of M. Throws NoEmbedding or
/// NotSplitType.
RankSequence perp_quotient_ranks(const RankSequence& m, const SymmetricType& sym, int q);
RankSequence perp_quotient_ranks(const EpsilonRep& m, int q);

struct DegenStep {
    RankSequence M;  // M(i)
    RankSequence N;  // N(i)
    RankSequence Z;  // M(i) plus every pair peeled so far
    std::optional<Segment> L;  // peeled at this step; none on the final step
    std::optional<Segment> support;
};

/// The peel-and-quotient sequence from M down to N. At each stage the peel is
/// P_i on the current support with i maximal such that r^N_{i,n'} > r^N_{i-1,n'}.
/// Throws NotComparable or MismatchedType.
std::vector<DegenStep> sym_degeneration_path(const EpsilonRep& m, const EpsilonRep& n);

/// Same recursion with the peel indices prescribed. Each prescribed i must
/// satisfy r^N_{i,n'} > r^N_{i-1,n'} at its stage, otherwise InvalidMove.
std::vector<DegenStep> sym_degeneration_path(const EpsilonRep& m, const EpsilonRep& n,
                                             const std::vector<int>& peels);

/// Bounded BFS over symmetric moves from `from` to `to`, exploring at most
/// `budget` states. Returns nullopt when inconclusive.
std::optional<std::vector<SymMove>> sym_move_refinement(const EpsilonRep& from, const EpsilonRep& to,
                                                        long budget);

}  // namespace sympdeg
