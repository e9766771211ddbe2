#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympdeg/error.hpp"

namespace sympdeg {

/// Indecomposable U_{i,j} of the equioriented quiver 1 -> 2 -> ... -> n,
/// viewed as the segment [i, j].
struct Segment {
    int i = 1;
    int j = 1;

    friend auto operator<=>(const Segment&, const Segment&) = default;
    friend bool operator==(const Segment&, const Segment&) = default;

    int length() const noexcept { return j - i + 1; }
    bool contains(int k, int l) const noexcept { return i <= k && l <= j; }
    std::string str() const;
};

/// Vertex involution k -> n + 1 - k.
constexpr int sigma(int n, int k) noexcept { return n + 1 - k; }

/// The dual segment [sigma(j), sigma(i)].
constexpr Segment dual(int n, Segment s) noexcept { return {sigma(n, s.j), sigma(n, s.i)}; }

/// Projective cover P_k = U_{k,n}.
constexpr Segment projective(int n, int k) noexcept { return {k, n}; }

using DimVector = std::vector<int>;

/// Isomorphism class of a representation of the equioriented A_n quiver,
/// stored as its multiplicity map. Zero multiplicities are never stored, so
/// two values compare equal exactly when the representations are isomorphic.
class Representation {
public:
    using Multiplicities = std::map<Segment, int>;

    explicit Representation(int n = 1);
    Representation(int n, const Multiplicities& mult);

    static Representation of(int n, std::initializer_list<std::pair<Segment, int>> items);

    int n() const noexcept { return n_; }
    int multiplicity(Segment s) const;
    const Multiplicities& multiplicities() const noexcept { return mult_; }
    bool empty() const noexcept { return mult_.empty(); }

    /// Number of indecomposable summands counted with multiplicity.
    int summand_count() const;

    /// Copy with `delta` added to the multiplicity of `s`. Throws
    /// InsufficientMultiplicity when the result would be negative.
    Representation with(Segment s, int delta) const;

    Representation operator+(const Representation& other) const;

    friend bool operator==(const Representation&, const Representation&) = default;
    friend auto operator<=>(const Representation& a, const Representation& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.mult_ <=> b.mult_;
    }

    std::string str() const;

private:
    void check_segment(Segment s) const;

    int n_;
    Multiplicities mult_;
};

/// Value of the extended rank accessor: a non-negative integer or the
/// positive infinity used for r_{i,j} with i > j. Ordered totally, with
/// infinity above every finite value.
class ExtRank {
public:
    constexpr ExtRank(int v) noexcept : infinite_(false), value_(v) {}  // NOLINT
    static constexpr ExtRank infinity() noexcept { return ExtRank(); }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    int value() const;

    friend constexpr bool operator==(ExtRank a, ExtRank b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(ExtRank a, ExtRank b) noexcept {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

private:
    constexpr ExtRank() noexcept : infinite_(true), value_(0) {}
    bool infinite_;
    int value_;
};

/// Which defining inequality of a rank sequence failed, and where.
struct RankViolation {
    enum class Kind { Negative, RowMonotone, ColumnMonotone, DoubleDifference };
    Kind kind;
    int i;
    int j;
    std::string describe() const;
};

/// Upper-triangular array r_{i,j}, 1 <= i <= j <= n.
class RankSequence {
public:
    explicit RankSequence(int n = 1);

    /// Row k holds r_{k,k}, ..., r_{k,n}.
    static RankSequence from_rows(const std::vector<std::vector<int>>& rows);

    int n() const noexcept { return n_; }

    /// Finite accessor with the boundary conventions r_{0,j} = 0 and
    /// r_{i,n+1} = 0. Requires i <= j.
    int operator()(int i, int j) const;

    /// Extended accessor: as above, plus r_{i,j} = infinity when i > j.
    ExtRank ext(int i, int j) const;

    void set(int i, int j, int value);
    void add(int i, int j, int delta) { set(i, j, (*this)(i, j) + delta); }

    /// Entrywise sum and difference; no validity check on the result.
    RankSequence& operator+=(const RankSequence& other);
    RankSequence& operator-=(const RankSequence& other);
    friend RankSequence operator+(RankSequence a, const RankSequence& b) { return a += b; }
    friend RankSequence operator-(RankSequence a, const RankSequence& b) { return a -= b; }

    std::vector<std::vector<int>> rows() const;
    long total() const;
    DimVector diagonal() const;

    /// Entrywise r >= other (same n). Diagonals are not compared separately.
    bool dominates(const RankSequence& other) const;

    std::optional<RankViolation> first_violation() const;
    bool is_valid() const { return !first_violation().has_value(); }

    friend bool operator==(const RankSequence&, const RankSequence&) = default;

    std::string str() const;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
    void check_index(int i, int j) const;

    int n_;
    std::vector<int> r_;
};

RankSequence ranks_of(const Representation& rep);

/// Inverse of ranks_of via the double-difference formula. Throws
/// InvalidRankSequence naming the violated inequality.
Representation rep_of(const RankSequence& ranks);

Representation dual(const Representation& rep);

DimVector dim_vector(const Representation& rep);

/// Ringel form <d, e> = sum d_i e_i - sum d_i e_{i+1}.
int euler_form(const DimVector& d, const DimVector& e);

/// dim Hom(U_{i,j}, U_{k,l}): 1 iff k <= i <= l <= j.
int hom_dim(Segment from, Segment to);

/// dim Ext^1(U_{k,l}, U_{i,j}): 1 iff k < i <= l + 1 <= j. The argument
/// order is calibrated against the Euler form and the matrix oracle.
int ext_dim(Segment from, Segment to);

int hom_dim(const Representation& m, const Representation& n);
int ext_dim(const Representation& m, const Representation& n);

bool embeds(Segment s, const Representation& m);
bool is_quotient(Segment s, const Representation& m);
bool is_summand(Segment s, const Representation& m);

bool embeds(Segment s, const RankSequence& r);
bool is_quotient(Segment s, const RankSequence& r);
bool is_summand(Segment s, const RankSequence& r);

/// Rank sequence of the single segment s on n vertices.
RankSequence segment_ranks(int n, Segment s);

}  // namespace sympdeg
