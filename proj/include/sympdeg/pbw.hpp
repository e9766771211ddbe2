#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympdeg/coxeter.hpp"
#include "sympdeg/linalg.hpp"
#include "sympdeg/symdegen.hpp"

namespace sympdeg {

/// A subset i = {i_1 < ... < i_t} of [n-1].
class PbwSubset {
public:
    /// Throws InvalidSubset.
    PbwSubset(int n, std::vector<int> i);

    /// Parses "1,3" or "" (empty subset).
    static PbwSubset parse(int n, const std::string& text);
    /// All 2^(n-1) subsets of [n-1], ordered by bitmask.
    static std::vector<PbwSubset> all(int n);

    int n() const noexcept { return n_; }
    int t() const noexcept { return static_cast<int>(i_.size()); }
    const std::vector<int>& indices() const noexcept { return i_; }
    /// i_k for k = 0..t+1 with i_0 = 0 and i_{t+1} = n.
    int at(int k) const;
    bool contains(int j) const;
    std::string str() const;

private:
    int n_;
    std::vector<int> i_;
};

struct PbwModule {
    EpsilonRep total;        // M^i + dual, on A_{2n-1}, type (odd, -1)
    Representation half;     // M^i
    DimVector e;             // (1, 2, ..., 2n-1)
};

PbwModule build_Mi(const PbwSubset& p);

/// sigma_i(j) for j = 1..n: the ordered complement of {i_k + k} in [n+t].
std::vector<int> sigma_i_map(const PbwSubset& p);
/// Coefficients on the fundamental weights, n in and n+t out.
std::vector<Rational> psi(const PbwSubset& p, const std::vector<Rational>& lambda);
/// Coefficients on the fundamental weights of A_{2n-1} in and of A_{2(n+t)-1} out.
std::vector<Rational> theta(const PbwSubset& p, const std::vector<Rational>& lambda);

/// i' = {i_1, ..., i_t, 2n-1-i_t, ..., 2n-1-i_1}, a subset of [2n-2].
std::vector<int> i_prime(const PbwSubset& p);
/// l_1 < ... < l_{2n}: the ordered complement of {i'_p + 1} in [2n+2t].
std::vector<int> ell_sequence(const PbwSubset& p);

/// Type C word of rank n+t.
WeylWord w_i_word(const PbwSubset& p);
/// Type A word on 2(n+t) symbols.
WeylWord u_iprime_word(const PbwSubset& p);

enum class LemmaClause { First, Second, Neither };

struct LemmaUiRow {
    int j = 0;
    int ell = 0;
    int h = 0;
    LemmaClause clause = LemmaClause::Neither;
    // Clause (1) predicts u(l_j). Clause (2) predicts u(l_j - 1) and u(l_j).
    std::vector<int> points;
    std::vector<int> predicted;
    std::vector<int> actual_u;
    std::vector<int> actual_u_inverse;
    std::vector<bool> in_range;
    bool agrees_u = false;
    bool agrees_u_inverse = false;
};

struct LemmaUiReport {
    int n = 0;
    std::vector<int> subset;
    std::vector<int> ell;
    std::vector<int> h;
    PermutationA u;
    std::vector<LemmaUiRow> rows;
    int out_of_range_predictions = 0;

    bool all_agree_u() const;
    bool all_agree_u_inverse() const;
    /// The rows of clause (1) alone.
    bool first_clause_agrees_u() const;
    bool first_clause_agrees_u_inverse() const;
};

/// Evaluates u_{i'} and compares it with both clauses. Reports only.
LemmaUiReport check_lemma_ui(const PbwSubset& p);

/// A positive root of C_n: alpha_{i,j} = alpha_i + ... + alpha_j when !bar,
/// alpha_{i,jbar} = alpha_{i,n} + alpha_{j,n-1} when bar.
struct CRoot {
    int i = 1;
    int j = 1;
    bool bar = false;

    friend bool operator==(const CRoot&, const CRoot&) = default;
    friend auto operator<=>(const CRoot&, const CRoot&) = default;
    std::string str() const;
};

/// All n^2 positive roots: unbarred in (i, j) order, then barred.
std::vector<CRoot> positive_roots_c(int n);
/// Coordinates in the basis e_1..e_n.
std::vector<int> root_vector(int n, const CRoot& r);
int height(int n, const CRoot& r);

class CRootVector {
public:
    explicit CRootVector(int n);
    CRootVector(int n, std::vector<Rational> values);

    int n() const noexcept { return n_; }
    const std::vector<CRoot>& roots() const noexcept { return roots_; }
    const std::vector<Rational>& values() const noexcept { return values_; }

    /// Throws InvalidSegment for an undefined root.
    int index(const CRoot& r) const;
    Rational& operator[](const CRoot& r);
    const Rational& operator[](const CRoot& r) const;

    static CRootVector heights(int n);

private:
    int n_;
    std::vector<CRoot> roots_;
    std::vector<Rational> values_;
};

/// One linear constraint sum_k coeff_k d_{root_k} (>=|=) 0.
struct FaceConstraint {
    enum class Kind { Inequality, Equality };
    Kind kind = Kind::Equality;
    int family = 0;  // 1, 2: inequalities; 3: additive pairs; 4, 5, 6: quadruples
    std::vector<std::pair<CRoot, int>> terms;
    std::string text;
};

std::vector<FaceConstraint> dynkin_face_constraints(const PbwSubset& p);

/// Violated constraints; empty iff d lies in the face (its relative interior when strict).
std::vector<FaceConstraint> dynkin_face_violations(const PbwSubset& p, const CRootVector& d, bool strict);
bool dynkin_face_contains(const PbwSubset& p, const CRootVector& d, bool strict);

/// A point with every inequality strict, by exact rational LP. Throws
/// Infeasible, which happens whenever the equalities pin some inequality.
CRootVector find_interior_point(const PbwSubset& p);

/// Inequalities that hold with equality on the whole face.
std::vector<FaceConstraint> implicit_equalities(const PbwSubset& p);

/// Strict on every inequality except the implicit equalities.
bool dynkin_face_relint_contains(const PbwSubset& p, const CRootVector& d);

/// A point of the relative interior: the sum of one witness per inequality
/// that is not an implicit equality.
CRootVector find_relative_interior_point(const PbwSubset& p);

/// Index sets S_1 .. S_{n-1}, S_omega inside [2n].
struct FixedPoint {
    std::vector<std::vector<int>> s;  // s[k-1] = S_k for k = 1..n, s[n-1] = S_omega

    friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
    friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;
};

/// Forced dual half: S_{k*} for k = n-1 down to 1, i.e. vertices n+1..2n-1.
std::vector<std::vector<int>> dual_half(const FixedPoint& fp);

std::vector<FixedPoint> lagrangian_fixed_points(const PbwSubset& p);

struct FixedPointCheck {
    bool sizes = false;
    bool closed = false;
    bool dual_closed = false;
    bool isotropic = false;
    bool lagrangian = false;
    bool ok() const { return sizes && closed && dual_closed && isotropic && lagrangian; }
};

FixedPointCheck check_fixed_point(const PbwSubset& p, const FixedPoint& fp);

/// Minimal coset representatives below w_i for the parabolic fixing Psi(rho).
/// A comparison number only. Nothing relies on it matching the fixed-point count.
std::size_t bruhat_quotient_count(const PbwSubset& p);

}  // namespace sympdeg
