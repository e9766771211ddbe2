#include "sympdeg/pbw.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <map>
#include <set>
#include <sstream>

namespace sympdeg {

// ---------------------------------------------------------------- subset

PbwSubset::PbwSubset(int n, std::vector<int> i) : n_(n), i_(std::move(i)) {
    if (n < 1) throw InvalidSubset("n must be at least 1, got " + std::to_string(n));
    for (std::size_t k = 0; k < i_.size(); ++k) {
        if (i_[k] < 1 || i_[k] > n - 1)
            throw InvalidSubset("entry " + std::to_string(i_[k]) + " outside [1, " + std::to_string(n - 1) + "]");
        if (k > 0 && i_[k] <= i_[k - 1]) throw InvalidSubset("entries must be strictly increasing");
    }
}

PbwSubset PbwSubset::parse(int n, const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
                  tok.end());
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw ParseError("bad subset entry '" + tok + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad subset entry '" + tok + "'");
        }
    }
    return PbwSubset(n, std::move(out));
}

std::vector<PbwSubset> PbwSubset::all(int n) {
    std::vector<PbwSubset> out;
    const int bits = std::max(n - 1, 0);
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
        std::vector<int> i;
        for (int b = 0; b < bits; ++b)
            if (mask & (1u << b)) i.push_back(b + 1);
        out.emplace_back(n, std::move(i));
    }
    return out;
}

int PbwSubset::at(int k) const {
    if (k == 0) return 0;
    if (k == t() + 1) return n_;
    return i_.at(static_cast<std::size_t>(k - 1));
}

bool PbwSubset::contains(int j) const { return std::binary_search(i_.begin(), i_.end(), j); }

std::string PbwSubset::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < i_.size(); ++k) os << (k ? "," : "") << i_[k];
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------- M^i

PbwModule build_Mi(const PbwSubset& p) {
    const int n = p.n();
    const int big = 2 * n - 1;
    Representation half(big);
    half = half.with(projective(big, 1), n - p.t());
    for (int ik : p.indices()) {
        half = half.with(projective(big, sigma(big, ik)), 1);
        half = half.with(projective(big, ik + 1), 1);
    }
    DimVector e;
    for (int k = 1; k <= big; ++k) e.push_back(k);
    return {EpsilonRep(half + dual(half), SymmetricType(big, -1)), half, e};
}

std::vector<int> sigma_i_map(const PbwSubset& p) {
    std::set<int> removed;
    for (int k = 1; k <= p.t(); ++k) removed.insert(p.at(k) + k);
    std::vector<int> out;
    for (int x = 1; x <= p.n() + p.t(); ++x)
        if (!removed.count(x)) out.push_back(x);
    return out;
}

std::vector<Rational> psi(const PbwSubset& p, const std::vector<Rational>& lambda) {
    if (static_cast<int>(lambda.size()) != p.n())
        throw InvalidSubset("psi expects " + std::to_string(p.n()) + " coefficients");
    const auto sig = sigma_i_map(p);
    std::vector<Rational> out(static_cast<std::size_t>(p.n() + p.t()), Rational(0));
    for (std::size_t j = 0; j < lambda.size(); ++j) out[static_cast<std::size_t>(sig[j] - 1)] = lambda[j];
    return out;
}

std::vector<int> i_prime(const PbwSubset& p) {
    std::vector<int> out = p.indices();
    for (auto it = p.indices().rbegin(); it != p.indices().rend(); ++it) out.push_back(2 * p.n() - 1 - *it);
    return out;
}

std::vector<int> ell_sequence(const PbwSubset& p) {
    std::set<int> removed;
    for (int x : i_prime(p)) removed.insert(x + 1);
    std::vector<int> out;
    for (int x = 1; x <= 2 * p.n() + 2 * p.t(); ++x)
        if (!removed.count(x)) out.push_back(x);
    return out;
}

std::vector<Rational> theta(const PbwSubset& p, const std::vector<Rational>& lambda) {
    const int big = 2 * p.n() - 1;
    if (static_cast<int>(lambda.size()) != big)
        throw InvalidSubset("theta expects " + std::to_string(big) + " coefficients");
    const auto ell = ell_sequence(p);
    std::vector<Rational> out(static_cast<std::size_t>(2 * (p.n() + p.t()) - 1), Rational(0));
    for (std::size_t k = 0; k < lambda.size(); ++k) out[static_cast<std::size_t>(ell[k] - 1)] = lambda[k];
    return out;
}

// ---------------------------------------------------------------- words

namespace {

// v_k for the sequence idx (idx[0] = 0 and the last entry closes the range).
void append_v(std::vector<int>& word, const std::vector<int>& idx, int k) {
    const int hi = idx[static_cast<std::size_t>(k)] + k - 1;
    const int lo = idx[static_cast<std::size_t>(k - 1)] + k;
    for (int j = hi; j >= lo; --j)
        for (int g = k; g <= j; ++g) word.push_back(g);
}

}  // namespace

WeylWord w_i_word(const PbwSubset& p) {
    const int m = p.n() + p.t();
    WeylWord w{WeylType::C, m, {}};
    for (int a = m; a >= p.t() + 1; --a)
        for (int g = a; g <= m; ++g) w.letters.push_back(g);
    std::vector<int> idx{0};
    for (int x : p.indices()) idx.push_back(x);
    for (int k = p.t(); k >= 1; --k) append_v(w.letters, idx, k);
    validate(w);
    return w;
}

WeylWord u_iprime_word(const PbwSubset& p) {
    const int t = p.t();
    WeylWord w{WeylType::A, 2 * (p.n() + t), {}};
    std::vector<int> idx{0};
    for (int x : i_prime(p)) idx.push_back(x);
    idx.push_back(2 * p.n() - 1);
    for (int k = 2 * t + 1; k >= 1; --k) append_v(w.letters, idx, k);
    validate(w);
    return w;
}

// ---------------------------------------------------------------- lemma

bool LemmaUiReport::all_agree_u() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const LemmaUiRow& r) { return r.clause == LemmaClause::Neither || r.agrees_u; });
}

bool LemmaUiReport::all_agree_u_inverse() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const LemmaUiRow& r) { return r.clause == LemmaClause::Neither || r.agrees_u_inverse; });
}

bool LemmaUiReport::first_clause_agrees_u() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const LemmaUiRow& r) { return r.clause != LemmaClause::First || r.agrees_u; });
}

bool LemmaUiReport::first_clause_agrees_u_inverse() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const LemmaUiRow& r) { return r.clause != LemmaClause::First || r.agrees_u_inverse; });
}

LemmaUiReport check_lemma_ui(const PbwSubset& p) {
    const int n = p.n();
    const int t = p.t();
    const int m = 2 * n + 2 * t;
    LemmaUiReport rep;
    rep.n = n;
    rep.subset = p.indices();
    rep.ell = ell_sequence(p);
    rep.u = evaluate_a(u_iprime_word(p));
    const PermutationA uinv = rep.u.inverse();
    for (std::size_t k = 0; k < rep.ell.size(); ++k) rep.h.push_back(rep.ell[k] - static_cast<int>(k) - 1);

    for (int j = 1; j <= 2 * n; ++j) {
        LemmaUiRow row;
        row.j = j;
        row.ell = rep.ell[static_cast<std::size_t>(j - 1)];
        row.h = rep.h[static_cast<std::size_t>(j - 1)];
        const int prev = j == 1 ? 0 : rep.ell[static_cast<std::size_t>(j - 2)];
        if (row.ell == prev + 1) {
            row.clause = LemmaClause::First;
            row.points = {row.ell};
            row.predicted = {row.h + m + 1 - j};
        } else if (row.ell == prev + 2) {
            row.clause = LemmaClause::Second;
            row.points = {row.ell - 1, row.ell};
            row.predicted = {row.h, row.h + m};
        }
        row.agrees_u = row.agrees_u_inverse = row.clause != LemmaClause::Neither;
        for (std::size_t a = 0; a < row.points.size(); ++a) {
            const int x = row.points[a];
            const int want = row.predicted[a];
            const bool ok = 1 <= want && want <= m;
            row.in_range.push_back(ok);
            if (!ok) ++rep.out_of_range_predictions;
            row.actual_u.push_back(rep.u(x));
            row.actual_u_inverse.push_back(uinv(x));
            row.agrees_u = row.agrees_u && rep.u(x) == want;
            row.agrees_u_inverse = row.agrees_u_inverse && uinv(x) == want;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

// ---------------------------------------------------------------- roots

std::string CRoot::str() const {
    std::ostringstream os;
    os << "a" << i << "," << (bar ? "~" : "") << j;
    return os.str();
}

std::vector<CRoot> positive_roots_c(int n) {
    std::vector<CRoot> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.push_back({i, j, false});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) out.push_back({i, j, true});
    return out;
}

std::vector<int> root_vector(int n, const CRoot& r) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    auto e = [&](int k) -> int& { return v[static_cast<std::size_t>(k - 1)]; };
    if (r.bar) {
        e(r.i) += 1;
        e(r.j) += 1;
    } else if (r.j < n) {
        e(r.i) += 1;
        e(r.j + 1) -= 1;
    } else {
        e(r.i) += 1;
        e(n) += 1;
    }
    return v;
}

int height(int n, const CRoot& r) {
    // alpha_{i,jbar} = alpha_{i,n} + alpha_{j,n-1}
    return r.bar ? (n - r.i + 1) + (n - r.j) : r.j - r.i + 1;
}

CRootVector::CRootVector(int n) : n_(n), roots_(positive_roots_c(n)), values_(roots_.size(), Rational(0)) {}

CRootVector::CRootVector(int n, std::vector<Rational> values)
    : n_(n), roots_(positive_roots_c(n)), values_(std::move(values)) {
    if (values_.size() != roots_.size())
        throw InvalidSegment("expected " + std::to_string(roots_.size()) + " root values, got " +
                             std::to_string(values_.size()));
}

int CRootVector::index(const CRoot& r) const {
    auto it = std::lower_bound(roots_.begin(), roots_.end(), r, [](const CRoot& a, const CRoot& b) {
        return std::tie(a.bar, a.i, a.j) < std::tie(b.bar, b.i, b.j);
    });
    if (it == roots_.end() || !(*it == r)) throw InvalidSegment("no positive root " + r.str() + " in C_" + std::to_string(n_));
    return static_cast<int>(it - roots_.begin());
}

Rational& CRootVector::operator[](const CRoot& r) { return values_[static_cast<std::size_t>(index(r))]; }
const Rational& CRootVector::operator[](const CRoot& r) const { return values_[static_cast<std::size_t>(index(r))]; }

CRootVector CRootVector::heights(int n) {
    CRootVector d(n);
    for (std::size_t k = 0; k < d.roots_.size(); ++k) d.values_[k] = height(n, d.roots_[k]);
    return d;
}

// ---------------------------------------------------------------- faces

namespace {

// alpha_{i, jbar}, reading jbar = n as the unbarred alpha_{i,n}.
CRoot barred(int n, int i, int j) { return j == n ? CRoot{i, n, false} : CRoot{i, j, true}; }

std::string term_text(const std::vector<std::pair<CRoot, int>>& terms, const char* rel) {
    std::ostringstream lhs;
    std::ostringstream rhs;
    bool lfirst = true;
    bool rfirst = true;
    for (const auto& [r, c] : terms) {
        auto& os = c > 0 ? lhs : rhs;
        bool& first = c > 0 ? lfirst : rfirst;
        os << (first ? "" : " + ") << "d(" << r.str() << ")";
        first = false;
    }
    return lhs.str() + " " + rel + " " + rhs.str();
}

FaceConstraint make(FaceConstraint::Kind kind, int family, std::vector<std::pair<CRoot, int>> terms) {
    FaceConstraint c{kind, family, std::move(terms), {}};
    c.text = term_text(c.terms, kind == FaceConstraint::Kind::Inequality ? ">=" : "=");
    return c;
}

}  // namespace

std::vector<FaceConstraint> dynkin_face_constraints(const PbwSubset& p) {
    using K = FaceConstraint::Kind;
    const int n = p.n();
    std::vector<FaceConstraint> out;
    std::set<std::pair<CRoot, CRoot>> special;  // unordered pairs with an inequality
    auto key = [](CRoot a, CRoot b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    auto add_ineq = [&](int family, CRoot a, CRoot b, CRoot sum) {
        if (!special.insert(key(a, b)).second) return;
        out.push_back(make(K::Inequality, family, {{a, 1}, {b, 1}, {sum, -1}}));
    };

    for (int j : p.indices()) {
        for (int i = 1; i <= j; ++i) {
            const CRoot a{i, j, false};
            for (int l = j + 1; l <= n; ++l) add_ineq(1, a, {j + 1, l, false}, {i, l, false});
            for (int m = n - 1; m >= i; --m)
                if (j + 1 <= m) add_ineq(1, a, {j + 1, m, true}, {i, m, true});
            for (int l = i; l <= j + 1; ++l) add_ineq(2, a, barred(n, l, j + 1), barred(n, i, l));
        }
    }

    // Every other pair of positive roots summing to a positive root.
    const auto roots = positive_roots_c(n);
    std::map<std::vector<int>, CRoot> by_vector;
    for (const auto& r : roots) by_vector.emplace(root_vector(n, r), r);
    for (std::size_t x = 0; x < roots.size(); ++x) {
        const auto vx = root_vector(n, roots[x]);
        for (std::size_t y = x + 1; y < roots.size(); ++y) {
            auto v = root_vector(n, roots[y]);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += vx[k];
            auto it = by_vector.find(v);
            if (it == by_vector.end() || special.count(key(roots[x], roots[y]))) continue;
            out.push_back(make(K::Equality, 3, {{roots[x], 1}, {roots[y], 1}, {it->second, -1}}));
        }
    }

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    out.push_back(make(K::Equality, 4,
                                       {{{i, k, false}, 1}, {{j, l, false}, 1}, {{i, l, false}, -1}, {{j, k, false}, -1}}));

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n - 1; ++j)
            for (int k = j; k <= n - 1; ++k)
                for (int l = j; l <= n; ++l)
                    out.push_back(make(K::Equality, 5,
                                       {{{i, k, true}, 1}, {{j, l, false}, 1}, {{i, l, false}, -1}, {{j, k, true}, -1}}));

    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j)
            for (int k = j + 1; k <= n - 1; ++k)
                for (int l = k + 1; l <= n - 1; ++l) {
                    out.push_back(make(K::Equality, 6,
                                       {{{i, j, true}, 1}, {{k, l, true}, 1}, {{i, k, true}, -1}, {{j, l, true}, -1}}));
                    out.push_back(make(K::Equality, 6,
                                       {{{i, k, true}, 1}, {{j, l, true}, 1}, {{i, l, true}, -1}, {{j, k, true}, -1}}));
                }
    return out;
}

namespace {

Rational evaluate(const FaceConstraint& c, const CRootVector& d) {
    Rational v = 0;
    for (const auto& [r, coef] : c.terms) v += coef * d[r];
    return v;
}

}  // namespace

std::vector<FaceConstraint> dynkin_face_violations(const PbwSubset& p, const CRootVector& d, bool strict) {
    if (d.n() != p.n()) throw MismatchedQuiver("root vector rank differs from the subset's n");
    std::vector<FaceConstraint> bad;
    for (auto& c : dynkin_face_constraints(p)) {
        const Rational v = evaluate(c, d);
        const bool ok = c.kind == FaceConstraint::Kind::Equality ? v == 0 : (strict ? v > 0 : v >= 0);
        if (!ok) bad.push_back(std::move(c));
    }
    return bad;
}

bool dynkin_face_contains(const PbwSubset& p, const CRootVector& d, bool strict) {
    return dynkin_face_violations(p, d, strict).empty();
}

namespace {

// Phase one of the simplex method on A x = b, x >= 0, b >= 0, with Bland's
// rule. Returns a feasible x or nothing.
std::optional<std::vector<Rational>> feasible_point(const RatMatrix& a, const std::vector<Rational>& b) {
    const int m = a.rows();
    const int nv = a.cols();
    const int cols = nv + m;  // artificials last
    RatMatrix tab(m, cols + 1);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < nv; ++c) tab(r, c) = a(r, c);
        tab(r, nv + r) = 1;
        tab(r, cols) = b[static_cast<std::size_t>(r)];
    }
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) basis[static_cast<std::size_t>(r)] = nv + r;

    for (;;) {
        // reduced cost of column c: cost_c - sum over rows with artificial basis
        int enter = -1;
        for (int c = 0; c < cols && enter < 0; ++c) {
            if (std::find(basis.begin(), basis.end(), c) != basis.end()) continue;
            Rational red = c >= nv ? 1 : 0;
            for (int r = 0; r < m; ++r)
                if (basis[static_cast<std::size_t>(r)] >= nv) red -= tab(r, c);
            if (red < 0) enter = c;
        }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int r = 0; r < m; ++r) {
            if (tab(r, enter) <= 0) continue;
            const Rational ratio = tab(r, cols) / tab(r, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) break;  // cannot happen in phase one
        const Rational piv = tab(leave, enter);
        for (int c = 0; c <= cols; ++c) tab(leave, c) /= piv;
        for (int r = 0; r < m; ++r) {
            if (r == leave || tab(r, enter) == 0) continue;
            const Rational f = tab(r, enter);
            for (int c = 0; c <= cols; ++c) tab(r, c) -= f * tab(leave, c);
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    std::vector<Rational> x(static_cast<std::size_t>(cols), Rational(0));
    for (int r = 0; r < m; ++r) x[static_cast<std::size_t>(basis[static_cast<std::size_t>(r)])] = tab(r, cols);
    for (int c = nv; c < cols; ++c)
        if (x[static_cast<std::size_t>(c)] != 0) return std::nullopt;
    x.resize(static_cast<std::size_t>(nv));
    return x;
}

}  // namespace

namespace {

struct FaceSystem {
    CRootVector shape;
    RatMatrix basis;  // d = basis * y solves every equality
    RatMatrix gb;     // inequality rows expressed in y
    std::vector<FaceConstraint> ineqs;
};

FaceSystem face_system(const PbwSubset& p) {
    FaceSystem fs{CRootVector(p.n()), {}, {}, {}};
    const int nr = static_cast<int>(fs.shape.roots().size());
    std::vector<FaceConstraint> eqs;
    for (auto& c : dynkin_face_constraints(p))
        (c.kind == FaceConstraint::Kind::Equality ? eqs : fs.ineqs).push_back(std::move(c));

    RatMatrix e(static_cast<int>(eqs.size()), nr);
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (const auto& [root, coef] : eqs[r].terms) e(static_cast<int>(r), fs.shape.index(root)) += coef;
    fs.basis = nullspace(e);

    RatMatrix g(static_cast<int>(fs.ineqs.size()), nr);
    for (std::size_t r = 0; r < fs.ineqs.size(); ++r)
        for (const auto& [root, coef] : fs.ineqs[r].terms) g(static_cast<int>(r), fs.shape.index(root)) += coef;
    fs.gb = g * fs.basis;
    return fs;
}

// A point d of the equality space with (inequality row r)(d) >= lower[r].
std::optional<CRootVector> solve_face(const FaceSystem& fs, const std::vector<Rational>& lower) {
    const int dimy = fs.basis.cols();
    const int m = fs.gb.rows();
    // gb (y+ - y-) - s = lower with y+, y-, s >= 0.
    RatMatrix a(m, 2 * dimy + m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < dimy; ++c) {
            a(r, c) = fs.gb(r, c);
            a(r, dimy + c) = -fs.gb(r, c);
        }
        a(r, 2 * dimy + r) = -1;
    }
    const auto x = feasible_point(a, lower);
    if (!x) return std::nullopt;
    const int nr = fs.basis.rows();
    std::vector<Rational> values(static_cast<std::size_t>(nr), Rational(0));
    for (int k = 0; k < nr; ++k)
        for (int c = 0; c < dimy; ++c)
            values[static_cast<std::size_t>(k)] +=
                fs.basis(k, c) * ((*x)[static_cast<std::size_t>(c)] - (*x)[static_cast<std::size_t>(dimy + c)]);
    return CRootVector(fs.shape.n(), std::move(values));
}

// Witnesses per inequality: a face point where that inequality is >= 1, or
// nothing when the inequality is an implicit equality.
std::vector<std::optional<CRootVector>> witnesses(const FaceSystem& fs) {
    std::vector<std::optional<CRootVector>> out;
    const std::size_t m = fs.ineqs.size();
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<Rational> lower(m, Rational(0));
        lower[r] = 1;
        out.push_back(solve_face(fs, lower));
    }
    return out;
}

}  // namespace

CRootVector find_interior_point(const PbwSubset& p) {
    const int n = p.n();
    const FaceSystem fs = face_system(p);
    if (fs.ineqs.empty()) {
        CRootVector h = CRootVector::heights(n);
        if (!dynkin_face_contains(p, h, true)) throw Infeasible("height function leaves the face for " + p.str());
        return h;
    }
    auto d = solve_face(fs, std::vector<Rational>(fs.ineqs.size(), Rational(1)));
    if (!d) {
        throw Infeasible("no point of the face of " + p.str() + " on C_" + std::to_string(n) +
                         " satisfies every inequality strictly");
    }
    if (!dynkin_face_contains(p, *d, true)) throw InvariantViolation("interior point failed the strict re-check");
    return *d;
}

std::vector<FaceConstraint> implicit_equalities(const PbwSubset& p) {
    const FaceSystem fs = face_system(p);
    const auto w = witnesses(fs);
    std::vector<FaceConstraint> out;
    for (std::size_t r = 0; r < w.size(); ++r)
        if (!w[r]) out.push_back(fs.ineqs[r]);
    return out;
}

bool dynkin_face_relint_contains(const PbwSubset& p, const CRootVector& d) {
    if (!dynkin_face_contains(p, d, false)) return false;
    const auto pinned = implicit_equalities(p);
    for (const auto& c : dynkin_face_constraints(p)) {
        if (c.kind != FaceConstraint::Kind::Inequality) continue;
        const bool is_pinned = std::any_of(pinned.begin(), pinned.end(), [&](const FaceConstraint& q) {
            return q.terms == c.terms;
        });
        if (!is_pinned && evaluate(c, d) <= 0) return false;
    }
    return true;
}

CRootVector find_relative_interior_point(const PbwSubset& p) {
    const int n = p.n();
    const FaceSystem fs = face_system(p);
    if (fs.ineqs.empty()) return CRootVector::heights(n);
    std::vector<Rational> sum(fs.shape.values().size(), Rational(0));
    for (const auto& w : witnesses(fs)) {
        if (!w) continue;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += w->values()[k];
    }
    CRootVector d(n, std::move(sum));
    if (!dynkin_face_relint_contains(p, d)) throw InvariantViolation("relative interior point failed its re-check");
    return d;
}

// ---------------------------------------------------------------- fixed points

namespace {

// Index killed by f_k (k = 1..n-1), or 0.
int kernel_index(const PbwSubset& p, int k) { return p.contains(k) ? k + 1 : 0; }
// Index killed by the dual arrow (k+1)* -> k*, or 0.
int dual_kernel_index(const PbwSubset& p, int k) { return p.contains(k) ? 2 * p.n() - k : 0; }

bool closed_under(const std::vector<int>& from, const std::vector<int>& to, int killed) {
    for (int a : from)
        if (a != killed && !std::binary_search(to.begin(), to.end(), a)) return false;
    return true;
}

void subsets_of_size(const std::vector<int>& pool, int k, std::size_t start, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t x = start; x < pool.size(); ++x) {
        cur.push_back(pool[x]);
        subsets_of_size(pool, k, x + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> dual_half(const FixedPoint& fp) {
    const int n = static_cast<int>(fp.s.size());
    std::vector<std::vector<int>> out;
    for (int k = n - 1; k >= 1; --k) {
        const auto& sk = fp.s[static_cast<std::size_t>(k - 1)];
        std::vector<int> perp;
        for (int a = 1; a <= 2 * n; ++a)
            if (!std::binary_search(sk.begin(), sk.end(), 2 * n + 1 - a)) perp.push_back(a);
        out.push_back(std::move(perp));
    }
    return out;
}

std::vector<FixedPoint> lagrangian_fixed_points(const PbwSubset& p) {
    const int n = p.n();
    std::vector<FixedPoint> out;

    // S_omega: one index from each pair {j, 2n+1-j}.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> omega;
        for (int j = 1; j <= n; ++j) omega.push_back((mask & (1u << (j - 1))) ? 2 * n + 1 - j : j);
        std::sort(omega.begin(), omega.end());

        // Descend: S_k is a k-subset of S_{k+1} plus the index f_k kills.
        std::vector<std::vector<std::vector<int>>> partial{{omega}};
        for (int k = n - 1; k >= 1; --k) {
            std::vector<std::vector<std::vector<int>>> next;
            for (const auto& chain : partial) {
                std::vector<int> pool = chain.back();
                if (int kill = kernel_index(p, k); kill && !std::binary_search(pool.begin(), pool.end(), kill)) {
                    pool.insert(std::upper_bound(pool.begin(), pool.end(), kill), kill);
                }
                std::vector<std::vector<int>> picks;
                std::vector<int> cur;
                subsets_of_size(pool, k, 0, cur, picks);
                for (auto& sk : picks) {
                    auto c = chain;
                    c.push_back(std::move(sk));
                    next.push_back(std::move(c));
                }
            }
            partial.swap(next);
        }
        for (auto& chain : partial) {
            FixedPoint fp;
            fp.s.assign(chain.rbegin(), chain.rend());
            if (check_fixed_point(p, fp).ok()) out.push_back(std::move(fp));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FixedPointCheck check_fixed_point(const PbwSubset& p, const FixedPoint& fp) {
    const int n = p.n();
    FixedPointCheck res;
    if (static_cast<int>(fp.s.size()) != n) return res;

    res.sizes = true;
    for (int k = 1; k <= n; ++k) {
        const auto& sk = fp.s[static_cast<std::size_t>(k - 1)];
        res.sizes = res.sizes && static_cast<int>(sk.size()) == k && std::is_sorted(sk.begin(), sk.end()) &&
                    std::adjacent_find(sk.begin(), sk.end()) == sk.end() &&
                    std::all_of(sk.begin(), sk.end(), [&](int a) { return 1 <= a && a <= 2 * n; });
    }
    if (!res.sizes) return res;

    res.closed = true;
    for (int k = 1; k <= n - 1; ++k)
        res.closed = res.closed && closed_under(fp.s[static_cast<std::size_t>(k - 1)], fp.s[static_cast<std::size_t>(k)],
                                                kernel_index(p, k));

    // Vertices n, n+1, ..., 2n-1 carry S_omega, S_{(n-1)*}, ..., S_{1*}.
    std::vector<std::vector<int>> second{fp.s.back()};
    for (auto& v : dual_half(fp)) second.push_back(std::move(v));
    res.dual_closed = true;
    for (int k = n - 1; k >= 1; --k) {
        const auto& from = second[static_cast<std::size_t>(n - 1 - k)];  // S_{(k+1)*}
        const auto& to = second[static_cast<std::size_t>(n - k)];       // S_{k*}
        res.dual_closed = res.dual_closed && closed_under(from, to, dual_kernel_index(p, k));
    }

    // Pairing between vertex v and vertex 2n - v: <e_a, e_b> != 0 iff b = 2n+1-a.
    std::vector<std::vector<int>> all(fp.s.begin(), fp.s.end() - 1);
    for (auto& v : second) all.push_back(v);
    res.isotropic = true;
    long total = 0;
    for (int v = 1; v <= 2 * n - 1; ++v) {
        const auto& sv = all[static_cast<std::size_t>(v - 1)];
        const auto& sw = all[static_cast<std::size_t>(2 * n - 1 - v)];
        total += static_cast<long>(sv.size());
        for (int a : sv)
            if (std::binary_search(sw.begin(), sw.end(), 2 * n + 1 - a)) res.isotropic = false;
    }
    res.lagrangian = res.isotropic && total == static_cast<long>(n) * (2 * n - 1);
    return res;
}

std::size_t bruhat_quotient_count(const PbwSubset& p) {
    const int m = p.n() + p.t();
    if (m > 6) throw InstanceTooLarge("Bruhat interval in C_" + std::to_string(m) + " is too large to list");
    const auto sig = sigma_i_map(p);
    std::vector<int> stab;
    for (int k = 1; k <= m; ++k)
        if (!std::binary_search(sig.begin(), sig.end(), k)) stab.push_back(k);
    std::size_t count = 0;
    for (const auto& u : bruhat_lower_interval(evaluate_c(w_i_word(p)))) {
        const int len = length(u);
        if (std::all_of(stab.begin(), stab.end(), [&](int k) { return length(times_generator(u, k)) > len; })) ++count;
    }
    return count;
}

}  // namespace sympdeg
