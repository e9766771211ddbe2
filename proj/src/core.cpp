#include "sympdeg/core.hpp"

#include <sstream>

namespace sympdeg {

std::string Segment::str() const {
    std::ostringstream os;
    os << "U[" << i << "," << j << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Representation

Representation::Representation(int n) : n_(n) {
    if (n < 1) throw InvalidSegment("quiver must have at least one vertex, got n=" + std::to_string(n));
}

Representation::Representation(int n, const Multiplicities& mult) : Representation(n) {
    for (const auto& [s, m] : mult) {
        check_segment(s);
        if (m < 0) throw InsufficientMultiplicity("negative multiplicity for " + s.str());
        if (m > 0) mult_[s] = m;
    }
}

Representation Representation::of(int n, std::initializer_list<std::pair<Segment, int>> items) {
    Representation rep(n);
    for (const auto& [s, m] : items) rep = rep.with(s, m);
    return rep;
}

void Representation::check_segment(Segment s) const {
    if (s.i < 1 || s.i > s.j || s.j > n_) {
        throw InvalidSegment("segment " + s.str() + " is not inside [1," + std::to_string(n_) + "]");
    }
}

int Representation::multiplicity(Segment s) const {
    auto it = mult_.find(s);
    return it == mult_.end() ? 0 : it->second;
}

int Representation::summand_count() const {
    int total = 0;
    for (const auto& [s, m] : mult_) total += m;
    return total;
}

Representation Representation::with(Segment s, int delta) const {
    check_segment(s);
    Representation out = *this;
    const int m = multiplicity(s) + delta;
    if (m < 0) {
        throw InsufficientMultiplicity(s.str() + " has multiplicity " + std::to_string(multiplicity(s)) +
                                       ", cannot remove " + std::to_string(-delta));
    }
    if (m == 0) {
        out.mult_.erase(s);
    } else {
        out.mult_[s] = m;
    }
    return out;
}

Representation Representation::operator+(const Representation& other) const {
    if (other.n_ != n_) throw MismatchedQuiver("direct sum of representations on different quivers");
    Representation out = *this;
    for (const auto& [s, m] : other.mult_) out.mult_[s] += m;
    return out;
}

std::string Representation::str() const {
    if (mult_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, m] : mult_) {
        if (!first) os << " + ";
        first = false;
        os << s.str();
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// ExtRank / RankSequence

int ExtRank::value() const {
    if (infinite_) throw InvalidRankSequence("value() called on the infinite rank");
    return value_;
}

std::string RankViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Negative:
        os << "r(" << i << "," << j << ") < 0";
        break;
    case Kind::RowMonotone:
        os << "r(" << i << "," << j << ") < r(" << i << "," << j + 1 << ")";
        break;
    case Kind::ColumnMonotone:
        os << "r(" << i - 1 << "," << j << ") > r(" << i << "," << j << ")";
        break;
    case Kind::DoubleDifference:
        os << "r(" << i - 1 << "," << j << ") - r(" << i - 1 << "," << j + 1 << ") > r(" << i << "," << j
           << ") - r(" << i << "," << j + 1 << ")";
        break;
    }
    return os.str();
}

RankSequence::RankSequence(int n) : n_(n), r_(static_cast<std::size_t>(n > 0 ? n * n : 0), 0) {
    if (n < 1) throw InvalidRankSequence("rank sequence needs n >= 1");
}

RankSequence RankSequence::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    RankSequence out(n);
    for (int i = 1; i <= n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != n - i + 1) {
            throw InvalidRankSequence("row " + std::to_string(i) + " must have " + std::to_string(n - i + 1) +
                                      " entries, got " + std::to_string(row.size()));
        }
        for (int j = i; j <= n; ++j) out.set(i, j, row[static_cast<std::size_t>(j - i)]);
    }
    return out;
}

void RankSequence::check_index(int i, int j) const {
    if (i < 1 || j > n_ || i > j) {
        throw InvalidRankSequence("rank index (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") out of range for n=" + std::to_string(n_));
    }
}

int RankSequence::operator()(int i, int j) const {
    if (i == 0 || j == n_ + 1) return 0;
    check_index(i, j);
    return r_[index(i, j)];
}

ExtRank RankSequence::ext(int i, int j) const {
    if (i > j) return ExtRank::infinity();
    return (*this)(i, j);
}

void RankSequence::set(int i, int j, int value) {
    check_index(i, j);
    r_[index(i, j)] = value;
}

RankSequence& RankSequence::operator+=(const RankSequence& other) {
    if (other.n_ != n_) throw MismatchedQuiver("adding rank sequences of different sizes");
    for (std::size_t k = 0; k < r_.size(); ++k) r_[k] += other.r_[k];
    return *this;
}

RankSequence& RankSequence::operator-=(const RankSequence& other) {
    if (other.n_ != n_) throw MismatchedQuiver("subtracting rank sequences of different sizes");
    for (std::size_t k = 0; k < r_.size(); ++k) r_[k] -= other.r_[k];
    return *this;
}

std::vector<std::vector<int>> RankSequence::rows() const {
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= n_; ++i) {
        std::vector<int> row;
        for (int j = i; j <= n_; ++j) row.push_back((*this)(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

long RankSequence::total() const {
    long sum = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = i; j <= n_; ++j) sum += (*this)(i, j);
    return sum;
}

DimVector RankSequence::diagonal() const {
    DimVector d;
    for (int i = 1; i <= n_; ++i) d.push_back((*this)(i, i));
    return d;
}

bool RankSequence::dominates(const RankSequence& other) const {
    if (other.n_ != n_) throw MismatchedQuiver("comparing rank sequences of different sizes");
    for (int i = 1; i <= n_; ++i)
        for (int j = i; j <= n_; ++j)
            if ((*this)(i, j) < other(i, j)) return false;
    return true;
}

// The double-difference test runs over i <= j, diagonal included: at i = j it
// is exactly m_{i,i} >= 0.
std::optional<RankViolation> RankSequence::first_violation() const {
    using K = RankViolation::Kind;
    const auto& r = *this;
    for (int i = 1; i <= n_; ++i) {
        for (int j = i; j <= n_; ++j) {
            if (r(i, j) < 0) return RankViolation{K::Negative, i, j};
            if (j < n_ && r(i, j) < r(i, j + 1)) return RankViolation{K::RowMonotone, i, j};
            if (i > 1 && r(i - 1, j) > r(i, j)) return RankViolation{K::ColumnMonotone, i, j};
            if (i > 1 && j < n_ && r(i - 1, j) - r(i - 1, j + 1) > r(i, j) - r(i, j + 1)) {
                return RankViolation{K::DoubleDifference, i, j};
            }
        }
    }
    return std::nullopt;
}

std::string RankSequence::str() const {
    std::ostringstream os;
    for (const auto& row : rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Dictionary and homological formulas

RankSequence ranks_of(const Representation& rep) {
    const int n = rep.n();
    RankSequence r(n);
    for (const auto& [s, m] : rep.multiplicities())
        for (int i = s.i; i <= s.j; ++i)
            for (int j = i; j <= s.j; ++j) r.add(i, j, m);
    return r;
}

Representation rep_of(const RankSequence& ranks) {
    if (auto v = ranks.first_violation()) {
        throw InvalidRankSequence("not a rank sequence: " + v->describe());
    }
    const int n = ranks.n();
    Representation::Multiplicities mult;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const int m = ranks(i, j) - ranks(i, j + 1) - ranks(i - 1, j) + ranks(i - 1, j + 1);
            if (m > 0) mult[{i, j}] = m;
        }
    }
    return Representation(n, mult);
}

Representation dual(const Representation& rep) {
    Representation::Multiplicities mult;
    for (const auto& [s, m] : rep.multiplicities()) mult[dual(rep.n(), s)] = m;
    return Representation(rep.n(), mult);
}

DimVector dim_vector(const Representation& rep) {
    DimVector d(static_cast<std::size_t>(rep.n()), 0);
    for (const auto& [s, m] : rep.multiplicities())
        for (int k = s.i; k <= s.j; ++k) d[static_cast<std::size_t>(k - 1)] += m;
    return d;
}

int euler_form(const DimVector& d, const DimVector& e) {
    if (d.size() != e.size()) throw MismatchedQuiver("Euler form of vectors with different lengths");
    int out = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        out += d[i] * e[i];
        if (i + 1 < d.size()) out -= d[i] * e[i + 1];
    }
    return out;
}

int hom_dim(Segment from, Segment to) {
    return (to.i <= from.i && from.i <= to.j && to.j <= from.j) ? 1 : 0;
}

int ext_dim(Segment from, Segment to) {
    return (from.i < to.i && to.i <= from.j + 1 && from.j + 1 <= to.j) ? 1 : 0;
}

namespace {

template <class F>
int bilinear_sum(const Representation& m, const Representation& n, F f) {
    if (m.n() != n.n()) {
        throw MismatchedQuiver("representations live on A_" + std::to_string(m.n()) + " and A_" +
                               std::to_string(n.n()));
    }
    int total = 0;
    for (const auto& [a, ma] : m.multiplicities())
        for (const auto& [b, mb] : n.multiplicities()) total += ma * mb * f(a, b);
    return total;
}

}  // namespace

int hom_dim(const Representation& m, const Representation& n) {
    return bilinear_sum(m, n, [](Segment a, Segment b) { return hom_dim(a, b); });
}

int ext_dim(const Representation& m, const Representation& n) {
    return bilinear_sum(m, n, [](Segment a, Segment b) { return ext_dim(a, b); });
}

bool embeds(Segment s, const RankSequence& r) { return r(s.i, s.j) - r(s.i, s.j + 1) > 0; }

bool is_quotient(Segment s, const RankSequence& r) { return r(s.i, s.j) - r(s.i - 1, s.j) > 0; }

bool is_summand(Segment s, const RankSequence& r) {
    return r(s.i, s.j) - r(s.i, s.j + 1) > r(s.i - 1, s.j) - r(s.i - 1, s.j + 1);
}

bool embeds(Segment s, const Representation& m) { return embeds(s, ranks_of(m)); }
bool is_quotient(Segment s, const Representation& m) { return is_quotient(s, ranks_of(m)); }
bool is_summand(Segment s, const Representation& m) { return is_summand(s, ranks_of(m)); }

RankSequence segment_ranks(int n, Segment s) { return ranks_of(Representation(n).with(s, 1)); }

}  // namespace sympdeg
