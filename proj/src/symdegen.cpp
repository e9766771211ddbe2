#include "sympdeg/symdegen.hpp"

#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace sympdeg {

SymmetricType::SymmetricType(int n_, int eps) : n(n_), epsilon(eps) {
    if (n_ < 1) throw InvalidType("symmetric type needs n >= 1");
    if (eps != 1 && eps != -1) throw InvalidType("epsilon must be +1 or -1, got " + std::to_string(eps));
}

SymmetricType SymmetricType::parse(const std::string& name, int n) {
    const bool odd = n % 2 == 1;
    int eps = 0;
    if (name == "odd-neg" && odd) eps = -1;
    if (name == "odd-pos" && odd) eps = 1;
    if (name == "even-neg" && !odd) eps = -1;
    if (name == "even-pos" && !odd) eps = 1;
    if (eps == 0) throw InvalidType("type '" + name + "' does not fit n=" + std::to_string(n));
    return {n, eps};
}

std::string SymmetricType::name() const {
    return std::string(n % 2 ? "odd" : "even") + (epsilon < 0 ? "-neg" : "-pos");
}

bool is_epsilon_rank(const RankSequence& r, const SymmetricType& sym) {
    const int n = r.n();
    if (n != sym.n) return false;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            if (r(i, j) != r(sigma(n, j), sigma(n, i))) return false;
        }
        if (sym.split() && i <= sigma(n, i) && r(i, sigma(n, i)) % 2 != 0) return false;
    }
    return true;
}

bool is_epsilon_rep(const Representation& rep, const SymmetricType& sym) {
    if (rep.n() != sym.n) return false;
    const int n = rep.n();
    for (const auto& [s, m] : rep.multiplicities()) {
        const Segment d = dual(n, s);
        if (rep.multiplicity(d) != m) return false;
        if (sym.split() && d == s && m % 2 != 0) return false;
    }
    return true;
}

EpsilonRep::EpsilonRep(Representation rep, SymmetricType sym) : rep_(std::move(rep)), sym_(sym) {
    if (!is_epsilon_rep(rep_, sym_)) {
        throw NotEpsilon(rep_.str() + " admits no epsilon-structure of type " + sym_.name());
    }
}

std::pair<Move, Move> SymMove::expand(int n) const {
    if (kind == Kind::SymCut) {
        if (!(1 <= t && t <= q && q < s && s <= n)) throw InvalidMove(str() + " needs t <= q < s");
        return {Move::cut(t, s, q + 1), Move::cut(sigma(n, s), sigma(n, t), sigma(n, q))};
    }
    const Move first = Move::shift(t, s, q, r);
    validate(first, n);
    return {first, Move::shift(sigma(n, s), sigma(n, t), sigma(n, r), sigma(n, q))};
}

std::string SymMove::str() const {
    std::ostringstream os;
    if (kind == Kind::SymCut) {
        os << "SYMCUT(t=" << t << ",s=" << s << ",q=" << q << ")";
    } else {
        os << "SYMSHIFT(t=" << t << ",s=" << s << ",q=" << q << ",r=" << r << ")";
    }
    return os.str();
}

namespace {

void require_split(const SymmetricType& sym) {
    if (!sym.split()) throw NotSplitType("type " + sym.name() + " on A_" + std::to_string(sym.n) + " is not split");
}

// Multiplicity bookkeeping without the rank audit, for enumeration only.
Representation raw_apply(const Representation& rep, const Move& mv) {
    if (mv.kind == Move::Kind::Cut) {
        return rep.with({mv.t, mv.s}, -1).with({mv.t, mv.q - 1}, 1).with({mv.q, mv.s}, 1);
    }
    return rep.with({mv.t, mv.s}, -1).with({mv.q, mv.r}, -1).with({mv.t, mv.r}, 1).with({mv.q, mv.s}, 1);
}

}  // namespace

EpsilonRep apply_sym_move(const EpsilonRep& erep, const SymMove& mv) {
    require_split(erep.sym());
    const auto [first, second] = mv.expand(erep.sym().n);
    Representation out = apply_move(erep.rep(), first);
    out = apply_move(out, second);
    if (!is_epsilon_rep(out, erep.sym()) || !is_epsilon_rank(ranks_of(out), erep.sym())) {
        throw InvariantViolation(mv.str() + " left the epsilon-locus");
    }
    return EpsilonRep(std::move(out), erep.sym());
}

std::vector<SymMove> applicable_sym_moves(const EpsilonRep& erep) {
    require_split(erep.sym());
    const int n = erep.sym().n;
    const Representation& rep = erep.rep();
    std::vector<SymMove> candidates;
    for (const auto& [a, ma] : rep.multiplicities()) {
        for (int q = a.i; q < a.j; ++q) candidates.push_back(SymMove::symcut(a.i, a.j, q));
        for (const auto& [b, mb] : rep.multiplicities()) {
            if (a.i < b.i && b.j < a.j) candidates.push_back(SymMove::symshift(a.i, a.j, b.i, b.j));
        }
    }
    std::vector<SymMove> out;
    for (const SymMove& mv : candidates) {
        const auto [first, second] = mv.expand(n);
        if (!can_apply(rep, first)) continue;
        if (!can_apply(raw_apply(rep, first), second)) continue;
        out.push_back(mv);
    }
    return out;
}

bool sym_degenerates(const EpsilonRep& m, const EpsilonRep& n) {
    if (!(m.sym() == n.sym())) throw MismatchedType("epsilon-representations of different types");
    require_split(m.sym());
    return degenerates(m.rep(), n.rep());
}

std::optional<Segment> symmetric_support(const DimVector& d) {
    const int n = static_cast<int>(d.size());
    for (int a = 1; a <= n; ++a) {
        if (d[static_cast<std::size_t>(a - 1)] > 0) return Segment{a, std::max(a, sigma(n, a))};
    }
    return std::nullopt;
}

RankSequence perp_quotient_ranks(const RankSequence& m, const SymmetricType& sym, int q) {
    require_split(sym);
    const int n = m.n();
    if (n != sym.n) throw MismatchedType("rank sequence size differs from the type");
    const auto sup = symmetric_support(m.diagonal());
    if (!sup || q < sup->i || q > sup->j || m(q, sup->j) - m(q, sup->j + 1) <= 0) {
        throw NoEmbedding("projective at vertex " + std::to_string(q) + " of the support does not embed");
    }
    const int top = sup->j;
    const int sq = sigma(n, q);
    RankSequence out = m;
    for (int k = sup->i; k <= top; ++k) {
        for (int l = k; l <= top; ++l) {
            const ExtRank here = m(k, l);
            int drop = 0;
            if (m.ext(q, l) <= here) ++drop;
            if (m.ext(k, sq) <= here) ++drop;
            out.add(k, l, -drop);
        }
    }
    return out;
}

RankSequence perp_quotient_ranks(const EpsilonRep& m, int q) {
    return perp_quotient_ranks(ranks_of(m.rep()), m.sym(), q);
}

namespace {

using PeelChooser = std::function<int(std::size_t stage, const RankSequence& N, const Segment& support)>;

std::vector<DegenStep> run_path(const EpsilonRep& m, const EpsilonRep& n, const PeelChooser& choose,
                                std::size_t* stages_used) {
    if (!(m.sym() == n.sym())) throw MismatchedType("epsilon-representations of different types");
    require_split(m.sym());
    if (!degenerates(m.rep(), n.rep())) throw NotComparable(n.rep().str() + " is not a degeneration of " + m.rep().str());

    const SymmetricType sym = m.sym();
    const int nv = sym.n;
    RankSequence mi = ranks_of(m.rep());
    RankSequence ni = ranks_of(n.rep());
    RankSequence peeled(nv);
    std::vector<DegenStep> steps;

    for (std::size_t stage = 0;; ++stage) {
        DegenStep step{mi, ni, mi + peeled, std::nullopt, symmetric_support(ni.diagonal())};
        if (!is_epsilon_rank(step.Z, sym) || !step.Z.is_valid()) {
            throw InvariantViolation("intermediate Z is not an epsilon rank sequence");
        }
        if (mi == ni) {
            steps.push_back(step);
            if (stages_used) *stages_used = stage;
            return steps;
        }
        const Segment sup = *step.support;
        const int top = sup.j;
        const int i = choose(stage, ni, sup);
        const Segment l{i, top};
        step.L = l;
        steps.push_back(step);

        const RankSequence pair = segment_ranks(nv, l) + segment_ranks(nv, dual(nv, l));
        mi = perp_quotient_ranks(mi, sym, i);
        ni -= pair;
        peeled += pair;
        if (!ni.is_valid() || !mi.is_valid() || mi.diagonal() != ni.diagonal() || !mi.dominates(ni)) {
            throw InvariantViolation("peeling " + l.str() + " broke the rank order");
        }
    }
}

int maximal_peel(const RankSequence& n, const Segment& sup) {
    for (int i = sup.j; i >= sup.i; --i) {
        if (n(i, sup.j) > n(i - 1, sup.j)) return i;
    }
    throw InvariantViolation("no projective summand on the support");
}

}  // namespace

std::vector<DegenStep> sym_degeneration_path(const EpsilonRep& m, const EpsilonRep& n) {
    return run_path(
        m, n, [](std::size_t, const RankSequence& ni, const Segment& sup) { return maximal_peel(ni, sup); },
        nullptr);
}

std::vector<DegenStep> sym_degeneration_path(const EpsilonRep& m, const EpsilonRep& n,
                                             const std::vector<int>& peels) {
    auto choose = [&](std::size_t stage, const RankSequence& ni, const Segment& sup) {
        if (stage >= peels.size()) throw InvalidMove("ran out of prescribed peels at stage " + std::to_string(stage));
        const int i = peels[stage];
        if (i < sup.i || i > sup.j || ni(i, sup.j) <= ni(i - 1, sup.j)) {
            throw InvalidMove("P_" + std::to_string(i) + " is not a summand of N at stage " + std::to_string(stage));
        }
        return i;
    };
    std::size_t used = 0;
    auto steps = run_path(m, n, choose, &used);
    if (used != peels.size()) {
        throw InvalidMove("path ended after " + std::to_string(used) + " peels, " + std::to_string(peels.size()) +
                          " were prescribed");
    }
    return steps;
}

std::optional<std::vector<SymMove>> sym_move_refinement(const EpsilonRep& from, const EpsilonRep& to,
                                                        long budget) {
    if (from == to) return std::vector<SymMove>{};
    if (!sym_degenerates(from, to)) return std::nullopt;
    const RankSequence target = ranks_of(to.rep());

    std::map<Representation, std::pair<Representation, SymMove>> parent;
    std::deque<Representation> frontier{from.rep()};
    parent.emplace(from.rep(), std::make_pair(from.rep(), SymMove{}));
    long explored = 0;
    while (!frontier.empty() && explored < budget) {
        const Representation cur = frontier.front();
        frontier.pop_front();
        ++explored;
        const EpsilonRep ecur(cur, from.sym());
        for (const SymMove& mv : applicable_sym_moves(ecur)) {
            const EpsilonRep next = apply_sym_move(ecur, mv);
            if (parent.count(next.rep())) continue;
            if (!ranks_of(next.rep()).dominates(target)) continue;
            parent.emplace(next.rep(), std::make_pair(cur, mv));
            if (next.rep() == to.rep()) {
                std::vector<SymMove> moves;
                for (Representation at = next.rep(); at != from.rep();) {
                    const auto& [prev, how] = parent.at(at);
                    moves.push_back(how);
                    at = prev;
                }
                return std::vector<SymMove>(moves.rbegin(), moves.rend());
            }
            frontier.push_back(next.rep());
        }
    }
    return std::nullopt;
}

}  // namespace sympdeg
