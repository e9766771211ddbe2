#include "sympdeg/degen.hpp"

#include <atomic>
#include <sstream>

namespace sympdeg {

namespace {

std::atomic<long> g_checked{0};
std::atomic<long> g_violations{0};

}  // namespace

std::string Move::str() const {
    std::ostringstream os;
    if (kind == Kind::Cut) {
        os << "CUT(t=" << t << ",s=" << s << ",q=" << q << ")";
    } else {
        os << "SHIFT(t=" << t << ",s=" << s << ",q=" << q << ",r=" << r << ")";
    }
    return os.str();
}

void validate(const Move& mv, int n) {
    const bool ok = mv.kind == Move::Kind::Cut
                        ? (1 <= mv.t && mv.t < mv.q && mv.q <= mv.s && mv.s <= n)
                        : (1 <= mv.t && mv.t < mv.q && mv.q <= mv.r && mv.r < mv.s && mv.s <= n);
    if (!ok) throw InvalidMove(mv.str() + " is not a valid move on A_" + std::to_string(n));
}

RankSequence move_rank_delta(int n, const Move& mv) {
    validate(mv, n);
    RankSequence d(n);
    for (int k = mv.t; k < mv.q; ++k) {
        if (mv.kind == Move::Kind::Cut) {
            for (int l = mv.q; l <= mv.s; ++l) d.set(k, l, 1);
        } else {
            for (int l = mv.r + 1; l <= mv.s; ++l) d.set(k, l, 1);
        }
    }
    return d;
}

MoveAudit move_audit() { return {g_checked.load(), g_violations.load()}; }

void reset_move_audit() {
    g_checked = 0;
    g_violations = 0;
}

Representation apply_move(const Representation& rep, const Move& mv) {
    const int n = rep.n();
    validate(mv, n);
    Representation out = rep;
    if (mv.kind == Move::Kind::Cut) {
        out = out.with({mv.t, mv.s}, -1).with({mv.t, mv.q - 1}, 1).with({mv.q, mv.s}, 1);
    } else {
        out = out.with({mv.t, mv.s}, -1)
                  .with({mv.q, mv.r}, -1)
                  .with({mv.t, mv.r}, 1)
                  .with({mv.q, mv.s}, 1);
    }

    // Rank bookkeeping check: r^out = r^rep - delta, exactly.
    const RankSequence before = ranks_of(rep);
    const RankSequence after = ranks_of(out);
    const RankSequence delta = move_rank_delta(n, mv);
    ++g_checked;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            if (before(i, j) - after(i, j) != delta(i, j)) {
                ++g_violations;
                throw InvariantViolation("rank delta of " + mv.str() + " differs at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            }
        }
    }
    return out;
}

bool can_apply(const Representation& rep, const Move& mv) {
    if (mv.kind == Move::Kind::Cut) return rep.multiplicity({mv.t, mv.s}) >= 1;
    return rep.multiplicity({mv.t, mv.s}) >= 1 && rep.multiplicity({mv.q, mv.r}) >= 1;
}

std::vector<Move> applicable_moves(const Representation& rep) {
    std::vector<Move> out;
    const auto& mult = rep.multiplicities();
    for (const auto& [a, ma] : mult) {
        for (int q = a.i + 1; q <= a.j; ++q) out.push_back(Move::cut(a.i, a.j, q));
        for (const auto& [b, mb] : mult) {
            if (a.i < b.i && b.j < a.j) out.push_back(Move::shift(a.i, a.j, b.i, b.j));
        }
    }
    return out;
}

bool degenerates(const Representation& m, const Representation& n) {
    if (m.n() != n.n()) throw MismatchedQuiver("degeneration test across different quivers");
    const RankSequence rm = ranks_of(m);
    const RankSequence rn = ranks_of(n);
    return rm.diagonal() == rn.diagonal() && rm.dominates(rn);
}

QuotientReport generic_quotient(const Representation& m, int q, int s) {
    const int n = m.n();
    if (q < 1 || q > s || s > n) {
        throw InvalidSegment("U[" + std::to_string(q) + "," + std::to_string(s) + "] is not a segment of A_" +
                             std::to_string(n));
    }
    const RankSequence r = ranks_of(m);
    const Segment l{q, s};
    if (!embeds(l, r)) throw NoEmbedding(l.str() + " does not embed into " + m.str());

    QuotientReport rep;
    rep.ranks_Q = r;
    rep.ranks_LQ = r;
    for (int k = 1; k <= n; ++k) {
        for (int ell = std::max(k, q); ell <= s; ++ell) {
            const int lhs = r(q, ell) - r(q, s + 1);
            const int rhs = r(k, ell) - r(k, s + 1);
            if (lhs <= rhs) rep.ranks_Q.add(k, ell, -1);
            if (lhs == rhs && k < q) rep.ranks_LQ.add(k, ell, -1);
        }
    }

    if (is_summand(l, r)) {
        rep.summand = true;
        return rep;
    }

    // T(l) = least k < q with f(k,l) = 0, or q when there is none. It is
    // non-increasing in l; its jumps are the staircase corners.
    auto f = [&](int k, int ell) { return r(q, ell) - r(q, s + 1) - r(k, ell) + r(k, s + 1); };
    std::vector<int> T(static_cast<std::size_t>(s + 1), q);
    for (int ell = q; ell <= s; ++ell) {
        for (int k = 1; k < q; ++k) {
            if (f(k, ell) == 0) {
                T[static_cast<std::size_t>(ell)] = k;
                break;
            }
        }
    }
    for (int ell = q; ell <= s; ++ell) {
        const int t = T[static_cast<std::size_t>(ell)];
        const int prev = ell == q ? q : T[static_cast<std::size_t>(ell - 1)];
        if (t < prev) rep.staircase.emplace_back(ell, t);
    }
    if (rep.staircase.empty()) {
        throw InvariantViolation("no zero of f although " + l.str() + " is not a summand");
    }

    rep.q1 = rep.staircase.front().first;
    rep.t1 = rep.staircase.front().second;
    rep.q2 = rep.staircase.back().first;
    rep.t2 = rep.staircase.back().second;

    const std::size_t corners = rep.staircase.size();
    for (std::size_t p = 0; p < corners; ++p) {
        const auto [qp, tp] = rep.staircase[p];
        const int upper = p + 1 < corners ? rep.staircase[p + 1].first - 1 : s;
        if (qp == q) {
            rep.moves.push_back(Move::cut(tp, upper, q));
        } else {
            rep.moves.push_back(Move::shift(tp, upper, q, qp - 1));
        }
    }
    return rep;
}

std::vector<PathStep> degeneration_path(const Representation& m, const Representation& n) {
    if (!degenerates(m, n)) throw NotComparable(n.str() + " is not a degeneration of " + m.str());

    std::vector<PathStep> path;
    Representation mc = m;
    Representation nc = n;
    Representation peeled(m.n());
    Representation current = m;

    while (ranks_of(mc) != ranks_of(nc)) {
        const DimVector d = dim_vector(nc);
        int top = static_cast<int>(d.size());
        while (top > 0 && d[static_cast<std::size_t>(top - 1)] == 0) --top;
        const RankSequence rn = ranks_of(nc);

        bool advanced = false;
        for (int i = top; i >= 1 && !advanced; --i) {
            if (rn(i, top) <= rn(i - 1, top)) continue;
            const Segment l{i, top};
            const QuotientReport qr = generic_quotient(mc, i, top);
            const Representation q = rep_of(qr.ranks_Q);
            const Representation rest = nc.with(l, -1);
            if (!degenerates(q, rest)) continue;

            for (const Move& mv : qr.moves) {
                current = apply_move(current, mv);
                path.push_back({mv, current});
            }
            if (current != q.with(l, 1) + peeled) {
                throw InvariantViolation("moves of the generic quotient did not land on L + Q");
            }
            peeled = peeled.with(l, 1);
            mc = q;
            nc = rest;
            advanced = true;
        }
        if (!advanced) throw InvariantViolation("no projective peel keeps the rank order; M=" + mc.str());
    }
    return path;
}

}  // namespace sympdeg
