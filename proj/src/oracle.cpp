#include "sympdeg/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace sympdeg {

namespace {

struct Copy {
    Segment seg;
    int copy;
};

// Basis of M_k: the summand copies containing k, in multiplicity-map order.
std::vector<std::vector<Copy>> vertex_bases(const Representation& rep) {
    std::vector<std::vector<Copy>> bases(static_cast<std::size_t>(rep.n()));
    for (const auto& [s, m] : rep.multiplicities())
        for (int c = 0; c < m; ++c)
            for (int k = s.i; k <= s.j; ++k) bases[static_cast<std::size_t>(k - 1)].push_back({s, c});
    return bases;
}

int position(const std::vector<Copy>& basis, Segment s, int c) {
    for (std::size_t p = 0; p < basis.size(); ++p)
        if (basis[p].seg == s && basis[p].copy == c) return static_cast<int>(p);
    return -1;
}

// Random unimodular B with its inverse, built from elementary row operations.
std::pair<IntMatrix, IntMatrix> unimodular_pair(int d, std::mt19937_64& rng) {
    IntMatrix b = IntMatrix::identity(d);
    IntMatrix binv = IntMatrix::identity(d);
    if (d < 2) return {b, binv};
    std::uniform_int_distribution<int> pick(0, d - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int step = 0; step < 2 * d; ++step) {
        const int i = pick(rng);
        int j = pick(rng);
        if (i == j) j = (j + 1) % d;
        const long a = sign(rng) ? 1 : -1;
        // B <- (I + a e_ij) B ; B^{-1} <- B^{-1} (I - a e_ij)
        for (int c = 0; c < d; ++c) b(i, c) += a * b(j, c);
        for (int r = 0; r < d; ++r) binv(r, j) -= a * binv(r, i);
    }
    return {b, binv};
}

}  // namespace

MatrixRealization realize_matrices(const Representation& rep, std::optional<std::uint64_t> scramble_seed) {
    const int n = rep.n();
    const auto bases = vertex_bases(rep);
    MatrixRealization out;
    out.n = n;
    for (const auto& b : bases) out.dims.push_back(static_cast<int>(b.size()));
    for (int k = 1; k < n; ++k) {
        const auto& src = bases[static_cast<std::size_t>(k - 1)];
        const auto& dst = bases[static_cast<std::size_t>(k)];
        IntMatrix f(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (std::size_t p = 0; p < src.size(); ++p) {
            if (src[p].seg.j < k + 1) continue;
            f(position(dst, src[p].seg, src[p].copy), static_cast<int>(p)) = 1;
        }
        out.maps.push_back(std::move(f));
    }
    if (scramble_seed) {
        std::mt19937_64 rng(*scramble_seed);
        std::vector<std::pair<IntMatrix, IntMatrix>> change;
        for (int d : out.dims) change.push_back(unimodular_pair(d, rng));
        for (int k = 1; k < n; ++k) {
            IntMatrix& f = out.maps[static_cast<std::size_t>(k - 1)];
            f = change[static_cast<std::size_t>(k)].first * f * change[static_cast<std::size_t>(k - 1)].second;
        }
    }
    return out;
}

RankSequence rank_seq_bruteforce(const MatrixRealization& real) {
    const int n = real.n;
    RankSequence r(n);
    for (int i = 1; i <= n; ++i) {
        RatMatrix p = RatMatrix::identity(real.dims[static_cast<std::size_t>(i - 1)]);
        r.set(i, i, real.dims[static_cast<std::size_t>(i - 1)]);
        for (int j = i + 1; j <= n; ++j) {
            p = to_rational(real.maps[static_cast<std::size_t>(j - 2)]) * p;
            r.set(i, j, rank(p));
        }
    }
    return r;
}

int hom_dim_bruteforce(const MatrixRealization& m, const MatrixRealization& n) {
    if (m.n != n.n) throw MismatchedQuiver("hom between realizations on different quivers");
    const int nv = m.n;
    std::vector<int> off(static_cast<std::size_t>(nv + 1), 0);
    for (int v = 0; v < nv; ++v) {
        off[static_cast<std::size_t>(v + 1)] =
            off[static_cast<std::size_t>(v)] + n.dims[static_cast<std::size_t>(v)] * m.dims[static_cast<std::size_t>(v)];
    }
    const int unknowns = off.back();
    if (unknowns == 0) return 0;
    // g_v(a, b) sits at off[v] + a * dimM_v + b.
    auto var = [&](int v, int a, int b) {
        return off[static_cast<std::size_t>(v)] + a * m.dims[static_cast<std::size_t>(v)] + b;
    };

    int equations = 0;
    for (int v = 0; v + 1 < nv; ++v) {
        equations += n.dims[static_cast<std::size_t>(v + 1)] * m.dims[static_cast<std::size_t>(v)];
    }
    RatMatrix sys(std::max(equations, 1), unknowns);
    int row = 0;
    for (int v = 0; v + 1 < nv; ++v) {
        const IntMatrix& f = m.maps[static_cast<std::size_t>(v)];
        const IntMatrix& fp = n.maps[static_cast<std::size_t>(v)];
        const int dm = m.dims[static_cast<std::size_t>(v)];
        const int dm1 = m.dims[static_cast<std::size_t>(v + 1)];
        const int dn = n.dims[static_cast<std::size_t>(v)];
        const int dn1 = n.dims[static_cast<std::size_t>(v + 1)];
        for (int a = 0; a < dn1; ++a) {
            for (int b = 0; b < dm; ++b, ++row) {
                // (g_{v+1} f_v)(a,b) - (f'_v g_v)(a,b) = 0
                for (int c = 0; c < dm1; ++c)
                    if (f(c, b) != 0) sys(row, var(v + 1, a, c)) += Rational(f(c, b));
                for (int c = 0; c < dn; ++c)
                    if (fp(a, c) != 0) sys(row, var(v, c, b)) -= Rational(fp(a, c));
            }
        }
    }
    return unknowns - rank(sys);
}

int hom_dim_bruteforce(const Representation& m, const Representation& n) {
    return hom_dim_bruteforce(realize_matrices(m), realize_matrices(n));
}

EpsilonRealization realize_epsilon_form(const EpsilonRep& erep) {
    const Representation& rep = erep.rep();
    const SymmetricType& sym = erep.sym();
    if (!is_epsilon_rep(rep, sym)) throw NotEpsilon(rep.str() + " is not an epsilon-representation");
    const int n = rep.n();

    EpsilonRealization out;
    out.epsilon = sym.epsilon;
    out.real = realize_matrices(rep);
    const auto bases = vertex_bases(rep);
    out.offsets.assign(static_cast<std::size_t>(n + 1), 0);
    for (int k = 1; k <= n; ++k) {
        out.offsets[static_cast<std::size_t>(k)] =
            out.offsets[static_cast<std::size_t>(k - 1)] + static_cast<int>(bases[static_cast<std::size_t>(k - 1)].size());
    }
    const int total = out.offsets.back();
    auto index = [&](int k, Segment s, int c) {
        return out.offsets[static_cast<std::size_t>(k - 1)] + position(bases[static_cast<std::size_t>(k - 1)], s, c);
    };

    out.total_map = IntMatrix(total, total);
    for (int k = 1; k < n; ++k) {
        const IntMatrix& f = out.real.maps[static_cast<std::size_t>(k - 1)];
        for (int r = 0; r < f.rows(); ++r)
            for (int c = 0; c < f.cols(); ++c)
                out.total_map(out.offsets[static_cast<std::size_t>(k)] + r, out.offsets[static_cast<std::size_t>(k - 1)] + c) =
                    f(r, c);
    }

    // Pair copy A = [i,j] with a copy B of [sigma(j), sigma(i)]:
    //   <A_k, B_sigma(k)> = (-1)^(k-i),  <B_sigma(k), A_k> = eps (-1)^(k-i).
    // A lone self-dual copy is paired with itself, which is only consistent in
    // the non-split types.
    out.gram = IntMatrix(total, total);
    auto pair_copies = [&](Segment a, int ca, Segment b, int cb) {
        for (int k = a.i; k <= a.j; ++k) {
            const long sign = ((k - a.i) % 2 == 0) ? 1 : -1;
            const int u = index(k, a, ca);
            const int w = index(sigma(n, k), b, cb);
            out.gram(u, w) = sign;
            if (!(a == b && ca == cb)) out.gram(w, u) = sym.epsilon * sign;
        }
    };
    for (const auto& [s, m] : rep.multiplicities()) {
        const Segment d = dual(n, s);
        if (d == s) {
            int c = 0;
            for (; c + 1 < m; c += 2) pair_copies(s, c, s, c + 1);
            if (c < m) {
                if (sym.split()) throw NotEpsilon("odd multiplicity of self-dual " + s.str() + " in a split type");
                pair_copies(s, c, s, c);
            }
        } else if (s < d) {
            for (int c = 0; c < m; ++c) pair_copies(s, c, d, c);
        }
    }
    return out;
}

FormCheck check_epsilon_form(const EpsilonRealization& er, const SymmetricType& sym) {
    FormCheck fc;
    const IntMatrix& g = er.gram;
    const IntMatrix& f = er.total_map;
    const int n = er.real.n;
    const int total = g.rows();

    fc.epsilon_symmetric = g.transpose() == g.scaled(er.epsilon);
    fc.nondegenerate = rank(g) == total;

    auto vertex_of = [&](int idx) {
        int k = 1;
        while (er.offsets[static_cast<std::size_t>(k)] <= idx) ++k;
        return k;
    };
    fc.sigma_compatible = true;
    for (int a = 0; a < total; ++a)
        for (int b = 0; b < total; ++b)
            if (g(a, b) != 0 && vertex_of(b) != sigma(n, vertex_of(a))) fc.sigma_compatible = false;

    fc.anti_adjoint = (f.transpose() * g + g * f).is_zero();

    fc.isotropic_chords = true;
    if (sym.split()) {
        for (int i = 1; i <= sigma(n, i); ++i) {
            IntMatrix p = IntMatrix::identity(total);
            for (int step = i; step < sigma(n, i); ++step) p = f * p;
            const IntMatrix h = p.transpose() * g;
            const int lo = er.offsets[static_cast<std::size_t>(i - 1)];
            const int hi = er.offsets[static_cast<std::size_t>(i)];
            for (int a = lo; a < hi; ++a)
                for (int b = lo; b < hi; ++b)
                    if (h(a, b) + h(b, a) != 0) fc.isotropic_chords = false;
        }
    }
    return fc;
}

std::set<Representation> closure_enumerate(const Representation& rep, MoveKind kind,
                                           std::optional<SymmetricType> sym, long max_rank_sum) {
    if (ranks_of(rep).total() > max_rank_sum) {
        throw InstanceTooLarge("rank sum " + std::to_string(ranks_of(rep).total()) + " exceeds the bound " +
                               std::to_string(max_rank_sum));
    }
    if (kind == MoveKind::Symmetric && !sym) throw InvalidType("symmetric closure needs a type");

    std::set<Representation> seen{rep};
    std::deque<Representation> frontier{rep};
    while (!frontier.empty()) {
        const Representation cur = frontier.front();
        frontier.pop_front();
        std::vector<Representation> next;
        if (kind == MoveKind::Ordinary) {
            for (const Move& mv : applicable_moves(cur)) next.push_back(apply_move(cur, mv));
        } else {
            const EpsilonRep e(cur, *sym);
            for (const SymMove& mv : applicable_sym_moves(e)) next.push_back(apply_sym_move(e, mv).rep());
        }
        for (auto& x : next) {
            if (seen.insert(x).second) frontier.push_back(std::move(x));
        }
    }
    return seen;
}

std::vector<std::pair<Representation, Representation>> hasse_edges(const std::vector<Representation>& nodes) {
    std::vector<RankSequence> r;
    for (const auto& x : nodes) r.push_back(ranks_of(x));
    const std::size_t sz = nodes.size();
    auto above = [&](std::size_t a, std::size_t b) { return a != b && r[a].dominates(r[b]) && !(r[a] == r[b]); };
    std::vector<std::pair<Representation, Representation>> edges;
    for (std::size_t a = 0; a < sz; ++a) {
        for (std::size_t b = 0; b < sz; ++b) {
            if (!above(a, b)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < sz && cover; ++c)
                if (above(a, c) && above(c, b)) cover = false;
            if (cover) edges.emplace_back(nodes[a], nodes[b]);
        }
    }
    return edges;
}

namespace {

struct DimEnumerator {
    int n;
    std::vector<int> rem;
    Representation::Multiplicities mult;
    std::vector<Representation>* out;

    void start(int i) {
        if (i > n) {
            out->emplace_back(n, mult);
            return;
        }
        place(i, i, rem[static_cast<std::size_t>(i - 1)]);
    }

    // Distribute the `need` summands starting at vertex i over ends j..n.
    void place(int i, int j, int need) {
        if (need == 0) {
            start(i + 1);
            return;
        }
        if (j > n) return;
        int cap = need;
        for (int v = i; v <= j; ++v) cap = std::min(cap, rem[static_cast<std::size_t>(v - 1)]);
        const int lo = j == n ? need : 0;
        for (int m = cap; m >= lo; --m) {
            for (int v = i; v <= j; ++v) rem[static_cast<std::size_t>(v - 1)] -= m;
            if (m > 0) mult[{i, j}] = m;
            place(i, j + 1, need - m);
            mult.erase({i, j});
            for (int v = i; v <= j; ++v) rem[static_cast<std::size_t>(v - 1)] += m;
        }
    }
};

}  // namespace

std::vector<Representation> reps_with_dim(const DimVector& d) {
    std::vector<Representation> out;
    if (d.empty()) return out;
    for (int x : d)
        if (x < 0) throw InvalidSegment("negative dimension vector entry");
    DimEnumerator e{static_cast<int>(d.size()), d, {}, &out};
    e.start(1);
    return out;
}

std::vector<Representation> reps_bounded(int n, int max_entry) {
    std::vector<Representation> out;
    DimVector d(static_cast<std::size_t>(n), 0);
    while (true) {
        auto part = reps_with_dim(d);
        out.insert(out.end(), part.begin(), part.end());
        int k = 0;
        while (k < n && d[static_cast<std::size_t>(k)] == max_entry) d[static_cast<std::size_t>(k++)] = 0;
        if (k == n) break;
        ++d[static_cast<std::size_t>(k)];
    }
    return out;
}

std::vector<Representation> epsilon_reps_with_dim(const DimVector& d, const SymmetricType& sym) {
    std::vector<Representation> out;
    for (auto& r : reps_with_dim(d))
        if (is_epsilon_rep(r, sym)) out.push_back(std::move(r));
    return out;
}

Representation random_rep(int n, int max_mult, std::mt19937_64& rng, double density) {
    std::bernoulli_distribution present(density);
    std::uniform_int_distribution<int> mult(1, std::max(1, max_mult));
    Representation::Multiplicities m;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (present(rng)) m[{i, j}] = mult(rng);
    return Representation(n, m);
}

Representation random_epsilon_rep(const SymmetricType& sym, int max_pairs, std::mt19937_64& rng) {
    const int n = sym.n;
    std::uniform_int_distribution<int> count(1, std::max(1, max_pairs));
    std::uniform_int_distribution<int> vertex(1, n);
    std::bernoulli_distribution lone(0.3);
    Representation rep(n);
    const int pairs = count(rng);
    for (int p = 0; p < pairs; ++p) {
        int a = vertex(rng);
        int b = vertex(rng);
        if (a > b) std::swap(a, b);
        const Segment s{a, b};
        const Segment d = dual(n, s);
        if (!sym.split() && s == d && lone(rng)) {
            rep = rep.with(s, 1);
        } else {
            rep = rep.with(s, 1).with(d, 1);
        }
    }
    return rep;
}

}  // namespace sympdeg
