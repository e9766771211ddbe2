#include "sympdeg/cli.hpp"

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "sympdeg/io.hpp"
#include "sympdeg/oracle.hpp"
#include "sympdeg/render.hpp"

namespace sympdeg::cli {

namespace {

using io::json;

struct Opts {
    std::string rep, m, n;
    std::string type;
    std::string dims;
    std::string subset;
    std::string peels;
    std::string dfile;
    int rank_n = 0;
    int q = 0;
    int s = 0;
    long budget = 20000;
    std::uint64_t seed = 1;
    int count = 100;
    bool dot = false;
    bool table = false;
    bool as_json = false;
    bool strict = false;
    bool relint = false;
};

std::vector<int> parse_csv(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
        } catch (const std::logic_error&) {
            throw ParseError("bad integer '" + tok + "' in list");
        }
    }
    return out;
}

Representation load_rep(const std::string& path) {
    if (path.empty()) throw ParseError("a representation file is required");
    return io::rep_from_json(io::read_file(path));
}

SymmetricType type_for(const Opts& o, int n) {
    if (!o.type.empty()) return SymmetricType::parse(o.type, n);
    return SymmetricType(n, n % 2 == 1 ? -1 : +1);  // the split type on A_n
}

void print_ranks(std::ostream& out, const RankSequence& r, bool as_json) {
    if (as_json) {
        out << io::to_json(r).dump() << '\n';
        return;
    }
    for (const auto& line : render::matrix_lines(r)) out << line << '\n';
}

std::string yes(bool b) { return b ? "true" : "false"; }

using Verb = std::function<void(const Opts&, std::ostream&)>;

std::map<std::string, Verb> verbs() {
    std::map<std::string, Verb> v;

    v["ranks"] = [](const Opts& o, std::ostream& out) { print_ranks(out, ranks_of(load_rep(o.rep)), o.as_json); };

    v["rep-of-ranks"] = [](const Opts& o, std::ostream& out) {
        if (o.rep.empty()) throw ParseError("--rep is required");
        const Representation r = rep_of(io::ranks_from_json(io::read_file(o.rep)));
        out << (o.as_json ? io::to_json(r).dump() : r.str()) << '\n';
    };

    v["dual"] = [](const Opts& o, std::ostream& out) {
        const Representation r = dual(load_rep(o.rep));
        out << (o.as_json ? io::to_json(r).dump() : r.str()) << '\n';
    };

    v["hom"] = [](const Opts& o, std::ostream& out) { out << hom_dim(load_rep(o.m), load_rep(o.n)) << '\n'; };
    v["ext"] = [](const Opts& o, std::ostream& out) { out << ext_dim(load_rep(o.m), load_rep(o.n)) << '\n'; };

    v["check-eps"] = [](const Opts& o, std::ostream& out) {
        const Representation r = load_rep(o.rep);
        const SymmetricType sym = type_for(o, r.n());
        const bool by_rank = is_epsilon_rank(ranks_of(r), sym);
        const bool by_rep = is_epsilon_rep(r, sym);
        if (o.as_json) {
            out << json{{"type", sym.name()}, {"rank_criterion", by_rank}, {"decomposition", by_rep}}.dump() << '\n';
        } else {
            out << "type " << sym.name() << "\nrank criterion: " << yes(by_rank) << "\ndecomposition: " << yes(by_rep)
                << '\n';
        }
    };

    v["degen-check"] = [](const Opts& o, std::ostream& out) {
        out << yes(degenerates(load_rep(o.m), load_rep(o.n))) << '\n';
    };

    v["degen-path"] = [](const Opts& o, std::ostream& out) {
        const Representation m = load_rep(o.m);
        const auto path = degeneration_path(m, load_rep(o.n));
        if (o.as_json) {
            out << json{{"start", io::to_json(m)}, {"steps", io::to_json(path)}}.dump() << '\n';
            return;
        }
        out << m.str() << '\n';
        for (const auto& st : path) out << "  " << st.move.str() << "  ->  " << st.rep.str() << '\n';
    };

    v["generic-quotient"] = [](const Opts& o, std::ostream& out) {
        const auto rep = generic_quotient(load_rep(o.rep), o.q, o.s);
        if (o.as_json) {
            out << io::to_json(rep).dump() << '\n';
            return;
        }
        out << "quotient ranks:\n";
        print_ranks(out, rep.ranks_Q, false);
        out << "L + Q ranks:\n";
        print_ranks(out, rep.ranks_LQ, false);
        out << "moves:";
        for (const auto& mv : rep.moves) out << ' ' << mv.str();
        out << '\n';
    };

    v["sym-check"] = [](const Opts& o, std::ostream& out) {
        const Representation m = load_rep(o.m);
        const SymmetricType sym = type_for(o, m.n());
        out << yes(sym_degenerates(EpsilonRep(m, sym), EpsilonRep(load_rep(o.n), sym))) << '\n';
    };

    v["sym-path"] = [](const Opts& o, std::ostream& out) {
        const Representation m = load_rep(o.m);
        const SymmetricType sym = type_for(o, m.n());
        const EpsilonRep em(m, sym);
        const EpsilonRep en(load_rep(o.n), sym);
        const auto path = o.peels.empty() ? sym_degeneration_path(em, en)
                                          : sym_degeneration_path(em, en, parse_csv(o.peels));
        if (o.as_json) {
            out << io::to_json(path).dump() << '\n';
        } else if (o.table) {
            out << render::sym_path_table(path);
        } else {
            for (std::size_t k = 0; k < path.size(); ++k) {
                out << "(" << k << ")";
                if (path[k].L) out << " peel " << path[k].L->str();
                out << '\n';
            }
        }
    };

    v["sym-moves"] = [](const Opts& o, std::ostream& out) {
        if (!o.rep.empty()) {
            const Representation r = load_rep(o.rep);
            json list = json::array();
            for (const auto& mv : applicable_sym_moves(EpsilonRep(r, type_for(o, r.n())))) {
                if (o.as_json)
                    list.push_back(io::to_json(mv));
                else
                    out << mv.str() << '\n';
            }
            if (o.as_json) out << list.dump() << '\n';
            return;
        }
        const Representation m = load_rep(o.m);
        const SymmetricType sym = type_for(o, m.n());
        const auto seq = sym_move_refinement(EpsilonRep(m, sym), EpsilonRep(load_rep(o.n), sym), o.budget);
        if (!seq) {
            out << "inconclusive within budget " << o.budget << '\n';
            return;
        }
        json list = json::array();
        for (const auto& mv : *seq) {
            if (o.as_json)
                list.push_back(io::to_json(mv));
            else
                out << mv.str() << '\n';
        }
        if (o.as_json) out << list.dump() << '\n';
    };

    v["pbw-build"] = [](const Opts& o, std::ostream& out) {
        const PbwSubset p = PbwSubset::parse(o.rank_n, o.subset);
        const auto mod = build_Mi(p);
        if (o.as_json) {
            out << json{{"half", io::to_json(mod.half)}, {"total", io::to_json(mod.total.rep())}, {"e", mod.e}}.dump()
                << '\n';
            return;
        }
        out << "M^i = " << mod.half.str() << "\ntotal = " << mod.total.rep().str() << "\ndim =";
        for (int d : dim_vector(mod.total.rep())) out << ' ' << d;
        out << "\ne =";
        for (int d : mod.e) out << ' ' << d;
        out << '\n';
    };

    v["pbw-weyl"] = [](const Opts& o, std::ostream& out) {
        const PbwSubset p = PbwSubset::parse(o.rank_n, o.subset);
        const WeylWord w = w_i_word(p);
        const WeylWord u = u_iprime_word(p);
        const int lw = length(evaluate_c(w));
        const int lu = length(evaluate_a(u));
        if (o.as_json) {
            out << json{{"w_i", w.str()},
                        {"w_i_length", lw},
                        {"w_i_reduced", is_reduced(w)},
                        {"w_i_signed_permutation", evaluate_c(w).images},
                        {"u_iprime", u.str()},
                        {"u_iprime_length", lu},
                        {"u_iprime_reduced", is_reduced(u)},
                        {"u_iprime_permutation", evaluate_a(u).images},
                        {"sigma_i", sigma_i_map(p)}}
                       .dump()
                << '\n';
            return;
        }
        out << "w_i = " << w.str() << "  (C_" << w.m << ", length " << lw << ", reduced " << yes(is_reduced(w))
            << ")\n";
        out << "u_i' = " << u.str() << "  (S_" << u.m << ", length " << lu << ", reduced " << yes(is_reduced(u))
            << ")\n";
        out << "sigma_i =";
        for (int x : sigma_i_map(p)) out << ' ' << x;
        out << '\n';
    };

    v["pbw-face"] = [](const Opts& o, std::ostream& out) {
        const PbwSubset p = PbwSubset::parse(o.rank_n, o.subset);
        const CRootVector d = o.dfile.empty() ? CRootVector(p.n()) : io::root_vector_from_json(io::read_file(o.dfile));
        bool inside = false;
        std::vector<FaceConstraint> bad;
        if (o.relint) {
            inside = dynkin_face_relint_contains(p, d);
            if (!inside) bad = dynkin_face_violations(p, d, false);
        } else {
            bad = dynkin_face_violations(p, d, o.strict);
            inside = bad.empty();
        }
        if (o.as_json) {
            json list = json::array();
            for (const auto& c : bad) list.push_back(io::to_json(c));
            out << json{{"contained", inside}, {"violations", list}}.dump() << '\n';
            return;
        }
        out << "contained: " << yes(inside) << '\n';
        for (const auto& c : bad) out << "  family " << c.family << ": " << c.text << '\n';
    };

    v["pbw-interior"] = [](const Opts& o, std::ostream& out) {
        const PbwSubset p = PbwSubset::parse(o.rank_n, o.subset);
        const CRootVector d = o.relint ? find_relative_interior_point(p) : find_interior_point(p);
        if (o.as_json) {
            out << io::to_json(d).dump() << '\n';
            return;
        }
        for (std::size_t k = 0; k < d.roots().size(); ++k)
            out << "d(" << d.roots()[k].str() << ") = " << d.values()[k].str() << '\n';
    };

    v["pbw-fixed-points"] = [](const Opts& o, std::ostream& out) {
        const PbwSubset p = PbwSubset::parse(o.rank_n, o.subset);
        const auto fps = lagrangian_fixed_points(p);
        if (o.as_json) {
            json list = json::array();
            for (const auto& fp : fps) list.push_back(io::to_json(fp));
            out << list.dump() << '\n';
            return;
        }
        out << fps.size() << " fixed points\n";
    };

    v["pbw-lemma-ui"] = [](const Opts& o, std::ostream& out) {
        const PbwSubset p = PbwSubset::parse(o.rank_n, o.subset);
        const auto rep = check_lemma_ui(p);
        if (o.as_json) {
            out << io::to_json(rep).dump() << '\n';
            return;
        }
        out << "j ell h clause predicted u u^-1 agree(u) agree(u^-1) in-range\n";
        for (const auto& r : rep.rows) {
            auto list = [](const std::vector<int>& xs) {
                std::string s;
                for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
                return s.empty() ? std::string("-") : s;
            };
            const bool in_range = std::all_of(r.in_range.begin(), r.in_range.end(), [](bool b) { return b; });
            out << r.j << ' ' << r.ell << ' ' << r.h << ' '
                << (r.clause == LemmaClause::First ? "1" : r.clause == LemmaClause::Second ? "2" : "-") << ' '
                << list(r.predicted) << ' ' << list(r.actual_u) << ' ' << list(r.actual_u_inverse) << ' '
                << yes(r.agrees_u) << ' ' << yes(r.agrees_u_inverse) << ' ' << yes(in_range) << '\n';
        }
        out << "out-of-range predictions: " << rep.out_of_range_predictions << '\n';
    };

    v["poset"] = [](const Opts& o, std::ostream& out) {
        const DimVector d = parse_csv(o.dims);
        if (d.empty()) throw ParseError("--dims is required");
        std::vector<Representation> nodes;
        if (o.type.empty()) {
            nodes = reps_with_dim(d);
        } else {
            nodes = epsilon_reps_with_dim(d, SymmetricType::parse(o.type, static_cast<int>(d.size())));
        }
        const auto edges = hasse_edges(nodes);
        if (o.dot) {
            out << render::dot(nodes, edges);
            return;
        }
        out << nodes.size() << " nodes, " << edges.size() << " covering relations\n";
        for (const auto& [a, b] : edges) out << a.str() << "  >  " << b.str() << '\n';
    };

    v["oracle-verify"] = [](const Opts& o, std::ostream& out) {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<int> pick_n(1, 6);
        long bad = 0;
        for (int k = 0; k < o.count; ++k) {
            const Representation a = random_rep(pick_n(rng), 2, rng);
            const Representation b = random_rep(a.n(), 2, rng);
            const auto real = realize_matrices(a, rng());
            const bool ranks_ok = rank_seq_bruteforce(real) == ranks_of(a);
            const int hom = hom_dim(a, b);
            const bool hom_ok = hom_dim_bruteforce(a, b) == hom;
            const bool euler_ok = euler_form(dim_vector(a), dim_vector(b)) == hom - ext_dim(a, b);
            if (!(ranks_ok && hom_ok && euler_ok)) {
                ++bad;
                out << "mismatch: " << a.str() << " vs " << b.str() << '\n';
            }
        }
        out << o.count << " instances, " << bad << " mismatches\n";
        if (bad) throw InvariantViolation("formula and matrix oracle disagree");
    };

    v["render-coeff"] = [](const Opts& o, std::ostream& out) { out << render::coefficient_quiver(load_rep(o.rep)); };

    return v;
}

const std::string& describe(const std::string& verb) {
    static const std::map<std::string, std::string> text{
        {"ranks", "rank matrix of a representation"},
        {"rep-of-ranks", "multiplicities from a rank sequence"},
        {"dual", "dual representation"},
        {"hom", "dim Hom(M, N)"},
        {"ext", "dim Ext^1(M, N)"},
        {"check-eps", "epsilon criterion by ranks and by decomposition"},
        {"degen-check", "is N a degeneration of M"},
        {"degen-path", "cuts and shifts taking M to N"},
        {"generic-quotient", "generic quotient by U_{q,s} and the moves to U_{q,s} + Q"},
        {"sym-check", "symmetric rank order"},
        {"sym-path", "peel-and-quotient sequence from M to N"},
        {"sym-moves", "applicable symmetric moves, or a move sequence from M to N"},
        {"pbw-build", "the module M^i and its epsilon completion"},
        {"pbw-weyl", "the words w_i and u_i'"},
        {"pbw-face", "Dynkin face membership of a root vector"},
        {"pbw-interior", "interior or relative interior point of the Dynkin face"},
        {"pbw-fixed-points", "Lagrangian torus fixed points"},
        {"pbw-lemma-ui", "values of u_i' against the two predicted clauses"},
        {"poset", "Hasse diagram of the rank order on a dimension vector"},
        {"oracle-verify", "closed formulas against the matrix oracle"},
        {"render-coeff", "ASCII coefficient quiver"},
    };
    return text.at(verb);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degenerations of type-A quiver representations and symplectic PBW combinatorics", "sympdeg"};
    app.require_subcommand(1);
    Opts o;
    const auto table = verbs();

    auto add_file = [&](CLI::App* sub, const char* name, std::string& target, const char* what) {
        sub->add_option(name, target, what);
    };
    for (const auto& [name, fn] : table) {
        CLI::App* sub = app.add_subcommand(name, describe(name));
        sub->add_flag("--json", o.as_json, "JSON output");
        if (name.rfind("pbw-", 0) == 0) {
            sub->add_option("--n", o.rank_n, "rank n of C_n")->required();
            sub->add_option("--subset", o.subset, "comma separated subset of [n-1]");
            if (name == "pbw-face") {
                sub->add_option("--d", o.dfile, "root vector JSON (default: zero)");
                sub->add_flag("--strict", o.strict, "every inequality strict");
            }
            if (name == "pbw-face" || name == "pbw-interior")
                sub->add_flag("--relint", o.relint, "relative interior: implicit equalities stay equalities");
            continue;
        }
        add_file(sub, "--rep", o.rep, "representation JSON");
        add_file(sub, "--m", o.m, "first representation JSON");
        add_file(sub, "--n", o.n, "second representation JSON");
        sub->add_option("--type", o.type, "odd-neg, even-pos, odd-pos or even-neg");
        sub->add_option("--dims", o.dims, "dimension vector, comma separated");
        sub->add_option("--peels", o.peels, "prescribed peel indices, comma separated");
        sub->add_option("--budget", o.budget, "state budget for searches");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--count", o.count, "number of random instances");
        sub->add_option("--q", o.q, "first vertex of the embedded segment");
        sub->add_option("--s", o.s, "last vertex of the embedded segment");
        sub->add_flag("--dot", o.dot, "DOT output");
        sub->add_flag("--table", o.table, "tabular output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    for (const auto& [name, fn] : table) {
        if (!app.got_subcommand(name)) continue;
        try {
            fn(o, out);
            return 0;
        } catch (const ParseError& e) {
            err << "ParseError: " << e.what() << '\n';
            return 2;
        } catch (const Error& e) {
            err << e.name() << ": " << e.what() << '\n';
            return 1;
        }
    }
    return 2;
}

}  // namespace sympdeg::cli
