#include "sympdeg/io.hpp"

#include <fstream>

namespace sympdeg::io {

namespace {

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

std::string rational_text(const Rational& q) { return q.str(); }

Rational rational_from(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return Rational(v.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("bad rational '" + v.get<std::string>() + "'");
        }
    }
    throw ParseError("expected an integer or a \"p/q\" string");
}

}  // namespace

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json to_json(const Representation& rep) {
    json mult = json::array();
    for (const auto& [s, m] : rep.multiplicities()) mult.push_back({{"i", s.i}, {"j", s.j}, {"m", m}});
    return {{"n", rep.n()}, {"mult", mult}};
}

json to_json(const RankSequence& ranks) { return {{"n", ranks.n()}, {"rows", ranks.rows()}}; }

json to_json(const Move& mv) {
    json j{{"kind", mv.kind == Move::Kind::Cut ? "cut" : "shift"}, {"t", mv.t}, {"s", mv.s}, {"q", mv.q}};
    if (mv.kind == Move::Kind::Shift) j["r"] = mv.r;
    return j;
}

json to_json(const SymMove& mv) {
    json j{{"kind", mv.kind == SymMove::Kind::SymCut ? "symcut" : "symshift"}, {"t", mv.t}, {"s", mv.s}, {"q", mv.q}};
    if (mv.kind == SymMove::Kind::SymShift) j["r"] = mv.r;
    return j;
}

json to_json(const Segment& s) { return {{"i", s.i}, {"j", s.j}}; }

json to_json(const std::vector<PathStep>& path) {
    json out = json::array();
    for (const auto& st : path)
        out.push_back({{"move", to_json(st.move)}, {"rep", to_json(st.rep)}, {"ranks", to_json(ranks_of(st.rep))}});
    return out;
}

json to_json(const std::vector<DegenStep>& path) {
    json out = json::array();
    for (std::size_t k = 0; k < path.size(); ++k) {
        const auto& st = path[k];
        json j{{"step", k}, {"M", to_json(st.M)}, {"N", to_json(st.N)}, {"Z", to_json(st.Z)}};
        j["L"] = st.L ? to_json(*st.L) : json(nullptr);
        j["support"] = st.support ? to_json(*st.support) : json(nullptr);
        out.push_back(std::move(j));
    }
    return out;
}

json to_json(const QuotientReport& rep) {
    json moves = json::array();
    for (const auto& mv : rep.moves) moves.push_back(to_json(mv));
    json stair = json::array();
    for (const auto& [q, t] : rep.staircase) stair.push_back({{"q", q}, {"t", t}});
    return {{"ranks_Q", to_json(rep.ranks_Q)},
            {"ranks_LQ", to_json(rep.ranks_LQ)},
            {"moves", moves},
            {"summand", rep.summand},
            {"t1", rep.t1},
            {"q1", rep.q1},
            {"t2", rep.t2},
            {"q2", rep.q2},
            {"staircase", stair}};
}

json to_json(const FixedPoint& fp) { return fp.s; }

json to_json(const CRootVector& d) {
    json values = json::object();
    for (std::size_t k = 0; k < d.roots().size(); ++k) values[d.roots()[k].str()] = rational_text(d.values()[k]);
    json list = json::array();
    for (const auto& v : d.values()) list.push_back(rational_text(v));
    return {{"n", d.n()}, {"values", list}, {"by_root", values}};
}

json to_json(const FaceConstraint& c) {
    json terms = json::array();
    for (const auto& [r, coef] : c.terms) terms.push_back({{"i", r.i}, {"j", r.j}, {"bar", r.bar}, {"coef", coef}});
    return {{"kind", c.kind == FaceConstraint::Kind::Inequality ? "inequality" : "equality"},
            {"family", c.family},
            {"terms", terms},
            {"text", c.text}};
}

json to_json(const LemmaUiReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
        const char* clause = r.clause == LemmaClause::First ? "1" : r.clause == LemmaClause::Second ? "2" : "none";
        rows.push_back({{"j", r.j},
                        {"ell", r.ell},
                        {"h", r.h},
                        {"clause", clause},
                        {"points", r.points},
                        {"predicted", r.predicted},
                        {"u", r.actual_u},
                        {"u_inverse", r.actual_u_inverse},
                        {"in_range", r.in_range},
                        {"agrees_u", r.agrees_u},
                        {"agrees_u_inverse", r.agrees_u_inverse}});
    }
    return {{"n", rep.n},
            {"subset", rep.subset},
            {"ell", rep.ell},
            {"h", rep.h},
            {"u", rep.u.images},
            {"rows", rows},
            {"out_of_range_predictions", rep.out_of_range_predictions},
            {"all_agree_u", rep.all_agree_u()},
            {"all_agree_u_inverse", rep.all_agree_u_inverse()}};
}

Representation rep_from_json(const json& j) {
    if (j.is_object() && j.contains("rows") && !j.contains("mult")) return rep_of(ranks_from_json(j));
    const int n = get<int>(j, "n");
    Representation::Multiplicities mult;
    const json m = get<json>(j, "mult");
    if (!m.is_array()) throw ParseError("'mult' must be an array");
    for (const auto& e : m) {
        const int c = get<int>(e, "m");
        if (c < 0) throw ParseError("negative multiplicity");
        if (c > 0) mult[Segment{get<int>(e, "i"), get<int>(e, "j")}] += c;
    }
    return Representation(n, mult);
}

RankSequence ranks_from_json(const json& j) {
    if (j.is_object() && j.contains("mult")) return ranks_of(rep_from_json(j));
    const auto rows = get<std::vector<std::vector<int>>>(j, "rows");
    RankSequence r = RankSequence::from_rows(rows);
    if (j.contains("n") && get<int>(j, "n") != r.n()) throw ParseError("'n' disagrees with the number of rows");
    return r;
}

Move move_from_json(const json& j) {
    const auto kind = get<std::string>(j, "kind");
    if (kind == "cut") return Move::cut(get<int>(j, "t"), get<int>(j, "s"), get<int>(j, "q"));
    if (kind == "shift") return Move::shift(get<int>(j, "t"), get<int>(j, "s"), get<int>(j, "q"), get<int>(j, "r"));
    throw ParseError("unknown move kind '" + kind + "'");
}

SymMove sym_move_from_json(const json& j) {
    const auto kind = get<std::string>(j, "kind");
    if (kind == "symcut") return SymMove::symcut(get<int>(j, "t"), get<int>(j, "s"), get<int>(j, "q"));
    if (kind == "symshift")
        return SymMove::symshift(get<int>(j, "t"), get<int>(j, "s"), get<int>(j, "q"), get<int>(j, "r"));
    throw ParseError("unknown symmetric move kind '" + kind + "'");
}

Segment segment_from_json(const json& j) { return {get<int>(j, "i"), get<int>(j, "j")}; }

std::vector<PathStep> path_from_json(const json& j, int n) {
    if (!j.is_array()) throw ParseError("a path must be an array");
    std::vector<PathStep> out;
    for (const auto& e : j) {
        PathStep st{move_from_json(get<json>(e, "move")), rep_from_json(get<json>(e, "rep"))};
        if (st.rep.n() != n) throw ParseError("path step on the wrong quiver");
        out.push_back(std::move(st));
    }
    return out;
}

std::vector<DegenStep> sym_path_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("a path must be an array");
    std::vector<DegenStep> out;
    for (const auto& e : j) {
        DegenStep st{ranks_from_json(get<json>(e, "M")), ranks_from_json(get<json>(e, "N")),
                     ranks_from_json(get<json>(e, "Z")), std::nullopt, std::nullopt};
        if (e.contains("L") && !e.at("L").is_null()) st.L = segment_from_json(e.at("L"));
        if (e.contains("support") && !e.at("support").is_null()) st.support = segment_from_json(e.at("support"));
        out.push_back(std::move(st));
    }
    return out;
}

FixedPoint fixed_point_from_json(const json& j) {
    try {
        return FixedPoint{j.get<std::vector<std::vector<int>>>()};
    } catch (const json::exception& e) {
        throw ParseError(std::string("fixed point: ") + e.what());
    }
}

CRootVector root_vector_from_json(const json& j) {
    const int n = get<int>(j, "n");
    const json values = get<json>(j, "values");
    if (!values.is_array()) throw ParseError("'values' must be an array");
    std::vector<Rational> v;
    for (const auto& e : values) v.push_back(rational_from(e));
    try {
        return CRootVector(n, std::move(v));
    } catch (const InvalidSegment& e) {
        throw ParseError(e.what());
    }
}

}  // namespace sympdeg::io
