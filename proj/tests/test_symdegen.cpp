#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sympdeg/oracle.hpp"
#include "sympdeg/symdegen.hpp"

using namespace sympdeg;

namespace {

const SymmetricType kOddNeg(5, -1);

Representation u(int n, std::initializer_list<std::pair<Segment, int>> m) { return Representation::of(n, m); }

}  // namespace

TEST_CASE("split types") {
    CHECK(SymmetricType(5, -1).split());
    CHECK(SymmetricType(4, +1).split());
    CHECK(!SymmetricType(5, +1).split());
    CHECK(!SymmetricType(4, -1).split());
    CHECK(SymmetricType::parse("even-pos", 4) == SymmetricType(4, +1));
    CHECK_THROWS_AS(SymmetricType::parse("even-pos", 5), InvalidType);
    CHECK_THROWS_AS(SymmetricType::parse("sideways", 5), InvalidType);
    CHECK_THROWS_AS(SymmetricType(3, 0), InvalidType);
}

TEST_CASE("epsilon criteria on the listed examples") {
    const RankSequence n0 = RankSequence::from_rows({{6, 5, 4, 3, 2}, {6, 5, 4, 3}, {6, 5, 4}, {6, 5}, {6}});
    CHECK(is_epsilon_rank(n0, kOddNeg));
    CHECK(!is_epsilon_rank(ranks_of(u(5, {{{1, 5}, 1}})), kOddNeg));
    CHECK(is_epsilon_rep(u(5, {{{1, 5}, 2}}), kOddNeg));
    CHECK(!is_epsilon_rep(u(5, {{{1, 5}, 1}}), kOddNeg));
    CHECK(is_epsilon_rep(u(5, {{{3, 3}, 1}}), SymmetricType(5, +1)));
    CHECK(!is_epsilon_rep(u(5, {{{1, 4}, 1}}), kOddNeg));
}

TEST_CASE("symmetric cut and its constituent moves") {
    const EpsilonRep m(u(5, {{{1, 5}, 2}}), kOddNeg);
    const SymMove mv = SymMove::symcut(1, 5, 2);
    const auto [first, second] = mv.expand(5);
    CHECK(first == Move::cut(1, 5, 3));
    CHECK(second == Move::cut(1, 5, 4));
    const EpsilonRep out = apply_sym_move(m, mv);
    CHECK(out.rep() == u(5, {{{1, 2}, 1}, {{3, 5}, 1}, {{1, 3}, 1}, {{4, 5}, 1}}));
    CHECK_THROWS_AS(apply_sym_move(EpsilonRep(u(5, {{{1, 5}, 1}, {{3, 3}, 1}}), SymmetricType(5, +1)), mv),
                    NotSplitType);
}

TEST_CASE("symmetric shift on a two-pair instance") {
    // [1,4] + [2,5] and [2,3] + [3,4], two dual pairs
    const EpsilonRep m(u(5, {{{1, 4}, 1}, {{2, 5}, 1}, {{2, 3}, 1}, {{3, 4}, 1}}), kOddNeg);
    const SymMove mv = SymMove::symshift(1, 4, 2, 3);
    const auto [first, second] = mv.expand(5);
    CHECK(first == Move::shift(1, 4, 2, 3));
    CHECK(second == Move::shift(2, 5, 3, 4));
    const EpsilonRep out = apply_sym_move(m, mv);
    CHECK(out.rep() == u(5, {{{1, 3}, 1}, {{2, 4}, 2}, {{3, 5}, 1}}));
    CHECK(is_epsilon_rep(out.rep(), kOddNeg));
}

TEST_CASE("rank and decomposition criteria agree on small scans") {
    for (int n = 1; n <= 4; ++n)
        for (int eps : {-1, 1}) {
            const SymmetricType sym(n, eps);
            for (const auto& r : reps_bounded(n, 2)) {
                CAPTURE(r.str());
                CHECK(is_epsilon_rank(ranks_of(r), sym) == is_epsilon_rep(r, sym));
            }
        }
}

TEST_CASE("symmetric moves stay epsilon and lower the ranks") {
    std::mt19937_64 rng(17);
    reset_move_audit();
    for (int k = 0; k < 40; ++k) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const SymmetricType sym(n, n % 2 ? -1 : +1);
        const EpsilonRep m(random_epsilon_rep(sym, 3, rng), sym);
        for (const SymMove& mv : applicable_sym_moves(m)) {
            const EpsilonRep out = apply_sym_move(m, mv);
            CHECK(sym_degenerates(m, out));
            CHECK(ranks_of(m.rep()) != ranks_of(out.rep()));
        }
    }
    CHECK(move_audit().violations == 0);
}

TEST_CASE("sym_degenerates guards") {
    const EpsilonRep a(u(5, {{{1, 5}, 2}}), kOddNeg);
    const EpsilonRep b(u(5, {{{3, 3}, 2}}), SymmetricType(5, +1));
    CHECK_THROWS_AS(sym_degenerates(a, b), MismatchedType);
}

TEST_CASE("symmetric support") {
    CHECK(symmetric_support({0, 1, 2, 1, 0}) == Segment{2, 4});
    CHECK(symmetric_support({1, 2, 1}) == Segment{1, 3});
    CHECK(!symmetric_support({0, 0, 0}).has_value());
}

TEST_CASE("perp quotient of the first table row") {
    const EpsilonRep m(u(5, {{{1, 5}, 6}}), kOddNeg);
    const RankSequence q = perp_quotient_ranks(m, 5);
    CHECK(q.rows() == std::vector<std::vector<int>>{{5, 5, 5, 5, 4}, {6, 6, 6, 5}, {6, 6, 5}, {6, 5}, {5}});
    CHECK_THROWS_AS(perp_quotient_ranks(EpsilonRep(u(5, {{{1, 3}, 1}, {{3, 5}, 1}}), kOddNeg), 1), NoEmbedding);
}

TEST_CASE("symmetric paths end at N and are monotone") {
    for (const DimVector& d : {DimVector{1, 2, 1}, DimVector{2, 2, 2}, DimVector{1, 2, 2, 1}}) {
        const int n = static_cast<int>(d.size());
        const SymmetricType sym(n, n % 2 ? -1 : +1);
        const auto nodes = epsilon_reps_with_dim(d, sym);
        for (const auto& a : nodes)
            for (const auto& b : nodes) {
                const EpsilonRep m(a, sym);
                const EpsilonRep nn(b, sym);
                if (!sym_degenerates(m, nn)) {
                    CHECK_THROWS_AS(sym_degeneration_path(m, nn), NotComparable);
                    continue;
                }
                const auto path = sym_degeneration_path(m, nn);
                REQUIRE(!path.empty());
                CHECK(path.front().Z == ranks_of(a));
                CHECK(path.back().Z == ranks_of(b));
                CHECK(!path.back().L.has_value());
                for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                    CHECK(path[k].Z.dominates(path[k + 1].Z));
                    CHECK(is_epsilon_rank(path[k].Z, sym));
                }
            }
    }
}

TEST_CASE("prescribed peels are checked") {
    const EpsilonRep m(u(5, {{{1, 5}, 6}}), kOddNeg);
    const EpsilonRep n(rep_of(RankSequence::from_rows({{6, 5, 4, 3, 2}, {6, 5, 4, 3}, {6, 5, 4}, {6, 5}, {6}})), kOddNeg);
    CHECK(sym_degeneration_path(m, n, {5, 4, 3}).size() == 4);
    const EpsilonRep m2(rep_of(RankSequence::from_rows({{3, 3, 2, 2, 2}, {3, 2, 2, 2}, {4, 2, 2}, {3, 3}, {3}})), kOddNeg);
    const EpsilonRep n2(rep_of(RankSequence::from_rows({{3, 1, 1, 0, 0}, {3, 1, 0, 0}, {4, 1, 1}, {3, 1}, {3}})), kOddNeg);
    CHECK_THROWS_AS(sym_degeneration_path(m2, n2, {2}), InvalidMove);
}

TEST_CASE("move refinement finds a sequence") {
    const EpsilonRep m(u(3, {{{1, 3}, 2}}), SymmetricType(3, -1));
    const EpsilonRep n(u(3, {{{1, 1}, 2}, {{2, 2}, 2}, {{3, 3}, 2}}), SymmetricType(3, -1));
    const auto seq = sym_move_refinement(m, n, 10000);
    REQUIRE(seq.has_value());
    EpsilonRep cur = m;
    for (const auto& mv : *seq) cur = apply_sym_move(cur, mv);
    CHECK(cur.rep() == n.rep());
}
