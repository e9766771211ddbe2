#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympdeg/core.hpp"

using namespace sympdeg;

namespace {

const Representation kMex = Representation::of(5, {{{1, 4}, 1}, {{2, 5}, 1}, {{3, 3}, 2}});

}  // namespace

TEST_CASE("ranks of the worked example") {
    const RankSequence r = ranks_of(kMex);
    CHECK(r.rows() == std::vector<std::vector<int>>{{1, 1, 1, 1, 0}, {2, 2, 2, 1}, {4, 2, 1}, {2, 1}, {1}});
    CHECK(rep_of(r) == kMex);
    CHECK(r.is_valid());
}

TEST_CASE("rank conventions outside the triangle") {
    const RankSequence r = ranks_of(kMex);
    CHECK(r(0, 3) == 0);
    CHECK(r(2, 6) == 0);
    CHECK(r.ext(3, 2).is_infinite());
    CHECK(r.ext(2, 3) == ExtRank(2));
}

TEST_CASE("rep_of inverts ranks_of on every small representation") {
    // all multisets with at most two copies of each segment on A_3
    std::vector<Segment> segs;
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) segs.push_back({i, j});
    std::vector<int> mult(segs.size(), 0);
    int seen = 0;
    for (;;) {
        Representation::Multiplicities m;
        for (std::size_t k = 0; k < segs.size(); ++k)
            if (mult[k]) m[segs[k]] = mult[k];
        const Representation rep(3, m);
        CHECK(rep_of(ranks_of(rep)) == rep);
        ++seen;
        std::size_t k = 0;
        while (k < mult.size() && mult[k] == 2) mult[k++] = 0;
        if (k == mult.size()) break;
        ++mult[k];
    }
    CHECK(seen == 729);
}

TEST_CASE("invalid rank sequences name their first violation") {
    const RankSequence bad = RankSequence::from_rows({{1, 2}, {1}});
    const auto v = bad.first_violation();
    REQUIRE(v.has_value());
    CHECK(!bad.is_valid());
    CHECK_THROWS_AS(rep_of(bad), InvalidRankSequence);

    // the double difference must hold on the diagonal too
    const RankSequence diag = RankSequence::from_rows({{1, 1}, {2}});
    CHECK(diag.is_valid());
    // every other inequality holds here; m_{2,2} = 2 - 1 - 2 + 0 < 0
    const RankSequence diag_bad = RankSequence::from_rows({{2, 2, 0}, {2, 1}, {1}});
    CHECK(!diag_bad.is_valid());
    REQUIRE(diag_bad.first_violation().has_value());
    CHECK(diag_bad.first_violation()->i == 2);
    CHECK(diag_bad.first_violation()->j == 2);
}

TEST_CASE("segments and duality") {
    CHECK_THROWS_AS(Representation::of(3, {{{2, 1}, 1}}), InvalidSegment);
    CHECK_THROWS_AS(Representation::of(3, {{{1, 4}, 1}}), InvalidSegment);
    CHECK(dual(5, Segment{1, 4}) == Segment{2, 5});
    CHECK(dual(kMex) == kMex);
    CHECK(dual(dual(Representation::of(4, {{{1, 2}, 3}}))) == Representation::of(4, {{{1, 2}, 3}}));
    CHECK(dim_vector(kMex) == DimVector{1, 2, 4, 2, 1});
}

TEST_CASE("hom and ext between segments") {
    CHECK(hom_dim(Segment{2, 3}, Segment{1, 2}) == 1);
    CHECK(hom_dim(Segment{1, 2}, Segment{2, 3}) == 0);
    CHECK(hom_dim(Segment{1, 3}, Segment{1, 3}) == 1);
    CHECK(ext_dim(Segment{1, 1}, Segment{2, 2}) == 1);
    CHECK(ext_dim(Segment{2, 2}, Segment{1, 1}) == 0);
    CHECK(ext_dim(Segment{1, 3}, Segment{1, 3}) == 0);
}

TEST_CASE("Euler form identity on sums") {
    const Representation a = Representation::of(4, {{{1, 2}, 1}, {{2, 4}, 2}, {{3, 3}, 1}});
    const Representation b = Representation::of(4, {{{1, 4}, 1}, {{2, 2}, 1}, {{4, 4}, 3}});
    CHECK(euler_form(dim_vector(a), dim_vector(b)) == hom_dim(a, b) - ext_dim(a, b));
    CHECK(euler_form(dim_vector(b), dim_vector(a)) == hom_dim(b, a) - ext_dim(b, a));
}

TEST_CASE("embeddings, quotients and summands from ranks") {
    const RankSequence r = ranks_of(kMex);
    CHECK(embeds(Segment{2, 5}, kMex));
    CHECK(embeds(Segment{3, 5}, kMex));
    CHECK(embeds(Segment{2, 5}, r));
    CHECK(!embeds(Segment{1, 3}, kMex));
    CHECK(is_quotient(Segment{1, 4}, kMex));
    CHECK(is_quotient(Segment{1, 2}, kMex));
    CHECK(is_summand(Segment{3, 3}, kMex));
    CHECK(is_summand(Segment{3, 3}, r));
    CHECK(!is_summand(Segment{3, 4}, kMex));
}

TEST_CASE("multiplicities") {
    CHECK_THROWS_AS(kMex.with({1, 1}, -1), InsufficientMultiplicity);
    CHECK(kMex.with({3, 3}, -2).multiplicity({3, 3}) == 0);
    CHECK(kMex.summand_count() == 4);
}
