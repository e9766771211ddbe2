#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympdeg/pbw.hpp"

using namespace sympdeg;

namespace {

Representation u(int n, std::initializer_list<std::pair<Segment, int>> m) { return Representation::of(n, m); }

}  // namespace

TEST_CASE("subsets") {
    const PbwSubset p = PbwSubset::parse(4, "1,3");
    CHECK(p.t() == 2);
    CHECK(p.at(0) == 0);
    CHECK(p.at(1) == 1);
    CHECK(p.at(3) == 4);
    CHECK(p.contains(3));
    CHECK(!p.contains(2));
    CHECK(PbwSubset::parse(3, "").t() == 0);
    CHECK(PbwSubset::all(4).size() == 8);
    CHECK_THROWS_AS(PbwSubset(3, {3}), InvalidSubset);
    CHECK_THROWS_AS(PbwSubset(3, {2, 1}), InvalidSubset);
    CHECK_THROWS_AS(PbwSubset(0, {}), InvalidSubset);
    CHECK_THROWS_AS(PbwSubset::parse(3, "1,x"), ParseError);
}

TEST_CASE("the module M^i") {
    const PbwModule m = build_Mi(PbwSubset(3, {1}));
    // P_1^2 + P_{1*} + P_2 on A_5, with 1* = 2n - 1 = 5
    CHECK(m.half == u(5, {{{1, 5}, 2}, {{5, 5}, 1}, {{2, 5}, 1}}));
    CHECK(dim_vector(m.total.rep()) == DimVector{6, 6, 6, 6, 6});
    CHECK(m.total.rep() == u(5, {{{1, 1}, 1}, {{1, 4}, 1}, {{1, 5}, 4}, {{2, 5}, 1}, {{5, 5}, 1}}));
    CHECK(m.e == DimVector{1, 2, 3, 4, 5});

    const PbwModule empty = build_Mi(PbwSubset(2, {}));
    CHECK(empty.half == u(3, {{{1, 3}, 2}}));
    CHECK(empty.total.rep() == u(3, {{{1, 3}, 4}}));

    for (int n = 1; n <= 5; ++n)
        for (const auto& p : PbwSubset::all(n)) {
            const PbwModule mod = build_Mi(p);
            CHECK(is_epsilon_rep(mod.total.rep(), SymmetricType(2 * n - 1, -1)));
            CHECK(is_epsilon_rank(ranks_of(mod.total.rep()), SymmetricType(2 * n - 1, -1)));
        }
}

TEST_CASE("sigma_i and psi") {
    CHECK(sigma_i_map(PbwSubset(3, {1})) == std::vector<int>{1, 3, 4});
    CHECK(sigma_i_map(PbwSubset(4, {})) == std::vector<int>{1, 2, 3, 4});
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : PbwSubset::all(n)) {
            const auto img = psi(p, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
            REQUIRE(img.size() == static_cast<std::size_t>(n + p.t()));
            const auto sig = sigma_i_map(p);
            for (int k = 1; k <= n + p.t(); ++k) {
                const bool in = std::find(sig.begin(), sig.end(), k) != sig.end();
                CHECK(img[static_cast<std::size_t>(k - 1)] == Rational(in ? 1 : 0));
            }
        }
}

TEST_CASE("Weyl words") {
    const PbwSubset p(3, {1});
    const WeylWord w = w_i_word(p);
    CHECK(w.str() == "s4 s3 s4 s2 s3 s4 s1");
    CHECK(w.m == 4);
    CHECK(length(evaluate_c(w)) == 7);
    CHECK(is_reduced(w));
    for (int n = 1; n <= 5; ++n) {
        const WeylWord e = w_i_word(PbwSubset(n, {}));
        CHECK(static_cast<int>(e.size()) == n * (n + 1) / 2);
        CHECK(is_reduced(e));
    }
}

TEST_CASE("ell and h sequences") {
    const PbwSubset p(3, {1});
    CHECK(i_prime(p) == std::vector<int>{1, 4});
    CHECK(ell_sequence(p) == std::vector<int>{1, 3, 4, 6, 7, 8});
    const auto rep = check_lemma_ui(p);
    CHECK(rep.h == std::vector<int>{0, 1, 1, 2, 2, 2});
    CHECK(rep.rows.size() == 6);

    const auto triv = check_lemma_ui(PbwSubset(3, {}));
    CHECK(triv.ell == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(triv.h == std::vector<int>(6, 0));
}

TEST_CASE("positive roots of C_n") {
    for (int n = 1; n <= 5; ++n) {
        const auto roots = positive_roots_c(n);
        CHECK(static_cast<int>(roots.size()) == n * n);
        int top = 0;
        for (const auto& r : roots) top = std::max(top, height(n, r));
        CHECK(top == 2 * n - 1);  // highest root 2e_1
    }
    CHECK(root_vector(3, CRoot{1, 1, true}) == std::vector<int>{2, 0, 0});
    CHECK(root_vector(3, CRoot{1, 2, false}) == std::vector<int>{1, 0, -1});
    CHECK(root_vector(3, CRoot{1, 3, false}) == std::vector<int>{1, 0, 1});
}

TEST_CASE("Dynkin face membership") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : PbwSubset::all(n)) CHECK(dynkin_face_contains(p, CRootVector(n), false));

    const PbwSubset p(3, {1});
    CRootVector d(3);
    d[CRoot{2, 2, false}] = Rational(1);
    CHECK(!dynkin_face_contains(p, d, false));

    // heights are additive, so they satisfy every equality when i is empty
    for (int n = 1; n <= 5; ++n) CHECK(dynkin_face_contains(PbwSubset(n, {}), CRootVector::heights(n), false));
}

TEST_CASE("interior and relative interior points") {
    const PbwSubset p(3, {1});
    const CRootVector a = find_relative_interior_point(p);
    const CRootVector b = find_relative_interior_point(p);
    CHECK(a.values() == b.values());
    CHECK(dynkin_face_contains(p, a, false));
    CHECK(dynkin_face_relint_contains(p, a));

    // the empty subset has no inequalities at all
    CHECK(dynkin_face_contains(PbwSubset(3, {}), find_interior_point(PbwSubset(3, {})), true));

    // an implicit equality blocks any strictly interior point
    const PbwSubset q(3, {2});
    CHECK(!implicit_equalities(q).empty());
    CHECK_THROWS_AS(find_interior_point(q), Infeasible);
    CHECK(dynkin_face_relint_contains(q, find_relative_interior_point(q)));
}

TEST_CASE("Lagrangian fixed points for the empty subset") {
    const std::size_t expected[] = {2, 8, 48, 384};
    for (int n = 1; n <= 4; ++n) {
        const PbwSubset p(n, {});
        const auto fps = lagrangian_fixed_points(p);
        CHECK(fps.size() == expected[n - 1]);
        for (const auto& fp : fps) CHECK(check_fixed_point(p, fp).ok());
    }
}

TEST_CASE("fixed points for a nonempty subset pass every check") {
    const PbwSubset p(3, {1});
    const auto fps = lagrangian_fixed_points(p);
    CHECK(fps.size() == 64);
    for (const auto& fp : fps) {
        CHECK(check_fixed_point(p, fp).ok());
        CHECK(dual_half(fp).size() == 2);
    }
}

TEST_CASE("Bruhat comparison count refuses large ranks") {
    CHECK(bruhat_quotient_count(PbwSubset(2, {})) == 6);
    CHECK_THROWS_AS(bruhat_quotient_count(PbwSubset(5, {1, 2})), InstanceTooLarge);
}
