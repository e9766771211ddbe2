#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>

#include "sympdeg/coxeter.hpp"

using namespace sympdeg;

namespace {

// Word length by breadth-first search over the Cayley graph.
template <class W>
std::map<W, int> bfs_lengths(const W& id, int gens) {
    std::map<W, int> dist{{id, 0}};
    std::queue<W> todo;
    todo.push(id);
    while (!todo.empty()) {
        const W w = todo.front();
        todo.pop();
        for (int k = 1; k <= gens; ++k) {
            const W next = times_generator(w, k);
            if (dist.emplace(next, dist[w] + 1).second) todo.push(next);
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("parsing words") {
    const WeylWord w = WeylWord::parse(WeylType::C, 4, "s4 s3 s4 s2 s3 s4 s1");
    CHECK(w.letters == std::vector<int>{4, 3, 4, 2, 3, 4, 1});
    CHECK(w.str() == "s4 s3 s4 s2 s3 s4 s1");
    CHECK(WeylWord::parse(WeylType::A, 3, "").size() == 0);
    CHECK_THROWS_AS(WeylWord::parse(WeylType::A, 3, "s3"), InvalidWord);
    CHECK_THROWS_AS(WeylWord::parse(WeylType::C, 3, "s0"), InvalidWord);
    CHECK_THROWS_AS(WeylWord::parse(WeylType::C, 3, "t1"), InvalidWord);
}

TEST_CASE("length against BFS distance, type A") {
    for (int m = 1; m <= 5; ++m) {
        const auto dist = bfs_lengths(PermutationA::identity(m), m - 1);
        long fact = 1;
        for (int k = 2; k <= m; ++k) fact *= k;
        CHECK(static_cast<long>(dist.size()) == fact);
        for (const auto& [w, d] : dist) {
            CHECK(length(w) == d);
            CHECK(evaluate_a(reduced_word(w)) == w);
            CHECK(reduced_word(w).size() == static_cast<std::size_t>(d));
        }
    }
}

TEST_CASE("length against BFS distance, type C") {
    for (int m = 1; m <= 4; ++m) {
        const auto dist = bfs_lengths(SignedPermutation::identity(m), m);
        long order = 1;
        for (int k = 1; k <= m; ++k) order *= 2 * k;
        CHECK(static_cast<long>(dist.size()) == order);
        int longest = 0;
        for (const auto& [w, d] : dist) {
            CHECK(length(w) == d);
            CHECK(evaluate_c(reduced_word(w)) == w);
            longest = std::max(longest, d);
        }
        CHECK(longest == m * m);
    }
}

TEST_CASE("evaluation order: rightmost letter acts first") {
    const WeylWord w = WeylWord::parse(WeylType::A, 3, "s1 s2");
    // s1 s2 sends 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    CHECK(evaluate_a(w).images == std::vector<int>{2, 3, 1});
    const WeylWord c = WeylWord::parse(WeylType::C, 2, "s2 s1");
    // s2 s1 sends 1 -> 2 -> -2, 2 -> 1 -> 1
    CHECK(evaluate_c(c).images == std::vector<int>{-2, 1});
    CHECK(evaluate_c(c).inverse().images == std::vector<int>{2, -1});
}

TEST_CASE("reducedness") {
    CHECK(is_reduced(WeylWord::parse(WeylType::C, 4, "s4 s3 s4 s2 s3 s4 s1")));
    CHECK(!is_reduced(WeylWord::parse(WeylType::A, 3, "s1 s1")));
    CHECK(!is_reduced(WeylWord::parse(WeylType::A, 3, "s1 s2 s1 s2")));
    CHECK(is_reduced(WeylWord::parse(WeylType::A, 3, "s1 s2 s1")));
    CHECK(!is_reduced(WeylWord::parse(WeylType::C, 2, "s1 s2 s1 s2 s1")));
}

TEST_CASE("Bruhat order") {
    const auto dist = bfs_lengths(PermutationA::identity(3), 2);
    const PermutationA longest = evaluate_a(WeylWord::parse(WeylType::A, 3, "s1 s2 s1"));
    for (const auto& [w, d] : dist) {
        CHECK(bruhat_leq(PermutationA::identity(3), w));
        CHECK(bruhat_leq(w, longest));
    }
    const PermutationA a = evaluate_a(WeylWord::parse(WeylType::A, 3, "s1 s2"));
    const PermutationA b = evaluate_a(WeylWord::parse(WeylType::A, 3, "s2 s1"));
    CHECK(!bruhat_leq(a, b));
    CHECK(!bruhat_leq(b, a));

    const SignedPermutation w0 = evaluate_c(WeylWord::parse(WeylType::C, 2, "s1 s2 s1 s2"));
    CHECK(bruhat_lower_interval(w0).size() == 8);
    CHECK(bruhat_lower_interval(evaluate_c(WeylWord::parse(WeylType::C, 2, "s2 s1"))).size() == 4);
}
