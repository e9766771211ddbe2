#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sympdeg/error.hpp"

namespace sympdeg {

enum class WeylType { A, C };

/// Permutation of [1..m] in one-line notation: images[a-1] = w(a).
struct PermutationA {
    std::vector<int> images;

    static PermutationA identity(int m);
    int m() const noexcept { return static_cast<int>(images.size()); }
    int operator()(int a) const { return images.at(static_cast<std::size_t>(a - 1)); }
    PermutationA inverse() const;

    friend bool operator==(const PermutationA&, const PermutationA&) = default;
    friend auto operator<=>(const PermutationA&, const PermutationA&) = default;
    std::string str() const;
};

/// Signed permutation of [1..m]: images[a-1] = w(a) in {+-1..+-m}, with
/// w(-a) = -w(a).
struct SignedPermutation {
    std::vector<int> images;

    static SignedPermutation identity(int m);
    int m() const noexcept { return static_cast<int>(images.size()); }
    int operator()(int a) const;
    SignedPermutation inverse() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
    std::string str() const;
};

/// Word in the simple reflections. Type A on m symbols uses s_1..s_{m-1}
/// (s_i swaps i and i+1); type C of rank m uses s_1..s_m, with s_m the sign
/// change of m.
struct WeylWord {
    WeylType type = WeylType::A;
    int m = 1;
    std::vector<int> letters;

    /// Parses "s4 s3 s4 s2". Throws InvalidWord.
    static WeylWord parse(WeylType type, int m, const std::string& text);

    std::size_t size() const noexcept { return letters.size(); }
    std::string str() const;
    friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// Throws InvalidWord when some letter is out of range.
void validate(const WeylWord& w);

/// Product of the letters as maps, the rightmost letter acting first.
PermutationA evaluate_a(const WeylWord& w);
SignedPermutation evaluate_c(const WeylWord& w);
std::variant<PermutationA, SignedPermutation> evaluate(const WeylWord& w);

/// Number of inversions.
int length(const PermutationA& w);
/// Number of positive roots e_i -+ e_j, 2e_i sent to negative roots.
int length(const SignedPermutation& w);

bool is_reduced(const WeylWord& w);

/// w s_k (apply s_k first).
PermutationA times_generator(const PermutationA& w, int k);
SignedPermutation times_generator(const SignedPermutation& w, int k);

WeylWord reduced_word(const PermutationA& w);
WeylWord reduced_word(const SignedPermutation& w);

/// Bruhat order through the subword property on a reduced word of w.
bool bruhat_leq(const PermutationA& u, const PermutationA& w);
bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& w);

/// All elements below w in Bruhat order.
std::vector<SignedPermutation> bruhat_lower_interval(const SignedPermutation& w);

}  // namespace sympdeg
