#include "sympdeg/coxeter.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

namespace sympdeg {

PermutationA PermutationA::identity(int m) {
    PermutationA p;
    for (int a = 1; a <= m; ++a) p.images.push_back(a);
    return p;
}

PermutationA PermutationA::inverse() const {
    PermutationA out;
    out.images.assign(images.size(), 0);
    for (int a = 1; a <= m(); ++a) out.images[static_cast<std::size_t>((*this)(a) - 1)] = a;
    return out;
}

std::string PermutationA::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < images.size(); ++k) os << (k ? " " : "") << images[k];
    os << "]";
    return os.str();
}

SignedPermutation SignedPermutation::identity(int m) {
    SignedPermutation p;
    for (int a = 1; a <= m; ++a) p.images.push_back(a);
    return p;
}

int SignedPermutation::operator()(int a) const {
    if (a < 0) return -(*this)(-a);
    return images.at(static_cast<std::size_t>(a - 1));
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation out;
    out.images.assign(images.size(), 0);
    for (int a = 1; a <= m(); ++a) {
        const int b = (*this)(a);
        out.images[static_cast<std::size_t>(std::abs(b) - 1)] = b > 0 ? a : -a;
    }
    return out;
}

std::string SignedPermutation::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < images.size(); ++k) os << (k ? " " : "") << images[k];
    os << "]";
    return os.str();
}

WeylWord WeylWord::parse(WeylType type, int m, const std::string& text) {
    WeylWord w{type, m, {}};
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S')) throw InvalidWord("bad generator token '" + tok + "'");
        try {
            std::size_t used = 0;
            const int k = std::stoi(tok.substr(1), &used);
            if (used != tok.size() - 1) throw InvalidWord("bad generator token '" + tok + "'");
            w.letters.push_back(k);
        } catch (const std::logic_error&) {
            throw InvalidWord("bad generator token '" + tok + "'");
        }
    }
    validate(w);
    return w;
}

std::string WeylWord::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < letters.size(); ++k) os << (k ? " " : "") << "s" << letters[k];
    return os.str();
}

void validate(const WeylWord& w) {
    const int hi = w.type == WeylType::A ? w.m - 1 : w.m;
    for (int k : w.letters) {
        if (k < 1 || k > hi) {
            throw InvalidWord("generator s" + std::to_string(k) + " out of range for " +
                              (w.type == WeylType::A ? "S_" : "C_") + std::to_string(w.m));
        }
    }
}

PermutationA times_generator(const PermutationA& w, int k) {
    PermutationA out = w;
    std::swap(out.images[static_cast<std::size_t>(k - 1)], out.images[static_cast<std::size_t>(k)]);
    return out;
}

SignedPermutation times_generator(const SignedPermutation& w, int k) {
    SignedPermutation out = w;
    if (k == w.m()) {
        out.images[static_cast<std::size_t>(k - 1)] = -out.images[static_cast<std::size_t>(k - 1)];
    } else {
        std::swap(out.images[static_cast<std::size_t>(k - 1)], out.images[static_cast<std::size_t>(k)]);
    }
    return out;
}

PermutationA evaluate_a(const WeylWord& w) {
    if (w.type != WeylType::A) throw InvalidWord("type-C word evaluated as type A");
    validate(w);
    PermutationA p = PermutationA::identity(w.m);
    for (int k : w.letters) p = times_generator(p, k);
    return p;
}

SignedPermutation evaluate_c(const WeylWord& w) {
    if (w.type != WeylType::C) throw InvalidWord("type-A word evaluated as type C");
    validate(w);
    SignedPermutation p = SignedPermutation::identity(w.m);
    for (int k : w.letters) p = times_generator(p, k);
    return p;
}

std::variant<PermutationA, SignedPermutation> evaluate(const WeylWord& w) {
    if (w.type == WeylType::A) return evaluate_a(w);
    return evaluate_c(w);
}

int length(const PermutationA& w) {
    int inv = 0;
    for (int a = 1; a <= w.m(); ++a)
        for (int b = a + 1; b <= w.m(); ++b)
            if (w(a) > w(b)) ++inv;
    return inv;
}

namespace {

// Sign of c_a e_{|w(a)|} + c_b e_{|w(b)|}: positive iff the coefficient at the
// smaller index is positive.
bool image_negative(const SignedPermutation& w, int a, int ca, int b, int cb) {
    const int wa = w(a);
    const int wb = w(b);
    const int ia = std::abs(wa);
    const int ib = std::abs(wb);
    const int sa = (wa > 0 ? 1 : -1) * ca;
    const int sb = (wb > 0 ? 1 : -1) * cb;
    return (ia < ib ? sa : sb) < 0;
}

}  // namespace

int length(const SignedPermutation& w) {
    int len = 0;
    for (int a = 1; a <= w.m(); ++a) {
        if (w(a) < 0) ++len;  // 2 e_a
        for (int b = a + 1; b <= w.m(); ++b) {
            if (image_negative(w, a, 1, b, -1)) ++len;  // e_a - e_b
            if (image_negative(w, a, 1, b, 1)) ++len;   // e_a + e_b
        }
    }
    return len;
}

bool is_reduced(const WeylWord& w) {
    const int len = w.type == WeylType::A ? length(evaluate_a(w)) : length(evaluate_c(w));
    return static_cast<std::size_t>(len) == w.size();
}

namespace {

template <class El>
WeylWord reduced_word_impl(El w, WeylType type, int gens) {
    std::vector<int> rev;
    while (length(w) > 0) {
        for (int k = 1; k <= gens; ++k) {
            El shorter = times_generator(w, k);
            if (length(shorter) < length(w)) {
                rev.push_back(k);
                w = shorter;
                break;
            }
        }
    }
    WeylWord out{type, type == WeylType::A ? gens + 1 : gens, {}};
    out.letters.assign(rev.rbegin(), rev.rend());
    return out;
}

template <class El>
std::set<El> subword_products(const WeylWord& word, const El& id) {
    std::set<El> reach{id};
    for (int k : word.letters) {
        std::set<El> next = reach;
        for (const El& x : reach) next.insert(times_generator(x, k));
        reach.swap(next);
    }
    return reach;
}

}  // namespace

WeylWord reduced_word(const PermutationA& w) { return reduced_word_impl(w, WeylType::A, w.m() - 1); }
WeylWord reduced_word(const SignedPermutation& w) { return reduced_word_impl(w, WeylType::C, w.m()); }

bool bruhat_leq(const PermutationA& u, const PermutationA& w) {
    if (u.m() != w.m()) throw InvalidWord("Bruhat comparison across different ranks");
    return subword_products(reduced_word(w), PermutationA::identity(w.m())).count(u) > 0;
}

bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& w) {
    if (u.m() != w.m()) throw InvalidWord("Bruhat comparison across different ranks");
    return subword_products(reduced_word(w), SignedPermutation::identity(w.m())).count(u) > 0;
}

std::vector<SignedPermutation> bruhat_lower_interval(const SignedPermutation& w) {
    const auto s = subword_products(reduced_word(w), SignedPermutation::identity(w.m()));
    return {s.begin(), s.end()};
}

}  // namespace sympdeg
