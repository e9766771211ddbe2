#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "sympdeg/linalg.hpp"
#include "sympdeg/symdegen.hpp"

namespace sympdeg {

/// Explicit maps f_k : M_k -> M_{k+1}, k = 1..n-1 (stored 0-based), in a basis
/// indexed by (summand copy, vertex). maps[k-1] has shape dims[k] x dims[k-1].
struct MatrixRealization {
    int n = 1;
    std::vector<int> dims;
    std::vector<IntMatrix> maps;
};

/// Each segment copy contributes an identity chain. With a seed, every vertex
/// space is additionally scrambled by a random unimodular base change.
MatrixRealization realize_matrices(const Representation& rep, std::optional<std::uint64_t> scramble_seed = {});

/// Exact ranks of all composites f_{j-1} o ... o f_i.
RankSequence rank_seq_bruteforce(const MatrixRealization& real);

/// Dimension of the space of intertwiners g with g_{k+1} f_k = f'_k g_k.
int hom_dim_bruteforce(const Representation& m, const Representation& n);
int hom_dim_bruteforce(const MatrixRealization& m, const MatrixRealization& n);

/// Explicit sigma-compatible epsilon-form on the total space M^0 = sum_k M_k.
struct EpsilonRealization {
    MatrixRealization real;
    std::vector<int> offsets;  // offset of M_k (k = 1..n) inside M^0
    IntMatrix total_map;       // block-subdiagonal operator built from the f_k
    IntMatrix gram;            // <v, w> = v^T gram w
    int epsilon = -1;
};

struct FormCheck {
    bool epsilon_symmetric = false;
    bool nondegenerate = false;
    bool sigma_compatible = false;
    bool anti_adjoint = false;
    bool isotropic_chords = false;  // <f_{i,sigma(i)} v, v> = 0, checked in split types

    bool ok() const {
        return epsilon_symmetric && nondegenerate && sigma_compatible && anti_adjoint && isotropic_chords;
    }
};

/// Throws NotEpsilon when the representation carries no such form.
EpsilonRealization realize_epsilon_form(const EpsilonRep& erep);
FormCheck check_epsilon_form(const EpsilonRealization& er, const SymmetricType& sym);

enum class MoveKind { Ordinary, Symmetric };

/// Every isomorphism class reachable from `rep` by moves. Throws
/// InstanceTooLarge when the rank sum of `rep` exceeds `max_rank_sum`.
std::set<Representation> closure_enumerate(const Representation& rep, MoveKind kind,
                                           std::optional<SymmetricType> sym = {}, long max_rank_sum = 400);

/// Covering pairs (a, b) of the rank order among `nodes`: r^a > r^b with
/// nothing strictly in between.
std::vector<std::pair<Representation, Representation>> hasse_edges(const std::vector<Representation>& nodes);

/// All representations with dimension vector exactly `d`.
std::vector<Representation> reps_with_dim(const DimVector& d);

/// All representations on A_n whose dimension vector entries are <= max_entry.
std::vector<Representation> reps_bounded(int n, int max_entry);

/// All epsilon-representations with dimension vector `d`.
std::vector<Representation> epsilon_reps_with_dim(const DimVector& d, const SymmetricType& sym);

/// A seeded random representation with multiplicities in [0, max_mult],
/// each segment present with probability `density`.
Representation random_rep(int n, int max_mult, std::mt19937_64& rng, double density = 0.35);

/// A seeded random epsilon-representation of the given type.
Representation random_epsilon_rep(const SymmetricType& sym, int max_pairs, std::mt19937_64& rng);

}  // namespace sympdeg
