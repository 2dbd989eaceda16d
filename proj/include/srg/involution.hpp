#pragma once

#include <cstdint>
#include <vector>

#include "srg/graph.hpp"
#include "srg/report.hpp"

namespace srg {

using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_inverse(const Perm& p);
// (p * q)(x) = p(q(x))
Perm perm_compose(const Perm& p, const Perm& q);
bool is_permutation(const Perm& p);

// True iff perm is an adjacency-preserving bijection. Throws ContractError
// when perm is not a permutation of V(G).
bool is_automorphism(const Graph& g, const Perm& perm);

// The order-2 automorphism attached to a base vertex: fixes the vertex,
// swaps matched neighbor pairs, and moves every non-neighbor u to the unique
// w whose neighbor trace on N(base) is the partner image of u's.
struct Involution {
    int base = -1;
    Perm perm;
};

// Constructs the involution at v:
//   1. sigma(v) = v; matched pairs in N(v) swap.
//   2. Every u outside {v} u N(v) is keyed by A(u) = N(u) cap N(v), sorted;
//      sigma(u) is the unique vertex keyed by the partner image of A(u).
// The result is validated (involution + automorphism) before returning.
// Throws StructureError when the construction breaks down, i.e. the graph is
// not a lambda=1 family member.
Involution sigma(const Graph& g, int v);

// sigma at every vertex, indexed by base.
std::vector<Involution> all_involutions(const Graph& g);

// Sampling policy for checks that are quadratic/cubic in v. Exhaustive mode
// ignores seed/samples. Seeds are recorded in reports for replay.
struct SampleCfg {
    bool exhaustive = true;
    uint64_t seed = 0;
    long long samples = 100000;
};

// Five identities tying the involutions together:
//   (i)   commutation of the two-argument map: sigma_u(v) = sigma_v(u)
//   (ii)  covariance g sigma_u g^-1 = sigma_{g(u)} with g drawn from the
//         involution set itself
//   (iii) the special case g = sigma_u of (ii)
//   (iv)  sigma_u sigma_v is fixed-point-free of order 3 for u != v
//   (v)   for adjacent u,v every x is adjacent to sigma_u(sigma_v(x))
Report verify_pair_identities(const Graph& g, const std::vector<Involution>& sig, const SampleCfg& cfg);

// (sigma_v sigma_w sigma_u)^2 = identity over all (or sampled) triples.
Report verify_triple_square(const Graph& g, const std::vector<Involution>& sig, const SampleCfg& cfg);

} // namespace srg
