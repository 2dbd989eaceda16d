#pragma once

#include <optional>
#include <vector>

#include "srg/graph.hpp"
#include "srg/rational.hpp"
#include "srg/report.hpp"

namespace srg {

// Exact constants of the two-valued inner-product model for family index n:
// unit vectors indexed by vertices with <x_i,x_j> = p on edges and q on
// non-edges. alpha/beta/gamma drive the neighbor-sum relation and need
// n >= 2.
class RepConstants {
public:
    explicit RepConstants(int n); // throws ContractError for n < 1

    int n() const { return n_; }
    const Rat& p() const { return p_; }
    const Rat& q() const { return q_; }
    const Rat& alpha() const; // throws DomainError for n < 2
    const Rat& beta() const;
    const Rat& gamma() const;

private:
    int n_;
    Rat p_, q_;
    std::optional<Rat> alpha_, beta_, gamma_;
};

inline RepConstants rep_constants(int n) { return RepConstants(n); }

// For a fixed non-neighbor u of the base vertex:
//   A = N(u) cap N(base)                     (size mu)
//   B = matched partners of A inside N(base) (size mu)
//   C = non-neighbors w of base adjacent to u with |A(u) cap A(w)| = 1
//   D = non-neighbors w of base and of u with |A(u) cap A(w)| = n+1
struct NeighborSets {
    int base = -1, u = -1;
    std::vector<int> A, B, C, D;
};

NeighborSets neighbor_sets(const Graph& g, int n, int base, int u);

// Gram matrix of a vertex subset: 1 on the diagonal, p on edges, q on
// non-edges.
RatMatrix gram_of_subset(const Graph& g, int n, const std::vector<int>& subset);

// The two exact averaging identities of the model, evaluated from counts
// alone: v(1 + k p + (v-k-1) q) = 0 and v(1 + k p^2 + (v-k-1) q^2) = v^2/g.
Report two_design_check(const Graph& g, int n);

// Residual c^T Gram c of the coefficient vector with 1 at u, alpha on A,
// beta on B, gamma at the base (overlaps accumulate). Zero exactly when the
// neighbor-sum relation holds. Throws ContractError when u is adjacent to
// the base. gamma_shift perturbs the base coefficient for sensitivity tests.
Rat relation_residual(const Graph& g, int n, int base, int u, const Rat& gamma_shift = Rat(0));

// Adjacency of u,w (both non-neighbors of the base) against the count
// n|A(u) cap A(w)| + |A(u) cap B(w)|: n+1 on edges, n(n+1) on non-edges.
// At n = 1 the two constants coincide and the check is reported degenerate.
Report intersection_adjacency_check(const Graph& g, int n, int base, int u, int w);

// Counts m_i = #{ w non-adjacent to both base and u : |A(u) cap A(w)| = i }
// for i = 0..n+1, with the three counting identities they must satisfy.
struct IntersectionProfile {
    std::vector<long long> m;
    Report identities;
};

IntersectionProfile profile_measure(const Graph& g, int n, int base, int u);

// Exact solution of the counting system for the top three values given
// m_0..m_{n-2}; negative solutions are flagged infeasible.
struct ProfileSolution {
    Int m_nm1, m_n, m_np1;
    bool feasible = false;
};

ProfileSolution profile_solve(int n, const std::vector<long long>& low);

// Exhaustive check of the combinatorial inequality behind the uniqueness
// argument: over all nonnegative (m_0..m_{n-2}) with
// sum C(n-i+1,2) m_i <= C(n+1,2), verify sum C(n-i,2) m_i <= C(n,2) with
// equality exactly at m_0 = 1, rest 0.
Report budget_inequality_check(int n);

// The 3x3 quadratic form whose negative determinant pins the independence
// argument. det computed two independent ways (cofactor expansion and the
// closed form); disagreement throws InternalError.
struct QuadForm {
    int n = 0;
    RatMatrix a;
    Rat det;
};

QuadForm quadform(int n);

} // namespace srg
