#pragma once

#include <array>
#include <vector>

#include "srg/graph.hpp"

namespace srg {

class Cap; // caps.hpp

// GF(81) as F_3[x]/(x^4 + x + 2). Elements are packed coefficient vectors
// (c0 + 3 c1 + 9 c2 + 27 c3), indices 0..80. The modulus is checked
// irreducible by exhaustive factor search at construction; any irreducible
// quartic gives an isomorphic field, this one is fixed so files stay
// reproducible.
class GF81 {
public:
    static constexpr std::array<int, 5> kModulus = {2, 1, 0, 0, 1}; // 2 + x + x^4

    GF81(); // throws InternalError if the modulus check fails

    int add(int a, int b) const { return add_[a][b]; }
    int sub(int a, int b) const { return add_[a][neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int pow4(int a) const { return mul(mul(a, a), mul(a, a)); }

    // Sorted nonzero fourth powers; the connection set of the 81-vertex
    // Cayley graph.
    std::vector<int> fourth_powers() const;

private:
    std::array<std::array<uint8_t, 81>, 81> add_{};
    std::array<std::array<uint8_t, 81>, 81> mul_{};
    std::array<uint8_t, 81> neg_{};
};

// The one-parameter family ((n^2+3n-1)^2, n^2(n+3), 1, n(n+1)) with the
// index attached. Throws ContractError for n < 1.
SrgParams family_params(int64_t n);

// 3x3 rook's graph: vertices (i,j) in F_3^2 with index 3i+j, adjacent iff
// same row or same column.
Graph build_l33();

// 81 vertices labeled by GF(81); x ~ y iff x - y is a nonzero fourth power.
// A Cayley graph, so adjacency is translation invariant.
Graph build_brouwer_haemers();

// 729 vertices labeled by F_3^6 (vertex index = base-3 encoding, coordinate
// i weighted 3^i); x ~ y iff the projective class [x - y] lies in the given
// 56-point cap of PG(5,3). Throws ContractError unless the cap is a valid
// 56-cap in the right space.
Graph build_games(const Cap& cap);

} // namespace srg
