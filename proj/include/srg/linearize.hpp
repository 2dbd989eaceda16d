#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srg/f3.hpp"
#include "srg/involution.hpp"

namespace srg {

// F_3^m labeling of the vertex set induced by the transported group law
// u + v = sigma_v0(sigma_u(v)). coords is a bijection with coords(v0) = 0
// and 3^m = |V|.
struct Coordinatization {
    int v0 = -1;
    int m = 0;
    std::vector<F3Vec> coords;  // indexed by vertex
    std::vector<int> vertex_of; // indexed by coord id (base-3, trit i weighted 3^i)

    int coord_id(int vertex) const;
    int vertex_at(const F3Vec& c) const;
    static int id_of(const F3Vec& c);
};

// sigma_v0(sigma_u(v)), the transported addition.
int vertex_add(const std::vector<Involution>& sig, int v0, int u, int v);

// Commutativity, identity, exponent 3 at every vertex, and associativity
// (exhaustive or sampled per cfg).
Report group_axioms_check(const Graph& g, const std::vector<Involution>& sig, int v0,
                          const SampleCfg& cfg);

// Greedy deterministic coordinatization: repeatedly take the smallest vertex
// outside the current closure as a new basis element and close under
// addition. Throws StructureError when the closure does not triple at every
// step or |V| is not a power of 3.
Coordinatization coordinatize(const Graph& g, const std::vector<Involution>& sig, int v0);

// coords(sigma_v(u)) = -(coords(u) + coords(v)) on all/sampled pairs, and
// every coordinate shift x -> x + t is an automorphism.
Report check_sigma_linear(const Graph& g, const std::vector<Involution>& sig,
                          const Coordinatization& c, const SampleCfg& cfg);

// JSON file: {"m": <int>, "v0": <int>, "coords": [[t1..tm], ...]}.
void write_coordinatization_file(const Coordinatization& c, const std::string& path);
Coordinatization read_coordinatization_file(const std::string& path);

} // namespace srg
