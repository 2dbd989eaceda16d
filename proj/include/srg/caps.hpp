#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srg/f3.hpp"
#include "srg/graph.hpp"
#include "srg/linearize.hpp"
#include "srg/report.hpp"

namespace srg {

// Point of PG(d-1,3) held as the unique representative whose first nonzero
// coordinate is 1.
struct ProjPoint {
    F3Vec t;

    bool operator==(const ProjPoint& o) const { return t == o.t; }
    bool operator<(const ProjPoint& o) const { return t < o.t; }
};

// Throws ContractError on the zero vector.
ProjPoint normalize_point(F3Vec v);

// Sorted duplicate-free point set of PG(vec_dim-1, 3).
class Cap {
public:
    Cap() = default;
    Cap(int vec_dim, std::vector<ProjPoint> pts); // sorts; throws on dim mismatch or duplicates

    int vec_dim() const { return vec_dim_; }
    int proj_dim() const { return vec_dim_ - 1; }
    int size() const { return int(pts_.size()); }
    const std::vector<ProjPoint>& points() const { return pts_; }
    bool contains(const ProjPoint& p) const;

    bool operator==(const Cap& o) const { return vec_dim_ == o.vec_dim_ && pts_ == o.pts_; }

private:
    int vec_dim_ = 0;
    std::vector<ProjPoint> pts_;
};

// H = { [coords(x)] : x in N(v0) }. Requires the neighborhood to be closed
// under coordinate negation (throws StructureError otherwise); the result
// has k/2 points.
Cap extract_cap(const Graph& g, const Coordinatization& c);

struct IsCapResult {
    bool cap = false;
    bool maximal = false;
    Report report;
};

// Pairwise line check (the other two points of each secant must avoid the
// set) plus a brute-force maximality scan over the ambient space.
IsCapResult is_cap(const Cap& k);

// |K cap H| over every hyperplane H, as size -> count.
std::map<int, long long> hyperplane_profile(const Cap& k);

// Graph on F_3^d with x ~ y iff [x-y] lies in the cap.
Graph cayley_from_cap(const Cap& k);

struct EquivResult {
    std::optional<F3Matrix> witness; // g with g(K1) = K2 as point sets
    long long nodes = 0;             // frame-search nodes, for performance logs
};

// Backtracking frame search for a linear bijection mapping k1 onto k2,
// pruned by subspace-intersection and pair invariants. Returned witnesses
// are re-verified before return. Throws ContractError on dimension or
// cardinality mismatch.
EquivResult cap_equiv(const Cap& k1, const Cap& k2);

struct CapSearchResult {
    std::optional<Cap> cap;
    long long nodes = 0;
    uint64_t seed = 0;
    std::string strategy; // which phase produced the cap
};

// Search for a cap of the given size in PG(proj_dim, 3). Two phases:
//   1. unions of point orbits under cyclic subgroups of a Singer cycle
//      (deterministic; finds the highly symmetric caps instantly),
//   2. seeded randomized greedy completion plus depth-first backtracking
//      over blocked-point tables, restarting on seed+1 within the node
//      budget.
CapSearchResult cap_search(int proj_dim, int target, uint64_t seed,
                           long long node_budget = 100000000);

// The bundled 56-point cap of PG(5,3): deterministically regenerated by
// cap_search(5, 56, 0) on first use and memoized.
const Cap& reference_hill_cap();

// Text format:
//   cap dim=<d> order=3 n=<count>
//   <d digits in {0,1,2}>   (one normalized point per line, sorted)
Cap read_cap(std::istream& in);
Cap read_cap_file(const std::string& path);
void write_cap(const Cap& k, std::ostream& out);
void write_cap_file(const Cap& k, const std::string& path);

} // namespace srg
