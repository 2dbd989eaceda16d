#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srg/bitset.hpp"
#include "srg/report.hpp"

namespace srg {

// Dense undirected graph; one bitset row per vertex. Rows stay symmetric and
// irreflexive because edges only enter through add_edge.
class Graph {
public:
    Graph() = default;
    explicit Graph(int v) : v_(v), adj_(v, Bitset(v)) {}

    int v() const { return v_; }

    void add_edge(int a, int b);
    bool adjacent(int a, int b) const { return adj_[a].test(b); }
    int degree(int a) const { return adj_[a].count(); }
    int common_neighbors(int a, int b) const { return adj_[a].and_count(adj_[b]); }
    const Bitset& row(int a) const { return adj_[a]; }
    std::vector<int> neighbors(int a) const { return adj_[a].to_vector(); }
    long long edge_count() const;

    // Image of the graph under a vertex relabeling: x~y iff perm(x)~perm(y)
    // in the result.
    Graph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Graph& o) const { return v_ == o.v_ && adj_ == o.adj_; }

private:
    int v_ = 0;
    std::vector<Bitset> adj_;
};

struct SrgParams {
    int64_t v = 0, k = 0, lambda = 0, mu = 0;
    std::optional<int> n; // family index when the tuple comes from the one-parameter family

    bool operator==(const SrgParams& o) const {
        return v == o.v && k == o.k && lambda == o.lambda && mu == o.mu;
    }
};

// Exact eigendata of a feasible parameter set: eigenvalues k, r, s with
// multiplicities 1, f, g.
struct Spectrum {
    int64_t r = 0, s = 0, f = 0, g = 0;
};

// Perfect matching induced on N(v) of a lambda=1 strongly regular graph.
// partner[x] is the matched neighbor for x in N(v), -1 elsewhere.
struct Matching {
    int base = -1;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> partner;
};

// Necessary feasibility conditions: the counting identity
// (v-k-1) mu = k(k-lambda-1), integrality and nonnegativity of the
// eigenvalue data. Failures are report entries, never exceptions.
Report params_feasible(const SrgParams& p);

// Exact (r, s, f, g). Throws FeasibilityError when params_feasible fails.
Spectrum spectrum(const SrgParams& p);

// Full strong-regularity verification: k-regularity, lambda/mu common
// neighbor counts for every pair (bitset intersections), and the entrywise
// matrix identity A^2 + (mu-lambda)A + (mu-k)I = mu J in exact integer
// arithmetic. Throws ContractError if G.v != p.v.
Report verify_srg(const Graph& g, const SrgParams& p);

// The mK_2 structure on N(v). Throws StructureError when some neighbor does
// not have exactly one neighbor inside N(v).
Matching neighborhood_matching(const Graph& g, int v);

// Canonical text format, LF-terminated ASCII:
//   srg v=<int> k=<int> lambda=<int> mu=<int>
//   <u> <v>          (one line per edge, 0 <= u < v, sorted, k*v/2 lines)
// Reader rejects malformed headers, self-loops, duplicate or out-of-range
// edges with a ParseError carrying the line number. Writer output reread by
// read_graph reproduces identical bitsets, byte for byte on rewrite.
std::pair<Graph, SrgParams> read_graph(std::istream& in);
std::pair<Graph, SrgParams> read_graph_file(const std::string& path);
void write_graph(const Graph& g, const SrgParams& p, std::ostream& out);
void write_graph_file(const Graph& g, const SrgParams& p, const std::string& path);

} // namespace srg
