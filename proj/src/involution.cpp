#include "srg/involution.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "srg/errors.hpp"

namespace srg {

Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; i++) p[i] = i;
    return p;
}

Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); i++) q[p[i]] = int(i);
    return q;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); i++) r[i] = p[q[i]];
    return r;
}

bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= int(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

bool is_automorphism(const Graph& g, const Perm& perm) {
    if (int(perm.size()) != g.v() || !is_permutation(perm))
        throw ContractError("is_automorphism: not a permutation of V(G)");
    // A bijection preserving all edges forward maps the edge set onto itself,
    // so non-edges are preserved as well.
    for (int x = 0; x < g.v(); x++) {
        bool ok = true;
        g.row(x).for_each([&](int y) {
            if (x < y && !g.adjacent(perm[x], perm[y])) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

Involution sigma(const Graph& g, int v) {
    if (v < 0 || v >= g.v()) throw ContractError("sigma: vertex out of range");
    Matching match = neighborhood_matching(g, v);

    Involution inv;
    inv.base = v;
    inv.perm.assign(g.v(), -1);
    inv.perm[v] = v;
    for (auto [a, b] : match.pairs) {
        inv.perm[a] = b;
        inv.perm[b] = a;
    }

    // Key every non-neighbor u by its neighbor trace A(u) on N(v); the
    // construction requires these keys to be pairwise distinct.
    std::map<std::vector<int>, int> by_trace;
    for (int u = 0; u < g.v(); u++) {
        if (u == v || g.adjacent(u, v)) continue;
        std::vector<int> a;
        g.row(u).for_each([&](int x) {
            if (g.adjacent(v, x)) a.push_back(x);
        });
        auto [it, inserted] = by_trace.emplace(std::move(a), u);
        if (!inserted)
            throw StructureError("sigma: neighbor traces of " + std::to_string(it->second) +
                                 " and " + std::to_string(u) + " collide; not a family graph");
    }
    for (auto& [a, u] : by_trace) {
        std::vector<int> b;
        b.reserve(a.size());
        for (int x : a) b.push_back(match.partner[x]);
        std::sort(b.begin(), b.end());
        auto it = by_trace.find(b);
        if (it == by_trace.end())
            throw StructureError("sigma: no vertex carries the partner trace of " +
                                 std::to_string(u) + "; not a family graph");
        inv.perm[u] = it->second;
    }

    for (int x = 0; x < g.v(); x++)
        if (inv.perm[x] < 0 || inv.perm[inv.perm[x]] != x)
            throw StructureError("sigma: constructed map is not an involution");
    if (!is_automorphism(g, inv.perm))
        throw StructureError("sigma: constructed involution is not an automorphism");
    return inv;
}

std::vector<Involution> all_involutions(const Graph& g) {
    std::vector<Involution> out;
    out.reserve(g.v());
    for (int v = 0; v < g.v(); v++) out.push_back(sigma(g, v));
    return out;
}

namespace {

// Iterates either all pairs (u,v) or `samples` seeded random pairs.
template <typename Fn>
void for_pairs(int n, const SampleCfg& cfg, Fn&& fn) {
    if (cfg.exhaustive) {
        for (int u = 0; u < n; u++)
            for (int v = 0; v < n; v++) fn(u, v);
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (long long i = 0; i < cfg.samples; i++) fn(d(rng), d(rng));
    }
}

} // namespace

Report verify_pair_identities(const Graph& g, const std::vector<Involution>& sig, const SampleCfg& cfg) {
    if (int(sig.size()) != g.v())
        throw ContractError("verify_pair_identities: need one involution per vertex");
    Report rep;
    const int n = g.v();

    // (i) exhaustive always: quadratic with trivial constants
    Check& c1 = rep.add("pair_symmetry");
    long long viol1 = 0;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (sig[u].perm[v] != sig[v].perm[u]) {
                if (!viol1)
                    c1.fail("pair", std::to_string(u) + "," + std::to_string(v));
                viol1++;
            }
    if (viol1) c1.note("violations", viol1);

    // (ii) conjugation covariance with g drawn from the involution set
    Check& c2 = rep.add("conjugation_covariance");
    long long checked2 = 0, viol2 = 0;
    for_pairs(n, cfg, [&](int gb, int u) {
        const Perm& gp = sig[gb].perm; // g = g^-1 here
        checked2++;
        for (int x = 0; x < n; x++)
            if (gp[sig[u].perm[gp[x]]] != sig[gp[u]].perm[x]) {
                if (!viol2) c2.fail("pair", std::to_string(gb) + "," + std::to_string(u));
                viol2++;
                break;
            }
    });
    c2.note("pairs_checked", checked2);
    if (viol2) c2.note("violations", viol2);

    // (iii) sigma_u sigma_v sigma_u = sigma at the image vertex
    Check& c3 = rep.add("conjugation_special_case");
    long long checked3 = 0, viol3 = 0;
    for_pairs(n, cfg, [&](int u, int v) {
        checked3++;
        const Perm& su = sig[u].perm;
        const Perm& sv = sig[v].perm;
        const Perm& st = sig[su[v]].perm;
        for (int x = 0; x < n; x++)
            if (su[sv[su[x]]] != st[x]) {
                if (!viol3) c3.fail("pair", std::to_string(u) + "," + std::to_string(v));
                viol3++;
                break;
            }
    });
    c3.note("pairs_checked", checked3);
    if (viol3) c3.note("violations", viol3);

    // (iv) sigma_u sigma_v fixed-point-free of order 3
    Check& c4 = rep.add("product_order3_fixed_point_free");
    long long checked4 = 0, viol4 = 0;
    for_pairs(n, cfg, [&](int u, int v) {
        if (u == v) return;
        checked4++;
        const Perm& su = sig[u].perm;
        const Perm& sv = sig[v].perm;
        for (int x = 0; x < n; x++) {
            int y = su[sv[x]];
            if (y == x || su[sv[su[sv[y]]]] != x) {
                if (!viol4) c4.fail("pair", std::to_string(u) + "," + std::to_string(v));
                viol4++;
                break;
            }
        }
    });
    c4.note("pairs_checked", checked4);
    if (viol4) c4.note("violations", viol4);

    // (v) for adjacent u,v: x ~ sigma_u(sigma_v(x)) for every x
    Check& c5 = rep.add("adjacent_shift_stays_adjacent");
    long long checked5 = 0, viol5 = 0;
    for_pairs(n, cfg, [&](int u, int v) {
        if (!g.adjacent(u, v)) return;
        checked5++;
        const Perm& su = sig[u].perm;
        const Perm& sv = sig[v].perm;
        for (int x = 0; x < n; x++)
            if (!g.adjacent(x, su[sv[x]])) {
                if (!viol5) c5.fail("pair", std::to_string(u) + "," + std::to_string(v));
                viol5++;
                break;
            }
    });
    c5.note("adjacent_pairs_checked", checked5);
    if (viol5) c5.note("violations", viol5);

    if (!cfg.exhaustive) {
        rep.checks.front().note("mode", "sampled");
        rep.checks.front().note("seed", (long long)cfg.seed);
    }
    return rep;
}

Report verify_triple_square(const Graph& g, const std::vector<Involution>& sig, const SampleCfg& cfg) {
    if (int(sig.size()) != g.v())
        throw ContractError("verify_triple_square: need one involution per vertex");
    Report rep;
    Check& c = rep.add("triple_square_identity");
    const int n = g.v();
    long long checked = 0, viol = 0;

    auto test = [&](int u, int v, int w) {
        checked++;
        const Perm& su = sig[u].perm;
        const Perm& sv = sig[v].perm;
        const Perm& sw = sig[w].perm;
        for (int x = 0; x < n; x++)
            if (sv[sw[su[sv[sw[su[x]]]]]] != x) {
                if (!viol)
                    c.fail("triple", std::to_string(u) + "," + std::to_string(v) + "," +
                                         std::to_string(w));
                viol++;
                return;
            }
    };

    if (cfg.exhaustive) {
        for (int u = 0; u < n; u++)
            for (int v = 0; v < n; v++)
                for (int w = 0; w < n; w++) test(u, v, w);
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (long long i = 0; i < cfg.samples; i++) test(d(rng), d(rng), d(rng));
        c.note("mode", "sampled");
        c.note("seed", (long long)cfg.seed);
    }
    c.note("triples_checked", checked);
    if (viol) c.note("violations", viol);
    return rep;
}

} // namespace srg
