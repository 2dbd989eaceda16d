#include "srg/euclid.hpp"

#include <algorithm>
#include <map>

#include "srg/errors.hpp"
#include "srg/family.hpp"

namespace srg {

namespace {

Int binom2(const Int& x) { return x < 2 ? Int(0) : x * (x - 1) / 2; }

std::vector<int> sorted_intersection(const Bitset& a, const Bitset& b) {
    std::vector<int> out;
    a.for_each([&](int i) {
        if (b.test(i)) out.push_back(i);
    });
    return out;
}

} // namespace

RepConstants::RepConstants(int n) : n_(n) {
    if (n < 1) throw ContractError("rep_constants: n must be >= 1");
    Int nn(n);
    p_ = rat(-(nn * nn + 2 * nn - 1), nn * nn * (nn + 3));
    q_ = rat(Int(1), nn * (nn + 3));
    if (n >= 2) {
        alpha_ = rat(nn, nn * nn - 1);
        beta_ = rat(Int(1), nn * nn - 1);
        gamma_ = rat(nn, nn - 1);
    }
}

const Rat& RepConstants::alpha() const {
    if (!alpha_) throw DomainError("rep_constants: alpha undefined for n < 2");
    return *alpha_;
}
const Rat& RepConstants::beta() const {
    if (!beta_) throw DomainError("rep_constants: beta undefined for n < 2");
    return *beta_;
}
const Rat& RepConstants::gamma() const {
    if (!gamma_) throw DomainError("rep_constants: gamma undefined for n < 2");
    return *gamma_;
}

NeighborSets neighbor_sets(const Graph& g, int n, int base, int u) {
    if (base < 0 || base >= g.v() || u < 0 || u >= g.v())
        throw ContractError("neighbor_sets: vertex out of range");
    if (u == base || g.adjacent(base, u))
        throw ContractError("neighbor_sets: u must be a non-neighbor of the base");
    NeighborSets s;
    s.base = base;
    s.u = u;
    s.A = sorted_intersection(g.row(u), g.row(base));
    Matching m = neighborhood_matching(g, base);
    for (int a : s.A) s.B.push_back(m.partner[a]);
    std::sort(s.B.begin(), s.B.end());

    Bitset a_set(g.v());
    for (int a : s.A) a_set.set(a);
    for (int w = 0; w < g.v(); w++) {
        if (w == base || w == u || g.adjacent(base, w)) continue;
        int inter = a_set.and_count(g.row(w));
        if (g.adjacent(u, w)) {
            if (inter == 1) s.C.push_back(w);
        } else {
            if (inter == n + 1) s.D.push_back(w);
        }
    }
    return s;
}

RatMatrix gram_of_subset(const Graph& g, int n, const std::vector<int>& subset) {
    RepConstants rc(n);
    const int s = int(subset.size());
    RatMatrix m(s, s);
    for (int i = 0; i < s; i++) {
        m.at(i, i) = 1;
        for (int j = i + 1; j < s; j++) {
            const Rat& val = g.adjacent(subset[i], subset[j]) ? rc.p() : rc.q();
            m.at(i, j) = val;
            m.at(j, i) = val;
        }
    }
    return m;
}

Report two_design_check(const Graph& g, int n) {
    Report rep;
    SrgParams p = family_params(n);
    Spectrum sp = spectrum(p);
    RepConstants rc(n);
    if (int64_t(g.v()) != p.v) {
        rep.add("two_design_vertex_count").fail("detail", "graph size does not match family index");
        return rep;
    }
    Rat v(Int(p.v)), k(Int(p.k)), rest(Int(p.v - p.k - 1));

    Check& sum = rep.add("design_sum_zero");
    Rat total = v * (1 + k * rc.p() + rest * rc.q());
    if (total != 0) sum.fail("value", rat_str(total));
    sum.note("identity", "v(1 + k p + (v-k-1) q) = 0");

    Check& moment = rep.add("design_second_moment");
    Rat lhs = v * (1 + k * rc.p() * rc.p() + rest * rc.q() * rc.q());
    Rat rhs = rat(Int(p.v) * Int(p.v), Int(sp.g));
    if (lhs != rhs) moment.fail("value", rat_str(lhs) + " != " + rat_str(rhs));
    moment.note("second_moment", rat_str(lhs));
    return rep;
}

Rat relation_residual(const Graph& g, int n, int base, int u, const Rat& gamma_shift) {
    RepConstants rc(n);
    NeighborSets s = neighbor_sets(g, n, base, u);
    // coefficient vector over the support, overlaps accumulate
    std::map<int, Rat> coef;
    coef[u] += 1;
    for (int a : s.A) coef[a] += rc.alpha();
    for (int b : s.B) coef[b] += rc.beta();
    coef[base] += rc.gamma() + gamma_shift;

    Rat res(0);
    for (auto& [vi, ci] : coef)
        for (auto& [vj, cj] : coef) {
            if (vi == vj)
                res += ci * cj;
            else
                res += ci * cj * (g.adjacent(vi, vj) ? rc.p() : rc.q());
        }
    return res;
}

Report intersection_adjacency_check(const Graph& g, int n, int base, int u, int w) {
    if (u == w) throw ContractError("intersection_adjacency_check: u and w must differ");
    Report rep;
    Check& c = rep.add("intersection_adjacency");
    if (n == 1) {
        // n+1 = n(n+1) = 2: the count cannot separate edges from non-edges
        c.note("degenerate", "true");
        return rep;
    }
    NeighborSets su = neighbor_sets(g, n, base, u);
    NeighborSets sw = neighbor_sets(g, n, base, w);
    Bitset au(g.v()), aw(g.v()), bw(g.v());
    for (int x : su.A) au.set(x);
    for (int x : sw.A) aw.set(x);
    for (int x : sw.B) bw.set(x);
    long long count = n * (long long)au.and_count(aw) + au.and_count(bw);
    long long expect = g.adjacent(u, w) ? n + 1 : (long long)n * (n + 1);
    if (count != expect)
        c.fail("witness", "u=" + std::to_string(u) + " w=" + std::to_string(w) + " count=" +
                              std::to_string(count) + " expected=" + std::to_string(expect));
    c.note("count", count);
    return rep;
}

IntersectionProfile profile_measure(const Graph& g, int n, int base, int u) {
    NeighborSets s = neighbor_sets(g, n, base, u);
    Bitset a_set(g.v());
    for (int a : s.A) a_set.set(a);

    IntersectionProfile prof;
    prof.m.assign(n + 2, 0);
    for (int w = 0; w < g.v(); w++) {
        if (w == base || w == u) continue;
        if (g.adjacent(base, w) || g.adjacent(u, w)) continue;
        int inter = a_set.and_count(g.row(w));
        if (inter > n + 1)
            throw StructureError("profile_measure: intersection " + std::to_string(inter) +
                                 " exceeds n+1");
        prof.m[inter]++;
    }

    Int nn(n);
    Int r1 = nn * nn * nn * nn + 4 * nn * nn * nn + 2 * nn * nn - 5 * nn - 1;
    Int r2 = nn * (nn * nn - 1) * (nn + 2) * (nn + 2);
    Int r3 = nn * (nn * nn - 1) * (nn + 2) * (nn * nn + nn - 1) / 2;

    Int s0 = 0, s1 = 0, s2 = 0;
    for (int i = 0; i <= n + 1; i++) {
        s0 += long(prof.m[i]);
        s1 += Int(i) * long(prof.m[i]);
        s2 += binom2(Int(i)) * long(prof.m[i]);
    }
    Check& c0 = prof.identities.add("profile_total");
    if (s0 != r1) c0.fail("detail", s0.get_str() + " != " + r1.get_str());
    Check& c1 = prof.identities.add("profile_edge_count");
    if (s1 != r2) c1.fail("detail", s1.get_str() + " != " + r2.get_str());
    Check& c2 = prof.identities.add("profile_triple_count");
    if (s2 != r3) c2.fail("detail", s2.get_str() + " != " + r3.get_str());
    return prof;
}

ProfileSolution profile_solve(int n, const std::vector<long long>& low) {
    if (int(low.size()) != std::max(0, n - 1))
        throw ContractError("profile_solve: need exactly the m_0..m_{n-2} prefix");
    for (long long m : low)
        if (m < 0) throw ContractError("profile_solve: inputs must be nonnegative");

    Int nn(n);
    Int r1 = nn * nn * nn * nn + 4 * nn * nn * nn + 2 * nn * nn - 5 * nn - 1;
    Int r2 = nn * (nn * nn - 1) * (nn + 2) * (nn + 2);
    Int r3 = nn * (nn * nn - 1) * (nn + 2) * (nn * nn + nn - 1) / 2;
    for (int i = 0; i + 2 <= n; i++) {
        r1 -= long(low[i]);
        r2 -= Int(i) * long(low[i]);
        r3 -= binom2(Int(i)) * long(low[i]);
    }

    // 3x3 system in (m_{n-1}, m_n, m_{n+1}) solved by Cramer's rule
    RatMatrix a(3, 3);
    Int cols[3] = {nn - 1, nn, nn + 1};
    for (int j = 0; j < 3; j++) {
        a.at(0, j) = 1;
        a.at(1, j) = Rat(cols[j]);
        a.at(2, j) = Rat(binom2(cols[j]));
    }
    Rat rhs[3] = {Rat(r1), Rat(r2), Rat(r3)};
    Rat det = rat_det(a);
    if (det == 0) throw InternalError("profile_solve: singular counting system");
    Rat sol[3];
    for (int j = 0; j < 3; j++) {
        RatMatrix aj = a;
        for (int i = 0; i < 3; i++) aj.at(i, j) = rhs[i];
        sol[j] = rat_det(aj) / det;
    }

    ProfileSolution out;
    out.feasible = true;
    Int* fields[3] = {&out.m_nm1, &out.m_n, &out.m_np1};
    for (int j = 0; j < 3; j++) {
        if (sol[j].get_den() != 1) out.feasible = false;
        *fields[j] = sol[j].get_num() / sol[j].get_den();
        if (sol[j] < 0) out.feasible = false;
    }
    return out;
}

Report budget_inequality_check(int n) {
    if (n < 2) throw ContractError("budget_inequality_check: n must be >= 2");
    Report rep;
    Check& c = rep.add("budget_inequality_enumeration");
    const Int budget = binom2(Int(n + 1));
    const Int bound = binom2(Int(n));

    long long tuples = 0, equalities = 0;
    bool equality_at_expected = false;
    std::vector<long long> m(std::max(0, n - 1), 0);

    // enumerate all nonnegative tuples with sum C(n-i+1,2) m_i <= C(n+1,2)
    auto conclusion = [&]() {
        Int lhs = 0, weight = 0;
        for (int i = 0; i + 2 <= n; i++) lhs += binom2(Int(n - i)) * long(m[i]);
        (void)weight;
        tuples++;
        if (lhs > bound) {
            if (c.pass) {
                std::string t;
                for (long long x : m) t += std::to_string(x) + ",";
                c.fail("violating_tuple", t);
            }
            return;
        }
        if (lhs == bound) {
            equalities++;
            bool expected = m.empty() ? false : (m[0] == 1);
            for (size_t i = 1; i < m.size(); i++) expected = expected && m[i] == 0;
            if (expected) equality_at_expected = true;
            if (!expected && c.pass) {
                std::string t;
                for (long long x : m) t += std::to_string(x) + ",";
                c.fail("unexpected_equality_tuple", t);
            }
        }
    };
    // depth-first over coordinates with remaining budget
    auto rec = [&](auto&& self, int i, Int used) -> void {
        if (i + 2 > n) {
            conclusion();
            return;
        }
        Int w = binom2(Int(n - i + 1));
        for (Int mi = 0; used + w * mi <= budget; mi++) {
            m[i] = mi.get_si();
            self(self, i + 1, used + w * mi);
        }
        m[i] = 0;
    };
    rec(rec, 0, Int(0));

    if (equalities != 1 || !equality_at_expected)
        c.fail("equality_cases", std::to_string(equalities));
    c.note("tuples_checked", tuples);
    return rep;
}

QuadForm quadform(int n) {
    if (n < 1) throw ContractError("quadform: n must be >= 1");
    RepConstants rc(n);
    const Rat& p = rc.p();
    const Rat& q = rc.q();
    Int nn(n);
    Rat two_m = Rat(2 * nn * (nn + 1)); // |B u C| = 2 n (n+1)

    QuadForm f;
    f.n = n;
    f.a = RatMatrix(3, 3);
    f.a.at(0, 0) = 2 + 2 * q;
    f.a.at(0, 1) = two_m * (p + q);
    f.a.at(0, 2) = 2 * q;
    f.a.at(1, 1) = two_m * (1 + p + 2 * Rat(nn * nn + nn - 1) * q);
    f.a.at(1, 2) = two_m * q;
    f.a.at(2, 2) = q;
    f.a.at(1, 0) = f.a.at(0, 1);
    f.a.at(2, 0) = f.a.at(0, 2);
    f.a.at(2, 1) = f.a.at(1, 2);

    // route 1: fraction-free elimination; route 2: the closed form
    Rat det1 = rat_det(f.a);
    Rat det2 = rat(-8 * (nn + 1) * (nn * nn * nn * nn + 6 * nn * nn * nn + 7 * nn * nn - 6 * nn + 1),
                   nn * nn * nn * (nn + 3) * (nn + 3) * (nn + 3));
    if (det1 != det2)
        throw InternalError("quadform: determinant routes disagree at n=" + std::to_string(n) +
                            ": " + rat_str(det1) + " vs " + rat_str(det2));
    f.det = det1;
    return f;
}

} // namespace srg
