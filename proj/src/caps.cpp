#include "srg/caps.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "srg/errors.hpp"

namespace srg {

namespace {

int pow3i(int d) {
    int p = 1;
    for (int i = 0; i < d; i++) p *= 3;
    return p;
}

int vid_of(const F3Vec& v) {
    int id = 0, w = 1;
    for (F3 t : v) {
        id += t * w;
        w *= 3;
    }
    return id;
}

F3Vec vec_of(int vid, int d) {
    F3Vec v(d);
    for (int i = 0; i < d; i++) {
        v[i] = F3(vid % 3);
        vid /= 3;
    }
    return v;
}

F3Vec vadd(const F3Vec& a, const F3Vec& b) {
    F3Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = f3_add(a[i], b[i]);
    return r;
}

F3Vec vsub(const F3Vec& a, const F3Vec& b) {
    F3Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = f3_sub(a[i], b[i]);
    return r;
}

// vid of the normalized class representative
int norm_vid(const F3Vec& v) { return vid_of(normalize_point(v).t); }

// -1 for the zero vector instead of throwing
int norm_vid_or_zero(const F3Vec& v) {
    if (std::all_of(v.begin(), v.end(), [](F3 t) { return t == 0; })) return -1;
    return norm_vid(v);
}

// normalized representatives in ascending vid order
std::vector<int> proj_point_vids(int d) {
    std::vector<int> out;
    const int q = pow3i(d);
    for (int vid = 1; vid < q; vid++) {
        F3Vec v = vec_of(vid, d);
        if (norm_vid(v) == vid) out.push_back(vid);
    }
    return out;
}

} // namespace

ProjPoint normalize_point(F3Vec v) {
    for (F3 t : v)
        if (t) {
            if (t == 2)
                for (F3& x : v) x = f3_mul(x, 2);
            return ProjPoint{std::move(v)};
        }
    throw ContractError("normalize_point: zero vector has no projective class");
}

Cap::Cap(int vec_dim, std::vector<ProjPoint> pts) : vec_dim_(vec_dim), pts_(std::move(pts)) {
    for (auto& p : pts_) {
        if (int(p.t.size()) != vec_dim) throw ContractError("Cap: point dimension mismatch");
        p = normalize_point(p.t);
    }
    std::sort(pts_.begin(), pts_.end());
    if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
        throw ContractError("Cap: duplicate points");
}

bool Cap::contains(const ProjPoint& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

Cap extract_cap(const Graph& g, const Coordinatization& c) {
    const int v0 = c.v0;
    std::vector<ProjPoint> pts;
    std::vector<char> seen(pow3i(c.m), 0);
    std::vector<int> nb = g.neighbors(v0);
    for (int x : nb) {
        // neighborhood must be closed under coordinate negation
        F3Vec neg(c.m);
        for (int i = 0; i < c.m; i++) neg[i] = f3_neg(c.coords[x][i]);
        int y = c.vertex_at(neg);
        if (y < 0 || !g.adjacent(v0, y))
            throw StructureError("extract_cap: N(v0) is not closed under negation at vertex " +
                                 std::to_string(x));
        ProjPoint p = normalize_point(c.coords[x]);
        int id = vid_of(p.t);
        if (!seen[id]) {
            seen[id] = 1;
            pts.push_back(std::move(p));
        }
    }
    if (2 * pts.size() != nb.size())
        throw StructureError("extract_cap: expected exactly k/2 projective classes");
    return Cap(c.m, std::move(pts));
}

IsCapResult is_cap(const Cap& k) {
    IsCapResult res;
    const int d = k.vec_dim();
    const int q = pow3i(d);
    std::vector<char> in_k(q, 0);
    for (const ProjPoint& p : k.points()) in_k[vid_of(p.t)] = 1;

    Check& cap_chk = res.report.add("cap_no_three_collinear");
    // blocked[x] = x lies on a secant of K (including K's own points' lines)
    std::vector<char> blocked(q, 0);
    bool ok = true;
    const auto& pts = k.points();
    for (size_t i = 0; i < pts.size() && ok; i++)
        for (size_t j = i + 1; j < pts.size(); j++) {
            int t1 = norm_vid(vadd(pts[i].t, pts[j].t));
            int t2 = norm_vid(vsub(pts[i].t, pts[j].t));
            blocked[t1] = 1;
            blocked[t2] = 1;
            if (in_k[t1] || in_k[t2]) {
                int bad = in_k[t1] ? t1 : t2;
                cap_chk.fail("collinear_triple", "points " + std::to_string(vid_of(pts[i].t)) +
                                                     "," + std::to_string(vid_of(pts[j].t)) + "," +
                                                     std::to_string(bad));
                ok = false;
                break;
            }
        }
    res.cap = ok;
    cap_chk.note("points", k.size());

    Check& max_chk = res.report.add("cap_maximality");
    if (ok) {
        // complete the blocked table (the early break above only fires when
        // the cap property already failed)
        long long extensions = 0;
        int first_ext = -1;
        for (int vid : proj_point_vids(d)) {
            if (in_k[vid] || blocked[vid]) continue;
            if (!extensions) first_ext = vid;
            extensions++;
        }
        res.maximal = extensions == 0;
        max_chk.note("maximal", res.maximal ? "true" : "false");
        if (extensions) {
            max_chk.note("extension_points", extensions);
            max_chk.note("first_extension_vid", first_ext);
        }
    } else {
        max_chk.note("maximal", "n/a");
    }
    return res;
}

std::map<int, long long> hyperplane_profile(const Cap& k) {
    const int d = k.vec_dim();
    std::map<int, long long> profile;
    for (int avid : proj_point_vids(d)) {
        F3Vec a = vec_of(avid, d);
        int cnt = 0;
        for (const ProjPoint& p : k.points()) {
            int dot = 0;
            for (int i = 0; i < d; i++) dot += a[i] * p.t[i];
            if (dot % 3 == 0) cnt++;
        }
        profile[cnt]++;
    }
    return profile;
}

Graph cayley_from_cap(const Cap& k) {
    const int d = k.vec_dim();
    const int q = pow3i(d);
    if (q > 100000) throw ContractError("cayley_from_cap: ambient space too large");
    std::vector<char> in_k(q, 0);
    for (const ProjPoint& p : k.points()) in_k[vid_of(p.t)] = 1;

    Graph g(q);
    for (int a = 0; a < q; a++) {
        F3Vec va = vec_of(a, d);
        for (int b = a + 1; b < q; b++) {
            F3Vec diff = vsub(va, vec_of(b, d));
            if (in_k[norm_vid(diff)]) g.add_edge(a, b);
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// cap_equiv: frame backtracking with invariant pruning
// ---------------------------------------------------------------------------

namespace {

// rank-profile tracker: maintains an echelon basis, can test membership of a
// vector in the current span
struct SpanTracker {
    int d;
    std::vector<F3Vec> rows; // echelon rows, pivot column strictly increasing

    explicit SpanTracker(int dim) : d(dim) {}

    // reduce v against rows; returns residue
    F3Vec reduce(F3Vec v) const {
        for (const F3Vec& r : rows) {
            int piv = -1;
            for (int i = 0; i < d; i++)
                if (r[i]) { piv = i; break; }
            if (v[piv]) {
                F3 f = f3_mul(v[piv], f3_inv(r[piv]));
                for (int i = 0; i < d; i++) v[i] = f3_sub(v[i], f3_mul(f, r[i]));
            }
        }
        return v;
    }
    bool in_span(const F3Vec& v) const {
        F3Vec r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](F3 t) { return t == 0; });
    }
    bool add(const F3Vec& v) { // false if dependent
        F3Vec r = reduce(v);
        int piv = -1;
        for (int i = 0; i < d; i++)
            if (r[i]) { piv = i; break; }
        if (piv < 0) return false;
        rows.push_back(r);
        std::sort(rows.begin(), rows.end(), [this](const F3Vec& a, const F3Vec& b) {
            auto pv = [this](const F3Vec& x) {
                for (int i = 0; i < d; i++)
                    if (x[i]) return i;
                return d;
            };
            return pv(a) < pv(b);
        });
        return true;
    }
};

// pair invariant: for points i<j of K, the number of third points r with
// |K cap plane(i,j,r)| = 4 (planes through a secant meeting K again twice)
std::vector<std::vector<int>> plane4_table(const Cap& k) {
    const int n = k.size();
    const int d = k.vec_dim();
    const int q = pow3i(d);
    std::vector<char> in_k(q, 0);
    for (const ProjPoint& p : k.points()) in_k[vid_of(p.t)] = 1;
    const auto& pts = k.points();

    std::vector<std::vector<int>> c4(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            int cnt4 = 0;
            for (int r = 0; r < n; r++) {
                if (r == i || r == j) continue;
                // |K cap plane| out of the 13 plane points: count membership
                // of the 10 points other than pts[i], pts[j], pts[r]
                const F3Vec &a = pts[i].t, &b = pts[j].t, &c = pts[r].t;
                int inside = 3;
                F3Vec ab = vadd(a, b), amb = vsub(a, b);
                F3Vec combos[10] = {ab,
                                    amb,
                                    vadd(a, c),
                                    vsub(a, c),
                                    vadd(b, c),
                                    vsub(b, c),
                                    vadd(ab, c),
                                    vsub(ab, c),
                                    vadd(amb, c),
                                    vsub(amb, c)};
                for (const F3Vec& x : combos) {
                    int nv = norm_vid_or_zero(x); // zero only when K is not a cap
                    if (nv >= 0 && in_k[nv]) inside++;
                }
                if (inside == 4) cnt4++;
            }
            c4[i][j] = cnt4;
            c4[j][i] = cnt4;
        }
    return c4;
}

// the 13 projective classes of the plane spanned by independent a, b, c
std::array<F3Vec, 13> plane_classes(const F3Vec& a, const F3Vec& b, const F3Vec& c) {
    F3Vec ab = vadd(a, b), amb = vsub(a, b);
    return {a,
            b,
            c,
            ab,
            amb,
            vadd(a, c),
            vsub(a, c),
            vadd(b, c),
            vsub(b, c),
            vadd(ab, c),
            vsub(ab, c),
            vadd(amb, c),
            vsub(amb, c)};
}

// Point-map search state. Assignments propagate through the coplanar
// quadruples of K1: once three points of a quadruple have images, the plane
// of those images must meet K2 in exactly four points and the fourth image
// is forced. The trail records assignment order for backtracking.
struct EquivSearch {
    int d, n;
    const Cap *k1, *k2;
    std::vector<int> idx2;                    // vid -> index into K2, or -1
    std::vector<std::array<int, 4>> quads;    // coplanar 4-sets of K1 points
    std::vector<std::vector<int>> quads_of;   // K1 point -> quad ids
    std::vector<std::vector<int>> c4_1, c4_2; // pair invariants
    std::vector<std::vector<int>> class1, class2;
    std::vector<int> map12;
    std::vector<char> used2;
    std::vector<int> trail;
    long long nodes = 0;

    EquivSearch(const Cap& a, const Cap& b) : d(a.vec_dim()), n(a.size()), k1(&a), k2(&b) {
        idx2.assign(pow3i(d), -1);
        for (int i = 0; i < n; i++) idx2[vid_of(b.points()[i].t)] = i;
        c4_1 = plane4_table(a);
        c4_2 = plane4_table(b);
        auto point_class = [this](const std::vector<std::vector<int>>& c4, int i) {
            std::vector<int> row;
            row.reserve(n - 1);
            for (int j = 0; j < n; j++)
                if (j != i) row.push_back(c4[i][j]);
            std::sort(row.begin(), row.end());
            return row;
        };
        class1.resize(n);
        class2.resize(n);
        for (int i = 0; i < n; i++) {
            class1[i] = point_class(c4_1, i);
            class2[i] = point_class(c4_2, i);
        }
        build_quads();
        map12.assign(n, -1);
        used2.assign(n, 0);
    }

    // K1-side coplanar quadruples (planes meeting K1 in four points)
    void build_quads() {
        std::vector<char> in_k1(pow3i(d), 0);
        std::vector<int> idx1(pow3i(d), -1);
        for (int i = 0; i < n; i++) {
            in_k1[vid_of(k1->points()[i].t)] = 1;
            idx1[vid_of(k1->points()[i].t)] = i;
        }
        std::vector<std::array<int, 4>> found;
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
                for (int r = j + 1; r < n; r++) {
                    SpanTracker span(d);
                    span.add(k1->points()[i].t);
                    span.add(k1->points()[j].t);
                    if (!span.add(k1->points()[r].t)) continue; // dependent triple
                    int fourth = -1, members = 3;
                    for (const F3Vec& x : plane_classes(k1->points()[i].t, k1->points()[j].t,
                                                        k1->points()[r].t)) {
                        int nv = norm_vid_or_zero(x);
                        if (nv < 0 || !in_k1[nv]) continue;
                        int id = idx1[nv];
                        if (id == i || id == j || id == r) continue;
                        fourth = id;
                        members++;
                    }
                    if (members == 4) {
                        std::array<int, 4> qd = {i, j, r, fourth};
                        std::sort(qd.begin(), qd.end());
                        found.push_back(qd);
                    }
                }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        quads = std::move(found);
        quads_of.assign(n, {});
        for (size_t qi = 0; qi < quads.size(); qi++)
            for (int x : quads[qi]) quads_of[x].push_back(int(qi));
    }

    // K2 members of the plane spanned by three image points; returns false
    // when the images are dependent or the section has the wrong size
    bool image_plane(int c0, int c1, int c2, std::array<int, 4>& members, int& count) const {
        SpanTracker span(d);
        span.add(k2->points()[c0].t);
        span.add(k2->points()[c1].t);
        if (!span.add(k2->points()[c2].t)) return false;
        count = 0;
        for (const F3Vec& x :
             plane_classes(k2->points()[c0].t, k2->points()[c1].t, k2->points()[c2].t)) {
            int nv = norm_vid_or_zero(x);
            if (nv < 0) continue;
            int id = idx2[nv];
            if (id < 0) continue;
            if (count < 4) members[count] = id;
            count++;
        }
        return true;
    }

    // assign i -> c and run propagation; false on contradiction (partial
    // assignments stay on the trail for the caller to unwind)
    bool assign(int i, int c) {
        if (map12[i] == c) return true;
        if (map12[i] != -1 || used2[c]) return false;
        if (class2[c] != class1[i]) return false;
        map12[i] = c;
        used2[c] = 1;
        trail.push_back(i);
        for (int qi : quads_of[i]) {
            const auto& qd = quads[qi];
            int mapped = 0, missing = -1;
            for (int x : qd)
                if (map12[x] >= 0)
                    mapped++;
                else
                    missing = x;
            if (mapped < 3) continue;
            int im[4], nim = 0;
            for (int x : qd)
                if (map12[x] >= 0 && nim < 3) im[nim++] = map12[x];
            std::array<int, 4> members;
            int count = 0;
            if (!image_plane(im[0], im[1], im[2], members, count)) return false;
            if (count != 4) return false;
            int fourth = -1;
            for (int t = 0; t < 4; t++)
                if (members[t] != im[0] && members[t] != im[1] && members[t] != im[2])
                    fourth = members[t];
            if (fourth < 0) return false;
            if (mapped == 4) {
                int last = -1;
                for (int x : qd)
                    if (map12[x] != im[0] && map12[x] != im[1] && map12[x] != im[2])
                        last = map12[x];
                if (last != fourth) return false;
            } else {
                if (!assign(missing, fourth)) return false;
            }
        }
        return true;
    }

    void unwind(size_t mark) {
        while (trail.size() > mark) {
            int i = trail.back();
            trail.pop_back();
            used2[map12[i]] = 0;
            map12[i] = -1;
        }
    }
};

} // namespace

EquivResult cap_equiv(const Cap& k1, const Cap& k2) {
    if (k1.vec_dim() != k2.vec_dim())
        throw ContractError("cap_equiv: ambient dimensions differ");
    if (k1.size() != k2.size()) throw ContractError("cap_equiv: cardinalities differ");

    EquivResult res;
    const int d = k1.vec_dim();
    const int n = k1.size();
    if (n == 0) {
        res.witness = F3Matrix::identity(d);
        return res;
    }

    EquivSearch search(k1, k2);

    // frame of K1: start with three points of one coplanar quadruple when
    // available, so the propagation engages right after the second branch
    // level; complete to an independent d-subset lexicographically
    std::vector<int> frame;
    {
        SpanTracker span(d);
        if (!search.quads.empty() && d >= 3) {
            const auto& qd = search.quads.front();
            for (int t = 0; t < 3; t++)
                if (span.add(k1.points()[qd[t]].t)) frame.push_back(qd[t]);
            if (int(frame.size()) < 3) { // dependent quad points: not a cap
                frame.clear();
                span = SpanTracker(d);
            }
        }
        for (int i = 0; i < n && int(frame.size()) < d; i++) {
            if (std::find(frame.begin(), frame.end(), i) != frame.end()) continue;
            if (span.add(k1.points()[i].t)) frame.push_back(i);
        }
    }
    if (int(frame.size()) < d) return res; // K1 does not span; no GL witness searched

    const int q = pow3i(d);
    std::vector<char> in_k2(q, 0);
    for (const ProjPoint& p : k2.points()) in_k2[vid_of(p.t)] = 1;

    // assemble g from frame images and a scalar pattern, then verify fully;
    // the basis images pin g only up to per-column scalars
    auto try_scalars = [&]() -> std::optional<F3Matrix> {
        F3Matrix bmat(d, d);
        for (int t = 0; t < d; t++)
            for (int i = 0; i < d; i++) bmat.at(i, t) = k1.points()[frame[t]].t[i];
        auto binv = f3_invert(bmat);
        if (!binv) return std::nullopt;
        for (int mask = 0; mask < (1 << (d - 1)); mask++) {
            F3Matrix cmat(d, d);
            for (int t = 0; t < d; t++) {
                F3 lambda = (t > 0 && (mask >> (t - 1)) & 1) ? F3(2) : F3(1);
                int image = search.map12[frame[t]];
                for (int i = 0; i < d; i++)
                    cmat.at(i, t) = f3_mul(lambda, k2.points()[image].t[i]);
            }
            F3Matrix g = cmat.mul(*binv);
            bool good = true;
            for (const ProjPoint& p : k1.points()) {
                F3Vec img = g.apply(p.t);
                bool zero = std::all_of(img.begin(), img.end(), [](F3 t) { return t == 0; });
                if (zero || !in_k2[norm_vid(img)]) {
                    good = false;
                    break;
                }
            }
            if (good) return g;
        }
        return std::nullopt;
    };

    // branch over frame images; propagation usually forces the rest of the
    // point map after two or three choices
    auto dfs = [&](auto&& self, int t) -> std::optional<F3Matrix> {
        if (t == d) return try_scalars();
        int b_t = frame[t];
        if (search.map12[b_t] >= 0) return self(self, t + 1); // forced earlier
        for (int cand = 0; cand < n; cand++) {
            if (search.used2[cand]) continue;
            res.nodes++;
            bool pair_ok = true;
            for (int s = 0; s < t && pair_ok; s++) {
                int is = search.map12[frame[s]];
                if (search.c4_2[is][cand] != search.c4_1[frame[s]][b_t]) pair_ok = false;
            }
            if (!pair_ok) continue;
            size_t mark = search.trail.size();
            if (search.assign(b_t, cand)) {
                auto found = self(self, t + 1);
                if (found) return found;
            }
            search.unwind(mark);
        }
        return std::nullopt;
    };

    auto witness = dfs(dfs, 0);
    res.nodes += search.nodes;
    if (!witness) return res;

    // re-verify before returning: invertible and maps K1 exactly onto K2
    if (!f3_invert(*witness)) throw InternalError("cap_equiv: witness not invertible");
    std::vector<ProjPoint> mapped;
    for (const ProjPoint& p : k1.points()) mapped.push_back(normalize_point(witness->apply(p.t)));
    Cap mapped_cap(d, std::move(mapped)); // ctor rejects duplicate images
    if (!(mapped_cap == k2)) throw InternalError("cap_equiv: witness does not map K1 onto K2");
    res.witness = std::move(*witness);
    return res;
}

// ---------------------------------------------------------------------------
// cap_search: Singer-orbit unions, then randomized greedy + backtracking
// ---------------------------------------------------------------------------

namespace {

// multiplication tables of GF(3^d) built from a primitive polynomial found
// at runtime (smallest monic primitive poly in vid order)
struct SingerField {
    int d, q;              // q = 3^d
    std::vector<F3Vec> pw; // pw[i] = x^i mod f, i < q-1
    std::vector<int> log;  // vid -> exponent, -1 for 0

    explicit SingerField(int dim) : d(dim), q(pow3i(dim)) {
        F3Vec f = find_primitive(dim);
        pw.resize(q - 1);
        log.assign(q, -1);
        F3Vec cur(d, 0);
        cur[0] = 1;
        for (int i = 0; i < q - 1; i++) {
            pw[i] = cur;
            log[vid_of(cur)] = i;
            cur = mul_by_x(cur, f);
        }
    }

    static F3Vec mul_by_x(const F3Vec& v, const F3Vec& f) {
        int d = int(v.size());
        F3Vec r(d, 0);
        for (int i = 0; i + 1 < d; i++) r[i + 1] = v[i];
        F3 top = v[d - 1];
        if (top)
            for (int i = 0; i < d; i++) r[i] = f3_sub(r[i], f3_mul(top, f[i]));
        return r;
    }

    // coefficients (low first) of a monic polynomial of degree dim that is
    // irreducible (no divisor of degree <= dim/2) and primitive (x generates
    // the multiplicative group)
    static F3Vec find_primitive(int dim) {
        const int q1 = pow3i(dim) - 1;
        std::vector<int> primes;
        {
            int m = q1;
            for (int p = 2; p * p <= m; p++)
                while (m % p == 0) {
                    if (primes.empty() || primes.back() != p) primes.push_back(p);
                    m /= p;
                }
            if (m > 1) primes.push_back(m);
        }
        for (int code = 1; code < pow3i(dim); code++) {
            F3Vec f = vec_of(code, dim); // low coefficients; leading term is 1
            if (f[0] == 0) continue;
            if (!poly_irreducible(f, dim)) continue;
            if (!poly_primitive(f, dim, q1, primes)) continue;
            return f;
        }
        throw InternalError("SingerField: no primitive polynomial found");
    }

    static F3Vec poly_pow_x(long long e, const F3Vec& f, int dim) {
        // x^e mod f by square and multiply over F_3[x]
        auto mulmod = [&](const F3Vec& a, const F3Vec& b) {
            std::vector<int> t(2 * dim, 0);
            for (int i = 0; i < dim; i++)
                if (a[i])
                    for (int j = 0; j < dim; j++) t[i + j] = (t[i + j] + a[i] * b[j]) % 3;
            for (int i = 2 * dim - 1; i >= dim; i--) {
                int c = t[i];
                if (!c) continue;
                t[i] = 0;
                for (int j = 0; j < dim; j++)
                    t[i - dim + j] = ((t[i - dim + j] - c * f[j]) % 3 + 3) % 3;
            }
            F3Vec r(dim);
            for (int i = 0; i < dim; i++) r[i] = F3(t[i]);
            return r;
        };
        F3Vec base(dim, 0), acc(dim, 0);
        if (dim == 1) {
            // x reduces to -f[0]
            base[0] = f3_neg(f[0]);
        } else {
            base[1] = 1;
        }
        acc[0] = 1;
        while (e) {
            if (e & 1) acc = mulmod(acc, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return acc;
    }

    static bool poly_irreducible(const F3Vec& f, int dim) {
        // trial division by every monic polynomial of degree 1..dim/2
        for (int deg = 1; 2 * deg <= dim; deg++) {
            for (int code = 0; code < pow3i(deg); code++) {
                std::vector<int> div(deg + 1);
                for (int i = 0; i < deg; i++) div[i] = (code / pow3i(i)) % 3;
                div[deg] = 1;
                std::vector<int> rem(dim + 1);
                for (int i = 0; i < dim; i++) rem[i] = f[i];
                rem[dim] = 1;
                for (int i = dim; i >= deg; i--) {
                    int c = rem[i];
                    if (!c) continue;
                    for (int j = 0; j <= deg; j++)
                        rem[i - deg + j] = ((rem[i - deg + j] - c * div[j]) % 3 + 3) % 3;
                }
                bool zero = true;
                for (int i = 0; i < deg; i++) zero = zero && rem[i] == 0;
                if (zero) return false;
            }
        }
        return true;
    }

    static bool poly_primitive(const F3Vec& f, int dim, int q1, const std::vector<int>& primes) {
        auto is_one = [](const F3Vec& v) {
            if (v[0] != 1) return false;
            for (size_t i = 1; i < v.size(); i++)
                if (v[i]) return false;
            return true;
        };
        if (!is_one(poly_pow_x(q1, f, dim))) return false;
        for (int p : primes)
            if (is_one(poly_pow_x(q1 / p, f, dim))) return false;
        return true;
    }
};

struct LineTable {
    int d, q;
    std::vector<int> point_vids;
    std::vector<int> pid; // vid -> index into point_vids, -1 otherwise

    explicit LineTable(int dim) : d(dim), q(pow3i(dim)) {
        point_vids = proj_point_vids(d);
        pid.assign(q, -1);
        for (size_t i = 0; i < point_vids.size(); i++) pid[point_vids[i]] = int(i);
    }
    int np() const { return int(point_vids.size()); }

    // pids of the two remaining points on the line through distinct points
    std::pair<int, int> others(int vid_a, int vid_b) const {
        F3Vec a = vec_of(vid_a, d), b = vec_of(vid_b, d);
        return {pid[norm_vid(vadd(a, b))], pid[norm_vid(vsub(a, b))]};
    }
};

// test whether a union of chosen orbits stays a cap when adding `orb`
bool orbit_compatible(const LineTable& lt, const std::vector<char>& in_s,
                      const std::vector<int>& chosen_pts, const std::vector<int>& orb) {
    for (int p : orb)
        if (in_s[p]) return false;
    // internal pairs of the new orbit, against the union
    for (size_t i = 0; i < orb.size(); i++) {
        for (size_t j = i + 1; j < orb.size(); j++) {
            auto [t1, t2] = lt.others(lt.point_vids[orb[i]], lt.point_vids[orb[j]]);
            if (in_s[t1] || in_s[t2]) return false;
            // third point inside the new orbit itself
            for (size_t l = 0; l < orb.size(); l++)
                if (orb[l] == t1 || orb[l] == t2) return false;
        }
        for (int p2 : chosen_pts) {
            auto [t1, t2] = lt.others(lt.point_vids[orb[i]], lt.point_vids[p2]);
            if (in_s[t1] || in_s[t2]) return false;
            for (size_t l = 0; l < orb.size(); l++)
                if (orb[l] == t1 || orb[l] == t2) return false;
        }
    }
    return true;
}

std::optional<Cap> singer_orbit_search(int d, int target, const LineTable& lt, long long& nodes,
                                       long long budget, std::string& strategy) {
    const int np = lt.np();
    SingerField field(d);

    // candidate projective orbit sizes: divisors of both target and np,
    // larger first
    std::vector<int> sizes;
    for (int o = np; o >= 2; o--)
        if (np % o == 0 && target % o == 0) sizes.push_back(o);

    for (int o : sizes) {
        // orbits of multiplication by x^(np/o)
        int step = np / o;
        std::vector<int> orbit_of(np, -1);
        std::vector<std::vector<int>> orbits;
        for (int i = 0; i < np; i++) {
            if (orbit_of[i] >= 0) continue;
            int oi = int(orbits.size());
            orbits.push_back({});
            int cur_vid = lt.point_vids[i];
            while (true) {
                int p = lt.pid[cur_vid];
                if (orbit_of[p] >= 0) break;
                orbit_of[p] = oi;
                orbits[oi].push_back(p);
                int e = field.log[cur_vid];
                cur_vid = norm_vid(field.pw[(e + step) % (field.q - 1)]);
            }
        }
        bool uniform = std::all_of(orbits.begin(), orbits.end(),
                                   [o](const std::vector<int>& ob) { return int(ob.size()) == o; });
        if (!uniform) continue;

        const int need = target / o;
        std::vector<int> chosen_orbits;
        std::vector<int> chosen_pts;
        std::vector<char> in_s(np, 0);
        std::optional<Cap> found;

        auto dfs = [&](auto&& self, int start) -> bool {
            if (int(chosen_orbits.size()) == need) {
                std::vector<ProjPoint> pts;
                for (int p : chosen_pts) pts.push_back(ProjPoint{vec_of(lt.point_vids[p], d)});
                found = Cap(d, std::move(pts));
                return true;
            }
            for (int oi = start; oi < int(orbits.size()); oi++) {
                if (++nodes > budget) return false;
                if (!orbit_compatible(lt, in_s, chosen_pts, orbits[oi])) continue;
                chosen_orbits.push_back(oi);
                for (int p : orbits[oi]) {
                    in_s[p] = 1;
                    chosen_pts.push_back(p);
                }
                if (self(self, oi + 1)) return true;
                for (int p : orbits[oi]) in_s[p] = 0;
                chosen_pts.resize(chosen_pts.size() - orbits[oi].size());
                chosen_orbits.pop_back();
            }
            return false;
        };
        if (dfs(dfs, 0) && found) {
            strategy = "singer-orbit(o=" + std::to_string(o) + ")";
            return found;
        }
        if (nodes > budget) return std::nullopt;
    }
    return std::nullopt;
}

// seeded greedy descent + full depth-first backtracking over a shuffled
// point order; blocked counters are incremental and exact
std::optional<Cap> greedy_dfs_search(int d, int target, const LineTable& lt, uint64_t seed,
                                     long long& nodes, long long budget, bool& exhausted) {
    const int np = lt.np();
    std::vector<int> order(np);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<int> block(np, 0); // # secants of the chosen set covering each point
    std::vector<int> chosen;
    std::optional<Cap> found;
    exhausted = true;

    auto place = [&](int p, int delta) {
        for (int c : chosen) {
            if (c == p) continue;
            auto [t1, t2] = lt.others(lt.point_vids[p], lt.point_vids[c]);
            block[t1] += delta;
            block[t2] += delta;
        }
    };

    auto dfs = [&](auto&& self, int idx) -> bool {
        if (int(chosen.size()) == target) {
            std::vector<ProjPoint> pts;
            for (int p : chosen) pts.push_back(ProjPoint{vec_of(lt.point_vids[p], d)});
            found = Cap(d, std::move(pts));
            return true;
        }
        int need = target - int(chosen.size());
        for (int i = idx; i <= np - need; i++) {
            int p = order[i];
            if (block[p]) continue;
            if (++nodes > budget) {
                exhausted = false;
                return false;
            }
            chosen.push_back(p);
            place(p, +1);
            if (self(self, i + 1)) return true;
            place(p, -1);
            chosen.pop_back();
            if (!exhausted) return false;
        }
        return false;
    };
    dfs(dfs, 0);
    return found;
}

} // namespace

CapSearchResult cap_search(int proj_dim, int target, uint64_t seed, long long node_budget) {
    if (proj_dim < 1) throw ContractError("cap_search: projective dimension must be >= 1");
    if (target < 1) throw ContractError("cap_search: target must be >= 1");
    const int d = proj_dim + 1;

    CapSearchResult res;
    res.seed = seed;
    LineTable lt(d);
    if (target > lt.np()) return res;

    // trivial targets need no search
    if (target <= 2) {
        std::vector<ProjPoint> pts;
        pts.push_back(ProjPoint{vec_of(lt.point_vids[0], d)});
        if (target == 2) pts.push_back(ProjPoint{vec_of(lt.point_vids[1], d)});
        res.cap = Cap(d, std::move(pts));
        res.strategy = "direct";
        return res;
    }

    res.cap = singer_orbit_search(d, target, lt, res.nodes, node_budget, res.strategy);
    if (res.cap) return res;

    const int attempts = 4;
    for (int a = 0; a < attempts; a++) {
        bool exhausted = false;
        long long attempt_budget = std::min(node_budget, res.nodes + node_budget / attempts);
        auto cap = greedy_dfs_search(d, target, lt, seed + a, res.nodes, attempt_budget, exhausted);
        if (cap) {
            res.cap = std::move(cap);
            res.seed = seed + a;
            res.strategy = "greedy-dfs";
            return res;
        }
        if (exhausted) break; // complete search saw the whole tree: no such cap
    }
    return res;
}

const Cap& reference_hill_cap() {
    static const Cap cap = [] {
        CapSearchResult r = cap_search(5, 56, 0);
        if (!r.cap) throw InternalError("reference_hill_cap: deterministic search failed");
        return *r.cap;
    }();
    return cap;
}

// ---------------------------------------------------------------------------
// file format
// ---------------------------------------------------------------------------

Cap read_cap(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty cap file", 1);
    int d = 0;
    long long count = -1;
    {
        std::istringstream hs(line);
        std::string tag, df, of, nf;
        hs >> tag >> df >> of >> nf;
        if (tag != "cap" || df.rfind("dim=", 0) != 0 || of != "order=3" || nf.rfind("n=", 0) != 0)
            throw ParseError("header must be 'cap dim=<d> order=3 n=<count>'", 1);
        try {
            d = std::stoi(df.substr(4));
            count = std::stoll(nf.substr(2));
        } catch (const std::exception&) {
            throw ParseError("bad integer in cap header", 1);
        }
        std::string extra;
        if (hs >> extra) throw ParseError("trailing tokens in cap header", 1);
    }
    if (d < 1 || d > 16) throw ParseError("cap dimension out of range", 1);
    std::vector<ProjPoint> pts;
    long line_no = 1;
    std::string prev;
    while (std::getline(in, line)) {
        line_no++;
        if (int(line.size()) != d) throw ParseError("point line must have exactly dim digits", line_no);
        F3Vec v(d);
        for (int i = 0; i < d; i++) {
            if (line[i] < '0' || line[i] > '2') throw ParseError("digits must be 0, 1 or 2", line_no);
            v[i] = F3(line[i] - '0');
        }
        ProjPoint p = normalize_point(v);
        if (p.t != v) throw ParseError("point is not normalized", line_no);
        if (!prev.empty() && line <= prev) throw ParseError("points out of order or duplicated", line_no);
        prev = line;
        pts.push_back(std::move(p));
    }
    if (count != (long long)pts.size())
        throw ParseError("header count does not match point lines", line_no);
    return Cap(d, std::move(pts));
}

Cap read_cap_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_cap(in);
}

void write_cap(const Cap& k, std::ostream& out) {
    out << "cap dim=" << k.vec_dim() << " order=3 n=" << k.size() << "\n";
    for (const ProjPoint& p : k.points()) {
        for (F3 t : p.t) out << char('0' + t);
        out << "\n";
    }
}

void write_cap_file(const Cap& k, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_cap(k, out);
}

} // namespace srg
