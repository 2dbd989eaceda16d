#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>
#include <sstream>

#include "srg/caps.hpp"
#include "srg/errors.hpp"
#include "srg/family.hpp"

using namespace srg;

namespace {

const Graph& bh() {
    static const Graph g = build_brouwer_haemers();
    return g;
}

const Coordinatization& bh_coords() {
    static const Coordinatization c = [] {
        auto sig = all_involutions(bh());
        return coordinatize(bh(), sig, 0);
    }();
    return c;
}

const Cap& bh_cap() {
    static const Cap k = extract_cap(bh(), bh_coords());
    return k;
}

// identity coordinatization of F_3^d: vertex index is the base-3 encoding
Coordinatization identity_coords(int d) {
    Coordinatization c;
    c.v0 = 0;
    c.m = d;
    int q = 1;
    for (int i = 0; i < d; i++) q *= 3;
    c.vertex_of.resize(q);
    for (int x = 0; x < q; x++) {
        F3Vec v(d);
        int t = x;
        for (int i = 0; i < d; i++) {
            v[i] = F3(t % 3);
            t /= 3;
        }
        c.coords.push_back(v);
        c.vertex_of[x] = x;
    }
    return c;
}

// exhaustive: all points of PG(2,3), used for the independent max-cap oracle
std::vector<F3Vec> pg2_points() {
    std::vector<F3Vec> pts;
    for (int vid = 1; vid < 27; vid++) {
        F3Vec v = {F3(vid % 3), F3((vid / 3) % 3), F3((vid / 9) % 3)};
        ProjPoint p = normalize_point(v);
        if (p.t == v) pts.push_back(v);
    }
    return pts;
}

bool collinear_free(const std::vector<F3Vec>& pts, const std::vector<int>& idx) {
    for (size_t a = 0; a < idx.size(); a++)
        for (size_t b = a + 1; b < idx.size(); b++)
            for (size_t c = b + 1; c < idx.size(); c++) {
                // three points are collinear iff some +-combination vanishes
                const F3Vec &x = pts[idx[a]], &y = pts[idx[b]], &z = pts[idx[c]];
                for (int sy = 1; sy <= 2; sy++)
                    for (int sz = 1; sz <= 2; sz++) {
                        bool zero = true;
                        for (int i = 0; i < 3; i++)
                            if ((x[i] + sy * y[i] + sz * z[i]) % 3) zero = false;
                        if (zero) return false;
                    }
            }
    return true;
}

} // namespace

TEST_CASE("normalize_point fixes the first nonzero coordinate to 1") {
    CHECK(normalize_point({0, 2, 1}).t == F3Vec{0, 1, 2});
    CHECK(normalize_point({1, 2, 0}).t == F3Vec{1, 2, 0});
    CHECK_THROWS_AS(normalize_point({0, 0, 0}), ContractError);
}

TEST_CASE("extracted caps have size k/2 in their expected spaces") {
    // 81-vertex graph: 10 points in PG(3,3)
    CHECK(bh_cap().vec_dim() == 4);
    CHECK(bh_cap().size() == 10);

    // rook graph: 2 points in PG(1,3)
    Graph l33 = build_l33();
    auto sig = all_involutions(l33);
    Coordinatization c = coordinatize(l33, sig, 0);
    Cap k2 = extract_cap(l33, c);
    CHECK(k2.vec_dim() == 2);
    CHECK(k2.size() == 2);
    IsCapResult r2 = is_cap(k2);
    CHECK(r2.cap);
    CHECK(r2.maximal); // a third point of PG(1,3) always completes a line
}

TEST_CASE("the extracted 10-point set is a maximal cap") {
    IsCapResult r = is_cap(bh_cap());
    CHECK(r.cap);
    CHECK(r.maximal);
    CHECK(r.report.all_pass());
}

TEST_CASE("three collinear points are rejected") {
    // [1,0,0], [0,1,0], [1,1,0] lie on one line
    std::vector<ProjPoint> pts = {ProjPoint{{1, 0, 0}}, ProjPoint{{0, 1, 0}},
                                  ProjPoint{{1, 1, 0}}};
    IsCapResult r = is_cap(Cap(3, pts));
    CHECK_FALSE(r.cap);
    CHECK_FALSE(r.report.all_pass());
}

TEST_CASE("hyperplane profile of the 10-cap has exactly two section sizes") {
    auto prof = hyperplane_profile(bh_cap());
    CHECK(prof.size() == 2);
    long long total = 0, points_on = 0, pairs_on = 0;
    for (auto [size, count] : prof) {
        total += count;
        points_on += size * count;
        pairs_on += size * (size - 1) / 2 * count;
    }
    CHECK(total == 40);              // hyperplanes of PG(3,3)
    CHECK(points_on == 10 * 13);     // each point lies on 13 hyperplanes
    CHECK(pairs_on == 45 * 4);       // each pair lies on 4 hyperplanes
}

TEST_CASE("hyperplane profile of the 2-cap uses sizes 0 and 1 only") {
    Graph l33 = build_l33();
    auto sig = all_involutions(l33);
    Cap k = extract_cap(l33, coordinatize(l33, sig, 0));
    auto prof = hyperplane_profile(k);
    for (auto [size, count] : prof) CHECK(size <= 1);
    CHECK(prof.size() == 2);
}

TEST_CASE("cayley_from_cap rebuilds a strongly regular graph from the 10-cap") {
    Graph g = cayley_from_cap(bh_cap());
    CHECK(g.v() == 81);
    CHECK(verify_srg(g, family_params(2)).all_pass());
}

TEST_CASE("extract_cap inverts cayley_from_cap under the identity labeling") {
    Cap k = bh_cap();
    Graph g = cayley_from_cap(k);
    Cap back = extract_cap(g, identity_coords(4));
    CHECK(back == k);
}

TEST_CASE("exhaustive oracle: max cap size in PG(2,3) is exactly 4") {
    auto pts = pg2_points();
    REQUIRE(pts.size() == 13);
    // brute force all 4- and 5-subsets
    long long caps4 = 0;
    bool cap5 = false;
    std::vector<int> idx4(4), idx5(5);
    for (int a = 0; a < 13; a++)
        for (int b = a + 1; b < 13; b++)
            for (int c = b + 1; c < 13; c++)
                for (int d = c + 1; d < 13; d++) {
                    if (collinear_free(pts, {a, b, c, d})) caps4++;
                    for (int e = d + 1; e < 13; e++)
                        if (collinear_free(pts, {a, b, c, d, e})) cap5 = true;
                }
    CHECK(caps4 > 0);
    CHECK_FALSE(cap5);

    // the search must agree with the oracle on both counts
    CapSearchResult hit = cap_search(2, 4, 0);
    REQUIRE(hit.cap.has_value());
    CHECK(is_cap(*hit.cap).cap);
    CHECK(hit.cap->size() == 4);

    CapSearchResult miss = cap_search(2, 5, 0);
    CHECK_FALSE(miss.cap.has_value());
}

TEST_CASE("cap_search finds a 10-cap of PG(3,3) equivalent to the extracted one") {
    CapSearchResult r = cap_search(3, 10, 0);
    REQUIRE(r.cap.has_value());
    CHECK(is_cap(*r.cap).cap);
    EquivResult eq = cap_equiv(*r.cap, bh_cap());
    CHECK(eq.witness.has_value());
}

TEST_CASE("cap_search is deterministic for a fixed seed") {
    CapSearchResult a = cap_search(3, 10, 5);
    CapSearchResult b = cap_search(3, 10, 5);
    REQUIRE(a.cap.has_value());
    REQUIRE(b.cap.has_value());
    CHECK(*a.cap == *b.cap);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("cap_equiv finds the identity on equal caps") {
    EquivResult eq = cap_equiv(bh_cap(), bh_cap());
    REQUIRE(eq.witness.has_value());
    // witness need not be the identity matrix, only a set stabilizer
    for (const ProjPoint& p : bh_cap().points())
        CHECK(bh_cap().contains(normalize_point(eq.witness->apply(p.t))));
}

TEST_CASE("cap_equiv recovers equivalence after a random linear relabeling") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> trit(0, 2);
    F3Matrix g(4, 4);
    do {
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 4; j++) g.at(i, j) = F3(trit(rng));
    } while (!f3_invert(g));
    std::vector<ProjPoint> mapped;
    for (const ProjPoint& p : bh_cap().points()) mapped.push_back(normalize_point(g.apply(p.t)));
    Cap moved(4, mapped);

    EquivResult eq = cap_equiv(bh_cap(), moved);
    REQUIRE(eq.witness.has_value());

    // symmetry: the inverse witness maps back
    auto inv = f3_invert(*eq.witness);
    REQUIRE(inv.has_value());
    for (const ProjPoint& p : moved.points())
        CHECK(bh_cap().contains(normalize_point(inv->apply(p.t))));
}

TEST_CASE("cap_equiv contract errors") {
    CHECK_THROWS_AS(cap_equiv(bh_cap(), reference_hill_cap()), ContractError);
    CapSearchResult four = cap_search(3, 4, 0);
    REQUIRE(four.cap.has_value());
    CHECK_THROWS_AS(cap_equiv(bh_cap(), *four.cap), ContractError);
}

TEST_CASE("the bundled 56-point cap is a maximal two-weight cap") {
    const Cap& hill = reference_hill_cap();
    CHECK(hill.vec_dim() == 6);
    CHECK(hill.size() == 56);

    IsCapResult r = is_cap(hill);
    CHECK(r.cap);
    CHECK(r.maximal);

    auto prof = hyperplane_profile(hill);
    CHECK(prof.size() == 2);
    long long total = 0, points_on = 0, pairs_on = 0;
    for (auto [size, count] : prof) {
        total += count;
        points_on += size * count;
        pairs_on += size * (size - 1) / 2 * count;
    }
    CHECK(total == 364);
    CHECK(points_on == 56 * 121); // hyperplanes through a point of PG(5,3)
    CHECK(pairs_on == 1540 * 40); // hyperplanes through a line
}

TEST_CASE("no witness against a non-cap point set of the same size") {
    // 56 lexicographically first projective points: loaded with lines
    std::vector<ProjPoint> pts;
    for (int vid = 1; vid < 729 && int(pts.size()) < 56; vid++) {
        F3Vec v(6);
        int t = vid;
        for (int i = 0; i < 6; i++) {
            v[i] = F3(t % 3);
            t /= 3;
        }
        ProjPoint p = normalize_point(v);
        if (p.t == v) pts.push_back(p);
    }
    Cap junk(6, pts);
    CHECK_FALSE(is_cap(junk).cap);
    EquivResult eq = cap_equiv(reference_hill_cap(), junk);
    CHECK_FALSE(eq.witness.has_value());
}

TEST_CASE("cap file round trip is exact") {
    std::ostringstream out;
    write_cap(bh_cap(), out);
    std::istringstream in(out.str());
    Cap back = read_cap(in);
    CHECK(back == bh_cap());
    std::ostringstream again;
    write_cap(back, again);
    CHECK(again.str() == out.str());
}

TEST_CASE("cap file parser rejects malformed input") {
    auto expect_fail = [](const std::string& text, long line) {
        std::istringstream in(text);
        try {
            read_cap(in);
            FAIL_CHECK("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line_no == line);
        }
    };
    expect_fail("cap dim=3 order=3 n=1\n20\n", 2);        // wrong digit count
    expect_fail("cap dim=2 order=3 n=1\n20\n", 2);        // not normalized
    expect_fail("cap dim=2 order=3 n=1\n13\n", 2);        // digit out of range
    expect_fail("cap dim=2 order=3 n=2\n10\n01\n", 3);    // out of order
    expect_fail("cap dim=2 order=3 n=3\n01\n10\n", 3);    // count mismatch
    expect_fail("cap dim=2 order=2 n=1\n01\n", 1);        // wrong order field
}

TEST_CASE("cayley graph of the extracted cap is the source graph relabeled") {
    const Coordinatization& c = bh_coords();
    Graph rebuilt = cayley_from_cap(bh_cap());
    std::vector<int> perm(81);
    for (int x = 0; x < 81; x++) perm[x] = c.coord_id(x);
    CHECK(bh().relabeled(perm) == rebuilt);
}
