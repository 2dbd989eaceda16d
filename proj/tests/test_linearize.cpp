#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>

#include "srg/errors.hpp"
#include "srg/family.hpp"
#include "srg/linearize.hpp"

using namespace srg;

namespace {
const Graph& bh() {
    static const Graph g = build_brouwer_haemers();
    return g;
}
const std::vector<Involution>& bh_sigmas() {
    static const std::vector<Involution> s = all_involutions(bh());
    return s;
}
const Coordinatization& bh_coords() {
    static const Coordinatization c = coordinatize(bh(), bh_sigmas(), 0);
    return c;
}
F3Vec coord_sum(const Coordinatization& c, int u, int v) {
    F3Vec s(c.m);
    for (int i = 0; i < c.m; i++) s[i] = f3_add(c.coords[u][i], c.coords[v][i]);
    return s;
}
} // namespace

TEST_CASE("transported addition identities on the rook graph") {
    Graph g = build_l33();
    auto sig = all_involutions(g);
    const int v0 = 0;
    for (int u = 0; u < 9; u++) {
        CHECK(vertex_add(sig, v0, u, v0) == u);                      // u + 0 = u
        CHECK(vertex_add(sig, v0, u, u) == sig[v0].perm[u]);         // u + u = -u
    }
    // rook coordinates add componentwise: (1,1) + (0,1) = (1,2)
    CHECK(vertex_add(sig, v0, 4, 1) == 5);
}

TEST_CASE("group axioms hold exhaustively on the small graphs") {
    Graph l33 = build_l33();
    auto sig9 = all_involutions(l33);
    SampleCfg cfg;
    CHECK(group_axioms_check(l33, sig9, 0, cfg).all_pass());
    CHECK(group_axioms_check(bh(), bh_sigmas(), 0, cfg).all_pass());
}

TEST_CASE("coordinatize gives m = 2 for the rook graph and m = 4 for the 81-vertex graph") {
    Graph l33 = build_l33();
    auto sig9 = all_involutions(l33);
    Coordinatization c9 = coordinatize(l33, sig9, 0);
    CHECK(c9.m == 2);
    CHECK(c9.coords[0] == F3Vec{0, 0});

    const Coordinatization& c81 = bh_coords();
    CHECK(c81.m == 4);
    // bijectivity witnessed by the inverse table
    for (int x = 0; x < 81; x++) CHECK(c81.vertex_of[c81.coord_id(x)] == x);
}

TEST_CASE("coords is a group isomorphism onto componentwise addition") {
    const Coordinatization& c = bh_coords();
    for (int u = 0; u < 81; u++)
        for (int v = 0; v < 81; v++) {
            int w = vertex_add(bh_sigmas(), 0, u, v);
            CHECK(c.coords[w] == coord_sum(c, u, v));
        }
}

TEST_CASE("sigma acts as negation of the sum in coordinates") {
    Graph l33 = build_l33();
    auto sig9 = all_involutions(l33);
    Coordinatization c9 = coordinatize(l33, sig9, 0);
    SampleCfg cfg;
    CHECK(check_sigma_linear(l33, sig9, c9, cfg).all_pass());
    CHECK(check_sigma_linear(bh(), bh_sigmas(), bh_coords(), cfg).all_pass());
}

TEST_CASE("sigma at the base vertex is global negation in coordinates") {
    const Coordinatization& c = bh_coords();
    for (int u = 0; u < 81; u++) {
        F3Vec neg(c.m);
        for (int i = 0; i < c.m; i++) neg[i] = f3_neg(c.coords[u][i]);
        CHECK(c.coords[bh_sigmas()[0].perm[u]] == neg);
    }
}

TEST_CASE("adjacency is translation invariant in coordinates") {
    const Coordinatization& c = bh_coords();
    for (int x = 0; x < 81; x++)
        for (int y = x + 1; y < 81; y++) {
            F3Vec diff(c.m);
            for (int i = 0; i < c.m; i++) diff[i] = f3_sub(c.coords[x][i], c.coords[y][i]);
            int d = c.vertex_at(diff);
            CHECK(bh().adjacent(x, y) == bh().adjacent(0, d));
        }
}

TEST_CASE("changing the base vertex relates coordinatizations affinely") {
    Coordinatization c1 = bh_coords();
    Coordinatization c2 = coordinatize(bh(), bh_sigmas(), 7);
    // phi = c2 o c1^{-1}; affine means phi(x) - phi(0) is additive
    auto phi = [&](const F3Vec& x) { return c2.coords[c1.vertex_at(x)]; };
    F3Vec zero(c1.m, 0);
    F3Vec off = phi(zero);
    auto lin = [&](const F3Vec& x) {
        F3Vec r = phi(x);
        for (int i = 0; i < c1.m; i++) r[i] = f3_sub(r[i], off[i]);
        return r;
    };
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> trit(0, 2);
    for (int iter = 0; iter < 2000; iter++) {
        F3Vec x(c1.m), y(c1.m);
        for (int i = 0; i < c1.m; i++) {
            x[i] = F3(trit(rng));
            y[i] = F3(trit(rng));
        }
        F3Vec xy(c1.m);
        for (int i = 0; i < c1.m; i++) xy[i] = f3_add(x[i], y[i]);
        F3Vec lx = lin(x), ly = lin(y), lxy = lin(xy);
        for (int i = 0; i < c1.m; i++) CHECK(lxy[i] == f3_add(lx[i], ly[i]));
    }
}

TEST_CASE("coordinatization file round trip") {
    Coordinatization c9 = coordinatize(build_l33(), all_involutions(build_l33()), 0);
    std::string path = "coords_test_tmp.json";
    write_coordinatization_file(c9, path);
    Coordinatization back = read_coordinatization_file(path);
    CHECK(back.m == c9.m);
    CHECK(back.v0 == c9.v0);
    CHECK(back.coords == c9.coords);
    CHECK(back.vertex_of == c9.vertex_of);
    std::remove(path.c_str());
}

TEST_CASE("coordinatize rejects inputs without the group structure") {
    // feed involutions of the wrong graph: closure must break down
    Graph l33 = build_l33();
    auto sig9 = all_involutions(l33);
    // corrupt one involution into a different valid-looking permutation
    auto bad = sig9;
    std::swap(bad[1].perm[3], bad[1].perm[6]);
    bool threw = false;
    try {
        Coordinatization c = coordinatize(l33, bad, 0);
        // if closure happened to survive, the isomorphism must fail instead
        for (int u = 0; u < 9 && !threw; u++)
            for (int v = 0; v < 9; v++) {
                int w = vertex_add(bad, 0, u, v);
                if (c.coords[w] != coord_sum(c, u, v)) {
                    threw = true;
                    break;
                }
            }
    } catch (const StructureError&) {
        threw = true;
    }
    CHECK(threw);
}
