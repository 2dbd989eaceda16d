#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srg/errors.hpp"
#include "srg/family.hpp"
#include "srg/involution.hpp"
#include "test_helpers.hpp"

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
} // namespace

TEST_CASE("is_automorphism basics") {
    Graph g = build_l33();
    CHECK(is_automorphism(g, perm_identity(9)));

    // swapping one nonadjacent pair is not an automorphism
    Perm swap04 = perm_identity(9);
    std::swap(swap04[0], swap04[4]);
    CHECK_FALSE(is_automorphism(g, swap04));

    Perm not_perm(9, 0);
    CHECK_THROWS_AS(is_automorphism(g, not_perm), ContractError);
}

TEST_CASE("sigma on the rook graph matches the hand construction at (0,0)") {
    Graph g = build_l33();
    Involution s = sigma(g, 0);
    CHECK(s.perm[0] == 0);
    // matched neighbor pairs swap: (0,1)<->(0,2) and (1,0)<->(2,0)
    CHECK(s.perm[1] == 2);
    CHECK(s.perm[2] == 1);
    CHECK(s.perm[3] == 6);
    CHECK(s.perm[6] == 3);
    // (1,1) has trace {(0,1),(1,0)}, partner image {(0,2),(2,0)}; the unique
    // non-neighbor carrying that trace is (2,2)
    CHECK(s.perm[4] == 8);
    CHECK(s.perm[8] == 4);
    // consistency with the negation formula in rook coordinates
    CHECK(s.perm[5] == 7); // (1,2) -> (2,1)
}

TEST_CASE("sigma is deterministic and valid at every vertex of the small graphs") {
    Graph l33 = build_l33();
    for (int v = 0; v < 9; v++) {
        Involution a = sigma(l33, v);
        Involution b = sigma(l33, v);
        CHECK(a.perm == b.perm);
        CHECK(is_automorphism(l33, a.perm));
        CHECK(a.perm[v] == v);
    }
    for (int v = 0; v < 81; v++) {
        const Involution& s = bh_sigmas()[v];
        CHECK(s.perm[v] == v);
        CHECK(perm_compose(s.perm, s.perm) == perm_identity(81));
    }
}

TEST_CASE("sigma rejects graphs without the matching structure") {
    Graph pet = testing::petersen();
    CHECK_THROWS_AS(sigma(pet, 0), StructureError);
}

TEST_CASE("involution identities hold exhaustively on the rook graph") {
    Graph g = build_l33();
    auto sig = all_involutions(g);
    SampleCfg cfg; // exhaustive
    Report r2 = verify_pair_identities(g, sig, cfg);
    CHECK(r2.all_pass());
    Report r3 = verify_triple_square(g, sig, cfg);
    CHECK(r3.all_pass());
    CHECK(r3.checks.front().details.front().second == std::to_string(9 * 9 * 9));
}

TEST_CASE("involution identities hold exhaustively on the 81-vertex graph") {
    SampleCfg cfg;
    CHECK(verify_pair_identities(bh(), bh_sigmas(), cfg).all_pass());
    CHECK(verify_triple_square(bh(), bh_sigmas(), cfg).all_pass());
}

TEST_CASE("sampled mode is seeded and deterministic") {
    SampleCfg cfg{false, 42, 2000};
    Report a = verify_triple_square(bh(), bh_sigmas(), cfg);
    Report b = verify_triple_square(bh(), bh_sigmas(), cfg);
    CHECK(a.all_pass());
    REQUIRE(a.checks.size() == b.checks.size());
    CHECK(a.checks.front().details == b.checks.front().details);
}

TEST_CASE("every triangle is closed by the involutions") {
    // for adjacent u,v with common neighbor w: sigma_u(v) = w
    for (const Graph& g : {build_l33(), bh()}) {
        auto sig = all_involutions(g);
        for (int u = 0; u < g.v(); u++)
            for (int v = u + 1; v < g.v(); v++) {
                if (!g.adjacent(u, v)) continue;
                int w = -1;
                g.row(u).for_each([&](int x) {
                    if (g.adjacent(v, x)) w = x;
                });
                REQUIRE(w >= 0);
                CHECK(sig[u].perm[v] == w);
                CHECK(sig[v].perm[u] == w);
                CHECK(sig[w].perm[u] == v);
            }
    }
}

TEST_CASE("a detected trace collision reports a structure error") {
    // a 6-cycle is 2-regular with lambda = 0: matching construction fails
    Graph c6(6);
    for (int i = 0; i < 6; i++) c6.add_edge(i, (i + 1) % 6);
    CHECK_THROWS_AS(sigma(c6, 0), StructureError);
}
