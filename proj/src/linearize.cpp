#include "srg/linearize.hpp"

#include <fstream>
#include <random>

#include <json.hpp>

#include "srg/errors.hpp"

namespace srg {

int Coordinatization::id_of(const F3Vec& c) {
    int id = 0, w = 1;
    for (F3 t : c) {
        id += t * w;
        w *= 3;
    }
    return id;
}

int Coordinatization::coord_id(int vertex) const { return id_of(coords[vertex]); }

int Coordinatization::vertex_at(const F3Vec& c) const { return vertex_of[id_of(c)]; }

int vertex_add(const std::vector<Involution>& sig, int v0, int u, int v) {
    return sig[v0].perm[sig[u].perm[v]];
}

Report group_axioms_check(const Graph& g, const std::vector<Involution>& sig, int v0,
                          const SampleCfg& cfg) {
    if (int(sig.size()) != g.v())
        throw ContractError("group_axioms_check: need one involution per vertex");
    Report rep;
    const int n = g.v();
    auto add = [&](int u, int v) { return sig[v0].perm[sig[u].perm[v]]; };

    Check& cid = rep.add("group_identity");
    long long viol = 0;
    for (int u = 0; u < n; u++)
        if (add(u, v0) != u || add(v0, u) != u) viol++;
    if (viol) cid.fail("violations", std::to_string(viol));

    Check& ccomm = rep.add("group_commutativity");
    viol = 0;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (add(u, v) != add(v, u)) viol++;
    if (viol) ccomm.fail("violations", std::to_string(viol));

    Check& cexp = rep.add("group_exponent3");
    viol = 0;
    for (int u = 0; u < n; u++)
        if (add(add(u, u), u) != v0) viol++;
    if (viol) cexp.fail("violations", std::to_string(viol));

    Check& cassoc = rep.add("group_associativity");
    long long checked = 0;
    viol = 0;
    auto test = [&](int u, int v, int w) {
        checked++;
        if (add(add(u, v), w) != add(u, add(v, w))) {
            if (!viol)
                cassoc.fail("triple",
                            std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w));
            viol++;
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
        cassoc.note("mode", "sampled");
        cassoc.note("seed", (long long)cfg.seed);
    }
    cassoc.note("triples_checked", checked);
    if (viol) cassoc.note("violations", viol);
    return rep;
}

Coordinatization coordinatize(const Graph& g, const std::vector<Involution>& sig, int v0) {
    const int n = g.v();
    if (v0 < 0 || v0 >= n) throw ContractError("coordinatize: base vertex out of range");
    auto add = [&](int u, int v) { return sig[v0].perm[sig[u].perm[v]]; };

    Coordinatization c;
    c.v0 = v0;
    c.m = 0;
    std::vector<char> covered(n, 0);
    std::vector<int> order; // covered vertices in insertion order
    covered[v0] = 1;
    order.push_back(v0);
    std::vector<F3Vec> coords(n);
    coords[v0] = {};

    while (int(order.size()) < n) {
        int b = -1;
        for (int x = 0; x < n; x++)
            if (!covered[x]) { b = x; break; }
        // extend every known element by b and 2b; the closure must triple
        size_t old_size = order.size();
        for (size_t i = 0; i < old_size; i++) {
            int e = order[i];
            int e1 = add(e, b);
            int e2 = add(e1, b);
            for (int step = 1; step <= 2; step++) {
                int ex = step == 1 ? e1 : e2;
                if (covered[ex])
                    throw StructureError("coordinatize: closure collision at vertex " +
                                         std::to_string(ex));
                covered[ex] = 1;
                order.push_back(ex);
                F3Vec cc = coords[e];
                cc.push_back(F3(step));
                coords[ex] = std::move(cc);
            }
        }
        // pad earlier vertices with a zero in the new coordinate
        for (size_t i = 0; i < old_size; i++) coords[order[i]].push_back(0);
        c.m++;
    }

    // order.size() grew by factors of 3 only, so |V| = 3^m holds by now;
    // assert anyway to keep the contract explicit.
    long long pow3 = 1;
    for (int i = 0; i < c.m; i++) pow3 *= 3;
    if (pow3 != n) throw StructureError("coordinatize: |V| is not 3^m");

    // coords were appended least-significant-first per basis element but in
    // mixed order (new trit appended after old ones for new elements, padded
    // for old). Normalize: all vectors already have length m with trit j =
    // multiple of basis element j. Nothing to fix beyond length checks.
    c.coords.assign(n, F3Vec(c.m, 0));
    for (int x = 0; x < n; x++) {
        if (int(coords[x].size()) != c.m)
            throw StructureError("coordinatize: ragged coordinate vector");
        c.coords[x] = coords[x];
    }
    c.vertex_of.assign(pow3, -1);
    for (int x = 0; x < n; x++) {
        int id = c.coord_id(x);
        if (c.vertex_of[id] != -1) throw StructureError("coordinatize: coords not injective");
        c.vertex_of[id] = x;
    }
    return c;
}

Report check_sigma_linear(const Graph& g, const std::vector<Involution>& sig,
                          const Coordinatization& c, const SampleCfg& cfg) {
    Report rep;
    const int n = g.v();

    Check& lin = rep.add("sigma_negation_identity");
    long long checked = 0, viol = 0;
    auto test = [&](int v, int u) {
        checked++;
        const F3Vec& cu = c.coords[u];
        const F3Vec& cv = c.coords[v];
        F3Vec want(c.m);
        for (int i = 0; i < c.m; i++) want[i] = f3_neg(f3_add(cu[i], cv[i]));
        if (c.coords[sig[v].perm[u]] != want) {
            if (!viol) lin.fail("pair", std::to_string(v) + "," + std::to_string(u));
            viol++;
        }
    };
    if (cfg.exhaustive) {
        for (int v = 0; v < n; v++)
            for (int u = 0; u < n; u++) test(v, u);
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (long long i = 0; i < cfg.samples; i++) test(d(rng), d(rng));
        lin.note("mode", "sampled");
        lin.note("seed", (long long)cfg.seed);
    }
    lin.note("pairs_checked", checked);
    if (viol) lin.note("violations", viol);

    // every shift x -> x + t must be an automorphism; always exhaustive
    Check& sh = rep.add("shifts_are_automorphisms");
    long long bad_shifts = 0;
    for (int t = 0; t < n; t++) {
        Perm shift(n);
        for (int x = 0; x < n; x++) {
            F3Vec cx = c.coords[x];
            for (int i = 0; i < c.m; i++) cx[i] = f3_add(cx[i], c.coords[t][i]);
            shift[x] = c.vertex_at(cx);
        }
        if (!is_automorphism(g, shift)) {
            if (!bad_shifts) sh.fail("shift", std::to_string(t));
            bad_shifts++;
        }
    }
    sh.note("shifts_checked", n);
    if (bad_shifts) sh.note("violations", bad_shifts);
    return rep;
}

void write_coordinatization_file(const Coordinatization& c, const std::string& path) {
    nlohmann::json j;
    j["m"] = c.m;
    j["v0"] = c.v0;
    auto arr = nlohmann::json::array();
    for (const F3Vec& cv : c.coords) {
        auto row = nlohmann::json::array();
        for (F3 t : cv) row.push_back(int(t));
        arr.push_back(std::move(row));
    }
    j["coords"] = std::move(arr);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump() << "\n";
}

Coordinatization read_coordinatization_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    Coordinatization c;
    c.m = j.at("m").get<int>();
    c.v0 = j.at("v0").get<int>();
    long long pow3 = 1;
    for (int i = 0; i < c.m; i++) pow3 *= 3;
    const auto& arr = j.at("coords");
    if ((long long)arr.size() != pow3)
        throw std::runtime_error("coordinatization: wrong vertex count");
    c.vertex_of.assign(pow3, -1);
    for (size_t x = 0; x < arr.size(); x++) {
        F3Vec cv;
        for (const auto& t : arr[x]) {
            int ti = t.get<int>();
            if (ti < 0 || ti > 2) throw std::runtime_error("coordinatization: trit out of range");
            cv.push_back(F3(ti));
        }
        if (int(cv.size()) != c.m) throw std::runtime_error("coordinatization: ragged row");
        c.coords.push_back(std::move(cv));
        int id = c.coord_id(int(x));
        if (c.vertex_of[id] != -1) throw std::runtime_error("coordinatization: not injective");
        c.vertex_of[id] = int(x);
    }
    return c;
}

} // namespace srg
