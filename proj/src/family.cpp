#include "srg/family.hpp"

#include <algorithm>

#include "srg/caps.hpp"
#include "srg/errors.hpp"

namespace srg {

namespace {

using Poly = std::array<int, 5>;

// Remainder of a (degree <= 7) polynomial by a monic divisor, mod 3.
std::vector<int> poly_mod(std::vector<int> r, const std::vector<int>& d) {
    int dd = int(d.size()) - 1;
    for (int i = int(r.size()) - 1; i >= dd; i--) {
        int c = r[i] % 3;
        if (!c) continue;
        for (int j = 0; j <= dd; j++) r[i - dd + j] = ((r[i - dd + j] - c * d[j]) % 3 + 3) % 3;
    }
    r.resize(dd);
    return r;
}

bool is_zero(const std::vector<int>& p) {
    return std::all_of(p.begin(), p.end(), [](int c) { return c % 3 == 0; });
}

// Exhaustive irreducibility check for a monic quartic over F_3: no linear
// factor (no root) and no monic quadratic divisor.
bool quartic_irreducible(const Poly& f) {
    for (int t = 0; t < 3; t++) {
        int val = 0, tp = 1;
        for (int i = 0; i < 5; i++) {
            val = (val + f[i] * tp) % 3;
            tp = (tp * t) % 3;
        }
        if (val == 0) return false;
    }
    for (int b = 0; b < 3; b++)
        for (int c = 0; c < 3; c++) {
            std::vector<int> q = {c, b, 1};
            std::vector<int> fv(f.begin(), f.end());
            if (is_zero(poly_mod(fv, q))) return false;
        }
    return true;
}

int pack(const std::array<int, 4>& c) { return c[0] + 3 * c[1] + 9 * c[2] + 27 * c[3]; }

std::array<int, 4> unpack(int a) {
    return {a % 3, (a / 3) % 3, (a / 9) % 3, (a / 27) % 3};
}

} // namespace

GF81::GF81() {
    if (!quartic_irreducible(kModulus))
        throw InternalError("GF81: modulus x^4 + x + 2 failed the irreducibility check");
    for (int a = 0; a < 81; a++) {
        auto ca = unpack(a);
        std::array<int, 4> na{};
        for (int i = 0; i < 4; i++) na[i] = (3 - ca[i]) % 3;
        neg_[a] = uint8_t(pack(na));
        for (int b = 0; b < 81; b++) {
            auto cb = unpack(b);
            std::array<int, 4> s{};
            for (int i = 0; i < 4; i++) s[i] = (ca[i] + cb[i]) % 3;
            add_[a][b] = uint8_t(pack(s));
            // product, reduced mod the modulus
            std::vector<int> prod(8, 0);
            for (int i = 0; i < 4; i++)
                for (int j = 0; j < 4; j++) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % 3;
            std::vector<int> red = poly_mod(prod, std::vector<int>(kModulus.begin(), kModulus.end()));
            std::array<int, 4> pc{};
            for (int i = 0; i < 4; i++) pc[i] = red[i];
            mul_[a][b] = uint8_t(pack(pc));
        }
    }
}

std::vector<int> GF81::fourth_powers() const {
    std::vector<int> q;
    for (int a = 1; a < 81; a++) q.push_back(pow4(a));
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return q;
}

SrgParams family_params(int64_t n) {
    if (n < 1) throw ContractError("family_params: n must be >= 1");
    int64_t b = n * n + 3 * n - 1;
    SrgParams p;
    p.v = b * b;
    p.k = n * n * (n + 3);
    p.lambda = 1;
    p.mu = n * (n + 1);
    p.n = int(n);
    return p;
}

Graph build_l33() {
    Graph g(9);
    for (int a = 0; a < 9; a++)
        for (int b = a + 1; b < 9; b++) {
            int ai = a / 3, aj = a % 3, bi = b / 3, bj = b % 3;
            if (ai == bi || aj == bj) g.add_edge(a, b);
        }
    return g;
}

Graph build_brouwer_haemers() {
    static const GF81 f;
    std::vector<int> q4 = f.fourth_powers();
    std::vector<char> conn(81, 0);
    for (int x : q4) conn[x] = 1;
    Graph g(81);
    for (int a = 0; a < 81; a++)
        for (int b = a + 1; b < 81; b++)
            if (conn[f.sub(a, b)]) g.add_edge(a, b);
    return g;
}

Graph build_games(const Cap& cap) {
    if (cap.vec_dim() != 6 || cap.size() != 56)
        throw ContractError("build_games: need a 56-point cap with 6 coordinates");
    IsCapResult chk = is_cap(cap);
    if (!chk.cap) throw ContractError("build_games: point set is not a cap");

    // membership of normalized difference classes, keyed by vector id
    std::vector<char> in_cap(729, 0);
    for (const ProjPoint& p : cap.points()) {
        int id = 0, w = 1;
        for (int i = 0; i < 6; i++) {
            id += p.t[i] * w;
            w *= 3;
        }
        in_cap[id] = 1;
    }
    auto digits = [](int x) {
        F3Vec d(6);
        for (int i = 0; i < 6; i++) {
            d[i] = F3(x % 3);
            x /= 3;
        }
        return d;
    };
    Graph g(729);
    for (int a = 0; a < 729; a++) {
        F3Vec da = digits(a);
        for (int b = a + 1; b < 729; b++) {
            F3Vec db = digits(b);
            F3Vec diff(6);
            for (int i = 0; i < 6; i++) diff[i] = f3_sub(da[i], db[i]);
            ProjPoint pp = normalize_point(diff);
            int id = 0, w = 1;
            for (int i = 0; i < 6; i++) {
                id += pp.t[i] * w;
                w *= 3;
            }
            if (in_cap[id]) g.add_edge(a, b);
        }
    }
    return g;
}

} // namespace srg
