#include "srg/graph.hpp"

#include <fstream>
#include <sstream>

#include "srg/errors.hpp"
#include "srg/rational.hpp"

namespace srg {

void Graph::add_edge(int a, int b) {
    if (a == b) throw ContractError("add_edge: self-loop");
    if (a < 0 || b < 0 || a >= v_ || b >= v_) throw ContractError("add_edge: vertex out of range");
    adj_[a].set(b);
    adj_[b].set(a);
}

long long Graph::edge_count() const {
    long long s = 0;
    for (int i = 0; i < v_; i++) s += degree(i);
    return s / 2;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (int(perm.size()) != v_) throw ContractError("relabeled: permutation size mismatch");
    Graph g(v_);
    for (int x = 0; x < v_; x++)
        adj_[x].for_each([&](int y) {
            if (x < y) g.add_edge(perm[x], perm[y]);
        });
    return g;
}

namespace {

// Eigenvalue discriminant (lambda-mu)^2 + 4(k-mu) and the square-root test,
// all in arbitrary precision so family parameters up to n ~ 10^3 are safe.
struct EigenData {
    bool integral = false;
    Int sqrt_disc, r_num, s_num, f_num, g_num; // r = r_num/2 etc. before parity checks
};

EigenData eigen_data(const SrgParams& p) {
    EigenData e;
    Int lm = Int(p.lambda) - Int(p.mu);
    Int disc = lm * lm + 4 * (Int(p.k) - Int(p.mu));
    if (disc <= 0) return e;
    Int root = sqrt(disc);
    if (root * root != disc) return e;
    e.sqrt_disc = root;
    e.r_num = lm + root; // parity: lm and root agree mod 2 since root^2 = lm^2 + 4(...)
    e.s_num = lm - root;
    Int num = 2 * Int(p.k) + (Int(p.v) - 1) * lm;
    Int fg = (Int(p.v) - 1) * root; // f = (fg - num)/(2 root), g = (fg + num)/(2 root)
    Int fnum = fg - num, gnum = fg + num;
    if (fnum % (2 * root) != 0 || gnum % (2 * root) != 0) return e;
    e.f_num = fnum / (2 * root);
    e.g_num = gnum / (2 * root);
    e.integral = true;
    return e;
}

} // namespace

Report params_feasible(const SrgParams& p) {
    Report rep;
    Check& basic = rep.add("param_ranges");
    if (!(p.v > p.k && p.k >= p.mu && p.lambda >= 0 && p.mu >= 0))
        basic.fail("violation", "need v > k >= mu and lambda, mu >= 0");
    basic.note("v", p.v).note("k", p.k).note("lambda", p.lambda).note("mu", p.mu);

    Check& cnt = rep.add("counting_identity");
    Int lhs = (Int(p.v) - Int(p.k) - 1) * Int(p.mu);
    Int rhs = Int(p.k) * (Int(p.k) - Int(p.lambda) - 1);
    if (lhs != rhs)
        cnt.fail("detail", "(v-k-1)mu = " + lhs.get_str() + " != " + rhs.get_str() + " = k(k-lambda-1)");

    Check& eig = rep.add("eigen_integrality");
    EigenData e = eigen_data(p);
    if (!e.integral) {
        eig.fail("detail", "eigenvalues or multiplicities are not integers");
    } else {
        if (e.r_num % 2 != 0 || e.s_num % 2 != 0)
            eig.fail("detail", "r, s are half-integers");
        if (e.f_num < 0 || e.g_num < 0) eig.fail("detail", "negative multiplicity");
        eig.note("r", Int(e.r_num / 2).get_str()).note("s", Int(e.s_num / 2).get_str());
        eig.note("f", e.f_num.get_str()).note("g", e.g_num.get_str());
    }

    if (p.n) {
        Check& fam = rep.add("family_index");
        int64_t n = *p.n;
        int64_t b = n * n + 3 * n - 1;
        bool ok = p.v == b * b && p.k == n * n * (n + 3) && p.lambda == 1 && p.mu == n * (n + 1);
        if (!ok) fam.fail("detail", "tuple does not match family index n=" + std::to_string(n));
    }
    return rep;
}

Spectrum spectrum(const SrgParams& p) {
    Report feas = params_feasible(p);
    if (!feas.all_pass()) throw FeasibilityError("spectrum: infeasible parameter set");
    EigenData e = eigen_data(p);
    Spectrum s;
    s.r = Int(e.r_num / 2).get_si();
    s.s = Int(e.s_num / 2).get_si();
    s.f = e.f_num.get_si();
    s.g = e.g_num.get_si();
    return s;
}

Report verify_srg(const Graph& g, const SrgParams& p) {
    if (int64_t(g.v()) != p.v) throw ContractError("verify_srg: vertex count mismatch");
    Report rep;
    const int v = g.v();

    Check& reg = rep.add("regularity");
    long long bad_deg = 0;
    for (int i = 0; i < v; i++)
        if (g.degree(i) != p.k) {
            if (bad_deg == 0)
                reg.fail("vertex", std::to_string(i) + " has degree " + std::to_string(g.degree(i)));
            bad_deg++;
        }
    if (bad_deg) reg.note("bad_vertices", bad_deg);

    Check& lam = rep.add("lambda_count");
    Check& mu = rep.add("mu_count");
    long long bad_lambda = 0, bad_mu = 0;
    for (int i = 0; i < v; i++)
        for (int j = i + 1; j < v; j++) {
            int c = g.common_neighbors(i, j);
            if (g.adjacent(i, j)) {
                if (c != p.lambda) {
                    if (bad_lambda == 0)
                        lam.fail("pair", "(" + std::to_string(i) + "," + std::to_string(j) +
                                             ") has " + std::to_string(c) + " common neighbors");
                    bad_lambda++;
                }
            } else {
                if (c != p.mu) {
                    if (bad_mu == 0)
                        mu.fail("pair", "(" + std::to_string(i) + "," + std::to_string(j) + ") has " +
                                            std::to_string(c) + " common neighbors");
                    bad_mu++;
                }
            }
        }
    if (bad_lambda) lam.note("bad_pairs", bad_lambda);
    if (bad_mu) mu.note("bad_pairs", bad_mu);

    // A^2 + (mu-lambda)A + (mu-k)I = mu J, entrywise. (A^2)_{ij} is the
    // common-neighbor count, (A^2)_{ii} the degree. All quantities fit in
    // int64 comfortably for any graph that fits in dense storage.
    Check& mat = rep.add("matrix_identity");
    long long bad_entries = 0;
    for (int i = 0; i < v; i++)
        for (int j = 0; j < v; j++) {
            int64_t a2 = (i == j) ? g.degree(i) : g.common_neighbors(i, j);
            int64_t a = (i != j && g.adjacent(i, j)) ? 1 : 0;
            int64_t lhs = a2 + (p.mu - p.lambda) * a + (i == j ? (p.mu - p.k) : 0);
            if (lhs != p.mu) {
                if (bad_entries == 0)
                    mat.fail("entry", "(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                          std::to_string(lhs) + " != " + std::to_string(p.mu));
                bad_entries++;
            }
        }
    if (bad_entries) mat.note("bad_entries", bad_entries);
    return rep;
}

Matching neighborhood_matching(const Graph& g, int v) {
    if (v < 0 || v >= g.v()) throw ContractError("neighborhood_matching: vertex out of range");
    Matching m;
    m.base = v;
    m.partner.assign(g.v(), -1);
    std::vector<int> nb = g.neighbors(v);
    for (int a : nb) {
        int cnt = g.row(a).and_count(g.row(v));
        if (cnt != 1)
            throw StructureError("neighborhood_matching: vertex " + std::to_string(a) + " has " +
                                 std::to_string(cnt) + " neighbors inside N(" + std::to_string(v) +
                                 ")");
        int partner = -1;
        g.row(a).for_each([&](int x) {
            if (g.adjacent(v, x)) partner = x;
        });
        m.partner[a] = partner;
    }
    for (int a : nb) {
        if (m.partner[m.partner[a]] != a)
            throw StructureError("neighborhood_matching: partner map is not an involution");
        if (a < m.partner[a]) m.pairs.emplace_back(a, m.partner[a]);
    }
    return m;
}

std::pair<Graph, SrgParams> read_graph(std::istream& in) {
    std::string line;
    long line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty file", 1);
    line_no = 1;
    SrgParams p;
    {
        std::istringstream hs(line);
        std::string tag, vf, kf, lf, mf;
        hs >> tag >> vf >> kf >> lf >> mf;
        auto field = [&](const std::string& s, const char* key) -> int64_t {
            std::string prefix = std::string(key) + "=";
            if (s.rfind(prefix, 0) != 0) throw ParseError("expected " + prefix + "<int>", line_no);
            try {
                size_t used = 0;
                long long val = std::stoll(s.substr(prefix.size()), &used);
                if (used != s.size() - prefix.size()) throw std::invalid_argument("");
                return val;
            } catch (const std::exception&) {
                throw ParseError("bad integer in header field " + std::string(key), line_no);
            }
        };
        if (tag != "srg") throw ParseError("header must start with 'srg'", line_no);
        p.v = field(vf, "v");
        p.k = field(kf, "k");
        p.lambda = field(lf, "lambda");
        p.mu = field(mf, "mu");
        std::string extra;
        if (hs >> extra) throw ParseError("trailing tokens in header", line_no);
    }
    if (p.v <= 0 || p.v > 100000) throw ParseError("vertex count out of supported range", line_no);
    if (p.k < 0 || (p.k * p.v) % 2 != 0) throw ParseError("k*v must be even", line_no);

    Graph g(int(p.v));
    const long long expected_edges = p.k * p.v / 2;
    long long edges = 0;
    int64_t prev_u = -1, prev_v = -1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) throw ParseError("blank line", line_no);
        std::istringstream es(line);
        long long u, w;
        if (!(es >> u >> w)) throw ParseError("expected '<u> <v>'", line_no);
        std::string extra;
        if (es >> extra) throw ParseError("trailing tokens on edge line", line_no);
        if (u < 0 || w < 0 || u >= p.v || w >= p.v)
            throw ParseError("vertex index out of range", line_no);
        if (u == w) throw ParseError("self-loop", line_no);
        if (u > w) throw ParseError("edge must be written with u < v", line_no);
        if (u < prev_u || (u == prev_u && w <= prev_v))
            throw ParseError("edges out of order or duplicated", line_no);
        if (g.adjacent(int(u), int(w))) throw ParseError("duplicate edge", line_no);
        g.add_edge(int(u), int(w));
        prev_u = u;
        prev_v = w;
        edges++;
    }
    if (edges != expected_edges)
        throw ParseError("expected " + std::to_string(expected_edges) + " edges, found " +
                             std::to_string(edges),
                         line_no);
    // Attach the family index when the tuple matches it.
    for (int n = 1; n <= 1000; n++) {
        int64_t b = int64_t(n) * n + 3 * n - 1;
        if (b * b > p.v) break;
        if (p.v == b * b && p.k == int64_t(n) * n * (n + 3) && p.lambda == 1 &&
            p.mu == int64_t(n) * (n + 1)) {
            p.n = n;
            break;
        }
    }
    return {std::move(g), p};
}

std::pair<Graph, SrgParams> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void write_graph(const Graph& g, const SrgParams& p, std::ostream& out) {
    out << "srg v=" << p.v << " k=" << p.k << " lambda=" << p.lambda << " mu=" << p.mu << "\n";
    for (int i = 0; i < g.v(); i++)
        g.row(i).for_each([&](int j) {
            if (i < j) out << i << " " << j << "\n";
        });
}

void write_graph_file(const Graph& g, const SrgParams& p, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_graph(g, p, out);
}

} // namespace srg
