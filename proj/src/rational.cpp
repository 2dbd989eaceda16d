#include "srg/rational.hpp"

#include "srg/errors.hpp"

namespace srg {

namespace {

// Clears denominators row by row; scaling a row by a positive integer
// changes neither the rank nor the pivot structure. Returns the per-row
// scale factors.
std::vector<Int> to_integer_rows(const RatMatrix& m, std::vector<std::vector<Int>>& z) {
    z.assign(m.rows(), std::vector<Int>(m.cols()));
    std::vector<Int> scale(m.rows(), 1);
    for (int i = 0; i < m.rows(); i++) {
        Int l = 1;
        for (int j = 0; j < m.cols(); j++) {
            Int d = m.at(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (int j = 0; j < m.cols(); j++) {
            const Rat& r = m.at(i, j);
            z[i][j] = r.get_num() * (l / r.get_den());
        }
        scale[i] = l;
    }
    return scale;
}

} // namespace

int rat_rank(const RatMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;
    std::vector<std::vector<Int>> z;
    to_integer_rows(m, z);

    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < nc && rank < nr; col++) {
        int piv = -1;
        for (int i = rank; i < nr; i++)
            if (z[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(z[rank], z[piv]);
        // Bareiss step: every division below is exact (Sylvester identity).
        for (int i = rank + 1; i < nr; i++) {
            for (int j = col + 1; j < nc; j++) {
                Int t = z[i][j] * z[rank][col] - z[i][col] * z[rank][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][col] = 0;
        }
        prev = z[rank][col];
        rank++;
    }
    return rank;
}

Rat rat_det(const RatMatrix& m) {
    if (!m.is_square()) throw ContractError("rat_det: matrix must be square");
    const int n = m.rows();
    if (n == 0) return Rat(1);
    std::vector<std::vector<Int>> z;
    std::vector<Int> scale = to_integer_rows(m, z);

    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; k++) {
        if (z[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; i++)
                if (z[i][k] != 0) { piv = i; break; }
            if (piv < 0) return Rat(0);
            std::swap(z[k], z[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++) {
            for (int j = k + 1; j < n; j++) {
                Int t = z[i][j] * z[k][k] - z[i][k] * z[k][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][k] = 0;
        }
        prev = z[k][k];
    }
    Int det_z = z[n - 1][n - 1];
    if (sign < 0) det_z = -det_z;
    Int denom = 1;
    for (const Int& s : scale) denom *= s;
    return rat(det_z, denom);
}

bool psd_with_rank_bound(const RatMatrix& m, int rmax) {
    if (!m.is_symmetric()) throw ContractError("psd_with_rank_bound: matrix must be symmetric");
    const int n = m.rows();
    RatMatrix a = m;
    // Track the original-to-working index permutation implicitly by swapping
    // whole rows/columns; only the trailing block is ever read.
    int rank = 0;
    for (int step = 0; step < n; step++) {
        int piv = -1;
        for (int i = step; i < n; i++) {
            int c = sgn(a.at(i, i));
            if (c < 0) return false;       // negative diagonal entry
            if (c > 0 && piv < 0) piv = i; // first positive pivot
        }
        if (piv < 0) {
            // Diagonal of the remaining block vanished; PSD forces the whole
            // block to vanish.
            for (int i = step; i < n; i++)
                for (int j = step; j < n; j++)
                    if (a.at(i, j) != 0) return false;
            break;
        }
        if (piv != step) {
            for (int j = 0; j < n; j++) std::swap(a.at(step, j), a.at(piv, j));
            for (int i = 0; i < n; i++) std::swap(a.at(i, step), a.at(i, piv));
        }
        rank++;
        if (rank > rmax) return false;
        const Rat d = a.at(step, step);
        for (int i = step + 1; i < n; i++) {
            if (a.at(i, step) == 0) continue;
            const Rat f = a.at(i, step) / d;
            for (int j = step + 1; j < n; j++) a.at(i, j) -= f * a.at(step, j);
        }
        for (int i = step + 1; i < n; i++) {
            a.at(i, step) = 0;
            a.at(step, i) = 0;
        }
    }
    return rank <= rmax;
}

} // namespace srg
