#include "srg/f3.hpp"

#include "srg/errors.hpp"

namespace srg {

F3Vec F3Matrix::apply(const F3Vec& x) const {
    if (int(x.size()) != cols_) throw ContractError("F3Matrix::apply: dimension mismatch");
    F3Vec y(rows_, 0);
    for (int i = 0; i < rows_; i++) {
        int acc = 0;
        for (int j = 0; j < cols_; j++) acc += at(i, j) * x[j];
        y[i] = F3(acc % 3);
    }
    return y;
}

F3Matrix F3Matrix::mul(const F3Matrix& o) const {
    if (cols_ != o.rows_) throw ContractError("F3Matrix::mul: dimension mismatch");
    F3Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; i++)
        for (int k = 0; k < cols_; k++) {
            F3 aik = at(i, k);
            if (!aik) continue;
            for (int j = 0; j < o.cols_; j++)
                r.at(i, j) = F3((r.at(i, j) + aik * o.at(k, j)) % 3);
        }
    return r;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> f3_echelon(F3Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); c++) {
        int piv = -1;
        for (int i = r; i < m.rows(); i++)
            if (m.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); j++) std::swap(m.at(r, j), m.at(piv, j));
        F3 inv = f3_inv(m.at(r, c));
        for (int j = c; j < m.cols(); j++) m.at(r, j) = f3_mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows(); i++) {
            if (i == r || !m.at(i, c)) continue;
            F3 f = m.at(i, c);
            for (int j = c; j < m.cols(); j++)
                m.at(i, j) = f3_sub(m.at(i, j), f3_mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

} // namespace

int f3_rank(F3Matrix m) { return int(f3_echelon(m).size()); }

std::optional<F3Vec> f3_solve(const F3Matrix& m, const F3Vec& b) {
    if (int(b.size()) != m.rows()) throw ContractError("f3_solve: dimension mismatch");
    F3Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); i++) {
        for (int j = 0; j < m.cols(); j++) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<int> pivots = f3_echelon(aug);
    for (int c : pivots)
        if (c == m.cols()) return std::nullopt; // pivot in the b column: inconsistent
    F3Vec x(m.cols(), 0);
    for (size_t r = 0; r < pivots.size(); r++) x[pivots[r]] = aug.at(int(r), m.cols());
    return x;
}

std::optional<F3Matrix> f3_invert(const F3Matrix& m) {
    if (m.rows() != m.cols()) throw ContractError("f3_invert: matrix must be square");
    const int n = m.rows();
    F3Matrix aug(n, 2 * n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> pivots = f3_echelon(aug);
    if (int(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    F3Matrix inv(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

} // namespace srg
