#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace srg {

// GF(3) scalars as residues 0/1/2.
using F3 = uint8_t;
using F3Vec = std::vector<F3>;

inline F3 f3_add(F3 a, F3 b) { return F3((a + b) % 3); }
inline F3 f3_sub(F3 a, F3 b) { return F3((a + 3 - b) % 3); }
inline F3 f3_mul(F3 a, F3 b) { return F3((a * b) % 3); }
inline F3 f3_neg(F3 a) { return F3((3 - a) % 3); }
// Inverse of a nonzero residue: 1 and 2 are self-inverse mod 3.
inline F3 f3_inv(F3 a) { return a; }

class F3Matrix {
public:
    F3Matrix() = default;
    F3Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static F3Matrix identity(int n) {
        F3Matrix m(n, n);
        for (int i = 0; i < n; i++) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F3& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    F3 at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    F3Vec apply(const F3Vec& x) const; // matrix * column vector
    F3Matrix mul(const F3Matrix& o) const;

    bool operator==(const F3Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<F3> a_;
};

// Gaussian elimination mod 3.
int f3_rank(F3Matrix m);

// One solution of m x = b, or nullopt when inconsistent. Throws
// ContractError on dimension mismatch.
std::optional<F3Vec> f3_solve(const F3Matrix& m, const F3Vec& b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<F3Matrix> f3_invert(const F3Matrix& m);

} // namespace srg
