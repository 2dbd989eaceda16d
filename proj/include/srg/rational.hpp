#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace srg {

// Exact scalars. mpq_class keeps values in lowest terms with positive
// denominator as long as every value is built through canonical operations;
// rat() is the one entry point for raw numerator/denominator pairs.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Dense row-major matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; i++) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; i++)
            for (int j = i + 1; j < cols_; j++)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Rank over Q by fraction-free (Bareiss) elimination on a row-scaled integer
// copy. Empty matrix has rank 0.
int rat_rank(const RatMatrix& m);

// Exact determinant, fraction-free elimination. Throws ContractError on
// non-square input.
Rat rat_det(const RatMatrix& m);

// True iff m is positive semidefinite with rank <= rmax. Symmetric
// elimination with diagonal pivoting; every pivot must be >= 0 and a
// vanished diagonal forces the whole remaining row to vanish. Throws
// ContractError on asymmetric input.
bool psd_with_rank_bound(const RatMatrix& m, int rmax);

} // namespace srg
