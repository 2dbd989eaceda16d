#include "srg/dioph.hpp"

#include <gmpxx.h>

#include "srg/errors.hpp"

namespace srg {

std::vector<DiophSolution> dioph_scan(int64_t max_n) {
    if (max_n < 1) throw ContractError("dioph_scan: max_n must be >= 1");
    std::vector<DiophSolution> out;
    mpz_class value, t;
    for (int64_t n = 1; n <= max_n; n++) {
        value = n;
        value = value * value + 3 * n - 1;
        // exact power-of-3 test by repeated division
        int64_t m = 0;
        t = value;
        while (mpz_divisible_ui_p(t.get_mpz_t(), 3)) {
            mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), 3);
            m++;
        }
        if (t != 1 || m < 1) continue;
        // cross-check through the substitution u = 2n + 3
        mpz_class u = 2 * mpz_class(n) + 3;
        if (u * u - 13 != 4 * value)
            throw InternalError("dioph_scan: substitution identity failed at n=" +
                                std::to_string(n));
        out.push_back(DiophSolution{n, m, int64_t(2 * n + 3)});
    }
    return out;
}

} // namespace srg
