#pragma once

#include <cstdint>
#include <vector>

namespace srg {

// Solution of n^2 + 3n - 1 = 3^m, cross-checked through the substitution
// u = 2n + 3, u^2 - 13 = 4 * 3^m.
struct DiophSolution {
    int64_t n = 0;
    int64_t m = 0;
    int64_t u = 0;
};

// Scans n = 1..max_n in arbitrary precision; the power-of-3 test is exact
// repeated division, no floating point. Throws ContractError for max_n < 1.
std::vector<DiophSolution> dioph_scan(int64_t max_n);

} // namespace srg
