#pragma once

#include <random>

#include "aztec/cli.hpp"
#include "aztec/condensation.hpp"

namespace aztec {

// Cross-checks between the closed forms, the condensation theorems and the
// counting engines. Each appends one record per checked instance.

// Kept-position product formula on every subset, 1 <= a < b <= max_b; the
// brute-force counter joins in when the region has at most brute_limit cells.
void verify_ar_se(VerifyReport& report, int max_b, std::size_t brute_limit);
void verify_corollaries(VerifyReport& report, int max_a, int max_b);
void verify_ad_adjacent(VerifyReport& report, int max_a);
void verify_ar_i_j(VerifyReport& report, int max_a);
void verify_ar_k_j(VerifyReport& report, int max_a, int max_k);
void verify_ar_k1_i(VerifyReport& report, int max_a, int max_k, bool printed);

// The two recurrences used in the proofs, on engine counts.
void verify_recurrence_ll(VerifyReport& report, int max_a);
void verify_recursion_ep31(VerifyReport& report, int max_a, int max_k);

void verify_kuo(VerifyReport& report, KuoVariant variant, int max_a, int trials,
                std::mt19937& rng);
// Condensation on AD(a), 1 <= a <= max_a, with up to 2*max_k boundary cells.
void verify_ciucu(VerifyReport& report, int max_a, int max_k, int trials, std::mt19937& rng);
// Generalized condensation and the quadratic identity on gamma-augmented hosts.
void verify_generalized(VerifyReport& report, int max_a, int max_k, int trials,
                        std::mt19937& rng);

void verify_mt3(VerifyReport& report, int max_a, int max_n, int trials, std::mt19937& rng,
                const PfaffianOptions& options);
// Every configuration with a <= max_a, k <= max_k, n <= max_n.
void verify_mt1(VerifyReport& report, int max_a, int max_k, int max_n,
                const PfaffianOptions& options);
void verify_mt2(VerifyReport& report, int max_a, int max_k, int max_n,
                const PfaffianOptions& options);

// Elimination vs expansion vs determinant on random skew rational matrices.
void verify_pfaffian(VerifyReport& report, int max_dim, int trials, std::mt19937& rng);

}  // namespace aztec
