#pragma once

#include <span>
#include <vector>

#include "aztec/numeric.hpp"

namespace aztec {

// c(c-1)...(c-d+1)/d! for d >= 0, zero for d < 0.
Integer binomial_ext(long c, long d);

// Rising factorial (x)_k.
Integer pochhammer(long x, long k);

struct HypParams {
  std::vector<long> numerator;
  std::vector<long> denominator;
  Rational z;
};

// Sum of the series up to the first vanishing numerator Pochhammer. The
// cut-off is K = min(1 - a) over nonpositive numerator parameters a.
Rational hypergeometric_terminating(const HypParams& p);
// Same, restricted to three numerator and two denominator parameters.
Rational hyp3f2_terminating(const HypParams& p);

Integer count_ad(int n);

// Aztec rectangle with only SE cells s_1 < ... < s_a kept on that side.
Integer count_ar_se(int a, int b, std::span<const int> s);

// AR(a,a+1) minus SE cell i.
Integer count_cor1(int a, int i);

// AR(a,b) minus SE cells 2..b-a+1.
Integer count_cor2(int a, int b);

// AR(a,a+k) with k-1 gamma squares at positions 2..k, minus SE cell j.
// For j <= k every gamma square is forced and the count is 2^{a(a+1)/2}.
Integer count_prop_ar_k_j(int a, int k, int j);

// AR(a,a+2) minus SE cell i and NW cell j.
Integer count_prop_ar_i_j(int a, int i, int j);

// AR(a,a+k) minus SE cells 2..k and NW cell i.
Integer count_prop_ar_k1_i(int a, int k, int i);
// The same count from the expression exactly as printed; disagrees with the
// region for most parameters and is only kept for the verify suite.
Rational count_prop_ar_k1_i_printed(int a, int k, int i);

// AD(a) minus SE cell i and NE cell j.
Integer count_prop_ad_adjacent(int a, int i, int j);

}  // namespace aztec
