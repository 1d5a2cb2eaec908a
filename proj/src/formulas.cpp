#include "aztec/formulas.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "aztec/errors.hpp"

namespace aztec {

namespace {

Integer ad_power(int a) { return pow2(static_cast<unsigned long>(a) * (a + 1) / 2); }

Integer require_integer(const Rational& value, const char* what) {
  if (!is_integral(value) || value < 0) {
    throw Error(ErrorCode::kInternalInconsistency,
                std::string(what) + " evaluated to " + to_string(value));
  }
  return value.get_num();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidParameter, message);
}

std::string args(int a, int x, int y) {
  return "(" + std::to_string(a) + "," + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

Integer binomial_ext(long c, long d) {
  if (d < 0) return 0;
  if (c >= 0) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(d));
    return out;
  }
  // C(c,d) = (-1)^d C(d-c-1, d) for negative c.
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(d - c - 1),
               static_cast<unsigned long>(d));
  return d % 2 == 0 ? out : Integer(-out);
}

Integer pochhammer(long x, long k) {
  Integer out = 1;
  for (long t = 0; t < k; ++t) out *= x + t;
  return out;
}

Rational hypergeometric_terminating(const HypParams& p) {
  long cutoff = std::numeric_limits<long>::max();
  for (long a : p.numerator) {
    if (a <= 0) cutoff = std::min(cutoff, 1 - a);
  }
  if (cutoff == std::numeric_limits<long>::max()) {
    throw Error(ErrorCode::kNonterminatingSeries, "no nonpositive numerator parameter");
  }
  Rational sum = 0;
  Rational term = 1;
  for (long k = 0; k < cutoff; ++k) {
    if (k > 0) {
      // term_k / term_{k-1} = prod(a+k-1) / prod(b+k-1) * z / k
      Rational ratio = p.z / k;
      for (long a : p.numerator) ratio *= a + k - 1;
      for (long b : p.denominator) {
        if (b + k - 1 == 0) {
          throw Error(ErrorCode::kSingularParameters,
                      "denominator Pochhammer vanishes at k=" + std::to_string(k));
        }
        ratio /= b + k - 1;
      }
      term *= ratio;
    }
    sum += term;
  }
  return sum;
}

Rational hyp3f2_terminating(const HypParams& p) {
  if (p.numerator.size() != 3 || p.denominator.size() != 2) {
    throw Error(ErrorCode::kInvalidParameter, "3F2 needs 3 numerator and 2 denominator parameters");
  }
  return hypergeometric_terminating(p);
}

Integer count_ad(int n) {
  require(n >= 1, "Aztec diamond needs n >= 1");
  return ad_power(n);
}

Integer count_ar_se(int a, int b, std::span<const int> s) {
  require(a >= 1 && a <= b, "need 1 <= a <= b");
  require(s.size() == static_cast<std::size_t>(a),
          "need exactly a=" + std::to_string(a) + " kept positions");
  for (std::size_t i = 0; i < s.size(); ++i) {
    require(s[i] >= 1 && s[i] <= b, "position " + std::to_string(s[i]) + " outside 1..b");
    if (i > 0) require(s[i - 1] < s[i], "positions must be strictly increasing");
  }
  Rational value = ad_power(a);
  for (int i = 0; i < a; ++i) {
    for (int j = i + 1; j < a; ++j) value *= fraction(s[j] - s[i], j - i);
  }
  return require_integer(value, "product formula");
}

Integer count_cor1(int a, int i) {
  require(a >= 1 && i >= 1 && i <= a + 1, "need 1 <= i <= a+1");
  return ad_power(a) * binomial_ext(a, i - 1);
}

Integer count_cor2(int a, int b) {
  require(a >= 1 && b >= a, "need 1 <= a <= b");
  return ad_power(a) * binomial_ext(b - 1, a - 1);
}

Integer count_prop_ar_k_j(int a, int k, int j) {
  require(a >= 1 && k >= 1 && j >= 1 && j <= a + k, "bad arguments " + args(a, k, j));
  if (j <= k) return ad_power(a);
  const Rational h = hyp3f2_terminating({{1, 1 - j, 1 - k}, {2 - j, 1 - a - k}, 1});
  return require_integer(ad_power(a) * binomial_ext(a + k - 1, j - 1) *
                             binomial_ext(j - 2, k - 1) * h,
                         "ar_k_j");
}

Integer count_prop_ar_i_j(int a, int i, int j) {
  require(a >= 1 && i >= 1 && j >= 1 && i <= a + 2 && j <= a + 2, "bad arguments " + args(a, i, j));
  return ad_power(a) * (binomial_ext(a, i - 2) * binomial_ext(a, j - 1) +
                        binomial_ext(a, i - 1) * binomial_ext(a, j - 2));
}

Integer count_prop_ar_k1_i(int a, int k, int i) {
  require(a >= 1 && k >= 1 && i >= 1 && i <= a + k, "bad arguments " + args(a, k, i));
  const int ks = std::min(k, i);
  const Rational h =
      hyp3f2_terminating({{1, 1 - ks, i - a - ks}, {i - ks + 1, 2 - a - ks}, -1});
  return require_integer(ad_power(a) * binomial_ext(a + ks - 2, ks - 1) *
                             binomial_ext(a, a + ks - i) * h,
                         "ar_k1_i");
}

Rational count_prop_ar_k1_i_printed(int a, int k, int i) {
  require(a >= 1 && k >= 1 && i >= 1 && i <= a + k, "bad arguments " + args(a, k, i));
  const Rational h = hyp3f2_terminating({{1, -k - 1, i - a - k}, {i - k + 1, 2 - a - k}, -1});
  return Rational(ad_power(a) * binomial_ext(a + k - 2, k - 1) * binomial_ext(a, a - i + k)) * h;
}

Integer count_prop_ad_adjacent(int a, int i, int j) {
  require(a >= 1 && i >= 1 && j >= 1 && i <= a && j <= a, "bad arguments " + args(a, i, j));
  const Rational h = hyp3f2_terminating({{1, 1 - i, 1 - j}, {1 - a, 1 - a}, 2});
  return require_integer(pow2(static_cast<unsigned long>(a) * (a - 1) / 2) *
                             binomial_ext(a - 1, i - 1) * binomial_ext(a - 1, j - 1) * h,
                         "ad_i_j");
}

}  // namespace aztec
