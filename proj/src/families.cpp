#include "aztec/families.hpp"

#include <algorithm>
#include <vector>

#include "aztec/errors.hpp"

namespace aztec {

namespace {

Region minus(const Region& region, std::vector<DefectSpec> defects) {
  return remove_defects(region, defects);
}

}  // namespace

Region region_ar_k(int a, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidParameter, "k must be >= 0");
  return add_gamma_squares(make_aztec_rectangle(a, a + k), k, 1);
}

Region region_ar_se_kept(int a, int b, std::span<const int> s) {
  std::vector<DefectSpec> doomed;
  for (int p = 1; p <= b; ++p) {
    if (std::find(s.begin(), s.end(), p) == s.end()) {
      doomed.push_back(boundary_defect(Side::kSE, p));
    }
  }
  return minus(make_aztec_rectangle(a, b), doomed);
}

Region region_cor1(int a, int i) {
  return minus(make_aztec_rectangle(a, a + 1), {boundary_defect(Side::kSE, i)});
}

Region region_cor2(int a, int b) {
  std::vector<DefectSpec> doomed;
  for (int p = 2; p <= b - a + 1; ++p) doomed.push_back(boundary_defect(Side::kSE, p));
  return minus(make_aztec_rectangle(a, b), doomed);
}

Region region_prop_ar_k_j(int a, int k, int j) {
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "k must be >= 1");
  const Region base = add_gamma_squares(make_aztec_rectangle(a, a + k), k - 1, 2);
  return minus(base, {boundary_defect(Side::kSE, j)});
}

Region region_prop_ar_i_j(int a, int i, int j) {
  return minus(make_aztec_rectangle(a, a + 2),
               {boundary_defect(Side::kSE, i), boundary_defect(Side::kNW, j)});
}

Region region_prop_ar_k1_i(int a, int k, int i) {
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "k must be >= 1");
  std::vector<DefectSpec> doomed;
  for (int p = 2; p <= k; ++p) doomed.push_back(boundary_defect(Side::kSE, p));
  doomed.push_back(boundary_defect(Side::kNW, i));
  return minus(make_aztec_rectangle(a, a + k), doomed);
}

Region region_prop_ad_adjacent(int a, int i, int j) {
  return minus(make_aztec_diamond(a),
               {boundary_defect(Side::kSE, i), boundary_defect(Side::kNE, j)});
}

}  // namespace aztec
