#pragma once

#include <span>

#include "aztec/geometry.hpp"

namespace aztec {

// The regions counted by the closed-form formulas, built cell by cell so the
// engines can check the formulas independently.

// AR(a,a+k) with gamma squares at positions 1..k.
Region region_ar_k(int a, int k);

// AR(a,b) with every SE cell removed except positions s.
Region region_ar_se_kept(int a, int b, std::span<const int> s);

Region region_cor1(int a, int i);
Region region_cor2(int a, int b);

// AR(a,a+k), gamma squares at 2..k, SE cell j removed.
Region region_prop_ar_k_j(int a, int k, int j);

// AR(a,a+2) minus SE cell i and NW cell j.
Region region_prop_ar_i_j(int a, int i, int j);

// AR(a,a+k) minus SE cells 2..k and NW cell i.
Region region_prop_ar_k1_i(int a, int k, int i);

// AD(a) minus SE cell i and NE cell j.
Region region_prop_ad_adjacent(int a, int i, int j);

}  // namespace aztec
