#pragma once

#include <functional>
#include <span>
#include <vector>

#include "aztec/counting.hpp"
#include "aztec/dualgraph.hpp"
#include "aztec/exactalg.hpp"
#include "aztec/geometry.hpp"
#include "aztec/numeric.hpp"

namespace aztec {

// M(G \ {a_1..a_2k}) = Pf(A) / M(G)^{k-1}, A_ij = M(G \ {a_i, a_j}) for i < j.
// The a_i must appear in this cyclic order (either direction) on the outer
// face of G.
Rational ciucu_condensation_count(const DualGraph& graph, std::span<const Cell> face_vertices,
                                  Engine engine = Engine::kDp);

// As above with G the subgraph of host induced on base, and G + W the
// subgraph induced on base symmetric-difference W. The a_i lie on the outer
// face of the host.
Rational generalized_condensation_count(const DualGraph& host, std::span<const Cell> base,
                                        std::span<const Cell> face_vertices,
                                        Engine engine = Engine::kDp);

// Both sides of the quadratic identity behind the generalized condensation,
// evaluated by direct counts.
bool check_prop_ck3(const DualGraph& host, std::span<const Cell> base,
                    std::span<const Cell> vertices, Engine engine = Engine::kDp);

enum class KuoVariant { kKk1, kKk, kKj, kCondCor };

// Checks one of the four-vertex identities on direct counts. The colour
// pattern of w,x,y,z and the colour balance of the graph must fit the variant.
bool check_kuo_identity(KuoVariant variant, const DualGraph& graph, const Cell& w, const Cell& x,
                        const Cell& y, const Cell& z, Engine engine = Engine::kDp);

// Boundary defects of an Aztec rectangle or diamond: betas are white cells
// on NW/SE, alphas black cells on NE/SW.
struct DefectConfiguration {
  Region region;
  std::vector<DefectSpec> betas;
  std::vector<DefectSpec> alphas;
};

// Splits the defects by colour and checks they are distinct boundary cells.
DefectConfiguration make_configuration(Region region, std::span<const DefectSpec> defects);

// The region with every defect removed.
Region residual_region(const DefectConfiguration& config);

enum class EntrySource { kFormula, kEngine };

struct PfaffianOptions {
  EntrySource source = EntrySource::kFormula;
  // Divide by M^{n-k+1} instead of M^{n+k-1}.
  bool printed_exponent = false;
  // Called on the assembled matrix before the Pfaffian is taken.
  std::function<void(SkewMatrix&)> matrix_hook;
};

// AR(a,b) with n+k betas and n alphas, all alphas on NE, k = b - a.
Integer count_mt1(const DefectConfiguration& config, const PfaffianOptions& options = {});

// AR(a,b) with n+k betas and n alphas on any sides.
Integer count_mt2(const DefectConfiguration& config, const PfaffianOptions& options = {});

// AD(a) with n betas and n alphas on any sides.
Integer count_mt3(int a, std::span<const DefectSpec> betas, std::span<const DefectSpec> alphas,
                  const PfaffianOptions& options = {});
Integer count_mt3(const DefectConfiguration& config, const PfaffianOptions& options = {});

}  // namespace aztec
