#ifndef DIAGPROP_OBSTRUCTION_HPP
#define DIAGPROP_OBSTRUCTION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagprop/numeric.hpp"

namespace diagprop {

/* The four diagonal properties the engine reports on.
 *   D   - algebraic: the diagonal in X x X is the zero scheme of a section
 *         of a rank-dim(X) vector bundle;
 *   Dr  - its real topological analogue;
 *   Do  - Dr with an oriented bundle;
 *   Dc  - Dr with a complex bundle (real rank 2 dim).
 * Dc implies Do implies Dr. */
enum class Property { D, Dr, Do, Dc };

enum class Verdict { Holds, Fails, Unknown };

/* Tri-valued flag. Unknown is first class and never silently coerced. */
enum class Flag3 { True, False, Unknown };

enum class Mode { Algebraic, Topological };

enum class VarietyKind {
  ProjectiveSpace,
  Grassmannian,
  Quadric,
  CompleteIntersection,
  K3Generic,
  K3TwoDisjointRationalCurves,
  AbelianSurface,
  Enriques,
  HyperellipticSurface,
  RuledSurface,
  EllipticSurfaceWithSection,
  Product,
  Sphere,
  LieGroup,
  CubicThreefold,
  FakeP2,
  AbelianVariety,
  PicZGeneral,
};

std::string kind_name(VarietyKind k);
std::string property_name(Property p);
std::string verdict_name(Verdict v);

/* Everything the engine accepts as input. Which fields matter depends on the
 * kind; parse_spec_file enforces the per-kind field sets strictly.
 *   n           - P^n / quadric / sphere dimension, ambient P^n for complete
 *                 intersections
 *   r           - subspace dimension for Grassmannian G_r(C^n)
 *   d           - degree of the ample generator's self-intersection on a
 *                 generic K3 (the quartic surface has d = 4)
 *   g           - dimension of an abelian variety
 *   dim         - real dimension of a Lie group, complex dimension for
 *                 pic_z_general
 *   index       - the integer r with omega_X = O(r) for pic_z_general
 *   multidegree - hypersurface degrees of a complete intersection
 *   factors     - components of a product */
struct VarietySpec {
  VarietyKind kind = VarietyKind::ProjectiveSpace;
  std::string name;
  int n = 0;
  int r = 0;
  int d = 0;
  int g = 0;
  int dim = 0;
  int index = 0;
  std::vector<int> multidegree;
  std::vector<VarietySpec> factors;
  Flag3 pic_finitely_generated = Flag3::Unknown;
  Flag3 ample_generator_has_section = Flag3::Unknown;
  Flag3 h1_mod2_zero = Flag3::Unknown;
  Flag3 orientable = Flag3::Unknown;
  bool point_property = false;
  Mode mode = Mode::Algebraic;

  friend bool operator==(const VarietySpec&, const VarietySpec&) = default;
};

/* Structural validation plus contradiction checks on flags (for example,
 * pic_finitely_generated = false on a kind whose Picard group is Z).
 * Throws UnsupportedSpec, WrongDimension, or ContradictoryFlags. */
void validate_spec(const VarietySpec& spec);

/* One applied rule: the rule's name, a citation key into citation_index(),
 * and the recomputed values that ground the step. */
struct TraceEntry {
  std::string rule;
  std::string citation;
  std::vector<std::string> values;
};

struct ObstructionReport {
  Property property = Property::D;
  Verdict verdict = Verdict::Unknown;
  std::vector<TraceEntry> trace;

  std::vector<std::string> citations() const;  // distinct keys, in trace order
};

/* Citation key -> one-sentence statement of the cited result. Keys follow
 * the labels of the underlying literature ("prop:quadric1", "thm:oddquad").  */
const std::map<std::string, std::string>& citation_index();

/* --- cohomologically trivial line bundle search ------------------------- */

/* Scan result for O(n) on a Picard-rank-one space: candidates are the twists
 * that survive both the section exclusions (H^0 != 0 for n >= 0 when the
 * ample generator has a section; H^top != 0 for n <= r by duality against
 * omega = O(r)) and the chi(O(n)) = 0 test. */
struct CandidateEntry {
  int n = 0;
  std::string status;  // "candidate", "excluded_h0", "excluded_htop", "chi_nonzero"
  std::optional<Rational> chi;
};

struct CandidateScan {
  int window_lo = 0;
  int window_hi = 0;
  int canonical_twist = 0;  // omega = O(r)
  std::vector<CandidateEntry> entries;
  std::vector<int> candidates;
  std::vector<TraceEntry> trace;
};

/* Supported specs: projective_space, quadric n = 3, k3_generic,
 * cubic_threefold, and pic_z_general or complete_intersection of dimension
 * >= 3 with canonical twist >= -1 (where the exclusions alone empty the
 * window). Outside the window the exclusions apply symbolically, so the scan
 * is exhaustive. MissingFlag when a needed flag is Unknown; UnsupportedSpec
 * otherwise. */
CandidateScan coh_trivial_candidates(const VarietySpec& spec,
                                     std::optional<int> window_override = std::nullopt);

/* --- single-purpose verdicts -------------------------------------------- */

/* Q3 has no bundle with the point-property class data: chi of a would-be
 * witness is 15/2 - 2 d2, never an integer. Verdict Fails for property D. */
ObstructionReport point_property_q3_verdict();

/* Property Dc on Q_{2m-1}: Holds for m = 1 (the quadric is P^1), Fails for
 * m >= 2 by the parity contradiction a1 + a2 = 1 (mod 2) against the forced
 * a1 = a2 = 0. BadM for m < 1. */
ObstructionReport dc_odd_quadric_verdict(int m);

/* Spin criterion for a complete-intersection 3-fold X in P^n of multidegree
 * d: when n + 1 - sum(d) is odd, X is spin with H^1 = 0, H^2 = Z, so Dc
 * fails; otherwise Unknown. WrongDimension unless n - len(d) = 3. */
ObstructionReport spin_ci_threefold_verdict(int ambient_dim, const std::vector<int>& multidegree);

/* Table-driven sphere verdicts: Dr iff n in {1,2,4,8}; Do iff n in {2,4,8};
 * Dc iff n = 2. */
struct SphereVerdicts {
  ObstructionReport d_r;
  ObstructionReport d_o;
  ObstructionReport d_c;
};
SphereVerdicts sphere_verdicts(int n);

/* Compact odd-dimensional manifolds: Do always fails when orientable; Dr
 * fails when H^1(M; Z/2) = 0, holds for a Lie group with the point property,
 * and is otherwise Unknown. h1_mod2_zero = true together with the Lie-group
 * claim is contradictory input (the Dr verdicts would disagree) and throws
 * ContradictoryFlags, as does h1_mod2_zero = true with orientable = false. */
struct OddDimVerdicts {
  ObstructionReport d_r;
  ObstructionReport d_o;
};
OddDimVerdicts odd_dim_manifold_verdict(bool orientable, Flag3 h1_mod2_zero,
                                        bool lie_group_with_point_property);

/* Every closed almost complex 4-manifold has Dc. */
ObstructionReport dim4_almost_complex_verdict();

/* Necessary condition on a closed 6-manifold with H^1 = 0 and H^2 = Z:
 * Dc forces w_2 = 0. Fails when the hypotheses hold and w_2 != 0; Unknown
 * otherwise. */
ObstructionReport spin_6fold_necessary(bool h1_zero, bool h2_is_Z, bool w2_zero);

/* Property D for the algebraic surface catalog. */
ObstructionReport surface_verdict(const VarietySpec& spec);

/* Dispatch root for property D on algebraic specs. Topological kinds
 * (sphere, lie_group) are out of its domain: UnsupportedSpec points at
 * evaluate_all. */
ObstructionReport diagonal_verdict(const VarietySpec& spec);

/* Every report the spec supports: property D for algebraic mode, the
 * topological properties for topological mode, the three sphere verdicts for
 * spheres, Dr/Do for Lie groups. */
std::vector<ObstructionReport> evaluate_all(const VarietySpec& spec);

}  // namespace diagprop

#endif
