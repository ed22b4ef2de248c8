#include "diagprop/obstruction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "diagprop/catalog.hpp"
#include "diagprop/charclass.hpp"
#include "diagprop/steenrod.hpp"

namespace diagprop {

std::string kind_name(VarietyKind k) {
  switch (k) {
    case VarietyKind::ProjectiveSpace: return "projective_space";
    case VarietyKind::Grassmannian: return "grassmannian";
    case VarietyKind::Quadric: return "quadric";
    case VarietyKind::CompleteIntersection: return "complete_intersection";
    case VarietyKind::K3Generic: return "k3_generic";
    case VarietyKind::K3TwoDisjointRationalCurves: return "k3_two_disjoint_rational_curves";
    case VarietyKind::AbelianSurface: return "abelian_surface";
    case VarietyKind::Enriques: return "enriques";
    case VarietyKind::HyperellipticSurface: return "hyperelliptic_surface";
    case VarietyKind::RuledSurface: return "ruled_surface";
    case VarietyKind::EllipticSurfaceWithSection: return "elliptic_surface_with_section";
    case VarietyKind::Product: return "product";
    case VarietyKind::Sphere: return "sphere";
    case VarietyKind::LieGroup: return "lie_group";
    case VarietyKind::CubicThreefold: return "cubic_threefold";
    case VarietyKind::FakeP2: return "fake_p2";
    case VarietyKind::AbelianVariety: return "abelian_variety";
    case VarietyKind::PicZGeneral: return "pic_z_general";
  }
  return "unknown";
}

std::string property_name(Property p) {
  switch (p) {
    case Property::D: return "D";
    case Property::Dr: return "D_r";
    case Property::Do: return "D_o";
    case Property::Dc: return "D_c";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::vector<std::string> ObstructionReport::citations() const {
  std::vector<std::string> out;
  for (const auto& t : trace) {
    if (t.citation.empty()) continue;
    if (std::find(out.begin(), out.end(), t.citation) == out.end()) out.push_back(t.citation);
  }
  return out;
}

const std::map<std::string, std::string>& citation_index() {
  static const std::map<std::string, std::string> index = {
      {"rule:product",
       "If X and Y both have the property, so does X x Y: witness bundles and sections pair "
       "componentwise across the product decomposition."},
      {"rule:curves",
       "Every smooth projective curve has (D): the diagonal is a divisor in C x C, so the "
       "section of its associated line bundle is a rank-1 witness."},
      {"rule:riemann-surface",
       "A compact Riemann surface has (D_c): the diagonal divisor's line bundle is a complex "
       "rank-1 witness."},
      {"rule:grassmannian",
       "On G_r(C^n) the bundle Hom(S, Q) of the tautological sub- and quotient bundles has rank "
       "r(n-r) = dim G and a section vanishing exactly on the diagonal, so (D) and (D_c) hold; "
       "projective spaces are the r = 1 case, and Q_4 = G_2(C^4) is covered as the Pluecker "
       "quadric."},
      {"thm:top",
       "The sphere S^n has (D_r) exactly for n in {1, 2, 4, 8}; the witness sections come from "
       "the multiplications of R, C, H, O."},
      {"thm:prop1",
       "The sphere S^n has (D_o) exactly for n in {2, 4, 8} and (D_c) exactly for n = 2."},
      {"thm:prop3",
       "A compact orientable manifold of odd dimension never has (D_o); if additionally "
       "H^1(M; Z/2) = 0, it does not have (D_r) either."},
      {"rem:almcomp",
       "(D_c) implies (D_o) implies (D_r): a complex bundle carries an orientation and an "
       "oriented bundle is in particular a bundle."},
      {"ex:liegroup",
       "A compact Lie group has the point property (translate a section vanishing only at the "
       "identity), hence (D_r); RP^3 = SO(3) shows the H^1(M; Z/2) = 0 hypothesis in the (D_r) "
       "obstruction cannot be dropped."},
      {"thm:dim4",
       "Every closed almost complex 4-manifold has (D_c)."},
      {"thm:spinprop2",
       "A closed 6-manifold with H^1(M; Z) = 0 and H^2(M; Z) = Z that has (D_c) must be spin: "
       "w_2(M) = 0."},
      {"rem:spinproprmk",
       "Being spin is necessary, not sufficient, for (D_c) on such 6-manifolds: a passing "
       "parity test decides nothing."},
      {"lem:cherneven",
       "On a closed almost complex 6-manifold M, every complex rank-3 bundle E satisfies "
       "<c_3(E) - c_2(E)(c_1(M) + c_1(E)), [M]> = 0 (mod 2)."},
      {"prop:quadricZ",
       "CH*(Q_{2m-1}) = Z[x,y]/(x^m - 2y, y^2) with deg x = 2, deg y = 2m; the degree-2k "
       "component is Z x^k for k <= m-1 and Z x^(k-m) y for m <= k <= 2m-1, and the fundamental "
       "class pairs <x^(2m-1)> = 2, <x^(m-1) y> = 1."},
      {"cor:Z2coho",
       "Mod 2 the quadric ring becomes Z/2[xi, eta]/(xi^m, eta^2)."},
      {"lem:steenrod2",
       "On H*(Q_{2m-1}; Z/2): Sq^2(xi) = xi^2, Sq^2(eta) = (m-1) xi eta, and by the Cartan "
       "formula Sq^2(xi^(m-2) eta) = xi^(m-1) eta."},
      {"prop:cherniden2",
       "A rank-(2m-1) complex bundle E on Q_{2m-1} satisfies c_(2m-1)(E) = c_(2m-2)(E) "
       "(c_1(E) + 1) (mod 2) in the mod-2 coordinates."},
      {"thm:oddquad",
       "Q_{2m-1} fails (D_c) for every m >= 2: the diagonal restriction forces the slice "
       "first-Chern parities a_1 + a_2 = 1 (mod 2), while the mod-2 congruence forces "
       "a_1 = a_2 = 0."},
      {"thm:oddquad-alg",
       "Q_{2m-1} fails the algebraic property (D) for every m >= 2, by the algebraic form of "
       "the same parity contradiction."},
      {"prop:quadric1",
       "Q_3 has no rank-3 bundle with d_1 = d_3 = 1: its Euler characteristic would be "
       "15/2 - 2 d_2, never an integer; the only cohomologically trivial line bundles on Q_3 "
       "are O(-1) and O(-2)."},
      {"eq:hrr",
       "chi(Q_3, E) = (2 d_1^3 - 3 d_1 d_2 + 3 d_3)/6 + 3(d_1^2 - d_2)/2 + 13 d_1/6 + rank "
       "for a bundle with c_1 = d_1 x, c_2 = d_2 y, c_3 = d_3 xy."},
      {"thm:Tm",
       "If X has (D) with witness bundle E, each point slice E|_{x} x X has a section vanishing "
       "exactly at x, and there are cohomologically trivial line bundles L_1, L_2 on X with "
       "L_1^(-1) = L_2 tensor omega_X^(-1)."},
      {"eq:omega",
       "det(E)|_Delta = omega_X^(-1) for any witness bundle E: the normal bundle of the "
       "diagonal is the tangent bundle."},
      {"eq:delta",
       "[Delta] = c_n(E) in the middle cohomology of X x X for any rank-n witness bundle E."},
      {"prop:Tz",
       "A smooth projective surface with Picard group Z whose ample generator has a section "
       "carries no cohomologically trivial line bundle unless it is P^2; no such surface other "
       "than P^2 has (D)."},
      {"prop:two",
       "A K3 surface with two disjoint smooth rational curves C_1, C_2 has (D): "
       "O(C_1 - C_2) is cohomologically trivial."},
      {"prop:Pk3",
       "On a generic K3 of degree d, chi(O(n)) = d n^2 / 2 + 2 >= 2 for every n, so no line "
       "bundle is cohomologically trivial and (D) fails."},
      {"thm:th-surf",
       "Surface catalog: (D) holds for birationally ruled, abelian, bielliptic, and Enriques "
       "surfaces, for K3s containing two disjoint rational curves, and for relatively minimal "
       "elliptic surfaces with a section; it fails for generic K3s (in particular generic "
       "quartics) and for Pic = Z surfaces, other than P^2, whose ample generator has a "
       "section."},
      {"prop:fano1",
       "A Fano variety of dimension >= 3 with Pic = Z and (D) must admit a cohomologically "
       "trivial O(t) with t < 0 and r - t < 0 (omega = O(r)); this forces index >= 2, "
       "i.e. r <= -2."},
      {"cor:fano-ci",
       "A complete intersection of dimension >= 3 in P^n with total degree sum(d) >= n has "
       "omega = O(sum(d) - n - 1) with canonical twist >= -1, so (D) fails."},
      {"cor:compinter",
       "A complete-intersection 3-fold in P^n of multidegree (d_1, ..., d_k) has w_2 = 0 iff "
       "n + 1 - sum(d) is even; when that parity is odd, (D_c) fails."},
      {"cor:hyperP4",
       "A hypersurface threefold of degree d in P^4 can have (D_c) only if 5 - d is even."},
      {"lem:cubic-point",
       "On a smooth cubic threefold the only cohomologically trivial line bundle is O(-1); "
       "O(1) has the point property, so every necessary condition is met and (D) remains "
       "undecided."},
      {"note:abelian-gt2",
       "Jacobians of curves satisfy (D), but counterexamples of O. Debarre show that general "
       "abelian varieties of dimension > 2 do not; an unqualified abelian variety therefore "
       "stays undecided."},
      {"rem:even-quadric",
       "Conjecturally the only quadrics with (D) are Q_1, Q_2 = P^1 x P^1, and Q_4 = G_2(C^4); "
       "even-dimensional quadrics of dimension >= 6 are open."},
      {"rem:fakep2",
       "Whether a fake projective plane (same invariants as P^2, different fundamental group) "
       "has (D) is open."},
      {"prop:Pwpp",
       "A smooth projective variety has (D) if and only if it has the weak point property; "
       "group varieties with a translated point-section witness satisfy it."},
      {"lem:Pic",
       "Pic(Q_{2m-1}) = Z O(1) with omega = O(-(2m-1)); more generally the catalog's Pic = Z "
       "spaces have omega = O(r) for the recorded canonical twist r."},
  };
  return index;
}

namespace {

TraceEntry entry(std::string rule, std::string citation, std::vector<std::string> values = {}) {
  return TraceEntry{std::move(rule), std::move(citation), std::move(values)};
}

ObstructionReport report(Property p, Verdict v) {
  ObstructionReport r;
  r.property = p;
  r.verdict = v;
  return r;
}

std::string istr(long long v) { return std::to_string(v); }

int spec_complex_dim(const VarietySpec& s) {
  switch (s.kind) {
    case VarietyKind::ProjectiveSpace: return s.n;
    case VarietyKind::Grassmannian: return s.r * (s.n - s.r);
    case VarietyKind::Quadric: return s.n;
    case VarietyKind::CompleteIntersection:
      return s.n - static_cast<int>(s.multidegree.size());
    case VarietyKind::K3Generic:
    case VarietyKind::K3TwoDisjointRationalCurves:
    case VarietyKind::AbelianSurface:
    case VarietyKind::Enriques:
    case VarietyKind::HyperellipticSurface:
    case VarietyKind::RuledSurface:
    case VarietyKind::EllipticSurfaceWithSection:
    case VarietyKind::FakeP2: return 2;
    case VarietyKind::CubicThreefold: return 3;
    case VarietyKind::AbelianVariety: return s.g;
    case VarietyKind::PicZGeneral: return s.dim;
    case VarietyKind::Product: {
      int d = 0;
      for (const auto& f : s.factors) d += spec_complex_dim(f);
      return d;
    }
    case VarietyKind::Sphere:
    case VarietyKind::LieGroup: return -1;  // not complex-algebraic input
  }
  return -1;
}

bool contains_topological_kind(const VarietySpec& s) {
  if (s.kind == VarietyKind::Sphere || s.kind == VarietyKind::LieGroup) return true;
  for (const auto& f : s.factors)
    if (contains_topological_kind(f)) return true;
  return false;
}

/* Kinds whose Picard group is known finitely generated / known not so. */
bool pic_known_fg(const VarietySpec& s) {
  switch (s.kind) {
    case VarietyKind::ProjectiveSpace:
    case VarietyKind::Grassmannian:
    case VarietyKind::Quadric:
    case VarietyKind::K3Generic:
    case VarietyKind::K3TwoDisjointRationalCurves:
    case VarietyKind::Enriques:
    case VarietyKind::CubicThreefold:
    case VarietyKind::FakeP2:
    case VarietyKind::PicZGeneral: return true;
    case VarietyKind::CompleteIntersection: return spec_complex_dim(s) >= 2;
    default: return false;
  }
}

bool pic_known_not_fg(const VarietySpec& s) {
  switch (s.kind) {
    case VarietyKind::AbelianSurface:
    case VarietyKind::HyperellipticSurface: return true;
    case VarietyKind::AbelianVariety: return true;
    default: return false;
  }
}

bool section_known_true(const VarietySpec& s) {
  switch (s.kind) {
    case VarietyKind::ProjectiveSpace:
    case VarietyKind::Grassmannian:
    case VarietyKind::Quadric:
    case VarietyKind::CompleteIntersection:
    case VarietyKind::K3Generic:
    case VarietyKind::CubicThreefold: return true;
    default: return false;
  }
}

}  // namespace

void validate_spec(const VarietySpec& spec) {
  switch (spec.kind) {
    case VarietyKind::ProjectiveSpace:
      if (spec.n < 1) fail(Errc::WrongDimension, "projective space needs n >= 1");
      break;
    case VarietyKind::Grassmannian:
      if (spec.r < 1 || spec.r >= spec.n)
        fail(Errc::WrongDimension, "grassmannian needs 1 <= r < n");
      break;
    case VarietyKind::Quadric:
      if (spec.n < 1) fail(Errc::WrongDimension, "quadric needs n >= 1");
      break;
    case VarietyKind::CompleteIntersection: {
      for (int d : spec.multidegree)
        if (d < 1) fail(Errc::UnsupportedSpec, "multidegrees must be positive");
      if (spec.n < 2) fail(Errc::WrongDimension, "complete intersection needs ambient n >= 2");
      if (spec_complex_dim(spec) < 1)
        fail(Errc::WrongDimension, "complete intersection needs dimension n - #degrees >= 1");
      break;
    }
    case VarietyKind::K3Generic:
      if (spec.d < 2 || spec.d % 2 != 0)
        fail(Errc::UnsupportedSpec,
             "a K3 polarization degree is a positive even integer (the intersection form is "
             "even); got d = " + istr(spec.d));
      break;
    case VarietyKind::AbelianVariety:
      if (spec.g < 1) fail(Errc::WrongDimension, "abelian variety needs g >= 1");
      break;
    case VarietyKind::Sphere:
      if (spec.n < 1) fail(Errc::WrongDimension, "sphere needs n >= 1");
      break;
    case VarietyKind::LieGroup:
      if (spec.dim < 1) fail(Errc::WrongDimension, "lie group needs dim >= 1");
      if (spec.orientable == Flag3::False)
        fail(Errc::ContradictoryFlags, "compact Lie groups are parallelizable, hence orientable");
      break;
    case VarietyKind::PicZGeneral:
      if (spec.dim < 2) fail(Errc::WrongDimension, "pic_z_general needs dim >= 2");
      break;
    case VarietyKind::Product:
      if (spec.factors.size() < 2)
        fail(Errc::UnsupportedSpec, "a product needs at least two factors");
      for (const auto& f : spec.factors) validate_spec(f);
      if (spec.mode == Mode::Algebraic && contains_topological_kind(spec))
        fail(Errc::UnsupportedSpec,
             "a sphere or Lie-group factor needs mode = topological on the product");
      break;
    default: break;
  }

  if (spec.pic_finitely_generated == Flag3::False && pic_known_fg(spec))
    fail(Errc::ContradictoryFlags, "pic_finitely_generated = false contradicts kind " +
                                       kind_name(spec.kind) + ", whose Picard group is finitely "
                                       "generated; not reinterpreting the spec");
  if (spec.pic_finitely_generated == Flag3::True && pic_known_not_fg(spec))
    fail(Errc::ContradictoryFlags, "pic_finitely_generated = true contradicts kind " +
                                       kind_name(spec.kind) +
                                       ", whose Pic^0 is a positive-dimensional torus");
  if (spec.ample_generator_has_section == Flag3::False && section_known_true(spec))
    fail(Errc::ContradictoryFlags, "ample_generator_has_section = false contradicts kind " +
                                       kind_name(spec.kind));
  if (spec.orientable == Flag3::False && spec.h1_mod2_zero == Flag3::True)
    fail(Errc::ContradictoryFlags,
         "h1_mod2_zero = true forces w_1 = 0, contradicting orientable = false");
}

/******** cohomologically trivial twist scan ********/

namespace {

struct ChiModel {
  int canonical_twist = 0;
  int dim = 0;
  bool has_section = true;
  std::string formula;
  std::string citation;
  std::optional<std::function<Rational(int)>> chi;
};

ChiModel chi_model_for(const VarietySpec& spec) {
  ChiModel m;
  switch (spec.kind) {
    case VarietyKind::ProjectiveSpace: {
      const int n = spec.n;
      m.canonical_twist = -(n + 1);
      m.dim = n;
      m.formula = "chi(O(t)) = binom(t + " + istr(n) + ", " + istr(n) + ")";
      m.citation = "lem:Pic";
      m.chi = [n](int t) { return Rational(binomial(Int(t) + n, static_cast<unsigned>(n))); };
      return m;
    }
    case VarietyKind::Quadric: {
      if (spec.n != 3)
        fail(Errc::UnsupportedSpec,
             "the twist scan on quadrics is supported for n = 3 (closed-form chi); got n = " +
                 istr(spec.n));
      m.canonical_twist = -3;
      m.dim = 3;
      m.formula = "chi(O(t)) = (2 t^3 + 9 t^2 + 13 t + 6)/6";
      m.citation = "prop:quadric1";
      m.chi = [](int t) { return hrr_q3_closed_form(1, t, 0, 0); };
      return m;
    }
    case VarietyKind::K3Generic: {
      const int d = spec.d;
      m.canonical_twist = 0;
      m.dim = 2;
      m.formula = "chi(O(t)) = " + istr(d) + " t^2 / 2 + 2";
      m.citation = "prop:Pk3";
      m.chi = [d](int t) { return Rational(Int(d) * t * t, 2) + 2; };
      return m;
    }
    case VarietyKind::CubicThreefold: {
      m.canonical_twist = -2;
      m.dim = 3;
      m.formula = "chi(O(t)) = (t + 1)(t^2 + 2t + 2)/2";
      m.citation = "lem:cubic-point";
      m.chi = [](int t) { return Rational(Int(t + 1) * (Int(t) * t + 2 * t + 2), 2); };
      return m;
    }
    case VarietyKind::PicZGeneral: {
      if (spec.ample_generator_has_section == Flag3::Unknown)
        fail(Errc::MissingFlag,
             "the twist scan on pic_z_general needs ample_generator_has_section set");
      if (spec.ample_generator_has_section == Flag3::False)
        fail(Errc::UnsupportedSpec,
             "the twist scan assumes the ample generator has a section; without it the H^0 "
             "exclusion is unavailable");
      if (spec.index < -1)
        fail(Errc::UnsupportedSpec,
             "no chi data for a general Pic = Z spec with canonical twist <= -2; twists in (" +
                 istr(spec.index) + ", 0) would stay undecided");
      m.canonical_twist = spec.index;
      m.dim = spec.dim;
      m.formula = "no chi polynomial; the section exclusions already cover every twist";
      m.citation = "prop:Tz";
      return m;
    }
    case VarietyKind::CompleteIntersection: {
      const int dim = spec_complex_dim(spec);
      int sum = 0;
      for (int d : spec.multidegree) sum += d;
      const int r = sum - spec.n - 1;
      if (dim < 3 || r < -1)
        fail(Errc::UnsupportedSpec,
             "the twist scan on complete intersections covers dimension >= 3 with canonical "
             "twist >= -1 (total degree >= n)");
      m.canonical_twist = r;
      m.dim = dim;
      m.formula = "no chi polynomial needed: canonical twist >= -1 empties the window";
      m.citation = "cor:fano-ci";
      return m;
    }
    default:
      fail(Errc::UnsupportedSpec, "no cohomologically-trivial-twist data for kind '" +
                                      kind_name(spec.kind) +
                                      "'; supported: projective_space, quadric n=3, k3_generic, "
                                      "cubic_threefold, pic_z_general, complete_intersection");
  }
}

}  // namespace

CandidateScan coh_trivial_candidates(const VarietySpec& spec, std::optional<int> window_override) {
  validate_spec(spec);
  ChiModel model = chi_model_for(spec);
  const int r = model.canonical_twist;

  int w = std::abs(r) + model.dim + 10;
  if (window_override) {
    if (*window_override < 1) fail(Errc::UnsupportedSpec, "chi window must be positive");
    w = *window_override;
  }

  CandidateScan scan;
  scan.window_lo = -w;
  scan.window_hi = w;
  scan.canonical_twist = r;
  for (int t = -w; t <= w; ++t) {
    CandidateEntry e;
    e.n = t;
    if (t >= 0 && model.has_section) {
      e.status = "excluded_h0";
    } else if (r - t >= 0) {
      e.status = "excluded_htop";
    } else if (model.chi) {
      e.chi = (*model.chi)(t);
      e.status = (*e.chi == 0) ? "candidate" : "chi_nonzero";
    } else {
      // canonical twist >= -1 leaves no twist with t < 0 and t > r
      fail(Errc::Internal, "twist " + istr(t) + " escaped the section exclusions");
    }
    if (e.status == "candidate") scan.candidates.push_back(t);
    scan.entries.push_back(std::move(e));
  }

  std::string cands = "{";
  for (std::size_t i = 0; i < scan.candidates.size(); ++i)
    cands += (i ? ", " : "") + istr(scan.candidates[i]);
  cands += "}";
  scan.trace.push_back(entry(
      "coh-trivial-scan", "thm:Tm",
      {"omega = O(" + istr(r) + "); window [" + istr(scan.window_lo) + ", " +
           istr(scan.window_hi) + "] (outside it the exclusions apply symbolically)",
       "t >= 0 excluded by H^0(O(t)) != 0; t <= " + istr(r) + " excluded by H^" +
           istr(model.dim) + "(O(t)) = H^0(O(" + istr(r) + " - t))* != 0",
       model.formula, "candidates: " + cands}));
  scan.trace.push_back(entry("chi-zero-filter", model.citation,
                             {"a cohomologically trivial O(t) needs chi(O(t)) = 0 and both "
                              "exclusions to fail"}));
  return scan;
}

/******** single-purpose verdicts ********/

ObstructionReport point_property_q3_verdict() {
  ObstructionReport rep = report(Property::D, Verdict::Fails);

  rep.trace.push_back(entry(
      "witness-slice-data", "thm:Tm",
      {"a witness for (D) on Q_3 slices to a rank-3 bundle E on Q_3 with a section vanishing at "
       "one point: c_3(E) = [point], so d_3 = 1",
       "det constraint fixes d_1 = 1 on the slice in question"}));

  std::string sweep = "chi(E) = 15/2 - 2 d_2 for d_2 in [-5, 5]:";
  bool all_non_integral = true;
  for (int d2 = -5; d2 <= 5; ++d2) {
    Rational chi = hrr_q3_closed_form(3, 1, d2, 1);
    sweep += " " + rational_to_string(chi);
    if (denominator(chi) == 1) all_non_integral = false;
  }
  if (!all_non_integral)
    fail(Errc::Internal, "chi sweep produced an integer; the non-integrality rule is broken");
  rep.trace.push_back(entry("chi-sweep", "eq:hrr",
                            {sweep, "the denominator 2 persists: chi is never an integer, so no "
                                    "such bundle exists"}));

  VarietySpec q3;
  q3.kind = VarietyKind::Quadric;
  q3.n = 3;
  CandidateScan scan = coh_trivial_candidates(q3);
  std::string cands;
  for (int c : scan.candidates) cands += (cands.empty() ? "" : ", ") + istr(c);
  rep.trace.push_back(entry(
      "cohomologically-trivial-twists", "prop:quadric1",
      {"surviving twists on Q_3: {" + cands + "}",
       "pairing L_1^(-1) = L_2 tensor omega^(-1) on twists a, b with omega = O(-3) reads "
       "-a = b + 3: a = -1, b = -2 gives 1 = -2 + 3",
       "both candidate assignments lead to the chi sweep above"}));
  return rep;
}

namespace {

/* The shared parity contradiction on Q_{2m-1}, phrased for the property the
 * caller reports on. The closing citation differs: the smooth-topology
 * statement versus its algebraic counterpart. */
void append_odd_quadric_contradiction(ObstructionReport& rep, int m,
                                      const std::string& closing_citation) {
  CharClassVector tangent = quadric_tangent_class(m);
  RingPtr ring = tangent.ring;
  Exponents x_exp(ring->generator_count(), 0);
  x_exp[0] = 1;
  const Int c1_coord = tangent.c[1].coefficient(x_exp);
  if (c1_coord != 2 * m - 1) fail(Errc::Internal, "tangent c_1 is not (2m-1)x");

  rep.trace.push_back(entry(
      "diagonal-restriction", "eq:omega",
      {"det(E)|_Delta = det(T): with c_1(E) = a_1 (x x 1) + a_2 (1 x x), restriction gives "
       "(a_1 + a_2) x = c_1(T)"}));
  rep.trace.push_back(entry(
      "tangent-class", "prop:quadricZ",
      {"c(T) = (1+x)^(2m+1)/(1+2x) in CH*(Q_" + istr(2 * m - 1) + "): c_1(T) = " +
           c1_coord.str() + " x",
       "a_1 + a_2 = " + c1_coord.str() + " = 1 (mod 2)"}));
  rep.trace.push_back(entry(
      "slice-top-chern", "eq:delta",
      {"each slice bundle E_i has c_(2m-1)(E_i) = [point], so c_(2m-1)(E_i) = 1 (mod 2)"}));

  std::string passing;
  for (int a1 = 0; a1 <= 1; ++a1)
    for (int c = 0; c <= 1; ++c)
      if (congruence_cherniden2(m, a1, c, 1))
        passing += (passing.empty() ? "" : "; ") + std::string("a_i = ") + istr(a1) +
                   ", c_(2m-2) = " + istr(c);
  rep.trace.push_back(entry(
      "congruence", "prop:cherniden2",
      {"c_(2m-1) = c_(2m-2)(c_1 + 1) (mod 2) with c_(2m-1) = 1 admits only: " + passing,
       "so a_1 = a_2 = 0 (mod 2)"}));
  rep.trace.push_back(entry(
      "contradiction", closing_citation,
      {"a_1 + a_2 = 0 (mod 2) contradicts a_1 + a_2 = 1 (mod 2)"}));
}

}  // namespace

ObstructionReport dc_odd_quadric_verdict(int m) {
  if (m < 1) fail(Errc::BadM, "Q_{2m-1} needs m >= 1, got m = " + istr(m));
  if (m == 1) {
    ObstructionReport rep = report(Property::Dc, Verdict::Holds);
    rep.trace.push_back(entry("riemann-surface", "rule:riemann-surface",
                              {"Q_1 = P^1: the diagonal divisor's line bundle is a complex "
                               "rank-1 witness"}));
    return rep;
  }
  ObstructionReport rep = report(Property::Dc, Verdict::Fails);
  append_odd_quadric_contradiction(rep, m, "thm:oddquad");
  return rep;
}

ObstructionReport spin_ci_threefold_verdict(int ambient_dim, const std::vector<int>& multidegree) {
  if (ambient_dim - static_cast<int>(multidegree.size()) != 3)
    fail(Errc::WrongDimension, "the spin criterion covers complete-intersection 3-folds: need "
                               "n - #degrees = 3, got n = " +
                                   istr(ambient_dim) + " with " + istr(multidegree.size()) +
                                   " degrees");
  for (int d : multidegree)
    if (d < 1) fail(Errc::UnsupportedSpec, "multidegrees must be positive");

  int sum = 0;
  std::string degs;
  for (int d : multidegree) {
    sum += d;
    degs += (degs.empty() ? "" : ", ") + istr(d);
  }
  const int v = ambient_dim + 1 - sum;
  const int parity = ((v % 2) + 2) % 2;

  if (parity == 1) {
    ObstructionReport rep = report(Property::Dc, Verdict::Fails);
    rep.trace.push_back(entry(
        "sw-class", "cor:compinter",
        {"X in P^" + istr(ambient_dim) + " of multidegree (" + degs + "): w_2 = (n + 1 - sum d) "
         "h (mod 2) with n + 1 - sum d = " + istr(v) + " = 1 (mod 2), so w_2 != 0",
         "a complete-intersection 3-fold has H^1 = 0 and H^2 = Z"}));
    rep.trace.push_back(
        entry("spin-necessity", "thm:spinprop2", {"(D_c) would force w_2 = 0"}));
    if (ambient_dim == 4 && multidegree.size() == 1)
      rep.trace.push_back(entry("hypersurface-case", "cor:hyperP4",
                                {"degree d = " + istr(multidegree[0]) + " in P^4: 5 - d = " +
                                 istr(5 - multidegree[0]) + " is odd"}));
    return rep;
  }
  ObstructionReport rep = report(Property::Dc, Verdict::Unknown);
  rep.trace.push_back(entry(
      "spin-parity-passes", "rem:spinproprmk",
      {"n + 1 - sum d = " + istr(v) + " = 0 (mod 2): X is spin, and the necessary condition "
       "is silent"}));
  return rep;
}

SphereVerdicts sphere_verdicts(int n) {
  if (n < 1) fail(Errc::WrongDimension, "sphere needs n >= 1");
  SphereVerdicts v;
  const bool dr = n == 1 || n == 2 || n == 4 || n == 8;
  const bool d_o = n == 2 || n == 4 || n == 8;
  const bool dc = n == 2;

  v.d_r = report(Property::Dr, dr ? Verdict::Holds : Verdict::Fails);
  v.d_r.trace.push_back(entry("sphere-table", "thm:top",
                              {"n = " + istr(n) + "; (D_r) table {1, 2, 4, 8}: " +
                               (dr ? "member" : "not a member")}));

  v.d_o = report(Property::Do, d_o ? Verdict::Holds : Verdict::Fails);
  v.d_o.trace.push_back(entry("sphere-table", "thm:prop1",
                              {"n = " + istr(n) + "; (D_o) table {2, 4, 8}: " +
                               (d_o ? "member" : "not a member")}));

  v.d_c = report(Property::Dc, dc ? Verdict::Holds : Verdict::Fails);
  v.d_c.trace.push_back(entry("sphere-table", "thm:prop1",
                              {"n = " + istr(n) + "; (D_c) table {2}: " +
                               (dc ? "member" : "not a member")}));
  if (!dc && d_o)
    v.d_c.trace.push_back(entry("almost-complex", "rem:almcomp",
                                {"S^" + istr(n) + " admits no almost complex structure, so no "
                                 "complex witness exists despite (D_o)"}));
  return v;
}

OddDimVerdicts odd_dim_manifold_verdict(bool orientable, Flag3 h1_mod2_zero,
                                        bool lie_group_with_point_property) {
  if (h1_mod2_zero == Flag3::True && lie_group_with_point_property)
    fail(Errc::ContradictoryFlags,
         "h1_mod2_zero = true makes (D_r) fail, while a Lie group with the point property has "
         "(D_r); the inputs cannot describe one manifold");
  if (h1_mod2_zero == Flag3::True && !orientable)
    fail(Errc::ContradictoryFlags,
         "h1_mod2_zero = true forces w_1 = 0, contradicting non-orientability");

  OddDimVerdicts v;
  if (orientable) {
    v.d_o = report(Property::Do, Verdict::Fails);
    v.d_o.trace.push_back(entry("odd-dimension", "thm:prop3",
                                {"compact orientable odd-dimensional manifolds never have "
                                 "(D_o)"}));
  } else {
    v.d_o = report(Property::Do, Verdict::Unknown);
    v.d_o.trace.push_back(entry("odd-dimension", "thm:prop3",
                                {"the (D_o) obstruction is stated for orientable manifolds"}));
  }

  if (lie_group_with_point_property) {
    v.d_r = report(Property::Dr, Verdict::Holds);
    v.d_r.trace.push_back(entry("lie-group-point-property", "ex:liegroup",
                                {"translating a section vanishing only at the identity gives "
                                 "the point property, hence (D_r)"}));
  } else if (h1_mod2_zero == Flag3::True) {
    v.d_r = report(Property::Dr, Verdict::Fails);
    v.d_r.trace.push_back(entry("odd-dimension-h1", "thm:prop3",
                                {"H^1(M; Z/2) = 0 on a compact orientable odd-dimensional "
                                 "manifold rules out (D_r)"}));
  } else {
    v.d_r = report(Property::Dr, Verdict::Unknown);
    v.d_r.trace.push_back(entry(
        "odd-dimension-h1", "thm:prop3",
        {std::string("H^1(M; Z/2) ") +
         (h1_mod2_zero == Flag3::False ? "!= 0: the obstruction does not apply" : "unknown"),
         "RP^3 = SO(3) shows (D_r) can hold when H^1(M; Z/2) != 0, so no verdict follows"}));
  }
  return v;
}

ObstructionReport dim4_almost_complex_verdict() {
  ObstructionReport rep = report(Property::Dc, Verdict::Holds);
  rep.trace.push_back(entry("almost-complex-4-manifold", "thm:dim4",
                            {"every closed almost complex 4-manifold has (D_c); the needed "
                             "degree-2 class on M x M always exists"}));
  return rep;
}

ObstructionReport spin_6fold_necessary(bool h1_zero, bool h2_is_Z, bool w2_zero) {
  if (h1_zero && h2_is_Z && !w2_zero) {
    ObstructionReport rep = report(Property::Dc, Verdict::Fails);
    rep.trace.push_back(entry("spin-necessity", "thm:spinprop2",
                              {"H^1 = 0, H^2 = Z, w_2 != 0: the necessary spin condition "
                               "fails"}));
    return rep;
  }
  ObstructionReport rep = report(Property::Dc, Verdict::Unknown);
  std::string why;
  if (!h1_zero) why = "H^1 = 0 not asserted";
  else if (!h2_is_Z) why = "H^2 = Z not asserted";
  else why = "w_2 = 0: the manifold is spin and the necessary condition is silent";
  rep.trace.push_back(entry("spin-necessity", w2_zero ? "rem:spinproprmk" : "thm:spinprop2",
                            {why + "; this rule draws no conclusion"}));
  return rep;
}

/******** surface and diagonal dispatch ********/

namespace {

ObstructionReport holds_with_chi(const std::string& rule, const std::string& citation,
                                 std::vector<std::string> values) {
  ObstructionReport rep = report(Property::D, Verdict::Holds);
  rep.trace.push_back(entry(rule, citation, std::move(values)));
  return rep;
}

std::string window_str(const CandidateScan& s) {
  return "[" + istr(s.window_lo) + ", " + istr(s.window_hi) + "]";
}

/* FAILS via the empty twist scan: Pic = Z, section, no cohomologically
 * trivial line bundle. */
ObstructionReport fails_by_empty_scan(const VarietySpec& scan_spec, const std::string& citation,
                                      std::vector<std::string> extra) {
  CandidateScan scan = coh_trivial_candidates(scan_spec);
  if (!scan.candidates.empty())
    fail(Errc::Internal, "expected an empty candidate scan for kind " +
                             kind_name(scan_spec.kind));
  ObstructionReport rep = report(Property::D, Verdict::Fails);
  std::size_t excluded_h0 = 0, excluded_htop = 0, chi_nonzero = 0;
  Rational min_chi;
  bool have_chi = false;
  for (const auto& e : scan.entries) {
    if (e.status == "excluded_h0") ++excluded_h0;
    if (e.status == "excluded_htop") ++excluded_htop;
    if (e.status == "chi_nonzero") ++chi_nonzero;
    if (e.chi && (!have_chi || *e.chi < min_chi)) {
      min_chi = *e.chi;
      have_chi = true;
    }
  }
  std::vector<std::string> values = {
      "twist scan over " + window_str(scan) + " with omega = O(" + istr(scan.canonical_twist) +
          "): " + istr(excluded_h0) + " excluded by H^0, " + istr(excluded_htop) +
          " by H^top, " + istr(chi_nonzero) + " by chi != 0; no candidate survives"};
  if (have_chi) values.push_back("minimal chi over the window: " + rational_to_string(min_chi));
  for (auto& v : extra) values.push_back(std::move(v));
  rep.trace.push_back(entry("no-cohomologically-trivial-twist", citation, std::move(values)));
  rep.trace.push_back(entry("necessity", "thm:Tm",
                            {"(D) requires cohomologically trivial line bundles; none exist"}));
  return rep;
}

ObstructionReport product_verdict_algebraic(const VarietySpec& spec);

ObstructionReport ci_surface_verdict(int n, const std::vector<int>& degrees) {
  int sum = 0;
  Int prod = 1;
  std::string degs;
  for (int d : degrees) {
    sum += d;
    prod *= d;
    degs += (degs.empty() ? "" : ", ") + istr(d);
  }
  if (sum <= n) {
    return holds_with_chi(
        "del-pezzo-surface", "thm:th-surf",
        {"multidegree (" + degs + ") in P^" + istr(n) + ": sum d = " + istr(sum) + " <= " +
             istr(n) + ", a rational (del Pezzo or quadric) surface, birationally ruled",
         "a pulled-back line bundle of degree g - 1 = -1 on the base curve P^1 has chi = "
         "(g - 1) + 1 - g = 0"});
  }
  if (sum == n + 1) {
    VarietySpec k3;
    k3.kind = VarietyKind::K3Generic;
    k3.d = static_cast<int>(prod);
    ObstructionReport rep = fails_by_empty_scan(
        k3, "prop:Pk3",
        {"a complete-intersection K3 (sum d = n + 1) of degree " + prod.str(),
         "verdict for a very general member: Pic = Z by the Noether-Lefschetz theorem"});
    return rep;
  }
  VarietySpec gz;
  gz.kind = VarietyKind::PicZGeneral;
  gz.dim = 2;
  gz.index = sum - n - 1;
  gz.ample_generator_has_section = Flag3::True;
  return fails_by_empty_scan(
      gz, "prop:Tz",
      {"a general-type complete-intersection surface: omega = O(" + istr(sum - n - 1) + ")",
       "verdict for a very general member: Pic = Z by the Noether-Lefschetz theorem"});
}

}  // namespace

ObstructionReport surface_verdict(const VarietySpec& spec) {
  validate_spec(spec);
  switch (spec.kind) {
    case VarietyKind::RuledSurface:
      return holds_with_chi(
          "ruled-surface", "thm:th-surf",
          {"pull back a degree-(g-1) line bundle from the base curve of genus g: chi = "
           "(g - 1) + 1 - g = 0, cohomologically trivial fiberwise",
           "surface RR check at g = 0: chi = chi(O) + (D.D - D.K)/2 stays 0 for the pulled-back "
           "divisor"});
    case VarietyKind::AbelianSurface: {
      const Int chi = euler_char_surface({Int(0)}, 0, 0);
      if (chi != 0) fail(Errc::Internal, "abelian surface chi recomputation broke");
      return holds_with_chi("abelian-surface", "thm:th-surf",
                            {"a nontrivial P in Pic^0: chi(P) = 0 + (0 - 0)/2 = 0 and no "
                             "section; cohomologically trivial"});
    }
    case VarietyKind::HyperellipticSurface:
      return holds_with_chi("bielliptic-surface", "thm:th-surf",
                            {"pull back a nontrivial degree-0 line bundle from the elliptic "
                             "base: chi = 0 + (0 - 0)/2 = 0"});
    case VarietyKind::Enriques: {
      const Int chi_e = euler_char_surface({Int(1)}, -2, 0);
      const Int chi_f = euler_char_surface({Int(1)}, -2, 0);
      if (chi_e != 0 || chi_f != 0) fail(Errc::Internal, "Enriques chi recomputation broke");
      return holds_with_chi(
          "enriques-surface", "thm:th-surf",
          {"chi(O(-E)) = 1 + ((-2) - 0)/2 = " + chi_e.str() + " for a (-2)-configuration E",
           "chi(O(F_1 - F_2)) = 1 + ((-2) - 0)/2 = " + chi_f.str() +
               " for half-fibers with F_1.F_2 = 1, F_i^2 = 0"});
    }
    case VarietyKind::K3TwoDisjointRationalCurves: {
      const Int chi = euler_char_surface({Int(2)}, -4, 0);
      if (chi != 0) fail(Errc::Internal, "two-curve K3 chi recomputation broke");
      return holds_with_chi(
          "k3-two-rational-curves", "prop:two",
          {"disjoint (-2)-curves: (C_1 - C_2)^2 = -4, K = 0, so chi(O(C_1 - C_2)) = 2 + "
           "((-4) - 0)/2 = " + chi.str(),
           "neither O(C_1 - C_2) nor its inverse has sections: cohomologically trivial"});
    }
    case VarietyKind::EllipticSurfaceWithSection:
      return holds_with_chi(
          "elliptic-surface-with-section", "thm:th-surf",
          {"a relatively minimal elliptic surface with a section over a positive-genus base: "
           "twist fiberwise by a cohomologically trivial degree-(g-1) bundle on the base, "
           "chi = 0"});
    case VarietyKind::K3Generic:
      return fails_by_empty_scan(spec, "prop:Pk3",
                                 {"generic K3 of degree " + istr(spec.d) + ": Pic = Z O(1)"});
    case VarietyKind::PicZGeneral: {
      if (spec.dim != 2)
        fail(Errc::UnsupportedSpec, "surface_verdict needs dim = 2; got " + istr(spec.dim));
      if (spec.ample_generator_has_section == Flag3::Unknown)
        fail(Errc::MissingFlag, "pic_z_general needs ample_generator_has_section set");
      if (spec.index < 0)
        fail(Errc::UnsupportedSpec,
             "a Pic = Z surface with negative canonical twist is P^2; use projective_space "
             "n = 2");
      return fails_by_empty_scan(spec, "prop:Tz", {"Pic = Z, ample generator with a section, "
                                                   "omega = O(" + istr(spec.index) + ")"});
    }
    case VarietyKind::FakeP2: {
      ObstructionReport rep = report(Property::D, Verdict::Unknown);
      rep.trace.push_back(entry("fake-p2", "rem:fakep2",
                                {"the invariants match P^2 but the catalog has no rule either "
                                 "way"}));
      return rep;
    }
    case VarietyKind::ProjectiveSpace:
      if (spec.n == 2) {
        VarietySpec p2 = spec;
        CandidateScan scan = coh_trivial_candidates(p2);
        return holds_with_chi(
            "grassmannian-construction", "rule:grassmannian",
            {"P^2 = G_1(C^3): Hom(S, Q) witnesses (D)",
             "consistency: cohomologically trivial twists {-1, -2} survive the scan over " +
                 window_str(scan)});
      }
      break;
    case VarietyKind::Quadric:
      if (spec.n == 2) {
        VarietySpec prod;
        prod.kind = VarietyKind::Product;
        prod.mode = spec.mode;
        VarietySpec p1;
        p1.kind = VarietyKind::ProjectiveSpace;
        p1.n = 1;
        prod.factors = {p1, p1};
        ObstructionReport rep = product_verdict_algebraic(prod);
        rep.trace.insert(rep.trace.begin(),
                         entry("quadric-surface", "rule:product", {"Q_2 = P^1 x P^1"}));
        return rep;
      }
      break;
    case VarietyKind::CompleteIntersection:
      if (spec_complex_dim(spec) == 2) return ci_surface_verdict(spec.n, spec.multidegree);
      break;
    case VarietyKind::AbelianVariety:
      if (spec.g == 2) {
        VarietySpec ab = spec;
        ab.kind = VarietyKind::AbelianSurface;
        return surface_verdict(ab);
      }
      break;
    default: break;
  }
  fail(Errc::UnsupportedSpec,
       "surface_verdict covers the surface catalog; kind '" + kind_name(spec.kind) +
           "' with these parameters is not a surface entry");
}

namespace {

ObstructionReport product_verdict_algebraic(const VarietySpec& spec) {
  ObstructionReport rep = report(Property::D, Verdict::Holds);
  std::vector<ObstructionReport> factor_reports;
  bool all_hold = true;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    VarietySpec f = spec.factors[i];
    f.mode = Mode::Algebraic;
    ObstructionReport fr = diagonal_verdict(f);
    if (fr.verdict != Verdict::Holds) all_hold = false;
    factor_reports.push_back(std::move(fr));
  }
  if (all_hold) {
    rep.trace.push_back(entry("product", "rule:product",
                              {"every factor has (D); the witnesses pair across the product"}));
    for (std::size_t i = 0; i < factor_reports.size(); ++i) {
      std::string cites;
      for (const auto& c : factor_reports[i].citations())
        cites += (cites.empty() ? "" : ", ") + c;
      rep.trace.push_back(entry("factor-" + istr(i + 1),
                                factor_reports[i].citations().empty()
                                    ? "rule:product"
                                    : factor_reports[i].citations().front(),
                                {kind_name(spec.factors[i].kind) + ": HOLDS (" + cites + ")"}));
    }
    return rep;
  }
  rep.verdict = Verdict::Unknown;
  rep.trace.push_back(entry("product", "rule:product",
                            {"the product rule only propagates positive verdicts; a failing or "
                             "undecided factor leaves the product undecided"}));
  for (std::size_t i = 0; i < factor_reports.size(); ++i)
    rep.trace.push_back(entry("factor-" + istr(i + 1), "rule:product",
                              {kind_name(spec.factors[i].kind) + ": " +
                               verdict_name(factor_reports[i].verdict)}));
  return rep;
}

ObstructionReport quadric_diagonal_verdict(const VarietySpec& spec) {
  const int n = spec.n;
  if (n == 1) {
    ObstructionReport rep = report(Property::D, Verdict::Holds);
    rep.trace.push_back(entry("curve", "rule:curves", {"Q_1 = P^1 is a curve"}));
    return rep;
  }
  if (n == 2) return surface_verdict(spec);
  if (n == 4)
    return holds_with_chi("grassmannian-construction", "rule:grassmannian",
                          {"Q_4 = G_2(C^4) under the Pluecker embedding; Hom(S, Q) witnesses "
                           "(D)"});
  if (n % 2 == 1) {
    const int m = (n + 1) / 2;
    ObstructionReport rep = report(Property::D, Verdict::Fails);
    if (m == 2) {
      ObstructionReport pp = point_property_q3_verdict();
      for (auto& t : pp.trace) rep.trace.push_back(std::move(t));
    }
    append_odd_quadric_contradiction(rep, m, "thm:oddquad-alg");
    return rep;
  }
  ObstructionReport rep = report(Property::D, Verdict::Unknown);
  rep.trace.push_back(entry("even-quadric", "rem:even-quadric",
                            {"Q_" + istr(n) + ": even quadrics of dimension >= 6 are open"}));
  return rep;
}

ObstructionReport ci_diagonal_verdict(const VarietySpec& spec) {
  // degree-1 hypersurfaces are hyperplanes: cutting them reduces the ambient
  int n = spec.n;
  std::vector<int> degrees;
  int stripped = 0;
  for (int d : spec.multidegree) {
    if (d == 1) {
      --n;
      ++stripped;
    } else {
      degrees.push_back(d);
    }
  }
  auto note_stripped = [&](ObstructionReport rep) {
    if (stripped > 0)
      rep.trace.insert(rep.trace.begin(),
                       entry("linear-sections", "rule:grassmannian",
                             {istr(stripped) + " degree-1 constraints are hyperplanes: the "
                              "variety is a complete intersection in P^" + istr(n)}));
    return rep;
  };

  const int dim = n - static_cast<int>(degrees.size());
  if (degrees.empty()) {
    VarietySpec p;
    p.kind = VarietyKind::ProjectiveSpace;
    p.n = dim;
    return note_stripped(diagonal_verdict(p));
  }
  if (degrees.size() == 1 && degrees[0] == 2) {
    VarietySpec q;
    q.kind = VarietyKind::Quadric;
    q.n = dim;
    return note_stripped(quadric_diagonal_verdict(q));
  }
  if (dim == 1) {
    ObstructionReport rep = report(Property::D, Verdict::Holds);
    rep.trace.push_back(entry("curve", "rule:curves",
                              {"a complete-intersection curve; the diagonal is a divisor"}));
    return note_stripped(rep);
  }
  if (dim == 2) return note_stripped(ci_surface_verdict(n, degrees));

  int sum = 0;
  std::string degs;
  for (int d : degrees) {
    sum += d;
    degs += (degs.empty() ? "" : ", ") + istr(d);
  }
  if (sum >= n) {
    VarietySpec scan_spec;
    scan_spec.kind = VarietyKind::CompleteIntersection;
    scan_spec.n = n;
    scan_spec.multidegree = degrees;
    ObstructionReport rep = fails_by_empty_scan(
        scan_spec, "cor:fano-ci",
        {"multidegree (" + degs + ") in P^" + istr(n) + ", dimension " + istr(dim) +
             ": omega = O(" + istr(sum - n - 1) + "), canonical twist " + istr(sum - n - 1) +
             " >= -1",
         "Fano index n + 1 - sum d = " + istr(n + 1 - sum) + " <= 1"});
    rep.trace.push_back(entry("index-bound", "prop:fano1",
                              {"(D) on a Pic = Z Fano of dimension >= 3 needs index >= 2"}));
    return note_stripped(rep);
  }
  if (n == 4 && degrees == std::vector<int>{3}) {
    VarietySpec cubic;
    cubic.kind = VarietyKind::CubicThreefold;
    return note_stripped(diagonal_verdict(cubic));
  }
  ObstructionReport rep = report(Property::D, Verdict::Unknown);
  rep.trace.push_back(entry(
      "fano-index", "prop:fano1",
      {"multidegree (" + degs + ") in P^" + istr(n) + ": index n + 1 - sum d = " +
           istr(n + 1 - sum) + " >= 2; the necessary condition is met and decides nothing"}));
  return rep;
}

}  // namespace

ObstructionReport diagonal_verdict(const VarietySpec& spec) {
  validate_spec(spec);
  switch (spec.kind) {
    case VarietyKind::ProjectiveSpace: {
      if (spec.n == 1) {
        ObstructionReport rep = report(Property::D, Verdict::Holds);
        rep.trace.push_back(entry("curve", "rule:curves", {"P^1 is a curve"}));
        return rep;
      }
      if (spec.n == 2) return surface_verdict(spec);
      return holds_with_chi("grassmannian-construction", "rule:grassmannian",
                            {"P^" + istr(spec.n) + " = G_1(C^" + istr(spec.n + 1) +
                             "): Hom(S, Q) has rank " + istr(spec.n) +
                             " and a section vanishing on the diagonal"});
    }
    case VarietyKind::Grassmannian:
      return holds_with_chi("grassmannian-construction", "rule:grassmannian",
                            {"G_" + istr(spec.r) + "(C^" + istr(spec.n) + "): Hom(S, Q) has "
                             "rank r(n-r) = " + istr(spec.r * (spec.n - spec.r)) +
                             " = dim G and a section vanishing on the diagonal"});
    case VarietyKind::Quadric: return quadric_diagonal_verdict(spec);
    case VarietyKind::CompleteIntersection: return ci_diagonal_verdict(spec);
    case VarietyKind::K3Generic:
    case VarietyKind::K3TwoDisjointRationalCurves:
    case VarietyKind::AbelianSurface:
    case VarietyKind::Enriques:
    case VarietyKind::HyperellipticSurface:
    case VarietyKind::RuledSurface:
    case VarietyKind::EllipticSurfaceWithSection:
    case VarietyKind::FakeP2: return surface_verdict(spec);
    case VarietyKind::AbelianVariety: {
      if (spec.g == 1) {
        ObstructionReport rep = report(Property::D, Verdict::Holds);
        rep.trace.push_back(entry("curve", "rule:curves", {"an elliptic curve is a curve"}));
        return rep;
      }
      if (spec.g == 2) return surface_verdict(spec);
      ObstructionReport rep = report(Property::D, Verdict::Unknown);
      rep.trace.push_back(entry(
          "abelian-dimension-gt-2", "note:abelian-gt2",
          {"dimension g = " + istr(spec.g) + " > 2: general members fail (D), Jacobians "
           "satisfy it; the spec does not say which this is"}));
      return rep;
    }
    case VarietyKind::CubicThreefold: {
      VarietySpec cubic = spec;
      CandidateScan scan = coh_trivial_candidates(cubic);
      if (scan.candidates != std::vector<int>{-1})
        fail(Errc::Internal, "cubic threefold twist scan should find exactly {-1}");
      ObstructionReport rep = report(Property::D, Verdict::Unknown);
      rep.trace.push_back(entry(
          "cohomologically-trivial-twists", "lem:cubic-point",
          {"only cohomologically trivial twist over " + window_str(scan) + ": O(-1) "
           "(chi(O(-1)) = 0, no sections either way)",
           "pairing with omega = O(-2): L_1 = L_2 = O(-1) and L_1^(-1) = L_2 tensor "
           "omega^(-1) reads 1 = -1 + 2"}));
      rep.trace.push_back(entry("point-property", "lem:cubic-point",
                                {"O(1) has the point property, so every necessary condition "
                                 "is met; no rule decides (D)"}));
      return rep;
    }
    case VarietyKind::PicZGeneral: {
      if (spec.dim == 2) return surface_verdict(spec);
      if (spec.ample_generator_has_section == Flag3::Unknown)
        fail(Errc::MissingFlag, "pic_z_general needs ample_generator_has_section set");
      if (spec.index >= -1) {
        ObstructionReport rep = fails_by_empty_scan(
            spec, "prop:fano1",
            {"dimension " + istr(spec.dim) + " with omega = O(" + istr(spec.index) + ")"});
        rep.trace.push_back(entry("index-bound", "prop:fano1",
                                  {"canonical twist " + istr(spec.index) +
                                   " >= -1: no twist t < 0 escapes H^top (r - t >= 0)"}));
        return rep;
      }
      ObstructionReport rep = report(Property::D, Verdict::Unknown);
      rep.trace.push_back(entry(
          "fano-index", "prop:fano1",
          {"omega = O(" + istr(spec.index) + ") with index >= 2: twists in (" +
           istr(spec.index) + ", 0) stay unresolved without chi data"}));
      return rep;
    }
    case VarietyKind::Product: return product_verdict_algebraic(spec);
    case VarietyKind::LieGroup: {
      if (spec.point_property) {
        ObstructionReport rep = report(Property::D, Verdict::Holds);
        rep.trace.push_back(entry("weak-point-property", "prop:Pwpp",
                                  {"(D) holds iff the weak point property does; the spec "
                                   "asserts a point-property witness"}));
        return rep;
      }
      ObstructionReport rep = report(Property::D, Verdict::Unknown);
      rep.trace.push_back(entry("weak-point-property", "prop:Pwpp",
                                {"no point-property witness asserted; verifying one is out of "
                                 "scope"}));
      return rep;
    }
    case VarietyKind::Sphere:
      fail(Errc::UnsupportedSpec,
           "spheres carry the topological properties (D_r), (D_o), (D_c); request those "
           "reports instead of the algebraic (D)");
  }
  fail(Errc::UnsupportedSpec, "no diagonal rule for kind '" + kind_name(spec.kind) + "'");
}

/******** topological properties and evaluate_all ********/

namespace {

ObstructionReport topological_verdict(const VarietySpec& spec, Property p);

ObstructionReport topological_product(const VarietySpec& spec, Property p) {
  ObstructionReport rep = report(p, Verdict::Holds);
  bool all_hold = true;
  std::vector<std::string> lines;
  for (const auto& f0 : spec.factors) {
    VarietySpec f = f0;
    f.mode = Mode::Topological;
    ObstructionReport fr = topological_verdict(f, p);
    if (fr.verdict != Verdict::Holds) all_hold = false;
    lines.push_back(kind_name(f.kind) + ": " + verdict_name(fr.verdict));
  }
  if (!all_hold) rep.verdict = Verdict::Unknown;
  lines.insert(lines.begin(), all_hold
                                  ? "every factor has the property; witnesses pair across the "
                                    "product"
                                  : "the product rule only propagates positive verdicts");
  rep.trace.push_back(entry("product", "rule:product", std::move(lines)));
  return rep;
}

ObstructionReport with_property(ObstructionReport rep, Property p) {
  rep.property = p;
  return rep;
}

ObstructionReport topological_dc(const VarietySpec& spec) {
  switch (spec.kind) {
    case VarietyKind::Sphere: return sphere_verdicts(spec.n).d_c;
    case VarietyKind::Quadric:
      if (spec.n % 2 == 1) return dc_odd_quadric_verdict((spec.n + 1) / 2);
      if (spec.n == 2 || spec.n == 4)
        return with_property(holds_with_chi("grassmannian-construction", "rule:grassmannian",
                                            {"Q_" + istr(spec.n) +
                                             " is P^1 x P^1 or G_2(C^4); the algebraic witness "
                                             "is complex"}),
                             Property::Dc);
      {
        ObstructionReport rep = report(Property::Dc, Verdict::Unknown);
        rep.trace.push_back(entry("even-quadric", "rem:even-quadric",
                                  {"even quadrics of dimension >= 6 are open"}));
        return rep;
      }
    case VarietyKind::ProjectiveSpace:
    case VarietyKind::Grassmannian:
      return with_property(holds_with_chi("grassmannian-construction", "rule:grassmannian",
                                          {"the tautological Hom(S, Q) witness is a complex "
                                           "bundle"}),
                           Property::Dc);
    case VarietyKind::CompleteIntersection: {
      // drop hyperplane factors, as in the algebraic dispatch
      int n = spec.n;
      std::vector<int> degrees;
      for (int d : spec.multidegree) {
        if (d == 1) --n;
        else degrees.push_back(d);
      }
      const int dim = n - static_cast<int>(degrees.size());
      if (degrees.empty() || (degrees.size() == 1 && degrees[0] == 2)) {
        VarietySpec v;
        if (degrees.empty()) {
          v.kind = VarietyKind::ProjectiveSpace;
          v.n = dim;
        } else {
          v.kind = VarietyKind::Quadric;
          v.n = dim;
        }
        v.mode = Mode::Topological;
        return topological_dc(v);
      }
      if (dim == 1) {
        ObstructionReport rep = report(Property::Dc, Verdict::Holds);
        rep.trace.push_back(entry("riemann-surface", "rule:riemann-surface",
                                  {"a complete-intersection curve is a Riemann surface"}));
        return rep;
      }
      if (dim == 2) {
        ObstructionReport rep = dim4_almost_complex_verdict();
        rep.trace.push_back(entry("complex-surface", "thm:dim4",
                                  {"a smooth complex surface is an almost complex 4-manifold"}));
        return rep;
      }
      if (dim == 3) return spin_ci_threefold_verdict(n, degrees);
      ObstructionReport rep = report(Property::Dc, Verdict::Unknown);
      rep.trace.push_back(entry("no-rule", "rem:spinproprmk",
                                {"no topological rule covers dimension " + istr(dim)}));
      return rep;
    }
    case VarietyKind::CubicThreefold: return spin_ci_threefold_verdict(4, {3});
    case VarietyKind::K3Generic: {
      ObstructionReport rep = dim4_almost_complex_verdict();
      rep.trace.push_back(entry(
          "algebraic-contrast", "prop:Pk3",
          {"smoothly (D_c) holds, while the algebraic (D) fails for a generic K3: the witness "
           "bundle cannot be made algebraic"}));
      return rep;
    }
    case VarietyKind::K3TwoDisjointRationalCurves:
    case VarietyKind::AbelianSurface:
    case VarietyKind::Enriques:
    case VarietyKind::HyperellipticSurface:
    case VarietyKind::RuledSurface:
    case VarietyKind::EllipticSurfaceWithSection:
    case VarietyKind::FakeP2: {
      ObstructionReport rep = dim4_almost_complex_verdict();
      rep.trace.push_back(entry("complex-surface", "thm:dim4",
                                {"a smooth complex surface is an almost complex 4-manifold"}));
      return rep;
    }
    case VarietyKind::AbelianVariety: {
      if (spec.g == 1) {
        ObstructionReport rep = report(Property::Dc, Verdict::Holds);
        rep.trace.push_back(entry("riemann-surface", "rule:riemann-surface",
                                  {"an elliptic curve is a Riemann surface"}));
        return rep;
      }
      if (spec.g == 2) return dim4_almost_complex_verdict();
      ObstructionReport rep = report(Property::Dc, Verdict::Unknown);
      rep.trace.push_back(entry("no-rule", "note:abelian-gt2",
                                {"no topological rule covers complex tori of dimension > 2"}));
      return rep;
    }
    case VarietyKind::Product: return topological_product(spec, Property::Dc);
    default: {
      ObstructionReport rep = report(Property::Dc, Verdict::Unknown);
      rep.trace.push_back(entry("no-rule", "rem:almcomp",
                                {"no topological (D_c) rule applies to kind " +
                                 kind_name(spec.kind)}));
      return rep;
    }
  }
}

ObstructionReport topological_verdict(const VarietySpec& spec, Property p) {
  if (spec.kind == VarietyKind::Sphere) {
    SphereVerdicts v = sphere_verdicts(spec.n);
    if (p == Property::Dr) return v.d_r;
    if (p == Property::Do) return v.d_o;
    return v.d_c;
  }
  if (spec.kind == VarietyKind::LieGroup) {
    OddDimVerdicts v = odd_dim_manifold_verdict(true, spec.h1_mod2_zero, spec.point_property);
    if (p == Property::Dr) {
      if (spec.dim % 2 == 0 && !spec.point_property) {
        ObstructionReport rep = report(Property::Dr, Verdict::Unknown);
        rep.trace.push_back(entry("lie-group", "ex:liegroup",
                                  {"even-dimensional, no point-property witness asserted"}));
        return rep;
      }
      if (spec.dim % 2 == 0 && spec.point_property) {
        ObstructionReport rep = report(Property::Dr, Verdict::Holds);
        rep.trace.push_back(entry("lie-group-point-property", "ex:liegroup",
                                  {"the asserted point property gives (D_r)"}));
        return rep;
      }
      return v.d_r;
    }
    if (p == Property::Do) {
      if (spec.dim % 2 == 1) return v.d_o;
      ObstructionReport rep = report(Property::Do, Verdict::Unknown);
      rep.trace.push_back(entry("even-dimension", "thm:prop3",
                                {"the odd-dimension obstruction does not apply"}));
      return rep;
    }
    ObstructionReport rep = report(Property::Dc, Verdict::Unknown);
    rep.trace.push_back(entry("no-rule", "rem:almcomp",
                              {"no (D_c) rule for Lie groups in the catalog"}));
    return rep;
  }
  if (spec.kind == VarietyKind::Product && p != Property::Dc)
    return topological_product(spec, p);

  if (p == Property::Dc) return topological_dc(spec);

  ObstructionReport dc = topological_dc(spec);
  if (dc.verdict == Verdict::Holds) {
    ObstructionReport rep = report(p, Verdict::Holds);
    rep.trace.push_back(entry("complex-implies", "rem:almcomp",
                              {"(D_c) holds (see the (D_c) report); a complex witness is "
                               "oriented, an oriented one real"}));
    return rep;
  }
  ObstructionReport rep = report(p, Verdict::Unknown);
  rep.trace.push_back(entry("no-rule", "rem:almcomp",
                            {"(D_c) is " + verdict_name(dc.verdict) +
                             "; no independent rule for " + property_name(p) + " applies"}));
  return rep;
}

}  // namespace

std::vector<ObstructionReport> evaluate_all(const VarietySpec& spec) {
  validate_spec(spec);
  if (spec.kind == VarietyKind::Sphere) {
    SphereVerdicts v = sphere_verdicts(spec.n);
    return {v.d_r, v.d_o, v.d_c};
  }
  if (spec.kind == VarietyKind::LieGroup) {
    if (spec.mode == Mode::Algebraic) return {diagonal_verdict(spec)};
    return {topological_verdict(spec, Property::Dr), topological_verdict(spec, Property::Do)};
  }
  if (spec.mode == Mode::Topological)
    return {topological_verdict(spec, Property::Dr), topological_verdict(spec, Property::Do),
            topological_verdict(spec, Property::Dc)};
  return {diagonal_verdict(spec)};
}

}  // namespace diagprop
