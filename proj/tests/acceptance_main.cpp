// Acceptance gate: ten checks, one line each, exit 0 only when all pass.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "diagprop/catalog.hpp"
#include "diagprop/charclass.hpp"
#include "diagprop/graded_ring.hpp"
#include "diagprop/obstruction.hpp"
#include "diagprop/steenrod.hpp"

using namespace diagprop;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void criterion(int number, const std::string& label, bool ok, long ms, long budget_ms) {
  const bool in_budget = budget_ms <= 0 || ms < budget_ms;
  if (ok && in_budget) {
    std::printf("PASS criterion %d: %s (%ld ms)\n", number, label.c_str(), ms);
  } else {
    ++failures;
    std::printf("FAIL criterion %d: %s (%s, %ld ms)\n", number, label.c_str(),
                ok ? "over time budget" : "wrong result", ms);
  }
}

RingElement random_element(const RingPtr& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> deg(0, r->top_degree());
  RingElement out = RingElement::zero(r);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    const unsigned d = deg(rng) & ~1u;
    const auto& basis = r->basis(d);
    if (basis.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    out += RingElement::monomial(r, basis[pick(rng)], coeff(rng));
  }
  return out;
}

bool trace_mentions(const ObstructionReport& rep, const std::string& needle) {
  for (const auto& t : rep.trace)
    for (const auto& v : t.values)
      if (v.find(needle) != std::string::npos) return true;
  return false;
}

void check_evaluator_matches_closed_form() {
  auto t0 = Clock::now();
  bool ok = true;
  RingPtr r = chow_quadric_ring(2);
  RingElement x = RingElement::generator(r, "x");
  RingElement y = RingElement::generator(r, "y");
  CharClassVector tangent = quadric_tangent_class(2);
  for (int rank = 0; rank <= 3 && ok; ++rank) {
    for (int d1 = -2; d1 <= 2 && ok; ++d1) {
      for (int d2 = -2; d2 <= 2 && ok; ++d2) {
        for (int d3 = -2; d3 <= 2 && ok; ++d3) {
          CharClassVector bundle = CharClassVector::make(
              r, static_cast<unsigned>(rank),
              {Int(d1) * x, Int(d2) * y, Int(d3) * (x * y)}, true);
          ok = euler_char_hrr(tangent, bundle) == hrr_q3_closed_form(rank, d1, d2, d3);
        }
      }
    }
  }
  ok = ok && euler_char_hrr(tangent, CharClassVector::line_bundle(r, x)) == 5;
  criterion(1, "HRR evaluator matches the closed form on [0..3] x [-2..2]^3", ok,
            elapsed_ms(t0), 1000);
}

void check_witness_slice_never_integral() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int d2 = -5; d2 <= 5; ++d2) {
    Rational chi = hrr_q3_closed_form(3, 1, d2, 1);
    ok = ok && chi == Rational(15, 2) - 2 * Rational(d2);
    ok = ok && denominator(chi) == 2;
  }
  VarietySpec q3;
  q3.kind = VarietyKind::Quadric;
  q3.n = 3;
  ok = ok && diagonal_verdict(q3).verdict == Verdict::Fails;
  criterion(2, "rank-3 witness slice 15/2 - 2 d2 is never integral; Q3 verdict FAILS", ok,
            elapsed_ms(t0), 1000);
}

void check_quadric_ring_structure() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int m : {2, 3, 4}) {
    RingPtr r = chow_quadric_ring(m);
    for (int k = 0; k <= 2 * m - 1 && ok; ++k) {
      const auto& basis = r->basis(static_cast<unsigned>(2 * k));
      Exponents expected(2, 0);
      if (k <= m - 1) {
        expected[0] = static_cast<unsigned>(k);
      } else {
        expected[0] = static_cast<unsigned>(k - m);
        expected[1] = 1;
      }
      ok = basis.size() == 1 && basis[0] == expected;
    }
    RingElement x = RingElement::generator(r, "x");
    RingElement y = RingElement::generator(r, "y");
    ok = ok && degree_evaluate(x.pow(static_cast<unsigned>(2 * m - 1))) == 2;
    ok = ok && degree_evaluate(x.pow(static_cast<unsigned>(m - 1)) * y) == 1;

    RingPtr r2 = mod2_quadric_ring(m);
    RingElement xi = RingElement::generator(r2, "xi");
    RingElement eta = RingElement::generator(r2, "eta");
    ok = ok && xi.pow(static_cast<unsigned>(m)).is_zero() && (eta * eta).is_zero();
    for (int k = 0; k <= 2 * m - 1 && ok; ++k) {
      const auto& basis = r2->basis(static_cast<unsigned>(2 * k));
      ok = basis.size() == 1;
    }
  }
  criterion(3, "odd-quadric ring and mod-2 companion bases match the x^k / x^(k-m) y pattern",
            ok, elapsed_ms(t0), 0);
}

void check_steenrod_relations() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int m : {2, 3, 4}) {
    Sq2Spec spec = sq2_quadric_spec(m);
    RingPtr r = spec.ring;
    RingElement xi = RingElement::generator(r, "xi");
    RingElement eta = RingElement::generator(r, "eta");
    ok = ok && sq2(spec, xi) == xi * xi;
    ok = ok && sq2(spec, eta) == Int(m - 1) * (xi * eta);
    // third relation from the first two by the product rule, no table
    RingElement lower = xi.pow(static_cast<unsigned>(m - 2)) * eta;
    Int derived_coeff = Int(m - 2) + Int(m - 1);
    RingElement expected =
        derived_coeff * (xi.pow(static_cast<unsigned>(m - 1)) * eta);
    ok = ok && sq2(spec, lower) == expected;
    ok = ok && !expected.is_zero();
  }
  criterion(4, "Sq2 generator relations hold and the derived relation is nonzero", ok,
            elapsed_ms(t0), 0);
}

void check_wu_congruence_equivalence() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int m : {2, 3, 4}) {
    Sq2Spec spec = sq2_quadric_spec(m);
    RingPtr r = spec.ring;
    RingElement xi = RingElement::generator(r, "xi");
    RingElement eta = RingElement::generator(r, "eta");
    const unsigned n = static_cast<unsigned>(4 * m - 4);
    for (int c1 = 0; c1 <= 1; ++c1)
      for (int c2 = 0; c2 <= 1; ++c2)
        for (int c3 = 0; c3 <= 1; ++c3) {
          RingElement w2 = Int(c1) * xi;
          RingElement wn = Int(c2) * (xi.pow(static_cast<unsigned>(m - 2)) * eta);
          RingElement wn2 = Int(c3) * (xi.pow(static_cast<unsigned>(m - 1)) * eta);
          ok = ok && wu_identity_check(w2, wn, wn2, n, spec) ==
                         congruence_cherniden2(m, c1, c2, c3);
        }
  }
  criterion(5, "Wu identity agrees with the Chern congruence on all 8 triples, m in {2,3,4}",
            ok, elapsed_ms(t0), 1000);
}

void check_odd_quadric_dc() {
  auto t0 = Clock::now();
  bool ok = dc_odd_quadric_verdict(1).verdict == Verdict::Holds;
  for (int m : {2, 3, 4}) {
    ObstructionReport rep = dc_odd_quadric_verdict(m);
    ok = ok && rep.verdict == Verdict::Fails;
    ok = ok && trace_mentions(rep, "a_1 + a_2");
  }
  criterion(6, "odd-quadric Dc verdict FAILS with the a1+a2 parity contradiction, HOLDS at m=1",
            ok, elapsed_ms(t0), 0);
}

void check_surface_chi_table() {
  auto t0 = Clock::now();
  bool ok = true;
  SurfaceRRData k3{2}, enriques{1};
  for (Int d : {4, 6}) {
    for (int n = -3; n <= 3; ++n) {
      Int chi = euler_char_surface(k3, Int(n) * n * d, 0);
      ok = ok && chi == Int(n) * n * d / 2 + 2;
      ok = ok && chi != 0;
    }
  }
  ok = ok && euler_char_surface(k3, -4, 0) == 0;        // O(D1 - D2), disjoint -2 curves
  ok = ok && euler_char_surface(enriques, -2, 0) == 0;  // O(-E), smooth -2 curve
  ok = ok && euler_char_surface(enriques, -2, 0) == 0;  // O(D1 - D2), half pencils

  auto verdict = [](VarietyKind kind, int d = 0) {
    VarietySpec s;
    s.kind = kind;
    s.d = d;
    return diagonal_verdict(s).verdict;
  };
  ok = ok && verdict(VarietyKind::K3Generic, 4) == Verdict::Fails;
  ok = ok && verdict(VarietyKind::K3Generic, 6) == Verdict::Fails;
  ok = ok && verdict(VarietyKind::K3TwoDisjointRationalCurves) == Verdict::Holds;
  ok = ok && verdict(VarietyKind::Enriques) == Verdict::Holds;
  ok = ok && verdict(VarietyKind::HyperellipticSurface) == Verdict::Holds;
  ok = ok && verdict(VarietyKind::RuledSurface) == Verdict::Holds;
  ok = ok && verdict(VarietyKind::AbelianSurface) == Verdict::Holds;
  ok = ok && verdict(VarietyKind::EllipticSurfaceWithSection) == Verdict::Holds;
  VarietySpec picz;
  picz.kind = VarietyKind::PicZGeneral;
  picz.dim = 2;
  picz.index = 1;
  picz.ample_generator_has_section = Flag3::True;
  ok = ok && diagonal_verdict(picz).verdict == Verdict::Fails;
  criterion(7, "surface Euler characteristics and surface verdicts", ok, elapsed_ms(t0), 0);
}

void check_sphere_tables() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int n = 1; n <= 10; ++n) {
    SphereVerdicts v = sphere_verdicts(n);
    const bool dr = n == 1 || n == 2 || n == 4 || n == 8;
    const bool d_o = n == 2 || n == 4 || n == 8;
    const bool dc = n == 2;
    ok = ok && v.d_r.verdict == (dr ? Verdict::Holds : Verdict::Fails);
    ok = ok && v.d_o.verdict == (d_o ? Verdict::Holds : Verdict::Fails);
    ok = ok && v.d_c.verdict == (dc ? Verdict::Holds : Verdict::Fails);
  }
  OddDimVerdicts rp3 = odd_dim_manifold_verdict(true, Flag3::False, true);
  ok = ok && rp3.d_r.verdict == Verdict::Holds && rp3.d_o.verdict == Verdict::Fails;
  criterion(8, "sphere tables for n in [1..10] and the RP^3 sharpness case", ok,
            elapsed_ms(t0), 0);
}

void check_property_suites() {
  auto t0 = Clock::now();
  bool ok = true;
  std::mt19937 rng(20260816);

  std::vector<RingPtr> rings = {chow_quadric_ring(2),  chow_quadric_ring(3),
                                chow_quadric_ring(4),  mod2_quadric_ring(2),
                                mod2_quadric_ring(3),  mod2_quadric_ring(4),
                                projective_space_ring(2), projective_space_ring(3)};
  for (const auto& r : rings) {
    RingElement one = RingElement::one(r);
    for (int i = 0; i < 1000 && ok; ++i) {
      RingElement a = random_element(r, rng);
      RingElement b = random_element(r, rng);
      RingElement c = random_element(r, rng);
      ok = (a * b) * c == a * (b * c);
      ok = ok && a * b == b * a;
      ok = ok && a * one == a;
      ok = ok && (a + b) * c == a * c + b * c;
    }
  }

  Sq2Spec spec = sq2_quadric_spec(4);
  std::vector<Exponents> monomials;
  for (unsigned d = 0; d <= spec.ring->top_degree(); d += 2)
    for (const auto& e : spec.ring->basis(d)) monomials.push_back(e);
  ok = ok && monomials.size() == 8;
  for (const auto& ea : monomials) {
    for (const auto& eb : monomials) {
      RingElement a = RingElement::monomial(spec.ring, ea);
      RingElement b = RingElement::monomial(spec.ring, eb);
      ok = ok && sq2(spec, a * b) == sq2(spec, a) * b + a * sq2(spec, b);
      ok = ok && sq2(spec, a + b) == sq2(spec, a) + sq2(spec, b);
    }
  }

  RingPtr q5 = chow_quadric_ring(3);
  for (int i = 0; i < 1000 && ok; ++i) {
    RingElement a = random_element(q5, rng);
    RingElement b = random_element(q5, rng);
    ok = reduce_mod2(a * b) == reduce_mod2(a) * reduce_mod2(b);
    ok = ok && reduce_mod2(a + b) == reduce_mod2(a) + reduce_mod2(b);
  }

  criterion(9, "ring axioms, Cartan rule, and mod-2 reduction property suites", ok,
            elapsed_ms(t0), 10000);
}

void check_spin_and_index_corollary() {
  auto t0 = Clock::now();
  bool ok = spin_ci_threefold_verdict(4, {2}).verdict == Verdict::Fails;
  ok = ok && spin_ci_threefold_verdict(4, {3}).verdict == Verdict::Unknown;

  // dim >= 3 and sum of degrees >= n: the canonical twist reaches -1
  const std::vector<std::pair<int, std::vector<int>>> samples = {
      {4, {4}},       {4, {5}},          {4, {6}},       {4, {7}},
      {5, {5}},       {5, {6}},          {5, {2, 3}},    {5, {3, 3}},
      {5, {2, 4}},    {6, {6}},          {6, {2, 2, 2}}, {6, {2, 4}},
      {6, {3, 3}},    {6, {2, 2, 3}},    {7, {7}},       {7, {2, 5}},
      {7, {3, 4}},    {7, {2, 2, 3}},    {7, {2, 2, 2, 2}}, {8, {2, 3, 3}}};
  ok = ok && samples.size() == 20;
  for (const auto& [n, degrees] : samples) {
    int sum = 0;
    for (int d : degrees) sum += d;
    if (!(n - static_cast<int>(degrees.size()) >= 3 && sum >= n)) {
      ok = false;
      break;
    }
    VarietySpec s;
    s.kind = VarietyKind::CompleteIntersection;
    s.n = n;
    s.multidegree = degrees;
    ok = ok && diagonal_verdict(s).verdict == Verdict::Fails;
  }
  criterion(10, "spin threefold criterion and the index corollary on 20 multidegrees", ok,
            elapsed_ms(t0), 0);
}

}  // namespace

int main() {
  check_evaluator_matches_closed_form();
  check_witness_slice_never_integral();
  check_quadric_ring_structure();
  check_steenrod_relations();
  check_wu_congruence_equivalence();
  check_odd_quadric_dc();
  check_surface_chi_table();
  check_sphere_tables();
  check_property_suites();
  check_spin_and_index_corollary();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
