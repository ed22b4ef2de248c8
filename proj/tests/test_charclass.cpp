#include <array>
#include <optional>

#include "doctest.h"

#include "diagprop/catalog.hpp"
#include "diagprop/charclass.hpp"

using namespace diagprop;

namespace {

template <typename Fn>
std::optional<Errc> errc_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/* Independent Q3 oracle: classes as coordinates (1, x, y, xy) with the
 * multiplication table x*x = 2y, x*y = xy, y*y = 0. */
using Q3Coords = std::array<Int, 4>;

Q3Coords q3_mul(const Q3Coords& a, const Q3Coords& b) {
  Q3Coords out{0, 0, 0, 0};
  out[0] = a[0] * b[0];
  out[1] = a[0] * b[1] + a[1] * b[0];
  out[2] = a[0] * b[2] + a[2] * b[0] + 2 * a[1] * b[1];  // x*x = 2y
  out[3] = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
  return out;
}

Q3Coords q3_from(const CharClassVector& v) {
  Q3Coords out{1, 0, 0, 0};
  out[1] = v.c[1].coefficient({1, 0});
  out[2] = v.c[2].coefficient({0, 1});
  out[3] = v.c[3].coefficient({1, 1});
  return out;
}

Int binom_oracle(int n, int k) {
  if (k < 0) return 0;
  Rational acc = 1;
  for (int i = 1; i <= k; ++i) acc *= Rational(n - i + 1, i);
  return numerator(acc);
}

}  // namespace

TEST_CASE("quadric tangent class matches a hand power-series division") {
  // (1+x)^5: x-powers collapse through x^2 = 2y, x^4 = 4y^2 = 0
  Q3Coords numerator_class{1, 5, 20, 20};
  // 1/(1+2x) = 1 - 2x + 4x^2 - 8x^3 + ... = 1 - 2x + 8y - 16xy
  Q3Coords inverse_class{1, -2, 8, -16};
  Q3Coords expected = q3_mul(numerator_class, inverse_class);
  CHECK(expected == Q3Coords{1, 3, 8, 4});

  CharClassVector tangent = quadric_tangent_class(2);
  CHECK(q3_from(tangent) == expected);
  CHECK(tangent.rank == 3);
  CHECK(tangent.c[0] == RingElement::one(tangent.ring));
}

TEST_CASE("quadric tangent first Chern class is (2m-1) x") {
  for (int m : {2, 3, 4}) {
    CharClassVector tangent = quadric_tangent_class(m);
    Exponents x1(2, 0);
    x1[0] = 1;
    CHECK(tangent.c[1].coefficient(x1) == 2 * m - 1);
  }
}

TEST_CASE("projective tangent class is (1+h)^(n+1)") {
  for (int n : {1, 2, 3}) {
    RingPtr r = projective_space_ring(n);
    RingElement euler_sequence =
        (RingElement::one(r) + RingElement::generator(r, "h")).pow(static_cast<unsigned>(n + 1));
    CHECK(projective_tangent_class(n).total() == euler_sequence);
    CHECK(projective_tangent_class(n).rank == static_cast<unsigned>(n));
  }
}

TEST_CASE("todd class of Q3") {
  CharClassVector tangent = quadric_tangent_class(2);
  RationalClass td = todd_class(tangent);
  CHECK(td.coefficient({0, 0}) == 1);
  CHECK(td.coefficient({1, 0}) == Rational(3, 2));
  CHECK(td.coefficient({0, 1}) == Rational(13, 6));
  CHECK(td.coefficient({1, 1}) == 1);
}

TEST_CASE("chern character matches the split oracle on P2") {
  RingPtr r = projective_space_ring(2);
  RingElement h = RingElement::generator(r, "h");
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      CharClassVector sum =
          whitney_sum(CharClassVector::line_bundle(r, Int(a) * h),
                      CharClassVector::line_bundle(r, Int(b) * h));
      CHECK(sum.rank == 2);
      CHECK(sum.c[1] == Int(a + b) * h);
      CHECK(sum.c[2] == Int(a * b) * h * h);

      // ch(O(a) + O(b)) = 2 + (a+b) h + (a^2+b^2) h^2/2
      RationalClass ch = chern_character(sum);
      CHECK(ch.coefficient({0}) == 2);
      CHECK(ch.coefficient({1}) == a + b);
      CHECK(ch.coefficient({2}) == Rational(Int(a) * a + Int(b) * b, 2));
    }
  }
}

TEST_CASE("euler characteristics on Q3 against the section-count oracle") {
  CharClassVector tangent = quadric_tangent_class(2);
  RingPtr r = tangent.ring;
  RingElement x = RingElement::generator(r, "x");

  CHECK(euler_char_hrr(tangent, CharClassVector::trivial(r, 1)) == 1);
  CHECK(euler_char_hrr(tangent, CharClassVector::line_bundle(r, x)) == 5);

  // h^0(O(n)) = binom(n+4, 4) - binom(n+2, 4); higher cohomology vanishes
  for (int n = 0; n <= 6; ++n) {
    Rational chi = euler_char_hrr(tangent, CharClassVector::line_bundle(r, Int(n) * x));
    CHECK(chi == binom_oracle(n + 4, 4) - binom_oracle(n + 2, 4));
  }
  // Serre duality: chi(O(-3-n)) = -chi(O(n))
  for (int n = -8; n <= 8; ++n) {
    Rational a = euler_char_hrr(tangent, CharClassVector::line_bundle(r, Int(n) * x));
    Rational b = euler_char_hrr(tangent, CharClassVector::line_bundle(r, Int(-3 - n) * x));
    CHECK(a == -b);
  }
}

TEST_CASE("closed form equals the evaluator on a class lattice") {
  CharClassVector tangent = quadric_tangent_class(2);
  RingPtr r = tangent.ring;
  RingElement x = RingElement::generator(r, "x");
  RingElement y = RingElement::generator(r, "y");
  for (int rank = 0; rank <= 2; ++rank) {
    for (int d1 = -2; d1 <= 2; ++d1) {
      for (int d2 = -2; d2 <= 2; ++d2) {
        for (int d3 = -2; d3 <= 2; ++d3) {
          CharClassVector bundle = CharClassVector::make(
              r, static_cast<unsigned>(rank),
              {Int(d1) * x, Int(d2) * y, Int(d3) * (x * y)}, true);
          CHECK(euler_char_hrr(tangent, bundle) ==
                hrr_q3_closed_form(rank, d1, d2, d3));
        }
      }
    }
  }
}

TEST_CASE("the witness sweep is never integral") {
  for (int d2 = -5; d2 <= 5; ++d2) {
    Rational chi = hrr_q3_closed_form(3, 1, d2, 1);
    CHECK(chi == Rational(15, 2) - 2 * d2);
    CHECK(denominator(chi) == 2);
  }
}

TEST_CASE("class vector validation") {
  RingPtr r = projective_space_ring(2);
  RingElement h = RingElement::generator(r, "h");

  // honest rank bound: a rank-1 bundle has no c2
  CHECK(errc_of([&] {
          return CharClassVector::make(r, 1, {h, h * h});
        }) == Errc::InvalidClassVector);
  CHECK(errc_of([&] { return CharClassVector::make(r, 1, {h, h * h}, true); }) == std::nullopt);

  // inhomogeneous component
  CHECK(errc_of([&] {
          return CharClassVector::make(r, 2, {RingElement::one(r) + h});
        }) == Errc::InvalidClassVector);

  // foreign ring component
  RingElement x = RingElement::generator(chow_quadric_ring(2), "x");
  CHECK(errc_of([&] { return CharClassVector::make(r, 2, {x}); }) == Errc::RingMismatch);

  CHECK(errc_of([&] {
          return chern_character(CharClassVector::trivial(projective_space_ring(4), 1));
        }) == Errc::DimensionTooLarge);
}

TEST_CASE("surface Riemann-Roch") {
  CHECK(euler_char_surface({Int(2)}, -4, 0) == 0);   // K3, disjoint (-2)-curves
  CHECK(euler_char_surface({Int(0)}, 0, 0) == 0);    // abelian, flat P in Pic^0
  CHECK(euler_char_surface({Int(1)}, -2, 0) == 0);   // Enriques
  CHECK(euler_char_surface({Int(1)}, 0, 0) == 1);
  // quartic K3: chi(O(n)) = 2 n^2 + 2
  for (int n = -3; n <= 3; ++n)
    CHECK(euler_char_surface({Int(2)}, Int(4) * n * n, 0) == Int(2) * n * n + 2);
  CHECK(errc_of([&] { return euler_char_surface({Int(2)}, 1, 0); }) == Errc::ParityViolation);
}

TEST_CASE("mod-2 residue of the rank-3 class identity") {
  RingPtr r = projective_space_ring(3);
  RingElement h = RingElement::generator(r, "h");

  // the tangent bundle of P3 is honest, so its residue vanishes:
  // <4h^3 - 6h^2 (4h + 4h)> = 4 - 48 = -44 = 0 (mod 2)
  CharClassVector tp3 = projective_tangent_class(3);
  CHECK(cherneven_residue(Int(4) * h, tp3) == 0);

  // c1 = c2 = 0, c3 = h^3 has residue <h^3> = 1: no such bundle exists
  CharClassVector ghost = CharClassVector::make(
      r, 3, {RingElement::zero(r), RingElement::zero(r), h.pow(3)});
  CHECK(cherneven_residue(RingElement::zero(r), ghost) == 1);

  CHECK(errc_of([&] {
          RingPtr p2 = projective_space_ring(2);
          return cherneven_residue(RingElement::zero(p2),
                                   CharClassVector::trivial(p2, 2));
        }) == Errc::DimensionMismatch);
  CHECK(errc_of([&] { return cherneven_residue(h * h, tp3); }) == Errc::DimensionMismatch);
}

TEST_CASE("rational class arithmetic") {
  RingPtr r = chow_quadric_ring(2);
  RingElement x = RingElement::generator(r, "x");
  RationalClass half_x = RationalClass::from(x) * Rational(1, 2);
  RationalClass sq = half_x * half_x;  // (x/2)^2 = x^2/4 = y/2
  CHECK(sq.coefficient({0, 1}) == Rational(1, 2));

  RationalClass top = RationalClass::from(x * x * x);  // 2xy
  CHECK(top.evaluate_top() == 2);
  CHECK((top + RationalClass::scalar(r, 7)).evaluate_top() == 2);
  CHECK(RationalClass(r).is_zero());
}
