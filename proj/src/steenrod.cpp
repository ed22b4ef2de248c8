#include "diagprop/steenrod.hpp"

#include "diagprop/catalog.hpp"

namespace diagprop {

Sq2Spec Sq2Spec::make(const RingPtr& ring, std::vector<RingElement> images) {
  if (!ring) fail(Errc::Internal, "Sq^2 data needs a ring");
  if (ring->coefficients() != Coefficients::IntegersMod2)
    fail(Errc::RingMismatch, "Sq^2 data needs a mod-2 ring; " + ring->id() + " is integral");
  if (images.size() != ring->generator_count())
    fail(Errc::MissingGeneratorImage,
         "expected " + std::to_string(ring->generator_count()) + " generator images, got " +
             std::to_string(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& img = images[i];
    const auto& gen = ring->generator(i);
    if (img.is_zero()) continue;
    if (img.ring() != ring)
      fail(Errc::RingMismatch, "image of '" + gen.name + "' lives in a different ring");
    auto deg = img.homogeneous_degree();
    if (!deg || *deg != gen.degree + 2)
      fail(Errc::DegreeMismatch, "Sq^2 raises degree by exactly 2; image of '" + gen.name +
                                     "' (degree " + std::to_string(gen.degree) +
                                     ") must be homogeneous of degree " +
                                     std::to_string(gen.degree + 2));
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& gen = ring->generator(i);
    if (gen.degree != 2) continue;
    if (images[i] != RingElement::generator(ring, i).pow(2))
      fail(Errc::DegreeMismatch,
           "the image of the degree-2 generator '" + gen.name + "' must be its square");
  }
  Sq2Spec s;
  s.ring = ring;
  s.generator_images = std::move(images);
  return s;
}

Sq2Spec sq2_quadric_spec(int m) {
  RingPtr ring = mod2_quadric_ring(m);
  RingElement xi = RingElement::generator(ring, "xi");
  RingElement eta = RingElement::generator(ring, "eta");
  return Sq2Spec::make(ring, {xi * xi, Int(m - 1) * (xi * eta)});
}

RingElement sq2(const Sq2Spec& spec, const RingElement& a) {
  if (a.ring() != spec.ring)
    fail(Errc::RingMismatch, "element does not live in the Sq^2 ring " + spec.ring->id());
  RingElement out = RingElement::zero(spec.ring);
  for (const auto& [key, coeff] : a.terms()) {
    for (std::size_t i = 0; i < key.exp.size(); ++i) {
      if (key.exp[i] % 2 == 0) continue;  // the Cartan factor e_i vanishes mod 2
      Exponents reduced = key.exp;
      reduced[i] -= 1;
      out += RingElement::monomial(spec.ring, reduced, coeff) * spec.generator_images[i];
    }
  }
  return out;
}

namespace {
void check_degree(const RingElement& e, unsigned expected, const char* what) {
  if (e.is_zero()) return;
  auto deg = e.homogeneous_degree();
  if (!deg || *deg != expected)
    fail(Errc::DegreeMismatch, std::string(what) + " must be zero or homogeneous of degree " +
                                   std::to_string(expected));
}
}  // namespace

bool wu_identity_check(const RingElement& w2, const RingElement& w_n,
                       const RingElement& w_nplus2, unsigned n, const Sq2Spec& spec) {
  if (n % 2 != 0) fail(Errc::DegreeMismatch, "the checked degree n must be even");
  for (const RingElement* e : {&w2, &w_n, &w_nplus2})
    if (!e->is_zero() && e->ring() != spec.ring)
      fail(Errc::RingMismatch, "Wu identity classes must live in " + spec.ring->id());
  check_degree(w2, 2, "w_2");
  check_degree(w_n, n, "w_n");
  check_degree(w_nplus2, n + 2, "w_(n+2)");

  // Sq^2 w_n = w_2 w_n + (2-n) w_1 w_(n+1) + ((2-n)(2-n-1)/2) w_0 w_(n+2),
  // with w_1 = 0 and w_0 = 1 here.
  const Int top_coeff = (Int(2) - n) * (Int(1) - n) / 2;
  RingElement rhs = w2 * w_n;
  if (mod2(top_coeff) == 1) rhs += w_nplus2;
  return sq2(spec, w_n) == rhs;
}

bool congruence_cherniden2(const Int& m, const Int& c1, const Int& c_2m_minus_2,
                           const Int& c_2m_minus_1) {
  if (m < 2) fail(Errc::BadM, "the congruence needs m >= 2, got " + m.str());
  return mod2(c_2m_minus_1) == mod2(c_2m_minus_2 * (c1 + 1));
}

}  // namespace diagprop
