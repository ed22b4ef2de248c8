#include "diagprop/charclass.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "diagprop/catalog.hpp"

namespace diagprop {

namespace {

Exponents exp_sum(const Exponents& a, const Exponents& b) {
  Exponents s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) fail(Errc::RingMismatch, "class without an owning ring");
  if (a != b)
    fail(Errc::RingMismatch, "classes over different rings: " + a->id() + " vs " + b->id());
}

}  // namespace

/******** rational-coefficient classes ********/

RationalClass RationalClass::from(const RingElement& a) {
  RationalClass r(a.ring());
  for (const auto& [k, c] : a.terms()) r.terms_.emplace(k, Rational(c));
  return r;
}

RationalClass RationalClass::scalar(const RingPtr& ring, const Rational& value) {
  RationalClass r(ring);
  if (value != 0) r.terms_.emplace(ring->mono(Exponents(ring->generator_count(), 0)), value);
  return r;
}

Rational RationalClass::coefficient(const Exponents& exp) const {
  if (!ring_) return 0;
  auto it = terms_.find(ring_->mono(exp));
  return it == terms_.end() ? Rational(0) : it->second;
}

RationalClass RationalClass::component(unsigned degree) const {
  RationalClass r(ring_);
  for (const auto& [k, c] : terms_)
    if (k.degree == degree) r.terms_.emplace(k, c);
  return r;
}

void RationalClass::add_term(const MonoKey& k, const Rational& c) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

RationalClass& RationalClass::operator+=(const RationalClass& o) {
  require_same_ring(ring_, o.ring_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

RationalClass& RationalClass::operator*=(const RationalClass& o) {
  require_same_ring(ring_, o.ring_);
  RationalClass out(ring_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      if (ka.degree + kb.degree > ring_->top_degree()) continue;
      // normalize the monomial product over the integers, then scale
      RingElement prod = RingElement::monomial(ring_, exp_sum(ka.exp, kb.exp));
      for (const auto& [k, ic] : prod.terms()) out.add_term(k, ca * cb * Rational(ic));
    }
  terms_ = std::move(out.terms_);
  return *this;
}

RationalClass& RationalClass::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

bool operator==(const RationalClass& a, const RationalClass& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

Rational RationalClass::evaluate_top() const {
  if (!ring_) return 0;
  return coefficient(ring_->fundamental_monomial());
}

std::string RationalClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
    } else {
      out << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    std::string m;
    for (std::size_t i = 0; i < k.exp.size(); ++i) {
      if (k.exp[i] == 0) continue;
      if (!m.empty()) m += "*";
      m += ring_->generator(i).name;
      if (k.exp[i] > 1) m += "^" + std::to_string(k.exp[i]);
    }
    if (m.empty())
      out << rational_to_string(coeff);
    else if (coeff == 1)
      out << m;
    else
      out << rational_to_string(coeff) << "*" << m;
  }
  return out.str();
}

/******** characteristic-class vectors ********/

CharClassVector CharClassVector::make(const RingPtr& ring, unsigned rank,
                                      const std::vector<RingElement>& chern, bool virtual_class) {
  if (!ring) fail(Errc::Internal, "class vector needs a ring");
  CharClassVector v;
  v.ring = ring;
  v.rank = rank;
  v.virtual_class = virtual_class;
  const unsigned dim = ring->complex_dimension();
  v.c.assign(dim + 1, RingElement::zero(ring));
  v.c[0] = RingElement::one(ring);
  for (std::size_t i = 0; i < chern.size() && i < dim; ++i) {
    const RingElement& ci = chern[i];
    if (ci.is_zero()) continue;
    require_same_ring(ring, ci.ring());
    auto deg = ci.homogeneous_degree();
    if (!deg || *deg != 2 * (i + 1))
      fail(Errc::InvalidClassVector, "component " + std::to_string(i + 1) +
                                         " is not homogeneous of degree " +
                                         std::to_string(2 * (i + 1)));
    if (!virtual_class && i + 1 > rank)
      fail(Errc::InvalidClassVector,
           "honest rank-" + std::to_string(rank) + " bundle with nonzero c_" +
               std::to_string(i + 1) + "; pass virtual_class for virtual classes");
    v.c[i + 1] = ci;
  }
  return v;
}

CharClassVector CharClassVector::trivial(const RingPtr& ring, unsigned rank) {
  return make(ring, rank, {});
}

CharClassVector CharClassVector::line_bundle(const RingPtr& ring, const RingElement& c1) {
  return make(ring, 1, {c1});
}

RingElement CharClassVector::total() const {
  RingElement t = RingElement::zero(ring);
  for (const auto& ci : c) t += ci;
  return t;
}

CharClassVector whitney_sum(const CharClassVector& a, const CharClassVector& b) {
  require_same_ring(a.ring, b.ring);
  const unsigned dim = a.ring->complex_dimension();
  std::vector<RingElement> comps(dim, RingElement::zero(a.ring));
  for (unsigned k = 1; k <= dim; ++k)
    for (unsigned i = 0; i <= k; ++i)
      if (i < a.c.size() && k - i < b.c.size()) comps[k - 1] += a.c[i] * b.c[k - i];
  return CharClassVector::make(a.ring, a.rank + b.rank, comps,
                               a.virtual_class || b.virtual_class);
}

namespace {
void require_dim_at_most_3(const RingPtr& ring) {
  if (ring->complex_dimension() > 3)
    fail(Errc::DimensionTooLarge, "closed forms cover complex dimension <= 3; ring " +
                                      ring->id() + " has dimension " +
                                      std::to_string(ring->complex_dimension()));
}
}  // namespace

RationalClass chern_character(const CharClassVector& v) {
  require_dim_at_most_3(v.ring);
  const unsigned dim = v.ring->complex_dimension();
  RationalClass ch = RationalClass::scalar(v.ring, Rational(v.rank));
  if (dim >= 1) ch += RationalClass::from(v.c[1]);
  if (dim >= 2) {
    RingElement e = v.c[1] * v.c[1] - Int(2) * v.c[2];
    ch += RationalClass::from(e) * Rational(1, 2);
  }
  if (dim >= 3) {
    RingElement e = v.c[1].pow(3) - Int(3) * (v.c[1] * v.c[2]) + Int(3) * v.c[3];
    ch += RationalClass::from(e) * Rational(1, 6);
  }
  return ch;
}

RationalClass todd_class(const CharClassVector& tangent) {
  require_dim_at_most_3(tangent.ring);
  const unsigned dim = tangent.ring->complex_dimension();
  RationalClass td = RationalClass::scalar(tangent.ring, 1);
  if (dim >= 1) td += RationalClass::from(tangent.c[1]) * Rational(1, 2);
  if (dim >= 2) {
    RingElement e = tangent.c[1] * tangent.c[1] + tangent.c[2];
    td += RationalClass::from(e) * Rational(1, 12);
  }
  if (dim >= 3)
    td += RationalClass::from(tangent.c[1] * tangent.c[2]) * Rational(1, 24);
  return td;
}

Rational euler_char_hrr(const CharClassVector& tangent, const CharClassVector& bundle) {
  require_same_ring(tangent.ring, bundle.ring);
  RationalClass prod = chern_character(bundle) * todd_class(tangent);
  return prod.evaluate_top();
}

Rational hrr_q3_closed_form(const Int& rank, const Int& d1, const Int& d2, const Int& d3) {
  return Rational(2 * d1 * d1 * d1 - 3 * d1 * d2 + 3 * d3, 6) + Rational(3 * (d1 * d1 - d2), 2) +
         Rational(13 * d1, 6) + Rational(rank);
}

Int euler_char_surface(const SurfaceRRData& surface, const Int& d_squared, const Int& d_dot_k) {
  const Int twice = d_squared - d_dot_k;
  if (mod2(twice) != 0)
    fail(Errc::ParityViolation, "D.D - D.K = " + twice.str() +
                                    " is odd; (D.D - D.K)/2 must be an integer on a surface");
  return surface.chi_structure_sheaf + twice / 2;
}

int cherneven_residue(const RingElement& c1_of_manifold, const CharClassVector& bundle) {
  const RingPtr& ring = bundle.ring;
  if (ring->complex_dimension() != 3)
    fail(Errc::DimensionMismatch,
         "the even-Chern residue lives on complex dimension 3; ring " + ring->id() +
             " has dimension " + std::to_string(ring->complex_dimension()));
  require_same_ring(ring, c1_of_manifold.ring());
  if (!c1_of_manifold.is_zero()) {
    auto deg = c1_of_manifold.homogeneous_degree();
    if (!deg || *deg != 2)
      fail(Errc::DimensionMismatch, "c1 of the manifold must be homogeneous of degree 2");
  }
  RingElement expr = bundle.c[3] - bundle.c[2] * (c1_of_manifold + bundle.c[1]);
  return mod2(degree_evaluate(expr));
}

/******** catalog tangent classes ********/

namespace {
std::mutex tangent_mutex;
}

CharClassVector quadric_tangent_class(int m) {
  static std::map<int, CharClassVector> cache;
  std::lock_guard<std::mutex> lock(tangent_mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  RingPtr ring = chow_quadric_ring(m);
  const unsigned dim = ring->complex_dimension();  // 2m - 1
  const RingElement x = RingElement::generator(ring, "x");
  const RingElement one = RingElement::one(ring);

  // restriction of the ambient tangent class: (1+x)^(2m+1), per complex degree
  std::vector<RingElement> amb(dim + 1, RingElement::zero(ring));
  for (unsigned k = 0; k <= dim; ++k) amb[k] = Int(binomial(2 * m + 1, k)) * x.pow(k);
  // inverse of the normal-bundle class 1+2x as a truncated geometric series
  std::vector<RingElement> inv(dim + 1, RingElement::zero(ring));
  inv[0] = one;
  for (unsigned k = 1; k <= dim; ++k) inv[k] = Int(-2) * (x * inv[k - 1]);
  // c(T) = (1+x)^(2m+1) / (1+2x)
  std::vector<RingElement> comps(dim, RingElement::zero(ring));
  for (unsigned k = 1; k <= dim; ++k)
    for (unsigned i = 0; i <= k; ++i) comps[k - 1] += amb[i] * inv[k - i];

  if (comps[0] != Int(2 * m - 1) * x)
    fail(Errc::Internal, "quadric tangent class: degree-2 part is not (2m-1)x");
  auto v = CharClassVector::make(ring, 2 * static_cast<unsigned>(m) - 1, comps);
  cache.emplace(m, v);
  return v;
}

CharClassVector projective_tangent_class(int n) {
  static std::map<int, CharClassVector> cache;
  std::lock_guard<std::mutex> lock(tangent_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  RingPtr ring = projective_space_ring(n);
  const RingElement h = RingElement::generator(ring, "h");
  std::vector<RingElement> comps;
  for (int k = 1; k <= n; ++k) comps.push_back(Int(binomial(n + 1, k)) * h.pow(k));
  auto v = CharClassVector::make(ring, static_cast<unsigned>(n), comps);
  cache.emplace(n, v);
  return v;
}

}  // namespace diagprop
