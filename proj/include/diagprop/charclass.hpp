#ifndef DIAGPROP_CHARCLASS_HPP
#define DIAGPROP_CHARCLASS_HPP

#include <map>
#include <string>
#include <vector>

#include "diagprop/graded_ring.hpp"

namespace diagprop {

/* Graded ring element with exact rational coefficients on the integer
 * monomial basis. Only the characteristic-class layer needs these: Chern
 * characters and Todd classes live here, Euler characteristics come out as
 * exact rationals and callers decide what integrality means. */
class RationalClass {
 public:
  RationalClass() = default;
  explicit RationalClass(RingPtr ring) : ring_(std::move(ring)) {}

  static RationalClass from(const RingElement& a);
  static RationalClass scalar(const RingPtr& ring, const Rational& value);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents& exp) const;
  RationalClass component(unsigned degree) const;  // homogeneous part

  RationalClass& operator+=(const RationalClass& o);
  RationalClass& operator*=(const RationalClass& o);
  RationalClass& operator*=(const Rational& s);
  friend RationalClass operator+(RationalClass a, const RationalClass& b) { return a += b; }
  friend RationalClass operator*(RationalClass a, const RationalClass& b) { return a *= b; }
  friend RationalClass operator*(RationalClass a, const Rational& s) { return a *= s; }
  friend RationalClass operator*(const Rational& s, RationalClass a) { return a *= s; }

  friend bool operator==(const RationalClass& a, const RationalClass& b);

  /* Rational coefficient of the fundamental monomial on the top-degree
   * component; lower-degree terms are ignored. */
  Rational evaluate_top() const;

  std::string to_string() const;

 private:
  void add_term(const MonoKey& k, const Rational& c);

  RingPtr ring_;
  std::map<MonoKey, Rational, MonoGreater> terms_;
};

/* Total characteristic-class vector of a (possibly virtual) bundle:
 * components c[0..dim] with c[0] = 1, c[i] homogeneous of degree 2i. Honest
 * bundles must have c[i] = 0 for i > rank; virtual_class lifts that check. */
struct CharClassVector {
  RingPtr ring;
  unsigned rank = 0;
  bool virtual_class = false;
  std::vector<RingElement> c;

  /* chern[i] is c_(i+1); shorter vectors pad with zero. Throws
   * InvalidClassVector on inhomogeneous components or an honest-rank
   * violation, RingMismatch on foreign components. */
  static CharClassVector make(const RingPtr& ring, unsigned rank,
                              const std::vector<RingElement>& chern,
                              bool virtual_class = false);
  static CharClassVector trivial(const RingPtr& ring, unsigned rank);
  static CharClassVector line_bundle(const RingPtr& ring, const RingElement& c1);

  RingElement total() const;  // sum of all components
};

/* Cartesian-product formula: c(E + F) = c(E) c(F), truncated at the ring's
 * top degree; ranks add. */
CharClassVector whitney_sum(const CharClassVector& a, const CharClassVector& b);

/* Chern character ch_0..ch_dim through complex dimension 3:
 *   ch0 = rank, ch1 = c1, ch2 = (c1^2 - 2 c2)/2,
 *   ch3 = (c1^3 - 3 c1 c2 + 3 c3)/6.
 * DimensionTooLarge beyond dimension 3. */
RationalClass chern_character(const CharClassVector& v);

/* Todd class td_0..td_dim through complex dimension 3:
 *   td1 = c1/2, td2 = (c1^2 + c2)/12, td3 = c1 c2 / 24. */
RationalClass todd_class(const CharClassVector& tangent);

/* Exact Euler characteristic from the top component of
 * ch(bundle) * td(tangent). Integrality is the caller's question. */
Rational euler_char_hrr(const CharClassVector& tangent, const CharClassVector& bundle);

/* Closed form of the same computation on Q3 for a rank-r bundle with
 * c1 = d1 x, c2 = d2 y, c3 = d3 xy:
 *   chi = (2 d1^3 - 3 d1 d2 + 3 d3)/6 + 3(d1^2 - d2)/2 + 13 d1/6 + r. */
Rational hrr_q3_closed_form(const Int& rank, const Int& d1, const Int& d2, const Int& d3);

/* Surface Riemann-Roch: chi(O(D)) = chi(O) + (D.D - D.K)/2. */
struct SurfaceRRData {
  Int chi_structure_sheaf;
};
Int euler_char_surface(const SurfaceRRData& surface, const Int& d_squared, const Int& d_dot_k);

/* Residue mod 2 of <c3(E) - c2(E)(c1(M) + c1(E)), [M]> on a ring of complex
 * dimension 3. Vanishes for every honest bundle on an almost complex M; a
 * residue of 1 certifies that no bundle has these classes. */
int cherneven_residue(const RingElement& c1_of_manifold, const CharClassVector& bundle);

/* Tangent classes of the catalog spaces, computed in-ring and cached.
 * The quadric tangent class comes from the exact power-series division
 *   c(T) = (1+x)^(2m+1) / (1+2x)
 * and its degree-2 part is checked to equal (2m-1) x. */
CharClassVector quadric_tangent_class(int m);
CharClassVector projective_tangent_class(int n);

}  // namespace diagprop

#endif
