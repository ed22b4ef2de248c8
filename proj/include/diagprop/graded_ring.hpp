#ifndef DIAGPROP_GRADED_RING_HPP
#define DIAGPROP_GRADED_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diagprop/errors.hpp"
#include "diagprop/numeric.hpp"

namespace diagprop {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/* One exponent slot per ring generator, in generator-list order. */
using Exponents = std::vector<unsigned>;

enum class Coefficients { Integers, IntegersMod2 };

struct Generator {
  std::string name;
  unsigned degree = 0;  // cohomological degree, must be even and positive
};

/* Monomial key carrying its weighted degree so term maps can be ordered
 * without a ring handle. The degree is determined by the exponents; it is
 * stored, not trusted: rings construct all keys themselves. */
struct MonoKey {
  unsigned degree = 0;
  Exponents exp;

  friend bool operator==(const MonoKey& a, const MonoKey& b) {
    return a.degree == b.degree && a.exp == b.exp;
  }
};

/* Graded lexicographic, largest first, so map iteration starts at the
 * leading term. Earlier generators weigh more in ties. */
struct MonoGreater {
  bool operator()(const MonoKey& a, const MonoKey& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.exp > b.exp;
  }
};

using TermMap = std::map<MonoKey, Int, MonoGreater>;

/* A finitely presented graded-commutative ring given by even-degree
 * generators and rewrite rules head -> tail. Heads are monomials; tails are
 * homogeneous of the same degree and order-smaller, so normalization
 * terminates (a step budget guards against malformed input). */
struct RingPresentation {
  struct Rule {
    Exponents head;
    std::vector<std::pair<Exponents, Int>> tail;  // empty tail means head -> 0
  };

  std::string id;  // display identifier, e.g. "CH(Q3)"
  std::vector<Generator> generators;
  std::vector<Rule> relations;
  unsigned top_degree = 0;
  Coefficients coefficients = Coefficients::Integers;
  Exponents fundamental_monomial;  // basis of the top degree, must be irreducible

  // Optional overrides for the mod-2 companion built alongside an integral
  // ring (display id and generator renames, e.g. x,y -> xi,eta).
  std::string companion_id;
  std::vector<std::string> companion_generator_names;
};

class RingElement;

class GradedRing : public std::enable_shared_from_this<GradedRing> {
 public:
  /* Validates the presentation, computes the monomial basis of every degree
   * up to top_degree, and for an integral ring builds the mod-2 companion
   * (same heads, tail coefficients reduced mod 2).
   *
   * Throws: OddGeneratorDegree, NonHomogeneousRelation,
   * FundamentalMonomialReducible, RewriteBudgetExceeded (cyclic rules),
   * InvalidPresentation (structural defects). */
  static RingPtr make(RingPresentation p);

  const std::string& id() const { return pres_.id; }
  Coefficients coefficients() const { return pres_.coefficients; }
  unsigned top_degree() const { return pres_.top_degree; }
  unsigned complex_dimension() const { return pres_.top_degree / 2; }

  std::size_t generator_count() const { return pres_.generators.size(); }
  const Generator& generator(std::size_t i) const { return pres_.generators[i]; }
  std::optional<std::size_t> generator_index(const std::string& name) const;

  const Exponents& fundamental_monomial() const { return pres_.fundamental_monomial; }

  /* Normal-form monomials of the given degree, graded-lex descending.
   * Degrees outside [0, top_degree] and odd degrees yield the empty list. */
  const std::vector<Exponents>& basis(unsigned degree) const;

  unsigned weighted_degree(const Exponents& exp) const;
  MonoKey mono(Exponents exp) const;

  /* Mod-2 companion ring; null when this ring is already mod 2. */
  RingPtr companion_mod2() const { return companion_; }

  /* Kunneth squares remember the ring they were built from. */
  bool is_kunneth_square() const { return kunneth_base_ != nullptr; }
  RingPtr kunneth_base() const { return kunneth_base_; }

  /* Rewrites a term map to normal form: no monomial divisible by a rule
   * head, coefficients normalized for the coefficient domain, terms above
   * top_degree truncated to zero. At most 10,000 rule applications per call;
   * exceeding the budget throws RewriteBudgetExceeded. */
  TermMap normalize(TermMap terms) const;

  bool reducible(const Exponents& exp) const;

 private:
  explicit GradedRing(RingPresentation p) : pres_(std::move(p)) {}

  struct CompiledRule {
    Exponents head;
    unsigned head_degree = 0;
    std::vector<std::pair<MonoKey, Int>> tail;
  };

  static std::shared_ptr<GradedRing> make_impl(RingPresentation p, RingPtr kunneth_base);
  void validate_and_build();
  Int normalize_coeff(const Int& c) const;
  void add_term(TermMap& into, MonoKey key, Int coeff) const;

  friend RingPtr kunneth_square(const RingPtr& r);
  friend class RingElement;

  RingPresentation pres_;
  std::vector<CompiledRule> rules_;
  std::vector<std::vector<Exponents>> basis_by_degree_;
  std::shared_ptr<const GradedRing> companion_;
  RingPtr kunneth_base_;
};

/* An element in normal form, tied to its owning ring. Value type; all
 * arithmetic renormalizes. Operations on elements of different rings throw
 * RingMismatch. */
class RingElement {
 public:
  RingElement() = default;  // zero of no ring; usable only as a placeholder

  static RingElement zero(const RingPtr& ring);
  static RingElement one(const RingPtr& ring);
  static RingElement monomial(const RingPtr& ring, const Exponents& exp, Int coeff = 1);
  static RingElement generator(const RingPtr& ring, std::size_t index, unsigned power = 1);
  static RingElement generator(const RingPtr& ring, const std::string& name, unsigned power = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /* Degree when every term agrees; nullopt for mixed elements. Zero is
   * homogeneous of every degree and reports nullopt with is_zero() true. */
  std::optional<unsigned> homogeneous_degree() const;

  Int coefficient(const Exponents& exp) const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  RingElement& operator*=(const Int& scalar);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend RingElement operator*(RingElement a, const Int& s) { return a *= s; }
  friend RingElement operator*(const Int& s, RingElement a) { return a *= s; }
  RingElement operator-() const;
  RingElement pow(unsigned e) const;

  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

  /* Ascending degree, '*' between factors, '^' for exponents: "1 + 3*x + 8*y". */
  std::string to_string() const;

 private:
  RingElement(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  TermMap terms_;  // always normal form
};

/* Named entry points mirroring the toolkit surface; operators forward here. */
RingElement multiply(const RingElement& a, const RingElement& b);

/* Coefficient of the fundamental monomial. The element must be zero or
 * homogeneous of top degree, else NotTopDegree. */
Int degree_evaluate(const RingElement& a);

/* Image in the declared mod-2 companion; NoCompanionRing when there is none.
 * A ring homomorphism: monomial bases agree, coefficients reduce mod 2. */
RingElement reduce_mod2(const RingElement& a);

/* Ring for X x X from the ring for X: two copies g x 1, 1 x g of each
 * generator (displayed "g.1" and "1.g"), relations duplicated per side,
 * doubled top degree, fundamental monomial the product of both copies. */
RingPtr kunneth_square(const RingPtr& r);

/* The diagonal restriction: g x 1 and 1 x g both map to g. Requires an
 * element of a Kunneth square, else NotKunnethRing. */
RingElement restrict_to_diagonal(const RingElement& a);

/* Embeddings a -> a x 1 and a -> 1 x a of the base ring into a Kunneth
 * square built from it. */
RingElement cross_left(const RingElement& base_elt, const RingPtr& kunneth);
RingElement cross_right(const RingElement& base_elt, const RingPtr& kunneth);

}  // namespace diagprop

#endif
