#include "diagprop/graded_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace diagprop {

namespace {

constexpr int kRewriteBudget = 10000;
constexpr std::size_t kBasisCap = 1u << 20;

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents quotient(const Exponents& b, const Exponents& a) {
  Exponents q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Exponents exp_sum(const Exponents& a, const Exponents& b) {
  Exponents s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

bool is_constant(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

}  // namespace

/******** ring construction ********/

RingPtr GradedRing::make(RingPresentation p) { return make_impl(std::move(p), nullptr); }

std::shared_ptr<GradedRing> GradedRing::make_impl(RingPresentation p, RingPtr kunneth_base) {
  const bool integral = p.coefficients == Coefficients::Integers;
  RingPresentation companion_pres;
  if (integral) {
    companion_pres = p;
    companion_pres.coefficients = Coefficients::IntegersMod2;
    companion_pres.id = p.companion_id.empty() ? p.id + ";Z2" : p.companion_id;
    if (!p.companion_generator_names.empty()) {
      if (p.companion_generator_names.size() != p.generators.size())
        fail(Errc::InvalidPresentation, "companion generator rename list has wrong length");
      for (std::size_t i = 0; i < companion_pres.generators.size(); ++i)
        companion_pres.generators[i].name = p.companion_generator_names[i];
    }
    companion_pres.companion_id.clear();
    companion_pres.companion_generator_names.clear();
  }

  auto ring = std::shared_ptr<GradedRing>(new GradedRing(std::move(p)));
  ring->kunneth_base_ = kunneth_base;
  ring->validate_and_build();

  if (integral) {
    auto comp = std::shared_ptr<GradedRing>(new GradedRing(std::move(companion_pres)));
    comp->kunneth_base_ = kunneth_base ? kunneth_base->companion_mod2() : nullptr;
    comp->validate_and_build();
    ring->companion_ = comp;
  }
  return ring;
}

void GradedRing::validate_and_build() {
  const auto& gens = pres_.generators;
  if (gens.empty()) fail(Errc::InvalidPresentation, "a ring needs at least one generator");
  std::set<std::string> names;
  for (const auto& g : gens) {
    if (g.name.empty()) fail(Errc::InvalidPresentation, "generator with empty name");
    if (!names.insert(g.name).second)
      fail(Errc::InvalidPresentation, "duplicate generator name '" + g.name + "'");
    if (g.degree == 0) fail(Errc::InvalidPresentation, "generator '" + g.name + "' has degree 0");
    if (g.degree % 2 != 0)
      fail(Errc::OddGeneratorDegree,
           "generator '" + g.name + "' has odd degree " + std::to_string(g.degree));
  }
  if (pres_.top_degree % 2 != 0) fail(Errc::InvalidPresentation, "top degree must be even");

  rules_.clear();
  for (const auto& rel : pres_.relations) {
    CompiledRule rc;
    if (rel.head.size() != gens.size())
      fail(Errc::InvalidPresentation, "relation head has wrong exponent arity");
    if (is_constant(rel.head))
      fail(Errc::InvalidPresentation, "relation head must be a nonconstant monomial");
    rc.head = rel.head;
    rc.head_degree = weighted_degree(rel.head);
    for (const auto& [texp, tcoeff] : rel.tail) {
      if (texp.size() != gens.size())
        fail(Errc::InvalidPresentation, "relation tail has wrong exponent arity");
      if (weighted_degree(texp) != rc.head_degree)
        fail(Errc::NonHomogeneousRelation,
             "relation tail degree " + std::to_string(weighted_degree(texp)) +
                 " differs from head degree " + std::to_string(rc.head_degree));
      Int c = normalize_coeff(tcoeff);
      if (c != 0) rc.tail.emplace_back(mono(texp), c);
    }
    rules_.push_back(std::move(rc));
  }

  // enumerate normal-form monomials of degree <= top_degree
  basis_by_degree_.assign(pres_.top_degree + 1, {});
  std::size_t count = 0;
  Exponents cur(gens.size(), 0);
  auto enumerate = [&](auto&& self, std::size_t gi, unsigned degree) -> void {
    if (gi == gens.size()) {
      if (!reducible(cur)) {
        if (++count > kBasisCap) fail(Errc::InvalidPresentation, "basis enumeration too large");
        basis_by_degree_[degree].push_back(cur);
      }
      return;
    }
    for (unsigned e = 0;; ++e) {
      unsigned d = degree + e * gens[gi].degree;
      if (d > pres_.top_degree) break;
      cur[gi] = e;
      self(self, gi + 1, d);
    }
    cur[gi] = 0;
  };
  enumerate(enumerate, 0, 0);
  for (auto& bucket : basis_by_degree_)
    std::sort(bucket.begin(), bucket.end(), [this](const Exponents& a, const Exponents& b) {
      return MonoGreater{}(mono(a), mono(b));
    });

  // normalizing each tail smokes out cyclic rule sets at construction time
  for (auto& rc : rules_) {
    TermMap t;
    for (const auto& [k, c] : rc.tail) add_term(t, k, c);
    t = normalize(std::move(t));
    rc.tail.assign(t.begin(), t.end());
  }

  const auto& fm = pres_.fundamental_monomial;
  if (fm.size() != gens.size())
    fail(Errc::InvalidPresentation, "fundamental monomial has wrong exponent arity");
  if (weighted_degree(fm) != pres_.top_degree)
    fail(Errc::InvalidPresentation, "fundamental monomial is not of top degree");
  if (reducible(fm))
    fail(Errc::FundamentalMonomialReducible, "fundamental monomial is reducible by a relation head");
}

unsigned GradedRing::weighted_degree(const Exponents& exp) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < exp.size(); ++i) d += exp[i] * pres_.generators[i].degree;
  return d;
}

MonoKey GradedRing::mono(Exponents exp) const {
  MonoKey k;
  k.degree = weighted_degree(exp);
  k.exp = std::move(exp);
  return k;
}

std::optional<std::size_t> GradedRing::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < pres_.generators.size(); ++i)
    if (pres_.generators[i].name == name) return i;
  return std::nullopt;
}

const std::vector<Exponents>& GradedRing::basis(unsigned degree) const {
  static const std::vector<Exponents> empty;
  if (degree > pres_.top_degree) return empty;
  return basis_by_degree_[degree];
}

bool GradedRing::reducible(const Exponents& exp) const {
  for (const auto& rc : rules_)
    if (divides(rc.head, exp)) return true;
  return false;
}

Int GradedRing::normalize_coeff(const Int& c) const {
  if (pres_.coefficients == Coefficients::IntegersMod2) return c % 2 == 0 ? Int(0) : Int(1);
  return c;
}

void GradedRing::add_term(TermMap& into, MonoKey key, Int coeff) const {
  if (key.degree > pres_.top_degree) return;
  auto it = into.find(key);
  if (it == into.end()) {
    coeff = normalize_coeff(coeff);
    if (coeff != 0) into.emplace(std::move(key), std::move(coeff));
    return;
  }
  it->second = normalize_coeff(it->second + coeff);
  if (it->second == 0) into.erase(it);
}

TermMap GradedRing::normalize(TermMap terms) const {
  // strip out-of-range degrees and zero coefficients defensively
  for (auto it = terms.begin(); it != terms.end();) {
    Int c = normalize_coeff(it->second);
    if (it->first.degree > pres_.top_degree || c == 0) {
      it = terms.erase(it);
    } else {
      it->second = std::move(c);
      ++it;
    }
  }

  int budget = kRewriteBudget;
  for (;;) {
    auto it = std::find_if(terms.begin(), terms.end(),
                           [&](const auto& t) { return reducible(t.first.exp); });
    if (it == terms.end()) break;
    if (--budget < 0)
      fail(Errc::RewriteBudgetExceeded,
           "rewriting exceeded " + std::to_string(kRewriteBudget) + " steps in ring " + id());
    const MonoKey key = it->first;
    const Int coeff = it->second;
    terms.erase(it);
    const CompiledRule* rule = nullptr;
    for (const auto& rc : rules_)
      if (divides(rc.head, key.exp)) {
        rule = &rc;
        break;
      }
    const Exponents q = quotient(key.exp, rule->head);
    for (const auto& [tkey, tcoeff] : rule->tail)
      add_term(terms, mono(exp_sum(q, tkey.exp)), coeff * tcoeff);
  }
  return terms;
}

/******** elements ********/

RingElement RingElement::zero(const RingPtr& ring) { return RingElement(ring, {}); }

RingElement RingElement::one(const RingPtr& ring) {
  return monomial(ring, Exponents(ring->generator_count(), 0));
}

RingElement RingElement::monomial(const RingPtr& ring, const Exponents& exp, Int coeff) {
  if (!ring) fail(Errc::Internal, "monomial of a null ring");
  if (exp.size() != ring->generator_count())
    fail(Errc::Internal, "exponent arity does not match ring " + ring->id());
  TermMap t;
  ring->add_term(t, ring->mono(exp), std::move(coeff));
  return RingElement(ring, ring->normalize(std::move(t)));
}

RingElement RingElement::generator(const RingPtr& ring, std::size_t index, unsigned power) {
  if (!ring || index >= ring->generator_count())
    fail(Errc::Internal, "generator index out of range");
  Exponents e(ring->generator_count(), 0);
  e[index] = power;
  return monomial(ring, e);
}

RingElement RingElement::generator(const RingPtr& ring, const std::string& name, unsigned power) {
  auto idx = ring ? ring->generator_index(name) : std::nullopt;
  if (!idx) fail(Errc::Internal, "no generator named '" + name + "'");
  return generator(ring, *idx, power);
}

namespace {
void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) fail(Errc::RingMismatch, "element has no owning ring");
  if (a != b)
    fail(Errc::RingMismatch, "elements of different rings: " + a->id() + " vs " + b->id());
}
}  // namespace

std::optional<unsigned> RingElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = terms_.begin()->first.degree;
  for (const auto& [k, c] : terms_)
    if (k.degree != d) return std::nullopt;
  return d;
}

Int RingElement::coefficient(const Exponents& exp) const {
  if (!ring_) return 0;
  auto it = terms_.find(ring_->mono(exp));
  return it == terms_.end() ? Int(0) : it->second;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  require_same_ring(ring_, o.ring_);
  for (const auto& [k, c] : o.terms_) ring_->add_term(terms_, k, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  require_same_ring(ring_, o.ring_);
  for (const auto& [k, c] : o.terms_) ring_->add_term(terms_, k, -c);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  require_same_ring(ring_, o.ring_);
  TermMap raw;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      if (ka.degree + kb.degree > ring_->top_degree()) continue;
      ring_->add_term(raw, ring_->mono(exp_sum(ka.exp, kb.exp)), ca * cb);
    }
  terms_ = ring_->normalize(std::move(raw));
  return *this;
}

RingElement& RingElement::operator*=(const Int& scalar) {
  if (!ring_) return *this;
  TermMap out;
  for (const auto& [k, c] : terms_) ring_->add_term(out, k, c * scalar);
  terms_ = std::move(out);
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  r *= Int(-1);
  return r;
}

RingElement RingElement::pow(unsigned e) const {
  if (!ring_) fail(Errc::Internal, "pow of a placeholder element");
  RingElement acc = one(ring_);
  for (unsigned i = 0; i < e; ++i) acc *= *this;
  return acc;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // the map is ordered leading-first; print ascending degree instead
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Int coeff = c;
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
      out << coeff.str();
    else if (coeff == 1)
      out << m;
    else
      out << coeff.str() << "*" << m;
  }
  return out.str();
}

/******** named operations ********/

RingElement multiply(const RingElement& a, const RingElement& b) { return a * b; }

Int degree_evaluate(const RingElement& a) {
  if (a.is_zero()) return 0;
  const auto& ring = a.ring();
  auto deg = a.homogeneous_degree();
  if (!deg || *deg != ring->top_degree())
    fail(Errc::NotTopDegree, "element is not homogeneous of degree " +
                                 std::to_string(ring->top_degree()) + ": " + a.to_string());
  return a.coefficient(ring->fundamental_monomial());
}

RingElement reduce_mod2(const RingElement& a) {
  const auto& ring = a.ring();
  if (!ring) fail(Errc::RingMismatch, "element has no owning ring");
  auto comp = ring->companion_mod2();
  if (!comp) fail(Errc::NoCompanionRing, "ring " + ring->id() + " has no mod-2 companion");
  // same generator slots by construction, so exponents carry over directly
  RingElement out = RingElement::zero(comp);
  for (const auto& [k, c] : a.terms()) out += RingElement::monomial(comp, k.exp, c);
  return out;
}

RingPtr kunneth_square(const RingPtr& r) {
  if (!r) fail(Errc::Internal, "kunneth square of a null ring");
  const RingPresentation& base = r->pres_;
  const std::size_t k = base.generators.size();

  auto embed = [k](const Exponents& e, bool left) {
    Exponents out(2 * k, 0);
    for (std::size_t i = 0; i < e.size(); ++i) out[left ? i : k + i] = e[i];
    return out;
  };

  RingPresentation p;
  p.id = base.id + " x " + base.id;
  p.coefficients = base.coefficients;
  p.top_degree = 2 * base.top_degree;
  for (const auto& g : base.generators) p.generators.push_back({g.name + ".1", g.degree});
  for (const auto& g : base.generators) p.generators.push_back({"1." + g.name, g.degree});
  for (bool left : {true, false})
    for (const auto& rel : base.relations) {
      RingPresentation::Rule rule;
      rule.head = embed(rel.head, left);
      for (const auto& [texp, tc] : rel.tail) rule.tail.emplace_back(embed(texp, left), tc);
      p.relations.push_back(std::move(rule));
    }
  p.fundamental_monomial =
      exp_sum(embed(base.fundamental_monomial, true), embed(base.fundamental_monomial, false));
  if (r->companion_) {
    p.companion_id = r->companion_->id() + " x " + r->companion_->id();
    for (const auto& g : r->companion_->pres_.generators)
      p.companion_generator_names.push_back(g.name + ".1");
    for (const auto& g : r->companion_->pres_.generators)
      p.companion_generator_names.push_back("1." + g.name);
  }
  return GradedRing::make_impl(std::move(p), r);
}

RingElement restrict_to_diagonal(const RingElement& a) {
  const auto& ring = a.ring();
  if (!ring) fail(Errc::RingMismatch, "element has no owning ring");
  auto base = ring->kunneth_base();
  if (!base) fail(Errc::NotKunnethRing, "ring " + ring->id() + " is not a Kunneth square");
  const std::size_t k = base->generator_count();
  RingElement out = RingElement::zero(base);
  for (const auto& [key, c] : a.terms()) {
    Exponents folded(k, 0);
    for (std::size_t i = 0; i < k; ++i) folded[i] = key.exp[i] + key.exp[k + i];
    out += RingElement::monomial(base, folded, c);
  }
  return out;
}

namespace {
RingElement cross(const RingElement& base_elt, const RingPtr& kunneth, bool left) {
  if (!kunneth || !kunneth->is_kunneth_square())
    fail(Errc::NotKunnethRing, "target ring is not a Kunneth square");
  if (kunneth->kunneth_base() != base_elt.ring())
    fail(Errc::RingMismatch, "element does not live in the Kunneth base ring");
  const std::size_t k = base_elt.ring()->generator_count();
  RingElement out = RingElement::zero(kunneth);
  for (const auto& [key, c] : base_elt.terms()) {
    Exponents e(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i) e[left ? i : k + i] = key.exp[i];
    out += RingElement::monomial(kunneth, e, c);
  }
  return out;
}
}  // namespace

RingElement cross_left(const RingElement& base_elt, const RingPtr& kunneth) {
  return cross(base_elt, kunneth, true);
}

RingElement cross_right(const RingElement& base_elt, const RingPtr& kunneth) {
  return cross(base_elt, kunneth, false);
}

}  // namespace diagprop
