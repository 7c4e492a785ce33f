#include "rotdiag/algebra.hpp"

#include <functional>
#include <sstream>

namespace rotdiag {

namespace {

LaurentScalar int_one() {
  static const RingPtr empty = make_ring({}, {});
  return LaurentScalar::constant(empty, 1);
}

// ---- scalar algebras: basis labels are monomial exponent vectors ----

// Monomial algebra on named generators; `involutive[k]` imposes the
// order-2 relation on generator k (its exponent is reduced mod 2).
class MonomialAlgebra final : public XCAlgebra {
 public:
  MonomialAlgebra(std::string name, std::vector<std::string> gens,
                  std::vector<bool> involutive)
      : name_(std::move(name)),
        gens_(std::move(gens)),
        involutive_(std::move(involutive)) {}

  std::string name() const override { return name_; }
  RingPtr coefficient_ring() const override {
    static const RingPtr empty = make_ring({}, {});
    return empty;
  }
  Element unit() const override {
    return {{BasisLabel(gens_.size(), 0), int_one()}};
  }
  Element basis_product(const BasisLabel& a,
                        const BasisLabel& b) const override {
    BasisLabel r(gens_.size(), 0);
    for (size_t k = 0; k < gens_.size(); ++k) {
      r[k] = a[k] + b[k];
      if (involutive_[k]) r[k] = ((r[k] % 2) + 2) % 2;
    }
    return {{r, int_one()}};
  }
  const std::vector<std::pair<Element, Element>>& r_pairs() const override {
    return r_;
  }
  const std::vector<std::pair<Element, Element>>& rbar_pairs() const override {
    return rbar_;
  }
  const Element& kappa() const override { return kappa_; }
  const Element& kappa_bar() const override { return kappa_bar_; }
  std::string show_basis(const BasisLabel& b) const override {
    std::ostringstream out;
    bool any = false;
    for (size_t k = 0; k < gens_.size(); ++k) {
      if (b[k] == 0) continue;
      if (any) out << " ";
      any = true;
      out << gens_[k];
      if (b[k] != 1) out << "^" << b[k];
    }
    return any ? out.str() : "1";
  }

  Element monomial(const BasisLabel& b) const { return {{b, int_one()}}; }

  std::vector<std::pair<Element, Element>> r_, rbar_;
  Element kappa_, kappa_bar_;

 private:
  std::string name_;
  std::vector<std::string> gens_;
  std::vector<bool> involutive_;
};

AlgebraPtr make_trivial() {
  auto a = std::make_shared<MonomialAlgebra>(
      "trivial", std::vector<std::string>{}, std::vector<bool>{});
  a->kappa_ = a->unit();
  a->kappa_bar_ = a->unit();
  a->r_ = {{a->unit(), a->unit()}};
  a->rbar_ = {{a->unit(), a->unit()}};
  return a;
}

// Group algebra of <t> x <k> with R = t (x) 1 and kappa = k.  With the
// relation k^2 = 1 all axioms hold; without it exactly the axiom relating
// the two kink-with-rotation forms fails (it reduces to t k = t k^-1).
AlgebraPtr make_toy(bool kappa_involutive) {
  auto a = std::make_shared<MonomialAlgebra>(
      kappa_involutive ? "toy" : "mutant", std::vector<std::string>{"t", "k"},
      std::vector<bool>{false, kappa_involutive});
  a->kappa_ = a->monomial({0, 1});
  a->kappa_bar_ = a->monomial({0, kappa_involutive ? 1 : -1});
  a->r_ = {{a->monomial({1, 0}), a->unit()}};
  a->rbar_ = {{a->monomial({-1, 0}), a->unit()}};
  return a;
}

// ---- matrix-unit algebra over a Laurent ring ----

// 2x2 matrix units E_ij over Z[A, A^-1], with the six-vertex R-matrix
// (braiding composed with the strand flip) and the diagonal balancing
// element kappa = diag(A^2, A^-2).
class MatrixAlgebra final : public XCAlgebra {
 public:
  MatrixAlgebra() : ring_(make_ring({"A"}, {false})) {
    const Element e00 = unit_of(0, 0), e01 = unit_of(0, 1);
    const Element e10 = unit_of(1, 0), e11 = unit_of(1, 1);
    const LaurentScalar a = var(1), ainv = var(-1);
    const LaurentScalar bulge = var(1) - var(-3);       // A - A^-3
    const LaurentScalar bulge_inv = var(-1) - var(3);   // A^-1 - A^3
    r_ = {{scale(e00, a), e00},
          {scale(e11, a), e11},
          {scale(e00, ainv), e11},
          {scale(e11, ainv), e00},
          {scale(e01, bulge), e10}};
    rbar_ = {{scale(e00, ainv), e00},
             {scale(e11, ainv), e11},
             {scale(e00, a), e11},
             {scale(e11, a), e00},
             {scale(e01, bulge_inv), e10}};
    kappa_ = el_add(scale(e00, var(2)), scale(e11, var(-2)));
    kappa_bar_ = el_add(scale(e00, var(-2)), scale(e11, var(2)));
  }

  std::string name() const override { return "kauffman"; }
  RingPtr coefficient_ring() const override { return ring_; }
  Element unit() const override {
    return el_add(unit_of(0, 0), unit_of(1, 1));
  }
  Element basis_product(const BasisLabel& a,
                        const BasisLabel& b) const override {
    if (a[1] != b[0]) return {};
    return {{BasisLabel{a[0], b[1]}, LaurentScalar::constant(ring_, 1)}};
  }
  const std::vector<std::pair<Element, Element>>& r_pairs() const override {
    return r_;
  }
  const std::vector<std::pair<Element, Element>>& rbar_pairs() const override {
    return rbar_;
  }
  const Element& kappa() const override { return kappa_; }
  const Element& kappa_bar() const override { return kappa_bar_; }
  std::string show_basis(const BasisLabel& b) const override {
    std::ostringstream out;
    out << "E" << b[0] << b[1];
    return out.str();
  }

 private:
  Element unit_of(int i, int j) const {
    return {{BasisLabel{i, j}, LaurentScalar::constant(ring_, 1)}};
  }
  LaurentScalar var(int exp) const {
    return LaurentScalar::variable(ring_, 0, exp);
  }
  static Element scale(const Element& e, const LaurentScalar& c) {
    return el_scale(e, c);
  }

  RingPtr ring_;
  std::vector<std::pair<Element, Element>> r_, rbar_;
  Element kappa_, kappa_bar_;
};

}  // namespace

AlgebraPtr make_algebra(const std::string& name) {
  if (name == "trivial") return make_trivial();
  if (name == "toy") return make_toy(true);
  if (name == "mutant") return make_toy(false);
  if (name == "kauffman") return std::make_shared<MatrixAlgebra>();
  throw MorseError("unknown algebra: " + name);
}

// ---- element operations ----

void el_accumulate(Element& into, const BasisLabel& b, const LaurentScalar& c) {
  auto it = into.find(b);
  if (it == into.end()) {
    if (!c.is_zero()) into.emplace(b, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) into.erase(it);
}

Element el_add(const Element& a, const Element& b) {
  Element r = a;
  for (const auto& [lbl, c] : b) el_accumulate(r, lbl, c);
  return r;
}

Element el_scale(const Element& a, const LaurentScalar& c) {
  Element r;
  for (const auto& [lbl, x] : a) el_accumulate(r, lbl, x * c);
  return r;
}

Element el_mul(const XCAlgebra& alg, const Element& a, const Element& b) {
  Element r;
  for (const auto& [la, ca] : a) {
    for (const auto& [lb, cb] : b) {
      const LaurentScalar c = ca * cb;
      if (c.is_zero()) continue;
      for (const auto& [lp, cp] : alg.basis_product(la, lb)) {
        el_accumulate(r, lp, c * cp);
      }
    }
  }
  return r;
}

bool el_equal(const Element& a, const Element& b) { return a == b; }

std::string show_element(const XCAlgebra& alg, const Element& e) {
  if (e.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lbl, c] : e) {
    if (!first) out << " + ";
    first = false;
    const std::string cs = c.to_string();
    const std::string ms = alg.show_basis(lbl);
    if (ms == "1") {
      out << cs;
    } else if (cs == "1") {
      out << ms;
    } else {
      const bool wrap = cs.find(' ') != std::string::npos;
      out << (wrap ? "(" + cs + ")" : cs) << " " << ms;
    }
  }
  return out.str();
}

// ---- canonical tensors ----

CanonTensor ct_zero(int arity) {
  CanonTensor t;
  t.arity = arity;
  return t;
}

void ct_accumulate(CanonTensor& into, const std::vector<BasisLabel>& key,
                   const LaurentScalar& c) {
  auto it = into.terms.find(key);
  if (it == into.terms.end()) {
    if (!c.is_zero()) into.terms.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) into.terms.erase(it);
}

CanonTensor ct_from_pure(const XCAlgebra& alg,
                         const std::vector<Element>& factors) {
  CanonTensor t = ct_zero(static_cast<int>(factors.size()));
  std::vector<BasisLabel> key(factors.size());
  // Expands the product of sums slot by slot.
  std::function<void(size_t, const LaurentScalar&)> rec =
      [&](size_t slot, const LaurentScalar& c) {
        if (slot == factors.size()) {
          ct_accumulate(t, key, c);
          return;
        }
        for (const auto& [lbl, x] : factors[slot]) {
          key[slot] = lbl;
          rec(slot + 1, c * x);
        }
      };
  rec(0, LaurentScalar::constant(alg.coefficient_ring(), 1));
  return t;
}

CanonTensor ct_unit(const XCAlgebra& alg, int arity) {
  std::vector<Element> f(static_cast<size_t>(arity), alg.unit());
  return ct_from_pure(alg, f);
}

CanonTensor ct_add(const CanonTensor& a, const CanonTensor& b) {
  if (a.arity != b.arity) throw MorseError("tensor arity mismatch in add");
  CanonTensor r = a;
  for (const auto& [k, c] : b.terms) ct_accumulate(r, k, c);
  return r;
}

CanonTensor ct_mul(const XCAlgebra& alg, const CanonTensor& a,
                   const CanonTensor& b) {
  if (a.arity != b.arity) throw MorseError("tensor arity mismatch in mul");
  CanonTensor r = ct_zero(a.arity);
  const size_t n = static_cast<size_t>(a.arity);
  std::vector<BasisLabel> key(n);
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      // Slot-wise basis products, expanded across slots.
      std::function<void(size_t, const LaurentScalar&)> rec =
          [&](size_t slot, const LaurentScalar& c) {
            if (c.is_zero()) return;
            if (slot == n) {
              ct_accumulate(r, key, c);
              return;
            }
            for (const auto& [lbl, x] :
                 alg.basis_product(ka[slot], kb[slot])) {
              key[slot] = lbl;
              rec(slot + 1, c * x);
            }
          };
      rec(0, ca * cb);
    }
  }
  return r;
}

CanonTensor ct_collapse(const XCAlgebra& alg, const CanonTensor& t, int start,
                        int count) {
  if (count < 1 || start < 0 || start + count > t.arity)
    throw MorseError("tensor collapse range out of bounds");
  CanonTensor r = ct_zero(t.arity - count + 1);
  for (const auto& [k, c] : t.terms) {
    Element acc{{k[static_cast<size_t>(start)],
                 LaurentScalar::constant(alg.coefficient_ring(), 1)}};
    for (int s = start + 1; s < start + count; ++s) {
      Element next;
      for (const auto& [lbl, x] : acc) {
        for (const auto& [lp, cp] :
             alg.basis_product(lbl, k[static_cast<size_t>(s)])) {
          el_accumulate(next, lp, x * cp);
        }
      }
      acc = std::move(next);
    }
    for (const auto& [lbl, x] : acc) {
      std::vector<BasisLabel> key;
      key.reserve(static_cast<size_t>(r.arity));
      for (int s = 0; s < start; ++s) key.push_back(k[static_cast<size_t>(s)]);
      key.push_back(lbl);
      for (int s = start + count; s < t.arity; ++s)
        key.push_back(k[static_cast<size_t>(s)]);
      ct_accumulate(r, key, c * x);
    }
  }
  return r;
}

bool ct_equal(const CanonTensor& a, const CanonTensor& b) {
  return a.arity == b.arity && a.terms == b.terms;
}

std::string show_tensor(const XCAlgebra& alg, const CanonTensor& t) {
  if (t.terms.empty()) return "0";
  std::ostringstream out;
  bool first_term = true;
  for (const auto& [k, c] : t.terms) {
    if (!first_term) out << " + ";
    first_term = false;
    const std::string cs = c.to_string();
    const bool wrap = cs.find(' ') != std::string::npos;
    out << (wrap ? "(" + cs + ")" : cs);
    for (size_t s = 0; s < k.size(); ++s) {
      out << (s == 0 ? " · " : " ⊗ ") << "(" << alg.show_basis(k[s]) << ")";
    }
  }
  return out.str();
}

CanonTensor place_pairs(const XCAlgebra& alg, int arity,
                        const std::vector<std::pair<Element, Element>>& pairs,
                        int i, int j) {
  CanonTensor r = ct_zero(arity);
  for (const auto& [left, right] : pairs) {
    std::vector<Element> f(static_cast<size_t>(arity), alg.unit());
    f[static_cast<size_t>(i)] = left;
    f[static_cast<size_t>(j)] = right;
    r = ct_add(r, ct_from_pure(alg, f));
  }
  return r;
}

CanonTensor place_element(const XCAlgebra& alg, int arity, const Element& e,
                          int i) {
  std::vector<Element> f(static_cast<size_t>(arity), alg.unit());
  f[static_cast<size_t>(i)] = e;
  return ct_from_pure(alg, f);
}

// ---- axiom checker ----

AxiomReport check_xc_axioms(const XCAlgebra& a) {
  AxiomReport rep;
  auto record = [&](const std::string& name, bool axiom, const CanonTensor& l,
                    const CanonTensor& r) {
    AxiomCheckLine line;
    line.name = name;
    line.axiom = axiom;
    line.pass = ct_equal(l, r);
    if (!line.pass) {
      line.lhs = show_tensor(a, l);
      line.rhs = show_tensor(a, r);
    }
    rep.lines.push_back(std::move(line));
  };

  const auto& R = a.r_pairs();
  const auto& Rb = a.rbar_pairs();
  const CanonTensor R2 = place_pairs(a, 2, R, 0, 1);
  const CanonTensor Rb2 = place_pairs(a, 2, Rb, 0, 1);
  const CanonTensor one2 = ct_unit(a, 2);

  record("R*Rbar", false, ct_mul(a, R2, Rb2), one2);
  record("Rbar*R", false, ct_mul(a, Rb2, R2), one2);
  {
    const CanonTensor k1 = ct_from_pure(a, {a.kappa()});
    const CanonTensor kb1 = ct_from_pure(a, {a.kappa_bar()});
    const CanonTensor one1 = ct_unit(a, 1);
    const bool ok = ct_equal(ct_mul(a, k1, kb1), one1) &&
                    ct_equal(ct_mul(a, kb1, k1), one1);
    AxiomCheckLine line;
    line.name = "kappa*kappaBar";
    line.pass = ok;
    if (!ok) {
      line.lhs = show_tensor(a, ct_mul(a, k1, kb1));
      line.rhs = show_tensor(a, one1);
    }
    rep.lines.push_back(std::move(line));
  }

  const CanonTensor kk = ct_from_pure(a, {a.kappa(), a.kappa()});
  const CanonTensor kbkb = ct_from_pure(a, {a.kappa_bar(), a.kappa_bar()});
  record("XC0c", true, R2, ct_mul(a, ct_mul(a, kk, R2), kbkb));
  record("XC0d", true, Rb2, ct_mul(a, ct_mul(a, kk, Rb2), kbkb));

  {
    const CanonTensor l =
        ct_mul(a, place_pairs(a, 3, R, 2, 0), place_element(a, 3, a.kappa(), 1));
    const CanonTensor r = ct_mul(a, place_pairs(a, 3, R, 0, 2),
                                 place_element(a, 3, a.kappa_bar(), 1));
    record("XC1fe", true, ct_collapse(a, l, 0, 3), ct_collapse(a, r, 0, 3));
  }
  {
    // 1 (x) kappaBar = (mu (x) mu3)(R_15 RBar_23 kappaBar_4)
    CanonTensor t = ct_mul(a, place_pairs(a, 5, R, 0, 4),
                           place_pairs(a, 5, Rb, 1, 2));
    t = ct_mul(a, t, place_element(a, 5, a.kappa_bar(), 3));
    t = ct_collapse(a, t, 2, 3);
    t = ct_collapse(a, t, 0, 2);
    record("XC2c1", true, ct_from_pure(a, {a.unit(), a.kappa_bar()}), t);
  }
  {
    // kappa (x) 1 = (mu3 (x) mu)(RBar_15 R_34 kappa_2)
    CanonTensor t = ct_mul(a, place_pairs(a, 5, Rb, 0, 4),
                           place_pairs(a, 5, R, 2, 3));
    t = ct_mul(a, t, place_element(a, 5, a.kappa(), 1));
    t = ct_collapse(a, t, 0, 3);
    t = ct_collapse(a, t, 1, 2);
    record("XC2d1", true, ct_from_pure(a, {a.kappa(), a.unit()}), t);
  }
  {
    const CanonTensor r12 = place_pairs(a, 3, R, 0, 1);
    const CanonTensor r13 = place_pairs(a, 3, R, 0, 2);
    const CanonTensor r23 = place_pairs(a, 3, R, 1, 2);
    record("XC3b", true, ct_mul(a, ct_mul(a, r12, r13), r23),
           ct_mul(a, ct_mul(a, r23, r13), r12));
  }

  rep.all_pass = true;
  for (const auto& line : rep.lines) {
    rep.all_pass = rep.all_pass && line.pass;
    if (line.axiom) {
      ++rep.axioms_total;
      if (line.pass) ++rep.axioms_passed;
    }
  }
  return rep;
}

}  // namespace rotdiag
