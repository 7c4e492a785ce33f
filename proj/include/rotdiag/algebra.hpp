#pragma once
// XC-algebras: an associative unital algebra A together with distinguished
// elements R, Rbar in A (x) A (finite sums of pure tensors) and kappa,
// kappaBar in A.  Crossings and rotation marks of a diagram are decorated
// with these elements, and the resulting bead products are the universal
// invariant (see invariant.hpp).
//
// Representation: every algebra fixes a basis; a basis label is a small
// integer vector (monomial exponents for scalar algebras, index pairs for
// matrix-unit algebras).  An element is a finite map basis-label ->
// coefficient, with exact Laurent-polynomial coefficients.  Tensors over
// the integer ground ring keep factors separate (t (x) 1 and 1 (x) t stay
// distinct for scalar algebras, whose variables live in the basis labels).

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rotdiag/laurent.hpp"
#include "rotdiag/morse.hpp"

namespace rotdiag {

using BasisLabel = std::vector<int>;
using Element = std::map<BasisLabel, LaurentScalar>;

class XCAlgebra {
 public:
  virtual ~XCAlgebra() = default;
  virtual std::string name() const = 0;
  // Ring of the coefficients in front of basis labels.
  virtual RingPtr coefficient_ring() const = 0;
  virtual Element unit() const = 0;
  // Product of two basis elements, as a general element.
  virtual Element basis_product(const BasisLabel& a,
                                const BasisLabel& b) const = 0;
  // R = sum_i alpha_i (x) beta_i and its inverse Rbar = sum_i
  // alphaBar_i (x) betaBar_i, as lists of (left, right) pure factors.
  virtual const std::vector<std::pair<Element, Element>>& r_pairs() const = 0;
  virtual const std::vector<std::pair<Element, Element>>& rbar_pairs()
      const = 0;
  virtual const Element& kappa() const = 0;
  virtual const Element& kappa_bar() const = 0;
  virtual std::string show_basis(const BasisLabel& b) const = 0;
};

using AlgebraPtr = std::shared_ptr<const XCAlgebra>;

// Built-in algebras: "trivial", "toy" (Laurent ring in t with an
// involutive kappa), "mutant" (same with the involution relation removed;
// fails exactly one axiom, which is what makes it useful in tests), and
// "kauffman" (2x2 matrix units over a one-variable Laurent ring with a
// six-vertex R-matrix).  Throws MorseError on an unknown name.
AlgebraPtr make_algebra(const std::string& name);

// ---- element operations (bilinear extensions of the basis data) ----

void el_accumulate(Element& into, const BasisLabel& b, const LaurentScalar& c);
Element el_add(const Element& a, const Element& b);
Element el_scale(const Element& a, const LaurentScalar& c);
Element el_mul(const XCAlgebra& alg, const Element& a, const Element& b);
bool el_equal(const Element& a, const Element& b);
std::string show_element(const XCAlgebra& alg, const Element& e);

// ---- canonical tensors -------------------------------------------------

// A canonical tensor of fixed arity: finite sum of coefficient * pure
// basis tensor, keyed by the tuple of basis labels.
struct CanonTensor {
  int arity = 0;
  std::map<std::vector<BasisLabel>, LaurentScalar> terms;
};

CanonTensor ct_zero(int arity);
CanonTensor ct_unit(const XCAlgebra& alg, int arity);
CanonTensor ct_from_pure(const XCAlgebra& alg,
                         const std::vector<Element>& factors);
void ct_accumulate(CanonTensor& into, const std::vector<BasisLabel>& key,
                   const LaurentScalar& c);
CanonTensor ct_add(const CanonTensor& a, const CanonTensor& b);
// Slot-wise product in A^{(x)arity}.
CanonTensor ct_mul(const XCAlgebra& alg, const CanonTensor& a,
                   const CanonTensor& b);
// Multiplies the `count` adjacent slots starting at `start` into one slot,
// in position order (the k-fold multiplication map).
CanonTensor ct_collapse(const XCAlgebra& alg, const CanonTensor& t, int start,
                        int count);
bool ct_equal(const CanonTensor& a, const CanonTensor& b);
std::string show_tensor(const XCAlgebra& alg, const CanonTensor& t);

// Places a sum of pure two-factor tensors into slots i and j (0-based,
// distinct) of an arity-n tensor: left factors at slot i, right factors at
// slot j, units elsewhere.
CanonTensor place_pairs(const XCAlgebra& alg, int arity,
                        const std::vector<std::pair<Element, Element>>& pairs,
                        int i, int j);
// Places a single element at slot i of an arity-n tensor.
CanonTensor place_element(const XCAlgebra& alg, int arity, const Element& e,
                          int i);

// ---- axiom checker -----------------------------------------------------

// The six XC axiom equations plus the three invertibility relations.  The
// report lists the invertibility relations first; `axiom` marks the six
// counted axiom lines.
struct AxiomCheckLine {
  std::string name;
  bool axiom = false;
  bool pass = false;
  std::string lhs;  // canonical printed values, for failure diagnostics
  std::string rhs;
};

struct AxiomReport {
  std::vector<AxiomCheckLine> lines;
  bool all_pass = false;
  int axioms_passed = 0;
  int axioms_total = 0;
};

AxiomReport check_xc_axioms(const XCAlgebra& alg);

}  // namespace rotdiag
