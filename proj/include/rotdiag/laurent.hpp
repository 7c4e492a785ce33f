#pragma once
// Exact Laurent-polynomial scalars: integer coefficients in named commuting
// variables, where some variables may be declared involutive (x^2 = 1, so
// their exponents are kept in {0, 1}).  Canonical form is a sorted map from
// exponent vector to nonzero coefficient; equality is syntactic on canonical
// forms.  All arithmetic is exact -- no floating point anywhere.

#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotdiag {

struct RingDesc {
  std::vector<std::string> vars;
  std::vector<bool> involutive;  // parallel to vars
};

using RingPtr = std::shared_ptr<const RingDesc>;

inline RingPtr make_ring(std::vector<std::string> vars,
                         std::vector<bool> involutive) {
  if (vars.size() != involutive.size())
    throw std::invalid_argument("ring: vars/involutive size mismatch");
  auto d = std::make_shared<RingDesc>();
  d->vars = std::move(vars);
  d->involutive = std::move(involutive);
  return d;
}

class LaurentScalar {
 public:
  LaurentScalar() = default;  // zero over the empty ring

  static LaurentScalar constant(RingPtr ring, long long c) {
    LaurentScalar s;
    s.ring_ = std::move(ring);
    if (c != 0) s.terms_[s.zero_exp()] = c;
    return s;
  }

  // Single variable raised to a power (reduced if the variable is involutive).
  static LaurentScalar variable(RingPtr ring, int var_index, int exp = 1,
                                long long coeff = 1) {
    LaurentScalar s;
    s.ring_ = std::move(ring);
    if (var_index < 0 || var_index >= static_cast<int>(s.ring_->vars.size()))
      throw std::invalid_argument("laurent: variable index out of range");
    if (coeff == 0) return s;
    std::vector<int> e = s.zero_exp();
    e[static_cast<size_t>(var_index)] = exp;
    s.reduce_exp(e);
    s.terms_[e] = coeff;
    return s;
  }

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           terms_.begin()->first == zero_exp();
  }

  friend LaurentScalar operator+(const LaurentScalar& a,
                                 const LaurentScalar& b) {
    LaurentScalar r = a.with_ring_of(b);
    for (const auto& [e, c] : b.terms_) {
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_[e] = c;
      } else {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }

  friend LaurentScalar operator-(const LaurentScalar& a,
                                 const LaurentScalar& b) {
    return a + b.negated();
  }

  LaurentScalar negated() const {
    LaurentScalar r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentScalar operator*(const LaurentScalar& a,
                                 const LaurentScalar& b) {
    LaurentScalar r;
    r.ring_ = a.ring_ ? a.ring_ : b.ring_;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(ea.size() < eb.size() ? eb.size() : ea.size(), 0);
        for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        r.reduce_exp(e);
        long long& slot = r.terms_[e];
        slot += ca * cb;
        if (slot == 0) r.terms_.erase(e);
      }
    }
    return r;
  }

  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) {
    return !(a == b);
  }
  friend bool operator<(const LaurentScalar& a, const LaurentScalar& b) {
    return a.terms_ < b.terms_;
  }

  const std::map<std::vector<int>, long long>& terms() const { return terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      long long mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string mono = monomial_string(e);
      if (mono.empty()) {
        out << mag;
      } else {
        if (mag != 1) out << mag << " ";
        out << mono;
      }
    }
    return out.str();
  }

 private:
  std::vector<int> zero_exp() const {
    return std::vector<int>(ring_ ? ring_->vars.size() : 0, 0);
  }

  void reduce_exp(std::vector<int>& e) const {
    if (!ring_) return;
    for (size_t i = 0; i < e.size() && i < ring_->involutive.size(); ++i) {
      if (ring_->involutive[i]) e[i] = ((e[i] % 2) + 2) % 2;
    }
  }

  LaurentScalar with_ring_of(const LaurentScalar& other) const {
    LaurentScalar r = *this;
    if (!r.ring_) r.ring_ = other.ring_;
    return r;
  }

  std::string monomial_string(const std::vector<int>& e) const {
    std::ostringstream out;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) out << " ";
      any = true;
      out << (ring_ ? ring_->vars[i] : "x" + std::to_string(i));
      if (e[i] != 1) out << "^" << e[i];
    }
    return out.str();
  }

  RingPtr ring_;
  std::map<std::vector<int>, long long> terms_;
};

}  // namespace rotdiag
