#pragma once

// The tower V_k = Sym[X] (x) Q(q,t)[y_1..y_k] together with the
// Demazure-Lusztig operators T_i, the raising/lowering operators d_+, d_-,
// the twisted raising operator d_+^*, and the y_i, z_i actions.  Partial
// Dyck paths map into V_k and the d operators implement prepending steps.

#include <map>
#include <vector>

#include "shuffle/dyck.hpp"
#include "shuffle/symfunc.hpp"

namespace shuffle {

class VElem {
 public:
  using YExp = std::vector<int>;  // one exponent per y variable

  explicit VElem(int level = 0) : level_(level) {}
  static VElem one(int level = 0) {
    return from_sym(SymFunc::one(), level);
  }
  static VElem from_sym(const SymFunc& f, int level = 0) {
    VElem v(level);
    v.add_to(YExp(level, 0), f);
    return v;
  }

  int level() const { return level_; }
  // Symmetric-function coefficients are kept in the monomial basis.
  const std::map<YExp, SymFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_to(const YExp& e, const SymFunc& f);
  SymFunc coeff(const YExp& e) const;
  // The symmetric part; requires level 0.
  SymFunc sym() const;

  VElem operator+(const VElem& o) const;
  VElem operator-(const VElem& o) const;
  VElem operator-() const;
  VElem scaled(const QtScalar& c) const;
  VElem& operator+=(const VElem& o) { return *this = *this + o; }
  VElem& operator-=(const VElem& o) { return *this = *this - o; }
  bool operator==(const VElem& o) const;
  bool operator!=(const VElem& o) const { return !(*this == o); }

  VElem map_coeffs(const std::function<QtScalar(const QtScalar&)>& f) const;
  std::string to_string() const;

 private:
  int level_;
  std::map<YExp, SymFunc> terms_;
};

// T_i acts on y_i, y_{i+1} (1 <= i < level) as the twisted Demazure-Lusztig
// operator (q-1) u P(u,v)/(v-u) + (v-qu) P(v,u)/(v-u); it satisfies
// (T_i - 1)(T_i + q) = 0 and the braid relations.
VElem t_op(int i, const VElem& f);
VElem t_inv_op(int i, const VElem& f);  // (T_i + q - 1)/q

// d_+ : V_k -> V_{k+1},  d_+ F = T_1 ... T_k (F[X + (q-1) y_{k+1}]).
VElem dplus(const VElem& f);
// d_- : V_k -> V_{k-1},  d_-(y_k^i F) = -B_{i+1} F for F free of y_k.
VElem dminus(const VElem& f);
// d_+^* : V_k -> V_{k+1}, the twist of d_+: shift X by (q-1) y_{k+1}, then
// relabel y_i -> y_{i+1} and y_{k+1} -> t y_1.
VElem dplus_star(const VElem& f);

VElem y_mul(int i, const VElem& f);
// Multiplication by a symmetric function.
VElem sym_mul(const SymFunc& g, const VElem& f);
// z_i, the conjugate of y_i:
// z_1 = q^{k-1}/(1/q - 1) (d_+^* d_- - d_- d_+^*) T_{k-1}^{-1} ... T_1^{-1},
// z_{i+1} = T_i z_i T_i / q.
VElem z_op(int i, const VElem& f);

// chi_k of a partial path by direct enumeration of labellings: special
// labels 1..k are pinned to the first k positions, attacking positions get
// distinct labels, and labels above k turn into x variables.
VElem chi_k(const DyckPath& pi);

// chi of a full path built by applying d_- / d_+ along the path from its
// top-right end backwards.
SymFunc chi_ops(const DyckPath& pi);
// chi(pi,0) likewise, applying [d_-, d_+]/(q-1) across each corner.
SymFunc chi_zero_ops(const DyckPath& pi);

}  // namespace shuffle
