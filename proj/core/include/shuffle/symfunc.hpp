#pragma once

// Symmetric functions over Q(q,t) with exact change of basis among the
// monomial (m), elementary (e), homogeneous (h), power-sum (p) and Schur (s)
// bases, the Hall pairing, and the plethystic operations used by the
// creation operators.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "shuffle/qt.hpp"
#include "shuffle/shapes.hpp"

namespace shuffle {

enum class Basis : char { m = 'm', e = 'e', h = 'h', p = 'p', s = 's' };

class SymFunc {
 public:
  using Terms = std::map<Partition, QtScalar>;

  explicit SymFunc(Basis b = Basis::m) : basis_(b) {}
  static SymFunc one(Basis b = Basis::m) {
    return single(b, Partition(), QtScalar(1));
  }
  static SymFunc single(Basis b, const Partition& lam,
                        const QtScalar& c = QtScalar(1)) {
    SymFunc f(b);
    f.add_to(lam, c);
    return f;
  }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;
  QtScalar coeff(const Partition& lam) const;  // in the current basis
  void add_to(const Partition& lam, const QtScalar& c);

  SymFunc to_basis(Basis b) const;

  // Mixed-basis operands are converted to the left basis first.  Products
  // come back in the power-sum basis, where multiplication is concatenation.
  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const SymFunc& o) const;
  SymFunc operator-() const;
  SymFunc scaled(const QtScalar& c) const;
  SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
  SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }
  SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }
  bool operator==(const SymFunc& o) const;
  bool operator!=(const SymFunc& o) const { return !(*this == o); }

  SymFunc homogeneous_component(int d) const;
  SymFunc map_coeffs(const std::function<QtScalar(const QtScalar&)>& f) const;
  // q,t -> 1/q,1/t on all coefficients (base-change matrices are rational,
  // so this commutes with to_basis).
  SymFunc bar_coeffs() const;
  SymFunc omega() const;                           // p_k -> (-1)^{k-1} p_k
  SymFunc omega_bar() const { return omega().bar_coeffs(); }
  SymFunc plethysm_scale(const QtScalar& c) const;  // X -> cX
  SymFunc plethysm_minus() const;                   // X -> -X

  std::string to_string() const;

 private:
  Basis basis_;
  Terms terms_;
};

inline SymFunc operator*(const QtScalar& c, const SymFunc& f) {
  return f.scaled(c);
}

// <p_lam, p_mu> = z_lam [lam = mu].
QtScalar hall_pairing(const SymFunc& a, const SymFunc& b);

// Coefficients of v^j, j = 0..deg f, in f[X + c v] for a single extra
// variable v of plethystic degree 1.
std::vector<SymFunc> expand_shift(const SymFunc& f, const QtScalar& c);

// Creation operators.
// (B_r f)[X] = f[X - (q-1)/z] Exp[-zX] |_{z^r}.
SymFunc b_op(int r, const SymFunc& f);
// (C_r f)[X] = -q^{1-r} f[X + (1/q-1)/z] Exp[zX] |_{z^r}.
SymFunc c_op(int r, const SymFunc& f);
// (D_1 f)[X] = f[X + (1-q)(1-t)/u] Exp[-uX] |_{u^1}.
SymFunc d1_op(const SymFunc& f);
// (D_1* f)[X] = f[X - (1-1/q)(1-1/t)/u] Exp[uX] |_{u^1}.
SymFunc d1_star_op(const SymFunc& f);

}  // namespace shuffle
