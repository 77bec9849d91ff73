#pragma once

// Exact arithmetic in the field Q(q,t): rational functions in two variables
// with unbounded rational coefficients, kept in a canonical form so that
// equality is representation identity.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace shuffle {

// Exponent pair (q-degree, t-degree).  Ordered graded-lexicographically with
// q > t; the map below is sorted ascending so rbegin() is the leading term.
struct QtMono {
  int dq = 0;
  int dt = 0;
  friend bool operator==(const QtMono&, const QtMono&) = default;
};

struct QtMonoLess {
  bool operator()(const QtMono& a, const QtMono& b) const {
    int da = a.dq + a.dt, db = b.dq + b.dt;
    if (da != db) return da < db;
    if (a.dq != b.dq) return a.dq < b.dq;
    return a.dt < b.dt;
  }
};

// Sparse polynomial in q,t over Q.  No zero coefficients are stored.
class QtPoly {
 public:
  using Terms = std::map<QtMono, mpq_class, QtMonoLess>;

  QtPoly() = default;
  explicit QtPoly(long c) { set(QtMono{0, 0}, mpq_class(c)); }
  explicit QtPoly(const mpq_class& c) { set(QtMono{0, 0}, c); }

  static QtPoly variable_q(int e = 1) {
    QtPoly p;
    p.set(QtMono{e, 0}, 1);
    return p;
  }
  static QtPoly variable_t(int e = 1) {
    QtPoly p;
    p.set(QtMono{0, e}, 1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  const Terms& terms() const { return terms_; }

  int deg_q() const;
  int deg_t() const;
  QtMono leading_mono() const;  // requires nonzero
  const mpq_class& leading_coeff() const;

  void set(const QtMono& m, const mpq_class& c) {
    if (c == 0)
      terms_.erase(m);
    else
      terms_[m] = c;
  }
  void add_to(const QtMono& m, const mpq_class& c);

  QtPoly operator+(const QtPoly& o) const;
  QtPoly operator-(const QtPoly& o) const;
  QtPoly operator*(const QtPoly& o) const;
  QtPoly operator-() const;
  QtPoly scaled(const mpq_class& c) const;
  bool operator==(const QtPoly& o) const { return terms_ == o.terms_; }

  // q -> q^n, t -> t^n.
  QtPoly subst_powers(int n) const;
  QtPoly swap_qt() const;
  // p(q,t) * q^a t^b with a >= deg_q, b >= deg_t giving p(1/q,1/t) cleared
  // of negative exponents.
  QtPoly reversed(int a, int b) const;

  // Exact division; throws std::logic_error if the division is not exact.
  static QtPoly div_exact(const QtPoly& a, const QtPoly& b);
  // gcd normalized to leading coefficient 1.
  static QtPoly gcd(const QtPoly& a, const QtPoly& b);

  std::string to_string() const;

 private:
  Terms terms_;
};

// Canonical fraction num/den: gcd(num,den)=1 and den has leading
// coefficient 1 under the graded-lex order.  Immutable value semantics;
// equality is exact structural equality of the canonical form.
class QtScalar {
 public:
  QtScalar() : num_(), den_(1) {}
  QtScalar(long c) : num_(c), den_(1) {}
  explicit QtScalar(const mpq_class& c) : num_(c), den_(1) {}
  QtScalar(QtPoly num, QtPoly den);
  explicit QtScalar(const QtPoly& p) : num_(p), den_(1) {}

  static QtScalar q() { return QtScalar(QtPoly::variable_q()); }
  static QtScalar t() { return QtScalar(QtPoly::variable_t()); }
  static QtScalar q_pow(int e);  // q^e, e may be negative
  static QtScalar t_pow(int e);

  const QtPoly& num() const { return num_; }
  const QtPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  QtScalar operator+(const QtScalar& o) const;
  QtScalar operator-(const QtScalar& o) const;
  QtScalar operator*(const QtScalar& o) const;
  QtScalar operator/(const QtScalar& o) const;  // throws on zero divisor
  QtScalar operator-() const;
  QtScalar& operator+=(const QtScalar& o) { return *this = *this + o; }
  QtScalar& operator-=(const QtScalar& o) { return *this = *this - o; }
  QtScalar& operator*=(const QtScalar& o) { return *this = *this * o; }
  QtScalar& operator/=(const QtScalar& o) { return *this = *this / o; }
  bool operator==(const QtScalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QtScalar& o) const { return !(*this == o); }

  QtScalar pow(int e) const;  // e may be negative for nonzero values

  // The bar involution q,t -> 1/q,1/t.
  QtScalar bar() const;
  // q -> q^n, t -> t^n (the n-th power-sum action on the coefficient ring).
  QtScalar subst_powers(int n) const;
  // q <-> t.
  QtScalar swap_qt() const;

  std::string to_string() const;
  // Parses the grammar produced by to_string: integers, q, t, + - * / ^ ().
  static QtScalar parse(const std::string& text);

 private:
  void normalize();
  QtPoly num_, den_;
};

inline QtScalar operator+(long a, const QtScalar& b) { return QtScalar(a) + b; }
inline QtScalar operator-(long a, const QtScalar& b) { return QtScalar(a) - b; }
inline QtScalar operator*(long a, const QtScalar& b) { return QtScalar(a) * b; }
inline QtScalar operator/(long a, const QtScalar& b) { return QtScalar(a) / b; }

class qt_parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shuffle
