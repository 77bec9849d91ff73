#include "shuffle/qt.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace shuffle {

namespace {

// Internal dense-ish view: a bivariate polynomial as a vector over q-degree
// of univariate polynomials in t over Q.  Used for gcd and exact division.
using UniT = std::vector<mpq_class>;   // coefficient of t^i at index i
using BiQ = std::vector<UniT>;         // coefficient of q^i at index i

void uni_trim(UniT& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool uni_is_zero(const UniT& p) { return p.empty(); }

UniT uni_sub(const UniT& a, const UniT& b) {
  UniT r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  uni_trim(r);
  return r;
}

UniT uni_mul(const UniT& a, const UniT& b) {
  if (a.empty() || b.empty()) return {};
  UniT r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  uni_trim(r);
  return r;
}

UniT uni_scale(const UniT& a, const mpq_class& c) {
  if (c == 0) return {};
  UniT r = a;
  for (auto& x : r) x *= c;
  return r;
}

// Division with remainder over the field Q.
void uni_divmod(const UniT& a, const UniT& b, UniT& quo, UniT& rem) {
  if (uni_is_zero(b)) throw std::logic_error("uni_divmod: zero divisor");
  rem = a;
  quo.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0,
             mpq_class(0));
  while (rem.size() >= b.size()) {
    mpq_class c = rem.back() / b.back();
    size_t shift = rem.size() - b.size();
    quo[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    uni_trim(rem);
    if (rem.size() >= b.size() && rem.size() + b.size() == 0) break;
    if (!rem.empty() && rem.size() >= b.size() && rem.back() == 0) uni_trim(rem);
  }
  uni_trim(quo);
}

UniT uni_div_exact(const UniT& a, const UniT& b) {
  UniT q, r;
  uni_divmod(a, b, q, r);
  if (!uni_is_zero(r)) throw std::logic_error("uni_div_exact: not exact");
  return q;
}

UniT uni_monic(const UniT& a) {
  if (a.empty()) return a;
  return uni_scale(a, mpq_class(1) / a.back());
}

// Clears denominators and divides out the integer content, giving a
// primitive integer polynomial (up to sign).
UniT uni_primitive(UniT p) {
  uni_trim(p);
  if (p.empty()) return p;
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                  c.get_den().get_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> z(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    mpq_class v = p[i] * l;
    z[i] = v.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  UniT r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = mpq_class(z[i] / g);
  return r;
}

// Primitive PRS over Z; naive Euclid over Q blows up coefficient sizes.
UniT uni_gcd(UniT a, UniT b) {
  a = uni_primitive(std::move(a));
  b = uni_primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!uni_is_zero(b)) {
    // Pseudo-remainder of a by b, content removed after every step to
    // keep coefficient growth polynomial.
    while (!uni_is_zero(a) && a.size() >= b.size()) {
      mpq_class la = a.back();
      const mpq_class& lb = b.back();
      size_t shift = a.size() - b.size();
      for (auto& c : a) c *= lb;
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
      a = uni_primitive(std::move(a));
    }
    std::swap(a, b);
  }
  return uni_monic(a);
}

void bi_trim(BiQ& p) {
  while (!p.empty() && uni_is_zero(p.back())) p.pop_back();
}

bool bi_is_zero(const BiQ& p) { return p.empty(); }

BiQ bi_div_exact_uni(const BiQ& a, const UniT& c) {
  BiQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    r[i] = uni_is_zero(a[i]) ? UniT{} : uni_div_exact(a[i], c);
  bi_trim(r);
  return r;
}

UniT bi_content(const BiQ& a) {
  UniT g;
  for (const auto& c : a)
    if (!uni_is_zero(c)) g = uni_gcd(g, c);
  return g;
}

// Newton interpolation: the unique polynomial of degree < xs.size() taking
// value ys[i] at xs[i].
UniT uni_interpolate(const std::vector<mpq_class>& xs,
                     const std::vector<mpq_class>& ys) {
  const size_t n = xs.size();
  std::vector<mpq_class> dd = ys;  // divided differences, computed in place
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  // Horner on the Newton form.
  UniT r{dd[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    // r := r * (t - xs[i]) + dd[i]
    UniT next(r.size() + 1);
    for (size_t j = 0; j < r.size(); ++j) {
      next[j + 1] += r[j];
      next[j] -= r[j] * xs[i];
    }
    next[0] += dd[i];
    uni_trim(next);
    r = std::move(next);
  }
  return r;
}

mpq_class uni_eval(const UniT& p, const mpq_class& x) {
  mpq_class r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

// The polynomial in q obtained by evaluating every t-coefficient at tau.
UniT bi_eval_t(const BiQ& p, const mpq_class& tau) {
  UniT r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = uni_eval(p[i], tau);
  uni_trim(r);
  return r;
}

BiQ to_bi(const QtPoly& p) {
  BiQ r(p.is_zero() ? 0 : p.deg_q() + 1);
  for (const auto& [m, c] : p.terms()) {
    if (r[m.dq].size() <= static_cast<size_t>(m.dt))
      r[m.dq].resize(m.dt + 1);
    r[m.dq][m.dt] = c;
  }
  bi_trim(r);
  return r;
}

QtPoly from_bi(const BiQ& p) {
  QtPoly r;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p[i].size(); ++j)
      if (p[i][j] != 0)
        r.set(QtMono{static_cast<int>(i), static_cast<int>(j)}, p[i][j]);
  return r;
}

}  // namespace

bool QtPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == QtMono{0, 0} &&
         terms_.begin()->second == 1;
}

bool QtPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == QtMono{0, 0});
}

int QtPoly::deg_q() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dq);
  return d;
}

int QtPoly::deg_t() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dt);
  return d;
}

QtMono QtPoly::leading_mono() const {
  if (terms_.empty()) throw std::logic_error("leading_mono of zero");
  return terms_.rbegin()->first;
}

const mpq_class& QtPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading_coeff of zero");
  return terms_.rbegin()->second;
}

void QtPoly::add_to(const QtMono& m, const mpq_class& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_[m] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

QtPoly QtPoly::operator+(const QtPoly& o) const {
  QtPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_to(m, c);
  return r;
}

QtPoly QtPoly::operator-(const QtPoly& o) const {
  QtPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_to(m, -c);
  return r;
}

QtPoly QtPoly::operator*(const QtPoly& o) const {
  QtPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.add_to(QtMono{ma.dq + mb.dq, ma.dt + mb.dt}, ca * cb);
  return r;
}

QtPoly QtPoly::operator-() const {
  QtPoly r;
  for (const auto& [m, c] : terms_) r.set(m, -c);
  return r;
}

QtPoly QtPoly::scaled(const mpq_class& c) const {
  QtPoly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.set(m, k * c);
  return r;
}

QtPoly QtPoly::subst_powers(int n) const {
  QtPoly r;
  for (const auto& [m, c] : terms_) r.set(QtMono{m.dq * n, m.dt * n}, c);
  return r;
}

QtPoly QtPoly::swap_qt() const {
  QtPoly r;
  for (const auto& [m, c] : terms_) r.set(QtMono{m.dt, m.dq}, c);
  return r;
}

QtPoly QtPoly::reversed(int a, int b) const {
  QtPoly r;
  for (const auto& [m, c] : terms_) {
    if (a - m.dq < 0 || b - m.dt < 0)
      throw std::logic_error("reversed: insufficient shift");
    r.set(QtMono{a - m.dq, b - m.dt}, c);
  }
  return r;
}

QtPoly QtPoly::div_exact(const QtPoly& a, const QtPoly& b) {
  if (b.is_zero()) throw std::logic_error("div_exact by zero");
  if (a.is_zero()) return QtPoly();
  if (b.is_one()) return a;
  if (b.is_constant()) return a.scaled(mpq_class(1) / b.terms().begin()->second);
  BiQ bb = to_bi(b);
  BiQ rem = to_bi(a);
  BiQ quo(rem.size() >= bb.size() ? rem.size() - bb.size() + 1 : 0);
  while (!bi_is_zero(rem) && rem.size() >= bb.size()) {
    UniT c = uni_div_exact(rem.back(), bb.back());
    size_t shift = rem.size() - bb.size();
    quo[shift] = c;
    for (size_t i = 0; i < bb.size(); ++i)
      rem[i + shift] = uni_sub(rem[i + shift], uni_mul(bb[i], c));
    bi_trim(rem);
  }
  if (!bi_is_zero(rem)) throw std::logic_error("div_exact: not exact");
  return from_bi(quo);
}

QtPoly QtPoly::gcd(const QtPoly& a, const QtPoly& b) {
  if (a.is_zero() && b.is_zero()) return QtPoly();
  if (a.is_zero() || a.is_constant() || b.is_zero() || b.is_constant()) {
    if (a.is_zero()) {
      QtPoly r = b;
      return r.scaled(mpq_class(1) / r.leading_coeff());
    }
    if (b.is_zero()) {
      QtPoly r = a;
      return r.scaled(mpq_class(1) / r.leading_coeff());
    }
    return QtPoly(1);
  }
  BiQ A = to_bi(a), B = to_bi(b);
  UniT ca = bi_content(A), cb = bi_content(B);
  A = bi_div_exact_uni(A, ca);
  B = bi_div_exact_uni(B, cb);
  UniT cg = uni_gcd(ca, cb);
  auto content_only = [&]() {
    QtPoly r;
    for (size_t j = 0; j < cg.size(); ++j)
      if (cg[j] != 0) r.set(QtMono{0, static_cast<int>(j)}, cg[j]);
    return r.scaled(mpq_class(1) / r.leading_coeff());
  };

  // gcd of the primitive parts by evaluation in t and interpolation back.
  // Specializing t keeps degrees honest as long as the q-leading coefficient
  // survives (Gauss: lc of the gcd divides both lcs), so an evaluated gcd's
  // degree only overshoots at unlucky points; trial division verifies.
  UniT gamma = uni_gcd(A.back(), B.back());
  int dt_bound = 0;
  {
    int da = 0, db = 0;
    for (const auto& c : A) da = std::max<int>(da, c.size());
    for (const auto& c : B) db = std::max<int>(db, c.size());
    dt_bound = std::min(da, db);  // 1 + max t-degree of the smaller side
  }
  size_t npts = gamma.size() + dt_bound;
  size_t d_min = SIZE_MAX;
  std::vector<mpq_class> xs;
  std::vector<UniT> gs;
  QtPoly pa = from_bi(A), pb = from_bi(B);
  for (long tau = 0;; tau = tau > 0 ? -tau : 1 - tau) {
    mpq_class ta(tau);
    if (uni_eval(A.back(), ta) == 0 || uni_eval(B.back(), ta) == 0) continue;
    UniT g = uni_gcd(bi_eval_t(A, ta), bi_eval_t(B, ta));
    if (g.size() == 1) return content_only();
    if (g.size() < d_min) {
      d_min = g.size();
      xs.clear();
      gs.clear();
    } else if (g.size() > d_min) {
      continue;
    }
    mpq_class scale = uni_eval(gamma, ta);
    for (auto& c : g) c *= scale;
    xs.push_back(ta);
    gs.push_back(std::move(g));
    if (xs.size() < npts) continue;
    BiQ cand(d_min);
    std::vector<mpq_class> ys(xs.size());
    for (size_t j = 0; j < d_min; ++j) {
      for (size_t i = 0; i < xs.size(); ++i) ys[i] = gs[i][j];
      cand[j] = uni_interpolate(xs, ys);
    }
    UniT cc = bi_content(cand);
    cand = bi_div_exact_uni(cand, cc);
    QtPoly g_poly = from_bi(cand);
    try {
      (void)div_exact(pa, g_poly);
      (void)div_exact(pb, g_poly);
    } catch (const std::logic_error&) {
      npts += 2;  // an unlucky point slipped in; gather more evidence
      continue;
    }
    QtPoly r = g_poly * content_only();
    return r.scaled(mpq_class(1) / r.leading_coeff());
  }
}

std::string QtPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first: iterate descending.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpq_class cc = c;
    if (first) {
      if (cc < 0) {
        os << "-";
        cc = -cc;
      }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    first = false;
    bool has_vars = m.dq > 0 || m.dt > 0;
    if (!has_vars || cc != 1) {
      os << cc.get_str();
      if (has_vars) os << "*";
    }
    if (m.dq > 0) {
      os << "q";
      if (m.dq > 1) os << "^" << m.dq;
      if (m.dt > 0) os << "*";
    }
    if (m.dt > 0) {
      os << "t";
      if (m.dt > 1) os << "^" << m.dt;
    }
  }
  return os.str();
}

QtScalar::QtScalar(QtPoly num, QtPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QtScalar: zero denominator");
  normalize();
}

void QtScalar::normalize() {
  if (num_.is_zero()) {
    den_ = QtPoly(1);
    return;
  }
  if (!den_.is_one()) {
    QtPoly g = QtPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = QtPoly::div_exact(num_, g);
      den_ = QtPoly::div_exact(den_, g);
    }
  }
  mpq_class lc = den_.leading_coeff();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

QtScalar QtScalar::q_pow(int e) {
  if (e >= 0) return QtScalar(QtPoly::variable_q(e));
  return QtScalar(QtPoly(1), QtPoly::variable_q(-e));
}

QtScalar QtScalar::t_pow(int e) {
  if (e >= 0) return QtScalar(QtPoly::variable_t(e));
  return QtScalar(QtPoly(1), QtPoly::variable_t(-e));
}

QtScalar QtScalar::operator+(const QtScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    QtScalar r;
    r.num_ = num_ + o.num_;
    r.den_ = QtPoly(1);
    return r;
  }
  return QtScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QtScalar QtScalar::operator-(const QtScalar& o) const { return *this + (-o); }

QtScalar QtScalar::operator-() const {
  QtScalar r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

QtScalar QtScalar::operator*(const QtScalar& o) const {
  if (is_zero() || o.is_zero()) return QtScalar();
  if (den_.is_one() && o.den_.is_one()) {
    QtScalar r;
    r.num_ = num_ * o.num_;
    r.den_ = QtPoly(1);
    return r;
  }
  // Cross-reduce before multiplying to keep intermediates small.
  QtPoly g1 = QtPoly::gcd(num_, o.den_);
  QtPoly g2 = QtPoly::gcd(o.num_, den_);
  QtPoly n1 = g1.is_one() ? num_ : QtPoly::div_exact(num_, g1);
  QtPoly d2 = g1.is_one() ? o.den_ : QtPoly::div_exact(o.den_, g1);
  QtPoly n2 = g2.is_one() ? o.num_ : QtPoly::div_exact(o.num_, g2);
  QtPoly d1 = g2.is_one() ? den_ : QtPoly::div_exact(den_, g2);
  return QtScalar(n1 * n2, d1 * d2);
}

QtScalar QtScalar::operator/(const QtScalar& o) const {
  if (o.is_zero()) throw std::domain_error("QtScalar: division by zero");
  QtScalar inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  mpq_class lc = inv.den_.leading_coeff();
  if (lc != 1) {
    mpq_class k = 1 / lc;
    inv.num_ = inv.num_.scaled(k);
    inv.den_ = inv.den_.scaled(k);
  }
  return *this * inv;
}

QtScalar QtScalar::pow(int e) const {
  if (e == 0) return QtScalar(1);
  if (e < 0) return QtScalar(1) / pow(-e);
  QtScalar r(1), base = *this;
  int n = e;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

QtScalar QtScalar::bar() const {
  if (is_zero()) return QtScalar();
  int a = std::max(num_.deg_q(), den_.deg_q());
  int b = std::max(num_.deg_t(), den_.deg_t());
  return QtScalar(num_.reversed(a, b), den_.reversed(a, b));
}

QtScalar QtScalar::subst_powers(int n) const {
  if (n == 1) return *this;
  return QtScalar(num_.subst_powers(n), den_.subst_powers(n));
}

QtScalar QtScalar::swap_qt() const {
  return QtScalar(num_.swap_qt(), den_.swap_qt());
}

std::string QtScalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char get() {
    skip_ws();
    if (pos >= s.size()) throw qt_parse_error("unexpected end of input");
    return s[pos++];
  }

  QtScalar parse_expr() {
    QtScalar r = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        r = r + parse_term();
      } else if (c == '-') {
        ++pos;
        r = r - parse_term();
      } else {
        return r;
      }
    }
  }

  QtScalar parse_term() {
    QtScalar r = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        r = r * parse_factor();
      } else if (c == '/') {
        ++pos;
        r = r / parse_factor();
      } else {
        return r;
      }
    }
  }

  QtScalar parse_factor() {
    QtScalar base = parse_atom();
    if (peek() == '^') {
      ++pos;
      bool neg = false;
      if (peek() == '-') {
        ++pos;
        neg = true;
      }
      int e = parse_int();
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  int parse_int() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw qt_parse_error("expected integer");
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    return std::stoi(s.substr(start, pos - start));
  }

  QtScalar parse_atom() {
    char c = peek();
    if (c == '-') {
      ++pos;
      return -parse_factor();
    }
    if (c == '(') {
      ++pos;
      QtScalar r = parse_expr();
      if (get() != ')') throw qt_parse_error("expected ')'");
      return r;
    }
    if (c == 'q') {
      ++pos;
      return QtScalar::q();
    }
    if (c == 't') {
      ++pos;
      return QtScalar::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      mpz_class v(s.substr(start, pos - start));
      return QtScalar(mpq_class(v));
    }
    throw qt_parse_error(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

QtScalar QtScalar::parse(const std::string& text) {
  Parser p(text);
  QtScalar r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw qt_parse_error("trailing input");
  return r;
}

}  // namespace shuffle
