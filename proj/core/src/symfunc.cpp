#include "shuffle/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "shuffle/linalg.hpp"

namespace shuffle {

namespace {

using Terms = SymFunc::Terms;

std::mutex cache_mu;

Partition concat(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

// Product of two power-sum expansions: p_lam * p_mu = p_{lam cup mu}.
Terms p_mul(const Terms& a, const Terms& b) {
  Terms r;
  for (const auto& [la, ca] : a)
    for (const auto& [mu, cb] : b) {
      QtScalar c = ca * cb;
      if (c.is_zero()) continue;
      Partition nu = concat(la, mu);
      auto it = r.find(nu);
      if (it == r.end())
        r.emplace(std::move(nu), std::move(c));
      else {
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

void add_terms(Terms& into, const Terms& src, const QtScalar& scale) {
  for (const auto& [lam, c] : src) {
    QtScalar v = c * scale;
    if (v.is_zero()) continue;
    auto it = into.find(lam);
    if (it == into.end())
      into.emplace(lam, std::move(v));
    else {
      it->second += v;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

// m_mu * p_n in the monomial basis: add n to one distinct part value of mu
// (or append a new part n); the coefficient is the multiplicity of the
// enlarged value in the result.
Terms m_mul_p(const Terms& f, int n) {
  Terms r;
  for (const auto& [mu, c] : f) {
    std::vector<int> values{0};  // 0 encodes appending a new part
    for (int p : mu.parts())
      if (values.back() != p) values.push_back(p);
    for (int v : values) {
      std::vector<int> parts = mu.parts();
      if (v == 0) {
        parts.push_back(n);
      } else {
        auto it = std::find(parts.begin(), parts.end(), v);
        *it += n;
      }
      Partition nu(std::move(parts));
      int mult = static_cast<int>(
          std::count(nu.parts().begin(), nu.parts().end(), v + n));
      QtScalar add = c * QtScalar(mult);
      auto it = r.find(nu);
      if (it == r.end())
        r.emplace(std::move(nu), std::move(add));
      else {
        it->second += add;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  }
  return r;
}

// p_lam expanded in the monomial basis, memoized.
const Terms& p_to_m(const Partition& lam) {
  static std::map<Partition, Terms> cache;
  std::lock_guard<std::mutex> lock(cache_mu);
  auto it = cache.find(lam);
  if (it != cache.end()) return it->second;
  Terms f;
  f[Partition()] = QtScalar(1);
  for (int part : lam.parts()) f = m_mul_p(f, part);
  return cache.emplace(lam, std::move(f)).first->second;
}

// h_n and e_n in the power-sum basis via the Newton recursions
// n h_n = sum_i p_i h_{n-i} and n e_n = sum_i (-1)^{i-1} p_i e_{n-i}.
const Terms& gen_in_p(char which, int n) {
  static std::map<std::pair<char, int>, Terms> cache;
  std::lock_guard<std::mutex> lock(cache_mu);
  std::function<const Terms&(char, int)> get = [&](char w,
                                                   int d) -> const Terms& {
    auto key = std::make_pair(w, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Terms f;
    if (d == 0) {
      f[Partition()] = QtScalar(1);
    } else {
      QtScalar inv_d = QtScalar(1) / QtScalar(d);
      for (int i = 1; i <= d; ++i) {
        QtScalar sign((w == 'e' && i % 2 == 0) ? -1 : 1);
        for (const auto& [mu, c] : get(w, d - i)) {
          Partition nu = concat(Partition({i}), mu);
          QtScalar v = c * sign * inv_d;
          auto jt = f.find(nu);
          if (jt == f.end())
            f.emplace(std::move(nu), std::move(v));
          else
            jt->second += v;
        }
      }
      for (auto jt = f.begin(); jt != f.end();)
        jt = jt->second.is_zero() ? f.erase(jt) : std::next(jt);
    }
    return cache.emplace(key, std::move(f)).first->second;
  };
  return get(which, n);
}

// lam-indexed product of generators, in the power-sum basis, memoized.
const Terms& prod_to_p(char which, const Partition& lam) {
  static std::map<std::pair<char, Partition>, Terms> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find({which, lam});
    if (it != cache.end()) return it->second;
  }
  Terms f;
  f[Partition()] = QtScalar(1);
  for (int part : lam.parts()) f = p_mul(f, gen_in_p(which, part));
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(std::make_pair(which, lam), std::move(f))
      .first->second;
}

// Schur function in the power-sum basis via the Jacobi-Trudi determinant,
// using whichever of the h- or e-sided matrix is smaller.
const Terms& schur_to_p(const Partition& lam) {
  static std::map<Partition, Terms> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }
  Partition conj = lam.conjugate();
  char which = 'h';
  const Partition* rows = &lam;
  if (conj.length() < lam.length()) {
    which = 'e';
    rows = &conj;
  }
  int k = rows->length();
  Terms f;
  if (k == 0) {
    f[Partition()] = QtScalar(1);
  } else {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (perm[i] > perm[j]) ++inversions;
      std::vector<int> exps(k);
      bool zero = false;
      for (int i = 0; i < k && !zero; ++i) {
        exps[i] = rows->part(i + 1) - (i + 1) + (perm[i] + 1);
        if (exps[i] < 0) zero = true;
      }
      if (zero) continue;
      Terms term;
      term[Partition()] = QtScalar(inversions % 2 ? -1 : 1);
      for (int e : exps)
        if (e > 0) term = p_mul(term, gen_in_p(which, e));
      add_terms(f, term, QtScalar(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(lam, std::move(f)).first->second;
}

Terms basis_to_p_terms(Basis b, const Terms& terms) {
  Terms out;
  for (const auto& [lam, c] : terms) {
    switch (b) {
      case Basis::p:
        add_terms(out, Terms{{lam, QtScalar(1)}}, c);
        break;
      case Basis::e:
        add_terms(out, prod_to_p('e', lam), c);
        break;
      case Basis::h:
        add_terms(out, prod_to_p('h', lam), c);
        break;
      case Basis::s:
        add_terms(out, schur_to_p(lam), c);
        break;
      case Basis::m:
        throw std::logic_error("basis_to_p_terms: m handled separately");
    }
  }
  return out;
}

Terms p_terms_to_m(const Terms& terms) {
  Terms out;
  for (const auto& [lam, c] : terms) add_terms(out, p_to_m(lam), c);
  return out;
}

// Inverse per-degree base-change matrix: expresses a monomial-basis vector
// in basis b.  Cached per (basis, degree).
const QtMatrix& m_to_basis_matrix(Basis b, int n) {
  static std::map<std::pair<char, int>, QtMatrix> cache;
  auto key = std::make_pair(static_cast<char>(b), n);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<Partition> plist = Partition::all_of_size(n);
  const size_t k = plist.size();
  std::map<Partition, size_t> index;
  for (size_t i = 0; i < k; ++i) index[plist[i]] = i;
  QtMatrix fwd(k, std::vector<QtScalar>(k));  // column j: b_{plist[j]} in m
  for (size_t j = 0; j < k; ++j) {
    Terms in_m;
    if (b == Basis::p)
      in_m = p_to_m(plist[j]);
    else
      in_m = p_terms_to_m(
          basis_to_p_terms(b, Terms{{plist[j], QtScalar(1)}}));
    for (const auto& [lam, c] : in_m) fwd[index.at(lam)][j] = c;
  }
  QtMatrix inv = invert_matrix(std::move(fwd));
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(key, std::move(inv)).first->second;
}

Terms m_terms_to_basis(Basis b, const Terms& terms) {
  // Split by degree and apply the cached inverse matrix.
  Terms out;
  std::map<int, Terms> by_deg;
  for (const auto& [lam, c] : terms) by_deg[lam.size()][lam] = c;
  for (const auto& [n, part] : by_deg) {
    std::vector<Partition> plist = Partition::all_of_size(n);
    const size_t k = plist.size();
    std::vector<QtScalar> vec(k);
    for (size_t i = 0; i < k; ++i) {
      auto it = part.find(plist[i]);
      if (it != part.end()) vec[i] = it->second;
    }
    const QtMatrix& inv = m_to_basis_matrix(b, n);
    for (size_t i = 0; i < k; ++i) {
      QtScalar c;
      for (size_t j = 0; j < k; ++j)
        if (!vec[j].is_zero() && !inv[i][j].is_zero()) c += inv[i][j] * vec[j];
      if (!c.is_zero()) out[plist[i]] = c;
    }
  }
  return out;
}

}  // namespace

int SymFunc::max_degree() const {
  int d = 0;
  for (const auto& [lam, c] : terms_) d = std::max(d, lam.size());
  return d;
}

QtScalar SymFunc::coeff(const Partition& lam) const {
  auto it = terms_.find(lam);
  return it == terms_.end() ? QtScalar() : it->second;
}

void SymFunc::add_to(const Partition& lam, const QtScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(lam);
  if (it == terms_.end()) {
    terms_[lam] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymFunc SymFunc::to_basis(Basis b) const {
  if (b == basis_) return *this;
  SymFunc r(b);
  if (b == Basis::p && basis_ != Basis::m) {
    r.terms_ = basis_to_p_terms(basis_, terms_);
    return r;
  }
  Terms in_m = basis_ == Basis::m
                   ? terms_
                   : p_terms_to_m(basis_to_p_terms(basis_, terms_));
  r.terms_ = b == Basis::m ? std::move(in_m) : m_terms_to_basis(b, in_m);
  return r;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc r = *this;
  const SymFunc converted = o.basis_ == basis_ ? o : o.to_basis(basis_);
  for (const auto& [lam, c] : converted.terms_) r.add_to(lam, c);
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator-() const {
  SymFunc r(basis_);
  for (const auto& [lam, c] : terms_) r.terms_[lam] = -c;
  return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
  SymFunc r(Basis::p);
  r.terms_ = p_mul(to_basis(Basis::p).terms_, o.to_basis(Basis::p).terms_);
  return r;
}

SymFunc SymFunc::scaled(const QtScalar& c) const {
  SymFunc r(basis_);
  if (c.is_zero()) return r;
  for (const auto& [lam, k] : terms_) r.terms_[lam] = k * c;
  return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
  if (basis_ == o.basis_) return terms_ == o.terms_;
  return to_basis(Basis::m).terms_ == o.to_basis(Basis::m).terms_;
}

SymFunc SymFunc::homogeneous_component(int d) const {
  SymFunc r(basis_);
  for (const auto& [lam, c] : terms_)
    if (lam.size() == d) r.terms_[lam] = c;
  return r;
}

SymFunc SymFunc::map_coeffs(
    const std::function<QtScalar(const QtScalar&)>& f) const {
  SymFunc r(basis_);
  for (const auto& [lam, c] : terms_) {
    QtScalar v = f(c);
    if (!v.is_zero()) r.terms_[lam] = v;
  }
  return r;
}

SymFunc SymFunc::bar_coeffs() const {
  return map_coeffs([](const QtScalar& c) { return c.bar(); });
}

SymFunc SymFunc::omega() const {
  SymFunc p = to_basis(Basis::p);
  SymFunc r(Basis::p);
  for (const auto& [lam, c] : p.terms_) {
    int sign = (lam.size() - lam.length()) % 2 ? -1 : 1;
    r.terms_[lam] = c * QtScalar(sign);
  }
  return r.to_basis(basis_);
}

SymFunc SymFunc::plethysm_scale(const QtScalar& c) const {
  SymFunc p = to_basis(Basis::p);
  SymFunc r(Basis::p);
  for (const auto& [lam, k] : p.terms_) {
    QtScalar v = k;
    for (int part : lam.parts()) v *= c.subst_powers(part);
    if (!v.is_zero()) r.terms_[lam] = v;
  }
  return r;
}

SymFunc SymFunc::plethysm_minus() const {
  SymFunc p = to_basis(Basis::p);
  SymFunc r(Basis::p);
  for (const auto& [lam, c] : p.terms_) {
    int sign = lam.length() % 2 ? -1 : 1;
    r.terms_[lam] = c * QtScalar(sign);
  }
  return r;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    if (cs != "1") {
      bool needs_parens = cs.find(' ') != std::string::npos;
      os << (needs_parens ? "(" + cs + ")" : cs) << "*";
    }
    os << static_cast<char>(basis_) << lam.to_string();
  }
  return os.str();
}

QtScalar hall_pairing(const SymFunc& a, const SymFunc& b) {
  SymFunc pa = a.to_basis(Basis::p), pb = b.to_basis(Basis::p);
  QtScalar r;
  for (const auto& [lam, ca] : pa.terms()) {
    QtScalar cb = pb.coeff(lam);
    if (!cb.is_zero()) r += ca * cb * QtScalar(mpq_class(lam.z_stat()));
  }
  return r;
}

std::vector<SymFunc> expand_shift(const SymFunc& f, const QtScalar& c) {
  SymFunc p = f.to_basis(Basis::p);
  std::vector<SymFunc> out(f.max_degree() + 1, SymFunc(Basis::p));
  for (const auto& [lam, coeff] : p.terms()) {
    const std::vector<int>& parts = lam.parts();
    const int np = lam.length();
    // p_a[X + c v] = p_a + c(q^a,t^a) v^a; expand the product over subsets.
    for (unsigned mask = 0; mask < (1u << np); ++mask) {
      QtScalar factor = coeff;
      std::vector<int> rest;
      int vdeg = 0;
      for (int i = 0; i < np; ++i) {
        if (mask & (1u << i)) {
          factor *= c.subst_powers(parts[i]);
          vdeg += parts[i];
        } else {
          rest.push_back(parts[i]);
        }
      }
      if (!factor.is_zero()) out[vdeg].add_to(Partition(std::move(rest)), factor);
    }
  }
  return out;
}

namespace {

// Common shape of the four creation-type operators: take the v^{-j}
// coefficients of f[X + c/v], multiply by the matching coefficient of the
// plethystic exponential Exp[±vX] = sum_d h_d[±X] v^d, and keep v^r.
SymFunc exp_convolve(const SymFunc& f, const QtScalar& c, bool negative_x,
                     int r) {
  std::vector<SymFunc> shift = expand_shift(f, c);
  SymFunc out(Basis::p);
  for (int j = 0; j < static_cast<int>(shift.size()); ++j) {
    if (shift[j].is_zero()) continue;
    int d = r + j;
    if (d < 0) continue;
    SymFunc factor = d == 0 ? SymFunc::one(Basis::p)
                     : negative_x
                         ? SymFunc::single(Basis::e, Partition({d}),
                                           QtScalar(d % 2 ? -1 : 1))
                         : SymFunc::single(Basis::h, Partition({d}));
    out += shift[j] * factor;
  }
  return out;
}

}  // namespace

SymFunc b_op(int r, const SymFunc& f) {
  return exp_convolve(f, 1 - QtScalar::q(), true, r);
}

SymFunc c_op(int r, const SymFunc& f) {
  QtScalar c = QtScalar::q_pow(-1) - 1;
  return exp_convolve(f, c, false, r).scaled(-QtScalar::q_pow(1 - r));
}

SymFunc d1_op(const SymFunc& f) {
  QtScalar c = (1 - QtScalar::q()) * (1 - QtScalar::t());
  return exp_convolve(f, c, true, 1);
}

SymFunc d1_star_op(const SymFunc& f) {
  QtScalar c = -(1 - QtScalar::q_pow(-1)) * (1 - QtScalar::t_pow(-1));
  return exp_convolve(f, c, false, 1);
}

}  // namespace shuffle
