#include "shuffle/velem.hpp"

#include <algorithm>
#include <stdexcept>

namespace shuffle {

namespace {

const QtScalar kQ = QtScalar::q();

// Polynomials in two inert variables u, v with symmetric-function
// coefficients, used to apply the Demazure-Lusztig operator.
using BiPoly = std::map<std::pair<int, int>, SymFunc>;

void bi_add(BiPoly& p, int a, int b, const SymFunc& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = p.try_emplace({a, b}, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) p.erase(it);
  }
}

// Exact division by (v - u); throws if the division is not exact.
BiPoly divide_v_minus_u(const BiPoly& n) {
  std::map<int, std::map<int, SymFunc>> cv;  // v-degree -> polynomial in u
  int vmax = 0;
  for (const auto& [uv, f] : n) {
    cv[uv.second][uv.first] = f;
    vmax = std::max(vmax, uv.second);
  }
  if (n.empty()) return {};
  BiPoly q;
  std::map<int, SymFunc> carry;  // q_d while descending, starts at q_{vmax}=0
  for (int d = vmax; d >= 1; --d) {
    // q_{d-1} = c_d + u q_d
    std::map<int, SymFunc> next = std::move(cv[d]);
    for (auto& [a, f] : carry) {
      auto [it, inserted] = next.try_emplace(a + 1, f);
      if (!inserted) it->second += f;
    }
    for (auto& [a, f] : next)
      if (!f.is_zero()) bi_add(q, a, d - 1, f);
    carry = std::move(next);
  }
  // Remainder: c_0 + u q_0 must vanish.
  std::map<int, SymFunc> rem = std::move(cv[0]);
  for (auto& [a, f] : carry) {
    auto [it, inserted] = rem.try_emplace(a + 1, f);
    if (!inserted) it->second += f;
  }
  for (auto& [a, f] : rem)
    if (!f.is_zero()) throw std::logic_error("division by v - u is not exact");
  return q;
}

}  // namespace

void VElem::add_to(const YExp& e, const SymFunc& f) {
  if (static_cast<int>(e.size()) != level_)
    throw std::invalid_argument("exponent vector does not match level");
  if (f.is_zero()) return;
  SymFunc fm = f.to_basis(Basis::m);
  if (fm.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, fm);
  if (!inserted) {
    it->second += fm;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc VElem::coeff(const YExp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? SymFunc(Basis::m) : it->second;
}

SymFunc VElem::sym() const {
  if (level_ != 0) throw std::logic_error("sym() needs level 0");
  return coeff({});
}

VElem VElem::operator+(const VElem& o) const {
  if (level_ != o.level_) throw std::invalid_argument("level mismatch");
  VElem r = *this;
  for (const auto& [e, f] : o.terms_) r.add_to(e, f);
  return r;
}

VElem VElem::operator-(const VElem& o) const { return *this + (-o); }

VElem VElem::operator-() const {
  VElem r(level_);
  for (const auto& [e, f] : terms_) r.terms_[e] = -f;
  return r;
}

VElem VElem::scaled(const QtScalar& c) const {
  VElem r(level_);
  if (c.is_zero()) return r;
  for (const auto& [e, f] : terms_) r.terms_[e] = f.scaled(c);
  return r;
}

bool VElem::operator==(const VElem& o) const {
  return level_ == o.level_ && terms_ == o.terms_;
}

VElem VElem::map_coeffs(
    const std::function<QtScalar(const QtScalar&)>& f) const {
  VElem r(level_);
  for (const auto& [e, g] : terms_) r.add_to(e, g.map_coeffs(f));
  return r;
}

std::string VElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, f] : terms_) {
    if (!s.empty()) s += " + ";
    std::string ym;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!ym.empty()) ym += "*";
      ym += "y" + std::to_string(i + 1);
      if (e[i] > 1) ym += "^" + std::to_string(e[i]);
    }
    if (ym.empty())
      s += "(" + f.to_string() + ")";
    else
      s += ym + "*(" + f.to_string() + ")";
  }
  return s;
}

VElem t_op(int i, const VElem& f) {
  int k = f.level();
  if (i < 1 || i >= k) throw std::invalid_argument("T index out of range");
  // Group terms by the exponents of the untouched variables.
  std::map<VElem::YExp, BiPoly> groups;
  for (const auto& [e, g] : f.terms()) {
    VElem::YExp key = e;
    int a = key[i - 1], b = key[i];
    key[i - 1] = key[i] = 0;
    bi_add(groups[key], a, b, g);
  }
  VElem r(k);
  for (auto& [key, p] : groups) {
    BiPoly n;
    for (const auto& [uv, g] : p) {
      auto [a, b] = uv;
      bi_add(n, a + 1, b, g.scaled(kQ - 1));  // (q-1) u P(u,v)
      bi_add(n, b, a + 1, g);                 // v P(v,u)
      bi_add(n, b + 1, a, g.scaled(-kQ));     // -q u P(v,u)
    }
    for (const auto& [uv, g] : divide_v_minus_u(n)) {
      VElem::YExp e = key;
      e[i - 1] = uv.first;
      e[i] = uv.second;
      r.add_to(e, g);
    }
  }
  return r;
}

VElem t_inv_op(int i, const VElem& f) {
  return (t_op(i, f) + f.scaled(kQ - 1)).scaled(1 / kQ);
}

VElem dplus(const VElem& f) {
  int k = f.level();
  VElem r(k + 1);
  for (const auto& [e, g] : f.terms()) {
    auto sh = expand_shift(g, kQ - 1);
    for (size_t j = 0; j < sh.size(); ++j) {
      VElem::YExp e2 = e;
      e2.push_back(static_cast<int>(j));
      r.add_to(e2, sh[j]);
    }
  }
  for (int i = k; i >= 1; --i) r = t_op(i, r);
  return r;
}

VElem dminus(const VElem& f) {
  int k = f.level();
  if (k < 1) throw std::invalid_argument("d_- needs level >= 1");
  VElem r(k - 1);
  for (const auto& [e, g] : f.terms()) {
    VElem::YExp e2(e.begin(), e.end() - 1);
    r.add_to(e2, -b_op(e.back() + 1, g));
  }
  return r;
}

VElem dplus_star(const VElem& f) {
  int k = f.level();
  VElem r(k + 1);
  for (const auto& [e, g] : f.terms()) {
    auto sh = expand_shift(g, kQ - 1);
    for (size_t j = 0; j < sh.size(); ++j) {
      VElem::YExp e2(k + 1);
      e2[0] = static_cast<int>(j);
      std::copy(e.begin(), e.end(), e2.begin() + 1);
      r.add_to(e2, sh[j].scaled(QtScalar::t_pow(static_cast<int>(j))));
    }
  }
  return r;
}

VElem y_mul(int i, const VElem& f) {
  if (i < 1 || i > f.level()) throw std::invalid_argument("y index");
  VElem r(f.level());
  for (const auto& [e, g] : f.terms()) {
    VElem::YExp e2 = e;
    ++e2[i - 1];
    r.add_to(e2, g);
  }
  return r;
}

VElem sym_mul(const SymFunc& g, const VElem& f) {
  VElem r(f.level());
  for (const auto& [e, h] : f.terms()) r.add_to(e, g * h);
  return r;
}

VElem z_op(int i, const VElem& f) {
  int k = f.level();
  if (i < 1 || i > k) throw std::invalid_argument("z index");
  if (i > 1) return t_op(i - 1, z_op(i - 1, t_op(i - 1, f))).scaled(1 / kQ);
  VElem g = f;
  for (int j = 1; j <= k - 1; ++j) g = t_inv_op(j, g);
  VElem h = dplus_star(dminus(g)) - dminus(dplus_star(g));
  return h.scaled(kQ.pow(k - 1) / (1 / kQ - 1));
}

VElem chi_k(const DyckPath& pi) {
  int k = pi.start_height(), n = pi.rows();
  // Attack lists per position.
  std::vector<std::vector<int>> att(n + 1);
  for (auto [i, j] : pi.area_cells()) att[j].push_back(i);
  std::vector<int> w(n + 1, 0);
  VElem raw(k);
  auto record = [&]() {
    int inv = 0;
    for (int j = 1; j <= n; ++j)
      for (int i : att[j]) inv += w[i] > w[j];
    VElem::YExp e(k, 0);
    std::vector<int> xc(n + 1, 0);
    for (int j = 1; j <= n; ++j)
      w[j] <= k ? ++e[w[j] - 1] : ++xc[w[j] - k];
    // Keep only the dominant x-monomial of each orbit.
    std::vector<int> lam;
    for (int v = 1; v <= n; ++v) {
      if (xc[v] == 0) {
        for (int u = v + 1; u <= n; ++u)
          if (xc[u] != 0) return;
        break;
      }
      if (!lam.empty() && xc[v] > lam.back()) return;
      lam.push_back(xc[v]);
    }
    raw.add_to(e, SymFunc::single(Basis::m, Partition(std::move(lam)),
                                  QtScalar::q_pow(inv)));
  };
  auto rec = [&](auto&& self, int j) -> void {
    if (j > n) {
      record();
      return;
    }
    int lo = j <= k ? j : 1, hi = j <= k ? j : n;
    for (int v = lo; v <= hi; ++v) {
      bool ok = true;
      for (int i : att[j])
        if (w[i] == v) {
          ok = false;
          break;
        }
      if (!ok) continue;
      w[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 1);
  // chi_k = (y_1 ... y_k)^{-1} (q-1)^{|pi|} raw[X/(q-1)].
  VElem out(k);
  QtScalar scale = (kQ - 1).pow(pi.north_steps());
  for (const auto& [e, g] : raw.terms()) {
    VElem::YExp e2 = e;
    for (int& x : e2)
      if (x-- == 0) throw std::logic_error("missing special label");
    out.add_to(e2, g.plethysm_scale(1 / (kQ - 1)).scaled(scale));
  }
  return out;
}

SymFunc chi_ops(const DyckPath& pi) {
  if (pi.start_height() != 0)
    throw std::invalid_argument("chi_ops needs a full path");
  std::string s = pi.steps();
  VElem cur = VElem::one(0);
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    cur = *it == 'E' ? dplus(cur) : dminus(cur);
  return cur.sym();
}

SymFunc chi_zero_ops(const DyckPath& pi) {
  if (pi.start_height() != 0)
    throw std::invalid_argument("chi_zero_ops needs a full path");
  std::string s = pi.steps();
  VElem cur = VElem::one(0);
  for (int p = static_cast<int>(s.size()) - 1; p >= 0; --p) {
    if (s[p] == 'N' && p > 0 && s[p - 1] == 'E') {
      cur = (dminus(dplus(cur)) - dplus(dminus(cur))).scaled(1 / (kQ - 1));
      --p;
    } else {
      cur = s[p] == 'E' ? dplus(cur) : dminus(cur);
    }
  }
  return cur.sym();
}

}  // namespace shuffle
