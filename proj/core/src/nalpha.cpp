#include "shuffle/nalpha.hpp"

#include <mutex>
#include <stdexcept>

#include "shuffle/linalg.hpp"

namespace shuffle {

namespace {

const QtScalar kQ = QtScalar::q();
const QtScalar kT = QtScalar::t();

std::mutex cache_mu;

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

VElem n_alpha_impl(const std::vector<int>& alpha) {
  static std::map<std::vector<int>, VElem> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(alpha);
    if (it != cache.end()) return it->second;
  }
  VElem result;
  if (alpha.empty()) {
    result = VElem::one(0);
  } else if (alpha.front() == 1) {
    result = dplus(n_alpha_impl({alpha.begin() + 1, alpha.end()}));
  } else {
    int a = alpha.front();
    std::vector<int> rest(alpha.begin() + 1, alpha.end());
    VElem sum(static_cast<int>(rest.size()) + 1);
    for (const auto& beta : Composition::all_of_size(a - 1)) {
      VElem v = n_alpha_impl(concat(rest, beta.parts()));
      for (int j = 0; j < beta.length() - 1; ++j) v = dminus(v);
      sum += v;
    }
    result = (dminus(dplus(sum)) - dplus(dminus(sum)))
                 .scaled(kT.pow(a - 1) / (kQ - 1));
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(alpha, std::move(result)).first->second;
}

}  // namespace

VElem n_alpha(const Composition& alpha) { return n_alpha_impl(alpha.parts()); }

VElem y_alpha(const Composition& alpha) {
  VElem::YExp e;
  for (int a : alpha.parts()) e.push_back(a - 1);
  VElem v(alpha.length());
  v.add_to(e, SymFunc::one());
  return v;
}

SymFunc dalpha_ops(const Composition& alpha) {
  VElem v = n_alpha(alpha);
  for (int i = 0; i < alpha.length(); ++i) v = dminus(v);
  return v.sym();
}

SymFunc nabla_c(const Composition& alpha) {
  SymFunc f = SymFunc::one();
  const auto& parts = alpha.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) f = c_op(*it, f);
  return nabla(f);
}

std::map<Partition, QtScalar> b_basis_expand(const SymFunc& f) {
  SymFunc fm = f.to_basis(Basis::m);
  if (fm.is_zero()) return {};
  int n = fm.max_degree();
  for (const auto& [lam, c] : fm.terms())
    if (lam.size() != n)
      throw std::invalid_argument("b_basis_expand needs a homogeneous input");

  struct DegreeData {
    std::vector<Partition> mus;
    QtMatrix inverse;
  };
  static std::map<int, DegreeData> expand_cache;
  static std::mutex expand_mu;
  std::unique_lock<std::mutex> lock(expand_mu);
  auto it = expand_cache.find(n);
  if (it == expand_cache.end()) {
    lock.unlock();
    DegreeData data;
    data.mus = Partition::all_of_size(n);
    size_t d = data.mus.size();
    QtMatrix mat(d, std::vector<QtScalar>(d, QtScalar(0)));
    for (size_t c = 0; c < d; ++c) {
      SymFunc b = SymFunc::one();
      const auto& parts = data.mus[c].parts();
      for (auto pit = parts.rbegin(); pit != parts.rend(); ++pit)
        b = b_op(*pit, b);
      b = b.to_basis(Basis::m);
      for (size_t r = 0; r < d; ++r) mat[r][c] = b.coeff(data.mus[r]);
    }
    data.inverse = invert_matrix(mat);
    lock.lock();
    it = expand_cache.emplace(n, std::move(data)).first;
  }
  const DegreeData& data = it->second;
  size_t d = data.mus.size();
  std::map<Partition, QtScalar> out;
  for (size_t r = 0; r < d; ++r) {
    QtScalar c(0);
    for (size_t k = 0; k < d; ++k)
      c = c + data.inverse[r][k] * fm.coeff(data.mus[k]);
    if (!c.is_zero()) out[data.mus[r]] = c;
  }
  return out;
}

VElem basis_element(int k, int m, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != k + m)
    throw std::invalid_argument("basis_element: exponent length != k + m");
  for (int i = k; i + 1 < k + m; ++i)
    if (a[i] < a[i + 1])
      throw std::invalid_argument("basis_element: tail not weakly decreasing");
  SymFunc g = SymFunc::one();
  for (int i = k + m - 1; i >= k; --i) g = b_op(a[i] + 1, g);
  if (m % 2) g = -g;
  VElem v(k);
  v.add_to({a.begin(), a.begin() + k}, g);
  return v;
}

std::vector<BasisTerm> decompose(const VElem& f) {
  int k = f.level();
  std::map<std::pair<int, std::vector<int>>, QtScalar> acc;
  for (const auto& [e, g] : f.terms()) {
    for (int d = 0; d <= g.max_degree(); ++d) {
      SymFunc comp = g.homogeneous_component(d);
      if (comp.is_zero()) continue;
      for (const auto& [mu, c] : b_basis_expand(comp)) {
        int m = mu.length();
        std::vector<int> a = e;
        for (int i = 1; i <= m; ++i) a.push_back(mu.part(i) - 1);
        QtScalar coeff = m % 2 ? -c : c;
        acc[{m, std::move(a)}] += coeff;
      }
    }
  }
  std::vector<BasisTerm> out;
  for (auto& [key, c] : acc)
    if (!c.is_zero()) out.push_back({key.first, key.second, c});
  return out;
}

VElem n_involution(const VElem& f) {
  int k = f.level();
  VElem out(k);
  for (const auto& [e, g] : f.terms()) {
    for (int d = 0; d <= g.max_degree(); ++d) {
      SymFunc comp = g.homogeneous_component(d);
      if (comp.is_zero()) continue;
      for (const auto& [mu, c] : b_basis_expand(comp)) {
        int m = mu.length();
        // Image of d_-^m z^a d_+^{*(k+m)} (1) with a = (e, mu - 1).
        VElem w = VElem::one(0);
        for (int j = 0; j < k + m; ++j) w = dplus_star(w);
        for (int i = 1; i <= k; ++i)
          for (int rep = 0; rep < e[i - 1]; ++rep) w = z_op(i, w);
        for (int i = 1; i <= m; ++i)
          for (int rep = 0; rep < mu.part(i) - 1; ++rep) w = z_op(k + i, w);
        for (int j = 0; j < m; ++j) w = dminus(w);
        QtScalar coeff = c.bar();
        if (m % 2) coeff = -coeff;
        out += w.scaled(coeff);
      }
    }
  }
  return out;
}

}  // namespace shuffle
