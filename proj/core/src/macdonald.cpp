#include "shuffle/macdonald.hpp"

#include <mutex>
#include <stdexcept>

#include "shuffle/linalg.hpp"

namespace shuffle {

namespace {

std::mutex cache_mu;

// Reading order: the cells (part, column) of mu listed row by row from the
// shortest part upwards.
std::vector<std::pair<int, int>> reading_cells(const Partition& mu) {
  std::vector<std::pair<int, int>> cells;
  for (int i = mu.length(); i >= 1; --i)
    for (int j = 1; j <= mu.part(i); ++j) cells.emplace_back(i, j);
  return cells;
}

}  // namespace

DyckPath macdonald_path(const Partition& mu) {
  int l = mu.length();
  if (l == 0) return DyckPath();
  std::string s(mu.part(l), 'N');
  for (int i = l; i >= 2; --i) {
    for (int j = 0; j < mu.part(i); ++j) s += "EN";
    s.append(mu.part(i - 1) - mu.part(i), 'N');
  }
  s.append(mu.part(1), 'E');
  return DyckPath::from_steps(s);
}

CornerWeights macdonald_weights(const Partition& mu) {
  auto cells = reading_cells(mu);
  std::map<std::pair<int, int>, int> pos;
  for (size_t m = 0; m < cells.size(); ++m) pos[cells[m]] = static_cast<int>(m) + 1;
  CornerWeights wt;
  for (int i = 2; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.part(i); ++j) {
      int arm = mu.part(i) - j;
      int leg = 0;
      for (int ip = i + 1; ip <= mu.length(); ++ip) leg += mu.part(ip) >= j;
      wt[{pos[{i, j}], pos[{i - 1, j}]}] =
          QtScalar::q_pow(arm) * QtScalar::t_pow(-1 - leg);
    }
  return wt;
}

SymFunc macdonald_h(const Partition& mu) {
  static std::map<Partition, SymFunc> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
  }
  int m1 = mu.part(1);
  QtScalar pre = QtScalar::q_pow(-mu.conjugate().n_stat() + m1 * (m1 - 1) / 2) *
                 QtScalar::t_pow(mu.n_stat());
  SymFunc h =
      chi_weighted(macdonald_path(mu), macdonald_weights(mu)).scaled(pre);
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(mu, std::move(h)).first->second;
}

QtScalar nabla_eigenvalue(const Partition& mu) {
  QtScalar e = QtScalar::q_pow(mu.conjugate().n_stat()) *
               QtScalar::t_pow(mu.n_stat());
  return mu.size() % 2 ? -e : e;
}

std::map<Partition, QtScalar> macdonald_expand(const SymFunc& f) {
  SymFunc fm = f.to_basis(Basis::m);
  if (fm.is_zero()) return {};
  int n = fm.max_degree();
  for (const auto& [lam, c] : fm.terms())
    if (lam.size() != n)
      throw std::invalid_argument("macdonald_expand needs a homogeneous input");

  struct DegreeData {
    std::vector<Partition> mus;
    QtMatrix inverse;  // of the (m_lam coefficient of H_mu) matrix
  };
  static std::map<int, DegreeData> cache;
  static std::mutex expand_mu;
  std::unique_lock<std::mutex> lock(expand_mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    lock.unlock();  // macdonald_h has its own cache and lock
    DegreeData data;
    data.mus = Partition::all_of_size(n);
    size_t d = data.mus.size();
    QtMatrix mat(d, std::vector<QtScalar>(d, QtScalar(0)));
    for (size_t c = 0; c < d; ++c) {
      SymFunc h = macdonald_h(data.mus[c]);
      for (size_t r = 0; r < d; ++r) mat[r][c] = h.coeff(data.mus[r]);
    }
    data.inverse = invert_matrix(mat);
    lock.lock();
    it = cache.emplace(n, std::move(data)).first;
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

SymFunc nabla(const SymFunc& f) {
  SymFunc fm = f.to_basis(Basis::m);
  SymFunc out(Basis::m);
  for (int d = 0; d <= fm.max_degree(); ++d) {
    SymFunc comp = fm.homogeneous_component(d);
    if (comp.is_zero()) continue;
    for (const auto& [mu, c] : macdonald_expand(comp))
      out += macdonald_h(mu).scaled(c * nabla_eigenvalue(mu));
  }
  return out.to_basis(f.basis());
}

}  // namespace shuffle
