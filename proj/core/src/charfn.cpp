#include "shuffle/charfn.hpp"

#include <algorithm>
#include <vector>

namespace shuffle {

namespace {

// All distinct words with lam_i copies of the value i+1.
std::vector<int> content_word(const Partition& lam) {
  std::vector<int> w;
  for (int i = 0; i < lam.length(); ++i)
    w.insert(w.end(), lam.part(i + 1), i + 1);
  return w;
}

}  // namespace

SymFunc chi(const DyckPath& pi) {
  int n = pi.rows();
  auto cells = pi.area_cells();
  SymFunc f(Basis::m);
  for (const auto& lam : Partition::all_of_size(n)) {
    // Coefficient of m_lam: tally inv over words of content lam.
    std::map<int, long> counts;
    std::vector<int> w = content_word(lam);
    do {
      int inv = 0;
      for (auto [i, j] : cells) inv += w[i - 1] > w[j - 1];
      ++counts[inv];
    } while (std::next_permutation(w.begin(), w.end()));
    QtPoly coeff;
    for (auto [e, c] : counts) coeff.add_to(QtMono{e, 0}, c);
    if (!coeff.is_zero()) f.add_to(lam, QtScalar(coeff));
  }
  return f;
}

SymFunc chi_weighted(const DyckPath& pi, const CornerWeights& wt) {
  int n = pi.rows();
  auto cells = pi.area_cells();
  auto cs = pi.corners();
  std::vector<QtScalar> cwt;
  for (auto c : cs) {
    auto it = wt.find(c);
    cwt.push_back(it == wt.end() ? QtScalar(0) : it->second);
  }
  const QtScalar q = QtScalar::q();
  SymFunc f(Basis::m);
  for (const auto& lam : Partition::all_of_size(n)) {
    QtScalar coeff(0);
    std::vector<int> w = content_word(lam);
    do {
      int inv = 0;
      for (auto [i, j] : cells) inv += w[i - 1] > w[j - 1];
      QtScalar term = q.pow(inv);
      for (size_t m = 0; m < cs.size(); ++m)
        if (w[cs[m].first - 1] <= w[cs[m].second - 1]) term = term * cwt[m];
      if (!term.is_zero()) coeff = coeff + term;
    } while (std::next_permutation(w.begin(), w.end()));
    if (!coeff.is_zero()) f.add_to(lam, coeff);
  }
  return f;
}

SymFunc chi_zero(const DyckPath& pi) {
  auto cs = pi.corners();
  size_t m = cs.size();
  SymFunc total(Basis::m);
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    std::vector<std::pair<int, int>> subset;
    for (size_t i = 0; i < m; ++i)
      if (mask >> i & 1) subset.push_back(cs[i]);
    SymFunc term = chi(pi.flip_corners(subset));
    total += subset.size() % 2 ? -term : term;
  }
  return total.scaled((1 - QtScalar::q()).pow(-static_cast<long>(m)));
}

SymFunc dalpha(const Composition& alpha) {
  int n = 0;
  for (int a : alpha.parts()) n += a;
  SymFunc total(Basis::m);
  for (const auto& pi : DyckPath::all_full(n))
    if (pi.touch_prime() == alpha.parts())
      total += chi_zero(pi).scaled(QtScalar::t_pow(pi.bounce()));
  return total;
}

int inv_stat(const DyckPath& pi, const std::vector<int>& w) {
  int inv = 0;
  for (auto [i, j] : pi.area_cells()) inv += w[i - 1] > w[j - 1];
  return inv;
}

bool is_parking_word(const DyckPath& pi, const std::vector<int>& w) {
  for (auto [i, j] : pi.corners())
    if (w[i - 1] <= w[j - 1]) return false;
  return true;
}

std::vector<std::pair<std::vector<int>, int>> parking_words(
    const DyckPath& pi, int max_label) {
  int n = pi.rows();
  std::vector<std::pair<std::vector<int>, int>> out;
  std::vector<int> w(n, 1);
  while (true) {
    if (is_parking_word(pi, w)) out.emplace_back(w, inv_stat(pi, w));
    int p = n - 1;
    while (p >= 0 && w[p] == max_label) w[p--] = 1;
    if (p < 0) break;
    ++w[p];
  }
  return out;
}

}  // namespace shuffle
