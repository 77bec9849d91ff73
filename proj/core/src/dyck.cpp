#include "shuffle/dyck.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shuffle {

DyckPath::DyckPath(int k, std::vector<int> x) : k_(k), x_(std::move(x)) {
  if (k_ < 0 || static_cast<int>(x_.size()) < k_)
    throw std::invalid_argument("bad start height");
  int prev = 1;
  for (int j = 1; j <= rows(); ++j) {
    int xj = x_[j - 1];
    if (xj < prev || xj > j || (j <= k_ && xj != 1))
      throw std::invalid_argument("bad column sequence");
    prev = xj;
  }
}

DyckPath DyckPath::from_steps(int k, const std::string& steps) {
  std::vector<int> x(k, 1);
  int col = 0, row = k;
  for (char c : steps) {
    if (c == 'N' || c == 'n' || c == '-') {
      ++row;
      x.push_back(col + 1);
    } else if (c == 'E' || c == 'e' || c == '+') {
      if (++col > row) throw std::invalid_argument("path dips below diagonal");
    } else if (c != ' ') {
      throw std::invalid_argument(std::string("bad step character: ") + c);
    }
  }
  if (col != row) throw std::invalid_argument("path does not end on diagonal");
  return DyckPath(k, std::move(x));
}

std::vector<int> DyckPath::area_sequence() const {
  std::vector<int> a(rows());
  for (int j = 1; j <= rows(); ++j) a[j - 1] = j - x_[j - 1];
  return a;
}

std::string DyckPath::steps() const {
  std::string s;
  int col = 0;
  for (int j = k_ + 1; j <= rows(); ++j) {
    while (col < x_[j - 1] - 1) {
      s += 'E';
      ++col;
    }
    s += 'N';
  }
  while (col < rows()) {
    s += 'E';
    ++col;
  }
  return s;
}

std::vector<std::pair<int, int>> DyckPath::area_cells() const {
  std::vector<std::pair<int, int>> cells;
  for (int j = 1; j <= rows(); ++j)
    for (int i = x_[j - 1]; i < j; ++i) cells.emplace_back(i, j);
  return cells;
}

int DyckPath::area() const {
  int a = 0;
  for (int j = 1; j <= rows(); ++j) a += j - x_[j - 1];
  return a;
}

std::vector<std::pair<int, int>> DyckPath::dinv_pairs() const {
  auto a = area_sequence();
  int n = rows();
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= n; ++j)
    for (int jp = j + 1; jp <= n; ++jp) {
      if (a[j - 1] == a[jp - 1]) pairs.emplace_back(j, jp);
      if (a[j - 1] == a[jp - 1] + 1) pairs.emplace_back(jp, j);
    }
  return pairs;
}

int DyckPath::dinv() const {
  return static_cast<int>(dinv_pairs().size());
}

std::vector<int> DyckPath::touch() const {
  std::vector<int> gaps, pts;
  auto a = area_sequence();
  for (int j = 1; j <= rows(); ++j)
    if (a[j - 1] == 0) pts.push_back(j);
  pts.push_back(rows() + 1);
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    gaps.push_back(pts[i + 1] - pts[i]);
  return gaps;
}

int DyckPath::bounce() const {
  int n = rows();
  // norths_before[c] = number of North steps preceding the (c+1)-th East.
  std::vector<int> norths_before;
  int norths = 0;
  for (char c : steps())
    c == 'N' ? ++norths : (norths_before.push_back(norths), 0);
  int total = 0, p = 0, block = 0;
  while (p < n) {
    int next = norths_before[p];
    total += block * (next - p);
    p = next;
    ++block;
  }
  return total;
}

std::vector<int> DyckPath::touch_prime() const {
  std::string s = steps();
  if (s.empty()) return {};
  int l = 0;
  while (l < static_cast<int>(s.size()) && s[l] == 'N') ++l;
  // s = N^l E tail; splice N^{i+1} E N^{l-i} E in front of the tail.
  std::string tail = s.substr(l + 1);
  std::vector<int> t(l + 1);
  for (int i = 0; i <= l; ++i) {
    std::string w = std::string(i + 1, 'N') + 'E' + std::string(l - i, 'N') +
                    'E' + tail;
    t[i] = from_steps(w).bounce();
  }
  std::vector<int> comp(l);
  for (int i = 0; i < l; ++i) comp[i] = t[i] - t[i + 1];
  return comp;
}

std::vector<std::pair<int, int>> DyckPath::corners() const {
  std::vector<std::pair<int, int>> cs;
  for (int j = 2; j <= rows(); ++j) {
    int xj = x_[j - 1];
    if (xj >= 2 && xj - 1 >= x_[j - 2]) cs.emplace_back(xj - 1, j);
  }
  return cs;
}

DyckPath DyckPath::flip_corners(
    const std::vector<std::pair<int, int>>& cs) const {
  std::vector<int> x = x_;
  for (auto [i, j] : cs) {
    if (j < 1 || j > rows() || x_[j - 1] - 1 != i)
      throw std::invalid_argument("not a cell adjacent to the path");
    x[j - 1] -= 1;
  }
  return DyckPath(k_, std::move(x));
}

DyckPath DyckPath::reversed() const {
  if (k_ != 0) throw std::logic_error("reversal needs a full path");
  std::string s = steps();
  std::reverse(s.begin(), s.end());
  for (char& c : s) c = c == 'N' ? 'E' : 'N';
  return from_steps(s);
}

std::vector<int> DyckPath::zeta_permutation() const {
  int n = rows();
  auto a = area_sequence();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a[i - 1] < a[j - 1]; });
  std::vector<int> sigma(n);
  for (int pos = 1; pos <= n; ++pos) sigma[order[pos - 1] - 1] = pos;
  return sigma;
}

DyckPath DyckPath::zeta() const {
  if (k_ != 0) throw std::logic_error("the sweep map needs a full path");
  int n = rows();
  auto sigma = zeta_permutation();
  std::vector<int> row_area(n, 0);
  for (auto [i, j] : dinv_pairs()) row_area[std::max(sigma[i - 1], sigma[j - 1]) - 1]++;
  std::vector<int> x(n);
  for (int j = 1; j <= n; ++j) x[j - 1] = j - row_area[j - 1];
  return DyckPath(0, std::move(x));
}

std::string DyckPath::to_string() const {
  std::string s = steps();
  if (k_ != 0) s = "[" + std::to_string(k_) + "]" + s;
  return s;
}

std::vector<DyckPath> DyckPath::all_partial(int k, int n) {
  std::vector<DyckPath> out;
  std::vector<int> x(k, 1);
  auto rec = [&](auto&& self, int j, int prev) -> void {
    if (j > n) {
      out.emplace_back(k, x);
      return;
    }
    for (int v = prev; v <= j; ++v) {
      x.push_back(v);
      self(self, j + 1, v);
      x.pop_back();
    }
  };
  rec(rec, k + 1, 1);
  return out;
}

std::vector<DyckPath> DyckPath::all_full(int n) { return all_partial(0, n); }

}  // namespace shuffle
