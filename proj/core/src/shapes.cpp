#include "shuffle/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shuffle {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("Partition: negative part");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  c.resize(parts_[0], 0);
  for (int p : parts_)
    for (int i = 0; i < p; ++i) ++c[i];
  return Partition(std::move(c));
}

int Partition::n_stat() const {
  int s = 0;
  for (int i = 0; i < length(); ++i) s += i * parts_[i];
  return s;
}

bool Partition::contains_cell(int col, int row) const {
  return row >= 1 && row <= length() && col >= 1 && col <= parts_[row - 1];
}

int Partition::arm(int col, int row) const {
  if (!contains_cell(col, row)) throw std::out_of_range("arm: cell not in shape");
  return parts_[row - 1] - col;
}

int Partition::leg(int col, int row) const {
  if (!contains_cell(col, row)) throw std::out_of_range("leg: cell not in shape");
  int l = 0;
  for (int r = row + 1; r <= length(); ++r)
    if (parts_[r - 1] >= col) ++l;
  return l;
}

mpz_class Partition::z_stat() const {
  std::map<int, int> mult;
  for (int p : parts_) ++mult[p];
  mpz_class z = 1;
  for (auto [v, m] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), v, m);
    z *= f * pw;
  }
  return z;
}

bool Partition::operator<(const Partition& o) const {
  int a = size(), b = o.size();
  if (a != b) return a < b;
  return parts_ > o.parts_;  // dominance-friendly: (n) first, (1^n) last
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < length(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

std::vector<Partition> Partition::all_of_size(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("Composition: nonpositive part");
}

int Composition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < length(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

std::vector<Composition> Composition::all_of_size(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace shuffle
