#pragma once

// Lattice paths from (0,k) to (n,n) staying weakly above the diagonal
// (k = 0 gives ordinary Dyck paths), their statistics (area, dinv, bounce,
// touch), corners, and the sweep bijection relating (area,dinv) to
// (bounce,area).

#include <string>
#include <utility>
#include <vector>

namespace shuffle {

class DyckPath {
 public:
  // A path is determined by its start height k and the column sequence
  // x_1 <= x_2 <= ... <= x_n (x_j is the column of the cell just right of
  // the North step in row j; rows 1..k lie below the start and have x = 1).
  DyckPath() = default;
  DyckPath(int k, std::vector<int> x);
  // Step strings use 'N'/'E' or the aliases '-' (North) and '+' (East),
  // read from bottom left to top right.
  static DyckPath from_steps(int k, const std::string& steps);
  static DyckPath from_steps(const std::string& steps) {
    return from_steps(0, steps);
  }

  int start_height() const { return k_; }
  int rows() const { return static_cast<int>(x_.size()); }   // n
  int north_steps() const { return rows() - k_; }             // |pi|
  const std::vector<int>& x() const { return x_; }
  std::vector<int> area_sequence() const;                     // a_j = j - x_j
  std::string steps() const;                                  // 'N'/'E' string

  bool operator==(const DyckPath&) const = default;
  bool operator<(const DyckPath& o) const {
    return k_ != o.k_ ? k_ < o.k_ : x_ < o.x_;
  }

  // Positions i < j attack each other when the cell (i,j) lies under the
  // path, i.e. x_j <= i.
  bool attacks(int i, int j) const { return i < j && i >= x_[j - 1]; }
  std::vector<std::pair<int, int>> area_cells() const;
  int area() const;

  // Full-path statistics (start height 0).
  int dinv() const;
  std::vector<std::pair<int, int>> dinv_pairs() const;  // attacker first
  std::vector<int> touch() const;       // gaps between diagonal touch points
  int bounce() const;
  std::vector<int> touch_prime() const;  // touch of the sweep preimage

  // Corners: cells (x_j - 1, j) above the path whose south and east
  // neighbours are below it.  Flipping a corner moves the path up across
  // that cell (x_j decreases by 1).
  std::vector<std::pair<int, int>> corners() const;
  DyckPath flip_corners(const std::vector<std::pair<int, int>>& cs) const;

  // North/East-reversal (transpose), a full-path involution fixing chi.
  DyckPath reversed() const;

  // The sweep bijection: sorts cells (x_j, j) by (a_j, j) and rebuilds the
  // path whose area set is the image of the dinv set.  Sends (area,dinv) to
  // (bounce,area) and touch to touch_prime.
  DyckPath zeta() const;
  std::vector<int> zeta_permutation() const;  // sigma, 1-based

  std::string to_string() const;  // steps plus start height when nonzero

  static std::vector<DyckPath> all_full(int n);           // start height 0
  static std::vector<DyckPath> all_partial(int k, int n);  // (0,k) to (n,n)

 private:
  int k_ = 0;
  std::vector<int> x_;
};

}  // namespace shuffle
