#pragma once

// Integer partitions and compositions, with the combinatorial statistics
// needed elsewhere: conjugation, arm/leg of a cell, n(lambda), z(lambda),
// and enumeration by size.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace shuffle {

// Weakly decreasing positive parts.  The empty partition is {}.
class Partition {
 public:
  Partition() = default;
  // Sorts descending and drops zeros; throws on negative parts.
  explicit Partition(std::vector<int> parts);

  int size() const;                       // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {                 // 1-based, 0 beyond the end
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  // n(lambda) = sum_i (i-1) * lambda_i.
  int n_stat() const;
  // Number of cells (i,j), 1-based column i and row j, in row j: columns
  // 1..lambda_j.  arm = cells strictly right in the same row, leg = cells
  // strictly above in the same column.
  bool contains_cell(int col, int row) const;
  int arm(int col, int row) const;
  int leg(int col, int row) const;

  // z(lambda) = prod m_i! * i^{m_i} where m_i = multiplicity of i.
  mpz_class z_stat() const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const;  // by size, then reverse lex

  std::string to_string() const;  // e.g. "(3,1,1)" or "()"

  static std::vector<Partition> all_of_size(int n);

 private:
  std::vector<int> parts_;
};

// Ordered positive parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  Partition sorted() const { return Partition(parts_); }

  bool operator==(const Composition&) const = default;

  std::string to_string() const;

  static std::vector<Composition> all_of_size(int n);

 private:
  std::vector<int> parts_;
};

}  // namespace shuffle
