#include "shuffle/relations.hpp"

#include <functional>
#include <random>

namespace shuffle {

namespace {

const QtScalar kQ = QtScalar::q();
const QtScalar kT = QtScalar::t();

// d_- d_+ - d_+ d_-.
VElem comm(const VElem& f) { return dminus(dplus(f)) - dplus(dminus(f)); }
// d_+^* d_- - d_- d_+^*.
VElem comm_star(const VElem& f) {
  return dplus_star(dminus(f)) - dminus(dplus_star(f));
}

struct Relation {
  std::string name;
  // Returns true when the identity holds on f at level k; relations that do
  // not apply at a level return true vacuously.
  std::function<bool(int, const VElem&)> check;
};

const std::vector<Relation>& relation_table() {
  static const std::vector<Relation> table = {
      {"(T_i - 1)(T_i + q) = 0",
       [](int k, const VElem& f) {
         for (int i = 1; i < k; ++i) {
           VElem tf = t_op(i, f);
           if (t_op(i, tf) + tf.scaled(kQ - 1) - f.scaled(kQ) != VElem(k))
             return false;
         }
         return true;
       }},
      {"T_i T_i^{-1} = 1",
       [](int k, const VElem& f) {
         for (int i = 1; i < k; ++i)
           if (t_inv_op(i, t_op(i, f)) != f) return false;
         return true;
       }},
      {"T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}",
       [](int k, const VElem& f) {
         for (int i = 1; i + 1 < k; ++i)
           if (t_op(i, t_op(i + 1, t_op(i, f))) !=
               t_op(i + 1, t_op(i, t_op(i + 1, f))))
             return false;
         return true;
       }},
      {"T_i T_j = T_j T_i, |i-j| > 1",
       [](int k, const VElem& f) {
         for (int i = 1; i < k; ++i)
           for (int j = i + 2; j < k; ++j)
             if (t_op(i, t_op(j, f)) != t_op(j, t_op(i, f))) return false;
         return true;
       }},
      {"d_+ T_i = T_{i+1} d_+",
       [](int k, const VElem& f) {
         for (int i = 1; i < k; ++i)
           if (dplus(t_op(i, f)) != t_op(i + 1, dplus(f))) return false;
         return true;
       }},
      {"T_i d_- = d_- T_i, i <= k-2",
       [](int k, const VElem& f) {
         for (int i = 1; i <= k - 2; ++i)
           if (t_op(i, dminus(f)) != dminus(t_op(i, f))) return false;
         return true;
       }},
      {"T_1 d_+^2 = d_+^2",
       [](int, const VElem& f) {
         VElem g = dplus(dplus(f));
         return t_op(1, g) == g;
       }},
      {"d_-^2 T_{k-1} = d_-^2",
       [](int k, const VElem& f) {
         if (k < 2) return true;
         return dminus(dminus(t_op(k - 1, f))) == dminus(dminus(f));
       }},
      {"d_- [d_+, d_-] T_{k-1} = q [d_+, d_-] d_-",
       [](int k, const VElem& f) {
         if (k < 2) return true;
         return dminus(-comm(t_op(k - 1, f))) == (-comm(dminus(f))).scaled(kQ);
       }},
      {"T_1 [d_+, d_-] d_+ = q d_+ [d_+, d_-]",
       [](int, const VElem& f) {
         return t_op(1, -comm(dplus(f))) == dplus(-comm(f)).scaled(kQ);
       }},
      {"[d_-, d_+] = (q-1) T_1...T_{k-1} (-y_k)",
       [](int k, const VElem& f) {
         VElem rhs = y_mul(k, f).scaled(1 - kQ);
         for (int i = k - 1; i >= 1; --i) rhs = t_op(i, rhs);
         return comm(f) == rhs;
       }},
      {"y_1 = q^{1-k}/(q-1) [d_+, d_-] T_{k-1}...T_1",
       [](int k, const VElem& f) {
         VElem g = f;
         for (int i = 1; i <= k - 1; ++i) g = t_op(i, g);
         return y_mul(1, f) == (-comm(g)).scaled(kQ.pow(1 - k) / (kQ - 1));
       }},
      {"y_i = q^{-1} T_i y_{i+1} T_i",
       [](int k, const VElem& f) {
         for (int i = 1; i < k; ++i)
           if (y_mul(i, f) !=
               t_op(i, y_mul(i + 1, t_op(i, f))).scaled(1 / kQ))
             return false;
         return true;
       }},
      {"y_i T_j = T_j y_i, i not in {j, j+1}",
       [](int k, const VElem& f) {
         for (int j = 1; j < k; ++j)
           for (int i = 1; i <= k; ++i) {
             if (i == j || i == j + 1) continue;
             if (y_mul(i, t_op(j, f)) != t_op(j, y_mul(i, f))) return false;
           }
         return true;
       }},
      {"y_i d_- = d_- y_i, i <= k-1",
       [](int k, const VElem& f) {
         for (int i = 1; i <= k - 1; ++i)
           if (dminus(y_mul(i, f)) != y_mul(i, dminus(f))) return false;
         return true;
       }},
      {"d_+ y_i = T_1...T_i y_i (T_1...T_i)^{-1} d_+",
       [](int k, const VElem& f) {
         for (int i = 1; i <= k; ++i) {
           VElem w = dplus(f);
           for (int j = 1; j <= i; ++j) w = t_inv_op(j, w);
           w = y_mul(i, w);
           for (int j = i; j >= 1; --j) w = t_op(j, w);
           if (dplus(y_mul(i, f)) != w) return false;
         }
         return true;
       }},
      {"d_+^* T_i^{-1} = T_{i+1}^{-1} d_+^*",
       [](int k, const VElem& f) {
         for (int i = 1; i < k; ++i)
           if (dplus_star(t_inv_op(i, f)) != t_inv_op(i + 1, dplus_star(f)))
             return false;
         return true;
       }},
      {"T_1^{-1} d_+^{*2} = d_+^{*2}",
       [](int, const VElem& f) {
         VElem g = dplus_star(dplus_star(f));
         return t_inv_op(1, g) == g;
       }},
      {"d_+^* y_i = y_{i+1} d_+^*",
       [](int k, const VElem& f) {
         for (int i = 1; i <= k; ++i)
           if (dplus_star(y_mul(i, f)) != y_mul(i + 1, dplus_star(f)))
             return false;
         return true;
       }},
      {"d_- [d_+^*, d_-] T_{k-1}^{-1} = q^{-1} [d_+^*, d_-] d_-",
       [](int k, const VElem& f) {
         if (k < 2) return true;
         return dminus(comm_star(t_inv_op(k - 1, f))) ==
                comm_star(dminus(f)).scaled(1 / kQ);
       }},
      {"T_1^{-1} [d_+^*, d_-] d_+^* = q^{-1} d_+^* [d_+^*, d_-]",
       [](int, const VElem& f) {
         return t_inv_op(1, comm_star(dplus_star(f))) ==
                dplus_star(comm_star(f)).scaled(1 / kQ);
       }},
      {"z_{i+1} d_+ = d_+ z_i",
       [](int k, const VElem& f) {
         for (int i = 1; i <= k; ++i)
           if (z_op(i + 1, dplus(f)) != dplus(z_op(i, f))) return false;
         return true;
       }},
      {"z_1 d_+ = -t q^{k+1} y_1 d_+^*",
       [](int k, const VElem& f) {
         return z_op(1, dplus(f)) ==
                y_mul(1, dplus_star(f)).scaled(-kT * kQ.pow(k + 1));
       }},
  };
  return table;
}

int total_degree(const VElem& f) {
  int d = 0;
  for (const auto& [e, g] : f.terms()) {
    int y = 0;
    for (int v : e) y += v;
    if (y + g.max_degree() > d) d = y + g.max_degree();
  }
  return d;
}

}  // namespace

bool RelationReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::vector<VElem> velem_monomial_basis(int k, int degree) {
  std::vector<VElem> out;
  std::vector<VElem::YExp> exps;
  std::function<void(VElem::YExp&, int, int)> gen = [&](VElem::YExp& e, int i,
                                                        int rem) {
    if (i == k) {
      exps.push_back(e);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      e[i] = v;
      gen(e, i + 1, rem - v);
    }
  };
  VElem::YExp e(k, 0);
  gen(e, 0, degree);
  for (const auto& ex : exps) {
    int y = 0;
    for (int v : ex) y += v;
    for (int d = 0; d + y <= degree; ++d)
      for (const auto& lam : Partition::all_of_size(d)) {
        VElem v(k);
        v.add_to(ex, SymFunc::single(Basis::m, lam));
        out.push_back(v);
      }
  }
  return out;
}

VElem random_velem(int k, int degree, unsigned long seed) {
  std::mt19937_64 rng(seed);
  auto rint = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  VElem v(k);
  int nterms = rint(1, 3);
  for (int t = 0; t < nterms; ++t) {
    int rem = degree;
    VElem::YExp e(k, 0);
    for (int i = 0; i < k; ++i) {
      e[i] = rint(0, rem);
      rem -= e[i];
    }
    auto lams = Partition::all_of_size(rint(0, rem));
    const Partition& lam = lams[rint(0, static_cast<int>(lams.size()) - 1)];
    QtScalar c = QtScalar(rint(-2, 2)) + kQ.pow(rint(0, 2)) * rint(-2, 2) +
                 kT.pow(rint(0, 2)) * rint(-2, 2);
    if (c.is_zero()) c = QtScalar(1);
    VElem term(k);
    term.add_to(e, SymFunc::single(Basis::m, lam, c));
    v += term;
  }
  if (v.is_zero()) return VElem::one(k);
  return v;
}

RelationReport check_relations(int k_max, int degree, int trials,
                               unsigned long seed) {
  RelationReport report;
  for (int k = 1; k <= k_max; ++k) {
    std::vector<VElem> samples = velem_monomial_basis(k, std::min(degree, 3));
    for (int t = 0; t < trials; ++t)
      samples.push_back(
          random_velem(k, degree, seed * 1000003ul + k * 1009ul + t));
    for (const auto& rel : relation_table()) {
      bool ok = true;
      int dmax = 0;
      for (const auto& f : samples) {
        if (total_degree(f) > dmax) dmax = total_degree(f);
        if (!rel.check(k, f)) {
          ok = false;
          break;
        }
      }
      report.results.push_back({rel.name, k, dmax, ok});
    }
  }
  return report;
}

}  // namespace shuffle
