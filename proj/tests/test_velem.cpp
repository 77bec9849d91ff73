#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shuffle/charfn.hpp"
#include "shuffle/velem.hpp"

using namespace shuffle;

namespace {
const QtScalar Q = QtScalar::q();
const QtScalar T = QtScalar::t();

VElem ymono(int level, std::vector<int> e, SymFunc f = SymFunc::one()) {
  VElem v(level);
  v.add_to(e, f);
  return v;
}

SymFunc mono(Basis b, std::vector<int> lam, QtScalar c = QtScalar(1)) {
  return SymFunc::single(b, Partition(std::move(lam)), c);
}

// A spread of elements of V_k to test operator identities on.
std::vector<VElem> samples(int k) {
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
  gen(e, 0, 2);
  std::vector<SymFunc> syms = {SymFunc::one(), mono(Basis::m, {1}),
                               mono(Basis::m, {2}, Q),
                               mono(Basis::m, {1, 1}, Q / (T - 1))};
  for (const auto& ex : exps)
    for (const auto& f : syms) out.push_back(ymono(k, ex, f));
  return out;
}
}  // namespace

TEST_CASE("Demazure-Lusztig action on linear monomials") {
  VElem one2 = VElem::one(2);
  CHECK(t_op(1, one2) == one2);  // symmetric input is fixed
  CHECK(t_op(1, y_mul(1, one2)) ==
        ymono(2, {0, 1}) + ymono(2, {1, 0}).scaled(1 - Q));
  CHECK(t_op(1, y_mul(2, one2)) == ymono(2, {1, 0}).scaled(Q));
  // T_k y_k^i = y_{k+1}^i + (1-q) sum_j y_k^j y_{k+1}^{i-j}.
  for (int i = 1; i <= 3; ++i) {
    VElem lhs = t_op(1, ymono(2, {i, 0}));
    VElem rhs = ymono(2, {0, i});
    for (int j = 1; j <= i; ++j)
      rhs += ymono(2, {j, i - j}).scaled(1 - Q);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("quadratic and braid relations") {
  for (const auto& f : samples(2)) {
    // (T - 1)(T + q) = 0.
    VElem tf = t_op(1, f);
    CHECK(t_op(1, tf) + tf.scaled(Q - 1) - f.scaled(Q) == VElem(2));
    // T^{-1} really inverts.
    CHECK(t_inv_op(1, tf) == f);
  }
  for (const auto& f : samples(3)) {
    VElem lhs = t_op(1, t_op(2, t_op(1, f)));
    VElem rhs = t_op(2, t_op(1, t_op(2, f)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("the worked three-row operator chain") {
  VElem v = dplus(VElem::one(0));
  CHECK(v == VElem::one(1));
  SymFunc s1 = mono(Basis::s, {1});
  VElem w = dminus(v);
  CHECK(w.sym() == s1);
  VElem a = dplus(VElem::from_sym(s1, 0));
  CHECK(a == VElem::from_sym(s1, 1) + ymono(1, {1}).scaled(Q - 1));
  VElem b = dplus(a);
  CHECK(b == VElem::from_sym(s1, 2) +
                 (ymono(2, {1, 0}) + ymono(2, {0, 1})).scaled(Q - 1));
  VElem c = dminus(b);
  CHECK(c == VElem::from_sym(mono(Basis::s, {2}) + mono(Basis::s, {1, 1}), 1) +
                 ymono(1, {1}, s1).scaled(Q - 1));
  CHECK(dminus(c).sym() == mono(Basis::s, {3}) +
                               mono(Basis::s, {2, 1}, 1 + Q) +
                               mono(Basis::s, {1, 1, 1}, Q));
}

TEST_CASE("operator words recover characteristic functions") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& pi : DyckPath::all_full(n)) {
      CHECK(chi_ops(pi) == chi(pi));
      CHECK(chi_zero_ops(pi) == chi_zero(pi));
    }
}

TEST_CASE("partial characteristic functions and step recursion") {
  // chi_0 agrees with chi on full paths.
  for (const auto& pi : DyckPath::all_full(3)) {
    VElem v = chi_k(pi);
    CHECK(v.level() == 0);
    CHECK(v.sym() == chi(pi));
  }
  // Prepending an East step is d_+, a North step is d_-.
  for (int k = 0; k <= 2; ++k)
    for (int n = k; n <= k + 2; ++n)
      for (const auto& pi : DyckPath::all_partial(k, n)) {
        std::string s = pi.steps();
        CHECK(chi_k(DyckPath::from_steps(k + 1, "E" + s)) == dplus(chi_k(pi)));
        if (k >= 1)
          CHECK(chi_k(DyckPath::from_steps(k - 1, "N" + s)) ==
                dminus(chi_k(pi)));
      }
}

TEST_CASE("relations between the raising and lowering operators") {
  auto comm = [](const VElem& f) {  // (d_+ d_- - d_- d_+) with d_+ first? no:
    // [d_-, d_+] building block: d_- d_+ - d_+ d_-.
    return dminus(dplus(f)) - dplus(dminus(f));
  };
  for (int k = 1; k <= 2; ++k)
    for (const auto& f : samples(k)) {
      // d_+ T_i = T_{i+1} d_+.
      for (int i = 1; i < k; ++i)
        CHECK(dplus(t_op(i, f)) == t_op(i + 1, dplus(f)));
      // T_1 d_+^2 = d_+^2.
      CHECK(t_op(1, dplus(dplus(f))) == dplus(dplus(f)));
      // d_-^2 T_{k-1} = d_-^2.
      if (k >= 2) CHECK(dminus(dminus(t_op(k - 1, f))) == dminus(dminus(f)));
      // T_i d_- = d_- T_i for i <= k-2.
      for (int i = 1; i <= k - 2; ++i)
        CHECK(t_op(i, dminus(f)) == dminus(t_op(i, f)));
      // d_- (d_+ d_- - d_- d_+) T_{k-1} = q (d_+ d_- - d_- d_+) d_-.
      if (k >= 2)
        CHECK(dminus(-comm(t_op(k - 1, f))) == (-comm(dminus(f))).scaled(Q));
      // T_1 (d_+ d_- - d_- d_+) d_+ = q d_+ (d_+ d_- - d_- d_+).
      CHECK(t_op(1, -comm(dplus(f))) == dplus(-comm(f)).scaled(Q));
      // (d_- d_+ - d_+ d_-) F = (q-1) T_1 ... T_{k-1} (-y_k F).
      VElem rhs = y_mul(k, f).scaled(1 - Q);
      for (int i = k - 1; i >= 1; --i) rhs = t_op(i, rhs);
      CHECK(comm(f) == rhs);
      // y_1 = q^{1-k}/(q-1) (d_+ d_- - d_- d_+) T_{k-1} ... T_1.
      VElem g = f;
      for (int i = 1; i <= k - 1; ++i) g = t_op(i, g);
      CHECK(y_mul(1, f) ==
            (-comm(g)).scaled(Q.pow(1 - k) / (Q - 1)));
      // y_i d_- = d_- y_i for i <= k-1.
      for (int i = 1; i <= k - 1; ++i)
        CHECK(dminus(y_mul(i, f)) == y_mul(i, dminus(f)));
    }
}

TEST_CASE("relations for the twisted raising operator") {
  auto comm_star = [](const VElem& f) {  // d_+^* d_- - d_- d_+^*
    return dplus_star(dminus(f)) - dminus(dplus_star(f));
  };
  CHECK(z_op(1, VElem::one(1)) == ymono(1, {1}).scaled(-Q * T));
  for (int k = 1; k <= 2; ++k)
    for (const auto& f : samples(k)) {
      for (int i = 1; i < k; ++i)
        CHECK(dplus_star(t_inv_op(i, f)) == t_inv_op(i + 1, dplus_star(f)));
      CHECK(t_inv_op(1, dplus_star(dplus_star(f))) == dplus_star(dplus_star(f)));
      for (int i = 1; i <= k; ++i)
        CHECK(dplus_star(y_mul(i, f)) == y_mul(i + 1, dplus_star(f)));
      if (k >= 2)
        CHECK(dminus(comm_star(t_inv_op(k - 1, f))) ==
              comm_star(dminus(f)).scaled(1 / Q));
      CHECK(t_inv_op(1, comm_star(dplus_star(f))) ==
            dplus_star(comm_star(f)).scaled(1 / Q));
      // z_{i+1} d_+ = d_+ z_i and z_1 d_+ = -t q^{k+1} y_1 d_+^*.
      for (int i = 1; i <= k; ++i)
        CHECK(z_op(i + 1, dplus(f)) == dplus(z_op(i, f)));
      CHECK(z_op(1, dplus(f)) ==
            y_mul(1, dplus_star(f)).scaled(-T * Q.pow(k + 1)));
    }
  // d_+^* d_+^m (1) = d_+^{m+1} (1).
  VElem cur = VElem::one(0);
  for (int m = 0; m <= 3; ++m) {
    CHECK(dplus_star(cur) == dplus(cur));
    cur = dplus(cur);
  }
}
