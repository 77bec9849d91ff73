#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shuffle/symfunc.hpp"

using namespace shuffle;

namespace {
SymFunc mono(Basis b, std::vector<int> lam, QtScalar c = QtScalar(1)) {
  return SymFunc::single(b, Partition(std::move(lam)), c);
}
const QtScalar Q = QtScalar::q();
const QtScalar T = QtScalar::t();
}  // namespace

TEST_CASE("classical expansions in the monomial basis") {
  CHECK(mono(Basis::e, {3}).to_basis(Basis::m) == mono(Basis::m, {1, 1, 1}));
  CHECK(mono(Basis::p, {3}).to_basis(Basis::m) == mono(Basis::m, {3}));
  CHECK(mono(Basis::h, {2}).to_basis(Basis::m) ==
        mono(Basis::m, {2}) + mono(Basis::m, {1, 1}));
  CHECK(mono(Basis::h, {3}).to_basis(Basis::m) ==
        mono(Basis::m, {3}) + mono(Basis::m, {2, 1}) +
            mono(Basis::m, {1, 1, 1}));
  CHECK(mono(Basis::s, {2, 1}).to_basis(Basis::m) ==
        mono(Basis::m, {2, 1}) + mono(Basis::m, {1, 1, 1}, QtScalar(2)));
  CHECK(mono(Basis::s, {2}) == mono(Basis::h, {2}));
  CHECK(mono(Basis::s, {1, 1}) == mono(Basis::e, {2}));
  // p2 = m2, p11 = m2 + 2 m11.
  CHECK(mono(Basis::p, {1, 1}).to_basis(Basis::m) ==
        mono(Basis::m, {2}) + mono(Basis::m, {1, 1}, QtScalar(2)));
}

TEST_CASE("round trips through every basis") {
  SymFunc f = mono(Basis::m, {3, 1}, Q) + mono(Basis::m, {2, 2}, 1 - T) +
              mono(Basis::m, {1, 1}, Q * T);
  for (Basis b : {Basis::e, Basis::h, Basis::p, Basis::s}) {
    SymFunc g = f.to_basis(b);
    CHECK(g.basis() == b);
    CHECK(g.to_basis(Basis::m) == f);
    CHECK(g == f);
  }
}

TEST_CASE("multiplication") {
  CHECK(mono(Basis::m, {1}) * mono(Basis::m, {1}) ==
        mono(Basis::m, {2}) + mono(Basis::m, {1, 1}, QtScalar(2)));
  // Pieri rule: h1 * s(2) = s(3) + s(2,1).
  CHECK(mono(Basis::h, {1}) * mono(Basis::s, {2}) ==
        mono(Basis::s, {3}) + mono(Basis::s, {2, 1}));
  CHECK(mono(Basis::h, {1}) * mono(Basis::s, {2, 1}) ==
        mono(Basis::s, {3, 1}) + mono(Basis::s, {2, 2}) +
            mono(Basis::s, {2, 1, 1}));
  // e-products match their known monomial expansions: e1*e1 = m2 + 2 m11.
  CHECK(mono(Basis::e, {1}) * mono(Basis::e, {1}) ==
        mono(Basis::e, {1, 1}));
}

TEST_CASE("omega") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(mono(Basis::h, {n}).omega() == mono(Basis::e, {n}));
    CHECK(mono(Basis::e, {n}).omega() == mono(Basis::h, {n}));
  }
  // omega(s_lam) = s_{lam'}.
  CHECK(mono(Basis::s, {3, 1}).omega() == mono(Basis::s, {2, 1, 1}));
  CHECK(mono(Basis::s, {2, 2}).omega() == mono(Basis::s, {2, 2}));
}

TEST_CASE("hall pairing") {
  // <p_lam, p_mu> = z_lam delta.
  CHECK(hall_pairing(mono(Basis::p, {2, 1}), mono(Basis::p, {2, 1})) ==
        QtScalar(2));
  CHECK(hall_pairing(mono(Basis::p, {3}), mono(Basis::p, {2, 1})) ==
        QtScalar(0));
  // Schur functions are orthonormal.
  for (const auto& lam : Partition::all_of_size(4))
    for (const auto& mu : Partition::all_of_size(4))
      CHECK(hall_pairing(SymFunc::single(Basis::s, lam),
                         SymFunc::single(Basis::s, mu)) ==
            QtScalar(lam == mu ? 1 : 0));
  // h and m are dual.
  for (const auto& lam : Partition::all_of_size(4))
    for (const auto& mu : Partition::all_of_size(4))
      CHECK(hall_pairing(SymFunc::single(Basis::h, lam),
                         SymFunc::single(Basis::m, mu)) ==
            QtScalar(lam == mu ? 1 : 0));
}

TEST_CASE("plethysm by a scalar multiple of X") {
  // p_n[cX] = c(q^n,t^n) p_n.
  SymFunc p3 = mono(Basis::p, {3});
  CHECK(p3.plethysm_scale(Q) == mono(Basis::p, {3}, Q.pow(3)));
  QtScalar c = 1 / (Q - 1);
  CHECK(p3.plethysm_scale(c) == mono(Basis::p, {3}, 1 / (Q.pow(3) - 1)));
  // X -> cX then X -> X/c is the identity.
  SymFunc f = mono(Basis::s, {2, 1}, Q + T);
  CHECK(f.plethysm_scale(c).plethysm_scale(Q - 1) == f);
  // [-X] on p is a sign per part, and squares to the identity.
  CHECK(f.plethysm_minus().plethysm_minus() == f);
  // h_n[-X] = (-1)^n e_n.
  CHECK(mono(Basis::h, {3}).plethysm_minus() == -mono(Basis::e, {3}));
  CHECK(mono(Basis::h, {2}).plethysm_minus() == mono(Basis::e, {2}));
}

TEST_CASE("expand_shift") {
  QtScalar c = Q - 1;
  // e_2[X + cv] = e_2 + c e_1 v + e_2[cv] v^2 with e_2[cv] = (c^2 - c(q^2,t^2))/2.
  auto sh = expand_shift(mono(Basis::e, {2}), c);
  REQUIRE(sh.size() == 3);
  CHECK(sh[0] == mono(Basis::e, {2}));
  CHECK(sh[1] == mono(Basis::e, {1}, c));
  QtScalar e2c = (c * c - c.subst_powers(2)) / 2;
  CHECK(sh[2] == SymFunc::one().scaled(e2c));
  CHECK(e2c == 1 - Q);
  // Setting v's coefficient to zero recovers f in degree 0 of v.
  auto sh0 = expand_shift(mono(Basis::s, {3, 1}, T), QtScalar(0));
  CHECK(sh0[0] == mono(Basis::s, {3, 1}, T));
  for (size_t j = 1; j < sh0.size(); ++j) CHECK(sh0[j].is_zero());
}

TEST_CASE("creation operators on 1") {
  // With F = 1 only the plethystic exponential contributes.
  CHECK(b_op(1, SymFunc::one()) == -mono(Basis::e, {1}));
  CHECK(b_op(2, SymFunc::one()) == mono(Basis::e, {2}));
  CHECK(b_op(3, SymFunc::one()) == -mono(Basis::e, {3}));
  CHECK(c_op(1, SymFunc::one()) == -mono(Basis::h, {1}));
  CHECK(c_op(2, SymFunc::one()) == mono(Basis::h, {2}, -1 / Q));
  CHECK(d1_op(SymFunc::one()) == -mono(Basis::e, {1}));
  CHECK(d1_star_op(SymFunc::one()) == mono(Basis::h, {1}));
}

TEST_CASE("creation operators raise degree by r") {
  SymFunc f = mono(Basis::s, {2}, Q) + mono(Basis::s, {1, 1}, T);
  for (int r = 1; r <= 3; ++r) {
    SymFunc bf = b_op(r, f).to_basis(Basis::m);
    SymFunc cf = c_op(r, f).to_basis(Basis::m);
    for (const auto& [lam, coeff] : bf.terms()) CHECK(lam.size() == 2 + r);
    for (const auto& [lam, coeff] : cf.terms()) CHECK(lam.size() == 2 + r);
  }
  // Taking the u^1 coefficient makes both degree-raising by one.
  CHECK(d1_op(f).max_degree() == 3);
  CHECK(d1_star_op(f).max_degree() == 3);
}

TEST_CASE("bar commutes with change of basis") {
  SymFunc f = mono(Basis::s, {2, 1}, Q / (T - 1)) + mono(Basis::s, {3}, T);
  CHECK(f.bar_coeffs().to_basis(Basis::m) == f.to_basis(Basis::m).bar_coeffs());
}

TEST_CASE("printing") {
  SymFunc f = mono(Basis::s, {2, 1}, Q + 1) + mono(Basis::s, {3});
  CHECK(f.to_string() == "s(3) + (q + 1)*s(2,1)");
  CHECK(SymFunc().to_string() == "0");
}
