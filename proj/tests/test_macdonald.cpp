#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shuffle/macdonald.hpp"

using namespace shuffle;

namespace {
SymFunc mono(Basis b, std::vector<int> lam, QtScalar c = QtScalar(1)) {
  return SymFunc::single(b, Partition(std::move(lam)), c);
}
const QtScalar Q = QtScalar::q();
const QtScalar T = QtScalar::t();
}  // namespace

TEST_CASE("paths attached to partitions") {
  CHECK(macdonald_path(Partition({2})).steps() == "NNEE");
  CHECK(macdonald_path(Partition({1, 1})).steps() == "NENE");
  CHECK(macdonald_path(Partition({2, 1})).steps() == "NENNEE");
  CHECK(macdonald_path(Partition({2, 2})).steps() == "NNENENEE");
  // The weighted corners are exactly the corners of the path.
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : Partition::all_of_size(n)) {
      auto cs = macdonald_path(mu).corners();
      auto wt = macdonald_weights(mu);
      REQUIRE(wt.size() == cs.size());
      for (auto c : cs) CHECK(wt.count(c) == 1);
    }
}

TEST_CASE("small Macdonald polynomials") {
  CHECK(macdonald_h(Partition({1})) == mono(Basis::s, {1}));
  CHECK(macdonald_h(Partition({2})) ==
        mono(Basis::s, {2}) + mono(Basis::s, {1, 1}, Q));
  CHECK(macdonald_h(Partition({1, 1})) ==
        mono(Basis::s, {2}) + mono(Basis::s, {1, 1}, T));
  CHECK(macdonald_h(Partition({2, 1})) ==
        mono(Basis::s, {3}) + mono(Basis::s, {2, 1}, Q + T) +
            mono(Basis::s, {1, 1, 1}, Q * T));
  CHECK(macdonald_h(Partition({3})) ==
        mono(Basis::s, {3}) + mono(Basis::s, {2, 1}, Q + Q * Q) +
            mono(Basis::s, {1, 1, 1}, Q.pow(3)));
}

TEST_CASE("Schur expansion corner cases") {
  // The coefficient of s_n is 1, the coefficient of s_{1^n} is
  // q^{n(mu')} t^{n(mu)}, and every coefficient is a polynomial.
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : Partition::all_of_size(n)) {
      SymFunc h = macdonald_h(mu).to_basis(Basis::s);
      CHECK(h.coeff(Partition({n})) == QtScalar(1));
      CHECK(h.coeff(Partition(std::vector<int>(n, 1))) ==
            QtScalar::q_pow(mu.conjugate().n_stat()) *
                QtScalar::t_pow(mu.n_stat()));
      for (const auto& [lam, c] : h.terms()) CHECK(c.is_polynomial());
    }
}

TEST_CASE("q,t symmetry under conjugation") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : Partition::all_of_size(n)) {
      SymFunc swapped =
          macdonald_h(mu).map_coeffs([](const QtScalar& c) { return c.swap_qt(); });
      CHECK(swapped == macdonald_h(mu.conjugate()));
    }
}

TEST_CASE("nabla") {
  // Identity in degree 0; the sign convention gives -1 in degree 1.
  CHECK(nabla(SymFunc::one()) == SymFunc::one());
  CHECK(nabla(mono(Basis::e, {1})) == -mono(Basis::e, {1}));
  // Diagonal on the Macdonald basis.
  for (const auto& mu : Partition::all_of_size(4))
    CHECK(nabla(macdonald_h(mu)) ==
          macdonald_h(mu).scaled(nabla_eigenvalue(mu)));
  // (-1)^n nabla e_n equals the sum of the compositional pieces.
  for (int n = 1; n <= 4; ++n) {
    SymFunc total(Basis::m);
    for (const auto& a : Composition::all_of_size(n)) total += dalpha(a);
    SymFunc ne = nabla(mono(Basis::e, {n}));
    CHECK(total == (n % 2 ? -ne : ne));
  }
  // Linearity over mixed degrees.
  SymFunc f = mono(Basis::s, {2, 1}, Q) + mono(Basis::s, {1}, T);
  CHECK(nabla(f) == nabla(mono(Basis::s, {2, 1})).scaled(Q) +
                        nabla(mono(Basis::s, {1})).scaled(T));
}
