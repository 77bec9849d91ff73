#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "shuffle/charfn.hpp"

using namespace shuffle;

namespace {
SymFunc mono(Basis b, std::vector<int> lam, QtScalar c = QtScalar(1)) {
  return SymFunc::single(b, Partition(std::move(lam)), c);
}
const QtScalar Q = QtScalar::q();
const QtScalar T = QtScalar::t();
}  // namespace

TEST_CASE("characteristic function of a three-row path") {
  DyckPath pi = DyckPath::from_steps("NNEENE");
  CHECK(chi(pi) == mono(Basis::m, {3}) + mono(Basis::m, {2, 1}, 2 + Q) +
                       mono(Basis::m, {1, 1, 1}, 3 + 3 * Q));
  CHECK(chi(pi) == mono(Basis::s, {3}) + mono(Basis::s, {2, 1}, 1 + Q) +
                       mono(Basis::s, {1, 1, 1}, Q));
  // Flipping the unique corner multiplies the corner-free labellings away.
  DyckPath up = pi.flip_corners(pi.corners());
  CHECK(chi(up) == mono(Basis::s, {3}) + mono(Basis::s, {2, 1}, 2 * Q) +
                       mono(Basis::s, {1, 1, 1}, Q * Q));
  CHECK(chi_zero(pi) ==
        mono(Basis::s, {2, 1}) + mono(Basis::s, {1, 1, 1}, Q));
}

TEST_CASE("weighted characteristic function degenerations") {
  for (const auto& pi : DyckPath::all_full(4)) {
    // Weight one everywhere drops the corner conditions.
    CornerWeights ones;
    for (auto c : pi.corners()) ones[c] = QtScalar(1);
    CHECK(chi_weighted(pi, ones) == chi(pi));
    // Weight zero matches the corner-flip inclusion-exclusion.
    CHECK(chi_weighted(pi, {}) == chi_zero(pi));
  }
}

TEST_CASE("conjugation symmetry") {
  // bar(chi)[-X] = (-1)^n q^{-area} chi.
  for (int n = 1; n <= 5; ++n)
    for (const auto& pi : DyckPath::all_full(n)) {
      SymFunc lhs = chi(pi).bar_coeffs().plethysm_minus();
      QtScalar c = QtScalar::q_pow(-pi.area());
      if (n % 2) c = -c;
      CHECK(lhs == chi(pi).scaled(c));
    }
}

TEST_CASE("reversal symmetry") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& pi : DyckPath::all_full(n))
      CHECK(chi(pi) == chi(pi.reversed()));
}

namespace {
// Independent route to D_alpha: group paths by touch instead of touch',
// weight by t^area, and sum q^dinv over labellings that strictly decrease
// along each column run.
SymFunc dalpha_by_touch(const Composition& alpha) {
  int n = 0;
  for (int a : alpha.parts()) n += a;
  SymFunc total(Basis::m);
  for (const auto& pi : DyckPath::all_full(n)) {
    if (pi.touch() != alpha.parts()) continue;
    auto dp = pi.dinv_pairs();
    const auto& x = pi.x();
    SymFunc f(Basis::m);
    for (const auto& lam : Partition::all_of_size(n)) {
      std::vector<int> w;
      for (int i = 0; i < lam.length(); ++i)
        w.insert(w.end(), lam.part(i + 1), i + 1);
      std::map<int, long> counts;
      do {
        bool ok = true;
        for (int j = 1; j < n && ok; ++j)
          ok = x[j - 1] != x[j] || w[j - 1] > w[j];
        if (!ok) continue;
        int d = 0;
        for (auto [a, b] : dp) d += w[a - 1] > w[b - 1];
        ++counts[d];
      } while (std::next_permutation(w.begin(), w.end()));
      QtPoly coeff;
      for (auto [e, c] : counts) coeff.add_to(QtMono{e, 0}, c);
      if (!coeff.is_zero()) f.add_to(lam, QtScalar(coeff));
    }
    total += f.scaled(QtScalar::t_pow(pi.area()));
  }
  return total;
}
}  // namespace

TEST_CASE("the two routes to the compositional sum agree") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : Composition::all_of_size(n))
      CHECK(dalpha(a) == dalpha_by_touch(a));
}

TEST_CASE("compositional sums") {
  // NNEENE is the unique path with touch' = (1,2) and it has bounce 1.
  CHECK(dalpha(Composition({1, 2})) ==
        mono(Basis::s, {2, 1}, T) + mono(Basis::s, {1, 1, 1}, Q * T));
  CHECK(dalpha(Composition({2, 1})) ==
        mono(Basis::s, {2, 1}, Q * T) + mono(Basis::s, {1, 1, 1}, Q * Q * T));
  CHECK(dalpha(Composition({1})) == mono(Basis::s, {1}));
  // Summing over all compositions of n gives the full q,t weight
  // sum_pi t^bounce q^area chi-at-zero; spot check n = 2.
  SymFunc total(Basis::m);
  for (const auto& a : Composition::all_of_size(2)) total += dalpha(a);
  CHECK(total == mono(Basis::s, {2}) +
                     mono(Basis::s, {1, 1}, Q + T));
}

TEST_CASE("parking words and the inversion statistic") {
  // No corners: every word qualifies.
  auto ws = parking_words(DyckPath::from_steps("NE"), 2);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0] == std::pair<std::vector<int>, int>({1}, 0));
  CHECK(ws[1] == std::pair<std::vector<int>, int>({2}, 0));
  // NNEE has no corner cell (its North run ends on the top edge), so all
  // four words qualify; only (2,1) has an inversion, at the area pair (1,2).
  ws = parking_words(DyckPath::from_steps("NNEE"), 2);
  REQUIRE(ws.size() == 4);
  CHECK(inv_stat(DyckPath::from_steps("NNEE"), {2, 1}) == 1);
  CHECK(inv_stat(DyckPath::from_steps("NNEE"), {1, 2}) == 0);
  // Its sweep image NENE does carry the corner (1,2): the stacked column of
  // NNEE turns into the corner condition w_1 > w_2.
  ws = parking_words(DyckPath::from_steps("NENE"), 2);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].first == std::vector<int>{2, 1});
  // The sweep image of the running eight-row example.
  DyckPath prime = DyckPath(0, {1, 2, 2, 2, 3, 3, 7, 7}).zeta();
  std::vector<int> w = {9, 5, 3, 2, 2, 1, 5, 2};
  CHECK(is_parking_word(prime, w));
  CHECK(inv_stat(prime, w) == 5);
}

TEST_CASE("parking words generate chi at weight zero") {
  // sum over parking words of q^inv x_w, collected by content, is chi(pi,0).
  for (int n = 1; n <= 4; ++n)
    for (const auto& pi : DyckPath::all_full(n)) {
      std::map<std::vector<int>, QtPoly> by_content;
      for (const auto& [w, inv] : parking_words(pi, n)) {
        std::vector<int> content(n, 0);
        for (int v : w) ++content[v - 1];
        while (!content.empty() && content.back() == 0) content.pop_back();
        // Keep only the dominant monomial x^lam of each m_lam.
        if (!std::is_sorted(content.begin(), content.end(),
                            std::greater<int>()))
          continue;
        by_content[content].add_to(QtMono{inv, 0}, 1);
      }
      SymFunc f(Basis::m);
      for (const auto& [lam, coeff] : by_content)
        f.add_to(Partition(lam), QtScalar(coeff));
      CHECK(f == chi_zero(pi));
    }
}
