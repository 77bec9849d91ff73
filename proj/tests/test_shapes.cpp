#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shuffle/shapes.hpp"

using namespace shuffle;

TEST_CASE("partition basics") {
  Partition p({1, 3, 1});
  CHECK(p.parts() == std::vector<int>{3, 1, 1});
  CHECK(p.size() == 5);
  CHECK(p.length() == 3);
  CHECK(p.part(1) == 3);
  CHECK(p.part(4) == 0);
  CHECK(p.to_string() == "(3,1,1)");
  CHECK(Partition().to_string() == "()");
}

TEST_CASE("conjugate") {
  CHECK(Partition({3, 1, 1}).conjugate() == Partition({3, 1, 1}));
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
  for (const auto& mu : Partition::all_of_size(6))
    CHECK(mu.conjugate().conjugate() == mu);
}

TEST_CASE("n statistic") {
  // n(lambda) = sum (i-1) lambda_i; cross-checked as sum of binom(col,2)
  // over the conjugate's parts.
  CHECK(Partition({2, 1}).n_stat() == 1);
  CHECK(Partition({1, 1, 1}).n_stat() == 3);
  for (const auto& mu : Partition::all_of_size(5)) {
    int via_conj = 0;
    Partition conj = mu.conjugate();
    for (int p : conj.parts()) via_conj += p * (p - 1) / 2;
    CHECK(mu.n_stat() == via_conj);
  }
}

TEST_CASE("arm and leg") {
  Partition mu({4, 2, 1});
  CHECK(mu.arm(1, 1) == 3);
  CHECK(mu.leg(1, 1) == 2);
  CHECK(mu.arm(2, 1) == 2);
  CHECK(mu.leg(2, 1) == 1);
  CHECK(mu.arm(1, 3) == 0);
  CHECK(mu.leg(1, 3) == 0);
  CHECK_THROWS(mu.arm(3, 2));
  // Hook-length identity: sum over cells of (arm+leg+1) relates to
  // n(mu) + n(mu') + |mu|.
  for (const auto& mu2 : Partition::all_of_size(5)) {
    int total = 0;
    for (int r = 1; r <= mu2.length(); ++r)
      for (int c = 1; c <= mu2.part(r); ++c)
        total += mu2.arm(c, r) + mu2.leg(c, r) + 1;
    CHECK(total == mu2.n_stat() + mu2.conjugate().n_stat() + mu2.size());
  }
}

TEST_CASE("z statistic") {
  CHECK(Partition({1, 1, 1}).z_stat() == 6);
  CHECK(Partition({3}).z_stat() == 3);
  CHECK(Partition({2, 1}).z_stat() == 2);
  CHECK(Partition().z_stat() == 1);
  // sum over |lambda|=n of n!/z_lambda = number of permutations by cycle
  // type, so sum of n!/z = n! ... i.e. sum 1/z_lambda weighted check:
  mpq_class total = 0;
  for (const auto& mu : Partition::all_of_size(4))
    total += mpq_class(24) / mu.z_stat();
  CHECK(total == 24);
}

TEST_CASE("enumeration counts") {
  CHECK(Partition::all_of_size(0).size() == 1);
  CHECK(Partition::all_of_size(5).size() == 7);
  CHECK(Partition::all_of_size(8).size() == 22);
  CHECK(Composition::all_of_size(0).size() == 1);
  CHECK(Composition::all_of_size(5).size() == 16);
  CHECK(Composition::all_of_size(6).size() == 32);
}

TEST_CASE("composition") {
  Composition a({1, 3, 1});
  CHECK(a.parts() == std::vector<int>{1, 3, 1});
  CHECK(a.size() == 5);
  CHECK(a.sorted() == Partition({3, 1, 1}));
  CHECK_THROWS(Composition({1, 0}));
}
