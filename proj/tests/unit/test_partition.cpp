#include <doctest.h>

#include <vector>

#include "gramclass/partition.hpp"

using namespace gramclass;

TEST_CASE("partition basics") {
  Partition p{3, 1, 1};
  CHECK(p.sum() == 5);
  CHECK(p.length() == 3);
  CHECK(p.lcm() == 3);
  CHECK(p.valid());
  CHECK(p.str() == "(3,1,1)");
  CHECK((Partition{6, 4}).lcm() == 12);
  CHECK(Partition{}.valid());
  CHECK(Partition{}.str() == "()");
  CHECK_FALSE((Partition{1, 2}).valid());  // must be non-increasing
  CHECK_FALSE((Partition{2, 0}).valid());  // parts must be positive
}

TEST_CASE("partition counts match the classical sequence") {
  // p(0)..p(10)
  const long long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int m = 0; m <= 10; ++m)
    CHECK((long long)partitions_all(m).size() == expected[m]);
}

TEST_CASE("partitions are listed lexicographically decreasing") {
  std::vector<Partition> p4 = partitions_all(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{2, 1, 1});
  CHECK(p4[4] == Partition{1, 1, 1, 1});
  for (int m = 1; m <= 9; ++m) {
    std::vector<Partition> all = partitions_all(m);
    for (const Partition& p : all) {
      CHECK(p.valid());
      CHECK(p.sum() == m);
    }
    for (size_t i = 0; i + 1 < all.size(); ++i)
      CHECK(all[i].parts > all[i + 1].parts);  // strict lex order
  }
}

TEST_CASE("exact-length counts agree with filtering") {
  for (int m = 1; m <= 12; ++m)
    for (int l = 0; l <= m + 1; ++l) {
      long long by_filter = 0;
      for (const Partition& p : partitions_all(m))
        if (p.length() == l) ++by_filter;
      CHECK(partitions_exact_length(m, l) == by_filter);
    }
}
