#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hindman/core.hpp"
#include "hindman/rng.hpp"

using namespace hindman;

TEST_CASE("exp2 on small sets") {
  CHECK(exp2(FiniteSet{0, 1, 2}) == 7);
  CHECK(exp2(FiniteSet{3}) == 8);
  CHECK(exp2(FiniteSet{0, 2}) == 5);
  CHECK_THROWS_AS(exp2(FiniteSet{}), DomainError);
}

TEST_CASE("set_of inverts exp2") {
  CHECK(set_of(7) == FiniteSet{0, 1, 2});
  CHECK(set_of(8) == FiniteSet{3});
  CHECK(set_of(5) == FiniteSet{0, 2});
  CHECK_THROWS_AS(set_of(0), DomainError);
}

TEST_CASE("precedes compares max against min") {
  CHECK(precedes(FiniteSet{1, 2}, FiniteSet{3}));
  CHECK_FALSE(precedes(FiniteSet{1, 3}, FiniteSet{2, 5}));
  CHECK(precedes(FiniteSet{0}, FiniteSet{1}));
  CHECK_THROWS_AS(precedes(FiniteSet{}, FiniteSet{1}), DomainError);
}

TEST_CASE("nu enumerates all non-empty unions") {
  BlockFamily fam({FiniteSet{1}, FiniteSet{2}}, false);
  auto unions = nu(fam);
  REQUIRE(unions.size() == 3);
  CHECK(unions[0] == FiniteSet{1});
  CHECK(unions[1] == FiniteSet{2});
  CHECK(unions[2] == FiniteSet{1, 2});

  BlockFamily single({FiniteSet{0}}, false);
  CHECK(nu(single).size() == 1);

  BlockFamily three({FiniteSet{0}, FiniteSet{2}, FiniteSet{5}}, true);
  auto u3 = nu(three);
  CHECK(u3.size() == 7);
  CHECK(std::count(u3.begin(), u3.end(), FiniteSet{0, 2, 5}) == 1);
}

TEST_CASE("block family validation") {
  CHECK_THROWS_AS(BlockFamily({FiniteSet{1}, FiniteSet{1, 2}}, false), InputError);
  CHECK_THROWS_AS(BlockFamily({FiniteSet{}}, false), InputError);
  CHECK_THROWS_AS(BlockFamily({FiniteSet{2}, FiniteSet{1}}, true), InputError);
  CHECK_NOTHROW(BlockFamily({FiniteSet{2}, FiniteSet{1}}, false));
}

TEST_CASE("sum_set examples") {
  CHECK(sum_set({1, 2, 4}) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(sum_set({2, 3}) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(sum_set({5}) == std::vector<std::uint64_t>{5});
  CHECK_THROWS_AS(sum_set({}), DomainError);
  CHECK_THROWS_AS(sum_set({2, 2}), DomainError);
  CHECK_THROWS_AS(sum_set({0, 1}), DomainError);
}

TEST_CASE("color_of lookups") {
  Coloring interval = Coloring::interval(4, 2, {0, 1, 0, 1});
  CHECK(color_of(interval, 2) == 1);
  CHECK_THROWS_AS(color_of(interval, 5), DomainError);
  CHECK_THROWS_AS(color_of(interval, 0), DomainError);

  Coloring subsets = Coloring::subsets(2, 2, {0, 0, 1});
  CHECK(color_of(subsets, FiniteSet{0, 1}) == 1);
  CHECK(color_of(subsets, 3) == 1);
  CHECK_THROWS_AS(color_of(interval, FiniteSet{0}), DomainError);
}

TEST_CASE("coloring validation") {
  CHECK_THROWS_AS(Coloring::interval(4, 2, {0, 1, 0}), InputError);
  CHECK_THROWS_AS(Coloring::interval(4, 2, {0, 1, 0, 2}), InputError);
  CHECK_THROWS_AS(Coloring::interval(4, 0, {0, 0, 0, 0}), InputError);
  CHECK_THROWS_AS(Coloring::subsets(2, 1, {0, 0}), InputError);
}

namespace {

FiniteSet random_set(SplitMix64& rng, unsigned max_element, std::size_t max_size) {
  std::vector<unsigned> elems;
  const std::size_t size = 1 + rng.below(max_size);
  for (std::size_t i = 0; i < size; ++i) {
    elems.push_back(static_cast<unsigned>(rng.below(max_element + 1)));
  }
  return FiniteSet(elems);
}

}  // namespace

TEST_CASE("property: exp2/set_of bijection") {
  SplitMix64 rng(0xB17E5);
  for (int i = 0; i < 10'000; ++i) {
    FiniteSet a = random_set(rng, 30, 8);
    CHECK(set_of(exp2(a)) == a);
    const std::uint64_t n = 1 + rng.below((std::uint64_t{1} << 30) - 1);
    CHECK(exp2(set_of(n)) == n);
  }
}

TEST_CASE("property: exp2 additivity on disjoint sets and injectivity") {
  SplitMix64 rng(0xADD);
  for (int i = 0; i < 10'000; ++i) {
    FiniteSet a = random_set(rng, 40, 6);
    FiniteSet b = random_set(rng, 40, 6);
    if (a.disjoint_from(b)) {
      CHECK(exp2(a.united(b)) == exp2(a) + exp2(b));
    }
    if (a != b) {
      CHECK(exp2(a) != exp2(b));
    }
  }
}

TEST_CASE("property: |nu| = 2^blocks - 1") {
  SplitMix64 rng(0x41);
  for (int iter = 0; iter < 2'000; ++iter) {
    const std::size_t count = 1 + rng.below(10);
    std::vector<unsigned> pool(40);
    for (unsigned i = 0; i < 40; ++i) pool[i] = i;
    for (std::size_t i = pool.size(); i > 1; --i) {
      std::swap(pool[i - 1], pool[rng.below(i)]);
    }
    std::vector<FiniteSet> blocks;
    std::size_t cursor = 0;
    for (std::size_t b = 0; b < count; ++b) {
      const std::size_t size = 1 + rng.below(3);
      std::vector<unsigned> elems(pool.begin() + cursor, pool.begin() + cursor + size);
      cursor += size;
      blocks.emplace_back(elems);
    }
    auto unions = nu(BlockFamily(blocks, false));
    CHECK(unions.size() == (std::size_t{1} << count) - 1);
    std::set<FiniteSet> distinct(unions.begin(), unions.end());
    CHECK(distinct.size() == unions.size());
  }
}

TEST_CASE("property: sum/union bridge") {
  // For pairwise disjoint non-empty v_i, the subset sums of {exp2(v_i)} are
  // exactly the exp2 images of the non-empty unions.
  SplitMix64 rng(0xB41D6E);
  for (int iter = 0; iter < 10'000; ++iter) {
    const std::size_t count = 1 + rng.below(5);
    std::vector<unsigned> pool(24);
    for (unsigned i = 0; i < 24; ++i) pool[i] = i;
    for (std::size_t i = pool.size(); i > 1; --i) {
      std::swap(pool[i - 1], pool[rng.below(i)]);
    }
    std::vector<FiniteSet> blocks;
    std::size_t cursor = 0;
    std::vector<std::uint64_t> images;
    for (std::size_t b = 0; b < count; ++b) {
      const std::size_t size = 1 + rng.below(3);
      std::vector<unsigned> elems(pool.begin() + cursor, pool.begin() + cursor + size);
      cursor += size;
      blocks.emplace_back(elems);
      images.push_back(exp2(blocks.back()));
    }
    auto sums = sum_set(images);
    std::vector<std::uint64_t> union_images;
    for (const FiniteSet& u : nu(BlockFamily(blocks, false))) {
      union_images.push_back(exp2(u));
    }
    std::sort(union_images.begin(), union_images.end());
    CHECK(sums == union_images);
  }
}

TEST_CASE("finite set basics") {
  FiniteSet s({3, 1, 3, 2});  // normalized
  CHECK(s == FiniteSet{1, 2, 3});
  CHECK(s.mask() == 0b1110);
  CHECK(FiniteSet::from_mask(0b1110) == s);
  CHECK(FiniteSet::interval(4, 6) == FiniteSet{4, 5, 6});
  CHECK(FiniteSet{1, 2}.is_subset_of(s));
  CHECK_FALSE(s.is_subset_of(FiniteSet{1, 2}));
}
