#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "querygames/num.hpp"

#include <random>

using qg::Nat;

namespace {

// Brute-force oracles: walk powers of two instead of using bit positions.
Nat naive_floor_log2(const Nat& n) {
  if (n <= 1) return 0;
  Nat e = 0, p = 1;
  while (p * 2 <= n) {
    p *= 2;
    ++e;
  }
  return e;
}

Nat naive_ceil_log2(const Nat& n) {
  if (n <= 1) return 0;
  Nat e = 0, p = 1;
  while (p < n) {
    p *= 2;
    ++e;
  }
  return e;
}

Nat random_nat(std::mt19937_64& rng, int max_bits) {
  std::uniform_int_distribution<int> bits(0, max_bits);
  int k = bits(rng);
  Nat n = 0;
  std::uniform_int_distribution<int> bit(0, 1);
  for (int i = 0; i < k; ++i) n = n * 2 + bit(rng);
  return n;
}

}  // namespace

TEST_CASE("floor_log2 on small and boundary inputs") {
  CHECK(qg::floor_log2(0) == 0);
  CHECK(qg::floor_log2(1) == 0);
  CHECK(qg::floor_log2(2) == 1);
  CHECK(qg::floor_log2(3) == 1);
  CHECK(qg::floor_log2(4) == 2);
  CHECK(qg::floor_log2(99) == 6);
  CHECK(qg::floor_log2(1023) == 9);
  CHECK(qg::floor_log2(1024) == 10);
}

TEST_CASE("ceil_log2 on small and boundary inputs") {
  CHECK(qg::ceil_log2(0) == 0);
  CHECK(qg::ceil_log2(1) == 0);
  CHECK(qg::ceil_log2(2) == 1);
  CHECK(qg::ceil_log2(3) == 2);
  CHECK(qg::ceil_log2(64) == 6);
  // 2^6 = 64 < 101 <= 128 = 2^7, confirmed by the naive oracle.
  CHECK(naive_ceil_log2(101) == 7);
  CHECK(qg::ceil_log2(101) == 7);
  CHECK(qg::ceil_log2(128) == 7);
  CHECK(qg::ceil_log2(129) == 8);
}

TEST_CASE("pow2 basics and big values") {
  CHECK(qg::pow2(0) == 1);
  CHECK(qg::pow2(1) == 2);
  CHECK(qg::pow2(10) == 1024);
  CHECK(qg::pow2(200) == Nat(1) << 200);
}

TEST_CASE("log helpers reject negative input") {
  CHECK_THROWS_AS(qg::floor_log2(Nat(-1)), std::domain_error);
  CHECK_THROWS_AS(qg::ceil_log2(Nat(-5)), std::domain_error);
  CHECK_THROWS_AS(qg::pow2(Nat(-2)), std::domain_error);
}

TEST_CASE("log bounds and agreement with naive oracles on random bignums") {
  std::mt19937_64 rng(20260823);
  for (int i = 0; i < 2000; ++i) {
    Nat n = random_nat(rng, 220);
    CAPTURE(n.str());
    CHECK(qg::floor_log2(n) == naive_floor_log2(n));
    CHECK(qg::ceil_log2(n) == naive_ceil_log2(n));
    if (n >= 1) {
      CHECK(qg::pow2(qg::floor_log2(n)) <= n);
      CHECK(n <= qg::pow2(qg::ceil_log2(n)));
    }
  }
}

TEST_CASE("floor_log2 and ceil_log2 are monotone") {
  std::mt19937_64 rng(7);
  Nat prev_f = 0, prev_c = 0;
  Nat n = 0;
  std::uniform_int_distribution<int> step(1, 50);
  for (int i = 0; i < 500; ++i) {
    n += step(rng);
    Nat f = qg::floor_log2(n), c = qg::ceil_log2(n);
    CHECK(f >= prev_f);
    CHECK(c >= prev_c);
    prev_f = f;
    prev_c = c;
  }
}
