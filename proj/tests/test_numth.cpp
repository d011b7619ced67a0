#include <random>

#include "doctest.h"
#include "torsecm/numth.hpp"

using namespace torsecm;

TEST_CASE("nth_primes basics") {
  const Sieve& s = Sieve::shared();
  CHECK(s.nth_primes({1, 5}) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
  CHECK(s.nth_primes({50, 50}) == std::vector<std::uint64_t>{229});
  auto a = s.nth_primes({50, 10050});
  CHECK(a.size() == 10001);
  CHECK(a.front() == 229);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] > a[i - 1]);
  CHECK_THROWS_AS(s.nth_prime(s.prime_count() + 1), CapacityError);
}

TEST_CASE("nth_primes elements are prime (sampled trial division)") {
  auto a = Sieve::shared().nth_primes({50, 10050});
  for (std::size_t i = 0; i < a.size(); i += 997) {
    std::uint64_t p = a[i];
    bool prime = p > 1;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    CHECK(prime);
  }
}

TEST_CASE("legendre examples") {
  CHECK(legendre(1, 7) == 1);
  CHECK(legendre(14, 7) == 0);
  CHECK(legendre(3, 7) == -1);
  CHECK_THROWS_AS(legendre(3, 8), Error);
}

// Independent oracle: Euler's criterion a^((p-1)/2) mod p.
static int legendre_euler(long a, std::uint64_t p) {
  long r = a % static_cast<long>(p);
  if (r < 0) r += p;
  if (r == 0) return 0;
  std::uint64_t e = fastmod::powmod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

TEST_CASE("legendre agrees with Euler's criterion and is multiplicative") {
  std::mt19937_64 rng(7);
  auto primes = Sieve::shared().nth_primes({3, 120});
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t p = primes[rng() % primes.size()];
    long a = static_cast<long>(rng() % 4000) - 2000;
    long b = static_cast<long>(rng() % 4000) - 2000;
    CHECK(legendre(a, Int(static_cast<unsigned long>(p))) ==
          legendre_euler(a, p));
    CHECK(legendre(Int(a) * b, Int(static_cast<unsigned long>(p))) ==
          legendre_euler(a, p) * legendre_euler(b, p));
  }
}

TEST_CASE("is_smooth") {
  CHECK(is_smooth(Int(32) * 3 * 97, SmoothBound{100}));
  CHECK_FALSE(is_smooth(101, SmoothBound{100}));
  CHECK(is_smooth(1, SmoothBound{100}));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Int m = rng() % 100000 + 1, k = rng() % 100000 + 1;
    SmoothBound b{50};
    CHECK(is_smooth(m * k, b) == (is_smooth(m, b) && is_smooth(k, b)));
  }
}

TEST_CASE("mod_inv") {
  auto r = mod_inv(3, 7);
  CHECK(r.ok);
  CHECK(r.value == 5);
  auto f = mod_inv(7, 91);
  CHECK_FALSE(f.ok);
  CHECK(f.g == 7);
  for (long n : {2, 5, 91, 1009}) {
    auto one = mod_inv(1, n);
    CHECK(one.ok);
    CHECK(one.value == 1);
  }
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    Int n = rng() % 100000 + 2, a = rng() % 100000 + 1;
    auto inv = mod_inv(a, n);
    if (inv.ok)
      CHECK(a * inv.value % n == 1);
    else
      CHECK((inv.g > 1 && n % inv.g == 0));
  }
}

TEST_CASE("factorize and squarefree kernel") {
  auto f = factorize(Int(2) * 2 * 2 * 3 * 49);
  Int back = 1;
  for (auto& [p, e] : f)
    for (unsigned i = 0; i < e; ++i) back *= p;
  CHECK(back == 1176);
  CHECK(squarefree_kernel(Int(28)) == 7);
  CHECK(squarefree_kernel(Int(-12)) == -3);
  CHECK(squarefree_kernel(Int(161)) == 161);
}

TEST_CASE("rational sqrt and parsing") {
  CHECK(*rational_sqrt(Rat(4, 9)) == Rat(2, 3));
  CHECK_FALSE(rational_sqrt(Rat(2)).has_value());
  CHECK_FALSE(rational_sqrt(Rat(-4)).has_value());
  CHECK(parse_rational("19/40") == Rat(19, 40));
  CHECK(parse_rational("-273/400") == Rat(-273, 400));
  CHECK(parse_rational("7") == Rat(7));
}
