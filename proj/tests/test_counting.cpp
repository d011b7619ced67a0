#include <random>

#include "doctest.h"
#include "torsecm/counting.hpp"
#include "torsecm/families.hpp"

using namespace torsecm;

TEST_CASE("count_naive examples") {
  CHECK(count_naive(ModCurve{7, 0, 3}) == 13);
  CHECK(count_naive(ModCurve{5, 0, 3}) == 6);
  CHECK(count_naive(ModCurve{3, 1, 0}) == 4);
  CHECK_THROWS_AS(count_naive(ModCurve{7, 0, 0}), BadCurveError);
}

TEST_CASE("count_bsgs agrees with count_naive (catalog curves, p < 1000)") {
  // the full sweep to 10^4 runs in the acceptance gate
  auto primes = Sieve::shared().primes_up_to(1000);
  for (const auto& entry : catalog()) {
    for (std::uint64_t p : primes) {
      if (p <= 3) continue;
      ModCurve c;
      try {
        c = reduce_mod(entry.curve, p);
      } catch (const BadReductionError&) {
        continue;
      }
      CAPTURE(entry.label);
      CAPTURE(p);
      CHECK(count_bsgs(c) == count_naive(c));
    }
  }
}

TEST_CASE("count is an annihilator of 20 random points at p=229") {
  ModCurve c = reduce_mod(RationalWeierstrass::short_curve(0, 3), 229);
  std::uint64_t n = count_bsgs(c);
  std::mt19937_64 rng(5);
  int tested = 0;
  while (tested < 20) {
    Int x = rng() % 229;
    Int rhs = (x * x * x + c.A * x + c.B) % 229;
    // brute-force square root
    for (Int y = 0; y < 229; ++y) {
      if ((y * y - rhs) % 229 == 0) {
        ModPoint p = ModPoint::affine(x, y);
        REQUIRE(on_curve(c, p));
        auto r = mod_scalar_mul(c, Int(static_cast<unsigned long>(n)), p);
        CHECK(std::get<ModPoint>(r).infinity);
        ++tested;
        break;
      }
    }
  }
}

TEST_CASE("twist consistency at p=1009") {
  ModCurve c{1009, 11, 17};
  // find a quadratic non-residue d
  std::uint64_t d = 2;
  while (legendre_u64(d, 1009) != -1) ++d;
  Int dd(static_cast<unsigned long>(d));
  ModCurve twist{1009, c.A * dd * dd % 1009, c.B * dd * dd * dd % 1009};
  CHECK(count_naive(c) + count_naive(twist) == 2 * 1009 + 2);
  CHECK(count_bsgs(c) + count_bsgs(twist) == 2 * 1009 + 2);
}

TEST_CASE("point_order") {
  ModCurve c{7, 0, 3};
  CHECK(point_order(c, ModPoint::at_infinity(), 13) == 1);
  CHECK(point_order(c, ModPoint::affine(1, 2), 13) == 13);
  CHECK_THROWS_AS(point_order(c, ModPoint::affine(1, 2), 12),
                  InvalidMultipleError);
  // Lagrange: orders divide the group order
  ModCurve c2 = reduce_mod(RationalWeierstrass(-47, -624, -624, 0, 0), 233);
  std::uint64_t n = count_bsgs(c2);
  for (Int x = 0; x < 40; ++x) {
    Int rhs = (x * x * x + c2.A * x + c2.B) % 233;
    for (Int y = 0; y < 233; ++y) {
      if ((y * y - rhs) % 233 == 0) {
        Int o = point_order(c2, ModPoint::affine(x, y),
                            Int(static_cast<unsigned long>(n)));
        CHECK(Int(static_cast<unsigned long>(n)) % o == 0);
        break;
      }
    }
  }
}

TEST_CASE("hasse interval") {
  auto [lo, hi] = hasse_interval(229);
  // 2 sqrt(229) = 30.27...
  CHECK(lo == 229 + 1 - 30);
  CHECK(hi == 229 + 1 + 30);
  for (std::uint64_t p : {5ull, 1009ull, 99991ull}) {
    auto [l, h] = hasse_interval(p);
    long double s = 2 * sqrtl(static_cast<long double>(p));
    CHECK(l >= p + 1 - static_cast<std::uint64_t>(s) - 1);
    CHECK(h <= p + 1 + static_cast<std::uint64_t>(s) + 1);
  }
}

TEST_CASE("rational 3-torsion reduces to order 3 at good primes") {
  auto rab = rabarison_3x3(2);
  for (std::uint64_t p : {101ull, 103ull, 107ull, 109ull, 113ull}) {
    ModCurve c;
    try {
      c = reduce_mod(rab.curve, p);
    } catch (const BadReductionError&) {
      continue;
    }
    auto r = reduce_point(rab.curve, rab.torsion_points[0],
                          Int(static_cast<unsigned long>(p)));
    ModPoint q = std::get<ModPoint>(r);
    std::uint64_t n = count_bsgs(c);
    CHECK(point_order(c, q, Int(static_cast<unsigned long>(n))) == 3);
  }
}
