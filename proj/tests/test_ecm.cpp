#include <random>

#include "doctest.h"
#include "torsecm/counting.hpp"
#include "torsecm/ecm.hpp"
#include "torsecm/families.hpp"

using namespace torsecm;

namespace {

const RationalWeierstrass& e0() { return catalog_entry("E0").curve; }
const RationalPoint& e0_point() {
  return catalog_entry("E0").known_points.front();
}

}  // namespace

TEST_CASE("stage 1 splits 91 with the first catalog curve") {
  auto r = stage1(91, e0(), e0_point(), 13);
  auto* f = std::get_if<EcmFactor>(&r);
  REQUIRE(f);
  CHECK((f->g == 7 || f->g == 13));
  CHECK(f->stage == 1);
}

TEST_CASE("stage 1 is predictable from the reduction orders") {
  // pick two primes where |E0(F_p)| factors let B1 split exactly one side
  std::uint64_t p = 0, q = 0;
  Int op, oq;
  for (std::uint64_t cand : Sieve::shared().primes_up_to(600)) {
    if (cand < 500) continue;
    ModCurve c;
    try {
      c = reduce_mod(e0(), cand);
    } catch (const BadReductionError&) {
      continue;
    }
    ModPoint pt =
        std::get<ModPoint>(reduce_point(e0(), e0_point(), Int((unsigned long)cand)));
    Int ord = point_order(c, pt, Int(count_bsgs(c)));
    if (p == 0) {
      p = cand;
      op = ord;
    } else {
      q = cand;
      oq = ord;
      if (op != oq) break;
      q = 0;
    }
  }
  REQUIRE(q != 0);
  // choose B1 so that B1! kills the smaller order but not the larger
  Int small = op < oq ? op : oq;
  Int big = op < oq ? oq : op;
  std::uint64_t want = op < oq ? p : q;
  // B1 = largest prime power dividing `small`, assuming it doesn't divide big
  std::uint64_t b1 = 0;
  for (const auto& [pr, e] : factorize(small)) {
    Int pw = 1;
    for (unsigned i = 0; i < e; ++i) pw *= pr;
    if (pw.fits_ulong_p() && pw.get_ui() > b1) b1 = pw.get_ui();
  }
  // only conclusive when the larger order has a prime power beyond B1
  bool big_survives = false;
  for (const auto& [pr, e] : factorize(big)) {
    Int pw = 1;
    for (unsigned i = 0; i < e; ++i) pw *= pr;
    if (pw > Int((unsigned long)b1)) big_survives = true;
  }
  if (big_survives) {
    auto r = stage1(Int((unsigned long)p) * Int((unsigned long)q), e0(),
                    e0_point(), b1);
    auto* f = std::get_if<EcmFactor>(&r);
    REQUIRE(f);
    CHECK(f->g == want);
  }
}

TEST_CASE("stage 1 survives when B1 is hopeless, stage 2 finishes the job") {
  Int n = Int(1009) * Int(100003);
  auto r1 = stage1(n, e0(), e0_point(), 5);
  auto* s = std::get_if<Survived>(&r1);
  REQUIRE(s);
  CHECK(s->curve.n == n);
  // B2 == B1 leaves the point untouched
  auto rsame = stage2(n, *s, 5, 5);
  auto* s2 = std::get_if<Survived>(&rsame);
  REQUIRE(s2);
  CHECK(s2->point.x == s->point.x);

  // |E0(F_1009)| = 948 = 2^2 * 3 * 79: stage 1 at B1=12 leaves the prime
  // 79, which stage 2 picks up
  std::uint64_t order = count_bsgs(reduce_mod(e0(), 1009));
  REQUIRE(order == 948);
  auto r2 = stage1(n, e0(), e0_point(), 12);
  auto* surv = std::get_if<Survived>(&r2);
  REQUIRE(surv);
  auto r3 = stage2(n, *surv, 12, 100);
  auto* f = std::get_if<EcmFactor>(&r3);
  REQUIRE(f);
  CHECK(f->g == 1009);
  CHECK(f->stage == 2);
}

TEST_CASE("stage bounds and inputs are validated") {
  CHECK_THROWS_AS(stage1(15, e0(), e0_point(), 10), BadEcmInputError);  // 3|n
  CHECK_THROWS_AS(stage1(14, e0(), e0_point(), 10), BadEcmInputError);  // 2|n
  CHECK_THROWS_AS(stage1(1, e0(), e0_point(), 10), BadEcmInputError);
  EcmConfig bad;
  bad.max_curves = 0;
  CHECK_THROWS_AS(bad.validate(), BadEcmInputError);
  EcmConfig bad2;
  bad2.b2 = 5;  // not above b1
  CHECK_THROWS_AS(bad2.validate(), BadEcmInputError);
  EcmConfig bad3;
  bad3.catalog_labels = {"E0"};
  bad3.family = "4x8";  // two sources at once
  CHECK_THROWS_AS(bad3.validate(), BadEcmInputError);
}

TEST_CASE("ecm_run over the catalog") {
  EcmConfig cfg;
  cfg.b1 = 100;
  cfg.b2 = 1000;
  cfg.catalog_labels = {"E0", "E7"};
  auto rep = ecm_run(91, cfg);
  auto* f = std::get_if<EcmFactor>(&rep.outcome);
  REQUIRE(f);
  CHECK(Int(91) % f->g == 0);
  CHECK(f->g > 1);
  CHECK(f->g < 91);
  CHECK(format_outcome(rep.outcome).rfind("factor=", 0) == 0);
}

TEST_CASE("ecm_run reports exhaustion honestly") {
  // tiny bounds that can't reach the reduction orders of a 40-bit instance
  EcmConfig cfg;
  cfg.b1 = 2;
  cfg.max_curves = 2;
  cfg.catalog_labels = {"E0", "E7"};
  Int n = Int("1000003") * Int("1000033");
  auto rep = ecm_run(n, cfg);
  auto* ex = std::get_if<EcmExhausted>(&rep.outcome);
  REQUIRE(ex);
  CHECK(ex->curves_tried == 2);
  CHECK(format_outcome(rep.outcome) == "exhausted");
}

TEST_CASE("ecm_run with a family source") {
  EcmConfig cfg;
  cfg.b1 = 200;
  cfg.b2 = 2000;
  cfg.family = "4x8";
  cfg.family_params = {Rat(2), Rat(1), Rat(3)};  // t=1 is degenerate: skipped
  auto rep = ecm_run(Int(1009) * Int(2003), cfg);
  bool skipped_degenerate = false;
  for (const auto& s : rep.skipped)
    if (s.reason.find("vanishing") != std::string::npos)
      skipped_degenerate = true;
  CHECK(skipped_degenerate);
  if (auto* f = std::get_if<EcmFactor>(&rep.outcome)) {
    CHECK((Int(1009) * 2003) % f->g == 0);
    CHECK(f->g > 1);
  }
}

TEST_CASE("recursive factorization of random semiprime-rich values") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    std::uint64_t n = (rng() % 900000007ULL) + 5;
    while (n % 2 == 0 || n % 3 == 0) ++n;
    std::vector<Int> stack{Int((unsigned long)n)}, primes;
    while (!stack.empty()) {
      Int m = stack.back();
      stack.pop_back();
      if (m == 1) continue;
      if (is_probable_prime(m)) {
        primes.push_back(m);
        continue;
      }
      EcmConfig cfg;
      cfg.b1 = 2000;
      cfg.b2 = 50000;
      cfg.catalog_labels = {"E0", "E7", "E9", "E12"};
      auto rep = ecm_run(m, cfg);
      auto* f = std::get_if<EcmFactor>(&rep.outcome);
      REQUIRE(f);
      REQUIRE(m % f->g == 0);
      stack.push_back(f->g);
      stack.push_back(m / f->g);
    }
    Int prod = 1;
    for (const auto& p : primes) prod *= p;
    CAPTURE(n);
    CHECK(prod == n);
  }
}
