#include "doctest.h"
#include "torsecm/census.hpp"
#include "torsecm/counting.hpp"
#include "torsecm/families.hpp"

using namespace torsecm;

TEST_CASE("condition grammar round trip") {
  auto cs = parse_conditions("(-143/p)=1; p%5=1");
  CHECK(cs.size() == 2);
  CHECK(condition_holds(cs[0], 229) == (legendre(Int(-143), Int(229)) == 1));
  CHECK(condition_holds(cs[1], 11));
  CHECK_FALSE(condition_holds(cs[1], 13));
  CHECK(conditions_to_text(cs) == "(-143/p)=1;p%5=1");
  CHECK_THROWS_AS(parse_conditions("(3/p)=2"), Error);
  CHECK_THROWS_AS(parse_conditions("p%0=1"), Error);
}

TEST_CASE("standard prime sets") {
  auto A = build_set(PrimeSetSpec::standard('A'));
  auto B = build_set(PrimeSetSpec::standard('B'));
  auto C = build_set(PrimeSetSpec::standard('C'));
  auto D = build_set(PrimeSetSpec::standard('D'));
  CHECK(A.size() == 10001);
  CHECK(A.front() == 229);   // 50th prime
  CHECK(B.size() + C.size() == A.size());
  for (std::uint64_t p : B) CHECK(legendre(Int(-143), Int(static_cast<unsigned long>(p))) == 1);
  for (std::uint64_t p : C) CHECK(legendre(Int(-143), Int(static_cast<unsigned long>(p))) == -1);
  for (std::uint64_t p : D) CHECK(p % 5 == 1);
  CHECK_THROWS_AS(PrimeSetSpec::standard('G'), Error);
}

static std::vector<LabeledCurve> census_curves() {
  std::vector<LabeledCurve> out;
  for (const char* l :
       {"E0", "E7", "E9", "E12", "E2x8", "E4x8", "E5x5", "E6x6"})
    out.push_back({l, catalog_entry(l).curve});
  return out;
}

TEST_CASE("census determinism across worker counts") {
  std::vector<PrimeSetSpec> sets;
  for (char l : {'A', 'B', 'D'}) {
    auto s = PrimeSetSpec::standard(l);
    s.range = {50, 350};
    sets.push_back(s);
  }
  auto r1 = run_census(census_curves(), sets, SmoothBound{100}, 1);
  auto r4 = run_census(census_curves(), sets, SmoothBound{100}, 4);
  CHECK(emit_report(r1, ReportFormat::Csv) == emit_report(r4, ReportFormat::Csv));
  CHECK(emit_report(r1, ReportFormat::Table) ==
        emit_report(r4, ReportFormat::Table));
}

TEST_CASE("census cells agree with a direct recount") {
  auto curves = census_curves();
  auto spec = PrimeSetSpec::standard('A');
  spec.range = {50, 250};
  auto report = run_census(curves, {spec}, SmoothBound{100}, 2);
  auto primes = build_set(spec);
  CHECK(report.set_sizes[0] == primes.size());
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    std::uint64_t n = 0;
    for (std::uint64_t p : primes) {
      ModCurve c;
      try {
        c = reduce_mod(curves[ci].curve, p);
      } catch (const BadReductionError&) {
        continue;
      }
      if (is_smooth_u64(count_bsgs(c), 100)) ++n;
    }
    CAPTURE(curves[ci].label);
    CHECK(report.cells[ci][0] == n);
  }
}

TEST_CASE("census counts are monotone in the smoothness bound") {
  auto curves = census_curves();
  auto spec = PrimeSetSpec::standard('A');
  spec.range = {50, 250};
  auto small = run_census(curves, {spec}, SmoothBound{20}, 2);
  auto big = run_census(curves, {spec}, SmoothBound{100}, 2);
  for (std::size_t ci = 0; ci < curves.size(); ++ci)
    CHECK(small.cells[ci][0] <= big.cells[ci][0]);
}

TEST_CASE("csv shape") {
  CensusReport empty;
  empty.set_labels = {'A'};
  CHECK(emit_report(empty, ReportFormat::Csv) == "curve,set,count,set_size\n");
  auto spec = PrimeSetSpec::standard('B');
  spec.range = {50, 120};
  auto r = run_census({{"E0", catalog_entry("E0").curve}}, {spec},
                      SmoothBound{100}, 1);
  std::string csv = emit_report(r, ReportFormat::Csv);
  CHECK(csv.rfind("curve,set,count,set_size\nE0,B,", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
}

TEST_CASE("bad-reduction primes are reported, not silently dropped") {
  // y^2 = x^3 + 229^2 has bad reduction at the first census prime 229
  RationalWeierstrass e(0, 0, 0, 0, Int(229) * 229);
  auto spec = PrimeSetSpec::standard('A');
  spec.range = {50, 60};
  auto r = run_census({{"X", e}}, {spec}, SmoothBound{100}, 1);
  REQUIRE(r.skipped.size() == 1);
  CHECK(r.skipped[0].p == 229);
  CHECK(r.skipped[0].curve == "X");
  CHECK(r.set_sizes[0] == 11);
}
