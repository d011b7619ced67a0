#include <cstring>
#include <string>

#include "doctest.h"
#include "torsecm.h"

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { tecm_string_free(s); }
  std::string get() const { return s ? s : ""; }
};

struct Curve {
  tecm_curve* c = nullptr;
  ~Curve() { tecm_curve_free(c); }
};

}  // namespace

TEST_CASE("curve parse / record round trip") {
  const char* rec = "a1=0 a2=0 a3=0 a4=-27/4 a6=1234/56789";
  Curve c;
  REQUIRE(tecm_curve_parse(rec, &c.c) == TECM_OK);
  Str out;
  REQUIRE(tecm_curve_record(c.c, &out.s) == TECM_OK);
  CHECK(out.get() == rec);
  // non-canonical denominators parse to the same curve
  Curve c2;
  REQUIRE(tecm_curve_parse("a1=0/1 a2=0/2 a3=0/3 a4=-54/8 a6=1234/56789",
                           &c2.c) == TECM_OK);
  Str out2;
  REQUIRE(tecm_curve_record(c2.c, &out2.s) == TECM_OK);
  CHECK(out2.get() == rec);

  tecm_curve* bad = nullptr;
  CHECK(tecm_curve_parse("a1=1 nonsense", &bad) == TECM_ERR);
  CHECK(bad == nullptr);
  CHECK(std::strlen(tecm_last_error()) > 0);
  // singular curves are rejected too
  CHECK(tecm_curve_parse("a1=0/1 a2=0/1 a3=0/1 a4=0/1 a6=0/1", &bad) ==
        TECM_ERR);
}

TEST_CASE("catalog access") {
  Str labels;
  REQUIRE(tecm_catalog_labels(&labels.s) == TECM_OK);
  CHECK(labels.get().find("E12\n") != std::string::npos);
  Curve c;
  REQUIRE(tecm_curve_catalog("E0", &c.c) == TECM_OK);
  tecm_curve* bad = nullptr;
  CHECK(tecm_curve_catalog("nope", &bad) == TECM_ERR);
  Str text;
  REQUIRE(tecm_catalog_text(&text.s) == TECM_OK);
  CHECK(text.get().find("label: E5x5") != std::string::npos);
}

TEST_CASE("count") {
  Curve c;
  REQUIRE(tecm_curve_catalog("E0", &c.c) == TECM_OK);
  uint64_t n = 0;
  REQUIRE(tecm_count(c.c, 7, &n) == TECM_OK);
  CHECK(n == 13);
  CHECK(tecm_count(c.c, 3, &n) == TECM_ERR);  // bad reduction
  CHECK(tecm_count(c.c, 8, &n) == TECM_ERR);  // not prime
}

TEST_CASE("census CSV through the C API") {
  Str out;
  REQUIRE(tecm_census("A,B", "E0,E7", 50, 150, 100, 2, 1, &out.s) == TECM_OK);
  std::string csv = out.get();
  CHECK(csv.rfind("curve,set,count,set_size\nE0,A,", 0) == 0);
  CHECK(csv.find("\nE7,B,") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
  Str bad;
  CHECK(tecm_census("Z", "E0", 50, 150, 100, 1, 1, &bad.s) == TECM_ERR);
}

TEST_CASE("generation") {
  Str out;
  REQUIRE(tecm_gen("4x8", "4", nullptr, &out.s) == TECM_OK);
  CHECK(out.get().find("a4=") != std::string::npos);
  Str bad;
  CHECK(tecm_gen("4x8", "1", nullptr, &bad.s) == TECM_ERR);  // degenerate
  CHECK(tecm_gen("wat", "1", nullptr, &bad.s) == TECM_ERR);
}

TEST_CASE("verification") {
  Curve e7;
  REQUIRE(tecm_curve_catalog("E7", &e7.c) == TECM_OK);
  int pass = 0;
  Str rep;
  REQUIRE(tecm_verify_injection(e7.c, 7, "", 100, &pass, &rep.s) == TECM_OK);
  CHECK(pass == 1);

  Curve t3;
  REQUIRE(tecm_curve_catalog("5x5T3", &t3.c) == TECM_OK);
  int verdict = 0;
  Str rep2;
  REQUIRE(tecm_verify_nontorsion(t3.c, "-132", "2722", &verdict, &rep2.s) ==
          TECM_OK);
  CHECK(verdict == 1);
  // off-curve point is an error, not a verdict
  Str rep3;
  CHECK(tecm_verify_nontorsion(t3.c, "1", "1", &verdict, &rep3.s) ==
        TECM_ERR);

  Curve e0;
  REQUIRE(tecm_curve_catalog("E0", &e0.c) == TECM_OK);
  Str rep4;
  REQUIRE(tecm_verify_independence(e0.c, "1", "2", "1", "-2", 2, &pass,
                                   &rep4.s) == TECM_OK);
  CHECK(pass == 0);
}

TEST_CASE("ecm and strip") {
  int found = 0;
  Str out;
  REQUIRE(tecm_ecm("91", 100, 1000, 20, "catalog:all", &found, &out.s) ==
          TECM_OK);
  CHECK(found == 1);
  CHECK(out.get().rfind("factor=", 0) == 0);
  CHECK(tecm_ecm("12", 100, 0, 20, "catalog:all", &found, &out.s) ==
        TECM_ERR);  // gcd(n, 6) != 1

  Str stripped, removed;
  REQUIRE(tecm_strip_23("108", &stripped.s, &removed.s) == TECM_OK);
  CHECK(stripped.get() == "1");
  CHECK(removed.get() == "2 2 3 3 3");
  Str s2, r2;
  REQUIRE(tecm_strip_23("91", &s2.s, &r2.s) == TECM_OK);
  CHECK(s2.get() == "91");
  CHECK(r2.get() == "");
}

TEST_CASE("sieve limit is sane") { CHECK(tecm_sieve_limit() >= 200000); }
