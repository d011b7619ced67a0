// Command-line front end for the torsecm library (census, curve
// generation, verification, point counting, ECM).  Talks to the library
// exclusively through the C API.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "torsecm.h"

namespace {

struct StringOut {
  char* s = nullptr;
  ~StringOut() { tecm_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct CurveHandle {
  tecm_curve* c = nullptr;
  ~CurveHandle() { tecm_curve_free(c); }
};

[[noreturn]] void die(const std::string& context) {
  std::cerr << context << ": " << tecm_last_error() << "\n";
  std::exit(1);
}

// Curve selection: catalog label, or path to a file holding a curve
// record.
void load_curve(const std::string& spec, CurveHandle& out) {
  if (tecm_curve_catalog(spec.c_str(), &out.c) == TECM_OK) return;
  std::ifstream in(spec);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string record = buf.str();
    while (!record.empty() &&
           (record.back() == '\n' || record.back() == '\r'))
      record.pop_back();
    if (tecm_curve_parse(record.c_str(), &out.c) == TECM_OK) return;
    die("failed to parse curve record from " + spec);
  }
  die("no catalog entry or readable record file named " + spec);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    std::exit(1);
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torsecm: torsion-aware elliptic curve toolkit and ECM"};
  app.require_subcommand(1);

  // census
  auto* census = app.add_subcommand(
      "census", "Smoothness census of |E(F_p)| over labeled prime sets");
  std::string sets = "A,B,C,D,E,F", curve_sel = "all", range = "50:10050";
  std::string format = "table", out_path;
  std::uint64_t bound = 100;
  int workers = 1;
  census->add_option("--sets", sets, "Comma-separated set labels (A-F)");
  census->add_option("--curves", curve_sel,
                     "Comma-separated catalog labels, or 'all'");
  census->add_option("--range", range, "Prime index range lo:hi (1-based)");
  census->add_option("--bound", bound, "Smoothness bound");
  census->add_option("--format", format, "Output format: table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  census->add_option("--out", out_path, "Write output to this path");
  census->add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a family curve");
  std::string family, param, zval;
  gen->add_option("--family", family,
                  "4x8 | 3x3 | rab3x3 | 5x5 | 3x6:{i,ii,iii} | "
                  "6x6:{i,ii,iii}")
      ->required();
  gen->add_option("--param", param, "Rational parameter a/b")->required();
  gen->add_option("--z", zval,
                  "Square root of the variant condition (3x6/6x6)");

  // verify
  auto* verify = app.add_subcommand("verify", "Torsion/rank verification");
  std::string vcurve, check, split, x1, y1, x2, y2;
  std::uint64_t order = 1, sample = 200;
  long ibound = 10;
  verify->add_option("--curve", vcurve, "Catalog label or record file path")
      ->required();
  verify
      ->add_option("--check", check,
                   "injection | nontorsion | independence")
      ->required()
      ->check(CLI::IsMember({"injection", "nontorsion", "independence"}));
  verify->add_option("--order", order, "Claimed torsion order (injection)");
  verify->add_option("--split", split,
                     "Split conditions, e.g. \"(-143/p)=1;p%5=1\"");
  verify->add_option("--sample", sample, "Primes to test (injection)");
  verify->add_option("--x", x1, "Point x (nontorsion/independence)");
  verify->add_option("--y", y1, "Point y (nontorsion/independence)");
  verify->add_option("--x2", x2, "Second point x (independence)");
  verify->add_option("--y2", y2, "Second point y (independence)");
  verify->add_option("--bound", ibound, "Combination bound (independence)");

  // ecm
  auto* ecm = app.add_subcommand("ecm", "ECM factorization");
  std::string nvalue, ecurves = "catalog:all";
  std::uint64_t b1 = 10000, b2 = 100000;
  std::size_t max_curves = 20;
  ecm->add_option("N", nvalue, "Integer to factor")->required();
  ecm->add_option("--b1", b1, "Stage 1 bound");
  ecm->add_option("--b2", b2, "Stage 2 bound (0 disables stage 2)");
  ecm->add_option("--curves", ecurves,
                  "catalog:all | catalog:E0,... | family:<name>:p1,...");
  ecm->add_option("--max-curves", max_curves, "Curve budget");
  ecm->add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  // count
  auto* count = app.add_subcommand("count", "|E(F_p)| at a good prime");
  std::string ccurve;
  std::uint64_t prime = 0;
  count->add_option("--curve", ccurve, "Catalog label or record file path")
      ->required();
  count->add_option("--p", prime, "Prime p > 3")->required();

  // catalog
  auto* cat = app.add_subcommand("catalog", "Print the curve catalog");
  bool labels_only = false;
  cat->add_flag("--labels", labels_only, "Labels only");

  CLI11_PARSE(app, argc, argv);

  if (census->parsed()) {
    std::size_t lo = 50, hi = 10050;
    if (std::sscanf(range.c_str(), "%zu:%zu", &lo, &hi) != 2) {
      std::cerr << "--range must be lo:hi\n";
      return 1;
    }
    StringOut out;
    if (tecm_census(sets.c_str(), curve_sel.c_str(), lo, hi, bound, workers,
                    format == "csv" ? 1 : 0, &out.s) != TECM_OK)
      die("census");
    write_output(out.str(), out_path);
    return 0;
  }

  if (gen->parsed()) {
    StringOut out;
    if (tecm_gen(family.c_str(), param.c_str(),
                 zval.empty() ? nullptr : zval.c_str(), &out.s) != TECM_OK)
      die("gen");
    std::cout << out.str();
    return 0;
  }

  if (verify->parsed()) {
    CurveHandle curve;
    load_curve(vcurve, curve);
    int verdict = 0;
    StringOut report;
    if (check == "injection") {
      if (tecm_verify_injection(curve.c, order, split.c_str(), sample,
                                &verdict, &report.s) != TECM_OK)
        die("verify injection");
      std::cout << report.str();
      return verdict ? 0 : 1;
    }
    if (check == "nontorsion") {
      if (tecm_verify_nontorsion(curve.c, x1.c_str(), y1.c_str(), &verdict,
                                 &report.s) != TECM_OK)
        die("verify nontorsion");
      std::cout << report.str();
      return verdict ? 0 : 2;  // inconclusive, not disproof
    }
    if (tecm_verify_independence(curve.c, x1.c_str(), y1.c_str(), x2.c_str(),
                                 y2.c_str(), ibound, &verdict,
                                 &report.s) != TECM_OK)
      die("verify independence");
    std::cout << report.str();
    return verdict ? 0 : 1;
  }

  if (ecm->parsed()) {
    StringOut stripped, removed;
    if (tecm_strip_23(nvalue.c_str(), &stripped.s, &removed.s) != TECM_OK)
      die("ecm");
    std::string n = stripped.str();
    if (!removed.str().empty())
      std::cout << "stripped small factors: " << removed.str() << "\n";
    if (n == "1") {
      std::cout << "fully factored by stripping\n";
      return 0;
    }
    int found = 0;
    StringOut out;
    if (tecm_ecm(n.c_str(), b1, b2, max_curves, ecurves.c_str(), &found,
                 &out.s) != TECM_OK)
      die("ecm");
    std::cout << out.str();
    if (found) return 0;
    return out.str().rfind("collapse", 0) == 0 ? 1 : 2;
  }

  if (count->parsed()) {
    CurveHandle curve;
    load_curve(ccurve, curve);
    std::uint64_t result = 0;
    if (tecm_count(curve.c, prime, &result) != TECM_OK) die("count");
    std::cout << result << "\n";
    return 0;
  }

  if (cat->parsed()) {
    StringOut out;
    tecm_status rc =
        labels_only ? tecm_catalog_labels(&out.s) : tecm_catalog_text(&out.s);
    if (rc != TECM_OK) die("catalog");
    std::cout << out.str();
    return 0;
  }

  return 0;
}
