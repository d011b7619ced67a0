#include "torsecm.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "torsecm/census.hpp"
#include "torsecm/counting.hpp"
#include "torsecm/ec_core.hpp"
#include "torsecm/ecm.hpp"
#include "torsecm/families.hpp"
#include "torsecm/verify.hpp"

using namespace torsecm;

struct tecm_curve {
  RationalWeierstrass curve;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
tecm_status guarded(Fn&& fn) {
  try {
    fn();
    return TECM_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TECM_ERR;
  } catch (...) {
    g_last_error = "unknown error";
    return TECM_ERR;
  }
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// The eight curves the census table is defined over.
std::vector<std::string> census_labels() {
  return {"E0", "E7", "E9", "E12", "E2x8", "E4x8", "E5x5", "E6x6"};
}

RationalPoint parse_point(const char* x, const char* y) {
  if (!x || !y) throw Error("point coordinates required");
  return RationalPoint::affine(parse_rational(x), parse_rational(y));
}

}  // namespace

extern "C" {

const char* tecm_last_error(void) { return g_last_error.c_str(); }

void tecm_string_free(char* s) { std::free(s); }

tecm_status tecm_curve_parse(const char* record, tecm_curve** out) {
  return guarded([&] {
    if (!record || !out) throw Error("null argument");
    *out = new tecm_curve{RationalWeierstrass::from_record(record)};
  });
}

tecm_status tecm_curve_catalog(const char* label, tecm_curve** out) {
  return guarded([&] {
    if (!label || !out) throw Error("null argument");
    *out = new tecm_curve{catalog_entry(label).curve};
  });
}

tecm_status tecm_curve_record(const tecm_curve* curve, char** out) {
  return guarded([&] {
    if (!curve || !out) throw Error("null argument");
    *out = dup_string(curve->curve.to_record());
  });
}

void tecm_curve_free(tecm_curve* curve) { delete curve; }

tecm_status tecm_catalog_labels(char** out) {
  return guarded([&] {
    if (!out) throw Error("null argument");
    std::ostringstream os;
    for (const auto& label : catalog_labels()) os << label << "\n";
    *out = dup_string(os.str());
  });
}

tecm_status tecm_catalog_text(char** out) {
  return guarded([&] {
    if (!out) throw Error("null argument");
    *out = dup_string(catalog_to_text());
  });
}

tecm_status tecm_count(const tecm_curve* curve, uint64_t p, uint64_t* out) {
  return guarded([&] {
    if (!curve || !out) throw Error("null argument");
    *out = count_bsgs(reduce_mod(curve->curve, p));
  });
}

tecm_status tecm_census(const char* sets, const char* curves, size_t lo,
                        size_t hi, uint64_t bound, int workers, int csv,
                        char** out) {
  return guarded([&] {
    if (!sets || !curves || !out) throw Error("null argument");
    if (lo < 1 || hi < lo) throw Error("census: bad index range");
    std::vector<PrimeSetSpec> specs;
    for (const auto& s : split_csv(sets)) {
      if (s.size() != 1) throw Error("census: bad set label " + s);
      PrimeSetSpec spec = PrimeSetSpec::standard(s[0]);
      spec.range = PrimeIndexRange{lo, hi};
      specs.push_back(spec);
    }
    std::vector<std::string> labels = std::string(curves) == "all"
                                          ? census_labels()
                                          : split_csv(curves);
    std::vector<LabeledCurve> lcs;
    for (const auto& label : labels)
      lcs.push_back({label, catalog_entry(label).curve});
    CensusReport report =
        run_census(lcs, specs, SmoothBound{bound}, workers);
    *out = dup_string(
        emit_report(report, csv ? ReportFormat::Csv : ReportFormat::Table));
  });
}

tecm_status tecm_gen(const char* family, const char* param, const char* z,
                     char** out) {
  return guarded([&] {
    if (!family || !param || !out) throw Error("null argument");
    std::string fam(family);
    Rat t = parse_rational(param);
    std::ostringstream os;
    if (fam == "4x8") {
      auto g = gen_4x8(t);
      os << "curve: " << g.curve.to_record() << "\n";
      os << "field: " << g.point_field << "\n";
    } else if (fam == "3x3") {
      auto g = gen_3x3_rank2(t);
      os << "curve: " << g.curve.to_record() << "\n";
      os << "P1: (" << g.p1.x.get_str() << "," << g.p1.y.get_str() << ")\n";
      os << "P2: (" << g.p2.x.get_str() << "," << g.p2.y.get_str() << ")\n";
    } else if (fam == "rab3x3") {
      auto g = rabarison_3x3(t);
      os << "curve: " << g.curve.to_record() << "\n";
      for (const auto& p : g.torsion_points)
        os << "torsion: (" << p.x.get_str() << "," << p.y.get_str() << ")\n";
      os << "point: (" << g.free_point.x.get_str() << ","
         << g.free_point.y.get_str() << ")\n";
    } else if (fam == "5x5") {
      auto g = fivefive_family(t);
      os << "curve: " << g.curve.to_record() << "\n";
      os << "extra_point_condition: " << g.extra_point_condition.get_str()
         << "\n";
    } else if (fam.rfind("3x6:", 0) == 0 || fam.rfind("6x6:", 0) == 0) {
      Variant3x6 v = parse_variant_3x6(fam.substr(4));
      if (!z || !*z)
        throw Error("gen: --z required for the 3x6/6x6 families");
      Rat zr = parse_rational(z);
      if (fam.rfind("6x6:", 0) == 0) {
        auto g = gen_6x6(t, v, zr);
        os << "curve: " << g.curve.to_record() << "\n";
        os << "field: " << g.field << "\n";
      } else {
        auto g = gen_3x6(t, v, zr);
        os << "curve: " << g.curve.to_record() << "\n";
        os << "point: (" << g.point.x.get_str() << ","
           << g.point.y.get_str() << ")\n";
      }
    } else {
      throw Error("gen: unknown family " + fam);
    }
    *out = dup_string(os.str());
  });
}

tecm_status tecm_verify_injection(const tecm_curve* curve, uint64_t order,
                                  const char* split, size_t sample,
                                  int* pass, char** report) {
  return guarded([&] {
    if (!curve || !pass) throw Error("null argument");
    SplitPredicate pred;
    if (split && *split) pred.conditions = parse_conditions(split);
    InjectionReport r =
        torsion_injection_check(curve->curve, order, pred, sample);
    *pass = r.pass ? 1 : 0;
    if (report) {
      std::ostringstream os;
      os << "injection order=" << r.torsion_order
         << " primes_tested=" << r.primes_tested
         << " verdict=" << (r.pass ? "pass" : "fail") << "\n";
      for (auto p : r.failures) os << "failure p=" << p << "\n";
      *report = dup_string(os.str());
    }
  });
}

tecm_status tecm_verify_nontorsion(const tecm_curve* curve, const char* x,
                                   const char* y, int* verdict,
                                   char** report) {
  return guarded([&] {
    if (!curve || !verdict) throw Error("null argument");
    auto cert = nontorsion_certificate(curve->curve, parse_point(x, y));
    *verdict = cert.verdict == CertVerdict::Pass ? 1 : 0;
    if (report) {
      std::ostringstream os;
      if (cert.verdict == CertVerdict::Pass) {
        os << "nontorsion pass: order " << cert.order_p.get_str() << " at p="
           << cert.p << ", order " << cert.order_q.get_str()
           << " at p=" << cert.q << " (lcm > 12)\n";
      } else {
        os << "nontorsion inconclusive (heuristic; does not prove "
              "torsion)\n";
      }
      *report = dup_string(os.str());
    }
  });
}

tecm_status tecm_verify_independence(const tecm_curve* curve, const char* x1,
                                     const char* y1, const char* x2,
                                     const char* y2, long bound, int* pass,
                                     char** report) {
  return guarded([&] {
    if (!curve || !pass) throw Error("null argument");
    auto r = independence_heuristic(curve->curve, parse_point(x1, y1),
                                    parse_point(x2, y2), bound);
    *pass = r.pass ? 1 : 0;
    if (report) {
      std::ostringstream os;
      if (r.pass)
        os << "independence heuristic pass (bound " << bound << ")\n";
      else
        os << "independence heuristic fail at (a,b)=(" << r.a << "," << r.b
           << ")\n";
      *report = dup_string(os.str());
    }
  });
}

tecm_status tecm_ecm(const char* n, uint64_t b1, uint64_t b2,
                     size_t max_curves, const char* curves, int* found,
                     char** out) {
  return guarded([&] {
    if (!n || !out || !found) throw Error("null argument");
    Int N;
    if (mpz_set_str(N.get_mpz_t(), n, 10) != 0)
      throw Error("ecm: N must be a decimal integer");
    EcmConfig config;
    config.b1 = b1;
    if (b2) config.b2 = b2;
    config.max_curves = max_curves;
    std::string spec = curves ? curves : "catalog:all";
    if (spec.rfind("catalog:", 0) == 0) {
      std::string rest = spec.substr(8);
      if (rest != "all") config.catalog_labels = split_csv(rest);
      if (rest != "all" && config.catalog_labels.empty())
        throw Error("ecm: empty catalog curve list");
    } else if (spec.rfind("family:", 0) == 0) {
      std::string rest = spec.substr(7);
      auto colon = rest.rfind(':');
      if (colon == std::string::npos)
        throw Error("ecm: family spec needs parameters, family:<name>:p1,...");
      config.family = rest.substr(0, colon);
      for (const auto& p : split_csv(rest.substr(colon + 1)))
        config.family_params.push_back(parse_rational(p));
      if (config.family_params.empty())
        throw Error("ecm: empty family parameter list");
    } else {
      throw Error("ecm: curve spec must start with catalog: or family:");
    }
    EcmReport report = ecm_run(N, config);
    *found = std::holds_alternative<EcmFactor>(report.outcome) ? 1 : 0;
    std::ostringstream os;
    os << format_outcome(report.outcome) << "\n";
    for (const auto& s : report.skipped)
      os << "skip: " << s.curve << ": " << s.reason << "\n";
    *out = dup_string(os.str());
  });
}

tecm_status tecm_strip_23(const char* n, char** stripped, char** removed) {
  return guarded([&] {
    if (!n || !stripped || !removed) throw Error("null argument");
    Int N;
    if (mpz_set_str(N.get_mpz_t(), n, 10) != 0 || N < 1)
      throw Error("strip: N must be a positive decimal integer");
    std::ostringstream os;
    for (unsigned long q : {2ul, 3ul}) {
      while (mpz_divisible_ui_p(N.get_mpz_t(), q)) {
        mpz_divexact_ui(N.get_mpz_t(), N.get_mpz_t(), q);
        if (os.tellp() > 0) os << " ";
        os << q;
      }
    }
    *stripped = dup_string(N.get_str());
    *removed = dup_string(os.str());
  });
}

uint64_t tecm_sieve_limit(void) { return Sieve::shared().limit(); }

}  // extern "C"
