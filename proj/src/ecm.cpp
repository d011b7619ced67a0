#include "torsecm/ecm.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "torsecm/families.hpp"
#include "torsecm/verify.hpp"

namespace torsecm {

void EcmConfig::validate() const {
  if (b1 < 2) throw BadEcmInputError("ecm: B1 must be >= 2");
  if (b2 && *b2 <= b1) throw BadEcmInputError("ecm: B2 must exceed B1");
  if (max_curves < 1) throw BadEcmInputError("ecm: max_curves must be >= 1");
  if (!family.empty() && !catalog_labels.empty())
    throw BadEcmInputError("ecm: choose either catalog labels or a family");
  if (family.empty() && !family_params.empty())
    throw BadEcmInputError("ecm: family parameters need a family");
}

namespace {

void check_modulus(const Int& n) {
  if (n < 4) throw BadEcmInputError("ecm: N must be >= 4");
  Int g;
  mpz_gcd_ui(g.get_mpz_t(), n.get_mpz_t(), 6);
  if (g != 1)
    throw BadEcmInputError("ecm: gcd(N, 6) must be 1 (strip 2s and 3s first)");
}

// FactorFound -> terminal stage result.
StageResult factor_result(const Int& g, const Int& n, int stage) {
  if (g == n) return EcmFullCollapse{};
  return EcmFactor{g, "", stage};
}

const Sieve& sieve_for(std::uint64_t bound, std::unique_ptr<Sieve>& local) {
  if (bound <= Sieve::shared().limit()) return Sieve::shared();
  local = std::make_unique<Sieve>(bound + 1);
  return *local;
}

}  // namespace

StageResult stage1(const Int& n, const RationalWeierstrass& e,
                   const RationalPoint& p, std::uint64_t b1) {
  check_modulus(n);
  auto rc = reduce_mod_n(e, n);
  if (const auto* f = std::get_if<FactorFound>(&rc))
    return factor_result(f->g, n, 1);
  auto rp = reduce_point(e, p, n);
  if (const auto* f = std::get_if<FactorFound>(&rp))
    return factor_result(f->g, n, 1);
  ModCurve c = std::get<ModCurve>(rc);
  ModPoint pt = std::get<ModPoint>(rp);

  std::unique_ptr<Sieve> local;
  const Sieve& sieve = sieve_for(b1, local);
  for (std::uint64_t q : sieve.primes_up_to(b1)) {
    unsigned long reps = 1;  // floor(log_q b1)
    for (std::uint64_t qe = q; qe <= b1 / q; qe *= q) ++reps;
    for (unsigned long i = 0; i < reps; ++i) {
      auto r = mod_scalar_mul(c, Int(static_cast<unsigned long>(q)), pt);
      if (const auto* f = std::get_if<FactorFound>(&r))
        return factor_result(f->g, n, 1);
      pt = std::get<ModPoint>(r);
    }
  }
  return Survived{c, pt};
}

StageResult stage2(const Int& n, const Survived& s, std::uint64_t b1,
                   std::uint64_t b2) {
  check_modulus(n);
  if (b2 <= b1) return s;
  std::unique_ptr<Sieve> local;
  const Sieve& sieve = sieve_for(b2, local);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q : sieve.primes_up_to(b2))
    if (q > b1) primes.push_back(q);
  if (primes.empty() || s.point.infinity) return s;

  const ModCurve& c = s.curve;
  // gap table: d * P for the even prime gaps, built from 2P increments
  std::map<std::uint64_t, ModPoint> gap_multiple;
  auto multiple = [&](std::uint64_t d) -> std::variant<ModPoint, FactorFound> {
    auto it = gap_multiple.find(d);
    if (it != gap_multiple.end()) return it->second;
    auto r = mod_scalar_mul(c, Int(static_cast<unsigned long>(d)), s.point);
    if (const auto* f = std::get_if<FactorFound>(&r)) return *f;
    gap_multiple.emplace(d, std::get<ModPoint>(r));
    return std::get<ModPoint>(r);
  };

  auto first = mod_scalar_mul(c, Int(static_cast<unsigned long>(primes[0])),
                              s.point);
  if (const auto* f = std::get_if<FactorFound>(&first))
    return factor_result(f->g, n, 2);
  ModPoint running = std::get<ModPoint>(first);
  for (std::size_t i = 1; i < primes.size(); ++i) {
    auto inc = multiple(primes[i] - primes[i - 1]);
    if (const auto* f = std::get_if<FactorFound>(&inc))
      return factor_result(f->g, n, 2);
    auto sum = mod_add(c, running, std::get<ModPoint>(inc));
    if (const auto* f = std::get_if<FactorFound>(&sum))
      return factor_result(f->g, n, 2);
    running = std::get<ModPoint>(sum);
  }
  return Survived{c, running};
}

namespace {

struct SourcedCurve {
  std::string label;
  RationalWeierstrass curve;
  std::vector<RationalPoint> points;  // may be empty, searched later
};

std::vector<SourcedCurve> expand_family(const EcmConfig& config,
                                        std::vector<EcmSkip>& skipped) {
  std::vector<SourcedCurve> out;
  const std::string& fam = config.family;
  for (const Rat& param : config.family_params) {
    std::string label = fam + ":" + param.get_str();
    try {
      if (fam == "4x8") {
        out.push_back({label, gen_4x8(param).curve, {}});
      } else if (fam == "3x3") {
        auto g = gen_3x3_rank2(param);
        out.push_back({label, g.curve, {g.p1, g.p2}});
      } else if (fam == "rab3x3") {
        auto g = rabarison_3x3(param);
        out.push_back({label, g.curve, {g.free_point}});
      } else if (fam == "5x5") {
        out.push_back({label, fivefive_family(param).curve, {}});
      } else if (fam.rfind("3x6:", 0) == 0) {
        Variant3x6 v = parse_variant_3x6(fam.substr(4));
        auto z = rational_sqrt(cond_3x6(param, v));
        if (!z) {
          skipped.push_back({label, "variant condition is not a square"});
          continue;
        }
        auto g = gen_3x6(param, v, *z);
        out.push_back({label, g.curve, {g.point}});
      } else {
        throw BadEcmInputError("ecm: unknown family " + fam);
      }
    } catch (const DegenerateParameterError& err) {
      skipped.push_back({label, err.what()});
    } catch (const SingularCurveError& err) {
      skipped.push_back({label, err.what()});
    }
  }
  return out;
}

std::vector<SourcedCurve> source_curves(const EcmConfig& config,
                                        std::vector<EcmSkip>& skipped) {
  std::vector<SourcedCurve> out;
  if (!config.family.empty()) return expand_family(config, skipped);
  std::vector<std::string> labels = config.catalog_labels;
  if (labels.empty()) labels = catalog_labels();
  for (const auto& label : labels) {
    const CatalogEntry& entry = catalog_entry(label);
    out.push_back({entry.label, entry.curve, entry.known_points});
  }
  return out;
}

}  // namespace

EcmReport ecm_run(const Int& n, const EcmConfig& config) {
  config.validate();
  check_modulus(n);
  EcmReport report{EcmExhausted{0}, {}};
  std::vector<SourcedCurve> curves = source_curves(config, report.skipped);

  std::size_t tried = 0;
  std::optional<std::string> collapsed;
  for (auto& sc : curves) {
    if (tried == config.max_curves) break;
    if (sc.points.empty()) {
      auto witness =
          rank_witness_search(sc.curve.is_short() ? sc.curve
                                                  : sc.curve.short_form(),
                              {}, 30);
      if (!witness) {
        report.skipped.push_back({sc.label, "no usable point"});
        continue;
      }
      if (!sc.curve.is_short()) sc.curve = sc.curve.short_form();
      sc.points.push_back(witness->point);
    }
    ++tried;
    for (const RationalPoint& pt : sc.points) {
      StageResult r = stage1(n, sc.curve, pt, config.b1);
      if (auto* surv = std::get_if<Survived>(&r); surv && config.b2)
        r = stage2(n, *surv, config.b1, *config.b2);
      if (auto* f = std::get_if<EcmFactor>(&r)) {
        f->curve = sc.label;
        report.outcome = *f;
        return report;
      }
      if (std::holds_alternative<EcmFullCollapse>(r)) collapsed = sc.label;
    }
  }
  if (collapsed)
    report.outcome = EcmFullCollapse{*collapsed};
  else
    report.outcome = EcmExhausted{tried};
  return report;
}

std::string format_outcome(const EcmOutcome& outcome) {
  std::ostringstream os;
  if (const auto* f = std::get_if<EcmFactor>(&outcome)) {
    os << "factor=" << f->g.get_str() << " curve=" << f->curve
       << " stage=" << f->stage;
  } else if (const auto* c = std::get_if<EcmFullCollapse>(&outcome)) {
    os << "collapse curve=" << c->curve;
  } else {
    os << "exhausted";
  }
  return os.str();
}

}  // namespace torsecm
