#include "torsecm/census.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <thread>

#include "torsecm/counting.hpp"

namespace torsecm {

bool condition_holds(const Condition& c, std::uint64_t p) {
  if (const auto* lc = std::get_if<LegendreCondition>(&c)) {
    return legendre(Int(static_cast<long>(lc->a)),
                    Int(static_cast<unsigned long>(p))) == lc->expected;
  }
  const auto& cc = std::get<CongruenceCondition>(c);
  return p % cc.modulus == cc.residue;
}

std::vector<Condition> parse_conditions(const std::string& text) {
  std::vector<Condition> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ';')) {
    // strip spaces
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty()) continue;
    if (item.front() == '(') {
      // (a/p)=1 or (a/p)=-1
      auto slash = item.find("/p)=");
      if (slash == std::string::npos)
        throw Error("bad legendre condition: " + item);
      long long a = std::stoll(item.substr(1, slash - 1));
      int expected = std::stoi(item.substr(slash + 4));
      if (expected != 1 && expected != -1)
        throw Error("legendre condition must equal 1 or -1: " + item);
      out.push_back(LegendreCondition{a, expected});
    } else if (item.rfind("p%", 0) == 0) {
      // p%m=r
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error("bad congruence: " + item);
      std::uint64_t m = std::stoull(item.substr(2, eq - 2));
      std::uint64_t r = std::stoull(item.substr(eq + 1));
      if (m < 2) throw Error("congruence modulus must be >= 2: " + item);
      out.push_back(CongruenceCondition{m, r});
    } else {
      throw Error("unrecognized condition: " + item);
    }
  }
  return out;
}

std::string conditions_to_text(const std::vector<Condition>& cs) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : cs) {
    if (!first) os << ";";
    first = false;
    if (const auto* lc = std::get_if<LegendreCondition>(&c))
      os << "(" << lc->a << "/p)=" << lc->expected;
    else {
      const auto& cc = std::get<CongruenceCondition>(c);
      os << "p%" << cc.modulus << "=" << cc.residue;
    }
  }
  return os.str();
}

PrimeSetSpec PrimeSetSpec::standard(char label) {
  PrimeSetSpec spec;
  spec.label = label;
  switch (label) {
    case 'A':
      break;
    case 'B':
      spec.conditions.push_back(LegendreCondition{-143, 1});
      break;
    case 'C':
      spec.conditions.push_back(LegendreCondition{-143, -1});
      break;
    case 'D':
      spec.conditions.push_back(CongruenceCondition{5, 1});
      break;
    case 'E':
      spec.conditions.push_back(LegendreCondition{-3, 1});
      spec.conditions.push_back(LegendreCondition{217, 1});
      break;
    case 'F':
      spec.conditions.push_back(LegendreCondition{-1, 1});
      spec.conditions.push_back(LegendreCondition{-7, 1});
      break;
    default:
      throw Error(std::string("unknown prime set label: ") + label);
  }
  return spec;
}

bool PrimeSetSpec::admits(std::uint64_t p) const {
  for (const auto& c : conditions)
    if (!condition_holds(c, p)) return false;
  return true;
}

std::vector<std::uint64_t> build_set(const PrimeSetSpec& spec,
                                     const Sieve& sieve) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : sieve.nth_primes(spec.range))
    if (spec.admits(p)) out.push_back(p);
  return out;
}

namespace {

struct CurveReduction {
  Int disc;  // integral model discriminant
  Int A, B;  // short integral coefficients
};

CurveReduction prepare(const RationalWeierstrass& e) {
  auto [em, s] = e.integral_model();
  (void)s;
  CurveReduction out;
  out.disc = Int(em.discriminant().get_num());
  if (em.is_short()) {
    out.A = Int(em.a4().get_num());
    out.B = Int(em.a6().get_num());
  } else {
    Rat sa = -27 * em.c4();
    Rat sb = -54 * em.c6();
    out.A = Int(sa.get_num());
    out.B = Int(sb.get_num());
  }
  return out;
}

}  // namespace

CensusReport run_census(const std::vector<LabeledCurve>& curves,
                        const std::vector<PrimeSetSpec>& sets,
                        SmoothBound bound, int workers, const Sieve& sieve) {
  if (workers < 1) workers = 1;
  CensusReport report;
  for (const auto& lc : curves) report.curve_labels.push_back(lc.label);
  for (const auto& s : sets) report.set_labels.push_back(s.label);

  // union of primes over all set ranges
  std::size_t lo = SIZE_MAX, hi = 0;
  for (const auto& s : sets) {
    lo = std::min(lo, s.range.lo);
    hi = std::max(hi, s.range.hi);
  }
  std::vector<std::uint64_t> primes =
      sets.empty() ? std::vector<std::uint64_t>{}
                   : sieve.nth_primes(PrimeIndexRange{lo, hi});

  report.cells.assign(curves.size(),
                      std::vector<std::uint64_t>(sets.size(), 0));
  report.set_sizes.assign(sets.size(), 0);
  for (std::size_t j = 0; j < sets.size(); ++j)
    report.set_sizes[j] = build_set(sets[j], sieve).size();

  enum : std::uint8_t { kNotSmooth = 0, kSmooth = 1, kBad = 2 };
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    CurveReduction red = prepare(curves[ci].curve);
    std::vector<std::uint8_t> status(primes.size(), kNotSmooth);
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        std::uint64_t p = primes[i];
        if (mpz_divisible_ui_p(red.disc.get_mpz_t(), p)) {
          status[i] = kBad;
          continue;
        }
        Int pp(static_cast<unsigned long>(p));
        ModCurve c{pp, red.A % pp, red.B % pp};
        if (c.A < 0) c.A += pp;
        if (c.B < 0) c.B += pp;
        std::uint64_t order = count_bsgs(c);
        status[i] = is_smooth_u64(order, bound.bound) ? kSmooth : kNotSmooth;
      }
    };
    if (workers == 1 || primes.size() < 64) {
      work(0, primes.size());
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (primes.size() + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        std::size_t b = std::min(primes.size(), w * chunk);
        std::size_t e = std::min(primes.size(), b + chunk);
        if (b < e) pool.emplace_back(work, b, e);
      }
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (status[i] == kBad) {
        report.skipped.push_back(
            {curves[ci].label, primes[i], "bad reduction"});
        continue;
      }
      if (status[i] != kSmooth) continue;
      std::size_t index = lo + i;  // 1-based prime index of primes[i]
      for (std::size_t j = 0; j < sets.size(); ++j) {
        const auto& s = sets[j];
        if (index >= s.range.lo && index <= s.range.hi &&
            s.admits(primes[i]))
          ++report.cells[ci][j];
      }
    }
  }
  return report;
}

std::string emit_report(const CensusReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Csv) {
    os << "curve,set,count,set_size\n";
    for (std::size_t i = 0; i < r.curve_labels.size(); ++i)
      for (std::size_t j = 0; j < r.set_labels.size(); ++j)
        os << r.curve_labels[i] << "," << r.set_labels[j] << ","
           << r.cells[i][j] << "," << r.set_sizes[j] << "\n";
    return os.str();
  }
  os << std::left << std::setw(10) << "curve";
  for (char s : r.set_labels) os << std::right << std::setw(8) << s;
  os << "\n";
  for (std::size_t i = 0; i < r.curve_labels.size(); ++i) {
    os << std::left << std::setw(10) << r.curve_labels[i];
    for (std::size_t j = 0; j < r.set_labels.size(); ++j)
      os << std::right << std::setw(8) << r.cells[i][j];
    os << "\n";
  }
  if (!r.skipped.empty()) {
    os << "skipped (bad reduction):\n";
    for (const auto& s : r.skipped)
      os << "  " << s.curve << " p=" << s.p << " " << s.reason << "\n";
  }
  return os.str();
}

}  // namespace torsecm
