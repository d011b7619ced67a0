#ifndef TORSECM_CENSUS_HPP
#define TORSECM_CENSUS_HPP

#include <variant>
#include <vector>

#include "torsecm/ec_core.hpp"

namespace torsecm {

struct LegendreCondition {
  long long a = 0;
  int expected = 1;  // +1 or -1
};
struct CongruenceCondition {
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
};
using Condition = std::variant<LegendreCondition, CongruenceCondition>;

bool condition_holds(const Condition& c, std::uint64_t p);
std::vector<Condition> parse_conditions(const std::string& text);
std::string conditions_to_text(const std::vector<Condition>& cs);

// One of the labeled prime sets A-F: an index range plus Legendre /
// congruence membership conditions.
struct PrimeSetSpec {
  char label = 'A';
  PrimeIndexRange range{50, 10050};
  std::vector<Condition> conditions;

  static PrimeSetSpec standard(char label);
  bool admits(std::uint64_t p) const;
};

std::vector<std::uint64_t> build_set(const PrimeSetSpec& spec,
                                     const Sieve& sieve = Sieve::shared());

struct CensusSkip {
  std::string curve;
  std::uint64_t p = 0;
  std::string reason;
};

struct CensusReport {
  std::vector<std::string> curve_labels;
  std::vector<char> set_labels;
  // cells[curve][set] = number of primes in the set with smooth order
  std::vector<std::vector<std::uint64_t>> cells;
  std::vector<std::uint64_t> set_sizes;
  std::vector<CensusSkip> skipped;
};

struct LabeledCurve {
  std::string label;
  RationalWeierstrass curve;
};

CensusReport run_census(const std::vector<LabeledCurve>& curves,
                        const std::vector<PrimeSetSpec>& sets,
                        SmoothBound bound, int workers = 1,
                        const Sieve& sieve = Sieve::shared());

enum class ReportFormat { Table, Csv };
std::string emit_report(const CensusReport& r, ReportFormat format);

}  // namespace torsecm

#endif
