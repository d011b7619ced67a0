#ifndef TORSECM_VERIFY_HPP
#define TORSECM_VERIFY_HPP

#include <optional>
#include <vector>

#include "torsecm/census.hpp"
#include "torsecm/ec_core.hpp"

namespace torsecm {

class InsufficientPrimesError : public Error {
 public:
  using Error::Error;
};

// Conjunction of Legendre / congruence conditions marking the primes that
// split completely in the relevant field.  Empty = all primes.
struct SplitPredicate {
  std::vector<Condition> conditions;

  bool admits(std::uint64_t p) const {
    for (const auto& c : conditions)
      if (!condition_holds(c, p)) return false;
    return true;
  }
};

struct InjectionReport {
  std::uint64_t torsion_order = 1;
  std::size_t primes_tested = 0;
  std::vector<std::uint64_t> failures;
  bool pass = false;
};

// Checks claimed_order | |E(F_p)| over the first `sample` good primes of
// the census index range satisfying `split`.
InjectionReport torsion_injection_check(const RationalWeierstrass& e,
                                        std::uint64_t claimed_order,
                                        const SplitPredicate& split,
                                        std::size_t sample,
                                        const Sieve& sieve = Sieve::shared());

enum class CertVerdict { Pass, Inconclusive };

struct NontorsionCertificate {
  CertVerdict verdict = CertVerdict::Inconclusive;
  std::uint64_t p = 0, q = 0;  // witness primes when pass
  Int order_p, order_q;        // lcm(order_p, order_q) > 12 when pass
};

// Empirical infinite-order certificate: two good primes where the
// reduction orders have lcm exceeding the rational torsion bound 12.
// Inconclusive after 20 candidate primes (heuristic; does NOT prove
// torsion).
NontorsionCertificate nontorsion_certificate(const RationalWeierstrass& e,
                                             const RationalPoint& pt);

struct IndependenceResult {
  bool pass = false;
  long a = 0, b = 0;  // violating combination when fail
};

// Heuristic: every combination a P1 + b P2 with |a|,|b| <= bound,
// (a,b) != (0,0), is nonidentity at some prime of a fixed 10-prime panel.
IndependenceResult independence_heuristic(const RationalWeierstrass& e,
                                          const RationalPoint& p1,
                                          const RationalPoint& p2,
                                          long bound);

struct RankWitness {
  Int d;  // twist multiplier (1 = the curve itself)
  RationalPoint point;
};

// Deterministic bounded search for a nontorsion point with x = a/b^2,
// |a| <= height_bound^2, 1 <= b <= height_bound, over the short-form
// curve and each listed quadratic twist, in order.
std::optional<RankWitness> rank_witness_search(const RationalWeierstrass& e,
                                               const std::vector<Int>& twists,
                                               long height_bound);

}  // namespace torsecm

#endif
