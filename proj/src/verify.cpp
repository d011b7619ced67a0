#include "torsecm/verify.hpp"

#include <cstdlib>

#include "torsecm/counting.hpp"

namespace torsecm {

namespace {

// Good primes (p > 3, p coprime to the integral discriminant) in sieve
// order, starting from p_3 = 5.
template <typename Fn>
void for_good_primes(const RationalWeierstrass& e, Fn&& fn,
                     const Sieve& sieve = Sieve::shared()) {
  for (std::size_t i = 2; i < sieve.prime_count(); ++i) {
    std::uint64_t p = sieve.nth_prime(i + 1);
    try {
      ModCurve c = reduce_mod(e, p);
      if (!fn(p, c)) return;
    } catch (const BadReductionError&) {
    }
  }
}

// Reduction of a rational point into E(F_p); empty when a denominator is
// divisible by p.
std::optional<ModPoint> reduce_pt(const RationalWeierstrass& e,
                                  const RationalPoint& pt, std::uint64_t p) {
  auto r = reduce_point(e, pt, Int(static_cast<unsigned long>(p)));
  if (std::holds_alternative<FactorFound>(r)) return std::nullopt;
  return std::get<ModPoint>(r);
}

}  // namespace

InjectionReport torsion_injection_check(const RationalWeierstrass& e,
                                        std::uint64_t claimed_order,
                                        const SplitPredicate& split,
                                        std::size_t sample,
                                        const Sieve& sieve) {
  if (sample < 1) throw Error("torsion_injection_check: sample must be >= 1");
  InjectionReport report;
  report.torsion_order = claimed_order;
  for (std::uint64_t p : sieve.nth_primes(PrimeIndexRange{50, 10050})) {
    if (report.primes_tested == sample) break;
    if (!split.admits(p)) continue;
    ModCurve c;
    try {
      c = reduce_mod(e, p);
    } catch (const BadReductionError&) {
      continue;
    }
    ++report.primes_tested;
    if (count_bsgs(c) % claimed_order != 0) report.failures.push_back(p);
  }
  if (report.primes_tested < sample)
    throw InsufficientPrimesError(
        "torsion_injection_check: fewer qualifying primes than requested");
  report.pass = report.failures.empty();
  return report;
}

NontorsionCertificate nontorsion_certificate(const RationalWeierstrass& e,
                                             const RationalPoint& pt) {
  if (pt.infinity)
    throw Error("nontorsion_certificate: point at infinity is torsion");
  if (!e.contains(pt))
    throw Error("nontorsion_certificate: point not on curve");
  NontorsionCertificate cert;
  std::vector<std::pair<std::uint64_t, Int>> seen;
  for_good_primes(e, [&](std::uint64_t p, const ModCurve& c) {
    auto reduced = reduce_pt(e, pt, p);
    if (!reduced || reduced->infinity) return true;
    Int order = point_order(c, *reduced, Int(count_bsgs(c)));
    for (const auto& [q, oq] : seen) {
      Int l;
      mpz_lcm(l.get_mpz_t(), order.get_mpz_t(), oq.get_mpz_t());
      if (l > 12) {
        cert.verdict = CertVerdict::Pass;
        cert.p = q;
        cert.q = p;
        cert.order_p = oq;
        cert.order_q = order;
        return false;
      }
    }
    seen.emplace_back(p, order);
    return seen.size() < 20;
  });
  return cert;
}

IndependenceResult independence_heuristic(const RationalWeierstrass& e,
                                          const RationalPoint& p1,
                                          const RationalPoint& p2,
                                          long bound) {
  if (bound < 1) throw Error("independence_heuristic: bound must be >= 1");
  // Fixed panel: the first 10 good primes where both points reduce
  // cleanly.  Reduction is a homomorphism, so a P1 + b P2 is computed
  // directly in E(F_p).
  struct PanelEntry {
    ModCurve c;
    ModPoint r1, r2;
  };
  std::vector<PanelEntry> panel;
  for_good_primes(e, [&](std::uint64_t p, const ModCurve& c) {
    auto r1 = reduce_pt(e, p1, p);
    auto r2 = reduce_pt(e, p2, p);
    if (!r1 || !r2) return true;
    panel.push_back({c, *r1, *r2});
    return panel.size() < 10;
  });
  if (panel.size() < 10)
    throw InsufficientPrimesError("independence_heuristic: panel too small");

  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      if (a == 0 && b == 0) continue;
      bool nonidentity = false;
      for (const auto& entry : panel) {
        ModPoint s1 = entry.r1, s2 = entry.r2;
        if (a < 0) s1 = mod_negate(entry.c, s1);
        if (b < 0) s2 = mod_negate(entry.c, s2);
        auto t1 = mod_scalar_mul(entry.c, Int(std::abs(a)), s1);
        auto t2 = mod_scalar_mul(entry.c, Int(std::abs(b)), s2);
        // prime modulus: FactorFound cannot occur for on-curve points
        auto sum =
            mod_add(entry.c, std::get<ModPoint>(t1), std::get<ModPoint>(t2));
        if (!std::get<ModPoint>(sum).infinity) {
          nonidentity = true;
          break;
        }
      }
      if (!nonidentity) return IndependenceResult{false, a, b};
    }
  }
  return IndependenceResult{true, 0, 0};
}

std::optional<RankWitness> rank_witness_search(const RationalWeierstrass& e,
                                               const std::vector<Int>& twists,
                                               long height_bound) {
  if (!e.is_short())
    throw Error("rank_witness_search: curve must be in short form");
  if (height_bound < 1)
    throw Error("rank_witness_search: height bound must be >= 1");

  std::vector<Int> path{1};
  for (const Int& d : twists) path.push_back(d);

  for (const Int& d : path) {
    RationalWeierstrass curve = d == 1 ? e : e.quadratic_twist(d);
    const Rat& A = curve.a4();
    const Rat& B = curve.a6();
    for (long b = 1; b <= height_bound; ++b) {
      for (long a = -height_bound * height_bound;
           a <= height_bound * height_bound; ++a) {
        Rat x = Rat(a) / (Rat(b) * b);  // x = a / b^2
        Rat rhs = x * x * x + A * x + B;
        auto y = rational_sqrt(rhs);
        if (!y) continue;
        RationalPoint pt = RationalPoint::affine(x, *y);
        auto cert = nontorsion_certificate(curve, pt);
        if (cert.verdict == CertVerdict::Pass)
          return RankWitness{d, pt};
      }
    }
  }
  return std::nullopt;
}

}  // namespace torsecm
