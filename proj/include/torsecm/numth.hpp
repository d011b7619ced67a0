#ifndef TORSECM_NUMTH_HPP
#define TORSECM_NUMTH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace torsecm {

using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class CapacityError : public Error {
 public:
  using Error::Error;
};

// 1-based prime index range, p_1 = 2.
struct PrimeIndexRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

struct SmoothBound {
  std::uint64_t bound = 2;
};

// Eratosthenes sieve with a fixed capacity.  The shared instance covers
// p_10050 with headroom; TORSECM_SIEVE_LIMIT overrides the default.
class Sieve {
 public:
  explicit Sieve(std::uint64_t limit);

  static const Sieve& shared();

  std::uint64_t limit() const { return limit_; }
  std::size_t prime_count() const { return primes_.size(); }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  std::uint64_t nth_prime(std::size_t n) const;  // 1-based
  std::vector<std::uint64_t> nth_primes(PrimeIndexRange r) const;
  // primes q with q <= bound
  std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
};

constexpr std::uint64_t kDefaultSieveLimit = 200000;

// Kronecker-free Jacobi symbol: n odd positive, computed by the
// quadratic-reciprocity recursion.
int jacobi(Int a, Int n);

// Legendre symbol (a/p), p an odd prime.  0 iff p | a.
int legendre(const Int& a, const Int& p);
int legendre_u64(std::uint64_t a, std::uint64_t p);

// true iff every prime divisor of m is <= b.bound (m = 1 is smooth).
bool is_smooth(const Int& m, SmoothBound b);
bool is_smooth_u64(std::uint64_t m, std::uint64_t bound);

struct ModInv {
  bool ok = false;
  Int value;  // inverse when ok
  Int g;      // gcd(a mod n, n) > 1 when !ok
};

// Inverse of a mod n, or the blocking gcd.  Not-invertible is a normal
// outcome (the ECM factor channel), never an exception.
ModInv mod_inv(const Int& a, const Int& n);

bool is_probable_prime(const Int& n);

// Factorization by trial division plus Pollard rho; exponential only for
// adversarial inputs, fine for the denominators and orders handled here.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

// d with n = d * square, d squarefree (sign preserved).
Int squarefree_kernel(const Int& n);

// Exact rational square root when one exists.
std::optional<Rat> rational_sqrt(const Rat& q);
std::optional<Int> integer_sqrt_exact(const Int& n);

Rat parse_rational(const std::string& text);

namespace fastmod {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// 0 when not invertible
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
// square root mod odd prime p (Tonelli-Shanks); a must be a QR
std::uint64_t sqrtmod(std::uint64_t a, std::uint64_t p);

}  // namespace fastmod

}  // namespace torsecm

#endif
