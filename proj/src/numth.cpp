#include "torsecm/numth.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <random>

namespace torsecm {

Sieve::Sieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw Error("sieve limit must be >= 2");
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (!composite[i]) primes_.push_back(i);
}

const Sieve& Sieve::shared() {
  static const Sieve instance = [] {
    std::uint64_t limit = kDefaultSieveLimit;
    if (const char* env = std::getenv("TORSECM_SIEVE_LIMIT")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v >= 2) limit = v;
    }
    return Sieve(limit);
  }();
  return instance;
}

std::uint64_t Sieve::nth_prime(std::size_t n) const {
  if (n == 0) throw Error("prime index is 1-based");
  if (n > primes_.size())
    throw CapacityError("prime index " + std::to_string(n) +
                        " beyond sieve capacity (limit " +
                        std::to_string(limit_) + ", " +
                        std::to_string(primes_.size()) + " primes)");
  return primes_[n - 1];
}

std::vector<std::uint64_t> Sieve::nth_primes(PrimeIndexRange r) const {
  if (r.lo == 0 || r.lo > r.hi) throw Error("bad prime index range");
  if (r.hi > primes_.size())
    throw CapacityError("prime index " + std::to_string(r.hi) +
                        " beyond sieve capacity");
  return std::vector<std::uint64_t>(primes_.begin() + (r.lo - 1),
                                    primes_.begin() + r.hi);
}

std::vector<std::uint64_t> Sieve::primes_up_to(std::uint64_t bound) const {
  if (bound > limit_) throw CapacityError("bound beyond sieve capacity");
  auto it = std::upper_bound(primes_.begin(), primes_.end(), bound);
  return std::vector<std::uint64_t>(primes_.begin(), it);
}

int jacobi(Int a, Int n) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t()))
    throw Error("jacobi: modulus must be odd and positive");
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a >>= 1;
      unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 &&
        mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
      result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int legendre(const Int& a, const Int& p) {
  if (p <= 1 || mpz_even_p(p.get_mpz_t()))
    throw Error("legendre: modulus must be an odd prime");
  return jacobi(a, p);
}

int legendre_u64(std::uint64_t a, std::uint64_t p) {
  return legendre(Int(static_cast<unsigned long>(a)),
                  Int(static_cast<unsigned long>(p)));
}

bool is_smooth(const Int& m, SmoothBound b) {
  if (m < 1) throw Error("is_smooth: m must be >= 1");
  if (b.bound < 2) throw Error("is_smooth: bound must be >= 2");
  Int rest = m;
  for (std::uint64_t q : Sieve::shared().primes_up_to(
           std::min<std::uint64_t>(b.bound, Sieve::shared().limit()))) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q))
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
    if (rest == 1) return true;
  }
  return rest == 1;
}

bool is_smooth_u64(std::uint64_t m, std::uint64_t bound) {
  if (m == 0) throw Error("is_smooth: m must be >= 1");
  for (std::uint64_t q : Sieve::shared().primes_up_to(bound)) {
    while (m % q == 0) m /= q;
    if (m == 1) return true;
  }
  return m == 1;
}

ModInv mod_inv(const Int& a, const Int& n) {
  if (n < 2) throw Error("mod_inv: modulus must be >= 2");
  ModInv out;
  Int r = a % n;
  if (r < 0) r += n;
  Int g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  if (g != 1) {
    out.ok = false;
    out.g = g;
    return out;
  }
  out.ok = true;
  mpz_invert(out.value.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  return out;
}

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
  // n odd composite, not a prime power of a tiny prime
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ mpz_fdiv_ui(n.get_mpz_t(), 1000003));
  while (true) {
    Int c = Int(static_cast<unsigned long>(rng() % 1000) + 1);
    Int x = Int(static_cast<unsigned long>(rng() % 1000) + 2);
    Int y = x, d = 1;
    auto step = [&](Int& v) { v = (v * v + c) % n; };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Int diff = x - y;
      if (diff == 0) break;  // cycle, retry with new c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 0 && d != 1 && d != n) return d;
  }
}

void factor_into(Int n, std::vector<std::pair<Int, unsigned>>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.emplace_back(n, 1);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  if (n < 0) n = -n;
  if (n < 2) return {};
  std::vector<std::pair<Int, unsigned>> flat;
  for (std::uint64_t q : Sieve::shared().primes_up_to(
           std::min<std::uint64_t>(100000, Sieve::shared().limit()))) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), q)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
      ++e;
    }
    flat.emplace_back(Int(static_cast<unsigned long>(q)), e);
    if (n == 1) break;
  }
  if (n > 1) {
    std::vector<std::pair<Int, unsigned>> rest;
    factor_into(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      unsigned e = 0;
      while (j < rest.size() && rest[j].first == rest[i].first) {
        e += rest[j].second;
        ++j;
      }
      flat.emplace_back(rest[i].first, e);
      i = j;
    }
  }
  return flat;
}

Int squarefree_kernel(const Int& n) {
  if (n == 0) return 0;
  Int kernel = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(n))
    if (e % 2 == 1) kernel *= p;
  return kernel;
}

std::optional<Int> integer_sqrt_exact(const Int& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
  }
  return std::nullopt;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  auto num = integer_sqrt_exact(Int(q.get_num()));
  if (!num) return std::nullopt;
  auto den = integer_sqrt_exact(Int(q.get_den()));
  if (!den) return std::nullopt;
  Rat r(*num, *den);
  r.canonicalize();
  return r;
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty rational");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw Error("bad rational: " + text);
  if (r.get_den() == 0) throw Error("zero denominator: " + text);
  r.canonicalize();
  return r;
}

namespace fastmod {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(m),
               newr = static_cast<std::int64_t>(a % m);
  while (newr != 0) {
    std::int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) return 0;
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t sqrtmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

}  // namespace fastmod

}  // namespace torsecm
