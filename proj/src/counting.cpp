#include "torsecm/counting.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace torsecm {

namespace {

using fastmod::invmod;
using fastmod::mulmod;
using fastmod::powmod;
using fastmod::sqrtmod;

struct UCurve {
  std::uint64_t p, A, B;
};

struct UPoint {
  bool inf = true;
  std::uint64_t x = 0, y = 0;
};

UPoint uadd(const UCurve& c, const UPoint& a, const UPoint& b) {
  if (a.inf) return b;
  if (b.inf) return a;
  const std::uint64_t p = c.p;
  std::uint64_t lambda;
  if (a.x == b.x) {
    if ((a.y + b.y) % p == 0) return UPoint{};
    std::uint64_t num = (mulmod(3, mulmod(a.x, a.x, p), p) + c.A) % p;
    lambda = mulmod(num, invmod((2 * a.y) % p, p), p);
  } else {
    std::uint64_t dy = (b.y + p - a.y) % p;
    std::uint64_t dx = (b.x + p - a.x) % p;
    lambda = mulmod(dy, invmod(dx, p), p);
  }
  std::uint64_t x3 = (mulmod(lambda, lambda, p) + 2 * p - a.x - b.x) % p;
  std::uint64_t y3 = (mulmod(lambda, (a.x + p - x3) % p, p) + p - a.y) % p;
  return UPoint{false, x3, y3};
}

UPoint umul(const UCurve& c, std::uint64_t k, const UPoint& pt) {
  UPoint acc{};
  UPoint base = pt;
  while (k) {
    if (k & 1) acc = uadd(c, acc, base);
    base = uadd(c, base, base);
    k >>= 1;
  }
  return acc;
}

int legendre_fast(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  std::uint64_t e = powmod(a, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

std::uint64_t rhs_at(const UCurve& c, std::uint64_t x) {
  return (mulmod(mulmod(x, x, c.p), x, c.p) + mulmod(c.A, x, c.p) + c.B) %
         c.p;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q) continue;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// least k > 0 with k P = O, given annihilator m
std::uint64_t uorder(const UCurve& c, const UPoint& pt, std::uint64_t m) {
  std::uint64_t n = m;
  for (const auto& [q, e] : factor_u64(m)) {
    (void)e;
    while (n % q == 0 && umul(c, n / q, pt).inf) n /= q;
  }
  return n;
}

// some multiple of ord(P) located by BSGS over [lo, lo+W)
std::uint64_t find_annihilator(const UCurve& c, const UPoint& pt,
                               std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t p = c.p;
  std::uint64_t w = hi - lo + 1;
  std::uint64_t s =
      static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(w))));
  if (s == 0) s = 1;
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>>
      baby;  // x -> (j, y)
  UPoint jp{};  // j * P
  for (std::uint64_t j = 0; j < s; ++j) {
    if (j > 0) {
      jp = uadd(c, jp, pt);
      if (jp.inf) {
        // ord | j; return the least multiple of j at or above lo
        std::uint64_t m = ((lo + j - 1) / j) * j;
        return m;
      }
      baby[jp.x].emplace_back(j, jp.y);
    }
  }
  UPoint giant = umul(c, s, pt);
  UPoint r = umul(c, lo, pt);
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t base = lo + k * s;
    if (r.inf) return base;
    auto it = baby.find(r.x);
    if (it != baby.end()) {
      for (const auto& [j, yj] : it->second) {
        // r == -(jP)  <=>  (base + j) P = O
        if ((r.y + yj) % p == 0) return base + j;
      }
    }
    if (base > hi + s) break;
    r = uadd(c, r, giant);
  }
  throw Error("bsgs: no annihilator found (internal)");
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return a / std::gcd(a, b) * b;
}

std::vector<std::uint64_t> multiples_in(std::uint64_t l, std::uint64_t lo,
                                        std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = ((lo + l - 1) / l) * l; m <= hi; m += l)
    out.push_back(m);
  return out;
}

UPoint random_point(const UCurve& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, c.p - 1);
  while (true) {
    std::uint64_t x = dist(rng);
    std::uint64_t r = rhs_at(c, x);
    if (r == 0) return UPoint{false, x, 0};
    if (legendre_fast(r, c.p) == 1) return UPoint{false, x, sqrtmod(r, c.p)};
  }
}

std::uint64_t count_by_character_sum(const UCurve& c) {
  const std::uint64_t p = c.p;
  std::vector<std::uint8_t> is_square(p, 0);
  for (std::uint64_t y = 0; y <= p / 2; ++y)
    is_square[mulmod(y, y, p)] = 1;
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t r = rhs_at(c, x);
    if (r == 0)
      n += 1;
    else if (is_square[r])
      n += 2;
  }
  return n;
}

UCurve to_ucurve(const ModCurve& c, const char* who) {
  if (!is_probable_prime(c.n)) throw BadCurveError(std::string(who) + ": modulus not prime");
  if (c.n < 2 || !c.n.fits_ulong_p())
    throw BadCurveError(std::string(who) + ": modulus out of range");
  std::uint64_t p = c.n.get_ui();
  UCurve u{p, mpz_fdiv_ui(c.A.get_mpz_t(), p), mpz_fdiv_ui(c.B.get_mpz_t(), p)};
  std::uint64_t disc =
      (4 * mulmod(mulmod(u.A, u.A, p), u.A, p) + 27 * mulmod(u.B, u.B, p)) % p;
  if (disc == 0) throw BadCurveError(std::string(who) + ": singular reduction");
  return u;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> hasse_interval(std::uint64_t p) {
  std::uint64_t t = static_cast<std::uint64_t>(std::sqrt(4.0 * p));
  while (t * t > 4 * p) --t;
  while ((t + 1) * (t + 1) <= 4 * p) ++t;
  // 2 sqrt(p) irrational for prime p, so the open interval contains exactly
  // [p+1-t, p+1+t]
  return {p + 1 - t, p + 1 + t};
}

std::uint64_t count_naive(const ModCurve& c) {
  UCurve u = to_ucurve(c, "count_naive");
  if (u.p > 1000000) throw BadCurveError("count_naive: p too large");
  return count_by_character_sum(u);
}

std::uint64_t count_bsgs(const ModCurve& c) {
  UCurve u = to_ucurve(c, "count_bsgs");
  const std::uint64_t p = u.p;
  if (p == 2 || p == 3) return count_by_character_sum(u);
  auto [lo, hi] = hasse_interval(p);
  std::mt19937_64 rng(p * 0x9e3779b97f4a7c15ULL ^ u.A ^ (u.B << 21));

  std::uint64_t exp_e = 1;  // lcm of sampled point orders on E
  for (int attempt = 0; attempt < 8; ++attempt) {
    UPoint pt = random_point(u, rng);
    std::uint64_t m = find_annihilator(u, pt, lo, hi);
    exp_e = lcm_u64(exp_e, uorder(u, pt, m));
    if (multiples_in(exp_e, lo, hi).size() == 1)
      return multiples_in(exp_e, lo, hi)[0];
  }

  // twist disambiguation: |E| + |E^d| = 2p + 2
  std::uint64_t d = 2;
  while (legendre_fast(d, p) != -1) ++d;
  UCurve tw{p, mulmod(u.A, mulmod(d, d, p), p),
            mulmod(u.B, mulmod(mulmod(d, d, p), d, p), p)};
  std::uint64_t exp_t = 1;
  for (int attempt = 0; attempt < 40; ++attempt) {
    UPoint pt = random_point(tw, rng);
    std::uint64_t m = find_annihilator(tw, pt, lo, hi);
    exp_t = lcm_u64(exp_t, uorder(tw, pt, m));
    std::vector<std::uint64_t> feasible;
    for (std::uint64_t m_e : multiples_in(exp_e, lo, hi)) {
      std::uint64_t m_t = 2 * p + 2 - m_e;
      if (m_t >= lo && m_t <= hi && m_t % exp_t == 0) feasible.push_back(m_e);
    }
    if (feasible.size() == 1) return feasible[0];
    if (attempt >= 4 && p < 1000) return count_by_character_sum(u);
    // keep refining exp_e as well
    UPoint pe = random_point(u, rng);
    exp_e = lcm_u64(exp_e, uorder(u, pe, find_annihilator(u, pe, lo, hi)));
  }
  if (p < 1000000) return count_by_character_sum(u);
  throw Error("count_bsgs: order ambiguity not resolved");
}

Int point_order(const ModCurve& c, const ModPoint& p, const Int& m) {
  if (m < 1) throw InvalidMultipleError("point_order: multiple must be >= 1");
  if (p.infinity) return 1;
  auto is_inf = [&](const Int& k) {
    GroupResult r = mod_scalar_mul(c, k, p);
    if (std::holds_alternative<FactorFound>(r))
      throw Error("point_order: modulus not prime (factor surfaced)");
    return std::get<ModPoint>(r).infinity;
  };
  if (!is_inf(m))
    throw InvalidMultipleError("point_order: M P is not the identity");
  Int n = m;
  for (const auto& [q, e] : factorize(m)) {
    (void)e;
    while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
      Int candidate = n / q;
      if (!is_inf(candidate)) break;
      n = candidate;
    }
  }
  return n;
}

}  // namespace torsecm
