#include "torsecm/ec_core.hpp"

#include <map>
#include <sstream>

namespace torsecm {

namespace {

Int ceil_div(Int a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_reduce(const Int& a, const Int& n) {
  Int r = a % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace

RationalWeierstrass::RationalWeierstrass(Rat a1, Rat a2, Rat a3, Rat a4,
                                         Rat a6)
    : a1_(std::move(a1)),
      a2_(std::move(a2)),
      a3_(std::move(a3)),
      a4_(std::move(a4)),
      a6_(std::move(a6)) {
  if (discriminant() == 0)
    throw SingularCurveError("singular curve: discriminant is zero");
}

Rat RationalWeierstrass::b2() const { return a1_ * a1_ + 4 * a2_; }
Rat RationalWeierstrass::b4() const { return 2 * a4_ + a1_ * a3_; }
Rat RationalWeierstrass::b6() const { return a3_ * a3_ + 4 * a6_; }
Rat RationalWeierstrass::b8() const {
  return a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
         a4_ * a4_;
}
Rat RationalWeierstrass::c4() const { return b2() * b2() - 24 * b4(); }
Rat RationalWeierstrass::c6() const {
  Rat v2 = b2();
  return -v2 * v2 * v2 + 36 * v2 * b4() - 216 * b6();
}

Rat RationalWeierstrass::discriminant() const {
  Rat v2 = b2(), v4 = b4(), v6 = b6(), v8 = b8();
  return -v2 * v2 * v8 - 8 * v4 * v4 * v4 - 27 * v6 * v6 + 9 * v2 * v4 * v6;
}

Rat RationalWeierstrass::j_invariant() const {
  Rat c = c4();
  return c * c * c / discriminant();
}

bool RationalWeierstrass::is_integral() const {
  return a1_.get_den() == 1 && a2_.get_den() == 1 && a3_.get_den() == 1 &&
         a4_.get_den() == 1 && a6_.get_den() == 1;
}

bool RationalWeierstrass::contains(const RationalPoint& p) const {
  if (p.infinity) return true;
  const Rat& x = p.x;
  const Rat& y = p.y;
  return y * y + a1_ * x * y + a3_ * y ==
         x * x * x + a2_ * x * x + a4_ * x + a6_;
}

RationalPoint RationalWeierstrass::negate(const RationalPoint& p) const {
  if (p.infinity) return p;
  return RationalPoint::affine(p.x, -p.y - a1_ * p.x - a3_);
}

RationalPoint RationalWeierstrass::add(const RationalPoint& p,
                                       const RationalPoint& q) const {
  if (p.infinity) return q;
  if (q.infinity) return p;
  Rat lambda, nu;
  if (p.x == q.x) {
    if (p.y != q.y || 2 * p.y + a1_ * p.x + a3_ == 0)
      return RationalPoint::at_infinity();
    Rat den = 2 * p.y + a1_ * p.x + a3_;
    lambda = (3 * p.x * p.x + 2 * a2_ * p.x + a4_ - a1_ * p.y) / den;
    nu = (-p.x * p.x * p.x + a4_ * p.x + 2 * a6_ - a3_ * p.y) / den;
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
    nu = p.y - lambda * p.x;
  }
  Rat x3 = lambda * lambda + a1_ * lambda - a2_ - p.x - q.x;
  Rat y3 = -(lambda + a1_) * x3 - nu - a3_;
  return RationalPoint::affine(std::move(x3), std::move(y3));
}

RationalPoint RationalWeierstrass::scalar_mul(const Int& k,
                                              const RationalPoint& p) const {
  Int m = k;
  RationalPoint base = p;
  if (m < 0) {
    m = -m;
    base = negate(base);
  }
  RationalPoint acc = RationalPoint::at_infinity();
  for (long bit = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1;
       bit >= 0 && m != 0; --bit) {
    acc = add(acc, acc);
    if (mpz_tstbit(m.get_mpz_t(), bit)) acc = add(acc, base);
  }
  return acc;
}

std::pair<RationalWeierstrass, Int> RationalWeierstrass::integral_model()
    const {
  // least s with s^w a_w integral, weights 1,2,3,4,6
  std::map<Int, unsigned> exponents;
  const std::pair<const Rat*, unsigned> coeffs[] = {
      {&a1_, 1}, {&a2_, 2}, {&a3_, 3}, {&a4_, 4}, {&a6_, 6}};
  for (const auto& [coef, weight] : coeffs) {
    Int den(coef->get_den());
    if (den == 1) continue;
    for (const auto& [q, e] : factorize(den)) {
      unsigned need = static_cast<unsigned>(
          ceil_div(Int(e), Int(weight)).get_ui());
      auto it = exponents.find(q);
      if (it == exponents.end() || it->second < need) exponents[q] = need;
    }
  }
  Int s = 1;
  for (const auto& [q, e] : exponents)
    for (unsigned i = 0; i < e; ++i) s *= q;
  Rat rs(s);
  RationalWeierstrass em(a1_ * rs, a2_ * rs * rs, a3_ * rs * rs * rs,
                         a4_ * rs * rs * rs * rs,
                         a6_ * rs * rs * rs * rs * rs * rs);
  return {std::move(em), std::move(s)};
}

RationalWeierstrass RationalWeierstrass::short_form() const {
  if (is_short()) return *this;
  return RationalWeierstrass(0, 0, 0, -27 * c4(), -54 * c6());
}

RationalPoint RationalWeierstrass::to_short_form(const RationalPoint& p)
    const {
  if (is_short() || p.infinity) return p;
  Rat x = 36 * p.x + 3 * b2();
  Rat y = 108 * (2 * p.y + a1_ * p.x + a3_);
  return RationalPoint::affine(std::move(x), std::move(y));
}

RationalWeierstrass RationalWeierstrass::quadratic_twist(const Int& d) const {
  if (!is_short()) throw Error("quadratic_twist: curve must be in short form");
  if (d == 0) throw NotSquarefreeError("twist parameter must be nonzero");
  for (const auto& [q, e] : factorize(d))
    if (e >= 2)
      throw NotSquarefreeError("twist parameter not squarefree: divisible by " +
                               q.get_str() + "^2");
  Rat dd(d);
  return RationalWeierstrass(0, 0, 0, a4_ * dd * dd, a6_ * dd * dd * dd);
}

std::string RationalWeierstrass::to_record() const {
  std::ostringstream os;
  os << "a1=" << a1_.get_str() << " a2=" << a2_.get_str()
     << " a3=" << a3_.get_str() << " a4=" << a4_.get_str()
     << " a6=" << a6_.get_str();
  return os.str();
}

RationalWeierstrass RationalWeierstrass::from_record(const std::string& text) {
  std::istringstream is(text);
  std::map<std::string, Rat> fields;
  std::string token;
  while (is >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) {
      if (token == "curve") continue;
      throw Error("bad curve record token: " + token);
    }
    fields[token.substr(0, eq)] = parse_rational(token.substr(eq + 1));
  }
  for (const char* key : {"a1", "a2", "a3", "a4", "a6"})
    if (!fields.count(key)) throw Error(std::string("curve record missing ") + key);
  return RationalWeierstrass(fields["a1"], fields["a2"], fields["a3"],
                             fields["a4"], fields["a6"]);
}

bool on_curve(const ModCurve& c, const ModPoint& p) {
  if (p.infinity) return true;
  Int lhs = mod_reduce(p.y * p.y, c.n);
  Int rhs = mod_reduce(p.x * p.x * p.x + c.A * p.x + c.B, c.n);
  return lhs == rhs;
}

ModPoint mod_negate(const ModCurve& c, const ModPoint& p) {
  if (p.infinity) return p;
  return ModPoint::affine(p.x, mod_reduce(-p.y, c.n));
}

GroupResult mod_add(const ModCurve& c, const ModPoint& p, const ModPoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const Int& n = c.n;
  Int lambda;
  if (p.x == q.x) {
    if (mod_reduce(p.y + q.y, n) == 0) return ModPoint::at_infinity();
    if (p.y != q.y) {
      // points agree in x but differ mod some factor only
      Int g, diff = p.y - q.y, sum = p.y + q.y;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      if (g > 1 && g < n) return FactorFound{g};
      mpz_gcd(g.get_mpz_t(), sum.get_mpz_t(), n.get_mpz_t());
      if (g > 1 && g < n) return FactorFound{g};
      return FactorFound{n};
    }
    ModInv inv = mod_inv(2 * p.y, n);
    if (!inv.ok) return FactorFound{inv.g};
    lambda = mod_reduce((3 * p.x * p.x + c.A) * inv.value, n);
  } else {
    ModInv inv = mod_inv(q.x - p.x, n);
    if (!inv.ok) return FactorFound{inv.g};
    lambda = mod_reduce((q.y - p.y) * inv.value, n);
  }
  Int x3 = mod_reduce(lambda * lambda - p.x - q.x, n);
  Int y3 = mod_reduce(lambda * (p.x - x3) - p.y, n);
  return ModPoint::affine(std::move(x3), std::move(y3));
}

GroupResult mod_scalar_mul(const ModCurve& c, const Int& k,
                           const ModPoint& p) {
  if (k < 0) throw Error("mod_scalar_mul: negative scalar");
  ModPoint acc = ModPoint::at_infinity();
  for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1;
       bit >= 0 && k != 0; --bit) {
    GroupResult r = mod_add(c, acc, acc);
    if (std::holds_alternative<FactorFound>(r)) return r;
    acc = std::get<ModPoint>(r);
    if (mpz_tstbit(k.get_mpz_t(), bit)) {
      r = mod_add(c, acc, p);
      if (std::holds_alternative<FactorFound>(r)) return r;
      acc = std::get<ModPoint>(r);
    }
  }
  return acc;
}

namespace {

// Short-model integer data shared by reduce_mod / reduce_mod_n /
// reduce_point.  When the integral model is already short the coefficients
// are taken as-is; otherwise the -27c4/-54c6 model (isomorphic for any
// modulus coprime to 6).
struct ShortIntegral {
  RationalWeierstrass model;  // integral long model
  Int scale;                  // integral_model scale s
  Int A, B;                   // short coefficients (integers)
  bool direct;                // short already, no c4/c6 map
  Int disc;                   // integral model discriminant
};

ShortIntegral short_integral(const RationalWeierstrass& e) {
  auto [em, s] = e.integral_model();
  ShortIntegral out{em, s, 0, 0, em.is_short(), Int(em.discriminant().get_num())};
  if (out.direct) {
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

ModCurve reduce_mod(const RationalWeierstrass& e, std::uint64_t p) {
  if (p <= 3) {
    // Short-form reduction needs p > 3; still classify bad reduction.
    ShortIntegral si = short_integral(e);
    if (p >= 2 && mpz_divisible_ui_p(si.disc.get_mpz_t(), p))
      throw BadReductionError("bad reduction at p=" + std::to_string(p));
    throw Error("reduce_mod: prime must exceed 3");
  }
  ShortIntegral si = short_integral(e);
  Int pp(static_cast<unsigned long>(p));
  if (mpz_divisible_p(si.disc.get_mpz_t(), pp.get_mpz_t()))
    throw BadReductionError("bad reduction at p=" + std::to_string(p));
  return ModCurve{pp, mod_reduce(si.A, pp), mod_reduce(si.B, pp)};
}

std::variant<ModCurve, FactorFound> reduce_mod_n(const RationalWeierstrass& e,
                                                 const Int& n) {
  if (n < 2) throw Error("reduce_mod_n: modulus must be >= 2");
  Int six = 6, g;
  mpz_gcd(g.get_mpz_t(), six.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw Error("reduce_mod_n: gcd(N, 6) must be 1");
  ShortIntegral si = short_integral(e);
  mpz_gcd(g.get_mpz_t(), si.disc.get_mpz_t(), n.get_mpz_t());
  if (g != 1) return FactorFound{g};
  return ModCurve{n, mod_reduce(si.A, n), mod_reduce(si.B, n)};
}

std::variant<ModPoint, FactorFound> reduce_point(const RationalWeierstrass& e,
                                                 const RationalPoint& p,
                                                 const Int& n) {
  if (p.infinity) return ModPoint::at_infinity();
  ShortIntegral si = short_integral(e);
  Rat s(si.scale);
  RationalPoint pm =
      RationalPoint::affine(p.x * s * s, p.y * s * s * s);
  if (!si.direct) pm = si.model.to_short_form(pm);
  auto reduce_rat = [&](const Rat& q) -> std::variant<Int, FactorFound> {
    Int den(q.get_den());
    ModInv inv = mod_inv(den, n);
    if (!inv.ok) return FactorFound{inv.g};
    Int num = Int(q.get_num()) % n;
    if (num < 0) num += n;
    return mod_reduce(num * inv.value, n);
  };
  auto rx = reduce_rat(pm.x);
  if (std::holds_alternative<FactorFound>(rx))
    return std::get<FactorFound>(rx);
  auto ry = reduce_rat(pm.y);
  if (std::holds_alternative<FactorFound>(ry))
    return std::get<FactorFound>(ry);
  return ModPoint::affine(std::get<Int>(rx), std::get<Int>(ry));
}

}  // namespace torsecm
