#include "torsecm/families.hpp"

#include <sstream>

namespace torsecm {

namespace {

Rat rq(const char* text) { return parse_rational(text); }

RationalPoint pt(const char* x, const char* y) {
  return RationalPoint::affine(rq(x), rq(y));
}

// Horner evaluation, coefficients from the constant term up.
Rat poly(const Rat& x, std::initializer_list<long> coeffs) {
  Rat acc = 0;
  for (auto it = std::rbegin(coeffs); it != std::rend(coeffs); ++it)
    acc = acc * x + *it;
  return acc;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string label, RationalWeierstrass curve,
                 TorsionLabel tq, TorsionLabel text_,
                 std::vector<Condition> split,
                 std::vector<RationalPoint> pts, std::string source) {
    out.push_back({std::move(label), std::move(curve), std::move(tq),
                   std::move(text_), std::move(split), std::move(pts),
                   std::move(source)});
  };
  const std::string q5 = "Q(zeta5)";

  add("E0", RationalWeierstrass(0, 0, 0, 0, 3), {1, 1, "Q"}, {1, 1, "Q"}, {},
      {pt("1", "2")}, "census curve, trivial torsion");
  add("E7", RationalWeierstrass(-55, -448, -448, 0, 0), {1, 7, "Q"},
      {1, 7, "Q"}, {}, {pt("30", "1900")}, "census curve, 7-torsion");
  add("E9", RationalWeierstrass(-47, -624, -624, 0, 0), {1, 9, "Q"},
      {1, 9, "Q"}, {}, {pt("-6", "252")}, "census curve, 9-torsion");
  add("E12",
      RationalWeierstrass(rq("19/40"), rq("-273/400"), rq("-273/400"), 0, 0),
      {1, 12, "Q"}, {2, 12, "Q(sqrt(-143))"},
      {LegendreCondition{-143, 1}}, {pt("3/16", "9/16")},
      "census curve, 12-torsion, 2x12 over Q(sqrt(-143))");
  add("E2x8", RationalWeierstrass(0, rq("54721/225"), 0, 4096, 0),
      {2, 8, "Q"}, {2, 8, "Q"}, {}, {pt("120", "2392")},
      "census curve, 2x8 torsion");
  add("E4x8", RationalWeierstrass(1, 1, 1, -52431, -2731947), {2, 2, "Q"},
      {4, 8, "Q(i, sqrt(-7))"},
      {LegendreCondition{-1, 1}, LegendreCondition{-7, 1}},
      {pt("-141", "1442")}, "census curve, 4x8 over Q(i, sqrt(-7))");
  add("E5x5",
      RationalWeierstrass(0, 1, 1, -5092900, rq("709824595630")),
      {1, 5, "Q"}, {5, 5, q5}, {CongruenceCondition{5, 1}},
      {pt("800", "840394")}, "census curve, 5x5 over Q(zeta5)");
  add("E6x6", RationalWeierstrass(1, 0, 1, -371066, -47384980), {1, 6, "Q"},
      {6, 6, "Q(sqrt(-3), sqrt(217))"},
      {LegendreCondition{-3, 1}, LegendreCondition{217, 1}},
      {pt("-180", "3775")}, "census curve, 6x6 over Q(sqrt(-3), sqrt(217))");

  add("5x5T3", RationalWeierstrass(0, 1, 1, -226248, -20170186),
      {1, 5, "Q"}, {5, 5, q5}, {CongruenceCondition{5, 1}},
      {pt("-132", "2722")}, "5x5 family, T=3 (minimal model)");
  add("4x8t4",
      RationalWeierstrass(1, rq("3600/83521"), rq("3600/83521"), 0, 0),
      {1, 4, "Q"}, {4, 8, "Q(i, sqrt(161))"},
      {LegendreCondition{-1, 1}, LegendreCondition{161, 1}},
      {pt("-30/289", "3900/83521")}, "4x8 generator, t=4");
  add("4x8t3",
      RationalWeierstrass(0, 0, 0, rq("-67950603/390625"),
                          rq("-126442451898/244140625")),
      {1, 2, "Q"}, {4, 8, "Q(i, sqrt(-7))"},
      {LegendreCondition{-1, 1}, LegendreCondition{-7, 1}},
      {pt("-3549/625", "10584/625")}, "4x8 generator, t=3 (twisted model)");
  add("5x5t13",
      RationalWeierstrass(0, 0, 0, rq("-424215625/10460353203"),
                          rq("-33909923828125/22236242266222092")),
      {1, 5, "Q"}, {5, 5, q5}, {CongruenceCondition{5, 1}},
      {pt("-9875/177147", "75625/3188646")},
      "5x5 generator, t=1/3 (coefficients rescaled by the twist carrying "
      "the listed point)");
  add("5x5tm12",
      RationalWeierstrass(0, 0, 0, rq("147734375/50331648"),
                          rq("1010986328125/927712935936")),
      {1, 1, "Q"}, {5, 5, q5}, {CongruenceCondition{5, 1}},
      {pt("15625/12288", "171875/65536")}, "5x5 generator, t=-1/2");
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& label) {
  for (const auto& e : catalog())
    if (e.label == label) return e;
  throw Error("no catalog entry: " + label);
}

std::vector<std::string> catalog_labels() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.label);
  return out;
}

std::string catalog_to_text() {
  std::ostringstream os;
  auto torsion = [](const TorsionLabel& t) {
    std::ostringstream ts;
    ts << t.m << "x" << t.n << " over " << t.field;
    return ts.str();
  };
  for (const auto& e : catalog()) {
    os << "label: " << e.label << "\n";
    os << "curve: " << e.curve.to_record() << "\n";
    os << "torsion_q: " << torsion(e.torsion_q) << "\n";
    os << "torsion_ext: " << torsion(e.torsion_ext) << "\n";
    os << "split: "
       << (e.split.empty() ? std::string("-") : conditions_to_text(e.split))
       << "\n";
    os << "points:";
    for (const auto& p : e.known_points)
      os << " (" << p.x.get_str() << "," << p.y.get_str() << ")";
    os << "\n";
    os << "source: " << e.source << "\n\n";
  }
  return os.str();
}

Gen4x8Result gen_4x8(const Rat& t) {
  if (t == 0 || t == 1 || t == -1)
    throw DegenerateParameterError(
        "gen_4x8: vanishing factor t(t-1)(t+1) at t=" + t.get_str());
  Rat w = t * t * t * t - 6 * t * t + 1;  // never 0 for rational t
  Rat v = w / (4 * (t * t + 1) * (t * t + 1));
  Rat a = v * v - Rat(1, 16);
  if (a == 0)
    throw DegenerateParameterError("gen_4x8: a = v^2 - 1/16 vanishes");
  RationalWeierstrass curve(1, -a, -a, 0, 0);  // throws when singular
  Int k = squarefree_kernel(Int(w.get_num() * w.get_den()));
  return Gen4x8Result{curve, "Q(i, sqrt(" + k.get_str() + "))"};
}

Rabarison3x3Result rabarison_3x3(const Rat& T) {
  if (T == 0)
    throw DegenerateParameterError(
        "rabarison_3x3: vanishing factor T^12 at T=0");
  Rat T2 = T * T, T3 = T2 * T, T4 = T2 * T2, T5 = T4 * T, T6 = T4 * T2,
      T7 = T6 * T;
  Rat T12 = T6 * T6;
  RationalWeierstrass curve(0, 108 + T6, 0, 144 * T6 + 3888,
                            64 * T12 + 3456 * T6 + 46656);
  Rat tx = -4 * T4 + 12 * T2 - 36;
  Rat ty = 4 * T7 - 12 * T5 + 36 * T3;
  Rabarison3x3Result out{
      curve,
      {RationalPoint::affine(tx, ty), RationalPoint::affine(tx, -ty)},
      RationalPoint::affine(0, 8 * T6 + 216)};
  return out;
}

ParamTResult param_T(const Rat& u) {
  Rat den = u * u - 13;  // never 0 for rational u
  Rat T = (u * u - 16 * u - 29) / den;
  Rat z = 8 * (u * u + 2 * u + 13) / den;
  if (z < 0) z = -z;
  return ParamTResult{T, z};
}

Gen3x3Rank2Result gen_3x3_rank2(const Rat& u) {
  Rat a2 = poly(u, {1116118693, 1969070304, 2352294282, 1658452000,
                    508999635, -818496, -26095764, 28224, 823995, -68000,
                    -4758, -96, 109});
  Rat q1 = poly(u, {37, 32, 7});
  Rat q2 = poly(u, {67, -16, 1});
  Rat q3 = poly(u, {337, 232, 30, -8, 1});
  Rat q4 = poly(u, {217, 304, 246, 16, 1});
  Rat d = u * u - 13;
  Rat d3 = d * d * d, d6 = d3 * d3;
  Rat q = q1 * q2 * q3 * q4;
  Rat a4 = 576 * q * d6;
  Rat a6 = 1024 * q * q * d6;
  RationalWeierstrass curve(0, a2, 0, a4, a6);  // throws on Delta(u) = 0
  RationalPoint p1 = RationalPoint::affine(0, 32 * q * d3);
  Rat x2 = -192 * (u + 1) * q1 * q2 * d3;
  Rat m = u * u - 16 * u - 29;
  Rat y2 = 32 * q1 * q2 * (u * u + 2 * u + 13) * m * m * m * d3;
  return Gen3x3Rank2Result{curve, p1, RationalPoint::affine(x2, y2)};
}

Variant3x6 parse_variant_3x6(const std::string& text) {
  if (text == "i" || text == "I") return Variant3x6::I;
  if (text == "ii" || text == "II") return Variant3x6::II;
  if (text == "iii" || text == "III") return Variant3x6::III;
  throw Error("unknown 3x6 variant: " + text);
}

std::string variant_3x6_name(Variant3x6 v) {
  switch (v) {
    case Variant3x6::I:
      return "i";
    case Variant3x6::II:
      return "ii";
    default:
      return "iii";
  }
}

Rat cond_3x6(const Rat& T, Variant3x6 v) {
  switch (v) {
    case Variant3x6::I:
      return poly(T, {0, 96, -144, 72, -27});
    case Variant3x6::II:
      return poly(T, {-1200, 216, -324, 162});
    default:
      return poly(T, {4, -8, 12, -6});
  }
}

namespace {

void check_3x6_nondegenerate(const Rat& T) {
  // Delta = 97844723712 T^3 (3T^2-6T+4)^3 (T-2)^6 (3T-2)^6 (3T^2+4)^6;
  // the rational roots are T = 0, 2, 2/3.
  if (T == 0)
    throw DegenerateParameterError("gen_3x6: vanishing factor T at T=0");
  if (T == 2)
    throw DegenerateParameterError("gen_3x6: vanishing factor (T-2) at T=2");
  if (T == Rat(2, 3))
    throw DegenerateParameterError(
        "gen_3x6: vanishing factor (3T-2) at T=2/3");
}

}  // namespace

Gen3x6Result gen_3x6(const Rat& T, Variant3x6 v, const Rat& z) {
  check_3x6_nondegenerate(T);
  if (z * z != cond_3x6(T, v))
    throw ConditionNotSatisfiedError(
        "gen_3x6: z^2 does not equal the variant condition at T=" +
        T.get_str());
  Rat T2 = T * T;
  Rat A = -24 * (3 * T2 - 4) * poly(T, {16, -48, 72, -36, 9});
  Rat tm2 = T - 2, tm23 = tm2 * tm2 * tm2;
  Rat u = 3 * T - 2, u3 = u * u * u;
  Rat w = 3 * T2 + 4, w3 = w * w * w;
  Rat B = 144 * tm23 * u3 * w3;
  RationalWeierstrass curve(0, A, 0, B, 0);
  Rat b1, s;
  switch (v) {
    case Variant3x6::I:
      b1 = -12 * tm23 * w * u;
      s = 8 * T;
      break;
    case Variant3x6::II:
      b1 = Rat(3, 2) * tm2 * tm2 * w * w * u3;
      s = T * (3 * T2 - 6 * T + 4) / 2;
      break;
    default:
      b1 = 4 * tm2 * w * u3;
      s = 32;
      break;
  }
  // b1 + A + B/b1 = cond * s^2, so y^2 = b1^2 (b1 + A + B/b1) at x = b1.
  return Gen3x6Result{curve, RationalPoint::affine(b1, b1 * z * s)};
}

Gen6x6Result gen_6x6(const Rat& T, Variant3x6 v, const Rat& z) {
  Gen3x6Result base = gen_3x6(T, v, z);
  Rat disc = base.curve.discriminant();
  Int d = squarefree_kernel(Int(disc.get_num() * disc.get_den()));
  return Gen6x6Result{base.curve, "Q(sqrt(-3), sqrt(" + d.get_str() + "))",
                      d};
}

FiveFiveResult fivefive_family(const Rat& T) {
  if (T == 0)
    throw DegenerateParameterError(
        "fivefive_family: vanishing factor T^5 at T=0");
  Rat T5 = T * T * T * T * T;
  Rat T10 = T5 * T5, T15 = T10 * T5, T20 = T10 * T10, T25 = T20 * T5,
      T30 = T15 * T15;
  Rat A = -27 * (T20 + 228 * T15 + 494 * T10 - 228 * T5 + 1);
  Rat B = 54 * (T30 - 522 * T25 - 10005 * T20 - 10005 * T10 + 522 * T5 + 1);
  RationalWeierstrass curve = RationalWeierstrass::short_curve(A, B);
  return FiveFiveResult{curve, T5 - 18};
}

}  // namespace torsecm
