#include "sasaki/cscrays.hpp"

#include <algorithm>
#include <numeric>

#include "sasaki/parallel.hpp"

namespace sasaki {

using poly::IntPolynomial;
using poly::RootRecord;

namespace {

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Whether the reciprocal of root a is the root isolated by b.
bool reciprocal(const RootRecord& a, const RootRecord& b, const poly::SturmChain& chain) {
  if (a.is_rational != b.is_rational) return false;
  if (a.is_exact()) return a.exact() * b.exact() == 1;
  const auto& ia = a.interval();
  const auto& ib = b.interval();
  Rational lo = std::max<Rational>(1 / ia.hi, ib.lo);
  Rational hi = ia.lo == 0 ? ib.hi : std::min<Rational>(1 / ia.lo, ib.hi);
  if (!(lo < hi)) return false;
  return chain.count(lo, hi) >= 1;
}

}  // namespace

const char* to_string(RayClass c) {
  switch (c) {
    case RayClass::kRegular:
      return "regular";
    case RayClass::kQuasiRegular:
      return "quasi-regular";
    case RayClass::kIrregular:
      return "irregular";
  }
  return "?";
}

IntPolynomial csc_polynomial(std::int64_t p_raw, std::int64_t l1_raw, std::int64_t l2_raw,
                             std::int64_t w1_raw, std::int64_t w2_raw) {
  const unsigned long p = static_cast<unsigned long>(p_raw);
  const Integer pp = big(p_raw), l1 = big(l1_raw), l2 = big(l2_raw), w1 = big(w1_raw),
                w2 = big(w2_raw);
  const Integer p1sq = (pp + 1) * (pp + 1);
  std::vector<Integer> c(2 * p + 5, Integer(0));
  c[2 * p + 4] = -l1 * power(w1, 2 * p + 3);
  c[2 * p + 3] = (l2 + l1 * w2) * power(w1, 2 * p + 2);
  c[p + 3] = -(p1sq * l2 - l1 * ((pp + 1) * w1 + (pp + 2) * w2)) * power(w1, p + 2) * power(w2, p);
  c[p + 2] = (2 * pp * (pp + 2) * l2 - (2 * pp + 3) * l1 * (w1 + w2)) * power(w1, p + 1) *
             power(w2, p + 1);
  c[p + 1] = -(p1sq * l2 - l1 * ((pp + 2) * w1 + (pp + 1) * w2)) * power(w1, p) * power(w2, p + 2);
  c[1] = (l2 + l1 * w1) * power(w2, 2 * p + 2);
  c[0] = -l1 * power(w2, 2 * p + 3);
  return IntPolynomial(std::move(c));
}

CscPolynomial build_f(const JoinParams& j) {
  Rational forbidden(big(j.w2()), big(j.w1()));
  forbidden.canonicalize();
  return {csc_polynomial(j.p(), j.l1(), j.l2(), j.w1(), j.w2()), j, forbidden};
}

IntPolynomial build_g_p1(std::int64_t l1_raw, std::int64_t l2_raw, std::int64_t w1_raw,
                         std::int64_t w2_raw) {
  JoinParams::validate(1, l1_raw, l2_raw, w1_raw, w2_raw);
  const Integer l1 = big(l1_raw), l2 = big(l2_raw), w1 = big(w1_raw), w2 = big(w2_raw);
  return IntPolynomial(std::vector<Integer>{l1 * w2 * w2, -w2 * (l2 - 2 * l1 * w1),
                                            w1 * (l2 - 2 * l1 * w2), -l1 * w1 * w1});
}

Integer fourth_derivative_at_one(std::int64_t p_raw, std::int64_t l1, std::int64_t l2) {
  JoinParams::validate(p_raw, l1, l2, 1, 1);
  const Integer p = big(p_raw);
  return 2 * (1 + p) * (1 + p) * (p + 2) * (p * (p + 1) * big(l2) - 2 * (3 + 2 * p) * big(l1));
}

Rational wz_threshold(std::int64_t p, std::int64_t l1) {
  if (p < 1 || l1 < 1) throw InvalidInput("wz_threshold needs p >= 1 and l1 >= 1");
  Rational t(2 * (3 + 2 * big(p)) * big(l1), big(p) * (big(p) + 1));
  t.canonicalize();
  return t;
}

Deflation deflate_forbidden(const CscPolynomial& fp) {
  const JoinParams& j = fp.params;
  const IntPolynomial linear(std::vector<Integer>{-big(j.w2()), big(j.w1())});
  Deflation d{fp.poly, 0};
  while (!d.quotient.is_zero() && poly::sign_at(d.quotient, fp.forbidden_root) == 0) {
    d.quotient = poly::exact_quotient(d.quotient, linear);
    ++d.removed_multiplicity;
  }
  const unsigned floor = j.homogeneous() ? 4 : 3;
  if (d.removed_multiplicity < floor)
    throw InvariantViolation("f has multiplicity " + std::to_string(d.removed_multiplicity) +
                             " at b = " + poly::to_string(fp.forbidden_root) + ", expected at least " +
                             std::to_string(floor));
  return d;
}

RayReport csc_rays(const JoinParams& j, unsigned digits) {
  const CscPolynomial fp = build_f(j);
  Deflation defl = deflate_forbidden(fp);

  RayReport report;
  report.forbidden_multiplicity = defl.removed_multiplicity;
  report.weyl_paired = j.homogeneous();
  report.deflated = defl.quotient;

  std::vector<RootRecord> roots = poly::isolate_positive_roots(defl.quotient, digits);
  for (auto& r : roots) {
    const RayClass cls = r.is_rational ? RayClass::kQuasiRegular : RayClass::kIrregular;
    report.rays.push_back({std::move(r), cls, {}});
  }

  if (!j.homogeneous()) {
    report.unreduced_count = report.reduced_count = report.rays.size();
    return report;
  }

  RootRecord regular;
  regular.value = Rational(1);
  regular.multiplicity = defl.removed_multiplicity;
  regular.is_rational = true;
  auto pos = std::find_if(report.rays.begin(), report.rays.end(),
                          [](const Ray& r) { return r.root.representative() > 1; });
  report.rays.insert(pos, Ray{std::move(regular), RayClass::kRegular, {}});

  std::size_t reduced = 1;
  if (report.rays.size() > 1) {
    const poly::SturmChain chain(defl.quotient);
    for (std::size_t a = 0; a < report.rays.size(); ++a) {
      Ray& ra = report.rays[a];
      if (ra.ray_class == RayClass::kRegular || ra.partner) continue;
      ++reduced;
      for (std::size_t b = a + 1; b < report.rays.size(); ++b) {
        Ray& rb = report.rays[b];
        if (rb.ray_class == RayClass::kRegular || rb.partner) continue;
        if (reciprocal(ra.root, rb.root, chain)) {
          ra.partner = b;
          rb.partner = a;
          break;
        }
      }
    }
  }
  report.unreduced_count = report.rays.size();
  report.reduced_count = reduced;
  return report;
}

CscSweep sweep_csc(std::int64_t p, std::int64_t l1, std::int64_t w1, std::int64_t w2,
                   std::int64_t l2_lo, std::int64_t l2_hi, std::int64_t stride, unsigned jobs) {
  // l2 = 1 is coprime to everything, so this checks p, l1 and w alone.
  const bool homogeneous = JoinParams::validate(p, l1, 1, w1, w2).homogeneous();
  if (stride < 1) throw InvalidInput("sweep stride must be positive");
  if (l2_lo < 1 || l2_hi < l2_lo) throw InvalidInput("empty l2 range");

  std::vector<std::int64_t> values;
  for (std::int64_t l2 = l2_lo; l2 <= l2_hi; l2 += stride) values.push_back(l2);

  CscSweep sweep;
  sweep.rows.resize(values.size());
  parallel_for(values.size(), jobs, [&](std::size_t i) {
    CscSweepRow& row = sweep.rows[i];
    row.l2 = values[i];
    try {
      const JoinParams jp = JoinParams::validate(p, l1, values[i], w1, w2);
      const RayReport rep = csc_rays(jp, 1);
      row.valid = true;
      row.unreduced = rep.unreduced_count;
      row.reduced = rep.reduced_count;
      row.multiple = homogeneous ? rep.reduced_count >= 2 : rep.unreduced_count >= 3;
    } catch (const ValidationError& e) {
      row.valid = false;
      row.skip_reason = e.what();
    }
  });

  if (std::none_of(sweep.rows.begin(), sweep.rows.end(), [](const auto& r) { return r.valid; }))
    throw InvalidInput("no valid l2 in the requested range");
  for (const auto& row : sweep.rows) {
    if (row.multiple) {
      sweep.threshold = row.l2;
      break;
    }
  }
  return sweep;
}

std::optional<std::int64_t> min_l2_multiple_csc(std::int64_t p, std::int64_t l1, std::int64_t w1,
                                                std::int64_t w2, std::int64_t search_bound,
                                                unsigned jobs) {
  if (search_bound < 1) throw InvalidInput("search bound must be at least 1");
  try {
    return sweep_csc(p, l1, w1, w2, 1, search_bound, 1, jobs).threshold;
  } catch (const ValidationError&) {
    throw;
  } catch (const InvalidInput&) {
    return std::nullopt;  // no valid l2 up to the bound
  }
}

CoprimePair quasireg_family(std::int64_t p_raw) {
  if (p_raw < 1) throw InvalidInput("quasireg_family needs p >= 1");
  if (p_raw > 28) throw InvalidInput("quasireg_family: p too large for 64-bit parameters");
  const unsigned long p = static_cast<unsigned long>(p_raw);
  const Integer P = big(p_raw);
  const Integer two_p = power(Integer(2), p);
  const Integer a = 2 * (1 + two_p * (4 * two_p - (P * P + 2 * P + 5)));
  const Integer b = -1 + 2 * two_p * (4 * two_p - (2 * P + 3));
  if (a == 0 || b == 0)
    throw InvalidInput("quasireg_family: degenerate coefficient for p = " + std::to_string(p_raw));
  if (sgn(a) != sgn(b))
    throw InvalidInput("quasireg_family: no positive solution for p = " + std::to_string(p_raw));
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const Integer l1 = abs(a) / g;
  const Integer l2 = abs(b) / g;
  if (!l1.fits_slong_p() || !l2.fits_slong_p())
    throw InvalidInput("quasireg_family: solution exceeds 64-bit range");
  return {l1.get_si(), l2.get_si()};
}

}  // namespace sasaki
