#include "sasaki/exactpoly.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sasaki::poly {

namespace {

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Divides by the (positive) content; the sign of the polynomial is kept.
IntPolynomial strip_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (c == 1) return p;
  std::vector<Integer> v = p.coeffs();
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(v));
}

// A positive multiple of rem(a, b) over Q, computed on integers.
IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Integer& lc = b.leading();
  int steps = 0;
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= db) {
    Integer lr = r[dr];
    int shift = dr - db;
    for (auto& x : r) x *= lc;
    for (int i = 0; i <= db; ++i) r[i + shift] -= lr * bc[i];
    ++steps;
    // r[dr] is now zero by construction.
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  IntPolynomial out(std::move(r));
  if (sgn(lc) < 0 && steps % 2 == 1) out = -out;
  return strip_content(out);
}

int sign_at_infinity(const IntPolynomial& p, int direction) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  if (direction < 0 && p.degree() % 2 == 1) s = -s;
  return s;
}

int sign_at_point(const IntPolynomial& p, const ExtRational& x) {
  return x.is_finite() ? sign_at(p, x.value()) : sign_at_infinity(p, x.infinity());
}

}  // namespace

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  IntPolynomial q = strip_content(p);
  return sgn(q.leading()) < 0 ? -q : q;
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c.get_num() * (l / c.get_den()));
  return primitive_part(IntPolynomial(std::move(v)));
}

Rational evaluate(const IntPolynomial& p, const Rational& q) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + *it;
  return acc;
}

Rational evaluate(const RatPolynomial& p, const Rational& q) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + *it;
  return acc;
}

int sign_at(const IntPolynomial& p, const Rational& q) {
  if (p.is_zero()) return 0;
  const auto& c = p.coeffs();
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  Integer acc = c.back();
  Integer dpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    dpow *= d;
    acc *= n;
    mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), dpow.get_mpz_t());
  }
  return sgn(acc);
}

IntPolynomial derivative(const IntPolynomial& p, unsigned order) {
  std::vector<Integer> v = p.coeffs();
  for (unsigned k = 0; k < order && !v.empty(); ++k) {
    for (std::size_t i = 1; i < v.size(); ++i) v[i - 1] = v[i] * static_cast<unsigned long>(i);
    v.pop_back();
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial reflect(const IntPolynomial& p) {
  std::vector<Integer> v = p.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial reverse(const IntPolynomial& p) {
  std::vector<Integer> v(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPolynomial(std::move(v));
}

DivRem divrem(const RatPolynomial& num, const RatPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPolynomial{}, num};
  std::vector<Rational> r = num.coeffs();
  const auto& d = den.coeffs();
  const int dd = den.degree();
  std::vector<Rational> q(num.degree() - dd + 1, Rational(0));
  for (int k = num.degree() - dd; k >= 0; --k) {
    Rational t = r[k + dd] / d.back();
    q[k] = t;
    if (t == 0) continue;
    for (int i = 0; i <= dd; ++i) r[k + i] -= t * d[i];
  }
  r.resize(dd);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

DivRem divrem(const IntPolynomial& num, const IntPolynomial& den) {
  return divrem(to_rational(num), to_rational(den));
}

IntPolynomial exact_quotient(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) {
    if (num.is_zero()) return {};
    throw std::domain_error("exact_quotient: nonzero remainder");
  }
  std::vector<Integer> r = num.coeffs();
  const auto& d = den.coeffs();
  const int dd = den.degree();
  std::vector<Integer> q(num.degree() - dd + 1);
  for (int k = num.degree() - dd; k >= 0; --k) {
    Integer& top = r[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t()))
      throw std::domain_error("exact_quotient: non-integral quotient");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
    for (int i = 0; i <= dd; ++i) r[k + i] -= q[k] * d[i];
  }
  for (int i = 0; i < dd; ++i)
    if (r[i] != 0) throw std::domain_error("exact_quotient: nonzero remainder");
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = positive_pseudo_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

std::vector<SquarefreeFactor> squarefree_decompose(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  IntPolynomial f = primitive_part(p);
  IntPolynomial df = derivative(f);
  IntPolynomial a = gcd(f, df);
  IntPolynomial b = exact_quotient(f, a);
  IntPolynomial c = exact_quotient(df, a);
  IntPolynomial d = c - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    IntPolynomial next_b = exact_quotient(b, a);
    if (a.degree() > 0) out.push_back({a, i});
    if (next_b.degree() > 0) {
      c = exact_quotient(d, a);
      d = c - derivative(next_b);
    }
    b = std::move(next_b);
  }
  return out;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  IntPolynomial s = IntPolynomial::constant(1);
  for (const auto& f : squarefree_decompose(p)) s = s * f.factor;
  return s;
}

std::size_t sign_variations(const IntPolynomial& p) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& c : p.coeffs()) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

bool operator<(const ExtRational& a, const ExtRational& b) {
  if (a.infinity_ != b.infinity_ || a.infinity_ != 0) return a.infinity_ < b.infinity_;
  return a.value_ < b.value_;
}

SturmChain::SturmChain(const IntPolynomial& p, bool already_squarefree) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  IntPolynomial s = already_squarefree ? primitive_part(p) : squarefree_part(p);
  chain_.push_back(s);
  if (s.degree() <= 0) return;
  chain_.push_back(strip_content(derivative(s)));
  while (chain_.back().degree() > 0) {
    IntPolynomial r = positive_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

std::size_t SturmChain::variations(const ExtRational& x) const {
  std::size_t v = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = sign_at_point(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t SturmChain::count(const ExtRational& lo, const ExtRational& hi) const {
  if (!(lo < hi)) throw std::invalid_argument("Sturm count needs lo < hi");
  std::size_t a = variations(lo);
  std::size_t b = variations(hi);
  return a >= b ? a - b : 0;
}

std::size_t sturm_count(const IntPolynomial& p, const ExtRational& lo, const ExtRational& hi) {
  return SturmChain(p).count(lo, hi);
}

Rational RootRecord::representative() const {
  return is_exact() ? exact() : interval().midpoint();
}

namespace {

// Continued-fraction search for the simplest rational in the open interval
// (lo, hi), hi absent meaning +infinity. Gives up once the denominator of the
// convergent exceeds max_den (when set).
std::optional<Rational> simplest_in(const Rational& lo, const std::optional<Rational>& hi,
                                    const Integer* max_den) {
  Integer p1 = lo.get_num(), q1 = lo.get_den();
  Integer p2, q2;
  bool hi_inf = !hi;
  if (hi) {
    p2 = hi->get_num();
    q2 = hi->get_den();
  }
  // Convergent matrix [h1 h2; k1 k2].
  Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  Integer fl, t;
  for (;;) {
    mpz_fdiv_q(fl.get_mpz_t(), p1.get_mpz_t(), q1.get_mpz_t());
    t = fl + 1;
    if (hi_inf || t * q2 < p2) {
      Integer num = t * h1 + h2;
      Integer den = t * k1 + k2;
      if (max_den && den > *max_den) return std::nullopt;
      return Rational(num, den);
    }
    Integer h = fl * h1 + h2;
    Integer k = fl * k1 + k2;
    if (max_den && k > *max_den) return std::nullopt;
    h2 = std::move(h1);
    h1 = std::move(h);
    k2 = std::move(k1);
    k1 = std::move(k);
    // (lo, hi) -> (1 / (hi - fl), 1 / (lo - fl))
    Integer np1 = q2, nq1 = p2 - fl * q2;
    Integer rem = p1 - fl * q1;
    if (rem == 0) {
      hi_inf = true;
    } else {
      p2 = q1;
      q2 = std::move(rem);
      hi_inf = false;
    }
    p1 = std::move(np1);
    q1 = std::move(nq1);
  }
}

}  // namespace

Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
  if (lo < 0) throw std::invalid_argument("simplest_between needs lo >= 0");
  if (hi && !(lo < *hi)) throw std::invalid_argument("simplest_between needs lo < hi");
  return *simplest_in(lo, hi, nullptr);
}

namespace {

// One distinct root of a square-free polynomial, bracketed by an interval
// whose endpoints are not roots.
struct Bracket {
  Rational lo;
  Rational hi;
};

// A point strictly inside (lo, hi) at which s does not vanish.
Rational split_point(const IntPolynomial& s, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  if (sign_at(s, mid) != 0) return mid;
  for (unsigned long den = 3;; ++den) {
    for (unsigned long num = 1; num < den; ++num) {
      Rational frac(num, den);
      frac.canonicalize();
      const Rational t = lo + (hi - lo) * frac;
      if (sign_at(s, t) != 0) return t;
    }
  }
}

void bisect(const SturmChain& chain, const Rational& lo, const Rational& hi, std::size_t var_lo,
            std::size_t var_hi, std::vector<Bracket>& out) {
  std::size_t n = var_lo - var_hi;
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = split_point(chain.base(), lo, hi);
  std::size_t var_mid = chain.variations(mid);
  bisect(chain, lo, mid, var_lo, var_mid, out);
  bisect(chain, mid, hi, var_mid, var_hi, out);
}

Rational cauchy_bound(const IntPolynomial& s) {
  Integer lc = abs(s.leading());
  Integer m = 0;
  for (int i = 0; i < s.degree(); ++i) m = std::max<Integer>(m, abs(s.coeffs()[i]));
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lc.get_mpz_t());
  return Rational(q + 1);
}

}  // namespace

std::vector<RootRecord> isolate_positive_roots(const IntPolynomial& p, unsigned digits) {
  if (p.is_zero()) throw std::domain_error("isolate_positive_roots: zero polynomial");
  // Zero is not a positive root; drop the b^k factor.
  std::size_t shift = 0;
  while (p.coeffs()[shift] == 0) ++shift;
  const IntPolynomial f = primitive_part(
      IntPolynomial(std::vector<Integer>(p.coeffs().begin() + shift, p.coeffs().end())));
  if (f.degree() <= 0) return {};

  // The remainder sequence of (f, f') ends in gcd(f, f'); when that is a
  // constant, f is square-free and the sequence is already its Sturm chain.
  SturmChain chain(f, true);
  std::vector<SquarefreeFactor> factors;
  IntPolynomial s;
  if (chain.chain().back().degree() <= 0) {
    s = f;
    factors.push_back({f, 1});
  } else {
    factors = squarefree_decompose(f);
    s = IntPolynomial::constant(1);
    for (const auto& fac : factors) s = s * fac.factor;
    chain = SturmChain(s, true);
  }

  const Rational bound = cauchy_bound(s);
  std::vector<Bracket> brackets;
  bisect(chain, Rational(0), bound, chain.variations(Rational(0)), chain.variations(bound),
         brackets);

  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, digits);
  const Rational tolerance(Integer(1), ten_pow);
  const Integer lead = abs(s.leading());
  const Integer tail = abs(s.coeff(0));

  std::vector<RootRecord> out;
  out.reserve(brackets.size());
  for (auto& br : brackets) {
    const int sign_lo = sign_at(s, br.lo);
    std::optional<Rational> exact;
    auto halve = [&] {
      Rational mid = (br.lo + br.hi) / 2;
      int sm = sign_at(s, mid);
      if (sm == 0) {
        exact = std::move(mid);
      } else if (sm == sign_lo) {
        br.lo = std::move(mid);
      } else {
        br.hi = std::move(mid);
      }
    };
    while (!exact && br.hi - br.lo > tolerance) halve();

    // A rational root u/v has v | lead and u | tail, so v <= tail / lo. An
    // interval narrower than 1/max_den^2 holds at most one such fraction, and
    // it is then the simplest rational inside.
    while (!exact) {
      Integer max_den = lead;
      if (br.lo > 0) {
        Integer by_tail;
        mpz_fdiv_q(by_tail.get_mpz_t(), Integer(tail * br.lo.get_den()).get_mpz_t(),
                   br.lo.get_num_mpz_t());
        if (by_tail < max_den) max_den = by_tail;
      }
      std::optional<Rational> cand = simplest_in(br.lo, br.hi, &max_den);
      if (!cand) break;
      if (sign_at(s, *cand) == 0) {
        exact = std::move(cand);
        break;
      }
      if ((br.hi - br.lo) * max_den * max_den < 1) break;
      for (int i = 0; i < 8 && !exact; ++i) halve();
    }

    RootRecord rec;
    rec.is_rational = exact.has_value();
    if (exact) {
      rec.value = *exact;
    } else {
      rec.value = RationalInterval{br.lo, br.hi};
    }
    for (const auto& fac : factors) {
      bool hit = exact ? sign_at(fac.factor, *exact) == 0
                       : sign_at(fac.factor, br.lo) * sign_at(fac.factor, br.hi) < 0;
      if (hit) {
        rec.multiplicity = fac.multiplicity;
        break;
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<RationalRoot> rational_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  std::vector<RationalRoot> out;
  for (const auto& r : isolate_positive_roots(reflect(p), 1)) {
    if (r.is_exact()) out.push_back({-r.exact(), r.multiplicity});
  }
  std::reverse(out.begin(), out.end());
  unsigned zero_mult = 0;
  while (p.coeff(zero_mult) == 0) ++zero_mult;
  if (zero_mult > 0) out.push_back({Rational(0), zero_mult});
  for (const auto& r : isolate_positive_roots(p, 1)) {
    if (r.is_exact()) out.push_back({r.exact(), r.multiplicity});
  }
  return out;
}

Rational cubic_discriminant(const Rational& a3, const Rational& a2, const Rational& a1,
                            const Rational& a0) {
  if (a3 == 0) throw std::invalid_argument("cubic_discriminant: leading coefficient is zero");
  Rational d = 18 * a3 * a2 * a1 * a0;
  d -= 4 * a2 * a2 * a2 * a0;
  d += a2 * a2 * a1 * a1;
  d -= 4 * a3 * a1 * a1 * a1;
  d -= 27 * a3 * a3 * a0 * a0;
  return d;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, unsigned digits) {
  Rational a = abs(q);
  Integer ip = floor_of(a);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Integer frac = floor_of((a - ip) * scale);
  std::string out = (sgn(q) < 0 ? "-" : "") + ip.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

std::string to_string(const IntPolynomial& p, const char* var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i > 0) {
      if (mag != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace sasaki::poly
