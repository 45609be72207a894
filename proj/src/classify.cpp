#include "sasaki/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sasaki {

namespace {

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

void require_homotopy_hypotheses(const JoinParams& j, const char* which) {
  const std::string tag = std::string(which) + ": ";
  if (j.p() != 2)
    throw ValidationError(Constraint::kDimension, tag + "homotopy classification needs p = 2");
  if (j.l1() % 2 == 0) throw InvalidInput(tag + "l1 must be odd");
  if (j.w1() % 2 == 0 || j.w2() % 2 == 0) throw InvalidInput(tag + "w1 and w2 must be odd");
}

void require_homogeneous_pair(std::int64_t l1, std::int64_t l2, std::int64_t l2prime) {
  JoinParams::validate(2, l1, l2, 1, 1);
  JoinParams::validate(2, l1, l2prime, 1, 1);
}

Integer mod(const Integer& v, const Integer& m) { return make_residue(v, m).value; }

}  // namespace

const char* to_string(Relation7 r) {
  switch (r) {
    case Relation7::kHomotopy:
      return "homotopy";
    case Relation7::kHomeomorphism:
      return "homeomorphism";
    case Relation7::kDiffeomorphism:
      return "diffeomorphism";
  }
  return "?";
}

ClassificationVerdict kruggel_homotopy_equivalent(const JoinParams& a, const JoinParams& b) {
  require_homotopy_hypotheses(a, "first manifold");
  require_homotopy_hypotheses(b, "second manifold");
  const Integer ma = h4_order(a);
  const Integer mb = h4_order(b);

  ClassificationVerdict v{Relation7::kHomotopy, true, {}};
  v.conditions.push_back({"equal |H^4|", ma == mb, {ma, mb}});

  const Integer pa = big(a.l2() % 2), pb = big(b.l2() % 2);
  v.conditions.push_back({"l2 parity", pa == pb, {pa, pb}});

  const Integer sa = big(a.weight_sum()), sb = big(b.weight_sum());
  const Integer diff = big(a.l1()) * big(a.l1()) * sa * sa - big(b.l1()) * big(b.l1()) * sb * sb;
  // Conditions 3 and 4 live in Z_m for the shared m; when condition 1 already
  // fails, gcd(ma, mb) keeps the remaining checks symmetric.
  Integer m;
  mpz_gcd(m.get_mpz_t(), ma.get_mpz_t(), mb.get_mpz_t());
  const Integer three_m = 3 * m;
  const Integer r3 = mod(diff, three_m);
  v.conditions.push_back({"l1^2|w|^2 difference divisible by 3|H^4|", r3 == 0, {r3, three_m}});

  const Integer ca = big(a.l2()) * big(a.l2()) * big(a.l2());
  const Integer cb = big(b.l2()) * big(b.l2()) * big(b.l2());
  const Integer minus = mod(ca - cb, m);
  const Integer plus = mod(ca + cb, m);
  v.conditions.push_back(
      {"linking form l2^3 agrees up to sign", minus == 0 || plus == 0, {minus, plus, m}});

  v.overall = std::all_of(v.conditions.begin(), v.conditions.end(),
                          [](const Condition& c) { return c.holds; });
  return v;
}

LambdaExponents lambda_exponents(std::int64_t l1) {
  if (l1 <= 0) throw ValidationError(Constraint::kNonPositive, "l1 must be positive");
  LambdaExponents e{};
  switch (l1 % 8) {
    case 2:
    case 6:
      e.lambda2 = 0;
      break;
    case 1:
    case 7:
      e.lambda2 = 1;
      break;
    case 3:
    case 5:
      e.lambda2 = 2;
      break;
    default:  // 0, 4
      e.lambda2 = 3;
      break;
  }
  switch (l1 % 7) {
    case 0:
    case 3:
    case 4:
      e.lambda7 = 1;
      break;
    default:
      e.lambda7 = 0;
      break;
  }
  return e;
}

Integer homeomorphism_modulus(std::int64_t l1) {
  if (l1 <= 0) throw ValidationError(Constraint::kNonPositive, "l1 must be positive");
  const Integer sq = big(l1) * big(l1);
  return (l1 % 2 == 1 || l1 % 4 == 0) ? Integer(2 * sq) : sq;
}

Integer diffeomorphism_modulus(std::int64_t l1) {
  const LambdaExponents e = lambda_exponents(l1);
  Integer m = big(l1) * big(l1);
  m <<= e.lambda2;
  if (e.lambda7) m *= 7;
  return m;
}

ClassificationVerdict ks_verdict(Relation7 relation, std::int64_t l1, std::int64_t l2,
                                 std::int64_t l2prime) {
  if (relation == Relation7::kHomotopy)
    throw InvalidInput("ks_verdict covers homeomorphism and diffeomorphism only");
  require_homogeneous_pair(l1, l2, l2prime);
  const Integer m = relation == Relation7::kHomeomorphism ? homeomorphism_modulus(l1)
                                                          : diffeomorphism_modulus(l1);
  const Integer r = mod(big(l2prime) - big(l2), m);
  ClassificationVerdict v{relation, r == 0, {}};
  v.conditions.push_back({"l2' = l2 mod modulus", r == 0, {r, m}});
  return v;
}

bool ks_homeomorphic(std::int64_t l1, std::int64_t l2, std::int64_t l2prime) {
  return ks_verdict(Relation7::kHomeomorphism, l1, l2, l2prime).overall;
}

bool ks_diffeomorphic(std::int64_t l1, std::int64_t l2, std::int64_t l2prime) {
  return ks_verdict(Relation7::kDiffeomorphism, l1, l2, l2prime).overall;
}

DiffeoPartition partition_diffeo_types(std::int64_t l1,
                                       const std::vector<std::int64_t>& l2_values) {
  const Integer m = diffeomorphism_modulus(l1);
  DiffeoPartition out;
  std::map<Integer, std::set<std::int64_t>> by_residue;
  for (std::int64_t l2 : l2_values) {
    try {
      JoinParams::validate(2, l1, l2, 1, 1);
    } catch (const InvalidInput& e) {
      out.rejected.push_back({l2, e.what()});
      continue;
    }
    by_residue[mod(big(l2), m)].insert(l2);
  }
  for (const auto& [residue, members] : by_residue)
    out.classes.emplace_back(members.begin(), members.end());
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

}  // namespace sasaki
