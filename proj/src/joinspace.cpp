#include "sasaki/joinspace.hpp"

#include <numeric>

namespace sasaki {

namespace {

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

void require_p_above_one(const JoinParams& j, const char* what) {
  if (j.p() <= 1)
    throw ValidationError(Constraint::kDimension,
                          std::string(what) + " requires p > 1 (use the dimension-5 type for p = 1)");
}

void require_p_two(const JoinParams& j, const char* what) {
  if (j.p() != 2)
    throw ValidationError(Constraint::kDimension, std::string(what) + " requires p = 2");
}

void require_positive(std::initializer_list<std::pair<const char*, std::int64_t>> values) {
  for (const auto& [name, v] : values)
    if (v <= 0)
      throw ValidationError(Constraint::kNonPositive,
                            std::string(name) + " must be positive, got " + std::to_string(v));
}

}  // namespace

JoinParams JoinParams::validate(std::int64_t p, std::int64_t l1, std::int64_t l2, std::int64_t w1,
                                std::int64_t w2) {
  require_positive({{"p", p}, {"l1", l1}, {"l2", l2}, {"w1", w1}, {"w2", w2}});
  if (w1 < w2)
    throw ValidationError(Constraint::kWeightOrder, "weights must satisfy w1 >= w2, got w = (" +
                                                        std::to_string(w1) + "," +
                                                        std::to_string(w2) + ")");
  if (std::gcd(w1, w2) != 1)
    throw ValidationError(Constraint::kWeightsCoprime,
                          "gcd(w1, w2) = " + std::to_string(std::gcd(w1, w2)) + ", must be 1");
  Integer g1 = gcd_of(big(l2), big(l1) * big(w1));
  if (g1 != 1)
    throw ValidationError(Constraint::kL2CoprimeL1W1,
                          "gcd(l2, l1*w1) = " + g1.get_str() + ", must be 1");
  Integer g2 = gcd_of(big(l2), big(l1) * big(w2));
  if (g2 != 1)
    throw ValidationError(Constraint::kL2CoprimeL1W2,
                          "gcd(l2, l1*w2) = " + g2.get_str() + ", must be 1");
  return JoinParams(p, l1, l2, w1, w2);
}

std::string RingPresentation::to_string() const {
  std::string out = "Z[";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ",";
    out += generators[i].name;
  }
  out += "]/(";
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (r) out += ", ";
    const Relation& rel = relations[r];
    if (rel.coefficient != 1) out += rel.coefficient.get_str();
    for (std::size_t i = 0; i < rel.exponents.size(); ++i) {
      if (rel.exponents[i] == 0) continue;
      out += generators[i].name;
      if (rel.exponents[i] > 1) out += "^" + std::to_string(rel.exponents[i]);
    }
  }
  return out + ")";
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::string out;
  for (unsigned i = 0; i < free_rank; ++i) out += out.empty() ? "Z" : " + Z";
  for (const auto& t : torsion) out += (out.empty() ? "Z_" : " + Z_") + t.get_str();
  return out;
}

Residue make_residue(const Integer& value, const Integer& modulus) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return {r, modulus};
}

Integer c1_coefficient(const JoinParams& j) {
  return big(j.l2()) * big(j.p() + 1) - big(j.l1()) * big(j.weight_sum());
}

bool is_spin(const JoinParams& j) { return mpz_even_p(c1_coefficient(j).get_mpz_t()) != 0; }

Integer h4_order(const JoinParams& j) {
  require_p_above_one(j, "|H^4|");
  return big(j.w1()) * big(j.w2()) * big(j.l1()) * big(j.l1());
}

RingPresentation cohomology_ring(const JoinParams& j) {
  require_p_above_one(j, "the cohomology ring");
  RingPresentation r;
  r.generators = {{"x", 2}, {"y", static_cast<int>(2 * j.p() + 1)}};
  r.relations = {{h4_order(j), {2, 0}},
                 {Integer(1), {static_cast<unsigned>(j.p() + 1), 0}},
                 {Integer(1), {2, 1}},
                 {Integer(1), {0, 2}}};
  return r;
}

AbelianGroup cohomology_group(const JoinParams& j, int degree) {
  require_p_above_one(j, "cohomology groups");
  const int top = static_cast<int>(j.dimension());
  if (degree < 0 || degree > top)
    throw InvalidInput("cohomology degree " + std::to_string(degree) + " outside [0, " +
                       std::to_string(top) + "]");
  AbelianGroup g;
  if (degree == 0 || degree == 2 || degree == top || degree == top - 2) {
    g.free_rank = 1;
  } else if (degree % 2 == 0 && degree / 2 >= 2 && degree / 2 <= j.p()) {
    Integer m = h4_order(j);
    if (m > 1) g.torsion.push_back(m);
  }
  return g;
}

AbelianGroup homotopy_group(const JoinParams& j, int i) {
  require_p_above_one(j, "homotopy groups");
  switch (i) {
    case 1:
      return {};
    case 2:
    case 3:
      return {1, {}};
    case 4:
      return {0, {Integer(2)}};
    default:
      throw InvalidInput("homotopy groups are available for 1 <= i <= 4, got i = " +
                         std::to_string(i));
  }
}

Residue p1_class(const JoinParams& j) {
  require_p_two(j, "p1");
  Integer l1 = big(j.l1()), l2 = big(j.l2()), w1 = big(j.w1()), w2 = big(j.w2());
  Integer v = 3 * l2 * l2 - l1 * l1 * (w1 * w1 + w2 * w2);
  return make_residue(v, w1 * w2 * l1 * l1);
}

Residue linking_form(const JoinParams& j) {
  require_p_two(j, "the linking form");
  Integer l1 = big(j.l1()), l2 = big(j.l2());
  return make_residue(l2 * l2 * l2, big(j.w1()) * big(j.w2()) * l1 * l1);
}

BundleType bundle_type_wz(std::int64_t p, std::int64_t l2) {
  require_positive({{"p", p}, {"l2", l2}});
  if (p % 2 == 1 || l2 % 2 == 0) return BundleType::kTrivial;
  return BundleType::kNontrivial;
}

Dim5Type diffeo_type_dim5(std::int64_t l1, std::int64_t l2, std::int64_t w1, std::int64_t w2) {
  JoinParams j = JoinParams::validate(1, l1, l2, w1, w2);
  return (big(j.l1()) * big(j.weight_sum())) % 2 == 0 ? Dim5Type::kProduct : Dim5Type::kTwisted;
}

RingPresentation iterated_join_ring(std::int64_t l1, std::int64_t l2, std::int64_t w1,
                                    std::int64_t w2) {
  require_positive({{"l1", l1}, {"l2", l2}, {"w1", w1}, {"w2", w2}});
  if (std::gcd(l1, l2) != 1)
    throw ValidationError(Constraint::kL1CoprimeL2,
                          "gcd(l1, l2) = " + std::to_string(std::gcd(l1, l2)) + ", must be 1");
  if (std::gcd(w1, w2) != 1)
    throw ValidationError(Constraint::kWeightsCoprime,
                          "gcd(w1, w2) = " + std::to_string(std::gcd(w1, w2)) + ", must be 1");
  RingPresentation r;
  r.generators = {{"x", 2}, {"y", 2}, {"u", 5}, {"z", 5}};
  const Integer one(1);
  r.relations = {
      {one, {2, 0, 0, 0}},
      {big(l2), {1, 1, 0, 0}},
      {big(w1) * big(w2) * big(l1) * big(l1), {0, 2, 0, 0}},
      {one, {0, 0, 0, 2}},
      {one, {0, 0, 2, 0}},
      {one, {0, 0, 1, 1}},
      {one, {1, 0, 0, 1}},
      {one, {1, 0, 1, 0}},
      {one, {0, 1, 1, 0}},
  };
  return r;
}

const char* to_string(Constraint c) {
  switch (c) {
    case Constraint::kNonPositive:
      return "positive";
    case Constraint::kWeightOrder:
      return "weight-order";
    case Constraint::kWeightsCoprime:
      return "weights-coprime";
    case Constraint::kL2CoprimeL1W1:
      return "l2-coprime-l1w1";
    case Constraint::kL2CoprimeL1W2:
      return "l2-coprime-l1w2";
    case Constraint::kL1CoprimeL2:
      return "l1-coprime-l2";
    case Constraint::kDimension:
      return "dimension";
  }
  return "?";
}

const char* to_string(BundleType t) {
  return t == BundleType::kTrivial ? "trivial" : "nontrivial";
}

const char* to_string(Dim5Type t) { return t == Dim5Type::kProduct ? "S2xS3" : "twisted"; }

}  // namespace sasaki
