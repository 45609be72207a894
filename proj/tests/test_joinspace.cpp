#include <numeric>

#include "doctest.h"
#include "sasaki/joinspace.hpp"

using namespace sasaki;

namespace {

JoinParams jp(std::int64_t p, std::int64_t l1, std::int64_t l2, std::int64_t w1, std::int64_t w2) {
  return JoinParams::validate(p, l1, l2, w1, w2);
}

Constraint rejection(std::int64_t p, std::int64_t l1, std::int64_t l2, std::int64_t w1,
                     std::int64_t w2) {
  try {
    JoinParams::validate(p, l1, l2, w1, w2);
  } catch (const ValidationError& e) {
    return e.constraint();
  }
  FAIL("expected a rejection");
  return Constraint::kNonPositive;
}

bool valid(std::int64_t p, std::int64_t l1, std::int64_t l2, std::int64_t w1, std::int64_t w2) {
  try {
    JoinParams::validate(p, l1, l2, w1, w2);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

// Degree-d part of a monomial quotient ring: each monomial of degree d is
// killed by a unit relation dividing it, cut to Z_g by non-unit relations
// dividing it (g their gcd), or survives as Z.
AbelianGroup monomial_basis_group(const RingPresentation& ring, int d) {
  AbelianGroup g;
  const std::size_t n = ring.generators.size();
  std::vector<unsigned> e(n, 0);
  auto visit = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == n) {
      if (remaining != 0) return;
      Integer gcd_all = 0;
      for (const auto& rel : ring.relations) {
        bool divides = true;
        for (std::size_t k = 0; k < n; ++k) divides = divides && rel.exponents[k] <= e[k];
        if (divides) mpz_gcd(gcd_all.get_mpz_t(), gcd_all.get_mpz_t(), rel.coefficient.get_mpz_t());
      }
      if (gcd_all == 0) {
        ++g.free_rank;
      } else if (gcd_all != 1) {
        g.torsion.push_back(gcd_all);
      }
      return;
    }
    for (unsigned a = 0; static_cast<int>(a) * ring.generators[i].degree <= remaining; ++a) {
      e[i] = a;
      self(self, i + 1, remaining - static_cast<int>(a) * ring.generators[i].degree);
    }
    e[i] = 0;
  };
  visit(visit, 0, d);
  return g;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(jp(2, 5, 21, 1, 1).dimension() == 7);
  CHECK(jp(1, 1, 19, 3, 2).weight_sum() == 5);
  CHECK(rejection(1, 1, 10, 3, 2) == Constraint::kL2CoprimeL1W2);
  CHECK(rejection(1, 1, 9, 3, 2) == Constraint::kL2CoprimeL1W1);
  CHECK(rejection(1, 1, 5, 2, 3) == Constraint::kWeightOrder);
  CHECK(rejection(1, 1, 5, 4, 2) == Constraint::kWeightsCoprime);
  CHECK(rejection(0, 1, 5, 1, 1) == Constraint::kNonPositive);
  CHECK(rejection(1, -1, 5, 1, 1) == Constraint::kNonPositive);
  CHECK(rejection(2, 2, 4, 1, 1) == Constraint::kL2CoprimeL1W1);
  try {
    JoinParams::validate(1, 1, 10, 3, 2);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("gcd(l2, l1*w2)") != std::string::npos);
  }
}

TEST_CASE("valid parameters imply gcd(l1, l2) = 1") {
  for (int l1 = 1; l1 <= 20; ++l1)
    for (int l2 = 1; l2 <= 20; ++l2)
      for (int w1 = 1; w1 <= 6; ++w1)
        for (int w2 = 1; w2 <= w1; ++w2)
          if (valid(1, l1, l2, w1, w2)) CHECK(std::gcd(l1, l2) == 1);
}

TEST_CASE("c1 and spin") {
  CHECK(c1_coefficient(jp(2, 1, 7, 1, 1)) == 19);
  CHECK(c1_coefficient(jp(2, 2, 1, 1, 1)) == -1);
  CHECK(c1_coefficient(jp(1, 1, 1, 1, 1)) == 0);
  CHECK_FALSE(is_spin(jp(2, 5, 21, 1, 1)));
  CHECK(is_spin(jp(2, 1, 4, 1, 1)));
  CHECK(is_spin(jp(3, 2, 5, 3, 2)));
  for (int p = 1; p <= 20; p += 3)
    for (int l1 = 1; l1 <= 20; ++l1)
      for (int l2 = 1; l2 <= 20; ++l2)
        for (int w1 = 1; w1 <= 20; w1 += 2)
          for (int w2 = 1; w2 <= w1; w2 += 3) {
            if (!valid(p, l1, l2, w1, w2)) continue;
            const JoinParams j = jp(p, l1, l2, w1, w2);
            const Integer c1 = l2 * (p + 1) - l1 * (w1 + w2);
            CHECK(c1_coefficient(j) == c1);
            CHECK(is_spin(j) == (c1 % 2 == 0));
          }
}

TEST_CASE("spin exactly when l1 is even or both weights odd, p odd") {
  for (int p = 1; p <= 7; p += 2)
    for (int l1 = 1; l1 <= 12; ++l1)
      for (int l2 = 1; l2 <= 12; ++l2)
        for (int w1 = 1; w1 <= 7; ++w1)
          for (int w2 = 1; w2 <= w1; ++w2)
            if (valid(p, l1, l2, w1, w2))
              CHECK(is_spin(jp(p, l1, l2, w1, w2)) == (l1 % 2 == 0 || (w1 % 2 == 1 && w2 % 2 == 1)));
}

TEST_CASE("order of H^4") {
  CHECK(h4_order(jp(2, 5, 21, 1, 1)) == 25);
  CHECK(h4_order(jp(2, 1, 21, 25, 1)) == 25);
  CHECK(h4_order(jp(2, 1, 3, 1, 1)) == 1);
  CHECK_THROWS_AS(h4_order(jp(1, 1, 19, 3, 2)), InvalidInput);
  // l1 = a, w = (b, c) collides with l1 = 1, w = (a^2 b c, 1)
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= b; ++c)
        for (int l2 = 1; l2 <= 30; ++l2)
          if (valid(2, a, l2, b, c) && valid(2, 1, l2, a * a * b * c, 1))
            CHECK(h4_order(jp(2, a, l2, b, c)) == h4_order(jp(2, 1, l2, a * a * b * c, 1)));
}

TEST_CASE("cohomology ring presentations") {
  CHECK(cohomology_ring(jp(2, 5, 21, 1, 1)).to_string() == "Z[x,y]/(25x^2, x^3, x^2y, y^2)");
  CHECK(cohomology_ring(jp(3, 1, 5, 3, 2)).to_string() == "Z[x,y]/(6x^2, x^4, x^2y, y^2)");
  CHECK(cohomology_ring(jp(2, 1, 3, 1, 1)).to_string() == "Z[x,y]/(x^2, x^3, x^2y, y^2)");
  const auto r = cohomology_ring(jp(4, 1, 5, 1, 1));
  CHECK(r.generators[1].degree == 9);
  CHECK_THROWS_AS(cohomology_ring(jp(1, 1, 19, 3, 2)), InvalidInput);
}

TEST_CASE("cohomology groups") {
  const JoinParams j = jp(2, 5, 21, 1, 1);
  CHECK(cohomology_group(j, 4) == AbelianGroup{0, {Integer(25)}});
  CHECK(cohomology_group(j, 7) == AbelianGroup{1, {}});
  CHECK(cohomology_group(j, 1).trivial());
  CHECK(cohomology_group(j, 4).to_string() == "Z_25");
  CHECK_THROWS_AS(cohomology_group(j, 8), InvalidInput);
  CHECK_THROWS_AS(cohomology_group(j, -1), InvalidInput);
}

TEST_CASE("cohomology groups agree with monomial basis enumeration") {
  for (int p = 2; p <= 5; ++p)
    for (int l1 = 1; l1 <= 10; ++l1)
      for (int l2 = 1; l2 <= 10; ++l2)
        for (int w1 = 1; w1 <= 10; ++w1)
          for (int w2 = 1; w2 <= w1; ++w2) {
            if (!valid(p, l1, l2, w1, w2)) continue;
            const JoinParams j = jp(p, l1, l2, w1, w2);
            const RingPresentation ring = cohomology_ring(j);
            const int top = 2 * p + 3;
            int euler = 0;
            for (int d = 0; d <= top; ++d) {
              const AbelianGroup g = cohomology_group(j, d);
              CHECK(g == monomial_basis_group(ring, d));
              CHECK(g.free_rank == cohomology_group(j, top - d).free_rank);
              euler += (d % 2 == 0 ? 1 : -1) * static_cast<int>(g.free_rank);
            }
            CHECK(euler == 0);
          }
}

TEST_CASE("homotopy groups") {
  const JoinParams j = jp(2, 5, 21, 1, 1);
  CHECK(homotopy_group(j, 1).trivial());
  CHECK(homotopy_group(j, 2).to_string() == "Z");
  CHECK(homotopy_group(j, 3).to_string() == "Z");
  CHECK(homotopy_group(j, 4).to_string() == "Z_2");
  CHECK_THROWS_AS(homotopy_group(j, 5), InvalidInput);
  CHECK_THROWS_AS(homotopy_group(j, 0), InvalidInput);
}

TEST_CASE("p1 and linking form") {
  CHECK(p1_class(jp(2, 5, 21, 1, 1)).value == 23);
  CHECK(p1_class(jp(2, 5, 29, 1, 1)).value == 23);
  CHECK(p1_class(jp(2, 1, 21, 25, 1)).value == 22);
  CHECK(p1_class(jp(2, 1, 29, 25, 1)).value == 22);
  CHECK(p1_class(jp(2, 5, 21, 1, 1)).modulus == 25);
  CHECK(linking_form(jp(2, 5, 21, 1, 1)).value == 11);
  CHECK(linking_form(jp(2, 5, 29, 1, 1)).value == 14);
  CHECK((11 + 14) % 25 == 0);
  CHECK(linking_form(jp(2, 1, 4, 1, 1)).value == 0);
  CHECK_THROWS_AS(p1_class(jp(3, 5, 21, 1, 1)), InvalidInput);
  CHECK_THROWS_AS(linking_form(jp(1, 5, 21, 1, 1)), InvalidInput);

  for (int l1 = 1; l1 <= 9; ++l1)
    for (int l2 = 1; l2 <= 40; ++l2)
      for (int w1 = 1; w1 <= 5; ++w1)
        for (int w2 = 1; w2 <= w1; ++w2) {
          if (!valid(2, l1, l2, w1, w2)) continue;
          const JoinParams j = jp(2, l1, l2, w1, w2);
          const long m = static_cast<long>(w1) * w2 * l1 * l1;
          const long raw = 3L * l2 * l2 - static_cast<long>(l1) * l1 * (w1 * w1 + w2 * w2);
          CHECK(p1_class(j).value == ((raw % m) + m) % m);
          CHECK(linking_form(j).value == (static_cast<long>(l2) * l2 * l2) % m);
        }
}

TEST_CASE("residues are canonical") {
  CHECK(make_residue(Integer(-1), Integer(25)).value == 24);
  CHECK(make_residue(Integer(50), Integer(25)).value == 0);
}

TEST_CASE("Wang-Ziller bundle type") {
  CHECK(bundle_type_wz(3, 4) == BundleType::kTrivial);
  CHECK(bundle_type_wz(2, 5) == BundleType::kNontrivial);
  CHECK(bundle_type_wz(2, 4) == BundleType::kTrivial);
  CHECK(std::string(to_string(BundleType::kNontrivial)) == "nontrivial");
}

TEST_CASE("five-dimensional type") {
  CHECK(diffeo_type_dim5(1, 19, 3, 2) == Dim5Type::kTwisted);
  CHECK(diffeo_type_dim5(2, 7, 1, 1) == Dim5Type::kProduct);
  CHECK(diffeo_type_dim5(1, 8, 1, 1) == Dim5Type::kProduct);
  CHECK(std::string(to_string(Dim5Type::kProduct)) == "S2xS3");
  CHECK_THROWS_AS(diffeo_type_dim5(1, 10, 3, 2), ValidationError);
}

TEST_CASE("iterated join ring") {
  CHECK(iterated_join_ring(1, 1, 2, 1).to_string() ==
        "Z[x,y,u,z]/(x^2, xy, 2y^2, z^2, u^2, uz, xz, xu, yu)");
  CHECK(iterated_join_ring(1, 1, 1, 1).relations[2].coefficient == 1);
  const auto r = iterated_join_ring(3, 2, 2, 1);
  CHECK(r.relations[1].coefficient == 2);
  CHECK(r.relations[2].coefficient == 18);
  CHECK(r.generators[2].degree == 5);
  CHECK_THROWS_AS(iterated_join_ring(2, 2, 1, 1), ValidationError);
}
