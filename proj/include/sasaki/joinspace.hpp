#pragma once

// Parameters of the join M = S^{2p+1} *_{l1,l2} S^3_w and its topological
// invariants.

#include <cstdint>
#include <string>
#include <vector>

#include "sasaki/errors.hpp"
#include "sasaki/exactpoly.hpp"

namespace sasaki {

enum class Constraint {
  kNonPositive,
  kWeightOrder,       // w1 >= w2
  kWeightsCoprime,    // gcd(w1, w2) = 1
  kL2CoprimeL1W1,     // gcd(l2, l1*w1) = 1
  kL2CoprimeL1W2,     // gcd(l2, l1*w2) = 1
  kL1CoprimeL2,       // gcd(l1, l2) = 1
  kDimension,         // operation needs a particular p
};

class ValidationError : public InvalidInput {
 public:
  ValidationError(Constraint c, const std::string& what) : InvalidInput(what), constraint_(c) {}
  Constraint constraint() const { return constraint_; }

 private:
  Constraint constraint_;
};

/// Validated (p, l1, l2, w1, w2). Construct through validate().
class JoinParams {
 public:
  /// Throws ValidationError naming the first violated constraint. w1 < w2 is
  /// rejected rather than swapped.
  static JoinParams validate(std::int64_t p, std::int64_t l1, std::int64_t l2, std::int64_t w1,
                             std::int64_t w2);

  std::int64_t p() const { return p_; }
  std::int64_t l1() const { return l1_; }
  std::int64_t l2() const { return l2_; }
  std::int64_t w1() const { return w1_; }
  std::int64_t w2() const { return w2_; }
  std::int64_t weight_sum() const { return w1_ + w2_; }
  bool homogeneous() const { return w1_ == 1 && w2_ == 1; }
  /// Real dimension 2p + 3.
  std::int64_t dimension() const { return 2 * p_ + 3; }

  friend bool operator==(const JoinParams&, const JoinParams&) = default;

 private:
  JoinParams(std::int64_t p, std::int64_t l1, std::int64_t l2, std::int64_t w1, std::int64_t w2)
      : p_(p), l1_(l1), l2_(l2), w1_(w1), w2_(w2) {}

  std::int64_t p_, l1_, l2_, w1_, w2_;
};

struct Generator {
  std::string name;
  int degree;
};

/// coefficient * prod generator_i^exponents[i] = 0.
struct Relation {
  Integer coefficient;
  std::vector<unsigned> exponents;
};

struct RingPresentation {
  std::vector<Generator> generators;
  std::vector<Relation> relations;

  /// e.g. "Z[x,y]/(25x^2, x^3, x^2y, y^2)".
  std::string to_string() const;
};

struct AbelianGroup {
  unsigned free_rank = 0;
  std::vector<Integer> torsion;  // entries > 1

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  /// "0", "Z", "Z_25", "Z + Z_2".
  std::string to_string() const;
};

/// Canonical representative in [0, modulus).
struct Residue {
  Integer value;
  Integer modulus;
};

Residue make_residue(const Integer& value, const Integer& modulus);

/// c1(D) = coefficient * gamma with gamma the positive generator of H^2.
Integer c1_coefficient(const JoinParams& j);

/// w2 is the mod-2 reduction of c1.
bool is_spin(const JoinParams& j);

/// |H^4| = w1 w2 l1^2. Needs p > 1.
Integer h4_order(const JoinParams& j);

/// Z[x,y]/(w1 w2 l1^2 x^2, x^{p+1}, x^2 y, y^2), deg x = 2, deg y = 2p+1.
/// Needs p > 1; p = 1 is handled by diffeo_type_dim5.
RingPresentation cohomology_ring(const JoinParams& j);

/// H^degree(M; Z) for 0 <= degree <= 2p+3. Needs p > 1.
AbelianGroup cohomology_group(const JoinParams& j, int degree);

/// pi_i for 1 <= i <= 4. Needs p > 1.
AbelianGroup homotopy_group(const JoinParams& j, int i);

/// First Pontryagin class 3 l2^2 - l1^2 (w1^2 + w2^2) in H^4 = Z_m. Needs p = 2.
Residue p1_class(const JoinParams& j);

/// Linking form l2^3 in Z_m, m = |H^4|. Needs p = 2.
Residue linking_form(const JoinParams& j);

enum class BundleType { kTrivial, kNontrivial };

/// Wang-Ziller bundle type over S^2 for l1 = 1, w = (1,1).
BundleType bundle_type_wz(std::int64_t p, std::int64_t l2);

enum class Dim5Type { kProduct, kTwisted };  // S^2 x S^3, or the nontrivial S^3-bundle

Dim5Type diffeo_type_dim5(std::int64_t l1, std::int64_t l2, std::int64_t w1, std::int64_t w2);

/// Ring of the iterated join with p = q = 1:
/// Z[x,y,u,z]/(x^2, l2 xy, w1 w2 l1^2 y^2, z^2, u^2, zu, zx, ux, uy).
RingPresentation iterated_join_ring(std::int64_t l1, std::int64_t l2, std::int64_t w1,
                                    std::int64_t w2);

const char* to_string(Constraint c);
const char* to_string(BundleType t);
const char* to_string(Dim5Type t);

}  // namespace sasaki
