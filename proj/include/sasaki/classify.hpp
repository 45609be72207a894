#pragma once

// Dimension-7 classification: homotopy equivalence for odd |H^4| and the
// homeomorphism/diffeomorphism congruences for w = (1,1).

#include <cstdint>
#include <string>
#include <vector>

#include "sasaki/joinspace.hpp"

namespace sasaki {

enum class Relation7 { kHomotopy, kHomeomorphism, kDiffeomorphism };

const char* to_string(Relation7 r);

struct Condition {
  std::string label;
  bool holds;
  std::vector<Integer> witness;
};

struct ClassificationVerdict {
  Relation7 relation;
  bool overall;
  std::vector<Condition> conditions;
};

/// Homotopy equivalence of M_a and M_b (a plays the primed role). Both tuples
/// need p = 2 and odd l1, w1, w2; otherwise InvalidInput.
///
/// Conditions, with m = gcd(|H^4(M_a)|, |H^4(M_b)|), the shared order once 1
/// holds:
///   1. |H^4| agree
///   2. l2 parities agree
///   3. 3m divides l1a^2 (w1a+w2a)^2 - l1b^2 (w1b+w2b)^2
///   4. l2a^3 = +-l2b^3 mod m
/// Witnesses: (m_a, m_b), (l2a mod 2, l2b mod 2), (residue, 3m),
/// (l2a^3 - l2b^3 mod m, l2a^3 + l2b^3 mod m, m).
ClassificationVerdict kruggel_homotopy_equivalent(const JoinParams& a, const JoinParams& b);

struct LambdaExponents {
  int lambda2;
  int lambda7;
};

LambdaExponents lambda_exponents(std::int64_t l1);

/// 2 l1^2 for l1 odd or divisible by 4, l1^2 otherwise.
Integer homeomorphism_modulus(std::int64_t l1);
/// 2^lambda2 7^lambda7 l1^2.
Integer diffeomorphism_modulus(std::int64_t l1);

/// p = 2, w = (1,1). Throws ValidationError unless gcd(l1, l2) = gcd(l1, l2') = 1.
bool ks_homeomorphic(std::int64_t l1, std::int64_t l2, std::int64_t l2prime);
bool ks_diffeomorphic(std::int64_t l1, std::int64_t l2, std::int64_t l2prime);

/// Verdict form of the two predicates above, with the congruence as witness.
ClassificationVerdict ks_verdict(Relation7 relation, std::int64_t l1, std::int64_t l2,
                                 std::int64_t l2prime);

struct RejectedMember {
  std::int64_t l2;
  std::string reason;
};

struct DiffeoPartition {
  std::vector<std::vector<std::int64_t>> classes;  // each ascending; ordered by first member
  std::vector<RejectedMember> rejected;
};

/// Partition of the valid l2 values by diffeomorphism type (p = 2, w = (1,1)).
/// Duplicates collapse; invalid members go to `rejected`.
DiffeoPartition partition_diffeo_types(std::int64_t l1, const std::vector<std::int64_t>& l2_values);

}  // namespace sasaki
