#pragma once

// The CSC polynomial f(b) on the w-cone of M_{l1,l2,w} and the rays it picks
// out.
//
// A ray b is reported as CSC when f(b) = 0, i.e. when its admissible extremal
// representative has constant scalar curvature. Whether some other extremal
// metric in the same isotopy class could be CSC is not decided here.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sasaki/exactpoly.hpp"
#include "sasaki/joinspace.hpp"

namespace sasaki {

struct CscPolynomial {
  poly::IntPolynomial poly;  // degree 2p+4 in b
  JoinParams params;
  Rational forbidden_root;   // w2/w1
};

/// Coefficients of f straight from the parameters, with no validation and no
/// ordering requirement on the weights.
poly::IntPolynomial csc_polynomial(std::int64_t p, std::int64_t l1, std::int64_t l2,
                                   std::int64_t w1, std::int64_t w2);

CscPolynomial build_f(const JoinParams& j);

/// The cubic g with f = (w1 b - w2)^3 g when p = 1.
poly::IntPolynomial build_g_p1(std::int64_t l1, std::int64_t l2, std::int64_t w1,
                               std::int64_t w2);

/// The closed form 2(1+p)^2(p+2)(p(p+1) l2 - 2(3+2p) l1) for f''''(1), w = (1,1).
/// Differentiating f directly gives this value divided by 1+p; the sign,
/// which is all the threshold depends on, is the same.
Integer fourth_derivative_at_one(std::int64_t p, std::int64_t l1, std::int64_t l2);

/// 2(3+2p) l1 / (p(p+1)); extra CSC rays exist iff l2 is strictly above.
Rational wz_threshold(std::int64_t p, std::int64_t l1);

struct Deflation {
  poly::IntPolynomial quotient;
  unsigned removed_multiplicity;
};

/// Divides out the full power of (w1 b - w2). Throws InvariantViolation if that
/// power is below 3 (w1 > w2) or below 4 (w = (1,1)).
Deflation deflate_forbidden(const CscPolynomial& fp);

enum class RayClass { kRegular, kQuasiRegular, kIrregular };

const char* to_string(RayClass c);

struct Ray {
  poly::RootRecord root;
  RayClass ray_class;
  /// Index of the reciprocal ray identified with this one under the Weyl
  /// group, w = (1,1) only.
  std::optional<std::size_t> partner;
};

struct RayReport {
  std::vector<Ray> rays;  // ascending in b
  std::size_t unreduced_count = 0;
  std::size_t reduced_count = 0;
  bool weyl_paired = false;
  unsigned forbidden_multiplicity = 0;
  poly::IntPolynomial deflated;
};

/// Rays of the w-cone whose admissible extremal structure is CSC. For
/// w = (1,1) the regular ray b = 1 comes first among equals and reciprocal
/// roots are paired into one reduced ray.
RayReport csc_rays(const JoinParams& j, unsigned digits = poly::kDefaultDigits);

struct CscSweepRow {
  std::int64_t l2;
  bool valid;
  std::string skip_reason;     // set when !valid
  std::size_t unreduced = 0;
  std::size_t reduced = 0;
  bool multiple = false;       // reaches the maximal ray count
};

struct CscSweep {
  std::vector<CscSweepRow> rows;  // ascending l2
  std::optional<std::int64_t> threshold;
};

/// Evaluates every l2 in [l2_lo, l2_hi] (stride 1 or 2 from l2_lo) on up to
/// `jobs` workers. Invalid l2 values are kept as skipped rows. Throws
/// InvalidInput on invalid (p, l1, w) or an empty range.
CscSweep sweep_csc(std::int64_t p, std::int64_t l1, std::int64_t w1, std::int64_t w2,
                   std::int64_t l2_lo, std::int64_t l2_hi, std::int64_t stride = 1,
                   unsigned jobs = 1);

/// Least valid l2 <= search_bound reaching 3 unreduced rays (w1 > w2) or 2
/// reduced rays (w = (1,1)).
std::optional<std::int64_t> min_l2_multiple_csc(std::int64_t p, std::int64_t l1, std::int64_t w1,
                                                std::int64_t w2, std::int64_t search_bound,
                                                unsigned jobs = 1);

struct CoprimePair {
  std::int64_t l1;
  std::int64_t l2;
};

/// Smallest coprime (l1, l2) for which f (w = (1,1)) vanishes at 1/2, 1 and 2.
/// Throws InvalidInput when the defining linear relation has no positive
/// solution.
CoprimePair quasireg_family(std::int64_t p);

}  // namespace sasaki
