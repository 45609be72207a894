// Acceptance checks, one line per criterion. Exit status is nonzero when any
// criterion fails.

#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracle.hpp"
#include "sasaki/classify.hpp"
#include "sasaki/cscrays.hpp"
#include "sasaki/joinspace.hpp"
#include "sasaki/parallel.hpp"
#include "sasaki/report.hpp"

using namespace sasaki;
using poly::IntPolynomial;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

bool valid(std::int64_t p, std::int64_t l1, std::int64_t l2, std::int64_t w1, std::int64_t w2) {
  try {
    JoinParams::validate(p, l1, l2, w1, w2);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

Outcome criterion1() {
  const auto least = min_l2_multiple_csc(1, 1, 3, 2, 100);
  if (least != std::optional<std::int64_t>(19))
    return {false, "minimal l2 = " + (least ? std::to_string(*least) : std::string("none"))};

  cli::CliRequest req;
  req.subcommand = cli::Subcommand::kCsc;
  req.p = 1;
  req.l1 = 1;
  req.l2 = 19;
  req.w1 = 3;
  req.w2 = 2;
  const cli::CliReport report = cli::run(req);
  const cli::Json& rays = report.payload["rays"];
  if (rays.size() != 3) return {false, "ray count " + std::to_string(rays.size())};
  if (rays[1].value("exact", "") != "1/3") return {false, "middle ray is not 1/3"};

  // 3b^2 - 14b + 4 has roots (7 -+ sqrt 37)/3
  const IntPolynomial q{4, -14, 3};
  const Rational max_width(1, Integer("1000000000000"));
  for (int i : {0, 2}) {
    const cli::Json& iv = rays[i]["interval"];
    const Rational lo = cli::parse_rational(iv["lo"]);
    const Rational hi = cli::parse_rational(iv["hi"]);
    if (hi - lo > max_width) return {false, "interval wider than 1e-12"};
    if (poly::sign_at(q, lo) * poly::sign_at(q, hi) >= 0)
      return {false, "interval " + std::to_string(i) + " misses (7+-sqrt37)/3"};
    if (rays[i].contains("rational") && rays[i]["rational"] != false)
      return {false, "irrational ray flagged rational"};
  }
  return {true, "least l2 = 19; 1/3 exact; (7-sqrt37)/3, (7+sqrt37)/3 bracketed within 1e-12"};
}

Outcome criterion2() {
  const std::int64_t expected[] = {6, 3, 2, 2};
  std::ostringstream got;
  bool ok = true;
  for (std::int64_t p = 1; p <= 4; ++p) {
    const auto least = min_l2_multiple_csc(p, 1, 1, 1, 50, jobs());
    got << (p > 1 ? "," : "") << (least ? std::to_string(*least) : "none");
    ok = ok && least == std::optional<std::int64_t>(expected[p - 1]);
  }
  for (std::int64_t p = 5; p <= 8; ++p) {
    const CscSweep s = sweep_csc(p, 1, 1, 1, 1, 40, 1, jobs());
    for (const auto& row : s.rows)
      if (!row.valid || row.reduced != 2) {
        ok = false;
        got << "; p=" << p << " l2=" << row.l2 << " reduced=" << row.reduced;
      }
  }
  return {ok, "minimal l2 for p=1..4: " + got.str() + "; p=5..8 all l2 in 1..40 qualify"};
}

Outcome criterion3() {
  const JoinParams j = JoinParams::validate(1, 1, 5, 1, 1);
  const IntPolynomial expected{-1, 6, -15, 20, -15, 6, -1};
  if (!(build_f(j).poly == expected)) return {false, "f = " + poly::to_string(build_f(j).poly)};
  const RayReport r = csc_rays(j);
  if (r.rays.size() != 1 || r.rays[0].ray_class != RayClass::kRegular)
    return {false, std::to_string(r.rays.size()) + " rays"};
  return {true, "f = -(b-1)^6, one regular ray"};
}

Outcome criterion4() {
  const CoprimePair c = quasireg_family(1);
  if (c.l1 != 2 || c.l2 != 11)
    return {false, "quasireg_family(1) = (" + std::to_string(c.l1) + ", " + std::to_string(c.l2) + ")"};
  const auto roots = poly::rational_roots(build_f(JoinParams::validate(1, 2, 11, 1, 1)).poly);
  const bool ok = roots.size() == 3 && roots[0].value == Rational(1, 2) && roots[0].multiplicity == 1 &&
                  roots[1].value == 1 && roots[1].multiplicity == 4 && roots[2].value == 2 &&
                  roots[2].multiplicity == 1;
  std::string listed;
  for (const auto& r : roots)
    listed += poly::to_string(r.value) + " (x" + std::to_string(r.multiplicity) + ") ";
  return {ok, "quasireg_family(1) = (2, 11); rational roots " + listed};
}

Outcome criterion5() {
  std::size_t checked = 0, mismatched = 0;
  std::string ratios;
  for (std::int64_t p = 1; p <= 6; ++p) {
    std::optional<Rational> ratio;
    bool ratio_constant = true;
    for (std::int64_t l1 = 1; l1 <= 10; ++l1)
      for (std::int64_t l2 = 1; l2 <= 10; ++l2) {
        if (!valid(p, l1, l2, 1, 1)) continue;
        ++checked;
        const Rational direct =
            poly::evaluate(poly::derivative(csc_polynomial(p, l1, l2, 1, 1), 4), Rational(1));
        const Integer closed = 2 * (1 + p) * (1 + p) * (p + 2) * (p * (p + 1) * l2 - 2 * (3 + 2 * p) * l1);
        if (direct == Rational(closed)) continue;
        ++mismatched;
        if (direct != 0) {
          const Rational r = Rational(closed) / direct;
          if (ratio && *ratio != r) ratio_constant = false;
          ratio = r;
        }
      }
    if (ratio) ratios += " p=" + std::to_string(p) + ":" + (ratio_constant ? poly::to_string(*ratio) : "varies");
  }
  if (mismatched == 0) return {true, std::to_string(checked) + " parameter sets agree"};
  return {false, std::to_string(mismatched) + "/" + std::to_string(checked) +
                     " disagree; closed form / direct derivative =" + ratios + " (signs agree)"};
}

Outcome criterion6() {
  const bool verdicts = ks_homeomorphic(5, 39, 89) && !ks_diffeomorphic(5, 39, 89) &&
                        ks_diffeomorphic(5, 39, 139);
  const bool five = homeomorphism_modulus(5) == 50 && diffeomorphism_modulus(5) == 100;
  const bool two = homeomorphism_modulus(2) == 4 && diffeomorphism_modulus(2) == 4;
  return {verdicts && five && two,
          std::string("verdicts ") + (verdicts ? "ok" : "wrong") + "; l1=5 moduli (" +
              homeomorphism_modulus(5).get_str() + ", " + diffeomorphism_modulus(5).get_str() +
              "); l1=2 moduli (" + homeomorphism_modulus(2).get_str() + ", " +
              diffeomorphism_modulus(2).get_str() + ")"};
}

struct SubResult {
  std::string label;
  bool pass;
  std::string detail;
};

Outcome criterion7(std::vector<SubResult>& subs) {
  const JoinParams t[] = {JoinParams::validate(2, 5, 21, 1, 1), JoinParams::validate(2, 5, 29, 1, 1),
                          JoinParams::validate(2, 1, 21, 25, 1),
                          JoinParams::validate(2, 1, 29, 25, 1)};
  const char* names[] = {"(5,21,(1,1))", "(5,29,(1,1))", "(1,21,(25,1))", "(1,29,(25,1))"};

  const bool within = kruggel_homotopy_equivalent(t[0], t[1]).overall &&
                      kruggel_homotopy_equivalent(t[2], t[3]).overall;
  subs.push_back({"7a", within, "within-pair verdicts " + std::string(within ? "equivalent" : "not equivalent")});

  std::string failing;
  std::size_t equivalent = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const auto v = kruggel_homotopy_equivalent(t[a], t[b]);
      if (v.overall) {
        ++equivalent;
        continue;
      }
      failing += std::string(" ") + names[a] + "~" + names[b];
      for (const auto& c : v.conditions)
        if (!c.holds) failing += "[" + c.label + "]";
    }
  subs.push_back({"7b", equivalent == 6,
                  std::to_string(equivalent) + "/6 pairs equivalent" +
                      (failing.empty() ? "" : "; not equivalent:" + failing)});

  bool cond3 = true;
  std::size_t tested = 0;
  for (std::int64_t l2 = 1; l2 <= 100; ++l2) {
    if (!valid(2, 5, l2, 1, 1) || !valid(2, 1, l2, 25, 1)) continue;
    ++tested;
    const auto v = kruggel_homotopy_equivalent(JoinParams::validate(2, 5, l2, 1, 1),
                                               JoinParams::validate(2, 1, l2, 25, 1));
    cond3 = cond3 && !v.conditions[2].holds;
  }
  subs.push_back({"7c", cond3, "condition 3 fails for " + std::string(cond3 ? "all " : "not all ") +
                                   std::to_string(tested) + " valid l2 <= 100"});

  const Residue r[] = {p1_class(t[0]), p1_class(t[1]), p1_class(t[2]), p1_class(t[3])};
  const bool p1 = r[0].value == 23 && r[1].value == 23 && r[2].value == 22 && r[3].value == 22 &&
                  r[0].modulus == 25 && r[2].modulus == 25;
  subs.push_back({"7d", p1,
                  "p1 residues " + r[0].value.get_str() + "," + r[1].value.get_str() + " vs " +
                      r[2].value.get_str() + "," + r[3].value.get_str() + " mod 25"});

  bool all = true;
  for (const auto& s : subs) all = all && s.pass;
  return {all, "pairwise equivalence of all four tuples and the condition-3 failure cannot both hold"};
}

Outcome criterion8() {
  struct Case {
    std::int64_t p, l1, l2, w1, w2;
  };
  std::vector<Case> nonhom, hom;
  for (std::int64_t p = 1; p <= 4; ++p)
    for (std::int64_t l1 = 1; l1 <= 20; ++l1)
      for (std::int64_t l2 = 1; l2 <= 20; ++l2) {
        if (valid(p, l1, l2, 1, 1) && Rational(l2) <= wz_threshold(p, l1)) hom.push_back({p, l1, l2, 1, 1});
        for (std::int64_t w1 = 2; w1 <= 20; ++w1)
          for (std::int64_t w2 = 1; w2 < w1; ++w2) {
            if (!valid(p, l1, l2, w1, w2)) continue;
            if (c1_coefficient(JoinParams::validate(p, l1, l2, w1, w2)) > 0) continue;
            nonhom.push_back({p, l1, l2, w1, w2});
          }
      }

  auto count_bad = [](const std::vector<Case>& cases, bool regular_only) {
    std::vector<char> bad(cases.size(), 0);
    parallel_for(cases.size(), jobs(), [&](std::size_t i) {
      const Case& c = cases[i];
      const RayReport r = csc_rays(JoinParams::validate(c.p, c.l1, c.l2, c.w1, c.w2), 1);
      bad[i] = r.rays.size() != 1 || (regular_only && r.rays[0].ray_class != RayClass::kRegular);
    });
    return static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
  };
  const std::size_t bad_nonhom = count_bad(nonhom, false);
  const std::size_t bad_hom = count_bad(hom, true);
  return {bad_nonhom == 0 && bad_hom == 0,
          std::to_string(nonhom.size() - bad_nonhom) + "/" + std::to_string(nonhom.size()) +
              " w1>w2, c1<=0 cases with one ray; " + std::to_string(hom.size() - bad_hom) + "/" +
              std::to_string(hom.size()) + " w=(1,1), l2<=threshold cases with one regular ray"};
}

Outcome criterion9() {
  std::size_t sampled = 0, failures = 0;
  unsigned max_total = 0;
  std::string first;
  for (std::int64_t p = 1; p <= 5; ++p)
    for (std::int64_t l1 = 1; l1 <= 15; ++l1)
      for (std::int64_t l2 = 1; l2 <= 15; ++l2)
        for (std::int64_t w1 = 1; w1 <= 15; ++w1)
          for (std::int64_t w2 = 1; w2 <= w1; ++w2) {
            if (!valid(p, l1, l2, w1, w2)) continue;
            ++sampled;
            const JoinParams j = JoinParams::validate(p, l1, l2, w1, w2);
            const CscPolynomial f = build_f(j);
            std::string why;
            try {
              const Deflation d = deflate_forbidden(f);
              if (d.removed_multiplicity < (j.homogeneous() ? 4u : 3u)) why = "deflation k too small";
            } catch (const InvariantViolation& e) {
              why = e.what();
            }
            if (j.homogeneous() && !(poly::reverse(f.poly) == f.poly)) why = "not palindromic";
            if (!(poly::reverse(csc_polynomial(p, l1, l2, w2, w1)) == f.poly)) why = "swap identity fails";
            // positive roots counted with multiplicity, one Sturm count per square-free factor
            unsigned total = 0;
            for (const auto& fac : poly::squarefree_decompose(f.poly))
              total += fac.multiplicity *
                       poly::sturm_count(fac.factor, Rational(0), poly::ExtRational::pos_infinity());
            max_total = std::max(max_total, total);
            if (total > 6) why = "positive multiplicity " + std::to_string(total);
            if (!why.empty()) {
              ++failures;
              if (first.empty())
                first = " first: (" + std::to_string(p) + "," + std::to_string(l1) + "," +
                        std::to_string(l2) + "," + std::to_string(w1) + "," + std::to_string(w2) +
                        ") " + why;
            }
          }
  return {failures == 0, std::to_string(sampled - failures) + "/" + std::to_string(sampled) +
                             " parameter sets pass; largest positive multiplicity total " +
                             std::to_string(max_total) + first};
}

Outcome criterion10() {
  std::mt19937_64 rng(20240611);
  std::size_t agree = 0;
  std::string first;
  for (int t = 0; t < 200; ++t) {
    const auto coeffs = oracle::random_poly(rng, 10, 50);
    const IntPolynomial p(coeffs);
    const auto got = poly::isolate_positive_roots(p);
    const auto want = oracle::positive_roots(oracle::from_ints(coeffs));
    std::string why;
    if (got.size() != want.size()) {
      why = "count " + std::to_string(got.size()) + " vs " + std::to_string(want.size());
    } else {
      for (std::size_t i = 0; i < got.size() && why.empty(); ++i) {
        const auto& g = got[i];
        const auto& w = want[i];
        if (g.is_rational != w.rational) {
          why = "rationality of root " + std::to_string(i);
        } else if (w.exact) {
          if (!g.is_exact() || g.exact() != w.lo || g.multiplicity != w.multiplicity)
            why = "exact root " + std::to_string(i);
        } else {
          const auto& iv = g.interval();
          if (!(iv.lo < w.hi && w.lo < iv.hi)) why = "order at root " + std::to_string(i);
        }
      }
    }
    if (why.empty()) {
      ++agree;
    } else if (first.empty()) {
      first = "; first mismatch: " + poly::to_string(p) + ": " + why;
    }
  }
  return {agree == 200, std::to_string(agree) + "/200 random polynomials agree" + first};
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int n, const Outcome& o) {
    all = all && o.pass;
    std::printf("criterion %d: %s - %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  };
  auto guarded = [](const std::function<Outcome()>& fn) -> Outcome {
    try {
      return fn();
    } catch (const std::exception& e) {
      return {false, std::string("exception: ") + e.what()};
    }
  };

  report(1, guarded(criterion1));
  report(2, guarded(criterion2));
  report(3, guarded(criterion3));
  report(4, guarded(criterion4));
  report(5, guarded(criterion5));
  report(6, guarded(criterion6));
  std::vector<SubResult> subs;
  report(7, guarded([&] { return criterion7(subs); }));
  for (const auto& s : subs)
    std::printf("  %s: %s - %s\n", s.label.c_str(), s.pass ? "PASS" : "FAIL", s.detail.c_str());
  report(8, guarded(criterion8));
  report(9, guarded(criterion9));
  report(10, guarded(criterion10));
  return all ? 0 : 1;
}
