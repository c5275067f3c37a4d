#ifndef POLYMUX_SUITES_HPP
#define POLYMUX_SUITES_HPP

#include <string>
#include <vector>

#include "polymux/exact.hpp"
#include "polymux/lattice.hpp"
#include "polymux/toric.hpp"

namespace polymux {

/**
 * Verification sweeps tying the closed-form generators to the lattice
 * oracles over bounded parameter ranges. Every check runs exact arithmetic
 * end to end, counts the objects it inspected, and records the first
 * discrepancy verbatim; nothing is sampled, nothing is approximated.
 */

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // objects inspected, or the first failure
  double seconds = 0.0;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool pass = false;
};

/// Sweep bounds. The defaults are the ranges the project commits to.
struct SuiteBounds {
  int dmax = 6;   // multiplex dimension bound (sweeps 2..dmax)
  int nmax = 10;  // multiplex n bound and cyclic vertex bound
  int kspan = 6;  // ordinary sweeps use d <= k <= d+kspan
  int nspan = 6;  // ordinary sweeps use k <= n <= k+nspan
  int aspan = 8;  // increment-polynomial sweep uses d <= k <= d+aspan
  int qmin = 5;   // large-facet family range
  int qmax = 60;
};

/**
 * Sanity cuts applied to everything the artifact emits: each vertex lies on
 * two ends of its edges (f_{0,1} = 2 f_1), each ridge on two facets
 * (f_{d-2,d-1} = 2 f_{d-2}), h starts and ends at 1, h_1 = f_0 - d, and h
 * is palindromic. On failure, *why names the violated cut.
 */
bool flag_h_sanity(const FlagVector& fv, const HVector& h, std::string* why = nullptr);

/// Closed-form multiplex flag vectors equal lattice chain counts, all subsets.
CheckResult check_multiplex_flag_oracle(const SuiteBounds& b);
/// Multiplex lattices are self-dual, order-multiplicial, with closed-form f-vectors.
CheckResult check_multiplex_properties(const SuiteBounds& b);
/// Gale-evenness lattice f-vectors equal the cyclic-polytope closed form.
CheckResult check_cyclic_ground_truth(const SuiteBounds& b);
/// Ordinary-polytope formulas collapse to multiplex data at k=d, to
/// simplicial data at k=n, and satisfy Euler plus Dehn-Sommerville throughout.
CheckResult check_ordinary_boundaries(const SuiteBounds& b);
/// h from the characteristic formula == h from face data == lattice recursion.
CheckResult check_h_agreement(const SuiteBounds& b);
/// Upper coefficients of the per-vertex h increment are plain binomials.
CheckResult check_A_coefficients(const SuiteBounds& b);
/// g of an ordinary polytope equals h of the parameter-shifted one.
CheckResult check_g_shift(const SuiteBounds& b);
/// Flag vectors of the ordinary sweeps span rank exactly d; multiplicial
/// families stay within rank d.
CheckResult check_span_rank(const SuiteBounds& b);
/// The full flag vector rebuilt from the f-vector alone matches, corpus-wide.
CheckResult check_flag_reconstruction(const SuiteBounds& b);
/// Every large-facet construction verifies, qmin <= q <= qmax.
CheckResult check_large_facet_family(const SuiteBounds& b);
/// flag_h_sanity over the whole corpus of emitted flag and h-vectors.
CheckResult check_universal_sanity(const SuiteBounds& b);

SuiteResult suite_multiplex(const SuiteBounds& b = {});
SuiteResult suite_ordinary(const SuiteBounds& b = {});
SuiteResult suite_largefacet(const SuiteBounds& b = {});
SuiteResult suite_toric(const SuiteBounds& b = {});

/// which = "all" or one suite name; BadParams otherwise.
std::vector<SuiteResult> run_suites(const std::string& which, const SuiteBounds& b = {});

}  // namespace polymux

#endif
