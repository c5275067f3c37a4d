#include "polymux/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <utility>

#include "polymux/errors.hpp"
#include "polymux/large_facet.hpp"
#include "polymux/multiplex.hpp"
#include "polymux/multiplicial.hpp"
#include "polymux/ordinary.hpp"

namespace polymux {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

/// Counts inspected objects and keeps the first discrepancy verbatim.
struct Tally {
  long long objects = 0;
  bool ok = true;
  std::string first;

  void count() { ++objects; }
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first = what;
    }
  }
  CheckResult finish(const std::string& name, const Stopwatch& sw, const std::string& unit) const {
    CheckResult r;
    r.name = name;
    r.pass = ok;
    r.detail = ok ? std::to_string(objects) + " " + unit : first;
    r.seconds = sw.seconds();
    return r;
  }
};

std::string counts_str(const std::vector<Integer>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << to_string(v[i]);
  out << ")";
  return out.str();
}

std::string multiplex_name(int d, int n) {
  return "M^{" + std::to_string(d) + "," + std::to_string(n) + "}";
}

std::string cyclic_name(int d, int N) {
  return "C_" + std::to_string(d) + "(" + std::to_string(N) + ")";
}

std::string ordinary_name(const OrdinaryParams& p) {
  return "P^{" + std::to_string(p.d) + "," + std::to_string(p.k) + "," + std::to_string(p.n) +
         "}";
}

/// Every flag vector the artifact can emit, with a printable name.
struct CorpusItem {
  std::string name;
  FlagVector flags;
};

std::vector<CorpusItem> corpus(const SuiteBounds& b) {
  std::vector<CorpusItem> out;
  for (int d = 2; d <= b.dmax; ++d)
    for (int n = d; n <= b.nmax; ++n)
      out.push_back({multiplex_name(d, n), multiplex_flag_vector(d, n)});
  for (int d = 3; d <= b.dmax; ++d)
    for (int N = d + 1; N <= b.nmax; ++N) {
      FaceLattice lat = FaceLattice::build(cyclic_facets(d, N));
      out.push_back({cyclic_name(d, N), flag_vector(lat)});
    }
  for (int q = b.qmin; q <= std::min(b.qmax, 24); ++q) {
    FaceLattice lat = FaceLattice::build(large_facet_construct(q).final_polytope);
    out.push_back({"large-facet q=" + std::to_string(q), flag_vector(lat)});
  }
  for (int d : {5, 7})
    for (int k = d; k <= d + b.kspan; ++k)
      for (int n = k; n <= k + b.nspan; ++n)
        out.push_back({ordinary_name({d, k, n}), ordinary_flag_vector({d, k, n})});
  return out;
}

SuiteResult assemble(std::string name, std::vector<CheckResult> checks) {
  SuiteResult s;
  s.name = std::move(name);
  s.pass = true;
  for (const auto& c : checks) s.pass = s.pass && c.pass;
  s.checks = std::move(checks);
  return s;
}

}  // namespace

bool flag_h_sanity(const FlagVector& fv, const HVector& h, std::string* why) {
  auto fail = [why](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  const int d = fv.dim();
  if (static_cast<int>(h.size()) != d + 1) return fail("h-vector length is not d+1");
  if (d >= 2) {
    if (fv.at({0, 1}) != 2 * fv.at({1})) return fail("f_{0,1} != 2 f_1");
    if (fv.at({d - 2, d - 1}) != 2 * fv.at({d - 2})) return fail("f_{d-2,d-1} != 2 f_{d-2}");
  }
  if (h.front() != 1 || h.back() != 1) return fail("h_0 or h_d differs from 1");
  if (h[1] != fv.at({0}) - d) return fail("h_1 != f_0 - d");
  for (int i = 0; i <= d; ++i)
    if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(d - i)])
      return fail("h-vector is not palindromic");
  return true;
}

CheckResult check_multiplex_flag_oracle(const SuiteBounds& b) {
  Stopwatch sw;
  Tally t;
  for (int d = 2; d <= b.dmax; ++d)
    for (int n = d; n <= b.nmax; ++n) {
      const FaceLattice lat = FaceLattice::build(multiplex_facets(d, n));
      const FlagVector oracle = flag_vector(lat);
      const FlagVector closed = multiplex_flag_vector(d, n);
      t.count();
      if (oracle == closed) continue;
      for (unsigned m = 0; m < (1u << d); ++m)
        if (oracle.at_mask(m) != closed.at_mask(m)) {
          t.require(false, multiplex_name(d, n) + " flag {" + FlagVector::subset_key(m) +
                               "}: lattice " + to_string(oracle.at_mask(m)) + ", formula " +
                               to_string(closed.at_mask(m)));
          break;
        }
    }
  return t.finish("multiplex_flag_oracle", sw, "multiplexes, every dimension subset");
}

CheckResult check_multiplex_properties(const SuiteBounds& b) {
  Stopwatch sw;
  Tally t;
  for (int d = 2; d <= b.dmax; ++d)
    for (int n = d; n <= b.nmax; ++n) {
      const std::string name = multiplex_name(d, n);
      const FaceLattice lat = FaceLattice::build(multiplex_facets(d, n));
      const std::vector<Integer> f = lat.f_vector();
      t.count();
      for (int i = 0; i <= d - 1; ++i)
        t.require(f[static_cast<std::size_t>(i)] == multiplex_f(d, n, i),
                  name + " f_" + std::to_string(i) + " differs from the closed form");
      t.require(is_self_dual(lat), name + " is not self-dual");
      t.require(is_order_multiplicial(lat), name + " has a face that is no order multiplex");
    }
  return t.finish("multiplex_properties", sw, "multiplexes: self-dual, order-multiplicial");
}

CheckResult check_cyclic_ground_truth(const SuiteBounds& b) {
  Stopwatch sw;
  Tally t;
  for (int d = 3; d <= b.dmax; ++d)
    for (int N = d + 1; N <= b.nmax; ++N) {
      const FaceLattice lat = FaceLattice::build(cyclic_facets(d, N));
      const std::vector<Integer> f = lat.f_vector();
      t.count();
      for (int i = 0; i <= d - 1; ++i)
        t.require(f[static_cast<std::size_t>(i)] == cyclic_f(d, N - 1, i),
                  cyclic_name(d, N) + " f_" + std::to_string(i) + ": lattice " +
                      to_string(f[static_cast<std::size_t>(i)]) + ", formula " +
                      to_string(cyclic_f(d, N - 1, i)));
    }
  return t.finish("cyclic_ground_truth", sw, "cyclic polytopes against the lattice");
}

CheckResult check_ordinary_boundaries(const SuiteBounds& b) {
  Stopwatch sw;
  Tally t;
  for (int d : {5, 7})
    for (int k = d; k <= d + b.kspan; ++k)
      for (int n = k; n <= k + b.nspan; ++n) {
        const OrdinaryParams p{d, k, n};
        const std::string name = ordinary_name(p);
        const FlagVector fv = ordinary_flag_vector(p);
        t.count();

        if (k == d)
          for (int i = 0; i <= d - 1; ++i) {
            t.require(ordinary_f(p, i) == multiplex_f(d, n, i),
                      name + " f_" + std::to_string(i) + " differs from the multiplex form");
            if (i >= 1)
              t.require(ordinary_f0(p, i) == multiplex_flag(d, n, {0, i}),
                        name + " f_{0," + std::to_string(i) +
                            "} differs from the multiplex form");
          }

        if (k == n)
          for (int i = 1; i <= d - 1; ++i)
            t.require(fv.at({0, i}) == (i + 1) * fv.at({i}),
                      name + " is simplicial but f_{0,i} != (i+1) f_i at i = " +
                          std::to_string(i));

        Integer euler = 0;
        for (int i = 0; i <= d - 1; ++i) {
          const Integer& fi = fv.at_mask(1u << i);
          euler += (i % 2 == 0) ? fi : -fi;
        }
        t.require(euler == (d % 2 == 0 ? 0 : 2), name + " violates the Euler relation");
        for (int lvl = 1; lvl <= d - 1; ++lvl)
          t.require(dehn_sommerville_check(fv, lvl),
                    name + " violates Dehn-Sommerville at level " + std::to_string(lvl));
      }
  return t.finish("ordinary_boundaries", sw,
                  "flag vectors: multiplex collapse, simplicial collapse, Dehn-Sommerville");
}

CheckResult check_h_agreement(const SuiteBounds& b) {
  Stopwatch sw;
  Tally t;
  for (int d : {5, 7})
    for (int k = d; k <= d + b.kspan; ++k)
      for (int n = k; n <= k + b.nspan; ++n) {
        const OrdinaryParams p{d, k, n};
        const std::string name = ordinary_name(p);
        std::vector<Integer> f(static_cast<std::size_t>(d)), f0(static_cast<std::size_t>(d));
        for (int i = 0; i <= d - 1; ++i) f[static_cast<std::size_t>(i)] = ordinary_f(p, i);
        for (int i = 1; i <= d - 1; ++i) f0[static_cast<std::size_t>(i)] = ordinary_f0(p, i);
        const HVector direct = ordinary_h_vector(p);
        const HVector from_faces = toric_h_multiplicial(d, f, f0);
        t.count();
        t.require(direct == from_faces,
                  name + ": characteristic h " + counts_str(direct) +
                      " differs from face-data h " + counts_str(from_faces));
        if (k == n && n + 1 <= b.nmax) {
          const FaceLattice lat = FaceLattice::build(cyclic_facets(d, n + 1));
          const ToricHG hg = toric_hg(lat);
          t.require(hg.h == direct, name + ": lattice recursion h " + counts_str(hg.h) +
                                        " differs from " + counts_str(direct));
        }
      }

  const HVector want{Integer(1), Integer(4), Integer(7), Integer(7), Integer(4), Integer(1)};
  t.require(ordinary_h_vector({5, 6, 8}) == want,
            "P^{5,6,8} h " + counts_str(ordinary_h_vector({5, 6, 8})) + " != (1,4,7,7,4,1)");
  return t.finish("h_agreement", sw, "polytopes: three h computations agree");
}

CheckResult check_A_coefficients(const SuiteBounds& b) {
  Stopwatch sw;
  Tally t;
  for (int d : {5, 7, 9})
    for (int k = d; k <= d + b.aspan; ++k) {
      t.count();
      t.require(A_identity_check(d, k), "A(" + std::to_string(d) + "," + std::to_string(k) +
                                            ") upper coefficients are not the binomials");
    }
  return t.finish("A_coefficients", sw, "increment polynomials");
}

CheckResult check_g_shift(const SuiteBounds& b) {
  Stopwatch sw;
  Tally t;
  for (int d : {5, 7})
    for (int k = d + 1; k <= d + b.kspan; ++k)
      for (int n = k; n <= k + b.nspan; ++n) {
        t.count();
        t.require(g_shift_check(d, k, n),
                  ordinary_name({d, k, n}) + ": g differs from the shifted h");
      }
  return t.finish("g_shift", sw, "polytopes: g equals h of the shifted parameters");
}

CheckResult check_span_rank(const SuiteBounds& b) {
  Stopwatch sw;
  Tally t;
  for (int d : {5, 7}) {
    std::vector<FlagVector> rows;
    for (int k = d; k <= d + b.kspan; ++k)
      for (int n = k; n <= k + b.nspan; ++n)
        rows.push_back(ordinary_flag_vector({d, k, n}));
    const std::size_t r = span_rank(rows);
    t.count();
    t.require(r == static_cast<std::size_t>(d),
              "ordinary d=" + std::to_string(d) + " family spans rank " + std::to_string(r) +
                  ", expected " + std::to_string(d));
  }
  for (int d = 2; d <= b.dmax; ++d) {
    std::vector<FlagVector> rows;
    for (int n = d; n <= b.nmax; ++n) rows.push_back(multiplex_flag_vector(d, n));
    const std::size_t r = span_rank(rows);
    t.count();
    t.require(r <= static_cast<std::size_t>(d),
              "multiplex d=" + std::to_string(d) + " family spans rank " + std::to_string(r));
  }
  {
    std::vector<FlagVector> rows;
    for (int q = 7; q <= std::min(b.qmax, 16); ++q) {
      const FaceLattice lat = FaceLattice::build(large_facet_construct(q).final_polytope);
      rows.push_back(flag_vector(lat));
    }
    const std::size_t r = span_rank(rows);
    t.count();
    t.require(r <= 4, "large-facet family spans rank " + std::to_string(r));
  }
  return t.finish("span_rank", sw, "families: ordinary rank d, multiplicial rank <= d");
}

CheckResult check_flag_reconstruction(const SuiteBounds& b) {
  Stopwatch sw;
  Tally t;
  for (const CorpusItem& item : corpus(b)) {
    const int d = item.flags.dim();
    std::vector<Integer> f(static_cast<std::size_t>(d));
    for (int i = 0; i <= d - 1; ++i) f[static_cast<std::size_t>(i)] = item.flags.at_mask(1u << i);
    t.count();
    try {
      t.require(full_flag_from_f(d, f) == item.flags,
                item.name + ": rebuilt flag vector differs");
    } catch (const std::exception& err) {
      t.require(false, item.name + ": " + err.what());
    }
  }
  return t.finish("flag_reconstruction", sw, "corpus polytopes rebuilt from f-vectors alone");
}

CheckResult check_large_facet_family(const SuiteBounds& b) {
  Stopwatch sw;
  Tally t;
  for (int q = b.qmin; q <= b.qmax; ++q) {
    const LargeFacetReport rep = large_facet_verify(q);
    t.count();
    if (rep.pass) continue;
    for (const auto& c : rep.checks)
      if (!c.pass) {
        t.require(false, "q=" + std::to_string(q) + " " + c.name +
                             (c.detail.empty() ? "" : ": " + c.detail));
        break;
      }
  }
  return t.finish("large_facet_family", sw, "constructions verified");
}

CheckResult check_universal_sanity(const SuiteBounds& b) {
  Stopwatch sw;
  Tally t;
  for (const CorpusItem& item : corpus(b)) {
    const int d = item.flags.dim();
    std::vector<Integer> f(static_cast<std::size_t>(d)), f0(static_cast<std::size_t>(d));
    for (int i = 0; i <= d - 1; ++i) f[static_cast<std::size_t>(i)] = item.flags.at_mask(1u << i);
    for (int i = 1; i <= d - 1; ++i) f0[static_cast<std::size_t>(i)] = item.flags.at({0, i});
    t.count();
    try {
      const HVector h = toric_h_multiplicial(d, f, f0);
      std::string why;
      t.require(flag_h_sanity(item.flags, h, &why), item.name + ": " + why);
    } catch (const std::exception& err) {
      t.require(false, item.name + ": " + err.what());
    }
  }
  return t.finish("universal_sanity", sw, "emitted objects pass every sanity cut");
}

SuiteResult suite_multiplex(const SuiteBounds& b) {
  return assemble("multiplex", {check_multiplex_flag_oracle(b), check_multiplex_properties(b)});
}

SuiteResult suite_ordinary(const SuiteBounds& b) {
  return assemble("ordinary", {check_cyclic_ground_truth(b), check_ordinary_boundaries(b),
                               check_span_rank(b), check_flag_reconstruction(b)});
}

SuiteResult suite_largefacet(const SuiteBounds& b) {
  return assemble("largefacet", {check_large_facet_family(b)});
}

SuiteResult suite_toric(const SuiteBounds& b) {
  return assemble("toric", {check_h_agreement(b), check_A_coefficients(b), check_g_shift(b),
                            check_universal_sanity(b)});
}

std::vector<SuiteResult> run_suites(const std::string& which, const SuiteBounds& b) {
  if (which == "multiplex") return {suite_multiplex(b)};
  if (which == "ordinary") return {suite_ordinary(b)};
  if (which == "largefacet") return {suite_largefacet(b)};
  if (which == "toric") return {suite_toric(b)};
  if (which == "all")
    return {suite_multiplex(b), suite_ordinary(b), suite_largefacet(b), suite_toric(b)};
  throw BadParams("unknown suite: " + which);
}

}  // namespace polymux
