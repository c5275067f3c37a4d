#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "polymux/errors.hpp"
#include "polymux/large_facet.hpp"
#include "polymux/multiplex.hpp"
#include "polymux/multiplicial.hpp"
#include "polymux/ordinary.hpp"
#include "polymux/report.hpp"
#include "polymux/suites.hpp"
#include "polymux/toric.hpp"

namespace {

using namespace polymux;

Json json_poly(const IntPolynomial& p) {
  std::vector<Integer> c;
  for (int i = 0; i <= std::max(p.degree(), 0); ++i) c.push_back(p.coefficient(i));
  return json_counts(c);
}

Json json_labels(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

Json json_facets(const std::vector<std::vector<int>>& facets) {
  Json out = Json::array();
  for (const auto& f : facets) out.push_back(json_labels(f));
  return out;
}

Json cmd_multiplex(int d, int n, bool with_flags, bool with_lattice, bool with_selfdual) {
  const FacetList p = multiplex_facets(d, n);
  const Json params{{"d", d}, {"n", n}};
  Json results;

  std::vector<Integer> f, f0(static_cast<std::size_t>(d));
  for (int i = 0; i <= d - 1; ++i) f.push_back(multiplex_f(d, n, i));
  const FlagVector closed = multiplex_flag_vector(d, n);
  for (int i = 1; i <= d - 1; ++i) f0[static_cast<std::size_t>(i)] = closed.at({0, i});
  const HVector h = toric_h_multiplicial(d, f, f0);

  results["vertices"] = n + 1;
  results["facets"] = static_cast<int>(p.facets.size());
  results["f_vector"] = json_counts(f);
  results["h_vector"] = json_counts(h);
  results["g_polynomial"] = json_poly(multiplex_g(d, n));
  if (with_flags) results["flags"] = json_flag_map(closed);

  std::vector<Json> checks;
  std::string why;
  checks.push_back(json_check("sanity", flag_h_sanity(closed, h, &why), why));
  if (with_lattice || with_selfdual) {
    const FaceLattice lat = FaceLattice::build(p);
    if (with_lattice) {
      checks.push_back(json_check("lattice_flag_oracle", flag_vector(lat) == closed));
      checks.push_back(json_check("eulerian", eulerian_check(lat)));
      checks.push_back(json_check("lattice_h", toric_hg(lat, true).h == h));
    }
    if (with_selfdual) checks.push_back(json_check("self_dual", is_self_dual(lat)));
  }
  return report_document("multiplex", params, std::move(results), std::move(checks));
}

Json cmd_ordinary(int d, int k, int n, bool with_h, bool with_flags, bool with_oracle) {
  const OrdinaryParams p{d, k, n};
  validate(p);
  if (with_oracle && k != d && k != n)
    throw BadParams("--oracle compares against a lattice, available only at k = d or k = n");

  const Json params{{"d", d}, {"k", k}, {"n", n}};
  Json results;

  std::vector<Integer> f;
  for (int i = 0; i <= d - 1; ++i) f.push_back(ordinary_f(p, i));
  Json f0j = Json::object();
  for (int i = 1; i <= d - 1; ++i) f0j[std::to_string(i)] = to_string(ordinary_f0(p, i));
  results["f_vector"] = json_counts(f);
  results["vertex_face_incidences"] = std::move(f0j);

  const FlagVector fv = ordinary_flag_vector(p);
  const HVector h = ordinary_h_vector(p);
  if (with_flags) results["flags"] = json_flag_map(fv);
  if (with_h) {
    results["h_vector"] = json_counts(h);
    GVector g;
    Integer prev = 0;
    for (int i = 0; i <= (d - 1) / 2; ++i) {
      g.push_back(h[static_cast<std::size_t>(i)] - prev);
      prev = h[static_cast<std::size_t>(i)];
    }
    results["g_vector"] = json_counts(g);
  }

  std::vector<Json> checks;
  std::string why;
  checks.push_back(json_check("sanity", flag_h_sanity(fv, h, &why), why));
  if (with_oracle) {
    const FaceLattice lat = (k == d) ? FaceLattice::build(multiplex_facets(d, n))
                                     : FaceLattice::build(cyclic_facets(d, n + 1));
    checks.push_back(json_check("lattice_flag_oracle", flag_vector(lat) == fv));
    checks.push_back(json_check("lattice_h", toric_hg(lat, true).h == h));
  }
  return report_document("ordinary", params, std::move(results), std::move(checks));
}

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::SplitFacetPair: return "split_facet_pair";
    case StepKind::BeyondPyramid: return "beyond_pyramid";
    case StepKind::BeyondSimplex: return "beyond_simplex";
  }
  return "unknown";
}

Json cmd_largefacet(int q, bool with_verify, bool with_trace) {
  const ConstructionTrace tr = large_facet_construct(q);
  const Json params{{"q", q}};
  Json results;

  results["residue"] = tr.residue;
  results["multiplex_path"] = tr.multiplex_path;
  results["vertices"] = static_cast<int>(tr.final_polytope.vertices.size());
  results["facets"] = static_cast<int>(tr.final_polytope.facets.size());
  results["base_labels"] = json_labels(tr.base_labels);

  std::size_t big = 0;
  for (const auto& fc : tr.final_polytope.facets) big = std::max(big, fc.size());
  results["largest_facet_size"] = static_cast<int>(big);

  if (q >= 7) {
    const ExpectedCounts e = large_facet_expected_f(q);
    results["expected_f_vector"] = json_counts(e.f);
    results["expected_f_02"] = json_integer(e.f02);
    results["expected_h_vector"] = json_counts(large_facet_expected_h(q));
  }
  if (with_trace) {
    Json steps = Json::array();
    for (const auto& st : tr.steps)
      steps.push_back(Json{{"kind", step_kind_name(st.kind)},
                           {"new_vertex", st.new_vertex},
                           {"removed", json_facets(st.removed)},
                           {"added", json_facets(st.added)}});
    results["steps"] = std::move(steps);
    results["facet_list"] = json_facets(tr.final_polytope.facets);
  }

  std::vector<Json> checks;
  if (with_verify) {
    const LargeFacetReport rep = large_facet_verify(q);
    results["f_vector"] = json_counts(rep.f);
    results["f_02"] = json_integer(rep.f02);
    results["h_vector"] = json_counts(rep.h);
    results["stacked_final_vertex"] = rep.stacked_final_vertex;
    for (const auto& c : rep.checks) checks.push_back(json_check(c.name, c.pass, c.detail));
  }
  return report_document("largefacet", params, std::move(results), std::move(checks));
}

Json cmd_reduce(int d) {
  const ReductionTable tab(d);
  const Json params{{"d", d}};
  Json results;

  Json cols = Json::array();
  cols.push_back("1");
  for (int i = 0; i <= d - 2; ++i) cols.push_back("f_" + std::to_string(i));
  results["columns"] = std::move(cols);

  Json rows = Json::object();
  for (unsigned m = 0; m < (1u << d); ++m) {
    Json r = Json::array();
    for (const Rational& c : tab.row(m)) r.push_back(to_string(c));
    rows[FlagVector::subset_key(m)] = std::move(r);
  }
  results["rows"] = std::move(rows);
  return report_document("reduce", params, std::move(results), {});
}

Json cmd_spanrank(int d, int kspan, int nspan) {
  validate(OrdinaryParams{d, d, d});
  const Json params{{"d", d}, {"kspan", kspan}, {"nspan", nspan}};

  std::vector<FlagVector> rows;
  for (int k = d; k <= d + kspan; ++k)
    for (int n = k; n <= k + nspan; ++n) rows.push_back(ordinary_flag_vector({d, k, n}));
  const std::size_t r = span_rank(rows);

  Json results;
  results["vectors"] = static_cast<int>(rows.size());
  results["rank"] = static_cast<int>(r);
  std::vector<Json> checks;
  checks.push_back(json_check("rank_within_bound", r <= static_cast<std::size_t>(d)));
  checks.push_back(json_check("rank_equals_dimension", r == static_cast<std::size_t>(d)));
  return report_document("spanrank", params, std::move(results), std::move(checks));
}

Json cmd_verify(const std::string& suite, const SuiteBounds& b) {
  const std::vector<SuiteResult> suites = run_suites(suite, b);
  Json params{{"suite", suite}, {"dmax", b.dmax},   {"nmax", b.nmax}, {"kspan", b.kspan},
              {"nspan", b.nspan}, {"aspan", b.aspan}, {"qmin", b.qmin}, {"qmax", b.qmax}};

  // Timings stay off the document so output is byte-stable across runs.
  Json results;
  Json list = Json::array();
  std::vector<Json> checks;
  for (const SuiteResult& s : suites) {
    Json sj{{"name", s.name}, {"pass", s.pass}};
    Json cj = Json::array();
    for (const CheckResult& c : s.checks) {
      cj.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      checks.push_back(json_check(s.name + "/" + c.name, c.pass, c.detail));
    }
    sj["checks"] = std::move(cj);
    list.push_back(std::move(sj));
  }
  results["suites"] = std::move(list);
  return report_document("verify", std::move(params), std::move(results), std::move(checks));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of multiplicial polytopes: generators, flag vectors, "
               "toric h-vectors, and verification suites"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");

  Json doc;

  auto* mx = app.add_subcommand("multiplex", "Multiplex M^{d,n}: counts, flags, lattice oracle");
  int mx_d = 0, mx_n = 0;
  bool mx_flags = false, mx_lattice = false, mx_selfdual = false;
  mx->add_option("--d", mx_d, "Dimension, at least 2")->required();
  mx->add_option("--n", mx_n, "Vertex parameter: n+1 vertices, n >= d")->required();
  mx->add_flag("--flags", mx_flags, "Emit the full flag map");
  mx->add_flag("--lattice", mx_lattice, "Cross-check formulas against the face lattice");
  mx->add_flag("--selfdual", mx_selfdual, "Check the order-reversing self-equivalence");
  mx->fallthrough();
  mx->callback([&] { doc = cmd_multiplex(mx_d, mx_n, mx_flags, mx_lattice, mx_selfdual); });

  auto* od = app.add_subcommand("ordinary", "Ordinary polytope P^{d,k,n}: counts, h, oracle");
  od->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  int od_d = 0, od_k = 0, od_n = 0;
  bool od_h = false, od_flags = false, od_oracle = false;
  od->add_option("--d", od_d, "Dimension, odd and at least 5")->required();
  od->add_option("--k", od_k, "Characteristic, d <= k <= n")->required();
  od->add_option("--n", od_n, "Vertex parameter: n+1 vertices")->required();
  od->add_flag("--h", od_h, "Emit toric h- and g-vectors");
  od->add_flag("--flags", od_flags, "Emit the full flag map");
  od->add_flag("--oracle", od_oracle, "Lattice cross-check (k = d or k = n only)");
  od->fallthrough();
  od->callback([&] { doc = cmd_ordinary(od_d, od_k, od_n, od_h, od_flags, od_oracle); });

  auto* lf = app.add_subcommand("largefacet", "4-polytope with q vertices and a large facet");
  int lf_q = 0;
  bool lf_verify = false, lf_trace = false;
  lf->add_option("--q", lf_q, "Vertex count, at least 5")->required();
  lf->add_flag("--verify", lf_verify, "Run the full lattice validation");
  lf->add_flag("--trace", lf_trace, "Emit the construction steps and facet list");
  lf->fallthrough();
  lf->callback([&] { doc = cmd_largefacet(lf_q, lf_verify, lf_trace); });

  auto* rd = app.add_subcommand("reduce", "Flag-vector reduction table over (1, f_0..f_{d-2})");
  int rd_d = 0;
  rd->add_option("--d", rd_d, "Dimension, 2..20")->required();
  rd->fallthrough();
  rd->callback([&] { doc = cmd_reduce(rd_d); });

  auto* sp = app.add_subcommand("spanrank", "Rank of the flag-vector span of an ordinary sweep");
  int sp_d = 0, sp_kspan = 6, sp_nspan = 6;
  sp->add_option("--d", sp_d, "Dimension, odd and at least 5")->required();
  sp->add_option("--kspan", sp_kspan, "Sweep d <= k <= d+kspan")->capture_default_str();
  sp->add_option("--nspan", sp_nspan, "Sweep k <= n <= k+nspan")->capture_default_str();
  sp->fallthrough();
  sp->callback([&] { doc = cmd_spanrank(sp_d, sp_kspan, sp_nspan); });

  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  std::string vf_suite = "all";
  SuiteBounds vf_b;
  vf->add_option("--suite", vf_suite, "all, multiplex, ordinary, largefacet, or toric")
      ->check(CLI::IsMember({"all", "multiplex", "ordinary", "largefacet", "toric"}))
      ->capture_default_str();
  vf->add_option("--dmax", vf_b.dmax, "Multiplex dimension bound")->capture_default_str();
  vf->add_option("--nmax", vf_b.nmax, "Multiplex/cyclic vertex bound")->capture_default_str();
  vf->add_option("--kspan", vf_b.kspan, "Ordinary k span")->capture_default_str();
  vf->add_option("--nspan", vf_b.nspan, "Ordinary n span")->capture_default_str();
  vf->add_option("--aspan", vf_b.aspan, "Increment-polynomial k span")->capture_default_str();
  vf->add_option("--qmin", vf_b.qmin, "Large-facet lower bound")->capture_default_str();
  vf->add_option("--qmax", vf_b.qmax, "Large-facet upper bound")->capture_default_str();
  vf->fallthrough();
  vf->callback([&] { doc = cmd_verify(vf_suite, vf_b); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = render_report(doc, format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    out << text;
  }
  return report_ok(doc) ? 0 : 2;
}
