#include "polymux/large_facet.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "polymux/errors.hpp"
#include "polymux/multiplex.hpp"
#include "polymux/multiplicial.hpp"

namespace polymux {

namespace {

std::string join_labels(const std::vector<int>& v) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "}";
  return out.str();
}

template <typename T>
std::string join_counts(const std::vector<T>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << to_string(Integer(v[i]));
  out << ")";
  return out.str();
}

/// Facet bookkeeping on sorted label lists; every removal must hit.
struct FacetRewriter {
  std::vector<std::vector<int>> facets;

  void add(std::vector<int> f) {
    std::sort(f.begin(), f.end());
    if (std::find(facets.begin(), facets.end(), f) != facets.end())
      throw std::logic_error("facet added twice: " + join_labels(f));
    facets.push_back(std::move(f));
  }

  void remove(std::vector<int> f) {
    std::sort(f.begin(), f.end());
    auto it = std::find(facets.begin(), facets.end(), f);
    if (it == facets.end())
      throw std::logic_error("facet scheduled for removal is absent: " + join_labels(f));
    facets.erase(it);
  }

  void apply(const ConstructionStep& st) {
    for (const auto& f : st.removed) remove(f);
    for (const auto& f : st.added) add(f);
  }

  /// The polytope on the labels mentioned so far, facets sorted for determinism.
  FacetList snapshot() const {
    FacetList p;
    p.dim = 4;
    std::vector<int> labels;
    for (const auto& f : facets) labels.insert(labels.end(), f.begin(), f.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    p.vertices = std::move(labels);
    p.facets = facets;
    std::sort(p.facets.begin(), p.facets.end());
    return p;
  }
};

void require_shared_ridge(std::vector<int> a, std::vector<int> b, std::vector<int> ridge) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::sort(ridge.begin(), ridge.end());
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (common != ridge)
    throw std::logic_error("facets " + join_labels(a) + " and " + join_labels(b) +
                           " do not meet in the 2-face " + join_labels(ridge));
}

void check_intermediate(const FacetRewriter& rw) {
  FaceLattice lat = FaceLattice::build(rw.snapshot());
  if (!euler_check(lat) || !eulerian_check(lat))
    throw NotEulerian("intermediate polytope fails the Eulerian test");
}

}  // namespace

std::vector<int> large_facet_base_labels(int q) {
  if (q < 7) throw BadParams("the pyramid construction needs q >= 7");
  std::vector<int> out;
  for (int x = 0; x < q; ++x)
    if (x % 3 != 0 || x == 0 || x > q - 2) out.push_back(x);
  return out;
}

ConstructionTrace large_facet_construct(int q, bool check_intermediates) {
  if (q < 5) throw BadParams("need at least five vertices (q >= 5)");

  ConstructionTrace tr;
  tr.q = q;
  tr.residue = q % 3;

  if (q <= 6) {
    tr.multiplex_path = true;
    tr.final_polytope = multiplex_facets(4, q - 1);
    return tr;
  }

  tr.base_labels = large_facet_base_labels(q);
  const std::vector<int>& lab = tr.base_labels;
  const int n = static_cast<int>(lab.size()) - 1;
  const int apex = 3;

  // Pyramid with apex 3 over the 3-multiplex whose position i carries lab[i].
  FacetRewriter rw;
  rw.add(lab);
  for (const auto& facet : multiplex_facets(3, n).facets) {
    std::vector<int> f;
    for (int pos : facet) f.push_back(lab[static_cast<std::size_t>(pos)]);
    f.push_back(apex);
    rw.add(std::move(f));
  }
  if (check_intermediates) check_intermediate(rw);

  // Each pass splices in the missing label 6+3i, replacing the two
  // square-pyramid facets that meet in the 2-face {4+3i, 8+3i, 3}.
  for (int i = 0; 3 * i <= q - 10; ++i) {
    const bool last = 3 * (i + 1) > q - 10;
    const int w = 6 + 3 * i;
    const int g_top = (q % 3 == 1 && last) ? 9 + 3 * i : 10 + 3 * i;
    const int b = 3 * i;

    ConstructionStep st;
    st.kind = StepKind::SplitFacetPair;
    st.new_vertex = w;
    st.removed = {{2 + b, 4 + b, 7 + b, 8 + b, apex}, {4 + b, 5 + b, 8 + b, g_top, apex}};
    require_shared_ridge(st.removed[0], st.removed[1], {4 + b, 8 + b, apex});
    st.added = {{2 + b, 4 + b, w, apex},
                {2 + b, w, 7 + b, apex},
                {w, 7 + b, 8 + b, apex},
                {2 + b, 4 + b, w, 7 + b, 8 + b},
                {4 + b, 5 + b, w, apex},
                {5 + b, w, g_top, apex},
                {w, 8 + b, g_top, apex},
                {4 + b, 5 + b, w, 8 + b, g_top}};
    rw.apply(st);
    tr.steps.push_back(std::move(st));
    if (check_intermediates) check_intermediate(rw);
  }

  if (q % 3 == 2) {
    // Stack the final vertex beyond a simplex facet: it joins each boundary
    // triangle of the removed simplex.
    ConstructionStep st;
    st.kind = StepKind::BeyondSimplex;
    st.new_vertex = q - 2;
    st.removed = {{q - 4, q - 3, q - 1, apex}};
    st.added = {{q - 4, q - 3, q - 1, q - 2},
                {q - 4, q - 3, apex, q - 2},
                {q - 4, q - 1, apex, q - 2},
                {q - 3, q - 1, apex, q - 2}};
    rw.apply(st);
    tr.steps.push_back(std::move(st));
    if (check_intermediates) check_intermediate(rw);
  } else if (q % 3 == 0) {
    // Place the final vertex beyond one square-pyramid facet.
    ConstructionStep st;
    st.kind = StepKind::BeyondPyramid;
    st.new_vertex = q - 3;
    st.removed = {{q - 7, q - 5, q - 2, q - 1, apex}};
    st.added = {{q - 7, q - 5, q - 3, apex},
                {q - 7, q - 3, q - 2, apex},
                {q - 5, q - 3, q - 1, apex},
                {q - 3, q - 2, q - 1, apex},
                {q - 7, q - 5, q - 3, q - 2, q - 1}};
    rw.apply(st);
    tr.steps.push_back(std::move(st));
    if (check_intermediates) check_intermediate(rw);
  }

  tr.final_polytope = rw.snapshot();
  return tr;
}

ExpectedCounts large_facet_expected_f(int q) {
  if (q < 7) throw BadParams("closed-form face counts start at q = 7");
  ExpectedCounts e;
  if (q % 3 == 0) {
    e.f = {Integer(q), Integer((13 * q - 45) / 3), Integer(6 * q - 27),
           Integer((8 * q - 36) / 3)};
    e.f02 = (56 * q - 252) / 3;
  } else {
    // The numerators are positive and truncation equals the floor here.
    e.f = {Integer(q), Integer((13 * q - 43) / 3), Integer(6 * q - 26),
           Integer((8 * q - 34) / 3)};
    e.f02 = (56 * q - 242) / 3;
  }
  return e;
}

HVector large_facet_expected_h(int q) {
  if (q < 7) throw BadParams("closed-form h-vector starts at q = 7");
  const int middle = 2 * q - 12 + (q % 3 == 1 ? 1 : 0);
  return {Integer(1), Integer(q - 4), Integer(middle), Integer(q - 4), Integer(1)};
}

LargeFacetReport large_facet_verify(int q) {
  LargeFacetReport rep;
  rep.q = q;

  const ConstructionTrace tr = large_facet_construct(q);
  rep.multiplex_path = tr.multiplex_path;
  for (const auto& st : tr.steps)
    if (st.kind == StepKind::BeyondSimplex) rep.stacked_final_vertex = true;

  auto push = [&rep](const std::string& name, bool ok, std::string detail = "") {
    rep.checks.push_back({name, ok, std::move(detail)});
  };

  std::vector<int> want_labels(static_cast<std::size_t>(q));
  std::iota(want_labels.begin(), want_labels.end(), 0);
  push("vertex_labels", tr.final_polytope.vertices == want_labels,
       "got " + join_labels(tr.final_polytope.vertices));

  // Expected counts: closed forms from q = 7, multiplex formulas before.
  std::vector<Integer> exp_f;
  Integer exp_f02;
  HVector exp_h;
  if (q <= 6) {
    std::vector<Integer> f0(4);
    for (int i = 0; i <= 3; ++i) exp_f.push_back(multiplex_f(4, q - 1, i));
    for (int i = 1; i <= 3; ++i) f0[static_cast<std::size_t>(i)] = multiplex_flag(4, q - 1, {0, i});
    exp_f02 = multiplex_flag(4, q - 1, {0, 2});
    exp_h = toric_h_multiplicial(4, exp_f, f0);
  } else {
    ExpectedCounts e = large_facet_expected_f(q);
    exp_f = std::move(e.f);
    exp_f02 = std::move(e.f02);
    exp_h = large_facet_expected_h(q);
  }

  std::optional<FaceLattice> lat;
  try {
    lat.emplace(FaceLattice::build(tr.final_polytope));
    push("lattice_graded", true);
  } catch (const std::exception& err) {
    push("lattice_graded", false, err.what());
  }

  if (lat) {
    push("euler", euler_check(*lat));
    push("eulerian", eulerian_check(*lat));
    push("order_multiplicial", is_order_multiplicial(*lat));

    std::size_t big = 0, big_count = 0;
    std::vector<int> biggest;
    for (const auto& f : tr.final_polytope.facets) {
      if (f.size() > big) {
        big = f.size();
        big_count = 1;
        biggest = f;
      } else if (f.size() == big) {
        ++big_count;
      }
    }
    rep.largest_facet_size = static_cast<int>(big);
    const int want = (2 * q + 4) / 3;  // = ceil((2q+2)/3)
    bool size_ok = rep.largest_facet_size == want;
    std::string note = "size " + std::to_string(rep.largest_facet_size) + ", expected " +
                       std::to_string(want);
    if (q >= 7) {
      size_ok = size_ok && big_count == 1 && biggest == tr.base_labels;
      if (big_count != 1) note += "; not unique";
      else if (biggest != tr.base_labels) note += "; largest facet is not the base";
    }
    push("largest_facet", size_ok, note);

    rep.f = lat->f_vector();
    push("f_vector", rep.f == exp_f,
         "got " + join_counts(rep.f) + ", expected " + join_counts(exp_f));

    rep.f02 = flag_vector(*lat).at({0, 2});
    push("f_02", rep.f02 == exp_f02,
         "got " + to_string(rep.f02) + ", expected " + to_string(exp_f02));

    try {
      rep.h = toric_hg(*lat, true).h;
      push("h_vector", rep.h == exp_h,
           "got " + join_counts(rep.h) + ", expected " + join_counts(exp_h));
    } catch (const std::exception& err) {
      push("h_vector", false, err.what());
    }
  }

  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace polymux
