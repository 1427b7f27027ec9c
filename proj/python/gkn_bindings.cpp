#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gkn/geometry.hpp"
#include "gkn/independence.hpp"

namespace py = pybind11;
using namespace gkn;

namespace {

using Labels = std::vector<int>;

VertexSet to_set(const Labels& labels) { return VertexSet(std::span<const int>(labels)); }

std::vector<Labels> edge_lists(const EdgeSet& e) {
  std::vector<Labels> out;
  out.reserve(e.size());
  for (VertexSet s : e) out.push_back(s.members());
  return out;
}

EdgeSet make_edges(int uniformity, int n, const std::vector<Labels>& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const Labels& e : edges) sets.push_back(to_set(e));
  return EdgeSet(uniformity, n, std::move(sets));
}

PointConfiguration make_points(const std::vector<std::vector<std::int64_t>>& points) {
  if (points.empty()) throw DomainError("no points");
  return PointConfiguration(static_cast<int>(points[0].size()), points);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core routines: colorings, G and H, sweeps, alpha, bounds, geometry, certificates.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", base.ptr());

  py::class_<Coloring>(m, "Coloring")
      .def_property_readonly("k", &Coloring::k)
      .def_property_readonly("n", &Coloring::n)
      .def_property_readonly("seed", &Coloring::seed)
      .def_property_readonly("rng_id", &Coloring::rng_id)
      .def("__len__", &Coloring::size)
      .def(
          "at", [](const Coloring& c, const Labels& t) {
            const PairColor p = c.at(to_set(t));
            return std::make_pair(p.i, p.j);
          },
          py::arg("subset"), "Pair {i, j} assigned to a (k-3)-subset.")
      .def("to_text", &coloring_to_string)
      .def("__eq__", [](const Coloring& a, const Coloring& b) { return a == b; });

  py::class_<EdgeSet>(m, "EdgeSet")
      .def(py::init(&make_edges), py::arg("uniformity"), py::arg("n"), py::arg("edges"))
      .def_property_readonly("uniformity", &EdgeSet::uniformity)
      .def_property_readonly("n", &EdgeSet::ground_size)
      .def_property_readonly("edges", &edge_lists)
      .def("__len__", &EdgeSet::size)
      .def("__contains__", [](const EdgeSet& e, const Labels& s) { return e.contains(to_set(s)); })
      .def("induced_count", [](const EdgeSet& e, const Labels& s) { return induced_count(e, to_set(s)); })
      .def("to_text", [](const EdgeSet& e) {
        std::ostringstream os;
        write_edge_list(os, e);
        return os.str();
      });

  py::class_<SweepReport>(m, "SweepReport")
      .def_property_readonly("k", [](const SweepReport& r) { return r.k; })
      .def_property_readonly("n", [](const SweepReport& r) { return r.n; })
      .def_property_readonly("verdict", [](const SweepReport& r) { return to_string(r.verdict); })
      .def_property_readonly("subsets_checked", [](const SweepReport& r) { return r.subsets_checked; })
      .def_property_readonly("ksets_checked", [](const SweepReport& r) { return r.ksets_checked; })
      .def_property_readonly("h_histogram", [](const SweepReport& r) { return r.h_histogram; })
      .def_property_readonly("classes", [](const SweepReport& r) { return r.classes; })
      .def_property_readonly("failures",
                             [](const SweepReport& r) {
                               std::vector<std::tuple<std::string, Labels, std::string>> out;
                               for (const SweepFailure& f : r.failures) out.emplace_back(f.kind, f.subset.members(), f.detail);
                               return out;
                             })
      .def("to_text", &report_to_string);

  m.def(
      "sample_coloring", [](int k, int n, std::uint64_t seed) { return sample_coloring(Params{k, n, seed}); },
      py::arg("k"), py::arg("n"), py::arg("seed"));
  m.def(
      "sample_planted_coloring",
      [](int k, int n, std::uint64_t seed, int attempts) { return sample_planted_coloring(Params{k, n, seed}, attempts); },
      py::arg("k"), py::arg("n"), py::arg("seed"), py::arg("attempts"));
  m.def(
      "read_coloring",
      [](const std::string& text) {
        std::istringstream is(text);
        return read_coloring(is);
      },
      py::arg("text"));

  m.def("build_g", [](const Coloring& phi) { return build_g(phi).edges; }, py::arg("coloring"));
  m.def("build_h", [](const EdgeSet& g) { return build_h(link_from_edges(g)).edges; }, py::arg("g"));
  m.def(
      "full_sweep",
      [](const EdgeSet& g, const EdgeSet& h, int k, std::uint64_t seed, int shard, int shards) {
        return full_sweep(g, h, k, seed, Shard{shard, shards});
      },
      py::arg("g"), py::arg("h"), py::arg("k"), py::arg("seed") = 0, py::arg("shard") = 0, py::arg("shards") = 1);
  m.def("merge_reports", &merge_reports, py::arg("reports"));

  m.def(
      "alpha",
      [](const EdgeSet& h, std::uint64_t budget) {
        const AlphaResult r = alpha_exact(h, budget);
        py::dict d;
        d["alpha"] = r.alpha;
        d["upper_bound"] = r.upper_bound;
        d["witness"] = r.witness.members();
        d["nodes"] = r.nodes;
        d["exact"] = r.status == AlphaStatus::exact;
        return d;
      },
      py::arg("h"), py::arg("budget") = 0);

  m.def(
      "edge_probability",
      [](int k, std::uint64_t samples, std::uint64_t seed) {
        const EdgeProbability p = edge_probability_exact(k, samples, seed);
        py::dict d;
        d["numerator"] = p.numerator;
        d["denominator"] = p.denominator;
        d["value"] = p.value();
        d["method"] = p.method == ProbabilityMethod::exhaustive ? "exhaustive" : "monte-carlo";
        d["standard_error"] = p.standard_error();
        return d;
      },
      py::arg("k"), py::arg("fallback_samples") = 1'000'000, py::arg("fallback_seed") = 1);

  m.def(
      "greedy_steiner_packing",
      [](int n, int k, std::optional<std::uint64_t> seed) {
        std::vector<Labels> out;
        for (VertexSet b : greedy_steiner_packing(n, k, seed).blocks) out.push_back(b.members());
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("shuffle_seed") = py::none());
  m.def(
      "union_bound",
      [](int n, std::uint64_t big_n, double p, double m) {
        const UnionBound b = union_bound(n, big_n, p, m);
        return std::make_pair(b.log2_value, b.feasible);
      },
      py::arg("n"), py::arg("N"), py::arg("p"), py::arg("m"), "(log2 of C(N,n)(1-p)^m, value < 1)");
  m.def(
      "max_feasible_n",
      [](int n, double p, double m) -> py::object {
        const auto f = max_feasible_n(n, p, m);
        if (!f) return py::none();
        py::dict d;
        d["log2_max_n"] = f->log2_max_n;
        d["max_n"] = f->max_n ? py::cast(*f->max_n) : py::none();
        return d;
      },
      py::arg("n"), py::arg("p"), py::arg("m"));

  m.def(
      "motzkin_count",
      [](const std::vector<std::vector<std::int64_t>>& points) {
        const PointConfiguration c = make_points(points);
        return motzkin_count(c, c.labels()).count;
      },
      py::arg("points"), "Non-convex (d+2)-subsets of d+3 integer points.");
  m.def(
      "motzkin_sweep",
      [](int d, int trials, std::int64_t range, std::uint64_t seed) {
        const MotzkinSweep s = motzkin_sweep(d, trials, range, seed);
        py::dict out;
        out["trials"] = s.trials;
        out["passed"] = s.passed;
        out["counts"] = s.counts;
        out["rejections"] = s.rejections;
        return out;
      },
      py::arg("d"), py::arg("trials"), py::arg("range") = 100, py::arg("seed") = 0);

  m.def(
      "certify", [](const Coloring& phi, int n) { return certificate_to_string(certify(phi, n)); }, py::arg("coloring"),
      py::arg("n"), "Certificate text for one coloring.");
  m.def(
      "search",
      [](int k, int big_n, int trials, int n, std::uint64_t seed) {
        const SearchResult r = search_colorings(k, big_n, trials, n, seed);
        return std::make_pair(certificate_to_string(r.best), r.trials);
      },
      py::arg("k"), py::arg("N"), py::arg("trials"), py::arg("n"), py::arg("seed"));
  m.def(
      "verify_certificate",
      [](const std::string& text) {
        const CertVerdict v = verify_certificate_text(text);
        return std::make_pair(to_string(v.status), v.message);
      },
      py::arg("text"));
}
