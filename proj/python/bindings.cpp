#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "evac/generator.hpp"
#include "evac/oracle.hpp"
#include "evac/plan_io.hpp"
#include "evac/solver.hpp"

namespace py = pybind11;
using namespace evac;

namespace {

BackendChoice backend_from(const std::string& name) {
  if (name == "auto") return BackendChoice::automatic;
  if (name == "general") return BackendChoice::general;
  if (name == "uniform") return BackendChoice::uniform;
  throw py::value_error("backend must be 'auto', 'general' or 'uniform'");
}

Optimizer optimizer_from(const std::string& name) {
  if (name == "matrix") return Optimizer::sorted_matrix;
  if (name == "bisect") return Optimizer::bisect;
  throw py::value_error("optimizer must be 'matrix' or 'bisect'");
}

PathNetwork make_network(double tau, std::vector<double> weights,
                         const std::vector<std::pair<double, double>>& edges) {
  PathNetwork net;
  net.tau = tau;
  net.weights = std::move(weights);
  for (auto [len, cap] : edges) net.edges.push_back({len, cap});
  validate(net);
  return net;
}

// Points are built against an index so edge offsets are validated and normalized.
Point make_point(const PrefixIndex& idx, std::size_t index, double offset) {
  return offset == 0.0 ? (idx.check_vertex(index), Point::vertex(index)) : idx.point_on_edge(index, offset);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "k-sink location on dynamic path networks";

  py::register_exception<InstanceError>(m, "InstanceError", PyExc_ValueError);
  py::register_exception<PlanError>(m, "PlanError", PyExc_ValueError);

  py::class_<PathNetwork>(m, "PathNetwork")
      .def(py::init(&make_network), py::arg("tau"), py::arg("weights"), py::arg("edges"),
           "edges is a list of (length, capacity) pairs, one fewer than weights")
      .def_readonly("tau", &PathNetwork::tau)
      .def_readonly("weights", &PathNetwork::weights)
      .def_property_readonly("edges",
                             [](const PathNetwork& net) {
                               std::vector<std::pair<double, double>> out;
                               for (const Edge& e : net.edges) out.emplace_back(e.length, e.capacity);
                               return out;
                             })
      .def("__len__", &PathNetwork::size)
      .def("uniform_capacity", &PathNetwork::uniform_capacity);

  m.def("parse_instance", [](const std::string& text) { return parse_instance(text); });
  m.def("format_instance", &format_instance);
  m.def("generate_instance",
        [](std::size_t n, std::uint64_t seed, bool uniform, std::pair<int64_t, int64_t> weight,
           std::pair<int64_t, int64_t> length, std::pair<int64_t, int64_t> capacity, double tau) {
          GenOptions opt;
          opt.n = n;
          opt.seed = seed;
          opt.uniform = uniform;
          opt.weight = {weight.first, weight.second};
          opt.length = {length.first, length.second};
          opt.capacity = {capacity.first, capacity.second};
          opt.tau = tau;
          return generate_instance(opt);
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("uniform") = false,
        py::arg("weight") = std::pair<int64_t, int64_t>{1, 100},
        py::arg("length") = std::pair<int64_t, int64_t>{1, 10},
        py::arg("capacity") = std::pair<int64_t, int64_t>{1, 5}, py::arg("tau") = 1.0);

  py::class_<Point>(m, "Point")
      .def_property_readonly("index", &Point::index)
      .def_property_readonly("offset", &Point::offset)
      .def_property_readonly("is_vertex", &Point::is_vertex)
      .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
      .def("__repr__", [](const Point& p) {
        return p.is_vertex() ? "Point(vertex=" + std::to_string(p.index()) + ")"
                             : "Point(edge=" + std::to_string(p.index()) +
                                   ", offset=" + std::to_string(p.offset()) + ")";
      });

  py::class_<Segment>(m, "Segment")
      .def_readonly("first", &Segment::first)
      .def_readonly("left_end", &Segment::left_end)
      .def_readonly("sink", &Segment::sink)
      .def_readonly("last", &Segment::last);

  py::class_<SolvePlan>(m, "SolvePlan")
      .def_readonly("k", &SolvePlan::k)
      .def_readonly("time", &SolvePlan::time)
      .def_readonly("segments", &SolvePlan::segments)
      .def("sinks", &SolvePlan::sinks)
      .def("partition", [](const SolvePlan& p) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const Segment& s : p.segments) out.emplace_back(s.first, s.last);
        return out;
      });

  py::class_<OneSink>(m, "OneSink")
      .def_readonly("sink", &OneSink::sink)
      .def_readonly("time", &OneSink::time);

  py::class_<SinkEngine, std::shared_ptr<SinkEngine>>(m, "Engine")
      .def(py::init([](const PathNetwork& net, const std::string& backend) {
             return std::make_shared<SinkEngine>(net, backend_from(backend));
           }),
           py::arg("network"), py::arg("backend") = "auto")
      .def_property_readonly("backend", [](const SinkEngine& e) { return std::string(to_string(e.backend())); })
      .def("__len__", &SinkEngine::size)
      .def("point", [](const SinkEngine& e, std::size_t index, double offset) {
             return make_point(e.index(), index, offset);
           },
           py::arg("index"), py::arg("offset") = 0.0)
      .def("theta_L", [](const SinkEngine& e, std::size_t i, std::size_t j) {
        const CriticalCandidate c = e.theta_L(i, j);
        return std::make_pair(c.vertex, c.cost);
      })
      .def("theta_R", [](const SinkEngine& e, std::size_t i, std::size_t j, Point s) {
        const CriticalCandidate c = e.theta_R(i, j, s);
        return std::make_pair(c.vertex, c.cost);
      })
      .def("isolate", [](const SinkEngine& e, double t, std::size_t a) { return isolate_subpath(e, t, a); })
      .def("find_1sink", [](const SinkEngine& e, std::size_t i, std::size_t j) { return find_1sink(e, i, j); })
      .def("feasible",
           [](const SinkEngine& e, double t, std::size_t k) -> std::optional<SolvePlan> {
             return feasible(e, t, k).plan;
           },
           py::arg("t"), py::arg("k"), "Greedy plan if (t, k) is feasible, else None")
      .def("solve",
           [](const SinkEngine& e, std::size_t k, const std::string& optimizer) {
             return solve_ksink(e, k, {BackendChoice::automatic, optimizer_from(optimizer), false});
           },
           py::arg("k"), py::arg("optimizer") = "matrix");

  m.def("solve_ksink",
        [](const PathNetwork& net, std::size_t k, const std::string& backend, const std::string& optimizer) {
          return solve_ksink(net, k, {backend_from(backend), optimizer_from(optimizer), false});
        },
        py::arg("network"), py::arg("k"), py::arg("backend") = "auto", py::arg("optimizer") = "matrix");

  m.def("evacuation_time_ref",
        [](const PathNetwork& net, std::size_t sink_index, double sink_offset, std::size_t i, std::size_t j) {
          const PrefixIndex idx(net);
          return evacuation_time_ref(idx, make_point(idx, sink_index, sink_offset), i, j);
        },
        py::arg("network"), py::arg("sink_index"), py::arg("sink_offset"), py::arg("i"), py::arg("j"));

  m.def("format_plan", [](const SolvePlan& plan) { return format_plan(to_document(plan)); });
  m.def("verify_plan",
        [](const PathNetwork& net, const std::string& plan_text) {
          const VerifyReport r = verify_plan(PrefixIndex(net), parse_plan(plan_text));
          return std::make_tuple(r.ok, r.max_time, r.message);
        },
        py::arg("network"), py::arg("plan_json"), "Returns (ok, max_time, message)");

  m.def("oracle_1sink",
        [](const PathNetwork& net, std::size_t i, std::size_t j) {
          const OracleReport r = oracle_1sink(net, i, j);
          return std::make_pair(r.sinks.front(), r.value);
        },
        "Brute-force optimal single sink: (sink, time)");
  m.def("oracle_ksink_dp",
        [](const PathNetwork& net, std::size_t k) {
          const OracleReport r = oracle_ksink_dp(net, k);
          return std::make_pair(r.value, r.partition);
        },
        "Exact k-sink optimum by dynamic programming: (time, partition)");
  m.def("oracle_feasible", [](const PathNetwork& net, double t, std::size_t k) { return oracle_feasible(net, t, k); });
}
