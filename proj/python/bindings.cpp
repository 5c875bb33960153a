// Python module exposing the main operations over plain lists of parts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bpart/cfg.hpp"
#include "bpart/counting.hpp"
#include "bpart/io.hpp"
#include "bpart/lattice.hpp"
#include "bpart/oracle.hpp"
#include "bpart/tree.hpp"
#include "bpart/verify.hpp"

namespace py = pybind11;

namespace {

using parts_t = std::vector<bpart::part_t>;

bpart::partition make(const parts_t& parts, unsigned base) {
  return bpart::partition(parts, bpart::basis(base));
}

std::vector<parts_t> unwrap(const std::vector<bpart::partition>& ps) {
  std::vector<parts_t> out;
  out.reserve(ps.size());
  for (const bpart::partition& p : ps) out.push_back(p.parts());
  return out;
}

py::object big(const bpart::bignum& v) {
  PyObject* o = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (o == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(o);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "b-ary partitions: enumeration, counting and lattice structure";

  m.def("canonical", [](bpart::value_t n, unsigned base) {
    return bpart::canonical(n, bpart::basis(base)).parts();
  }, py::arg("n"), py::arg("base"), "Representation of n with every part below base.");

  m.def("value", [](const parts_t& p, unsigned base) {
    return bpart::value(make(p, base));
  }, py::arg("parts"), py::arg("base"), "Sum of parts[i] * base**i.");

  m.def("fire", [](const parts_t& p, std::size_t i, unsigned base) {
    return bpart::fire(make(p, base), i).parts();
  }, py::arg("parts"), py::arg("i"), py::arg("base"),
     "Move base units from position i to one unit at position i+1.");

  m.def("unfire", [](const parts_t& p, std::size_t i, unsigned base) {
    return bpart::unfire(make(p, base), i).parts();
  }, py::arg("parts"), py::arg("i"), py::arg("base"), "Inverse of fire.");

  m.def("successors", [](const parts_t& p, unsigned base) {
    return unwrap(bpart::successors(make(p, base)));
  }, py::arg("parts"), py::arg("base"));

  m.def("predecessors", [](const parts_t& p, unsigned base) {
    return unwrap(bpart::predecessors(make(p, base)));
  }, py::arg("parts"), py::arg("base"));

  m.def("leading", [](const parts_t& p, unsigned base) {
    return bpart::leading(make(p, base));
  }, py::arg("parts"), py::arg("base"), "Number of leading parts equal to base-1.");

  m.def("inc", [](const parts_t& p, std::size_t i, unsigned base) {
    return bpart::inc(make(p, base), i).parts();
  }, py::arg("parts"), py::arg("i"), py::arg("base"),
     "Odometer step: zero the first i parts (which must equal base-1), bump part i.");

  m.def("shots", [](const parts_t& p, bpart::value_t n, unsigned base) {
    return bpart::shots(make(p, base), n).shots();
  }, py::arg("parts"), py::arg("n"), py::arg("base"),
     "Per-position firing counts on any path from (n).");

  m.def("partition_from_shots", [](bpart::value_t n, const std::vector<bpart::value_t>& s,
                                   unsigned base) {
    return bpart::partition_from_shots(n, bpart::shot_vector(s), bpart::basis(base)).parts();
  }, py::arg("n"), py::arg("shots"), py::arg("base"));

  m.def("leq", [](const parts_t& p, const parts_t& q, bpart::value_t n, unsigned base) {
    return bpart::leq(make(p, base), make(q, base), n);
  }, py::arg("p"), py::arg("q"), py::arg("n"), py::arg("base"),
     "True when p is reachable from q by firings.");

  m.def("join", [](const parts_t& p, const parts_t& q, bpart::value_t n, unsigned base) {
    return bpart::join(make(p, base), make(q, base), n).parts();
  }, py::arg("p"), py::arg("q"), py::arg("n"), py::arg("base"));

  m.def("meet", [](const parts_t& p, const parts_t& q, bpart::value_t n, unsigned base) {
    return bpart::meet(make(p, base), make(q, base), n).parts();
  }, py::arg("p"), py::arg("q"), py::arg("n"), py::arg("base"));

  m.def("carry", [](bpart::value_t i, unsigned base) {
    return bpart::carry(i, bpart::basis(base));
  }, py::arg("i"), py::arg("base"), "Largest k with base**k dividing i.");

  m.def("children", [](const parts_t& p, unsigned base) {
    return unwrap(bpart::children(make(p, base)));
  }, py::arg("parts"), py::arg("base"), "Sons in the expansion tree.");

  m.def("rightmost_branch", [](bpart::value_t i, unsigned base) {
    return bpart::rightmost_branch(bpart::basis(base), i).parts();
  }, py::arg("i"), py::arg("base"));

  m.def("subtree_order", [](const parts_t& p, unsigned base) {
    return bpart::subtree_order(make(p, base));
  }, py::arg("parts"), py::arg("base"));

  m.def("levels", [](bpart::value_t max_depth, unsigned base, std::size_t cap) {
    std::vector<std::vector<parts_t>> out;
    for (const auto& level : bpart::levels(bpart::basis(base), max_depth, cap))
      out.push_back(unwrap(level));
    return out;
  }, py::arg("max_depth"), py::arg("base"), py::arg("cap") = bpart::default_node_cap);

  m.def("enumerate_partitions", [](bpart::value_t n, unsigned base, std::size_t cap) {
    return unwrap(bpart::enumerate(n, bpart::basis(base), cap));
  }, py::arg("n"), py::arg("base"), py::arg("cap") = bpart::default_node_cap,
     "Every representation of n, in level order.");

  m.def("count", [](bpart::value_t n, unsigned base, const std::string& method) {
    bpart::count_cache cache{bpart::basis(base)};
    if (method == "recurrence") return big(cache.count(n));
    if (method == "sum") return big(cache.count_sum_form(n));
    if (method == "pi") return big(cache.count_via_tree(n));
    throw std::invalid_argument("count: method must be recurrence, sum or pi");
  }, py::arg("n"), py::arg("base"), py::arg("method") = "recurrence",
     "Exact number of representations of n.");

  m.def("count_exact_parts", [](bpart::value_t n, unsigned length, unsigned base) {
    return big(bpart::count_exact_parts(n, length, bpart::basis(base)));
  }, py::arg("n"), py::arg("length"), py::arg("base"),
     "Representations of n with exactly `length` parts.");

  m.def("subtree_level_count", [](std::int64_t l, unsigned k, unsigned base) {
    bpart::count_cache cache{bpart::basis(base)};
    return big(cache.subtree_level_count(l, k));
  }, py::arg("l"), py::arg("k"), py::arg("base"),
     "Nodes at depth l in an order-k subtree of the expansion tree.");

  m.def("hasse", [](bpart::value_t n, unsigned base, std::size_t cap) {
    const bpart::hasse_diagram d = bpart::build_hasse(n, bpart::basis(base), cap);
    py::dict doc;
    doc["basis"] = base;
    doc["n"] = n;
    doc["nodes"] = unwrap(d.nodes());
    py::list edges;
    for (const bpart::hasse_edge& e : d.edges())
      edges.append(py::make_tuple(e.from, e.to, e.position));
    doc["edges"] = edges;
    return doc;
  }, py::arg("n"), py::arg("base"), py::arg("cap") = bpart::default_node_cap,
     "Covering diagram as {basis, n, nodes, edges}.");

  m.def("decompose", [](bpart::value_t n, unsigned base) {
    py::list out;
    for (const bpart::decompose_block& block : bpart::decompose(n, bpart::basis(base)))
      out.append(py::make_tuple(block.shift, unwrap(block.members)));
    return out;
  }, py::arg("n"), py::arg("base"),
     "Disjoint blocks of representations of n, one per power of base dividing n.");

  m.def("brute_enumerate", [](bpart::value_t n, unsigned base, std::size_t budget) {
    return unwrap(bpart::oracle::brute_enumerate(n, bpart::basis(base), budget));
  }, py::arg("n"), py::arg("base"), py::arg("budget") = bpart::oracle::default_budget,
     "Reference enumeration by exhaustive digit search.");

  m.def("brute_leq", [](const parts_t& p, const parts_t& q, bpart::value_t n, unsigned base,
                        std::size_t budget) {
    return bpart::oracle::brute_leq(make(p, base), make(q, base), n, budget);
  }, py::arg("p"), py::arg("q"), py::arg("n"), py::arg("base"),
     py::arg("budget") = bpart::oracle::default_budget);

  m.def("verify", [](unsigned base, bpart::value_t max_n) {
    bpart::verify_options opt{bpart::basis(base)};
    opt.max_n = max_n;
    opt.order_max_n = std::min<bpart::value_t>(max_n, opt.order_max_n);
    opt.cfg_max_n = std::min<bpart::value_t>(max_n, opt.cfg_max_n);
    py::list out;
    for (const bpart::check_result& r : bpart::run_verification(opt))
      out.append(py::make_tuple(r.name, r.passed, r.detail));
    return out;
  }, py::arg("base"), py::arg("max_n") = 30,
     "Cross-validation suite; returns (name, passed, detail) per check.");
}
