// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dupread/json_io.hpp"
#include "dupread/nucleus_code.hpp"
#include "dupread/rates.hpp"
#include "dupread/render.hpp"
#include "dupread/sidon_code.hpp"
#include "dupread/verify.hpp"

namespace py = pybind11;
using namespace dupread;

namespace {

py::object big_to_int(const BigInt& v) {
  // route exact big integers through their decimal form
  return py::module_::import("builtins").attr("int")(v.str());
}

py::dict row_to_dict(const RateBounds& r) {
  py::dict d;
  d["k"] = r.k;
  d["ell"] = r.ell;
  d["q"] = r.q;
  d["lower"] = r.lower;
  d["upper"] = r.upper;
  d["exact"] = r.exact ? py::object(py::float_(*r.exact)) : py::none();
  d["method_lower"] = r.method_lower;
  d["method_upper"] = r.method_upper;
  return d;
}

Params make_params(int q, int ell, int k, long long n, std::optional<int> t) {
  Params p{q, ell, k, n, t};
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_dupread, m) {
  m.doc() =
      "codes correcting tandem duplications in sliding-window composition "
      "read vectors";

  // sequences, windows, compositions
  m.def("composition", &composition, py::arg("w"), py::arg("q"));
  m.def("read_vector", &read_vector, py::arg("x"), py::arg("q"), py::arg("ell"));
  m.def("invert_read", &invert_read, py::arg("z"), py::arg("q"), py::arg("ell"),
        "sequence whose read vector is z, or None when z is not one");
  m.def("remove_window", &remove_window, py::arg("x"), py::arg("first"),
        py::arg("last"));
  m.def("is_periodic", &is_periodic, py::arg("x"), py::arg("m"));
  m.def("composition_alphabet", &composition_alphabet, py::arg("q"), py::arg("ell"));

  // derivatives and the zero-run split
  m.def("delta_k", &delta_k, py::arg("y"), py::arg("k"));
  m.def("delta_k_inverse", &delta_k_inverse, py::arg("d"), py::arg("k"));
  m.def(
      "decompose",
      [](const DeltaVector& y, int k) {
        auto d = decompose(y, k);
        return py::make_tuple(d.mu, d.sigma);
      },
      py::arg("y"), py::arg("k"), "(mu, sigma) of the zero-run decomposition");
  m.def("recompose", &recompose, py::arg("mu"), py::arg("sigma"), py::arg("k"),
        py::arg("q"));
  m.def("nucleus", &nucleus, py::arg("x"), py::arg("q"), py::arg("ell"), py::arg("k"));
  m.def("depth", &depth, py::arg("x"), py::arg("q"), py::arg("ell"), py::arg("k"));

  // duplication channel
  py::class_<DuplicationEvent>(m, "DuplicationEvent")
      .def(py::init([](std::size_t pos, std::size_t len) {
             return DuplicationEvent{pos, len};
           }),
           py::arg("pos"), py::arg("len"))
      .def_readwrite("pos", &DuplicationEvent::pos)
      .def_readwrite("len", &DuplicationEvent::len)
      .def("__repr__", [](const DuplicationEvent& e) {
        return "DuplicationEvent(pos=" + std::to_string(e.pos) +
               ", len=" + std::to_string(e.len) + ")";
      });
  m.def("duplicate", &duplicate, py::arg("z"), py::arg("event"));
  m.def("descendants", &descendants, py::arg("z"), py::arg("k"), py::arg("t"));
  m.def("ball", &ball, py::arg("z"), py::arg("k"), py::arg("t"));
  m.def(
      "random_duplications",
      [](const EntryVector& z, int k, int t, std::uint64_t seed) {
        auto draw = random_duplications(z, k, t, seed);
        return py::make_tuple(draw.output, draw.events);
      },
      py::arg("z"), py::arg("k"), py::arg("t"), py::arg("seed"));
  m.def("common_descendant", &common_descendant, py::arg("x"), py::arg("xp"),
        py::arg("q"), py::arg("ell"), py::arg("k"));
  m.def("balls_intersect", &balls_intersect, py::arg("x"), py::arg("xp"),
        py::arg("q"), py::arg("ell"), py::arg("k"));

  // one-representative-per-class code
  py::class_<NucleusClassCode>(m, "NucleusClassCode")
      .def_readonly("representatives", &NucleusClassCode::representatives)
      .def("__len__",
           [](const NucleusClassCode& c) { return c.representatives.size(); })
      .def("depth_partition", [](const NucleusClassCode& c) {
        return depth_partition(c);
      });
  m.def(
      "build_nucleus_code",
      [](int q, int ell, int k, long long n, std::uint64_t guard) {
        return build_nucleus_code(make_params(q, ell, k, n, std::nullopt), guard);
      },
      py::arg("q"), py::arg("ell"), py::arg("k"), py::arg("n"),
      py::arg("size_guard") = default_size_guard());
  m.def("is_fine", &is_fine, py::arg("x"), py::arg("k"), py::arg("ell"));
  m.def("count_fine_bruteforce", &count_fine_bruteforce, py::arg("q"),
        py::arg("k"), py::arg("ell"), py::arg("n"),
        py::arg("size_guard") = default_size_guard());
  m.def(
      "count_fine_fast",
      [](int q, int k, int ell, long long n) {
        return big_to_int(count_fine_fast(q, k, ell, n));
      },
      py::arg("q"), py::arg("k"), py::arg("ell"), py::arg("n"));
  m.def(
      "rll_count",
      [](int q, int limit, long long n) { return big_to_int(rll_count(q, limit, n)); },
      py::arg("q"), py::arg("limit"), py::arg("n"));
  m.def("del_step", &del_step, py::arg("x"), py::arg("k"), py::arg("ell"));
  m.def("del_star", &del_star, py::arg("x"), py::arg("k"), py::arg("ell"));
  m.def("rem_step", &rem_step, py::arg("d"), py::arg("pos"), py::arg("k"));
  m.def("count_duplication_contexts", &count_duplication_contexts, py::arg("q"),
        py::arg("k"), py::arg("ell"),
        py::arg("size_guard") = default_size_guard());

  // distinct-sums sets and the bounded-error code
  py::class_<SidonSet>(m, "SidonSet")
      .def(py::init([](long long m_, std::vector<long long> elements, int order) {
             return SidonSet{m_, std::move(elements), order};
           }),
           py::arg("modulus"), py::arg("elements"), py::arg("order"))
      .def_readonly("modulus", &SidonSet::modulus)
      .def_readonly("elements", &SidonSet::elements)
      .def_readonly("order", &SidonSet::order)
      .def("__repr__", [](const SidonSet& b) {
        return "SidonSet(modulus=" + std::to_string(b.modulus) + ", " +
               std::to_string(b.elements.size()) + " elements, order=" +
               std::to_string(b.order) + ")";
      });
  m.def("verify_sidon",
        py::overload_cast<const std::vector<long long>&, long long, int>(&verify_sidon),
        py::arg("elements"), py::arg("modulus"), py::arg("order"));
  m.def("greedy_sidon", &greedy_sidon, py::arg("count"), py::arg("order"),
        py::arg("modulus_start") = 2);
  m.def(
      "syndrome",
      [](const Sequence& x, const SidonSet& b, int q, int ell, int k, long long n,
         int t) { return syndrome(x, b, make_params(q, ell, k, n, t)); },
      py::arg("x"), py::arg("sidon"), py::arg("q"), py::arg("ell"), py::arg("k"),
      py::arg("n"), py::arg("t"));
  m.def(
      "best_coset",
      [](const SidonSet& b, int q, int ell, int k, long long n, int t,
         std::uint64_t guard) {
        return best_coset(make_params(q, ell, k, n, t), b, guard);
      },
      py::arg("sidon"), py::arg("q"), py::arg("ell"), py::arg("k"), py::arg("n"),
      py::arg("t"), py::arg("size_guard") = default_size_guard());
  m.def(
      "coset_members",
      [](const SidonSet& b, long long g, int q, int ell, int k, long long n,
         int t, std::uint64_t guard) {
        return coset_members(make_params(q, ell, k, n, t), b, g, guard);
      },
      py::arg("sidon"), py::arg("g"), py::arg("q"), py::arg("ell"), py::arg("k"),
      py::arg("n"), py::arg("t"), py::arg("size_guard") = default_size_guard());
  m.def(
      "decode",
      [](const EntryVector& received, const SidonSet& b, long long g, int q,
         int ell, int k, long long n, int t) -> py::object {
        const SidonCode code{make_params(q, ell, k, n, t), b, g};
        const SyndromeTable table(b);
        const auto out = decode(received, code, table);
        if (out.status != DecodeStatus::ok) {
          return py::make_tuple(to_string(out.status), py::none());
        }
        return py::make_tuple("ok", py::cast(out.x));
      },
      py::arg("received"), py::arg("sidon"), py::arg("g"), py::arg("q"),
      py::arg("ell"), py::arg("k"), py::arg("n"), py::arg("t"),
      "(status, sequence-or-None) after undoing up to t duplications");

  // asymptotic rates
  m.def("lambda_root", &lambda_root, py::arg("order"), py::arg("q"));
  m.def("log_q_lambda", &log_q_lambda, py::arg("order"), py::arg("q"));
  m.def("rate_exact_k1", &rate_exact_k1, py::arg("q"));
  m.def("rate_upper", &rate_upper, py::arg("k"), py::arg("ell"), py::arg("q"));
  m.def("rate_lower_lll", &rate_lower_lll, py::arg("k"), py::arg("ell"), py::arg("q"));
  m.def("rate_lower_simple", &rate_lower_simple, py::arg("k"), py::arg("q"));
  m.def("alpha_envelope", &alpha_envelope, py::arg("k"), py::arg("ell"), py::arg("q"));
  m.def(
      "rate_table",
      [](const std::vector<int>& ks, const std::vector<int>& ells, int q) {
        py::list rows;
        for (const auto& r : rate_table(ks, ells, q)) rows.append(row_to_dict(r));
        return rows;
      },
      py::arg("ks"), py::arg("ells"), py::arg("q"));

  // rendering and verification
  m.def("render_entry", &render_entry, py::arg("entry"));
  m.def("render_entry_vector", &render_entry_vector, py::arg("v"));
  m.def(
      "run_suite",
      [](const std::string& suite, std::uint64_t seed) {
        py::list out;
        for (const auto& r : run_suite(suite, seed)) {
          out.append(py::make_tuple(r.name, r.pass, r.detail));
        }
        return out;
      },
      py::arg("suite"), py::arg("seed") = 20240915,
      "run a named verification suite; returns (name, pass, detail) tuples");
}
