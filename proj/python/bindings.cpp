#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kelc/complexity.hpp"
#include "kelc/counting.hpp"
#include "kelc/error.hpp"
#include "kelc/oracle.hpp"
#include "kelc/sequence.hpp"

namespace py = pybind11;
using namespace kelc;

namespace {

py::int_ ToPy(const BigInt& v) {
  const std::string digits = v.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::dict ToPy(const std::map<std::uint64_t, std::uint64_t>& m) {
  py::dict d;
  for (const auto& [k, v] : m) d[py::int_(k)] = py::int_(v);
  return d;
}

}  // namespace

PYBIND11_MODULE(_kelc, m) {
  m.doc() = "Linear complexity, k-error linear complexity and 4-error counting functions";

  py::register_exception<Error>(m, "KelcError", PyExc_ValueError);

  py::class_<PeriodicSequence>(m, "Sequence")
      .def(py::init([](int n, const std::string& literal) { return MakeSequence(n, literal); }),
           py::arg("n"), py::arg("literal"))
      .def_static("zero", &PeriodicSequence::Zero)
      .def_property_readonly("n", &PeriodicSequence::exponent)
      .def_property_readonly("period", &PeriodicSequence::period)
      .def_property_readonly("weight", &PeriodicSequence::weight)
      .def("bits", &PeriodicSequence::ToBitString)
      .def("fold", [](const PeriodicSequence& s) { return PhiFold(s); })
      .def("__xor__", &PeriodicSequence::operator^)
      .def("__eq__", [](const PeriodicSequence& a, const PeriodicSequence& b) { return a == b; })
      .def("__len__", &PeriodicSequence::period)
      .def("__getitem__", [](const PeriodicSequence& s, std::size_t i) {
        if (i >= s.period()) throw py::index_error();
        return static_cast<int>(s.bit(i));
      })
      .def("__str__", &PeriodicSequence::ToBitString)
      .def("__repr__", [](const PeriodicSequence& s) {
        return "Sequence(" + std::to_string(s.exponent()) + ", '" + s.ToBitString() + "')";
      });

  m.def("linear_complexity", &LinearComplexity, py::arg("seq"));
  m.def(
      "k_error_complexity",
      [](const PeriodicSequence& s, std::uint64_t k, const std::string& method) {
        return ParseMethod(method) == Method::kFast ? KErrorComplexityFast(s, k)
                                                    : KErrorComplexityExhaustive(s, k);
      },
      py::arg("seq"), py::arg("k"), py::arg("method") = "fast");
  m.def("kmin", &KMin, py::arg("seq"));
  m.def(
      "profile",
      [](const PeriodicSequence& s, int K) {
        const auto p = Profile(s, K);
        py::dict d;
        d["n"] = p.n;
        d["L"] = p.L;
        d["k_min"] = p.k_min;
        return d;
      },
      py::arg("seq"), py::arg("K"));

  m.def("rueppel_count", [](int n, std::uint64_t L) { return ToPy(RueppelCount(n, L)); });
  m.def("decompose", [](int n, std::uint64_t L) -> py::object {
    const auto d = Decompose(n, L);
    if (!d) return py::none();
    return py::make_tuple(d->r, d->c);
  });
  m.def("classify", [](int n, std::uint64_t L) { return Describe(Classify(n, L)); });
  m.def("f_mult", [](int r, int mm) { return ToPy(FMultiplier(r, mm)); });
  m.def("g_mult", [](int r, int mm) { return ToPy(GMultiplier(r, mm)); });
  m.def("h_mult", [](int r, int mm) { return ToPy(HMultiplier(r, mm)); });
  m.def("p_mult", [](int r, int mm, int j) { return ToPy(PMultiplier(r, mm, j)); });
  m.def("q_mult", [](int r, int mm, int j) { return ToPy(QMultiplier(r, mm, j)); });
  m.def("n4_count", [](int n, std::uint64_t L) { return ToPy(N4Count(n, L)); });
  m.def("n5_count", [](int n, std::uint64_t L) { return ToPy(N5Count(n, L)); });
  m.def("weight8_count", [](int n, int mm, int j) { return ToPy(Weight8Count(n, mm, j)); });
  m.def(
      "full_table",
      [](int n, int k, unsigned threads) {
        py::list rows;
        for (const auto& v : FullTable(n, k, threads).rows) rows.append(ToPy(v));
        return rows;
      },
      py::arg("n"), py::arg("k") = 4, py::arg("threads") = 1);

  m.def(
      "spectrum",
      [](int n, int k, const std::string& filter, const std::string& method, unsigned threads,
         bool allow_long) {
        ScanOptions opts;
        opts.threads = threads;
        opts.allow_long = allow_long;
        py::gil_scoped_release release;
        return Spectrum(n, k, ParseParity(filter), ParseMethod(method), opts).counts;
      },
      py::arg("n"), py::arg("k"), py::arg("filter") = "even", py::arg("method") = "exhaustive",
      py::arg("threads") = 1, py::arg("allow_long") = false);
  m.def(
      "verify_counts",
      [](int n, int k, const std::string& method, unsigned threads) {
        ScanOptions opts;
        opts.threads = threads;
        const auto report = VerifyCounts(n, k, ParseMethod(method), opts);
        py::list rows;
        for (const auto& row : report.rows) {
          rows.append(py::make_tuple(row.L, ToPy(row.closed_form), row.empirical, row.match));
        }
        py::dict d;
        d["n"] = report.n;
        d["k"] = report.k;
        d["rows"] = rows;
        d["match"] = report.all_match;
        return d;
      },
      py::arg("n"), py::arg("k") = 4, py::arg("method") = "exhaustive", py::arg("threads") = 1);
  m.def("weight_census", [](int n, int weight) { return ToPy(WeightCensus(n, weight)); },
        py::arg("n"), py::arg("weight"));
  m.def("sample_with_lc", &SampleWithLc, py::arg("n"), py::arg("L"), py::arg("seed"));
}
