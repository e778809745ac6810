#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "equivknot/canonical_form.hpp"
#include "equivknot/move_log_json.hpp"
#include "equivknot/nonadditivity.hpp"
#include "equivknot/signature.hpp"
#include "equivknot/torus.hpp"
#include "equivknot/two_bridge.hpp"
#include "equivknot/unknotter.hpp"

namespace py = pybind11;
using namespace equivknot;

namespace {

// Arbitrary-precision integers cross the boundary as decimal strings.
py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }
BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

py::tuple fraction_tuple(const TwoBridgeFraction& f) { return py::make_tuple(to_py(f.p), to_py(f.q)); }

BraidWord make_word(int strands, const std::vector<int>& letters) {
  std::vector<Generator> gens;
  gens.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw ParseError("generator index 0 is not allowed");
    gens.push_back({x > 0 ? x : -x, x > 0});
  }
  return BraidWord(strands, std::move(gens));
}

std::vector<int> letters_of(const BraidWord& w) {
  std::vector<int> out;
  for (const auto& g : w.letters()) out.push_back(g.positive ? g.index : -g.index);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equivariant unknotting of strongly invertible knots";

  // Translators are tried newest first, so the subclass is registered last.
  const auto& base = py::register_exception<Error>(m, "EquivknotError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", py::make_tuple(base, py::handle(PyExc_ValueError)));

  m.def("is_intravergent", [](int strands, const std::vector<int>& word) {
    return validate_intravergent(make_word(strands, word));
  });
  m.def("braids_equal", [](int strands, const std::vector<int>& a, const std::vector<int>& b) {
    return braids_equal(make_word(strands, a), make_word(strands, b));
  });
  m.def("torus_braid", [](int p, int q) {
    const IntravergentBraid b = torus_braid(p, q);
    return py::make_tuple(b.strands(), letters_of(b.word()));
  });

  m.def(
      "unknot_json",
      [](int strands, const std::vector<int>& word, std::optional<int> depth) {
        UnknotOptions options;
        options.search_depth = depth;
        return move_log_to_json(equivariant_unknot(IntravergentBraid(make_word(strands, word)), options)).dump();
      },
      py::arg("strands"), py::arg("word"), py::arg("search_depth") = py::none());
  m.def(
      "verify_log_json",
      [](const std::string& text, bool full) {
        const VerificationReport r =
            verify_move_log(move_log_from_json(nlohmann::json::parse(text)), full ? IsotopyCheck::Full : IsotopyCheck::Cheap);
        py::dict out;
        out["passed"] = r.passed;
        out["failing_step"] = r.failing_step ? py::object(py::int_(*r.failing_step)) : py::object(py::none());
        out["message"] = r.message;
        out["replayed_cost"] = r.replayed_cost;
        return out;
      },
      py::arg("log"), py::arg("full") = true);

  m.def("continued_fraction", [](const std::vector<py::int_>& coeffs) {
    std::vector<BigInt> big;
    for (const auto& c : coeffs) big.push_back(from_py(c));
    return fraction_tuple(eval_continued_fraction(big));
  });
  m.def("jm_fraction", [](const py::int_& mval) { return fraction_tuple(jm_fraction(from_py(mval))); });
  m.def("normalize", [](const py::int_& p, const py::int_& q) {
    const NormalizedFraction n = normalize({from_py(p), from_py(q)});
    return py::make_tuple(to_py(n.fraction.p), to_py(n.fraction.q), n.mirrored);
  });
  m.def("u4_equals_one", [](const py::int_& p, const py::int_& q) -> py::object {
    const auto w = u4_equals_one({from_py(p), from_py(q)});
    if (!w) return py::none();
    py::dict out;
    out["r"] = to_py(w->r);
    out["s"] = to_py(w->s);
    out["p_sign"] = w->p_sign;
    out["unit"] = w->unit;
    out["q_sign"] = w->q_sign;
    out["q_inverted"] = w->q_inverted;
    return out;
  });

  m.def("inertia", [](const std::vector<std::vector<py::int_>>& rows) {
    std::vector<std::vector<BigInt>> big;
    for (const auto& row : rows) {
      auto& r = big.emplace_back();
      for (const auto& x : row) r.push_back(from_py(x));
    }
    const Inertia i = matrix_signature(SymmetricIntegerMatrix(std::move(big)));
    return py::make_tuple(i.n_plus, i.n_minus, i.n_zero);
  });
  m.def("signature_q2_jm", &signature_q2_jm);

  m.def(
      "nonadditivity_report_json",
      [](long long m_min, long long m_max) { return nonadditivity_report({m_min, m_max}).to_json().dump(); },
      py::arg("m_min") = -100, py::arg("m_max") = 100);
}
