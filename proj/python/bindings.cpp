#include "qformlab/cli.hpp"
#include "qformlab/eisenstein.hpp"
#include "qformlab/etaq.hpp"
#include "qformlab/etasearch.hpp"
#include "qformlab/newforms.hpp"
#include "qformlab/quadforms.hpp"
#include "qformlab/spaces.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qformlab;

namespace {

py::object big(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

ExponentVector to_l(const std::array<int, 4>& l) { return ExponentVector(l[0], l[1], l[2], l[3]); }

py::dict row_dict(const FormulaRow& row) {
  py::dict d;
  d["l"] = row.l.as_array();
  d["character"] = row.character.discriminant();
  d["eisenstein"] = strings(row.eisenstein_coeffs);
  d["cusp"] = strings(row.cusp_coeffs);
  return d;
}

}  // namespace

PYBIND11_MODULE(_qformlab, m) {
  m.doc() = "Exact weight-3 modular forms on Gamma_0(24). Rationals are returned as 'p/q' strings.";

  m.def("kronecker", &kronecker, py::arg("t"), py::arg("n"));
  m.def("char_eval", [](int t, std::int64_t n) { return char_eval(DirichletChar(t), n); });
  m.def("gen_bernoulli3", [](int t) { return gen_bernoulli3(DirichletChar(t)).to_string(); });
  m.def("sigma_twisted", [](int k, int chi, int psi, std::int64_t n) {
    return big(sigma_twisted(k, DirichletChar(chi), DirichletChar(psi), n));
  });

  m.def(
      "eta_expand",
      [](const std::string& eta, std::int64_t precision) {
        const auto s = eta_quotient_expansion(EtaQuotient::parse(eta), kGrade * precision);
        if (!s.is_integral()) throw std::invalid_argument("expansion has fractional exponents");
        return strings(s.q_coefficients(precision));
      },
      py::arg("eta"), py::arg("precision") = 60, "q^0 .. q^(precision-1) coefficients of an eta quotient");

  m.def("ligozat_check", [](const std::string& eta) {
    const auto rep = ligozat_check(EtaQuotient::parse(eta));
    py::dict d;
    d["weight"] = rep.weight.to_string();
    d["l1"] = rep.l1_ok;
    d["l2"] = rep.l2_ok;
    d["l4"] = rep.l4_ok;
    d["holomorphic"] = rep.is_holomorphic;
    d["cusp_form"] = rep.is_cusp;
    d["character"] = rep.character_discriminant ? py::object(py::int_(*rep.character_discriminant)) : py::none();
    py::dict orders;
    for (const auto& [c, v] : rep.cusp_orders) orders[py::str(c.to_string())] = v.to_string();
    d["cusp_orders"] = orders;
    return d;
  });

  m.def(
      "eisenstein",
      [](const std::string& spec, std::int64_t precision) {
        return strings(eisenstein3(EisensteinSpec::parse(spec), precision).q_coefficients(precision));
      },
      py::arg("spec"), py::arg("precision") = 60);

  m.def("basis_names", [](int chi) { return basis_names(build_basis(DirichletChar(chi))); });
  m.def(
      "verify_basis",
      [](int chi, std::int64_t precision) {
        const auto rep = verify_basis(build_basis(DirichletChar(chi)), precision);
        py::dict d;
        d["rank"] = rep.rank;
        d["size"] = rep.size;
        d["expected_dimension"] = rep.expected_dimension;
        d["distinct_valuations"] = rep.distinct_valuations;
        d["ok"] = rep.ok();
        return d;
      },
      py::arg("chi"), py::arg("precision") = 60);

  m.def("classify", [](const std::array<int, 4>& l) { return classify(to_l(l)).discriminant(); });
  m.def("rep_count_bruteforce", [](const std::vector<std::int64_t>& coeffs, std::int64_t n) {
    return big(rep_count_bruteforce(QuadForm::from_coefficients(coeffs), n));
  });
  m.def("derive_formula", [](const std::array<int, 4>& l) { return row_dict(derive_formula(to_l(l))); });
  m.def("rep_count_formula", [](const std::array<int, 4>& l, std::int64_t n) {
    return rep_count_formula(derive_formula(to_l(l)), n).to_string();
  });
  m.def("verify_tables", [] {
    std::vector<FormulaRow> derived;
    for (const auto& l : all_exponent_vectors()) derived.push_back(derive_formula(l));
    const auto cmp = compare_tables(derived, bundled_tables());
    py::dict d;
    d["rows_compared"] = cmp.rows_compared;
    d["discrepancies"] = cmp.discrepancies.size();
    d["ok"] = cmp.ok();
    return d;
  });

  m.def(
      "verify_newform",
      [](int index, std::int64_t precision) {
        const auto res = verify_newform(index, precision);
        py::dict d;
        d["ok"] = res.report.ok();
        d["solve_back"] = res.solve_back_ok;
        d["relations_checked"] = res.report.relations_checked;
        std::vector<std::string> combo;
        for (const auto& c : res.spec.combo) combo.push_back(c.to_poly_string());
        d["combo"] = combo;
        return d;
      },
      py::arg("index"), py::arg("precision") = kNewformPrecision);

  m.def(
      "census",
      [](int chi, bool expressible) {
        const auto res = enumerate_space(DirichletChar(chi), expressible);
        py::dict d;
        std::vector<std::string> members;
        for (const auto& f : res.members) members.push_back(f.to_string());
        d["members"] = members;
        d["sound"] = res.soundness_ok;
        if (expressible) d["eisenstein_expressible"] = res.eisenstein_expressible.size();
        return d;
      },
      py::arg("chi"), py::arg("expressible") = false);

  m.def(
      "verify_remark_identities",
      [](std::int64_t precision) {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& c : verify_remark_identities(precision).checks) out.emplace_back(c.name, c.ok);
        return out;
      },
      py::arg("precision") = 61);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
