#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "affhecke/central.hpp"
#include "affhecke/checks.hpp"
#include "affhecke/error.hpp"
#include "affhecke/multiplicity.hpp"
#include "affhecke/wakimoto.hpp"

namespace py = pybind11;
using namespace affhecke;

namespace {

py::int_ to_py(const mpz_class& z) {
  const std::string s = z.get_str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

/// {v exponent: coefficient}
py::dict laurent_dict(const LaurentPoly& p) {
  py::dict d;
  if (p.is_zero()) return d;
  for (int e = p.min_exp(); e <= p.max_exp(); ++e) {
    const mpz_class c = p.coeff(e);
    if (c != 0) d[py::int_(e)] = to_py(c);
  }
  return d;
}

py::list int_list(const std::vector<mpz_class>& v) {
  py::list out;
  for (const auto& c : v) out.append(to_py(c));
  return out;
}

/// {element encoding: {v exponent: coefficient}}
py::dict element_dict(const HeckeElement& h) {
  py::dict d;
  for (const auto& [x, c] : h.terms()) d[py::str(h.group().encode(x))] = laurent_dict(c);
  return d;
}

/// A group together with its memoizing KL engine.
class Group {
 public:
  explicit Group(const std::string& name) : group_(AffineWeylGroup::from_name(name)), engine_(group_) {}

  std::string name() const { return group_->datum().name(); }

  AffineWeylElement element(const std::string& text) const {
    if (text.rfind("t[", 0) == 0) return group_->decode(text);
    return group_->from_word(group_->identity(), group_->parse_affine_word(text));
  }
  Coweight coweight(const std::string& text) const { return group_->datum().parse_coweight(text); }

  std::string normalize(const std::string& text) const { return group_->encode(element(text)); }
  int length(const std::string& text) const { return element(text).length(); }

  std::vector<std::string> adm(const std::string& mu) const {
    std::vector<std::string> out;
    for (const auto& x : group_->adm(coweight(mu))) out.push_back(group_->encode(x));
    return out;
  }

  py::dict kl(const std::string& x, const std::string& y, int jobs) {
    return laurent_dict(engine_.P(element(x), element(y), jobs));
  }
  py::dict inverse_kl(const std::string& x, const std::string& y, int jobs) {
    return laurent_dict(engine_.Q(element(x), element(y), jobs));
  }
  py::dict r_poly(const std::string& x, const std::string& y) { return laurent_dict(engine_.R(element(x), element(y))); }

  py::dict theta(const std::string& lam, const std::optional<std::string>& lam2) const {
    if (lam2) return element_dict(affhecke::theta(*group_, coweight(lam), coweight(*lam2)));
    return element_dict(affhecke::theta(*group_, coweight(lam)));
  }
  py::dict central_z(const std::string& lam, int jobs) const {
    return element_dict(affhecke::central_z(*group_, coweight(lam), jobs));
  }
  py::dict kottwitz(const std::string& mu, int jobs) const {
    return element_dict(kottwitz_function(*group_, coweight(mu), jobs));
  }

  /// {x: coefficients of R^v_{x,w} in Q}
  py::dict wakimoto(const std::string& v, const std::string& w) const {
    const WakimotoFunction f = wakimoto_function(element(v), element(w));
    py::dict d;
    for (const auto& [x, c] : f.tilde_product.terms()) {
      QPolynomial r;
      if (!try_expand_in_q(c.shifted(x.length()), r)) throw InvariantViolation("coefficient is not a polynomial in Q");
      d[py::str(group_->encode(x))] = int_list(r.coeffs);
    }
    return d;
  }

  std::shared_ptr<MultiplicityTable> multiplicities(const std::string& mu, int jobs) {
    return std::make_shared<MultiplicityTable>(compute_multiplicities(engine_, coweight(mu), jobs));
  }

  bool load_cache(const std::string& path) { return engine_.load_cache(path); }
  void save_cache(const std::string& path) const { engine_.save_cache(path); }

 private:
  std::shared_ptr<const AffineWeylGroup> group_;
  KLEngine engine_;
};

py::list table_rows(const MultiplicityTable& t) {
  py::list out;
  for (const auto& r : t.rows()) {
    py::dict d;
    d["element"] = t.group().encode(r.w);
    d["length"] = r.w.length();
    d["multiplicities"] = int_list(multiplicity_vector(r.m));
    d["bruhat_config"] = r.bruhat_config;
    out.append(d);
  }
  return out;
}

py::list table_summary(const MultiplicityTable& t) {
  py::list out;
  for (const auto& r : summarize(t)) {
    py::dict d;
    d["length"] = r.length;
    d["count"] = r.count;
    d["multiplicities"] = int_list(r.multiplicities);
    d["bruhat_config"] = r.bruhat_config;
    out.append(d);
  }
  return out;
}

py::dict report_dict(const MultiplicityTable& t) {
  const PropertyReport r = property_report(t);
  py::dict d;
  d["degree_bound"] = r.degree_bound;
  d["palindromic"] = r.palindromic;
  d["unimodal"] = r.unimodal;
  d["unit_ends"] = r.unit_ends;
  d["nonnegative"] = r.nonnegative;
  d["support"] = r.support;
  d["epsilon_sum"] = r.epsilon_sum;
  d["minuscule"] = r.minuscule;
  d["tau_matches_poincare"] = r.tau_matches_poincare;
  d["all_pass"] = r.all_pass();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Iwahori-Hecke algebras of extended affine Weyl groups and nearby-cycle multiplicities";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<MultiplicityTable, std::shared_ptr<MultiplicityTable>>(m, "MultiplicityTable")
      .def_property_readonly("group", [](const MultiplicityTable& t) { return t.group().datum().name(); })
      .def_property_readonly("mu", [](const MultiplicityTable& t) { return t.group().datum().format_coweight(t.mu()); })
      .def_property_readonly("top_length", &MultiplicityTable::top_length)
      .def_property_readonly("adm_count", [](const MultiplicityTable& t) { return t.rows().size(); })
      .def("rows", &table_rows)
      .def("summary", &table_summary)
      .def("text", [](const MultiplicityTable& t) { return render_text(t); })
      .def("csv", [](const MultiplicityTable& t) { return render_csv(t); })
      .def("json", [](const MultiplicityTable& t) { return render_json(t); })
      .def("property_report", &report_dict);

  py::class_<Group>(m, "Group")
      .def(py::init<const std::string&>(), py::arg("name"))
      .def_property_readonly("name", &Group::name)
      .def("normalize", &Group::normalize, py::arg("element"))
      .def("length", &Group::length, py::arg("element"))
      .def("adm", &Group::adm, py::arg("mu"))
      .def("kl", &Group::kl, py::arg("x"), py::arg("y"), py::arg("jobs") = 1)
      .def("inverse_kl", &Group::inverse_kl, py::arg("x"), py::arg("y"), py::arg("jobs") = 1)
      .def("r_poly", &Group::r_poly, py::arg("x"), py::arg("y"))
      .def("theta", &Group::theta, py::arg("lam"), py::arg("lam2") = std::nullopt)
      .def("central_z", &Group::central_z, py::arg("lam"), py::arg("jobs") = 1)
      .def("kottwitz", &Group::kottwitz, py::arg("mu"), py::arg("jobs") = 1)
      .def("wakimoto", &Group::wakimoto, py::arg("v"), py::arg("w"))
      .def("multiplicities", &Group::multiplicities, py::arg("mu"), py::arg("jobs") = 1,
           py::call_guard<py::gil_scoped_release>())
      .def("load_cache", &Group::load_cache, py::arg("path"))
      .def("save_cache", &Group::save_cache, py::arg("path"));

  m.def(
      "oracle_suite",
      [](std::uint64_t seed, int jobs) {
        py::list out;
        for (const auto& r : affhecke::oracle_suite(seed, jobs)) {
          py::dict d;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["cases"] = r.cases;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 42, py::arg("jobs") = 1);
}
