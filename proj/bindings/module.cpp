// Python bindings for the main operations: expansions and their arithmetic,
// the theta routes, double-coset operators, and the eigensystem verifier.

#include "siegel/hecke.hpp"
#include "siegel/qexp_io.hpp"
#include "siegel/randomgen.hpp"
#include "siegel/rootdatum.hpp"
#include "siegel/satake.hpp"
#include "siegel/selftest.hpp"
#include "siegel/theta.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace siegel;

namespace {

Cocharacter to_cochar(const std::vector<Int>& coeffs) {
    return Cocharacter(static_cast<Int>(coeffs.size()) - 1, coeffs);
}

FourierIndex to_index(Int g, const std::vector<std::vector<Int>>& doubled) {
    IMat m(static_cast<int>(g), static_cast<int>(g));
    check(doubled.size() == static_cast<size_t>(g), "BadLength", "index needs g rows");
    for (Int i = 0; i < g; ++i) {
        check(doubled[i].size() == static_cast<size_t>(g), "BadLength", "index needs g columns");
        for (Int j = 0; j < g; ++j) m(i, j) = doubled[i][j];
    }
    return FourierIndex::validate(m);
}

HeckeOperator op_from_name(Int g, const std::string& name) {
    auto open = name.find('(');
    auto close = name.rfind(')');
    check(open != std::string::npos && close == name.size() - 1, "BadOperator",
          "operator name must look like T(2), T(2^2) or T1(2^2)");
    std::string arg = name.substr(open + 1, close - open - 1);
    Int ell;
    auto caret = arg.find('^');
    if (caret != std::string::npos) {
        ell = std::stoll(arg.substr(0, caret));
    } else {
        Int value = std::stoll(arg);
        if (is_prime(value)) {
            ell = value;
        } else {
            Int root = 1;
            while (root * root < value) ++root;
            check(root * root == value && is_prime(root), "BadOperator",
                  "operator argument must be ell or ell^2");
            ell = root;
            std::ostringstream canonical;
            canonical << name.substr(0, open) << "(" << ell << "^2)";
            return hecke_operator(g, ell, canonical.str());
        }
    }
    return hecke_operator(g, ell, name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact expansions of degree-g modular forms, diagonal theta operators, "
              "double-coset Hecke operators and eigensystem bookkeeping";

    py::register_exception<domain_error>(m, "DomainError");

    py::class_<QExpansion>(m, "QExpansion")
        .def_property_readonly("g", &QExpansion::g)
        .def_property_readonly("level", &QExpansion::level)
        .def_property_readonly("weight",
                               [](const QExpansion& f) -> py::object {
                                   if (f.weight()) return py::int_(*f.weight());
                                   return py::none();
                               })
        .def_property_readonly("tau", &QExpansion::tau)
        .def_property_readonly("ring", [](const QExpansion& f) { return f.ring().to_string(); })
        .def("coefficient",
             [](const QExpansion& f, const std::vector<std::vector<Int>>& doubled) {
                 return f.coefficient(to_index(f.g(), doubled)).to_string();
             },
             py::arg("doubled_index"),
             "coefficient at a doubled index matrix, as its text encoding")
        .def("terms",
             [](const QExpansion& f) {
                 std::vector<std::pair<std::vector<std::vector<Int>>, std::string>> out;
                 for (const auto& [n, c] : f.coeffs()) {
                     std::vector<std::vector<Int>> mat(f.g(), std::vector<Int>(f.g()));
                     for (Int i = 0; i < f.g(); ++i)
                         for (Int j = 0; j < f.g(); ++j) mat[i][j] = n.doubled()(i, j);
                     out.emplace_back(std::move(mat), c.to_string());
                 }
                 return out;
             },
             "list of (doubled index matrix, coefficient) pairs")
        .def("__len__", [](const QExpansion& f) { return f.coeffs().size(); })
        .def("__eq__", [](const QExpansion& a, const QExpansion& b) { return a == b; })
        .def("__add__",
             [](const QExpansion& a, const QExpansion& b) {
                 RingValue one = RingValue::one(a.ring());
                 return qexp_linear(one, a, one, b);
             })
        .def("__mul__", [](const QExpansion& a, const QExpansion& b) { return qexp_mul(a, b); })
        .def("to_text", &qexp_to_text)
        .def_static("from_text", &qexp_from_text)
        .def("__repr__", [](const QExpansion& f) {
            std::ostringstream os;
            os << "QExpansion(g=" << f.g() << ", N=" << f.level() << ", terms="
               << f.coeffs().size() << ", tau=" << f.tau() << ")";
            return os.str();
        });

    m.def("eisenstein", &eisenstein, py::arg("k"), py::arg("tau"),
          "normalised weight-k Eisenstein series, genus 1, exact rational");
    m.def("delta", &delta_series, py::arg("tau"), "discriminant cusp form, genus 1");
    m.def("reduce_mod_p",
          [](const QExpansion& f, Int p) { return reduce_mod_p(f, p); }, py::arg("f"),
          py::arg("p"));
    m.def("truncate", [](const QExpansion& f, Int tau) { return siegel::truncate(f, tau); },
          py::arg("f"), py::arg("tau"));

    m.def("theta_bn",
          [](const QExpansion& f) { return theta_bn_direct(f); }, py::arg("f"),
          "diagonal theta operator on a mod-p expansion");
    m.def("theta_bn_via_bracket",
          [](const QExpansion& f, const QExpansion& h, Int p) {
              return theta_bn_via_bracket(f, h, p);
          },
          py::arg("f"), py::arg("h"), py::arg("p"));
    m.def("bracket",
          [](const QExpansion& f, const QExpansion& g, Int k1, Int k2) {
              return bracket(f, g, PQContext(f.g(), k1, k2));
          },
          py::arg("f"), py::arg("g"), py::arg("k1"), py::arg("k2"));

    m.def("hecke_apply",
          [](const std::string& op, Int k, const QExpansion& f, Int tau_out) {
              return hecke_apply(op_from_name(f.g(), op), k, f, tau_out);
          },
          py::arg("op"), py::arg("k"), py::arg("f"), py::arg("tau_out"));
    m.def("hecke_eigenvalue",
          [](const std::string& op, Int k, const QExpansion& f) -> py::object {
              auto ev = eigenvalue_of(op_from_name(f.g(), op), k, f);
              if (!ev) return py::none();
              return py::str(ev->to_string());
          },
          py::arg("op"), py::arg("k"), py::arg("f"));
    m.def("coset_reps",
          [](Int g, Int ell, const std::vector<Int>& lam) {
              std::vector<std::vector<std::vector<Int>>> out;
              for (const auto& rep : coset_reps(g, ell, to_cochar(lam))) {
                  IMat a = rep.assembled();
                  std::vector<std::vector<Int>> mat(a.rows, std::vector<Int>(a.cols));
                  for (int i = 0; i < a.rows; ++i)
                      for (int j = 0; j < a.cols; ++j) mat[i][j] = a(i, j);
                  out.push_back(std::move(mat));
              }
              return out;
          },
          py::arg("g"), py::arg("ell"), py::arg("lam"),
          "assembled right-coset representatives of the named double coset");
    m.def("commutation_check",
          [](const QExpansion& f, Int k, const std::string& op) {
              CommutationReport rep = commutation_check(f, k, op_from_name(f.g(), op));
              return py::make_tuple(rep.ok, rep.detail);
          },
          py::arg("f"), py::arg("k"), py::arg("op"));

    m.def("is_dominant", [](const std::vector<Int>& lam) { return is_dominant(to_cochar(lam)); },
          py::arg("lam"));
    m.def("dominance_witness",
          [](const std::vector<Int>& lam, const std::vector<Int>& mu) -> py::object {
              auto w = dominance_witness(to_cochar(lam), to_cochar(mu));
              if (!w) return py::none();
              return py::cast(*w);
          },
          py::arg("lam"), py::arg("mu"));
    m.def("eta_exponent", [](const std::vector<Int>& lam) { return eta_exponent(to_cochar(lam)); },
          py::arg("lam"));
    m.def("positive_coroots",
          [](Int g) {
              std::vector<std::vector<Int>> out;
              for (const auto& c : build_root_datum(g).positive_coroots) out.push_back(c.coeffs);
              return out;
          },
          py::arg("g"));
    m.def("dominant_lower_set",
          [](const std::vector<Int>& lam) {
              std::vector<std::vector<Int>> out;
              for (const auto& mu : dominant_lower_set(to_cochar(lam))) out.push_back(mu.coeffs);
              return out;
          },
          py::arg("lam"));
    m.def("weights_of_irrep",
          [](const std::vector<Int>& lam) {
              std::map<std::vector<Int>, long long> out;
              for (const auto& [mu, mult] : weights_of_irrep(to_cochar(lam)))
                  out[mu.coeffs] = static_cast<long long>(mult);
              return out;
          },
          py::arg("lam"));

    m.def("main_theorem_verify_random",
          [](Int g, Int m_twist, Int ell, Int p, Int trials, std::uint64_t seed) {
              Rng rng(seed);
              auto [field, v] = square_root_field(ell, p);
              std::vector<Cocharacter> pool;
              if (g == 1) {
                  pool.push_back(to_cochar({1, 1}));
                  pool.push_back(to_cochar({2, 2}));
              } else {
                  pool.push_back(to_cochar({1, 1, 1}));
                  pool.push_back(to_cochar({2, 1, 2}));
              }
              bool all_ok = true;
              for (Int t = 0; t < trials; ++t) {
                  const Cocharacter& lam = pool[t % pool.size()];
                  SatakeCoefficients d =
                      random_unitriangular(lam, RingDesc::prime_field(p), rng);
                  Eigensystem psi = random_eigensystem(lam, ell, p, field, rng);
                  all_ok =
                      all_ok && main_theorem_verify(lam, d, psi, m_twist, ell, p, v).ok;
              }
              return all_ok;
          },
          py::arg("g"), py::arg("m"), py::arg("ell"), py::arg("p"), py::arg("trials") = 10,
          py::arg("seed") = 0);

    m.def("cyclotomic_poly",
          [](Int order) {
              std::vector<std::string> out;
              for (const auto& c : cyclotomic_poly(order)) out.push_back(c.str());
              return out;
          },
          py::arg("order"), "integer coefficients low-to-high, as strings");

    m.def("selftest",
          [](bool quick, std::uint64_t seed) {
              SelftestOptions opt;
              opt.quick = quick;
              opt.seed = seed;
              std::vector<std::tuple<std::string, bool, std::string>> out;
              for (const auto& r : run_selftest(opt)) out.emplace_back(r.name, r.passed, r.detail);
              return out;
          },
          py::arg("quick") = true, py::arg("seed") = 0,
          "run the acceptance checks; returns (name, passed, detail) tuples");
}
