#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lameball/hardy.hpp"
#include "lameball/verify.hpp"

namespace py = pybind11;
using namespace lameball;

namespace {

VshFamily family_from(const std::string& s) {
    if (s == "+") return VshFamily::Plus;
    if (s == "-") return VshFamily::Minus;
    if (s == "0") return VshFamily::Zero;
    throw std::domain_error("family must be one of '+', '-', '0'");
}

} // namespace

PYBIND11_MODULE(_lameball, m) {
    m.doc() = "Spectral solver for the Lame Dirichlet problem in the unit ball";

    py::class_<SphereGrid>(m, "SphereGrid")
        .def_readonly("exactness_degree", &SphereGrid::exactness_degree)
        .def_property_readonly("nodes", [](const SphereGrid& g) { return g.nodes; })
        .def_property_readonly("weights", [](const SphereGrid& g) { return g.weights; })
        .def("__len__", &SphereGrid::size);

    py::class_<ScalarExpansion>(m, "ScalarExpansion")
        .def(py::init<int>(), py::arg("band_limit"))
        .def_readonly("band_limit", &ScalarExpansion::band_limit)
        .def("get", [](const ScalarExpansion& g, int l, int mm) { return g.at(l, mm); })
        .def("set", [](ScalarExpansion& g, int l, int mm, double v) { g.at(l, mm) = v; });

    py::class_<VshExpansion>(m, "VshExpansion")
        .def(py::init<int>(), py::arg("band_limit"))
        .def_readonly("band_limit", &VshExpansion::band_limit)
        .def("get",
             [](const VshExpansion& e, const std::string& f, int l, int mm) {
                 return e.at(family_from(f), l, mm);
             })
        .def("set",
             [](VshExpansion& e, const std::string& f, int l, int mm, double v) {
                 e.at(family_from(f), l, mm) = v;
             })
        .def("energy",
             [](const VshExpansion& e, const std::string& f) { return e.energy(family_from(f)); });

    py::class_<LameParameters>(m, "LameParameters")
        .def(py::init<double, double>(), py::arg("lam"), py::arg("mu"))
        .def_readonly("lam", &LameParameters::lambda)
        .def_readonly("mu", &LameParameters::mu)
        .def_property_readonly("tau", &LameParameters::tau)
        .def_property_readonly("alpha", &LameParameters::alpha)
        .def_property_readonly("beta", &LameParameters::beta);

    py::class_<ElasticSolution>(m, "ElasticSolution")
        .def_readonly("params", &ElasticSolution::params)
        .def_readonly("boundary", &ElasticSolution::boundary);

    m.def("eval_scalar_harmonic", [](int l, int mm, const Vec3& eta) {
        return eval_scalar_harmonic({l, mm}, UnitVector(eta));
    });
    m.def("eval_solid_harmonic",
          [](int l, int mm, const Vec3& x) { return eval_solid_harmonic({l, mm}, x); });
    m.def("eval_solid_gradient",
          [](int l, int mm, const Vec3& x) { return eval_solid_gradient({l, mm}, x); });
    m.def("eval_surface_gradient", [](int l, int mm, const Vec3& eta) {
        return eval_surface_gradient({l, mm}, UnitVector(eta));
    });
    m.def("eval_vsh", [](const std::string& f, int l, int mm, const Vec3& eta) {
        return eval_vsh(family_from(f), {l, mm}, UnitVector(eta));
    });
    m.def("vsh_norm_sq",
          [](const std::string& f, int l) { return vsh_norm_sq(family_from(f), l); });

    m.def("build_grid", &build_grid, py::arg("band_limit"));
    m.def("integrate", [](const SphereGrid& g, const std::vector<double>& v) {
        return integrate(g, v);
    });
    m.def("lp_norm", [](const SphereGrid& g, const FieldSamples& f, double p) {
        return lp_norm(g, f, p);
    });

    m.def("analyze_scalar", [](const SphereGrid& g, const std::vector<double>& s, int L) {
        return analyze_scalar(g, s, L);
    });
    m.def("analyze_field", &analyze_field);
    m.def("synthesize", [](const VshExpansion& e, const Vec3& eta) {
        return synthesize(e, UnitVector(eta));
    });
    m.def("synthesize_scalar", [](const ScalarExpansion& g, const Vec3& eta) {
        return synthesize_scalar(g, UnitVector(eta));
    });
    m.def("project", [](const VshExpansion& e, const std::string& f) {
        return project(e, family_from(f));
    });
    m.def("apply_zonal_multiplier",
          [](const ScalarExpansion& g, const std::vector<double>& beta) {
              return apply_zonal_multiplier(g, beta);
          });
    m.def("op_L_minus", &op_L_minus);
    m.def("op_L_zero", &op_L_zero);
    m.def("op_L_plus", &op_L_plus);
    m.def("potential_of", [](const VshExpansion& e, const std::string& f) {
        return potential_of(e, family_from(f));
    });

    m.def("alpha_ell", &alpha_ell);
    m.def("beta_ell", &beta_ell);
    m.def("eval_basis_solution",
          [](const std::string& f, int l, int mm, const LameParameters& p, const Vec3& x) {
              return eval_basis_solution(family_from(f), {l, mm}, p, x);
          });
    m.def("solve_dirichlet", &solve_dirichlet);
    m.def("eval_solution", &eval_solution);
    m.def("harmonic_poisson_kernel", [](const Vec3& x, const Vec3& eta) {
        return harmonic_poisson_kernel(InteriorPoint(x), UnitVector(eta));
    });
    m.def("poisson_extend", &poisson_extend);
    m.def("poisson_gradient", &poisson_gradient);
    m.def("poisson_hessian", [](const Vec3& x, const Vec3& eta) {
        return poisson_hessian(InteriorPoint(x), UnitVector(eta));
    });
    m.def("elastic_kernel", [](const Vec3& x, const Vec3& eta, const LameParameters& p) {
        return elastic_kernel(InteriorPoint(x), UnitVector(eta), p);
    });
    m.def("elastic_poisson_apply",
          [](const SphereGrid& g, const FieldSamples& f, const Vec3& x,
             const LameParameters& p) {
              return elastic_poisson_apply(g, f, InteriorPoint(x), p);
          });
    m.def("h_plus_representation", &h_plus_representation);

    m.def("sphere_norm", &sphere_norm);
    m.def("hardy_norm", [](const ElasticSolution& s, double p, const std::vector<double>& r) {
        return hardy_norm(s, p, r);
    });
    m.def("boundary_deviation", &boundary_deviation);
    m.def("default_radii", &default_radii, py::arg("count") = 12);

    m.def("verify", [](const std::string& level) {
        const auto results =
            run_verification(level == "full" ? VerifyLevel::Full : VerifyLevel::Quick);
        py::list out;
        for (const auto& r : results)
            out.append(py::make_tuple(r.name, r.measured, r.tolerance, r.pass, r.seconds));
        return out;
    }, py::arg("level") = "quick");
}
