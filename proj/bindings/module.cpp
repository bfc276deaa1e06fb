#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torus/bounds.hpp"
#include "torus/planner.hpp"
#include "torus/seifert.hpp"
#include "torus/signature.hpp"
#include "torus/stable_genus.hpp"
#include "torus/verify.hpp"

namespace py = pybind11;
using namespace torus;

namespace {

Theta theta_from_str(const std::string& text) {
    return Theta(parse_rational(text));
}

}  // namespace

PYBIND11_MODULE(torus_cobordism, m) {
    m.doc() = "Exact signature invariants and cobordism bounds for torus links";

    py::register_exception<EvaluationRejected>(m, "EvaluationRejected");

    py::class_<TorusLink>(m, "TorusLink")
        .def(py::init<long long, long long>(), py::arg("p"), py::arg("q"))
        .def_property_readonly("p", &TorusLink::p)
        .def_property_readonly("q", &TorusLink::q)
        .def("chi", &TorusLink::chi)
        .def("component_count", &TorusLink::component_count)
        .def("is_knot", &TorusLink::is_knot)
        .def("genus4", [](const TorusLink& l) { return to_string(l.genus4()); })
        .def("__repr__", &TorusLink::str)
        .def("__eq__", [](const TorusLink& a, const TorusLink& b) { return a == b; });

    m.def("normalize", [](long long p, long long q) { return TorusLink(p, q); });
    m.def("chi", [](long long p, long long q) { return TorusLink(p, q).chi(); });
    m.def("genus4",
          [](long long p, long long q) { return to_string(TorusLink(p, q).genus4()); });

    m.def("signature_at", [](long long p, long long q, const std::string& theta) {
        return signature_at(TorusLink(p, q), theta_from_str(theta));
    });
    m.def("classical_signature", [](long long p, long long q) {
        return classical_signature(TorusLink(p, q));
    });
    m.def("glm_signature", &glm_signature);
    m.def("slope_sequence", [](long long p) {
        std::vector<std::string> out;
        for (const auto& s : slope_sequence(p)) out.push_back(to_string(s));
        return out;
    });
    m.def("sigma_chi_limit",
          [](long long p) { return to_string(sigma_chi_limit(p)); });
    m.def("profile_json", [](long long p, long long q) {
        return profile_to_json(*profile(TorusLink(p, q)));
    });
    m.def("profile_csv", [](long long p, long long q) {
        return profile_to_csv(*profile(TorusLink(p, q)));
    });

    m.def("rectangle_cost", &rectangle_cost);
    m.def("prop1_plan_json", [](long long a, long long b, long long c) {
        return plan_to_json(prop1_plan(a, b, c));
    });
    m.def("theorem2_upper_json", [](long long a, long long b, long long c, long long d) {
        return plan_to_json(theorem2_upper(a, b, c, d));
    });
    m.def("theorem1_plan_json", [](long long a, long long b, long long c, long long d) {
        return plan_to_json(theorem1_plan(a, b, c, d));
    });
    m.def("best_upper_json",
          [](long long a, long long b, long long c, long long d, long long budget) {
              return plan_to_json(best_upper(a, b, c, d, budget));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
          py::arg("budget") = 32);

    m.def("delta_chi", [](long long a, long long b, long long c, long long d) {
        return delta_chi(TorusLink(a, b), TorusLink(c, d));
    });
    m.def("tau", [](long long a, long long b, long long c, long long d) {
        return tau(TorusLink(a, b), TorusLink(c, d));
    });
    m.def("report_json",
          [](long long a, long long b, long long c, long long d, long long budget) {
              return report_to_json(report(a, b, c, d, budget));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
          py::arg("budget") = 32);

    m.def("gst", [](long long p, long long q) {
        return to_string(gst_axis(TorusLink(p, q)));
    });
    m.def("norm_bounds",
          [](long long a, long long b, long long c, long long d,
             const std::string& x, const std::string& y, long long budget) {
              const PairSpanPoint pt(TorusLink(a, b), TorusLink(c, d),
                                     parse_rational(x), parse_rational(y));
              return std::make_pair(to_string(norm_lower(pt)),
                                    to_string(norm_upper(pt, budget)));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("x"),
          py::arg("y"), py::arg("budget") = 32);
    m.def("ball_json",
          [](long long a, long long b, long long c, long long d,
             long long resolution, long long budget) {
              return ball_to_json(
                  ball_polygon(TorusLink(a, b), TorusLink(c, d), resolution, budget));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
          py::arg("resolution") = 64, py::arg("budget") = 32);

    m.def("seifert_matrix", [](long long p, long long q) {
        return seifert_matrix_torus(p, q).entries;
    });
    m.def("oracle_signature", [](long long p, long long q, const std::string& theta) {
        return oracle_signature(seifert_matrix_torus(p, q), theta_from_str(theta));
    });

    m.def("list_claims", &list_claims);
    m.def("run_claim",
          [](const std::string& id, long long max, int jobs) {
              const ScanResult r = run_claim(id, max, jobs);
              py::dict out;
              out["claim_id"] = r.claim_id;
              out["range"] = r.range;
              out["checked"] = r.checked;
              out["violations"] = r.violations;
              out["elapsed_seconds"] = r.elapsed_seconds;
              return out;
          },
          py::arg("claim_id"), py::arg("max") = 0, py::arg("jobs") = 0);
}
