// Python bindings for the main operations.
#include "prozeta/analysis.hpp"
#include "prozeta/autrep.hpp"
#include "prozeta/cone.hpp"
#include "prozeta/zeta.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace prozeta;

namespace {

py::int_ big(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::tuple rat(const Rat& v) {
    return py::make_tuple(big(boost::multiprecision::numerator(v)),
                          big(boost::multiprecision::denominator(v)));
}

py::list series_to_list(const TruncatedSeries& s) {
    py::list out;
    for (const auto& coeff : s.coeffs) {
        py::list terms;
        for (const auto& [qe, c] : coeff) terms.append(py::make_tuple(qe, big(c)));
        out.append(terms);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact local pro-isomorphic zeta functions of the lattices L(m,n)";

    m.def("multi_indices", [](int n, int weight) {
        py::list out;
        for (const auto& idx : multi_indices(n, weight)) out.append(idx.entries);
        return out;
    }, py::arg("n"), py::arg("weight"));

    m.def("lattice_info", [](int mm, int nn) {
        LieLattice L = build_lattice(mm, nn);
        return py::dict(py::arg("r1") = L.r1(), py::arg("r2") = L.r2(), py::arg("r3") = L.r3(),
                        py::arg("dim") = L.dim());
    }, py::arg("m"), py::arg("n"));

    m.def("check_lie_axioms", [](int mm, int nn) { return check_lie_axioms(build_lattice(mm, nn)); },
          py::arg("m"), py::arg("n"));

    m.def("zeta_parameters", [](int mm, int nn) {
        ZetaParameters P = zeta_parameters(mm, nn);
        py::list A, B;
        for (const auto& a : P.A) A.append(big(a));
        for (const auto& b : P.B) B.append(big(b));
        return py::dict(py::arg("A") = A, py::arg("B") = B, py::arg("Atilde0") = big(P.Atilde0),
                        py::arg("Btilde0") = big(P.Btilde0), py::arg("Atilden") = big(P.Atilden),
                        py::arg("Btilden") = big(P.Btilden), py::arg("fe_a") = big(P.fe_a),
                        py::arg("fe_b") = big(P.fe_b));
    }, py::arg("m"), py::arg("n"));

    m.def("local_zeta_text", [](int mm, int nn) { return local_zeta(mm, nn).to_text(); },
          py::arg("m"), py::arg("n"));
    m.def("local_zeta_latex", [](int mm, int nn) { return local_zeta(mm, nn).to_latex(); },
          py::arg("m"), py::arg("n"));
    m.def("local_zeta_json", [](int mm, int nn) { return local_zeta(mm, nn).to_json(); },
          py::arg("m"), py::arg("n"));
    m.def("dstar_zeta_text", [](int mm) { return dstar_zeta(mm).to_text(); }, py::arg("m"));

    m.def("dstar_matches_general", [](int mm) {
        return rational_equal(dstar_zeta(mm), local_zeta(mm, 2));
    }, py::arg("m"));

    m.def("series_coefficients", [](int mm, int nn, int depth) {
        return series_to_list(local_zeta(mm, nn).series_expand(depth));
    }, py::arg("m"), py::arg("n"), py::arg("depth"));

    m.def("cone_series_coefficients", [](int mm, int nn, int depth) {
        return series_to_list(cone_series(mm, nn, depth));
    }, py::arg("m"), py::arg("n"), py::arg("depth"));

    m.def("oracle_compare", &oracle_compare, py::arg("m"), py::arg("n"), py::arg("depth"));
    m.def("grenham_identity_check", &grenham_identity_check, py::arg("n"));
    m.def("gl_weyl_product_identity", &gl_weyl_product_identity, py::arg("n"));

    m.def("functional_equation_check", [](int mm, int nn) {
        FnEqResult r = functional_equation_check(mm, nn);
        return py::dict(py::arg("holds") = r.holds, py::arg("sign") = r.sign,
                        py::arg("a") = big(r.a), py::arg("b") = big(r.b));
    }, py::arg("m"), py::arg("n"));

    m.def("abscissa", [](int mm, int nn) {
        AbscissaReport rep = abscissa(mm, nn);
        return py::dict(py::arg("alpha") = rat(rep.alpha), py::arg("beta") = rat(rep.beta),
                        py::arg("regime") = regime_name(rep.regime),
                        py::arg("in_exceptional_set") = rep.in_exceptional_set,
                        py::arg("alpha_decimal") = decimal_string(rep.alpha));
    }, py::arg("m"), py::arg("n"));

    m.def("convexity_check", &convexity_check, py::arg("m"), py::arg("n"));
    m.def("fm_consistency", &fm_consistency, py::arg("m"), py::arg("n_max"));
    m.def("gm_hm_check", &gm_hm_check, py::arg("m"));

    m.def("f_m_coefficients", [](int mm) {
        py::list out;
        for (const auto& c : f_m_polynomial(mm).coeffs) out.append(big(c));
        return out;
    }, py::arg("m"));

    m.def("limit_check", [](int nn, int m_max) {
        LimitReport r = limit_check(nn, m_max);
        return py::dict(py::arg("limit") = big(r.limit),
                        py::arg("max_abs_error_at_m_max") = rat(r.max_abs_error_at_m_max),
                        py::arg("errors_decreasing") = r.errors_decreasing);
    }, py::arg("n"), py::arg("m_max"));

    m.def("scan_csv", [](int m_max, int n_max, long lo, long hi) {
        return scan_to_csv(scan_abscissae(m_max, n_max, Rat(lo), Rat(hi)));
    }, py::arg("m_max") = 500, py::arg("n_max") = 20, py::arg("lo") = 0, py::arg("hi") = 80);

    m.def("is_reductive_automorphism_demo", [](int mm, int nn) {
        // identity reductive point through the full embedding and bracket check
        LieLattice L = build_lattice(mm, nn);
        return is_automorphism(L, embed_reductive({RatMatrix::identity(nn), Rat(1)}, mm, nn));
    }, py::arg("m"), py::arg("n"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
