#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wedderkit/certificates.hpp"
#include "wedderkit/errors.hpp"
#include "wedderkit/group_spec.hpp"

namespace py = pybind11;
using namespace wedderkit;

namespace {

ParsedGroupSpec parse(const std::string& spec) { return parse_group_spec(spec); }

py::dict rank_dict(const std::string& spec) {
    ParsedGroupSpec gs = parse(spec);
    auto pairs = enumerate_ssp(gs.group);
    RankReport rep = rank_report(gs.group, pairs);
    py::dict d;
    d["total"] = rep.total;
    d["oracle_total"] = rep.oracle_total;
    py::list rows;
    for (size_t i = 0; i < pairs.size(); ++i) {
        py::dict r;
        r["H_size"] = pairs[i].h.size();
        r["K_size"] = pairs[i].k.size();
        r["phi"] = rep.rows[i].phi;
        r["k_flag"] = rep.rows[i].k_flag;
        r["contribution"] = rep.rows[i].contribution;
        rows.append(r);
    }
    d["pairs"] = rows;
    return d;
}

py::list wedderburn_list(const std::string& spec) {
    ParsedGroupSpec gs = parse(spec);
    auto pairs = enumerate_ssp(gs.group);
    py::list out;
    for (const auto& p : pairs) {
        SimpleComponent c = component_descriptor(gs.group, p);
        py::dict d;
        d["H_size"] = p.h.size();
        d["K_size"] = p.k.size();
        d["degree"] = c.matrix_degree;
        d["k"] = c.cyclotomic_order;
        d["nh_order"] = c.nh_transversal.size();
        d["twist_trivial"] = c.twist_trivial;
        d["center_degree"] = c.center.degree();
        d["json"] = component_to_json(gs.group, c);
        out.append(d);
    }
    return out;
}

py::dict class_counts(const std::string& spec) {
    ParsedGroupSpec gs = parse(spec);
    py::dict d;
    d["ordinary"] = conjugacy_classes(gs.group, ClassKind::Ordinary).size();
    d["rational"] = conjugacy_classes(gs.group, ClassKind::Rational).size();
    d["real"] = conjugacy_classes(gs.group, ClassKind::Real).size();
    return d;
}

std::string central_basis_json(const std::string& spec) {
    ParsedGroupSpec gs = parse(spec);
    std::vector<StrongShodaPair> pairs;
    std::vector<CentralUnit> units;
    if (gs.qp) {
        pairs = metacyclic_ssp_catalog(gs.group, gs.qp->q, gs.qp->m, gs.qp->p, gs.qp->n,
                                       gs.qp->r);
        units = metacyclic_central_basis(gs.group, gs.qp->q, gs.qp->m, gs.qp->p, gs.qp->n,
                                         gs.qp->r);
    } else {
        pairs = enumerate_ssp(gs.group);
        units = central_virtual_basis(gs.group, pairs);
    }
    return central_basis_certificate(gs.group, gs.canonical, pairs, units);
}

std::string unit_generators_json(const std::string& spec, bool bicyclic) {
    ParsedGroupSpec gs = parse(spec);
    if (!gs.qp)
        throw ValidationError("unit generators need a faithful metacyclic C_{q^m} x| C_{p^n}");
    GeneratorCertificate cert = full_generator_set(gs.group, gs.qp->q, gs.qp->m, gs.qp->p,
                                                   gs.qp->n, gs.qp->r, bicyclic);
    return generator_certificate(gs.group, gs.canonical, cert);
}

py::list idempotents_text(const std::string& spec) {
    ParsedGroupSpec gs = parse(spec);
    auto pairs = enumerate_ssp(gs.group);
    py::list out;
    for (const auto& p : pairs) {
        SimpleComponent c = component_descriptor(gs.group, p);
        if (!c.twist_trivial)
            throw UnsupportedClassError("component with nontrivial twisting");
        IdempotentSet s = primitive_idempotents(gs.group, c);
        py::list texts;
        for (const auto& f : s.idempotents) texts.append(qg_to_text(f));
        out.append(texts);
    }
    return out;
}

py::tuple verify_json(const std::string& text) {
    VerifyResult res = verify_certificate(text);
    return py::make_tuple(res.ok, res.failures);
}

py::list cyclo_poly(long n) {
    py::list out;
    for (const auto& c : cyclotomic_polynomial(n)) out.append(c.get_str());
    return out;
}

} // namespace

PYBIND11_MODULE(_wedderkit, m) {
    m.doc() = "Exact Wedderburn data, central units and primitive idempotents of "
              "integral group rings of strongly monomial groups";

    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<UnsupportedClassError>(m, "UnsupportedClassError");
    py::register_exception<ConsistencyError>(m, "ConsistencyError");

    m.def("rank", &rank_dict, py::arg("spec"),
          "Rank of Z(U(ZG)) with the class-count oracle; spec is a group spec "
          "string like 'metacyclic 7 3 0 2'.");
    m.def("wedderburn", &wedderburn_list, py::arg("spec"),
          "Strong Shoda pairs with Wedderburn component descriptors.");
    m.def("class_counts", &class_counts, py::arg("spec"),
          "Ordinary/rational/real conjugacy class counts.");
    m.def("central_basis", &central_basis_json, py::arg("spec"),
          "Virtual basis of the central units as a wedderkit-cert/1 JSON string.");
    m.def("unit_generators", &unit_generators_json, py::arg("spec"),
          py::arg("bicyclic") = false,
          "Finite-index unit generator certificate as a JSON string.");
    m.def("idempotents", &idempotents_text, py::arg("spec"),
          "Primitive idempotents per component, rendered as text.");
    m.def("verify_certificate", &verify_json, py::arg("json_text"),
          "Re-check an emitted certificate; returns (ok, failures).");
    m.def("cyclotomic_polynomial", &cyclo_poly, py::arg("n"),
          "Coefficients of the n-th cyclotomic polynomial, ascending, as strings.");
}
