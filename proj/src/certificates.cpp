#include "wedderkit/certificates.hpp"

#include <json.hpp>

#include "wedderkit/errors.hpp"

namespace wedderkit {

using nlohmann::json;

namespace {

json qg_json(const QGElement& x, const std::string& group_ref = "group") {
    json terms = json::array();
    for (const auto& [e, c] : x.terms())
        terms.push_back({{"elem_index", e}, {"coeff", rational_str(c)}});
    return json{{"group_ref", group_ref}, {"terms", terms}};
}

QGElement qg_parse(const FiniteGroup& g, const json& j) {
    QGElement x = QGElement::zero(g);
    for (const auto& t : j.at("terms"))
        x += QGElement::of(g, t.at("elem_index").get<int>(),
                           parse_rational(t.at("coeff").get<std::string>()));
    return x;
}

json cyc_json(const Cyclotomic& c) {
    json coords = json::array();
    for (const auto& q : c.coords()) coords.push_back(rational_str(q));
    return json{{"order", c.order()}, {"coords", coords}};
}

Cyclotomic cyc_parse(const json& j) {
    long order = j.at("order").get<long>();
    std::vector<Rational> coords;
    for (const auto& s : j.at("coords")) coords.push_back(parse_rational(s.get<std::string>()));
    return Cyclotomic(order, std::move(coords));
}

json group_json(const FiniteGroup& g, const std::string& spec) {
    return json{{"spec", spec}, {"size", g.size()}, {"mult", g.table()}};
}

} // namespace

std::string qg_to_json(const QGElement& x) { return qg_json(x).dump(); }

QGElement qg_from_json(const FiniteGroup& g, const std::string& text) {
    return qg_parse(g, json::parse(text));
}

std::string cyclotomic_to_json(const Cyclotomic& c) { return cyc_json(c).dump(); }

std::string component_to_json(const FiniteGroup& g, const SimpleComponent& c) {
    json action = json::object();
    for (size_t i = 0; i < c.nh_transversal.size(); ++i)
        action[std::to_string(c.nh_transversal[i])] = c.action[i];
    json periods = json::array();
    for (const auto& p : c.center.periods) periods.push_back(cyc_json(p));
    json j{{"H", c.pair.h.elements},
           {"K", c.pair.k.elements},
           {"N", c.pair.n.elements},
           {"degree", c.matrix_degree},
           {"k", c.cyclotomic_order},
           {"action", action},
           {"twisting", c.twisting},
           {"twist_trivial", c.twist_trivial},
           {"center_periods", periods}};
    (void)g;
    return j.dump();
}

std::string rank_to_json(const FiniteGroup& g, const std::vector<StrongShodaPair>& pairs,
                         const RankReport& report) {
    json rows = json::array();
    for (size_t i = 0; i < pairs.size(); ++i) {
        rows.push_back({{"H", pairs[i].h.elements},
                        {"K", pairs[i].k.elements},
                        {"phi", report.rows[i].phi},
                        {"k_flag", report.rows[i].k_flag},
                        {"nh_index", report.rows[i].nh_index},
                        {"contribution", report.rows[i].contribution}});
    }
    (void)g;
    return json{{"pairs", rows}, {"total", report.total}, {"oracle_total", report.oracle_total}}
        .dump();
}

std::string idempotent_set_to_json(const FiniteGroup& g, const IdempotentSet& s) {
    json idems = json::array();
    for (const auto& f : s.idempotents) idems.push_back(qg_json(f));
    json j{{"pair_id", {{"H", s.pair.h.elements}, {"K", s.pair.k.elements}}},
           {"x_e", qg_json(s.x_e)},
           {"idempotents", idems},
           {"checks",
            {{"orthogonal", true}, {"sum_equals_e", true}, {"count", s.idempotents.size()}}}};
    (void)g;
    return j.dump();
}

std::string matrix_units_to_json(const FiniteGroup& g,
                                 const std::vector<std::vector<QGElement>>& e) {
    json rows = json::array();
    for (const auto& row : e) {
        json r = json::array();
        for (const auto& x : row) r.push_back(qg_json(x));
        rows.push_back(r);
    }
    (void)g;
    return json{{"matrix_units", rows}}.dump();
}

std::string central_basis_certificate(const FiniteGroup& g, const std::string& spec,
                                      const std::vector<StrongShodaPair>& pairs,
                                      const std::vector<CentralUnit>& units) {
    json gens = json::array();
    for (const auto& cu : units) {
        const StrongShodaPair& p = pairs[cu.pair_index];
        Cyclotomic proj = component_projection(g, p, cu.unit.u);
        json entry{{"role", "central"},
                   {"note", cu.note + " k=" + std::to_string(cu.k)},
                   {"element", qg_json(cu.unit.u)},
                   {"inverse", qg_json(cu.unit.u_inv)},
                   {"checks", {{"central", true}, {"integral", true}, {"unit", true}}},
                   {"projections",
                    json::array({json{{"component_id",
                                       {{"H", p.h.elements},
                                        {"K", p.k.elements},
                                        {"generator", p.quotient_generator}}},
                                      {"eta_power", cyc_json(proj)}}})}};
        gens.push_back(std::move(entry));
    }
    return json{{"schema", "wedderkit-cert/1"},
                {"command", "central-basis"},
                {"group", group_json(g, spec)},
                {"generators", gens}}
        .dump(2);
}

std::string generator_certificate(const FiniteGroup& g, const std::string& spec,
                                  const GeneratorCertificate& cert) {
    json gens = json::array();
    for (const auto& e : cert.entries) {
        gens.push_back({{"role", e.role},
                        {"note", e.note},
                        {"element", qg_json(e.element)},
                        {"inverse", qg_json(e.inverse)},
                        {"checks",
                         {{"central", e.check_central},
                          {"integral", e.check_integral},
                          {"unit", e.check_unit}}}});
    }
    return json{{"schema", "wedderkit-cert/1"},
                {"command", "unit-generators"},
                {"group", group_json(g, spec)},
                {"params",
                 {{"q", cert.q}, {"m", cert.m}, {"p", cert.p}, {"n", cert.n}, {"r", cert.r}}},
                {"generators", gens}}
        .dump(2);
}

VerifyResult verify_certificate(const std::string& json_text) {
    VerifyResult res;
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& ex) {
        res.ok = false;
        res.failures.push_back(std::string("invalid JSON: ") + ex.what());
        return res;
    }
    try {
        if (j.at("schema").get<std::string>() != "wedderkit-cert/1") {
            res.ok = false;
            res.failures.push_back("unknown certificate schema");
            return res;
        }
        auto table = j.at("group").at("mult").get<std::vector<std::vector<int>>>();
        FiniteGroup g = FiniteGroup::from_table(std::move(table));
        for (const auto& entry : j.at("generators")) {
            std::string note = entry.value("note", "");
            QGElement u = qg_parse(g, entry.at("element"));
            QGElement v = qg_parse(g, entry.at("inverse"));
            const auto& checks = entry.at("checks");
            if (checks.value("integral", false) && !(is_integral(u) && is_integral(v))) {
                res.ok = false;
                res.failures.push_back("integrality fails: " + note);
            }
            if (checks.value("unit", false) && !is_unit_with_inverse(u, v)) {
                res.ok = false;
                res.failures.push_back("inverse verification fails: " + note);
            }
            if (checks.value("central", false) && !is_central(u)) {
                res.ok = false;
                res.failures.push_back("centrality fails: " + note);
            }
            if (entry.contains("projections")) {
                for (const auto& pr : entry.at("projections")) {
                    const auto& comp = pr.at("component_id");
                    Subgroup h = make_subgroup(g, comp.at("H").get<std::vector<int>>());
                    Subgroup k = make_subgroup(g, comp.at("K").get<std::vector<int>>());
                    StrongShodaPair pair = make_strong_shoda_pair(g, h, k);
                    Cyclotomic expected = cyc_parse(pr.at("eta_power"));
                    Cyclotomic actual = component_projection(g, pair, u);
                    if (!(expected == actual)) {
                        res.ok = false;
                        res.failures.push_back("component projection mismatch: " + note);
                    }
                }
            }
        }
    } catch (const std::exception& ex) {
        res.ok = false;
        res.failures.push_back(std::string("certificate structure error: ") + ex.what());
    }
    return res;
}

std::string qg_to_text(const QGElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : x.terms()) {
        std::string cs = rational_str(c);
        if (!out.empty()) {
            if (!cs.empty() && cs[0] == '-') {
                out += " - ";
                cs = cs.substr(1);
            } else {
                out += " + ";
            }
        }
        const std::string& label = x.group().label(e);
        if (label == "1")
            out += cs;
        else if (cs == "1")
            out += label;
        else
            out += cs + "*" + label;
    }
    return out;
}

} // namespace wedderkit
