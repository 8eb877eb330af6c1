#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wedderkit/certificates.hpp"
#include "wedderkit/errors.hpp"
#include "wedderkit/group_spec.hpp"

using namespace wedderkit;
using nlohmann::json;

namespace {

struct RunConfig {
    std::vector<std::string> spec_tokens;
    bool json_output = false;
    long precision_bits = 128;
    int bound = 512;
    bool search_section = false;
    bool bicyclic = false;
};

std::string subgroup_str(const FiniteGroup& g, const Subgroup& s) {
    if (s.size() == g.size()) return "G";
    if (s.size() == 1) return "1";
    std::string out = "<";
    // Print a small generating set rather than all elements.
    Subgroup acc = trivial_subgroup(g);
    for (int e : s.elements) {
        if (e == 0 || acc.contains(e)) continue;
        std::vector<int> gens;
        for (int x : acc.elements)
            if (x != 0) gens.push_back(x);
        gens.push_back(e);
        acc = generated_subgroup(g, gens);
        if (out.size() > 1) out += ",";
        out += g.label(e);
        if (acc.size() == s.size()) break;
    }
    return out + ">";
}

int cmd_wedderburn(const FiniteGroup& g, const RunConfig& cfg) {
    auto pairs = enumerate_ssp(g, cfg.bound);
    check_wedderburn_dimensions(g, pairs);
    if (cfg.json_output) {
        json out = json::array();
        for (const auto& p : pairs)
            out.push_back(json::parse(component_to_json(g, component_descriptor(g, p, cfg.search_section))));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "Wedderburn components of QG (" << pairs.size() << " strong Shoda classes)\n";
    for (const auto& p : pairs) {
        SimpleComponent c = component_descriptor(g, p, cfg.search_section);
        std::cout << "  (H,K) = (" << subgroup_str(g, p.h) << ", " << subgroup_str(g, p.k)
                  << ")  M_" << c.matrix_degree << "(Q(zeta_" << c.cyclotomic_order << ")"
                  << (c.nh_transversal.size() > 1
                          ? "*C_" + std::to_string(c.nh_transversal.size())
                          : "")
                  << ")  twist_trivial=" << (c.twist_trivial ? "true" : "false")
                  << "  center_degree=" << c.center.degree() << "\n";
    }
    return 0;
}

int cmd_rank(const FiniteGroup& g, const RunConfig& cfg) {
    auto pairs = enumerate_ssp(g, cfg.bound);
    RankReport rep = rank_report(g, pairs);
    if (cfg.json_output) {
        std::cout << rank_to_json(g, pairs, rep) << "\n";
        return 0;
    }
    std::cout << "rank Z(U(ZG)) = " << rep.total << " (oracle: #real - #rational = "
              << rep.oracle_total << ")\n";
    for (size_t i = 0; i < pairs.size(); ++i)
        std::cout << "  (" << subgroup_str(g, pairs[i].h) << ", "
                  << subgroup_str(g, pairs[i].k) << "): phi=" << rep.rows[i].phi
                  << " k=" << rep.rows[i].k_flag << " [N:H]=" << rep.rows[i].nh_index
                  << " -> " << rep.rows[i].contribution << "\n";
    return 0;
}

int cmd_central_basis(const ParsedGroupSpec& gs, const RunConfig& cfg) {
    const FiniteGroup& g = gs.group;
    std::vector<StrongShodaPair> pairs;
    std::vector<CentralUnit> units;
    if (gs.qp) {
        pairs = metacyclic_ssp_catalog(g, gs.qp->q, gs.qp->m, gs.qp->p, gs.qp->n, gs.qp->r);
        units = metacyclic_central_basis(g, gs.qp->q, gs.qp->m, gs.qp->p, gs.qp->n, gs.qp->r);
    } else {
        pairs = enumerate_ssp(g, cfg.bound);
        units = central_virtual_basis(g, pairs);
    }
    std::vector<QGElement> elems;
    for (const auto& u : units) elems.push_back(u.unit.u);
    IndependenceCertificate ind = independence_check(elems, g, pairs, cfg.precision_bits);
    if (!ind.pass && !units.empty())
        throw ConsistencyError("central basis failed the independence certificate");
    if (cfg.json_output) {
        std::cout << central_basis_certificate(g, gs.canonical, pairs, units) << "\n";
        return 0;
    }
    std::cout << "central virtual basis: " << units.size() << " units; independence rank "
              << ind.numeric_rank << ", smallest singular value "
              << ind.smallest_singular_value << "\n";
    for (const auto& u : units)
        std::cout << "  [" << u.note << " k=" << u.k << "] " << qg_to_text(u.unit.u) << "\n";
    return 0;
}

int cmd_idempotents(const FiniteGroup& g, const RunConfig& cfg, bool units_too) {
    auto pairs = enumerate_ssp(g, cfg.bound);
    json out = json::array();
    for (const auto& p : pairs) {
        SimpleComponent c = component_descriptor(g, p, cfg.search_section);
        if (!c.twist_trivial)
            throw UnsupportedClassError(
                "component at (H,K) = (" + subgroup_str(g, p.h) + ", " +
                subgroup_str(g, p.k) + ") has nontrivial twisting; the idempotent "
                "construction does not apply");
        IdempotentSet s = primitive_idempotents(g, c);
        if (cfg.json_output) {
            if (units_too)
                out.push_back(json::parse(matrix_units_to_json(g, matrix_units(g, c))));
            else
                out.push_back(json::parse(idempotent_set_to_json(g, s)));
        } else {
            std::cout << "(H,K) = (" << subgroup_str(g, p.h) << ", " << subgroup_str(g, p.k)
                      << "): " << s.idempotents.size() << " orthogonal primitive idempotents"
                      << (units_too
                              ? " and " + std::to_string(s.idempotents.size() *
                                                         s.idempotents.size()) +
                                    " matrix units"
                              : "")
                      << "\n";
            for (const auto& f : s.idempotents) std::cout << "    " << qg_to_text(f) << "\n";
        }
    }
    if (cfg.json_output) std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_unit_generators(const ParsedGroupSpec& gs, const RunConfig& cfg) {
    if (!gs.qp)
        throw ValidationError(
            "unit-generators needs a faithful metacyclic group C_{q^m} x| C_{p^n}");
    const FiniteGroup& g = gs.group;
    GeneratorCertificate cert = full_generator_set(g, gs.qp->q, gs.qp->m, gs.qp->p,
                                                   gs.qp->n, gs.qp->r, cfg.bicyclic);
    if (cfg.json_output) {
        std::cout << generator_certificate(g, gs.canonical, cert) << "\n";
        return 0;
    }
    size_t central = 0, plus = 0, minus = 0, bic = 0;
    for (const auto& e : cert.entries) {
        if (e.role == "central") ++central;
        if (e.role == "v_plus") ++plus;
        if (e.role == "v_minus") ++minus;
        if (e.role == "bicyclic") ++bic;
    }
    std::cout << "unit generators: " << central << " central, " << plus << " V+, " << minus
              << " V-, " << bic << " bicyclic (all verified)\n";
    return 0;
}

int cmd_oracle(const FiniteGroup& g, const RunConfig& cfg) {
    auto ordinary = conjugacy_classes(g, ClassKind::Ordinary).size();
    auto rational = conjugacy_classes(g, ClassKind::Rational).size();
    auto real = conjugacy_classes(g, ClassKind::Real).size();
    auto pairs = enumerate_ssp(g, cfg.bound); // verifies partition of unity internally
    check_wedderburn_dimensions(g, pairs);
    RankReport rep = rank_report(g, pairs);
    if (cfg.json_output) {
        json j{{"ordinary_classes", ordinary},
               {"rational_classes", rational},
               {"real_classes", real},
               {"ssp_classes", pairs.size()},
               {"partition_of_unity", true},
               {"rank", rep.total},
               {"rank_oracle", rep.oracle_total}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "classes: ordinary " << ordinary << ", rational " << rational << ", real "
              << real << "\n";
    std::cout << "SSP classes: " << pairs.size() << " (partition of unity verified)\n";
    std::cout << "rank: " << rep.total << " = " << rep.oracle_total << " (oracle)\n";
    return 0;
}

int cmd_verify(const std::string& path, const RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open certificate: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    VerifyResult res = verify_certificate(buf.str());
    if (cfg.json_output) {
        json j{{"ok", res.ok}, {"failures", res.failures}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (res.ok ? "certificate verified" : "certificate REJECTED") << "\n";
        for (const auto& f : res.failures) std::cout << "  " << f << "\n";
    }
    return res.ok ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wedderkit: exact Wedderburn data, central units and primitive idempotents "
                 "of integral group rings of strongly monomial groups"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_flag("--json", cfg.json_output, "emit JSON instead of text");
    app.add_option("--precision", cfg.precision_bits, "working precision in bits (>= 53)")
        ->default_val(128);
    app.add_option("--bound", cfg.bound, "subgroup enumeration bound")->default_val(512);
    app.add_flag("--search-section", cfg.search_section,
                 "search for a twist-trivializing transversal section");
    app.add_flag("--bicyclic", cfg.bicyclic,
                 "append the bicyclic supplement in the exceptional D_{2*3^m} case");

    std::vector<std::string> spec_w, spec_r, spec_c, spec_i, spec_m, spec_u, spec_o;
    auto* wedd = app.add_subcommand("wedderburn", "strong Shoda pairs and component data");
    wedd->add_option("spec", spec_w, "group spec")->required()->expected(-1);
    auto* rank = app.add_subcommand("rank", "rank of the central units of ZG");
    rank->add_option("spec", spec_r, "group spec")->required()->expected(-1);
    auto* cb = app.add_subcommand("central-basis", "virtual basis of Z(U(ZG))");
    cb->add_option("spec", spec_c, "group spec")->required()->expected(-1);
    auto* idem = app.add_subcommand("idempotents", "orthogonal primitive idempotents");
    idem->add_option("spec", spec_i, "group spec")->required()->expected(-1);
    auto* mu = app.add_subcommand("matrix-units", "complete sets of matrix units");
    mu->add_option("spec", spec_m, "group spec")->required()->expected(-1);
    auto* ug = app.add_subcommand("unit-generators",
                                  "generators of a finite-index subgroup of U(ZG)");
    ug->add_option("spec", spec_u, "group spec")->required()->expected(-1);
    auto* oracle = app.add_subcommand("oracle", "class-count and partition cross-checks");
    oracle->add_option("spec", spec_o, "group spec")->required()->expected(-1);
    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "re-check an emitted certificate");
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();

    for (auto* sub : {wedd, rank, cb, idem, mu, ug, oracle, verify}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("WEDDERKIT_PRECISION")) cfg.precision_bits = std::atol(env);

    try {
        if (cfg.precision_bits < 53) throw ValidationError("precision must be >= 53 bits");
        if (verify->parsed()) return cmd_verify(cert_path, cfg);
        std::vector<std::string> tokens;
        if (wedd->parsed()) tokens = spec_w;
        if (rank->parsed()) tokens = spec_r;
        if (cb->parsed()) tokens = spec_c;
        if (idem->parsed()) tokens = spec_i;
        if (mu->parsed()) tokens = spec_m;
        if (ug->parsed()) tokens = spec_u;
        if (oracle->parsed()) tokens = spec_o;
        ParsedGroupSpec gs = parse_group_spec(tokens);
        if (wedd->parsed()) return cmd_wedderburn(gs.group, cfg);
        if (rank->parsed()) return cmd_rank(gs.group, cfg);
        if (cb->parsed()) return cmd_central_basis(gs, cfg);
        if (idem->parsed()) return cmd_idempotents(gs.group, cfg, false);
        if (mu->parsed()) return cmd_idempotents(gs.group, cfg, true);
        if (ug->parsed()) return cmd_unit_generators(gs, cfg);
        if (oracle->parsed()) return cmd_oracle(gs.group, cfg);
    } catch (const UnsupportedClassError& ex) {
        std::cerr << "unsupported: " << ex.what() << "\n";
        return 3;
    } catch (const ConsistencyError& ex) {
        std::cerr << "consistency failure: " << ex.what() << "\n";
        return 4;
    } catch (const ValidationError& ex) {
        std::cerr << "invalid input: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
