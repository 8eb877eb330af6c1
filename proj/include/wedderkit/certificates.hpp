#pragma once

#include <string>
#include <vector>

#include "wedderkit/idem.hpp"
#include "wedderkit/unitgens.hpp"
#include "wedderkit/units.hpp"

namespace wedderkit {

// JSON helpers (nlohmann) kept behind strings so headers stay light.
std::string qg_to_json(const QGElement& x);
QGElement qg_from_json(const FiniteGroup& g, const std::string& text);

std::string cyclotomic_to_json(const Cyclotomic& c);

std::string component_to_json(const FiniteGroup& g, const SimpleComponent& c);
std::string rank_to_json(const FiniteGroup& g, const std::vector<StrongShodaPair>& pairs,
                         const RankReport& report);
std::string idempotent_set_to_json(const FiniteGroup& g, const IdempotentSet& s);
std::string matrix_units_to_json(const FiniteGroup& g,
                                 const std::vector<std::vector<QGElement>>& e);

// Self-contained certificate ("wedderkit-cert/1"): embeds the group table so
// verification needs nothing but the file.
std::string central_basis_certificate(const FiniteGroup& g, const std::string& spec,
                                      const std::vector<StrongShodaPair>& pairs,
                                      const std::vector<CentralUnit>& units);
std::string generator_certificate(const FiniteGroup& g, const std::string& spec,
                                  const GeneratorCertificate& cert);

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> failures;
};

// Re-checks every generator of a wedderkit-cert/1 payload from scratch:
// group axioms, integrality, exact inverses, centrality, and any embedded
// component projections.
VerifyResult verify_certificate(const std::string& json_text);

// Human-readable rendering of a QG element in the a^i b^j index order.
std::string qg_to_text(const QGElement& x);

} // namespace wedderkit
