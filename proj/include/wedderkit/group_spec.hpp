#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wedderkit/group.hpp"

namespace wedderkit {

// Group spec DSL: "metacyclic m n t r" | "cyclic n" | "abelian d1,d2,..."
// | path to a JSON multiplication table {"size": n, "mult": [[...]]}.
struct ParsedGroupSpec {
    FiniteGroup group;
    std::string canonical;        // normalized spec string
    // Set when the spec is metacyclic with a faithful prime-power action
    // C_{q^m} x| C_{p^n}; enables the catalog/generator paths.
    struct QPShape {
        long q, m, p, n, r;
    };
    std::optional<QPShape> qp;
};

ParsedGroupSpec parse_group_spec(const std::vector<std::string>& tokens);
ParsedGroupSpec parse_group_spec(const std::string& text);

std::string group_table_json(const FiniteGroup& g);
FiniteGroup group_from_table_json(const std::string& json_text);

} // namespace wedderkit
