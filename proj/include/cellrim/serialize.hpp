#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cellrim/cells.hpp"
#include "cellrim/composition.hpp"
#include "cellrim/diagram.hpp"
#include "cellrim/families.hpp"
#include "cellrim/paths.hpp"
#include "cellrim/permutation.hpp"
#include "cellrim/robinson_schensted.hpp"

namespace cellrim {

using json = nlohmann::ordered_json;

void to_json(json& j, const Permutation& x);     // [3,1,2]
void to_json(json& j, const Composition& c);     // [2,1]
void to_json(json& j, const Tableau& t);         // [[1,2],[3]]
void to_json(json& j, const Node& x);            // [a,b]
void to_json(json& j, const Diagram& D);         // {"nodes": [[a,b],...]}
void to_json(json& j, const KPath& pi);          // [[[a,b],...],...]
void to_json(json& j, const DeterminingTuple& t);

Permutation permutation_from_json(const json& j);
Diagram diagram_from_json(const json& j);
KPath kpath_from_json(const json& j);

// {"lambda", "rim_size", "special", "diagrams", "reduced_words"}
json rim_result_json(const Composition& lambda, const RimDiagrams& E);

// One line per row, a mark at each node and a dot elsewhere.
std::string render_ascii(const Diagram& D, bool plain = false);

std::vector<int> parse_int_list(const std::string& text);
// "1,1;1,2;2,1"
std::vector<Node> parse_nodes(const std::string& text);

}  // namespace cellrim
