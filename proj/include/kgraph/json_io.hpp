#ifndef KGRAPH_JSON_IO_HPP
#define KGRAPH_JSON_IO_HPP

#include <kgraph/algebra.hpp>
#include <kgraph/fock.hpp>
#include <kgraph/skeleton.hpp>

#include <json.hpp>

#include <string>

namespace kgraph {

// Document schema:
// {"k": int, "vertices": [string],
//  "edges": [{"id", "color", "source", "range"}],
//  "squares": [{"left": [f, g], "right": [g', f']}]}
// A square with left [f, g], color(f) < color(g), asserts fg = g'f'.
SkeletonDoc skeleton_doc_from_json(const nlohmann::json& j);
SkeletonDoc skeleton_doc_from_string(const std::string& text);
nlohmann::json skeleton_doc_to_json(const SkeletonDoc& doc);

// [{"left": literal, "right": literal, "coeff": "p/q"}, ...]
nlohmann::json formal_element_to_json(const FormalElement& a);
FormalElement formal_element_from_json(const Skeleton& sk, const nlohmann::json& j);

nlohmann::json relation_report_to_json(const RelationReport& r);

}  // namespace kgraph

#endif
