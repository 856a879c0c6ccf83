#include <kgraph/json_io.hpp>

namespace kgraph {

using nlohmann::json;

SkeletonDoc skeleton_doc_from_json(const json& j) {
    try {
        SkeletonDoc doc;
        doc.k = j.at("k").get<int>();
        for (const auto& v : j.at("vertices")) doc.vertices.push_back(v.get<std::string>());
        if (j.contains("edges")) {
            for (const auto& e : j.at("edges")) {
                doc.edges.push_back({e.at("id").get<std::string>(), e.at("color").get<int>(),
                                     e.at("source").get<std::string>(),
                                     e.at("range").get<std::string>()});
            }
        }
        if (j.contains("squares")) {
            for (const auto& s : j.at("squares")) {
                const auto& l = s.at("left");
                const auto& r = s.at("right");
                if (l.size() != 2 || r.size() != 2)
                    throw SkeletonError(SkeletonErrorKind::Parse, "square sides must be pairs");
                doc.squares.push_back({{l[0].get<std::string>(), l[1].get<std::string>()},
                                       {r[0].get<std::string>(), r[1].get<std::string>()}});
            }
        }
        return doc;
    } catch (const json::exception& e) {
        throw SkeletonError(SkeletonErrorKind::Parse, std::string("bad skeleton document: ") + e.what());
    }
}

SkeletonDoc skeleton_doc_from_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw SkeletonError(SkeletonErrorKind::Parse, "skeleton document is not valid JSON");
    return skeleton_doc_from_json(j);
}

json skeleton_doc_to_json(const SkeletonDoc& doc) {
    json j;
    j["k"] = doc.k;
    j["vertices"] = doc.vertices;
    j["edges"] = json::array();
    for (const auto& e : doc.edges)
        j["edges"].push_back({{"id", e.id}, {"color", e.color}, {"source", e.source}, {"range", e.range}});
    j["squares"] = json::array();
    for (const auto& s : doc.squares)
        j["squares"].push_back({{"left", {s.left.first, s.left.second}},
                                {"right", {s.right.first, s.right.second}}});
    return j;
}

json formal_element_to_json(const FormalElement& a) {
    json out = json::array();
    for (const auto& [t, c] : a.terms()) {
        out.push_back({{"left", path_literal(t.left)},
                       {"right", path_literal(t.right)},
                       {"coeff", c.to_string()}});
    }
    return out;
}

FormalElement formal_element_from_json(const Skeleton& sk, const json& j) {
    FormalElement out;
    for (const auto& item : j) {
        Path l = parse_path_literal(sk, item.at("left").get<std::string>());
        Path r = parse_path_literal(sk, item.at("right").get<std::string>());
        out.accumulate(Term(std::move(l), std::move(r)),
                       Rational::parse(item.at("coeff").get<std::string>()));
    }
    return out;
}

json relation_report_to_json(const RelationReport& r) {
    json j;
    j["relation"] = r.relation;
    j["status"] = r.status;
    j["margin"] = r.margin.to_string();
    j["witness"] = r.witness ? json(path_literal(*r.witness)) : json(nullptr);
    j["residualNorm"] = r.residual_norm;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.relation == "(6)") j["matchesPrediction"] = r.matches_prediction;
    return j;
}

}  // namespace kgraph
