#include "littelmann/serialize.hpp"

#include <sstream>

#include "littelmann/errors.hpp"

namespace littelmann {

using nlohmann::json;

json path_to_json(const Path& p) {
    json segs = json::array();
    for (const auto& seg : p.segments) {
        json coords = json::array();
        for (const auto& c : seg) coords.push_back(rat_str(c));
        segs.push_back(std::move(coords));
    }
    return segs;
}

Path path_from_json(const json& j, int expected_rank) {
    if (!j.is_array()) throw Error("path JSON must be a list of coordinate vectors");
    std::vector<QWeight> segs;
    int rank = expected_rank;
    for (const auto& item : j) {
        if (!item.is_array()) throw Error("path segment must be a list of rational strings");
        QWeight seg;
        for (const auto& c : item) {
            if (c.is_number_integer())
                seg.emplace_back(c.get<long>());
            else
                seg.push_back(parse_rational(c.get<std::string>()));
        }
        if (rank < 0) rank = static_cast<int>(seg.size());
        if (static_cast<int>(seg.size()) != rank) throw RankMismatch("path segments of unequal rank");
        segs.push_back(std::move(seg));
    }
    if (rank < 0) throw Error("cannot infer the rank of an empty path; give expected_rank");
    return Path::make(rank, std::move(segs));
}

RootSystem root_system_from_json(const json& j) {
    if (!j.contains("cartan")) throw Error("root-system JSON needs a \"cartan\" matrix");
    std::vector<std::vector<long>> m;
    for (const auto& row : j.at("cartan")) m.push_back(row.get<std::vector<long>>());
    std::optional<std::string> name;
    if (j.contains("name")) name = j.at("name").get<std::string>();
    return build_root_system(m, name);
}

json multiset_to_json(const WeightMultiset& m) {
    json out = json::array();
    for (const auto& [w, mult] : m) out.push_back(json{{"weight", w}, {"multiplicity", mult}});
    return out;
}

std::string multiset_to_tsv(const WeightMultiset& m) {
    std::ostringstream os;
    for (const auto& [w, mult] : m) os << to_string(w) << '\t' << mult << '\n';
    return os.str();
}

std::string crystal_to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    if (g.truncated) os << "  // truncated crystal\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << to_string(endpoint(g.nodes[i])) << "\"];\n";
    for (const auto& e : g.edges)
        os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << (e.alpha + 1) << "\"];\n";
    os << "}\n";
    return os.str();
}

json crystal_to_json(const CrystalGraph& g) {
    json nodes = json::array();
    for (const auto& n : g.nodes)
        nodes.push_back(json{{"path", path_to_json(n)}, {"weight", to_string(endpoint(n))}});
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back(json{{"src", e.src}, {"alpha", e.alpha + 1}, {"dst", e.dst}});
    json limits;
    if (g.limits_used.max_nodes) limits["max_nodes"] = *g.limits_used.max_nodes;
    if (g.limits_used.max_depth) limits["max_depth"] = *g.limits_used.max_depth;
    if (g.limits_used.weight_height_bound) limits["weight_height_bound"] = *g.limits_used.weight_height_bound;
    return json{{"root_system", g.rs.name}, {"root", g.root},      {"truncated", g.truncated},
                {"limits", limits},         {"nodes", nodes},      {"edges", edges}};
}

json real_root_to_json(const RealRoot& r) {
    return json{{"root", r.root_coords}, {"coroot", r.coroot_coords}, {"positive", r.positive}};
}

json weyl_to_json(const WeylElement& w) {
    json word = json::array();
    for (int i : w.word) word.push_back(i + 1);
    return word;
}

std::vector<int> word_from_string(const std::string& dotted) {
    std::vector<int> out;
    if (dotted.empty() || dotted == "e" || dotted == "id") return out;
    std::stringstream ss(dotted);
    std::string item;
    while (std::getline(ss, item, '.')) {
        std::size_t pos = 0;
        const int v = std::stoi(item, &pos);
        if (pos != item.size() || v < 1) throw Error("bad reflection index: " + item);
        out.push_back(v - 1);
    }
    return out;
}

json criterion_report_to_json(const CriterionReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(json{{"beta", real_root_to_json(v.beta)}, {"vertex", v.vertex}});
    json negative = json::array();
    for (const auto& b : r.predicted_negative_set) negative.push_back(real_root_to_json(b));
    json out{{"passed", r.passed},
             {"checked_roots", r.checked_roots},
             {"roots_complete", r.roots_complete},
             {"violations", violations},
             {"negative_set", negative}};
    if (r.height_cutoff) out["height_cutoff"] = *r.height_cutoff;
    // an incomplete root set can only ever certify "passed up to height h"
    out["scope"] = r.roots_complete
                       ? std::string("all positive real roots")
                       : "positive real roots of height <= " +
                             (r.height_cutoff ? std::to_string(*r.height_cutoff) : std::string("?"));
    return out;
}

namespace {

json instance_to_json(const PRVInstance& inst) {
    json betas = json::array();
    for (const auto& b : inst.betas) betas.push_back(real_root_to_json(b));
    return json{{"mu", inst.mu},
                {"nu", inst.nu},
                {"v", weyl_to_json(inst.v)},
                {"w", weyl_to_json(inst.w)},
                {"betas", betas},
                {"ks", inst.ks},
                {"case", to_string(inst.kase)}};
}

}  // namespace

json witness_to_json(const PRVWitness& w) {
    json out{{"instance", instance_to_json(w.instance)},
             {"lambda", w.lambda},
             {"path", path_to_json(w.witness_path)},
             {"criterion", criterion_report_to_json(w.criterion)},
             {"reduced", w.reduced}};
    if (w.reduced) out["effective_instance"] = instance_to_json(w.effective);
    if (w.oracle_confirmed)
        out["oracle_confirmed"] = *w.oracle_confirmed;
    else
        out["oracle_confirmed"] = nullptr;
    return out;
}

}  // namespace littelmann
