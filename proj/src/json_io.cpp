#include "resolvedim/json_io.hpp"

#include <fstream>

namespace resolvedim {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = std::move(edges);

    const Certificates& certs = g.certificates();
    if (!certs.empty()) {
        json c = json::object();
        if (certs.outer_cycle)
            c["outer_cycle"] = *certs.outer_cycle;
        if (certs.faces) {
            json faces = json::array();
            for (const auto& f : *certs.faces)
                faces.push_back({f[0], f[1], f[2]});
            c["faces"] = std::move(faces);
        }
        if (certs.family) {
            json fam;
            fam["name"] = certs.family->name;
            fam["params"] = json::object();
            for (const auto& [k, v] : certs.family->params)
                fam["params"][k] = v;
            c["family"] = std::move(fam);
        }
        j["certificates"] = std::move(c);
    }
    return j;
}

Graph graph_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw Error(ErrorCode::BadInput, "edges entries must be [u,v] pairs");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        Certificates certs;
        if (j.contains("certificates")) {
            const auto& c = j.at("certificates");
            if (c.contains("outer_cycle"))
                certs.outer_cycle = c.at("outer_cycle").get<std::vector<int>>();
            if (c.contains("faces")) {
                std::vector<std::array<int, 3>> faces;
                for (const auto& f : c.at("faces")) {
                    if (!f.is_array() || f.size() != 3)
                        throw Error(ErrorCode::BadInput, "faces entries must be [a,b,c] triples");
                    faces.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
                }
                certs.faces = std::move(faces);
            }
            if (c.contains("family")) {
                FamilyTag tag;
                tag.name = c.at("family").at("name").get<std::string>();
                if (c.at("family").contains("params"))
                    for (const auto& [k, v] : c.at("family").at("params").items())
                        tag.params[k] = v.get<std::int64_t>();
                certs.family = std::move(tag);
            }
        }
        return Graph::build(n, std::move(edges), std::move(certs));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::BadInput, std::string("malformed graph JSON: ") + e.what());
    }
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::BadInput, path + " is not valid JSON: " + e.what());
    }
    return graph_from_json(j);
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

json report_to_json(const ConstructionReport& report) {
    json j;
    j["method"] = method_name(report.method);
    j["set"] = report.set.members;
    j["bound"] = report.bound;
    j["verified"] = report.verified;
    j["notes"] = report.notes;
    return j;
}

} // namespace resolvedim
