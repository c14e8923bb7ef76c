#include "widecat/quiver.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace widecat {

int QuiverPresentation::vertex_index(const IncTuple& v) const
{
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || !(*it == v))
        return -1;
    return static_cast<int>(it - vertices.begin());
}

QuiverPresentation build_quiver(TupleSpace space)
{
    QuiverPresentation q;
    q.space = space;
    q.vertices = generate_tuples(space);

    for (int vi = 0; vi < static_cast<int>(q.vertices.size()); ++vi) {
        const IncTuple& x = q.vertices[static_cast<std::size_t>(vi)];
        for (int k = 0; k <= space.m; ++k) {
            if (auto y = sigma(x, k, +1)) {
                Arrow a;
                a.src = vi;
                a.dst = q.vertex_index(*y);
                a.coord = k;
                q.arrows.push_back(a);
            }
        }
    }

    // rho^x_{kl} exists whenever the double shift at {k,l} is a valid vertex.
    for (int vi = 0; vi < static_cast<int>(q.vertices.size()); ++vi) {
        const IncTuple& x = q.vertices[static_cast<std::size_t>(vi)];
        for (int k = 0; k <= space.m; ++k) {
            for (int l = k + 1; l <= space.m; ++l) {
                std::vector<int> ye = x.entries;
                ye[static_cast<std::size_t>(k)] += 1;
                ye[static_cast<std::size_t>(l)] += 1;
                bool valid = ye.back() <= space.ground_size();
                for (std::size_t i = 0; valid && i + 1 < ye.size(); ++i)
                    valid = ye[i] < ye[i + 1];
                if (!valid)
                    continue;
                const bool has_k = sigma(x, k, +1).has_value();
                const bool has_l = sigma(x, l, +1).has_value();
                Relation r;
                r.base = vi;
                r.k = k;
                r.l = l;
                r.kind = (has_k && has_l) ? RelationKind::commutativity
                                          : RelationKind::zero_composite;
                q.relations.push_back(r);
            }
        }
    }
    return q;
}

static std::string node_id(const IncTuple& v)
{
    std::string s;
    for (int e : v.entries)
        s += std::to_string(e);
    return s;
}

std::string to_dot(const QuiverPresentation& q)
{
    std::string out = "digraph quiver {\n";
    for (const IncTuple& v : q.vertices)
        out += "  \"" + node_id(v) + "\";\n";
    for (const Arrow& a : q.arrows) {
        out += "  \"" + node_id(q.vertices[static_cast<std::size_t>(a.src)]) + "\" -> \"" +
               node_id(q.vertices[static_cast<std::size_t>(a.dst)]) + "\";\n";
    }
    out += "}\n";
    return out;
}

std::string to_json(const QuiverPresentation& q)
{
    nlohmann::ordered_json j;
    j["n"] = q.space.n;
    j["m"] = q.space.m;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const IncTuple& v : q.vertices)
        j["vertices"].push_back(v.entries);
    j["arrows"] = nlohmann::ordered_json::array();
    for (const Arrow& a : q.arrows) {
        nlohmann::ordered_json ja;
        ja["src"] = q.vertices[static_cast<std::size_t>(a.src)].entries;
        ja["dst"] = q.vertices[static_cast<std::size_t>(a.dst)].entries;
        ja["k"] = a.coord;
        j["arrows"].push_back(std::move(ja));
    }
    j["relations"] = nlohmann::ordered_json::array();
    for (const Relation& r : q.relations) {
        nlohmann::ordered_json jr;
        jr["x"] = q.vertices[static_cast<std::size_t>(r.base)].entries;
        jr["k"] = r.k;
        jr["l"] = r.l;
        jr["kind"] = r.kind == RelationKind::commutativity ? "comm" : "zero";
        j["relations"].push_back(std::move(jr));
    }
    return j.dump();
}

QuiverPresentation quiver_from_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    QuiverPresentation q;
    q.space = TupleSpace{j.at("n").get<int>(), j.at("m").get<int>()};
    for (const auto& jv : j.at("vertices"))
        q.vertices.emplace_back(q.space, jv.get<std::vector<int>>());
    for (const auto& ja : j.at("arrows")) {
        Arrow a;
        a.src = q.vertex_index(IncTuple(q.space, ja.at("src").get<std::vector<int>>()));
        a.dst = q.vertex_index(IncTuple(q.space, ja.at("dst").get<std::vector<int>>()));
        a.coord = ja.at("k").get<int>();
        if (a.src < 0 || a.dst < 0)
            throw std::invalid_argument("arrow endpoint is not a listed vertex");
        q.arrows.push_back(a);
    }
    for (const auto& jr : j.at("relations")) {
        Relation r;
        r.base = q.vertex_index(IncTuple(q.space, jr.at("x").get<std::vector<int>>()));
        r.k = jr.at("k").get<int>();
        r.l = jr.at("l").get<int>();
        const std::string kind = jr.at("kind").get<std::string>();
        if (kind == "comm")
            r.kind = RelationKind::commutativity;
        else if (kind == "zero")
            r.kind = RelationKind::zero_composite;
        else
            throw std::invalid_argument("unknown relation kind: " + kind);
        if (r.base < 0)
            throw std::invalid_argument("relation base is not a listed vertex");
        q.relations.push_back(r);
    }
    return q;
}

} // namespace widecat
