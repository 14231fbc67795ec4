#include "hyperhopf/json_io.hpp"

#include <algorithm>
#include <map>

namespace hyperhopf {

Hypergraph parse_hypergraph(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("hypergraph input needs a \"vertices\" array");
    std::vector<std::string> labels = j["vertices"].get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array())
            throw std::invalid_argument("\"edges\" must be an array of label arrays");
        for (const auto& e : j["edges"])
            edges.push_back(e.get<std::vector<std::string>>());
    }
    return Hypergraph(std::move(labels), edges);
}

json serialize_hypergraph(const Hypergraph& g) {
    json edges = json::array();
    for (Mask e : g.edges()) {
        json edge = json::array();
        for (int v = 0; v < g.num_vertices(); ++v)
            if (e >> v & 1) edge.push_back(g.label(v));
        edges.push_back(std::move(edge));
    }
    return json{{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

MultiComplex parse_multicomplex(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("multicomplex input needs a \"vertices\" array");
    std::vector<std::string> labels = j["vertices"].get<std::vector<std::string>>();
    std::vector<EdgeInstance> inst;
    std::map<std::string, int> by_id;
    if (j.contains("edges")) {
        for (const auto& je : j["edges"]) {
            if (!je.is_object() || !je.contains("id") || !je.contains("multiset"))
                throw std::invalid_argument(
                    "each multicomplex edge needs \"id\" and \"multiset\"");
            EdgeInstance e;
            e.id = je["id"].get<std::string>();
            e.mult.assign(labels.size(), 0);
            for (const auto& [label, m] : je["multiset"].items()) {
                auto it = std::find(labels.begin(), labels.end(), label);
                if (it == labels.end())
                    throw std::invalid_argument("edge " + e.id +
                                                " uses unknown vertex " + label);
                int mult = m.get<int>();
                if (mult <= 0) throw std::invalid_argument("multiplicities must be positive");
                e.mult[it - labels.begin()] = mult;
            }
            by_id[e.id] = int(inst.size());
            inst.push_back(std::move(e));
        }
    }
    std::vector<Mask> below(inst.size(), 0);
    if (j.contains("order")) {
        for (const auto& pair : j["order"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("order entries are [lowId, highId] pairs");
            auto lo = by_id.find(pair[0].get<std::string>());
            auto hi = by_id.find(pair[1].get<std::string>());
            if (lo == by_id.end() || hi == by_id.end())
                throw std::invalid_argument("order refers to an unknown edge id");
            below[hi->second] |= Mask(1) << lo->second;
        }
    }
    return MultiComplex(std::move(labels), std::move(inst), std::move(below));
}

json serialize_multicomplex(const MultiComplex& c) {
    json edges = json::array();
    for (const auto& e : c.instances()) {
        json ms = json::object();
        for (int v = 0; v < c.num_vertices(); ++v)
            if (e.mult[v]) ms[c.label(v)] = e.mult[v];
        edges.push_back(json{{"id", e.id}, {"multiset", std::move(ms)}});
    }
    // covering pairs: strip relations implied by transitivity
    json order = json::array();
    int k = c.num_instances();
    for (int i = 0; i < k; ++i)
        for (int jx = 0; jx < k; ++jx) {
            if (!(c.below()[i] >> jx & 1)) continue;
            bool covered = true;
            for (int mid = 0; mid < k; ++mid)
                if ((c.below()[i] >> mid & 1) && (c.below()[mid] >> jx & 1)) {
                    covered = false;
                    break;
                }
            if (covered)
                order.push_back(json::array(
                    {c.instances()[jx].id, c.instances()[i].id}));
        }
    return json{{"vertices", c.labels()},
                {"edges", std::move(edges)},
                {"order", std::move(order)}};
}

std::string rational_to_string(const mpq_class& q) {
    mpq_class r = q;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

json serialize_polynomial(const RationalPolynomial& p, bool hilbert_basis) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_string(c));
    json out{{"text", p.to_string()}, {"coefficients", std::move(coeffs)}};
    if (hilbert_basis) {
        json hc = json::array();
        for (const auto& c : to_hilbert_basis(p)) hc.push_back(rational_to_string(c));
        out["hilbert_coefficients"] = std::move(hc);
    }
    return out;
}

json serialize_sum(const HgSum& s) {
    json out = json::array();
    for (const auto& [w, c] : s.terms()) {
        json factors = json::array();
        for (const Canonical& f : w) factors.push_back(serialize_hypergraph(to_hypergraph(f)));
        out.push_back(json{{"coeff", rational_to_string(c)}, {"factors", std::move(factors)}});
    }
    return out;
}

json serialize_sum(const McSum& s) {
    json out = json::array();
    for (const auto& [w, c] : s.terms()) {
        json factors = json::array();
        for (const MCCanonical& f : w)
            factors.push_back(serialize_multicomplex(to_multicomplex(f)));
        out.push_back(json{{"coeff", rational_to_string(c)}, {"factors", std::move(factors)}});
    }
    return out;
}

}  // namespace hyperhopf
