#include "topoplan/json_io.hpp"

#include <stdexcept>

namespace topoplan {

nlohmann::json surface_to_json(const SimplicialSurface& surface) {
    nlohmann::json j;
    auto& vertices = j["vertices"] = nlohmann::json::array();
    for (const auto& p : surface.positions()) vertices.push_back({p.x, p.y});
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& e : surface.edges()) edges.push_back({e.tail, e.head, e.weight});
    auto& triangles = j["triangles"] = nlohmann::json::array();
    for (const auto& t : surface.triangles()) triangles.push_back({t.v[0], t.v[1], t.v[2]});
    return j;
}

SimplicialSurface surface_from_json(const nlohmann::json& j) {
    std::vector<Vec2> positions;
    for (const auto& v : j.at("vertices"))
        positions.push_back(Vec2{v.at(0).get<double>(), v.at(1).get<double>()});
    std::vector<OrientedEdge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back(OrientedEdge{e.at(0).get<int>(), e.at(1).get<int>(),
                                     e.at(2).get<double>()});
    std::vector<OrientedTriangle> triangles;
    for (const auto& t : j.at("triangles"))
        triangles.push_back(
            OrientedTriangle{{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()}});
    return SimplicialSurface::from_parts(std::move(positions), std::move(edges),
                                         std::move(triangles));
}

nlohmann::json basis_to_json(const HarmonicBasis& basis) {
    nlohmann::json j;
    j["edge_count"] = basis.edge_count();
    j["dimension"] = basis.dimension();
    j["null_tolerance"] = basis.null_tolerance();
    auto& values = j["values"] = nlohmann::json::array();
    for (int c = 0; c < basis.dimension(); ++c)
        for (int r = 0; r < basis.edge_count(); ++r) values.push_back(basis.columns()(r, c));
    return j;
}

HarmonicBasis basis_from_json(const nlohmann::json& j) {
    const int edge_count = j.at("edge_count").get<int>();
    const int dimension = j.at("dimension").get<int>();
    const double tolerance = j.at("null_tolerance").get<double>();
    const auto& values = j.at("values");
    if (static_cast<int>(values.size()) != edge_count * dimension)
        throw std::runtime_error("basis values length does not match edge_count * dimension");
    Eigen::MatrixXd columns(edge_count, dimension);
    std::size_t k = 0;
    for (int c = 0; c < dimension; ++c)
        for (int r = 0; r < edge_count; ++r) columns(r, c) = values.at(k++).get<double>();
    return HarmonicBasis(std::move(columns), tolerance);
}

}  // namespace topoplan
