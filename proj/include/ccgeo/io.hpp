#pragma once

// JSON serialization of bodies, groups, formal differences and extension
// problems.  Writers are deterministic: vertices are sorted
// lexicographically and objects keep insertion order, so identical values
// produce identical bytes.

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccgeo/extension.hpp"
#include "ccgeo/radstrom.hpp"

namespace ccgeo {

using Json = nlohmann::ordered_json;

namespace detail {

inline bool lex_less(const Vec& a, const Vec& b) {
    for (long i = 0; i < a.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (a(i) > b(i)) return false;
    }
    return false;
}

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw parse_error(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(where + ": missing field '" + key + "'");
    return *it;
}

inline Vec vec_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw parse_error(where + ": expected an array of numbers");
    Vec v(static_cast<long>(j.size()));
    long i = 0;
    for (const auto& x : j) {
        if (!x.is_number()) throw parse_error(where + ": expected a number");
        v(i++) = x.get<double>();
    }
    return v;
}

inline Mat mat_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw parse_error(where + ": expected an array of rows");
    const long rows = static_cast<long>(j.size());
    Vec first = vec_from_json(j[0], where);
    Mat m(rows, first.size());
    m.row(0) = first;
    for (long r = 1; r < rows; ++r) {
        Vec row = vec_from_json(j[static_cast<std::size_t>(r)], where);
        if (row.size() != first.size()) throw parse_error(where + ": ragged matrix");
        m.row(r) = row;
    }
    return m;
}

inline Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (long i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

inline Json mat_to_json(const Mat& m) {
    Json a = Json::array();
    for (long r = 0; r < m.rows(); ++r) a.push_back(vec_to_json(m.row(r)));
    return a;
}

} // namespace detail

inline Json body_to_json(const ConvexBody& a) {
    std::vector<Vec> sorted = a.vertices;
    std::sort(sorted.begin(), sorted.end(), detail::lex_less);
    Json j;
    j["dim"] = a.dim;
    Json verts = Json::array();
    for (const Vec& v : sorted) verts.push_back(detail::vec_to_json(v));
    j["vertices"] = verts;
    return j;
}

inline ConvexBody body_from_json(const Json& j, const std::string& where = "body") {
    const Json& dim = detail::field(j, "dim", where);
    if (!dim.is_number_integer() || dim.get<int>() < 1)
        throw validation_error(where + ".dim: expected a positive integer");
    const int d = dim.get<int>();
    const Json& verts = detail::field(j, "vertices", where);
    if (!verts.is_array() || verts.empty())
        throw validation_error(where + ".vertices: expected a nonempty array");
    std::vector<Vec> pts;
    for (const auto& v : verts) {
        Vec p = detail::vec_from_json(v, where + ".vertices");
        if (p.size() != d)
            throw validation_error(where + ".vertices: point dimension differs from dim");
        pts.push_back(p);
    }
    return hull(pts);
}

inline Json group_to_json(const GroupAction& g,
                          const std::vector<std::pair<Mat, Vec>>& generators, int cap = 256) {
    Json j;
    j["dim"] = g.dim;
    j["kind"] = g.kind == ActionKind::linear_isometric ? "linear" : "affine";
    Json gens = Json::array();
    for (const auto& [m, o] : generators) {
        Json e;
        e["matrix"] = detail::mat_to_json(m);
        e["offset"] = detail::vec_to_json(o);
        gens.push_back(e);
    }
    j["generators"] = gens;
    j["cap"] = cap;
    return j;
}

inline GroupAction group_from_json(const Json& j, const std::string& where = "group") {
    const Json& dim = detail::field(j, "dim", where);
    if (!dim.is_number_integer() || dim.get<int>() < 1)
        throw validation_error(where + ".dim: expected a positive integer");
    const int d = dim.get<int>();
    const Json& kind = detail::field(j, "kind", where);
    if (!kind.is_string() || (kind != "linear" && kind != "affine"))
        throw validation_error(where + ".kind: expected \"linear\" or \"affine\"");
    int cap = 256;
    if (j.contains("cap")) {
        if (!j["cap"].is_number_integer() || j["cap"].get<int>() < 1)
            throw validation_error(where + ".cap: expected a positive integer");
        cap = j["cap"].get<int>();
    }
    const Json& gens = detail::field(j, "generators", where);
    if (!gens.is_array() || gens.empty())
        throw validation_error(where + ".generators: expected a nonempty array");
    std::vector<std::pair<Mat, Vec>> generators;
    for (const auto& e : gens) {
        Mat m = detail::mat_from_json(detail::field(e, "matrix", where + ".generators"),
                                      where + ".generators.matrix");
        Vec o = detail::vec_from_json(detail::field(e, "offset", where + ".generators"),
                                      where + ".generators.offset");
        if (m.rows() != d || m.cols() != d || o.size() != d)
            throw validation_error(where + ".generators: shape differs from dim");
        generators.emplace_back(m, o);
    }
    GroupAction g = build_group(generators, cap);
    if (kind == "linear" && g.kind != ActionKind::linear_isometric)
        throw validation_error(where + ": kind is \"linear\" but the generated group is affine");
    return g;
}

inline Json fd_to_json(const FormalDifference& x) {
    Json j;
    j["pos"] = body_to_json(x.pos);
    j["neg"] = body_to_json(x.neg);
    return j;
}

inline FormalDifference fd_from_json(const Json& j, const std::string& where = "fd") {
    FormalDifference x;
    x.pos = body_from_json(detail::field(j, "pos", where), where + ".pos");
    x.neg = body_from_json(detail::field(j, "neg", where), where + ".neg");
    if (x.pos.dim != x.neg.dim) throw validation_error(where + ": pos and neg dims differ");
    return x;
}

inline Json problem_to_json(const ExtensionProblem& p,
                            const std::vector<std::pair<Mat, Vec>>& group_generators) {
    Json j;
    j["group"] = group_to_json(p.space.group, group_generators);
    Json points = Json::array();
    for (int z = 0; z < p.space.n; ++z) points.push_back(z);
    j["points"] = points;
    j["metric"] = detail::mat_to_json(p.space.metric);
    Json perms = Json::object();
    for (int g = 0; g < p.space.group.order(); ++g) {
        Json row = Json::array();
        for (int v : p.space.perm[static_cast<std::size_t>(g)]) row.push_back(v);
        perms[std::to_string(g)] = row;
    }
    j["permutations"] = perms;
    Json subset = Json::array();
    for (int a : p.subset) subset.push_back(a);
    j["subset"] = subset;
    Json f = Json::object();
    for (const auto& [z, body] : p.f) f[std::to_string(z)] = body_to_json(body);
    j["f"] = f;
    return j;
}

inline ExtensionProblem problem_from_json(const Json& j, const std::string& where = "problem") {
    GroupAction group = group_from_json(detail::field(j, "group", where), where + ".group");
    const Json& points = detail::field(j, "points", where);
    if (!points.is_array() || points.empty())
        throw validation_error(where + ".points: expected a nonempty array");
    const int n = static_cast<int>(points.size());
    for (int z = 0; z < n; ++z)
        if (!points[static_cast<std::size_t>(z)].is_number_integer() ||
            points[static_cast<std::size_t>(z)].get<int>() != z)
            throw validation_error(where + ".points: expected the ids 0..n-1 in order");

    Mat metric = detail::mat_from_json(detail::field(j, "metric", where), where + ".metric");
    if (metric.rows() != n || metric.cols() != n)
        throw validation_error(where + ".metric: expected an n x n matrix");

    const Json& perms_j = detail::field(j, "permutations", where);
    if (!perms_j.is_object()) throw parse_error(where + ".permutations: expected an object");
    std::vector<std::vector<int>> perms(static_cast<std::size_t>(group.order()));
    for (int g = 0; g < group.order(); ++g) {
        auto it = perms_j.find(std::to_string(g));
        if (it == perms_j.end())
            throw validation_error(where + ".permutations: missing element " + std::to_string(g));
        if (!it->is_array() || static_cast<int>(it->size()) != n)
            throw validation_error(where + ".permutations: wrong length for element " +
                                   std::to_string(g));
        for (const auto& v : *it) {
            if (!v.is_number_integer())
                throw parse_error(where + ".permutations: expected integers");
            perms[static_cast<std::size_t>(g)].push_back(v.get<int>());
        }
    }

    ExtensionProblem p;
    p.space = build_gspace(metric, perms, group);

    const Json& subset = detail::field(j, "subset", where);
    if (!subset.is_array()) throw parse_error(where + ".subset: expected an array");
    for (const auto& a : subset) {
        if (!a.is_number_integer()) throw parse_error(where + ".subset: expected integers");
        p.subset.push_back(a.get<int>());
    }

    const Json& f = detail::field(j, "f", where);
    if (!f.is_object()) throw parse_error(where + ".f: expected an object");
    for (const auto& [key, body] : f.items()) {
        int z = 0;
        try {
            z = std::stoi(key);
        } catch (const std::exception&) {
            throw parse_error(where + ".f: key '" + key + "' is not a point id");
        }
        if (z < 0 || z >= n) throw validation_error(where + ".f: point id out of range");
        p.f[z] = body_from_json(body, where + ".f." + key);
    }
    validate_problem(p);
    return p;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw parse_error(path + ": cannot open for writing");
    out << j.dump(2) << "\n";
}

inline ConvexBody read_body(const std::string& path) {
    return body_from_json(read_json_file(path), path);
}

inline void write_body(const std::string& path, const ConvexBody& a) {
    write_json_file(path, body_to_json(a));
}

inline GroupAction read_group(const std::string& path) {
    return group_from_json(read_json_file(path), path);
}

inline ExtensionProblem read_problem(const std::string& path) {
    return problem_from_json(read_json_file(path), path);
}

} // namespace ccgeo
