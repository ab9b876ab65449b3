#include "wftq/scene.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wftq {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kDeg = 3.14159265358979323846 / 180.0;

std::array<double, 4> read_array4(const ordered_json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array() || j[field].size() != 4)
        throw InvalidScene(std::string(field) + " must be an array of 4 numbers");
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        if (!j[field][i].is_number())
            throw InvalidScene(std::string(field) + "[" + std::to_string(i) +
                               "] is not a number");
        out[i] = j[field][i].get<double>();
    }
    return out;
}

SurfacePoint read_point(Curvature k, const ordered_json& j, int index) {
    std::string where = "vertices.points[" + std::to_string(index) + "]";
    if (!j.is_array()) throw InvalidScene(where + " must be an array");
    std::vector<double> c;
    for (const auto& x : j) {
        if (!x.is_number()) throw InvalidScene(where + " has a non-number");
        c.push_back(x.get<double>());
    }
    try {
        if (k.flat()) {
            if (c.size() != 2)
                throw InvalidScene(where + " must be [x, y] in the flat model");
            return euclidean_point(c[0], c[1]);
        }
        if (c.size() != 3) throw InvalidScene(where + " must have 3 coordinates");
        if (k.spherical()) return sphere_point(c[0], c[1], c[2]);
        return hyperboloid_point(c[0], c[1], c[2]);
    } catch (const InvalidScene& e) {
        throw InvalidScene(where + ": " + e.what());
    }
}

}  // namespace

VertexConfig QuadScene::as_vertices() const {
    if (vertices) return *vertices;
    return realize_vertices(*angular);
}

AngularConfig QuadScene::as_angular() const {
    if (angular) return *angular;
    return extract_angular(*vertices, model_origin(k));
}

double QuadScene::weight_sum() const {
    const auto& w = angular ? angular->weight : vertices->weight;
    return w[0] + w[1] + w[2] + w[3];
}

QuadScene parse_scene(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const ordered_json::parse_error& e) {
        throw InvalidScene(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw InvalidScene("scene must be a JSON object");
    if (!j.contains("curvature") || !j["curvature"].is_number())
        throw InvalidScene("curvature must be a number");
    QuadScene scene;
    scene.k = Curvature{j["curvature"].get<double>()};
    if (!std::isfinite(scene.k.k)) throw InvalidScene("curvature must be finite");

    bool has_angular = j.contains("angular");
    bool has_vertices = j.contains("vertices");
    if (has_angular == has_vertices)
        throw InvalidScene("scene needs exactly one of angular or vertices");

    if (has_angular) {
        const auto& a = j["angular"];
        if (!a.is_object()) throw InvalidScene("angular must be an object");
        auto dirs = read_array4(a, "directions_deg");
        auto lens = read_array4(a, "lengths");
        auto w = read_array4(a, "weights");
        for (double& d : dirs) d *= kDeg;
        scene.angular = AngularConfig::make(scene.k, dirs, lens, w);
    } else {
        const auto& v = j["vertices"];
        if (!v.is_object()) throw InvalidScene("vertices must be an object");
        if (!v.contains("points") || !v["points"].is_array() ||
            v["points"].size() != 4)
            throw InvalidScene("vertices.points must be an array of 4 points");
        std::array<SurfacePoint, 4> pts;
        for (int i = 0; i < 4; ++i)
            pts[i] = read_point(scene.k, v["points"][i], i);
        scene.vertices =
            VertexConfig::make(scene.k, pts, read_array4(v, "weights"));
    }

    if (j.contains("solver")) {
        const auto& s = j["solver"];
        if (!s.is_object()) throw InvalidScene("solver must be an object");
        if (s.contains("tol")) {
            if (!s["tol"].is_number() || !(s["tol"].get<double>() > 0.0))
                throw InvalidScene("solver.tol must be a positive number");
            scene.tol = s["tol"].get<double>();
        }
        if (s.contains("max_iter")) {
            if (!s["max_iter"].is_number_integer() ||
                s["max_iter"].get<int>() < 1)
                throw InvalidScene("solver.max_iter must be a positive integer");
            scene.max_iter = s["max_iter"].get<int>();
        }
    }
    return scene;
}

QuadScene load_scene(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidScene("cannot open scene file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

std::string scene_to_json(const QuadScene& scene) {
    ordered_json j;
    j["curvature"] = scene.k.k;
    if (scene.angular) {
        const auto& a = *scene.angular;
        ordered_json ja;
        ordered_json dirs = ordered_json::array();
        for (int i = 0; i < 4; ++i)
            dirs.push_back((a.frame_offset + a.theta[i]) / kDeg);
        ja["directions_deg"] = dirs;
        ja["lengths"] = a.length;
        ja["weights"] = a.weight;
        j["angular"] = ja;
    } else {
        const auto& v = *scene.vertices;
        ordered_json jv;
        ordered_json pts = ordered_json::array();
        for (int i = 0; i < 4; ++i) {
            ordered_json p = ordered_json::array();
            p.push_back(v.vertex[i].c[0]);
            p.push_back(v.vertex[i].c[1]);
            if (!scene.k.flat()) p.push_back(v.vertex[i].c[2]);
            pts.push_back(p);
        }
        jv["points"] = pts;
        jv["weights"] = v.weight;
        j["vertices"] = jv;
    }
    ordered_json s;
    s["tol"] = scene.tol;
    s["max_iter"] = scene.max_iter;
    j["solver"] = s;
    return j.dump(2);
}

std::string digest_hex(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx",
                  static_cast<unsigned long long>(h));
    return out;
}

}  // namespace wftq
