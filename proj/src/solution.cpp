#include "cyclocover/solution.hpp"

#include "cyclocover/errors.hpp"

namespace cyclocover {

std::string to_string(Problem p) {
    switch (p) {
    case Problem::dim: return "dim";
    case Problem::edim: return "edim";
    case Problem::mdim: return "mdim";
    case Problem::doubly: return "doubly";
    case Problem::geodetic: return "geodetic";
    case Problem::meg: return "meg";
    case Problem::dem: return "dem";
    }
    return "?";
}

std::string to_string(Method m) {
    switch (m) {
    case Method::construct: return "construct";
    case Method::xp: return "xp";
    case Method::brute: return "brute";
    }
    return "?";
}

std::string to_string(PathMode m) {
    return m == PathMode::edge_cover ? "edge_cover" : "vertex_partition";
}

Problem problem_from_string(const std::string& s) {
    if (s == "dim") return Problem::dim;
    if (s == "edim") return Problem::edim;
    if (s == "mdim") return Problem::mdim;
    if (s == "doubly") return Problem::doubly;
    if (s == "geodetic") return Problem::geodetic;
    if (s == "meg") return Problem::meg;
    if (s == "dem") return Problem::dem;
    throw Error(ErrorCode::UnknownProblemTag, s);
}

Method method_from_string(const std::string& s) {
    if (s == "construct") return Method::construct;
    if (s == "xp") return Method::xp;
    if (s == "brute") return Method::brute;
    throw Error(ErrorCode::InvalidSpec, "unknown method: " + s);
}

PathMode path_mode_from_string(const std::string& s) {
    if (s == "edge_cover") return PathMode::edge_cover;
    if (s == "vertex_partition") return PathMode::vertex_partition;
    throw Error(ErrorCode::InvalidSpec, "unknown path mode: " + s);
}

json SolutionSet::to_json() const {
    json j;
    j["problem"] = to_string(problem);
    j["method"] = to_string(method);
    j["size"] = size();
    j["vertices"] = vertices;
    j["bound"] = claimed_bound;
    j["root"] = root_used ? json(*root_used) : json(nullptr);
    return j;
}

SolutionSet SolutionSet::from_json(const json& j) {
    SolutionSet s;
    s.problem = problem_from_string(j.at("problem").get<std::string>());
    s.method = method_from_string(j.at("method").get<std::string>());
    s.vertices = j.at("vertices").get<std::vector<int>>();
    s.claimed_bound = j.at("bound").get<int>();
    if (j.contains("root") && !j["root"].is_null()) s.root_used = j["root"].get<int>();
    return s;
}

json PathSystem::to_json() const {
    json j;
    j["mode"] = to_string(mode);
    j["count"] = count();
    j["bound"] = claimed_bound;
    j["paths"] = paths;
    return j;
}

PathSystem PathSystem::from_json(const json& j) {
    PathSystem ps;
    ps.mode = path_mode_from_string(j.at("mode").get<std::string>());
    ps.paths = j.at("paths").get<std::vector<std::vector<int>>>();
    ps.claimed_bound = j.at("bound").get<int>();
    return ps;
}

json VerificationReport::to_json() const {
    json j;
    j["valid"] = valid;
    j["witness"] = witness;
    return j;
}

} // namespace cyclocover
