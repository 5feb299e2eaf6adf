#include "wander/json_io.hpp"

#include <fstream>

namespace wander {

namespace {

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

Json to_json(const ScaffoldConfig& cfg) {
    return Json{{"delta", cfg.delta}, {"depth", cfg.depth}, {"deltas", cfg.deltas},
                {"ells", cfg.ells},   {"ms", cfg.ms},       {"rs", cfg.rs},
                {"ss", cfg.ss},       {"ts", cfg.ts}};
}

ScaffoldConfig scaffold_from_json(const Json& j) {
    ScaffoldConfig cfg;
    cfg.delta = j.at("delta").get<double>();
    cfg.depth = j.at("depth").get<int>();
    cfg.deltas = j.at("deltas").get<std::vector<double>>();
    cfg.ells = j.at("ells").get<std::vector<double>>();
    cfg.ms = j.at("ms").get<std::vector<double>>();
    cfg.rs = j.at("rs").get<std::vector<double>>();
    cfg.ss = j.at("ss").get<std::vector<double>>();
    cfg.ts = j.at("ts").get<std::vector<double>>();
    return cfg;
}

namespace {

Json checks_to_json(const std::vector<ConstraintCheck>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks)
        arr.push_back(Json{{"constraint", c.constraint}, {"pass", c.pass}, {"detail", c.detail}});
    return arr;
}

}  // namespace

Json to_json(const ValidationReport& r) {
    return checks_to_json(r.checks);
}

Json to_json(const StructuralReport& r) {
    Json arr = checks_to_json(r.checks);
    arr.push_back(Json{{"constraint", "min_gap"},
                       {"pass", r.min_gap > 0.0},
                       {"detail", std::to_string(r.min_gap)}});
    return arr;
}

Json to_json(const PiecewiseTarget& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries)
        entries.push_back(Json{{"region", e.region},
                               {"target", complex_to_json(e.target)},
                               {"tolerance", e.tolerance},
                               {"exp_center", complex_to_json(e.exp_center)},
                               {"exp_radius", e.exp_radius}});
    return Json{{"variant", to_string(t.variant)},
                {"entries", entries},
                {"f2_tolerance", t.f2_tolerance}};
}

Json to_json(const PolyApproximant& p) {
    Json coeffs = Json::array();
    for (Complex c : p.coeffs) coeffs.push_back(complex_to_json(c));
    return Json{{"degree", p.degree},
                {"scale", Json{{"center", complex_to_json(p.scale.center)}, {"s", p.scale.s}}},
                {"coeffs", coeffs},
                {"errors", p.errors},
                {"validated", p.validated}};
}

PolyApproximant approximant_from_json(const Json& j) {
    PolyApproximant p;
    p.degree = j.at("degree").get<int>();
    p.scale.center = complex_from_json(j.at("scale").at("center"));
    p.scale.s = j.at("scale").at("s").get<double>();
    for (const auto& c : j.at("coeffs")) p.coeffs.push_back(complex_from_json(c));
    if (j.contains("errors"))
        p.errors = j.at("errors").get<std::map<std::string, double>>();
    p.validated = j.value("validated", false);
    return p;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace wander
