#include "octopara/json_io.hpp"

#include <fstream>

namespace octopara {

using nlohmann::json;

json to_json(const Octonion& x) {
    json a = json::array();
    for (int i = 0; i < 8; ++i) a.push_back(x[i]);
    return a;
}

Octonion octonion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 8) throw ParseError("octonion must be an array of 8 numbers");
    Octonion x;
    for (int i = 0; i < 8; ++i) x[i] = j[i].get<double>();
    return x;
}

json to_json(const OVector& x) {
    json comps = json::array();
    for (int k = 0; k < x.dim(); ++k) comps.push_back(to_json(x[k]));
    return json{{"dim", x.dim()}, {"components", comps}};
}

OVector ovector_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("components"))
        throw ParseError("vector needs \"dim\" and \"components\"");
    const int n = j["dim"].get<int>();
    const auto& comps = j["components"];
    if (!comps.is_array() || int(comps.size()) != n)
        throw ParseError("vector component count does not match dim");
    OVector x(n);
    for (int k = 0; k < n; ++k) x[k] = octonion_from_json(comps[k]);
    return x;
}

json to_json(const ParaLinearOperator& t) {
    return json{{"dim", t.dim()}, {"core", t.core().data()}};
}

ParaLinearOperator operator_from_json(const json& j, double matrix_tol) {
    if (!j.contains("dim")) throw ParseError("operator needs \"dim\"");
    const int n = j["dim"].get<int>();
    if (n <= 0) throw ParseError("operator dim must be positive");
    if (j.contains("core")) {
        const auto vals = j["core"].get<std::vector<double>>();
        if (int(vals.size()) != n * 8 * n) throw ParseError("core must hold n*8n reals");
        Matrix core(n, 8 * n);
        core.data() = vals;
        return ParaLinearOperator::from_core(std::move(core));
    }
    if (j.contains("matrix")) {
        const auto vals = j["matrix"].get<std::vector<double>>();
        if (int(vals.size()) != 64 * n * n) throw ParseError("matrix must hold 8n*8n reals");
        Matrix m(8 * n, 8 * n);
        m.data() = vals;
        double scale = 0;
        for (double v : vals) scale = std::max(scale, std::abs(v));
        return ParaLinearOperator::from_real_matrix(m, matrix_tol * std::max(1.0, scale));
    }
    throw ParseError("operator needs \"core\" or \"matrix\"");
}

json to_json(const SpectralDecomposition& d, double residual) {
    json pairs = json::array();
    for (const auto& p : d.pairs) {
        json axis = json::array();
        for (int i = 1; i < 8; ++i) axis.push_back(p.z.axis().value()[i]);
        pairs.push_back(json{{"lambda", p.lambda}, {"z", to_json(p.z.value())}, {"axis", axis}});
    }
    json kernel = json::array();
    for (const auto& z : d.kernel) kernel.push_back(to_json(z.value()));
    return json{{"pairs", pairs}, {"kernel", kernel}, {"residual", residual}};
}

json to_json(const SpectrumFunction& f) {
    json values = json::array();
    for (const auto& [lambda, v] : f.table())
        values.push_back(json{{"lambda", lambda}, {"f", to_json(v)}});
    return json{{"values", values}};
}

SpectrumFunction function_from_json(const json& j) {
    if (!j.contains("values") || !j["values"].is_array())
        throw ParseError("function needs a \"values\" array");
    std::vector<std::pair<double, Octonion>> table;
    for (const auto& entry : j["values"]) {
        if (!entry.contains("lambda") || !entry.contains("f"))
            throw ParseError("function entries need \"lambda\" and \"f\"");
        table.emplace_back(entry["lambda"].get<double>(), octonion_from_json(entry["f"]));
    }
    return SpectrumFunction(std::move(table));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace octopara
