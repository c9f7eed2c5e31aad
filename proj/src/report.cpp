#include "qda/report.hpp"

#include <fstream>

#include "qda/expr.hpp"

namespace qda {

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace

LoadedParams load_params_json(const Json& j) {
    if (!j.contains("N")) throw Error("parameter file needs \"N\"");
    int n = j.at("N").get<int>();
    std::string backend_str = j.value("backend", std::string("symbolic"));
    BackendSpec backend;
    if (backend_str == "rational")
        backend.kind = Backend::rational;
    else if (backend_str == "cyclotomic") {
        backend.kind = Backend::cyclotomic;
        backend.cyclotomic_order = j.value("cyclotomic_order", 1u);
        if (backend.cyclotomic_order < 1) throw Error("cyclotomic_order must be >= 1");
    } else if (backend_str == "symbolic")
        backend.kind = Backend::symbolic;
    else
        throw Error("unknown backend: " + backend_str);

    ParamOptions options;
    options.exponent_range = j.value("exponent_range", options.exponent_range);
    options.collision_power_bound = j.value("collision_bound", options.collision_power_bound);
    options.even_exponents = j.value("even_exponents", false);
    options.seed = j.value("seed", options.seed);

    std::vector<Constraint> constraints;
    if (j.contains("q")) {
        for (const auto& [key, value] : j.at("q").items()) {
            std::string text = "q[" + key + "] = " + value.get<std::string>();
            constraints.push_back(Constraint::parse(text, backend));
        }
    }
    if (j.contains("constraints"))
        for (const auto& c : j.at("constraints"))
            constraints.push_back(Constraint::parse(c.get<std::string>(), backend));

    if (backend.kind == Backend::symbolic)
        return LoadedParams{ParamSpec::from_constraints(n, constraints, options), options};
    return LoadedParams{ParamSpec::from_table(n, backend, constraints), options};
}

LoadedParams load_params_file(const std::string& path) {
    return load_params_json(read_json_file(path));
}

CartanData load_cartan_json(const Json& j) {
    CartanData cd;
    cd.size = j.at("N").get<int>();
    if (j.contains("type")) {
        std::string t = j.at("type").get<std::string>();
        if (t == "A") return CartanData::type_A(cd.size);
        if (t == "B") return CartanData::type_B(cd.size);
        if (t == "C") return CartanData::type_C(cd.size);
        throw Error("unknown cartan type: " + t);
    }
    for (const auto& [key, value] : j.at("k").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw Error("cartan k keys look like \"i,j\"");
        int i = std::stoi(key.substr(0, comma));
        int jj = std::stoi(key.substr(comma + 1));
        cd.k[{i, jj}] = value.get<int>();
    }
    for (int i = 1; i <= cd.size; ++i)
        for (int jx = 1; jx <= cd.size; ++jx)
            if (i != jx && !cd.k.count({i, jx}))
                throw Error("cartan file misses k entry for (" + std::to_string(i) + "," +
                            std::to_string(jx) + ")");
    return cd;
}

CartanData load_cartan_file(const std::string& path) {
    return load_cartan_json(read_json_file(path));
}

OneForm load_one_form_json(const Json& j, const ParamSpec& params) {
    OneForm y;
    const auto& comps = j.at("components");
    if (static_cast<int>(comps.size()) != params.n_generators())
        throw Error("one-form needs exactly N components");
    for (const auto& c : comps) y.components.push_back(parse_expression(c.get<std::string>(), params));
    return y;
}

OneForm load_one_form_file(const std::string& path, const ParamSpec& params) {
    return load_one_form_json(read_json_file(path), params);
}

Json params_to_json(const ParamSpec& params) {
    Json q = Json::object();
    for (int i = 1; i <= params.n_generators(); ++i)
        for (int j = 1; j <= params.n_generators(); ++j)
            q[std::to_string(i) + "," + std::to_string(j)] = params.q(i, j).to_string();
    Json out = Json::object();
    out["N"] = params.n_generators();
    out["backend"] = backend_name(params.backend().kind);
    if (params.backend().kind == Backend::cyclotomic)
        out["cyclotomic_order"] = params.backend().cyclotomic_order;
    out["q"] = std::move(q);
    out["constraints"] = params.constraint_log();
    return out;
}

Json poly_to_json(const FreePoly& p, const ParamSpec& params) {
    Json words = Json::array();
    Json coeffs = Json::array();
    for (const auto& [w, c] : p.terms()) {
        words.push_back(w);
        coeffs.push_back(c.to_string());
    }
    Json out = Json::object();
    out["text"] = poly_to_string(p, params);
    out["words"] = std::move(words);
    out["coeffs"] = std::move(coeffs);
    return out;
}

Json basis_to_json(const std::vector<FreePoly>& basis, const MultiDegree& d,
                   const ParamSpec& params) {
    Json out = Json::object();
    out["degree"] = d;
    Json words = Json::array();
    for (const auto& w : word_basis(d)) words.push_back(w);
    out["words"] = std::move(words);
    Json vectors = Json::array();
    Json text = Json::array();
    for (const auto& p : basis) {
        Json row = Json::array();
        for (const auto& c : p.coefficient_vector(d)) row.push_back(c.to_string());
        vectors.push_back(std::move(row));
        text.push_back(poly_to_string(p, params));
    }
    out["vectors"] = std::move(vectors);
    out["text"] = std::move(text);
    return out;
}

Json matrix_to_json(const Matrix& m, const ParamSpec& params) {
    (void)params;
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json report_envelope(const ParamSpec& params, Json result) {
    Json out = Json::object();
    out["schema"] = 1;
    out["params"] = params_to_json(params);
    out["result"] = std::move(result);
    return out;
}

}  // namespace qda
