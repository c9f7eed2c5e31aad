// Batch front end: parameter ingestion, expression parsing, command
// dispatch and JSON reports on stdout.  Diagnostics go to stderr.
// Exit codes: 0 success, 1 usage/parse error, 2 mathematical obstruction.

#include <CLI11.hpp>

#include <iostream>

#include "qda/classify.hpp"
#include "qda/expr.hpp"
#include "qda/report.hpp"

namespace {

using qda::Json;

qda::MultiDegree parse_degree(const std::string& text, int n) {
    qda::MultiDegree d;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        d.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (static_cast<int>(d.size()) > n) throw qda::Error("degree has more entries than generators");
    d.resize(n, 0);
    return d;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_constants(const std::string& params_file, const std::string& degree, bool right_side) {
    auto loaded = qda::load_params_file(params_file);
    auto d = parse_degree(degree, loaded.params.n_generators());
    auto cb = qda::find_constants(d, loaded.params,
                                  right_side ? qda::DerivationSide::right
                                             : qda::DerivationSide::left);
    Json result = Json::object();
    result["command"] = "constants";
    result["dimension"] = cb.dimension();
    result["basis"] = qda::basis_to_json(cb.basis, d, loaded.params);
    emit(qda::report_envelope(loaded.params, std::move(result)));
    return 0;
}

int run_sform(const std::string& params_file, const std::string& degree) {
    auto loaded = qda::load_params_file(params_file);
    auto d = parse_degree(degree, loaded.params.n_generators());
    auto g = qda::s_gram(d, loaded.params);
    Json result = Json::object();
    result["command"] = "sform";
    result["degree"] = d;
    result["matrix"] = qda::matrix_to_json(g.matrix, loaded.params);
    result["symmetric"] = g.matrix.is_symmetric();
    result["rank"] = g.matrix.rank();
    result["radical_dimension"] = g.matrix.cols() - g.matrix.rank();
    emit(qda::report_envelope(loaded.params, std::move(result)));
    return 0;
}

int run_ideal(const std::string& params_file, const std::string& degree, bool cross_check) {
    auto loaded = qda::load_params_file(params_file);
    auto d = parse_degree(degree, loaded.params.n_generators());
    auto slice = qda::ideal_slice(d, loaded.params, cross_check);
    Json result = Json::object();
    result["command"] = "ideal";
    result["dimension"] = slice.dimension();
    result["cross_checked"] = cross_check;
    result["basis"] = qda::basis_to_json(slice.basis, d, loaded.params);
    emit(qda::report_envelope(loaded.params, std::move(result)));
    return 0;
}

int run_quotient(const std::string& params_file, const std::string& degree) {
    auto loaded = qda::load_params_file(params_file);
    auto d = parse_degree(degree, loaded.params.n_generators());
    auto q = qda::quotient_basis(d, loaded.params);
    Json result = Json::object();
    result["command"] = "quotient";
    result["degree"] = d;
    result["dimension"] = q.representatives.size();
    Json reps = Json::array();
    for (const auto& w : q.representatives) reps.push_back(w);
    result["representatives"] = std::move(reps);
    result["ideal_dimension"] = q.ideal_basis.size();
    emit(qda::report_envelope(loaded.params, std::move(result)));
    return 0;
}

int run_taylor(const std::string& params_file, int max_degree) {
    auto loaded = qda::load_params_file(params_file);
    auto coeffs = qda::taylor_coefficients(loaded.params, max_degree);
    Json result = Json::object();
    result["command"] = "taylor";
    result["max_degree"] = max_degree;
    Json table = Json::object();
    for (const auto& [seq, a] : coeffs.table) {
        std::string key;
        for (size_t k = 0; k < seq.size(); ++k) key += (k ? "," : "") + std::to_string(seq[k]);
        table[key] = qda::poly_to_string(a, loaded.params);
    }
    result["coefficients"] = std::move(table);
    result["gauge_log"] = coeffs.gauge_log;
    result["residual_zero"] = qda::taylor_residual_is_zero(coeffs, loaded.params, max_degree + 1);
    emit(qda::report_envelope(loaded.params, std::move(result)));
    return 0;
}

int run_integrate(const std::string& params_file, const std::string& form_file,
                  const std::string& degree) {
    auto loaded = qda::load_params_file(params_file);
    auto y = qda::load_one_form_file(form_file, loaded.params);
    qda::MultiDegree d = degree.empty() ? qda::one_form_block(y, loaded.params)
                                        : parse_degree(degree, loaded.params.n_generators());
    auto res = qda::solve_gradient(y, d, loaded.params);
    Json result = Json::object();
    result["command"] = "integrate";
    result["degree"] = d;
    if (res.solution) {
        result["status"] = "integrable";
        result["solution"] = qda::poly_to_json(*res.solution, loaded.params);
        result["unique"] = res.unique;
        emit(qda::report_envelope(loaded.params, std::move(result)));
        return 0;
    }
    result["status"] = "obstructed";
    result["violated_constant"] = qda::poly_to_json(*res.violated_constant, loaded.params);
    result["pairing_value"] = qda::poly_to_json(*res.pairing_value, loaded.params);
    emit(qda::report_envelope(loaded.params, std::move(result)));
    return 2;
}

int run_serre(const std::string& cartan_file) {
    auto cd = qda::load_cartan_file(cartan_file);
    auto params = qda::cartan_param_point(cd);
    Json result = Json::object();
    result["command"] = "serre";
    Json items = Json::array();
    bool all_ok = true;
    for (const auto& [ij, k] : cd.k) {
        auto c = qda::serre_constant(ij.first, ij.second, k, params);
        bool is_constant = true;
        for (int i = 1; i <= params.n_generators(); ++i)
            is_constant = is_constant && qda::apply_partial(i, c, params).is_zero();
        bool zero_op = qda::operator_is_zero(qda::hat_map(c), params);
        all_ok = all_ok && is_constant && zero_op;
        Json item = Json::object();
        item["i"] = ij.first;
        item["j"] = ij.second;
        item["k"] = k;
        item["constant"] = qda::poly_to_string(c, params);
        item["is_constant"] = is_constant;
        item["hat_operator_zero"] = zero_op;
        items.push_back(std::move(item));
    }
    result["generators"] = std::move(items);
    result["all_verified"] = all_ok;
    emit(qda::report_envelope(params, std::move(result)));
    return all_ok ? 0 : 2;
}

int run_rootvectors(const std::string& type, int rank) {
    qda::ParamSpec params = type == "A"
                                ? qda::cartan_param_point(qda::CartanData::type_A(rank))
                                : qda::cartan_param_point(qda::CartanData::type_C(rank));
    qda::RootVectorSeq seq = type == "A" ? qda::build_root_vectors_A(rank, params)
                                         : qda::build_root_vectors_C(rank, params);
    qda::VerifyReport rep =
        type == "A" ? qda::verify_A(seq, params) : qda::verify_C(seq, params);
    Json result = Json::object();
    result["command"] = "rootvectors";
    result["type"] = type;
    result["rank"] = rank;
    Json vecs = Json::array();
    for (const auto& x : seq.vectors) vecs.push_back(qda::poly_to_string(x, params));
    result["vectors"] = std::move(vecs);
    Json coeffs = Json::array();
    for (const auto& c : seq.bracket_coeffs) coeffs.push_back(params.render_scalar(c));
    result["bracket_coefficients"] = std::move(coeffs);
    result["verified"] = rep.ok;
    result["checks"] = rep.checks;
    result["failures"] = rep.failures;
    emit(qda::report_envelope(params, std::move(result)));
    return rep.ok ? 0 : 2;
}

int run_b2() {
    auto res = qda::solve_b2();
    Json result = Json::object();
    result["command"] = "b2";
    Json cands = Json::array();
    for (const auto& c : res.candidates) {
        Json item = Json::object();
        item["E"] = qda::poly_to_string(c.e, res.params);
        item["a2"] = res.params.render_scalar(c.a2);
        cands.push_back(std::move(item));
    }
    result["candidates"] = std::move(cands);
    if (res.survivor) {
        result["survivor"] = qda::poly_to_string(*res.survivor, res.params);
        result["a1"] = res.params.render_scalar(res.a1);
        result["a2"] = res.params.render_scalar(res.a2);
    }
    emit(qda::report_envelope(res.params, std::move(result)));
    return res.survivor ? 0 : 2;
}

int run_b3(long bound) {
    auto res = qda::search_b3(bound);
    Json result = Json::object();
    result["command"] = "b3";
    result["exponent_bound"] = res.exponent_bound;
    result["grid_points"] = res.grid_points;
    result["qualifying_solutions"] = res.qualifying;
    Json sols = Json::array();
    for (const auto& s : res.nonzero_solutions) {
        Json item = Json::object();
        item["grid_point"] = s.grid_point;
        item["coefficients"] = s.coeffs;
        item["finite_lie_limit"] = s.finite_lie_limit;
        item["matches_highest_root"] = s.matches_highest_root;
        sols.push_back(std::move(item));
    }
    result["nonzero_solutions"] = std::move(sols);
    result["completeness_note"] = res.completeness_note;
    emit(qda::report_envelope(res.params, std::move(result)));
    // A qualifying solution would contradict the no-go statement; surface
    // it loudly through the exit code.
    return res.qualifying == 0 ? 0 : 2;
}

int run_classify3(const std::string& params_file) {
    auto loaded = qda::load_params_file(params_file);
    auto rep = qda::classify_order3(loaded.params);
    qda::MultiDegree d(loaded.params.n_generators(), 0);
    d[0] = d[1] = d[2] = 1;
    Json result = Json::object();
    result["command"] = "classify3";
    result["case"] = qda::order3_case_name(rep.label);
    result["constants_dimension"] = rep.constants.size();
    result["ideal_dimension"] = rep.ideal_dimension;
    result["quotient_dimension"] = rep.quotient_dimension;
    result["constants"] = qda::basis_to_json(rep.constants, d, loaded.params);
    emit(qda::report_envelope(loaded.params, std::move(result)));
    return 0;
}

int run_dim_multilinear(const std::string& params_file, int n) {
    auto loaded = qda::load_params_file(params_file);
    size_t dim = qda::dim_constants_multilinear(n, loaded.params);
    auto pred = qda::predict_dim_multilinear(n, loaded.params);
    Json result = Json::object();
    result["command"] = "dim-multilinear";
    result["n"] = n;
    result["dimension"] = dim;
    result["hypothesis_holds"] = pred.hypothesis_holds;
    if (!pred.hypothesis_holds) {
        result["violating_subset"] = pred.violating_subset;
        emit(qda::report_envelope(loaded.params, std::move(result)));
        return 2;
    }
    result["predicted"] = pred.predicted;
    result["agrees"] = pred.predicted == dim;
    bool ok = pred.predicted == dim;
    emit(qda::report_envelope(loaded.params, std::move(result)));
    return ok ? 0 : 2;
}

int run_verify(const std::string& suite, const std::string& params_file, int max_degree) {
    Json result = Json::object();
    result["command"] = "verify";
    result["suite"] = suite;
    bool pass = false;
    qda::ParamOptions opts;
    if (suite == "table-4.2.3") {
        struct Row {
            std::vector<std::string> constraints;
            size_t n_const, dim_ideal;
        };
        std::vector<Row> rows = {
            {{"sigma(1,2,3) = 1"}, 1, 1},
            {{"sigma(1,2) = 1"}, 1, 2},
            {{"sigma(1,2) = 1", "sigma(2,3) = 1"}, 2, 4},
            {{"sigma(1,2) = 1", "sigma(1,3) = 1", "sigma(2,3) = 1"}, 2, 5},
        };
        Json out_rows = Json::array();
        pass = true;
        qda::ParamSpec last = qda::ParamSpec::from_constraints(3, {}, opts);
        for (const auto& row : rows) {
            std::vector<qda::Constraint> cs;
            for (const auto& c : row.constraints)
                cs.push_back(qda::Constraint::parse(c, qda::BackendSpec{qda::Backend::symbolic, 1}));
            auto params = qda::ParamSpec::from_constraints(3, cs, opts);
            auto rep = qda::classify_order3(params);
            bool ok = rep.constants.size() == row.n_const && rep.ideal_dimension == row.dim_ideal;
            pass = pass && ok;
            Json jr = Json::object();
            jr["constraints"] = row.constraints;
            jr["constants"] = rep.constants.size();
            jr["ideal_dimension"] = rep.ideal_dimension;
            jr["quotient_dimension"] = rep.quotient_dimension;
            jr["pass"] = ok;
            out_rows.push_back(std::move(jr));
            last = params;
        }
        result["rows"] = std::move(out_rows);
        result["pass"] = pass;
        emit(qda::report_envelope(last, std::move(result)));
        return pass ? 0 : 2;
    }
    auto loaded = params_file.empty()
                      ? qda::LoadedParams{qda::ParamSpec::from_constraints(2, {}, opts), opts}
                      : qda::load_params_file(params_file);
    if (suite == "ef-relations") {
        auto rep = qda::verify_ef_relations(loaded.params, max_degree);
        result["pass"] = rep.ok;
        result["failures"] = rep.failures;
        pass = rep.ok;
    } else if (suite == "sform-symmetry") {
        pass = true;
        Json blocks = Json::array();
        const int n = loaded.params.n_generators();
        std::vector<qda::MultiDegree> degs;
        qda::MultiDegree cur(n, 0);
        for (;;) {
            int tot = qda::total_degree(cur);
            if (tot >= 1 && tot <= max_degree) degs.push_back(cur);
            int k = 0;
            while (k < n) {
                if (cur[k] < max_degree) {
                    ++cur[k];
                    break;
                }
                cur[k] = 0;
                ++k;
            }
            if (k == n) break;
        }
        for (const auto& d : degs) {
            bool sym = qda::s_gram(d, loaded.params).matrix.is_symmetric();
            pass = pass && sym;
            Json jb = Json::object();
            jb["degree"] = d;
            jb["symmetric"] = sym;
            blocks.push_back(std::move(jb));
        }
        result["blocks"] = std::move(blocks);
        result["pass"] = pass;
    } else {
        throw qda::Error("unknown suite: " + suite +
                         " (available: table-4.2.3, ef-relations, sform-symmetry)");
    }
    emit(qda::report_envelope(loaded.params, std::move(result)));
    return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for free algebras with q-differential structure"};
    app.require_subcommand(1);

    std::string params_file, degree, form_file, cartan_file, type = "A", suite;
    int rank = 2, max_degree = 3, n_multilinear = 3;
    long bound = 6;
    bool cross_check = false, right_side = false;

    auto* c_constants = app.add_subcommand("constants", "basis of the constants on a block");
    c_constants->add_option("--params", params_file)->required();
    c_constants->add_option("--degree", degree)->required();
    c_constants->add_flag("--right", right_side, "use the right derivations");

    auto* c_sform = app.add_subcommand("sform", "Gram matrix of the form S on a block");
    c_sform->add_option("--params", params_file)->required();
    c_sform->add_option("--degree", degree)->required();

    auto* c_ideal = app.add_subcommand("ideal", "ideal slice (radical of S) on a block");
    c_ideal->add_option("--params", params_file)->required();
    c_ideal->add_option("--degree", degree)->required();
    c_ideal->add_flag("--cross-check", cross_check,
                      "independently compare with the constant-generated span");

    auto* c_quot = app.add_subcommand("quotient", "quotient basis and normal-form data");
    c_quot->add_option("--params", params_file)->required();
    c_quot->add_option("--degree", degree)->required();

    auto* c_taylor = app.add_subcommand("taylor", "Taylor coefficients up to a degree");
    c_taylor->add_option("--params", params_file)->required();
    c_taylor->add_option("--max-degree", max_degree)->required();

    auto* c_int = app.add_subcommand("integrate", "solve the gradient equations for a one-form");
    c_int->add_option("--params", params_file)->required();
    c_int->add_option("--one-form", form_file)->required();
    c_int->add_option("--degree", degree);

    auto* c_serre = app.add_subcommand("serre", "Serre constants for a Cartan data file");
    c_serre->add_option("--cartan", cartan_file)->required();

    auto* c_rv = app.add_subcommand("rootvectors", "root-vector towers with verification");
    c_rv->add_option("--type", type)->check(CLI::IsMember({"A", "C"}));
    c_rv->add_option("--rank", rank)->required();

    app.add_subcommand("b2", "the B2 highest-root solve");
    auto* c_b3 = app.add_subcommand("b3", "the B3 grid search (expected empty)");
    c_b3->add_option("--bound", bound);

    auto* c_cl3 = app.add_subcommand("classify3", "order-3 classification of a parameter point");
    c_cl3->add_option("--params", params_file)->required();

    auto* c_dm = app.add_subcommand("dim-multilinear", "multilinear constants vs the prediction");
    c_dm->add_option("--params", params_file)->required();
    c_dm->add_option("--n", n_multilinear)->required();

    auto* c_ver = app.add_subcommand("verify", "named verification suites");
    c_ver->add_option("--suite", suite)->required();
    c_ver->add_option("--params", params_file);
    c_ver->add_option("--max-degree", max_degree);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_constants->parsed()) return run_constants(params_file, degree, right_side);
        if (c_sform->parsed()) return run_sform(params_file, degree);
        if (c_ideal->parsed()) return run_ideal(params_file, degree, cross_check);
        if (c_quot->parsed()) return run_quotient(params_file, degree);
        if (c_taylor->parsed()) return run_taylor(params_file, max_degree);
        if (c_int->parsed()) return run_integrate(params_file, form_file, degree);
        if (c_serre->parsed()) return run_serre(cartan_file);
        if (c_rv->parsed()) return run_rootvectors(type, rank);
        if (app.get_subcommand("b2")->parsed()) return run_b2();
        if (c_b3->parsed()) return run_b3(bound);
        if (c_cl3->parsed()) return run_classify3(params_file);
        if (c_dm->parsed()) return run_dim_multilinear(params_file, n_multilinear);
        if (c_ver->parsed()) return run_verify(suite, params_file, max_degree);
    } catch (const qda::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const qda::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
