// Batch front end: classification, decomposition and invariant evaluation
// for ternary sextics, with JSON input and output.

#include <cstdio>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sextic/engine.hpp"
#include "sextic/intersect.hpp"
#include "sextic/io.hpp"
#include "sextic/terracini.hpp"

using namespace sextic;

namespace {

json report_base() { return {{"schema_version", 1}}; }

void emit(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
}

json stratum_to_json(const StratumReport& r) {
    json j = report_base();
    j["rank_C3"] = r.rank_C3;
    j["H27_vanishes"] = r.H27_vanishes;
    j["h27_gap"] = r.h27_gap;
    j["label"] = stratum_name(r.label);
    j["expected_decompositions"] = r.expected_decompositions;
    j["note"] = "label certifies the closed conditions (catalecticant rank, "
                "H27 vanishing), not open-stratum membership";
    return j;
}

json complex_pointset_json(const PointSetC& z) { return points_to_json(z); }

json classify_file(const std::string& path, double tol) {
    auto fv = parse_form(load_json_file(path));
    auto rep = std::visit([&](auto&& f) { return classify(f, tol); }, fv);
    json j = stratum_to_json(rep);
    j["input"] = path;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stratification and Waring decomposition of ternary sextics"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    double tol = 1e-9;
    std::uint64_t seed = 1;

    std::vector<std::string> classify_files;
    int jobs = 1;
    auto* c_classify = app.add_subcommand("classify", "stratum report for sextics");
    c_classify->add_option("form", classify_files, "form JSON file(s)")->required();
    c_classify->add_option("--tol", tol, "rank/vanishing tolerance");
    c_classify->add_option("--jobs", jobs, "parallel workers over input files");

    std::string form_path, points_path, expr_path;
    std::string c1_path, c2_path, c3_path;
    auto* c_decompose = app.add_subcommand("decompose", "kernel-cubic decomposition");
    c_decompose->add_option("form", form_path, "form JSON file")->required();
    c_decompose->add_option("--tol", tol, "tolerance");
    c_decompose->add_option("--seed", seed, "random seed");

    auto* c_second = app.add_subcommand("second", "liaison second decomposition");
    c_second->add_option("form", form_path, "form JSON file")->required();
    c_second->add_option("points", points_path, "known decomposition points")->required();
    c_second->add_option("--tol", tol, "tolerance");
    c_second->add_option("--seed", seed, "random seed");

    auto* c_wprime = app.add_subcommand("wprime", "sextic apolar to three cubics");
    c_wprime->add_option("c1", c1_path, "first cubic")->required();
    c_wprime->add_option("c2", c2_path, "second cubic")->required();
    c_wprime->add_option("c3", c3_path, "third cubic")->required();
    c_wprime->add_option("--tol", tol, "tolerance");

    auto* c_invariants = app.add_subcommand("invariants", "determinantal invariants");
    c_invariants->add_option("form", form_path, "form JSON file")->required();
    c_invariants->add_option("--tol", tol, "tolerance");

    auto* c_hvector = app.add_subcommand("hvector", "h-vector of a point set");
    c_hvector->add_option("points", points_path, "point set JSON file")->required();
    c_hvector->add_option("--tol", tol, "tolerance");

    auto* c_intersect = app.add_subcommand("intersect", "base points of two cubics");
    c_intersect->add_option("c1", c1_path, "first cubic")->required();
    c_intersect->add_option("c2", c2_path, "second cubic")->required();
    c_intersect->add_option("--seed", seed, "random seed");

    std::vector<double> aux;
    auto* c_terracini = app.add_subcommand("terracini", "Terracini determinants");
    c_terracini->add_option("points", points_path, "9-point JSON file")->required();
    c_terracini->add_option("--aux", aux, "auxiliary point (3 or 6 numbers)")
        ->expected(3, 6);
    c_terracini->add_option("--seed", seed, "random seed");

    int rank_target = 10;
    std::string out_prefix;
    auto* c_random = app.add_subcommand("random", "seeded random form with witness");
    c_random->add_option("--rank", rank_target, "target catalecticant rank")->required();
    c_random->add_option("--seed", seed, "random seed")->required();
    c_random->add_option("--out", out_prefix, "write <prefix>.form.json and <prefix>.witness.json");

    auto* c_verify = app.add_subcommand("verify", "check a Waring expression");
    c_verify->add_option("form", form_path, "form JSON file")->required();
    c_verify->add_option("expression", expr_path, "expression JSON file")->required();
    c_verify->add_option("--tol", tol, "tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) {
            std::vector<json> reports(classify_files.size());
            if (jobs <= 1 || classify_files.size() <= 1) {
                for (size_t i = 0; i < classify_files.size(); ++i)
                    reports[i] = classify_file(classify_files[i], tol);
            } else {
                std::vector<std::thread> pool;
                std::mutex err_mutex;
                std::exception_ptr first_error;
                for (int w = 0; w < jobs; ++w)
                    pool.emplace_back([&, w] {
                        for (size_t i = w; i < classify_files.size();
                             i += static_cast<size_t>(jobs)) {
                            try {
                                reports[i] = classify_file(classify_files[i], tol);
                            } catch (...) {
                                std::lock_guard<std::mutex> lock(err_mutex);
                                if (!first_error)
                                    first_error = std::current_exception();
                            }
                        }
                    });
                for (auto& t : pool) t.join();
                if (first_error) std::rethrow_exception(first_error);
            }
            if (reports.size() == 1)
                emit(reports[0], as_json);
            else
                emit(json{{"schema_version", 1}, {"reports", reports}}, true);
        } else if (c_decompose->parsed()) {
            auto fv = parse_form(load_json_file(form_path));
            auto d = std::visit(
                [&](auto&& f) { return decompose_via_kernel_cubics(f, tol, seed); },
                fv);
            json j = report_base();
            j["verdict"] = d.verdict == DecompositionVerdict::Rank8 ? "Rank8"
                                                                    : "Rank9_CI";
            j["base_points"] = complex_pointset_json(d.Z);
            j["expression"] = expression_to_json(d.expression);
            j["residual"] = d.residual;
            emit(j, as_json);
        } else if (c_second->parsed()) {
            auto fv = parse_form(load_json_file(form_path));
            auto pv = parse_points(load_json_file(points_path));
            PointSetC A = points_as_complex(pv);
            auto s = std::visit(
                [&](auto&& f) { return second_decomposition(f, A, tol, seed); }, fv);
            json j = report_base();
            j["points"] = complex_pointset_json(s.B);
            j["expression"] = expression_to_json(s.expression);
            j["residual"] = s.residual;
            j["union_h_vector"] = s.union_h_vector.values;
            emit(j, as_json);
        } else if (c_wprime->parsed()) {
            auto v1 = parse_form(load_json_file(c1_path));
            auto v2 = parse_form(load_json_file(c2_path));
            auto v3 = parse_form(load_json_file(c3_path));
            json j = report_base();
            if (std::holds_alternative<FormQ>(v1) &&
                std::holds_alternative<FormQ>(v2) &&
                std::holds_alternative<FormQ>(v3)) {
                FormQ F = construct_Wprime_form(std::get<FormQ>(v1),
                                                std::get<FormQ>(v2),
                                                std::get<FormQ>(v3), tol);
                j["form"] = form_to_json(F);
                j["report"] = stratum_to_json(classify(F, tol));
            } else {
                FormC F = construct_Wprime_form(form_as_complex(v1),
                                                form_as_complex(v2),
                                                form_as_complex(v3), tol);
                j["form"] = form_to_json(F);
                j["report"] = stratum_to_json(classify(F, tol));
            }
            emit(j, as_json);
        } else if (c_invariants->parsed()) {
            auto fv = parse_form(load_json_file(form_path));
            json j = report_base();
            std::visit(
                [&](auto&& f) {
                    using K = typename std::decay_t<decltype(f)>::Scalar;
                    j["rank_C3"] = rank(catalecticant(f, 3).matrix, tol);
                    if constexpr (field_traits<K>::is_exact) {
                        j["det_C3"] = rational_to_string(
                            determinant(catalecticant(f, 3).matrix));
                        j["H27"] = rational_to_string(H27(f));
                    } else {
                        Complex d3 = determinant(catalecticant(f, 3).matrix);
                        j["det_C3"] = {d3.real(), d3.imag()};
                        Complex h = H27(f);
                        j["H27"] = {h.real(), h.imag()};
                    }
                    j["h27_gap"] = h27_relative_gap(to_complex(f));
                    j["H27_vanishes"] = j["h27_gap"].get<double>() <= tol;
                },
                fv);
            emit(j, as_json);
        } else if (c_hvector->parsed()) {
            auto pv = parse_points(load_json_file(points_path));
            json j = report_base();
            std::visit(
                [&](auto&& z) {
                    j["h_vector"] = h_vector(z, tol).values;
                    j["size"] = z.size();
                    j["is_complete_intersection_33"] =
                        z.size() == 9 && is_complete_intersection_33(z, tol);
                },
                pv);
            emit(j, as_json);
        } else if (c_intersect->parsed()) {
            FormC C1 = form_as_complex(parse_form(load_json_file(c1_path)));
            FormC C2 = form_as_complex(parse_form(load_json_file(c2_path)));
            auto pts = intersect_cubics(C1, C2, seed);
            json j = report_base();
            json arr = json::array();
            for (const auto& ip : pts) {
                json p;
                p["point"] = {io::scalar_to_json(ip.point.c[0]),
                              io::scalar_to_json(ip.point.c[1]),
                              io::scalar_to_json(ip.point.c[2])};
                p["multiplicity"] = ip.multiplicity;
                arr.push_back(p);
            }
            j["points"] = arr;
            emit(j, as_json);
        } else if (c_terracini->parsed()) {
            PointSetC nine = points_as_complex(parse_points(load_json_file(points_path)));
            json j = report_base();
            j["rank_T"] = rank(terracini_matrix(nine), 1e-9);
            if (aux.size() >= 3) {
                std::array<Complex, 3> q{Complex(aux[0], aux.size() >= 6 ? aux[3] : 0),
                                         Complex(aux[1], aux.size() >= 6 ? aux[4] : 0),
                                         Complex(aux[2], aux.size() >= 6 ? aux[5] : 0)};
                PointC p10(q);
                std::vector<PointC> ten = nine.points;
                ten.push_back(p10);
                Complex c = cubic_det(ten), r = R_det(nine, p10);
                j["C"] = {c.real(), c.imag()};
                j["R"] = {r.real(), r.imag()};
            }
            try {
                auto s = lambda_sample(nine, seed);
                j["N"] = {s.n.real(), s.n.imag()};
                j["H27"] = {s.h27.real(), s.h27.imag()};
                j["lambda"] = {s.ratio.real(), s.ratio.imag()};
            } catch (const DegenerateCubicSystem& e) {
                j["N"] = nullptr;
                j["note"] = e.name();
            }
            emit(j, as_json);
        } else if (c_random->parsed()) {
            auto [F, witness] = random_form(rank_target, seed);
            json jf = form_to_json(F);
            json jw = expression_to_json(witness);
            if (!out_prefix.empty()) {
                std::ofstream(out_prefix + ".form.json") << jf.dump(2) << "\n";
                std::ofstream(out_prefix + ".witness.json") << jw.dump(2) << "\n";
                json j = report_base();
                j["form_file"] = out_prefix + ".form.json";
                j["witness_file"] = out_prefix + ".witness.json";
                emit(j, as_json);
            } else {
                json j = report_base();
                j["form"] = jf;
                j["witness"] = jw;
                emit(j, as_json);
            }
        } else if (c_verify->parsed()) {
            auto fv = parse_form(load_json_file(form_path));
            auto ev = parse_expression(load_json_file(expr_path));
            auto r = std::visit(
                [&](auto&& f, auto&& e) { return verify_expression(f, e, tol); },
                fv, ev);
            json j = report_base();
            j["residual"] = r.residual;
            j["non_redundant"] = r.non_redundant;
            emit(j, as_json);
        }
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return e.numeric() ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "Error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
