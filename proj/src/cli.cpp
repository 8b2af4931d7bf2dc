#include "ifcrack/cli.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ifcrack/ifcrack.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace ifcrack::cli {

namespace {

const std::vector<std::string> kSweepable{"nu1", "mu1", "gamma-all", "sigma", "tau"};

// ---------------------------------------------------------------- config

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool found = false;
        for (const char* k : known) found = found || it.key() == k;
        if (!found) throw ConfigError("unknown field " + where + it.key());
    }
}

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ConfigError("missing field " + where + key);
    return obj.at(key);
}

double number(const json& v, const std::string& name) {
    if (!v.is_number()) throw ConfigError("field " + name + " must be a number");
    return v.get<double>();
}

double require_number(const json& obj, const char* key, const std::string& where) {
    return number(require(obj, key, where), where + key);
}

std::optional<double> optional_number(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
    return number(obj.at(key), where + key);
}

std::vector<double> number_list(const json& v, const std::string& name) {
    if (!v.is_array()) throw ConfigError("field " + name + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) out.push_back(number(e, name));
    return out;
}

Material parse_material(const json& obj, const std::string& where) {
    if (!obj.is_object()) throw ConfigError("field " + where.substr(0, where.size() - 1) + " must be an object");
    reject_unknown(obj, where, {"mu", "nu"});
    return {require_number(obj, "mu", where), require_number(obj, "nu", where)};
}

Problem parse_problem(const json& obj) {
    const std::string w = "problem.";
    if (!obj.is_object()) throw ConfigError("field problem must be an object");
    reject_unknown(obj, w, {"l", "mat1", "mat2", "surface_tension", "far_field", "load"});
    Problem p;
    p.half_length = require_number(obj, "l", w);
    p.mat1 = parse_material(require(obj, "mat1", w), w + "mat1.");
    p.mat2 = parse_material(require(obj, "mat2", w), w + "mat2.");

    const auto& st = require(obj, "surface_tension", w);
    const std::string ws = w + "surface_tension.";
    reject_unknown(st, ws, {"g0_plus", "g0_minus", "g1_plus", "g1_minus", "g0_int", "g1_int"});
    p.st.g0_plus = require_number(st, "g0_plus", ws);
    p.st.g0_minus = require_number(st, "g0_minus", ws);
    p.st.g1_plus = require_number(st, "g1_plus", ws);
    p.st.g1_minus = require_number(st, "g1_minus", ws);
    p.st.g0_int = require_number(st, "g0_int", ws);
    p.st.g1_int = require_number(st, "g1_int", ws);

    if (obj.contains("far_field")) {
        const auto& f = obj.at("far_field");
        const std::string wf = w + "far_field.";
        reject_unknown(f, wf, {"sigma", "tau", "sigma_x1", "sigma_x2", "omega1", "omega2"});
        p.far.sigma = optional_number(f, "sigma", wf).value_or(0.0);
        p.far.tau = optional_number(f, "tau", wf).value_or(0.0);
        p.far.sigma_x1 = optional_number(f, "sigma_x1", wf);
        p.far.sigma_x2 = optional_number(f, "sigma_x2", wf);
        p.far.omega1 = optional_number(f, "omega1", wf);
        p.far.omega2 = optional_number(f, "omega2", wf);
    }
    if (obj.contains("load")) {
        const auto& ld = obj.at("load");
        const std::string wl = w + "load.";
        reject_unknown(ld, wl, {"f_plus", "f_minus", "g_plus", "g_minus"});
        if (ld.contains("f_plus")) p.load.f_plus = number_list(ld.at("f_plus"), wl + "f_plus");
        if (ld.contains("f_minus")) p.load.f_minus = number_list(ld.at("f_minus"), wl + "f_minus");
        if (ld.contains("g_plus")) p.load.g_plus = number_list(ld.at("g_plus"), wl + "g_plus");
        if (ld.contains("g_minus")) p.load.g_minus = number_list(ld.at("g_minus"), wl + "g_minus");
    }
    return p;
}

// ---------------------------------------------------------------- output

std::string csv_line(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_number(v[i]);
    }
    return s + '\n';
}

class OutputDir {
public:
    explicit OutputDir(const std::string& path) : root_(path) {
        std::error_code ec;
        fs::create_directories(root_, ec);
        if (ec) throw ConfigError("cannot create output directory " + path + ": " + ec.message());
    }

    void write(const std::string& name, const std::string& content) {
        std::ofstream out(root_ / name, std::ios::binary);
        if (!out) throw ConfigError("cannot write " + (root_ / name).string());
        out << content;
        files_.push_back({name, sha256_hex(content)});
    }

    /// Writes manifest.json listing every file written so far with its digest.
    std::vector<std::string> finish(json manifest) {
        json list = json::array();
        for (const auto& [name, digest] : files_) list.push_back({{"name", name}, {"sha256", digest}});
        manifest["files"] = list;
        std::ofstream out(root_ / "manifest.json", std::ios::binary);
        out << manifest.dump(2) << '\n';
        std::vector<std::string> paths;
        for (const auto& f : files_) paths.push_back((root_ / f.first).string());
        paths.push_back((root_ / "manifest.json").string());
        return paths;
    }

private:
    fs::path root_;
    std::vector<std::pair<std::string, std::string>> files_;
};

/// JSON numbers: non-finite values become null so documents stay valid.
json jnum(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v == 0.0 ? 0.0 : v;
}

json log_fit_json(const LogFit& f) {
    return {{"c0", jnum(f.c0)}, {"c1", jnum(f.c1)}, {"c2", jnum(f.c2)}, {"rms", jnum(f.rms)}};
}

json singularity_json(const SingularityFit& f) {
    return {{"tip", jnum(f.tip)},
            {"window", {jnum(f.window.t_min), jnum(f.window.t_max)}},
            {"k1", jnum(f.k1)},
            {"k2", jnum(f.k2)},
            {"k1_half_window", jnum(f.k1_half)},
            {"k2_half_window", jnum(f.k2_half)},
            {"fit_residual", jnum(f.fit_residual)},
            {"s22_bounded", f.s22_bounded},
            {"s12_plus", log_fit_json(f.s12_plus)},
            {"s12_minus", log_fit_json(f.s12_minus)},
            {"s22_plus", log_fit_json(f.s22_plus)},
            {"s22_minus", log_fit_json(f.s22_minus)}};
}

json maxima_json(const StressMaxima& m) {
    auto one = [](const StressMax& s) { return json{{"value", jnum(s.value)}, {"x", jnum(s.x)}}; };
    return {{"s22_plus", one(m.s22_plus)},
            {"s22_minus", one(m.s22_minus)},
            {"s12_plus", one(m.s12_plus)},
            {"s12_minus", one(m.s12_minus)}};
}

json residual_json(const ResidualReport& r) {
    json eq = json::array(), cons = json::array();
    for (double e : r.equation) eq.push_back(jnum(e));
    for (int i = 0; i < 4; ++i) cons.push_back(jnum(r.relative_constraint(i)));
    return {{"equations_max", eq},
            {"constraints_relative", cons},
            {"net_shear_boundary_conditions", jnum(r.net_shear_bc)},
            {"net_shear_dtn", jnum(r.net_shear_dtn)}};
}

std::vector<double> closed_grid(double l, int n) {
    std::vector<double> xs;
    for (int i = 0; i < n; ++i) xs.push_back(n == 1 ? 0.0 : -l + 2.0 * l * i / (n - 1));
    return xs;
}

std::vector<double> open_grid(double l, int n) {
    std::vector<double> xs;
    for (int i = 0; i < n; ++i) xs.push_back(-l + 2.0 * l * (i + 0.5) / n);
    return xs;
}

int exit_for(const std::exception& e) {
    if (dynamic_cast<const NumericalError*>(&e) || dynamic_cast<const TruncationError*>(&e) ||
        dynamic_cast<const NonConvergence*>(&e) || dynamic_cast<const RankDeficient*>(&e))
        return numerical_error;
    return config_error;
}

void check_config(const RunConfig& cfg) {
    if (cfg.order < 2) throw ConfigError("order must be at least 2");
    if (cfg.sample_count < 2) throw ConfigError("sample_count must be at least 2");
}

/// Singularity fits and stress maxima; fits are skipped when a face g1 vanishes.
struct TipSummary {
    std::optional<SingularityFit> right, left;
    StressMaxima maxima;
};

TipSummary summarize(const Problem& p, const TaylorSolution& s) {
    TipSummary t;
    if (p.st.g1_plus != 0.0 && p.st.g1_minus != 0.0) {
        t.right = fit_singularity(p, s, 1.0);
        t.left = fit_singularity(p, s, -1.0);
    }
    t.maxima = max_stress_scan(p, s);
    return t;
}

json base_manifest(const std::string& command, const RunConfig& cfg) {
    return {{"command", command}, {"config", cfg.source}, {"order", cfg.order}, {"sample_count", cfg.sample_count}};
}

template <class F>
RunResult guarded(F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {exit_for(e), e.what(), {}};
    }
}

}  // namespace

// ---------------------------------------------------------------- public

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::vector<double> SweepSpec::values() const {
    std::vector<double> v;
    for (int i = 0; i < steps; ++i) v.push_back(steps == 1 ? from : from + (to - from) * i / (steps - 1));
    return v;
}

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown(doc, "", {"problem", "order", "outputs", "sample_count", "sweep", "reference", "verify"});
    RunConfig cfg;
    cfg.source = doc;
    cfg.problem = parse_problem(require(doc, "problem", ""));
    if (doc.contains("order")) {
        if (!doc.at("order").is_number_integer()) throw ConfigError("field order must be an integer");
        cfg.order = doc.at("order").get<int>();
    }
    if (doc.contains("sample_count")) {
        if (!doc.at("sample_count").is_number_integer()) throw ConfigError("field sample_count must be an integer");
        cfg.sample_count = doc.at("sample_count").get<int>();
    }
    if (doc.contains("outputs")) {
        if (!doc.at("outputs").is_string()) throw ConfigError("field outputs must be a string");
        cfg.outputs = doc.at("outputs").get<std::string>();
    }
    if (doc.contains("sweep")) {
        const auto& s = doc.at("sweep");
        reject_unknown(s, "sweep.", {"parameter", "from", "to", "steps"});
        SweepSpec sp;
        const auto& name = require(s, "parameter", "sweep.");
        if (!name.is_string()) throw ConfigError("field sweep.parameter must be a string");
        sp.parameter = name.get<std::string>();
        if (std::find(kSweepable.begin(), kSweepable.end(), sp.parameter) == kSweepable.end())
            throw ConfigError("field sweep.parameter must be one of nu1, mu1, gamma-all, sigma, tau");
        sp.from = require_number(s, "from", "sweep.");
        sp.to = require_number(s, "to", "sweep.");
        const auto& steps = require(s, "steps", "sweep.");
        if (!steps.is_number_integer() || steps.get<int>() < 1)
            throw ConfigError("field sweep.steps must be a positive integer");
        sp.steps = steps.get<int>();
        cfg.sweep = sp;
    }
    if (doc.contains("reference")) {
        const auto& r = doc.at("reference");
        reject_unknown(r, "reference.", {"pressure", "gammas"});
        cfg.reference.pressure = optional_number(r, "pressure", "reference.").value_or(1.0);
        if (r.contains("gammas")) cfg.reference.gammas = number_list(r.at("gammas"), "reference.gammas");
    }
    if (doc.contains("verify")) {
        const auto& v = doc.at("verify");
        reject_unknown(v, "verify.", {"tolerance_taylor", "tolerance_spline"});
        cfg.tolerance_taylor = optional_number(v, "tolerance_taylor", "verify.").value_or(cfg.tolerance_taylor);
        cfg.tolerance_spline = optional_number(v, "tolerance_spline", "verify.").value_or(cfg.tolerance_spline);
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config " + path + " is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

Problem with_parameter(const Problem& p, const std::string& name, double value) {
    Problem q = p;
    if (name == "nu1") q.mat1.nu = value;
    else if (name == "mu1") q.mat1.mu = value;
    else if (name == "gamma-all") q.st.g0_plus = q.st.g0_minus = q.st.g1_plus = q.st.g1_minus = value;
    else if (name == "sigma") q.far.sigma = value;
    else if (name == "tau") q.far.tau = value;
    else throw ConfigError("unknown sweep parameter " + name);
    return q;
}

RunResult run_solve(const RunConfig& cfg) {
    return guarded([&] {
        check_config(cfg);
        const Problem& p = cfg.problem;
        const auto warnings = validate(p);
        const auto s = solve(p, cfg.order);
        const auto res = residual(p, s);
        const auto tips = summarize(p, s);
        const double l = p.half_length;

        OutputDir out(cfg.outputs);
        std::string coef = "family,index,power,value\n";
        auto emit = [&](const char* fam, const std::vector<double>& c, int first, int sign) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                const int power = sign * (static_cast<int>(i) + first);
                coef += std::string(fam) + ',' + std::to_string(i) + ',' + std::to_string(power) + ',' +
                        format_number(c[i]) + '\n';
            }
        };
        emit("a1", s.a1, 0, 1);
        emit("a2", s.a2, 0, 1);
        emit("a3", s.a3, 1, -1);
        emit("b1", s.b1, 0, 1);
        emit("b2", s.b2, 0, 1);
        emit("b3", s.b3, 1, -1);
        out.write("coefficients.csv", coef);

        std::string shape = "x,u2_plus,u2_minus\n";
        for (double x : closed_grid(l, cfg.sample_count)) {
            const auto o = crack_opening(s, x);
            shape += csv_line({x, o.u2_plus, o.u2_minus});
        }
        out.write("crack_shape.csv", shape);

        std::string stress = "x,s12_plus,s12_minus,s22_plus,s22_minus\n";
        for (double x : open_grid(l, cfg.sample_count)) {
            const auto st = boundary_stresses(p, s, x);
            stress += csv_line({x, st.s12_plus, st.s12_minus, st.s22_plus, st.s22_minus});
        }
        out.write("face_stress.csv", stress);

        json sing{{"max_stress", maxima_json(tips.maxima)}};
        if (tips.right) {
            sing["right_tip"] = singularity_json(*tips.right);
            sing["left_tip"] = singularity_json(*tips.left);
        } else {
            sing["note"] = "singularity fits need nonzero g1_plus and g1_minus";
        }
        out.write("singularity.json", sing.dump(2) + '\n');

        json m = base_manifest("solve", cfg);
        m["condition_estimate"] = jnum(s.condition_estimate);
        m["solve_residual"] = jnum(s.solve_residual);
        m["residual"] = residual_json(res);
        m["warnings"] = warnings;
        return RunResult{ok, "solved", out.finish(m)};
    });
}

RunResult run_verify(const RunConfig& cfg, const std::optional<RunConfig>& spline_cfg) {
    return guarded([&] {
        check_config(cfg);
        const Problem& p = cfg.problem;
        const Problem& ps = spline_cfg ? spline_cfg->problem : p;
        validate(p);
        const int N = cfg.order;
        const auto t1 = solve(p, N);
        const auto t2 = solve(p, N + 20);
        const auto sp = solve_spline(ps, N);
        const auto xs = interior_points(p.half_length);
        const auto dt = compare_taylor(t1, t2, xs);
        const auto ds = compare(t1, sp, xs);
        const bool pass_t = dt.max_rel <= cfg.tolerance_taylor;
        const bool pass_s = ds.opening.max_rel <= cfg.tolerance_spline;

        OutputDir out(cfg.outputs);
        std::string curves =
            "x,taylor_u2_plus,taylor_u2_minus,taylor_fine_u2_plus,taylor_fine_u2_minus,spline_u2_plus,spline_u2_minus\n";
        for (double x : xs) {
            const auto a = crack_opening(t1, x), b = crack_opening(t2, x);
            const auto c = spline_opening(sp, x);
            curves += csv_line({x, a.u2_plus, a.u2_minus, b.u2_plus, b.u2_minus, c.u2_plus, c.u2_minus});
        }
        out.write("verify.csv", curves);

        auto disc = [](const Discrepancy& d) { return json{{"max_rel", jnum(d.max_rel)}, {"l2_rel", jnum(d.l2_rel)}}; };
        json rep{{"taylor_order", N},
                 {"taylor_fine_order", N + 20},
                 {"spline_half_count", N},
                 {"taylor_vs_taylor", disc(dt)},
                 {"taylor_vs_spline", {{"opening", disc(ds.opening)}, {"psi1", disc(ds.psi1)}, {"psi2", disc(ds.psi2)}}},
                 {"tolerance_taylor", cfg.tolerance_taylor},
                 {"tolerance_spline", cfg.tolerance_spline},
                 {"pass_taylor", pass_t},
                 {"pass_spline", pass_s},
                 {"condition_estimates",
                  {jnum(t1.condition_estimate), jnum(t2.condition_estimate), jnum(sp.condition_estimate)}}};
        out.write("verify.json", rep.dump(2) + '\n');
        json m = base_manifest("verify", cfg);
        if (spline_cfg) m["spline_config"] = spline_cfg->source;
        auto files = out.finish(m);

        std::ostringstream msg;
        msg << "taylor N=" << N << " vs N=" << N + 20 << ": " << format_number(dt.max_rel)
            << (pass_t ? " ok" : " EXCEEDS ") << (pass_t ? "" : format_number(cfg.tolerance_taylor))
            << "; taylor vs spline: " << format_number(ds.opening.max_rel) << (pass_s ? " ok" : " EXCEEDS ")
            << (pass_s ? "" : format_number(cfg.tolerance_spline));
        return RunResult{pass_t && pass_s ? ok : verification_failure, msg.str(), files};
    });
}

RunResult run_sweep(const RunConfig& cfg) {
    return guarded([&] {
        check_config(cfg);
        if (!cfg.sweep) throw ConfigError("missing field sweep");
        const auto& sw = *cfg.sweep;
        const auto values = sw.values();

        struct Row {
            double value = 0.0;
            double s22p = NAN, s22m = NAN, k1 = NAN, k2 = NAN;
            std::string status = "ok";
        };
        std::vector<std::future<Row>> jobs;
        for (double v : values) {
            jobs.push_back(std::async(std::launch::async, [&cfg, &sw, v] {
                Row r;
                r.value = v;
                try {
                    const Problem q = with_parameter(cfg.problem, sw.parameter, v);
                    const auto s = solve(q, cfg.order);
                    const auto t = summarize(q, s);
                    r.s22p = t.maxima.s22_plus.value;
                    r.s22m = t.maxima.s22_minus.value;
                    if (t.right) {
                        r.k1 = t.right->k1;
                        r.k2 = t.right->k2;
                    }
                } catch (const std::exception& e) {
                    r.status = e.what();
                    for (char& c : r.status)
                        if (c == ',' || c == '\n') c = ';';
                }
                return r;
            }));
        }
        std::string csv = "value,max_s22_plus,max_s22_minus,k1,k2,status\n";
        int failed = 0;
        for (auto& j : jobs) {
            const Row r = j.get();
            if (r.status != "ok") ++failed;
            std::string line = csv_line({r.value, r.s22p, r.s22m, r.k1, r.k2});
            line.pop_back();
            csv += line + ',' + r.status + '\n';
        }
        OutputDir out(cfg.outputs);
        out.write("sweep.csv", csv);
        json m = base_manifest("sweep", cfg);
        m["failed_steps"] = failed;
        auto files = out.finish(m);
        return RunResult{failed ? numerical_error : ok,
                         std::to_string(values.size() - failed) + " of " + std::to_string(values.size()) +
                             " sweep steps solved",
                         files};
    });
}

RunResult run_reference(const RunConfig& cfg) {
    return guarded([&] {
        check_config(cfg);
        const Problem& base = cfg.problem;
        const double T = cfg.reference.pressure;
        const double l = base.half_length;
        const auto eng = england_reference(base.mat1, base.mat2, T, l);
        const auto xs = closed_grid(l, cfg.sample_count);

        std::vector<double> gammas;
        for (double g : cfg.reference.gammas)
            if (g != 0.0) gammas.push_back(g);
        std::vector<TaylorSolution> sols;
        for (double g : gammas) {
            Problem q = base;
            q.st = {g, g, g, g, g, g};
            q.far = FarField{};
            q.load = CrackLoad{{}, {}, {-T}, {-T}};  // pressure T pushes the faces apart
            sols.push_back(solve(q, cfg.order));
        }

        std::string csv = "x,england_u2_plus,england_u2_minus";
        for (double g : gammas) csv += ",u2_plus_g" + format_number(g) + ",u2_minus_g" + format_number(g);
        csv += '\n';
        for (double x : xs) {
            std::vector<double> row{x, eng.u2_plus(x), eng.u2_minus(x)};
            for (const auto& s : sols) {
                const auto o = crack_opening(s, x);
                row.push_back(o.u2_plus);
                row.push_back(o.u2_minus);
            }
            csv += csv_line(row);
        }
        OutputDir out(cfg.outputs);
        out.write("reference.csv", csv);
        json m = base_manifest("reference", cfg);
        m["england"] = {{"alpha", jnum(eng.alpha_e)}, {"gamma", jnum(eng.gamma_e)}, {"pressure", T}};
        return RunResult{ok, "wrote " + std::to_string(sols.size() + 1) + " curves", out.finish(m)};
    });
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Interface crack with curvature-dependent surface tension"};
    app.require_subcommand(1);

    std::string config_path, out_dir, spline_config;
    std::optional<int> order, samples;
    std::optional<double> tol_t, tol_s;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "problem configuration (JSON)")->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--order", order, "Taylor order N");
        sub->add_option("--samples", samples, "points per output curve");
    };
    auto* solve_cmd = app.add_subcommand("solve", "solve with Taylor polynomials and write curves");
    auto* verify_cmd = app.add_subcommand("verify", "compare Taylor N, N+20 and spline N");
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter and tabulate maxima and k1, k2");
    auto* ref_cmd = app.add_subcommand("reference", "classical England curves next to surface-tension solutions");
    for (auto* s : {solve_cmd, verify_cmd, sweep_cmd, ref_cmd}) add_common(s);
    verify_cmd->add_option("--tolerance-taylor", tol_t, "Taylor N vs N+20 relative max tolerance");
    verify_cmd->add_option("--tolerance-spline", tol_s, "Taylor vs spline relative max tolerance");
    verify_cmd->add_option("--spline-config", spline_config, "separate configuration for the spline run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : config_error;
    }

    RunConfig cfg;
    std::optional<RunConfig> spline_cfg;
    try {
        cfg = load_config(config_path);
        if (!spline_config.empty()) spline_cfg = load_config(spline_config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return config_error;
    }
    if (!out_dir.empty()) cfg.outputs = out_dir;
    if (order) cfg.order = *order;
    if (samples) cfg.sample_count = *samples;
    if (tol_t) cfg.tolerance_taylor = *tol_t;
    if (tol_s) cfg.tolerance_spline = *tol_s;
    if (spline_cfg) spline_cfg->order = cfg.order;

    RunResult r;
    if (*solve_cmd) r = run_solve(cfg);
    else if (*verify_cmd) r = run_verify(cfg, spline_cfg);
    else if (*sweep_cmd) r = run_sweep(cfg);
    else r = run_reference(cfg);

    (r.exit_code == ok ? std::cout : std::cerr) << (r.exit_code == ok ? "" : "error: ") << r.message << '\n';
    for (const auto& f : r.files) std::cout << "  " << f << '\n';
    return r.exit_code;
}

}  // namespace ifcrack::cli
