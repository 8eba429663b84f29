#include "ellpert/cli.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "ellpert/io.hpp"
#include "ellpert/validation/fd_solve.hpp"
#include "ellpert/validation/holder.hpp"
#include "ellpert/validation/identities.hpp"
#include "ellpert/validation/opnorm.hpp"

namespace ellpert::cli {

using nlohmann::json;

namespace {

cplx read_complex(const json& v, const std::string& what) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw ConfigError(what + ": complex numbers are written as [re, im]");
}

std::vector<cplx> read_complex_list(const json& v, const std::string& what) {
    if (!v.is_array()) throw ConfigError(what + " must be a list of [re, im] pairs");
    std::vector<cplx> out;
    for (const json& e : v) out.push_back(read_complex(e, what));
    return out;
}

template <class T>
T get_or(const json& obj, const char* key, T fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(where + "." + key + " has the wrong type");
    }
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& where) {
    const std::set<std::string> allowed(known.begin(), known.end());
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

BoundarySource parse_boundary(const json& b) {
    if (!b.is_object() || b.size() != 1) {
        throw ConfigError("boundary must name exactly one source: fourier, holder or exact");
    }
    const auto& [kind, body] = *b.items().begin();
    if (kind == "fourier") {
        if (!body.is_object()) throw ConfigError("boundary.fourier maps mode numbers to [re, im]");
        FourierSource src;
        for (const auto& [key, value] : body.items()) {
            int k = 0;
            try {
                std::size_t used = 0;
                k = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ConfigError("boundary.fourier key '" + key + "' is not an integer mode");
            }
            src.modes[k] = read_complex(value, "boundary.fourier");
        }
        return src;
    }
    if (kind == "holder") {
        reject_unknown(body, {"alpha", "modes", "seed"}, "boundary.holder");
        HolderSource src;
        src.alpha = get_or(body, "alpha", src.alpha, "boundary.holder");
        src.modes = get_or(body, "modes", src.modes, "boundary.holder");
        src.seed = get_or(body, "seed", src.seed, "boundary.holder");
        if (!(src.alpha > 0.0 && src.alpha < 1.0)) throw ConfigError("boundary.holder.alpha must lie in (0, 1)");
        if (src.modes < 1) throw ConfigError("boundary.holder.modes must be positive");
        return src;
    }
    if (kind == "exact") {
        reject_unknown(body, {"family", "poly"}, "boundary.exact");
        ExactSource src;
        const std::string family = get_or<std::string>(body, "family", "LAME", "boundary.exact");
        if (family == "LAME") {
            src.family = validation::ExactFamily::LAME;
        } else if (family == "SKEW") {
            src.family = validation::ExactFamily::SKEW;
        } else {
            throw ConfigError("boundary.exact.family must be LAME or SKEW");
        }
        if (!body.contains("poly")) throw ConfigError("boundary.exact.poly is required");
        src.poly = read_complex_list(body.at("poly"), "boundary.exact.poly");
        return src;
    }
    throw ConfigError("unknown boundary source '" + kind + "'");
}

Command parse_command(const std::string& name) {
    if (name == "solve") return Command::Solve;
    if (name == "validate-ops") return Command::ValidateOps;
    if (name == "opnorm") return Command::Opnorm;
    if (name == "compare-fd") return Command::CompareFd;
    throw ConfigError("unknown command '" + name + "'");
}

std::string command_name(Command c) {
    switch (c) {
        case Command::Solve: return "solve";
        case Command::ValidateOps: return "validate-ops";
        case Command::Opnorm: return "opnorm";
        case Command::CompareFd: return "compare-fd";
    }
    return "?";
}

// Everything that can be rejected before doing any work.
struct Prepared {
    CanonicalParams params;
    ConformalMapSeries map = ConformalMapSeries::identity();
    GridPtr grid;
    std::optional<BoundaryFunction> H;
    std::optional<validation::Bipoly> exact;
};

Prepared prepare(const RunConfig& cfg) {
    Prepared p;
    try {
        p.params = canonical_params(cfg.tau, cfg.sigma);
        cfg.solver.validate();
        p.grid = make_grid(cfg.solver.max_mode, cfg.solver.radial_count);
        p.map = ConformalMapSeries(cfg.map);
        require_univalent(p.map);
        if (cfg.fd_n < 32) throw std::invalid_argument("fd.n must be at least 32");
        if (cfg.boundary) {
            if (const auto* f = std::get_if<FourierSource>(&*cfg.boundary)) {
                p.H = BoundaryFunction::from_modes(f->modes);
            } else if (const auto* h = std::get_if<HolderSource>(&*cfg.boundary)) {
                p.H = validation::holder_boundary(h->alpha, h->modes, h->seed);
            } else {
                const auto& e = std::get<ExactSource>(*cfg.boundary);
                p.exact = validation::exact_polynomial({e.family, e.poly, p.params});
                p.H = validation::trace(*p.exact);
            }
            if (p.H->max_mode > p.grid->max_mode()) {
                throw std::invalid_argument("boundary data has modes up to " + std::to_string(p.H->max_mode) +
                                            " but grid.max_mode is " + std::to_string(p.grid->max_mode()));
            }
        } else if (cfg.command == Command::Solve || cfg.command == Command::CompareFd) {
            throw std::invalid_argument(command_name(cfg.command) + " needs a boundary source");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const std::logic_error& e) {
        throw ConfigError(e.what());
    }
    return p;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) throw ConfigError("cannot write " + path.string());
}

template <class Writer>
void write_with(const std::filesystem::path& path, Writer&& writer) {
    std::ostringstream buf;
    writer(buf);
    write_text(path, buf.str());
}

void write_json(const std::filesystem::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace

int exit_status(StopReason reason) { return reason == StopReason::Diverging ? kExitDiverging : kExitOk; }

namespace {

int run_solve(const RunConfig& cfg, const Prepared& p, std::ostream& log, json& summary) {
    const Solution sol = solve_series(p.params, *p.H, p.map, cfg.solver);
    summary.update(io::summary_json(sol.report));
    const int status = exit_status(sol.report.stop_reason);
    summary["status"] = status == kExitDiverging ? "diverging" : "ok";
    write_with(cfg.output_dir / "solution.csv", [&](std::ostream& o) { io::write_solution_csv(o, sol); });
    write_with(cfg.output_dir / "report.csv", [&](std::ostream& o) { io::write_report_csv(o, sol.report); });
    write_with(cfg.output_dir / "field.csv", [&](std::ostream& o) { io::write_field_csv(o, sol.field); });
    log << "solve: " << to_string(sol.report.stop_reason) << " after " << sol.report.terms_used()
        << " terms, boundary error " << sol.report.boundary_error << "\n";
    for (const std::string& w : sol.report.warnings) log << "warning: " << w << "\n";
    return status;
}

int run_validate(const RunConfig& cfg, const Prepared& p, std::ostream& log, json& summary) {
    validation::IdentitySuiteOptions opts;
    opts.points = cfg.validate_points;
    opts.seed = cfg.validate_seed;
    const auto checks = validation::run_identity_suite(p.grid, opts);
    json out = json::object();
    json list = json::array();
    bool all = true;
    for (const auto& c : checks) {
        list.push_back({{"name", c.name}, {"fast_error", c.fast_error}, {"oracle_error", c.oracle_error},
                        {"pass", c.pass}});
        log << (c.pass ? "PASS " : "FAIL ") << c.name << " fast " << c.fast_error << " oracle "
            << c.oracle_error << "\n";
        all = all && c.pass;
    }
    out["checks"] = list;
    out["fast_tol"] = opts.fast_tol;
    out["oracle_tol"] = opts.oracle_tol;
    out["all_pass"] = all;
    write_json(cfg.output_dir / "validate.json", out);
    summary["status"] = all ? "ok" : "failed";
    summary["all_pass"] = all;
    return all ? kExitOk : kExitFailure;
}

int run_opnorm(const RunConfig& cfg, const Prepared& p, std::ostream& log, json& summary) {
    json list = json::array();
    for (KernelId k : cfg.opnorm.kernels) {
        for (double pe : cfg.opnorm.p_values) {
            const auto est = validation::opnorm_estimate(k, pe, p.grid, cfg.opnorm.trials, cfg.opnorm.seed);
            list.push_back({{"kernel", to_string(k)}, {"p", pe}, {"value", est.value},
                            {"lower_bound", est.lower_bound}, {"iterations", est.iterations}});
            log << to_string(k) << " p=" << pe << (est.lower_bound ? " >= " : " ~ ") << est.value << "\n";
        }
    }
    write_json(cfg.output_dir / "estimates.json", json{{"estimates", list}});
    summary["status"] = "ok";
    return kExitOk;
}

int run_compare(const RunConfig& cfg, const Prepared& p, std::ostream& log, json& summary) {
    const Solution sol = solve_series(p.params, *p.H, p.map, cfg.solver);
    summary.update(io::summary_json(sol.report));
    if (exit_status(sol.report.stop_reason) == kExitDiverging) {
        summary["status"] = "diverging";
        return kExitDiverging;
    }
    const validation::CartesianField fd = validation::fd_solve(p.params, p.map, *p.H, cfg.fd_n);
    const DiskField& S = sol.field;
    const auto d = validation::compare(fd, [&](cplx z) { return evaluate(S, std::abs(z), std::arg(z)); });
    write_with(cfg.output_dir / "fd.csv", [&](std::ostream& o) { io::write_cartesian_csv(o, fd); });
    write_json(cfg.output_dir / "compare.json",
               json{{"n", cfg.fd_n}, {"max", d.max}, {"mean", d.mean}, {"count", d.count},
                    {"stop_reason", to_string(sol.report.stop_reason)}});
    log << "compare-fd: max " << d.max << " mean " << d.mean << " over " << d.count << " nodes\n";
    summary["status"] = "ok";
    return kExitOk;
}

}  // namespace

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
    reject_unknown(doc,
                   {"command", "tau", "sigma", "boundary", "map", "grid", "solver", "output_dir", "opnorm", "fd",
                    "validate"},
                   "configuration");
    RunConfig cfg;
    if (!doc.contains("command")) throw ConfigError("configuration needs a command");
    cfg.command = parse_command(get_or<std::string>(doc, "command", "", "configuration"));
    cfg.tau = get_or(doc, "tau", 0.0, "configuration");
    cfg.sigma = get_or(doc, "sigma", 0.0, "configuration");
    if (doc.contains("boundary")) cfg.boundary = parse_boundary(doc.at("boundary"));
    if (doc.contains("map")) cfg.map = read_complex_list(doc.at("map"), "map");
    if (doc.contains("grid")) {
        const json& g = doc.at("grid");
        reject_unknown(g, {"max_mode", "radial_count"}, "grid");
        cfg.solver.max_mode = get_or(g, "max_mode", cfg.solver.max_mode, "grid");
        cfg.solver.radial_count = get_or(g, "radial_count", cfg.solver.radial_count, "grid");
    }
    if (doc.contains("solver")) {
        const json& s = doc.at("solver");
        reject_unknown(s, {"max_terms", "tail_tol", "p_exponent"}, "solver");
        cfg.solver.max_terms = get_or(s, "max_terms", cfg.solver.max_terms, "solver");
        cfg.solver.tail_tol = get_or(s, "tail_tol", cfg.solver.tail_tol, "solver");
        cfg.solver.p_exponent = get_or(s, "p_exponent", cfg.solver.p_exponent, "solver");
    }
    cfg.output_dir = get_or<std::string>(doc, "output_dir", ".", "configuration");
    if (doc.contains("opnorm")) {
        const json& o = doc.at("opnorm");
        reject_unknown(o, {"kernels", "p", "trials", "seed"}, "opnorm");
        if (o.contains("kernels")) {
            cfg.opnorm.kernels.clear();
            for (const json& k : o.at("kernels")) {
                try {
                    cfg.opnorm.kernels.push_back(kernel_from_string(k.get<std::string>()));
                } catch (const std::exception&) {
                    throw ConfigError("opnorm.kernels entries must be GREEN_K, BEURLING_KD or KDBAR");
                }
            }
        }
        cfg.opnorm.p_values = get_or(o, "p", cfg.opnorm.p_values, "opnorm");
        cfg.opnorm.trials = get_or(o, "trials", cfg.opnorm.trials, "opnorm");
        cfg.opnorm.seed = get_or(o, "seed", cfg.opnorm.seed, "opnorm");
        for (double pe : cfg.opnorm.p_values) {
            if (!(pe > 1.0) || std::isinf(pe)) throw ConfigError("opnorm.p values must lie in (1, inf)");
        }
        if (cfg.opnorm.trials < 1) throw ConfigError("opnorm.trials must be at least 1");
    }
    if (doc.contains("fd")) {
        reject_unknown(doc.at("fd"), {"n"}, "fd");
        cfg.fd_n = get_or(doc.at("fd"), "n", cfg.fd_n, "fd");
    }
    if (doc.contains("validate")) {
        const json& v = doc.at("validate");
        reject_unknown(v, {"points", "seed"}, "validate");
        cfg.validate_points = get_or(v, "points", cfg.validate_points, "validate");
        cfg.validate_seed = get_or(v, "seed", cfg.validate_seed, "validate");
        if (cfg.validate_points < 1) throw ConfigError("validate.points must be at least 1");
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read configuration " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("configuration " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

int run(const RunConfig& config, std::ostream& log, std::ostream& err) {
    Prepared p;
    try {
        p = prepare(config);
        std::filesystem::create_directories(config.output_dir);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "cannot create output directory: " << e.what() << "\n";
        return kExitConfig;
    }

    json summary{{"command", command_name(config.command)}};
    int status = kExitOk;
    try {
        switch (config.command) {
            case Command::Solve: status = run_solve(config, p, log, summary); break;
            case Command::ValidateOps: status = run_validate(config, p, log, summary); break;
            case Command::Opnorm: status = run_opnorm(config, p, log, summary); break;
            case Command::CompareFd: status = run_compare(config, p, log, summary); break;
        }
    } catch (const ConfigError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        summary["status"] = "error";
        summary["error"] = e.what();
        status = kExitFailure;
    }
    try {
        write_json(config.output_dir / "summary.json", summary);
    } catch (const ConfigError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitConfig;
    }
    return status;
}

}  // namespace ellpert::cli
