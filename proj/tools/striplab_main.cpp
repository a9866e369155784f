// striplab: batch front-end for the strip/disc projection experiments.
// Configures a run from a key=value config file (every key can be overridden
// by a command-line flag of the same name), executes it, and writes
// machine-readable reports: summary.json, series.csv, pairs.csv.
// Exit codes: 0 all hard checks pass, 2 config error, 3 numerical failure.

#include "striplab/annihilators.hpp"
#include "striplab/atoms.hpp"
#include "striplab/disc.hpp"
#include "striplab/estimates.hpp"
#include "striplab/projector.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace striplab;

namespace {

struct ExperimentConfig {
    std::string experiment = "strip_iterate";
    // strip geometry
    double M = 3.0, pad = 2.0, alpha = 0.5;
    int nx = 241, ny = 65, n_theta = 256, N = 64;
    std::string interp = "biquintic";
    // disc geometry
    double eps = 0.1, delta_disc = 1e-3;
    int n_s = 96, n_psi = 256, disc_N = 127;
    // input
    std::string input = "";
    std::string input_file = "";
    // iteration
    int max_iter = 500;
    double stop_tol = 1e-8;
    // oracles
    std::uint64_t seed = 12345;
    std::uint64_t mc_samples = 1000000;
    // execution
    int threads = 0;
    std::string out_dir = ".";
};

InterpScheme parse_interp(const std::string& s) {
    if (s == "bicubic") return InterpScheme::Bicubic;
    if (s == "biquintic") return InterpScheme::Biquintic;
    if (s == "biseptic") return InterpScheme::Biseptic;
    throw CLI::ValidationError("interp", "unknown interpolation scheme '" + s + "'");
}

std::map<std::string, std::string> config_params(const ExperimentConfig& c) {
    std::map<std::string, std::string> p;
    p["experiment"] = c.experiment;
    p["M"] = format_double(c.M);
    p["pad"] = format_double(c.pad);
    p["alpha"] = format_double(c.alpha);
    p["nx"] = std::to_string(c.nx);
    p["ny"] = std::to_string(c.ny);
    p["n_theta"] = std::to_string(c.n_theta);
    p["N"] = std::to_string(c.N);
    p["interp"] = c.interp;
    p["eps"] = format_double(c.eps);
    p["n_s"] = std::to_string(c.n_s);
    p["n_psi"] = std::to_string(c.n_psi);
    p["disc_N"] = std::to_string(c.disc_N);
    p["delta_disc"] = format_double(c.delta_disc);
    p["input"] = c.input;
    p["input_file"] = c.input_file;
    p["max_iter"] = std::to_string(c.max_iter);
    p["stop_tol"] = format_double(c.stop_tol);
    p["seed"] = std::to_string(c.seed);
    p["mc_samples"] = std::to_string(c.mc_samples);
    p["threads"] = std::to_string(c.threads);
    return p;
}

GridFunction load_values_file(std::shared_ptr<const StripGrid> grid, const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open input_file: " + path);
    GridFunction f(grid);
    double x, y, re, im;
    std::size_t k = 0;
    while (is >> x >> y >> re >> im) {
        if (k >= grid->size()) throw std::runtime_error("input_file has more lines than grid nodes");
        cplx node = grid->node(k);
        if (std::abs(node.real() - x) > 1e-9 || std::abs(node.imag() - y) > 1e-9)
            throw std::runtime_error("input_file node " + std::to_string(k) +
                                     " does not match the grid (expected x=" +
                                     format_double(node.real()) + " y=" + format_double(node.imag()) + ")");
        f.values[(Eigen::Index)k] = cplx(re, im);
        ++k;
    }
    if (k != grid->size())
        throw std::runtime_error("input_file has " + std::to_string(k) + " lines, grid has " +
                                 std::to_string(grid->size()) + " nodes");
    return f;
}

std::string outpath(const ExperimentConfig& c, const char* name) {
    std::filesystem::create_directories(c.out_dir);
    return (std::filesystem::path(c.out_dir) / name).string();
}

int run_strip_iterate(const ExperimentConfig& cfg) {
    auto grid = build_strip_grid(cfg.M, cfg.pad, cfg.nx, cfg.ny, cfg.alpha);
    StripProjector op(grid, cfg.N, cfg.n_theta, parse_interp(cfg.interp));
    std::string id = cfg.input.empty() ? "mix_conj" : cfg.input;
    GridFunction f = cfg.input_file.empty()
                         ? GridFunction::sample(grid, battery_entry(id).eval)
                         : load_values_file(grid, cfg.input_file);
    IterateOptions io;
    io.max_iter = cfg.max_iter;
    io.stop_tol = cfg.stop_tol;
    auto res = iterate_to_bergman(op, f, io);
    auto atoms = sample_all(grid, holomorphic_atoms());
    auto defects = bergman_defect(f, res.limit, atoms);
    res.report.orthogonality_defects = defects.normalized;

    double atom_base = 0.0;
    for (const auto& a : atoms) atom_base = std::max(atom_base, cr_residual(a));
    double crL = cr_residual(res.limit);
    double maxdef = 0.0;
    for (double v : defects.normalized) maxdef = std::max(maxdef, v);
    // monotone norm decay within a small slack for the recorded asymmetry
    double mono_violation = 0.0;
    for (std::size_t i = 1; i < res.report.rows.size(); ++i)
        mono_violation = std::max(mono_violation, res.report.rows[i].norm -
                                                      res.report.rows[i - 1].norm);
    auto pc = parity_commutators(op, f);

    std::vector<Check> checks;
    checks.push_back({"converged", res.report.converged ? 1.0 : 0.0, 1.0, res.report.converged});
    checks.push_back({"monotone_norm_violation", mono_violation, 1e-6 * res.report.input_norm,
                      mono_violation <= 1e-6 * res.report.input_norm});
    checks.push_back({"max_bergman_defect", maxdef, 1e-4, maxdef <= 1e-4});
    checks.push_back({"cr_residual_ratio", crL / std::max(atom_base, 1e-300), 10.0,
                      crL <= 10.0 * atom_base});
    // informational, never asserted
    checks.push_back({"parity_commutator_point", pc.point_reflection, 0.0, true});
    checks.push_back({"parity_commutator_conj", pc.conjugation, 0.0, true});
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    int status = pass ? 0 : 3;
    emit_series_csv(outpath(cfg, "series.csv"), res.report);
    emit_summary_json(outpath(cfg, "summary.json"), "strip_iterate", config_params(cfg), checks,
                      &res.report, status);
    return status;
}

int run_strip_spectrum(const ExperimentConfig& cfg) {
    auto grid = build_strip_grid(cfg.M, cfg.pad, cfg.nx, cfg.ny, cfg.alpha);
    StripProjector op(grid, cfg.N, cfg.n_theta, parse_interp(cfg.interp));
    auto spec = spectrum_pi(op, 64);
    const auto& ev = spec.eigenvalues;
    double lam_max = ev[ev.size() - 1], lam_min = ev[0];
    double d = 1e-4;
    auto atoms = sample_all(grid, holomorphic_atoms());
    double atom_base = 0.0;
    for (const auto& a : atoms) atom_base = std::max(atom_base, cr_residual(a));
    double max_cr999 = 0.0;
    ConvergenceReport rep;
    rep.interp = interp_name(op.scheme());
    for (std::size_t i = 0; i < spec.top_vectors.size(); ++i) {
        double lam = ev[ev.size() - 1 - (Eigen::Index)i];
        rep.top_eigenvalues.push_back(lam);
        rep.top_cr_residuals.push_back(spec.top_cr_residuals[i]);
        if (lam >= 0.999) max_cr999 = std::max(max_cr999, spec.top_cr_residuals[i]);
    }
    std::vector<Check> checks;
    checks.push_back({"lambda_max_excess", lam_max - 1.0, d, lam_max <= 1.0 + d});
    checks.push_back({"lambda_min", lam_min, -1.0 - d, lam_min >= -1.0 - d});
    checks.push_back({"cr_residual_999_ratio", max_cr999 / std::max(atom_base, 1e-300), 10.0,
                      max_cr999 <= 10.0 * atom_base});
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    int status = pass ? 0 : 3;
    emit_summary_json(outpath(cfg, "summary.json"), "strip_spectrum", config_params(cfg), checks,
                      &rep, status);
    return status;
}

int run_coarea(const ExperimentConfig& cfg) {
    auto grid = build_strip_grid(cfg.M, cfg.pad, cfg.nx, cfg.ny, cfg.alpha);
    std::string id = cfg.input.empty() ? "gauss0" : cfg.input;
    auto entry = battery_entry(id);
    auto f = GridFunction::sample(grid, entry.eval);
    auto r1 = verify_coarea(f, entry.eval);
    auto grid2 = build_strip_grid(cfg.M, cfg.pad, 2 * cfg.nx - 1, 2 * cfg.ny, cfg.alpha);
    auto f2 = GridFunction::sample(grid2, entry.eval);
    auto r2 = verify_coarea(f2, entry.eval, 4 * cfg.nx, 8 * cfg.ny);
    double rel1 = r1.residual / std::max(std::abs(r1.lhs), 1e-300);
    double rel2 = r2.residual / std::max(std::abs(r2.lhs), 1e-300);
    std::vector<Check> checks;
    checks.push_back({"coarea_residual_rel", rel1, 1e-6, rel1 <= 1e-6});
    checks.push_back({"coarea_residual_refined", rel2, rel1 / 2 + 1e-14, rel2 <= rel1 / 2 + 1e-14});
    checks.push_back({"truncated_mass", r1.truncated_mass, 1e-6, r1.truncated_mass <= 1e-6});
    bool pass = checks[0].pass && checks[1].pass;
    int status = pass ? 0 : 3;
    ConvergenceReport rep;
    rep.truncated_mass = r1.truncated_mass;
    rep.truncation_warning = r1.truncated_mass > 1e-6;
    emit_summary_json(outpath(cfg, "summary.json"), "coarea", config_params(cfg), checks, &rep,
                      status);
    return status;
}

int run_annihilators(const ExperimentConfig& cfg) {
    if (std::abs(cfg.alpha - 0.5) > 1e-12)
        throw CLI::ValidationError("alpha", "annihilators experiment requires alpha = 1/2");
    auto grid = build_strip_grid(cfg.M, cfg.pad, cfg.nx, cfg.ny, cfg.alpha);
    auto atoms = holomorphic_atoms();
    auto specs = annihilator_battery();
    std::vector<PairRow> rows;
    double max_norm_pairing = 0.0;
    for (const auto& sp : specs) {
        GridFunction h = make_annihilator(sp, grid);
        double nh = strip_norm(h);
        for (const auto& at : atoms) {
            GridFunction f = GridFunction::sample(grid, at.eval);
            cplx v = annihilation_pairing(f, h);
            double nf = strip_norm(f);
            PairRow row;
            row.left = at.id;
            row.right = sp.id;
            row.modulus = std::abs(v);
            row.normalized = std::abs(v) / (nf * nh);
            rows.push_back(row);
            max_norm_pairing = std::max(max_norm_pairing, row.normalized);
        }
    }
    // witness of non-triviality on a non-holomorphic input
    double witness = 0.0;
    for (const auto& sp : specs) {
        GridFunction h = make_annihilator(sp, grid);
        GridFunction g = GridFunction::sample(grid, battery_entry("conj_gauss").eval);
        double v = std::abs(annihilation_pairing(g, h)) / (strip_norm(g) * strip_norm(h));
        PairRow row{std::string("conj_gauss"), sp.id, v * strip_norm(g) * strip_norm(h), v};
        rows.push_back(row);
        witness = std::max(witness, v);
    }
    std::vector<Check> checks;
    checks.push_back({"max_holomorphic_pairing", max_norm_pairing, 1e-5, max_norm_pairing <= 1e-5});
    checks.push_back({"nonholomorphic_witness", witness, 1e-2, witness >= 1e-2});
    bool pass = checks[0].pass && checks[1].pass;
    int status = pass ? 0 : 3;
    emit_pairs_csv(outpath(cfg, "pairs.csv"), rows);
    emit_summary_json(outpath(cfg, "summary.json"), "annihilators", config_params(cfg), checks,
                      nullptr, status);
    return status;
}

int run_estimates(const ExperimentConfig& cfg) {
    std::vector<double> ps = {1.5, 1.7, 2.0, 2.2, 4.0};
    std::vector<double> betas = {0.0, 0.2, 0.4};
    auto lattice = slope_lattice(ps, betas, 1e-10, 1e-4, 13);
    // CSV: columns p, beta, t, value
    {
        std::ofstream os(outpath(cfg, "series.csv"));
        os << "# striplab estimates v1; columns: p,beta,t,value\n";
        os << "p,beta,t,value\n";
        for (double p : ps)
            for (double b : betas)
                for (double t : t_ladder(1e-10, 1e-4, 13))
                    os << format_double(p) << ',' << format_double(b) << ',' << format_double(t)
                       << ',' << format_double(weighted_edge_integral(p, b, t)) << '\n';
    }
    std::vector<Check> checks;
    bool pass = true;
    for (const auto& sp : lattice) {
        char name[96];
        std::snprintf(name, sizeof(name), "slope_p%.1f_b%.1f", sp.p, sp.beta);
        double err = std::abs(sp.slope - sp.predicted);
        bool ok = err <= 0.05;
        bool sign_ok = (sp.predicted > 0) == (sp.slope > 0) || std::abs(sp.predicted) < 1e-9;
        checks.push_back({name, sp.slope, sp.predicted, ok && sign_ok});
        pass = pass && ok && sign_ok;
    }
    int status = pass ? 0 : 3;
    emit_summary_json(outpath(cfg, "summary.json"), "estimates", config_params(cfg), checks,
                      nullptr, status);
    return status;
}

int run_disc_iterate(const ExperimentConfig& cfg) {
    auto fam = std::make_shared<const DiscFamily>(cfg.eps, cfg.n_s, cfg.n_psi, cfg.delta_disc);
    DiscProjector op(fam, cfg.disc_N);
    std::string id = cfg.input.empty() ? "disc_conj" : cfg.input;
    auto f = DiscGridFunction::sample(fam, battery_entry(id).eval);
    auto res = iterate_disc(op, f, cfg.max_iter, cfg.stop_tol);
    // orthogonality defects against disc atoms
    std::vector<Check> checks;
    DiscGridFunction diff(fam);
    diff.values = f.values - res.limit.values;
    double nf = disc_norm_active(f);
    double maxdef = 0.0;
    for (const auto& e : disc_atoms()) {
        auto h = DiscGridFunction::sample(fam, e.eval);
        double v = std::abs(disc_inner(diff, h)) / (std::max(nf, 1e-300) * disc_norm(h));
        maxdef = std::max(maxdef, v);
    }
    double cr = disc_cr_residual(res.limit);
    double base = 0.0;
    for (const auto& e : disc_atoms()) {
        auto h = DiscGridFunction::sample(fam, e.eval);
        base = std::max(base, disc_cr_residual(h));
    }
    // d-omega Monte Carlo representation check on |1|^2 and |zeta|^2
    auto one = DiscGridFunction::sample(fam, [](cplx) { return cplx(1.0, 0.0); });
    auto zeta = DiscGridFunction::sample(fam, [](cplx z) { return z; });
    double grid_mass = disc_inner(one, one).real();
    double grid_z2 = disc_inner(zeta, zeta).real();
    double mc_mass = mc_boundary_integral([](cplx) { return 1.0; }, cfg.eps, cfg.mc_samples, cfg.seed);
    double mc_z2 =
        mc_boundary_integral([](cplx z) { return std::norm(z); }, cfg.eps, cfg.mc_samples, cfg.seed + 1);
    double mass_rel = std::abs(grid_mass - mc_mass) / mc_mass;
    double z2_rel = std::abs(grid_z2 - mc_z2) / mc_z2;

    checks.push_back({"max_orthogonality_defect", maxdef, 1e-3, maxdef <= 1e-3});
    checks.push_back({"cr_residual_ratio", cr / std::max(base, 1e-300), 10.0, cr <= 10.0 * base});
    checks.push_back({"domega_mass_rel", mass_rel, 1e-2, mass_rel <= 1e-2});
    checks.push_back({"domega_z2_rel", z2_rel, 1e-2, z2_rel <= 1e-2});
    res.report.orthogonality_defects.push_back(maxdef);
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    int status = pass ? 0 : 3;
    emit_series_csv(outpath(cfg, "series.csv"), res.report);
    emit_summary_json(outpath(cfg, "summary.json"), "disc_iterate", config_params(cfg), checks,
                      &res.report, status);
    return status;
}

int list_battery(bool as_json) {
    auto entries = full_battery();
    auto discs = disc_atoms();
    auto anns = annihilator_battery();
    if (as_json) {
        nlohmann::ordered_json j;
        j["schema"] = "striplab-battery/1";
        auto arr = nlohmann::ordered_json::array();
        for (const auto& e : entries)
            arr.push_back({{"id", e.id},
                           {"holomorphic", e.holomorphic},
                           {"decay", e.decay},
                           {"form", e.form},
                           {"domain", "strip"}});
        for (const auto& e : discs)
            arr.push_back({{"id", e.id},
                           {"holomorphic", e.holomorphic},
                           {"decay", e.decay},
                           {"form", e.form},
                           {"domain", "disc"}});
        j["functions"] = arr;
        auto ja = nlohmann::ordered_json::array();
        for (const auto& a : anns) ja.push_back({{"id", a.id}, {"k", a.k}, {"form", a.form}});
        j["annihilators"] = ja;
        std::cout << j.dump(2) << std::endl;
        return 0;
    }
    std::printf("%-16s %-6s %-12s %-6s %s\n", "id", "holo", "decay", "dom", "form");
    for (const auto& e : entries)
        std::printf("%-16s %-6s %-12s %-6s %s\n", e.id.c_str(), e.holomorphic ? "yes" : "no",
                    e.decay.c_str(), "strip", e.form.c_str());
    for (const auto& e : discs)
        std::printf("%-16s %-6s %-12s %-6s %s\n", e.id.c_str(), e.holomorphic ? "yes" : "no",
                    e.decay.c_str(), "disc", e.form.c_str());
    std::printf("-- annihilator specs --\n");
    for (const auto& a : anns) std::printf("%-16s k=%d  %s\n", a.id.c_str(), a.k, a.form.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"striplab: iterated averaged Szego projections on the strip and disc"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    CLI::App* run = app.add_subcommand("run", "run an experiment from a config");
    run->set_config("--config", "", "key=value config file; flags override keys of the same name");
    run->add_option("--experiment", cfg.experiment,
                    "strip_iterate|strip_spectrum|coarea|annihilators|estimates|disc_iterate");
    run->add_option("--M", cfg.M, "x half-length of the reported region");
    run->add_option("--pad", cfg.pad, "extra x margin (>= 2)");
    run->add_option("--alpha", cfg.alpha, "weight exponent in [1/2, 1)");
    run->add_option("--nx", cfg.nx);
    run->add_option("--ny", cfg.ny);
    run->add_option("--n_theta", cfg.n_theta);
    run->add_option("--N", cfg.N, "Hardy truncation degree");
    run->add_option("--interp", cfg.interp, "bicubic|biquintic|biseptic");
    run->add_option("--eps", cfg.eps, "disc family perturbation");
    run->add_option("--n_s", cfg.n_s);
    run->add_option("--n_psi", cfg.n_psi);
    run->add_option("--disc_N", cfg.disc_N);
    run->add_option("--delta_disc", cfg.delta_disc, "discriminant exclusion band");
    run->add_option("--input", cfg.input, "battery function id");
    run->add_option("--input_file", cfg.input_file, "sampled values file: x y re im per line");
    run->add_option("--max_iter", cfg.max_iter);
    run->add_option("--stop_tol", cfg.stop_tol);
    run->add_option("--seed", cfg.seed, "Monte Carlo seed (logged)");
    run->add_option("--mc_samples", cfg.mc_samples);
    run->add_option("--threads", cfg.threads, "worker pool size (0 = hardware)");
    run->add_option("--out_dir", cfg.out_dir);

    bool battery_json = false;
    CLI::App* lb = app.add_subcommand("list-battery", "catalog of built-in test functions");
    lb->add_flag("--json", battery_json, "emit as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (lb->parsed()) return list_battery(battery_json);

    try {
        set_worker_threads(cfg.threads);
        if (cfg.experiment == "strip_iterate") return run_strip_iterate(cfg);
        if (cfg.experiment == "strip_spectrum") return run_strip_spectrum(cfg);
        if (cfg.experiment == "coarea") return run_coarea(cfg);
        if (cfg.experiment == "annihilators") return run_annihilators(cfg);
        if (cfg.experiment == "estimates") return run_estimates(cfg);
        if (cfg.experiment == "disc_iterate") return run_disc_iterate(cfg);
        std::cerr << "unknown experiment '" << cfg.experiment << "'\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
