// vmkdv: derive-flow | lax | check-zcr | soliton | breather | backlund-check | verify-all
//
// Exit codes: 0 all requested verifications pass, 1 a verification failed,
// 2 configuration or I/O error (machine-readable JSON on stderr).

#include "vmkdv/io.hpp"
#include "vmkdv/verify.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

namespace {

using vmkdv::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitConfigError = 2;

void write_text(const std::string& path, const std::string& content) {
    std::ofstream os(path);
    if (!os) throw vmkdv::ConfigError("cannot open output file: " + path);
    os << content;
    if (!os) throw vmkdv::ConfigError("failed writing: " + path);
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
    if (out_path)
        write_text(*out_path, content);
    else
        std::cout << content;
}

struct GridFlags {
    double x0 = -15.0;
    double x1 = 15.0;
    int nx = 3001;

    void attach(CLI::App* cmd) {
        cmd->add_option("--x0", x0, "left grid bound");
        cmd->add_option("--x1", x1, "right grid bound");
        cmd->add_option("--nx", nx, "grid point count");
    }
    vmkdv::Grid grid() const {
        vmkdv::Grid g{x0, x1, nx};
        g.validate();
        return g;
    }
};

Json load_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw vmkdv::ConfigError("cannot open params file: " + path);
    try {
        return Json::parse(is);
    } catch (const nlohmann::json::parse_error& e) {
        throw vmkdv::ConfigError("params file " + path + ": " + e.what());
    }
}

std::string report_lines(const std::vector<vmkdv::VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports)
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  residual "
           << vmkdv::io::format_double(r.max_residual) << " (tol "
           << vmkdv::io::format_double(r.tolerance) << ")\n";
    return os.str();
}

bool all_pass(const std::vector<vmkdv::VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

void write_reports_json(const std::string& path, const std::vector<vmkdv::VerificationReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(vmkdv::io::to_json(r));
    write_text(path, arr.dump(2) + "\n");
}

// Applies "times" from a params file, then flag overrides (flags win).
vmkdv::TimeVector resolve_times(const std::optional<Json>& params, double t3,
                                std::optional<double> t5, bool t3_set) {
    vmkdv::TimeVector times;
    if (params && params->contains("times")) times = vmkdv::io::times_from_json((*params)["times"]);
    if (t3_set || times.entries().find(1) == times.entries().end()) times.set(1, t3);
    if (t5) times.set(2, *t5);
    return times;
}

int run_derive_flow(int n, const std::string& format, const std::optional<std::string>& out) {
    vmkdv::FlowTable flows(std::max(4, n));
    const vmkdv::VectorPoly& flow = flows.flow(n);
    const std::string time_name = "t" + std::to_string(2 * n + 1);
    if (format == "json") {
        Json j;
        j["n"] = n;
        j["time"] = time_name;
        j["flow"] = to_string(flow);
        j["weight"] = homogeneous_weight(flow).value_or(-1);
        emit(out, j.dump(2) + "\n");
    } else {
        emit(out, "u_" + time_name + " = " + to_string(flow) + "\n");
    }
    return kExitOk;
}

int run_lax(int n, const std::string& format, const std::optional<std::string>& out) {
    vmkdv::FlowTable flows(std::max(4, n));
    const vmkdv::LaxMatrix& v = flows.lax_v(n);
    if (format == "json") {
        Json j;
        j["name"] = n == 0 ? "U(lambda)" : "V_" + std::to_string(2 * n + 1) + "(lambda)";
        j["degree"] = v.degree();
        j["coefficients"] = vmkdv::io::lax_to_json(v);
        emit(out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << (n == 0 ? "U(lambda)" : "V_" + std::to_string(2 * n + 1) + "(lambda)") << "\n";
        for (auto it = v.coeffs().rbegin(); it != v.coeffs().rend(); ++it) {
            os << "lambda^" << it->first << ":\n";
            os << "  a  = " << to_string(it->second.a) << "\n";
            os << "  v1 = " << to_string(it->second.v1) << "\n";
            os << "  v2 = " << to_string(it->second.v2) << "\n";
            os << "  W  = " << to_string(it->second.w) << "\n";
        }
        emit(out, os.str());
    }
    return kExitOk;
}

int run_check_zcr(int n, const std::optional<std::string>& out) {
    vmkdv::FlowTable flows(std::max(4, n));
    const vmkdv::LaxMatrix residual = vmkdv::zero_curvature_residual(flows, n);
    Json j;
    j["n"] = n;
    j["residual"] = residual.is_zero() ? "exact zero" : "nonzero";
    if (!residual.is_zero()) {
        Json degrees = Json::array();
        for (const auto& [d, c] : residual.coeffs()) degrees.push_back(d);
        j["nonzero_degrees"] = degrees;
        j["coefficients"] = vmkdv::io::lax_to_json(residual);
    }
    emit(out, j.dump(2) + "\n");
    return residual.is_zero() ? kExitOk : kExitVerificationFailed;
}

int run_soliton(const vmkdv::SolitonParams& params, const vmkdv::TimeVector& times,
                const vmkdv::Grid& grid, const std::string& format, const std::string& out_dir) {
    vmkdv::SolitonSampler sampler(params, times);
    const vmkdv::SolutionField field = sample_solution(sampler, grid);

    vmkdv::FlowTable flows(4);
    std::vector<vmkdv::VerificationReport> reports;
    reports.push_back(vmkdv::flow_residual(sampler, grid, flows, 1, 1e-6));
    if (times.entries().count(2)) reports.push_back(vmkdv::flow_residual(sampler, grid, flows, 2, 1e-5));

    std::filesystem::create_directories(out_dir);
    const double t3 = times.entries().count(1) ? times.entries().at(1) : 0.0;
    if (format == "csv") {
        std::ofstream os(out_dir + "/soliton.csv");
        vmkdv::io::write_field_csv(os, field, t3);
    } else {
        Json j;
        j["params"]["mu"] = params.mu;
        j["params"]["c0"] = params.c0;
        j["params"]["times"] = vmkdv::io::times_to_json(times);
        Json rows = Json::array();
        for (int i = 0; i < grid.nx; ++i) {
            Json row = Json::array();
            for (int c = 0; c < field.components(); ++c) row.push_back(field.samples(i, c));
            rows.push_back(row);
        }
        j["field"] = rows;
        write_text(out_dir + "/soliton.json", j.dump(2) + "\n");
    }
    write_reports_json(out_dir + "/soliton_report.json", reports);
    std::cout << report_lines(reports);
    return all_pass(reports) ? kExitOk : kExitVerificationFailed;
}

int run_breather(const vmkdv::BreatherParams& params, const vmkdv::TimeVector& times,
                 const vmkdv::Grid& grid, const std::string& format, const std::string& out_dir) {
    const int n = params.components();
    vmkdv::SolutionField field;
    field.grid = grid;
    field.provenance = params.s == 1 ? "rank1_breather" : "breather_dress";
    field.samples = Eigen::MatrixXd(grid.nx, n);

    double rank_consistency = 0.0;
    for (int i = 0; i < grid.nx; ++i) {
        const vmkdv::TimeVector here = times.with_x(grid.x(i));
        const Eigen::VectorXd value =
            params.s == 1 ? vmkdv::rank1_breather(params, here) : vmkdv::breather_dress(params, here);
        field.samples.row(i) = value.transpose();
        if (params.s == 1 && i % 30 == 0) {
            const Eigen::VectorXd alt = vmkdv::breather_dress(params, here);
            rank_consistency = std::max(rank_consistency, (value - alt).cwiseAbs().maxCoeff());
        }
    }

    std::vector<vmkdv::VerificationReport> reports;
    if (params.s == 1)
        reports.push_back(vmkdv::VerificationReport::make("rank-s determinant vs rank-1 closed form",
                                                          rank_consistency, 1e-10));
    const auto builder = [&](vmkdv::Complex lambda) {
        return vmkdv::breather_darboux(params, times, lambda);
    };
    reports.push_back(vmkdv::matrix_identity_check(
        builder,
        {vmkdv::MatrixRelation::orthogonality, vmkdv::MatrixRelation::conjugation,
         vmkdv::MatrixRelation::parity},
        {{0.9, 0.4}, {-1.3, 0.8}, {0.25, -1.1}, {2.2, 0.15}, {-0.6, -0.9}}, 1e-10,
        "breather Darboux relations"));

    std::filesystem::create_directories(out_dir);
    const double t3 = times.entries().count(1) ? times.entries().at(1) : 0.0;
    if (format == "csv") {
        std::ofstream os(out_dir + "/breather.csv");
        vmkdv::io::write_field_csv(os, field, t3);
    }
    write_reports_json(out_dir + "/breather_report.json", reports);
    std::cout << report_lines(reports);
    return all_pass(reports) ? kExitOk : kExitVerificationFailed;
}

int run_backlund(const vmkdv::SolitonParams& params, const vmkdv::TimeVector& times,
                 const vmkdv::Grid& grid, const std::string& out_dir) {
    const vmkdv::SolitonSolution sol(params, times);
    const int n = params.components();
    std::vector<Eigen::VectorXd> u, ux, ut, utx;
    for (int i = 0; i < grid.nx; ++i) {
        const auto jet = sol.jet(grid.x(i), 1);
        Eigen::VectorXd v(n), vx(n);
        for (int j = 0; j < n; ++j) {
            v(j) = static_cast<double>(jet[0][static_cast<std::size_t>(j)]);
            vx(j) = static_cast<double>(jet[1][static_cast<std::size_t>(j)]);
        }
        u.push_back(Eigen::VectorXd::Zero(n));
        ux.push_back(Eigen::VectorXd::Zero(n));
        ut.push_back(v);
        utx.push_back(vx);
    }
    const vmkdv::BacklundReport br = vmkdv::backlund_residual(u, ux, ut, utx, params.mu);
    auto report = vmkdv::VerificationReport::make("Backlund residual (vacuum, one-soliton)",
                                                  br.max(), 1e-10);
    report.metadata["ode_residual"] = vmkdv::io::format_double(br.ode_residual);
    report.metadata["constraint_deviation"] = vmkdv::io::format_double(br.constraint_deviation);

    std::filesystem::create_directories(out_dir);
    write_reports_json(out_dir + "/backlund_report.json", {report});
    std::cout << report_lines({report});
    return report.pass ? kExitOk : kExitVerificationFailed;
}

int run_verify_all(bool quick, unsigned seed, const vmkdv::Grid& grid,
                   const std::optional<std::string>& out_dir) {
    vmkdv::verify::Options options;
    options.quick = quick;
    options.seed = seed;
    options.grid = grid;
    vmkdv::FlowTable flows(4);
    const auto criteria = vmkdv::verify::run_acceptance(flows, options);

    bool ok = true;
    for (const auto& cr : criteria) {
        const bool pass = cr.pass();
        ok = ok && pass;
        std::cout << "criterion " << cr.number << ": " << (pass ? "PASS" : "FAIL") << "  "
                  << cr.title << "\n";
        if (!pass)
            for (const auto& c : cr.checks)
                if (!c.pass)
                    std::cout << "    FAIL " << c.name << "  residual "
                              << vmkdv::io::format_double(c.max_residual) << " tol "
                              << vmkdv::io::format_double(c.tolerance) << "\n";
    }
    std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";

    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        Json arr = Json::array();
        for (const auto& cr : criteria) arr.push_back(vmkdv::io::to_json(cr));
        write_text(*out_dir + "/verify_all.json", arr.dump(2) + "\n");
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vector mKdV hierarchy workbench: exact flows, Lax pairs, and "
                 "closed-form solution verification"};
    app.require_subcommand(1);

    // derive-flow
    auto* derive = app.add_subcommand("derive-flow", "print u_{t_{2n+1}} = R^n u_1");
    int derive_n = 1;
    std::string derive_format = "text";
    std::optional<std::string> derive_out;
    derive->add_option("--n", derive_n, "flow index (1 -> t3)")->check(CLI::Range(0, 6));
    derive->add_option("--format", derive_format)->check(CLI::IsMember({"text", "json"}));
    derive->add_option("--out", derive_out, "write to file instead of stdout");

    // lax
    auto* lax = app.add_subcommand("lax", "print V_{2n+1}(lambda) blocks (n=0 gives U)");
    int lax_n = 1;
    std::string lax_format = "json";
    std::optional<std::string> lax_out;
    lax->add_option("--n", lax_n)->check(CLI::Range(0, 6));
    lax->add_option("--format", lax_format)->check(CLI::IsMember({"text", "json"}));
    lax->add_option("--out", lax_out);

    // check-zcr
    auto* zcr = app.add_subcommand("check-zcr", "verify the zero-curvature identity exactly");
    int zcr_n = 1;
    std::optional<std::string> zcr_out;
    zcr->add_option("--n", zcr_n)->check(CLI::Range(1, 6));
    zcr->add_option("--out", zcr_out);

    // common solution options
    const auto add_solution_flags = [](CLI::App* cmd, GridFlags& grid, std::string& params_path,
                                       double& t3, bool& t3_set, std::optional<double>& t5,
                                       std::string& format, std::string& out_dir) {
        grid.attach(cmd);
        cmd->add_option("--params", params_path, "JSON parameter file");
        auto* t3_opt = cmd->add_option("--t3", t3, "value of t3");
        cmd->parse_complete_callback([&t3_set, t3_opt]() { t3_set = t3_opt->count() > 0; });
        cmd->add_option("--t5", t5, "value of t5 (activates the second flow)");
        cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_dir, "output directory");
    };

    // soliton
    auto* soliton = app.add_subcommand("soliton", "sample the one-soliton and verify it");
    GridFlags soliton_grid;
    std::string soliton_params_path, soliton_format = "csv", soliton_out = ".";
    double soliton_t3 = 0.0;
    bool soliton_t3_set = false;
    std::optional<double> soliton_t5;
    double soliton_mu = 1.0, soliton_c0 = 0.0;
    std::vector<double> soliton_c;
    soliton->add_option("--mu", soliton_mu, "pole parameter mu > 0");
    soliton->add_option("--c0", soliton_c0);
    soliton->add_option("--c", soliton_c, "unit-sphere vector c (comma separated)")->delimiter(',');
    add_solution_flags(soliton, soliton_grid, soliton_params_path, soliton_t3, soliton_t3_set,
                       soliton_t5, soliton_format, soliton_out);

    // breather
    auto* breather = app.add_subcommand("breather", "sample a breather and verify it");
    GridFlags breather_grid;
    std::string breather_params_path, breather_format = "csv", breather_out = ".";
    double breather_t3 = 0.0;
    bool breather_t3_set = false;
    std::optional<double> breather_t5;
    add_solution_flags(breather, breather_grid, breather_params_path, breather_t3, breather_t3_set,
                       breather_t5, breather_format, breather_out);

    // backlund-check
    auto* backlund = app.add_subcommand("backlund-check",
                                        "check the Backlund relations on (0, one-soliton)");
    GridFlags backlund_grid;
    backlund_grid.x0 = -8.0;
    backlund_grid.x1 = 8.0;
    backlund_grid.nx = 401;
    std::string backlund_params_path, backlund_out = ".";
    double backlund_mu = 1.0, backlund_c0 = 0.0, backlund_t3 = 0.0;
    bool backlund_t3_set = false;
    std::vector<double> backlund_c;
    backlund->add_option("--mu", backlund_mu);
    backlund->add_option("--c0", backlund_c0);
    backlund->add_option("--c", backlund_c)->delimiter(',');
    backlund->add_option("--params", backlund_params_path);
    auto* bk_t3 = backlund->add_option("--t3", backlund_t3);
    backlund->parse_complete_callback([&backlund_t3_set, bk_t3]() { backlund_t3_set = bk_t3->count() > 0; });
    backlund_grid.attach(backlund);
    backlund->add_option("--out", backlund_out);

    // verify-all
    auto* verify_all = app.add_subcommand("verify-all", "run the full acceptance suite");
    bool quick = false;
    unsigned seed = 20240811;
    GridFlags verify_grid;
    std::optional<std::string> verify_out;
    verify_all->add_flag("--quick", quick, "skip the n=3 symbolic zero-curvature check");
    verify_all->add_option("--seed", seed, "seed for randomized checks");
    verify_grid.attach(verify_all);
    verify_all->add_option("--out", verify_out, "directory for verify_all.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << vmkdv::io::error_json("cli", e.what()).dump() << "\n";
        return kExitConfigError;
    }

    try {
        if (derive->parsed()) return run_derive_flow(derive_n, derive_format, derive_out);
        if (lax->parsed()) return run_lax(lax_n, lax_format, lax_out);
        if (zcr->parsed()) return run_check_zcr(zcr_n, zcr_out);
        if (soliton->parsed()) {
            std::optional<Json> params_json;
            vmkdv::SolitonParams params;
            if (!soliton_params_path.empty()) {
                params_json = load_json_file(soliton_params_path);
                params = vmkdv::io::soliton_params_from_json(*params_json);
            }
            if (soliton->count("--mu") || !params_json) params.mu = soliton_mu;
            if (soliton->count("--c0") || !params_json) params.c0 = soliton_c0;
            if (soliton->count("--c") || !params_json) {
                if (soliton_c.empty()) throw vmkdv::ConfigError("soliton: --c or --params required");
                params.c = Eigen::Map<Eigen::VectorXd>(soliton_c.data(),
                                                       static_cast<Eigen::Index>(soliton_c.size()));
            }
            params.validate();
            const auto times = resolve_times(params_json, soliton_t3, soliton_t5, soliton_t3_set);
            return run_soliton(params, times, soliton_grid.grid(), soliton_format, soliton_out);
        }
        if (breather->parsed()) {
            if (breather_params_path.empty())
                throw vmkdv::ConfigError("breather: --params file is required");
            const Json params_json = load_json_file(breather_params_path);
            const auto params = vmkdv::io::breather_params_from_json(params_json);
            const auto times = resolve_times(params_json, breather_t3, breather_t5, breather_t3_set);
            return run_breather(params, times, breather_grid.grid(), breather_format, breather_out);
        }
        if (backlund->parsed()) {
            std::optional<Json> params_json;
            vmkdv::SolitonParams params;
            if (!backlund_params_path.empty()) {
                params_json = load_json_file(backlund_params_path);
                params = vmkdv::io::soliton_params_from_json(*params_json);
            }
            if (backlund->count("--mu") || !params_json) params.mu = backlund_mu;
            if (backlund->count("--c0") || !params_json) params.c0 = backlund_c0;
            if (backlund->count("--c") || !params_json) {
                if (backlund_c.empty())
                    throw vmkdv::ConfigError("backlund-check: --c or --params required");
                params.c = Eigen::Map<Eigen::VectorXd>(backlund_c.data(),
                                                       static_cast<Eigen::Index>(backlund_c.size()));
            }
            params.validate();
            const auto times = resolve_times(params_json, backlund_t3, std::nullopt, backlund_t3_set);
            return run_backlund(params, times, backlund_grid.grid(), backlund_out);
        }
        if (verify_all->parsed())
            return run_verify_all(quick, seed, verify_grid.grid(), verify_out);
    } catch (const vmkdv::ConfigError& e) {
        std::cerr << vmkdv::io::error_json("config", e.what()).dump() << "\n";
        return kExitConfigError;
    } catch (const vmkdv::Error& e) {
        std::cerr << vmkdv::io::error_json("computation", e.what()).dump() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << vmkdv::io::error_json("internal", e.what()).dump() << "\n";
        return kExitConfigError;
    }
    return kExitOk;
}
