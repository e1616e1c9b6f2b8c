#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "polyzeta/counting.hpp"
#include "polyzeta/expr.hpp"
#include "polyzeta/gallery.hpp"
#include "polyzeta/json_io.hpp"
#include "polyzeta/rouche.hpp"
#include "polyzeta/zeta.hpp"

namespace pz = polyzeta;
using pz::Cx;
using pz::json;

namespace {

struct GlobalOptions {
    int workers = 1;
    unsigned seed = 20260809;
    std::string output;
    int zeta_truncation_N = 0;
    int zeta_bernoulli_terms = 12;
    double tol = 1e-8;
};

json config_json(const GlobalOptions& g, const std::string& command, const json& params) {
    return {{"command", command},
            {"params", params},
            {"workers", g.workers},
            {"seed", g.seed},
            {"zeta.truncation_N", g.zeta_truncation_N},
            {"zeta.bernoulli_terms", g.zeta_bernoulli_terms},
            {"tol", g.tol}};
}

void emit(const GlobalOptions& g, const json& payload) {
    if (g.output.empty()) {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::ofstream out(g.output);
        if (!out) throw std::runtime_error("cannot open output file: " + g.output);
        out << payload.dump(2) << "\n";
    }
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(std::stod(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stod(cur));
    return out;
}

Cx parse_complex_pair(const std::string& text) {
    auto v = parse_list(text);
    if (v.size() == 1) return {v[0], 0.0};
    if (v.size() != 2) throw std::runtime_error("expected re,im");
    return {v[0], v[1]};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyzeta: zero counting and Rouche localization for polynomials of zeta derivatives"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name
    app.set_config("--config", "", "key=value config file; command-line flags win");
    app.allow_config_extras(true);

    GlobalOptions g;
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    app.add_option("--workers", g.workers, "worker threads (results are worker-count independent)")
        ->default_val(hw > 0 ? hw : 1);
    app.add_option("--seed", g.seed, "random seed recorded in output headers");
    app.add_option("-o,--output", g.output, "output file (default stdout)");
    app.add_option("--zeta.truncation_N", g.zeta_truncation_N, "zeta truncation override (0=auto)");
    app.add_option("--zeta.bernoulli_terms", g.zeta_bernoulli_terms, "Euler-Maclaurin depth");
    app.add_option("--tol", g.tol, "localization tolerance in |f|");

    // ---- eval ----
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a composed expression at a point");
    std::string eval_expr = "D0";
    std::string eval_point = "2,0";
    double eval_tau = 0.0;
    eval_cmd->add_option("--expr", eval_expr, "expression, e.g. \"D0*D2 - D1^2\"")->required();
    eval_cmd->add_option("--point", eval_point, "s as re,im")->required();
    eval_cmd->add_option("--tau", eval_tau, "vertical shift");

    // ---- count ----
    auto* count_cmd = app.add_subcommand("count", "argument-principle zero count in a rectangle");
    std::string count_expr = "D0";
    std::string count_rect = "0.51,0.99,0,100";
    bool count_localize = false;
    count_cmd->add_option("--expr", count_expr)->required();
    count_cmd->add_option("--rect", count_rect, "sigma_min,sigma_max,t_min,t_max")->required();
    count_cmd->add_flag("--localize", count_localize, "also localize zeros");

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand("sweep", "zero-density sweep N(T) with linear fit");
    std::string sweep_expr = "D1";
    std::string sweep_strip = "0.51,0.99";
    std::string sweep_T = "100,200,400";
    std::string sweep_table;
    sweep_cmd->add_option("--expr", sweep_expr)->required();
    sweep_cmd->add_option("--strip", sweep_strip, "sigma_lo,sigma_hi");
    sweep_cmd->add_option("--tmax", sweep_T, "comma-separated T grid");
    sweep_cmd->add_option("--table", sweep_table, "also write a gnuplot-ready two-column table");

    // ---- rouche-demo ----
    auto* rd_cmd = app.add_subcommand(
        "rouche-demo", "single Rouche certificate for a composition against the monomial target");
    std::string rd_expr = "D1";
    std::string rd_alpha = "0.8646,0.024";
    int rd_k = 2;
    double rd_radius = 0.1;
    double rd_tau = 76.35;
    rd_cmd->add_option("--expr", rd_expr, "scanned composition");
    rd_cmd->add_option("--alpha", rd_alpha, "target center re,im");
    rd_cmd->add_option("--k", rd_k, "derivative order of the target");
    rd_cmd->add_option("--radius", rd_radius, "disk radius");
    rd_cmd->add_option("--tau", rd_tau, "shift to certify");

    // ---- tau-scan ----
    auto* ts_cmd = app.add_subcommand("tau-scan", "scan shifts for passing Rouche certificates");
    std::string ts_expr = "D1";
    std::string ts_alpha = "0.8646,0.024";
    int ts_k = 2;
    double ts_radius = 0.1;
    std::string ts_range = "0,500";
    double ts_step = 0.05;
    std::string ts_jsonl;
    int ts_checkpoint = 1000;
    ts_cmd->add_option("--expr", ts_expr);
    ts_cmd->add_option("--alpha", ts_alpha);
    ts_cmd->add_option("--k", ts_k);
    ts_cmd->add_option("--radius", ts_radius);
    ts_cmd->add_option("--tau-range", ts_range, "lo,hi");
    ts_cmd->add_option("--step", ts_step);
    ts_cmd->add_option("--jsonl", ts_jsonl, "stream certificates to a JSON-lines file");
    ts_cmd->add_option("--checkpoint", ts_checkpoint, "flush every N certificates");

    // ---- lemma-solve ----
    auto* ls_cmd = app.add_subcommand("lemma-solve", "jet-log solve: exp-polynomial from a jet");
    std::string ls_jet = "2,3,5";
    ls_cmd->add_option("--jet", ls_jet, "c_0,c_1,... (real) or re,im pairs with --complex")
        ->required();
    bool ls_complex = false;
    ls_cmd->add_flag("--complex", ls_complex, "read jet entries as re,im pairs");

    // ---- meanvalue ----
    auto* mv_cmd = app.add_subcommand("meanvalue", "(1/T) int_0^T |f(sigma+it)|^2 dt");
    std::string mv_expr = "D0";
    double mv_sigma = 0.75;
    double mv_T = 2000.0;
    mv_cmd->add_option("--expr", mv_expr);
    mv_cmd->add_option("--sigma", mv_sigma);
    mv_cmd->add_option("--T", mv_T);

    // ---- ingham ----
    auto* in_cmd = app.add_subcommand("ingham", "(1/T) int_1^T zeta^(u)(eta+it) zeta^(v)(theta-it) dt");
    int in_u = 0, in_v = 0;
    double in_eta = 0.8, in_theta = 0.8, in_T = 2000.0;
    in_cmd->add_option("--u", in_u);
    in_cmd->add_option("--v", in_v);
    in_cmd->add_option("--eta", in_eta);
    in_cmd->add_option("--theta", in_theta);
    in_cmd->add_option("--T", in_T);

    // ---- gallery ----
    auto* ga_cmd = app.add_subcommand("gallery", "catalog of ready-made functions");
    auto* ga_list = ga_cmd->add_subcommand("list", "entry names");
    auto* ga_desc = ga_cmd->add_subcommand("describe", "expectation text and claims as JSON");
    std::string ga_name;
    ga_desc->add_option("name", ga_name)->required();
    auto* ga_check = ga_cmd->add_subcommand("check-shift-disk",
                                            "zero count of the shifted lattice-twist disk");
    double ga_tau = 0.0;
    ga_check->add_option("--tau", ga_tau);

    CLI11_PARSE(app, argc, argv);

    try {
        pz::ZetaParams zp{g.zeta_truncation_N, g.zeta_bernoulli_terms};

        if (*eval_cmd) {
            pz::ComposedFunction F = pz::parse_expression(eval_expr, eval_tau, zp);
            Cx s = parse_complex_pair(eval_point);
            Cx v = pz::eval_composed(F, s);
            emit(g, {{"config", config_json(g, "eval", {{"expr", eval_expr}, {"point", eval_point}, {"tau", eval_tau}})},
                     {"value_re", v.real()},
                     {"value_im", v.imag()}});
        } else if (*count_cmd) {
            pz::ComposedFunction F = pz::parse_expression(count_expr, 0.0, zp);
            auto r = parse_list(count_rect);
            if (r.size() != 4) throw std::runtime_error("--rect needs 4 numbers");
            pz::ComplexRect rect(r[0], r[1], r[2], r[3]);
            pz::AnalyticFunction f = pz::as_analytic(F);
            pz::ZeroReport rep = count_localize ? pz::localize_zeros(f, rect, g.tol)
                                                : pz::count_zeros_rect(f, rect);
            json out = pz::to_json(rep);
            out["config"] = config_json(g, "count", {{"expr", count_expr}, {"rect", count_rect}});
            emit(g, out);
        } else if (*sweep_cmd) {
            pz::ComposedFunction F = pz::parse_expression(sweep_expr, 0.0, zp);
            auto strip = parse_list(sweep_strip);
            auto Ts = parse_list(sweep_T);
            pz::AnalyticFunction f = pz::as_analytic(F);
            f.name = sweep_expr;
            pz::DensitySweep sweep = pz::density_sweep(f, strip.at(0), strip.at(1), Ts, g.workers);
            // CSV: one row per grid point with the running slope
            std::ostringstream csv;
            csv << "# config " << config_json(g, "sweep", {{"expr", sweep_expr}, {"strip", sweep_strip}}).dump()
                << "\nT,count,slope_so_far\n";
            std::vector<double> xs, ys;
            for (std::size_t i = 0; i < Ts.size(); ++i) {
                double slope = 0.0;
                if (sweep.counts[i] >= 0) {
                    xs.push_back(Ts[i]);
                    ys.push_back(static_cast<double>(sweep.counts[i]));
                }
                if (xs.size() >= 2) {
                    double mx = 0.0, my = 0.0;
                    for (std::size_t j = 0; j < xs.size(); ++j) { mx += xs[j]; my += ys[j]; }
                    mx /= xs.size();
                    my /= ys.size();
                    double sxx = 0.0, sxy = 0.0;
                    for (std::size_t j = 0; j < xs.size(); ++j) {
                        sxx += (xs[j] - mx) * (xs[j] - mx);
                        sxy += (xs[j] - mx) * (ys[j] - my);
                    }
                    slope = sxx > 0 ? sxy / sxx : 0.0;
                }
                csv << Ts[i] << "," << sweep.counts[i] << "," << slope << "\n";
            }
            if (!sweep_table.empty()) {
                std::ofstream tbl(sweep_table);
                for (std::size_t i = 0; i < Ts.size(); ++i)
                    tbl << Ts[i] << " " << sweep.counts[i] << "\n";
            }
            if (g.output.empty()) std::cout << csv.str();
            else std::ofstream(g.output) << csv.str();
        } else if (*rd_cmd) {
            Cx alpha = parse_complex_pair(rd_alpha);
            pz::AnalyticFunction A = pz::aux_monomial_target(alpha, rd_k);
            pz::ComposedFunction F = pz::parse_expression(rd_expr, rd_tau, zp);
            pz::AnalyticFunction Z = pz::as_analytic(F);
            pz::RoucheCertificate cert = pz::rouche_check(Z, A, pz::Disk(alpha, rd_radius));
            cert.tau = rd_tau;
            if (cert.pass) {
                pz::ComplexRect box(alpha.real() - rd_radius, alpha.real() + rd_radius,
                                    alpha.imag() - rd_radius, alpha.imag() + rd_radius);
                pz::ZeroReport rep = pz::localize_zeros(Z, box, g.tol);
                for (const auto& z : rep.zeros)
                    if (pz::Disk(alpha, rd_radius).contains(z.location)) {
                        cert.zero_inside = z;
                        break;
                    }
            }
            json out = pz::to_json(cert);
            out["config"] = config_json(g, "rouche-demo",
                                        {{"expr", rd_expr}, {"alpha", rd_alpha}, {"k", rd_k},
                                         {"radius", rd_radius}, {"tau", rd_tau}});
            emit(g, out);
        } else if (*ts_cmd) {
            Cx alpha = parse_complex_pair(ts_alpha);
            auto range = parse_list(ts_range);
            pz::AnalyticFunction A = pz::aux_monomial_target(alpha, ts_k);
            pz::ComposedFunction F = pz::parse_expression(ts_expr, 0.0, zp);
            std::ofstream jsonl;
            if (!ts_jsonl.empty()) {
                jsonl.open(ts_jsonl);
                jsonl << json{{"config", config_json(g, "tau-scan",
                                                     {{"expr", ts_expr}, {"alpha", ts_alpha}, {"k", ts_k},
                                                      {"radius", ts_radius}, {"tau_range", ts_range},
                                                      {"step", ts_step}})}}.dump()
                      << "\n";
            }
            long long emitted = 0;
            auto stream = [&](const pz::RoucheCertificate& c) {
                if (!jsonl.is_open()) return;
                jsonl << pz::to_json(c).dump() << "\n";
                if (++emitted % ts_checkpoint == 0) jsonl.flush();
            };
            pz::TauScanResult res = pz::tau_scan(F, A, pz::Disk(alpha, ts_radius), range.at(0),
                                                 range.at(1), ts_step, g.workers, stream);
            json zeros = json::array();
            for (const auto& z : res.mapped_zeros)
                zeros.push_back({{"re", z.location.real()},
                                 {"im", z.location.imag()},
                                 {"residual", z.residual}});
            long long passes = 0;
            for (const auto& c : res.certificates)
                if (c.pass) ++passes;
            emit(g, {{"config", config_json(g, "tau-scan",
                                            {{"expr", ts_expr}, {"alpha", ts_alpha}, {"k", ts_k},
                                             {"radius", ts_radius}, {"tau_range", ts_range},
                                             {"step", ts_step}})},
                     {"grid_size", res.certificates.size()},
                     {"passes", passes},
                     {"hit_fraction", res.hit_fraction},
                     {"mapped_zeros", zeros}});
        } else if (*ls_cmd) {
            auto items = parse_list(ls_jet);
            pz::Jet jet;
            if (ls_complex) {
                if (items.size() % 2) throw std::runtime_error("--complex expects re,im pairs");
                for (std::size_t i = 0; i < items.size(); i += 2)
                    jet.values.emplace_back(items[i], items[i + 1]);
            } else {
                for (double v : items) jet.values.emplace_back(v, 0.0);
            }
            pz::ExpPolyTarget t = pz::jet_log_solve(jet);
            json coeffs = json::array();
            for (Cx b : t.coeffs) coeffs.push_back({{"re", b.real()}, {"im", b.imag()}});
            emit(g, {{"config", config_json(g, "lemma-solve", {{"jet", ls_jet}})},
                     {"b", coeffs}});
        } else if (*mv_cmd) {
            pz::ComposedFunction F = pz::parse_expression(mv_expr, 0.0, zp);
            pz::AnalyticFunction f = pz::as_analytic(F);
            pz::MeanValueResult r = pz::mean_square_integral(f, mv_sigma, mv_T, nullptr, g.workers);
            json out = pz::to_json(r);
            out["config"] = config_json(g, "meanvalue",
                                        {{"expr", mv_expr}, {"sigma", mv_sigma}, {"T", mv_T}});
            emit(g, out);
        } else if (*in_cmd) {
            pz::MeanValueResult r = pz::ingham_integral(in_u, in_v, in_eta, in_theta, in_T, g.workers);
            json out = pz::to_json(r);
            out["config"] = config_json(g, "ingham",
                                        {{"u", in_u}, {"v", in_v}, {"eta", in_eta},
                                         {"theta", in_theta}, {"T", in_T}});
            emit(g, out);
        } else if (*ga_cmd) {
            if (*ga_list) {
                emit(g, {{"config", config_json(g, "gallery list", {})},
                         {"entries", pz::gallery_list()}});
            } else if (*ga_desc) {
                const pz::GalleryEntry& e = pz::gallery_describe(ga_name);
                json claims = json::array();
                for (const auto& c : e.claims)
                    claims.push_back({{"region", pz::region_to_json(pz::Contour(c.region))},
                                      {"relation", c.relation},
                                      {"value", c.value},
                                      {"note", c.note}});
                emit(g, {{"config", config_json(g, "gallery describe", {{"name", ga_name}})},
                         {"name", e.name},
                         {"description", e.description},
                         {"default_params", e.default_params},
                         {"claims", claims}});
            } else if (*ga_check) {
                pz::ZeroReport rep = pz::lattice_twist_disk_check(ga_tau);
                json out = pz::to_json(rep);
                out["config"] = config_json(g, "gallery check-shift-disk", {{"tau", ga_tau}});
                emit(g, out);
            } else {
                std::cerr << "gallery: need one of list|describe|check-shift-disk\n";
                return 2;
            }
        }
        return 0;
    } catch (const pz::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const pz::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 4;
    } catch (const pz::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
