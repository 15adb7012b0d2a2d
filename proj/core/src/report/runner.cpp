#include "cym/report/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <mutex>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cym/degen/degeneration.hpp"
#include "cym/errors.hpp"
#include "cym/models/model_io.hpp"
#include "cym/models/presets.hpp"
#include "cym/numeric/linalg.hpp"
#include "cym/numeric/rng.hpp"
#include "cym/report/pipeline.hpp"

namespace cym {

namespace {

using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

// ---------------------------------------------------------------- parsing

std::vector<Real> parse_axis(const std::string& s)
{
    // "a:b:n"
    std::vector<Real> out;
    std::istringstream in(s);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(in, tok, ':'))
        parts.push_back(tok);
    if (parts.size() != 3)
        throw domain_error("grid: axis spec must be lo:hi:count, got '" + s + "'");
    Real lo = std::stod(parts[0]);
    Real hi = std::stod(parts[1]);
    int cnt = std::stoi(parts[2]);
    if (cnt < 1)
        throw domain_error("grid: axis count must be >= 1");
    for (int k = 0; k < cnt; ++k)
        out.push_back(cnt == 1 ? lo : lo + (hi - lo) * Real(k) / Real(cnt - 1));
    return out;
}

std::vector<CVec> parse_grid(const std::string& spec, int n)
{
    // per-modulus chunk "re0:re1:nre,im0:im1:nim", chunks separated by ';'
    std::vector<std::pair<std::vector<Real>, std::vector<Real>>> axes;
    std::istringstream in(spec);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
        auto comma = chunk.find(',');
        if (comma == std::string::npos)
            throw domain_error("grid: modulus chunk must be re-axis,im-axis");
        axes.emplace_back(parse_axis(chunk.substr(0, comma)),
                          parse_axis(chunk.substr(comma + 1)));
    }
    if (static_cast<int>(axes.size()) != n)
        throw domain_error("grid: expected " + std::to_string(n) +
                           " modulus chunk(s)");

    std::vector<CVec> pts = {{}};
    for (const auto& [re, im] : axes) {
        std::vector<CVec> next;
        for (const CVec& base : pts)
            for (Real x : re)
                for (Real y : im) {
                    CVec p = base;
                    p.push_back(Cplx(x, y));
                    next.push_back(std::move(p));
                }
        pts = std::move(next);
    }
    return pts;
}

std::vector<CVec> parse_points_file(const std::string& path, int n)
{
    std::ifstream in(path);
    if (!in)
        throw domain_error("points: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw domain_error(std::string("points: JSON parse failure: ") + e.what());
    }
    std::vector<CVec> pts;
    for (const auto& row : j) {
        CVec p;
        for (const auto& v : row) {
            if (v.is_number())
                p.push_back(Cplx(v.get<Real>(), 0));
            else
                p.push_back(Cplx(v[0].get<Real>(), v[1].get<Real>()));
        }
        if (static_cast<int>(p.size()) != n)
            throw domain_error("points: width does not match the model's n");
        pts.push_back(std::move(p));
    }
    if (pts.empty())
        throw domain_error("points: empty list");
    return pts;
}

std::vector<CVec> resolve_points(const RunConfig& cfg, const FamilyModel& model)
{
    if (!cfg.points_file.empty())
        return parse_points_file(cfg.points_file, model.n());
    if (!cfg.grid_spec.empty())
        return parse_grid(cfg.grid_spec, model.n());
    return model.suggested_points();
}

// ---------------------------------------------------------------- output

std::string fmt(Real x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

ojson cplx_json(Cplx z)
{
    return ojson::array({z.real(), z.imag()});
}

ojson vec_json(const CVec& v)
{
    ojson a = ojson::array();
    for (const Cplx& z : v)
        a.push_back(cplx_json(z));
    return a;
}

ojson tensor_json(const CTensor& t)
{
    ojson j;
    j["shape"] = t.shape();
    ojson data = ojson::array();
    for (const Cplx& z : t.data())
        data.push_back(cplx_json(z));
    j["data"] = data;
    return j;
}

ojson checks_json(const std::vector<CheckResult>& checks)
{
    ojson a = ojson::array();
    for (const CheckResult& c : checks) {
        ojson j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        j["residual"] = c.residual;
        j["tolerance"] = c.tolerance;
        a.push_back(j);
    }
    return a;
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw evaluation_error("cannot open output file " + path.string());
    out << text;
}

// ------------------------------------------------------------- utilities

template <class F>
auto parallel_map(const std::vector<CVec>& pts, int threads, F&& f)
    -> std::vector<decltype(f(pts.front()))>
{
    using R = decltype(f(pts.front()));
    std::vector<R> out(pts.size());
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(pts.size())));
    if (threads == 1) {
        for (size_t i = 0; i < pts.size(); ++i)
            out[i] = f(pts[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= pts.size())
                return;
            try {
                out[i] = f(pts[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err)
                    err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
    return out;
}

// ------------------------------------------------------------- commands

int cmd_validate(const RunConfig& cfg, const FamilyModel& model,
                 std::vector<std::string>& lines)
{
    auto pts = resolve_points(cfg, model);
    ValidationReport rep = validate_model(model, pts);

    ojson j;
    j["model"] = cfg.model;
    j["q_antisymmetry"] = rep.q_antisymmetry;
    j["max_transversality1"] = rep.max_transversality1;
    j["max_transversality2"] = rep.max_transversality2;
    j["min_norm"] = rep.min_norm;
    j["min_metric_eig"] = rep.min_metric_eig;
    j["all_valid"] = rep.all_valid;
    ojson rows = ojson::array();
    for (const ValidationPoint& p : rep.points) {
        ojson r;
        r["t"] = vec_json(p.t);
        r["norm"] = p.norm;
        r["positive"] = p.positive;
        r["min_metric_eig"] = p.min_metric_eig;
        r["metric_positive"] = p.metric_positive;
        r["transversality1"] = p.transversality1;
        r["transversality2"] = p.transversality2;
        rows.push_back(r);
    }
    j["points"] = rows;
    write_text(fs::path(cfg.out_dir) / "validate.json", j.dump(2) + "\n");

    lines.push_back("validate: " + std::to_string(rep.points.size()) +
                    " point(s), all_valid=" + (rep.all_valid ? "true" : "false") +
                    ", max transversality residual " +
                    fmt(std::max(rep.max_transversality1, rep.max_transversality2)));
    return 0;
}

ojson point_record(const PointGeometry& pg)
{
    ojson r;
    r["t"] = vec_json(pg.t);
    r["valid"] = pg.valid;
    if (!pg.valid) {
        r["invalid_reason"] = pg.invalid_reason;
        return r;
    }
    r["P"] = pg.P;
    r["K"] = pg.K;
    r["g"] = tensor_json(pg.wp.g);
    r["Gamma"] = tensor_json(pg.wp.Gamma);
    r["Kl"] = vec_json(pg.wp.Kl);
    r["F"] = tensor_json(pg.yukawa.F);
    r["Fcov"] = tensor_json(pg.yukawa.Fcov);
    r["thm13_residual"] = pg.thm13_residual;
    if (pg.hodge) {
        r["h_ric_path"] = tensor_json(pg.hodge->h_ric);
        r["h_unit_path"] = tensor_json(pg.hodge->h_unit);
        r["h_paths_deviation"] = pg.hodge->deviation;
    }
    r["h_frame"] = tensor_json(pg.hodge_report.h);
    r["A"] = tensor_json(pg.hodge_report.A);
    r["B"] = tensor_json(pg.hodge_report.B);
    r["R"] = tensor_json(pg.hodge_report.R);
    r["rho"] = pg.hodge_report.rho;
    r["alpha"] = pg.hodge_report.alpha;
    r["checks"] = checks_json(pg.hodge_report.checks);
    return r;
}

int cmd_report(const RunConfig& cfg, const FamilyModel& model,
               std::vector<std::string>& lines)
{
    auto pts = resolve_points(cfg, model);
    PointOptions opts;
    opts.checks.seed = cfg.seed;
    if (cfg.tol > 0)
        opts.fd_tol = cfg.tol;
    auto records = parallel_map(pts, cfg.threads, [&](const CVec& t) {
        return compute_point_geometry(model, t, opts);
    });

    int valid = 0, pass = 0, checks_total = 0;
    Real max_resid_over_tol = 0;
    ojson rows = ojson::array();
    for (const PointGeometry& pg : records) {
        rows.push_back(point_record(pg));
        if (pg.valid) {
            ++valid;
            for (const CheckResult& c : pg.hodge_report.checks) {
                ++checks_total;
                if (c.pass)
                    ++pass;
                if (c.tolerance > 0)
                    max_resid_over_tol =
                        std::max(max_resid_over_tol, c.residual / c.tolerance);
            }
        }
    }

    ojson j;
    j["model"] = cfg.model;
    j["seed"] = cfg.seed;
    j["points"] = rows;
    ojson summary;
    summary["points_total"] = records.size();
    summary["points_valid"] = valid;
    summary["checks_total"] = checks_total;
    summary["checks_passed"] = pass;
    j["summary"] = summary;
    write_text(fs::path(cfg.out_dir) / "report.json", j.dump(2) + "\n");

    lines.push_back("report: " + std::to_string(records.size()) + " point(s), " +
                    std::to_string(valid) + " valid, checks " +
                    std::to_string(pass) + "/" + std::to_string(checks_total));
    return 0;
}

int cmd_scan(const RunConfig& cfg, const FamilyModel& model,
             std::vector<std::string>& lines)
{
    if (cfg.grid_spec.empty() && cfg.points_file.empty())
        throw domain_error("scan: --grid or --points required");
    auto pts = resolve_points(cfg, model);
    PointOptions opts;
    opts.checks.seed = cfg.seed;
    opts.hodge_paths = false; // per-point summary scan stays cheap
    auto records = parallel_map(pts, cfg.threads, [&](const CVec& t) {
        return compute_point_geometry(model, t, opts);
    });

    std::ostringstream csv;
    const int n = model.n();
    for (int i = 0; i < n; ++i)
        csv << "t" << i << "_re,t" << i << "_im,";
    csv << "valid,P,K,min_eig_g,rho,alpha,thm13_residual,checks_passed,checks_total\n";
    for (const PointGeometry& pg : records) {
        for (int i = 0; i < n; ++i)
            csv << fmt(pg.t[static_cast<size_t>(i)].real()) << ","
                << fmt(pg.t[static_cast<size_t>(i)].imag()) << ",";
        int pass = 0;
        for (const CheckResult& c : pg.hodge_report.checks)
            if (c.pass)
                ++pass;
        csv << (pg.valid ? 1 : 0) << "," << fmt(pg.P) << ","
            << fmt(pg.valid ? pg.K : 0) << "," << fmt(pg.wp.min_metric_eig) << ","
            << fmt(pg.valid ? pg.hodge_report.rho : 0) << ","
            << fmt(alpha_bound(n)) << "," << fmt(pg.thm13_residual) << "," << pass
            << "," << pg.hodge_report.checks.size() << "\n";
    }
    write_text(fs::path(cfg.out_dir) / "scan.csv", csv.str());
    lines.push_back("scan: " + std::to_string(records.size()) + " point(s) written");
    return 0;
}

int cmd_degenerate(const RunConfig& cfg, const FamilyModel& model,
                   std::vector<std::string>& lines)
{
    const auto* orbit = dynamic_cast<const NilpotentOrbitModel*>(&model);
    if (!orbit)
        throw domain_error("degenerate: the model has no one-parameter orbit "
                           "structure (need nilpotent_orbit or pf_mum)");

    ScanResult scan = yukawa_limit_scan(*orbit, cfg.theta, cfg.radii,
                                        cfg.extended_precision
                                            ? ScanPrecision::extended
                                            : ScanPrecision::plain);
    LimitF3 lf = limit_f3(*orbit, cfg.theta);

    std::ostringstream csv;
    csv << "r,z3F_re,z3F_im,P,g,h,h3_minus_F2,schwarz_ratio,valid\n";
    for (const ScanRow& row : scan.rows)
        csv << fmt(row.r) << "," << fmt(row.z3F.real()) << ","
            << fmt(row.z3F.imag()) << "," << fmt(row.P) << "," << fmt(row.g)
            << "," << fmt(row.h) << "," << fmt(row.h3_minus_F2) << ","
            << fmt(row.schwarz_ratio) << "," << (row.valid ? 1 : 0) << "\n";
    write_text(fs::path(cfg.out_dir) / "degenerate.csv", csv.str());

    ojson j;
    j["model"] = cfg.model;
    j["theta"] = cfg.theta;
    j["precision"] =
        scan.precision == ScanPrecision::extended ? "extended" : "double";
    j["N"] = orbit->Nint();
    j["Finf"] = vec_json(scan.wang.NFinf.empty() ? orbit->A0() : orbit->A0());
    ojson wang;
    wang["NFinf"] = vec_json(scan.wang.NFinf);
    wang["ratio"] = scan.wang.ratio;
    wang["incomplete"] = scan.wang.incomplete;
    j["wang"] = wang;
    ojson cons;
    cons["derived"] = cplx_json(scan.constraint.derived);
    cons["paper_literal"] = cplx_json(scan.constraint.paper_literal);
    cons["scale"] = scan.constraint.scale;
    cons["name"] = "Thm4.2-constraint";
    j["constraint"] = cons;
    ojson lim;
    lim["lhs"] = cplx_json(scan.limit_lhs);
    lim["rhs"] = cplx_json(scan.limit_rhs);
    lim["agreement"] = scan.agreement;
    lim["name"] = "Thm4.2-limit-identity";
    j["limit"] = lim;
    j["bounds_ok"] = scan.bounds_ok;
    j["min_h3_margin"] = scan.min_h3_margin;
    j["schwarz_bounded"] = scan.schwarz_bounded;
    ojson lf3;
    lf3["radii"] = lf.radii;
    lf3["residuals"] = lf.residuals;
    lf3["converged"] = lf.converged;
    j["limit_f3"] = lf3;
    write_text(fs::path(cfg.out_dir) / "degenerate.json", j.dump(2) + "\n");

    lines.push_back(std::string("degenerate: incomplete=") +
                    (scan.wang.incomplete ? "true" : "false") +
                    ", limit agreement " + fmt(scan.agreement) +
                    ", bounds_ok=" + (scan.bounds_ok ? "true" : "false"));
    return 0;
}

// full invariant suite; returns named failures
int cmd_verify(const RunConfig& cfg, const FamilyModel& model,
               std::vector<std::string>& lines)
{
    std::vector<CheckResult> checks;
    Rng rng(cfg.seed);
    auto pts = resolve_points(cfg, model);

    // model axioms at the sample points
    {
        ValidationReport rep = validate_model(model, pts);
        Real tol = cfg.tol > 0 ? cfg.tol : 1e-9;
        checks.push_back({"model-positivity", rep.min_norm > 0,
                          rep.min_norm > 0 ? 0.0 : rep.min_norm, 0});
        checks.push_back({"model-metric-positive", rep.min_metric_eig > 0,
                          rep.min_metric_eig > 0 ? 0.0 : rep.min_metric_eig, 0});
        Real tr = std::max(rep.max_transversality1, rep.max_transversality2);
        checks.push_back({"model-transversality", tr <= tol, tr, tol});
    }

    // per-point geometry suite
    PointOptions opts;
    opts.checks.seed = cfg.seed;
    opts.curvature_oracle = true;
    bool first = true;
    for (const CVec& t : pts) {
        PointOptions o = opts;
        o.curvature_oracle = first; // FD curvature once; it dominates runtime
        PointGeometry pg = compute_point_geometry(model, t, o);
        if (!pg.valid)
            continue;
        for (const CheckResult& c : pg.hodge_report.checks)
            checks.push_back(c);

        if (first) {
            // wp metric against the finite-difference hessian of K
            PeriodJet jet = model.jet(t, 2);
            RealField Kfield = [&](const CVec& p) {
                return kahler_potential(model.jet(p, 0));
            };
            FdOptions fo;
            fo.step = 1e-2 * model.local_scale(t);
            FdHessian fh = fd_mixed_hessian(Kfield, t, fo);
            Real resid = 0;
            for (int i = 0; i < model.n(); ++i)
                for (int j = 0; j < model.n(); ++j)
                    resid = std::max(resid,
                                     std::abs(fh.matrix(i, j) - pg.wp.g(i, j)));
            checks.push_back({"g-dual-path", resid <= 1e-6, resid, 1e-6});

            // gauge covariance: Omega -> e^{f} Omega, f linear
            {
                PeriodJet j4 = model.jet(t, 4);
                Cplx f0 = Cplx(0.17, -0.23);
                CVec cg(static_cast<size_t>(model.n()));
                for (auto& z : cg)
                    z = 0.3 * rng.cgaussian();
                CTensor zero({model.n(), model.n()});
                PeriodJet gj = j4;
                gj.jet = gauge_exp_multiply(j4.jet, f0, cg, zero);
                WpGeometry wg = compute_wp(gj);
                YukawaData wy = compute_yukawa(gj, wg, 1e-6);
                NormalFrame nf = normal_frame(gj, wg, wy);
                Real resid2 = 0;
                for (int i = 0; i < model.n(); ++i)
                    for (int j = 0; j < model.n(); ++j)
                        resid2 = std::max(resid2,
                                          std::abs(wg.g(i, j) - pg.wp.g(i, j)));
                for (size_t a = 0; a < nf.F.data().size(); ++a)
                    resid2 = std::max(resid2, std::abs(nf.F.data()[a] -
                                                       pg.frame->F.data()[a]));
                checks.push_back({"gauge-covariance", resid2 <= 1e-9, resid2, 1e-9});
            }

            // coordinate covariance: random linear change of moduli
            {
                PeriodJet j4 = model.jet(t, 4);
                const int n = model.n();
                CTensor Arand({n, n});
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        Arand(i, j) = (i == j ? Cplx(1) : Cplx(0)) +
                                      0.2 * rng.cgaussian();
                CTensor zero3({n, n, n});
                PeriodJet cj = j4;
                cj.jet = compose_quadratic(j4.jet, Arand, zero3);
                WpGeometry wg = compute_wp(cj);
                YukawaData wy = compute_yukawa(cj, wg, 1e-6);
                NormalFrame nf = normal_frame(cj, wg, wy);
                // normal-frame scalar invariants: spectrum of h - 2 id
                auto ev1 = herm_eigen(nf.h);
                auto ev2 = herm_eigen(pg.frame->h);
                Real resid3 = 0;
                for (size_t k = 0; k < ev1.size(); ++k)
                    resid3 = std::max(resid3, std::abs(ev1[k] - ev2[k]));
                checks.push_back({"coordinate-covariance", resid3 <= 1e-9,
                                  resid3, 1e-9});
            }
            first = false;
        }
    }
    if (first)
        checks.push_back({"valid-point-exists", false, 1.0, 0});

    // degeneration invariants for one-parameter orbit models
    if (const auto* orbit = dynamic_cast<const NilpotentOrbitModel*>(&model)) {
        ScanResult scan = yukawa_limit_scan(*orbit, cfg.theta, cfg.radii,
                                            cfg.extended_precision
                                                ? ScanPrecision::extended
                                                : ScanPrecision::plain);
        checks.push_back({"Thm4.2-limit-identity", scan.agreement <= 1e-6,
                          scan.agreement, 1e-6});
        checks.push_back({"h3-yukawa-bound", scan.bounds_ok,
                          scan.bounds_ok ? 0.0 : -scan.min_h3_margin, 1e-8});
        checks.push_back({"schwarz-exponent-bounded", scan.schwarz_bounded,
                          scan.schwarz_bounded ? 0.0 : 1.0, 0});

        // N^4 Finf = 0 exactly, integer arithmetic
        {
            CVec v = orbit->A0();
            CTensor N = orbit->Nmat();
            for (int k = 0; k < 4; ++k) {
                CVec w(v.size(), Cplx(0));
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        w[static_cast<size_t>(i)] += N(i, j) * v[static_cast<size_t>(j)];
                v = w;
            }
            Real nrm = 0;
            for (const Cplx& z : v)
                nrm = std::max(nrm, std::abs(z));
            checks.push_back({"N-grading", nrm == 0.0, nrm, 0});
        }

        // symplectic invariance of the orbit exponential, random s, v, w
        {
            Real worst = 0;
            for (int trial = 0; trial < 8; ++trial) {
                Cplx s = rng.cgaussian();
                CVec v = rng.cgaussian_vec(4);
                CVec w = rng.cgaussian_vec(4);
                // e^{s M}
                CTensor M({4, 4});
                CTensor N = orbit->Nmat();
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        M(i, j) = N(i, j) / kTwoPiI;
                CTensor E = CTensor::identity(4);
                E.set_symmetry(Symmetry::none);
                CTensor Mk = CTensor::identity(4);
                Mk.set_symmetry(Symmetry::none);
                Real fact = 1;
                for (int k = 1; k <= 3; ++k) {
                    Mk = matmul(Mk, M);
                    fact *= k;
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 4; ++j)
                            E(i, j) += std::pow(s, k) * Mk(i, j) / fact;
                }
                CVec ev = matvec(E, v), ew = matvec(E, w);
                worst = std::max(worst, std::abs(orbit->Q().pair(ev, ew) -
                                                 orbit->Q().pair(v, w)));
            }
            checks.push_back({"orbit-Q-invariance", worst <= 1e-10, worst, 1e-10});
        }
    }

    // write and summarize
    ojson j;
    j["model"] = cfg.model;
    j["seed"] = cfg.seed;
    j["checks"] = checks_json(checks);
    int passed = 0;
    std::string first_fail;
    for (const CheckResult& c : checks) {
        if (c.pass)
            ++passed;
        else if (first_fail.empty())
            first_fail = c.name;
    }
    ojson summary;
    summary["total"] = checks.size();
    summary["passed"] = passed;
    j["summary"] = summary;
    write_text(fs::path(cfg.out_dir) / "verify.json", j.dump(2) + "\n");

    for (const CheckResult& c : checks)
        lines.push_back(std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name +
                        "  residual=" + fmt(c.residual));
    if (passed != static_cast<int>(checks.size())) {
        lines.push_back("verify: FAILED at check '" + first_fail + "'");
        return 1;
    }
    lines.push_back("verify: all " + std::to_string(checks.size()) +
                    " checks passed");
    return 0;
}

int cmd_presets(const RunConfig& cfg, std::vector<std::string>& lines)
{
    fs::create_directories(cfg.out_dir);
    for (const std::string& name : preset_names()) {
        fs::path p = fs::path(cfg.out_dir) / (name + ".json");
        write_preset_file(name, p.string());
        lines.push_back("wrote " + p.string());
    }
    return 0;
}

} // namespace

RunResult run(const RunConfig& cfg)
{
    RunResult res;
    try {
        if (cfg.command == "presets") {
            res.exit_code = cmd_presets(cfg, res.lines);
            return res;
        }

        std::unique_ptr<FamilyModel> model;
        try {
            model = load_model_path(cfg.model);
        } catch (const std::exception& e) {
            res.lines.push_back(std::string("model error: ") + e.what());
            res.exit_code = 2;
            return res;
        }

        fs::create_directories(cfg.out_dir);
        if (cfg.command == "validate")
            res.exit_code = cmd_validate(cfg, *model, res.lines);
        else if (cfg.command == "report")
            res.exit_code = cmd_report(cfg, *model, res.lines);
        else if (cfg.command == "scan")
            res.exit_code = cmd_scan(cfg, *model, res.lines);
        else if (cfg.command == "verify")
            res.exit_code = cmd_verify(cfg, *model, res.lines);
        else if (cfg.command == "degenerate")
            res.exit_code = cmd_degenerate(cfg, *model, res.lines);
        else {
            res.lines.push_back("unknown command '" + cfg.command + "'");
            res.exit_code = 2;
        }
    } catch (const precision_error& e) {
        res.lines.push_back(std::string("precision failure: ") + e.what());
        res.exit_code = 3;
    } catch (const domain_error& e) {
        res.lines.push_back(std::string("input error: ") + e.what());
        res.exit_code = 2;
    } catch (const std::exception& e) {
        res.lines.push_back(std::string("error: ") + e.what());
        res.exit_code = 2;
    }
    return res;
}

} // namespace cym
