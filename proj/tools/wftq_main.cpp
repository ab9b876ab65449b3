#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wftq/comparison.hpp"
#include "wftq/forward.hpp"
#include "wftq/inverse.hpp"
#include "wftq/scene.hpp"
#include "wftq/svg.hpp"
#include "wftq/sweep.hpp"
#include "wftq/symmetry.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace wftq;

namespace {

constexpr double kRad2Deg = 180.0 / 3.14159265358979323846;

// Exit codes: 0 ok, 1 scene/precondition, 2 no convergence, 3 domain failure.
constexpr int kExitOk = 0;
constexpr int kExitScene = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitDomain = 3;

struct Options {
    std::string scene_path;
    bool json = true;
    std::optional<double> tol;
    std::optional<int> max_iter;
    double budget = 0.0;
    bool budget_set = false;
    std::string wd_spec;
    std::string par_class = "auto";
    std::string svg_path;
    std::string glue_case = "mprime";
    double k1 = 0.0, k2 = 0.0;
    bool k1_set = false, k2_set = false;
};

ordered_json point_json(Curvature k, const SurfacePoint& p) {
    ordered_json j = ordered_json::array();
    j.push_back(p.c[0]);
    j.push_back(p.c[1]);
    if (!k.flat()) j.push_back(p.c[2]);
    return j;
}

ordered_json vec_json(const Vec2& v) { return ordered_json::array({v.x, v.y}); }

ordered_json line_json(const PlasticityLine& line) {
    ordered_json j;
    j["a"] = line.a;
    j["b"] = line.b;
    j["budget"] = line.budget;
    if (line.positivity.empty())
        j["positivity_interval"] = nullptr;
    else
        j["positivity_interval"] =
            ordered_json::array({line.positivity.lo, line.positivity.hi});
    SignReport sr = sign_report(line);
    ordered_json s;
    s["principle_holds"] = sr.principle_holds;
    s["a_A"] = sr.a[0];
    s["a_B"] = sr.a[1];
    s["a_C"] = sr.a[2];
    j["sign_report"] = s;
    return j;
}

ordered_json diagonal_json(const DiagonalLine& d) {
    ordered_json j;
    j["x_C"] = d.x_c;
    j["y_C"] = d.y_c;
    j["x_B"] = d.x_b;
    j["y_B"] = d.y_b;
    j["w_A_from_w_C"] = d.a_from_c;
    j["det"] = d.det;
    j["mirrored"] = d.mirrored;
    j["budget"] = d.budget;
    if (d.positivity.empty())
        j["positivity_interval"] = nullptr;
    else
        j["positivity_interval"] =
            ordered_json::array({d.positivity.lo, d.positivity.hi});
    ordered_json s;
    s["principle_holds"] = d.x_c < 0.0 && d.x_b > 0.0 && d.det < 0.0;
    s["x_C"] = d.x_c;
    s["x_B"] = d.x_b;
    j["sign_report"] = s;
    return j;
}

ordered_json parallelogram_json(const ParallelogramReport& rep) {
    ordered_json j;
    j["class"] = par_class_name(rep.cls);
    ordered_json corners = ordered_json::array();
    for (const auto& c : rep.corners) corners.push_back(vec_json(c));
    j["corners"] = corners;
    j["side_lengths"] = rep.side_length;
    j["diagonal_midpoint_gap"] = rep.diagonal_midpoint_gap;
    j["opposite_side_mismatch"] = rep.opposite_side_mismatch;
    j["is_parallelogram"] = rep.is_parallelogram;
    return j;
}

ordered_json weights_row(const std::array<double, 4>& w) {
    ordered_json j;
    j["w_A"] = w[0];
    j["w_B"] = w[1];
    j["w_C"] = w[2];
    j["w_D"] = w[3];
    return j;
}

class Runner {
  public:
    Runner(const std::string& command, const Options& opt)
        : opt_(opt), command_(command) {
        report_["command"] = command;
        report_["scene"] = opt.scene_path;
        std::ifstream in(opt.scene_path, std::ios::binary);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            report_["scene_digest"] = digest_hex(buf.str());
        } else {
            report_["scene_digest"] = nullptr;
        }
        scene_ = load_scene(opt.scene_path);
        if (opt.tol) scene_.tol = *opt.tol;
        if (opt.max_iter) scene_.max_iter = *opt.max_iter;
        report_["curvature"] = scene_.k.k;
    }

    QuadScene& scene() { return scene_; }
    ordered_json& results() { return report_["results"]; }
    void warn(const std::string& w) { warnings_.push_back(w); }

    int finish(int code, const std::string& status) {
        report_["warnings"] = warnings_;
        report_["status"] = status;
        emit();
        return code;
    }

    int fail(int code, const std::string& type, const std::string& message,
             ordered_json detail = {}) {
        ordered_json err;
        err["type"] = type;
        err["message"] = message;
        if (!detail.is_null() && !detail.empty()) err["detail"] = detail;
        report_["error"] = err;
        return finish(code, "error");
    }

  private:
    void emit() {
        if (opt_.json) {
            std::cout << report_.dump(2) << "\n";
            return;
        }
        std::cout << command_ << ": " << report_["status"].get<std::string>()
                  << "\n";
        if (report_.contains("results"))
            std::cout << report_["results"].dump(2) << "\n";
        for (const auto& w : warnings_)
            std::cout << "warning: " << w.get<std::string>() << "\n";
    }

    Options opt_;
    std::string command_;
    QuadScene scene_;
    ordered_json report_;
    ordered_json warnings_ = ordered_json::array();
};

std::vector<double> parse_wd_spec(const std::string& spec) {
    std::vector<double> out;
    if (spec.empty()) return out;
    size_t c1 = spec.find(':');
    if (c1 == std::string::npos) {
        out.push_back(std::stod(spec));
        return out;
    }
    size_t c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw InvalidScene("--wd sweep must be start:stop:count");
    double lo = std::stod(spec.substr(0, c1));
    double hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    int count = std::stoi(spec.substr(c2 + 1));
    if (count < 1) throw InvalidScene("--wd sweep count must be positive");
    for (int i = 0; i < count; ++i) {
        double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        out.push_back(lo + t * (hi - lo));
    }
    return out;
}

int cmd_check(const Options& opt) {
    Runner run("check", opt);
    bool ok = true;
    ordered_json& res = run.results();

    AngularConfig cfg = run.scene().as_angular();
    Position pos = convexity_check(cfg);
    res["position"] = position_name(pos);
    res["on_diagonal_bd"] = on_diagonal_bd(cfg);
    res["on_diagonal_ac"] = on_diagonal_ac(cfg);
    ordered_json gaps = ordered_json::array();
    for (double g : cfg.gaps()) gaps.push_back(g * kRad2Deg);
    res["gaps_deg"] = gaps;
    if (pos == Position::NotInterior) {
        ok = false;
        run.warn("basepoint is not interior to the quadrilateral");
    }

    if (run.scene().k.spherical()) {
        double bound = 2.0 * run.scene().k.max_arc();
        res["perimeter_bound"] = bound;
        double twice_sum = 0.0;
        for (double l : cfg.length) twice_sum += 2.0 * l;
        res["perimeter_overestimate"] = twice_sum;
        try {
            validate_scale(cfg);
            res["perimeter_ok"] = true;
        } catch (const Error& e) {
            res["perimeter_ok"] = false;
            ok = false;
            run.warn(std::string(e.what()) + " (bound 2*pi/sqrt(k) = " +
                     std::to_string(bound) + ")");
        }
    }

    StationarityResidual sr = stationarity_residual(cfg);
    res["stationarity_residual"] = sr.norm;
    ordered_json cs;
    cs["A"] = sr.cosine_sum[0];
    cs["B"] = sr.cosine_sum[1];
    cs["C"] = sr.cosine_sum[2];
    cs["D"] = sr.cosine_sum[3];
    res["cosine_sums"] = cs;
    if (sr.norm > run.scene().tol)
        run.warn("provided weights do not balance at the basepoint "
                 "(residual above tolerance)");

    // Normalized scene echo, re-ingestible through the same schema.
    res["scene_normalized"] =
        ordered_json::parse(scene_to_json(run.scene()));

    return run.finish(ok ? kExitOk : kExitScene, ok ? "ok" : "fail");
}

int cmd_forward(const Options& opt) {
    Runner run("forward", opt);
    VertexConfig vc = run.scene().as_vertices();
    auto fill = [&](const FTResult& r) {
        ordered_json& res = run.results();
        res["status"] = r.status == SolveStatus::Interior
                            ? "Interior"
                            : "AbsorbedAtVertex";
        if (r.status == SolveStatus::AbsorbedAtVertex)
            res["absorbed_vertex"] =
                vertex_name(static_cast<VertexId>(r.absorbed_vertex));
        res["point"] = point_json(run.scene().k, r.point);
        res["objective"] = r.objective;
        res["arc_lengths"] = r.arc_length;
        ordered_json dirs = ordered_json::array();
        for (double d : r.direction)
            dirs.push_back(std::isnan(d) ? ordered_json(nullptr)
                                         : ordered_json(d * kRad2Deg));
        res["directions_deg"] = dirs;
        res["residual"] = r.residual;
        res["iterations"] = r.iterations;
    };
    try {
        FTResult r = solve_forward(vc, run.scene().tol, run.scene().max_iter);
        fill(r);
        return run.finish(kExitOk, "ok");
    } catch (const NoConvergence& e) {
        fill(e.best);
        run.warn("solver stopped before reaching tolerance; best iterate shown");
        return run.finish(kExitNoConvergence, "no_convergence");
    }
}

int cmd_inverse(const Options& opt) {
    Runner run("inverse", opt);
    AngularConfig cfg = run.scene().as_angular();
    double budget = opt.budget_set ? opt.budget : run.scene().weight_sum();
    ordered_json& res = run.results();
    res["budget"] = budget;
    Position pos = convexity_check(cfg);
    res["position"] = position_name(pos);
    if (pos == Position::NotInterior)
        return run.fail(kExitScene, "InvalidScene",
                        "basepoint is not interior to the quadrilateral");

    PlasticityLine line = plasticity_line(cfg, budget);
    res["plasticity_line"] = line_json(line);
    if (pos == Position::Interior && !on_diagonal_ac(cfg)) {
        PlasticityLine closed = plasticity_line_closed_form(cfg, budget);
        double gap = 0.0;
        for (int i = 0; i < 3; ++i) {
            gap = std::max(gap, std::abs(closed.a[i] - line.a[i]));
            gap = std::max(gap, std::abs(closed.b[i] - line.b[i]));
        }
        res["closed_form_max_gap"] = gap;
        if (gap > 1e-10)
            run.warn("closed-form and linear-solve paths disagree");
    }
    if (pos == Position::OnDiagonalBD || pos == Position::OnBothDiagonals)
        res["diagonal_line"] = diagonal_json(diagonal_case(cfg, budget));

    if (!opt.wd_spec.empty()) {
        ordered_json rows = ordered_json::array();
        for (double wd : parse_wd_spec(opt.wd_spec)) {
            auto w = line.at(wd);
            ordered_json row = weights_row(w);
            row["in_positivity_interval"] = line.positivity.contains(wd);
            rows.push_back(row);
        }
        res["wd_rows"] = rows;
    }
    return run.finish(kExitOk, "ok");
}

int cmd_symmetrize(const Options& opt) {
    Runner run("symmetrize", opt);
    AngularConfig cfg = run.scene().as_angular();
    ordered_json& res = run.results();

    double residual = stationarity_residual(cfg).norm;
    res["stationarity_residual"] = residual;
    if (residual > 1e-8)
        run.warn("weights do not balance to 1e-8; the figure cannot close "
                 "exactly");

    // The figure closes to within the input's own imbalance, so rounded
    // weights (residual up to 1% of the largest weight) still classify as a
    // parallelogram; the report carries the raw gaps either way.
    double max_w = *std::max_element(cfg.weight.begin(), cfg.weight.end());
    double tol = 1e-9 * max_w;
    if (residual <= 1e-2 * max_w) tol = std::max(tol, residual);

    ParallelogramReport rep;
    if (opt.par_class == "direct") {
        rep = direct_parallelogram_check(cfg, tol);
    } else {
        ClassChoice choice = ClassChoice::Auto;
        if (opt.par_class == "A") choice = ClassChoice::A;
        else if (opt.par_class == "B") choice = ClassChoice::B;
        else if (opt.par_class != "auto")
            throw InvalidScene("--class must be A, B, auto or direct");
        rep = symmetrize(cfg, choice, tol);
    }
    res["parallelogram"] = parallelogram_json(rep);
    ordered_json imgs = ordered_json::array();
    for (const auto& p : tangent_image(cfg).point) imgs.push_back(vec_json(p));
    res["tangent_image"] = imgs;

    if (!opt.svg_path.empty()) {
        std::string svg = symmetrization_svg(cfg, rep);
        std::ofstream out(opt.svg_path, std::ios::binary);
        out << svg;
        if (!out) {
            res["svg_written"] = false;
            run.warn("could not write SVG to " + opt.svg_path);
            return run.finish(kExitScene, "ok");
        }
        res["svg_written"] = true;
        res["svg_path"] = opt.svg_path;
    }
    return run.finish(kExitOk, "ok");
}

int cmd_glue(const Options& opt) {
    Runner run("glue", opt);
    if (!opt.k1_set || !opt.k2_set)
        throw InvalidScene("glue requires --k1 and --k2");
    AngularConfig cfg = run.scene().as_angular();
    GlueCase gc = GlueCase::MPrime;
    if (opt.glue_case == "mdoubleprime") gc = GlueCase::MDoublePrime;
    else if (opt.glue_case != "mprime")
        throw InvalidScene("--case must be mprime or mdoubleprime");

    GlueResult res = glue_quad(cfg, gc, Curvature{opt.k1}, Curvature{opt.k2});
    ordered_json& out = run.results();
    ordered_json spec;
    spec["case"] = glue_case_name(res.spec.glue_case);
    spec["k_source"] = res.spec.k_source;
    spec["k1"] = res.spec.k1;
    spec["k2"] = res.spec.k2;
    spec["k2_effective"] = res.spec.k2_effective;
    spec["s"] = res.spec.s;
    spec["epsilon"] = res.spec.epsilon;
    spec["epsilon_raw"] = res.spec.epsilon_raw;
    spec["raw_defect"] = res.spec.raw_defect;
    spec["angle_sum_defect"] = res.spec.angle_sum_defect;
    out["glue_spec"] = spec;
    if (std::abs(res.spec.raw_defect) > 1e-10)
        run.warn("raw gluing defect " + std::to_string(res.spec.raw_defect) +
                 " required interpolating k2");

    ordered_json pert = ordered_json::array();
    for (double t : res.perturbed.theta) pert.push_back(t * kRad2Deg);
    out["perturbed_directions_deg"] = pert;

    double budget = opt.budget_set ? opt.budget : run.scene().weight_sum();
    ComparativePlasticityReport cp =
        comparative_plasticity(cfg, res.perturbed, budget);
    ordered_json comp;
    comp["original_line"] = line_json(cp.original);
    comp["glued_line"] = line_json(cp.glued);
    comp["delta_a"] = cp.delta_a;
    comp["delta_a_sum"] = cp.delta_a[0] + cp.delta_a[1] + cp.delta_a[2];
    comp["matched_wd"] = cp.matched_wd;
    ordered_json ratios = ordered_json::array();
    for (int r = 0; r < 4; ++r) {
        ordered_json row = ordered_json::array();
        for (int s = 0; s < 4; ++s) row.push_back(cp.ratio_quotient[r][s]);
        ratios.push_back(row);
    }
    comp["ratio_quotients"] = ratios;
    out["comparative_plasticity"] = comp;
    return run.finish(kExitOk, "ok");
}

int dispatch(const std::string& cmd, const Options& opt) {
    try {
        if (cmd == "check") return cmd_check(opt);
        if (cmd == "forward") return cmd_forward(opt);
        if (cmd == "inverse") return cmd_inverse(opt);
        if (cmd == "symmetrize") return cmd_symmetrize(opt);
        return cmd_glue(opt);
    } catch (const NoRoot& e) {
        Runner run(cmd, opt);
        ordered_json detail;
        detail["defect_range"] =
            ordered_json::array({e.defect_lo, e.defect_hi});
        return run.fail(kExitDomain, "NoRoot", e.what(), detail);
    } catch (const SingularSystem& e) {
        Runner run(cmd, opt);
        return run.fail(kExitDomain, "SingularSystem", e.what());
    } catch (const NoClassApplicable& e) {
        Runner run(cmd, opt);
        return run.fail(kExitDomain, "NoClassApplicable", e.what());
    } catch (const PatternMismatch& e) {
        Runner run(cmd, opt);
        return run.fail(kExitDomain, "PatternMismatch", e.what());
    } catch (const NotOnDiagonal& e) {
        Runner run(cmd, opt);
        return run.fail(kExitDomain, "NotOnDiagonal", e.what());
    } catch (const DegenerateTriangle& e) {
        Runner run(cmd, opt);
        return run.fail(kExitDomain, "DegenerateTriangle", e.what());
    } catch (const Error& e) {
        // Scene, schema and precondition problems.
        ordered_json err;
        err["command"] = cmd;
        err["scene"] = opt.scene_path;
        err["status"] = "error";
        ordered_json detail;
        detail["message"] = e.what();
        err["error"] = detail;
        std::cout << err.dump(2) << "\n";
        return kExitScene;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Fermat-Torricelli quadrilaterals on constant-"
                 "curvature planes: forward and inverse solvers, plasticity "
                 "lines, symmetrization and comparison gluing"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--scene", opt.scene_path, "Scene JSON file")
        ->required();
    app.add_flag("--json,!--no-json", opt.json,
                 "Machine-readable JSON report (default on)");
    double tol = 0.0;
    auto* tol_opt = app.add_option("--tol", tol, "Solver tolerance override");
    int max_iter = 0;
    auto* iter_opt =
        app.add_option("--max-iter", max_iter, "Iteration cap override");

    app.add_subcommand("check", "Validate the scene and report diagnostics");
    app.add_subcommand("forward", "Solve for the weighted Fermat-Torricelli point");
    auto* inv = app.add_subcommand(
        "inverse", "Plasticity line of the 4-inverse problem");
    inv->add_option("--budget", opt.budget, "Weight budget c")
        ->each([&](const std::string&) { opt.budget_set = true; });
    inv->add_option("--wd", opt.wd_spec,
                    "w_D value or sweep start:stop:count");
    auto* sym = app.add_subcommand(
        "symmetrize", "Tangent-plane symmetrization to a parallelogram");
    sym->add_option("--class", opt.par_class, "A | B | auto | direct");
    sym->add_option("--out-svg", opt.svg_path, "Write the figure as SVG");
    auto* glue = app.add_subcommand(
        "glue", "Comparison-triangle gluing and comparative plasticity");
    glue->add_option("--case", opt.glue_case, "mprime | mdoubleprime");
    glue->add_option("--k1", opt.k1, "Lower curvature bound")
        ->each([&](const std::string&) { opt.k1_set = true; });
    glue->add_option("--k2", opt.k2, "Upper curvature bound")
        ->each([&](const std::string&) { opt.k2_set = true; });
    glue->add_option("--budget", opt.budget, "Weight budget c")
        ->each([&](const std::string&) { opt.budget_set = true; });

    CLI11_PARSE(app, argc, argv);
    if (*tol_opt) opt.tol = tol;
    if (*iter_opt) opt.max_iter = max_iter;

    std::string cmd = app.get_subcommands().front()->get_name();
    return dispatch(cmd, opt);
}
