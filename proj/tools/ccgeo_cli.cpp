// Deterministic scenario runner: computes on body/group/problem files and
// runs the randomized verification suites.  Every command prints a JSON
// report; exit code 0 means all checks passed, 1 means a check failed and 2
// means bad input.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ccgeo/suites.hpp"

namespace {

using ccgeo::ConvexBody;
using ccgeo::Json;
using ccgeo::Vec;

int finish(Json& report, const std::string& report_path) {
    int failed = 0;
    for (const Json& c : report["checks"])
        if (!c["pass"].get<bool>()) ++failed;
    report["pass"] = failed == 0;
    if (report_path.empty())
        std::cout << report.dump(2) << "\n";
    else
        ccgeo::write_json_file(report_path, report);
    return failed == 0 ? 0 : 1;
}

void check(Json& report, const std::string& name, double defect, double bound) {
    Json c;
    c["check"] = name;
    c["defect"] = defect;
    c["bound"] = bound;
    c["pass"] = defect <= bound;
    report["checks"].push_back(c);
}

int cmd_hausdorff(const std::string& a_path, const std::string& b_path, double tol) {
    ConvexBody a = ccgeo::read_body(a_path);
    ConvexBody b = ccgeo::read_body(b_path);
    Json report;
    report["command"] = "hausdorff";
    report["a"] = a_path;
    report["b"] = b_path;
    report["value"] = ccgeo::hausdorff(a, b);
    report["checks"] = Json::array();
    check(report, "symmetry", std::abs(ccgeo::hausdorff(a, b) - ccgeo::hausdorff(b, a)), tol);
    return finish(report, "");
}

int cmd_minkowski(const std::string& a_path, const std::string& b_path,
                  const std::string& out_path, double tol) {
    ConvexBody a = ccgeo::read_body(a_path);
    ConvexBody b = ccgeo::read_body(b_path);
    ConvexBody sum = ccgeo::minkowski_sum(a, b);
    ccgeo::write_body(out_path, sum);
    Json report;
    report["command"] = "minkowski";
    report["a"] = a_path;
    report["b"] = b_path;
    report["out"] = out_path;
    report["vertices"] = sum.size();
    report["checks"] = Json::array();
    ccgeo::Rng rng(0);
    double defect = 0.0;
    for (int i = 0; i < 32; ++i) {
        Vec u = rng.unit(a.dim);
        defect = std::max(defect, std::abs(ccgeo::support(sum, u).value -
                                           ccgeo::support(a, u).value -
                                           ccgeo::support(b, u).value));
    }
    check(report, "support_additivity", defect, tol);
    return finish(report, "");
}

int cmd_embed(const std::string& a_path, const std::string& b_path, int dirs, double tol) {
    ConvexBody a = ccgeo::read_body(a_path);
    ConvexBody b = ccgeo::read_body(b_path);
    double dh = ccgeo::hausdorff(a, b);
    Json report;
    report["command"] = "embed";
    report["a"] = a_path;
    report["b"] = b_path;
    report["hausdorff"] = dh;
    report["checks"] = Json::array();

    ccgeo::FormalDifference ja = ccgeo::embed_j(a), jb = ccgeo::embed_j(b);
    check(report, "embedding_isometry",
          std::abs(ccgeo::fd_norm(ccgeo::fd_sub(ja, jb)) - dh), tol);
    check(report, "additivity",
          ccgeo::detail::fd_defect(ccgeo::fd_add(ja, jb),
                                   ccgeo::embed_j(ccgeo::minkowski_sum(a, b))),
          tol);

    // sampled support functional: a lower bound on d_H from `dirs` directions
    ccgeo::Rng rng(0);
    std::vector<Vec> sample;
    for (int i = 0; i < dirs; ++i) sample.push_back(rng.unit(a.dim));
    double sampled = 0.0;
    for (double v : ccgeo::support_realization({a, b}, sample).values)
        sampled = std::max(sampled, std::abs(v));
    report["sampled_support_gap"] = dh - sampled;
    check(report, "sampled_support_lower_bound", sampled - dh, tol);
    if (a.dim == 2) {
        double realized = 0.0;
        for (double v :
             ccgeo::support_realization({a, b}, ccgeo::exact_direction_set_2d(a, b)).values)
            realized = std::max(realized, std::abs(v));
        check(report, "exact_realization_2d", std::abs(realized - dh), tol);
    }
    return finish(report, "");
}

int cmd_extend(const std::string& problem_path, double tol) {
    ccgeo::ExtensionProblem p = ccgeo::read_problem(problem_path);
    std::vector<ConvexBody> FG = ccgeo::equivariant_average(p, ccgeo::dugundji_extend(p));
    ccgeo::ExtensionReport r = ccgeo::verify_extension(p, FG);
    Json report;
    report["command"] = "extend";
    report["problem"] = problem_path;
    report["points"] = p.space.n;
    report["group_order"] = p.space.group.order();
    report["checks"] = Json::array();
    check(report, "restriction_defect", r.restriction_defect, tol);
    check(report, "equivariance_defect", r.equivariance_defect, tol);
    return finish(report, "");
}

int cmd_cantor(int k) {
    ccgeo::CantorScene s = ccgeo::build_cantor_scene(k);
    Json report;
    report["command"] = "cantor";
    report["k"] = k;
    report["rows"] = Json::array();
    double unit_defect = 0.0, max_ratio = 0.0;
    for (const ccgeo::CantorRow& row : ccgeo::discontinuity_report(s)) {
        Json r;
        Json bits = Json::array();
        for (int i = 0; i < k; ++i) bits.push_back((row.y >> i) & 1);
        r["y"] = bits;
        r["dH"] = row.dh;
        r["dist"] = row.dist;
        r["ratio"] = row.ratio;
        report["rows"].push_back(r);
        unit_defect = std::max(unit_defect, std::abs(row.dh - 1.0));
        max_ratio = std::max(max_ratio, row.ratio);
    }
    report["checks"] = Json::array();
    check(report, "unit_distance", unit_defect, 0.0);
    check(report, "max_ratio", std::abs(max_ratio - std::ldexp(1.0, k)), 0.0);
    return finish(report, "");
}

int cmd_lift(const std::string& group_path, const std::string& body_path, double tol) {
    ccgeo::GroupAction g = ccgeo::read_group(group_path);
    ConvexBody a = ccgeo::read_body(body_path);
    ccgeo::LiftedSpace sp = ccgeo::make_lifted_space(g);
    ConvexBody lifted = ccgeo::lift_body(a, sp);
    Json report;
    report["command"] = "lift";
    report["group"] = group_path;
    report["body"] = body_path;
    report["lifted_dim"] = sp.lifted_dim;
    report["lifted_body"] = ccgeo::body_to_json(lifted);
    report["checks"] = Json::array();
    double equiv = 0.0, iso = 0.0;
    for (int h = 0; h < g.order(); ++h) {
        const ccgeo::GroupElement& el = g.elements[static_cast<std::size_t>(h)];
        equiv = std::max(equiv,
                         ccgeo::lifted_hausdorff(sp, ccgeo::lift_body(ccgeo::act_body(el, a), sp),
                                                 ccgeo::apply_lifted_body(sp, h, lifted)));
        for (const Vec& v : lifted.vertices)
            iso = std::max(iso, std::abs(ccgeo::sup_block_norm(sp, ccgeo::apply_lifted(sp, h, v)) -
                                         ccgeo::sup_block_norm(sp, v)));
    }
    check(report, "body_equivariance", equiv, tol);
    check(report, "exact_isometry", iso, 0.0);
    return finish(report, "");
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int cases, double tol,
               const std::string& report_path) {
    ccgeo::SuiteReport r = ccgeo::run_suite(suite, seed, cases, tol);
    Json report = r.json;
    report["seed"] = seed;
    report["tol"] = tol;
    if (report_path.empty())
        std::cout << report.dump(2) << "\n";
    else
        ccgeo::write_json_file(report_path, report);
    return r.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex-geometry scenario runner"};
    app.require_subcommand(1);

    std::string a_path, b_path, out_path, problem_path, group_path, body_path, suite,
        report_path;
    double tol = ccgeo::kDefaultTol;
    int dirs = 64, k = 3, cases = 100;
    std::uint64_t seed = 0;

    CLI::App* c_h = app.add_subcommand("hausdorff", "Hausdorff distance of two body files");
    c_h->add_option("--a", a_path)->required();
    c_h->add_option("--b", b_path)->required();
    c_h->add_option("--tol", tol);

    CLI::App* c_m = app.add_subcommand("minkowski", "Minkowski sum written to a body file");
    c_m->add_option("--a", a_path)->required();
    c_m->add_option("--b", b_path)->required();
    c_m->add_option("--out", out_path)->required();
    c_m->add_option("--tol", tol);

    CLI::App* c_e = app.add_subcommand("embed", "formal-difference checks on two bodies");
    c_e->add_option("--a", a_path)->required();
    c_e->add_option("--b", b_path)->required();
    c_e->add_option("--dirs", dirs);
    c_e->add_option("--tol", tol);

    CLI::App* c_x = app.add_subcommand("extend", "equivariant extension of a problem file");
    c_x->add_option("--problem", problem_path)->required();
    c_x->add_option("--tol", tol);

    CLI::App* c_c = app.add_subcommand("cantor", "truncated-Cantor discontinuity report");
    c_c->add_option("--k", k)->required();

    CLI::App* c_l = app.add_subcommand("lift", "linearize a body under an affine group");
    c_l->add_option("--group", group_path)->required();
    c_l->add_option("--body", body_path)->required();
    c_l->add_option("--tol", tol);

    CLI::App* c_v = app.add_subcommand("verify", "run a verification suite");
    c_v->add_option("--suite", suite)->required();
    c_v->add_option("--seed", seed)->required();
    c_v->add_option("--cases", cases)->required();
    c_v->add_option("--tol", tol);
    c_v->add_option("--report", report_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_h->parsed()) return cmd_hausdorff(a_path, b_path, tol);
        if (c_m->parsed()) return cmd_minkowski(a_path, b_path, out_path, tol);
        if (c_e->parsed()) return cmd_embed(a_path, b_path, dirs, tol);
        if (c_x->parsed()) return cmd_extend(problem_path, tol);
        if (c_c->parsed()) return cmd_cantor(k);
        if (c_l->parsed()) return cmd_lift(group_path, body_path, tol);
        if (c_v->parsed()) return cmd_verify(suite, seed, cases, tol, report_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
