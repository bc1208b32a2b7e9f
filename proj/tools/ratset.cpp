// ratset: generation, mapping, lifting, and exact verification of
// rational-distance point sets, over a JSON exchange format.
//
// Exit codes: 0 success / all checks pass, 1 a check failed (violations
// are printed as JSON on stdout), 2 usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include "ratset/circle_sets.hpp"
#include "ratset/ellipse_sets.hpp"
#include "ratset/exact_core.hpp"
#include "ratset/lifting.hpp"
#include "ratset/pointset_io.hpp"
#include "ratset/sphere_map.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace ratset;

// Signals "checks ran and failed" after the report is already printed.
struct CheckFailed {};

void emit_set(const PointSet& s, const std::string& out_path) {
    if (out_path.empty())
        write_point_set(s, std::cout);
    else
        write_point_set_file(s, out_path);
}

QPoint parse_point(const std::string& text, std::size_t expect_dim) {
    std::vector<Rat> coords;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        coords.push_back(Rat::parse(text.substr(start, comma - start)));
        start = comma + 1;
    }
    if (coords.size() != expect_dim)
        throw std::invalid_argument("point '" + text + "' has " +
                                    std::to_string(coords.size()) +
                                    " coordinates, expected " +
                                    std::to_string(expect_dim));
    return QPoint(std::move(coords));
}

// Display-only rendering; the doubles here never touch verification.
void write_svg_plot(const PointSet& s, const std::string& path) {
    if (s.dim() != 2)
        throw std::invalid_argument("--plot needs a 2-dimensional set");
    auto to_double = [](const Rat& r) {
        return mpq_class(r.num(), r.den()).get_d();
    };
    double lo = -1.1, hi = 1.1;
    for (const QPoint& p : s)
        for (const Rat& c : p.coords()) {
            lo = std::min(lo, to_double(c) - 0.1);
            hi = std::max(hi, to_double(c) + 0.1);
        }
    const double span = hi - lo;
    const int size = 640;
    std::ofstream svg(path, std::ios::trunc);
    if (!svg) throw std::invalid_argument("cannot open '" + path + "' for writing");
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
        << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
        << "\">\n";
    svg << "<rect width=\"" << size << "\" height=\"" << size
        << "\" fill=\"white\"/>\n";
    for (const QPoint& p : s) {
        const double x = (to_double(p[0]) - lo) / span * size;
        const double y = size - (to_double(p[1]) - lo) / span * size;
        svg << "<circle cx=\"" << x << "\" cy=\"" << y
            << "\" r=\"2.5\" fill=\"steelblue\"/>\n";
    }
    svg << "</svg>\n";
}

void cmd_classify(const std::string& text) {
    const RationalClass c = classify(Rat::parse(text));
    json j;
    j["elliptic"] = c.elliptic;
    j["hyperbolic"] = c.hyperbolic;
    std::cout << j.dump() << "\n";
}

void cmd_circle_gen(unsigned bound, const std::string& out,
                    const std::string& plot) {
    const PointSet s = gen_dense_circle_set(bound);
    if (!plot.empty()) write_svg_plot(s, plot);
    emit_set(s, out);
}

void cmd_circle_probe(const std::string& in, int arcs) {
    const PointSet s = read_point_set_file(in);
    const ArcCoverageReport rep = coverage_probe(s, arcs);
    json j;
    j["arcs"] = rep.arcs;
    if (auto it = s.meta().find("bound"); it != s.meta().end())
        j["bound"] = it->second;
    j["empty_arcs"] = rep.empty_arcs;
    json near = json::array();
    for (const auto& [point, boundary] : rep.near_boundary)
        near.push_back({point, boundary});
    j["near_boundary"] = std::move(near);
    std::cout << j.dump() << "\n";
    if (!rep.empty_arcs.empty()) throw CheckFailed{};
}

void cmd_sphere_map(const std::string& in, const std::string& out) {
    emit_set(transfer_sphere_to_plane(read_point_set_file(in)), out);
}

void cmd_sphere_unmap(const std::string& in, const std::string& out) {
    emit_set(transfer_plane_to_sphere(read_point_set_file(in)), out);
}

void cmd_sphere_verify_rationality_equivalence(const std::string& in) {
    std::ifstream f(in);
    if (!f) throw std::invalid_argument("cannot open '" + in + "' for reading");
    json j;
    try {
        f >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("pairs file: invalid JSON: ") +
                                    e.what());
    }
    if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array())
        throw std::invalid_argument(
            "pairs file: expected an object with a \"pairs\" array");

    auto parse_sphere_point = [](const json& cell, const std::string& where) {
        if (!cell.is_array() || cell.size() < 2)
            throw std::invalid_argument("pairs file: " + where +
                                        " must be an array of rational strings");
        std::vector<Rat> coords;
        for (const json& v : cell) {
            if (!v.is_string())
                throw std::invalid_argument("pairs file: " + where +
                                            ": rationals must be strings");
            coords.push_back(Rat::parse(v.get<std::string>()));
        }
        return SpherePoint(std::move(coords));
    };

    json results = json::array();
    bool all_ok = true;
    for (std::size_t i = 0; i < j["pairs"].size(); ++i) {
        const json& pair = j["pairs"][i];
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("pairs file: entry " + std::to_string(i) +
                                        " must be a two-point array");
        const SpherePoint x =
            parse_sphere_point(pair[0], "pair " + std::to_string(i) + "[0]");
        const SpherePoint y =
            parse_sphere_point(pair[1], "pair " + std::to_string(i) + "[1]");
        const EquivalenceReport rep = verify_rationality_equivalence(x, y);
        json r;
        r["index"] = i;
        r["hypothesis_ok"] = rep.hypothesis_ok;
        r["chord_rational"] = rep.chord_rational;
        r["half_sine_rational"] = rep.half_sine_rational;
        r["tangent_side_rational"] = rep.tangent_side_rational;
        r["tangent_triangle_rational"] = rep.tangent_triangle_rational;
        r["consistent"] = rep.consistent;
        results.push_back(std::move(r));
        all_ok = all_ok && rep.hypothesis_ok && rep.consistent;
    }
    json outj;
    outj["pairs"] = std::move(results);
    outj["all_ok"] = all_ok;
    std::cout << outj.dump() << "\n";
    if (!all_ok) throw CheckFailed{};
}

void cmd_lift(std::size_t dim, unsigned bound, const std::string& r0,
              const std::string& out) {
    const LiftConfig cfg(Rat::parse(r0), dim, bound);
    emit_set(build_rational_set(cfg), out);
}

void cmd_integral(const std::string& in, long take, const std::string& out) {
    PointSet s = read_point_set_file(in);
    if (take >= 0) s = s.take_prefix(static_cast<std::size_t>(take));
    emit_set(integral_set(s), out);
}

void cmd_ellipse_gen(const std::string& a_text, const std::string& b_text,
                     const std::string& x0_text, const std::string& y0_text,
                     bool standard, unsigned count, const std::string& out,
                     const std::string& plot) {
    const Rat a = Rat::parse(a_text);
    const Rat b = Rat::parse(b_text);
    std::optional<Ellipse> e;
    std::optional<EllipseBase> base;
    if (standard) {
        if (!x0_text.empty() || !y0_text.empty())
            throw std::invalid_argument(
                "--standard derives the base point; do not pass --x0/--y0");
        auto [se, sb] = standard_ellipse(a, b);
        e = se;
        base = sb;
    } else {
        if (x0_text.empty() || y0_text.empty())
            throw std::invalid_argument(
                "ellipse gen needs --x0 and --y0 (or --standard)");
        e = Ellipse(a, b);
        base = EllipseBase(*e, Rat::parse(x0_text), Rat::parse(y0_text));
    }
    PointSet s = gen_ellipse_set(*e, *base, count);
    const HyperbolicScaleReport rep = hyperbolic_scale_check(*e, s);
    s.meta()["hyperbolic_applicable"] = rep.applicable ? "true" : "false";
    if (rep.applicable) {
        s.meta()["hyperbolic_ok"] = rep.ok ? "true" : "false";
        s.meta()["hyperbolic_scale"] = rep.scale->to_string();
    }
    if (!plot.empty()) write_svg_plot(s, plot);
    emit_set(s, out);
}

void cmd_export_csv(const std::string& in, const std::string& out) {
    const PointSet s = read_point_set_file(in);
    std::ofstream f(out, std::ios::trunc);
    if (!f) throw std::invalid_argument("cannot open '" + out + "' for writing");
    for (const QPoint& p : s) {
        for (std::size_t i = 0; i < p.dim(); ++i) {
            if (i) f << ',';
            f << p[i];
        }
        f << '\n';
    }
}

void cmd_verify(const std::string& in, const std::string& type,
                const std::string& base_text, const std::string& scale_text) {
    const PointSet s = read_point_set_file(in);
    json j;
    if (type == "rational") {
        const RationalSetReport rep = verify_rational_set(s);
        j["ok"] = rep.ok;
        json v = json::array();
        for (const auto& [a, b] : rep.violations) v.push_back({a, b});
        j["violations"] = std::move(v);
        std::cout << j.dump() << "\n";
        if (!rep.ok) throw CheckFailed{};
        return;
    }
    if (type != "elliptic" && type != "hyperbolic")
        throw std::invalid_argument(
            "--type must be rational, elliptic, or hyperbolic");
    if (base_text.empty())
        throw std::invalid_argument("--type " + type + " needs --base");
    const QPoint base = parse_point(base_text, s.dim());
    const Rat scale = Rat::parse(scale_text);
    const ScaledTypeReport rep =
        verify_scaled_type(s, base, scale,
                           type == "elliptic" ? RationalType::elliptic
                                              : RationalType::hyperbolic);
    j["ok"] = rep.ok;
    j["violations"] = rep.violations;
    std::cout << j.dump() << "\n";
    if (!rep.ok) throw CheckFailed{};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact rational-distance point sets on circles, spheres, euclidean "
        "spaces, and ellipses, with machine-checked certificates"};
    app.require_subcommand(1);

    // classify
    std::string classify_arg;
    auto* classify_cmd =
        app.add_subcommand("classify", "Classify a rational as elliptic/hyperbolic");
    classify_cmd->add_option("rational", classify_arg, "Rational, e.g. 3/4")
        ->required();

    // circle gen / probe
    auto* circle = app.add_subcommand("circle", "Dense circle sets");
    circle->require_subcommand(1);
    unsigned circle_bound = 5;
    std::string circle_out, circle_plot;
    auto* circle_gen = circle->add_subcommand(
        "gen", "Generate the dense rational-distance set on the unit circle");
    circle_gen->add_option("--bound", circle_bound, "Parameter bound")
        ->required();
    circle_gen->add_option("--out", circle_out, "Output file (default stdout)");
    circle_gen->add_option("--plot", circle_plot, "Optional SVG rendering");
    std::string probe_in;
    int probe_arcs = 64;
    auto* circle_probe =
        circle->add_subcommand("probe", "Arc coverage probe of a circle set");
    circle_probe->add_option("--arcs", probe_arcs, "Arc count (multiple of 4)")
        ->required();
    circle_probe->add_option("--in", probe_in, "Input point-set file")
        ->required();

    // sphere map / unmap / verify-t32
    auto* sphere = app.add_subcommand("sphere", "Half-angle map transfers");
    sphere->require_subcommand(1);
    std::string smap_in, smap_out;
    auto* sphere_map = sphere->add_subcommand(
        "map", "Sphere set -> tangent-plane set (the half-angle map)");
    sphere_map->add_option("--in", smap_in, "Input sphere set")->required();
    sphere_map->add_option("--out", smap_out, "Output file (default stdout)");
    std::string sunmap_in, sunmap_out;
    auto* sphere_unmap = sphere->add_subcommand(
        "unmap", "Plane set -> sphere set (inverse half-angle map)");
    sphere_unmap->add_option("--in", sunmap_in, "Input plane set")->required();
    sphere_unmap->add_option("--out", sunmap_out, "Output file (default stdout)");
    std::string t32_in;
    auto* sphere_t32 = sphere->add_subcommand(
        "verify-t32", "Check the four-way rationality equivalence on point pairs");
    sphere_t32->add_option("--in", t32_in, "Pairs file")->required();

    // lift
    std::size_t lift_dim = 3;
    unsigned lift_bound = 5;
    std::string lift_r0 = "3/4", lift_out;
    auto* lift = app.add_subcommand(
        "lift", "Build a full-rank non-cospherical rational set by lifting");
    lift->add_option("--dim", lift_dim, "Target dimension (>= 2)")->required();
    lift->add_option("--bound", lift_bound, "Seed circle bound")->required();
    lift->add_option("--r0", lift_r0, "Dilation radius (1 + r0^2 must be square)");
    lift->add_option("--out", lift_out, "Output file (default stdout)");

    // integral
    std::string integral_in, integral_out;
    long integral_take = -1;
    auto* integral = app.add_subcommand(
        "integral", "Clear denominators to an integral point set");
    integral->add_option("--in", integral_in, "Input point-set file")->required();
    integral->add_option("--take", integral_take, "Use only the first n points");
    integral->add_option("--out", integral_out, "Output file (default stdout)");

    // ellipse gen
    auto* ellipse = app.add_subcommand("ellipse", "Dense ellipse sets");
    ellipse->require_subcommand(1);
    std::string ell_a, ell_b, ell_x0, ell_y0, ell_out, ell_plot;
    bool ell_standard = false;
    unsigned ell_count = 5;
    auto* ellipse_gen = ellipse->add_subcommand(
        "gen", "Generate a rational-distance set on a x^2 + b y^2 = 1");
    ellipse_gen->add_option("--a", ell_a, "Coefficient a (semi-axis with --standard)")
        ->required();
    ellipse_gen->add_option("--b", ell_b, "Coefficient b (semi-axis with --standard)")
        ->required();
    ellipse_gen->add_option("--x0", ell_x0, "Base point x");
    ellipse_gen->add_option("--y0", ell_y0, "Base point y");
    ellipse_gen->add_flag("--standard", ell_standard,
                          "Semi-axis form x^2/a^2 + y^2/b^2 = 1 with base "
                          "(3a/5, 4b/5)");
    ellipse_gen->add_option("--count", ell_count, "Index range [-count, count]")
        ->required();
    ellipse_gen->add_option("--out", ell_out, "Output file (default stdout)");
    ellipse_gen->add_option("--plot", ell_plot, "Optional SVG rendering");

    // export
    std::string export_in, export_out;
    auto* export_cmd =
        app.add_subcommand("export", "Export a point-set file as CSV");
    export_cmd->add_option("--in", export_in, "Input point-set file")->required();
    export_cmd->add_option("--out", export_out, "Output CSV file")->required();

    // verify
    std::string verify_in, verify_type, verify_base, verify_scale = "1";
    auto* verify = app.add_subcommand("verify", "Exact distance-set checks");
    verify->add_option("--in", verify_in, "Input point-set file")->required();
    verify
        ->add_option("--type", verify_type,
                     "rational | elliptic | hyperbolic")
        ->required();
    verify->add_option("--base", verify_base,
                       "Base point for typed checks, e.g. \"1,0\"");
    verify->add_option("--scale", verify_scale, "Distance scale (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify_cmd) cmd_classify(classify_arg);
        if (*circle_gen) cmd_circle_gen(circle_bound, circle_out, circle_plot);
        if (*circle_probe) cmd_circle_probe(probe_in, probe_arcs);
        if (*sphere_map) cmd_sphere_map(smap_in, smap_out);
        if (*sphere_unmap) cmd_sphere_unmap(sunmap_in, sunmap_out);
        if (*sphere_t32) cmd_sphere_verify_rationality_equivalence(t32_in);
        if (*lift) cmd_lift(lift_dim, lift_bound, lift_r0, lift_out);
        if (*integral) cmd_integral(integral_in, integral_take, integral_out);
        if (*ellipse_gen)
            cmd_ellipse_gen(ell_a, ell_b, ell_x0, ell_y0, ell_standard,
                            ell_count, ell_out, ell_plot);
        if (*export_cmd) cmd_export_csv(export_in, export_out);
        if (*verify) cmd_verify(verify_in, verify_type, verify_base, verify_scale);
    } catch (const CheckFailed&) {
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "ratset: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
