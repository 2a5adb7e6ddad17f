#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>

#include "ctrans/field_io.hpp"
#include "ctrans/hardy.hpp"
#include "ctrans/measure_io.hpp"
#include "ctrans/parser.hpp"
#include "ctrans/screens.hpp"
#include "ctrans/transform.hpp"
#include "ctrans/verify.hpp"
#include "ctrans/version.hpp"

using namespace ctrans;

namespace {

std::vector<double> split_numbers(const std::string& s, char sep) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t next = s.find(sep, pos);
        const std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw SchemaError("empty numeric field in '" + s + "'");
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw SchemaError("malformed number '" + tok + "' in '" + s + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

Complex parse_complex_arg(const std::string& s) {
    const auto v = split_numbers(s, ',');
    if (v.size() == 1) return Complex{v[0], 0.0};
    if (v.size() != 2) throw SchemaError("expected 're,im' but got '" + s + "'");
    return Complex{v[0], v[1]};
}

Region parse_region_arg(const std::string& s) {
    const auto colon = s.find(':');
    const std::string kind = s.substr(0, colon == std::string::npos ? s.size() : colon);
    const std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (kind == "annulus") {
        const auto v = split_numbers(rest, ':');
        if (v.size() != 4) throw SchemaError("annulus region needs cx:cy:rmin:rmax");
        return Annulus{Complex{v[0], v[1]}, v[2], v[3]};
    }
    if (kind == "disk") {
        const auto v = split_numbers(rest, ':');
        if (v.size() != 3) throw SchemaError("disk region needs cx:cy:r");
        return DiskRegion{Complex{v[0], v[1]}, v[2]};
    }
    if (kind == "points") {
        std::vector<Complex> pts;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const std::size_t next = rest.find(';', pos);
            pts.push_back(parse_complex_arg(
                rest.substr(pos, next == std::string::npos ? next : next - pos)));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (pts.empty()) throw SchemaError("points region is empty");
        return pts;
    }
    throw SchemaError("unknown region kind '" + kind + "' (annulus|disk|points)");
}

std::vector<Complex> parse_grid_arg(const std::string& s) {
    const auto v = split_numbers(s, ':');
    if (v.size() != 5 || v[4] < 1 || v[4] != std::floor(v[4]))
        throw SchemaError("grid needs xmin:xmax:ymin:ymax:steps");
    const int steps = static_cast<int>(v[4]);
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(steps) * steps);
    for (int iy = 0; iy < steps; ++iy)
        for (int ix = 0; ix < steps; ++ix) {
            const double x = steps == 1 ? v[0] : v[0] + (v[1] - v[0]) * ix / (steps - 1);
            const double y = steps == 1 ? v[2] : v[2] + (v[3] - v[2]) * iy / (steps - 1);
            pts.emplace_back(x, y);
        }
    return pts;
}

CircularDomain parse_domain_args(const std::string& outer, const std::vector<std::string>& holes) {
    const auto o = split_numbers(outer, ':');
    if (o.size() != 3) throw SchemaError("--outer needs cx:cy:R");
    std::vector<Circle> hs;
    for (const std::string& h : holes) {
        const auto v = split_numbers(h, ':');
        if (v.size() != 3) throw SchemaError("--hole needs cx:cy:r");
        hs.push_back(Circle{Complex{v[0], v[1]}, v[2]});
    }
    return CircularDomain{Circle{Complex{o[0], o[1]}, o[2]}, std::move(hs)};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

// Loads every document from the given paths into one registry; the main
// measure is the last document of the last file unless selected by name.
LoadedBundle load_inputs(const std::vector<std::string>& paths, const std::string& select) {
    std::vector<MeasureSpec> specs;
    for (const std::string& p : paths) {
        const json doc = read_json_file(p);
        if (doc.is_array())
            for (const json& d : doc) specs.push_back(measure_from_json(d));
        else
            specs.push_back(measure_from_json(doc));
    }
    if (specs.empty()) throw SchemaError("no measure documents given");
    const std::string main_name = select.empty() ? specs.back().name : select;
    LoadedBundle out;
    out.registry.add_all(std::move(specs));
    out.main = out.registry.require(main_name);
    return out;
}

std::shared_ptr<const MeasureSpec> builtin_scenario() {
    const auto nuK = atom_measure("nuK", Complex{0.5, 0.0}, Complex{1.0, 0.0});
    return std::make_shared<const MeasureSpec>(screened_scenario(nuK));
}

Complex domain_probe(const CircularDomain& d) {
    const double gap = d.min_gap();
    for (double f : {0.0, 0.3, 0.5, 0.7, 0.85}) {
        for (int k = 0; k < 8; ++k) {
            const double t = 2.0 * kPi * k / 8.0;
            const Complex z =
                d.outer.center + f * d.outer.radius * Complex{std::cos(t), std::sin(t)};
            if (d.contains(z) && d.boundary_distance(z) > gap / 3.0) return z;
        }
    }
    throw PreconditionError("no probe point found inside the domain");
}

struct Report {
    json doc;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Report(const std::string& command) {
        doc["command"] = command;
        doc["version"] = kVersion;
    }

    int finish(int code, const std::string& out_path = {}) {
        const auto dt = std::chrono::steady_clock::now() - t0;
        doc["wall_time_ms"] =
            std::chrono::duration_cast<std::chrono::microseconds>(dt).count() / 1000.0;
        doc["exit"] = code;
        if (!out_path.empty()) write_json_file(doc, out_path);
        std::cout << doc.dump(2) << '\n';
        return code;
    }
};

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const InconsistencyError*>(&e)) return 4;
    if (dynamic_cast<const GuardDistanceError*>(&e)) return 4;
    if (dynamic_cast<const PreconditionError*>(&e)) return 3;
    return 2; // schema, parse, link, IO
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite complex measures in the plane and their Cauchy transforms"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::vector<std::string> in_paths;
    std::string select_measure, out_path, emit_spec_path, region_str, expected_str;
    std::string grid_str = "-2:2:-2:2:41", format = "csv";
    std::string kappa_str = "1", f_str = "z+1/z", outer_str = "0:0:1", x0_str = "2,0";
    std::vector<std::string> hole_strs, at_strs, domain_strs;
    int nodes = kDefaultNodes, kmax = 20, samples = 200, disks = 3, eps_steps = 30;
    double tol = 1e-9, eps0 = 1e-2, eps_ratio = 0.5, eps_pick = 0.0;
    std::string r_grid_str;
    std::string atom_str = "0.5,0", mass_str = "1,0";

    auto add_in = [&](CLI::App* c) {
        c->add_option("--in", in_paths, "measure spec JSON file(s)");
        c->add_option("--measure", select_measure, "name of the measure to use (default: last)");
    };
    auto add_nodes = [&](CLI::App* c) {
        c->add_option("--nodes", nodes, "quadrature nodes per carrier");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate the transform at points");
    add_in(eval);
    add_nodes(eval);
    eval->add_option("--at", at_strs, "evaluation point re,im (repeatable)");
    eval->add_option("--out", out_path, "write the report JSON here");
    eval->add_option("--emit-spec", emit_spec_path, "write the canonicalized measure bundle");

    CLI::App* grid = app.add_subcommand("grid", "sample the transform on a grid");
    add_in(grid);
    add_nodes(grid);
    grid->add_option("--grid", grid_str, "xmin:xmax:ymin:ymax:steps");
    grid->add_option("--out", out_path, "field file path (default field.csv/.json)");
    grid->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* moments = app.add_subcommand("moments", "power moments of the measure");
    add_in(moments);
    add_nodes(moments);
    moments->add_option("--kmax", kmax, "check k = 0..kmax")->check(CLI::Range(0, 50));
    moments->add_option("--tol", tol, "pass threshold on k >= 1 moments");
    moments->add_option("--out", out_path, "write the report JSON here");

    CLI::App* verify = app.add_subcommand("verify", "compare the transform against a target");
    add_in(verify);
    add_nodes(verify);
    verify->add_option("--region", region_str,
                       "annulus:cx:cy:rmin:rmax | disk:cx:cy:r | points:re,im;...");
    verify->add_option("--expected", expected_str, "expected field expression (default 0)");
    verify->add_option("--tol", tol, "tolerance");
    verify->add_option("--samples", samples, "sample count (>= 50)");
    verify->add_option("--out", out_path, "write the report JSON here");

    CLI::App* sv = app.add_subcommand("screen-sv", "screen a measure outside the unit circle");
    add_in(sv);
    add_nodes(sv);
    sv->add_option("--atom", atom_str, "source atom location re,im (when no --in)");
    sv->add_option("--mass", mass_str, "source atom mass re,im (when no --in)");
    sv->add_option("--tol", tol, "self-check tolerance");
    sv->add_option("--out", out_path, "measure bundle path (default screen_sv.json)");

    CLI::App* ex3 =
        app.add_subcommand("screen-ex3", "point mass with outer and per-disk screens");
    add_nodes(ex3);
    ex3->add_option("--disks", disks, "number of screen disks")->check(CLI::Range(1, 12));
    ex3->add_option("--tol", tol, "self-check tolerance");
    ex3->add_option("--out", out_path, "measure bundle path (default screen_ex3.json)");

    CLI::App* p42 = app.add_subcommand("problem42", "indicator measure of circular domains");
    add_nodes(p42);
    p42->add_option("--domain", domain_strs,
                    "cx:cy:R[:hx:hy:hr ...] (repeatable; default two unit disks at +-3)");
    p42->add_option("--tol", tol, "self-check tolerance");
    p42->add_option("--out", out_path, "measure bundle path (default problem42.json)");

    CLI::App* h1 = app.add_subcommand("h1", "boundary L1 norm over shrinking contours");
    h1->add_option("--kappa", kappa_str, "holomorphic density expression");
    h1->add_option("--outer", outer_str, "outer circle cx:cy:R");
    h1->add_option("--hole", hole_strs, "hole circle cx:cy:r (repeatable)");
    h1->add_option("--eps0", eps0, "initial contour offset");
    h1->add_option("--eps-ratio", eps_ratio, "geometric ratio in (0,1)");
    h1->add_option("--eps-steps", eps_steps, "maximum schedule steps");
    h1->add_option("--out", out_path, "write the report JSON here");

    CLI::App* nk = app.add_subcommand("nu-kappa", "boundary measure with transform kappa");
    add_nodes(nk);
    nk->add_option("--kappa", kappa_str, "holomorphic density expression");
    nk->add_option("--outer", outer_str, "outer circle cx:cy:R");
    nk->add_option("--hole", hole_strs, "hole circle cx:cy:r (repeatable)");
    nk->add_option("--eps", eps_pick, "contour offset (default: converged tail)");
    nk->add_option("--eps0", eps0, "initial contour offset");
    nk->add_option("--eps-ratio", eps_ratio, "geometric ratio in (0,1)");
    nk->add_option("--eps-steps", eps_steps, "maximum schedule steps");
    nk->add_option("--tol", tol, "self-check tolerance");
    nk->add_option("--out", out_path, "measure bundle path (default nu_kappa.json)");

    CLI::App* dec = app.add_subcommand("decompose", "split F into per-boundary Hardy parts");
    add_nodes(dec);
    dec->add_option("--f", f_str, "function to decompose");
    dec->add_option("--outer", outer_str, "outer circle cx:cy:R");
    dec->add_option("--hole", hole_strs, "hole circle cx:cy:r (repeatable; default 0:0:0.3)");
    dec->add_option("--tol", tol, "reconstruction tolerance");
    dec->add_option("--out", out_path, "write the report JSON here");

    CLI::App* tum = app.add_subcommand("tumarkin", "radial-difference functional on the circle");
    add_in(tum);
    add_nodes(tum);
    tum->add_option("--r-grid", r_grid_str, "comma-separated radii in (0,1)");
    tum->add_option("--out", out_path, "write the report JSON here");

    CLI::App* tr = app.add_subcommand("transport", "moebius pushforward by 1/(x0 - z)");
    add_in(tr);
    add_nodes(tr);
    tr->add_option("--x0", x0_str, "moebius parameter re,im");
    tr->add_option("--tol", tol, "identity-check tolerance");
    tr->add_option("--out", out_path, "measure bundle path (default transported.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // bad flags and malformed invocations are input errors
    }

    try {
        if (eval->parsed()) {
            Report rep("eval");
            const auto bundle = in_paths.empty()
                                    ? LoadedBundle{MeasureRegistry{}, builtin_scenario()}
                                    : load_inputs(in_paths, select_measure);
            if (at_strs.empty()) at_strs = {"2,0"};
            rep.doc["scenario"] = bundle.main->name;
            rep.doc["options"] = {{"in", in_paths}, {"nodes", nodes}, {"at", at_strs}};
            json pts = json::array();
            bool any_unreliable = false;
            for (const std::string& s : at_strs) {
                const Complex z = parse_complex_arg(s);
                json entry;
                entry["z"] = complex_json(z);
                try {
                    entry["value"] = complex_json(transform(*bundle.main, z, nodes));
                } catch (const GuardDistanceError& e) {
                    entry["unreliable"] = true;
                    entry["reason"] = e.what();
                    any_unreliable = true;
                }
                pts.push_back(entry);
            }
            rep.doc["results"] = {{"points", pts}};
            if (!emit_spec_path.empty())
                write_json_file(bundle_to_json(*bundle.main), emit_spec_path);
            return rep.finish(any_unreliable ? 4 : 0, out_path);
        }

        if (grid->parsed()) {
            Report rep("grid");
            const auto bundle = in_paths.empty()
                                    ? LoadedBundle{MeasureRegistry{}, builtin_scenario()}
                                    : load_inputs(in_paths, select_measure);
            const std::vector<Complex> pts = parse_grid_arg(grid_str);
            const TransformField field = transform_grid(*bundle.main, pts, nodes);
            if (out_path.empty()) out_path = format == "csv" ? "field.csv" : "field.json";
            if (format == "csv")
                write_field_csv(field, out_path);
            else
                write_json_file(field_to_json(field), out_path);
            int reliable = 0;
            for (const bool b : field.reliable) reliable += b ? 1 : 0;
            rep.doc["scenario"] = bundle.main->name;
            rep.doc["options"] = {
                {"in", in_paths}, {"nodes", nodes}, {"grid", grid_str}, {"format", format}};
            rep.doc["results"] = {{"file", out_path},
                                  {"points", static_cast<int>(field.size())},
                                  {"reliable", reliable}};
            return rep.finish(0);
        }

        if (moments->parsed()) {
            Report rep("moments");
            if (moments->count("--tol") == 0) tol = 1e-10;
            const auto bundle = in_paths.empty()
                                    ? LoadedBundle{MeasureRegistry{}, builtin_scenario()}
                                    : load_inputs(in_paths, select_measure);
            json vals = json::array();
            double max_abs = 0.0;
            for (int k = 0; k <= kmax; ++k) {
                const Complex mk = moment(*bundle.main, k, nodes);
                vals.push_back(complex_json(mk));
                if (k >= 1) max_abs = std::max(max_abs, std::abs(mk));
            }
            const bool pass = max_abs < tol;
            rep.doc["scenario"] = bundle.main->name;
            rep.doc["options"] = {{"in", in_paths}, {"nodes", nodes}, {"kmax", kmax}, {"tol", tol}};
            rep.doc["results"] = {
                {"moments", vals}, {"max_abs_positive_moment", max_abs}, {"pass", pass}};
            return rep.finish(pass ? 0 : 1, out_path);
        }

        if (verify->parsed()) {
            Report rep("verify");
            const auto bundle = in_paths.empty()
                                    ? LoadedBundle{MeasureRegistry{}, builtin_scenario()}
                                    : load_inputs(in_paths, select_measure);
            if (region_str.empty()) region_str = "annulus:0:0:1.1:3";
            if (verify->count("--nodes") == 0) nodes = 1024;
            const Region region = parse_region_arg(region_str);
            std::optional<Expr> expected;
            if (!expected_str.empty() && expected_str != "0") {
                Expr e = parse_density(expected_str);
                expected =
                    e.resolve([&](const std::string& name) { return bundle.registry.find(name); });
            }
            const VerificationReport vr = verify_vanishing(*bundle.main, region, expected, tol,
                                                           samples, nodes, bundle.main->name);
            rep.doc["scenario"] = bundle.main->name;
            rep.doc["options"] = {{"in", in_paths},        {"nodes", nodes},
                                  {"region", region_str},  {"expected", expected_str},
                                  {"tol", tol},            {"samples", samples}};
            rep.doc["results"] = report_to_json(vr);
            return rep.finish(vr.inconclusive ? 4 : vr.pass ? 0 : 1, out_path);
        }

        if (sv->parsed()) {
            Report rep("screen-sv");
            if (sv->count("--nodes") == 0) nodes = 1024;
            std::shared_ptr<const MeasureSpec> source;
            if (in_paths.empty()) {
                source = atom_measure("nuK", parse_complex_arg(atom_str),
                                      parse_complex_arg(mass_str));
            } else {
                source = load_inputs(in_paths, select_measure).main;
            }
            const MeasureSpec composite = screened_scenario(source, unit_circle(), {}, nodes);
            if (out_path.empty()) out_path = "screen_sv.json";
            write_json_file(bundle_to_json(composite), out_path);

            const VerificationReport outside =
                verify_vanishing(composite, Annulus{Complex{0, 0}, 1.1, 3.0}, std::nullopt, tol,
                                 200, nodes, composite.name);
            const std::optional<Expr> expected = Expr::cauchy_of(source);
            const VerificationReport inside =
                verify_vanishing(composite, DiskRegion{Complex{0, 0}, 0.9}, expected, tol, 200,
                                 nodes, composite.name);
            rep.doc["scenario"] = composite.name;
            rep.doc["options"] = {{"in", in_paths},
                                  {"atom", atom_str},
                                  {"mass", mass_str},
                                  {"nodes", nodes},
                                  {"tol", tol}};
            rep.doc["results"] = {{"out", out_path},
                                  {"total_variation", total_variation(composite, nodes)},
                                  {"exterior", report_to_json(outside)},
                                  {"interior", report_to_json(inside)}};
            const bool ok = outside.pass && inside.pass;
            return rep.finish(ok ? 0 : outside.inconclusive || inside.inconclusive ? 4 : 1);
        }

        if (ex3->parsed()) {
            Report rep("screen-ex3");
            if (ex3->count("--nodes") == 0) nodes = 1024;
            if (ex3->count("--tol") == 0) tol = 1e-8;
            const auto disks_v = default_screen_disks(disks);
            const MeasureSpec nu = screened_point_scenario(disks_v, {}, nodes);
            if (out_path.empty()) out_path = "screen_ex3.json";
            write_json_file(bundle_to_json(nu), out_path);

            const VerificationReport outside = verify_vanishing(
                nu, Annulus{Complex{0, 0}, 1.1, 3.0}, std::nullopt, tol, 200, nodes, nu.name);
            json disk_checks = json::array();
            bool disks_pass = true;
            for (const Circle& d : disks_v) {
                const VerificationReport in_disk = verify_vanishing(
                    nu, DiskRegion{d.center, 0.5 * d.radius}, std::nullopt, tol, 64, nodes,
                    nu.name);
                disks_pass = disks_pass && in_disk.pass;
                disk_checks.push_back(report_to_json(in_disk));
            }
            const Complex at{0.0, 0.5};
            const double field_err = std::abs(transform(nu, at, nodes) - (-1.0 / at));

            const double tv = total_variation(nu, nodes);
            const double screens_tv = tv - 1.0; // the atom contributes exactly 1
            rep.doc["scenario"] = nu.name;
            rep.doc["options"] = {{"disks", disks}, {"nodes", nodes}, {"tol", tol}};
            rep.doc["results"] = {{"out", out_path},
                                  {"total_variation", tv},
                                  {"screen_variation", screens_tv},
                                  {"screen_variation_times_2pi", 2.0 * kPi * screens_tv},
                                  {"exterior", report_to_json(outside)},
                                  {"inside_disks", disk_checks},
                                  {"interior_field_error", field_err}};
            const bool ok = outside.pass && disks_pass && field_err < tol;
            return rep.finish(ok ? 0 : 1);
        }

        if (p42->parsed()) {
            Report rep("problem42");
            if (domain_strs.empty()) domain_strs = {"-3:0:1", "3:0:1"};
            std::vector<CircularDomain> domains;
            for (const std::string& ds : domain_strs) {
                const auto v = split_numbers(ds, ':');
                if (v.size() < 3 || (v.size() - 3) % 3 != 0)
                    throw SchemaError("--domain needs cx:cy:R[:hx:hy:hr ...]");
                std::vector<Circle> holes;
                for (std::size_t k = 3; k + 2 < v.size(); k += 3)
                    holes.push_back(Circle{Complex{v[k], v[k + 1]}, v[k + 2]});
                domains.push_back(CircularDomain{Circle{Complex{v[0], v[1]}, v[2]}, holes});
            }
            const MeasureSpec mu = domain_indicator_measure(domains);
            if (out_path.empty()) out_path = "problem42.json";
            write_json_file(bundle_to_json(mu), out_path);

            double expected_tv = 0.0, max_err = 0.0;
            json checks = json::array();
            for (const CircularDomain& d : domains) {
                expected_tv += d.outer.circumference() / (2.0 * kPi);
                const Complex probe = domain_probe(d);
                const double err = std::abs(transform(mu, probe, nodes) - 1.0);
                max_err = std::max(max_err, err);
                checks.push_back({{"at", complex_json(probe)}, {"expected", 1.0}, {"error", err}});
                for (const Circle& h : d.holes) {
                    expected_tv += h.circumference() / (2.0 * kPi);
                    const double herr = std::abs(transform(mu, h.center, nodes));
                    max_err = std::max(max_err, herr);
                    checks.push_back(
                        {{"at", complex_json(h.center)}, {"expected", 0.0}, {"error", herr}});
                }
            }
            double far = 1.0;
            for (const CircularDomain& d : domains)
                far = std::max(far, std::abs(d.outer.center) + 3.0 * d.outer.radius);
            const double far_err = std::abs(transform(mu, Complex{far, far}, nodes));
            max_err = std::max(max_err, far_err);
            const double tv = total_variation(mu, nodes);
            const double tv_err = std::abs(tv - expected_tv);
            max_err = std::max(max_err, tv_err);
            rep.doc["scenario"] = mu.name;
            rep.doc["options"] = {{"domain", domain_strs}, {"nodes", nodes}, {"tol", tol}};
            rep.doc["results"] = {{"out", out_path},
                                  {"checks", checks},
                                  {"outside_error", far_err},
                                  {"total_variation", tv},
                                  {"boundary_length_over_2pi", expected_tv},
                                  {"max_error", max_err}};
            return rep.finish(max_err < tol ? 0 : 1);
        }

        if (h1->parsed()) {
            Report rep("h1");
            const CircularDomain d = parse_domain_args(outer_str, hole_strs);
            const EpsilonSchedule sched{eps0, eps_ratio, eps_steps};
            const H1Report r = h1_norm(parse_density(kappa_str), d, sched);
            rep.doc["scenario"] = "h1(" + kappa_str + ")";
            rep.doc["options"] = {{"kappa", kappa_str},     {"outer", outer_str},
                                  {"hole", hole_strs},      {"eps0", eps0},
                                  {"eps-ratio", eps_ratio}, {"eps-steps", eps_steps}};
            rep.doc["results"] = h1_report_to_json(r);
            return rep.finish(r.converged ? 0 : 4, out_path);
        }

        if (nk->parsed()) {
            Report rep("nu-kappa");
            if (nk->count("--tol") == 0) tol = 1e-8;
            const CircularDomain d = parse_domain_args(outer_str, hole_strs);
            const EpsilonSchedule sched{eps0, eps_ratio, eps_steps};
            const Expr kappa = parse_density(kappa_str);
            const H1Report r = h1_norm(kappa, d, sched);
            if (!r.converged) {
                rep.doc["scenario"] = "nu_kappa(" + kappa_str + ")";
                rep.doc["results"] = {{"converged", false}};
                return rep.finish(4);
            }
            const double eps = eps_pick > 0.0 ? eps_pick : r.tail_eps;
            const MeasureSpec nu = nu_kappa(kappa, d, eps, sched);
            if (out_path.empty()) out_path = "nu_kappa.json";
            write_json_file(bundle_to_json(nu), out_path);

            const Complex probe = domain_probe(d);
            const double in_err = std::abs(transform(nu, probe, nodes) - kappa.eval(probe));
            const Complex far{d.outer.center.real() + 3.0 * d.outer.radius,
                              d.outer.center.imag()};
            const double out_err = std::abs(transform(nu, far, nodes));
            const double tv = total_variation(nu, nodes);
            const double tv_err = std::abs(tv - r.normalized);
            rep.doc["scenario"] = nu.name;
            rep.doc["options"] = {{"kappa", kappa_str}, {"outer", outer_str},
                                  {"hole", hole_strs},  {"eps", eps},
                                  {"nodes", nodes},     {"tol", tol}};
            rep.doc["results"] = {{"out", out_path},
                                  {"raw", r.raw},
                                  {"normalized", r.normalized},
                                  {"total_variation", tv},
                                  {"tv_vs_normalized_error", tv_err},
                                  {"interior_error", in_err},
                                  {"exterior_error", out_err}};
            const bool ok = in_err < tol && out_err < tol && tv_err < tol;
            return rep.finish(ok ? 0 : 1);
        }

        if (dec->parsed()) {
            Report rep("decompose");
            if (dec->count("--tol") == 0) tol = 1e-10;
            if (hole_strs.empty() && dec->count("--outer") == 0) hole_strs = {"0:0:0.3"};
            const CircularDomain d = parse_domain_args(outer_str, hole_strs);
            const Expr F = parse_density(f_str);
            const auto parts = hardy_decompose(F, d, nodes);

            // reconstruction grid: the band between the hole contours and the
            // outer contour, clear of both
            const auto contours = decompose_contours(d);
            const double guard = kGuardFactor * 2.0 * kPi * d.outer.radius / nodes;
            std::vector<Complex> probe_pts;
            for (const Complex z :
                 sample_region(DiskRegion{d.outer.center, d.outer.radius}, 4000)) {
                if (std::abs(z - contours[0].center) > contours[0].radius - 4.0 * guard)
                    continue;
                bool clear = true;
                for (std::size_t j = 1; j < contours.size(); ++j)
                    if (std::abs(z - contours[j].center) < contours[j].radius + 4.0 * guard)
                        clear = false;
                if (clear) probe_pts.push_back(z);
                if (probe_pts.size() == 50) break;
            }
            double max_err = 0.0;
            for (const Complex z : probe_pts) {
                Complex sum{0.0, 0.0};
                for (const Expr& p : parts) sum += p.eval(z, nodes);
                max_err = std::max(max_err, std::abs(sum - F.eval(z, nodes)));
            }
            rep.doc["scenario"] = "decompose(" + f_str + ")";
            rep.doc["options"] = {
                {"f", f_str}, {"outer", outer_str}, {"hole", hole_strs}, {"nodes", nodes},
                {"tol", tol}};
            rep.doc["results"] = {{"parts", static_cast<int>(parts.size())},
                                  {"grid_points", static_cast<int>(probe_pts.size())},
                                  {"max_reconstruction_error", max_err}};
            return rep.finish(max_err < tol && probe_pts.size() >= 50 ? 0 : 1, out_path);
        }

        if (tum->parsed()) {
            Report rep("tumarkin");
            MeasureSpec eta;
            if (in_paths.empty()) {
                eta.name = "eta";
                eta.components.push_back(
                    CircleDensity{unit_circle(), parse_density("1/(2i*pi)"), Differential::dw});
            } else {
                eta = *load_inputs(in_paths, select_measure).main;
            }
            std::vector<double> r_grid = default_r_grid();
            if (!r_grid_str.empty()) r_grid = split_numbers(r_grid_str, ',');
            const double f = tumarkin_functional(eta, r_grid, nodes);
            const double bound = 2.0 * kPi * total_variation(eta, nodes);
            rep.doc["scenario"] = eta.name;
            rep.doc["options"] = {{"in", in_paths}, {"nodes", nodes}, {"r_grid", r_grid}};
            rep.doc["results"] = {{"functional", f},
                                  {"bound_2pi_tv", bound},
                                  {"slack", bound - f},
                                  {"pass", f <= bound + 1e-6}};
            return rep.finish(f <= bound + 1e-6 ? 0 : 1, out_path);
        }

        if (tr->parsed()) {
            Report rep("transport");
            if (tr->count("--tol") == 0) tol = 1e-10;
            std::shared_ptr<const MeasureSpec> m;
            if (in_paths.empty())
                m = atom_measure("delta0", Complex{0.0, 0.0}, Complex{1.0, 0.0});
            else
                m = load_inputs(in_paths, select_measure).main;
            const Complex x0 = parse_complex_arg(x0_str);
            const MeasureSpec t = moebius_pushforward(*m, x0);
            if (out_path.empty()) out_path = "transported.json";
            write_json_file(bundle_to_json(t), out_path);

            // transport identity on a fixed pseudo-random point set off the supports
            std::mt19937 rng(411u);
            std::uniform_real_distribution<double> u(-3.0, 3.0);
            double max_err = 0.0;
            int used = 0;
            while (used < 20) {
                const Complex y{u(rng), u(rng)};
                if (std::abs(y - x0) < 0.2 || distance_to_support(*m, y) < 0.2) continue;
                const Complex My = 1.0 / (x0 - y);
                if (distance_to_support(t, My) < 0.05) continue;
                const Complex lhs = transform(t, My, nodes);
                const Complex rhs = (x0 - y) * transform(*m, y, nodes);
                max_err = std::max(max_err, std::abs(lhs - rhs));
                ++used;
            }
            rep.doc["scenario"] = t.name;
            rep.doc["options"] = {
                {"in", in_paths}, {"x0", x0_str}, {"nodes", nodes}, {"tol", tol}};
            rep.doc["results"] = {{"out", out_path},
                                  {"identity_points", used},
                                  {"max_identity_error", max_err}};
            return rep.finish(max_err < tol ? 0 : 1);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (const auto* pe = dynamic_cast<const ParseError*>(&e))
            std::cerr << "  at line " << pe->line << ", column " << pe->column << '\n';
        return exit_code_for(e);
    }
    return 0;
}
