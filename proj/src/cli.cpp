#include "obl/cli.hpp"

#include "obl/acceptance.hpp"
#include "obl/digital_filter.hpp"
#include "obl/first_family.hpp"
#include "obl/json_io.hpp"
#include "obl/periodicity.hpp"
#include "obl/quasi_regular.hpp"
#include "obl/render_svg.hpp"
#include "obl/web.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace obl {

namespace {

unsigned env_digits() {
    if (const char* v = std::getenv("OBLAB_DIGITS")) {
        long d = std::strtol(v, nullptr, 10);
        if (d >= 16 && d <= 10000) return static_cast<unsigned>(d);
    }
    return precision::kDefaultDigits;
}

void write_output(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        if (!text.empty() && text.back() != '\n') fallback << '\n';
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    f << text;
}

std::vector<RenderLayer> family_layers(int n) {
    std::vector<RenderLayer> layers;
    RenderLayer tiles;
    tiles.color = "#cc00cc";
    for (const TileSpec& t : first_family(n)) {
        ConvexPolygon shape = t.polygon();
        std::vector<std::pair<double, double>> poly;
        for (const Point& v : shape.vertices())
            poly.emplace_back(static_cast<double>(v.x), static_cast<double>(v.y));
        tiles.polygons.push_back(std::move(poly));
    }
    layers.push_back(std::move(tiles));
    return layers;
}

void web_layers(const Web& web, std::vector<RenderLayer>& layers) {
    RenderLayer fwd, inv;
    fwd.color = "#cc00cc"; // forward web magenta
    inv.color = "#0000cc"; // inverse web blue
    for (const WebPoint& p : web.points)
        (p.inverse_layer ? inv : fwd).points.emplace_back(p.x, p.y);
    if (!fwd.points.empty()) layers.push_back(std::move(fwd));
    if (!inv.points.empty()) layers.push_back(std::move(inv));
}

RenderSpec window_spec(double extent) {
    RenderSpec spec;
    spec.x0 = -extent;
    spec.y0 = -extent;
    spec.x1 = extent;
    spec.y1 = extent;
    return spec;
}

std::string orbit_report(const OrbitRecord& rec, int n, bool as_json) {
    std::ostringstream os;
    if (as_json) {
        os << "{\"termination\":\""
           << (rec.termination == Termination::period_found ? "period_found"
               : rec.termination == Termination::max_iter   ? "max_iter"
                                                            : "singular_hit")
           << "\"";
        if (rec.period) {
            Fraction w = winding_number(rec.step_sequence, n);
            os << ",\"period\":" << *rec.period << ",\"winding\":\"" << w.num << "/" << w.den << "\"";
        }
        os << ",\"steps\":[";
        for (size_t i = 0; i < rec.step_sequence.size(); ++i)
            os << (i ? "," : "") << rec.step_sequence[i];
        os << "]}";
        return os.str();
    }
    switch (rec.termination) {
        case Termination::period_found: os << "period " << *rec.period; break;
        case Termination::max_iter: os << "no return within budget"; break;
        case Termination::singular_hit: os << "hit the singular set"; break;
    }
    if (!rec.step_sequence.empty()) {
        os << "\nsteps:";
        size_t show = std::min<size_t>(rec.step_sequence.size(), 64);
        for (size_t i = 0; i < show; ++i) os << ' ' << rec.step_sequence[i];
        if (show < rec.step_sequence.size()) os << " ...";
        if (rec.period) {
            Fraction w = winding_number(rec.step_sequence, n);
            os << "\nwinding " << w.num << "/" << w.den;
        }
    }
    return os.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::string* out) {
    std::ostringstream capture;
    std::ostream& os = std::cout;

    CLI::App app{"outer billiards workbench"};
    app.require_subcommand(1);

    unsigned digits = env_digits();
    long long max_iter = 10'000'000;
    app.add_option("--digits", digits, "working precision in decimal digits");
    app.add_option("--max-iter", max_iter, "orbit iteration budget");

    // family
    auto* family = app.add_subcommand("family", "first family scales and tiles");
    int fam_n = 7;
    bool fam_json = false;
    std::string fam_out;
    family->add_option("--n", fam_n, "polygon sides")->required();
    family->add_flag("--json", fam_json, "emit JSON");
    family->add_option("--out", fam_out, "output path ('-' for stdout)");

    // web
    auto* web = app.add_subcommand("web", "singularity web scan");
    int web_n = 5, web_levels = 10, web_samples = 1000;
    std::string web_mode = "combined", web_out;
    double web_extent = 0;
    std::vector<double> web_window;
    bool web_json = false;
    web->add_option("--n", web_n)->required();
    web->add_option("--levels", web_levels);
    web->add_option("--samples", web_samples, "samples per unit length");
    web->add_option("--mode", web_mode, "forward | inverse | combined");
    web->add_option("--extent", web_extent, "ray truncation radius");
    web->add_option("--window", web_window, "x0 y0 x1 y1 storage window")->expected(4);
    web->add_flag("--json", web_json);
    web->add_option("--out", web_out, "output path (.svg or .json)");

    // orbit
    auto* orbit = app.add_subcommand("orbit", "iterate one point");
    int orb_n = 7;
    double orb_x = 0, orb_y = 0;
    bool orb_json = false;
    orbit->add_option("--n", orb_n)->required();
    orbit->add_option("--x", orb_x)->required();
    orbit->add_option("--y", orb_y)->required();
    orbit->add_flag("--json", orb_json);

    // periods
    auto* periods = app.add_subcommand("periods", "period formulas and tables");
    int per_n = 5, per_upto = 10, per_generations = 0;
    bool per_formula = false, per_simulate = false;
    periods->add_option("--n", per_n)->required();
    periods->add_flag("--formula", per_formula, "pentagon closed forms");
    periods->add_option("--upto", per_upto);
    periods->add_option("--generations", per_generations, "simulate the GenStar chain");
    periods->add_flag("--simulate", per_simulate);

    // ring
    auto* ring = app.add_subcommand("ring", "ring structure");
    int ring_n = 7, ring_k = 0;
    bool ring_sim = false;
    ring->add_option("--n", ring_n)->required();
    ring->add_option("--k", ring_k)->required();
    ring->add_flag("--simulate", ring_sim);

    // df
    auto* df = app.add_subcommand("df", "digital filter web");
    std::string df_rho = "1/14", df_out;
    int df_levels = 20, df_samples = 1000;
    bool df_rectify = false, df_json = false;
    df->add_option("--rho", df_rho, "twist P/Q in (0, 1/4]")->required();
    df->add_option("--levels", df_levels);
    df->add_option("--samples", df_samples);
    df->add_flag("--rectify", df_rectify, "emit the rectified cloud");
    df->add_flag("--json", df_json);
    df->add_option("--out", df_out);

    // quasi
    auto* quasi = app.add_subcommand("quasi", "quasi-regular polygon constructors");
    quasi->require_subcommand(1);
    auto* qring2 = quasi->add_subcommand("ring2");
    int q2_n = 14;
    qring2->add_option("--n", q2_n)->required();
    auto* qriffle = quasi->add_subcommand("riffle");
    int qr_n = 14;
    double qr_rho = 0.25;
    qriffle->add_option("--n", qr_n)->required();
    qriffle->add_option("--rho", qr_rho);
    auto* qwoven = quasi->add_subcommand("woven");
    int qw_k = 6;
    double qw_ratio = 0.95418889;
    qwoven->add_option("--k", qw_k)->required();
    qwoven->add_option("--ratio", qw_ratio, "r2/r1");

    // verify
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    std::vector<int> verify_only;
    verify->add_option("--criterion", verify_only, "criteria to run (default all)");

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream err;
        int code = app.exit(e, err, err);
        if (out) *out = err.str();
        else std::cerr << err.str();
        return code == 0 ? 0 : code;
    }

    precision::set_digits(digits);
    std::ostringstream text;

    try {
        if (family->parsed()) {
            ScaleTable table = scale_table(fam_n);
            auto tiles = first_family(fam_n);
            if (fam_json) {
                write_output(fam_out.empty() ? "-" : fam_out, family_to_json(table, tiles), capture);
            } else if (!fam_out.empty() && fam_out.size() > 4 &&
                       fam_out.substr(fam_out.size() - 4) == ".svg") {
                double extent = static_cast<double>(norm(table.gen_star)) * 1.3;
                render_svg(family_layers(fam_n), window_spec(extent), fam_out);
            } else {
                text << "N = " << fam_n << "\n";
                for (int k = 1; k <= table.count(); ++k)
                    text << "scale[" << k << "] = " << to_decimal_string(table.scale(k), 10) << "\n";
                text << "GenScale = " << to_decimal_string(table.gen_scale, 10) << "\n";
                text << "GenStar = (" << to_decimal_string(table.gen_star.x, 10) << ", "
                     << to_decimal_string(table.gen_star.y, 10) << ")\n";
                for (const TileSpec& t : tiles) {
                    text << t.name() << "  sides " << t.sides << "  r = "
                         << to_decimal_string(t.radius, 10) << "  center ("
                         << to_decimal_string(t.center.x, 10) << ", "
                         << to_decimal_string(t.center.y, 10) << ")";
                    if (t.mutation) text << "  [mutated]";
                    if (t.expected_period) text << "  period " << *t.expected_period;
                    text << "\n";
                }
                write_output(fam_out, text.str(), capture);
            }
        } else if (web->parsed()) {
            WebMode mode = web_mode == "forward" ? WebMode::forward
                         : web_mode == "inverse" ? WebMode::inverse
                                                 : WebMode::combined;
            WebConfig config;
            config.levels = web_levels;
            config.samples_per_unit_length = web_samples;
            if (web_extent > 0) config.extent = Real(web_extent);
            if (!web_window.empty())
                config.window = {{web_window[0], web_window[1], web_window[2], web_window[3]}};
            TangentMap map(make_regular_ngon(web_n));
            Web w = generate_web(map, config, mode);
            if (web_json || (web_out.size() > 5 && web_out.substr(web_out.size() - 5) == ".json")) {
                write_output(web_out, web_to_json(w), capture);
            } else {
                std::vector<RenderLayer> layers;
                web_layers(w, layers);
                double extent = web_window.empty()
                                    ? static_cast<double>(config.extent > 0
                                                              ? config.extent
                                                              : map.polygon().circumradius() * 12)
                                    : std::max(std::abs(web_window[2]), std::abs(web_window[3]));
                if (web_out.empty()) {
                    text << "web points: " << w.points.size() << ", seeds: " << w.seed_count
                         << ", survival@final " << w.survival_rate(w.levels) << "\n";
                    write_output("", text.str(), capture);
                } else {
                    render_svg(layers, window_spec(extent), web_out);
                }
            }
        } else if (orbit->parsed()) {
            TangentMap map(make_regular_ngon(orb_n));
            OrbitRecord rec = map.iterate_orbit({Real(orb_x), Real(orb_y)}, max_iter);
            write_output("", orbit_report(rec, orb_n, orb_json), capture);
        } else if (periods->parsed()) {
            if (per_formula) {
                if (per_n != 5) throw Error("closed-form period lists exist for n = 5");
                text << "n  d[n]  p[n]\n";
                for (int i = 1; i <= per_upto; ++i) {
                    auto [d, p] = pentagon_periods(i);
                    text << i << "  " << d << "  " << p << "\n";
                }
            } else if (per_generations > 0) {
                GenerationTable t = generation_table(per_n, per_generations, max_iter);
                text << "generation  M period  ratio  D period  ratio\n";
                for (int i = 0; i < per_generations; ++i) {
                    const auto& m = t.m_rows[i];
                    const auto& d = t.d_rows[i];
                    text << (i + 1) << "  ";
                    if (m.period) text << *m.period; else text << "-";
                    text << "  ";
                    if (m.ratio) text << *m.ratio; else text << "-";
                    text << "  ";
                    if (d.period) text << *d.period; else text << "-";
                    text << "  ";
                    if (d.ratio) text << *d.ratio; else text << "-";
                    text << "\n";
                }
            } else {
                auto fam = first_family(per_n);
                TangentMap map(make_regular_ngon(per_n));
                for (const TileSpec& t : fam) {
                    text << t.name() << "  ";
                    if (t.expected_period) text << "formula " << *t.expected_period;
                    if (per_simulate) {
                        auto p = orbit_period(map, t.center, max_iter);
                        if (p) text << "  simulated " << *p;
                    }
                    text << "\n";
                }
            }
            write_output("", text.str(), capture);
        } else if (ring->parsed()) {
            RingSpec spec = ring_structure(ring_n, ring_k, ring_sim, max_iter);
            text << "ring " << ring_k << " of N=" << ring_n << ": " << spec.tile_count
                 << " tiles, steps {";
            for (size_t i = 0; i < spec.step_sequence.size(); ++i)
                text << (i ? "," : "") << spec.step_sequence[i];
            text << "}, periods";
            for (long long p : spec.periods) text << " " << p;
            text << ", winding " << spec.winding.num << "/" << spec.winding.den << "\n";
            write_output("", text.str(), capture);
        } else if (df->parsed()) {
            auto slash = df_rho.find('/');
            if (slash == std::string::npos) throw Error("--rho expects P/Q");
            long p = std::stol(df_rho.substr(0, slash));
            long q = std::stol(df_rho.substr(slash + 1));
            DfParams params = DfParams::from_rho(p, q);
            DfWeb w = df_web(params, df_levels, df_samples);
            if (df_json || (df_out.size() > 5 && df_out.substr(df_out.size() - 5) == ".json")) {
                std::ostringstream js;
                js << "{\"rho\":\"" << p << "/" << q << "\",\"levels\":" << df_levels
                   << ",\"points\":[";
                for (size_t i = 0; i < w.df_points.size(); ++i) {
                    const auto& pt = w.df_points[i];
                    js << (i ? "," : "") << "[" << pt.x << "," << pt.y << "," << pt.level << ","
                       << pt.atom;
                    if (df_rectify)
                        js << "," << w.rectified[i].first << "," << w.rectified[i].second;
                    js << "]";
                }
                js << "]}";
                write_output(df_out, js.str(), capture);
            } else {
                RenderLayer layer;
                layer.color = df_rectify ? "#0000cc" : "#cc00cc";
                double extent = 1.05;
                if (df_rectify) {
                    for (const auto& [x, y] : w.rectified) {
                        layer.points.emplace_back(x, y);
                        extent = std::max({extent, std::abs(x), std::abs(y)});
                    }
                } else {
                    for (const auto& pt : w.df_points) layer.points.emplace_back(pt.x, pt.y);
                }
                if (df_out.empty()) {
                    text << "df web points: " << w.df_points.size() << "\n";
                    write_output("", text.str(), capture);
                } else {
                    render_svg({layer}, window_spec(extent * 1.02), df_out);
                }
            }
        } else if (quasi->parsed()) {
            QuasiPolygon qp = qring2->parsed()   ? ring2_polygon(q2_n)
                              : qriffle->parsed() ? riffle_polygon(qr_n, Real(qr_rho))
                                                  : woven_polygon(qw_k, Real(1), Real(qw_ratio));
            std::ostringstream js;
            js << "{\"vertices\":[";
            for (int i = 0; i < qp.poly.size(); ++i) {
                const Point& v = qp.poly.vertex(i);
                js << (i ? "," : "") << "[\"" << to_decimal_string(v.x) << "\",\""
                   << to_decimal_string(v.y) << "\"]";
            }
            js << "],\"factor_radii\":[";
            for (size_t i = 0; i < qp.factor_radii.size(); ++i)
                js << (i ? "," : "") << "\"" << to_decimal_string(qp.factor_radii[i]) << "\"";
            js << "]}";
            write_output("", js.str(), capture);
        } else if (verify->parsed()) {
            AcceptanceOptions options;
            options.only.insert(verify_only.begin(), verify_only.end());
            auto results = run_acceptance(options);
            bool all = true;
            for (const auto& r : results) {
                capture << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " ("
                        << r.seconds << "s)";
                if (!r.detail.empty()) capture << "  " << r.detail;
                capture << "\n";
                all = all && r.pass;
            }
            if (out) *out = capture.str();
            else os << capture.str();
            return all ? 0 : 1;
        }
    } catch (const Error& e) {
        if (out) *out = std::string("error: ") + e.what() + "\n";
        else std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (out) *out = capture.str();
    else os << capture.str();
    return 0;
}

} // namespace obl
