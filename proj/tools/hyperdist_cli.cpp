// command-line frontend.
//
// Exit codes: 0 success, 1 verification failed, 2 usage or precondition error.

#include <hyperdist/hyperdist.hpp>
#include <hyperdist/io.hpp>
#include <hyperdist/svg.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace hd = hyperdist;
using hd::io::json;

namespace {

    constexpr int kOk = 0;
    constexpr int kVerifyFailed = 1;
    constexpr int kUsage = 2;

    std::string read_input(const std::string &path) {
        if (path == "-") {
            return {std::istreambuf_iterator<char>(std::cin), {}};
        }
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw hd::ParseError("cannot open '" + path + "'");
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    json parse_json(const std::string &path) {
        try {
            return json::parse(read_input(path));
        } catch (const json::parse_error &e) {
            throw hd::ParseError("'" + path + "' is not valid JSON: " + e.what());
        }
    }

    void write_output(const std::string &path, const std::string &text) {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw hd::ParseError("cannot write '" + path + "'");
        }
        out << text;
    }

    std::vector<hd::CurvePoint> parse_curve_points(const std::vector<std::string> &tokens) {
        std::vector<hd::CurvePoint> out;
        for (const auto &t : tokens) out.push_back(hd::CurvePoint::parse(t));
        return out;
    }

    // ---- gen ----------------------------------------------------------------

    struct GenOptions {
        std::string conic;
        std::vector<std::string> points;
        bool four = false;
        std::string format = "json";
        std::string output;
    };

    int cmd_gen(const GenOptions &opt) {
        const hd::Conic conic = hd::io::parse_conic(opt.conic);
        const auto q = parse_curve_points(opt.points);
        const hd::Curve curve(conic.D());
        for (std::size_t t = 0; t < q.size(); ++t) {
            if (!curve.on_curve(q[t])) {
                throw hd::NotOnCurve("point Q" + std::to_string(t + 1) + " = " + opt.points[t] + " is not on E^(" +
                                     conic.D().to_string() + ")");
            }
        }
        const hd::RationalDistanceSet set =
            opt.four ? hd::four_point_set(conic, q[0], q[1], q[2]) : hd::three_point_set(conic, q[0], q[1], q[2]);
        if (set.degenerate) {
            std::cerr << "warning: degenerate set, two generated points coincide\n";
        }
        std::string text;
        if (opt.format == "csv") {
            text = hd::io::to_csv(set);
        } else if (opt.format == "svg") {
            const auto xy = set.xy();
            text = hd::svg::render(conic, xy, set.distances);
        } else {
            text = hd::io::to_json(set).dump(2) + "\n";
        }
        write_output(opt.output, text);
        return kOk;
    }

    // ---- extend -------------------------------------------------------------

    struct ExtendOptions {
        std::string conic;
        std::vector<std::string> points;
        bool unsafe = false;
    };

    int cmd_extend(const ExtendOptions &opt) {
        const hd::Conic conic = hd::io::parse_conic(opt.conic);
        std::vector<hd::ConicPoint> pts;
        for (const auto &tok : opt.points) {
            hd::Point2 p = hd::io::parse_point(tok);
            try {
                pts.push_back(conic.point(p.x, p.y));
            } catch (const hd::Error &e) {
                throw hd::PreconditionError("point '" + tok + "': " + e.what());
            }
        }
        const auto ext = hd::extend_three(conic, pts[0], pts[1], pts[2], opt.unsafe ? hd::Verify::no : hd::Verify::yes);
        if (ext.degenerate) {
            std::cerr << "warning: degenerate extension, two of the four points coincide\n";
        }
        json out = {{"conic", hd::io::to_json(conic)},
                    {"point", hd::io::to_json(ext.point.xy())},
                    {"degenerate", ext.degenerate}};
        std::cout << out.dump(2) << "\n";
        return kOk;
    }

    // ---- verify -------------------------------------------------------------

    int cmd_verify(const std::string &path) {
        const auto file = hd::io::set_from_json(parse_json(path));
        const auto rep = hd::verify_set(file.conic, file.points);
        std::cout << hd::io::report_to_json(file.conic, file.points, rep).dump(2) << "\n";
        return rep.verdict && rep.all_on_conic() ? kOk : kVerifyFailed;
    }

    // ---- search -------------------------------------------------------------

    struct SearchOptions {
        std::string D;
        long long height = 1'000'000;
        long long denom = 8;
        unsigned threads = 0;
    };

    int cmd_search(const SearchOptions &opt) {
        const hd::Curve curve(hd::Rational::parse(opt.D));
        const auto found = hd::find_points(curve, opt.height, opt.denom, opt.threads);
        json pts = json::array();
        for (const auto &p : found) {
            pts.push_back({{"point", p.to_string()}, {"torsion", curve.is_torsion(p)}});
        }
        json out = {{"curve", hd::io::to_json(curve)},
                    {"height", opt.height},
                    {"denom", opt.denom},
                    {"points", pts}};
        std::cout << out.dump(2) << "\n";
        return kOk;
    }

    // ---- paper-example ------------------------------------------------------

    int cmd_paper_example(const std::string &svg_dir) {
        const hd::Conic conic(1, 0, 0, 12);
        const std::vector<hd::CurvePoint> q = {hd::CurvePoint(12, 36, 1), hd::CurvePoint(50, 35, 8),
                                               hd::CurvePoint(377844, 2065932, 12167)};
        const auto three = hd::three_point_set(conic, q[0], q[1], q[2]);
        const auto four = hd::four_point_set(conic, q[0], q[1], q[2]);

        json curve_points = json::array(), ratios = json::array(), surface = json::array();
        for (const auto &p : q) {
            curve_points.push_back(p.to_string());
            ratios.push_back(p.ratio().to_string());
            surface.push_back(hd::io::to_json(hd::embed(conic.D(), p)));
        }

        const auto xy3 = three.xy();
        const auto xy4 = four.xy();
        const std::string fig1 = hd::svg::render(conic, xy3, three.distances);
        const std::string fig2 = hd::svg::render(conic, xy4, four.distances);
        json figures;
        if (svg_dir.empty()) {
            figures = {{"figure-1.svg", fig1}, {"figure-2.svg", fig2}};
        } else {
            std::filesystem::create_directories(svg_dir);
            const auto p1 = (std::filesystem::path(svg_dir) / "figure-1.svg").string();
            const auto p2 = (std::filesystem::path(svg_dir) / "figure-2.svg").string();
            write_output(p1, fig1);
            write_output(p2, fig2);
            figures = {{"figure-1.svg", p1}, {"figure-2.svg", p2}};
        }

        json out = {{"conic", hd::io::to_json(conic)},
                    {"D", conic.D().to_string()},
                    {"curve_points", curve_points},
                    {"ratios", ratios},
                    {"three_point_set", hd::io::to_json(three)},
                    {"four_point_set", hd::io::to_json(four)},
                    {"surface_points", surface},
                    {"figures", figures}};
        std::cout << out.dump(2) << "\n";
        return kOk;
    }

    // ---- plot ---------------------------------------------------------------

    int cmd_plot(const std::string &path, const std::string &output) {
        const auto file = hd::io::set_from_json(parse_json(path));
        for (std::size_t t = 0; t < file.points.size(); ++t) {
            if (!file.conic.contains(file.points[t])) {
                throw hd::PreconditionError("point " + std::to_string(t + 1) + " is not on the conic");
            }
        }
        const auto rep = hd::distance_report(file.points);
        write_output(output, hd::svg::render(file.conic, file.points, rep));
        return kOk;
    }

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Rational distance sets on hyperbolas a·x·y + b·x + c·y + d = 0"};
    app.require_subcommand(1);

    GenOptions gen;
    auto *gen_cmd = app.add_subcommand("gen", "Build a 3-point (or, with --four, 4-point) set from three curve points");
    gen_cmd->add_option("--conic", gen.conic, "a,b,c,d")->required();
    gen_cmd->add_option("--points", gen.points, "three curve points X:Y:Z")->required()->expected(3);
    gen_cmd->add_flag("--four", gen.four, "append the fourth point");
    gen_cmd->add_option("--format", gen.format, "json | csv | svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    gen_cmd->add_option("-o,--output", gen.output, "output file (default stdout)");

    ExtendOptions ext;
    auto *ext_cmd = app.add_subcommand("extend", "Extend a 3-point rational distance set by a fourth point");
    ext_cmd->add_option("--conic", ext.conic, "a,b,c,d")->required();
    ext_cmd->add_option("--points", ext.points, "three conic points x,y")->required()->expected(3);
    ext_cmd->add_flag("--unsafe", ext.unsafe, "skip verifying that the input is a rational distance set");

    std::string verify_path;
    auto *verify_cmd = app.add_subcommand("verify", "Check a JSON point set; exit 0 iff every distance is rational");
    verify_cmd->add_option("file", verify_path, "JSON file, or - for stdin")->required();

    SearchOptions search;
    auto *search_cmd = app.add_subcommand("search", "Naive-height search for rational points on E^(D)");
    search_cmd->add_option("--D,-D", search.D, "integral curve parameter")->required();
    search_cmd->add_option("--height", search.height, "numerator bound H (|m| ≤ H·e²)");
    search_cmd->add_option("--denom", search.denom, "denominator bound E (x = m/e², e ≤ E)");
    search_cmd->add_option("--threads", search.threads, "worker threads (0 = hardware concurrency)");

    std::string svg_dir;
    auto *paper_cmd = app.add_subcommand("paper-example", "Reproduce the worked example on x y + 12 = 0");
    paper_cmd->add_option("--svg-dir", svg_dir, "write figure-1.svg and figure-2.svg here instead of inlining them");

    std::string plot_path, plot_out;
    auto *plot_cmd = app.add_subcommand("plot", "Render a JSON point set as SVG");
    plot_cmd->add_option("file", plot_path, "JSON file, or - for stdin")->required();
    plot_cmd->add_option("-o,--output", plot_out, "SVG file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen);
        if (*ext_cmd) return cmd_extend(ext);
        if (*verify_cmd) return cmd_verify(verify_path);
        if (*search_cmd) return cmd_search(search);
        if (*paper_cmd) return cmd_paper_example(svg_dir);
        if (*plot_cmd) return cmd_plot(plot_path, plot_out);
    } catch (const hd::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
