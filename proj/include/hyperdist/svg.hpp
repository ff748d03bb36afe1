// SVG 1.1 picture of a point set on its hyperbola.
//
// Exact values are converted to double here and nowhere else.

#pragma once

#include <hyperdist/distance.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

namespace hyperdist::svg {

    namespace detail {
        inline std::string num(double v) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", v);
            std::string s = buf;
            return s == "-0.00" ? "0.00" : s;
        }

        inline std::string escape(const std::string &s) {
            std::string out;
            for (char ch : s) {
                switch (ch) {
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                case '&': out += "&amp;"; break;
                default: out += ch;
                }
            }
            return out;
        }

        inline std::string term(const Rational &coef, const std::string &var, bool first) {
            if (coef.is_zero()) return {};
            std::string out;
            const Rational mag = abs(coef);
            if (first) {
                out = coef.sign() < 0 ? "−" : "";
            } else {
                out = coef.sign() < 0 ? " − " : " + ";
            }
            if (var.empty() || mag != Rational(1)) out += mag.to_string();
            if (!var.empty() && mag != Rational(1)) out += " ";
            out += var;
            return out;
        }
    } // namespace detail

    /// "x y + 12 = 0" style rendering of the defining equation.
    inline std::string equation(const Conic &c) {
        std::string s = detail::term(c.a(), "x y", true);
        s += detail::term(c.b(), "x", false);
        s += detail::term(c.c(), "y", false);
        s += detail::term(c.d(), "", false);
        return s + " = 0";
    }

    inline std::string render(const Conic &conic, std::span<const Point2> points, const DistanceReport &report) {
        constexpr double size = 800.0;
        constexpr double pad = 60.0;

        const double cx = (-conic.c() / conic.a()).to_double();
        const double cy = (-conic.b() / conic.a()).to_double();
        const double vertex = std::sqrt(std::fabs(conic.delta().to_double())) / std::fabs(conic.a().to_double());

        double xmin, xmax, ymin, ymax;
        if (points.empty()) {
            const double h = std::max(1.0, 3.0 * vertex);
            xmin = cx - h, xmax = cx + h, ymin = cy - h, ymax = cy + h;
        } else {
            xmin = xmax = points[0].x.to_double();
            ymin = ymax = points[0].y.to_double();
            for (const auto &p : points) {
                xmin = std::min(xmin, p.x.to_double());
                xmax = std::max(xmax, p.x.to_double());
                ymin = std::min(ymin, p.y.to_double());
                ymax = std::max(ymax, p.y.to_double());
            }
            const double margin = std::max({xmax - xmin, ymax - ymin, 1.0}) * 0.1;
            xmin -= margin, xmax += margin, ymin -= margin, ymax += margin;
        }
        const double span = std::max(xmax - xmin, ymax - ymin);
        const double scale = (size - 2 * pad) / span;
        auto sx = [&](double x) { return pad + (x - xmin) * scale; };
        auto sy = [&](double y) { return size - pad - (y - ymin) * scale; };
        const double top = ymin + span, right = xmin + span;

        std::string out;
        out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
               "viewBox=\"0 0 800 800\">\n";
        out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
        out += "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"serif\" font-size=\"20\">"
               "Rational Distance Set on " +
               detail::escape(equation(conic)) + "</text>\n";

        // Axes, when visible.
        out += "<g stroke=\"#999\" stroke-width=\"1\">\n";
        if (xmin <= 0 && 0 <= right) {
            out += "<line x1=\"" + detail::num(sx(0)) + "\" y1=\"" + detail::num(sy(ymin)) + "\" x2=\"" +
                   detail::num(sx(0)) + "\" y2=\"" + detail::num(sy(top)) + "\"/>\n";
        }
        if (ymin <= 0 && 0 <= top) {
            out += "<line x1=\"" + detail::num(sx(xmin)) + "\" y1=\"" + detail::num(sy(0)) + "\" x2=\"" +
                   detail::num(sx(right)) + "\" y2=\"" + detail::num(sy(0)) + "\"/>\n";
        }
        out += "</g>\n";

        // Hyperbola branches, sampled on either side of the vertical asymptote.
        const double a = conic.a().to_double(), b = conic.b().to_double(), c = conic.c().to_double(),
                     d = conic.d().to_double();
        out += "<g fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\">\n";
        constexpr int samples = 800;
        std::string path;
        bool pen_down = false;
        double prev_side = 0;
        for (int k = 0; k <= samples; ++k) {
            const double x = xmin + (right - xmin) * k / samples;
            const double denom = a * x + c;
            const double side = denom < 0 ? -1 : 1;
            const double y = -(b * x + d) / denom;
            const bool visible = std::fabs(denom) > 1e-12 && y >= ymin - span && y <= top + span;
            if (!visible || (pen_down && side != prev_side)) {
                pen_down = false;
            }
            if (visible) {
                path += (pen_down ? " L " : " M ") + detail::num(sx(x)) + " " +
                        detail::num(sy(std::clamp(y, ymin - span, top + span)));
                pen_down = true;
            }
            prev_side = side;
        }
        if (!path.empty()) {
            out += "<path d=\"" + path.substr(1) + "\"/>\n";
        }
        out += "</g>\n";

        // Chords with exact labels.
        out += "<g stroke=\"#c0392b\" stroke-width=\"1\">\n";
        for (const auto &pd : report.pairs) {
            const auto &p = points[pd.i];
            const auto &q = points[pd.j];
            out += "<line x1=\"" + detail::num(sx(p.x.to_double())) + "\" y1=\"" + detail::num(sy(p.y.to_double())) +
                   "\" x2=\"" + detail::num(sx(q.x.to_double())) + "\" y2=\"" + detail::num(sy(q.y.to_double())) +
                   "\"/>\n";
        }
        out += "</g>\n";
        out += "<g font-family=\"monospace\" font-size=\"11\" fill=\"#c0392b\">\n";
        for (const auto &pd : report.pairs) {
            const auto &p = points[pd.i];
            const auto &q = points[pd.j];
            const double mx = (p.x.to_double() + q.x.to_double()) / 2;
            const double my = (p.y.to_double() + q.y.to_double()) / 2;
            const std::string label = pd.rational() ? pd.distance->to_string() : "√" + pd.squared.to_string();
            out += "<text x=\"" + detail::num(sx(mx) + 4) + "\" y=\"" + detail::num(sy(my) - 4) + "\">" +
                   detail::escape(label) + "</text>\n";
        }
        out += "</g>\n";

        out += "<g font-family=\"serif\" font-size=\"14\">\n";
        for (std::size_t t = 0; t < points.size(); ++t) {
            const double px = sx(points[t].x.to_double()), py = sy(points[t].y.to_double());
            out += "<circle cx=\"" + detail::num(px) + "\" cy=\"" + detail::num(py) + "\" r=\"5\" fill=\"black\"/>\n";
            out += "<text x=\"" + detail::num(px + 8) + "\" y=\"" + detail::num(py + 16) + "\">P" +
                   std::to_string(t + 1) + "</text>\n";
        }
        out += "</g>\n";
        out += "</svg>\n";
        return out;
    }

} // namespace hyperdist::svg
