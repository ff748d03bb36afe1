// the hyperbola a·x·y + b·x + c·y + d = 0.

#pragma once

#include <hyperdist/rational.hpp>

#include <span>
#include <vector>

namespace hyperdist {

    /// Affine point of the rational plane.
    struct Point2 {
        Rational x;
        Rational y;

        friend bool operator==(const Point2 &, const Point2 &) = default;
    };

    class ConicPoint;

    /// Hyperbola with a ≠ 0 and a·d − b·c ≠ 0. D = (a·d − b·c) / (2·a²) is the
    /// parameter of the attached curve Y² = X³ − D²·X.
    class Conic {
    public:
        Conic(Rational a, Rational b, Rational c, Rational d)
            : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
            if (a_.is_zero()) {
                throw DegenerateConic("not a hyperbola of the required shape: a = 0");
            }
            delta_ = a_ * d_ - b_ * c_;
            if (delta_.is_zero()) {
                throw DegenerateConic("degenerate conic, D = 0 (a·d − b·c = 0)");
            }
            D_ = delta_ / (Rational(2) * a_ * a_);
        }

        const Rational &a() const noexcept { return a_; }
        const Rational &b() const noexcept { return b_; }
        const Rational &c() const noexcept { return c_; }
        const Rational &d() const noexcept { return d_; }
        const Rational &D() const noexcept { return D_; }
        /// a·d − b·c
        const Rational &delta() const noexcept { return delta_; }

        bool contains(const Rational &x, const Rational &y) const {
            return (a_ * x * y + b_ * x + c_ * y + d_).is_zero();
        }
        bool contains(const Point2 &p) const { return contains(p.x, p.y); }

        /// y = −(b·x + d)/(a·x + c).
        Rational y_from_x(const Rational &x) const {
            const Rational denom = a_ * x + c_;
            if (denom.is_zero()) {
                throw AsymptoteError("x = " + x.to_string() + " lies on the asymptote a·x + c = 0");
            }
            return -(b_ * x + d_) / denom;
        }

        /// (a·d − b·c)/((a·x_i + c)(a·x_j + c)); the tangent slope when x_i = x_j.
        Rational chord_slope(const Rational &xi, const Rational &xj) const {
            const Rational li = a_ * xi + c_;
            const Rational lj = a_ * xj + c_;
            if (li.is_zero() || lj.is_zero()) {
                throw AsymptoteError("chord endpoint on the asymptote a·x + c = 0");
            }
            return delta_ / (li * lj);
        }

        /// Validated point; throws DomainError off the conic, AsymptoteError on an asymptote.
        ConicPoint point(Rational x, Rational y) const;
        ConicPoint point_at(const Rational &x) const;

        friend bool operator==(const Conic &l, const Conic &r) {
            return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
        }

    private:
        Rational a_, b_, c_, d_;
        Rational delta_;
        Rational D_;
    };

    inline Conic make_conic(Rational a, Rational b, Rational c, Rational d) {
        return Conic(std::move(a), std::move(b), std::move(c), std::move(d));
    }

    /// Affine rational point known to lie on some Conic, off both asymptotes.
    /// Only Conic::point can create one.
    class ConicPoint {
    public:
        const Rational &x() const noexcept { return p_.x; }
        const Rational &y() const noexcept { return p_.y; }
        const Point2 &xy() const noexcept { return p_; }
        operator const Point2 &() const noexcept { return p_; } // NOLINT(google-explicit-constructor)

        friend bool operator==(const ConicPoint &, const ConicPoint &) = default;

    private:
        friend class Conic;
        explicit ConicPoint(Point2 p) : p_(std::move(p)) {}
        Point2 p_;
    };

    inline ConicPoint Conic::point(Rational x, Rational y) const {
        if (!contains(x, y)) {
            throw DomainError("(" + x.to_string() + ", " + y.to_string() + ") is not on the conic");
        }
        if ((a_ * x + c_).is_zero() || (a_ * y + b_).is_zero()) {
            throw AsymptoteError("(" + x.to_string() + ", " + y.to_string() + ") lies on an asymptote");
        }
        return ConicPoint(Point2{std::move(x), std::move(y)});
    }

    inline ConicPoint Conic::point_at(const Rational &x) const { return point(x, y_from_x(x)); }

    // Classical dense rational distance sets on a line and on a circle. They
    // are not on any hyperbola; they serve as fixtures for the distance checks.

    /// x_t = α·c − β·t, y_t = β·c + α·t with α = 2r/(r²+1), β = (r²−1)/(r²+1);
    /// ‖P_s − P_t‖ = |s − t|.
    inline std::vector<Point2> line_family(const Rational &r, const Rational &c,
                                           std::span<const Rational> ts) {
        const Rational r2p1 = r * r + Rational(1);
        const Rational alpha = Rational(2) * r / r2p1;
        const Rational beta = (r * r - Rational(1)) / r2p1;
        std::vector<Point2> out;
        out.reserve(ts.size());
        for (const auto &t : ts) {
            out.push_back({alpha * c - beta * t, beta * c + alpha * t});
        }
        return out;
    }

    /// Points of the circle (x−h)² + (y−k)² = r² with
    /// ‖P_s − P_t‖ = |4(s−t)(st+1) / ((s²+1)(t²+1))|·r.
    inline std::vector<Point2> circle_family(const Rational &h, const Rational &k, const Rational &r,
                                             std::span<const Rational> ts) {
        std::vector<Point2> out;
        out.reserve(ts.size());
        for (const auto &t : ts) {
            const Rational t2 = t * t;
            const Rational q = (t2 + Rational(1)) * (t2 + Rational(1));
            out.push_back({h + (t2 * t2 - Rational(6) * t2 + Rational(1)) / q * r,
                           k + Rational(4) * (t2 * t - t) / q * r});
        }
        return out;
    }

} // namespace hyperdist
