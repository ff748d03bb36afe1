// rational distance sets on a hyperbola built from
// points of E^(D).
//
// For a family of curve points Q_ij indexed by pairs {i, j} ⊂ {1..n}, write
// n_ij = Y_ij / X_ij. The t-th point of the set is
//
//     x_t = (−ac + (ad − bc)·n_ij / (n_it·n_jt)) / a²
//     y_t = (−ab − a²·n_it·n_jt / n_ij) / a²
//
// for any i, j ≠ t. The square roots that motivate n_ij never appear; only
// the rational ratios Y/X do.

#pragma once

#include <hyperdist/conic.hpp>
#include <hyperdist/distance.hpp>
#include <hyperdist/elliptic.hpp>
#include <hyperdist/surface.hpp>

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hyperdist {

    using Quadruple = std::array<int, 4>;

    struct IncompatibleSystem : Error {
        IncompatibleSystem(const std::string &what, std::vector<Quadruple> v)
            : Error(what), violations(std::move(v)) {}
        std::vector<Quadruple> violations;
    };

    /// Curve points indexed by unordered pairs {i, j} of 1..n.
    class CompatibleSystem {
    public:
        explicit CompatibleSystem(int n) : n_(n) {
            if (n < 3) {
                throw MalformedSystem("a compatible system needs n ≥ 3, got " + std::to_string(n));
            }
        }

        int size() const noexcept { return n_; }

        void set(int i, int j, CurvePoint P) {
            points_.insert_or_assign(key(i, j), std::move(P));
        }

        const CurvePoint &at(int i, int j) const {
            auto it = points_.find(key(i, j));
            if (it == points_.end()) {
                throw MalformedSystem("missing pair {" + std::to_string(i) + "," + std::to_string(j) + "}");
            }
            return it->second;
        }

        Rational ratio(int i, int j) const { return at(i, j).ratio(); }

        template <class F>
        void for_each_pair(F &&f) const {
            for (int i = 1; i <= n_; ++i) {
                for (int j = i + 1; j <= n_; ++j) {
                    f(i, j, at(i, j));
                }
            }
        }

    private:
        std::pair<int, int> key(int i, int j) const {
            if (i == j || i < 1 || j < 1 || i > n_ || j > n_) {
                throw MalformedSystem("bad pair index {" + std::to_string(i) + "," + std::to_string(j) + "}");
            }
            return i < j ? std::pair{i, j} : std::pair{j, i};
        }

        int n_;
        std::map<std::pair<int, int>, CurvePoint> points_;
    };

    struct CompatibilityResult {
        bool ok = true;
        std::vector<Quadruple> violations; // ascending index quadruples
    };

    namespace detail {
        inline void require_non_torsion(const Curve &curve, const CurvePoint &P, const std::string &name) {
            curve.require(P);
            if (curve.is_torsion(P)) {
                throw TorsionPoint("torsion point " + name + " = " + P.to_string() +
                                   " (finite order points are not allowed)");
            }
        }
    } // namespace detail

    /// For each 4-subset i < j < s < t the three pairings must agree:
    /// n_ij·n_st = n_is·n_jt = n_it·n_js.
    inline CompatibilityResult compatibility_check(const Curve &curve, const CompatibleSystem &sys) {
        sys.for_each_pair([&](int i, int j, const CurvePoint &P) {
            detail::require_non_torsion(curve, P, "Q_{" + std::to_string(i) + "," + std::to_string(j) + "}");
        });
        CompatibilityResult out;
        const int n = sys.size();
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int s = j + 1; s <= n; ++s)
                    for (int t = s + 1; t <= n; ++t) {
                        const Rational p1 = sys.ratio(i, j) * sys.ratio(s, t);
                        const Rational p2 = sys.ratio(i, s) * sys.ratio(j, t);
                        const Rational p3 = sys.ratio(i, t) * sys.ratio(j, s);
                        if (p1 != p2 || p1 != p3) {
                            out.ok = false;
                            out.violations.push_back({i, j, s, t});
                        }
                    }
        return out;
    }

    struct RationalDistanceSet {
        Conic conic;
        std::vector<ConicPoint> points;
        DistanceReport distances;
        bool degenerate = false; // two of the points coincide

        std::vector<Point2> xy() const { return {points.begin(), points.end()}; }
    };

    namespace detail {
        inline RationalDistanceSet finish_set(const Conic &conic, std::vector<ConicPoint> pts) {
            const std::vector<Point2> xy(pts.begin(), pts.end());
            DistanceReport rep = distance_report(xy);
            if (!rep.verdict) {
                throw InternalError("construction produced an irrational distance");
            }
            const bool degenerate = rep.degenerate;
            return {conic, std::move(pts), std::move(rep), degenerate};
        }

        inline ConicPoint to_conic_point(const Conic &conic, const Rational &x, const Rational &y) {
            try {
                return conic.point(x, y);
            } catch (const Error &e) {
                throw InternalError(std::string("constructed point rejected: ") + e.what());
            }
        }

        /// Point from the product n_ij / (n_it·n_jt).
        inline ConicPoint point_from_ratio(const Conic &conic, const Rational &r) {
            const Rational &a = conic.a();
            const Rational a2 = a * a;
            const Rational x = (-a * conic.c() + conic.delta() * r) / a2;
            const Rational y = (-a * conic.b() - a2 / r) / a2;
            return to_conic_point(conic, x, y);
        }
    } // namespace detail

    /// P_t computed through the admissible pair (i, j); i, j, t distinct.
    inline ConicPoint point_from_pair(const Conic &conic, const CompatibleSystem &sys, int t, int i, int j) {
        if (t == i || t == j || i == j) {
            throw MalformedSystem("indices t, i, j must be distinct");
        }
        return detail::point_from_ratio(conic, sys.ratio(i, j) / (sys.ratio(i, t) * sys.ratio(j, t)));
    }

    /// The n-point set of a compatible system. Each P_t uses the two smallest
    /// admissible indices; any other choice gives the same point.
    inline RationalDistanceSet general_n_set(const Conic &conic, const CompatibleSystem &sys) {
        const Curve curve(conic.D());
        auto check = compatibility_check(curve, sys);
        if (!check.ok) {
            std::string what = "incompatible system, violated quadruples:";
            for (const auto &q : check.violations) {
                what += " (" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) +
                        "," + std::to_string(q[3]) + ")";
            }
            throw IncompatibleSystem(what, std::move(check.violations));
        }
        std::vector<ConicPoint> pts;
        const int n = sys.size();
        for (int t = 1; t <= n; ++t) {
            int i = t == 1 ? 2 : 1;
            int j = i + 1 == t ? i + 2 : i + 1;
            pts.push_back(point_from_pair(conic, sys, t, i, j));
        }
        return detail::finish_set(conic, std::move(pts));
    }

    /// Generators relabelled as Q1 = Q_{23}, Q2 = Q_{13}, Q3 = Q_{12}.
    inline CompatibleSystem three_point_system(const CurvePoint &Q1, const CurvePoint &Q2, const CurvePoint &Q3) {
        CompatibleSystem sys(3);
        sys.set(2, 3, Q1);
        sys.set(1, 3, Q2);
        sys.set(1, 2, Q3);
        return sys;
    }

    /// The three-point system completed with Q_{t4} = fourth_point_transform(Q_t),
    /// so that complementary pairs have ratio product 2D.
    inline CompatibleSystem four_point_system(const Rational &D, const CurvePoint &Q1, const CurvePoint &Q2,
                                              const CurvePoint &Q3) {
        CompatibleSystem sys(4);
        sys.set(2, 3, Q1);
        sys.set(1, 3, Q2);
        sys.set(1, 2, Q3);
        sys.set(1, 4, fourth_point_transform(D, Q1).point);
        sys.set(2, 4, fourth_point_transform(D, Q2).point);
        sys.set(3, 4, fourth_point_transform(D, Q3).point);
        return sys;
    }

    inline RationalDistanceSet three_point_set(const Conic &conic, const CurvePoint &Q1, const CurvePoint &Q2,
                                               const CurvePoint &Q3) {
        const Curve curve(conic.D());
        detail::require_non_torsion(curve, Q1, "Q1");
        detail::require_non_torsion(curve, Q2, "Q2");
        detail::require_non_torsion(curve, Q3, "Q3");
        return general_n_set(conic, three_point_system(Q1, Q2, Q3));
    }

    /// Three-point set plus
    ///     x_4 = (−ac + (ad − bc)/(4D²)·n1·n2·n3) / a²
    ///     y_4 = (−ab − 4D²a² / (n1·n2·n3)) / a².
    /// The fourth point is also rebuilt from the completed n = 4 system; the two
    /// routes must agree exactly.
    inline RationalDistanceSet four_point_set(const Conic &conic, const CurvePoint &Q1, const CurvePoint &Q2,
                                              const CurvePoint &Q3) {
        RationalDistanceSet three = three_point_set(conic, Q1, Q2, Q3);
        const Rational &D = conic.D();
        const Rational &a = conic.a();
        const Rational prod = Q1.ratio() * Q2.ratio() * Q3.ratio();
        const Rational four_d2 = Rational(4) * D * D;
        const Rational x4 = (-a * conic.c() + conic.delta() / four_d2 * prod) / (a * a);
        const Rational y4 = (-a * conic.b() - four_d2 * a * a / prod) / (a * a);
        ConicPoint p4 = detail::to_conic_point(conic, x4, y4);

        RationalDistanceSet via_system = general_n_set(conic, four_point_system(D, Q1, Q2, Q3));
        if (via_system.points[3] != p4 ||
            !std::equal(three.points.begin(), three.points.end(), via_system.points.begin())) {
            throw InternalError("closed-form fourth point disagrees with the n = 4 system");
        }
        auto pts = std::move(three.points);
        pts.push_back(std::move(p4));
        return detail::finish_set(conic, std::move(pts));
    }

    enum class Verify { yes, no };

    struct Extension {
        ConicPoint point;
        bool degenerate = false; // some two of the four points coincide
    };

    /// Fourth point of a three-point rational distance set:
    ///     x_4 = −(c + Π(a·y_t + b)/(ad − bc)) / a
    ///     y_4 = −(b + Π(a·x_t + c)/(ad − bc)) / a.
    inline Extension extend_three(const Conic &conic, const ConicPoint &P1, const ConicPoint &P2,
                                  const ConicPoint &P3, Verify verify = Verify::yes) {
        const std::array<Point2, 3> in{P1.xy(), P2.xy(), P3.xy()};
        if (verify == Verify::yes) {
            for (const auto &p : in) {
                if (!conic.contains(p)) {
                    throw PreconditionError("input point is not on the conic");
                }
            }
            const DistanceReport rep = distance_report(in);
            for (const auto &pd : rep.pairs) {
                if (!pd.rational()) {
                    throw PreconditionError("not a rational distance set: ‖P" + std::to_string(pd.i + 1) + " − P" +
                                            std::to_string(pd.j + 1) + "‖² = " + pd.squared.to_string() +
                                            " is not a rational square");
                }
            }
        }
        const Rational &a = conic.a(), &b = conic.b(), &c = conic.c();
        Rational py(1), px(1);
        for (const auto &p : in) {
            py *= a * p.y + b;
            px *= a * p.x + c;
        }
        const Rational x4 = -(c + py / conic.delta()) / a;
        const Rational y4 = -(b + px / conic.delta()) / a;
        ConicPoint p4 = detail::to_conic_point(conic, x4, y4);
        if (verify == Verify::yes) {
            for (const auto &p : in) {
                if (!distance(p, p4.xy())) {
                    throw InternalError("extension point at irrational distance");
                }
            }
        }
        const bool degenerate = p4 == P1 || p4 == P2 || p4 == P3 || P1 == P2 || P1 == P3 || P2 == P3;
        return {std::move(p4), degenerate};
    }

    /// X_ij = −D(x_i − x_j) / ((y_i − y_j) + ‖P_i − P_j‖), which satisfies
    /// (X² − D²)/(2DX) = chord slope. Its lift to the curve need not be rational.
    inline Rational pair_to_curve_x(const Conic &conic, const ConicPoint &Pi, const ConicPoint &Pj) {
        if (Pi == Pj) {
            throw PreconditionError("coincident points have no chord");
        }
        auto dist = distance(Pi, Pj);
        if (!dist) {
            throw PreconditionError("irrational distance between the two points");
        }
        const Rational denom = (Pi.y() - Pj.y()) + *dist;
        if (denom.is_zero()) {
            throw DegenerateLocus("vertical chord");
        }
        return -conic.D() * (Pi.x() - Pj.x()) / denom;
    }

} // namespace hyperdist
