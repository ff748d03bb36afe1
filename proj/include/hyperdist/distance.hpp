// exact Euclidean distances and set verification.

#pragma once

#include <hyperdist/conic.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hyperdist {

    inline Rational squared_distance(const Point2 &p, const Point2 &q) {
        const Rational dx = p.x - q.x;
        const Rational dy = p.y - q.y;
        return dx * dx + dy * dy;
    }

    /// The exact distance when it is rational.
    inline std::optional<Rational> distance(const Point2 &p, const Point2 &q) {
        return rational_sqrt(squared_distance(p, q));
    }

    struct PairDistance {
        std::size_t i = 0; // 0-based
        std::size_t j = 0;
        Rational squared;
        std::optional<Rational> distance;

        bool rational() const noexcept { return distance.has_value(); }
    };

    struct DistanceReport {
        std::vector<PairDistance> pairs; // (0,1), (0,2), ..., (1,2), ...
        std::vector<bool> on_conic;      // empty when no conic was given
        bool verdict = true;             // every pair rational
        bool degenerate = false;         // some pair at distance zero

        bool all_on_conic() const {
            for (bool b : on_conic) {
                if (!b) return false;
            }
            return true;
        }

        const PairDistance &pair(std::size_t i, std::size_t j) const {
            if (i > j) std::swap(i, j);
            for (const auto &p : pairs) {
                if (p.i == i && p.j == j) return p;
            }
            throw DomainError("no such pair in report");
        }
    };

    inline DistanceReport distance_report(std::span<const Point2> points) {
        DistanceReport rep;
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                PairDistance pd{i, j, squared_distance(points[i], points[j]), std::nullopt};
                pd.distance = rational_sqrt(pd.squared);
                rep.verdict = rep.verdict && pd.rational();
                rep.degenerate = rep.degenerate || pd.squared.is_zero();
                rep.pairs.push_back(std::move(pd));
            }
        }
        return rep;
    }

    /// Membership of every point plus rationality of every pair. Irrationality is
    /// reported, never thrown.
    inline DistanceReport verify_set(const Conic &conic, std::span<const Point2> points) {
        DistanceReport rep = distance_report(points);
        rep.on_conic.reserve(points.size());
        for (const auto &p : points) {
            rep.on_conic.push_back(conic.contains(p));
        }
        return rep;
    }

} // namespace hyperdist
