// the curve Y²Z = X³ − D²·X·Z² over Q.
//
// Points are kept as primitive integer triples with Z > 0 (the identity is
// (0:1:0)), so two points are equal iff their triples are. The group law
// runs on affine rationals; D may be any nonzero rational.

#pragma once

#include <hyperdist/rational.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace hyperdist {

    class CurvePoint {
    public:
        /// Canonicalizes any nonzero projective triple.
        CurvePoint(BigInt X, BigInt Y, BigInt Z) : X_(std::move(X)), Y_(std::move(Y)), Z_(std::move(Z)) {
            canonicalize();
        }

        static CurvePoint identity() { return CurvePoint(BigInt(0), BigInt(1), BigInt(0)); }

        static CurvePoint from_affine(const Rational &x, const Rational &y) {
            return from_projective(x, y, Rational(1));
        }

        /// Clears denominators of a rational triple.
        static CurvePoint from_projective(const Rational &X, const Rational &Y, const Rational &Z) {
            BigInt l = boost::multiprecision::lcm(X.den(), Y.den());
            l = boost::multiprecision::lcm(l, Z.den());
            return CurvePoint(BigInt(X.num() * (l / X.den())), BigInt(Y.num() * (l / Y.den())),
                              BigInt(Z.num() * (l / Z.den())));
        }

        /// "X:Y:Z" with integer coordinates.
        static CurvePoint parse(std::string_view text) {
            auto c1 = text.find(':');
            auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
            if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
                throw ParseError("malformed curve point '" + std::string(text) + "', expected X:Y:Z");
            }
            auto coord = [&](std::string_view s) {
                Rational q = Rational::parse(s);
                if (!q.is_integer()) {
                    throw ParseError("curve point coordinates must be integers in '" + std::string(text) + "'");
                }
                return q.num();
            };
            return CurvePoint(coord(text.substr(0, c1)), coord(text.substr(c1 + 1, c2 - c1 - 1)),
                              coord(text.substr(c2 + 1)));
        }

        const BigInt &X() const noexcept { return X_; }
        const BigInt &Y() const noexcept { return Y_; }
        const BigInt &Z() const noexcept { return Z_; }

        bool is_identity() const noexcept { return Z_ == 0; }

        Rational x() const {
            require_affine();
            return Rational(X_, Z_);
        }
        Rational y() const {
            require_affine();
            return Rational(Y_, Z_);
        }
        /// Y/X, the quantity every construction actually consumes.
        Rational ratio() const {
            if (X_ == 0) {
                throw DegenerateLocus("ratio Y/X undefined at X = 0 for " + to_string());
            }
            return Rational(Y_, X_);
        }

        std::string to_string() const { return X_.str() + ":" + Y_.str() + ":" + Z_.str(); }

        friend bool operator==(const CurvePoint &, const CurvePoint &) = default;

    private:
        void require_affine() const {
            if (Z_ == 0) {
                throw DegenerateLocus("point at infinity has no affine coordinates");
            }
        }

        void canonicalize() {
            if (X_ == 0 && Y_ == 0 && Z_ == 0) {
                throw DomainError("invalid projective point (0:0:0)");
            }
            BigInt g = boost::multiprecision::gcd(X_, Y_);
            g = boost::multiprecision::gcd(g, Z_);
            if (g != 1) {
                X_ /= g;
                Y_ /= g;
                Z_ /= g;
            }
            const bool flip = Z_ != 0 ? Z_ < 0 : (Y_ != 0 ? Y_ < 0 : X_ < 0);
            if (flip) {
                X_ = -X_;
                Y_ = -Y_;
                Z_ = -Z_;
            }
        }

        BigInt X_, Y_, Z_;
    };

    /// E^(D): Y²Z = X³ − D²·X·Z², D ≠ 0.
    class Curve {
    public:
        explicit Curve(Rational D) : D_(std::move(D)), D2_(D_ * D_) {
            if (D_.is_zero()) {
                throw DomainError("curve parameter D must be nonzero");
            }
        }

        const Rational &D() const noexcept { return D_; }

        bool on_curve(const CurvePoint &P) const {
            // With D² = p/q: q·Y²Z = q·X³ − p·X·Z².
            const BigInt &p = D2_.num();
            const BigInt &q = D2_.den();
            const BigInt lhs = q * P.Y() * P.Y() * P.Z();
            const BigInt rhs = q * P.X() * P.X() * P.X() - p * P.X() * P.Z() * P.Z();
            return lhs == rhs;
        }

        CurvePoint neg(const CurvePoint &P) const {
            require(P);
            return CurvePoint(P.X(), BigInt(-P.Y()), P.Z());
        }

        CurvePoint add(const CurvePoint &P, const CurvePoint &Q) const {
            require(P);
            require(Q);
            return add_unchecked(P, Q);
        }

        /// k·P by double-and-add; 0·P is the identity, (−k)·P = −(k·P).
        CurvePoint scalar_mul(long long k, const CurvePoint &P) const {
            require(P);
            return mul_unchecked(k, P);
        }

        /// Finite order. Y·Z = 0 covers the identity and the three 2-torsion
        /// points; otherwise m·P is compared with the identity for every m ≤ 12
        /// through ⌈m/2⌉·P = −⌊m/2⌋·P.
        bool is_torsion(const CurvePoint &P) const {
            require(P);
            if (P.Y() == 0 || P.Z() == 0) {
                return true;
            }
            std::array<CurvePoint, 7> mult{CurvePoint::identity(), P, P, P, P, P, P};
            for (int i = 2; i <= 6; ++i) {
                mult[i] = add_unchecked(mult[i - 1], P);
                if (mult[i].is_identity()) {
                    return true;
                }
            }
            for (int m = 2; m <= 12; ++m) {
                const int hi = (m + 1) / 2;
                const int lo = m / 2;
                if (mult[hi] == negate(mult[lo])) {
                    return true;
                }
            }
            return false;
        }

        /// (−D²XZ : sign·D²YZ : X²), i.e. [sign]·P ⊕ (0:0:1). Sends Y/X to −sign·Y/X.
        CurvePoint involution(const CurvePoint &P, int sign) const {
            require(P);
            if (sign != 1 && sign != -1) {
                throw DomainError("involution sign must be +1 or -1");
            }
            if (P.X() == 0 || P.Z() == 0) {
                throw DegenerateLocus("involution image is degenerate at X·Z = 0 for " + P.to_string());
            }
            const Rational X(P.X()), Y(P.Y()), Z(P.Z());
            return CurvePoint::from_projective(-D2_ * X * Z, Rational(sign) * D2_ * Y * Z, X * X);
        }

        /// Rational point above abscissa x with Y ≥ 0, when x³ − D²x is a rational square.
        std::optional<CurvePoint> lift(const Rational &x) const {
            auto y = rational_sqrt_or_none(x * x * x - D2_ * x);
            if (!y) return std::nullopt;
            return CurvePoint::from_affine(x, *y);
        }

        void require(const CurvePoint &P) const {
            if (!on_curve(P)) {
                throw NotOnCurve("point " + P.to_string() + " is not on E^(" + D_.to_string() + ")");
            }
        }

    private:
        static std::optional<Rational> rational_sqrt_or_none(const Rational &q) {
            if (q.sign() < 0) return std::nullopt;
            return rational_sqrt(q);
        }

        static CurvePoint negate(const CurvePoint &P) { return CurvePoint(P.X(), BigInt(-P.Y()), P.Z()); }

        CurvePoint add_unchecked(const CurvePoint &P, const CurvePoint &Q) const {
            if (P.is_identity()) return Q;
            if (Q.is_identity()) return P;
            const Rational x1 = P.x(), y1 = P.y();
            const Rational x2 = Q.x(), y2 = Q.y();
            Rational slope;
            if (x1 == x2) {
                if (y1 != y2 || y1.is_zero()) {
                    return CurvePoint::identity(); // P = −Q, including doubling a 2-torsion point
                }
                slope = (Rational(3) * x1 * x1 - D2_) / (Rational(2) * y1);
            } else {
                slope = (y2 - y1) / (x2 - x1);
            }
            const Rational x3 = slope * slope - x1 - x2;
            const Rational y3 = slope * (x1 - x3) - y1;
            return CurvePoint::from_affine(x3, y3);
        }

        CurvePoint mul_unchecked(long long k, const CurvePoint &P) const {
            if (k < 0) {
                // −(LLONG_MIN) overflows; peel one copy off first.
                return negate(add_unchecked(mul_unchecked(-(k + 1), P), P));
            }
            CurvePoint acc = CurvePoint::identity();
            CurvePoint base = P;
            auto n = static_cast<unsigned long long>(k);
            while (n != 0) {
                if (n & 1u) acc = add_unchecked(acc, base);
                n >>= 1;
                if (n != 0) base = add_unchecked(base, base);
            }
            return acc;
        }

        Rational D_;
        Rational D2_;
    };

    namespace detail {
        using i128 = __int128;
        using u128 = unsigned __int128;

        inline std::optional<u128> exact_sqrt_u128(u128 n) {
            if (!maybe_square_mod(static_cast<std::uint64_t>(n % 64), static_cast<std::uint64_t>(n % 63),
                                  static_cast<std::uint64_t>(n % 65), static_cast<std::uint64_t>(n % 11))) {
                return std::nullopt;
            }
            if (n < 2) return n;
            int bits = 0;
            for (u128 t = n; t != 0; t >>= 1) ++bits;
            u128 x = u128{1} << ((bits - 1) / 2 + 1);
            for (;;) {
                u128 y = (x + n / x) >> 1;
                if (y >= x) break;
                x = y;
            }
            if (x * x != n) return std::nullopt;
            return x;
        }

        inline BigInt to_big(i128 v) {
            const bool neg = v < 0;
            u128 mag = neg ? u128(0) - static_cast<u128>(v) : static_cast<u128>(v);
            BigInt out = BigInt(static_cast<std::uint64_t>(mag >> 64));
            out <<= 64;
            out += BigInt(static_cast<std::uint64_t>(mag));
            return neg ? BigInt(-out) : out;
        }

        struct SearchTask {
            long long e;
            long long m_lo;
            long long m_hi;
        };

        // Points above x = m/e² for m in [lo, hi], ascending m, +n before −n.
        inline std::vector<CurvePoint> search_range(const BigInt &D, const SearchTask &task, bool fast) {
            std::vector<CurvePoint> out;
            const long long e = task.e;
            auto emit = [&](const BigInt &X, const BigInt &n, const BigInt &Z) {
                out.emplace_back(X, n, Z);
                if (n != 0) out.emplace_back(X, BigInt(-n), Z);
            };
            const BigInt e3 = BigInt(e) * e * e;
            if (fast) {
                const i128 d2e4 = static_cast<i128>(D.convert_to<long long>()) * D.convert_to<long long>() *
                                  e * e * e * e;
                for (long long m = task.m_lo; m <= task.m_hi; ++m) {
                    if (e > 1 && std::gcd(m, e) != 1) continue;
                    const i128 mm = m;
                    const i128 f = mm * (mm * mm - d2e4);
                    if (f < 0) continue;
                    if (auto n = exact_sqrt_u128(static_cast<u128>(f))) {
                        emit(BigInt(m) * e, to_big(static_cast<i128>(*n)), e3);
                    }
                }
            } else {
                const BigInt d2e4 = D * D * e * e * e * e;
                for (long long m = task.m_lo; m <= task.m_hi; ++m) {
                    if (e > 1 && std::gcd(m, e) != 1) continue;
                    const BigInt bm(m);
                    const BigInt f = bm * (bm * bm - d2e4);
                    if (auto n = exact_sqrt(f)) {
                        emit(BigInt(bm * e), *n, e3);
                    }
                }
            }
            return out;
        }
    } // namespace detail

    /// Affine points with x = m/e², 1 ≤ e ≤ E, |m| ≤ H·e², gcd(m, e) = 1,
    /// ordered by e, then m, then sign of Y (positive first). Requires an
    /// integral D. Work is split into chunks across `threads` workers; the
    /// merged order does not depend on the thread count.
    inline std::vector<CurvePoint> find_points(const Curve &curve, long long height, long long denom,
                                               unsigned threads = 0) {
        if (!curve.D().is_integer()) {
            throw DomainError("find_points needs an integral D, got " + curve.D().to_string());
        }
        if (height < 1 || denom < 1) {
            throw DomainError("search bounds must be at least 1");
        }
        const BigInt &D = curve.D().num();
        const BigInt absD = D < 0 ? BigInt(-D) : D;
        // Fast path keeps m³ and m·D²·e⁴ below 2^117.
        const bool fast = absD <= (1 << 20) && denom <= (1 << 10) &&
                          static_cast<long double>(height) * denom * denom <= static_cast<long double>(1ll << 36);

        constexpr long long chunk = 1 << 15;
        std::vector<detail::SearchTask> tasks;
        for (long long e = 1; e <= denom; ++e) {
            const long long bound = height * e * e;
            for (long long lo = -bound; lo <= bound; lo += chunk) {
                tasks.push_back({e, lo, std::min(bound, lo + chunk - 1)});
            }
        }

        std::vector<std::vector<CurvePoint>> results(tasks.size());
        if (threads == 0) {
            threads = std::max(1u, std::thread::hardware_concurrency());
        }
        threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t t = next++; t < tasks.size(); t = next++) {
                results[t] = detail::search_range(D, tasks[t], fast);
            }
        };
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(threads);
            for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        }

        std::vector<CurvePoint> out;
        for (auto &r : results) {
            out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
        }
        return out;
    }

} // namespace hyperdist
