// the surface v⁴w³ = u(u + D²w)(u + D²T⁴w)(u² − D⁴T⁴w²)²
// fibred over the T-line, and its maps to and from pairs of points on E^(D).

#pragma once

#include <hyperdist/elliptic.hpp>

#include <string>
#include <utility>

namespace hyperdist {

    /// ((u:v:w), T) with (u:v:w) primitive and sign-normalized (w > 0, else u > 0, else v > 0).
    class SurfacePoint {
    public:
        SurfacePoint(BigInt u, BigInt v, BigInt w, Rational T)
            : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)), T_(std::move(T)) {
            canonicalize();
        }

        static SurfacePoint from_rational(const Rational &u, const Rational &v, const Rational &w, Rational T) {
            BigInt l = boost::multiprecision::lcm(u.den(), v.den());
            l = boost::multiprecision::lcm(l, w.den());
            return SurfacePoint(BigInt(u.num() * (l / u.den())), BigInt(v.num() * (l / v.den())),
                                BigInt(w.num() * (l / w.den())), std::move(T));
        }

        const BigInt &u() const noexcept { return u_; }
        const BigInt &v() const noexcept { return v_; }
        const BigInt &w() const noexcept { return w_; }
        const Rational &T() const noexcept { return T_; }

        std::string to_string() const {
            return "((" + u_.str() + ":" + v_.str() + ":" + w_.str() + "), " + T_.to_string() + ")";
        }

        friend bool operator==(const SurfacePoint &, const SurfacePoint &) = default;

    private:
        void canonicalize() {
            if (u_ == 0 && v_ == 0 && w_ == 0) {
                throw DomainError("invalid surface point: (u:v:w) = (0:0:0)");
            }
            BigInt g = boost::multiprecision::gcd(u_, v_);
            g = boost::multiprecision::gcd(g, w_);
            if (g != 1) {
                u_ /= g;
                v_ /= g;
                w_ /= g;
            }
            const bool flip = w_ != 0 ? w_ < 0 : (u_ != 0 ? u_ < 0 : v_ < 0);
            if (flip) {
                u_ = -u_;
                v_ = -v_;
                w_ = -w_;
            }
        }

        BigInt u_, v_, w_;
        Rational T_;
    };

    inline bool on_surface(const Rational &D, const SurfacePoint &S) {
        const Rational u(S.u()), v(S.v()), w(S.w());
        const Rational D2 = D * D;
        const Rational T4 = pow(S.T(), 4);
        const Rational K = u * u - D2 * D2 * T4 * w * w;
        return pow(v, 4) * pow(w, 3) == u * (u + D2 * w) * (u + D2 * T4 * w) * K * K;
    }

    /// (X:Y:Z) ↦ ((X²Z : (X² + D²Z²)Y : Z³), 1). The T-coordinate is always 1.
    inline SurfacePoint embed(const Rational &D, const CurvePoint &P) {
        Curve(D).require(P);
        if (P.is_identity()) {
            throw DegenerateLocus("embed is undefined at the identity (0:1:0)");
        }
        const Rational X(P.X()), Y(P.Y()), Z(P.Z());
        return SurfacePoint::from_rational(X * X * Z, (X * X + D * D * Z * Z) * Y, Z * Z * Z, Rational(1));
    }

    struct PartnerPoint {
        CurvePoint point;
        bool degenerate = false; // input was 2-torsion (Y = 0)
    };

    /// (X:Y:Z) ↦ (D(X² − D²Z²) : 2D²YZ : −(X + DZ)²), which equals P ⊕ (−D:0:1).
    /// For non-torsion P, (Y/X)·(Y'/X') = 2D.
    inline PartnerPoint fourth_point_transform(const Rational &D, const CurvePoint &P) {
        Curve(D).require(P);
        const Rational X(P.X()), Y(P.Y()), Z(P.Z());
        const Rational s = X + D * Z;
        if (s.is_zero()) {
            throw DegenerateLocus("fourth-point transform is undefined where X + D·Z = 0, at " + P.to_string());
        }
        auto image = CurvePoint::from_projective(D * (X * X - D * D * Z * Z), Rational(2) * D * D * Y * Z, -(s * s));
        return {std::move(image), P.Y() == 0};
    }

    namespace detail {
        inline void require_generic(const CurvePoint &P, const char *name) {
            if (P.X() == 0 || P.Y() == 0 || P.Z() == 0) {
                throw DegenerateLocus(std::string("torsion input ") + name + " = " + P.to_string() +
                                      " (needs X·Y·Z ≠ 0)");
            }
        }
    } // namespace detail

    /// The pair (P, P') of points on E^(D) as a point of the surface, with
    /// T = 2D·(X/Y)·(X'/Y').
    inline SurfacePoint forward_map(const Rational &D, const CurvePoint &P, const CurvePoint &Pp) {
        const Curve curve(D);
        curve.require(P);
        curve.require(Pp);
        detail::require_generic(P, "P");
        detail::require_generic(Pp, "P'");
        const Rational X(P.X()), Y(P.Y()), Z(P.Z());
        const Rational Xp(Pp.X()), Yp(Pp.Y()), Zp(Pp.Z());
        const Rational D2 = D * D;
        const Rational A = X * X - D2 * Z * Z;
        const Rational Ap = Xp * Xp - D2 * Zp * Zp;
        const Rational minus = Xp - D * Zp;
        const Rational plus = Xp + D * Zp;

        const Rational u = Rational(-4) * pow(D, 3) * X * X * Xp * Yp * Zp * A * Ap;
        const Rational v = Rational(8) * pow(D, 5) * X * X * Xp * Xp * Zp *
                           (D2 * Z * Z * plus * plus - X * X * minus * minus);
        const Rational w = Yp * A * A * minus * pow(plus, 3);
        const Rational T = Rational(2) * D * (X / Y) * (Xp / Yp);
        if (u.is_zero() && v.is_zero() && w.is_zero()) {
            throw DegenerateLocus("forward map collapses to (0:0:0)");
        }
        return SurfacePoint::from_rational(u, v, w, T);
    }

    /// Back from the surface to a pair (P, P') on E^(D) with (Y/X)·(Y'/X') = 2D/T.
    inline std::pair<CurvePoint, CurvePoint> inverse_map(const Rational &D, const SurfacePoint &S) {
        if (!on_surface(D, S)) {
            throw DomainError("point " + S.to_string() + " is not on the surface");
        }
        const Rational u(S.u()), v(S.v()), w(S.w());
        const Rational &T = S.T();
        const Rational D2 = D * D;
        const Rational T4 = pow(T, 4);
        const Rational K = u * u - D2 * D2 * T4 * w * w;
        if (K.is_zero()) throw DegenerateLocus("inverse map undefined: u² − D⁴T⁴w² = 0");
        if (w.is_zero()) throw DegenerateLocus("inverse map undefined: w = 0");
        if (v.is_zero()) throw DegenerateLocus("inverse map undefined: v = 0");
        if (T.is_zero()) throw DegenerateLocus("inverse map undefined: T = 0");
        const Rational B = Rational(2) * D * v * v * w * w -
                           K * (u * u + Rational(2) * D2 * u * w + D2 * D2 * T4 * w * w);
        if (B.is_zero()) throw DegenerateLocus("inverse map undefined: 2Dv²w² − K(u² + 2D²uw + D⁴T⁴w²) = 0");
        const Rational w2 = w * w;

        CurvePoint first = CurvePoint::from_projective(T * v * v * w, v * K, pow(T, 3) * (u + D2 * w) * K);
        CurvePoint second = CurvePoint::from_projective(D * w2 * K * B, Rational(2) * D2 * v * w2 * w * B,
                                                        w2 * K * K * K);
        const Curve curve(D);
        if (!curve.on_curve(first) || !curve.on_curve(second)) {
            throw InternalError("inverse map left the curve for " + S.to_string());
        }
        return {std::move(first), std::move(second)};
    }

} // namespace hyperdist
