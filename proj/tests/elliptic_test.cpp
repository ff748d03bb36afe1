#include <hyperdist/elliptic.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

using hyperdist::BigInt;
using hyperdist::Curve;
using hyperdist::CurvePoint;
using hyperdist::Rational;

namespace {
    const Curve E6(6);

    bool contains(const std::vector<CurvePoint> &v, const CurvePoint &p) {
        return std::find(v.begin(), v.end(), p) != v.end();
    }

    // Independent doubling: affine tangent formulas written out directly.
    CurvePoint double_by_hand(const Rational &D, const Rational &x, const Rational &y) {
        const Rational lambda = (Rational(3) * x * x - D * D) / (Rational(2) * y);
        const Rational x2 = lambda * lambda - Rational(2) * x;
        const Rational y2 = lambda * (x - x2) - y;
        return CurvePoint::from_affine(x2, y2);
    }
} // namespace

TEST(CurvePoint, Canonicalization) {
    EXPECT_EQ(CurvePoint(648, 2592, -324), CurvePoint(-2, -8, 1));
    EXPECT_EQ(CurvePoint(-432, 1296, 144).to_string(), "-3:9:1");
    EXPECT_EQ(CurvePoint(0, -5, 0), CurvePoint::identity());
    EXPECT_EQ(CurvePoint::parse("50:35:8"), CurvePoint(100, 70, 16));
    EXPECT_EQ(CurvePoint::from_affine(Rational(25, 4), Rational(35, 8)).to_string(), "50:35:8");
    EXPECT_THROW(CurvePoint(0, 0, 0), hyperdist::DomainError);
    EXPECT_THROW(CurvePoint::parse("1:2"), hyperdist::ParseError);
    EXPECT_THROW(CurvePoint::parse("1/2:2:1"), hyperdist::ParseError);
}

TEST(Curve, OnCurve) {
    EXPECT_TRUE(E6.on_curve(CurvePoint(12, 36, 1)));
    EXPECT_TRUE(E6.on_curve(CurvePoint(50, 35, 8)));
    EXPECT_TRUE(E6.on_curve(CurvePoint(377844, 2065932, 12167)));
    EXPECT_TRUE(E6.on_curve(CurvePoint(0, 0, 1)));
    EXPECT_TRUE(E6.on_curve(CurvePoint::identity()));
    EXPECT_FALSE(E6.on_curve(CurvePoint(1, 1, 1)));
    EXPECT_THROW(Curve(0), hyperdist::DomainError);
}

TEST(Curve, RationalParameter) {
    // D = 3/2: scaling (x, y) ↦ (x/4, y/8) maps E^(6) onto E^(3/2).
    const Curve c(Rational(3, 2));
    const CurvePoint p = CurvePoint::from_affine(Rational(12, 4), Rational(36, 8));
    EXPECT_TRUE(c.on_curve(p));
    EXPECT_TRUE(c.on_curve(c.scalar_mul(3, p)));
    EXPECT_FALSE(c.is_torsion(p));
}

TEST(Curve, Add) {
    const CurvePoint P(12, 36, 1);
    EXPECT_EQ(E6.add(P, CurvePoint::identity()), P);
    EXPECT_EQ(E6.add(CurvePoint::identity(), P), P);
    EXPECT_EQ(E6.add(P, P), CurvePoint(50, -35, 8));
    EXPECT_EQ(E6.add(P, P), double_by_hand(6, 12, 36));
    EXPECT_EQ(E6.add(CurvePoint(0, 0, 1), CurvePoint(6, 0, 1)), CurvePoint(-6, 0, 1));
    EXPECT_EQ(E6.add(P, E6.neg(P)), CurvePoint::identity());
    EXPECT_EQ(E6.add(CurvePoint(6, 0, 1), CurvePoint(6, 0, 1)), CurvePoint::identity());
    EXPECT_THROW(E6.add(P, CurvePoint(1, 1, 1)), hyperdist::NotOnCurve);
}

TEST(Curve, NegAndScalarMul) {
    const CurvePoint P(12, 36, 1);
    EXPECT_EQ(E6.neg(P), CurvePoint(12, -36, 1));
    EXPECT_EQ(E6.scalar_mul(1, P), P);
    EXPECT_EQ(E6.scalar_mul(0, P), CurvePoint::identity());
    EXPECT_EQ(E6.scalar_mul(2, P), CurvePoint(50, -35, 8));
    EXPECT_EQ(E6.scalar_mul(-2, P), CurvePoint(50, 35, 8));
    CurvePoint acc = CurvePoint::identity();
    for (int k = 1; k <= 9; ++k) {
        acc = E6.add(acc, P);
        EXPECT_EQ(E6.scalar_mul(k, P), acc) << k;
        EXPECT_TRUE(E6.on_curve(acc));
    }
}

TEST(Curve, IsTorsion) {
    EXPECT_FALSE(E6.is_torsion(CurvePoint(12, 36, 1)));
    EXPECT_FALSE(E6.is_torsion(CurvePoint(50, 35, 8)));
    EXPECT_TRUE(E6.is_torsion(CurvePoint(6, 0, 1)));
    EXPECT_TRUE(E6.is_torsion(CurvePoint(0, 0, 1)));
    EXPECT_TRUE(E6.is_torsion(CurvePoint::identity()));
}

TEST(Curve, Involution) {
    const CurvePoint P(12, 36, 1);
    const CurvePoint img = E6.involution(P, +1);
    EXPECT_EQ(img, CurvePoint(-3, 9, 1));
    EXPECT_EQ(E6.involution(img, +1), P);
    EXPECT_EQ(E6.involution(CurvePoint(6, 0, 1), +1), CurvePoint(-6, 0, 1));
    EXPECT_EQ(img, E6.add(P, CurvePoint(0, 0, 1)));
    EXPECT_EQ(E6.involution(P, -1), E6.add(E6.neg(P), CurvePoint(0, 0, 1)));
    EXPECT_THROW(E6.involution(CurvePoint(0, 0, 1), 1), hyperdist::DegenerateLocus);
    EXPECT_THROW(E6.involution(CurvePoint::identity(), 1), hyperdist::DegenerateLocus);
    EXPECT_THROW(E6.involution(P, 2), hyperdist::DomainError);
}

TEST(Curve, InvolutionRatioAndOrder) {
    const auto pts = hyperdist::find_points(E6, 400, 8);
    for (const auto &p : pts) {
        if (p.X() == 0 || p.Z() == 0) continue;
        for (int sign : {1, -1}) {
            const CurvePoint img = E6.involution(p, sign);
            EXPECT_TRUE(E6.on_curve(img));
            if (p.Y() != 0) {
                EXPECT_EQ(img.ratio(), Rational(-sign) * p.ratio());
            }
            EXPECT_EQ(E6.involution(img, sign), p);
        }
    }
}

TEST(FindPoints, Examples) {
    const auto pts = hyperdist::find_points(E6, 100, 1);
    EXPECT_TRUE(contains(pts, CurvePoint(12, 36, 1)));
    EXPECT_TRUE(contains(pts, CurvePoint(0, 0, 1)));
    EXPECT_TRUE(contains(pts, CurvePoint(6, 0, 1)));
    EXPECT_TRUE(contains(pts, CurvePoint(-6, 0, 1)));
    EXPECT_TRUE(contains(hyperdist::find_points(E6, 10, 1), CurvePoint(-3, 9, 1)));
    EXPECT_TRUE(contains(hyperdist::find_points(Curve(5), 10, 1), CurvePoint(-4, 6, 1)));
    EXPECT_THROW(hyperdist::find_points(Curve(Rational(1, 2)), 10, 1), hyperdist::DomainError);
    EXPECT_THROW(hyperdist::find_points(E6, 0, 1), hyperdist::DomainError);
}

TEST(FindPoints, MatchesBruteForceEnumeration) {
    // Frozen from an independent enumeration of x = m/e², gcd(m, e) = 1.
    const std::vector<CurvePoint> expected = {
        {-6, 0, 1},    {-3, 9, 1},      {-3, -9, 1},    {-2, 8, 1},       {-2, -8, 1},      {0, 0, 1},
        {6, 0, 1},     {12, 36, 1},     {12, -36, 1},   {18, 72, 1},      {18, -72, 1},     {294, 5040, 1},
        {294, -5040, 1}, {50, 35, 8},   {50, -35, 8},   {-720, 504, 125}, {-720, -504, 125}, {-42, 720, 343},
        {-42, -720, 343}};
    EXPECT_EQ(hyperdist::find_points(E6, 400, 8), expected);
    EXPECT_EQ(hyperdist::find_points(E6, 400, 8, 4), expected);
}

TEST(FindPoints, BigIntegerPathAgreesWithFastPath) {
    // A D this large skips the machine-word path; compare with lifting integer x directly.
    const Curve big(BigInt(1) << 22);
    const auto pts = hyperdist::find_points(big, 60, 1);
    std::vector<CurvePoint> expected;
    for (int x = -60; x <= 60; ++x) {
        const Rational rhs = Rational(x) * (Rational(x) * Rational(x) - big.D() * big.D());
        if (rhs.sign() < 0) continue;
        if (auto y = hyperdist::exact_sqrt(rhs.num())) {
            expected.emplace_back(x, *y, 1);
            if (*y != 0) expected.emplace_back(x, BigInt(-*y), 1);
        }
    }
    ASSERT_FALSE(expected.empty());
    EXPECT_EQ(pts.size(), expected.size());
    for (const auto &p : expected) {
        EXPECT_TRUE(contains(pts, p)) << p.to_string();
    }
}

TEST(GroupLaw, AxiomsOnFoundPoints) {
    for (long long D : {5, 6, 7}) {
        const Curve curve(D);
        const auto pts = hyperdist::find_points(curve, 100, 4);
        ASSERT_GE(pts.size(), 5u);
        for (const auto &P : pts) {
            EXPECT_TRUE(curve.on_curve(P));
            EXPECT_EQ(curve.add(P, curve.neg(P)), CurvePoint::identity());
            if (P.Y() != 0) {
                EXPECT_FALSE(curve.is_torsion(P));
                for (int m = 1; m <= 12; ++m) {
                    EXPECT_FALSE(curve.scalar_mul(m, P).is_identity()) << P.to_string() << " m=" << m;
                }
            }
            for (const auto &Q : pts) {
                const CurvePoint S = curve.add(P, Q);
                EXPECT_TRUE(curve.on_curve(S));
                EXPECT_EQ(S, curve.add(Q, P));
            }
        }
        for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
            const auto &P = pts[i], &Q = pts[i + 1], &R = pts[i + 2];
            EXPECT_EQ(curve.add(curve.add(P, Q), R), curve.add(P, curve.add(Q, R)));
        }
    }
}
