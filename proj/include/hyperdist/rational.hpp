// exact rationals over arbitrary-precision integers.
//
// Every scalar in the library is a Rational held in canonical form:
// denominator > 0 and gcd(|num|, den) = 1. Equality is therefore
// structural. No floating point ever touches these values; the only
// conversion to double lives in to_double() for rendering.

#pragma once

#include <hyperdist/error.hpp>

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace hyperdist {

    using BigInt = boost::multiprecision::mpz_int;

    struct IntegerSqrt {
        BigInt root;
        bool exact = false;
    };

    /// floor(√n) by Newton iteration; exactness decided by one multiplication.
    inline IntegerSqrt integer_sqrt(const BigInt &n) {
        if (n < 0) {
            throw DomainError("integer_sqrt of a negative integer");
        }
        if (n < 2) {
            return {n, true};
        }
        // 2^(⌊log2 n⌋/2 + 1) > √n, so the iteration decreases monotonically to the floor.
        BigInt x = BigInt(1) << (boost::multiprecision::msb(n) / 2 + 1);
        for (;;) {
            BigInt y = (x + n / x) >> 1;
            if (y >= x) {
                break;
            }
            x = std::move(y);
        }
        return {x, x * x == n};
    }

    namespace detail {
        // Quadratic-residue sieves; rejects ~97% of non-squares before any sqrt.
        inline bool maybe_square_mod(std::uint64_t r64, std::uint64_t r63, std::uint64_t r65,
                                     std::uint64_t r11) {
            constexpr auto table = [](unsigned m) {
                std::uint64_t bits[2] = {0, 0};
                for (unsigned i = 0; i < m; ++i) {
                    unsigned q = (i * i) % m;
                    bits[q / 64] |= std::uint64_t{1} << (q % 64);
                }
                return std::pair{bits[0], bits[1]};
            };
            static const auto t64 = table(64), t63 = table(63), t65 = table(65), t11 = table(11);
            auto test = [](const std::pair<std::uint64_t, std::uint64_t> &t, std::uint64_t r) {
                return ((r < 64 ? t.first >> r : t.second >> (r - 64)) & 1) != 0;
            };
            return test(t64, r64) && test(t63, r63) && test(t65, r65) && test(t11, r11);
        }
    } // namespace detail

    /// Cheap exact square test for nonnegative big integers.
    inline std::optional<BigInt> exact_sqrt(const BigInt &n) {
        if (n < 0) {
            return std::nullopt;
        }
        const std::uint64_t r = static_cast<std::uint64_t>(n % (64ull * 63 * 65 * 11));
        if (!detail::maybe_square_mod(r % 64, r % 63, r % 65, r % 11)) {
            return std::nullopt;
        }
        auto s = integer_sqrt(n);
        if (!s.exact) {
            return std::nullopt;
        }
        return std::move(s.root);
    }

    class Rational {
    public:
        Rational() : num_(0), den_(1) {}
        Rational(long long n) : num_(n), den_(1) {}            // NOLINT(google-explicit-constructor)
        Rational(const BigInt &n) : num_(n), den_(1) {}        // NOLINT(google-explicit-constructor)
        Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }

        const BigInt &num() const noexcept { return num_; }
        const BigInt &den() const noexcept { return den_; }

        bool is_zero() const noexcept { return num_ == 0; }
        bool is_integer() const noexcept { return den_ == 1; }
        int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

        Rational operator-() const {
            Rational r = *this;
            r.num_ = -r.num_;
            return r;
        }

        Rational &operator+=(const Rational &o) {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
            reduce();
            return *this;
        }
        Rational &operator-=(const Rational &o) {
            num_ = num_ * o.den_ - o.num_ * den_;
            den_ *= o.den_;
            reduce();
            return *this;
        }
        Rational &operator*=(const Rational &o) {
            num_ *= o.num_;
            den_ *= o.den_;
            reduce();
            return *this;
        }
        Rational &operator/=(const Rational &o) {
            if (o.num_ == 0) {
                throw DivisionByZero();
            }
            BigInt n = num_ * o.den_;
            BigInt d = den_ * o.num_;
            num_ = std::move(n);
            den_ = std::move(d);
            canonicalize();
            return *this;
        }

        friend Rational operator+(Rational a, const Rational &b) { return a += b; }
        friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
        friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
        friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

        friend bool operator==(const Rational &a, const Rational &b) {
            return a.num_ == b.num_ && a.den_ == b.den_;
        }
        friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
            const BigInt l = a.num_ * b.den_;
            const BigInt r = b.num_ * a.den_;
            if (l < r) return std::strong_ordering::less;
            if (l > r) return std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }

        /// "p/q", or "p" when the denominator is 1.
        std::string to_string() const {
            if (den_ == 1) {
                return num_.str();
            }
            return num_.str() + "/" + den_.str();
        }

        /// Accepts exactly -?[0-9]+(/[0-9]+)?
        static Rational parse(std::string_view text) {
            auto digits = [](std::string_view s) {
                if (s.empty()) return false;
                for (char ch : s) {
                    if (ch < '0' || ch > '9') return false;
                }
                return true;
            };
            std::string_view body = text;
            bool negative = false;
            if (!body.empty() && body.front() == '-') {
                negative = true;
                body.remove_prefix(1);
            }
            std::string_view numer = body, denom = "1";
            if (auto slash = body.find('/'); slash != std::string_view::npos) {
                numer = body.substr(0, slash);
                denom = body.substr(slash + 1);
            }
            if (!digits(numer) || !digits(denom)) {
                throw ParseError("malformed rational '" + std::string(text) + "'");
            }
            BigInt n{std::string(numer)};
            BigInt d{std::string(denom)};
            if (d == 0) {
                throw ParseError("zero denominator in '" + std::string(text) + "'");
            }
            return Rational(negative ? BigInt(-n) : n, d);
        }

        double to_double() const {
            using boost::multiprecision::mpq_rational;
            return mpq_rational(num_, den_).convert_to<double>();
        }

        friend std::ostream &operator<<(std::ostream &os, const Rational &q) {
            return os << q.to_string();
        }

    private:
        void canonicalize() {
            if (den_ == 0) {
                throw DivisionByZero();
            }
            if (den_ < 0) {
                num_ = -num_;
                den_ = -den_;
            }
            reduce();
        }

        void reduce() {
            if (num_ == 0) {
                den_ = 1;
                return;
            }
            BigInt g = boost::multiprecision::gcd(num_, den_);
            if (g != 1) {
                num_ /= g;
                den_ /= g;
            }
        }

        BigInt num_;
        BigInt den_;
    };

    /// Canonical n/d; throws DivisionByZero when d = 0.
    inline Rational normalize(const BigInt &n, const BigInt &d) { return Rational(n, d); }

    inline Rational abs(const Rational &q) { return q.sign() < 0 ? -q : q; }

    inline Rational pow(Rational base, unsigned exp) {
        Rational out(1);
        while (exp != 0) {
            if (exp & 1u) out *= base;
            exp >>= 1;
            if (exp != 0) base *= base;
        }
        return out;
    }

    /// Nonnegative r with r² = q when q is a rational square, nothing otherwise.
    inline std::optional<Rational> rational_sqrt(const Rational &q) {
        if (q.sign() < 0) {
            throw DomainError("rational_sqrt of a negative rational " + q.to_string());
        }
        auto n = exact_sqrt(q.num());
        if (!n) return std::nullopt;
        auto d = exact_sqrt(q.den());
        if (!d) return std::nullopt;
        // Both parts of a reduced fraction stay coprime after the root.
        return Rational(std::move(*n), std::move(*d));
    }

} // namespace hyperdist
