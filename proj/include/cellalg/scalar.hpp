#ifndef CELLALG_SCALAR_HPP
#define CELLALG_SCALAR_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "cellalg/errors.hpp"

namespace cellalg {

bool is_prime(std::uint64_t n);

/// Tag for the coefficient field: the rationals (p == 0) or F_p.
struct FieldId {
    std::uint64_t p = 0;

    bool is_rational() const { return p == 0; }

    static FieldId rationals() { return FieldId{}; }

    /// Throws ValidationError unless p is prime (and fits the limb bound).
    static FieldId prime_field(std::uint64_t p);

    /// "Q" or "Fp:<p>".
    std::string str() const;
    static FieldId parse(const std::string& text);

    friend bool operator==(FieldId a, FieldId b) { return a.p == b.p; }
    friend bool operator!=(FieldId a, FieldId b) { return a.p != b.p; }
};

/// Exact field element: arbitrary-precision rational or residue mod p.
///
/// Rationals are kept in lowest terms with positive denominator, so
/// operator== is a canonical comparison. All arithmetic is exact; mixing
/// scalars from different fields throws DimensionMismatch.
class Scalar {
public:
    Scalar() : rep_(mpq_class(0)) {}

    static Scalar zero(FieldId f) { return of_int(0, f); }
    static Scalar one(FieldId f) { return of_int(1, f); }
    static Scalar of_int(long v, FieldId f);
    static Scalar rational(mpq_class q);
    static Scalar mod_p(std::uint64_t v, FieldId f);

    /// Accepts "a", "a/b" over Q and "k" or "k mod p" over F_p.
    static Scalar parse(const std::string& text, FieldId f);

    FieldId field() const;
    bool is_zero() const;
    bool is_one() const;

    /// Over Q: true iff the denominator is 1. Over F_p: always true.
    bool is_integer() const;

    /// Throws Error on zero.
    Scalar inverse() const;
    Scalar pow(long e) const;

    std::string str() const;

    /// The rational value; requires a rational scalar.
    const mpq_class& rat() const;
    /// The residue value; requires a prime-field scalar.
    std::uint64_t residue() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    struct Fp {
        std::uint64_t v;
        std::uint64_t p;
    };
    std::variant<mpq_class, Fp> rep_;

    explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
    explicit Scalar(Fp f) : rep_(f) {}

    static void require_same_field(const Scalar& a, const Scalar& b);
};

} // namespace cellalg

#endif
