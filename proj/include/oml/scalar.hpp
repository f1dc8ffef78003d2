#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalars: arbitrary-precision rationals and quadratic
 *        extensions Q(rt) with rt*rt = d for a square-free integer d.
 *
 * Elements are kept in the normal form a + b*rt with rational a, b.
 * The involution used by Hermitian forms is the identity when the
 * extension embeds in the reals (d > 0) and root conjugation when it
 * does not (d < 0); d = -1 gives the Gaussian rationals.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oml/error.hpp"

namespace oml {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// -1, 0, or +1.
int sign_of(const Rational& q);

/// Floor of the integer square root; exact for perfect squares.
Int isqrt_floor(const Int& n);

/// The exact rational square root of q, if one exists.
/// Decided by integer square roots of the numerator and denominator in
/// lowest terms; no factorization involved.
std::optional<Rational> rational_sqrt(const Rational& q);

/// True when no prime square divides d.
bool is_square_free(long long d);

enum class FieldKind : unsigned char { rationals, quadratic };

class Scalar;
struct FieldAutomorphism;

/// Ground field of a Hermitian space: Q itself or a quadratic extension.
class Field {
public:
    Field() : kind_(FieldKind::rationals), d_(0) {}

    static Field rationals() { return Field(); }

    /// Quadratic extension Q(rt), rt*rt = d.  Requires d square-free and
    /// d not 0 or 1, so that 1, rt is an honest basis.
    static Field quadratic(long long d);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::rationals; }

    /// The integer d with rt*rt = d; only meaningful for quadratic fields.
    long long root_square() const { return d_; }

    /// True when the involution is root conjugation rather than the identity.
    bool has_conjugation() const { return kind_ == FieldKind::quadratic && d_ < 0; }

    /// True when the field order-embeds in the reals (rt taken positive).
    bool is_real() const { return kind_ == FieldKind::rationals || d_ > 0; }

    /// The field automorphism group: {id} over Q, {id, rt -> -rt} otherwise.
    std::vector<FieldAutomorphism> automorphisms() const;

    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar root() const; ///< rt itself; error for Q.
    Scalar from_rational(const Rational& a) const;
    Scalar make(const Rational& a, const Rational& b) const;

    friend bool operator==(const Field& x, const Field& y) {
        return x.kind_ == y.kind_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Field& x, const Field& y) { return !(x == y); }

private:
    FieldKind kind_;
    long long d_;
};

/// Immutable field element in the normal form a + b*rt.
class Scalar {
public:
    Scalar() : a_(0), b_(0), field_(Field::rationals()) {}

    Scalar(Rational a, Field f) : a_(std::move(a)), b_(0), field_(f) {}

    Scalar(Rational a, Rational b, Field f);

    const Rational& rational_part() const { return a_; }
    const Rational& root_part() const { return b_; }
    const Field& field() const { return field_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// The rational value; error when a root part is present.
    const Rational& as_rational() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; division_by_zero on 0.
    Scalar inv() const;

    /// The involution accompanying the Hermitian form.
    Scalar conj() const;

    /// conj(x) * x, always a rational (and nonnegative when the involution
    /// is nontrivial or x is rational).
    Rational norm() const;

    /// Sign in the real embedding (rt positive); no_order when the field
    /// does not embed in the reals and a root part is present.
    int sign() const;
    bool is_positive() const { return sign() > 0; }
    bool is_negative() const { return sign() < 0; }

    /// Real-embedding value, for quarantined approximate work only.
    double to_double() const;

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    std::string str() const;

private:
    void require_same_field(const Scalar& o) const;

    Rational a_, b_;
    Field field_;
};

/// A field automorphism, represented by whether it flips the root sign.
struct FieldAutomorphism {
    Field field;
    bool flips_root = false;

    Scalar operator()(const Scalar& x) const;
    std::string name() const { return flips_root ? "rt->-rt" : "id"; }
};

std::string to_string(const Rational& q);

} // namespace oml
