#include "oml/scalar.hpp"

#include <cmath>
#include <sstream>

namespace oml {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::descriptor_mismatch: return "descriptor mismatch";
    case ErrorKind::not_square_free: return "not square-free";
    case ErrorKind::division_by_zero: return "division by zero";
    case ErrorKind::no_order: return "no order";
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::not_hermitian: return "not hermitian";
    case ErrorKind::not_positive_definite: return "not positive definite";
    case ErrorKind::zero_vector: return "zero vector";
    case ErrorKind::not_an_atom: return "not an atom";
    case ErrorKind::space_mismatch: return "space mismatch";
    case ErrorKind::malformed_table: return "malformed table";
    case ErrorKind::unknown_element: return "unknown element";
    case ErrorKind::cap_exceeded: return "cap exceeded";
    case ErrorKind::value_not_rational: return "value not rational";
    case ErrorKind::not_a_state: return "not a state";
    case ErrorKind::not_an_effect: return "not an effect";
    case ErrorKind::not_a_partition: return "not a partition";
    case ErrorKind::norms_unequal: return "norms unequal";
    case ErrorKind::not_orthogonal: return "not orthogonal";
    case ErrorKind::not_invertible: return "not invertible";
    case ErrorKind::identity_fails: return "identity fails";
    case ErrorKind::extension_inconsistent: return "extension inconsistent";
    case ErrorKind::hypotheses_unmet: return "hypotheses unmet";
    case ErrorKind::parse_error: return "parse error";
    case ErrorKind::bad_argument: return "bad argument";
    }
    return "error";
}

int sign_of(const Rational& q) {
    if (q == 0) return 0;
    return q > 0 ? 1 : -1;
}

Int isqrt_floor(const Int& n) {
    if (n < 0) fail(ErrorKind::bad_argument, "isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    const Int rn = isqrt_floor(num);
    if (rn * rn != num) return std::nullopt;
    const Int rd = isqrt_floor(den);
    if (rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

bool is_square_free(long long d) {
    if (d == 0) return false;
    unsigned long long m = d < 0 ? static_cast<unsigned long long>(-(d + 1)) + 1
                                 : static_cast<unsigned long long>(d);
    for (unsigned long long p = 2; p * p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    // Whatever remains has at most two prime factors; a repeated one
    // would make it a perfect square.
    Int rest = m;
    Int r = isqrt_floor(rest);
    return r * r != rest || rest == 1;
}

Field Field::quadratic(long long d) {
    if (d == 0 || d == 1)
        fail(ErrorKind::not_square_free, "rt*rt must not be 0 or 1");
    if (!is_square_free(d))
        fail(ErrorKind::not_square_free, "rt*rt = " + std::to_string(d) + " has a square factor");
    Field f;
    f.kind_ = FieldKind::quadratic;
    f.d_ = d;
    return f;
}

std::vector<FieldAutomorphism> Field::automorphisms() const {
    std::vector<FieldAutomorphism> out;
    out.push_back(FieldAutomorphism{*this, false});
    if (kind_ == FieldKind::quadratic) out.push_back(FieldAutomorphism{*this, true});
    return out;
}

std::string Field::name() const {
    if (kind_ == FieldKind::rationals) return "Q";
    return "Q(rt), rt2 = " + std::to_string(d_);
}

Scalar Field::zero() const { return Scalar(Rational(0), *this); }
Scalar Field::one() const { return Scalar(Rational(1), *this); }

Scalar Field::root() const {
    if (kind_ != FieldKind::quadratic)
        fail(ErrorKind::bad_argument, "Q has no adjoined root");
    return Scalar(Rational(0), Rational(1), *this);
}

Scalar Field::from_rational(const Rational& a) const { return Scalar(a, *this); }

Scalar Field::make(const Rational& a, const Rational& b) const { return Scalar(a, b, *this); }

Scalar::Scalar(Rational a, Rational b, Field f)
    : a_(std::move(a)), b_(std::move(b)), field_(f) {
    if (b_ != 0 && field_.is_rationals())
        fail(ErrorKind::descriptor_mismatch, "root part in a rational scalar");
}

const Rational& Scalar::as_rational() const {
    if (b_ != 0) fail(ErrorKind::value_not_rational, "scalar " + str() + " has a root part");
    return a_;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        fail(ErrorKind::descriptor_mismatch,
             "mixing " + field_.name() + " with " + o.field_.name());
}

Scalar Scalar::operator-() const { return Scalar(-a_, -b_, field_); }

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    return Scalar(a_ + o.a_, b_ + o.b_, field_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    return Scalar(a_ - o.a_, b_ - o.b_, field_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rationals()) return Scalar(a_ * o.a_, field_);
    const Rational d(field_.root_square());
    return Scalar(a_ * o.a_ + d * b_ * o.b_, a_ * o.b_ + b_ * o.a_, field_);
}

Scalar Scalar::inv() const {
    if (is_zero()) fail(ErrorKind::division_by_zero, "inverse of zero");
    if (field_.is_rationals()) return Scalar(1 / a_, field_);
    // (a + b rt)(a - b rt) = a^2 - d b^2, nonzero because d is square-free.
    const Rational d(field_.root_square());
    const Rational n = a_ * a_ - d * b_ * b_;
    return Scalar(a_ / n, -b_ / n, field_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::conj() const {
    if (field_.has_conjugation()) return Scalar(a_, -b_, field_);
    return *this;
}

Rational Scalar::norm() const {
    const Scalar n = conj() * *this;
    if (!n.is_rational()) {
        // Identity involution over a real quadratic field: x*x keeps its
        // root part; callers wanting a rational must pass rational x.
        fail(ErrorKind::value_not_rational, "norm of " + str() + " is not rational");
    }
    return n.as_rational();
}

int Scalar::sign() const {
    if (b_ == 0) return sign_of(a_);
    if (!field_.is_real())
        fail(ErrorKind::no_order, "no real embedding for " + field_.name());
    if (a_ == 0) return sign_of(b_);
    const int sa = sign_of(a_);
    const int sb = sign_of(b_);
    if (sa == sb) return sa;
    // Opposite signs: compare |a| against |b| rt, i.e. a^2 against d b^2.
    const Rational d(field_.root_square());
    const int cmp = sign_of(a_ * a_ - d * b_ * b_);
    return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

double Scalar::to_double() const {
    double x = a_.convert_to<double>();
    if (b_ != 0) {
        if (!field_.is_real())
            fail(ErrorKind::no_order, "no real embedding for " + field_.name());
        x += b_.convert_to<double>() * std::sqrt(static_cast<double>(field_.root_square()));
    }
    return x;
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string Scalar::str() const {
    if (b_ == 0) return to_string(a_);
    const Rational babs = b_ > 0 ? b_ : Rational(-b_);
    const std::string mag = babs == 1 ? "rt" : to_string(babs) + "*rt";
    if (a_ == 0) return b_ > 0 ? mag : "-" + mag;
    return to_string(a_) + (b_ > 0 ? " + " : " - ") + mag;
}

Scalar FieldAutomorphism::operator()(const Scalar& x) const {
    if (x.field() != field)
        fail(ErrorKind::descriptor_mismatch, "automorphism of " + field.name() +
                                                 " applied to " + x.field().name());
    if (!flips_root) return x;
    return Scalar(x.rational_part(), -x.root_part(), field);
}

} // namespace oml
