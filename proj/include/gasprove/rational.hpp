#ifndef GASPROVE_RATIONAL_HPP
#define GASPROVE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace gasprove {

/// Exact arbitrary-precision rational number.
///
/// Always kept in lowest terms with a positive denominator; zero is 0/1.
/// There is deliberately no conversion from floating point.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(unsigned v) : v_(v) {}
    Rational(unsigned long v) : v_(v) {}
    Rational(const mpz_class& v) : v_(v) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Rejects decimal points and exponents.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(v_)); }
    Rational inverse() const;
    Rational pow(unsigned e) const;
    mpz_class floor() const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

/// Binomial coefficient as an exact integer.
mpz_class binomial(unsigned n, unsigned k);

} // namespace gasprove

namespace Eigen {

template <>
struct NumTraits<gasprove::Rational> : GenericNumTraits<gasprove::Rational> {
    using Real = gasprove::Rational;
    using NonInteger = gasprove::Rational;
    using Literal = gasprove::Rational;
    using Nested = gasprove::Rational;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 64
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

#endif // GASPROVE_RATIONAL_HPP
