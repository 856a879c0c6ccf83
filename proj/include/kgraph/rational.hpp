#ifndef KGRAPH_RATIONAL_HPP
#define KGRAPH_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kgraph {

// Exact rational scalar. Every identity checked by the algebra layer has
// small integer structure constants, so 64-bit components with overflow
// detection are plenty; overflow throws instead of silently wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return Rational(-num_, den_); }

    Rational operator+(const Rational& o) const {
        return Rational(checked(mul(num_, o.den_) + mul(o.num_, den_)), checked(mul(den_, o.den_)));
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const {
        return Rational(checked(mul(num_, o.num_)), checked(mul(den_, o.den_)));
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return mul(num_, o.den_) < mul(o.num_, den_); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "p" or "p/q".
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(text));
            return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad rational literal '" + text + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("rational literal out of range '" + text + "'");
        }
    }

private:
    static __int128 mul(long long a, long long b) { return static_cast<__int128>(a) * b; }
    static long long checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
        return static_cast<long long>(v);
    }
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

}  // namespace kgraph

#endif
