#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace scop {

/// Exact rational scalar. All homological certification runs use this type;
/// no floating point ever enters a rank or kernel computation.
using Rational = boost::multiprecision::mpq_rational;

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Residue-class scalar mod m. Addition/multiplication are valid for any
/// modulus >= 2; inversion (used by Gaussian elimination) requires the
/// element to be a unit and is guaranteed only for prime m.
class Zp {
  public:
    Zp() : v_(0) {}
    Zp(std::int64_t x) {
        std::int64_t r = x % static_cast<std::int64_t>(modulus_);
        if (r < 0) r += static_cast<std::int64_t>(modulus_);
        v_ = static_cast<std::uint64_t>(r);
    }

    static void set_modulus(std::uint64_t m) {
        if (m < 2) throw std::invalid_argument("Zp: modulus must be >= 2");
        modulus_ = m;
    }
    static std::uint64_t modulus() { return modulus_; }

    std::uint64_t value() const { return v_; }

    Zp operator+(const Zp& o) const { return from_raw((v_ + o.v_) % modulus_); }
    Zp operator-(const Zp& o) const { return from_raw((v_ + modulus_ - o.v_) % modulus_); }
    Zp operator-() const { return from_raw(v_ == 0 ? 0 : modulus_ - v_); }
    Zp operator*(const Zp& o) const {
        return from_raw(static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(v_) * o.v_) % modulus_));
    }
    Zp operator/(const Zp& o) const { return *this * o.inverse(); }
    Zp& operator+=(const Zp& o) { return *this = *this + o; }
    Zp& operator-=(const Zp& o) { return *this = *this - o; }
    Zp& operator*=(const Zp& o) { return *this = *this * o; }
    Zp& operator/=(const Zp& o) { return *this = *this / o; }
    bool operator==(const Zp& o) const { return v_ == o.v_; }
    bool operator!=(const Zp& o) const { return v_ != o.v_; }

    Zp inverse() const {
        // extended Euclid; throws if not a unit (possible for composite moduli)
        std::int64_t a = static_cast<std::int64_t>(v_), m = static_cast<std::int64_t>(modulus_);
        std::int64_t x0 = 1, x1 = 0, r0 = a, r1 = m;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t t = r0 - q * r1; r0 = r1; r1 = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (r0 != 1 && r0 != -1)
            throw std::domain_error("Zp: element not invertible mod " + std::to_string(modulus_));
        if (r0 == -1) x0 = -x0;
        return Zp(x0);
    }

  private:
    static Zp from_raw(std::uint64_t r) { Zp z; z.v_ = r; return z; }
    std::uint64_t v_;
    inline static std::uint64_t modulus_ = 32749;  // largest prime below 2^15
};

template <class F> struct field_traits;

template <> struct field_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static std::string name() { return "rational"; }
};

template <> struct field_traits<Zp> {
    static Zp zero() { return Zp(0); }
    static Zp one() { return Zp(1); }
    static bool is_zero(const Zp& x) { return x.value() == 0; }
    static std::string name() { return "mod-" + std::to_string(Zp::modulus()); }
};

}  // namespace scop
