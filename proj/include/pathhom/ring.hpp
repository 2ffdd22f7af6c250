#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "pathhom/errors.hpp"

namespace pathhom {

// Arbitrary-precision integer and rational scalars (exact arithmetic throughout).
using Int = mpz_class;
using Rat = mpq_class;

enum class RingKind { Integers, Rationals, PrimeField };

// Coefficient ring selector: Z, Q, or Z_p for a prime p.
struct RingSpec {
    RingKind kind = RingKind::Integers;
    std::uint32_t p = 0;  // modulus, meaningful only for PrimeField

    static RingSpec Z() { return {RingKind::Integers, 0}; }
    static RingSpec Q() { return {RingKind::Rationals, 0}; }
    static RingSpec Zp(std::uint32_t p);

    bool is_field() const { return kind != RingKind::Integers; }
    bool operator==(const RingSpec&) const = default;
    std::string to_string() const;
};

bool is_prime_u32(std::uint32_t n);

// Parses the command-line ring syntax: "Z" | "Q" | "Zp:<prime>".
RingSpec parse_ring(const std::string& text);

// Element of the prime field Z_p, stored as the canonical representative 0..p-1.
// A default-constructed value is the zero of a yet-unspecified modulus; it adopts
// the modulus of the first value it is combined with (this is what allows
// zero-initialized matrices to work without threading a context everywhere).
class Fp {
  public:
    Fp() = default;
    Fp(long long v, std::uint32_t p) : p_(p) {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        v_ = static_cast<std::uint64_t>(m);
    }

    std::uint64_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint32_t p = merge(a, b);
        if (p == 0) return Fp();
        std::uint64_t s = a.v_ + b.v_;
        if (s >= p) s -= p;
        return raw(s, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint32_t p = merge(a, b);
        if (p == 0) return Fp();
        std::uint64_t s = a.v_ + p - b.v_;
        if (s >= p) s -= p;
        return raw(s, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint32_t p = merge(a, b);
        if (p == 0) return Fp();
        return raw((a.v_ * b.v_) % p, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return p_ == 0 ? Fp() : raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    Fp inverse() const;

    friend bool operator==(const Fp& a, const Fp& b) {
        merge(a, b);  // modulus consistency check
        return a.v_ == b.v_;
    }

  private:
    static Fp raw(std::uint64_t v, std::uint32_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    // Reconciles the moduli of two operands; 0 means both were unspecified zeros.
    static std::uint32_t merge(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw InternalInconsistency("mixed prime-field moduli in one expression");
        return a.p_ != 0 ? a.p_ : b.p_;
    }

    std::uint64_t v_ = 0;
    std::uint32_t p_ = 0;
};

// --- Uniform scalar helpers used by the templated linear algebra -------------

inline bool scalar_is_zero(const Int& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const Fp& x) { return x.is_zero(); }

// The image of an arbitrary-precision integer in each coefficient ring.
template <class S>
S scalar_from_int(const Int& v, const RingSpec& ring);

template <>
inline Int scalar_from_int<Int>(const Int& v, const RingSpec&) {
    return v;
}
template <>
inline Rat scalar_from_int<Rat>(const Int& v, const RingSpec&) {
    return Rat(v);
}
template <>
inline Fp scalar_from_int<Fp>(const Int& v, const RingSpec& ring) {
    Int m = v % ring.p;
    if (m < 0) m += ring.p;
    return Fp(m.get_si(), ring.p);
}

template <class S>
S scalar_one(const RingSpec& ring) {
    return scalar_from_int<S>(Int(1), ring);
}

}  // namespace pathhom
