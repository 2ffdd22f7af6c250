#include "pathhom/ring.hpp"

#include <stdexcept>

#include "pathhom/errors.hpp"

namespace pathhom {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

RingSpec RingSpec::Zp(uint32_t prime) {
    if (!is_prime_u32(prime))
        throw UnsupportedRing("Zp modulus must be a prime, got " + std::to_string(prime));
    RingSpec r;
    r.kind = RingKind::PrimeField;
    r.p = prime;
    return r;
}

std::string RingSpec::to_string() const {
    switch (kind) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::PrimeField: return "Zp:" + std::to_string(p);
    }
    throw InternalInconsistency("RingSpec::to_string: bad kind");
}

RingSpec parse_ring(const std::string& s) {
    if (s == "Z") return RingSpec::Z();
    if (s == "Q") return RingSpec::Q();
    if (s.rfind("Zp:", 0) == 0) {
        const std::string num = s.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw UnsupportedRing("bad ring '" + s + "': expected Zp:<prime>");
        unsigned long v = 0;
        try {
            v = std::stoul(num);
        } catch (const std::exception&) {
            throw UnsupportedRing("bad ring '" + s + "': modulus out of range");
        }
        if (v < 2 || v > 0xffffffffUL)
            throw UnsupportedRing("bad ring '" + s + "': modulus out of range");
        return RingSpec::Zp(static_cast<uint32_t>(v));
    }
    throw UnsupportedRing("unknown ring '" + s + "' (expected Z, Q, or Zp:<prime>)");
}

Fp Fp::inverse() const {
    if (p_ == 0 || v_ == 0)
        throw InternalInconsistency("Fp::inverse of zero");
    // Extended Euclid on (v_, p_); the modulus is prime so gcd is 1.
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p_), new_r = static_cast<int64_t>(v_);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw InternalInconsistency("Fp::inverse: element not invertible");
    if (t < 0) t += static_cast<int64_t>(p_);
    return Fp(static_cast<uint64_t>(t), p_);
}

}  // namespace pathhom
