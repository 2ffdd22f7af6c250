#include "pathhom/fg_group.hpp"

#include <algorithm>

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {
Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
}  // namespace

std::vector<Int> normalize_invariant_factors(std::vector<Int> factors) {
    for (Int& f : factors) f = abs(f);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                if (factors[j] % factors[i] == 0) continue;
                Int g = int_gcd(factors[i], factors[j]);
                Int l = factors[i] / g * factors[j];
                factors[i] = g;
                factors[j] = l;
                changed = true;
            }
    }
    std::vector<Int> out;
    for (Int& f : factors)
        if (f > 1) out.push_back(std::move(f));
    std::sort(out.begin(), out.end());
    return out;
}

FgAbelianGroup FgAbelianGroup::make(long rank, std::vector<Int> factors) {
    if (rank < 0) throw InternalInconsistency("FgAbelianGroup: negative rank");
    for (const Int& f : factors)
        if (sgn(f) == 0)
            throw InternalInconsistency("FgAbelianGroup: zero cyclic order (use rank)");
    return FgAbelianGroup{rank, normalize_invariant_factors(std::move(factors))};
}

FgAbelianGroup fg_direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    return FgAbelianGroup::make(a.rank + b.rank, std::move(t));
}

FgAbelianGroup fg_tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> t;
    // Z^r (x) Z/e = (Z/e)^r and Z/d (x) Z/e = Z/gcd(d, e).
    for (const Int& e : b.torsion)
        for (long k = 0; k < a.rank; ++k) t.push_back(e);
    for (const Int& d : a.torsion)
        for (long k = 0; k < b.rank; ++k) t.push_back(d);
    for (const Int& d : a.torsion)
        for (const Int& e : b.torsion) t.push_back(int_gcd(d, e));
    return FgAbelianGroup::make(a.rank * b.rank, std::move(t));
}

FgAbelianGroup fg_tor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> t;
    for (const Int& d : a.torsion)
        for (const Int& e : b.torsion) t.push_back(int_gcd(d, e));
    return FgAbelianGroup::make(0, std::move(t));
}

FgAbelianGroup fg_hom_to_Z(const FgAbelianGroup& a) { return FgAbelianGroup{a.rank, {}}; }

FgAbelianGroup fg_ext_to_Z(const FgAbelianGroup& a) { return FgAbelianGroup{0, a.torsion}; }

std::string fg_to_string(const FgAbelianGroup& g, const RingSpec& ring) {
    if (g.is_trivial()) return "0";
    const std::string base = ring.kind == RingKind::PrimeField ? "Z_" + std::to_string(ring.p)
                                                               : ring.to_string();
    std::string out;
    if (g.rank > 0) {
        out = base;
        if (g.rank > 1) out += "^" + std::to_string(g.rank);
    }
    for (const Int& d : g.torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.get_str();
    }
    return out;
}

}  // namespace pathhom
