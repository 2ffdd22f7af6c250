#pragma once

#include <string>
#include <vector>

#include "pathhom/ring.hpp"

namespace pathhom {

// A finitely generated module over the coefficient ring, in normal form.
// Over Z: Z^rank + sum of Z/d_i with 2 <= d_1 | d_2 | ... (invariant factors).
// Over a field the torsion list is empty and rank is the dimension.
struct FgAbelianGroup {
    long rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const FgAbelianGroup&) const = default;

    // Normalizing factory: drops unit factors and enforces the divisibility
    // chain (any list of cyclic orders is accepted).
    static FgAbelianGroup make(long rank, std::vector<Int> factors);
};

// Drop factors <= 1 and rewrite the rest as a divisibility chain using
// pairwise (a, b) -> (gcd, lcm), which preserves the isomorphism class.
std::vector<Int> normalize_invariant_factors(std::vector<Int> factors);

FgAbelianGroup fg_direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup fg_tensor(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup fg_tor(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup fg_hom_to_Z(const FgAbelianGroup& a);
FgAbelianGroup fg_ext_to_Z(const FgAbelianGroup& a);

// Render with ring-appropriate symbols: "Z^2 + Z/2 + Z/6", "Q^3", "Zp:5^2",
// and "0" when trivial.
std::string fg_to_string(const FgAbelianGroup& g, const RingSpec& ring);

}  // namespace pathhom
