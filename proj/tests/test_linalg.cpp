#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "pathhom/fg_group.hpp"
#include "pathhom/linalg.hpp"
#include "pathhom/matrix.hpp"
#include "pathhom/ring.hpp"

using namespace pathhom;

namespace {

Matrix<Int> make(long r, long c, std::vector<long> vals) {
    Matrix<Int> m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m(i, j) = Int(vals[static_cast<std::size_t>(i * c + j)]);
    return m;
}

Matrix<Int> random_int_matrix(std::mt19937_64& rng, long r, long c, long lo, long hi) {
    Matrix<Int> m(r, c);
    const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m(i, j) = Int(static_cast<long>(rng() % span) + lo);
    return m;
}

// Determinant by Laplace expansion; only used on tiny matrices in tests.
Int det_laplace(const Matrix<Int>& m) {
    const long n = m.rows();
    if (n == 0) return Int(1);
    if (n == 1) return m(0, 0);
    Int acc(0);
    for (long j = 0; j < n; ++j) {
        if (sgn(m(0, j)) == 0) continue;
        Matrix<Int> sub(n - 1, n - 1);
        for (long i = 1; i < n; ++i) {
            long cc = 0;
            for (long k = 0; k < n; ++k) {
                if (k == j) continue;
                sub(i - 1, cc++) = m(i, k);
            }
        }
        Int term = m(0, j) * det_laplace(sub);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Int gcd_of_k_minors(const Matrix<Int>& m, long k) {
    std::vector<long> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
    Int g(0);
    // Enumerate k-subsets of rows and columns.
    std::vector<long> rows, cols;
    std::vector<std::vector<long>> rsets, csets;
    std::function<void(long, long, std::vector<long>&, long, std::vector<std::vector<long>>&)> gen =
        [&](long start, long need, std::vector<long>& cur, long total,
            std::vector<std::vector<long>>& out) {
            if (need == 0) {
                out.push_back(cur);
                return;
            }
            for (long v = start; v <= total - need; ++v) {
                cur.push_back(v);
                gen(v + 1, need - 1, cur, total, out);
                cur.pop_back();
            }
        };
    std::vector<long> cur;
    gen(0, k, cur, m.rows(), rsets);
    gen(0, k, cur, m.cols(), csets);
    for (const auto& rs : rsets)
        for (const auto& cs : csets) {
            Matrix<Int> sub(k, k);
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < k; ++j)
                    sub(i, j) = m(rs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(j)]);
            Int d = det_laplace(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
    return abs(g);
}

}  // namespace

TEST_CASE("ring parsing and Fp arithmetic") {
    CHECK(parse_ring("Z").kind == RingKind::Integers);
    CHECK(parse_ring("Q").kind == RingKind::Rationals);
    RingSpec z7 = parse_ring("Zp:7");
    CHECK(z7.kind == RingKind::PrimeField);
    CHECK(z7.p == 7);
    CHECK_THROWS_AS(parse_ring("Zp:6"), UnsupportedRing);
    CHECK_THROWS_AS(parse_ring("Zp:"), UnsupportedRing);
    CHECK_THROWS_AS(parse_ring("GF2"), UnsupportedRing);
    CHECK_THROWS_AS(parse_ring("Zp:4294967296"), UnsupportedRing);

    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(3));
    CHECK_FALSE(is_prime_u32(1));
    CHECK_FALSE(is_prime_u32(25));
    CHECK(is_prime_u32(31));
    CHECK(is_prime_u32(2147483647u));
    CHECK(is_prime_u32(4294967291u));
    CHECK_FALSE(is_prime_u32(4294967295u));

    for (uint64_t v = 1; v < 7; ++v) {
        Fp x(v, 7);
        CHECK(x * x.inverse() == Fp(1, 7));
    }
    Fp a(5, 7), b(4, 7);
    CHECK(a + b == Fp(2, 7));
    CHECK(a * b == Fp(6, 7));
    CHECK(a - b == Fp(1, 7));
    CHECK(-a == Fp(2, 7));
    CHECK(a / b == Fp(3, 7));  // 5 * 4^{-1} = 5 * 2 = 10 = 3 (mod 7)
    CHECK(scalar_is_zero(Fp()));
    CHECK(Fp() + a == a);  // unspecified-modulus zero adopts the partner's modulus

    RingSpec q = RingSpec::Q();
    CHECK(scalar_from_int<Rat>(Int(-3), q) == Rat(-3));
    CHECK(scalar_from_int<Fp>(Int(-3), z7) == Fp(4, 7));
    CHECK(scalar_from_int<Int>(Int(9), RingSpec::Z()) == Int(9));
}

TEST_CASE("column hermite form: frozen small cases") {
    SUBCASE("kernel of [2 4]") {
        Matrix<Int> a = make(1, 2, {2, 4});
        Matrix<Int> k = kernel_basis_int(a);
        REQUIRE(k.rows() == 2);
        REQUIRE(k.cols() == 1);
        CHECK(k(0, 0) == Int(-2));
        CHECK(k(1, 0) == Int(1));
    }
    SUBCASE("kernel of [1 -1]") {
        Matrix<Int> a = make(1, 2, {1, -1});
        Matrix<Int> k = kernel_basis_int(a);
        REQUIRE(k.cols() == 1);
        CHECK(k(0, 0) == Int(1));
        CHECK(k(1, 0) == Int(1));
    }
    SUBCASE("zero matrix kernel is everything") {
        Matrix<Int> a(2, 3);
        Matrix<Int> k = kernel_basis_int(a);
        REQUIRE(k.cols() == 3);
        CHECK(matmul(a, k).is_zero());
        CHECK(rank_int(k) == 3);
    }
    SUBCASE("empty shapes") {
        Matrix<Int> a(0, 3);
        Matrix<Int> k = kernel_basis_int(a);
        CHECK(k.cols() == 3);
        Matrix<Int> b(3, 0);
        CHECK(kernel_basis_int(b).cols() == 0);
        CHECK(rank_int(b) == 0);
    }
}

TEST_CASE("column hermite form: structural properties on random matrices") {
    std::mt19937_64 rng(20260819u);
    for (int trial = 0; trial < 60; ++trial) {
        long r = 1 + static_cast<long>(rng() % 6);
        long c = 1 + static_cast<long>(rng() % 6);
        Matrix<Int> a = random_int_matrix(rng, r, c, -9, 9);
        ColumnEchelon e = column_hermite(a);

        CHECK(matmul(a, e.u) == e.h);
        if (e.u.rows() <= 6) CHECK(abs(det_laplace(e.u)) == Int(1));

        // Echelon shape: strictly increasing pivot rows, positive pivots,
        // zeros right of each pivot in its row, left entries in [0, pivot).
        REQUIRE(static_cast<long>(e.pivot_rows.size()) == e.rank);
        for (long i = 0; i < e.rank; ++i) {
            long pr = e.pivot_rows[i];
            if (i > 0) CHECK(pr > e.pivot_rows[i - 1]);
            CHECK(e.h(pr, i) > 0);
            for (long j = i + 1; j < e.h.cols(); ++j) CHECK(e.h(pr, j) == 0);
            for (long j = 0; j < i; ++j) {
                CHECK(e.h(pr, j) >= 0);
                CHECK(e.h(pr, j) < e.h(pr, i));
            }
        }
        for (long j = e.rank; j < e.h.cols(); ++j)
            for (long i = 0; i < e.h.rows(); ++i) CHECK(e.h(i, j) == 0);

        // Determinism: same input, same output.
        ColumnEchelon e2 = column_hermite(a);
        CHECK(e2.h == e.h);
        CHECK(e2.u == e.u);

        // Kernel: annihilated, right count, and saturated (all SNF factors 1).
        Matrix<Int> k = kernel_basis_int(a);
        CHECK(matmul(a, k).is_zero());
        CHECK(k.cols() + e.rank == a.cols());
        std::vector<Int> kf = smith_invariant_factors(k);
        CHECK(static_cast<long>(kf.size()) == k.cols());
        for (const Int& f : kf) CHECK(f == 1);
    }
}

TEST_CASE("smith normal form") {
    SUBCASE("frozen 2x2") {
        std::vector<Int> d = smith_invariant_factors(make(2, 2, {2, 4, 6, 8}));
        REQUIRE(d.size() == 2);
        CHECK(d[0] == 2);
        CHECK(d[1] == 4);
    }
    SUBCASE("diag(4, 6) normalizes to (2, 12)") {
        std::vector<Int> d = smith_invariant_factors(make(2, 2, {4, 0, 0, 6}));
        REQUIRE(d.size() == 2);
        CHECK(d[0] == 2);
        CHECK(d[1] == 12);
    }
    SUBCASE("zero and identity") {
        CHECK(smith_invariant_factors(Matrix<Int>(3, 4)).empty());
        std::vector<Int> d = smith_invariant_factors(Matrix<Int>::identity(3, Int(1)));
        REQUIRE(d.size() == 3);
        for (const Int& f : d) CHECK(f == 1);
    }
    SUBCASE("matches minor-gcd definition on random matrices") {
        std::mt19937_64 rng(7u);
        for (int trial = 0; trial < 40; ++trial) {
            long r = 1 + static_cast<long>(rng() % 4);
            long c = 1 + static_cast<long>(rng() % 4);
            Matrix<Int> a = random_int_matrix(rng, r, c, -5, 5);
            std::vector<Int> d = smith_invariant_factors(a);
            for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
            Int prev(1);
            for (std::size_t i = 0; i < d.size(); ++i) {
                Int dk = gcd_of_k_minors(a, static_cast<long>(i + 1));
                REQUIRE(sgn(dk) != 0);
                CHECK(d[i] == dk / prev);
                prev = dk;
            }
            if (d.size() < static_cast<std::size_t>(std::min(r, c)))
                CHECK(sgn(gcd_of_k_minors(a, static_cast<long>(d.size() + 1))) == 0);
        }
    }
    SUBCASE("transpose invariance") {
        std::mt19937_64 rng(11u);
        for (int trial = 0; trial < 30; ++trial) {
            Matrix<Int> a = random_int_matrix(rng, 1 + static_cast<long>(rng() % 5),
                                              1 + static_cast<long>(rng() % 5), -7, 7);
            CHECK(smith_invariant_factors(a) == smith_invariant_factors(a.transposed()));
        }
    }
}

TEST_CASE("solve_in_span over Z") {
    Matrix<Int> basis = make(2, 2, {2, 0, 0, 3});
    std::vector<Int> x = solve_in_span_int(basis, {Int(4), Int(3)});
    REQUIRE(x.size() == 2);
    CHECK(x[0] == 2);
    CHECK(x[1] == 1);
    CHECK_THROWS_AS(solve_in_span_int(basis, {Int(1), Int(0)}), NotInSpan);
    CHECK_THROWS_AS(solve_in_span_int(basis, {Int(2), Int(2)}), NotInSpan);

    // Empty basis: only the zero vector is in the span.
    Matrix<Int> empty(2, 0);
    CHECK(solve_in_span_int(empty, {Int(0), Int(0)}).empty());
    CHECK_THROWS_AS(solve_in_span_int(empty, {Int(0), Int(1)}), NotInSpan);

    // Random round-trips: basis * x has a recoverable coefficient vector.
    std::mt19937_64 rng(3u);
    for (int trial = 0; trial < 40; ++trial) {
        long r = 1 + static_cast<long>(rng() % 5);
        long c = 1 + static_cast<long>(rng() % 5);
        Matrix<Int> b = random_int_matrix(rng, r, c, -6, 6);
        std::vector<Int> coeff(static_cast<std::size_t>(c));
        for (auto& v : coeff) v = Int(static_cast<long>(rng() % 9) - 4);
        std::vector<Int> target = matvec(b, coeff);
        std::vector<Int> sol = solve_in_span_int(b, target);
        CHECK(matvec(b, sol) == target);
    }
}

TEST_CASE("field linear algebra mirrors the integer contracts") {
    RingSpec q = RingSpec::Q();
    RingSpec z5 = RingSpec::Zp(5);
    std::mt19937_64 rng(99u);
    for (int trial = 0; trial < 30; ++trial) {
        long r = 1 + static_cast<long>(rng() % 5);
        long c = 1 + static_cast<long>(rng() % 5);
        Matrix<Int> a = random_int_matrix(rng, r, c, -6, 6);

        Matrix<Rat> aq = matrix_from_int<Rat>(a, q);
        Matrix<Fp> a5 = matrix_from_int<Fp>(a, z5);

        // Over Q the rank equals the integer rank.
        CHECK(rank_field(aq, Rat(1)) == rank_int(a));
        // Over Z_5 the rank drops by the number of invariant factors divisible by 5.
        long drop = 0;
        for (const Int& f : smith_invariant_factors(a))
            if (f % 5 == 0) ++drop;
        CHECK(rank_field(a5, Fp(1, 5)) == rank_int(a) - drop);

        Matrix<Rat> kq = kernel_basis_field(aq, Rat(1));
        CHECK(matmul(aq, kq).is_zero());
        CHECK(kq.cols() == c - rank_int(a));
        Matrix<Fp> k5 = kernel_basis_field(a5, Fp(1, 5));
        CHECK(matmul(a5, k5).is_zero());

        // solve_in_span round-trip over both fields.
        std::vector<Rat> cq(static_cast<std::size_t>(c));
        for (auto& v : cq) v = Rat(static_cast<long>(rng() % 7) - 3);
        std::vector<Rat> tq = matvec(aq, cq);
        CHECK(matvec(aq, solve_in_span_field(aq, tq, Rat(1))) == tq);

        std::vector<Fp> c5(static_cast<std::size_t>(c));
        for (auto& v : c5) v = Fp(rng() % 5, 5);
        std::vector<Fp> t5 = matvec(a5, c5);
        CHECK(matvec(a5, solve_in_span_field(a5, t5, Fp(1, 5))) == t5);
    }

    // NotInSpan over a field.
    Matrix<Rat> b(2, 1);
    b(0, 0) = Rat(1);
    CHECK_THROWS_AS(solve_in_span_field(b, {Rat(0), Rat(1)}, Rat(1)), NotInSpan);

    // LinAlgOps dispatch compiles and agrees for all three scalar types.
    Matrix<Int> a = make(2, 3, {1, 2, 3, 2, 4, 6});
    CHECK(LinAlgOps<Int>::rank(a, RingSpec::Z()) == 1);
    CHECK(LinAlgOps<Rat>::rank(matrix_from_int<Rat>(a, q), q) == 1);
    CHECK(LinAlgOps<Fp>::rank(matrix_from_int<Fp>(a, z5), z5) == 1);
    CHECK(LinAlgOps<Int>::kernel_basis(a, RingSpec::Z()).cols() == 2);
}

TEST_CASE("sparse echelon rank agrees with dense rank") {
    RingSpec z5 = RingSpec::Zp(5);
    RingSpec q = RingSpec::Q();
    std::mt19937_64 rng(42u);
    for (int trial = 0; trial < 30; ++trial) {
        long r = 1 + static_cast<long>(rng() % 8);
        long c = 1 + static_cast<long>(rng() % 8);
        Matrix<Int> a = random_int_matrix(rng, r, c, -3, 3);

        std::vector<SparseVec<Fp>> rows5;
        std::vector<SparseVec<Rat>> rowsq;
        for (long i = 0; i < r; ++i) {
            SparseVec<Fp> v5;
            SparseVec<Rat> vq;
            for (long j = 0; j < c; ++j) {
                if (sgn(a(i, j)) == 0) continue;
                Fp f = scalar_from_int<Fp>(a(i, j), z5);
                if (!scalar_is_zero(f)) v5.emplace_back(j, f);
                vq.emplace_back(j, scalar_from_int<Rat>(a(i, j), q));
            }
            rows5.push_back(v5);
            rowsq.push_back(vq);
        }
        CHECK(sparse_rank(rows5) == rank_field(matrix_from_int<Fp>(a, z5), Fp(1, 5)));
        CHECK(sparse_rank(rowsq) == rank_int(a));
    }
}

TEST_CASE("fg abelian groups") {
    RingSpec z = RingSpec::Z();
    FgAbelianGroup zero;
    CHECK(zero.is_trivial());
    CHECK(fg_to_string(zero, z) == "0");

    FgAbelianGroup g = FgAbelianGroup::make(2, {Int(6), Int(4)});
    CHECK(g.rank == 2);
    REQUIRE(g.torsion.size() == 2);
    CHECK(g.torsion[0] == 2);
    CHECK(g.torsion[1] == 12);
    CHECK(fg_to_string(g, z) == "Z^2 + Z/2 + Z/12");

    CHECK(normalize_invariant_factors({Int(1), Int(1)}).empty());
    CHECK(fg_to_string(FgAbelianGroup{1, {}}, z) == "Z");
    CHECK(fg_to_string(FgAbelianGroup{3, {}}, RingSpec::Q()) == "Q^3");
    CHECK(fg_to_string(FgAbelianGroup{1, {}}, RingSpec::Zp(5)) == "Z_5");

    FgAbelianGroup a = FgAbelianGroup::make(1, {Int(2)});   // Z + Z/2
    FgAbelianGroup b = FgAbelianGroup::make(1, {Int(4)});   // Z + Z/4
    FgAbelianGroup t = fg_tensor(a, b);
    // (Z + Z/2) (x) (Z + Z/4) = Z + Z/4 + Z/2 + Z/2 = Z + Z/2 + Z/2 + Z/4... then chain-normalized
    CHECK(t.rank == 1);
    CHECK(t.torsion == normalize_invariant_factors({Int(4), Int(2), Int(2)}));

    FgAbelianGroup tor = fg_tor(a, b);
    CHECK(tor.rank == 0);
    REQUIRE(tor.torsion.size() == 1);
    CHECK(tor.torsion[0] == 2);

    CHECK(fg_hom_to_Z(g) == FgAbelianGroup{2, {}});
    CHECK(fg_ext_to_Z(g).rank == 0);
    CHECK(fg_ext_to_Z(g).torsion == g.torsion);

    FgAbelianGroup s = fg_direct_sum(a, b);
    CHECK(s.rank == 2);
    CHECK(s.torsion == normalize_invariant_factors({Int(2), Int(4)}));

    // Tensor with the trivial group annihilates, Tor with free vanishes.
    CHECK(fg_tensor(g, zero).is_trivial());
    CHECK(fg_tor(g, FgAbelianGroup{5, {}}).is_trivial());
}
