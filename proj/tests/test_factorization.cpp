#include <doctest.h>

#include <algorithm>

#include "fqt/factorization.hpp"
#include "oracles.hpp"

using namespace fqt;

namespace {

Polynomial P(const FieldPtr& k, std::vector<Code> c) { return {k, std::move(c)}; }

std::vector<std::pair<Polynomial, unsigned>> as_pairs(const Factorization& f)
{
    std::vector<std::pair<Polynomial, unsigned>> out;
    for (const auto& x : f.factors) out.emplace_back(x.poly, x.multiplicity);
    return out;
}

// Same factors regardless of the order within a degree.
std::vector<std::pair<Polynomial, unsigned>> sorted(std::vector<std::pair<Polynomial, unsigned>> v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        return a.first.coeffs() < b.first.coeffs();
    });
    return v;
}

}  // namespace

TEST_CASE("squarefree decomposition")
{
    const auto f3 = Field::make(3);
    // (t+1)^2 (t^3 + t^2 + 2t + 1) = t^5 + 2t^3 + t + 1
    const Polynomial cubic = P(f3, {1, 2, 1, 1});
    const Polynomial f = P(f3, {1, 1}) * P(f3, {1, 1}) * cubic;
    REQUIRE(f == P(f3, {1, 1, 0, 2, 0, 1}));
    const auto sqf = squarefree_decomposition(f);
    REQUIRE(sqf.size() == 2);
    CHECK(sqf[0].first == cubic);
    CHECK(sqf[0].second == 1);
    CHECK(sqf[1].first == P(f3, {1, 1}));
    CHECK(sqf[1].second == 2);

    const auto t3 = squarefree_decomposition(Polynomial::monomial(f3, 1, 3));
    REQUIRE(t3.size() == 1);
    CHECK(t3[0].first == Polynomial::t(f3));
    CHECK(t3[0].second == 3);

    const Polynomial sf = P(f3, {2, 0, 2});  // 2(t^2 + 1)
    const auto one = squarefree_decomposition(sf);
    REQUIRE(one.size() == 1);
    CHECK(one[0].first == sf.monic());
    CHECK_THROWS_AS(squarefree_decomposition(Polynomial::zero(f3)), PolynomialError);
}

TEST_CASE("squarefree decomposition reconstructs with mixed p-power multiplicities")
{
    // (t+1)^4 (t^2+1)^3 t^6 over F_3: multiplicity 3 and 6 go through p-th roots.
    const auto f3 = Field::make(3);
    Polynomial f = Polynomial::constant(f3, 2);
    for (int i = 0; i < 4; ++i) f = f * P(f3, {1, 1});
    for (int i = 0; i < 3; ++i) f = f * P(f3, {1, 0, 1});
    for (int i = 0; i < 6; ++i) f = f * Polynomial::t(f3);
    Polynomial rebuilt = Polynomial::constant(f3, f.leading());
    unsigned last = 0;
    for (const auto& [part, m] : squarefree_decomposition(f)) {
        CHECK(m > last);
        last = m;
        CHECK(gcd(part, part.derivative()).is_one());
        for (unsigned i = 0; i < m; ++i) rebuilt = rebuilt * part;
    }
    CHECK(rebuilt == f);
}

TEST_CASE("irreducibility examples")
{
    const auto f3 = Field::make(3), f5 = Field::make(5);
    CHECK(is_irreducible(P(f3, {1, 0, 1})));
    CHECK_FALSE(is_irreducible(P(f5, {1, 0, 1})));
    CHECK(is_irreducible(P(f3, {1, 1, 0, 1, 0, 1})));
    CHECK(oracle::irreducible_by_trial(P(f3, {1, 1, 0, 1, 0, 1})));
    CHECK_THROWS_AS(is_irreducible(P(f3, {2})), PolynomialError);
    CHECK(is_irreducible(P(f3, {2, 2})));  // non-monic linear
}

TEST_CASE("factor examples")
{
    const auto f3 = Field::make(3);
    const auto fac = factor(P(f3, {1, 0, 0, 0, 0, 1}));
    CHECK(fac.unit == 1);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].poly == P(f3, {1, 1}));
    CHECK(fac.factors[1].poly == P(f3, {1, 2, 1, 2, 1}));

    const auto irr = factor(P(f3, {1, 1, 0, 1, 0, 1}));
    REQUIRE(irr.factors.size() == 1);
    CHECK(irr.factors[0].multiplicity == 1);

    const auto lin = factor(P(f3, {0, 2, 0, 1}));  // t^3 - t
    REQUIRE(lin.factors.size() == 3);
    CHECK(lin.factors[0].poly == P(f3, {0, 1}));
    CHECK(lin.factors[1].poly == P(f3, {1, 1}));
    CHECK(lin.factors[2].poly == P(f3, {2, 1}));

    const auto nonmonic = factor(P(f3, {2, 0, 2}));
    CHECK(nonmonic.unit == 2);
    CHECK_THROWS_AS(factor(Polynomial::zero(f3)), PolynomialError);
}

TEST_CASE("factor agrees with trial division and reconstructs (monic deg <= 4, q = 3, 5)")
{
    for (std::uint64_t q : {3, 5}) {
        const auto k = Field::of_order(q);
        for (unsigned d = 1; d <= 4; ++d)
            for (const auto& f : oracle::monic_of_degree(k, d)) {
                const auto fac = factor(f);
                CHECK(fac.expand(k) == f);
                CHECK(sorted(as_pairs(fac)) == sorted(oracle::factor_by_trial(f)));
                CHECK(sorted(as_pairs(fac)) == as_pairs(fac));
                const bool single = fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
                CHECK(is_irreducible(f) == single);
                CHECK(is_irreducible(f) == oracle::irreducible_by_trial(f));
            }
    }
}

TEST_CASE("factor over extension and binary fields")
{
    oracle::Rng rng{99};
    for (std::uint64_t q : {4, 8, 9, 25, 27}) {
        CAPTURE(q);
        const auto k = Field::of_order(q);
        for (int i = 0; i < 60; ++i) {
            Polynomial f = rng.poly(k, 7);
            if (f.is_constant()) continue;
            const auto fac = factor(f, 5);
            CHECK(fac.expand(k) == f);
            for (const auto& x : fac.factors) {
                CHECK(x.poly.is_monic());
                CHECK(oracle::irreducible_by_trial(x.poly));
            }
        }
    }
}

TEST_CASE("factor output does not depend on the seed")
{
    const auto k = Field::make(7);
    // Product of many equal-degree factors forces equal-degree splitting.
    Polynomial f = Polynomial::constant(k, 3);
    for (Code a = 0; a < 5; ++a) f = f * P(k, {a, 1});
    f = f * P(k, {1, 0, 1}) * P(k, {2, 0, 1}) * P(k, {3, 1, 1});
    const auto base = factor(f, 0);
    CHECK(base.expand(k) == f);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto other = factor(f, seed * 7919);
        CHECK(as_pairs(other) == as_pairs(base));
        CHECK(other.unit == base.unit);
    }
}

TEST_CASE("mobius")
{
    const auto f3 = Field::make(3);
    CHECK(mobius(Polynomial::monomial(f3, 1, 2)) == 0);
    CHECK(mobius(P(f3, {1, 0, 1})) == -1);
    CHECK(mobius(P(f3, {1, 0, 0, 0, 0, 1})) == 1);
    CHECK(mobius(Polynomial::constant(f3, 2)) == 1);
    CHECK_THROWS_AS(mobius(Polynomial::zero(f3)), PolynomialError);

    CHECK(mobius_via_discriminant(P(f3, {1, 0, 1})) == -1);
    CHECK(mobius_via_discriminant(P(Field::make(5), {1, 2, 1})) == 0);
    for (std::uint64_t q : {3, 5, 7, 9})
        for (Code c = 0; c < q; ++c) CHECK(mobius_via_discriminant(P(Field::of_order(q), {c, 1})) == -1);
    CHECK_THROWS_AS(mobius_via_discriminant(P(Field::make(2), {1, 1, 1})), PolynomialError);
    CHECK_THROWS_AS(mobius_via_discriminant(P(f3, {1, 0, 0, 1})), PolynomialError);
    CHECK_THROWS_AS(mobius_via_discriminant(P(f3, {1, 0, 2})), PolynomialError);
}

TEST_CASE("mobius agrees with trial factorization, monic deg <= 5 over F_3")
{
    const auto k = Field::make(3);
    for (unsigned d = 1; d <= 5; ++d)
        for (const auto& f : oracle::monic_of_degree(k, d)) CHECK(mobius(f) == oracle::mobius_by_trial(f));
}

TEST_CASE("factorization types and Frobenius classes")
{
    const auto f3 = Field::make(3);
    CHECK(factorization_type(P(f3, {1, 0, 0, 0, 0, 1})).parts() == std::vector<unsigned>{4, 1});
    CHECK(factorization_type(P(f3, {1, 1, 0, 1, 0, 1})).parts() == std::vector<unsigned>{5});
    const Polynomial nsf = P(f3, {1, 1, 0, 2, 0, 1});
    CHECK(factorization_type(nsf).parts() == std::vector<unsigned>{3, 1, 1});
    CHECK(factorization_type(nsf).total() == 5);
    CHECK_FALSE(frobenius_class(nsf).has_value());
    CHECK(frobenius_class(P(f3, {1, 0, 0, 0, 0, 1}))->parts() == std::vector<unsigned>{4, 1});
    CHECK(frobenius_class(P(f3, {1, 1, 0, 1, 0, 1}))->parts() == std::vector<unsigned>{5});
    CHECK_THROWS_AS(factorization_type(P(f3, {1})), PolynomialError);
    CHECK_THROWS_AS(frobenius_class(P(f3, {1})), PolynomialError);

    // types from DDF agree with the explicit factorization
    const auto f5 = Field::make(5);
    for (const auto& f : oracle::monic_of_degree(f5, 4)) {
        std::vector<unsigned> parts;
        for (const auto& x : factor(f).factors)
            for (unsigned i = 0; i < x.multiplicity; ++i) parts.push_back(static_cast<unsigned>(x.poly.deg()));
        CHECK(factorization_type(f) == FactorizationType(parts));
    }
}

TEST_CASE("Euler phi")
{
    const auto f3 = Field::make(3);
    CHECK(euler_phi(Polynomial::t(f3)) == 2);
    for (std::uint64_t q : {3, 5, 9})
        CHECK(euler_phi(Polynomial::monomial(Field::of_order(q), 1, 2)) == q * q - q);
    CHECK(euler_phi(P(f3, {0, 1, 1})) == 4);
    CHECK_THROWS_AS(euler_phi(P(f3, {2})), PolynomialError);
    for (unsigned d = 1; d <= 3; ++d)
        for (const auto& Q : oracle::monic_of_degree(f3, d)) CHECK(euler_phi(Q) == oracle::units_by_search(Q));
}

TEST_CASE("Cauchy probabilities")
{
    CHECK(cauchy_probability(FactorizationType({5}), 5) == Rational(1, 5));
    CHECK(cauchy_probability(FactorizationType({1, 1}), 2) == Rational(1, 2));
    CHECK(cauchy_probability(FactorizationType({2, 1}), 3) == Rational(1, 2));
    CHECK_THROWS_AS(cauchy_probability(FactorizationType({2, 1}), 4), PolynomialError);

    // (2,1) in S_3 by counting permutations: transpositions are those with exactly one fixed point.
    int transpositions = 0;
    std::vector<int> perm = {0, 1, 2};
    do {
        int fixed = 0;
        for (int i = 0; i < 3; ++i) fixed += perm[i] == i;
        transpositions += fixed == 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(Rational(transpositions, 6) == Rational(1, 2));

    for (unsigned n = 1; n <= 8; ++n) {
        Rational total(0);
        for (const auto& tau : partitions_of(n)) total += cauchy_probability(tau, n);
        CHECK(total == Rational(1));
    }
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
}
