#include <doctest.h>

#include <algorithm>
#include <set>

#include "fqt/family.hpp"
#include "oracles.hpp"

using namespace fqt;

namespace {

Polynomial P(const FieldPtr& k, std::vector<Code> c) { return {k, std::move(c)}; }

bool has(const std::vector<Violation>& v, Violation x) { return std::find(v.begin(), v.end(), x) != v.end(); }

QuadraticFamily worked(const FieldPtr& k, unsigned m = 0)
{
    return QuadraticFamily(P(k, {1}), P(k, {0, 1}), ShortInterval(Polynomial::monomial(k, 1, 2), m));
}

}  // namespace

TEST_CASE("admissibility")
{
    const auto f3 = Field::make(3);
    const Polynomial one = P(f3, {1}), t = Polynomial::t(f3), t2 = Polynomial::monomial(f3, 1, 2);
    CHECK(check_admissible(one, t, t2, 0).empty());
    CHECK(has(check_admissible(t, t, t2, 0), Violation::not_coprime));
    CHECK(has(check_admissible(one, t2, t2, 0), Violation::fg_square));
    CHECK(has(check_admissible(Polynomial::zero(f3), t, t2, 0), Violation::f_zero));
    CHECK(has(check_admissible(one, Polynomial::zero(f3), t2, 0), Violation::g_zero));
    CHECK(has(check_admissible(one, P(f3, {0, 2}), t2, 0), Violation::g_not_monic));
    CHECK(has(check_admissible(P(f3, {1, 1}), t, t2, 0), Violation::deg_order));
    CHECK(has(check_admissible(one, t, t2, 2), Violation::p_degree));
    CHECK(has(check_admissible(one, t, P(f3, {0, 0, 2}), 0), Violation::p_degree));
    const auto f4 = Field::of_order(4);
    CHECK(has(check_admissible(P(f4, {1}), Polynomial::t(f4), Polynomial::monomial(f4, 1, 2), 0),
              Violation::q_even));
    // 2 is a non-square in F_3 but 2 * t^2 is still not an exact square
    CHECK_FALSE(has(check_admissible(P(f3, {2}), t2, Polynomial::monomial(f3, 1, 3), 0), Violation::fg_square));

    // several violations are all reported
    const auto many = check_admissible(Polynomial::zero(f3), P(f3, {0, 2}), t, 1);
    CHECK(many.size() == 3);
    CHECK_THROWS_WITH_AS(QuadraticFamily(t, t, ShortInterval(t2, 0)), doctest::Contains("not_coprime"), FamilyError);
}

TEST_CASE("short intervals")
{
    const auto f3 = Field::make(3);
    const auto members = enumerate_interval(ShortInterval(Polynomial::monomial(f3, 1, 2), 0));
    REQUIRE(members.size() == 3);
    CHECK(members[0] == P(f3, {0, 0, 1}));
    CHECK(members[1] == P(f3, {1, 0, 1}));
    CHECK(members[2] == P(f3, {2, 0, 1}));

    const auto f5 = Field::make(5);
    const ShortInterval big(Polynomial::monomial(f5, 1, 3), 2);
    CHECK(big.size() == 125);
    const auto all = enumerate_interval(big);
    REQUIRE(all.size() == 125);
    std::set<std::vector<Code>> distinct;
    for (const auto& h : all) {
        distinct.insert(h.coeffs());
        CHECK(h.is_monic());
        CHECK(h.deg() == 3);
    }
    CHECK(distinct.size() == 125);

    // blocks partition the tuples and keep the top coordinate fixed
    std::uint64_t seen = 0;
    for (Code b = 0; b < big.block_count(); ++b)
        big.for_each_tuple_in_block(b, [&](std::span<const Code> A) {
            CHECK(A[2] == b);
            ++seen;
        });
    CHECK(seen == 125);

    CHECK_THROWS_AS(ShortInterval(Polynomial::monomial(f3, 1, 2), 2), FamilyError);
    CHECK_THROWS_AS(ShortInterval(P(f3, {0, 0, 2}), 0), FamilyError);
    const std::vector<Code> wrong = {1, 2};
    CHECK_THROWS_AS(ShortInterval(Polynomial::monomial(f3, 1, 2), 0).member(wrong), FamilyError);
}

TEST_CASE("specialization")
{
    const auto f3 = Field::make(3);
    const auto fam = worked(f3);
    CHECK(fam.degree() == 5);
    CHECK(fam.shifted() == P(f3, {1, 0, 0, 0, 0, 1}));
    const std::vector<Code> a0 = {0}, a1 = {1}, a2 = {2};
    CHECK(fam.specialize(a0) == P(f3, {1, 0, 0, 0, 0, 1}));
    CHECK(fam.specialize(a1) == P(f3, {1, 1, 0, 2, 0, 1}));
    CHECK(fam.specialize(a2) == P(f3, {1, 1, 0, 1, 0, 1}));
    const std::vector<Code> too_long = {0, 0};
    CHECK_THROWS_AS(fam.specialize(too_long), FamilyError);
    CHECK_THROWS_AS(fam.specialize(std::span<const Code>{}), FamilyError);
}

TEST_CASE("specializations are monic of degree n and agree modulo g")
{
    for (std::uint64_t q : {3, 5, 7, 9}) {
        const auto k = Field::of_order(q);
        const QuadraticFamily fam(P(k, {1, 1}), P(k, {1, 2, 0, 1}), ShortInterval(Polynomial::monomial(k, 1, 2), 1));
        CHECK(fam.degree() == 7);
        std::vector<Polynomial> specs;
        fam.interval().for_each_tuple([&](std::span<const Code> A) {
            const Polynomial F = fam.specialize(A);
            CHECK(F.deg() == 7);
            CHECK(F.is_monic());
            // f + g h^2 with h computed independently
            const Polynomial h = fam.center() + P(k, {A[0], A[1]});
            CHECK(F == fam.f() + fam.g() * h * h);
            specs.push_back(F);
        });
        CHECK(specs.size() == q * q);
        for (std::size_t i = 1; i < specs.size(); i += 3) CHECK(((specs[i] - specs[0]) % fam.g()).is_zero());
    }
}

TEST_CASE("discriminant identity")
{
    const auto f3 = Field::make(3);
    CHECK(verify_discriminant_identity(worked(f3), std::span<const Code>{}));
    const std::vector<Code> wrong = {1};
    CHECK_THROWS_AS(verify_discriminant_identity(worked(f3), wrong), FamilyError);

    oracle::Rng rng{2024};
    for (std::uint64_t q : {3, 5, 7}) {
        const auto k = Field::of_order(q);
        const QuadraticFamily fam(P(k, {0, 1}), P(k, {1, 0, 1, 1}),
                                  ShortInterval(Polynomial::monomial(k, 1, 4) + P(k, {0, 1}), 3));
        const std::vector<Code> zeros(3, 0);
        CHECK(verify_discriminant_identity(fam, zeros));
        for (int i = 0; i < 100; ++i) {
            std::vector<Code> partial(3);
            for (auto& x : partial) x = rng.element(*k);
            CHECK(verify_discriminant_identity(fam, partial));
        }
    }
}

TEST_CASE("non-associate families")
{
    const auto f3 = Field::make(3);
    const ShortInterval I(Polynomial::monomial(f3, 1, 2), 0);
    const QuadraticFamily a(P(f3, {1}), Polynomial::t(f3), I), b(P(f3, {2}), Polynomial::t(f3), I);
    CHECK(a.non_associate(b));
    CHECK_FALSE(a.non_associate(a));
}
