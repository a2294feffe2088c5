#include <doctest.h>

#include <set>

#include "fqt/field.hpp"
#include "oracles.hpp"

using namespace fqt;

TEST_CASE("prime field arithmetic")
{
    const auto f5 = Field::make(5);
    CHECK(f5->add(2, 4) == 1);
    CHECK(f5->inv(3) == 2);
    CHECK(f5->sub(1, 3) == 3);
    CHECK(f5->neg(0) == 0);
    CHECK(f5->pow(2, 4) == 1);
    CHECK(f5->div(1, 2) == 3);
    CHECK_THROWS_AS(f5->inv(0), FieldError);

    // inverse by brute-force search
    for (Code a = 1; a < 5; ++a) {
        Code found = 0;
        for (Code x = 1; x < 5; ++x)
            if ((a * x) % 5 == 1) found = x;
        CHECK(f5->inv(a) == found);
    }
}

TEST_CASE("F_9 uses u^2 + 1 and u*u = 2")
{
    const auto f9 = Field::make(3, 2);
    CHECK(f9->modulus() == std::vector<Code>{1, 0, 1});
    CHECK(f9->cardinality() == 9);
    const Code u = 3;  // coords (0, 1)
    CHECK(f9->mul(u, u) == 2);
}

TEST_CASE("default modulus is the lexicographically smallest irreducible")
{
    // Over F_2: t^2 + t + 1, t^3 + t + 1, t^4 + t + 1.
    CHECK(Field::make(2, 2)->modulus() == std::vector<Code>{1, 1, 1});
    CHECK(Field::make(2, 3)->modulus() == std::vector<Code>{1, 1, 0, 1});
    CHECK(Field::make(2, 4)->modulus() == std::vector<Code>{1, 1, 0, 0, 1});
    // Over F_5: t^2 + 2 (2 is a non-square mod 5; t^2 + 0, t^2 + 1 split).
    CHECK(Field::make(5, 2)->modulus() == std::vector<Code>{2, 0, 1});
}

TEST_CASE("construction errors")
{
    CHECK_THROWS_AS(Field::make(4), FieldError);
    CHECK_THROWS_AS(Field::make(3, 0), FieldError);
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<Code>{2, 0, 1}), FieldError);  // t^2 + 2 = (t+1)(t+2) mod 3
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<Code>{1, 0, 2}), FieldError);  // not monic
    CHECK_THROWS_AS(Field::of_order(12), FieldError);
    CHECK(Field::make(3, 2, std::vector<Code>{2, 1, 1})->modulus() == std::vector<Code>{2, 1, 1});
    CHECK(Field::of_order(25)->extension_degree() == 2);
}

TEST_CASE("field axioms hold exhaustively for q <= 25")
{
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25}) {
        CAPTURE(q);
        const auto k = Field::of_order(q);
        const Code n = k->cardinality();
        for (Code a = 0; a < n; ++a) {
            if (a != 0) {
                CHECK(k->mul(a, k->inv(a)) == 1);
                CHECK(k->pow(a, n - 1) == 1);
            }
            CHECK(k->add(a, k->neg(a)) == 0);
            for (Code b = 0; b < n; ++b) {
                CHECK(k->add(a, b) == k->add(b, a));
                CHECK(k->mul(a, b) == k->mul(b, a));
                for (Code c = 0; c < n; c += (n > 9 ? 3 : 1)) {
                    CHECK(k->add(k->add(a, b), c) == k->add(a, k->add(b, c)));
                    CHECK(k->mul(k->mul(a, b), c) == k->mul(a, k->mul(b, c)));
                    CHECK(k->mul(a, k->add(b, c)) == k->add(k->mul(a, b), k->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("quadratic character")
{
    const auto f5 = Field::make(5);
    CHECK(f5->quadratic_character(4) == 1);
    CHECK(f5->quadratic_character(2) == -1);
    CHECK(f5->quadratic_character(0) == 0);
    CHECK_THROWS_AS(Field::make(2, 3)->quadratic_character(1), FieldError);

    for (std::uint64_t q : {3, 5, 7, 9, 11, 13, 25, 27}) {
        CAPTURE(q);
        const auto k = Field::of_order(q);
        int sum = 0, squares = 0;
        for (Code a = 0; a < k->cardinality(); ++a) {
            const int chi = k->quadratic_character(a);
            CHECK(chi == oracle::chi_by_squares(*k, a));
            sum += chi;
            squares += chi == 1;
            for (Code b = 1; b < k->cardinality(); ++b)
                if (a != 0) CHECK(k->quadratic_character(k->mul(a, b)) == chi * k->quadratic_character(b));
        }
        CHECK(sum == 0);
        CHECK(squares == static_cast<int>((q - 1) / 2));
    }
}

TEST_CASE("enumeration and codec")
{
    CHECK(Field::make(3)->elements() == std::vector<Code>{0, 1, 2});
    const auto f9 = Field::make(3, 2);
    const auto e9 = f9->elements();
    REQUIRE(e9.size() == 9);
    CHECK(e9[0] == 0);
    CHECK(e9[1] == 1);
    CHECK(e9[2] == 2);
    CHECK(f9->coords(5) == std::vector<Code>{2, 1});
    CHECK(Field::make(7)->coords(6) == std::vector<Code>{6});
    CHECK(std::set<Code>(e9.begin(), e9.end()).size() == 9);

    const auto f25 = Field::of_order(25);
    for (Code a = 0; a < 25; ++a) CHECK(f25->from_coords(f25->coords(a)) == a);
    CHECK_THROWS_AS(f25->decode(25), FieldError);
    CHECK(f25->decode(24) == 24);
}

TEST_CASE("p-th roots invert Frobenius")
{
    for (std::uint64_t q : {9, 25, 27, 8}) {
        const auto k = Field::of_order(q);
        for (Code a = 0; a < k->cardinality(); ++a) CHECK(k->pow(k->pth_root(a), k->characteristic()) == a);
    }
}

TEST_CASE("checked elements refuse mixed fields")
{
    const auto f5 = Field::make(5);
    const auto f7 = Field::make(7);
    const FieldElement a(f5, 3), b(f7, 3);
    CHECK_THROWS_AS(a + b, FieldError);
    CHECK_THROWS_AS(a / FieldElement(f5, 0), FieldError);
    CHECK((a * a.inv()).code() == 1);
    CHECK((a + FieldElement(Field::make(5), 4)).code() == 2);  // equal parameters, distinct instances
    CHECK_THROWS_AS(FieldElement(f5, 5), FieldError);
    CHECK(a.pow(4).code() == 1);
    CHECK(FieldElement(f5, 2).chi() == -1);
}
