#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pconst/monomial.hpp"
#include "pconst/type_d.hpp"

#include <algorithm>

using namespace pconst;

TEST_CASE("dn_classes examples") {
    CHECK(dn_classes(2).size() == 4);
    CHECK(dn_classes(4).size() == 13);
    const auto c4 = dn_classes(4);
    std::size_t split = 0;
    for (const auto& c : c4) split += c.tag != SplitTag::None;
    CHECK(split == 4);  // alpha in {(4), (2,2)}, beta empty
    CHECK_THROWS_AS(dn_char_table(1), std::invalid_argument);
    CHECK_THROWS_AS(dn_char_table(kDnMaxN + 1), std::invalid_argument);
}

TEST_CASE("class sizes and degrees add up") {
    for (int n = 2; n <= 7; ++n) {
        const CharTable d = dn_char_table(n);
        mpz_class half = factorial(static_cast<unsigned>(n));
        half <<= static_cast<unsigned>(n - 1);
        CHECK(d.order == half);
        mpz_class sizes = 0, squares = 0;
        for (const auto& c : d.classes) sizes += c.size;
        for (std::size_t i = 0; i < d.num_chars(); ++i) squares += d.degree(i) * d.degree(i);
        CHECK(sizes == half);
        CHECK(squares == half);
        CHECK(d.num_chars() == d.num_classes());
        CHECK(validate(d).ok());
    }
}

TEST_CASE("restrictions from B_n") {
    for (int n = 2; n <= 6; ++n) {
        const CharTable b = bn_char_table(n);
        const CharTable d = dn_char_table(b, n);
        for (std::size_t i = 0; i < d.num_chars(); ++i) {
            const std::string& label = d.irreducibles[i].label;
            const std::string base = strip_split_tag(label);
            const auto bi = b.find_char(base);
            REQUIRE(bi);
            const bool is_split = base != label;
            if (is_split && label.back() == '-') continue;
            std::optional<std::size_t> partner;
            if (is_split) partner = d.find_char(base + "-");
            for (std::size_t c = 0; c < d.num_classes(); ++c) {
                const auto bc = b.find_class(strip_split_tag(d.classes[c].label));
                REQUIRE(bc);
                CycNum v = d.value(i, c);
                if (partner) v += d.value(*partner, c);
                CHECK(v == b.value(*bi, *bc));
            }
        }
    }
}

TEST_CASE("split pairs take the same value off the split classes") {
    for (int n = 2; n <= 8; n += 2) {
        const CharTable d = dn_char_table(n);
        for (std::size_t i = 0; i < d.num_chars(); ++i) {
            const std::string& label = d.irreducibles[i].label;
            if (label.back() != '+') continue;
            const auto j = *d.find_char(strip_split_tag(label) + "-");
            bool differ = false;
            for (std::size_t c = 0; c < d.num_classes(); ++c) {
                const bool split_class = d.classes[c].label.back() == '+' || d.classes[c].label.back() == '-';
                if (!split_class) CHECK(d.value(i, c) == d.value(j, c));
                else differ |= d.value(i, c) != d.value(j, c);
            }
            CHECK(differ);
        }
    }
}

TEST_CASE("label swaps only permute the table") {
    for (int n = 4; n <= 6; ++n) {
        const CharTable a = dn_char_table(n);
        const CharTable b = dn_char_table(n, SplitLabels{true, true});
        REQUIRE(a.num_chars() == b.num_chars());
        for (std::size_t i = 0; i < a.num_chars(); ++i)
            for (std::size_t c = 0; c < a.num_classes(); ++c) {
                const auto bi = *b.find_char(a.irreducibles[i].label);
                const auto bc = *b.find_class(a.classes[c].label);
                // swapping both names leaves chi+(C+) etc. invariant
                CHECK(a.value(i, c) == b.value(bi, bc));
            }
    }
}

TEST_CASE("dn proposition on small cases") {
    for (int n = 4; n <= 6; ++n) {
        const CharTable b = bn_char_table(n);
        const CharTable d = dn_char_table(b, n);
        for (auto p : prime_divisors(d.order)) {
            CAPTURE(n);
            CAPTURE(p);
            const auto r = verify_dn_prop(b, d, p);
            CHECK(r.ok);
            CHECK(r.ok == verify_dn_prop(n, p, SplitLabels{true, false}).ok);
        }
    }
    CHECK_THROWS_AS(upsilon_dn(4, 5), std::invalid_argument);
}
