#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pconst/symmetric.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace pconst;

namespace {

// Independent character oracle: the Frobenius formula. chi_lambda(mu) is the
// coefficient of x^(lambda + delta) in a_delta * p_mu, with
// a_delta = prod_{i<j} (x_i - x_j) in l = len(lambda) variables (extra
// variables only add zero rows when lambda is shorter than mu).
using Mono = std::vector<int>;
using Poly = std::map<Mono, long long>;

Poly mul(const Poly& a, const Poly& b) {
    Poly c;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            c[m] += ca * cb;
        }
    std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
    return c;
}

long long frobenius_value(const Partition& lambda, const Partition& mu) {
    const std::size_t l = std::max<std::size_t>(lambda.length(), 1);
    // Vandermonde as a product of (x_i - x_j)
    Poly p{{Mono(l, 0), 1}};
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) {
            Mono xi(l, 0), xj(l, 0);
            xi[i] = 1;
            xj[j] = 1;
            p = mul(p, Poly{{xi, 1}, {xj, -1}});
        }
    for (int k : mu.parts()) {
        Poly power;
        for (std::size_t i = 0; i < l; ++i) {
            Mono m(l, 0);
            m[i] = k;
            power[m] = 1;
        }
        p = mul(p, power);
    }
    Mono target(l, 0);
    for (std::size_t i = 0; i < l; ++i) target[i] = (i < lambda.length() ? lambda[i] : 0) + static_cast<int>(l - 1 - i);
    auto it = p.find(target);
    return it == p.end() ? 0 : it->second;
}

std::vector<std::string> labels(const std::vector<Partition>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.str());
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::string, long> members(int n, std::uint64_t p) {
    std::map<std::string, long> out;
    for (const auto& r : upsilon_sym_bruteforce(n, p))
        if (r.in_upsilon()) out[r.label] = r.constant->get_si();
    return out;
}

}  // namespace

TEST_CASE("mn_value examples") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : enumerate_partitions(n)) CHECK(mn_value(Partition({n}), mu) == 1);
    CHECK(mn_value(Partition({1, 1, 1, 1}), Partition({2, 1, 1})) == -1);
    CHECK(mn_value(Partition({2, 2}), Partition({3, 1})) == -1);
    CHECK(mn_value(Partition({2, 2, 1, 1}), Partition({5, 1})) == -1);
    CHECK_THROWS_AS(mn_value(Partition({2, 1}), Partition({2, 2})), std::invalid_argument);
}

TEST_CASE("mn_value agrees with the Frobenius formula for n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& l : enumerate_partitions(n))
            for (const auto& mu : enumerate_partitions(n)) CHECK(mn_value(l, mu) == frobenius_value(l, mu));
}

TEST_CASE("mn_value at the identity is the hook length degree") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            const std::vector<int> ones(static_cast<std::size_t>(n), 1);
            CHECK(mpz_class(static_cast<long>(mn_value_ordered(l, ones))) == degree_by_hooks(l));
        }
}

TEST_CASE("sym_char_table examples") {
    const CharTable t3 = sym_char_table(3);
    REQUIRE(t3.num_classes() == 3);
    CHECK(t3.classes[0].label == "[1,1,1]");
    CHECK(t3.classes[1].label == "[2,1]");
    CHECK(t3.classes[2].label == "[3]");
    const auto chi21 = *t3.find_char("[2,1]");
    CHECK(t3.value(chi21, 0) == CycNum(2));
    CHECK(t3.value(chi21, 1) == CycNum(0));
    CHECK(t3.value(chi21, 2) == CycNum(-1));

    const CharTable t1 = sym_char_table(1);
    CHECK(t1.num_chars() == 1);
    CHECK(t1.value(0, 0) == CycNum(1));

    const CharTable t4 = sym_char_table(4);
    const auto chi22 = *t4.find_char("[2,2]");
    const char* cls[] = {"[1,1,1,1]", "[2,1,1]", "[2,2]", "[3,1]", "[4]"};
    const long by_label[] = {2, 0, 2, -1, 0};
    for (int i = 0; i < 5; ++i) CHECK(t4.value(chi22, *t4.find_class(cls[i])) == CycNum(by_label[i]));
    CHECK_THROWS_AS(sym_char_table(kSymTableMaxN + 1), std::invalid_argument);
}

TEST_CASE("sym tables validate and serial equals parallel") {
    for (int n = 1; n <= 10; ++n) {
        const CharTable s = sym_char_table(n, Exec::Serial);
        const CharTable p = sym_char_table(n, Exec::Parallel);
        CHECK(validate(s, Exec::Serial).ok());
        CHECK(validate(p).ok());
        for (std::size_t i = 0; i < s.num_chars(); ++i) CHECK(s.irreducibles[i].values == p.irreducibles[i].values);
    }
}

TEST_CASE("peel order does not matter") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 10)(rng);
        const auto all = enumerate_partitions(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        const Partition& l = all[pick(rng)];
        std::vector<int> lengths = all[pick(rng)].parts();
        const long long canonical = mn_value_ordered(l, lengths);
        std::shuffle(lengths.begin(), lengths.end(), rng);
        CHECK(mn_value_ordered(l, lengths) == canonical);
    }
}

TEST_CASE("upsilon_sym_bruteforce examples") {
    CHECK(members(5, 5) == std::map<std::string, long>{{"[5]", 1}, {"[1,1,1,1,1]", 1}, {"[4,1]", -1}, {"[3,1,1]", 1}, {"[2,1,1,1]", -1}});
    CHECK(members(4, 3) == std::map<std::string, long>{{"[4]", 1}, {"[1,1,1,1]", 1}, {"[2,2]", -1}});
    CHECK(members(4, 2) == std::map<std::string, long>{{"[4]", 1}});
    const auto m53 = members(5, 3);
    CHECK(m53.at("[2,2,1]") == -1);
    CHECK(m53.count("[2,1,1,1]") == 1);
    CHECK(members(3, 3) == std::map<std::string, long>{{"[3]", 1}, {"[2,1]", -1}, {"[1,1,1]", 1}});
    CHECK_THROWS_AS(upsilon_sym_bruteforce(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(upsilon_sym_bruteforce(4, 4), std::invalid_argument);
}

TEST_CASE("upsilon_sym_formula examples") {
    CHECK(labels(upsilon_sym_formula(5, 5)) == std::vector<std::string>{"[1,1,1,1,1]", "[2,1,1,1]", "[3,1,1]", "[4,1]", "[5]"});
    CHECK(labels(upsilon_sym_formula(6, 5)) == std::vector<std::string>{"[1,1,1,1,1,1]", "[2,2,1,1]", "[3,2,1]", "[4,2]", "[6]"});
    CHECK(labels(upsilon_sym_formula(4, 2)) == std::vector<std::string>{"[4]"});
}

TEST_CASE("formula and brute force agree away from m = 2p") {
    // m = 2p, i.e. r = p in the third case, is the one known disagreement
    for (int m = 2; m <= 12; ++m)
        for (std::uint64_t p = 2; p <= static_cast<std::uint64_t>(m); ++p) {
            if (!is_prime(p) || static_cast<std::uint64_t>(m) == 2 * p && p >= 3) continue;
            std::vector<std::string> brute;
            for (const auto& [label, c] : members(m, p)) {
                brute.push_back(label);
                CHECK(std::abs(c) == 1);
            }
            CAPTURE(m);
            CAPTURE(p);
            CHECK(brute == labels(upsilon_sym_formula(m, p)));
        }
}

TEST_CASE("defect zero is the same as vanishing on p-singular classes") {
    for (int m = 2; m <= 10; ++m) {
        const CharTable t = sym_char_table(m);
        for (std::uint64_t p = 2; p <= static_cast<std::uint64_t>(m); ++p) {
            if (!is_prime(p)) continue;
            const auto singular = p_singular_classes(t, p).indices;
            const unsigned vg = p_valuation(t.order, p);
            for (std::size_t i = 0; i < t.num_chars(); ++i) {
                const bool zero_defect = p_valuation(t.degree(i), p) == vg;
                const bool vanishes = std::all_of(singular.begin(), singular.end(), [&](std::size_t c) { return t.value(i, c).is_zero(); });
                CHECK(zero_defect == vanishes);
            }
        }
    }
}
