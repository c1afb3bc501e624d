#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pconst/builtin_tables.hpp"
#include "pconst/dihedral.hpp"
#include "pconst/symmetric.hpp"

#include <algorithm>
#include <set>

using namespace pconst;

namespace {

std::vector<std::string> class_labels(const CharTable& t, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(t.classes[i].label);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> char_labels(const CharTable& t, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(t.irreducibles[i].label);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("builtin tables validate") {
    for (const std::string name : {"C2", "C3", "C4", "C2xC2", "Sym3", "Q8", "C9", "C12"}) {
        CAPTURE(name);
        const CharTable t = builtin_table(name);
        CHECK(validate(t).ok());
        CHECK(validate(t, Exec::Serial).ok());
    }
    CHECK_THROWS_AS(builtin_table("C0"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_table("A5"), std::invalid_argument);
}

TEST_CASE("validate detects injected faults") {
    const CharTable good = sym_char_table(4);
    REQUIRE(validate(good).ok());

    CharTable bad_value = good;
    bad_value.irreducibles[2].values[3] += CycNum(1);
    CHECK_FALSE(validate(bad_value).ok());
    CHECK_FALSE(validate(bad_value, Exec::Serial).ok());

    CharTable bad_size = good;
    bad_size.classes[1].size += 1;
    CHECK_FALSE(validate(bad_size).ok());

    CharTable bad_order = good;
    bad_order.order = 25;
    CHECK_FALSE(validate(bad_order).ok());

    CharTable missing = good;
    missing.irreducibles.pop_back();
    CHECK_FALSE(validate(missing).ok());

    CharTable bad_identity = good;
    std::swap(bad_identity.classes[0], bad_identity.classes[1]);
    for (auto& chi : bad_identity.irreducibles) std::swap(chi.values[0], chi.values[1]);
    CHECK_FALSE(validate(bad_identity).ok());

    CHECK_THROWS_AS(require_valid(bad_value), std::runtime_error);
}

TEST_CASE("primes and valuations") {
    CHECK(is_prime(2));
    CHECK(is_prime(11));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(p_valuation(mpz_class(24), 2) == 3);
    CHECK(p_valuation(mpz_class(24), 5) == 0);
    CHECK(prime_divisors(mpz_class(720)) == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("p_singular_classes examples") {
    const CharTable s4 = sym_char_table(4);
    CHECK(class_labels(s4, p_singular_classes(s4, 3).indices) == std::vector<std::string>{"[3,1]"});
    const CharTable i6 = dihedral_table(6);
    CHECK(class_labels(i6, p_singular_classes(i6, 3).indices) == std::vector<std::string>{"r^1", "r^2"});
    const auto none = p_singular_classes(s4, 5);
    CHECK(none.p_not_dividing_order);
    CHECK(none.indices.empty());
}

TEST_CASE("upsilon_p examples") {
    const CharTable s3 = sym_char_table(3);
    const auto r = upsilon_p(s3, 3);
    REQUIRE(r.size() == 3);
    for (const auto& rep : r) {
        CHECK(rep.verdict == Verdict::Constant);
        CHECK(rep.in_upsilon());
    }
    CHECK(*r[*s3.find_char("[2,1]")].constant == -1);
    CHECK_THROWS_AS(upsilon_p(s3, 5), std::invalid_argument);

    const auto r2 = upsilon_p(s3, 2);
    CHECK(char_labels(s3, upsilon_indices(r2)) == std::vector<std::string>{"[1,1,1]", "[3]"});
    CHECK(r2[*s3.find_char("[2,1]")].verdict == Verdict::DefectZero);
    CHECK(*r2[*s3.find_char("[1,1,1]")].constant == -1);
}

TEST_CASE("defect_zero_set examples") {
    const CharTable s5 = sym_char_table(5);
    CHECK(char_labels(s5, defect_zero_set(s5, 5)) == std::vector<std::string>{"[2,2,1]", "[3,2]"});
    CHECK(defect_zero_set(sym_char_table(4), 2).empty());
}

TEST_CASE("serial and parallel classification agree") {
    for (int n = 3; n <= 9; ++n) {
        const CharTable t = sym_char_table(n);
        for (auto p : prime_divisors(t.order)) {
            const auto a = upsilon_p(t, p, Exec::Serial);
            const auto b = upsilon_p(t, p, Exec::Parallel);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(a[i].verdict == b[i].verdict);
                CHECK(a[i].constant == b[i].constant);
            }
        }
    }
}

TEST_CASE("kernels and centres") {
    const CharTable q8 = q8_table();
    CHECK(class_labels(q8, center_classes(q8)) == std::vector<std::string>{"-1", "1"});
    const auto chi2 = *q8.find_char("chi_2");
    CHECK(class_labels(q8, kernel_classes(q8, chi2)) == std::vector<std::string>{"1"});
    CHECK(classes_total_size(q8, kernel_classes(q8, *q8.find_char("chi_i"))) == 4);

    const CharTable s4 = sym_char_table(4);
    CHECK(class_labels(s4, center_classes(s4)) == std::vector<std::string>{"[1,1,1,1]"});
    CHECK(classes_total_size(s4, kernel_classes(s4, *s4.find_char("[1,1,1,1]"))) == 12);
    CHECK(classes_total_size(s4, kernel_classes(s4, *s4.find_char("[2,2]"))) == 4);
}

TEST_CASE("linear character proposition examples") {
    for (const char* name : {"C2", "C3", "C4", "C2xC2", "Sym3", "Q8"}) {
        const CharTable t = builtin_table(name);
        for (auto p : prime_divisors(t.order)) CHECK(verify_linear_prop(t, p).ok());
    }
    const auto s3 = verify_linear_prop(sym_char_table(3), 2);
    CHECK(s3.ok());
    bool saw_involution = false;
    for (const auto& c : s3.checks) saw_involution |= c.predicted == LinearCase::InvolutionComplement;
    CHECK(saw_involution);
    for (int n = 3; n <= 8; ++n) CHECK(verify_linear_prop(dihedral_table(n), 2).ok());
}

TEST_CASE("center lemma holds on small tables") {
    for (int n = 3; n <= 8; ++n) {
        const CharTable t = sym_char_table(n);
        for (auto p : prime_divisors(t.order)) CHECK(center_lemma_violations(t, p).empty());
    }
    const CharTable q8 = q8_table();
    CHECK(center_lemma_violations(q8, 2).empty());
}

TEST_CASE("direct products") {
    const CharTable a = builtin_table("Sym3"), b = builtin_table("C2");
    const CharTable ab = direct_product(a, b);
    CHECK(ab.order == 12);
    CHECK(ab.num_classes() == 6);
    CHECK(validate(ab).ok());
    CHECK(ab.classes[0].label == a.classes[0].label + " x " + b.classes[0].label);

    const CharTable c2c3 = direct_product(builtin_table("C2"), builtin_table("C3"));
    CHECK(validate(c2c3).ok());
    CHECK(c2c3.conductor % 3 == 0);

    for (auto p : {2u, 3u}) {
        const auto r = verify_direct_prop(a, b, p);
        CHECK(r.ok);
        CHECK(r.actual == r.predicted);
    }
    // p divides both orders: only the trivial character survives
    const auto both = verify_direct_prop(a, a, 3);
    CHECK(both.ok);
    CHECK(both.actual.size() == 1);
    // p divides only the first factor: Upsilon_3(Sym3) x 1
    const auto one = verify_direct_prop(a, b, 3);
    CHECK(one.actual.size() == 3);
}
