#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pconst/frobenius.hpp"

#include <algorithm>
#include <set>

using namespace pconst;

namespace {

std::string data_file(const char* name) { return std::string(PCONST_DATA_DIR) + "/" + name; }

// Orbits of a matrix group on nonzero vectors of F_p^d, counted directly.
std::size_t orbit_count(const std::vector<Matrix>& group, unsigned p, unsigned d) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= p;
    std::vector<bool> seen(total, false);
    std::size_t orbits = 0;
    for (std::uint64_t code = 1; code < total; ++code) {
        if (seen[code]) continue;
        ++orbits;
        std::vector<int> v(d);
        std::uint64_t c = code;
        for (unsigned i = 0; i < d; ++i, c /= p) v[i] = static_cast<int>(c % p);
        for (const auto& m : group) {
            std::uint64_t img = 0, scale = 1;
            for (unsigned r = 0; r < d; ++r, scale *= p) {
                long s = 0;
                for (unsigned k = 0; k < d; ++k) s += static_cast<long>(m[r * d + k]) * v[k];
                img += static_cast<std::uint64_t>(s % p) * scale;
            }
            seen[img] = true;
        }
    }
    return orbits;
}

}  // namespace

TEST_CASE("close_and_check examples") {
    // identity only
    const auto one = close_and_check({5, 2, {{1, 0, 0, 1}}});
    CHECK(one.size() == 1);
    // -1 acts fixed-point-freely
    CHECK(close_and_check({5, 2, {{4, 0, 0, 4}}}).size() == 2);
    // diag(1, -1) fixes e1
    CHECK_THROWS_AS(close_and_check({5, 2, {{1, 0, 0, 4}}}), std::invalid_argument);
    // singular
    CHECK_THROWS_AS(close_and_check({5, 2, {{1, 1, 1, 1}}}), std::invalid_argument);
    // wrong size
    CHECK_THROWS_AS(close_and_check({5, 2, {{1, 0, 0}}}), std::invalid_argument);
}

TEST_CASE("gp_parameters") {
    CHECK(gp_parameters(3) == std::pair{1, 1});
    CHECK(gp_parameters(5) == std::pair{0, 2});
    for (unsigned p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        const auto [a, b] = gp_parameters(p);
        CHECK((a * a + b * b + 1) % static_cast<int>(p) == 0);
    }
}

TEST_CASE("G(3) structure") {
    const CharTable g = frobenius_table(build_Gp(3));
    CHECK(g.order == 72);
    CHECK(g.num_classes() == 6);
    std::multiset<long> degrees;
    for (std::size_t i = 0; i < g.num_chars(); ++i) degrees.insert(g.degree(i).get_si());
    CHECK(degrees == std::multiset<long>{1, 1, 1, 1, 2, 8});
}

TEST_CASE("Q8 acts with (p^2 - 1)/8 kernel orbits") {
    for (unsigned p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        CAPTURE(p);
        const FrobeniusSpec spec = build_Gp(p);
        const auto group = close_and_check(spec.complement);
        CHECK(group.size() == 8);
        const std::size_t orbits = orbit_count(group, p, 2);
        CHECK(orbits == (p * p - 1) / 8);
        const auto lemma = verify_q8_lemma(p);
        CHECK(lemma.ok);
        CHECK(lemma.kernel_orbits == orbits);
        CHECK(lemma.order == 8 * p * p);
        REQUIRE(lemma.constant);
        CHECK(*lemma.constant == 2);
    }
}

TEST_CASE("serial and parallel Frobenius tables agree") {
    const FrobeniusSpec spec = build_Gp(7);
    const CharTable a = frobenius_table(spec, Exec::Serial);
    const CharTable b = frobenius_table(spec, Exec::Parallel);
    REQUIRE(a.num_chars() == b.num_chars());
    for (std::size_t i = 0; i < a.num_chars(); ++i) CHECK(a.irreducibles[i].values == b.irreducibles[i].values);
}

TEST_CASE("class map errors") {
    FrobeniusSpec spec = build_Gp(5);
    spec.class_map.pop_back();
    CHECK_THROWS_AS(frobenius_table(spec), std::invalid_argument);
}

TEST_CASE("SL2(5) over F_11") {
    const FrobeniusSpec spec = load_frobenius_spec(data_file("sl2_5_f11.json"));
    CHECK(spec.complement_table.order == 120);
    const auto r = verify_frobenius_example(spec);
    CHECK(r.ok);
    CHECK(r.order == 14520);
    CHECK(r.mismatches.empty());
    CHECK(r.members.size() == 10);
    CHECK(std::count(r.members.begin(), r.members.end(), "ind[0,1]:120:-1") == 1);

    // spec survives a JSON round trip
    const FrobeniusSpec again = frobenius_spec_from_json(frobenius_spec_to_json(spec));
    CHECK(again.complement.generators == spec.complement.generators);
    CHECK(again.class_map.size() == spec.class_map.size());
}
