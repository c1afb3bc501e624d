#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pconst/builtin_tables.hpp"
#include "pconst/dihedral.hpp"
#include "pconst/monomial.hpp"
#include "pconst/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace pconst;

namespace {

// Signed permutation matrices as (perm, signs); conjugacy classes by brute
// force. With even_only, only elements with an even number of -1 signs.
struct Signed {
    std::vector<int> perm;
    std::vector<int> sign;
    bool operator<(const Signed& o) const { return std::tie(perm, sign) < std::tie(o.perm, o.sign); }
};

// (g h)(e_i) = g(h(e_i))
Signed compose(const Signed& g, const Signed& h) {
    const std::size_t n = g.perm.size();
    Signed r{std::vector<int>(n), std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const int j = h.perm[i];
        r.perm[i] = g.perm[j];
        r.sign[i] = h.sign[i] * g.sign[j];
    }
    return r;
}

Signed inverse(const Signed& g) {
    const std::size_t n = g.perm.size();
    Signed r{std::vector<int>(n), std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        r.perm[g.perm[i]] = static_cast<int>(i);
        r.sign[g.perm[i]] = g.sign[i];
    }
    return r;
}

std::vector<Signed> signed_group(int n, bool even_only) {
    std::vector<Signed> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            if (even_only && __builtin_popcount(mask) % 2) continue;
            Signed g{perm, std::vector<int>(n)};
            for (int i = 0; i < n; ++i) g.sign[i] = (mask >> i) & 1 ? -1 : 1;
            out.push_back(g);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::size_t count_classes(const std::vector<Signed>& group) {
    std::set<Signed> seen;
    std::size_t classes = 0;
    for (const auto& g : group) {
        if (seen.count(g)) continue;
        ++classes;
        for (const auto& h : group) seen.insert(compose(compose(h, g), inverse(h)));
    }
    return classes;
}

std::multiset<std::vector<std::string>> value_rows(const CharTable& t) {
    // each row as the multiset of (class size, value) pairs, independent of
    // labels and class order
    std::multiset<std::vector<std::string>> rows;
    for (const auto& chi : t.irreducibles) {
        std::vector<std::string> row;
        for (std::size_t c = 0; c < t.num_classes(); ++c) row.push_back(t.classes[c].size.get_str() + ":" + chi.values[c].str());
        std::sort(row.begin(), row.end());
        rows.insert(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("class counts against brute-force conjugacy") {
    const CharTable c2 = builtin_table("C2");
    for (int n = 1; n <= 4; ++n) CHECK(wreath_classes(c2, n).size() == count_classes(signed_group(n, false)));
    CHECK(wreath_classes(c2, 2).size() == 5);
    CHECK(count_classes(signed_group(4, true)) == 13);
    CHECK(count_classes(signed_group(2, true)) == 4);
}

TEST_CASE("wreath classes sum to the group order") {
    for (const char* name : {"C2", "C3", "Sym3", "C2xC2"}) {
        const CharTable h = builtin_table(name);
        for (int n = 1; n <= 4; ++n) {
            mpz_class total = 0;
            for (const auto& c : wreath_classes(h, n)) total += c.size;
            mpz_class expect = factorial(static_cast<unsigned>(n));
            for (int i = 0; i < n; ++i) expect *= h.order;
            CHECK(total == expect);
        }
    }
}

TEST_CASE("B2 table examples") {
    const CharTable b2 = bn_char_table(2);
    CHECK(b2.order == 8);
    CHECK(b2.num_classes() == 5);
    CHECK(b2.irreducibles[0].label == "[2;∅]");
    CHECK(validate(b2).ok());
    // C2 wr Sym2 is dihedral of order 8
    CHECK(value_rows(b2) == value_rows(dihedral_table(4)));
}

TEST_CASE("star_mn_value at the identity is the degree") {
    for (const char* name : {"C2", "C3", "Sym3", "Q8"}) {
        const CharTable h = builtin_table(name);
        for (int n = 1; n <= 4; ++n) {
            const auto cls = wreath_classes(h, n);
            mpz_class sum_sq = 0;
            for (const auto& gamma : enumerate_multipartitions(n, static_cast<int>(h.num_chars()))) {
                const CycNum v = star_mn_value(h, gamma, cls[0].delta);
                const mpz_class d = wreath_degree(h, gamma);
                CHECK(v == CycNum(mpq_class(d)));
                sum_sq += d * d;
            }
            mpz_class order = factorial(static_cast<unsigned>(n));
            for (int i = 0; i < n; ++i) order *= h.order;
            CHECK(sum_sq == order);
        }
    }
}

TEST_CASE("wreath tables validate; serial equals parallel") {
    for (const char* name : {"C2", "C3", "C4", "C2xC2", "Sym3"}) {
        const CharTable h = builtin_table(name);
        for (int n = 1; n <= 3; ++n) {
            const CharTable s = wreath_char_table(h, n, Exec::Serial);
            const CharTable p = wreath_char_table(h, n, Exec::Parallel);
            CHECK(validate(p).ok());
            REQUIRE(s.num_chars() == p.num_chars());
            for (std::size_t i = 0; i < s.num_chars(); ++i) CHECK(s.irreducibles[i].values == p.irreducibles[i].values);
        }
    }
}

TEST_CASE("inflated characters agree with Sym(n)") {
    // chi^((gamma),∅,...) is chi_gamma composed with the projection to Sym(n)
    const CharTable h = builtin_table("C3");
    for (int n = 2; n <= 5; ++n) {
        const CharTable w = wreath_char_table(h, n);
        for (const auto& gamma : enumerate_partitions(n)) {
            std::vector<Partition> comps(h.num_chars());
            comps[0] = gamma;
            const MultiPartition g(comps);
            const auto chi = *w.find_char(g.str());
            for (std::size_t c = 0; c < w.num_classes(); ++c) {
                // cycle type of the class: union of all components
                const MultiPartition delta = parse_multipartition(w.classes[c].label);
                std::vector<int> lengths;
                for (std::size_t j = 0; j < h.num_classes(); ++j)
                    for (int part : delta[j].parts()) lengths.push_back(part);
                std::sort(lengths.rbegin(), lengths.rend());
                CHECK(w.value(chi, c) == CycNum(static_cast<long>(mn_value(gamma, Partition(lengths)))));
            }
        }
    }
}

TEST_CASE("peel order independence for the star rule") {
    const CharTable h = builtin_table("Sym3");
    const int n = 4;
    const auto cls = wreath_classes(h, n);
    for (const auto& gamma : enumerate_multipartitions(n, static_cast<int>(h.num_chars()))) {
        for (const auto& c : cls) {
            std::vector<std::pair<int, std::size_t>> cycles;
            for (std::size_t j = 0; j < h.num_classes(); ++j)
                for (int part : c.delta[j].parts()) cycles.push_back({part, j});
            const CycNum ref = star_mn_value(h, gamma, c.delta);
            std::sort(cycles.begin(), cycles.end());
            CHECK(star_mn_value_ordered(h, gamma, cycles) == ref);
        }
    }
}

TEST_CASE("wreath theorem on small cases") {
    for (const char* name : {"C2", "C3", "Sym3"}) {
        const CharTable h = builtin_table(name);
        for (int n = 2; n <= 4; ++n) {
            mpz_class order = factorial(static_cast<unsigned>(n));
            for (int i = 0; i < n; ++i) order *= h.order;
            for (auto p : prime_divisors(order)) {
                CAPTURE(name);
                CAPTURE(n);
                CAPTURE(p);
                const auto r = verify_wreath_theorem(h, n, p);
                CHECK(r.ok);
            }
        }
    }
}

TEST_CASE("check_h_table rejects bad inputs") {
    CharTable h = builtin_table("C3");
    std::swap(h.irreducibles[0], h.irreducibles[1]);
    CHECK_THROWS_AS(check_h_table(h), std::invalid_argument);
    CHECK_THROWS_AS(upsilon_wreath(builtin_table("C2"), 3, 5), std::invalid_argument);
}
