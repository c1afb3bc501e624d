#pragma once

// Verification suites: each pins one classification result by comparing a
// brute-force Upsilon_p scan against a closed-form prediction, and records
// every table it built so that cross-cutting properties can be checked on
// the same tables afterwards.

#include "pconst/char_table.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pconst {

struct IntRange {
    int lo = 0;
    int hi = -1;
};

/// "a..b" or a single integer "a". Throws std::invalid_argument when
/// malformed or empty.
IntRange parse_range(const std::string& text);

/// A group family with a parameter, e.g. "sym", "bn", "dn", "i2", "gp".
struct FamilyRange {
    std::string family;
    IntRange range;
};

/// "sym:3..8,bn:2..6". Throws std::invalid_argument when malformed.
std::vector<FamilyRange> parse_families(const std::string& text);

/// sym (Sym n), bn, dn, i2 (dihedral of order 2n), gp (G(p) with p = n).
/// Throws std::invalid_argument for an unknown family.
CharTable family_table(const std::string& family, int n);

struct Check {
    std::string id;
    bool ok = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::shared_ptr<const CharTable>> tables;

    void add(std::string id, bool ok, std::string detail = {});
    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
};

/// Sorted "{a, b, ...}".
std::string set_str(std::vector<std::string> items);

/// Upsilon_p(Sym m) by brute force against the closed-form list, plus
/// |c| = 1 for every member; every prime p <= m.
SuiteResult suite_an(IntRange m);

/// Upsilon_p(B_n) against inflations of Upsilon_p(Sym n) for odd p, and
/// against the trivial character alone for p = 2 (n >= 2).
SuiteResult suite_bn(IntRange n);

/// Upsilon_p(D_n) against the irreducible restrictions from B_n, under all
/// four split-label choices, which must give identical sets.
SuiteResult suite_dn(IntRange n);

/// Dihedral proposition for every p | 2n, and Upsilon_2 = the two linear
/// characters exactly for n odd.
SuiteResult suite_i2(IntRange n);

/// Wreath theorem for each base table and 2 <= n <= hi, every p | order.
SuiteResult suite_thwr(const std::vector<CharTable>& base_tables, IntRange n);

/// Upsilon_2 is larger than {1} exactly for dihedral groups of order 2n with
/// n odd (Sym3, Sym2 and B1 included), and then consists of the two linear
/// characters.
SuiteResult suite_th2(const std::vector<FamilyRange>& families);

/// Direct-product proposition on a fixed list of ten pairs, the p-group
/// corollary, and the linear-character proposition on every table built.
SuiteResult suite_directprod();

/// Q8 lemma for each prime, with the kernel orbit count (p^2 - 1)/8.
SuiteResult suite_q8(const std::vector<unsigned>& primes);

/// Frobenius example from a spec file: Upsilon_p(G) = Irr(G), c = degree for
/// inflated and -1 for induced characters.
SuiteResult suite_example(const std::string& spec_path, const std::string& expected_order);

/// Every member of every Upsilon_p(t), p | |G|, has c = +-1.
Check theorem1_check(const CharTable& t);

/// Exact validation, defect-zero set = constant-0 set, linear-character
/// proposition and center lemma for every p | |G|.
std::vector<Check> structural_checks(const CharTable& t);

struct ScanRow {
    std::string group;
    std::uint64_t p = 0;
    std::string character;
    mpz_class degree;
    mpz_class constant;
    bool flagged = false;  // |c| > 1
};

/// All members of Upsilon_p(t) for every p | |G|, in (p, table) order.
std::vector<ScanRow> scan_table(const CharTable& t);

}  // namespace pconst
