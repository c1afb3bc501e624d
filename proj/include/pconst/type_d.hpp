#pragma once

// Type D_n as the index-2 subgroup of B_n with an even number of sign
// changes.
//
// A B_n class (alpha, beta) meets D_n when beta has even length; it splits
// into two D_n classes exactly when beta is empty and every part of alpha is
// even. chi^(alpha,beta) and chi^(beta,alpha) restrict to the same
// irreducible when alpha != beta; chi^(lambda,lambda) splits into a pair.
//
// On a split class pair, the two halves of a split character pair differ by
// +-2^l(mu) chi_lambda(mu), where alpha = 2*mu and chi_lambda is the Sym(n/2)
// character; each half is (B_n value +- difference) / 2. Which member of a
// pair is called "+" is a labelling choice; SplitLabels picks it.

#include "pconst/char_table.hpp"
#include "pconst/partitions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pconst {

inline constexpr int kDnMaxN = 10;

enum class SplitTag { None, Plus, Minus };

struct DnClass {
    MultiPartition base;  // the B_n class (alpha, beta)
    SplitTag tag = SplitTag::None;
    mpz_class size;
    std::uint64_t element_order = 1;
    std::string label() const;
};

/// Complete class list of D_n, n >= 2, in B_n class order with split pairs
/// adjacent (+ before -).
std::vector<DnClass> dn_classes(int n);

struct SplitLabels {
    /// Exchange the "+" and "-" names of every split class.
    bool swap_classes = false;
    /// Exchange the "+" and "-" names of every split character.
    bool swap_characters = false;
};

/// Full validated table. Character labels: "[alpha;beta]" for the common
/// restriction of chi^(alpha,beta) and chi^(beta,alpha) (the representative
/// listed first in B_n order), "[lambda;lambda]+" / "[lambda;lambda]-" for
/// split pairs. Throws std::invalid_argument outside 2..kDnMaxN.
CharTable dn_char_table(int n, SplitLabels labels = {});

/// Same, from an already built bn_char_table(n).
CharTable dn_char_table(const CharTable& bn, int n, SplitLabels labels = {});

/// Character label with any trailing split tag removed.
std::string strip_split_tag(const std::string& label);

/// Throws std::invalid_argument unless p is prime and divides 2^(n-1) n!.
std::vector<PConstReport> upsilon_dn(int n, std::uint64_t p, SplitLabels labels = {});

struct DnPropResult {
    bool ok = false;
    std::vector<std::string> actual;     // Upsilon_p(D_n), split tags stripped
    std::vector<std::string> predicted;  // irreducible restrictions of Upsilon_p(B_n)
};

/// Upsilon_p(D_n) against the restrictions of the members of Upsilon_p(B_n).
DnPropResult verify_dn_prop(int n, std::uint64_t p, SplitLabels labels = {});

/// Same, on already built B_n and D_n tables.
DnPropResult verify_dn_prop(const CharTable& bn, const CharTable& dn, std::uint64_t p);

}  // namespace pconst
