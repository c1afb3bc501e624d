#pragma once

// Complete monomial groups H wr Sym(n): classes, the star rim hook
// Murnaghan-Nakayama rule, full tables and the p-constant classification.
//
// H is given only through a validated character table whose class 0 is the
// identity and whose character 0 is trivial. Class and character indices of
// the wreath product are r-multipartitions of n, r = number of classes of H;
// component j of a class label collects the cycles whose cycle product lies
// in class j of H, component i of a character label belongs to the i-th
// irreducible of H.

#include "pconst/char_table.hpp"
#include "pconst/partitions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pconst {

inline constexpr std::size_t kWreathMaxClasses = 2500;

struct WreathClass {
    MultiPartition delta;
    mpz_class size;
    std::uint64_t element_order = 1;
};

/// Throws std::invalid_argument unless h validates with identity class and
/// trivial character at index 0.
void check_h_table(const CharTable& h);

/// All classes, identity ((1^n),∅,...) first.
std::vector<WreathClass> wreath_classes(const CharTable& h, int n);

/// Value of chi^gamma on the class delta.
CycNum star_mn_value(const CharTable& h, const MultiPartition& gamma, const MultiPartition& delta);

/// Same, removing the cycle lengths in the given (length, H-class) order.
CycNum star_mn_value_ordered(const CharTable& h, const MultiPartition& gamma,
                             const std::vector<std::pair<int, std::size_t>>& cycles);

/// n! prod_i d_i^|gamma^i| / prod_i (hook product of gamma^i).
mpz_class wreath_degree(const CharTable& h, const MultiPartition& gamma);

/// Full validated table, characters starting with ((n),∅,...).
/// Throws std::invalid_argument past kWreathMaxClasses and
/// std::runtime_error if the assembled table fails validation.
CharTable wreath_char_table(const CharTable& h, int n, Exec exec = Exec::Parallel);

/// Type B_n = C2 wr Sym(n).
CharTable bn_char_table(int n, Exec exec = Exec::Parallel);

/// Throws std::invalid_argument unless p is prime and divides |H|^n n!.
std::vector<PConstReport> upsilon_wreath(const CharTable& h, int n, std::uint64_t p);

struct WreathTheoremResult {
    bool ok = false;
    std::vector<std::string> actual;
    std::vector<std::string> predicted;
};

/// Brute-force Upsilon_p(H wr Sym(n)) against the prediction: the inflations
/// (gamma,∅,...) of Upsilon_p(Sym(n)) when p does not divide |H|, and only
/// the trivial character when it does.
WreathTheoremResult verify_wreath_theorem(const CharTable& h, int n, std::uint64_t p);

/// Same, on an already built wreath_char_table(h, n).
WreathTheoremResult verify_wreath_theorem(const CharTable& h, const CharTable& wreath, int n, std::uint64_t p);

}  // namespace pconst
