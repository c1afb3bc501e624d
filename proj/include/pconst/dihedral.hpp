#pragma once

// Dihedral groups I2(n) of order 2n, n >= 3, as closed-form tables over
// Q(zeta_n).
//
// Classes: "1", "r^k" for 1 <= k <= n/2, then the reflections: one class "s"
// for n odd, two classes "s" and "sr" for n even. Characters: "1", "eps"
// (-1 on reflections), for n even also "rho_s" and "rho_sr" ((-1)^k on r^k,
// +1 on the named reflection class, -1 on the other), then
// psi_j(r^k) = zeta^jk + zeta^-jk for 1 <= j < n/2.

#include "pconst/char_table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pconst {

inline constexpr int kDihedralMaxN = 2000;

/// Throws std::invalid_argument unless 3 <= n <= kDihedralMaxN.
CharTable dihedral_table(int n);

/// "psi_j".
std::string psi_label(int j);

/// Throws std::invalid_argument unless p is prime and divides 2n.
std::vector<PConstReport> upsilon_dihedral(int n, std::uint64_t p);

struct DihedralPropResult {
    bool ok = false;
    std::vector<std::string> actual;     // nonlinear members, "label:c"
    std::vector<std::string> predicted;
};

/// Nonlinear members of Upsilon_p(I2(n)) against the prediction: psi_{n/3}
/// with c = -1 when p = 3 and 3 exactly divides 2n, nothing otherwise.
DihedralPropResult verify_dihedral_prop(int n, std::uint64_t p);

struct DihedralUpsilon2Result {
    bool ok = false;
    std::vector<std::string> actual;     // all members of Upsilon_2, "label:c"
    std::vector<std::string> predicted;
};

/// Upsilon_2(I2(n)) is {1, eps} with constants +1, -1 for n odd and only the
/// trivial character for n even.
DihedralUpsilon2Result verify_dihedral_upsilon2(int n);

}  // namespace pconst
