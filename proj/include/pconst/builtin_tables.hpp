#pragma once

#include "pconst/char_table.hpp"

#include <string>

namespace pconst {

/// C_n with classes g^k and characters chi_j(g^k) = zeta_n^(jk).
CharTable cyclic_table(unsigned n);

/// Quaternion group: classes 1, -1, i, j, k.
CharTable q8_table();

/// C2 x C2.
CharTable klein_table();

/// One of "C2", "C3", "C4", "C2xC2", "Sym3", "Q8", or "C<n>" for any n >= 1.
/// Throws std::invalid_argument for an unknown name.
CharTable builtin_table(const std::string& name);

}  // namespace pconst
