#pragma once

// Characters of Sym(n) by the Murnaghan-Nakayama rule.

#include "pconst/char_table.hpp"
#include "pconst/partitions.hpp"

#include <cstdint>
#include <vector>

namespace pconst {

/// Largest n accepted by sym_char_table.
inline constexpr int kSymTableMaxN = 16;

/// chi_lambda(mu), peeling the parts of mu largest first.
/// Throws std::invalid_argument when |lambda| != |mu|.
long long mn_value(const Partition& lambda, const Partition& mu);

/// chi_lambda at the class with the given cycle lengths, peeled in exactly
/// the given order. The result does not depend on the order.
long long mn_value_ordered(const Partition& lambda, const std::vector<int>& cycle_lengths);

/// Full table of Sym(n): characters in reverse lexicographic order of
/// lambda, classes in lexicographic order of mu (identity first).
/// Serial evaluates every cell independently; Parallel shares a memo per
/// class column and spreads columns over OpenMP threads.
CharTable sym_char_table(int n, Exec exec = Exec::Parallel);

/// Classifies every chi_lambda of Sym(n) by evaluation on the p-singular
/// classes. Throws std::invalid_argument unless p is prime and p <= n.
std::vector<PConstReport> upsilon_sym_bruteforce(int n, std::uint64_t p);

/// Predicted index set of Upsilon_p(Sym(m)): the trivial character, the sign
/// character when m is p or p+1, and the non-linear shapes listed by the
/// type-A classification (written for Sym(m), i.e. rank m-1). Characters of
/// p-defect zero are excluded. Returned in table order.
std::vector<Partition> upsilon_sym_formula(int m, std::uint64_t p);

}  // namespace pconst
