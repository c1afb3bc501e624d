#pragma once

// Frobenius groups V x| H with kernel V = F_p^d and a fixed-point-free
// complement H given by generating matrices. H acts on column vectors.
//
// The complement's character table is input data. Each complement element is
// matched to a table class through the class map: a rule names a table class
// and either lists representatives (any conjugate matches) or gives the
// element order and trace mod p. Matrix conjugacy classes must then agree
// with the table's class sizes and element orders.

#include "pconst/char_table.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pconst {

inline constexpr std::size_t kMaxComplementOrder = 20000;
inline constexpr std::uint64_t kMaxKernelOrder = 1000000;

/// Row-major d x d matrix with entries in 0..p-1.
using Matrix = std::vector<int>;

struct MatrixGroupSpec {
    unsigned p = 2;
    unsigned d = 1;
    std::vector<Matrix> generators;
};

/// All elements of the generated group, identity first, in breadth-first
/// order. Throws std::invalid_argument for malformed or singular
/// generators, past kMaxComplementOrder, or when some nonidentity element
/// fixes a nonzero vector.
std::vector<Matrix> close_and_check(const MatrixGroupSpec& spec);

struct ClassRule {
    std::string class_label;
    std::optional<std::uint64_t> order;
    std::optional<int> trace;        // mod p
    std::vector<Matrix> representatives;
};

struct FrobeniusSpec {
    std::string name;
    MatrixGroupSpec complement;
    CharTable complement_table;
    std::vector<ClassRule> class_map;
};

/// Classes: "1", one class "v[x,y,...]" per H-orbit on nonzero vectors
/// (named by its least vector), then the nontrivial complement classes under
/// their table labels. Characters: inflations under the complement labels,
/// then "ind[a,...]" induced from the linear character
/// v -> zeta_p^(a.v) of V, one per H-orbit of nonzero a. Throws
/// std::invalid_argument when the class map is ambiguous or inconsistent and
/// std::runtime_error when the table fails validation.
CharTable frobenius_table(const FrobeniusSpec& spec, Exec exec = Exec::Parallel);

/// Least (a, b) in lexicographic order with a^2 + b^2 + 1 = 0 mod p.
std::pair<int, int> gp_parameters(unsigned p);

/// V x| Q8 with Phi(i) = [[a,b],[b,-a]], Phi(j) = [[0,-1],[1,0]] over F_p,
/// p odd, against the built-in Q8 table.
FrobeniusSpec build_Gp(unsigned p);

struct Q8LemmaResult {
    bool ok = false;
    std::pair<int, int> ab;
    mpz_class order;
    std::vector<std::uint64_t> element_orders;
    std::optional<mpz_class> constant;  // of the degree-2 character, when p-constant
    std::size_t kernel_orbits = 0;
};

/// G(p) builds and validates, its degree-2 character is p-constant with
/// c = +2, and the element orders are exactly {1, 2, 4, p}.
Q8LemmaResult verify_q8_lemma(unsigned p);

struct ExampleResult {
    bool ok = false;
    mpz_class order;
    std::size_t p_singular_classes = 0;
    std::vector<std::string> members;     // "label:degree:c"
    std::vector<std::string> mismatches;
};

/// Upsilon_p(G) = Irr(G), with c = chi(1) for inflated characters and c = -1
/// for the induced ones, where p is the kernel characteristic.
ExampleResult verify_frobenius_example(const FrobeniusSpec& spec);

/// {"name", "p", "d", "generators": [[[...], ...], ...],
///  "complement_table": table JSON,
///  "class_map": [{"class_label", "order", "trace", "representatives"}]}
/// with order/trace or representatives optional per rule.
FrobeniusSpec frobenius_spec_from_json(const nlohmann::json& j);
nlohmann::json frobenius_spec_to_json(const FrobeniusSpec& spec);
FrobeniusSpec load_frobenius_spec(const std::string& path);

}  // namespace pconst
