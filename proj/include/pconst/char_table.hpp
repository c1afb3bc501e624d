#pragma once

// Generic character table container, exact validation, and the p-constant
// classifier.

#include "pconst/cyclotomic.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pconst {

/// Serial runs the simple reference path; Parallel runs the optimized
/// OpenMP kernel. Both must produce identical results.
enum class Exec { Serial, Parallel };

struct ClassInfo {
    std::string label;
    mpz_class size;
    std::uint64_t element_order = 1;
};

struct Irreducible {
    std::string label;
    std::vector<CycNum> values;  // values[0] is the degree
};

/// Classes come first with the identity at index 0; every irreducible holds
/// one value per class. Values may be stored at any conductor dividing
/// `conductor`.
struct CharTable {
    std::string name;
    mpz_class order;
    unsigned conductor = 1;
    std::vector<ClassInfo> classes;
    std::vector<Irreducible> irreducibles;

    std::size_t num_classes() const { return classes.size(); }
    std::size_t num_chars() const { return irreducibles.size(); }
    const CycNum& value(std::size_t chi, std::size_t cls) const { return irreducibles[chi].values[cls]; }
    /// Degree of an irreducible; throws if values[0] is not a positive integer.
    mpz_class degree(std::size_t chi) const;
    std::optional<std::size_t> find_char(const std::string& label) const;
    std::optional<std::size_t> find_class(const std::string& label) const;
};

/// Violations found by validate(); empty means the table is sound.
struct Validation {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every structural invariant: identity class, class sizes summing to
/// |G|, positive integer degrees, sum of squared degrees, exact row and
/// column orthogonality.
Validation validate(const CharTable& t, Exec exec = Exec::Parallel);

/// Throws std::runtime_error listing the violations unless the table validates.
void require_valid(const CharTable& t, Exec exec = Exec::Parallel);

bool is_prime(std::uint64_t n);
/// Exponent of p in n.
unsigned p_valuation(const mpz_class& n, std::uint64_t p);
std::vector<std::uint64_t> prime_divisors(const mpz_class& n);

struct SingularClasses {
    std::vector<std::size_t> indices;
    /// Set when p does not divide |G|; indices is then empty.
    bool p_not_dividing_order = false;
};

/// Classes whose element order is divisible by p.
SingularClasses p_singular_classes(const CharTable& t, std::uint64_t p);

enum class Verdict { NotConstant, Constant, DefectZero };

const char* verdict_name(Verdict v);

struct PConstReport {
    std::size_t index = 0;  // position in the table
    std::string label;
    mpz_class degree;
    unsigned p_defect = 0;
    Verdict verdict = Verdict::NotConstant;
    std::optional<mpz_class> constant;  // set unless NotConstant

    /// Member of the set of p-constant characters of non-zero p-defect.
    bool in_upsilon() const { return verdict == Verdict::Constant; }
};

/// One report per irreducible, in table order. Throws std::invalid_argument
/// when p does not divide |G|, and std::logic_error when a constant fails to
/// be a rational integer or a defect-zero mismatch is found.
std::vector<PConstReport> upsilon_p(const CharTable& t, std::uint64_t p, Exec exec = Exec::Parallel);

/// Indices of the reports that lie in Upsilon_p.
std::vector<std::size_t> upsilon_indices(const std::vector<PConstReport>& reports);

/// Characters of p-defect zero; asserts they coincide with the p-constant
/// characters whose constant is 0.
std::vector<std::size_t> defect_zero_set(const CharTable& t, std::uint64_t p);

/// Classes on which chi takes its degree.
std::vector<std::size_t> kernel_classes(const CharTable& t, std::size_t chi);
/// Classes of size 1.
std::vector<std::size_t> center_classes(const CharTable& t);
mpz_class classes_total_size(const CharTable& t, const std::vector<std::size_t>& cls);

enum class LinearCase { NotPConstant, KernelContainsSingular, InvolutionComplement };

struct LinearCharCheck {
    std::size_t index = 0;
    bool p_constant = false;         // by direct evaluation
    LinearCase predicted = LinearCase::NotPConstant;  // by the structural criterion
    bool consistent = false;
};

struct LinearPropReport {
    std::vector<LinearCharCheck> checks;
    bool ok() const;
};

/// For each linear character compares p-constancy by evaluation with the
/// structural criterion: c = +1 with every p-singular class in the kernel, or
/// p = 2, c = -1, kernel of index 2 and odd order.
LinearPropReport verify_linear_prop(const CharTable& t, std::uint64_t p);

/// For chi in Upsilon_p, chi != 1, and p not dividing |Z(G)|: every central
/// class lies in the kernel of chi. Returns the offending character indices.
std::vector<std::size_t> center_lemma_violations(const CharTable& t, std::uint64_t p);

/// Class and character labels "a x b"; sizes multiply, orders take the lcm,
/// values multiply.
CharTable direct_product(const CharTable& a, const CharTable& b);

struct DirectPropResult {
    bool ok = false;
    std::vector<std::string> actual;     // labels of Upsilon_p(a x b)
    std::vector<std::string> predicted;  // from the factor-wise rule
};

/// Brute-force Upsilon_p(a x b) against the factor rule: only the trivial
/// character when p divides both orders, otherwise psi (x) 1 for psi in
/// Upsilon_p of the factor whose order p divides.
DirectPropResult verify_direct_prop(const CharTable& a, const CharTable& b, std::uint64_t p);

}  // namespace pconst
