#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum is a polynomial in zeta_N of degree < phi(N) with rational
// coefficients, reduced modulo the N-th cyclotomic polynomial. The power
// basis makes the representation canonical at a fixed conductor; values of
// different conductors are compared and combined after lifting both to the
// lcm of their conductors. No automatic conductor reduction takes place.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pconst {

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<mpz_class>;

/// Euler's totient.
unsigned euler_phi(unsigned n);

/// The N-th cyclotomic polynomial, via x^N - 1 divided by Phi_d for all
/// proper divisors d of N. Monic, degree phi(N).
IntPoly cyclotomic_poly(unsigned n);

class CycNum {
public:
    /// Zero at conductor 1.
    CycNum();
    CycNum(long value);  // NOLINT(google-explicit-constructor)
    explicit CycNum(const mpq_class& value);

    /// Builds from power-basis coefficients at conductor N; the vector may be
    /// longer than phi(N) (it is reduced) or shorter (zero padded).
    static CycNum from_coeffs(unsigned conductor, std::vector<mpq_class> coeffs);

    /// Sum of c * zeta_N^e over the given (exponent, coefficient) terms.
    static CycNum from_terms(unsigned conductor,
                             const std::vector<std::pair<long, mpq_class>>& terms);

    unsigned conductor() const { return conductor_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    /// The same field element expressed at conductor M (N must divide M).
    CycNum lifted(unsigned m) const;

    bool is_zero() const;
    /// Integer value when the element is a rational integer.
    std::optional<mpz_class> as_rational_integer() const;
    std::optional<mpq_class> as_rational() const;

    /// Complex conjugate (zeta -> zeta^-1).
    CycNum conj() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Nonzero (exponent, coefficient) terms at this element's conductor.
    std::vector<std::pair<unsigned, mpq_class>> terms() const;

    /// Human-readable form, e.g. "2", "-1", "z5^1+z5^4".
    std::string str() const;

private:
    CycNum(unsigned conductor, std::vector<mpq_class> coeffs);

    unsigned conductor_;
    std::vector<mpq_class> coeffs_;  // length phi(conductor_)
};

/// zeta_N^(k mod N), reduced at conductor N.
CycNum root_of_unity(unsigned n, long k);

unsigned lcm_conductor(unsigned a, unsigned b);

namespace detail {

/// Power-basis images of zeta_N^e for 0 <= e < N; row e has phi(N) integer
/// entries. Cached process-wide, safe to call from any thread.
const std::vector<std::vector<std::int64_t>>& reduction_table(unsigned n);

}  // namespace detail

}  // namespace pconst
