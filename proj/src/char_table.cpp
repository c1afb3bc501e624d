#include "pconst/char_table.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pconst {

mpz_class CharTable::degree(std::size_t chi) const {
    auto d = irreducibles.at(chi).values.at(0).as_rational_integer();
    if (!d || *d <= 0) throw std::runtime_error("character " + irreducibles[chi].label + " has no positive integer degree");
    return *d;
}

std::optional<std::size_t> CharTable::find_char(const std::string& label) const {
    for (std::size_t i = 0; i < irreducibles.size(); ++i)
        if (irreducibles[i].label == label) return i;
    return std::nullopt;
}

std::optional<std::size_t> CharTable::find_class(const std::string& label) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].label == label) return i;
    return std::nullopt;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned p_valuation(const mpz_class& n, std::uint64_t p) {
    if (n == 0) throw std::invalid_argument("p_valuation of zero");
    mpz_class m = abs(n);
    unsigned v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        m /= static_cast<unsigned long>(p);
        ++v;
    }
    return v;
}

std::vector<std::uint64_t> prime_divisors(const mpz_class& n) {
    std::vector<std::uint64_t> out;
    mpz_class m = abs(n);
    for (std::uint64_t p = 2; m > 1; ++p) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out.push_back(p);
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= static_cast<unsigned long>(p);
        }
        if (p > 1000000) throw std::runtime_error("prime_divisors: order has a large prime factor");
    }
    return out;
}

namespace {

using i128 = __int128;

// Power-basis coefficients at the table conductor, integral and small. Values
// of finite group characters are algebraic integers, so this covers every
// valid table; anything else falls back to CycNum arithmetic.
struct IntegralTable {
    bool usable = false;
    unsigned conductor = 1;
    unsigned phi = 1;
    std::vector<std::vector<std::int64_t>> values;       // [chi * k + c] -> coeffs
    std::vector<std::vector<std::int64_t>> conj_values;  // same, conjugated
    std::vector<std::int64_t> sizes;
    std::int64_t order = 0;
};

std::optional<std::vector<std::int64_t>> to_integral(const CycNum& v, unsigned n) {
    const CycNum l = v.lifted(n);
    std::vector<std::int64_t> out;
    out.reserve(l.coeffs().size());
    for (const auto& c : l.coeffs()) {
        if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
        const long x = c.get_num().get_si();
        if (x > (1L << 40) || x < -(1L << 40)) return std::nullopt;
        out.push_back(x);
    }
    return out;
}

IntegralTable make_integral(const CharTable& t) {
    IntegralTable it;
    if (!t.order.fits_slong_p()) return it;
    it.conductor = t.conductor;
    it.phi = euler_phi(t.conductor);
    it.order = t.order.get_si();
    const std::size_t k = t.num_classes();
    for (const auto& c : t.classes) {
        if (!c.size.fits_slong_p()) return it;
        it.sizes.push_back(c.size.get_si());
    }
    it.values.resize(t.num_chars() * k);
    it.conj_values.resize(t.num_chars() * k);
    for (std::size_t a = 0; a < t.num_chars(); ++a)
        for (std::size_t c = 0; c < k; ++c) {
            const CycNum& v = t.value(a, c);
            if (t.conductor % v.conductor() != 0) return it;
            auto iv = to_integral(v, t.conductor);
            auto ic = to_integral(v.conj(), t.conductor);
            if (!iv || !ic) return it;
            it.values[a * k + c] = std::move(*iv);
            it.conj_values[a * k + c] = std::move(*ic);
        }
    it.usable = true;
    return it;
}

// acc += w * (x * y) as unreduced polynomial; false on overflow.
bool accumulate(std::vector<i128>& acc, i128 w, const std::vector<std::int64_t>& x,
                const std::vector<std::int64_t>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        i128 wx;
        if (__builtin_mul_overflow(w, static_cast<i128>(x[i]), &wx)) return false;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            i128 term;
            if (__builtin_mul_overflow(wx, static_cast<i128>(y[j]), &term)) return false;
            if (__builtin_add_overflow(acc[i + j], term, &acc[i + j])) return false;
        }
    }
    return true;
}

// Reduces acc and checks it equals the rational integer `expected`.
// Returns 0 = equal, 1 = different, 2 = overflow.
int reduced_equals(const std::vector<i128>& acc, unsigned n, i128 expected) {
    const auto& rows = detail::reduction_table(n);
    const std::size_t phi = rows.front().size();
    std::vector<i128> out(phi, 0);
    for (std::size_t e = 0; e < acc.size(); ++e) {
        if (acc[e] == 0) continue;
        const auto& row = rows[e % n];
        for (std::size_t i = 0; i < phi; ++i) {
            if (row[i] == 0) continue;
            i128 term;
            if (__builtin_mul_overflow(acc[e], static_cast<i128>(row[i]), &term)) return 2;
            if (__builtin_add_overflow(out[i], term, &out[i])) return 2;
        }
    }
    if (out[0] != expected) return 1;
    for (std::size_t i = 1; i < phi; ++i)
        if (out[i] != 0) return 1;
    return 0;
}

std::string orth_row_msg(const CharTable& t, std::size_t a, std::size_t b) {
    return "row orthogonality fails for (" + t.irreducibles[a].label + ", " + t.irreducibles[b].label + ")";
}

std::string orth_col_msg(const CharTable& t, std::size_t c, std::size_t d) {
    return "column orthogonality fails for (" + t.classes[c].label + ", " + t.classes[d].label + ")";
}

// Reference: direct CycNum sums, one pair at a time.
void orthogonality_reference(const CharTable& t, std::vector<std::string>& out) {
    const std::size_t k = t.num_classes();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            CycNum s;
            for (std::size_t c = 0; c < k; ++c)
                s += CycNum(mpq_class(t.classes[c].size)) * t.value(a, c) * t.value(b, c).conj();
            if (s != CycNum(mpq_class(a == b ? t.order : mpz_class(0)))) out.push_back(orth_row_msg(t, a, b));
        }
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = c; d < k; ++d) {
            CycNum s;
            for (std::size_t a = 0; a < k; ++a) s += t.value(a, c) * t.value(a, d).conj();
            mpq_class expected = c == d ? mpq_class(t.order, t.classes[c].size) : mpq_class(0);
            expected.canonicalize();
            if (s != CycNum(expected)) out.push_back(orth_col_msg(t, c, d));
        }
}

// Fast path: integral coefficients, unreduced accumulation, OpenMP over pairs.
// Returns false if the integral representation is unavailable or overflows.
bool orthogonality_parallel(const CharTable& t, std::vector<std::string>& out) {
    const IntegralTable it = make_integral(t);
    if (!it.usable) return false;
    const std::size_t k = t.num_classes();
    const std::size_t width = 2 * it.phi - 1;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) pairs.emplace_back(a, b);

    // 0 ok, 1 mismatch, 2 overflow; first half rows, second half columns
    std::vector<int> row_status(pairs.size(), 0), col_status(pairs.size(), 0);
    const long np = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long idx = 0; idx < np; ++idx) {
        const auto [a, b] = pairs[static_cast<std::size_t>(idx)];
        std::vector<i128> acc(width, 0);
        bool fine = true;
        for (std::size_t c = 0; c < k && fine; ++c)
            fine = accumulate(acc, it.sizes[c], it.values[a * k + c], it.conj_values[b * k + c]);
        row_status[idx] = fine ? reduced_equals(acc, it.conductor, a == b ? it.order : 0) : 2;

        // columns: reuse (a, b) as class indices c, d
        std::fill(acc.begin(), acc.end(), 0);
        fine = true;
        for (std::size_t x = 0; x < k && fine; ++x)
            fine = accumulate(acc, 1, it.values[x * k + a], it.conj_values[x * k + b]);
        if (!fine) {
            col_status[idx] = 2;
        } else if (a == b) {
            if (it.order % it.sizes[a] != 0) {
                col_status[idx] = 1;
            } else {
                col_status[idx] = reduced_equals(acc, it.conductor, it.order / it.sizes[a]);
            }
        } else {
            col_status[idx] = reduced_equals(acc, it.conductor, 0);
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (row_status[i] == 2 || col_status[i] == 2) return false;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (row_status[i] == 1) out.push_back(orth_row_msg(t, pairs[i].first, pairs[i].second));
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (col_status[i] == 1) out.push_back(orth_col_msg(t, pairs[i].first, pairs[i].second));
    return true;
}

}  // namespace

Validation validate(const CharTable& t, Exec exec) {
    Validation v;
    auto& out = v.violations;
    const std::size_t k = t.num_classes();
    if (k == 0) {
        out.push_back("table has no classes");
        return v;
    }
    if (t.num_chars() != k) out.push_back("number of irreducibles differs from number of classes");
    if (t.order <= 0) out.push_back("group order must be positive");
    if (t.conductor == 0) {
        out.push_back("conductor must be positive");
        return v;
    }
    if (t.classes[0].size != 1 || t.classes[0].element_order != 1)
        out.push_back("class 0 must be the identity (size 1, element order 1)");
    mpz_class total = 0;
    for (const auto& c : t.classes) {
        if (c.size <= 0) out.push_back("class " + c.label + " has non-positive size");
        else if (t.order > 0 && t.order % c.size != 0) out.push_back("class " + c.label + " size does not divide |G|");
        if (c.element_order == 0) out.push_back("class " + c.label + " has element order 0");
        total += c.size;
    }
    if (total != t.order) out.push_back("class sizes sum to " + total.get_str() + ", expected " + t.order.get_str());

    bool shape_ok = t.num_chars() == k;
    mpz_class sum_sq = 0;
    for (const auto& chi : t.irreducibles) {
        if (chi.values.size() != k) {
            out.push_back("character " + chi.label + " has wrong number of values");
            shape_ok = false;
            continue;
        }
        for (const auto& val : chi.values)
            if (t.conductor % val.conductor() != 0) {
                out.push_back("character " + chi.label + " has a value outside the table conductor");
                shape_ok = false;
                break;
            }
        auto d = chi.values[0].as_rational_integer();
        if (!d || *d <= 0) {
            out.push_back("character " + chi.label + " degree is not a positive integer");
            shape_ok = false;
            continue;
        }
        sum_sq += *d * *d;
    }
    if (shape_ok && sum_sq != t.order)
        out.push_back("sum of squared degrees is " + sum_sq.get_str() + ", expected " + t.order.get_str());
    if (!shape_ok || t.order <= 0) return v;
    for (const auto& c : t.classes)
        if (c.size <= 0) return v;

    if (exec == Exec::Serial || !orthogonality_parallel(t, out)) orthogonality_reference(t, out);
    return v;
}

void require_valid(const CharTable& t, Exec exec) {
    const Validation v = validate(t, exec);
    if (v.ok()) return;
    std::ostringstream os;
    os << "table " << t.name << " failed validation:";
    for (const auto& s : v.violations) os << "\n  " << s;
    throw std::runtime_error(os.str());
}

SingularClasses p_singular_classes(const CharTable& t, std::uint64_t p) {
    SingularClasses s;
    if (!mpz_divisible_ui_p(t.order.get_mpz_t(), p)) {
        s.p_not_dividing_order = true;
        return s;
    }
    for (std::size_t i = 0; i < t.num_classes(); ++i)
        if (t.classes[i].element_order % p == 0) s.indices.push_back(i);
    return s;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::NotConstant: return "not-p-constant";
        case Verdict::Constant: return "p-constant";
        case Verdict::DefectZero: return "defect-zero";
    }
    return "?";
}

std::vector<PConstReport> upsilon_p(const CharTable& t, std::uint64_t p, Exec exec) {
    if (!is_prime(p)) throw std::invalid_argument("upsilon_p: " + std::to_string(p) + " is not prime");
    const SingularClasses sing = p_singular_classes(t, p);
    if (sing.p_not_dividing_order)
        throw std::invalid_argument("upsilon_p: p=" + std::to_string(p) + " does not divide |G|=" + t.order.get_str());
    if (sing.indices.empty()) throw std::logic_error("upsilon_p: p divides |G| but no class has order divisible by p");
    const unsigned vg = p_valuation(t.order, p);

    const std::size_t nc = t.num_chars();
    std::vector<PConstReport> reports(nc);
    std::vector<std::string> errors(nc);
    const bool parallel = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long li = 0; li < static_cast<long>(nc); ++li) {
        const auto i = static_cast<std::size_t>(li);
        auto& r = reports[i];
        const auto& chi = t.irreducibles[i];
        r.index = i;
        r.label = chi.label;
        auto deg = chi.values[0].as_rational_integer();
        if (!deg || *deg <= 0) {
            errors[i] = "character " + chi.label + " has no positive integer degree";
            continue;
        }
        r.degree = *deg;
        const unsigned vd = p_valuation(r.degree, p);
        r.p_defect = vg >= vd ? vg - vd : 0;
        const CycNum& first = chi.values[sing.indices[0]];
        bool constant = true;
        for (std::size_t j = 1; j < sing.indices.size() && constant; ++j)
            constant = chi.values[sing.indices[j]] == first;
        if (constant) {
            auto c = first.as_rational_integer();
            if (!c) {
                errors[i] = "constant of " + chi.label + " is not a rational integer: " + first.str();
                continue;
            }
            r.constant = *c;
            r.verdict = *c == 0 ? Verdict::DefectZero : Verdict::Constant;
        }
        const bool defect_zero = r.p_defect == 0;
        if (defect_zero != (r.verdict == Verdict::DefectZero))
            errors[i] = "defect-zero mismatch for " + chi.label + ": defect " + std::to_string(r.p_defect) +
                        ", verdict " + verdict_name(r.verdict);
    }
    for (const auto& e : errors)
        if (!e.empty()) throw std::logic_error("upsilon_p: " + e);
    return reports;
}

std::vector<std::size_t> upsilon_indices(const std::vector<PConstReport>& reports) {
    std::vector<std::size_t> out;
    for (const auto& r : reports)
        if (r.in_upsilon()) out.push_back(r.index);
    return out;
}

std::vector<std::size_t> defect_zero_set(const CharTable& t, std::uint64_t p) {
    const unsigned vg = p_valuation(t.order, p);
    std::vector<std::size_t> by_degree;
    for (std::size_t i = 0; i < t.num_chars(); ++i)
        if (p_valuation(t.degree(i), p) >= vg) by_degree.push_back(i);
    std::vector<std::size_t> by_value;
    for (const auto& r : upsilon_p(t, p))
        if (r.verdict == Verdict::DefectZero) by_value.push_back(r.index);
    if (by_degree != by_value) throw std::logic_error("defect_zero_set: degree and value criteria disagree on " + t.name);
    return by_degree;
}

std::vector<std::size_t> kernel_classes(const CharTable& t, std::size_t chi) {
    std::vector<std::size_t> out;
    const CycNum& deg = t.value(chi, 0);
    for (std::size_t c = 0; c < t.num_classes(); ++c)
        if (t.value(chi, c) == deg) out.push_back(c);
    return out;
}

std::vector<std::size_t> center_classes(const CharTable& t) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < t.num_classes(); ++c)
        if (t.classes[c].size == 1) out.push_back(c);
    return out;
}

mpz_class classes_total_size(const CharTable& t, const std::vector<std::size_t>& cls) {
    mpz_class s = 0;
    for (auto c : cls) s += t.classes[c].size;
    return s;
}

bool LinearPropReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const LinearCharCheck& c) { return c.consistent; });
}

LinearPropReport verify_linear_prop(const CharTable& t, std::uint64_t p) {
    LinearPropReport rep;
    const auto reports = upsilon_p(t, p);
    const auto sing = p_singular_classes(t, p).indices;
    for (std::size_t i = 0; i < t.num_chars(); ++i) {
        if (t.degree(i) != 1) continue;
        LinearCharCheck c;
        c.index = i;
        c.p_constant = reports[i].verdict != Verdict::NotConstant;
        const auto ker = kernel_classes(t, i);
        const bool sing_in_ker =
            std::all_of(sing.begin(), sing.end(), [&](std::size_t s) { return std::binary_search(ker.begin(), ker.end(), s); });
        const mpz_class ker_order = classes_total_size(t, ker);
        long expected_c = 0;
        if (sing_in_ker) {
            c.predicted = LinearCase::KernelContainsSingular;
            expected_c = 1;
        } else if (p == 2 && t.order == 2 * ker_order && ker_order % 2 == 1) {
            c.predicted = LinearCase::InvolutionComplement;
            expected_c = -1;
        }
        const bool predicted_constant = c.predicted != LinearCase::NotPConstant;
        c.consistent = predicted_constant == c.p_constant &&
                       (!predicted_constant || (reports[i].constant && *reports[i].constant == expected_c));
        rep.checks.push_back(c);
    }
    return rep;
}

namespace {

std::optional<std::size_t> trivial_char(const CharTable& t) {
    for (std::size_t i = 0; i < t.num_chars(); ++i) {
        const auto& vals = t.irreducibles[i].values;
        if (std::all_of(vals.begin(), vals.end(), [](const CycNum& v) { return v == CycNum(1); })) return i;
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::size_t> center_lemma_violations(const CharTable& t, std::uint64_t p) {
    std::vector<std::size_t> out;
    const auto z = center_classes(t);
    if (z.size() % p == 0) return out;
    const auto triv = trivial_char(t);
    for (const auto& r : upsilon_p(t, p)) {
        if (!r.in_upsilon() || (triv && r.index == *triv)) continue;
        const auto ker = kernel_classes(t, r.index);
        for (auto c : z)
            if (!std::binary_search(ker.begin(), ker.end(), c)) {
                out.push_back(r.index);
                break;
            }
    }
    return out;
}

CharTable direct_product(const CharTable& a, const CharTable& b) {
    CharTable t;
    t.name = a.name + " x " + b.name;
    t.order = a.order * b.order;
    t.conductor = lcm_conductor(a.conductor, b.conductor);
    for (const auto& ca : a.classes)
        for (const auto& cb : b.classes)
            t.classes.push_back({ca.label + " x " + cb.label, ca.size * cb.size, std::lcm(ca.element_order, cb.element_order)});
    for (const auto& xa : a.irreducibles)
        for (const auto& xb : b.irreducibles) {
            Irreducible chi;
            chi.label = xa.label + " x " + xb.label;
            for (const auto& va : xa.values)
                for (const auto& vb : xb.values) chi.values.push_back(va * vb);
            t.irreducibles.push_back(std::move(chi));
        }
    require_valid(t);
    return t;
}

DirectPropResult verify_direct_prop(const CharTable& a, const CharTable& b, std::uint64_t p) {
    const CharTable g = direct_product(a, b);
    DirectPropResult res;
    for (const auto& r : upsilon_p(g, p))
        if (r.in_upsilon()) res.actual.push_back(r.label);

    const bool pa = mpz_divisible_ui_p(a.order.get_mpz_t(), p);
    const bool pb = mpz_divisible_ui_p(b.order.get_mpz_t(), p);
    const auto ta = trivial_char(a), tb = trivial_char(b);
    if (!ta || !tb) throw std::invalid_argument("verify_direct_prop: factor without a trivial character");
    if (pa && pb) {
        res.predicted.push_back(a.irreducibles[*ta].label + " x " + b.irreducibles[*tb].label);
    } else if (pa) {
        for (const auto& r : upsilon_p(a, p))
            if (r.in_upsilon()) res.predicted.push_back(r.label + " x " + b.irreducibles[*tb].label);
    } else if (pb) {
        for (const auto& r : upsilon_p(b, p))
            if (r.in_upsilon()) res.predicted.push_back(a.irreducibles[*ta].label + " x " + r.label);
    } else {
        throw std::invalid_argument("verify_direct_prop: p divides neither factor");
    }
    std::sort(res.actual.begin(), res.actual.end());
    std::sort(res.predicted.begin(), res.predicted.end());
    res.ok = res.actual == res.predicted;
    return res;
}

}  // namespace pconst
