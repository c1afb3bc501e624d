#include "pconst/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pconst {

unsigned euler_phi(unsigned n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    unsigned result = n;
    unsigned m = n;
    for (unsigned q = 2; q * q <= m; ++q) {
        if (m % q != 0) continue;
        while (m % q == 0) m /= q;
        result -= result / q;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact quotient of a by a monic divisor b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("divide_exact: degree too small");
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const mpz_class c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return q;
}

}  // namespace

IntPoly cyclotomic_poly(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    IntPoly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = divide_exact(std::move(num), cyclotomic_poly(d));
    return num;
}

unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

namespace detail {

namespace {

using Table = std::vector<std::vector<std::int64_t>>;

Table build_reduction_table(unsigned n) {
    const unsigned phi = euler_phi(n);
    const IntPoly cyc = cyclotomic_poly(n);
    std::vector<std::int64_t> low(phi);
    for (unsigned i = 0; i < phi; ++i) low[i] = cyc[i].get_si();

    Table rows(n, std::vector<std::int64_t>(phi, 0));
    for (unsigned e = 0; e < n; ++e) {
        if (e < phi) {
            rows[e][e] = 1;
            continue;
        }
        // x * row(e-1), with x^phi replaced by -(low part of Phi_N)
        const auto& prev = rows[e - 1];
        const std::int64_t top = prev[phi - 1];
        auto& row = rows[e];
        for (unsigned i = phi; i-- > 1;) row[i] = prev[i - 1];
        row[0] = 0;
        for (unsigned i = 0; i < phi; ++i) row[i] -= top * low[i];
    }
    return rows;
}

}  // namespace

const std::vector<std::vector<std::int64_t>>& reduction_table(unsigned n) {
    thread_local std::unordered_map<unsigned, const Table*> local;
    if (auto it = local.find(n); it != local.end()) return *it->second;

    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<const Table>> shared;
    const Table* table = nullptr;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = shared[n];
        if (!slot) slot = std::make_unique<const Table>(build_reduction_table(n));
        table = slot.get();
    }
    local.emplace(n, table);
    return *table;
}

}  // namespace detail

namespace {

// Reduces sum c_e zeta^e (e arbitrary non-negative) to the power basis.
std::vector<mpq_class> reduce(unsigned n, const std::vector<mpq_class>& raw) {
    const auto& rows = detail::reduction_table(n);
    const unsigned phi = static_cast<unsigned>(rows.front().size());
    std::vector<mpq_class> out(phi, 0);
    for (std::size_t e = 0; e < raw.size(); ++e) {
        if (raw[e] == 0) continue;
        const std::size_t r = e % n;
        if (r < phi) {
            out[r] += raw[e];
            continue;
        }
        const auto& row = rows[r];
        for (unsigned i = 0; i < phi; ++i)
            if (row[i] != 0) out[i] += raw[e] * row[i];
    }
    return out;
}

}  // namespace

CycNum::CycNum() : conductor_(1), coeffs_(1, 0) {}

CycNum::CycNum(long value) : conductor_(1), coeffs_(1, value) {}

CycNum::CycNum(const mpq_class& value) : conductor_(1), coeffs_(1, value) {}

CycNum::CycNum(unsigned conductor, std::vector<mpq_class> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycNum CycNum::from_coeffs(unsigned conductor, std::vector<mpq_class> coeffs) {
    if (conductor == 0) throw std::invalid_argument("CycNum: conductor must be positive");
    return CycNum(conductor, reduce(conductor, coeffs));
}

CycNum CycNum::from_terms(unsigned conductor,
                          const std::vector<std::pair<long, mpq_class>>& terms) {
    if (conductor == 0) throw std::invalid_argument("CycNum: conductor must be positive");
    std::vector<mpq_class> raw(conductor, 0);
    const long n = conductor;
    for (const auto& [e, c] : terms) raw[static_cast<std::size_t>(((e % n) + n) % n)] += c;
    return CycNum(conductor, reduce(conductor, raw));
}

CycNum root_of_unity(unsigned n, long k) { return CycNum::from_terms(n, {{k, mpq_class(1)}}); }

CycNum CycNum::lifted(unsigned m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw std::invalid_argument("CycNum::lifted: conductor does not divide target");
    const unsigned step = m / conductor_;
    std::vector<mpq_class> raw(m, 0);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) raw[(e * step) % m] += coeffs_[e];
    return CycNum(m, reduce(m, raw));
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<mpq_class> CycNum::as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

std::optional<mpz_class> CycNum::as_rational_integer() const {
    auto q = as_rational();
    if (!q || q->get_den() != 1) return std::nullopt;
    return q->get_num();
}

CycNum CycNum::conj() const {
    if (conductor_ <= 2) return *this;
    std::vector<mpq_class> raw(conductor_, 0);
    for (std::size_t e = 0; e < coeffs_.size(); ++e)
        if (coeffs_[e] != 0) raw[(conductor_ - e) % conductor_] += coeffs_[e];
    return CycNum(conductor_, reduce(conductor_, raw));
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (conductor_ != o.conductor_) {
        const unsigned m = lcm_conductor(conductor_, o.conductor_);
        *this = lifted(m);
        return *this += o.lifted(m);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
    if (conductor_ != o.conductor_) {
        const unsigned m = lcm_conductor(conductor_, o.conductor_);
        *this = lifted(m);
        return *this *= o.lifted(m);
    }
    if (coeffs_.size() == 1) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    std::vector<mpq_class> raw(2 * coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            if (o.coeffs_[j] != 0) raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = reduce(conductor_, raw);
    return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    const unsigned m = lcm_conductor(a.conductor_, b.conductor_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::vector<std::pair<unsigned, mpq_class>> CycNum::terms() const {
    std::vector<std::pair<unsigned, mpq_class>> out;
    for (std::size_t e = 0; e < coeffs_.size(); ++e)
        if (coeffs_[e] != 0) out.emplace_back(static_cast<unsigned>(e), coeffs_[e]);
    return out;
}

std::string CycNum::str() const {
    if (auto q = as_rational()) return q->get_str();
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        const bool neg = c < 0;
        const mpq_class mag = neg ? mpq_class(-c) : c;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? '-' : '+');
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'z' << conductor_ << '^' << e;
    }
    return os.str();
}

}  // namespace pconst
