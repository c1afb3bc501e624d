#include "pconst/monomial.hpp"

#include "pconst/builtin_tables.hpp"
#include "pconst/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace pconst {

void check_h_table(const CharTable& h) {
    const Validation v = validate(h);
    if (!v.ok()) throw std::invalid_argument("base table " + h.name + " is invalid: " + v.violations.front());
    for (const auto& val : h.irreducibles[0].values)
        if (val != CycNum(1)) throw std::invalid_argument("base table " + h.name + ": character 0 must be trivial");
}

namespace {

using Cycle = std::pair<int, std::size_t>;  // (length, H-class)

std::vector<Cycle> canonical_cycles(const MultiPartition& delta) {
    std::vector<Cycle> out;
    for (std::size_t j = 0; j < delta.size(); ++j)
        for (int k : delta[j].parts()) out.emplace_back(k, j);
    return out;
}

// Memoized star rim hook recursion for a fixed cycle sequence; as for Sym(n),
// the weight of a state fixes the recursion depth.
class StarEvaluator {
public:
    StarEvaluator(const CharTable& h, std::vector<Cycle> cycles) : h_(h), cycles_(std::move(cycles)) {
        for (const auto& c : cycles_) total_ += c.first;
    }

    CycNum operator()(const MultiPartition& gamma) { return eval(gamma); }

private:
    CycNum eval(const MultiPartition& gamma) {
        const int w = gamma.weight();
        if (w == 0) return CycNum(1);
        if (auto it = memo_.find(gamma); it != memo_.end()) return it->second;
        int consumed = total_ - w;
        std::size_t depth = 0;
        while (consumed > 0) consumed -= cycles_[depth++].first;
        const auto [k, j] = cycles_[depth];

        CycNum v;
        MultiPartition next = gamma;
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            const CycNum& psi = h_.value(i, j);
            if (psi.is_zero()) continue;
            for (const auto& rh : rim_hooks(gamma[i], k)) {
                next.mutable_components()[i] = rh.remaining;
                CycNum term = eval(next);
                if (term.is_zero()) continue;
                term *= psi;
                if (rh.sign < 0) term = -term;
                v += term;
            }
            next.mutable_components()[i] = gamma[i];
        }
        memo_.emplace(gamma, v);
        return v;
    }

    const CharTable& h_;
    std::vector<Cycle> cycles_;
    int total_ = 0;
    std::unordered_map<MultiPartition, CycNum, MultiPartitionHash> memo_;
};

}  // namespace

std::vector<WreathClass> wreath_classes(const CharTable& h, int n) {
    if (n < 1) throw std::invalid_argument("wreath_classes: n must be positive");
    const std::size_t r = h.num_classes();
    std::vector<mpz_class> cent(r);
    for (std::size_t j = 0; j < r; ++j) cent[j] = h.order / h.classes[j].size;
    const mpz_class order = [&]() -> mpz_class {
        mpz_class o;
        mpz_pow_ui(o.get_mpz_t(), h.order.get_mpz_t(), static_cast<unsigned long>(n));
        return o * factorial(static_cast<unsigned>(n));
    }();

    std::vector<WreathClass> out;
    for (auto& delta : enumerate_multipartitions(n, static_cast<int>(r), false)) {
        mpz_class z = 1;
        std::uint64_t ord = 1;
        for (std::size_t j = 0; j < r; ++j) {
            const auto m = delta[j].multiplicities();
            for (std::size_t i = 1; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                mpz_class pw;
                mpz_pow_ui(pw.get_mpz_t(), mpz_class(static_cast<unsigned long>(i) * cent[j]).get_mpz_t(),
                           static_cast<unsigned long>(m[i]));
                z *= pw * factorial(static_cast<unsigned>(m[i]));
                ord = std::lcm(ord, static_cast<std::uint64_t>(i) * h.classes[j].element_order);
            }
        }
        out.push_back({std::move(delta), order / z, ord});
    }
    return out;
}

CycNum star_mn_value_ordered(const CharTable& h, const MultiPartition& gamma, const std::vector<Cycle>& cycles) {
    int total = 0;
    for (const auto& [k, j] : cycles) {
        if (k <= 0 || j >= h.num_classes()) throw std::invalid_argument("star_mn_value: bad cycle");
        total += k;
    }
    if (gamma.size() != h.num_chars()) throw std::invalid_argument("star_mn_value: gamma has wrong number of components");
    if (gamma.weight() != total) throw std::invalid_argument("star_mn_value: weight mismatch");
    return StarEvaluator(h, cycles)(gamma);
}

CycNum star_mn_value(const CharTable& h, const MultiPartition& gamma, const MultiPartition& delta) {
    if (delta.size() != h.num_classes()) throw std::invalid_argument("star_mn_value: delta has wrong number of components");
    return star_mn_value_ordered(h, gamma, canonical_cycles(delta));
}

mpz_class wreath_degree(const CharTable& h, const MultiPartition& gamma) {
    mpz_class num = factorial(static_cast<unsigned>(gamma.weight()));
    mpz_class den = 1;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), h.degree(i).get_mpz_t(), static_cast<unsigned long>(gamma[i].weight()));
        num *= pw;
        for (int hl : hook_lengths(gamma[i])) den *= hl;
    }
    return num / den;
}

CharTable wreath_char_table(const CharTable& h, int n, Exec exec) {
    check_h_table(h);
    const auto classes = wreath_classes(h, n);
    if (classes.size() > kWreathMaxClasses)
        throw std::invalid_argument("wreath_char_table: " + std::to_string(classes.size()) + " classes exceed the bound " +
                                    std::to_string(kWreathMaxClasses));
    const auto chars = enumerate_multipartitions(n, static_cast<int>(h.num_chars()), true);
    const std::size_t k = classes.size();

    CharTable t;
    t.name = h.name + " wr Sym" + std::to_string(n);
    mpz_pow_ui(t.order.get_mpz_t(), h.order.get_mpz_t(), static_cast<unsigned long>(n));
    t.order *= factorial(static_cast<unsigned>(n));
    t.conductor = h.conductor;
    for (const auto& c : classes) t.classes.push_back({c.delta.str(), c.size, c.element_order});

    std::vector<CycNum> cells(k * k);
    if (exec == Exec::Serial) {
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t c = 0; c < k; ++c) cells[a * k + c] = star_mn_value(h, chars[a], classes[c].delta);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long lc = 0; lc < static_cast<long>(k); ++lc) {
            const auto c = static_cast<std::size_t>(lc);
            StarEvaluator column(h, canonical_cycles(classes[c].delta));
            for (std::size_t a = 0; a < k; ++a) cells[a * k + c] = column(chars[a]);
        }
    }
    for (std::size_t a = 0; a < k; ++a) {
        Irreducible chi;
        chi.label = chars[a].str();
        chi.values.assign(cells.begin() + static_cast<long>(a * k), cells.begin() + static_cast<long>((a + 1) * k));
        t.irreducibles.push_back(std::move(chi));
    }
    require_valid(t, exec);
    return t;
}

CharTable bn_char_table(int n, Exec exec) {
    CharTable t = wreath_char_table(cyclic_table(2), n, exec);
    t.name = "B" + std::to_string(n);
    return t;
}

std::vector<PConstReport> upsilon_wreath(const CharTable& h, int n, std::uint64_t p) {
    const CharTable t = wreath_char_table(h, n);
    return upsilon_p(t, p);
}

WreathTheoremResult verify_wreath_theorem(const CharTable& h, int n, std::uint64_t p) {
    return verify_wreath_theorem(h, wreath_char_table(h, n), n, p);
}

WreathTheoremResult verify_wreath_theorem(const CharTable& h, const CharTable& t, int n, std::uint64_t p) {
    WreathTheoremResult res;
    for (const auto& r : upsilon_p(t, p))
        if (r.in_upsilon()) res.actual.push_back(r.label);

    const std::size_t r = h.num_chars();
    auto inflated = [&](const Partition& gamma) {
        std::vector<Partition> comps(r);
        comps[0] = gamma;
        return MultiPartition(std::move(comps)).str();
    };
    if (mpz_divisible_ui_p(h.order.get_mpz_t(), p)) {
        res.predicted.push_back(inflated(Partition({n})));
    } else {
        const auto sym_chars = enumerate_partitions(n);
        for (const auto& rep : upsilon_sym_bruteforce(n, p))
            if (rep.in_upsilon()) res.predicted.push_back(inflated(sym_chars[rep.index]));
    }
    std::sort(res.actual.begin(), res.actual.end());
    std::sort(res.predicted.begin(), res.predicted.end());
    res.ok = res.actual == res.predicted;
    return res;
}

}  // namespace pconst
