#include "pconst/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace pconst {

namespace {

// Memoized rim-hook recursion for one fixed peel sequence. The weight of a
// state determines how many lengths have been consumed, so the state alone
// is the memo key.
class MnEvaluator {
public:
    explicit MnEvaluator(std::vector<int> lengths) : lengths_(std::move(lengths)) {
        int total = 0;
        for (int k : lengths_) total += k;
        total_ = total;
    }

    long long operator()(const Partition& lambda) { return eval(lambda); }

private:
    long long eval(const Partition& lambda) {
        if (lambda.empty()) return 1;
        if (auto it = memo_.find(lambda); it != memo_.end()) return it->second;
        const std::size_t depth = depth_of(lambda.weight());
        long long v = 0;
        for (const auto& rh : rim_hooks(lambda, lengths_[depth])) v += rh.sign * eval(rh.remaining);
        memo_.emplace(lambda, v);
        return v;
    }

    std::size_t depth_of(int weight) const {
        int consumed = total_ - weight;
        std::size_t d = 0;
        while (consumed > 0) consumed -= lengths_[d++];
        return d;
    }

    std::vector<int> lengths_;
    int total_ = 0;
    std::unordered_map<Partition, long long, PartitionHash> memo_;
};

}  // namespace

long long mn_value_ordered(const Partition& lambda, const std::vector<int>& cycle_lengths) {
    int total = 0;
    for (int k : cycle_lengths) {
        if (k <= 0) throw std::invalid_argument("mn_value: cycle lengths must be positive");
        total += k;
    }
    if (total != lambda.weight())
        throw std::invalid_argument("mn_value: |lambda| = " + std::to_string(lambda.weight()) +
                                    " differs from class weight " + std::to_string(total));
    return MnEvaluator(cycle_lengths)(lambda);
}

long long mn_value(const Partition& lambda, const Partition& mu) {
    return mn_value_ordered(lambda, mu.parts());  // parts are stored largest first
}

CharTable sym_char_table(int n, Exec exec) {
    if (n < 1 || n > kSymTableMaxN)
        throw std::invalid_argument("sym_char_table: n must lie in 1.." + std::to_string(kSymTableMaxN));
    const auto chars = enumerate_partitions(n);
    auto classes = chars;
    std::reverse(classes.begin(), classes.end());
    const std::size_t k = chars.size();

    CharTable t;
    t.name = "Sym" + std::to_string(n);
    t.order = factorial(static_cast<unsigned>(n));
    t.conductor = 1;
    for (const auto& mu : classes) t.classes.push_back({mu.str(), class_size(mu), element_order(mu)});

    std::vector<long long> cells(k * k);
    if (exec == Exec::Serial) {
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t c = 0; c < k; ++c) cells[a * k + c] = mn_value(chars[a], classes[c]);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long lc = 0; lc < static_cast<long>(k); ++lc) {
            const auto c = static_cast<std::size_t>(lc);
            MnEvaluator column(classes[c].parts());
            for (std::size_t a = 0; a < k; ++a) cells[a * k + c] = column(chars[a]);
        }
    }
    for (std::size_t a = 0; a < k; ++a) {
        Irreducible chi;
        chi.label = chars[a].str();
        chi.values.reserve(k);
        for (std::size_t c = 0; c < k; ++c) chi.values.emplace_back(static_cast<long>(cells[a * k + c]));
        t.irreducibles.push_back(std::move(chi));
    }
    return t;
}

std::vector<PConstReport> upsilon_sym_bruteforce(int n, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("upsilon_sym_bruteforce: p must be prime");
    if (p > static_cast<std::uint64_t>(n))
        throw std::invalid_argument("upsilon_sym_bruteforce: p > n leaves no p-singular elements");
    return upsilon_p(sym_char_table(n), p);
}

std::vector<Partition> upsilon_sym_formula(int m, std::uint64_t p64) {
    if (!is_prime(p64)) throw std::invalid_argument("upsilon_sym_formula: p must be prime");
    const int p = static_cast<int>(p64);
    if (p > m) throw std::invalid_argument("upsilon_sym_formula: requires p <= m");

    std::vector<Partition> out;
    auto add = [&](std::vector<int> head, int ones) {
        for (int i = 0; i < ones; ++i) head.push_back(1);
        out.emplace_back(std::move(head));
    };

    add({m}, 0);
    if (m == p || m == p + 1) add({}, m);

    // (i) rank p-1, i.e. m = p
    if (m == p && p >= 3)
        for (int b = 2; b <= p - 1; ++b) add({b}, p - b);
    // (ii) rank p, i.e. m = p + 1
    if (m == p + 1 && p >= 3)
        for (int b = 1; b <= p - 2; ++b) add({b + 1, 2}, p - b - 2);
    // (iii) m = p + r with 2 <= r <= p and m >= 5
    const int r = m - p;
    if (m >= 5 && r >= 2 && r <= p) {
        for (int a = 1; a <= p - r - 1; ++a) add({p - a, r + 1}, a - 1);
        for (int b = 1; b <= r; ++b) add({r, b}, p - b);
    }

    const unsigned vg = p_valuation(factorial(static_cast<unsigned>(m)), p64);
    std::erase_if(out, [&](const Partition& l) { return p_valuation(degree_by_hooks(l), p64) >= vg; });
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace pconst
