#include "pconst/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pconst {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    for (int c = 1; c <= parts_.front(); ++c) {
        int len = 0;
        while (len < static_cast<int>(parts_.size()) && parts_[len] >= c) ++len;
        out.push_back(len);
    }
    return Partition(std::move(out));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 1 : parts_.front() + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

std::string Partition::str() const {
    if (parts_.empty()) return "∅";
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ']';
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

Partition parse_parts(const std::string& body) {
    const std::string t = trim(body);
    if (t.empty() || t == "∅") return Partition();
    std::vector<int> parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid partition part: '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("invalid partition part: '" + item + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::string strip_brackets(const std::string& text) {
    std::string t = trim(text);
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    return t;
}

}  // namespace

Partition parse_partition(const std::string& text) { return parse_parts(strip_brackets(text)); }

MultiPartition parse_multipartition(const std::string& text) {
    const std::string body = strip_brackets(text);
    std::vector<Partition> comps;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ';')) comps.push_back(parse_parts(strip_brackets(item)));
    if (!body.empty() && body.back() == ';') comps.emplace_back();
    if (comps.empty()) throw std::invalid_argument("empty multipartition");
    return MultiPartition(std::move(comps));
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Recursive generation with parts bounded by the previous part, largest first.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, remaining - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

bool is_hook(const Partition& lambda) { return lambda.length() < 2 || lambda[1] == 1; }

std::vector<int> hook_lengths(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<int> out;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            const int arm = lambda[i] - j - 1;
            const int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            out.push_back(arm + leg + 1);
        }
    return out;
}

mpz_class factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

mpz_class degree_by_hooks(const Partition& lambda) {
    mpz_class prod = 1;
    for (int h : hook_lengths(lambda)) prod *= h;
    return factorial(static_cast<unsigned>(lambda.weight())) / prod;
}

std::vector<RimHookRemoval> rim_hooks(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("rim_hooks: k must be positive");
    std::vector<RimHookRemoval> out;
    const int len = static_cast<int>(lambda.length());
    // Beta numbers b_i = lambda_i + len - 1 - i (strictly decreasing).
    // Removing a k-strip whose top row is i replaces b_i by b_i - k.
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + len - 1 - i;
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] - k;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> parts;
        for (int j = 0; j < len; ++j) {
            const int part = nb[j] - (len - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        out.push_back({Partition(std::move(parts)), between + 1, between % 2 == 0 ? 1 : -1});
    }
    return out;
}

mpz_class centralizer_order(const Partition& mu) {
    mpz_class z = 1;
    const auto m = mu.multiplicities();
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), i, static_cast<unsigned long>(m[i]));
        z *= pw * factorial(static_cast<unsigned>(m[i]));
    }
    return z;
}

mpz_class class_size(const Partition& mu) {
    return factorial(static_cast<unsigned>(mu.weight())) / centralizer_order(mu);
}

unsigned long element_order(const Partition& mu) {
    unsigned long l = 1;
    for (int p : mu.parts()) l = std::lcm(l, static_cast<unsigned long>(p));
    return l;
}

MultiPartition::MultiPartition(std::vector<Partition> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("MultiPartition: needs at least one component");
}

int MultiPartition::weight() const {
    int w = 0;
    for (const auto& c : components_) w += c.weight();
    return w;
}

std::string MultiPartition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) s += ';';
        const auto& c = components_[i];
        if (c.empty()) {
            s += "∅";
        } else {
            const std::string cs = c.str();
            s += cs.substr(1, cs.size() - 2);
        }
    }
    return s + "]";
}

std::vector<MultiPartition> enumerate_multipartitions(int n, int r, bool descending) {
    if (n < 0 || r < 1) throw std::invalid_argument("enumerate_multipartitions: bad arguments");
    std::vector<std::vector<Partition>> by_weight(n + 1);
    for (int w = 0; w <= n; ++w) {
        by_weight[w] = enumerate_partitions(w);
        if (!descending) std::reverse(by_weight[w].begin(), by_weight[w].end());
    }
    std::vector<MultiPartition> out;
    std::vector<int> weights(r, 0);
    std::vector<Partition> comps(r);
    auto fill = [&](auto&& self, int idx) -> void {
        if (idx == r) {
            out.emplace_back(comps);
            return;
        }
        for (const auto& p : by_weight[weights[idx]]) {
            comps[idx] = p;
            self(self, idx + 1);
        }
    };
    auto split = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == r - 1) {
            weights[idx] = remaining;
            fill(fill, 0);
            return;
        }
        for (int w = remaining; w >= 0; --w) {
            weights[idx] = w;
            self(self, idx + 1, remaining - w);
        }
    };
    split(split, 0, n);
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
}

std::size_t MultiPartitionHash::operator()(const MultiPartition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    PartitionHash ph;
    for (const auto& c : p.components()) h = (h ^ (ph(c) + 0x9e3779b97f4a7c15ull)) * 1099511628211ull;
    return h;
}

}  // namespace pconst
