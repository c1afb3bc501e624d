#include "pconst/builtin_tables.hpp"

#include "pconst/symmetric.hpp"

#include <numeric>
#include <stdexcept>

namespace pconst {

CharTable cyclic_table(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclic_table: n must be positive");
    CharTable t;
    t.name = "C" + std::to_string(n);
    t.order = n;
    t.conductor = n;
    for (unsigned k = 0; k < n; ++k)
        t.classes.push_back({k == 0 ? "1" : "g^" + std::to_string(k), 1, n / std::gcd(n, k)});
    for (unsigned j = 0; j < n; ++j) {
        Irreducible chi;
        chi.label = j == 0 ? "1" : "chi_" + std::to_string(j);
        for (unsigned k = 0; k < n; ++k) chi.values.push_back(root_of_unity(n, static_cast<long>(j * k)));
        t.irreducibles.push_back(std::move(chi));
    }
    require_valid(t);
    return t;
}

CharTable q8_table() {
    CharTable t;
    t.name = "Q8";
    t.order = 8;
    t.conductor = 1;
    t.classes = {{"1", 1, 1}, {"-1", 1, 2}, {"i", 2, 4}, {"j", 2, 4}, {"k", 2, 4}};
    auto row = [](std::string label, std::vector<long> v) {
        Irreducible chi{std::move(label), {}};
        for (long x : v) chi.values.emplace_back(x);
        return chi;
    };
    t.irreducibles = {
        row("1", {1, 1, 1, 1, 1}),
        row("chi_i", {1, 1, 1, -1, -1}),
        row("chi_j", {1, 1, -1, 1, -1}),
        row("chi_k", {1, 1, -1, -1, 1}),
        row("chi_2", {2, -2, 0, 0, 0}),
    };
    require_valid(t);
    return t;
}

CharTable klein_table() {
    CharTable t = direct_product(cyclic_table(2), cyclic_table(2));
    t.name = "C2xC2";
    return t;
}

CharTable builtin_table(const std::string& name) {
    if (name == "C2xC2") return klein_table();
    if (name == "Sym3") return sym_char_table(3);
    if (name == "Q8") return q8_table();
    if (name.size() > 1 && name[0] == 'C') {
        std::size_t used = 0;
        unsigned long n = 0;
        try {
            n = std::stoul(name.substr(1), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == name.size() - 1 && n >= 1 && n <= 1000) return cyclic_table(static_cast<unsigned>(n));
    }
    throw std::invalid_argument("unknown builtin table: " + name);
}

}  // namespace pconst
