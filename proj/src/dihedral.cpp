#include "pconst/dihedral.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pconst {

std::string psi_label(int j) { return "psi_" + std::to_string(j); }

CharTable dihedral_table(int n) {
    if (n < 3 || n > kDihedralMaxN)
        throw std::invalid_argument("dihedral_table: n must lie in 3.." + std::to_string(kDihedralMaxN));
    const bool even = n % 2 == 0;
    const auto un = static_cast<unsigned>(n);

    CharTable t;
    t.name = "I2(" + std::to_string(n) + ")";
    t.order = 2 * n;
    t.conductor = un;
    t.classes.push_back({"1", 1, 1});
    for (int k = 1; k <= n / 2; ++k) {
        const bool central = even && 2 * k == n;
        t.classes.push_back({"r^" + std::to_string(k), central ? 1 : 2, static_cast<std::uint64_t>(n / std::gcd(n, k))});
    }
    const std::size_t rotations = t.classes.size();
    if (even) {
        t.classes.push_back({"s", n / 2, 2});
        t.classes.push_back({"sr", n / 2, 2});
    } else {
        t.classes.push_back({"s", n, 2});
    }

    auto linear = [&](const std::string& label, bool alternate, int on_s, int on_sr) {
        Irreducible chi;
        chi.label = label;
        for (std::size_t k = 0; k < rotations; ++k) chi.values.emplace_back(alternate && k % 2 ? -1L : 1L);
        chi.values.emplace_back(static_cast<long>(on_s));
        if (even) chi.values.emplace_back(static_cast<long>(on_sr));
        t.irreducibles.push_back(std::move(chi));
    };
    linear("1", false, 1, 1);
    linear("eps", false, -1, -1);
    if (even) {
        linear("rho_s", true, 1, -1);
        linear("rho_sr", true, -1, 1);
    }
    for (int j = 1; 2 * j < n; ++j) {
        Irreducible chi;
        chi.label = psi_label(j);
        for (std::size_t k = 0; k < rotations; ++k) {
            const long e = static_cast<long>(j) * static_cast<long>(k);
            chi.values.push_back(root_of_unity(un, e) + root_of_unity(un, -e));
        }
        chi.values.resize(t.classes.size());
        t.irreducibles.push_back(std::move(chi));
    }
    require_valid(t);
    return t;
}

std::vector<PConstReport> upsilon_dihedral(int n, std::uint64_t p) {
    if (!is_prime(p) || (2 * static_cast<std::uint64_t>(n)) % p != 0)
        throw std::invalid_argument("upsilon_dihedral: p must be a prime dividing 2n");
    return upsilon_p(dihedral_table(n), p);
}

namespace {

std::string tagged(const PConstReport& r) { return r.label + ":" + r.constant->get_str(); }

}  // namespace

DihedralPropResult verify_dihedral_prop(int n, std::uint64_t p) {
    DihedralPropResult res;
    for (const auto& r : upsilon_dihedral(n, p))
        if (r.in_upsilon() && r.degree > 1) res.actual.push_back(tagged(r));
    // 3 = |G|_3 exactly when 3 divides n but 9 does not
    if (p == 3 && n % 3 == 0 && n % 9 != 0) res.predicted.push_back(psi_label(n / 3) + ":-1");
    res.ok = res.actual == res.predicted;
    return res;
}

DihedralUpsilon2Result verify_dihedral_upsilon2(int n) {
    DihedralUpsilon2Result res;
    for (const auto& r : upsilon_dihedral(n, 2))
        if (r.in_upsilon()) res.actual.push_back(tagged(r));
    res.predicted.push_back("1:1");
    if (n % 2 != 0) res.predicted.push_back("eps:-1");
    std::sort(res.actual.begin(), res.actual.end());
    std::sort(res.predicted.begin(), res.predicted.end());
    res.ok = res.actual == res.predicted;
    return res;
}

}  // namespace pconst
