#include "pconst/type_d.hpp"

#include "pconst/builtin_tables.hpp"
#include "pconst/monomial.hpp"
#include "pconst/symmetric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pconst {

std::string DnClass::label() const {
    switch (tag) {
        case SplitTag::Plus: return base.str() + "+";
        case SplitTag::Minus: return base.str() + "-";
        case SplitTag::None: break;
    }
    return base.str();
}

namespace {

bool all_parts_even(const Partition& p) {
    return std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; });
}

Partition halved(const Partition& p) {
    std::vector<int> parts;
    for (int x : p.parts()) parts.push_back(x / 2);
    return Partition(std::move(parts));
}

void check_n(int n) {
    if (n < 2 || n > kDnMaxN) throw std::invalid_argument("D_n: n must lie in 2.." + std::to_string(kDnMaxN));
}

}  // namespace

std::vector<DnClass> dn_classes(int n) {
    check_n(n);
    std::vector<DnClass> out;
    for (const auto& c : wreath_classes(cyclic_table(2), n)) {
        const Partition& alpha = c.delta[0];
        const Partition& beta = c.delta[1];
        if (beta.length() % 2 != 0) continue;
        if (beta.empty() && all_parts_even(alpha)) {
            const mpz_class half = c.size / 2;
            out.push_back({c.delta, SplitTag::Plus, half, c.element_order});
            out.push_back({c.delta, SplitTag::Minus, half, c.element_order});
        } else {
            out.push_back({c.delta, SplitTag::None, c.size, c.element_order});
        }
    }
    return out;
}

CharTable dn_char_table(int n, SplitLabels labels) {
    check_n(n);
    return dn_char_table(bn_char_table(n), n, labels);
}

CharTable dn_char_table(const CharTable& bn, int n, SplitLabels labels) {
    check_n(n);
    const auto b_chars = enumerate_multipartitions(n, 2, true);
    const auto classes = dn_classes(n);

    std::map<std::string, std::size_t> b_class_index;
    for (std::size_t c = 0; c < bn.num_classes(); ++c) b_class_index[bn.classes[c].label] = c;
    std::vector<std::size_t> base_of(classes.size());
    for (std::size_t d = 0; d < classes.size(); ++d) base_of[d] = b_class_index.at(classes[d].base.str());

    CharTable t;
    t.name = "D" + std::to_string(n);
    t.order = bn.order / 2;
    t.conductor = bn.conductor;
    for (const auto& c : classes) t.classes.push_back({c.label(), c.size, c.element_order});

    const mpq_class half(1, 2);
    for (std::size_t a = 0; a < b_chars.size(); ++a) {
        const Partition& alpha = b_chars[a][0];
        const Partition& beta = b_chars[a][1];
        if (alpha != beta) {
            const auto swapped = MultiPartition({beta, alpha});
            const auto other = static_cast<std::size_t>(std::find(b_chars.begin(), b_chars.end(), swapped) - b_chars.begin());
            if (other < a) continue;
            Irreducible chi;
            chi.label = b_chars[a].str();
            for (std::size_t d = 0; d < classes.size(); ++d) chi.values.push_back(bn.value(a, base_of[d]));
            t.irreducibles.push_back(std::move(chi));
            continue;
        }
        for (int char_sign : {1, -1}) {
            Irreducible chi;
            chi.label = b_chars[a].str() + (char_sign > 0 ? "+" : "-");
            const int cs = labels.swap_characters ? -char_sign : char_sign;
            for (std::size_t d = 0; d < classes.size(); ++d) {
                const CycNum& b = bn.value(a, base_of[d]);
                if (classes[d].tag == SplitTag::None) {
                    chi.values.push_back(b * CycNum(half));
                    continue;
                }
                const Partition mu = halved(classes[d].base[0]);
                mpz_class diff;
                mpz_ui_pow_ui(diff.get_mpz_t(), 2, mu.length());
                diff *= static_cast<long>(mn_value(alpha, mu));
                int s = cs * (classes[d].tag == SplitTag::Plus ? 1 : -1);
                if (labels.swap_classes) s = -s;
                const mpq_class signed_diff = s > 0 ? mpq_class(diff) : mpq_class(-diff);
                chi.values.push_back((b + CycNum(signed_diff)) * CycNum(half));
            }
            t.irreducibles.push_back(std::move(chi));
        }
    }
    require_valid(t);
    return t;
}

std::string strip_split_tag(const std::string& label) {
    if (!label.empty() && (label.back() == '+' || label.back() == '-')) return label.substr(0, label.size() - 1);
    return label;
}

std::vector<PConstReport> upsilon_dn(int n, std::uint64_t p, SplitLabels labels) {
    return upsilon_p(dn_char_table(n, labels), p);
}

DnPropResult verify_dn_prop(int n, std::uint64_t p, SplitLabels labels) {
    const CharTable bn = bn_char_table(n);
    return verify_dn_prop(bn, dn_char_table(bn, n, labels), p);
}

DnPropResult verify_dn_prop(const CharTable& bn, const CharTable& dn, std::uint64_t p) {
    DnPropResult res;
    for (const auto& r : upsilon_p(dn, p))
        if (r.in_upsilon()) res.actual.push_back(strip_split_tag(r.label));

    for (const auto& r : upsilon_p(bn, p)) {
        if (!r.in_upsilon()) continue;
        const MultiPartition ab = parse_multipartition(r.label);
        if (ab[0] == ab[1]) continue;  // restriction is reducible
        // name of the restriction: whichever of (a,b), (b,a) the D_n table kept
        const std::string direct = ab.str();
        const std::string swapped = MultiPartition({ab[1], ab[0]}).str();
        res.predicted.push_back(dn.find_char(direct) ? direct : swapped);
    }
    std::sort(res.actual.begin(), res.actual.end());
    res.actual.erase(std::unique(res.actual.begin(), res.actual.end()), res.actual.end());
    std::sort(res.predicted.begin(), res.predicted.end());
    res.predicted.erase(std::unique(res.predicted.begin(), res.predicted.end()), res.predicted.end());
    res.ok = res.actual == res.predicted;
    return res;
}

}  // namespace pconst
