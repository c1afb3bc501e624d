#include "pconst/suites.hpp"

#include "pconst/builtin_tables.hpp"
#include "pconst/dihedral.hpp"
#include "pconst/frobenius.hpp"
#include "pconst/monomial.hpp"
#include "pconst/symmetric.hpp"
#include "pconst/type_d.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace pconst {

IntRange parse_range(const std::string& text) {
    IntRange r;
    try {
        std::size_t used = 0;
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing text");
        } else {
            const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
            r.lo = std::stoi(a, &used);
            if (used != a.size()) throw std::invalid_argument("trailing text");
            r.hi = std::stoi(b, &used);
            if (used != b.size()) throw std::invalid_argument("trailing text");
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range \"" + text + "\" (expected a..b)");
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range \"" + text + "\"");
    return r;
}

std::vector<FamilyRange> parse_families(const std::string& text) {
    std::vector<FamilyRange> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad family \"" + item + "\" (expected name:a..b)");
        out.push_back({item.substr(0, colon), parse_range(item.substr(colon + 1))});
    }
    if (out.empty()) throw std::invalid_argument("no families given");
    return out;
}

CharTable family_table(const std::string& family, int n) {
    if (family == "sym") return sym_char_table(n);
    if (family == "bn") return bn_char_table(n);
    if (family == "dn") return dn_char_table(n);
    if (family == "i2") return dihedral_table(n);
    if (family == "gp") {
        if (n < 3) throw std::invalid_argument("gp: p must be an odd prime");
        return frobenius_table(build_Gp(static_cast<unsigned>(n)));
    }
    throw std::invalid_argument("unknown family \"" + family + "\" (sym, bn, dn, i2, gp)");
}

void SuiteResult::add(std::string id, bool ok, std::string detail) {
    checks.push_back({std::move(id), ok, std::move(detail)});
}

std::size_t SuiteResult::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; }));
}

std::string set_str(std::vector<std::string> items) {
    std::sort(items.begin(), items.end());
    std::string s = "{";
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
    return s + "}";
}

namespace {

std::string mismatch(const std::vector<std::string>& actual, const std::vector<std::string>& predicted) {
    return "actual " + set_str(actual) + " predicted " + set_str(predicted);
}

std::string case_id(const std::string& group, std::uint64_t p) { return group + " p=" + std::to_string(p); }

std::shared_ptr<const CharTable> keep(SuiteResult& res, CharTable t) {
    auto ptr = std::make_shared<const CharTable>(std::move(t));
    res.tables.push_back(ptr);
    return ptr;
}

std::vector<std::string> member_labels(const CharTable& t, std::uint64_t p) {
    std::vector<std::string> out;
    for (const auto& r : upsilon_p(t, p))
        if (r.in_upsilon()) out.push_back(r.label);
    return out;
}

}  // namespace

SuiteResult suite_an(IntRange m) {
    SuiteResult res{"an", {}, {}};
    for (int n = std::max(m.lo, 1); n <= m.hi; ++n) {
        auto t = keep(res, sym_char_table(n));
        for (std::uint64_t p = 2; p <= static_cast<std::uint64_t>(n); ++p) {
            if (!is_prime(p)) continue;
            std::vector<std::string> actual, predicted;
            bool unit = true;
            for (const auto& r : upsilon_p(*t, p)) {
                if (!r.in_upsilon()) continue;
                actual.push_back(r.label);
                unit = unit && abs(*r.constant) == 1;
            }
            for (const auto& l : upsilon_sym_formula(n, p)) predicted.push_back(l.str());
            std::sort(actual.begin(), actual.end());
            std::sort(predicted.begin(), predicted.end());
            const bool same = actual == predicted;
            res.add(case_id(t->name, p), same && unit, same ? (unit ? "" : "a member has |c| != 1") : mismatch(actual, predicted));
        }
    }
    return res;
}

SuiteResult suite_bn(IntRange range) {
    SuiteResult res{"bn", {}, {}};
    for (int n = std::max(range.lo, 1); n <= range.hi; ++n) {
        auto t = keep(res, bn_char_table(n));
        const auto sym_chars = enumerate_partitions(n);
        for (auto p : prime_divisors(t->order)) {
            auto actual = member_labels(*t, p);
            std::vector<std::string> predicted;
            auto inflated = [](const Partition& l) { return MultiPartition({l, Partition()}).str(); };
            if (p == 2) {
                predicted.push_back(inflated(Partition({n})));
                if (n == 1) predicted.push_back(MultiPartition({Partition(), Partition({1})}).str());
            } else {
                for (const auto& r : upsilon_sym_bruteforce(n, p))
                    if (r.in_upsilon()) predicted.push_back(inflated(sym_chars[r.index]));
            }
            std::sort(actual.begin(), actual.end());
            std::sort(predicted.begin(), predicted.end());
            res.add(case_id(t->name, p), actual == predicted, actual == predicted ? "" : mismatch(actual, predicted));
        }
    }
    return res;
}

SuiteResult suite_dn(IntRange range) {
    SuiteResult res{"dn", {}, {}};
    for (int n = std::max(range.lo, 2); n <= range.hi; ++n) {
        const CharTable bn = bn_char_table(n);
        std::vector<std::shared_ptr<const CharTable>> variants;
        for (int v = 0; v < 4; ++v) {
            CharTable dn = dn_char_table(bn, n, SplitLabels{(v & 1) != 0, (v & 2) != 0});
            variants.push_back(v == 0 ? keep(res, std::move(dn)) : std::make_shared<const CharTable>(std::move(dn)));
        }
        for (auto p : prime_divisors(variants[0]->order)) {
            const DnPropResult base = verify_dn_prop(bn, *variants[0], p);
            bool invariant = true;
            for (int v = 1; v < 4; ++v) invariant = invariant && verify_dn_prop(bn, *variants[v], p).actual == base.actual;
            std::string detail;
            if (!base.ok) detail = mismatch(base.actual, base.predicted);
            if (!invariant) detail += (detail.empty() ? "" : "; ") + std::string("members change under split-label swap");
            res.add(case_id(variants[0]->name, p), base.ok && invariant, detail);
        }
    }
    return res;
}

SuiteResult suite_i2(IntRange range) {
    SuiteResult res{"i2", {}, {}};
    for (int n = std::max(range.lo, 3); n <= range.hi; ++n) {
        auto t = keep(res, dihedral_table(n));
        for (auto p : prime_divisors(t->order)) {
            const auto r = verify_dihedral_prop(n, p);
            res.add(case_id(t->name, p) + " nonlinear", r.ok, r.ok ? "" : mismatch(r.actual, r.predicted));
        }
        const auto r2 = verify_dihedral_upsilon2(n);
        res.add(case_id(t->name, 2) + " upsilon2", r2.ok, r2.ok ? "" : mismatch(r2.actual, r2.predicted));
    }
    return res;
}

SuiteResult suite_thwr(const std::vector<CharTable>& base_tables, IntRange range) {
    SuiteResult res{"thwr", {}, {}};
    for (const auto& h : base_tables) {
        for (int n = std::max(range.lo, 2); n <= range.hi; ++n) {
            auto t = keep(res, wreath_char_table(h, n));
            for (auto p : prime_divisors(t->order)) {
                const auto r = verify_wreath_theorem(h, *t, n, p);
                res.add(case_id(t->name, p), r.ok, r.ok ? "" : mismatch(r.actual, r.predicted));
            }
        }
    }
    return res;
}

SuiteResult suite_th2(const std::vector<FamilyRange>& families) {
    SuiteResult res{"th2", {}, {}};
    for (const auto& f : families) {
        for (int n = f.range.lo; n <= f.range.hi; ++n) {
            auto t = keep(res, family_table(f.family, n));
            if (t->order % 2 != 0) continue;
            // dihedral of order 2n with n odd: I2(odd), Sym3 = I2(3), Sym2 = B1 = C2
            const bool dihedral_odd = (f.family == "i2" && n % 2 != 0) || (f.family == "sym" && (n == 2 || n == 3)) ||
                                      (f.family == "bn" && n == 1);
            std::vector<std::string> actual, predicted;
            for (const auto& r : upsilon_p(*t, 2))
                if (r.in_upsilon()) actual.push_back(r.label);
            for (std::size_t i = 0; i < t->num_chars(); ++i)
                if (i == 0 || (dihedral_odd && t->degree(i) == 1)) predicted.push_back(t->irreducibles[i].label);
            std::sort(actual.begin(), actual.end());
            std::sort(predicted.begin(), predicted.end());
            res.add(t->name + " p=2", actual == predicted, actual == predicted ? "" : mismatch(actual, predicted));
        }
    }
    return res;
}

SuiteResult suite_directprod() {
    SuiteResult res{"directprod", {}, {}};
    const std::array<std::pair<const char*, const char*>, 10> pairs{{
        {"Sym3", "C2"}, {"Sym3", "Sym3"}, {"C2", "C3"}, {"C2", "C2"}, {"C3", "C5"},
        {"Q8", "C3"}, {"Sym4", "C5"}, {"I2(5)", "C3"}, {"Sym3", "C4"}, {"B2", "Sym3"},
    }};
    auto build = [](const std::string& name) {
        if (name == "Sym4") return sym_char_table(4);
        if (name == "I2(5)") return dihedral_table(5);
        if (name == "B2") return bn_char_table(2);
        return builtin_table(name);
    };
    for (const auto& [an, bname] : pairs) {
        const CharTable a = build(an), b = build(bname);
        auto prod = keep(res, direct_product(a, b));
        for (auto p : prime_divisors(prod->order)) {
            const auto r = verify_direct_prop(a, b, p);
            res.add(case_id(std::string(an) + " x " + bname, p), r.ok, r.ok ? "" : mismatch(r.actual, r.predicted));
        }
    }
    for (const char* name : {"C2", "C4", "C2xC2", "C3", "C9", "Q8", "B2"}) {
        auto t = keep(res, build(name));
        const auto primes = prime_divisors(t->order);
        const std::uint64_t p = primes.front();
        auto actual = member_labels(*t, p);
        std::vector<std::string> predicted{t->irreducibles[0].label};
        if (t->order == 2) predicted.push_back(t->irreducibles[1].label);
        std::sort(actual.begin(), actual.end());
        std::sort(predicted.begin(), predicted.end());
        const bool ok = primes.size() == 1 && actual == predicted;
        res.add(std::string("p-group ") + name + " p=" + std::to_string(p), ok, ok ? "" : mismatch(actual, predicted));
    }
    const auto built = res.tables;
    for (const auto& t : built)
        for (auto p : prime_divisors(t->order)) {
            const auto lin = verify_linear_prop(*t, p);
            res.add("linear " + case_id(t->name, p), lin.ok());
        }
    return res;
}

SuiteResult suite_q8(const std::vector<unsigned>& primes) {
    SuiteResult res{"q8", {}, {}};
    for (unsigned p : primes) {
        const auto r = verify_q8_lemma(p);
        std::string orders;
        for (auto o : r.element_orders) orders += (orders.empty() ? "" : ",") + std::to_string(o);
        const bool orbits = r.kernel_orbits == (static_cast<std::size_t>(p) * p - 1) / 8;
        std::string detail = "a=" + std::to_string(r.ab.first) + " b=" + std::to_string(r.ab.second) + " order=" +
                             r.order.get_str() + " orders={" + orders + "} c=" + (r.constant ? r.constant->get_str() : "none");
        if (!orbits) detail += " kernel orbits " + std::to_string(r.kernel_orbits);
        res.add("G(" + std::to_string(p) + ")", r.ok && orbits, detail);
        keep(res, family_table("gp", static_cast<int>(p)));
    }
    return res;
}

SuiteResult suite_example(const std::string& spec_path, const std::string& expected_order) {
    SuiteResult res{"example", {}, {}};
    const FrobeniusSpec spec = load_frobenius_spec(spec_path);
    const auto r = verify_frobenius_example(spec);
    const bool order_ok = r.order == mpz_class(expected_order);
    res.add("order", order_ok, "order=" + r.order.get_str());
    res.add("single p-singular class", r.p_singular_classes == 1, std::to_string(r.p_singular_classes) + " classes");
    res.add("constants", r.ok, r.ok ? set_str(r.members) : set_str(r.mismatches));
    keep(res, frobenius_table(spec));
    return res;
}

Check theorem1_check(const CharTable& t) {
    std::vector<std::string> bad;
    for (auto p : prime_divisors(t.order))
        for (const auto& r : upsilon_p(t, p))
            if (r.in_upsilon() && abs(*r.constant) != 1) bad.push_back(r.label + "@p=" + std::to_string(p) + ":c=" + r.constant->get_str());
    return {"c=+-1 " + t.name, bad.empty(), bad.empty() ? "" : set_str(bad)};
}

std::vector<Check> structural_checks(const CharTable& t) {
    std::vector<Check> out;
    const Validation v = validate(t);
    out.push_back({"valid " + t.name, v.ok(), v.ok() ? "" : v.violations.front()});
    for (auto p : prime_divisors(t.order)) {
        const std::string id = case_id(t.name, p);
        try {
            defect_zero_set(t, p);
            out.push_back({"defect-zero " + id, true, ""});
        } catch (const std::logic_error& e) {
            out.push_back({"defect-zero " + id, false, e.what()});
        }
        out.push_back({"linear " + id, verify_linear_prop(t, p).ok(), ""});
        const auto bad = center_lemma_violations(t, p);
        out.push_back({"center " + id, bad.empty(), bad.empty() ? "" : std::to_string(bad.size()) + " characters"});
    }
    return out;
}

std::vector<ScanRow> scan_table(const CharTable& t) {
    std::vector<ScanRow> rows;
    for (auto p : prime_divisors(t.order))
        for (const auto& r : upsilon_p(t, p))
            if (r.in_upsilon()) rows.push_back({t.name, p, r.label, r.degree, *r.constant, abs(*r.constant) > 1});
    return rows;
}

}  // namespace pconst
