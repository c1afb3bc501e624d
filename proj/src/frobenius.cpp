#include "pconst/frobenius.hpp"

#include "pconst/builtin_tables.hpp"
#include "pconst/table_io.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pconst {

using nlohmann::json;

namespace {

int mod(long long x, unsigned p) {
    const long long r = x % static_cast<long long>(p);
    return static_cast<int>(r < 0 ? r + p : r);
}

Matrix identity(unsigned d) {
    Matrix m(d * d, 0);
    for (unsigned i = 0; i < d; ++i) m[i * d + i] = 1;
    return m;
}

Matrix mul(const Matrix& a, const Matrix& b, unsigned d, unsigned p) {
    Matrix c(d * d, 0);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
            long long s = 0;
            for (unsigned k = 0; k < d; ++k) s += static_cast<long long>(a[i * d + k]) * b[k * d + j];
            c[i * d + j] = mod(s, p);
        }
    return c;
}

int trace(const Matrix& m, unsigned d, unsigned p) {
    long long s = 0;
    for (unsigned i = 0; i < d; ++i) s += m[i * d + i];
    return mod(s, p);
}

// Rank over F_p by row reduction.
unsigned rank(Matrix m, unsigned d, unsigned p) {
    unsigned r = 0;
    for (unsigned col = 0; col < d && r < d; ++col) {
        unsigned piv = r;
        while (piv < d && m[piv * d + col] == 0) ++piv;
        if (piv == d) continue;
        for (unsigned j = 0; j < d; ++j) std::swap(m[r * d + j], m[piv * d + j]);
        long long inv = 1;  // m[r][col]^(p-2)
        for (long long b = m[r * d + col], e = p - 2; e > 0; e >>= 1, b = b * b % p)
            if (e & 1) inv = inv * b % p;
        for (unsigned i = 0; i < d; ++i) {
            if (i == r || m[i * d + col] == 0) continue;
            const long long f = m[i * d + col] * inv % p;
            for (unsigned j = 0; j < d; ++j) m[i * d + j] = mod(m[i * d + j] - f * m[r * d + j], p);
        }
        ++r;
    }
    return r;
}

std::uint64_t matrix_order(const Matrix& m, unsigned d, unsigned p) {
    const Matrix id = identity(d);
    Matrix x = m;
    std::uint64_t k = 1;
    while (x != id) {
        x = mul(x, m, d, p);
        if (++k > kMaxComplementOrder) throw std::invalid_argument("matrix of excessive order");
    }
    return k;
}

// Vectors of F_p^d are encoded base p, coordinate 0 most significant.
std::vector<int> decode(std::uint64_t code, unsigned d, unsigned p) {
    std::vector<int> v(d);
    for (unsigned i = d; i-- > 0;) {
        v[i] = static_cast<int>(code % p);
        code /= p;
    }
    return v;
}

std::uint64_t encode(const std::vector<int>& v, unsigned p) {
    std::uint64_t code = 0;
    for (int x : v) code = code * p + static_cast<std::uint64_t>(x);
    return code;
}

std::vector<int> act(const Matrix& m, const std::vector<int>& v, unsigned d, unsigned p) {
    std::vector<int> w(d);
    for (unsigned i = 0; i < d; ++i) {
        long long s = 0;
        for (unsigned k = 0; k < d; ++k) s += static_cast<long long>(m[i * d + k]) * v[k];
        w[i] = mod(s, p);
    }
    return w;
}

// Row vector times matrix: the action on the dual.
std::vector<int> act_dual(const std::vector<int>& a, const Matrix& m, unsigned d, unsigned p) {
    std::vector<int> w(d);
    for (unsigned j = 0; j < d; ++j) {
        long long s = 0;
        for (unsigned k = 0; k < d; ++k) s += static_cast<long long>(a[k]) * m[k * d + j];
        w[j] = mod(s, p);
    }
    return w;
}

std::string vec_str(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

void check_matrix_spec(const MatrixGroupSpec& s) {
    if (!is_prime(s.p)) throw std::invalid_argument("matrix group: p must be prime");
    if (s.d < 1) throw std::invalid_argument("matrix group: d must be positive");
    std::uint64_t v = 1;
    for (unsigned i = 0; i < s.d; ++i) {
        v *= s.p;
        if (v > kMaxKernelOrder) throw std::invalid_argument("matrix group: p^d exceeds " + std::to_string(kMaxKernelOrder));
    }
    for (const auto& g : s.generators) {
        if (g.size() != s.d * s.d) throw std::invalid_argument("matrix group: generator has wrong size");
        if (std::any_of(g.begin(), g.end(), [&](int x) { return x < 0 || x >= static_cast<int>(s.p); }))
            throw std::invalid_argument("matrix group: entries must lie in 0..p-1");
        if (rank(g, s.d, s.p) != s.d) throw std::invalid_argument("matrix group: singular generator");
    }
}

}  // namespace

std::vector<Matrix> close_and_check(const MatrixGroupSpec& spec) {
    check_matrix_spec(spec);
    const unsigned d = spec.d, p = spec.p;
    const Matrix id = identity(d);
    std::vector<Matrix> elements{id};
    std::set<Matrix> seen{id};
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& g : spec.generators) {
            Matrix x = mul(elements[i], g, d, p);
            if (seen.insert(x).second) {
                if (elements.size() >= kMaxComplementOrder)
                    throw std::invalid_argument("matrix group: closure exceeds " + std::to_string(kMaxComplementOrder) + " elements");
                elements.push_back(std::move(x));
            }
        }
    }
    for (std::size_t i = 1; i < elements.size(); ++i) {
        Matrix m = elements[i];
        for (unsigned k = 0; k < d; ++k) m[k * d + k] = mod(m[k * d + k] - 1, p);
        if (rank(m, d, p) != d) throw std::invalid_argument("matrix group: not fixed-point-free (element " + std::to_string(i) + ")");
    }
    return elements;
}

namespace {

struct MatrixClass {
    std::vector<std::size_t> members;
    std::size_t table_class = 0;
};

// Conjugacy classes of the closed group, each matched to a table class.
std::vector<MatrixClass> match_classes(const FrobeniusSpec& spec, const std::vector<Matrix>& elems) {
    const unsigned d = spec.complement.d, p = spec.complement.p;
    const CharTable& h = spec.complement_table;
    std::map<Matrix, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

    std::vector<Matrix> gen_inv;
    for (const auto& g : spec.complement.generators) {
        const std::uint64_t o = matrix_order(g, d, p);
        Matrix inv = identity(d);  // g^(o-1)
        for (std::uint64_t k = 1; k < o; ++k) inv = mul(inv, g, d, p);
        gen_inv.push_back(inv);
    }

    std::vector<long> class_of(elems.size(), -1);
    std::vector<MatrixClass> classes;
    for (std::size_t start = 0; start < elems.size(); ++start) {
        if (class_of[start] >= 0) continue;
        MatrixClass c;
        const long id = static_cast<long>(classes.size());
        std::deque<std::size_t> queue{start};
        class_of[start] = id;
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            c.members.push_back(x);
            for (std::size_t g = 0; g < gen_inv.size(); ++g) {
                const std::size_t y = index.at(mul(mul(gen_inv[g], elems[x], d, p), spec.complement.generators[g], d, p));
                if (class_of[y] < 0) {
                    class_of[y] = id;
                    queue.push_back(y);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        classes.push_back(std::move(c));
    }

    std::vector<std::size_t> hits(h.num_classes(), 0);
    for (auto& c : classes) {
        const Matrix& rep = elems[c.members.front()];
        const std::uint64_t ord = matrix_order(rep, d, p);
        const int tr = trace(rep, d, p);
        std::optional<std::string> label;
        auto assign = [&](const std::string& l) {
            if (label && *label != l)
                throw std::invalid_argument("class map is ambiguous: a matrix class matches both " + *label + " and " + l);
            label = l;
        };
        for (const auto& rule : spec.class_map)
            for (const auto& r : rule.representatives) {
                auto it = index.find(r);
                if (it == index.end()) throw std::invalid_argument("class map representative for " + rule.class_label + " is not in the group");
                if (class_of[it->second] == class_of[c.members.front()]) assign(rule.class_label);
            }
        if (!label) {
            for (const auto& rule : spec.class_map) {
                if (!rule.representatives.empty() || !rule.order || !rule.trace) continue;
                if (*rule.order == ord && mod(*rule.trace, p) == tr) assign(rule.class_label);
            }
        }
        if (!label)
            throw std::invalid_argument("class map has no rule for elements of order " + std::to_string(ord) + " and trace " +
                                        std::to_string(tr));
        const auto tc = h.find_class(*label);
        if (!tc) throw std::invalid_argument("class map names unknown class " + *label);
        if (h.classes[*tc].element_order != ord)
            throw std::invalid_argument("class " + *label + ": table order " + std::to_string(h.classes[*tc].element_order) +
                                        " but matrices have order " + std::to_string(ord));
        if (h.classes[*tc].size != c.members.size())
            throw std::invalid_argument("class " + *label + ": table size " + h.classes[*tc].size.get_str() + " but " +
                                        std::to_string(c.members.size()) + " conjugate matrices");
        c.table_class = *tc;
        ++hits[*tc];
    }
    for (std::size_t i = 0; i < hits.size(); ++i)
        if (hits[i] != 1)
            throw std::invalid_argument("class map sends " + std::to_string(hits[i]) + " matrix classes to " + h.classes[i].label);
    return classes;
}

// H-orbits on nonzero vectors, each given by its least vector code.
std::vector<std::uint64_t> orbit_representatives(const std::vector<Matrix>& elems, unsigned d, unsigned p, bool dual) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= p;
    std::vector<char> seen(total, 0);
    std::vector<std::uint64_t> reps;
    for (std::uint64_t code = 1; code < total; ++code) {
        if (seen[code]) continue;
        reps.push_back(code);
        const auto v = decode(code, d, p);
        for (const auto& h : elems) seen[encode(dual ? act_dual(v, h, d, p) : act(h, v, d, p), p)] = 1;
    }
    return reps;
}

}  // namespace

CharTable frobenius_table(const FrobeniusSpec& spec, Exec exec) {
    const CharTable& h = spec.complement_table;
    {
        const Validation v = validate(h);
        if (!v.ok()) throw std::invalid_argument("complement table " + h.name + " is invalid: " + v.violations.front());
    }
    const unsigned d = spec.complement.d, p = spec.complement.p;
    const auto elems = close_and_check(spec.complement);
    if (h.order != elems.size())
        throw std::invalid_argument("complement table has order " + h.order.get_str() + " but the matrices generate " +
                                    std::to_string(elems.size()) + " elements");
    match_classes(spec, elems);  // throws unless the class map fits the table
    const auto kernel = orbit_representatives(elems, d, p, false);
    const auto dual = orbit_representatives(elems, d, p, true);
    mpz_class v_order;
    mpz_ui_pow_ui(v_order.get_mpz_t(), p, d);

    CharTable t;
    t.name = spec.name.empty() ? "V x| " + h.name : spec.name;
    t.order = v_order * h.order;
    t.conductor = lcm_conductor(p, h.conductor);
    t.classes.push_back({"1", 1, 1});
    for (auto code : kernel) t.classes.push_back({"v" + vec_str(decode(code, d, p)), h.order, p});
    const std::size_t first_complement = t.classes.size();
    for (std::size_t c = 1; c < h.num_classes(); ++c)
        t.classes.push_back({h.classes[c].label, v_order * h.classes[c].size, h.classes[c].element_order});

    for (std::size_t i = 0; i < h.num_chars(); ++i) {
        Irreducible chi;
        chi.label = h.irreducibles[i].label;
        const CycNum& deg = h.value(i, 0);
        chi.values.assign(first_complement, deg);
        for (std::size_t c = 1; c < h.num_classes(); ++c) chi.values.push_back(h.value(i, c));
        t.irreducibles.push_back(std::move(chi));
    }

    // theta^G(v) = sum over all h in H of theta(h v)
    std::vector<Irreducible> induced(dual.size());
    auto induce = [&](std::size_t a) {
        const auto av = decode(dual[a], d, p);
        Irreducible& chi = induced[a];
        chi.label = "ind" + vec_str(av);
        chi.values.assign(t.num_classes(), CycNum(0));
        chi.values[0] = CycNum(static_cast<long>(elems.size()));
        for (std::size_t k = 0; k < kernel.size(); ++k) {
            const auto v = decode(kernel[k], d, p);
            std::vector<long> count(p, 0);
            for (const auto& m : elems) {
                const auto hv = act(m, v, d, p);
                long long s = 0;
                for (unsigned i = 0; i < d; ++i) s += static_cast<long long>(av[i]) * hv[i];
                ++count[static_cast<std::size_t>(mod(s, p))];
            }
            std::vector<std::pair<long, mpq_class>> terms;
            for (unsigned e = 0; e < p; ++e)
                if (count[e]) terms.emplace_back(static_cast<long>(e), mpq_class(count[e]));
            chi.values[1 + k] = CycNum::from_terms(p, terms);
        }
    };
    if (exec == Exec::Serial) {
        for (std::size_t a = 0; a < dual.size(); ++a) induce(a);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long a = 0; a < static_cast<long>(dual.size()); ++a) induce(static_cast<std::size_t>(a));
    }
    for (auto& chi : induced) t.irreducibles.push_back(std::move(chi));
    require_valid(t, exec);
    return t;
}

std::pair<int, int> gp_parameters(unsigned p) {
    if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("G(p): p must be an odd prime");
    for (int a = 0; a < static_cast<int>(p); ++a)
        for (int b = 0; b < static_cast<int>(p); ++b)
            if (mod(static_cast<long long>(a) * a + static_cast<long long>(b) * b + 1, p) == 0) return {a, b};
    throw std::logic_error("G(p): no solution of a^2 + b^2 + 1 = 0");  // impossible for odd p
}

FrobeniusSpec build_Gp(unsigned p) {
    const auto [a, b] = gp_parameters(p);
    const Matrix phi_i{a, b, b, mod(-a, p)};
    const Matrix phi_j{0, mod(-1, p), 1, 0};
    FrobeniusSpec s;
    s.name = "G(" + std::to_string(p) + ")";
    s.complement = {p, 2, {phi_i, phi_j}};
    s.complement_table = q8_table();
    // i, j and k share order 4 and trace 0, so they are pinned by representatives
    s.class_map = {
        {"1", 1, 2, {}},
        {"-1", 2, mod(-2, p), {}},
        {"i", std::nullopt, std::nullopt, {phi_i}},
        {"j", std::nullopt, std::nullopt, {phi_j}},
        {"k", std::nullopt, std::nullopt, {mul(phi_i, phi_j, 2, p)}},
    };
    return s;
}

Q8LemmaResult verify_q8_lemma(unsigned p) {
    Q8LemmaResult res;
    res.ab = gp_parameters(p);
    const CharTable t = frobenius_table(build_Gp(p));
    res.order = t.order;
    res.kernel_orbits = 0;
    std::set<std::uint64_t> orders;
    for (const auto& c : t.classes) {
        orders.insert(c.element_order);
        if (c.label.rfind("v[", 0) == 0) ++res.kernel_orbits;
    }
    res.element_orders.assign(orders.begin(), orders.end());
    std::optional<std::size_t> deg2;
    for (std::size_t i = 0; i < t.num_chars(); ++i)
        if (t.degree(i) == 2 && t.irreducibles[i].label.rfind("ind", 0) != 0) deg2 = i;
    if (!deg2) return res;
    const auto reports = upsilon_p(t, p);
    if (reports[*deg2].in_upsilon()) res.constant = reports[*deg2].constant;
    std::vector<std::uint64_t> expected{1, 2, 4, p};
    std::sort(expected.begin(), expected.end());
    res.ok = res.constant && *res.constant == 2 && res.element_orders == expected;
    return res;
}

ExampleResult verify_frobenius_example(const FrobeniusSpec& spec) {
    ExampleResult res;
    const CharTable t = frobenius_table(spec);
    const unsigned p = spec.complement.p;
    res.order = t.order;
    res.p_singular_classes = p_singular_classes(t, p).indices.size();
    for (const auto& r : upsilon_p(t, p)) {
        const bool induced = r.label.rfind("ind", 0) == 0;
        const std::string c = r.constant ? r.constant->get_str() : "none";
        const std::string tag = r.label + ":" + r.degree.get_str() + ":" + c;
        if (r.in_upsilon()) res.members.push_back(tag);
        const mpz_class want = induced ? mpz_class(-1) : r.degree;
        if (!r.in_upsilon() || *r.constant != want) res.mismatches.push_back(tag + " (expected c=" + want.get_str() + ")");
    }
    res.ok = res.mismatches.empty();
    return res;
}

FrobeniusSpec frobenius_spec_from_json(const json& j) {
    FrobeniusSpec s;
    try {
        s.name = j.value("name", std::string());
        s.complement.p = j.at("p").get<unsigned>();
        s.complement.d = j.at("d").get<unsigned>();
        const unsigned p = s.complement.p;
        auto matrix = [&](const json& m) {
            Matrix out;
            for (const auto& row : m) {
                if (row.size() != s.complement.d) throw std::invalid_argument("matrix row has wrong length");
                for (const auto& x : row) out.push_back(mod(x.get<long long>(), p));
            }
            if (out.size() != s.complement.d * s.complement.d) throw std::invalid_argument("matrix has wrong number of rows");
            return out;
        };
        for (const auto& g : j.at("generators")) s.complement.generators.push_back(matrix(g));
        s.complement_table = table_from_json(j.at("complement_table"));
        for (const auto& r : j.at("class_map")) {
            ClassRule rule;
            rule.class_label = r.at("class_label").get<std::string>();
            if (r.contains("order")) rule.order = r.at("order").get<std::uint64_t>();
            if (r.contains("trace")) rule.trace = mod(r.at("trace").get<long long>(), p);
            if (r.contains("representatives"))
                for (const auto& m : r.at("representatives")) rule.representatives.push_back(matrix(m));
            if (rule.representatives.empty() && (!rule.order || !rule.trace))
                throw std::invalid_argument("class map rule for " + rule.class_label + " needs order and trace or representatives");
            s.class_map.push_back(std::move(rule));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("Frobenius spec: ") + e.what());
    }
    return s;
}

json frobenius_spec_to_json(const FrobeniusSpec& s) {
    const unsigned d = s.complement.d;
    auto matrix = [&](const Matrix& m) {
        json rows = json::array();
        for (unsigned i = 0; i < d; ++i) rows.push_back(std::vector<int>(m.begin() + i * d, m.begin() + (i + 1) * d));
        return rows;
    };
    json j;
    j["name"] = s.name;
    j["p"] = s.complement.p;
    j["d"] = d;
    j["generators"] = json::array();
    for (const auto& g : s.complement.generators) j["generators"].push_back(matrix(g));
    j["complement_table"] = table_to_json(s.complement_table);
    j["class_map"] = json::array();
    for (const auto& r : s.class_map) {
        json e{{"class_label", r.class_label}};
        if (r.order) e["order"] = *r.order;
        if (r.trace) e["trace"] = *r.trace;
        if (!r.representatives.empty()) {
            e["representatives"] = json::array();
            for (const auto& m : r.representatives) e["representatives"].push_back(matrix(m));
        }
        j["class_map"].push_back(e);
    }
    return j;
}

FrobeniusSpec load_frobenius_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return frobenius_spec_from_json(j);
}

}  // namespace pconst
