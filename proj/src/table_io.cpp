#include "pconst/table_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace pconst {

using nlohmann::json;

namespace {

json big_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json rational_to_json(const mpq_class& q) {
    if (q.get_den() == 1) return big_to_json(q.get_num());
    return q.get_str();
}

mpq_class rational_from_json(const json& j) {
    if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational \"" + j.get<std::string>() + "\"");
        q.canonicalize();
        return q;
    }
    throw std::invalid_argument("expected an integer or rational string, got " + j.dump());
}

mpz_class big_from_json(const json& j) {
    const mpq_class q = rational_from_json(j);
    if (q.get_den() != 1) throw std::invalid_argument("expected an integer, got " + j.dump());
    return q.get_num();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

json cycnum_to_json(const CycNum& v, unsigned conductor) {
    if (auto z = v.as_rational_integer()) return big_to_json(*z);
    json terms = json::array();
    for (const auto& [e, c] : v.lifted(conductor).terms()) terms.push_back(json::array({e, rational_to_json(c)}));
    return terms;
}

CycNum cycnum_from_json(const json& j, unsigned conductor) {
    if (!j.is_array()) return CycNum(rational_from_json(j));
    std::vector<std::pair<long, mpq_class>> terms;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
            throw std::invalid_argument("bad cyclotomic term " + term.dump());
        terms.emplace_back(term[0].get<long>(), rational_from_json(term[1]));
    }
    return CycNum::from_terms(conductor, terms);
}

json table_to_json(const CharTable& t) {
    json j;
    j["name"] = t.name;
    j["order"] = t.order.get_str();
    j["conductor"] = t.conductor;
    j["classes"] = json::array();
    for (const auto& c : t.classes)
        j["classes"].push_back({{"label", c.label}, {"size", c.size.get_str()}, {"element_order", c.element_order}});
    j["irreducibles"] = json::array();
    for (const auto& chi : t.irreducibles) {
        json values = json::array();
        for (const auto& v : chi.values) values.push_back(cycnum_to_json(v, t.conductor));
        j["irreducibles"].push_back({{"label", chi.label}, {"values", values}});
    }
    return j;
}

CharTable table_from_json(const json& j) {
    CharTable t;
    t.name = field(j, "name").get<std::string>();
    t.order = big_from_json(field(j, "order"));
    const auto conductor = field(j, "conductor").get<long long>();
    if (conductor < 1 || conductor > std::numeric_limits<int>::max()) throw std::invalid_argument("conductor out of range");
    t.conductor = static_cast<unsigned>(conductor);
    for (const auto& c : field(j, "classes")) {
        const auto order = field(c, "element_order").get<long long>();
        if (order < 1) throw std::invalid_argument("element_order must be positive");
        t.classes.push_back({field(c, "label").get<std::string>(), big_from_json(field(c, "size")),
                             static_cast<std::uint64_t>(order)});
    }
    for (const auto& chi : field(j, "irreducibles")) {
        Irreducible row;
        row.label = field(chi, "label").get<std::string>();
        for (const auto& v : field(chi, "values")) row.values.push_back(cycnum_from_json(v, t.conductor));
        if (row.values.size() != t.classes.size())
            throw std::invalid_argument("character " + row.label + " has " + std::to_string(row.values.size()) +
                                        " values for " + std::to_string(t.classes.size()) + " classes");
        t.irreducibles.push_back(std::move(row));
    }
    require_valid(t);
    return t;
}

CharTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    try {
        return table_from_json(j);
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void save_table(const CharTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << table_to_json(t).dump(1) << '\n';
}

}  // namespace pconst
