#include "lrb/json_io.hpp"

#include <stdexcept>

namespace lrb {

json to_json(const Tableau& t) { return {{"outer", t.outer}, {"inner", t.inner}, {"rows", t.rows}}; }

Tableau tableau_from_json(const json& j) {
    try {
        Tableau t;
        t.outer = j.at("outer").get<Partition>();
        t.inner = j.value("inner", Partition{});
        t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
        if (!is_semistandard(t)) throw std::invalid_argument("tableau is not semistandard");
        return t;
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("bad tableau json: ") + ex.what());
    }
}

static const char* kind_name(Kind k) {
    switch (k) {
    case Kind::T: return "T";
    case Kind::TBAR0: return "TBAR0";
    case Kind::SP_PLUS: return "SP_PLUS";
    case Kind::SP_MINUS: return "SP_MINUS";
    }
    return "?";
}

static Kind kind_from(const std::string& s) {
    if (s == "T") return Kind::T;
    if (s == "TBAR0") return Kind::TBAR0;
    if (s == "SP_PLUS" || s == "sp+") return Kind::SP_PLUS;
    if (s == "SP_MINUS" || s == "sp-") return Kind::SP_MINUS;
    throw std::invalid_argument("unknown component kind " + s);
}

json to_json(const SpinorElement& e) {
    json comps = json::array();
    for (auto& c : e.comps)
        comps.push_back({{"kind", kind_name(c.kind)}, {"a", c.a}, {"left", c.left}, {"right", c.right}});
    return {{"n", e.n}, {"mu", e.mu}, {"components", comps}};
}

SpinorElement element_from_json(const json& j) {
    try {
        SpinorElement e;
        e.n = j.at("n").get<int>();
        e.mu = canonical(j.at("mu").get<Partition>());
        for (auto& c : j.at("components")) {
            TwoColumn t;
            t.kind = kind_from(c.at("kind").get<std::string>());
            t.a = c.value("a", 0);
            t.left = c.value("left", Column{});
            t.right = c.value("right", Column{});
            e.comps.push_back(t);
        }
        return e;
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("bad element json: ") + ex.what());
    }
}

json to_json(const SeparationResult& r) {
    json cols = json::array();
    for (size_t k = 0; k < r.columns.size(); ++k) cols.push_back({{"column", r.columns[k]}, {"tail", r.tails[k]}});
    return {{"delta", r.delta}, {"tail", to_json(r.tail)}, {"lambda", r.lambda}, {"columns", cols}, {"barred", r.barred}};
}

json to_json(const SlideTrace& s) {
    return {{"n", s.n}, {"mu", s.mu}, {"before", s.before}, {"after", s.after}, {"left", s.left}, {"left_tail", s.left_tail}};
}

json to_json(const Poly& p) {
    json c = json::object();
    for (auto [e, v] : p.sparse()) c[std::to_string(e)] = v;
    return {{"coeffs", c}};
}

}  // namespace lrb
