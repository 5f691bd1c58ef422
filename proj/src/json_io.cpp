#include "cpar/json_io.hpp"

namespace cpar {

namespace {

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw JsonError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw JsonError(std::string("bad field '") + key + "': " + e.what());
    }
}

json tableau_json(const Tableau& t) { return t; }

Tableau tableau_from(const json& j) {
    try {
        return j.get<Tableau>();
    } catch (const json::exception& e) {
        throw JsonError(std::string("bad tableau: ") + e.what());
    }
}

}  // namespace

json to_json(const Diagram& d) {
    json blocks = json::array();
    for (const auto& b : d.blocks()) blocks.push_back({{"top", b.top}, {"bot", b.bot}, {"c", b.c}});
    return {{"r", d.r()}, {"k", d.k()}, {"l", d.l()}, {"blocks", blocks}};
}

Diagram diagram_from_json(const json& j) {
    const int r = get<int>(j, "r"), k = get<int>(j, "k"), l = get<int>(j, "l");
    if (r < 1 || k < 0 || l < 0) throw JsonError("r must be positive and arities nonnegative");
    std::vector<Block> bs;
    for (const auto& b : get<json>(j, "blocks")) {
        Block x;
        x.top = b.contains("top") ? get<std::vector<int>>(b, "top") : std::vector<int>{};
        x.bot = b.contains("bot") ? get<std::vector<int>>(b, "bot") : std::vector<int>{};
        x.c = b.contains("c") ? get<int>(b, "c") : 0;
        bs.push_back(std::move(x));
    }
    return canonicalize(std::move(bs), r, k, l);
}

json to_json(const Monomial& m) { return m; }

json to_json(const RSPair& x) {
    json P = json::array(), Q = json::array();
    for (const auto& t : x.P) P.push_back(tableau_json(t));
    for (const auto& t : x.Q) Q.push_back(tableau_json(t));
    return {{"P", P}, {"S", x.S}, {"Q", Q}, {"T", x.T}};
}

RSPair rs_from_json(const json& j) {
    RSPair x;
    for (const auto& t : get<json>(j, "P")) x.P.push_back(tableau_from(t));
    for (const auto& t : get<json>(j, "Q")) x.Q.push_back(tableau_from(t));
    x.S = get<RowTuple>(j, "S");
    x.T = get<RowTuple>(j, "T");
    return x;
}

json to_json(const RibbonTableau& t) {
    json shapes = json::array({json::array()}), labels = json::array();
    Shape s;
    for (const auto& e : t.entries) {
        s = add_cells(s, e.cells);
        shapes.push_back(s);
        labels.push_back(e.label);
    }
    return {{"r", t.r}, {"shapes", shapes}, {"labels", labels}, {"grid", t.grid()}};
}

json to_json(const SWPair& x) {
    return {{"P", to_json(x.P)}, {"S", to_json(x.S)}, {"Q", to_json(x.Q)}, {"T", to_json(x.T)}};
}

json to_json(const Multipartition& m) { return m; }

Partition partition_from_json(const json& j) {
    Partition p;
    try {
        p = j.get<Partition>();
    } catch (const json::exception& e) {
        throw JsonError(std::string("bad partition: ") + e.what());
    }
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] <= 0 || (i && p[i] > p[i - 1])) throw JsonError("partition parts must be positive and nonincreasing");
    return p;
}

Multipartition multipartition_from_json(const json& j) {
    if (!j.is_array()) throw JsonError("multipartition must be a list of lists");
    Multipartition m;
    for (const auto& p : j) m.push_back(partition_from_json(p));
    return m;
}

json to_json(const PolyMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        out.push_back(r);
    }
    return out;
}

}  // namespace cpar
