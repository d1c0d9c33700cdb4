#pragma once

#include <json.hpp>

#include "scop/fox_neuwirth.hpp"
#include "scop/hochschild.hpp"
#include "scop/seq.hpp"
#include "scop/tree.hpp"
#include "scop/two_tree.hpp"

namespace scop {

// stable key order so identical runs produce byte-identical reports
using Json = nlohmann::ordered_json;

// 2-tree: {"source": n, "target": m, "values": [..], "sc": bool}
Json to_json(const TwoTree& t);
TwoTree two_tree_from_json(const Json& j);

// sequence element: {"blocks": [..], "J": n, "arrangement": [[block, index], ..],
//                    "q": [..], "sc": bool, "alg": n}
Json to_json(const SeqElem& u);
SeqElem seq_from_json(const Json& j);

// tree: nested {"kind": "unmarked|cochain|output|algebra", "label": n,
//               "children": [..]}; sector indices are derived, never stored
Json to_json(const MarkedPlanarTree& t);
MarkedPlanarTree tree_from_json(const Json& j);

Json to_json(const TotalOrderWord& w);
TotalOrderWord word_from_json(const Json& j);

// sigma at set level: {"n": labels, "sc": bool, "sa": [..], "values": [..]}
Json to_json(const SigmaData& s);
SigmaData sigma_from_json(const Json& j);

// algebra: {"dim": d, "basis": [names], "table": [[[coeffs]]]}, e0 the unit
Json to_json(const Algebra<Rational>& a);
Algebra<Rational> algebra_from_json(const Json& j);

inline Json to_json(const TwoTree& t) {
    return Json{{"source", t.map.source},
                {"target", t.map.target},
                {"values", t.map.values},
                {"sc", t.sc}};
}

inline TwoTree two_tree_from_json(const Json& j) {
    return TwoTree(MonotoneMap(j.at("source").get<int>(), j.at("target").get<int>(),
                               j.at("values").get<std::vector<int>>()),
                   j.value("sc", false));
}

inline Json to_json(const SeqElem& u) {
    Json arr = Json::array();
    for (const auto& t : u.arrangement) arr.push_back(Json::array({t.block, t.index}));
    Json j{{"blocks", u.blocks}, {"arrangement", arr}, {"sc", u.sc}};
    if (u.sc)
        j["alg"] = u.n_alg;
    else {
        j["J"] = u.J;
        j["q"] = u.q;
    }
    return j;
}

inline SeqElem seq_from_json(const Json& j) {
    SeqElem u;
    u.blocks = j.at("blocks").get<std::vector<int>>();
    u.sc = j.value("sc", false);
    if (u.sc) {
        u.n_alg = j.value("alg", 0);
        u.J = 0;
    } else {
        u.J = j.at("J").get<int>();
        u.q = j.at("q").get<std::vector<int>>();
    }
    for (const auto& e : j.at("arrangement"))
        u.arrangement.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return u;
}

inline Json to_json(const MarkedPlanarTree& t) {
    auto rec = [](const TreeNode& v, auto&& self) -> Json {
        Json j;
        switch (v.kind) {
            case TreeNode::Kind::unmarked: j["kind"] = "unmarked"; break;
            case TreeNode::Kind::cochain: j["kind"] = "cochain"; break;
            case TreeNode::Kind::output: j["kind"] = "output"; break;
            case TreeNode::Kind::algebra: j["kind"] = "algebra"; break;
        }
        if (v.kind != TreeNode::Kind::unmarked) j["label"] = v.label;
        if (!v.children.empty()) {
            Json c = Json::array();
            for (const auto& ch : v.children) c.push_back(self(ch, self));
            j["children"] = c;
        }
        return j;
    };
    return rec(t.root, rec);
}

inline MarkedPlanarTree tree_from_json(const Json& j) {
    auto rec = [](const Json& n, auto&& self) -> TreeNode {
        TreeNode v;
        const std::string k = n.at("kind").get<std::string>();
        if (k == "unmarked")
            v.kind = TreeNode::Kind::unmarked;
        else if (k == "cochain")
            v.kind = TreeNode::Kind::cochain;
        else if (k == "output")
            v.kind = TreeNode::Kind::output;
        else if (k == "algebra")
            v.kind = TreeNode::Kind::algebra;
        else
            throw std::invalid_argument("tree_from_json: unknown vertex kind '" + k + "'");
        v.label = n.value("label", -1);
        if (n.contains("children"))
            for (const auto& c : n.at("children")) v.children.push_back(self(c, self));
        return v;
    };
    MarkedPlanarTree t{rec(j, rec)};
    t.validate();
    return t;
}

inline Json to_json(const TotalOrderWord& w) {
    Json arr = Json::array();
    for (const auto& t : w.tokens) {
        switch (t.kind) {
            case Token::Kind::sector:
                arr.push_back(Json::array({"s", t.block, t.index}));
                break;
            case Token::Kind::output:
                arr.push_back(Json::array({"j", t.block}));
                break;
            case Token::Kind::algebra:
                arr.push_back(Json::array({"a", t.block}));
                break;
        }
    }
    return arr;
}

inline TotalOrderWord word_from_json(const Json& j) {
    TotalOrderWord w;
    for (const auto& e : j) {
        const std::string k = e.at(0).get<std::string>();
        if (k == "s")
            w.tokens.push_back({Token::Kind::sector, e.at(1).get<int>(), e.at(2).get<int>()});
        else if (k == "j")
            w.tokens.push_back({Token::Kind::output, e.at(1).get<int>(), 0});
        else if (k == "a")
            w.tokens.push_back({Token::Kind::algebra, e.at(1).get<int>(), 0});
        else
            throw std::invalid_argument("word_from_json: unknown token kind '" + k + "'");
    }
    return w;
}

inline Json to_json(const SigmaData& s) {
    return Json{{"n", s.n_labels}, {"sc", s.sc}, {"sa", s.sa_labels}, {"values", s.sigma.values}};
}

inline SigmaData sigma_from_json(const Json& j) {
    SigmaData s;
    s.n_labels = j.at("n").get<int>();
    s.sc = j.value("sc", false);
    s.sa_labels = j.value("sa", std::vector<int>{});
    s.sigma.values = j.at("values").get<std::vector<int>>();
    return s;
}

inline Json to_json(const Algebra<Rational>& a) {
    Json table = Json::array();
    for (int i = 0; i < a.dim; ++i) {
        Json row = Json::array();
        for (int jj = 0; jj < a.dim; ++jj) {
            Json cell = Json::array();
            for (int k = 0; k < a.dim; ++k) cell.push_back(a.table[i][jj][k].str());
            row.push_back(cell);
        }
        table.push_back(row);
    }
    return Json{{"dim", a.dim}, {"basis", a.names}, {"table", table}};
}

inline Algebra<Rational> algebra_from_json(const Json& j) {
    Algebra<Rational> a;
    a.dim = j.at("dim").get<int>();
    a.names = j.value("basis", std::vector<std::string>{});
    a.table.assign(a.dim, std::vector<std::vector<Rational>>(
                              a.dim, std::vector<Rational>(a.dim, Rational(0))));
    const auto& table = j.at("table");
    for (int i = 0; i < a.dim; ++i)
        for (int jj = 0; jj < a.dim; ++jj)
            for (int k = 0; k < a.dim; ++k) {
                const auto& cell = table.at(i).at(jj).at(k);
                if (cell.is_number_integer())
                    a.table[i][jj][k] = Rational(cell.get<long>());
                else
                    a.table[i][jj][k] = Rational(cell.get<std::string>());
            }
    a.validate();
    return a;
}

}  // namespace scop
