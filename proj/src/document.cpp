#include "bialg/document.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "bialg/errors.hpp"

namespace bialg {

using ordered_json = nlohmann::ordered_json;

namespace {

void check_index(int v, int dim, const std::string& where) {
    if (v < 0 || v >= dim)
        throw SchemaError(where + ": index " + std::to_string(v) + " out of range [0," +
                          std::to_string(dim - 1) + "]");
}

std::pair<int, int> read_pair(const ordered_json& j, int dim, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw SchemaError(where + ": expected a pair of integers");
    int a = j[0].get<int>(), b = j[1].get<int>();
    check_index(a, dim, where);
    check_index(b, dim, where);
    if (a >= b) throw SchemaError(where + ": pair [" + std::to_string(a) + "," + std::to_string(b) +
                                  "] must be strictly increasing");
    return {a, b};
}

Rational read_rational(const ordered_json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(where + ": rationals must be strings (\"p\" or \"p/q\")");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const SchemaError& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

}  // namespace

ProblemDocument parse_document(const std::string& bytes) {
    ordered_json j;
    try {
        j = ordered_json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("top level: expected an object");

    static const std::vector<std::string> known = {"name",     "dimension", "basis",
                                                   "bracket",  "cobracket", "operator",
                                                   "r_matrix"};
    for (const auto& [key, _] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw SchemaError("unknown field \"" + key + "\"");

    ProblemDocument doc;
    if (!j.contains("name") || !j["name"].is_string()) throw SchemaError("name: required string");
    doc.name = j["name"].get<std::string>();
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw SchemaError("dimension: required integer");
    doc.dimension = j["dimension"].get<int>();
    if (doc.dimension <= 0) throw SchemaError("dimension: must be positive");

    if (!j.contains("basis") || !j["basis"].is_array())
        throw SchemaError("basis: required array of strings");
    for (const auto& s : j["basis"]) {
        if (!s.is_string()) throw SchemaError("basis: entries must be strings");
        doc.basis.push_back(s.get<std::string>());
    }
    if (static_cast<int>(doc.basis.size()) != doc.dimension)
        throw SchemaError("basis: expected " + std::to_string(doc.dimension) + " names, got " +
                          std::to_string(doc.basis.size()));

    if (!j.contains("bracket") || !j["bracket"].is_array())
        throw SchemaError("bracket: required array (may be empty)");
    for (size_t idx = 0; idx < j["bracket"].size(); ++idx) {
        const auto& e = j["bracket"][idx];
        const std::string where = "bracket[" + std::to_string(idx) + "]";
        if (!e.is_object() || !e.contains("on") || !e.contains("value"))
            throw SchemaError(where + ": expected {on:[i,j], value:{k: rational}}");
        BracketEntry entry;
        std::tie(entry.i, entry.j) = read_pair(e["on"], doc.dimension, where + ".on");
        if (!e["value"].is_object()) throw SchemaError(where + ".value: expected an object");
        for (const auto& [k, v] : e["value"].items()) {
            int kk;
            try {
                size_t pos = 0;
                kk = std::stoi(k, &pos);
                if (pos != k.size()) throw std::invalid_argument(k);
            } catch (const std::exception&) {
                throw SchemaError(where + ".value: key \"" + k + "\" is not a basis index");
            }
            check_index(kk, doc.dimension, where + ".value");
            entry.value[kk] = read_rational(v, where + ".value[" + k + "]");
        }
        for (const auto& prev : doc.bracket)
            if (prev.i == entry.i && prev.j == entry.j)
                throw SchemaError(where + ": duplicate entry for pair [" + std::to_string(entry.i) +
                                  "," + std::to_string(entry.j) + "]");
        doc.bracket.push_back(std::move(entry));
    }

    if (j.contains("cobracket")) {
        if (!j["cobracket"].is_array()) throw SchemaError("cobracket: expected an array");
        std::vector<CobracketEntry> entries;
        for (size_t idx = 0; idx < j["cobracket"].size(); ++idx) {
            const auto& e = j["cobracket"][idx];
            const std::string where = "cobracket[" + std::to_string(idx) + "]";
            if (!e.is_object() || !e.contains("on") || !e.contains("value"))
                throw SchemaError(where + ": expected {on:i, value:[{pair:[j,k], coeff: rational}]}");
            CobracketEntry entry;
            if (!e["on"].is_number_integer()) throw SchemaError(where + ".on: expected an integer");
            entry.on = e["on"].get<int>();
            check_index(entry.on, doc.dimension, where + ".on");
            if (!e["value"].is_array()) throw SchemaError(where + ".value: expected an array");
            for (size_t t = 0; t < e["value"].size(); ++t) {
                const auto& term = e["value"][t];
                const std::string tw = where + ".value[" + std::to_string(t) + "]";
                if (!term.is_object() || !term.contains("pair") || !term.contains("coeff"))
                    throw SchemaError(tw + ": expected {pair:[j,k], coeff: rational}");
                auto pr = read_pair(term["pair"], doc.dimension, tw + ".pair");
                if (entry.value.count(pr)) throw SchemaError(tw + ": duplicate pair");
                entry.value[pr] = read_rational(term["coeff"], tw + ".coeff");
            }
            for (const auto& prev : entries)
                if (prev.on == entry.on)
                    throw SchemaError(where + ": duplicate entry for basis index " + std::to_string(entry.on));
            entries.push_back(std::move(entry));
        }
        doc.cobracket = std::move(entries);
    }

    if (j.contains("operator")) {
        if (!j["operator"].is_array() || static_cast<int>(j["operator"].size()) != doc.dimension)
            throw SchemaError("operator: expected a " + std::to_string(doc.dimension) + "x" +
                              std::to_string(doc.dimension) + " array of rational strings");
        std::vector<std::vector<Rational>> rows;
        for (size_t i = 0; i < j["operator"].size(); ++i) {
            const auto& row = j["operator"][i];
            if (!row.is_array() || static_cast<int>(row.size()) != doc.dimension)
                throw SchemaError("operator[" + std::to_string(i) + "]: expected " +
                                  std::to_string(doc.dimension) + " entries");
            std::vector<Rational> r;
            for (size_t k = 0; k < row.size(); ++k)
                r.push_back(read_rational(row[k], "operator[" + std::to_string(i) + "][" +
                                                      std::to_string(k) + "]"));
            rows.push_back(std::move(r));
        }
        doc.op = std::move(rows);
    }

    if (j.contains("r_matrix")) {
        if (!j["r_matrix"].is_array()) throw SchemaError("r_matrix: expected an array");
        std::map<std::pair<int, int>, Rational> terms;
        for (size_t t = 0; t < j["r_matrix"].size(); ++t) {
            const auto& term = j["r_matrix"][t];
            const std::string tw = "r_matrix[" + std::to_string(t) + "]";
            if (!term.is_object() || !term.contains("pair") || !term.contains("coeff"))
                throw SchemaError(tw + ": expected {pair:[i,j], coeff: rational}");
            auto pr = read_pair(term["pair"], doc.dimension, tw + ".pair");
            if (terms.count(pr)) throw SchemaError(tw + ": duplicate pair");
            terms[pr] = read_rational(term["coeff"], tw + ".coeff");
        }
        doc.r_matrix = std::move(terms);
    }
    return doc;
}

std::string serialize_document(const ProblemDocument& doc) {
    ordered_json j;
    j["name"] = doc.name;
    j["dimension"] = doc.dimension;
    j["basis"] = doc.basis;
    j["bracket"] = ordered_json::array();
    for (const auto& e : doc.bracket) {
        ordered_json entry;
        entry["on"] = {e.i, e.j};
        ordered_json value = ordered_json::object();
        for (const auto& [k, v] : e.value) value[std::to_string(k)] = v.str();
        entry["value"] = std::move(value);
        j["bracket"].push_back(std::move(entry));
    }
    if (doc.cobracket) {
        j["cobracket"] = ordered_json::array();
        for (const auto& e : *doc.cobracket) {
            ordered_json entry;
            entry["on"] = e.on;
            entry["value"] = ordered_json::array();
            for (const auto& [pr, coeff] : e.value)
                entry["value"].push_back({{"pair", {pr.first, pr.second}}, {"coeff", coeff.str()}});
            j["cobracket"].push_back(std::move(entry));
        }
    }
    if (doc.op) {
        j["operator"] = ordered_json::array();
        for (const auto& row : *doc.op) {
            ordered_json r = ordered_json::array();
            for (const auto& v : row) r.push_back(v.str());
            j["operator"].push_back(std::move(r));
        }
    }
    if (doc.r_matrix) {
        j["r_matrix"] = ordered_json::array();
        for (const auto& [pr, coeff] : *doc.r_matrix)
            j["r_matrix"].push_back({{"pair", {pr.first, pr.second}}, {"coeff", coeff.str()}});
    }
    return j.dump(2) + "\n";
}

bool operator==(const ProblemDocument& a, const ProblemDocument& b) {
    return serialize_document(a) == serialize_document(b);
}

LieAlgebra document_algebra(const ProblemDocument& doc) {
    StructureTensor t(doc.dimension, SpaceTag::primal);
    for (const auto& e : doc.bracket) {
        Vec v = vec_zero(doc.dimension);
        for (const auto& [k, coeff] : e.value) v[static_cast<size_t>(k)] = coeff;
        t.set_entry(e.i, e.j, v);
    }
    return LieAlgebra(doc.name, doc.basis, t);
}

Cobracket document_cobracket(const ProblemDocument& doc) {
    if (!doc.cobracket) throw SchemaError("document \"" + doc.name + "\" has no cobracket");
    std::vector<Multivector> vals(static_cast<size_t>(doc.dimension),
                                  Multivector(doc.dimension, 2));
    for (const auto& e : *doc.cobracket) {
        Multivector m(doc.dimension, 2);
        for (const auto& [pr, coeff] : e.value) m.set_component({pr.first, pr.second}, coeff);
        vals[static_cast<size_t>(e.on)] = std::move(m);
    }
    return Cobracket(doc.dimension, std::move(vals));
}

Operator document_operator(const ProblemDocument& doc) {
    if (!doc.op) throw SchemaError("document \"" + doc.name + "\" has no operator");
    Operator n(doc.dimension, doc.dimension);
    for (int i = 0; i < doc.dimension; ++i)
        for (int j = 0; j < doc.dimension; ++j)
            n.at(i, j) = (*doc.op)[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return n;
}

Multivector document_rmatrix(const ProblemDocument& doc) {
    if (!doc.r_matrix) throw SchemaError("document \"" + doc.name + "\" has no r_matrix");
    Multivector r(doc.dimension, 2);
    for (const auto& [pr, coeff] : *doc.r_matrix) r.set_component({pr.first, pr.second}, coeff);
    return r;
}

namespace {

ProblemDocument make_doc(std::string name, int dim,
                         std::vector<std::tuple<int, int, std::map<int, long>>> bracket) {
    ProblemDocument d;
    d.name = std::move(name);
    d.dimension = dim;
    for (int i = 1; i <= dim; ++i) d.basis.push_back("X" + std::to_string(i));
    for (auto& [i, j, val] : bracket) {
        BracketEntry e;
        e.i = i;
        e.j = j;
        for (auto& [k, c] : val) e.value[k] = Rational(c);
        d.bracket.push_back(std::move(e));
    }
    return d;
}

std::vector<CobracketEntry> cobr(std::vector<std::tuple<int, std::map<std::pair<int, int>, long>>> in) {
    std::vector<CobracketEntry> out;
    for (auto& [on, val] : in) {
        CobracketEntry e;
        e.on = on;
        for (auto& [pr, c] : val) e.value[pr] = Rational(c);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<std::vector<Rational>> op_rows(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rational>> out;
    for (auto& row : rows) {
        std::vector<Rational> r;
        for (long v : row) r.push_back(Rational(v));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"euler_top", "solvable22", "r4_coboundary", "so3", "book", "sl2r"};
}

ProblemDocument catalog_entry(const std::string& name) {
    if (name == "book") {
        // [X1,X2] = -X2, [X1,X3] = -X3
        return make_doc("book", 3, {{0, 1, {{1, -1}}}, {0, 2, {{2, -1}}}});
    }
    if (name == "so3") {
        // [X1,X2] = -X3, [X1,X3] = X2, [X2,X3] = -X1
        return make_doc("so3", 3, {{0, 1, {{2, -1}}}, {0, 2, {{1, 1}}}, {1, 2, {{0, -1}}}});
    }
    if (name == "sl2r") {
        // [X1,X2] = -X2, [X1,X3] = X3, [X2,X3] = -2X1
        return make_doc("sl2r", 3, {{0, 1, {{1, -1}}}, {0, 2, {{2, 1}}}, {1, 2, {{0, -2}}}});
    }
    if (name == "euler_top") {
        ProblemDocument d = make_doc("euler_top", 3, {{0, 1, {{1, -1}}}, {0, 2, {{2, -1}}}});
        d.cobracket = cobr({{0, {{{1, 2}, -1}}},   // delta(X1) = -X2^X3
                            {1, {{{0, 2}, 1}}},    // delta(X2) =  X1^X3
                            {2, {{{0, 1}, -1}}}});  // delta(X3) = -X1^X2
        // n(X1) = X3, n(X2) = X2, n(X3) = -X1 - X2 + X3 (columns)
        d.op = op_rows({{0, 0, -1}, {0, 1, -1}, {1, 0, 1}});
        return d;
    }
    if (name == "solvable22") {
        ProblemDocument d = make_doc("solvable22", 4, {{0, 1, {{1, 1}}}, {2, 3, {{3, 1}}}});
        d.cobracket = cobr({{1, {{{0, 1}, 2}}},    // delta(X2) = 2 X1^X2
                            {2, {{{2, 3}, 1}}}});   // delta(X3) = X3^X4
        d.op = op_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
        return d;
    }
    if (name == "r4_coboundary") {
        ProblemDocument d = make_doc("r4_coboundary", 4, {{0, 3, {{0, 1}}}, {2, 3, {{1, 1}}}});
        // n(X1)=X1, n(X2)=X1+X2, n(X3)=X1+X3, n(X4)=X2-X3+X4 (columns)
        d.op = op_rows({{1, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, -1}, {0, 0, 0, 1}});
        std::map<std::pair<int, int>, Rational> r;
        r[{1, 2}] = Rational(1);    // X2 ^ X3
        r[{0, 3}] = Rational(-1);   // -X1 ^ X4
        d.r_matrix = std::move(r);
        return d;
    }
    throw UnknownName("no catalog entry named \"" + name + "\"");
}

}  // namespace bialg
