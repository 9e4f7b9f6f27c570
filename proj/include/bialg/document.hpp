#pragma once

#include <optional>

#include "bialg/bialgebra.hpp"

namespace bialg {

// File-format mirror of an algebra problem. All rationals are strings
// ("p" or "p/q", q > 0), indices are 0-based, and index pairs are strictly
// increasing; non-canonical input is rejected, never normalized.
struct BracketEntry {
    int i = 0, j = 0;                // on: [i, j], i < j
    std::map<int, Rational> value;   // k -> coefficient of e_k
};

struct CobracketEntry {
    int on = 0;                                    // basis index
    std::map<std::pair<int, int>, Rational> value;  // (j < k) -> coefficient of X_j ^ X_k
};

struct ProblemDocument {
    std::string name;
    int dimension = 0;
    std::vector<std::string> basis;
    std::vector<BracketEntry> bracket;
    std::optional<std::vector<CobracketEntry>> cobracket;
    std::optional<std::vector<std::vector<Rational>>> op;  // row i, col j: coeff of e_i in n(e_j)
    std::optional<std::map<std::pair<int, int>, Rational>> r_matrix;
};

// Parsing throws ParseError on malformed JSON and SchemaError with a
// field-level diagnostic on anything else. serialize(parse(x)) is canonical
// and parse(serialize(d)) == d.
ProblemDocument parse_document(const std::string& bytes);
std::string serialize_document(const ProblemDocument& doc);
bool operator==(const ProblemDocument& a, const ProblemDocument& b);

LieAlgebra document_algebra(const ProblemDocument& doc);
Cobracket document_cobracket(const ProblemDocument& doc);   // SchemaError if absent
Operator document_operator(const ProblemDocument& doc);     // SchemaError if absent
Multivector document_rmatrix(const ProblemDocument& doc);   // SchemaError if absent

// Built-in examples: euler_top, solvable22, r4_coboundary, so3, book, sl2r.
std::vector<std::string> catalog_names();
ProblemDocument catalog_entry(const std::string& name);  // UnknownName

}  // namespace bialg
