#include "jml/document.hpp"

#include <utility>

namespace jml {

namespace {

// Fiber T^2 with one vertex, edges a and b and the square D.
const std::string torusCells = R"("complexM": {
      "cells": [1, 2, 1],
      "boundary": [[],
                   [[[0, 1, "a"], [0, -1, ""]], [[0, 1, "b"], [0, -1, ""]]],
                   [[[0, 1, ""], [0, -1, "a b a^-1"], [1, 1, "a"], [1, -1, ""]]]]
    })";

// Fiber S^1 with one vertex and the edge a.
const std::string circleCells = R"("complexM": {"cells": [1, 1], "boundary": [[], [[[0, 1, "a"], [0, -1, ""]]]]},
    "phiTilde": [[[[0, 1, ""]]], [[[0, 1, ""]]]],
    "u": "u",
    "simplicial": {"kind": "lattice", "d": 1, "N": 3, "m": 1, "S": [[1]], "generators": ["a"]})";

const std::string pointCells = R"("complexM": {"cells": [1], "boundary": [[]]},
    "phiTilde": [[[[0, 1, ""]]]],
    "u": "u",
    "simplicial": {"kind": "lattice", "d": 0})";

const std::vector<std::pair<std::string, std::string>>& library()
{
    static const std::vector<std::pair<std::string, std::string>> docs = {
        {"point", R"({
    "schema": "jml/1",
    "name": "point",
    "split": true,
    "description": "M is a point, X is the circle",
    "representation": {"dim": 1, "generators": [{"name": "u", "matrix": "1", "xi": 1}]},
    )" + pointCells + R"(,
    "queries": {"lambda": ["1", "2", "-1"]}
})"},
        {"circle-id", R"({
    "schema": "jml/1",
    "name": "circle-id",
    "split": true,
    "description": "identity of the circle, X is the torus",
    "representation": {
      "dim": 1,
      "generators": [{"name": "a", "matrix": "1"}, {"name": "u", "matrix": "1", "xi": 1}],
      "relators": ["u a u^-1 a^-1"]
    },
    )" + circleCells + R"(,
    "queries": {"lambda": ["1", "2", "-1"]}
})"},
        {"circle-rotation", R"({
    "schema": "jml/1",
    "name": "circle-rotation",
    "split": true,
    "description": "rotation by one vertex of a three-vertex circle, X is the torus",
    "representation": {
      "dim": 1,
      "generators": [{"name": "a", "matrix": "1"}, {"name": "u", "matrix": "1", "xi": 1}],
      "relators": ["u a u^-1 a^-1"]
    },
    "complexM": {
      "cells": [3, 3],
      "boundary": [[], [[[1, 1, ""], [0, -1, ""]], [[2, 1, ""], [1, -1, ""]], [[0, 1, "a"], [2, -1, ""]]]]
    },
    "phiTilde": [[[[1, 1, ""]], [[2, 1, ""]], [[0, 1, "a"]]],
                 [[[1, 1, ""]], [[2, 1, ""]], [[0, 1, "a"]]]],
    "u": "u",
    "simplicial": {
      "kind": "ordered",
      "vertices": 3,
      "simplices": [[0], [1], [2], [0, 1], [1, 2], [0, 2]],
      "edgeTokens": [[0, 1, ""], [1, 2, ""], [0, 2, "a^-1"]],
      "phi": [1, 2, 0],
      "vert": ["u", "u", "u a^-1"],
      "subdivide": true
    },
    "queries": {"lambda": ["1", "2", "-1"]}
})"},
        {"heisenberg", R"({
    "schema": "jml/1",
    "name": "heisenberg",
    "description": "the shear [[1,1],[0,1]] of the torus, X is the Heisenberg nilmanifold",
    "representation": {
      "dim": 1,
      "generators": [{"name": "a", "matrix": "1"}, {"name": "b", "matrix": "1"},
                     {"name": "u", "matrix": "1", "xi": 1}],
      "relators": ["a b a^-1 b^-1", "u a u^-1 a^-1", "u b u^-1 b^-1 a^-1"]
    },
    )" + torusCells + R"(,
    "phiTilde": [[[[0, 1, ""]]],
                 [[[0, 1, ""]], [[0, 1, ""], [1, 1, "a"]]],
                 [[[0, 1, "a"]]]],
    "u": "u",
    "simplicial": {"kind": "lattice", "d": 2, "N": 1, "m": 2, "S": [[1, 1], [0, 1]], "generators": ["a", "b"]},
    "queries": {"lambda": ["1", "-1", "2"]}
})"},
        {"anosov", R"({
    "schema": "jml/1",
    "name": "anosov",
    "description": "the Anosov map [[2,1],[1,1]] of the torus",
    "representation": {
      "dim": 1,
      "generators": [{"name": "a", "matrix": "1"}, {"name": "b", "matrix": "1"},
                     {"name": "u", "matrix": "1", "xi": 1}],
      "relators": ["a b a^-1 b^-1", "u a u^-1 b^-1 a^-2", "u b u^-1 b^-1 a^-1"]
    },
    )" + torusCells + R"(,
    "phiTilde": [[[[0, 1, ""]]],
                 [[[0, 1, ""], [0, 1, "a"], [1, 1, "a^2"]], [[0, 1, ""], [1, 1, "a"]]],
                 [[[0, 1, "a"]]]],
    "u": "u",
    "simplicial": {"kind": "lattice", "d": 2, "N": 1, "m": 3, "S": [[2, 1], [1, 1]], "generators": ["a", "b"]},
    "queries": {"lambda": ["1", "t^2-3t+1", "-1"]}
})"},
        {"circle-rank1", R"({
    "schema": "jml/1",
    "name": "circle-rank1",
    "split": true,
    "description": "X is the circle with the rank one representation u -> -2",
    "representation": {"dim": 1, "generators": [{"name": "u", "matrix": "-2", "xi": 1}]},
    )" + pointCells + R"(,
    "queries": {"lambda": ["-1/2", "1", "-2"]}
})"},
        {"circle-rank2", R"({
    "schema": "jml/1",
    "name": "circle-rank2",
    "split": true,
    "description": "X is the circle with u acting by a quarter turn",
    "representation": {"dim": 2, "generators": [{"name": "u", "matrix": [["0", "-1"], ["1", "0"]], "xi": 1}]},
    )" + pointCells + R"(,
    "queries": {"lambda": ["i", "-i", "t^2+1", "1"]}
})"},
        {"point-unipotent", R"({
    "schema": "jml/1",
    "name": "point-unipotent",
    "split": true,
    "description": "X is the circle with a unipotent rank two representation",
    "representation": {"dim": 2, "generators": [{"name": "u", "matrix": [["1", "1"], ["0", "1"]], "xi": 1}]},
    )" + pointCells + R"(,
    "queries": {"lambda": ["1", "-1", "2"]}
})"},
        {"split-nonscalar", R"({
    "schema": "jml/1",
    "name": "split-nonscalar",
    "split": true,
    "description": "X is the torus, a acts trivially and u by a non-scalar Jordan block",
    "representation": {
      "dim": 2,
      "generators": [{"name": "a", "matrix": [["1", "0"], ["0", "1"]]},
                     {"name": "u", "matrix": [["2", "1"], ["0", "2"]], "xi": 1}],
      "relators": ["u a u^-1 a^-1"]
    },
    )" + circleCells + R"(,
    "queries": {"lambda": ["1/2", "2", "1"]}
})"},
    };
    return docs;
}

struct Corruption
{
    std::string name;
    std::string base;
    const char* pointer;  // JSON pointer into phiTilde
    const char* value;
};

const std::vector<Corruption>& corruptions()
{
    static const std::vector<Corruption> list = {
        {"rotation-wrong-vertex", "circle-rotation", "/phiTilde/0/1", R"([[1, 1, ""]])"},
        {"heisenberg-no-shear", "heisenberg", "/phiTilde/1/1", R"([[1, 1, ""]])"},
        {"heisenberg-doubled-top", "heisenberg", "/phiTilde/2/0", R"([[0, 2, "a"]])"},
        {"anosov-swapped", "anosov", "/phiTilde/1", R"([[[1, 1, ""]], [[0, 1, ""]]])"},
        {"unipotent-scaled", "point-unipotent", "/phiTilde/0/0", R"([[0, 2, ""]])"},
    };
    return list;
}

}  // namespace

std::vector<std::string> corruptionNames()
{
    std::vector<std::string> out;
    for (const auto& c : corruptions())
        out.push_back(c.name);
    return out;
}

nlohmann::json corruption(const std::string& name)
{
    for (const auto& c : corruptions())
        if (c.name == name) {
            nlohmann::json j = example(c.base);
            j[nlohmann::json::json_pointer(c.pointer)] = nlohmann::json::parse(c.value);
            j["name"] = c.name;
            j["description"] = "corrupted lift of " + c.base;
            return j;
        }
    throw std::invalid_argument("unknown corruption '" + name + "'");
}

std::vector<std::string> exampleNames()
{
    std::vector<std::string> out;
    for (const auto& [name, text] : library())
        out.push_back(name);
    return out;
}

nlohmann::json example(const std::string& name)
{
    for (const auto& [n, text] : library())
        if (n == name)
            return nlohmann::json::parse(text);
    std::string names;
    for (const auto& n : exampleNames())
        names += (names.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown example '" + name + "'; available: " + names);
}

}  // namespace jml
