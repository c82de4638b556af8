#include "jml/document.hpp"

#include "jml/torus.hpp"

#include <algorithm>

namespace jml {

using nlohmann::json;

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& field(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object())
        throw DocumentError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw DocumentError(at(path, key), "missing");
    return *it;
}

const json& array(const json& j, const std::string& path)
{
    if (!j.is_array())
        throw DocumentError(path, "expected an array");
    return j;
}

int integer(const json& j, const std::string& path)
{
    if (!j.is_number_integer())
        throw DocumentError(path, "expected an integer");
    return j.get<int>();
}

std::string text(const json& j, const std::string& path)
{
    if (!j.is_string())
        throw DocumentError(path, "expected a string");
    return j.get<std::string>();
}

std::vector<int> integers(const json& j, const std::string& path)
{
    std::vector<int> out;
    for (std::size_t k = 0; k < array(j, path).size(); ++k)
        out.push_back(integer(j[k], at(path, k)));
    return out;
}

Scalar scalar(const json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Scalar(j.get<long>());
    if (!j.is_string())
        throw DocumentError(path, "scalars are exact strings such as \"1/2-3*i\" or integers");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw DocumentError(path, e.what());
    }
}

Mat matrix(const json& j, int n, const std::string& path)
{
    if (!j.is_array()) {
        if (n != 1)
            throw DocumentError(path, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
        return Mat{{scalar(j, path)}};
    }
    if (static_cast<int>(j.size()) != n)
        throw DocumentError(path, "expected " + std::to_string(n) + " rows");
    Mat m(n, n);
    for (int r = 0; r < n; ++r) {
        const auto p = at(path, r);
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != n)
            throw DocumentError(p, "expected a row of " + std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c)
            m(r, c) = scalar(j[r][c], at(p, c));
    }
    return m;
}

GroupToken token(const std::string& word, const Representation& rep, const std::string& path)
{
    try {
        return GroupToken::parse(word, rep);
    } catch (const std::exception& e) {
        throw DocumentError(path, e.what());
    }
}

Incidence incidence(const json& j, const Representation& rep, const std::string& path)
{
    Incidence inc;
    if (j.is_array()) {
        if (j.size() != 3)
            throw DocumentError(path, "compact incidences are [cell, coefficient, word]");
        inc.cell = integer(j[0], at(path, 0));
        inc.coeff = integer(j[1], at(path, 1));
        inc.token = token(text(j[2], at(path, 2)), rep, at(path, 2));
        return inc;
    }
    inc.cell = integer(field(j, "cell", path), at(path, "cell"));
    inc.coeff = j.contains("coeff") ? integer(j["coeff"], at(path, "coeff")) : 1;
    if (j.contains("literal")) {
        const auto p = at(path, "literal");
        const json& lit = j["literal"];
        Mat m = matrix(field(lit, "matrix", p), rep.n, at(p, "matrix"));
        int xi = lit.contains("xi") ? integer(lit["xi"], at(p, "xi")) : 0;
        try {
            inc.token = GroupToken::literal(std::move(m), xi);
        } catch (const std::exception& e) {
            throw DocumentError(p, e.what());
        }
    } else {
        inc.token = token(j.contains("word") ? text(j["word"], at(path, "word")) : "", rep, at(path, "word"));
    }
    return inc;
}

std::vector<std::vector<std::vector<Incidence>>> incidenceTable(const json& j, const Representation& rep,
                                                                 const std::string& path)
{
    std::vector<std::vector<std::vector<Incidence>>> out;
    for (std::size_t k = 0; k < array(j, path).size(); ++k) {
        const auto pk = at(path, k);
        out.emplace_back();
        for (std::size_t c = 0; c < array(j[k], pk).size(); ++c) {
            const auto pc = at(pk, c);
            out.back().emplace_back();
            for (std::size_t q = 0; q < array(j[k][c], pc).size(); ++q)
                out.back().back().push_back(incidence(j[k][c][q], rep, at(pc, q)));
        }
    }
    return out;
}

CellData cellData(const json& j, const Representation& rep, const std::string& path)
{
    CellData c;
    c.cells = integers(field(j, "cells", path), at(path, "cells"));
    c.boundary = incidenceTable(field(j, "boundary", path), rep, at(path, "boundary"));
    // degree 0 may be omitted
    if (c.boundary.size() + 1 == c.cells.size())
        c.boundary.insert(c.boundary.begin(), std::vector<std::vector<Incidence>>{});
    try {
        checkCellData(c);
    } catch (const std::exception& e) {
        throw DocumentError(path, e.what());
    }
    return c;
}

Representation representation(const json& j, const std::string& path)
{
    Representation r;
    r.n = j.contains("dim") ? integer(j["dim"], at(path, "dim")) : 1;
    if (r.n < 1)
        throw DocumentError(at(path, "dim"), "must be positive");
    const auto pg = at(path, "generators");
    const json& gens = array(field(j, "generators", path), pg);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto p = at(pg, k);
        r.generators.push_back(text(field(gens[k], "name", p), at(p, "name")));
        r.images.push_back(gens[k].contains("matrix") ? matrix(gens[k]["matrix"], r.n, at(p, "matrix"))
                                                      : Mat::identity(r.n));
        r.xi.push_back(gens[k].contains("xi") ? integer(gens[k]["xi"], at(p, "xi")) : 0);
    }
    if (j.contains("relators"))
        for (std::size_t k = 0; k < array(j["relators"], at(path, "relators")).size(); ++k)
            r.relators.push_back(text(j["relators"][k], at(at(path, "relators"), k)));
    return r;
}

std::vector<std::vector<int>> intMatrix(const json& j, const std::string& path)
{
    std::vector<std::vector<int>> out;
    for (std::size_t k = 0; k < array(j, path).size(); ++k)
        out.push_back(integers(j[k], at(path, k)));
    return out;
}

std::vector<std::string> strings(const json& j, const std::string& path)
{
    std::vector<std::string> out;
    for (std::size_t k = 0; k < array(j, path).size(); ++k)
        out.push_back(text(j[k], at(path, k)));
    return out;
}

void simplicialBlock(const json& j, InputDocument& doc, const std::string& path)
{
    std::string kind = text(field(j, "kind", path), at(path, "kind"));
    if (kind == "lattice") {
        LatticeSpec s;
        s.d = integer(field(j, "d", path), at(path, "d"));
        s.N = j.contains("N") ? integer(j["N"], at(path, "N")) : 1;
        s.m = j.contains("m") ? integer(j["m"], at(path, "m")) : 1;
        s.S = j.contains("S") ? intMatrix(j["S"], at(path, "S")) : std::vector<std::vector<int>>{};
        s.shift = j.contains("shift") ? integers(j["shift"], at(path, "shift")) : std::vector<int>(s.d, 0);
        s.generators = j.contains("generators") ? strings(j["generators"], at(path, "generators"))
                                                : std::vector<std::string>{};
        s.u = j.contains("u") ? text(j["u"], at(path, "u")) : "u";
        doc.lattice = std::move(s);
    } else if (kind == "ordered") {
        SimplicialSpec s;
        s.vertices = integer(field(j, "vertices", path), at(path, "vertices"));
        s.simplices = intMatrix(field(j, "simplices", path), at(path, "simplices"));
        const auto pe = at(path, "edgeTokens");
        if (j.contains("edgeTokens"))
            for (std::size_t k = 0; k < array(j["edgeTokens"], pe).size(); ++k) {
                const json& e = j["edgeTokens"][k];
                if (!e.is_array() || e.size() != 3)
                    throw DocumentError(at(pe, k), "edge tokens are [v, w, word] with v < w");
                s.edgeTokens[{integer(e[0], at(pe, k)), integer(e[1], at(pe, k))}] = text(e[2], at(pe, k));
            }
        s.phi = integers(field(j, "phi", path), at(path, "phi"));
        s.vert = strings(field(j, "vert", path), at(path, "vert"));
        s.subdivide = j.contains("subdivide") && j["subdivide"].get<bool>();
        doc.simplicial = std::move(s);
    } else {
        throw DocumentError(at(path, "kind"), "expected \"lattice\" or \"ordered\"");
    }
}

}  // namespace

DeltaComplex InputDocument::deltaModel() const
{
    if (lattice)
        return latticeTorus(*lattice, rep);
    if (simplicial)
        return simplicialTorus(*simplicial, rep);
    throw std::invalid_argument("document has no simplicial model");
}

InputDocument parseDocument(const json& j)
{
    InputDocument doc;
    if (!j.is_object())
        throw DocumentError("", "document must be a JSON object");
    if (j.contains("schema") && j["schema"] != "jml/1")
        throw DocumentError("/schema", "unsupported schema " + j["schema"].dump());
    doc.name = j.value("name", "");
    doc.description = j.value("description", "");
    doc.rep = representation(field(j, "representation", ""), "/representation");
    if (j.contains("complexM")) {
        MonodromyData m;
        m.M = cellData(j["complexM"], doc.rep, "/complexM");
        m.phi = incidenceTable(field(j, "phiTilde", ""), doc.rep, "/phiTilde");
        m.u = token(text(field(j, "u", ""), "/u"), doc.rep, "/u");
        doc.mono = std::move(m);
    } else if (j.contains("phiTilde") || j.contains("u")) {
        throw DocumentError("/complexM", "phiTilde and u need complexM");
    }
    if (j.contains("split")) {
        if (!j["split"].is_boolean())
            throw DocumentError("/split", "expected a boolean");
        doc.split = j["split"].get<bool>();
    }
    if (j.contains("directX"))
        doc.directX = cellData(j["directX"], doc.rep, "/directX");
    if (j.contains("simplicial"))
        simplicialBlock(j["simplicial"], doc, "/simplicial");
    if (!doc.mono && !doc.directX && !doc.hasSimplicial())
        throw DocumentError("", "one of complexM, directX or simplicial is required");
    if (j.contains("queries")) {
        const json& q = j["queries"];
        if (q.contains("lambda"))
            doc.queries.lambdas = strings(q["lambda"], "/queries/lambda");
        if (q.contains("degrees"))
            doc.queries.degrees = integers(q["degrees"], "/queries/degrees");
        if (q.contains("pipelines"))
            doc.queries.pipelines = strings(q["pipelines"], "/queries/pipelines");
        for (std::size_t k = 0; k < doc.queries.lambdas.size(); ++k)
            try {
                LambdaQuery::parse(doc.queries.lambdas[k]);
            } catch (const std::exception& e) {
                throw DocumentError(at("/queries/lambda", k), e.what());
            }
        for (std::size_t k = 0; k < doc.queries.pipelines.size(); ++k) {
            const auto& p = doc.queries.pipelines[k];
            if (p != "P1" && p != "P2" && p != "P3")
                throw DocumentError(at("/queries/pipelines", k), "unknown pipeline '" + p + "'");
        }
    }
    return doc;
}

std::vector<Diagnostic> validate(const json& j)
{
    std::vector<Diagnostic> out;
    InputDocument doc;
    try {
        doc = parseDocument(j);
    } catch (const DocumentError& e) {
        return {{e.path(), e.message()}};
    }
    auto guard = [&](const std::string& path, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            out.push_back({path, e.what()});
        }
    };
    guard("/representation", [&] { doc.rep.validate(); });
    if (!out.empty())
        return out;
    if (doc.mono) {
        guard("/complexM", [&] {
            checkComplex(buildComplexLaurent(doc.mono->M, doc.rep));
            checkComplex(buildComplexAt(doc.mono->M, doc.rep, Scalar(1)));
        });
        guard("/phiTilde", [&] {
            doc.mono->check(doc.rep);
            buildChainMapA(*doc.mono, doc.rep, Scalar(1));
            checkChainMap(buildComplexLaurent(doc.mono->M, doc.rep), buildChainMapLaurent(*doc.mono, doc.rep));
        });
    }
    if (doc.directX)
        guard("/directX", [&] { checkComplex(buildComplexLaurent(*doc.directX, doc.rep)); });
    if (doc.hasSimplicial())
        guard("/simplicial", [&] { checkDelta(doc.deltaModel(), doc.rep); });
    return out;
}

}  // namespace jml
