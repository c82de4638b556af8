#include "jml/report.hpp"

#include "jml/massey.hpp"
#include "jml/torus.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

namespace jml {

using nlohmann::json;

const char* const kDegreeAlignment =
    "J_k on H_k(M) ~ Nil of the torsion of H_k(X) over L ~ M_k on H^k(X, rho_lambda)";

bool VerificationReport::allAgree() const
{
    if (!failures.empty())
        return false;
    return std::all_of(entries.begin(), entries.end(), [](const VerificationEntry& e) { return e.agree; });
}

Scalar lambdaScalar(const LambdaQuery& q)
{
    if (q.isValue())
        return *q.value;
    std::vector<Gaussian> modulus;
    for (int k = 0; k <= q.classPoly.degree(); ++k) {
        Scalar c = q.classPoly.coeff(k);
        if (!c.isBase())
            throw std::invalid_argument("class polynomial must have coefficients in Q(i)");
        modulus.push_back(c.baseValue());
    }
    return Scalar::generator(std::make_shared<const ExtensionField>(std::move(modulus), "x"));
}

json matrixJson(const Mat& m)
{
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json polysJson(const std::vector<Poly>& ps)
{
    json out = json::array();
    for (const auto& p : ps)
        out.push_back(p.str());
    return out;
}

namespace {

json vecJson(const Vec& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(x.str());
    return out;
}

class Stopwatch
{
public:
    explicit Stopwatch(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
    void record(json& into, const std::string& key) const
    {
        if (!on_)
            return;
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        into["timing_ms"][key] = ms;
    }

private:
    bool on_;
    std::chrono::steady_clock::time_point start_;
};

struct Monodromy
{
    MonodromyResult result;
    JordanSpectrum spectrum;
};

struct TorusModel
{
    std::string name;
    TorusComplex complex;
    TorsionReport torsion;
};

struct Massey
{
    std::unique_ptr<MasseyEngine> engine;
    std::string error;
};

bool wants(const std::vector<std::string>& pipelines, const std::string& p)
{
    return std::find(pipelines.begin(), pipelines.end(), p) != pipelines.end();
}

}  // namespace

VerificationReport runPipelines(const InputDocument& doc, const RunOptions& opts)
{
    VerificationReport rep;
    rep.name = doc.name;
    json& details = rep.details;
    details = json::object();

    std::vector<std::string> labels = !opts.lambdas.empty() ? opts.lambdas : doc.queries.lambdas;
    if (labels.empty())
        labels = {"1"};
    std::vector<std::string> pipelines = !opts.pipelines.empty() ? opts.pipelines : doc.queries.pipelines;
    std::vector<LambdaQuery> queries;
    for (const auto& l : labels)
        queries.push_back(LambdaQuery::parse(l));

    std::optional<DeltaComplex> delta;
    if (doc.hasSimplicial() && (wants(pipelines, "P2") || wants(pipelines, "P3"))) {
        delta = doc.deltaModel();
        checkDelta(*delta, doc.rep);
        details["simplicial"]["counts"] = delta->counts();
    }

    int topX = 0;
    if (doc.mono)
        topX = doc.mono->M.top() + 1;
    else if (doc.directX)
        topX = doc.directX->top();
    else if (delta)
        topX = delta->top();
    std::vector<int> degrees = !opts.degrees.empty() ? opts.degrees : doc.queries.degrees;
    if (degrees.empty())
        for (int k = 0; k <= topX; ++k)
            degrees.push_back(k);

    // P1
    std::optional<Monodromy> mono;
    std::string monoError;
    if (doc.mono && wants(pipelines, "P1")) {
        Stopwatch sw(opts.timing);
        try {
            Monodromy m{computeMonodromy(*doc.mono, doc.rep), {}};
            m.spectrum = jordanSpectrum(m.result.map);
            json& d = details["monodromy"];
            d["lambda"] = "1";
            for (std::size_t k = 0; k < m.spectrum.degrees.size(); ++k) {
                json deg;
                deg["degree"] = k;
                deg["dim"] = m.spectrum.degrees[k].dim;
                deg["phi"] = matrixJson(m.result.map.phi[k]);
                deg["invariantFactors"] = polysJson(m.spectrum.degrees[k].invariantFactors);
                json classes = json::array();
                for (const auto& c : m.spectrum.degrees[k].classes)
                    classes.push_back({{"class", c.q.str()}, {"blocks", c.multiplicities}});
                deg["rootClasses"] = classes;
                d["degrees"].push_back(deg);
            }
            for (const auto& w : m.result.map.warnings)
                rep.warnings.push_back(w);
            if (doc.split) {
                SplitResult s = phiCircSplit(*doc.mono, doc.rep);
                json sj;
                sj["consistent"] = s.consistent;
                for (std::size_t k = 0; k < s.B.size(); ++k)
                    sj["degrees"].push_back({{"degree", k},
                                             {"phiCirc", matrixJson(s.phiCirc.phi[k])},
                                             {"B", matrixJson(s.B[k])}});
                details["split"] = sj;
                if (!s.consistent)
                    rep.failures.push_back("split case: phi_* differs from B^-1 phi_circ");
            }
            mono = std::move(m);
        } catch (const std::exception& e) {
            monoError = e.what();
            rep.failures.push_back(std::string("P1: ") + e.what());
        }
        sw.record(details, "P1");
    }

    // P2
    std::vector<TorusModel> tori;
    if (wants(pipelines, "P2")) {
        Stopwatch sw(opts.timing);
        auto add = [&](const std::string& name, auto&& build) {
            try {
                TorusComplex tc = build();
                TorsionReport tr = torsionReport(tc);
                json tj;
                for (const auto& d : tr.degrees)
                    tj["degrees"].push_back({{"freeRank", d.freeRank}, {"divisors", polysJson(d.divisors)}});
                tj["dims"] = tc.complex.dims;
                details["torus"][name] = tj;
                for (const auto& w : tr.warnings)
                    rep.warnings.push_back(name + ": " + w);
                tori.push_back({name, std::move(tc), std::move(tr)});
            } catch (const std::exception& e) {
                rep.failures.push_back("P2 " + name + ": " + e.what());
            }
        };
        if (doc.mono)
            add("cone", [&] { return buildCone(*doc.mono, doc.rep); });
        if (doc.directX)
            add("direct", [&] { return buildDirect(*doc.directX, doc.rep); });
        if (delta)
            add("simplicial", [&] { return buildDirect(toCellData(*delta), doc.rep); });
        sw.record(details, "P2");
    }

    // Invariant factors against every torus model, and cone exactness
    const TorusModel* cone = nullptr;
    for (const auto& t : tori)
        if (t.name == "cone")
            cone = &t;
    if (mono)
        for (const auto& t : tori) {
            FactorCheck p = factorCheck(mono->spectrum, cohomologyViaUCT(t.torsion));
            json pj;
            pj["match"] = p.match;
            for (const auto& d : p.diffs)
                pj["diffs"].push_back({{"degree", d.degree},
                                       {"monodromy", polysJson(d.monodromySide)},
                                       {"torus", polysJson(d.torusSide)}});
            details["factorCheck"][t.name] = pj;
            if (!p.match)
                rep.failures.push_back("invariant factors of tI - phi_* differ from the torsion of the " + t.name +
                                       " model cohomology");
        }
    if (mono && cone)
        for (const auto& q : queries) {
            if (!q.isValue())
                continue;
            auto ok = coneExactness(mono->result.map, cone->complex, *q.value);
            details["coneExactness"][q.label] = ok;
            if (std::find(ok.begin(), ok.end(), false) != ok.end())
                rep.failures.push_back("cone dimensions at lambda = " + q.label + " disagree with the Wang sequence");
        }

    // P3
    std::vector<Massey> massey(queries.size());
    if (delta && wants(pipelines, "P3")) {
        Stopwatch sw(opts.timing);
        for (std::size_t qi = 0; qi < queries.size(); ++qi) {
            const auto& q = queries[qi];
            json& mj = details["massey"][q.label];
            try {
                auto engine = std::make_unique<MasseyEngine>(*delta, doc.rep, lambdaScalar(q));
                int cutoff = 1;
                for (int k = 0; k <= engine->top(); ++k) {
                    mj["cohomology"].push_back(engine->cohomologyDim(k));
                    cutoff = std::max(cutoff, engine->cohomologyDim(k) + 1);
                }
                for (int k = 0; k <= engine->top(); ++k) {
                    json deg;
                    deg["degree"] = k;
                    deg["length"] = engine->length(k);
                    for (int r = 1; r <= cutoff; ++r)
                        deg["spaces"].push_back({{"r", r},
                                                 {"MZ", engine->mzDim(k, r)},
                                                 {"MB", engine->mbDim(k, r)},
                                                 {"MH", engine->mhDim(k, r)}});
                    if (opts.witnesses) {
                        RChain w = engine->witness(k);
                        if (!w.omega.empty()) {
                            bool ok = engine->verifyChain(w);
                            json wj;
                            wj["verified"] = ok;
                            for (const auto& o : w.omega)
                                wj["omega"].push_back(vecJson(o));
                            deg["witness"] = wj;
                            if (!ok)
                                rep.failures.push_back("witness chain fails its equations at lambda = " + q.label);
                        }
                    }
                    mj["degrees"].push_back(deg);
                }
                for (int r = 1; r <= cutoff; ++r) {
                    auto t = engine->stageCheck(r);
                    mj["stageCheck"].push_back({{"r", r}, {"holds", t.failures.empty()}});
                    for (const auto& f : t.failures)
                        rep.failures.push_back("lambda = " + q.label + ": " + f);
                }
                if (cone) {
                    KComplex s = specializeComplex(cone->complex.complex, lambdaScalar(q));
                    HomologyK h = homologyOverK(s);
                    for (int k = 0; k <= engine->top(); ++k)
                        if (h.dim(k) != engine->cohomologyDim(k))
                            rep.failures.push_back("dim H^" + std::to_string(k) + " at lambda = " + q.label +
                                                   " differs between the cone and the simplicial model");
                }
                massey[qi].engine = std::move(engine);
            } catch (const std::exception& e) {
                massey[qi].error = e.what();
                mj["error"] = e.what();
            }
        }
        sw.record(details, "P3");
    }

    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        const auto& q = queries[qi];
        for (int k : degrees) {
            VerificationEntry e;
            e.degree = k;
            e.lambda = q.label;
            if (doc.mono && wants(pipelines, "P1")) {
                if (!mono) {
                    e.errors.push_back("P1: " + monoError);
                } else {
                    try {
                        const auto& ds = mono->spectrum.degrees;
                        e.J = k < static_cast<int>(ds.size()) ? maxBlock(blockSizes(ds[k].invariantFactors, q)) : 0;
                    } catch (const std::exception& ex) {
                        e.errors.push_back(std::string("P1: ") + ex.what());
                    }
                }
            }
            for (const auto& t : tori) {
                try {
                    const auto& ds = t.torsion.degrees;
                    e.nil[t.name] = k < static_cast<int>(ds.size()) ? nilAt(ds[k], q) : 0;
                } catch (const std::exception& ex) {
                    e.errors.push_back("P2 " + t.name + ": " + ex.what());
                }
            }
            if (delta && wants(pipelines, "P3")) {
                if (massey[qi].engine)
                    e.M = massey[qi].engine->length(k);
                else
                    e.errors.push_back("P3: " + massey[qi].error);
            }
            std::set<int> values;
            if (e.J)
                values.insert(*e.J);
            for (const auto& [name, v] : e.nil)
                values.insert(v);
            if (e.M)
                values.insert(*e.M);
            e.agree = e.errors.empty() && values.size() <= 1;
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

json homologyReport(const InputDocument& doc, const RunOptions& opts)
{
    json j;
    j["schema"] = "jml/1";
    j["name"] = doc.name;
    std::vector<std::string> labels = !opts.lambdas.empty() ? opts.lambdas : doc.queries.lambdas;
    if (labels.empty())
        labels = {"1"};
    std::vector<std::pair<std::string, TorusComplex>> models;
    if (doc.mono) {
        HomologyK h = homologyOverK(buildComplexAt(doc.mono->M, doc.rep, Scalar(1)));
        for (std::size_t k = 0; k < h.degrees.size(); ++k)
            j["fiber"].push_back(h.dim(static_cast<int>(k)));
        models.emplace_back("cone", buildCone(*doc.mono, doc.rep));
    }
    if (doc.directX)
        models.emplace_back("direct", buildDirect(*doc.directX, doc.rep));
    if (doc.hasSimplicial())
        models.emplace_back("simplicial", buildDirect(toCellData(doc.deltaModel()), doc.rep));
    for (const auto& [name, tc] : models) {
        json& mj = j["total"][name];
        HomologyL hl = homologyOverL(tc.complex);
        for (const auto& d : hl.degrees)
            mj["overL"].push_back({{"freeRank", d.freeRank}, {"torsion", polysJson(d.torsion)}});
        for (const auto& l : labels) {
            LambdaQuery q = LambdaQuery::parse(l);
            HomologyK h = homologyOverK(specializeComplex(tc.complex, lambdaScalar(q)));
            for (int k = 0; k <= tc.complex.top(); ++k)
                mj["atLambda"][q.label].push_back(h.dim(k));
        }
    }
    return j;
}

json toJson(const VerificationReport& r)
{
    json j;
    j["schema"] = "jml/1";
    j["name"] = r.name;
    j["alignment"] = kDegreeAlignment;
    j["verdict"] = r.allAgree();
    json entries = json::array();
    for (const auto& e : r.entries) {
        json ej;
        ej["degree"] = e.degree;
        ej["lambda"] = e.lambda;
        ej["J"] = e.J ? json(*e.J) : json(nullptr);
        ej["Nil"] = e.nil;
        ej["M"] = e.M ? json(*e.M) : json(nullptr);
        ej["agree"] = e.agree;
        if (!e.errors.empty())
            ej["errors"] = e.errors;
        entries.push_back(std::move(ej));
    }
    j["entries"] = entries;
    j["warnings"] = r.warnings;
    j["failures"] = r.failures;
    j["details"] = r.details;
    return j;
}

std::string toTable(const VerificationReport& r)
{
    std::set<std::string> models;
    for (const auto& e : r.entries)
        for (const auto& [name, v] : e.nil)
            models.insert(name);
    std::ostringstream os;
    auto cell = [&](const std::string& s, int w) { os << std::left << std::setw(w) << s; };
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
    os << r.name << "  (" << kDegreeAlignment << ")\n";
    cell("k", 4);
    cell("lambda", 14);
    cell("J", 4);
    for (const auto& m : models)
        cell("Nil[" + m + "]", 17);
    cell("M", 4);
    os << "verdict\n";
    for (const auto& e : r.entries) {
        cell(std::to_string(e.degree), 4);
        cell(e.lambda, 14);
        cell(opt(e.J), 4);
        for (const auto& m : models) {
            auto it = e.nil.find(m);
            cell(it == e.nil.end() ? "-" : std::to_string(it->second), 17);
        }
        cell(opt(e.M), 4);
        os << (e.agree ? "agree" : "DISAGREE") << "\n";
        for (const auto& err : e.errors)
            os << "    error: " << err << "\n";
    }
    for (const auto& w : r.warnings)
        os << "warning: " << w << "\n";
    for (const auto& f : r.failures)
        os << "failure: " << f << "\n";
    os << "verdict: " << (r.allAgree() ? "all agree" : "disagreement") << "\n";
    return os.str();
}

}  // namespace jml
