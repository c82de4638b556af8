// Acceptance suite: one line per criterion, exact comparisons throughout.

#include "jml/massey.hpp"
#include "jml/report.hpp"
#include "jml/torus.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace jml;

namespace {

constexpr double kTimeLimitSeconds = 120.0;
constexpr int kMinExamples = 8;
constexpr int kMinLambdas = 3;
constexpr int kScalingInputs = 20;
constexpr int kLiftVariants = 10;
constexpr int kSnfMatrices = 100;
constexpr int kSnfMaxDim = 5;
constexpr int kSnfMaxDegree = 3;
constexpr unsigned kSeed = 20240611;

struct Outcome
{
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    bool expectedFailure = false;  // the criterion text itself is contradicted by exact computation
};

std::vector<Outcome> outcomes;

void record(std::string id, std::string title, bool pass, std::string detail, bool expectedFailure = false)
{
    outcomes.push_back({std::move(id), std::move(title), pass, std::move(detail), expectedFailure});
}

template <typename F>
void guarded(const std::string& id, const std::string& title, F&& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        record(id, title, false, std::string("exception: ") + e.what());
    }
}

InputDocument load(const std::string& name) { return parseDocument(example(name)); }

// Random fibers: a circle with rho(a) = A and rho(u) a scalar times a power of A,
// and the lift a^s on both cells; or a point with an arbitrary rho(u).
struct RandomInput
{
    Representation rep;
    MonodromyData data;
    std::string label;
};

RandomInput randomInput(std::mt19937& gen, int index)
{
    RandomInput in;
    std::uniform_int_distribution<int> small(-2, 2), dim(1, 2), coeff(1, 2);
    if (index % 2 == 0) {
        int n = dim(gen);
        Mat a = oracle::randomInvertible(gen, n);
        int j = small(gen);
        Mat b = power(a, j) * Scalar(coeff(gen) * (gen() % 2 ? 1 : -1));
        in.rep.n = n;
        in.rep.generators = {"a", "u"};
        in.rep.images = {a, b};
        in.rep.xi = {0, 1};
        in.rep.relators = {"u a u^-1 a^-1"};
        int s = small(gen);
        auto w = GroupToken::generator(0, s == 0 ? 1 : s);
        in.data.M.cells = {1, 1};
        in.data.M.boundary = {{}, {{{0, 1, GroupToken::generator(0)}, {0, -1, GroupToken()}}}};
        in.data.phi = {{{{0, 1, w}}}, {{{0, 1, w}}}};
        in.data.u = GroupToken::generator(1);
        in.label = "circle n=" + std::to_string(n);
    } else {
        int n = 1 + static_cast<int>(gen() % 3);
        in.rep.n = n;
        in.rep.generators = {"u"};
        in.rep.images = {oracle::randomInvertible(gen, n)};
        in.rep.xi = {1};
        in.data.M.cells = {1};
        in.data.M.boundary = {{}};
        in.data.phi = {{{{0, coeff(gen), GroupToken()}}}};
        in.data.u = GroupToken::generator(0);
        in.label = "point n=" + std::to_string(n);
    }
    in.rep.validate();
    return in;
}

Scalar randomLambda(std::mt19937& gen)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    while (true) {
        Scalar l(mpq_class(num(gen), den(gen)), mpq_class(num(gen), den(gen)));
        if (!l.isZero())
            return l;
    }
}

GroupToken randomWord(std::mt19937& gen, const Representation& rep)
{
    std::vector<int> h;
    for (std::size_t g = 0; g < rep.generators.size(); ++g)
        if (rep.xi[g] == 0)
            h.push_back(static_cast<int>(g));
    GroupToken w;
    int len = 1 + static_cast<int>(gen() % 4);
    for (int k = 0; k < len; ++k)
        w = w * GroupToken::generator(h[gen() % h.size()], gen() % 2 ? 1 : -1);
    return w;
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : "; ") + p;
    return out;
}

void criterion1()
{
    const std::string title = "three-way agreement J = Nil = M";
    guarded("1", title, [&] {
        auto start = std::chrono::steady_clock::now();
        std::vector<std::string> problems;
        int docs = 0, entries = 0;
        bool sawClass = false;
        for (const auto& name : exampleNames()) {
            InputDocument doc = load(name);
            ++docs;
            if (static_cast<int>(doc.queries.lambdas.size()) < kMinLambdas)
                problems.push_back(name + " has fewer than " + std::to_string(kMinLambdas) + " lambda values");
            for (const auto& l : doc.queries.lambdas)
                if (LambdaQuery::parse(l).classPoly == Poly::parse("t^2-3t+1"))
                    sawClass = true;
            VerificationReport r = runPipelines(doc);
            for (const auto& e : r.entries) {
                ++entries;
                bool complete = e.J && e.M && !e.nil.empty() && (!doc.hasSimplicial() || e.nil.count("simplicial"));
                if (!e.agree || !complete)
                    problems.push_back(name + " k=" + std::to_string(e.degree) + " lambda=" + e.lambda);
            }
            for (const auto& f : r.failures)
                problems.push_back(name + ": " + f);
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (docs < kMinExamples)
            problems.push_back("only " + std::to_string(docs) + " examples");
        if (!sawClass)
            problems.push_back("no query uses the class t^2-3t+1");
        if (secs > kTimeLimitSeconds)
            problems.push_back("took " + std::to_string(secs) + " s");
        std::ostringstream d;
        d << docs << " examples, " << entries << " (degree, lambda) entries, " << std::fixed << std::setprecision(2)
          << secs << " s";
        if (!problems.empty())
            d << "; " << join(problems);
        record("1", title, problems.empty(), d.str());
    });
}

void criterion2()
{
    const std::string title = "Heisenberg flagship";
    guarded("2", title, [&] {
        InputDocument doc = load("heisenberg");
        RunOptions opts;
        opts.lambdas = {"1", "-1"};
        opts.degrees = {1};
        VerificationReport r = runPipelines(doc, opts);
        auto values = [](const VerificationEntry& e) {
            std::vector<int> v{e.J.value_or(-1), e.M.value_or(-1)};
            for (const auto& [name, x] : e.nil)
                v.push_back(x);
            return v;
        };
        const VerificationEntry& at1 = r.entries[0];
        const VerificationEntry& atMinus1 = r.entries[1];

        // oracles on the monodromy matrix of H_1
        MonodromyResult mon = computeMonodromy(*doc.mono, doc.rep);
        const Mat& phi1 = mon.map.phi[1];
        int oracleJ1 = oracle::maxJordanBlock(phi1, Scalar(1));
        int oracleJm1 = oracle::maxJordanBlock(phi1, Scalar(-1));
        auto inv = oracle::invariantFactors(characteristicMatrix(phi1));
        bool factorsOk = inv.size() == 2 && inv[0].isOne() && inv[1] == Poly::parse("(t-1)^2");

        std::vector<int> v1 = values(at1), vm1 = values(atMinus1);
        bool allTwo = std::all_of(v1.begin(), v1.end(), [](int x) { return x == 2; });
        bool agreeMinus1 = std::set<int>(vm1.begin(), vm1.end()).size() == 1 && vm1[0] == oracleJm1;
        std::ostringstream d;
        d << "lambda=1: J1=" << *at1.J << " M1=" << *at1.M;
        for (const auto& [name, x] : at1.nil)
            d << " Nil[" << name << "]=" << x;
        d << ", oracle J1=" << oracleJ1 << ", invariant factors of tI-phi_1 = (1, (t-1)^2) " << (factorsOk ? "yes" : "no")
          << "; lambda=-1: all three equal " << vm1[0] << " (oracle " << oracleJm1 << ")";
        record("2", title, allTwo && oracleJ1 == 2 && factorsOk && agreeMinus1, d.str());

        bool literalClause = std::all_of(vm1.begin(), vm1.end(), [](int x) { return x == 1; });
        record("2*", "Heisenberg clause 'at lambda = -1 all three values are 1 in degree 1'", literalClause,
               "observed J1=Nil1=M1=" + std::to_string(vm1[0]) +
                   ": -1 is not an eigenvalue of [[1,1],[0,1]], so the Jordan block size is 0 by definition. "
                   "The clause contradicts its own parenthetical and cannot hold.",
               true);
    });
}

void criterion3()
{
    const std::string title = "scaling law A_lambda = (1/lambda) A_1";
    guarded("3", title, [&] {
        std::mt19937 gen(kSeed);
        int ok = 0;
        std::vector<std::string> bad;
        for (int k = 0; k < kScalingInputs; ++k) {
            RandomInput in = randomInput(gen, k);
            Scalar lambda = randomLambda(gen);
            auto a1 = buildChainMapA(in.data, in.rep, Scalar(1));
            auto al = buildChainMapA(in.data, in.rep, lambda);
            bool same = a1.size() == al.size();
            for (std::size_t d = 0; same && d < a1.size(); ++d)
                same = al[d] == a1[d] * lambda.inverse();
            if (same)
                ++ok;
            else
                bad.push_back(in.label + " at lambda " + lambda.str());
        }
        record("3", title, ok == kScalingInputs,
               std::to_string(ok) + "/" + std::to_string(kScalingInputs) + " random inputs exact" +
                   (bad.empty() ? "" : "; " + join(bad)));
    });
}

void criterion4()
{
    const std::string title = "independence of u: u -> h u with lift h w";
    guarded("4", title, [&] {
        std::mt19937 gen(kSeed + 1);
        int ok = 0;
        std::vector<std::string> bad;
        for (int k = 0; k < kLiftVariants; ++k) {
            Representation rep;
            MonodromyData data;
            std::string label;
            if (k < 6) {
                RandomInput in = randomInput(gen, 0);
                rep = in.rep;
                data = in.data;
                label = in.label;
            } else {
                InputDocument doc = load(k < 8 ? "heisenberg" : "split-nonscalar");
                rep = doc.rep;
                data = *doc.mono;
                label = doc.name;
            }
            GroupToken h = randomWord(gen, rep);
            MonodromyData shifted = shiftLift(data, h);
            Scalar lambda = randomLambda(gen);
            auto a = buildChainMapA(data, rep, lambda);
            auto b = buildChainMapA(shifted, rep, lambda);
            bool same = a.size() == b.size();
            for (std::size_t d = 0; same && d < a.size(); ++d)
                same = a[d] == b[d];
            auto ja = jordanSpectrum(computeMonodromy(data, rep).map);
            auto jb = jordanSpectrum(computeMonodromy(shifted, rep).map);
            for (std::size_t d = 0; same && d < ja.degrees.size(); ++d)
                same = ja.degrees[d].invariantFactors == jb.degrees[d].invariantFactors;
            if (same)
                ++ok;
            else
                bad.push_back(label + " with h = " + h.str(rep));
        }
        record("4", title, ok == kLiftVariants,
               std::to_string(ok) + "/" + std::to_string(kLiftVariants) + " variants give identical matrices" +
                   (bad.empty() ? "" : "; " + join(bad)));
    });
}

void criterion5()
{
    const std::string title = "Delta_r^2 = 0 and H(MH_(r), Delta_r) = MH_(r+1)";
    guarded("5", title, [&] {
        int checks = 0;
        std::vector<std::string> bad;
        for (const auto& name : exampleNames()) {
            InputDocument doc = load(name);
            if (!doc.hasSimplicial())
                continue;
            DeltaComplex dc = doc.deltaModel();
            for (const auto& l : doc.queries.lambdas) {
                MasseyEngine e(dc, doc.rep, lambdaScalar(LambdaQuery::parse(l)));
                int cutoff = 1;
                for (int k = 0; k <= e.top(); ++k)
                    cutoff = std::max(cutoff, e.cohomologyDim(k) + 1);
                for (int r = 1; r <= cutoff; ++r) {
                    auto t = e.stageCheck(r);
                    ++checks;
                    for (const auto& f : t.failures)
                        bad.push_back(name + " lambda=" + l + ": " + f);
                }
            }
        }
        record("5", title, bad.empty(),
               std::to_string(checks) + " (example, lambda, r) triples" + (bad.empty() ? "" : "; " + join(bad)));
    });
}

void criterion6()
{
    const std::string title = "invariant factors of tI - phi_* match the torsion of the cone cohomology";
    guarded("6", title, [&] {
        std::vector<std::string> bad;
        int degrees = 0;
        for (const auto& name : exampleNames()) {
            InputDocument doc = load(name);
            MonodromyResult mon = computeMonodromy(*doc.mono, doc.rep);
            JordanSpectrum js = jordanSpectrum(mon.map);
            for (std::size_t k = 0; k < js.degrees.size(); ++k) {
                std::vector<Poly> ref;
                for (const auto& f : oracle::invariantFactors(characteristicMatrix(mon.map.phi[k])))
                    if (f.degree() > 0)
                        ref.push_back(f);
                if (!(ref == js.degrees[k].invariantFactors))
                    bad.push_back(name + " degree " + std::to_string(k) + ": invariant factors differ from the oracle");
                ++degrees;
            }
            FactorCheck p = factorCheck(js, cohomologyViaUCT(torsionReport(buildCone(*doc.mono, doc.rep))));
            for (const auto& d : p.diffs)
                bad.push_back(name + " degree " + std::to_string(d.degree));
        }
        record("6", title, bad.empty(),
               std::to_string(degrees) + " degrees across " + std::to_string(exampleNames().size()) + " examples" +
                   (bad.empty() ? "" : "; " + join(bad)));
    });
}

void criterion7()
{
    const std::string title = "Smith normal form validity and determinantal-divisor oracle";
    guarded("7", title, [&] {
        std::mt19937 gen(kSeed + 2);
        std::uniform_int_distribution<int> dim(1, kSnfMaxDim), deg(0, kSnfMaxDegree), zero(0, 3);
        int ok = 0;
        std::vector<std::string> bad;
        for (int k = 0; k < kSnfMatrices; ++k) {
            int rows = dim(gen), cols = dim(gen);
            PolyMat a(rows, cols);
            if (k % 4 == 3 && rows > 1 && cols > 1) {
                // rank-deficient: a product through a narrower middle
                int mid = std::min(rows, cols) - 1;
                PolyMat l(rows, mid), r(mid, cols);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < mid; ++j)
                        l(i, j) = oracle::randomPoly(gen, deg(gen) / 2, 2);
                for (int i = 0; i < mid; ++i)
                    for (int j = 0; j < cols; ++j)
                        r(i, j) = oracle::randomPoly(gen, deg(gen) / 2, 2);
                a = l * r;
            } else {
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j)
                        if (zero(gen))
                            a(i, j) = oracle::randomPoly(gen, deg(gen), 3);
            }
            SnfResult s = snfOverPoly(a);
            bool valid = s.U * a * s.V == s.D;
            Poly du = oracle::det(s.U), dv = oracle::det(s.V);
            valid = valid && du.degree() == 0 && !du.isZero() && dv.degree() == 0 && !dv.isZero();
            auto f = s.factors();
            for (int i = 0; i < s.D.rows(); ++i)
                for (int j = 0; j < s.D.cols(); ++j)
                    if (i != j && !s.D(i, j).isZero())
                        valid = false;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (!f[i].lead().isOne())
                    valid = false;
                if (i + 1 < f.size() && !f[i + 1].divisibleBy(f[i]))
                    valid = false;
            }
            bool oracleMatch = f == oracle::invariantFactors(a);
            if (valid && oracleMatch)
                ++ok;
            else
                bad.push_back("matrix " + std::to_string(k) + " (" + a.shape() + ")" + (valid ? "" : " invalid") +
                              (oracleMatch ? "" : " oracle mismatch"));
        }
        record("7", title, ok == kSnfMatrices,
               std::to_string(ok) + "/" + std::to_string(kSnfMatrices) + " random matrices" +
                   (bad.empty() ? "" : "; " + join(bad)));
    });
}

void criterion8()
{
    const std::string title = "negative controls: corrupted lifts never agree silently";
    guarded("8", title, [&] {
        std::vector<std::string> notes, bad;
        for (const auto& name : corruptionNames()) {
            auto j = corruption(name);
            auto diags = validate(j);
            if (!diags.empty()) {
                bool chainMap = false;
                for (const auto& d : diags)
                    chainMap = chainMap || d.message.find("does not commute") != std::string::npos;
                notes.push_back(name + ": " + (chainMap ? "chain-map failure" : "rejected: " + diags[0].message));
                if (!chainMap)
                    bad.push_back(name);
                continue;
            }
            VerificationReport r = runPipelines(parseDocument(j));
            bool factorMismatch = false;
            for (const auto& f : r.failures)
                factorMismatch = factorMismatch || f.find("invariant factors") != std::string::npos;
            int disagreements = 0;
            for (const auto& e : r.entries)
                disagreements += e.agree ? 0 : 1;
            if (factorMismatch)
                notes.push_back(name + ": invariant factor mismatch, " + std::to_string(disagreements) + " disagreements");
            else if (disagreements)
                notes.push_back(name + ": " + std::to_string(disagreements) + " disagreements");
            else
                bad.push_back(name + " agreed silently");
        }
        record("8", title, bad.empty() && notes.size() == corruptionNames().size(),
               join(notes) + (bad.empty() ? "" : "; FAILED: " + join(bad)));
    });
}

void criterion9()
{
    const std::string title = "Kaehler illustration: the obstruction pattern only";
    guarded("9", title, [&] {
        auto maxBlockOf = [](const std::string& name) {
            InputDocument doc = load(name);
            JordanSpectrum js = jordanSpectrum(computeMonodromy(*doc.mono, doc.rep).map);
            int m = 0;
            for (const auto& d : js.degrees)
                for (const auto& c : d.classes)
                    for (int x : c.multiplicities)
                        m = std::max(m, x);
            return m;
        };
        int torus = maxBlockOf("circle-id");
        int rotation = maxBlockOf("circle-rotation");
        int heis = maxBlockOf("heisenberg");
        record("9", title, torus == 1 && rotation == 1 && heis == 2,
               "largest block: T^2 from id " + std::to_string(torus) + ", T^2 from rotation " +
                   std::to_string(rotation) + ", Heisenberg " + std::to_string(heis) +
                   ". The full obstruction is not certifiable at desk scale.");
    });
}

}  // namespace

int main()
{
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();

    int unexpected = 0;
    for (const auto& o : outcomes) {
        std::string status = o.pass ? "PASS" : "FAIL";
        if (o.expectedFailure)
            status = o.pass ? "PASS (expected FAIL)" : "FAIL (expected: the criterion text is contradicted)";
        std::cout << "criterion " << o.id << " " << status << ": " << o.title << " | " << o.detail << "\n";
        if (o.pass == o.expectedFailure)
            ++unexpected;
    }
    std::cout << (unexpected ? "acceptance: " + std::to_string(unexpected) + " unexpected result(s)\n"
                             : "acceptance: all results as expected\n");
    return unexpected ? 1 : 0;
}
