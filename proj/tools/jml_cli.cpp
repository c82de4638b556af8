#include "jml/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

struct Common
{
    std::string input;
    std::string exampleName;
    std::vector<std::string> lambdas;
    std::vector<int> degrees;
    std::vector<std::string> pipelines;
    std::string format = "table";
    std::string out;
    bool timing = false;
    bool noWitnesses = false;
};

class InputError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

json loadInput(const Common& c)
{
    if (!c.exampleName.empty()) {
        try {
            return jml::example(c.exampleName);
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
    if (c.input.empty())
        throw InputError("either --input or --example is required");
    std::ifstream in(c.input);
    if (!in)
        throw InputError("cannot open " + c.input);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(c.input + ": " + e.what());
    }
}

void emit(const Common& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f)
        throw InputError("cannot write " + c.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Parses and validates; prints diagnostics and throws on failure.
jml::InputDocument checkedDocument(const Common& c)
{
    json j = loadInput(c);
    auto diags = jml::validate(j);
    if (!diags.empty()) {
        std::ostringstream os;
        for (const auto& d : diags)
            os << (d.path.empty() ? "/" : d.path) << ": " << d.message << "\n";
        throw InputError(os.str());
    }
    return jml::parseDocument(j);
}

jml::RunOptions runOptions(const Common& c, std::vector<std::string> pipelines)
{
    jml::RunOptions o;
    o.lambdas = c.lambdas;
    o.degrees = c.degrees;
    o.pipelines = c.pipelines.empty() ? std::move(pipelines) : c.pipelines;
    o.timing = c.timing;
    o.witnesses = !c.noWitnesses;
    return o;
}

int runValidate(const Common& c)
{
    json j = loadInput(c);
    auto diags = jml::validate(j);
    if (c.format == "json") {
        json out;
        out["schema"] = "jml/1";
        out["valid"] = diags.empty();
        out["diagnostics"] = json::array();
        for (const auto& d : diags)
            out["diagnostics"].push_back({{"path", d.path}, {"message", d.message}});
        emit(c, dump(out));
    } else {
        std::ostringstream os;
        if (diags.empty())
            os << "valid\n";
        for (const auto& d : diags)
            os << (d.path.empty() ? "/" : d.path) << ": " << d.message << "\n";
        emit(c, os.str());
    }
    return diags.empty() ? 0 : 1;
}

int runReport(const Common& c, std::vector<std::string> pipelines)
{
    jml::InputDocument doc = checkedDocument(c);
    jml::VerificationReport r = jml::runPipelines(doc, runOptions(c, std::move(pipelines)));
    emit(c, c.format == "json" ? dump(jml::toJson(r)) : jml::toTable(r));
    return r.allAgree() ? 0 : 2;
}

int runHomology(const Common& c)
{
    jml::InputDocument doc = checkedDocument(c);
    json h = jml::homologyReport(doc, runOptions(c, {}));
    if (c.format == "json") {
        emit(c, dump(h));
        return 0;
    }
    std::ostringstream os;
    os << doc.name << "\n";
    if (h.contains("fiber"))
        os << "H_*(M) at lambda = 1: " << h["fiber"].dump() << "\n";
    if (h.contains("total"))
        for (const auto& [model, mj] : h["total"].items()) {
            os << model << " over L:";
            for (const auto& d : mj["overL"])
                os << " [free " << d["freeRank"].get<int>() << ", torsion " << d["torsion"].dump() << "]";
            os << "\n";
            for (const auto& [lam, dims] : mj["atLambda"].items())
                os << model << " at lambda = " << lam << ": " << dims.dump() << "\n";
        }
    emit(c, os.str());
    return 0;
}

int runExamples(const Common& c, const std::string& name)
{
    if (name.empty()) {
        auto names = jml::exampleNames();
        if (c.format == "json") {
            emit(c, dump(json(names)));
        } else {
            std::ostringstream os;
            for (const auto& n : names)
                os << n << "  " << jml::example(n).value("description", "") << "\n";
            emit(c, os.str());
        }
        return 0;
    }
    try {
        emit(c, dump(jml::example(name)));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return 0;
}

void addCommon(CLI::App* app, Common& c, bool queries)
{
    app->add_option("--input", c.input, "input document (JSON)");
    app->add_option("--example", c.exampleName, "use a bundled example instead of --input");
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app->add_option("--out", c.out, "write the output to a file");
    if (!queries)
        return;
    app->add_option("--lambda", c.lambdas, "eigenvalue or class polynomial; repeatable");
    app->add_option("--degrees", c.degrees, "comma-separated degrees")->delimiter(',');
    app->add_option("--pipelines", c.pipelines, "comma-separated subset of P1,P2,P3")
        ->delimiter(',')
        ->check(CLI::IsMember({"P1", "P2", "P3"}));
    app->add_flag("--timing", c.timing, "include wall-clock timings (breaks byte-identical output)");
    app->add_flag("--no-witnesses", c.noWitnesses, "omit Massey witness chains");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Twisted monodromy, mapping torus torsion and Massey products"};
    app.require_subcommand(1);
    Common c;
    std::string exampleArg;

    auto* validate = app.add_subcommand("validate", "check an input document");
    addCommon(validate, c, false);
    auto* homology = app.add_subcommand("homology", "homology of the fiber and of the mapping torus");
    addCommon(homology, c, true);
    auto* monodromy = app.add_subcommand("monodromy", "twisted monodromy and Jordan blocks (P1)");
    addCommon(monodromy, c, true);
    auto* torus = app.add_subcommand("torus", "torsion of the mapping torus over Laurent polynomials (P2)");
    addCommon(torus, c, true);
    auto* massey = app.add_subcommand("massey", "Massey product lengths from the simplicial model (P3)");
    addCommon(massey, c, true);
    auto* verify = app.add_subcommand("verify", "run all pipelines and compare");
    addCommon(verify, c, true);
    auto* examples = app.add_subcommand("examples", "list bundled examples or print one");
    examples->add_option("name", exampleArg, "example to print");
    examples->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "table"}));
    examples->add_option("--out", c.out, "write the output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*validate)
            return runValidate(c);
        if (*homology)
            return runHomology(c);
        if (*monodromy)
            return runReport(c, {"P1"});
        if (*torus)
            return runReport(c, {"P2"});
        if (*massey)
            return runReport(c, {"P3"});
        if (*verify)
            return runReport(c, {"P1", "P2", "P3"});
        if (*examples)
            return runExamples(c, exampleArg);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << (std::string(e.what()).ends_with("\n") ? "" : "\n");
        return 1;
    } catch (const jml::DocumentError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
