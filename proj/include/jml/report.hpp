#pragma once

#include "jml/document.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jml {

/// Which pipelines to run and what to include; empty lists fall back to the document.
struct RunOptions
{
    std::vector<std::string> lambdas;
    std::vector<int> degrees;
    std::vector<std::string> pipelines;
    bool witnesses = true;
    bool timing = false;
};

/// One (degree, lambda) comparison.
struct VerificationEntry
{
    int degree = 0;
    std::string lambda;
    std::optional<int> J;            // P1
    std::map<std::string, int> nil;  // P2, by torus model
    std::optional<int> M;            // P3
    std::vector<std::string> errors;
    bool agree = false;
};

struct VerificationReport
{
    std::string name;
    std::vector<VerificationEntry> entries;
    std::vector<std::string> warnings;
    std::vector<std::string> failures;  // internal checks that did not hold
    nlohmann::json details;             // per-pipeline data for the JSON report

    bool allAgree() const;
};

/// Degree convention used to compare the three pipelines.
extern const char* const kDegreeAlignment;

/// Parameter for the Massey engine: the value, or a root in K[x]/(class).
Scalar lambdaScalar(const LambdaQuery& q);

VerificationReport runPipelines(const InputDocument& doc, const RunOptions& opts = {});

/// Dimensions of H_*(M) at lambda = 1 and of H_*(X, rho_lambda) for each torus model.
nlohmann::json homologyReport(const InputDocument& doc, const RunOptions& opts = {});

nlohmann::json toJson(const VerificationReport& r);
std::string toTable(const VerificationReport& r);

/// Exact string forms used in reports.
nlohmann::json matrixJson(const Mat& m);
nlohmann::json polysJson(const std::vector<Poly>& ps);

}  // namespace jml
