#pragma once

#include "jml/delta.hpp"
#include "jml/monodromy.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jml {

/// Error with a JSON-pointer-like location.
class DocumentError : public std::invalid_argument
{
public:
    DocumentError(std::string path, const std::string& message)
        : std::invalid_argument(path + ": " + message), path_(std::move(path)), message_(message)
    {
    }
    const std::string& path() const { return path_; }
    const std::string& message() const { return message_; }

private:
    std::string path_;
    std::string message_;
};

struct Queries
{
    std::vector<std::string> lambdas;
    std::vector<int> degrees;  // empty: every degree
    std::vector<std::string> pipelines{"P1", "P2", "P3"};
};

/**
 * A parsed input: representation, fiber data with its lift, an optional
 * direct CW structure on X, an optional simplicial model, and queries.
 */
struct InputDocument
{
    std::string name;
    std::string description;
    Representation rep;
    std::optional<MonodromyData> mono;
    std::optional<CellData> directX;
    std::optional<LatticeSpec> lattice;
    std::optional<SimplicialSpec> simplicial;
    bool split = false;  // asserted by the author; never decided from the data
    Queries queries;

    bool hasSimplicial() const { return lattice.has_value() || simplicial.has_value(); }
    /// The Delta-complex model of X; requires hasSimplicial().
    DeltaComplex deltaModel() const;
};

/// Structural parsing only; throws DocumentError.
InputDocument parseDocument(const nlohmann::json& j);

struct Diagnostic
{
    std::string path;
    std::string message;
};

/// Parses and runs every consistency check that does not compute invariants.
std::vector<Diagnostic> validate(const nlohmann::json& j);

/// Names of the bundled examples, in a fixed order.
std::vector<std::string> exampleNames();
/// Throws std::invalid_argument listing the names when unknown.
nlohmann::json example(const std::string& name);

/// Bundled examples with a deliberately wrong lift; every one must be caught.
std::vector<std::string> corruptionNames();
nlohmann::json corruption(const std::string& name);

}  // namespace jml
