#pragma once

#include "kkfusion/fusion_ring.hpp"
#include "kkfusion/modular.hpp"
#include "kkfusion/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kkfusion {

struct Model {
    std::string name;
    FusionRing ring;
    std::optional<ModularData> modular;
};

/// Built-in models, fully verified before being returned:
///   "trivial", "ising", "fibonacci",
///   "su2" with param = level k in 1..10,
///   "z_n" with param = n in 2..12.
/// Throws std::invalid_argument for unknown names or out-of-range params.
Model builtin(const std::string& name, std::optional<unsigned> param = std::nullopt);

/// JSON model document (the schema accepted by load_model).
std::string serialize_model(const Model& m);

// Parse + verification outcome of a model file. `model` is engaged only when
// every verification passed; the reports are always populated for whatever
// data was present.
struct LoadedModel {
    std::optional<Model> model;
    std::string name;
    VerificationReport fusion_report;
    std::optional<VerificationReport> modular_report;

    bool verified() const;
};

/// Throws only ParseError; verification failures are returned in the reports.
LoadedModel load_model_report(std::istream& in);

/// Strict load: throws ParseError on malformed input and VerificationError
/// (with the report attached) when any verification fails.
Model load_model(std::istream& in);
Model load_model_text(const std::string& json_text);
Model load_model_file(const std::string& path);

}  // namespace kkfusion
