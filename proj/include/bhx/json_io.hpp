#pragma once

#include "bhx/extra_connectivity.hpp"
#include "bhx/extremal.hpp"
#include "bhx/verify.hpp"

#include <json.hpp>

#include <string>

namespace bhx {

using Json = nlohmann::ordered_json;

/// Witness file: {"n", "g", "vertices": ["a0,a1,..."], "edges", "certification", "construction"}.
auto witness_to_json(const SubgraphWitness & w, int n, int g) -> Json;

struct ParsedWitness
{
    int n = 0;
    int g = 0;
    SubgraphWitness witness;
};

auto witness_from_json(const Json & j) -> ParsedWitness;

auto cut_to_json(const CutWitness & w, int n) -> Json;
auto cut_from_json(const Json & j) -> std::pair<int, CutWitness>;

auto eg_bounds_to_json(const EgBounds & b) -> Json;
auto pipeline_to_json(const PipelineReport & r) -> Json;
auto known_values_to_json(const std::vector<KnownValueRow> & rows) -> Json;
auto verify_report_to_json(const VerifyReport & r) -> Json;

struct WitnessCheck
{
    bool ok = false;
    std::size_t checked = 0;
    std::string message;
};

/// Re-reads and revalidates a subgraph witness, a cut witness, or every
/// witness embedded in a pipeline report or bounds document.
auto check_witness_json(const Json & j) -> WitnessCheck;

} // namespace bhx
