#pragma once

#include "toric/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Input document: either a fan with optional ray values, or a polytope.
///
///   dim: 2
///   rays: [[1,1],[0,1],[-1,1],[0,-1]]
///   maximal_cones: [[0,1],[1,2],[2,3],[3,0]]
///   support: [0,-2,0,-2]
///
/// or
///
///   dim: 2
///   polytope: [[0,0],[1,0],[0,1],[1,1]]
struct FanSpec {
    std::size_t dim = 0;
    std::vector<LatticeVector> rays;
    std::vector<std::vector<std::size_t>> maximal_cones;
    std::optional<std::vector<Integer>> support;
    std::optional<std::vector<LatticeVector>> polytope;

    bool is_polytope() const { return polytope.has_value(); }
    friend bool operator==(const FanSpec&, const FanSpec&) = default;
};

/// Throws SyntaxError, SchemaError or DimensionMismatch with a 1-based
/// line and column.
FanSpec parse_spec(const std::string& text);

/// Flow-style document accepted by parse_spec.
std::string emit_spec(const FanSpec& spec);

} // namespace toric
