#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "nabla/bvp.hpp"
#include "nabla/frac_operator.hpp"
#include "nabla/ivp.hpp"

namespace nabla::cli {

/// Invalid configuration. what() names the offending field or input line.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GhostKind { Zero, Explicit, Natural };

struct IvpSection {
    std::vector<double> initial;
    GhostKind ghost = GhostKind::Zero;
    std::vector<double> ghost_values;
};

struct BvpSection {
    BoundarySpec spec;
    BasisKind basis = BasisKind::Numeric;
};

struct GreensSection {
    bool conjugate = false;
    /// Boundary functionals; the (2,1) conjugate ones when `conjugate` is set.
    BoundarySpec spec;
    BasisKind basis = BasisKind::Numeric;
};

using ProblemSection = std::variant<IvpSection, BvpSection, GreensSection>;

struct ProblemConfig {
    double a = 0.0;
    Offset b_offset = 0;
    double nu = 0.0;
    GridFunction p;
    GridFunction q;
    /// Forcing on [N + 1, b_offset]; optional for greens problems.
    std::optional<GridFunction> h;
    ProblemSection problem;

    [[nodiscard]] FracOperator op() const { return FracOperator(a, nu, b_offset, p, q); }
    [[nodiscard]] std::vector<GridFunction> basis(BasisKind kind) const;
};

/// Validates a parsed document. Coefficient tables must cover exactly
/// p on [N, b_offset] and q, h on [N + 1, b_offset]; omitted p and q default
/// to the constants 1 and 0.
[[nodiscard]] ProblemConfig parse_config(const nlohmann::json& doc);

/// Reads and validates a JSON file; syntax errors report line and column.
[[nodiscard]] ProblemConfig load_config(const std::filesystem::path& path);
[[nodiscard]] ProblemConfig load_config_text(const std::string& text);

}  // namespace nabla::cli
