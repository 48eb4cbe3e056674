#include "nabla/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "nabla/fraccalc.hpp"
#include "nabla/monomial.hpp"

namespace nabla::cli {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& path, const std::string& message) {
    throw ConfigError("config field '" + path + "': " + message);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) field_error(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) field_error(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) field_error(path, "must be finite");
    return v;
}

Offset integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) field_error(path, "expected an integer");
    return j.get<Offset>();
}

std::vector<double> numbers(const json& j, const std::string& path) {
    if (!j.is_array()) field_error(path, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<double> numbers_of_size(const json& j, const std::string& path, std::size_t size) {
    std::vector<double> out = numbers(j, path);
    if (out.size() != size) {
        field_error(path, "expected " + std::to_string(size) + " numbers, got " +
                              std::to_string(out.size()));
    }
    return out;
}

/// {"constant": c} or {"start": k, "values": [...]} covering exactly [lo, hi].
GridFunction coefficient(const json& j, const std::string& path, double a, Offset lo, Offset hi) {
    const Grid grid(a, lo, hi);
    if (!j.is_object()) field_error(path, R"(expected {"constant": c} or {"start": k, "values": [...]})");
    if (j.contains("constant")) {
        return GridFunction::constant(grid, number(j["constant"], join(path, "constant")));
    }
    const Offset start = integer(require(j, "start", path), join(path, "start"));
    if (start != lo) {
        field_error(join(path, "start"), "must be " + std::to_string(lo) + ", got " +
                                             std::to_string(start));
    }
    std::vector<double> values =
        numbers_of_size(require(j, "values", path), join(path, "values"), grid.size());
    return GridFunction(grid, std::move(values));
}

BasisKind basis_kind(const json& section, const std::string& path) {
    if (!section.contains("basis")) return BasisKind::Numeric;
    const json& j = section["basis"];
    const std::string where = join(path, "basis");
    if (!j.is_string()) field_error(where, R"(expected "numeric" or "analytic")");
    const auto name = j.get<std::string>();
    if (name == "numeric") return BasisKind::Numeric;
    if (name == "analytic") return BasisKind::Analytic;
    field_error(where, R"(expected "numeric" or "analytic", got ")" + name + "\"");
}

BoundarySpec boundary_spec(const json& section, const std::string& path, int n) {
    const std::string alpha_path = join(path, "alpha");
    const json& alpha_json = require(section, "alpha", path);
    if (!alpha_json.is_array() || alpha_json.size() != static_cast<std::size_t>(n)) {
        field_error(alpha_path, "expected " + std::to_string(n) + " rows");
    }
    std::vector<std::vector<double>> alpha;
    for (std::size_t i = 0; i < alpha_json.size(); ++i) {
        alpha.push_back(numbers_of_size(alpha_json[i], alpha_path + "[" + std::to_string(i) + "]",
                                        static_cast<std::size_t>(n) + 1));
    }
    std::vector<double> left = section.contains("A")
                                   ? numbers_of_size(section["A"], join(path, "A"),
                                                     static_cast<std::size_t>(n))
                                   : std::vector<double>(static_cast<std::size_t>(n), 0.0);
    std::vector<double> beta = numbers_of_size(require(section, "beta", path), join(path, "beta"),
                                               static_cast<std::size_t>(n) + 1);
    const double right = section.contains("B") ? number(section["B"], join(path, "B")) : 0.0;
    try {
        return BoundarySpec(std::move(alpha), std::move(left), std::move(beta), right);
    } catch (const InvalidArgument& e) {
        field_error(path, e.what());
    }
}

IvpSection ivp_section(const json& section, const std::string& path, int n) {
    IvpSection out;
    out.initial = numbers_of_size(require(section, "A", path), join(path, "A"),
                                  static_cast<std::size_t>(n) + 1);
    if (!section.contains("ghost")) return out;
    const json& ghost = section["ghost"];
    const std::string where = join(path, "ghost");
    if (ghost.is_string()) {
        const auto name = ghost.get<std::string>();
        if (name == "zero") return out;
        if (name == "natural") {
            out.ghost = GhostKind::Natural;
            return out;
        }
        field_error(where, R"(expected "zero", "natural" or {"explicit": [...]}, got ")" + name + "\"");
    }
    if (!ghost.is_object() || !ghost.contains("explicit")) {
        field_error(where, R"(expected "zero", "natural" or {"explicit": [...]})");
    }
    out.ghost = GhostKind::Explicit;
    out.ghost_values = numbers_of_size(ghost["explicit"], join(where, "explicit"),
                                       static_cast<std::size_t>(n - 1));
    return out;
}

}  // namespace

std::vector<GridFunction> ProblemConfig::basis(BasisKind kind) const {
    return homogeneous_basis(op(), kind);
}

ProblemConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    ProblemConfig cfg;
    cfg.a = number(require(doc, "a", ""), "a");
    cfg.nu = number(require(doc, "nu", ""), "nu");
    cfg.b_offset = integer(require(doc, "b_offset", ""), "b_offset");
    if (!(cfg.nu > 0.0) || is_integer_order(cfg.nu)) {
        field_error("nu", "must be positive and not a whole number");
    }
    const int n = whole_order(cfg.nu);
    if (cfg.b_offset < n + 1) {
        field_error("b_offset", "must be at least N + 1 = " + std::to_string(n + 1));
    }
    const Offset b = cfg.b_offset;
    cfg.p = doc.contains("p") ? coefficient(doc["p"], "p", cfg.a, n, b)
                              : GridFunction::constant(Grid(cfg.a, n, b), 1.0);
    cfg.q = doc.contains("q") ? coefficient(doc["q"], "q", cfg.a, n + 1, b)
                              : GridFunction::zeros(Grid(cfg.a, n + 1, b));
    if (doc.contains("h")) cfg.h = coefficient(doc["h"], "h", cfg.a, n + 1, b);
    try {
        (void)cfg.op();
    } catch (const Error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    const json& problem = require(doc, "problem", "");
    if (!problem.is_object() || problem.size() != 1) {
        field_error("problem", R"(expected exactly one of "ivp", "bvp", "greens")");
    }
    if (problem.contains("ivp")) {
        if (!cfg.h) field_error("h", "required for ivp problems");
        cfg.problem = ivp_section(problem["ivp"], "problem.ivp", n);
        const auto& ivp = std::get<IvpSection>(cfg.problem);
        if (ivp.ghost == GhostKind::Natural && !cfg.op().is_unit_coefficient()) {
            field_error("problem.ivp.ghost", "natural closure needs p == 1 and q == 0");
        }
    } else if (problem.contains("bvp")) {
        if (!cfg.h) field_error("h", "required for bvp problems");
        const json& section = problem["bvp"];
        BvpSection bvp{boundary_spec(section, "problem.bvp", n), basis_kind(section, "problem.bvp")};
        if (bvp.basis == BasisKind::Analytic && !cfg.op().is_unit_coefficient()) {
            field_error("problem.bvp.basis", "analytic basis needs p == 1 and q == 0");
        }
        cfg.problem = std::move(bvp);
    } else if (problem.contains("greens")) {
        const json& section = problem["greens"];
        const std::string path = "problem.greens";
        if (!section.is_object()) field_error(path, "expected an object");
        bool conjugate = false;
        if (section.contains("conjugate")) {
            if (!section["conjugate"].is_boolean()) {
                field_error(join(path, "conjugate"), "expected true or false");
            }
            conjugate = section["conjugate"].get<bool>();
        }
        if (conjugate) {
            if (n != 2) field_error("nu", "conjugate problems need 1 < nu < 2");
            if (!cfg.op().is_unit_coefficient()) {
                field_error(join(path, "conjugate"), "conjugate problems need p == 1 and q == 0");
            }
            cfg.problem = GreensSection{true, BoundarySpec::conjugate_21(), BasisKind::Analytic};
        } else {
            GreensSection greens{false, boundary_spec(section, path, n).homogeneous(),
                                 basis_kind(section, path)};
            if (greens.basis == BasisKind::Analytic && !cfg.op().is_unit_coefficient()) {
                field_error(join(path, "basis"), "analytic basis needs p == 1 and q == 0");
            }
            cfg.problem = std::move(greens);
        }
    } else {
        field_error("problem", R"(expected exactly one of "ivp", "bvp", "greens")");
    }
    return cfg;
}

ProblemConfig load_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ConfigError("config line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": invalid JSON");
    }
    return parse_config(doc);
}

ProblemConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return load_config_text(text.str());
}

}  // namespace nabla::cli
