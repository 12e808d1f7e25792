#pragma once

// Structure files: UTF-8 JSON, format_version 1. Matrices are arrays of row
// arrays; rational entries are strings "p" or "p/q" in lowest terms, GF(p)
// entries are integers in [0, p). A structure that sits over a base
// (co)algebra carries it either inline or as a file reference (string path,
// resolved relative to the referencing file). Emission is canonical: sorted
// keys, normalized rationals, two-space indentation.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "codual/cert.hpp"
#include "codual/coalgebra.hpp"
#include "codual/comodule.hpp"
#include "codual/contramodule.hpp"
#include "codual/module.hpp"
#include "codual/tower.hpp"

namespace codual {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// field spec

inline FieldSpec field_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("field: expected {\"type\": \"Q\"} or {\"type\": \"GF\", \"p\": prime}");
    std::string type = j["type"].get<std::string>();
    if (type == "Q") return FieldSpec{FieldSpec::Kind::rationals, 0};
    if (type == "GF") {
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            throw ParseError("field: GF needs an unsigned prime \"p\"");
        std::uint64_t p = j["p"].get<std::uint64_t>();
        if (!is_prime_u64(p)) throw ParseError("field: modulus " + std::to_string(p) + " is not prime");
        return FieldSpec{FieldSpec::Kind::prime_field, p};
    }
    throw ParseError("field: unknown type \"" + type + "\"");
}

inline json field_spec_to_json(const FieldSpec& s) {
    if (s.kind == FieldSpec::Kind::rationals) return json{{"type", "Q"}};
    return json{{"type", "GF"}, {"p", s.characteristic}};
}

// ---------------------------------------------------------------------------
// matrices

template <FieldType F>
Matrix<F> matrix_from_json(const F& field, const json& j, std::size_t rows, std::size_t cols,
                           const std::string& loc) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(loc + ": expected " + std::to_string(rows) + " rows");
    Matrix<F> m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError(loc + "[" + std::to_string(i) + "]: expected " + std::to_string(cols) +
                             " entries");
        for (std::size_t k = 0; k < cols; ++k) {
            const json& cell = row[k];
            std::string where = loc + "[" + std::to_string(i) + "][" + std::to_string(k) + "]";
            if constexpr (std::is_same_v<F, RatField>) {
                if (!cell.is_string()) throw ParseError(where + ": rational entries are strings");
                auto e = field.parse(cell.get<std::string>());
                if (!e) throw ParseError(where + ": bad rational \"" + cell.get<std::string>() + "\"");
                m(i, k) = *e;
            } else {
                if (!cell.is_number_unsigned())
                    throw ParseError(where + ": GF entries are integers in [0, p)");
                auto e = field.parse(std::to_string(cell.get<std::uint64_t>()));
                if (!e) throw ParseError(where + ": entry out of range for " + field.name());
                m(i, k) = *e;
            }
        }
    }
    return m;
}

template <FieldType F>
json matrix_to_json(const F& field, const Matrix<F>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (std::is_same_v<F, RatField>)
                row.push_back(field.str(m(i, j)));
            else
                row.push_back(m(i, j));
        }
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// structures

inline json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": malformed JSON: " + e.what());
    }
    return j;
}

inline std::size_t dim_from_json(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw ParseError(std::string(key) + ": expected a nonnegative integer");
    return j[key].get<std::size_t>();
}

inline const json& payload_field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
    return j[key];
}

/// Modules remember whether their base arrived as a coalgebra (diagram
/// position) or as a bare algebra.
template <FieldType F>
struct LeftModuleFile {
    LeftModule<F> module;
    std::optional<Coalgebra<F>> base_coalgebra;
};

template <FieldType F>
struct RightModuleFile {
    RightModule<F> module;
    std::optional<Coalgebra<F>> base_coalgebra;
};

template <FieldType F>
using AnyStructure =
    std::variant<Coalgebra<F>, Algebra<F>, Comodule<F>, RightComodule<F>, Contramodule<F>,
                 LeftModuleFile<F>, RightModuleFile<F>, Bicomodule<F>, FiniteTower<F>>;

template <FieldType F>
AnyStructure<F> structure_from_json(const F& field, const json& j,
                                    const std::filesystem::path& base_dir);

namespace detail {

template <FieldType F>
json resolve_over(const F& field, const json& j, const char* key,
                  const std::filesystem::path& base_dir, std::filesystem::path& new_base) {
    const json& over = payload_field(j, key);
    if (over.is_string()) {
        std::filesystem::path p = base_dir / over.get<std::string>();
        new_base = p.parent_path();
        return load_json_file(p);
    }
    if (over.is_object()) {
        new_base = base_dir;
        return over;
    }
    throw ParseError(std::string(key) + ": expected an inline structure or a file path");
}

template <FieldType F>
Coalgebra<F> over_coalgebra(const F& field, const json& j, const char* key,
                            const std::filesystem::path& base_dir) {
    std::filesystem::path nb;
    json over = resolve_over(field, j, key, base_dir, nb);
    auto any = structure_from_json(field, over, nb);
    if (auto* c = std::get_if<Coalgebra<F>>(&any)) return *c;
    throw ParseError(std::string(key) + ": expected a coalgebra");
}

}  // namespace detail

template <FieldType F>
Coalgebra<F> coalgebra_from_json(const F& field, const json& j) {
    std::size_t n = dim_from_json(j, "dim");
    return Coalgebra<F>{field, n, matrix_from_json(field, payload_field(j, "delta"), n * n, n, "delta"),
                        matrix_from_json(field, payload_field(j, "eps"), 1, n, "eps")};
}

template <FieldType F>
AnyStructure<F> structure_from_json(const F& field, const json& j,
                                    const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ParseError("structure file must be a JSON object");
    if (!j.contains("format_version") || j["format_version"] != 1)
        throw ParseError("unsupported or missing format_version (expected 1)");
    if (field_spec_from_json(payload_field(j, "field")) != field.spec())
        throw ParseError("field mismatch between file and context");
    std::string kind = payload_field(j, "kind").is_string() ? j["kind"].get<std::string>() : "";
    if (kind == "coalgebra") return coalgebra_from_json(field, j);
    if (kind == "algebra") {
        std::size_t n = dim_from_json(j, "dim");
        return Algebra<F>{field, n, matrix_from_json(field, payload_field(j, "mult"), n, n * n, "mult"),
                          matrix_from_json(field, payload_field(j, "unit"), n, 1, "unit")};
    }
    if (kind == "comodule") {
        auto c = detail::over_coalgebra(field, j, "over", base_dir);
        std::size_t x = dim_from_json(j, "dim");
        return Comodule<F>{c, x, matrix_from_json(field, payload_field(j, "rho"), c.dim * x, x, "rho")};
    }
    if (kind == "right_comodule") {
        auto c = detail::over_coalgebra(field, j, "over", base_dir);
        std::size_t x = dim_from_json(j, "dim");
        return RightComodule<F>{c, x,
                                matrix_from_json(field, payload_field(j, "mu"), x * c.dim, x, "mu")};
    }
    if (kind == "contramodule") {
        auto c = detail::over_coalgebra(field, j, "over", base_dir);
        std::size_t z = dim_from_json(j, "dim");
        return Contramodule<F>{
            c, z, matrix_from_json(field, payload_field(j, "theta"), z, c.dim * z, "theta")};
    }
    if (kind == "left_module" || kind == "right_module") {
        std::filesystem::path nb;
        json over = detail::resolve_over(field, j, "over", base_dir, nb);
        auto base = structure_from_json(field, over, nb);
        Algebra<F> a{field, 0, Matrix<F>(field, 0, 0), Matrix<F>(field, 0, 0)};
        std::optional<Coalgebra<F>> base_co;
        if (auto* c = std::get_if<Coalgebra<F>>(&base)) {
            base_co = *c;
            a = dual_algebra(*c);
        } else if (auto* alg = std::get_if<Algebra<F>>(&base)) {
            a = *alg;
        } else {
            throw ParseError("over: modules sit over a coalgebra or an algebra");
        }
        std::size_t x = dim_from_json(j, "dim");
        if (kind == "left_module")
            return LeftModuleFile<F>{
                LeftModule<F>{a, x,
                              matrix_from_json(field, payload_field(j, "action"), x, a.dim * x,
                                               "action")},
                base_co};
        return RightModuleFile<F>{
            RightModule<F>{a, x,
                           matrix_from_json(field, payload_field(j, "action"), x, x * a.dim,
                                            "action")},
            base_co};
    }
    if (kind == "bicomodule") {
        auto c = detail::over_coalgebra(field, j, "over_left", base_dir);
        auto d = detail::over_coalgebra(field, j, "over_right", base_dir);
        std::size_t x = dim_from_json(j, "dim");
        return Bicomodule<F>{
            c, d, x, matrix_from_json(field, payload_field(j, "lambda"), c.dim * x, x, "lambda"),
            matrix_from_json(field, payload_field(j, "mu"), x * d.dim, x, "mu")};
    }
    if (kind == "tower") {
        auto c = detail::over_coalgebra(field, j, "over", base_dir);
        const json& levels = payload_field(j, "levels");
        const json& transitions = payload_field(j, "transitions");
        if (!levels.is_array() || levels.empty()) throw ParseError("levels: expected a nonempty array");
        if (!transitions.is_array() || transitions.size() + 1 != levels.size())
            throw ParseError("transitions: expected one per adjacent pair of levels");
        FiniteTower<F> t{c, {}, {}};
        for (std::size_t i = 0; i < levels.size(); ++i) {
            std::string loc = "levels[" + std::to_string(i) + "]";
            std::size_t z = dim_from_json(levels[i], "dim");
            t.levels.push_back(Contramodule<F>{
                c, z,
                matrix_from_json(field, payload_field(levels[i], "theta"), z, c.dim * z,
                                 loc + ".theta")});
        }
        for (std::size_t i = 0; i < transitions.size(); ++i)
            t.transitions.push_back(matrix_from_json(field, transitions[i], t.levels[i].dim,
                                                     t.levels[i + 1].dim,
                                                     "transitions[" + std::to_string(i) + "]"));
        return t;
    }
    throw ParseError("unknown kind \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// emission

template <FieldType F>
json to_json(const Coalgebra<F>& c) {
    return json{{"format_version", 1},
                {"kind", "coalgebra"},
                {"field", field_spec_to_json(c.field.spec())},
                {"dim", c.dim},
                {"delta", matrix_to_json(c.field, c.delta)},
                {"eps", matrix_to_json(c.field, c.eps)}};
}

template <FieldType F>
json to_json(const Algebra<F>& a) {
    return json{{"format_version", 1},
                {"kind", "algebra"},
                {"field", field_spec_to_json(a.field.spec())},
                {"dim", a.dim},
                {"mult", matrix_to_json(a.field, a.mult)},
                {"unit", matrix_to_json(a.field, a.unit)}};
}

template <FieldType F>
json to_json(const Comodule<F>& x) {
    return json{{"format_version", 1},
                {"kind", "comodule"},
                {"field", field_spec_to_json(x.over.field.spec())},
                {"over", to_json(x.over)},
                {"dim", x.dim},
                {"rho", matrix_to_json(x.over.field, x.rho)}};
}

template <FieldType F>
json to_json(const RightComodule<F>& m) {
    return json{{"format_version", 1},
                {"kind", "right_comodule"},
                {"field", field_spec_to_json(m.over.field.spec())},
                {"over", to_json(m.over)},
                {"dim", m.dim},
                {"mu", matrix_to_json(m.over.field, m.mu)}};
}

template <FieldType F>
json to_json(const Contramodule<F>& z) {
    return json{{"format_version", 1},
                {"kind", "contramodule"},
                {"field", field_spec_to_json(z.over.field.spec())},
                {"over", to_json(z.over)},
                {"dim", z.dim},
                {"theta", matrix_to_json(z.over.field, z.theta)}};
}

template <FieldType F>
json to_json(const LeftModuleFile<F>& m) {
    json over = m.base_coalgebra ? to_json(*m.base_coalgebra) : to_json(m.module.over);
    return json{{"format_version", 1},
                {"kind", "left_module"},
                {"field", field_spec_to_json(m.module.over.field.spec())},
                {"over", over},
                {"dim", m.module.dim},
                {"action", matrix_to_json(m.module.over.field, m.module.action)}};
}

template <FieldType F>
json to_json(const RightModuleFile<F>& m) {
    json over = m.base_coalgebra ? to_json(*m.base_coalgebra) : to_json(m.module.over);
    return json{{"format_version", 1},
                {"kind", "right_module"},
                {"field", field_spec_to_json(m.module.over.field.spec())},
                {"over", over},
                {"dim", m.module.dim},
                {"action", matrix_to_json(m.module.over.field, m.module.action)}};
}

template <FieldType F>
json to_json(const Bicomodule<F>& b) {
    return json{{"format_version", 1},
                {"kind", "bicomodule"},
                {"field", field_spec_to_json(b.over_left.field.spec())},
                {"over_left", to_json(b.over_left)},
                {"over_right", to_json(b.over_right)},
                {"dim", b.dim},
                {"lambda", matrix_to_json(b.over_left.field, b.lambda)},
                {"mu", matrix_to_json(b.over_left.field, b.mu)}};
}

template <FieldType F>
json to_json(const FiniteTower<F>& t) {
    json levels = json::array();
    for (const auto& z : t.levels)
        levels.push_back(json{{"dim", z.dim}, {"theta", matrix_to_json(t.over.field, z.theta)}});
    json transitions = json::array();
    for (const auto& f : t.transitions) transitions.push_back(matrix_to_json(t.over.field, f));
    return json{{"format_version", 1},
                {"kind", "tower"},
                {"field", field_spec_to_json(t.over.field.spec())},
                {"over", to_json(t.over)},
                {"levels", levels},
                {"transitions", transitions}};
}

template <FieldType F>
json to_json(const AnyStructure<F>& s) {
    return std::visit([](const auto& v) { return to_json(v); }, s);
}

/// Canonical emission: sorted keys (nlohmann object ordering), two-space
/// indent, trailing newline.
inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

inline void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << dump_canonical(j);
}

// ---------------------------------------------------------------------------
// reports

template <FieldType F>
json report_to_json(const F& field, const CertReport<F>& r) {
    json verdicts = json::array();
    for (const auto& c : r.checks) {
        json v{{"diagram", c.diagram}, {"pass", c.pass}};
        if (c.witness) {
            json lhs = json::array(), rhs = json::array();
            for (const auto& e : c.witness->lhs) {
                if constexpr (std::is_same_v<F, RatField>)
                    lhs.push_back(field.str(e));
                else
                    lhs.push_back(e);
            }
            for (const auto& e : c.witness->rhs) {
                if constexpr (std::is_same_v<F, RatField>)
                    rhs.push_back(field.str(e));
                else
                    rhs.push_back(e);
            }
            v["witness"] = json{{"basis_index", c.witness->basis_index}, {"lhs", lhs}, {"rhs", rhs}};
        }
        verdicts.push_back(v);
    }
    return json{{"pass", r.pass()}, {"verdicts", verdicts}};
}

template <FieldType F>
std::string report_to_text(const F& field, const CertReport<F>& r) {
    std::string out;
    for (const auto& c : r.checks) {
        out += c.diagram + ": " + (c.pass ? "PASS" : "FAIL");
        if (c.witness) {
            out += "  witness basis " + std::to_string(c.witness->basis_index) + "  lhs=[";
            for (std::size_t i = 0; i < c.witness->lhs.size(); ++i)
                out += (i ? ", " : "") + field.str(c.witness->lhs[i]);
            out += "]  rhs=[";
            for (std::size_t i = 0; i < c.witness->rhs.size(); ++i)
                out += (i ? ", " : "") + field.str(c.witness->rhs[i]);
            out += "]";
        }
        out += "\n";
    }
    return out;
}

}  // namespace codual
