#include "berezin/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace berezin::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::parse_error, what); }

void require_object(const Json& j, const char* what, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) bad(std::string(what) + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) bad(std::string(what) + ": unknown key '" + key + "'");
    }
}

double number(const Json& j, const std::string& what) {
    if (!j.is_number()) bad(what + " must be a number");
    return j.get<double>();
}

std::int64_t integer(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) bad(what + " must be an integer");
    return j.get<std::int64_t>();
}

std::size_t count(const Json& j, const std::string& what) {
    const auto v = integer(j, what);
    if (v < 0) bad(what + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

std::uint64_t seed(const Json& j, const std::string& what) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    return static_cast<std::uint64_t>(count(j, what));
}

std::string text(const Json& j, const std::string& what) {
    if (!j.is_string()) bad(what + " must be a string");
    return j.get<std::string>();
}

template <class T, class F>
std::vector<T> list(const Json& j, const std::string& what, F&& item) {
    if (!j.is_array()) bad(what + " must be an array");
    std::vector<T> out;
    for (const auto& e : j) out.push_back(item(e, what + " entry"));
    return out;
}

std::vector<double> numbers(const Json& j, const std::string& what) {
    return list<double>(j, what, number);
}

Json real_json(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

std::string model_kind_name(ModelKind k) {
    switch (k) {
        case ModelKind::standard: return "standard";
        case ModelKind::hardy: return "hardy";
        case ModelKind::onb: return "onb";
        case ModelKind::direct_sum: return "direct_sum";
    }
    return "standard";
}

}  // namespace

Json parse_json(const std::string& input) {
    try {
        return Json::parse(input);
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::configuration, "cannot write '" + path + "'");
    out << contents;
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("complex numbers are [re, im] pairs");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json to_json(Complex z) { return Json::array({real_json(z.real()), real_json(z.imag())}); }

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = -1;
    Matrix m;
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.empty()) bad("matrix rows must be nonempty arrays");
        if (cols < 0) {
            cols = static_cast<Eigen::Index>(row.size());
            m.resize(rows, cols);
        } else if (static_cast<Eigen::Index>(row.size()) != cols) {
            bad("matrix rows have different lengths");
        }
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Operator operator_from_json(const Json& j) {
    require_object(j, "operator", {"matrix", "blocks"});
    if (j.contains("matrix") == j.contains("blocks")) bad("operator needs exactly one of 'matrix' or 'blocks'");
    if (j.contains("matrix")) {
        Matrix m = matrix_from_json(j["matrix"]);
        if (m.rows() != m.cols()) bad("operator matrix must be square");
        return Operator(std::move(m));
    }
    const Json& grid = j["blocks"];
    if (!grid.is_array() || grid.empty()) bad("blocks must be a nonempty array of rows");
    std::vector<std::vector<Operator>> blocks;
    for (const auto& row : grid) {
        if (!row.is_array()) bad("block rows must be arrays");
        std::vector<Operator> ops;
        for (const auto& b : row) {
            Matrix m = matrix_from_json(b);
            if (m.rows() != m.cols()) bad("blocks must be square");
            ops.emplace_back(std::move(m));
        }
        blocks.push_back(std::move(ops));
    }
    try {
        return BlockOperator(std::move(blocks)).assemble();
    } catch (const Error& e) {
        bad(e.what());
    }
}

Json to_json(const Operator& a) { return Json{{"matrix", matrix_to_json(a.matrix())}}; }

ModelSpec model_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) bad("model needs a 'kind'");
    const std::string kind = text(j["kind"], "model kind");
    ModelSpec spec;
    if (kind == "standard") {
        require_object(j, "standard model", {"kind", "n"});
        spec.kind = ModelKind::standard;
        if (!j.contains("n")) bad("standard model needs 'n'");
        spec.n = count(j["n"], "n");
    } else if (kind == "hardy") {
        require_object(j, "hardy model", {"kind", "N", "radii", "angles"});
        spec.kind = ModelKind::hardy;
        spec.truncation = kDefaultHardyTruncation;
        spec.radii = default_hardy_radii();
        spec.angles_per_ring = kDefaultHardyAngles;
        if (j.contains("N")) spec.truncation = static_cast<int>(integer(j["N"], "N"));
        if (j.contains("radii")) spec.radii = numbers(j["radii"], "radii");
        if (j.contains("angles")) spec.angles_per_ring = static_cast<int>(integer(j["angles"], "angles"));
    } else if (kind == "onb") {
        require_object(j, "onb model", {"kind", "evaluations"});
        spec.kind = ModelKind::onb;
        if (!j.contains("evaluations")) bad("onb model needs 'evaluations'");
        spec.basis = matrix_from_json(j["evaluations"]);
    } else if (kind == "direct_sum") {
        require_object(j, "direct_sum model", {"kind", "n", "copies", "weight_steps", "phase_steps"});
        spec.kind = ModelKind::direct_sum;
        if (!j.contains("n")) bad("direct_sum model needs the base dimension 'n'");
        spec.n = count(j["n"], "n");
        if (j.contains("copies")) spec.copies = static_cast<int>(integer(j["copies"], "copies"));
        if (j.contains("weight_steps")) {
            spec.weight_steps = static_cast<int>(integer(j["weight_steps"], "weight_steps"));
        }
        if (j.contains("phase_steps")) {
            spec.phase_steps = static_cast<int>(integer(j["phase_steps"], "phase_steps"));
        }
    } else {
        bad("unknown model kind '" + kind + "'");
    }
    return spec;
}

Json to_json(const ModelSpec& spec) {
    Json j{{"kind", model_kind_name(spec.kind)}};
    switch (spec.kind) {
        case ModelKind::standard: j["n"] = spec.n; break;
        case ModelKind::hardy:
            j["N"] = spec.truncation;
            j["radii"] = spec.radii;
            j["angles"] = spec.angles_per_ring;
            break;
        case ModelKind::onb:
            if (spec.basis) j["evaluations"] = matrix_to_json(*spec.basis);
            break;
        case ModelKind::direct_sum:
            j["n"] = spec.n;
            j["copies"] = spec.copies;
            j["weight_steps"] = spec.weight_steps;
            j["phase_steps"] = spec.phase_steps;
            break;
    }
    return j;
}

ParamGrids grids_from_json(const Json& j) {
    require_object(j, "grids", {"t", "r", "s", "alpha", "lambda"});
    ParamGrids g;
    if (j.contains("t")) g.t = numbers(j["t"], "t grid");
    if (j.contains("r")) g.r = numbers(j["r"], "r grid");
    if (j.contains("s")) g.s = numbers(j["s"], "s grid");
    if (j.contains("alpha")) g.alpha = numbers(j["alpha"], "alpha grid");
    if (j.contains("lambda")) g.lambda = numbers(j["lambda"], "lambda grid");
    return g;
}

Json to_json(const ParamGrids& g) {
    return Json{{"t", g.t}, {"r", g.r}, {"s", g.s}, {"alpha", g.alpha}, {"lambda", g.lambda}};
}

CampaignConfig campaign_from_json(const Json& j) {
    require_object(j, "campaign",
                   {"seed", "cases_per_class", "classes", "dims", "hardy_truncations", "hardy_radii",
                    "hardy_angles", "block_dims", "bound_ids", "grids", "tol_rel", "threads", "mutate",
                    "mutate_factor"});
    CampaignConfig c;
    if (j.contains("seed")) c.seed = seed(j["seed"], "seed");
    if (j.contains("cases_per_class")) c.cases_per_class = count(j["cases_per_class"], "cases_per_class");
    if (j.contains("classes")) {
        c.classes = list<OperatorClass>(j["classes"], "classes", [](const Json& e, const std::string& w) {
            return parse_operator_class(text(e, w));
        });
    }
    if (j.contains("dims")) c.dims = list<std::size_t>(j["dims"], "dims", count);
    if (j.contains("hardy_truncations")) {
        c.hardy_truncations = list<int>(j["hardy_truncations"], "hardy_truncations",
                                        [](const Json& e, const std::string& w) {
                                            return static_cast<int>(integer(e, w));
                                        });
    }
    if (j.contains("hardy_radii")) c.hardy_radii = numbers(j["hardy_radii"], "hardy_radii");
    if (j.contains("hardy_angles")) c.hardy_angles = static_cast<int>(integer(j["hardy_angles"], "hardy_angles"));
    if (j.contains("block_dims")) c.block_dims = list<std::size_t>(j["block_dims"], "block_dims", count);
    if (j.contains("bound_ids")) {
        c.bound_ids = list<std::string>(j["bound_ids"], "bound_ids", text);
        for (const auto& id : c.bound_ids) {
            if (!is_bound_id(id)) bad("unknown bound id '" + id + "'");
        }
    }
    if (j.contains("grids")) c.grids = grids_from_json(j["grids"]);
    if (j.contains("tol_rel")) c.tol_rel = number(j["tol_rel"], "tol_rel");
    if (j.contains("threads")) c.threads = static_cast<unsigned>(count(j["threads"], "threads"));
    if (j.contains("mutate")) {
        if (j["mutate"].is_null()) {
            c.mutate.reset();
        } else {
            c.mutate = text(j["mutate"], "mutate");
            if (*c.mutate != "*" && !is_bound_id(*c.mutate)) bad("unknown bound id '" + *c.mutate + "'");
        }
    }
    if (j.contains("mutate_factor")) c.mutate_factor = number(j["mutate_factor"], "mutate_factor");
    if (!(c.tol_rel >= 0.0)) bad("tol_rel must be >= 0");
    return c;
}

Json to_json(const CampaignConfig& c) {
    Json classes = Json::array();
    for (auto k : c.classes) classes.push_back(to_string(k));
    Json j{{"seed", c.seed},
           {"cases_per_class", c.cases_per_class},
           {"classes", classes},
           {"dims", c.dims},
           {"hardy_truncations", c.hardy_truncations},
           {"hardy_radii", c.hardy_radii},
           {"hardy_angles", c.hardy_angles},
           {"block_dims", c.block_dims},
           {"bound_ids", c.bound_ids},
           {"grids", to_json(c.grids)},
           {"tol_rel", c.tol_rel},
           {"threads", c.threads},
           {"mutate", c.mutate ? Json(*c.mutate) : Json(nullptr)},
           {"mutate_factor", c.mutate_factor}};
    return j;
}

Json to_json(const Failure& f) {
    Json params = Json::object();
    for (const auto& [k, v] : f.params) params[k] = real_json(v);
    Json j{{"case", f.case_index}, {"bound_id", f.bound_id}, {"variant", f.variant},
           {"lhs", real_json(f.lhs)}, {"rhs", real_json(f.rhs)}, {"slack", real_json(f.slack)},
           {"seed", f.seed},          {"params", params}};
    if (!f.message.empty()) j["message"] = f.message;
    return j;
}

Json to_json(const SuiteReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) failures.push_back(to_json(f));
    Json tightness = Json::object();
    for (const auto& [key, t] : r.tightness) {
        tightness[key] = Json{{"role", t.role},
                              {"count", t.count},
                              {"min_slack", real_json(t.min_slack)},
                              {"mean_slack", real_json(t.mean_slack)},
                              {"improve_count", t.improve_count},
                              {"improve_frac", real_json(t.improve_frac)}};
    }
    return Json{{"cases", r.cases},
                {"evaluations", r.evaluations},
                {"failures", failures},
                {"tightness", tightness}};
}

OrliczFn orlicz_from_json(const Json& j) {
    require_object(j, "orlicz document", {"orlicz"});
    if (!j.contains("orlicz")) bad("expected {\"orlicz\": {...}}");
    const Json& o = j["orlicz"];
    require_object(o, "orlicz", {"kind", "r"});
    if (!o.contains("kind")) bad("orlicz needs 'kind'");
    const std::string kind = text(o["kind"], "orlicz kind");
    if (kind == "power") {
        if (!o.contains("r")) bad("power orlicz needs 'r'");
        return OrliczFn::power(number(o["r"], "r"));
    }
    if (kind == "hinge") {
        if (o.contains("r")) bad("hinge orlicz takes no 'r'");
        return hinge_orlicz();
    }
    bad("unknown orlicz kind '" + kind + "'");
}

Json to_json(const OrliczFn& phi) {
    if (phi.kind() == OrliczFn::Kind::power) {
        return Json{{"orlicz", Json{{"kind", "power"}, {"r", real_json(phi.exponent())}}}};
    }
    if (phi.name() == hinge_orlicz().name()) return Json{{"orlicz", Json{{"kind", "hinge"}}}};
    bad("custom orlicz function '" + phi.name() + "' has no JSON form");
}

PowerPair pair_from_json(const Json& j) {
    require_object(j, "pair document", {"pair"});
    if (!j.contains("pair")) bad("expected {\"pair\": {\"s\": ...}}");
    require_object(j["pair"], "pair", {"s"});
    if (!j["pair"].contains("s")) bad("pair needs 's'");
    return PowerPair(number(j["pair"]["s"], "s"));
}

Json to_json(const PowerPair& pair) { return Json{{"pair", Json{{"s", real_json(pair.s())}}}}; }

WeightFn weight_from_json(const Json& j) {
    require_object(j, "weight document", {"weight"});
    if (!j.contains("weight")) bad("expected {\"weight\": {\"alpha\": ...}}");
    require_object(j["weight"], "weight", {"alpha"});
    if (!j["weight"].contains("alpha")) bad("weight needs 'alpha'");
    return WeightFn(number(j["weight"]["alpha"], "alpha"));
}

Json to_json(const WeightFn& f) { return Json{{"weight", Json{{"alpha", real_json(f.alpha)}}}}; }

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
    return std::string(buffer, result.ptr);
}

std::string format_text(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", x);
    return buffer;
}

std::string suite_csv(const SuiteReport& r) {
    std::ostringstream out;
    out << "key,role,count,min_slack,mean_slack,improve_count,improve_frac\n";
    for (const auto& [key, t] : r.tightness) {
        out << key << ',' << t.role << ',' << t.count << ',' << format_double(t.min_slack) << ','
            << format_double(t.mean_slack) << ',' << t.improve_count << ',' << format_double(t.improve_frac)
            << '\n';
    }
    return out.str();
}

}  // namespace berezin::io
