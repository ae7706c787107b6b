#include "berezin/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <optional>
#include <sstream>
#include <thread>

#include "berezin/io.hpp"
#include "berezin/simd.hpp"

namespace berezin {

namespace {

using io::Json;

struct Options {
    std::string model_path;
    std::string operator_path;
    std::string campaign_path;
    std::string out_path;
    std::string format = "text";
    std::vector<double> ts;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol_ineq;
    std::optional<unsigned> threads;
    bool self_test_mutation = false;
    bool refine = false;
    int steps = 11;
    double count_scale = 1.0;
};

KernelModel load_model(const Options& o, Eigen::Index dim, Json& spec_json) {
    if (o.model_path.empty()) {
        ModelSpec spec;
        spec.n = static_cast<std::size_t>(dim);
        spec_json = io::to_json(spec);
        return build_model(spec);
    }
    const ModelSpec spec = io::model_spec_from_json(io::read_json_file(o.model_path));
    spec_json = io::to_json(spec);
    return build_model(spec);
}

Operator load_operator(const Options& o) {
    if (o.operator_path.empty()) fail(ErrorCode::parse_error, "--operator is required");
    return io::operator_from_json(io::read_json_file(o.operator_path));
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
    } else {
        io::write_text_file(o.out_path, text);
    }
}

ScanOptions all_cores() { return ScanOptions{std::max(1u, std::thread::hardware_concurrency())}; }

Json pair_json(const PointPair& p) { return Json::array({p.lambda, p.mu}); }

int cmd_norms(const Options& o, std::ostream& out) {
    const Operator a = load_operator(o);
    Json spec;
    const KernelModel model = load_model(o, a.size(), spec);
    require_matching_dim(model, a, "norms");
    std::vector<double> ts = o.ts.empty() ? std::vector<double>{0.5} : o.ts;
    for (double t : ts) require_unit_interval(t, "norms --t");

    const PairTable table(model, a, all_cores());
    const auto ber = berezin_number(table);
    const auto norm = berezin_norm(table);
    const auto min_t = min_t_berezin(table);

    Json tber = Json::array();
    std::ostringstream text;
    std::ostringstream csv;
    csv << "quantity,t,value,lambda,mu\n";
    text << "ber " << io::format_text(ber.value) << " at " << ber.witness << '\n';
    text << "ber_norm " << io::format_text(norm.value) << " at (" << norm.witness.lambda << ", "
         << norm.witness.mu << ")\n";
    csv << "ber,," << io::format_double(ber.value) << ',' << ber.witness << ',' << ber.witness << '\n';
    csv << "ber_norm,," << io::format_double(norm.value) << ',' << norm.witness.lambda << ','
        << norm.witness.mu << '\n';
    for (double t : ts) {
        const auto r = t_berezin_norm(table, t);
        Json entry{{"t", t}, {"value", r.value}, {"witness", pair_json(r.witness)}};
        text << "t_ber t=" << io::format_text(t) << ' ' << io::format_text(r.value) << " at ("
             << r.witness.lambda << ", " << r.witness.mu << ")";
        csv << "t_ber," << io::format_double(t) << ',' << io::format_double(r.value) << ','
            << r.witness.lambda << ',' << r.witness.mu << '\n';
        if (o.refine && model.kind() == ModelKind::hardy) {
            const auto refined = refine_t_berezin(model, a, t, r);
            entry["refined"] = refined.value;
            text << " refined " << io::format_text(refined.value);
        }
        text << '\n';
        tber.push_back(std::move(entry));
    }
    text << "min_t t=" << io::format_text(min_t.t_star) << ' ' << io::format_text(min_t.value) << '\n';
    csv << "min_t," << io::format_double(min_t.t_star) << ',' << io::format_double(min_t.value) << ",,\n";

    if (o.format == "json") {
        Json j{{"model", spec},
               {"dim", a.size()},
               {"points", model.size()},
               {"ber", {{"value", ber.value}, {"witness", ber.witness}}},
               {"ber_norm", {{"value", norm.value}, {"witness", pair_json(norm.witness)}}},
               {"t_ber", tber},
               {"min_t", {{"t", min_t.t_star}, {"value", min_t.value}}}};
        emit(o, j.dump(2) + "\n", out);
    } else if (o.format == "csv") {
        emit(o, csv.str(), out);
    } else {
        emit(o, text.str(), out);
    }
    return kExitOk;
}

int cmd_sweep_t(const Options& o, std::ostream& out) {
    if (o.steps < 2) fail(ErrorCode::invalid_parameter, "sweep-t needs --steps >= 2");
    const Operator a = load_operator(o);
    Json spec;
    const KernelModel model = load_model(o, a.size(), spec);
    require_matching_dim(model, a, "sweep-t");
    const PairTable table(model, a, all_cores());
    std::ostringstream csv;
    csv << "t,t_ber\n";
    for (int k = 0; k < o.steps; ++k) {
        const double t = k == o.steps - 1 ? 1.0 : static_cast<double>(k) / (o.steps - 1);
        const double v = t_berezin_norm(table, t).value;
        if (o.format == "text") {
            csv << io::format_text(t) << ',' << io::format_text(v) << '\n';
        } else {
            csv << io::format_double(t) << ',' << io::format_double(v) << '\n';
        }
    }
    emit(o, csv.str(), out);
    return kExitOk;
}

std::string summary_text(const SuiteReport& r) {
    std::ostringstream text;
    text << "cases " << r.cases << " evaluations " << r.evaluations << " failures " << r.failures.size()
         << '\n';
    for (const auto& f : r.failures) {
        text << "FAIL case " << f.case_index << ' ' << f.bound_id;
        if (!f.variant.empty()) text << '/' << f.variant;
        text << " lhs " << io::format_text(f.lhs) << " rhs " << io::format_text(f.rhs) << " slack "
             << io::format_text(f.slack) << " seed " << f.seed;
        if (!f.message.empty()) text << " (" << f.message << ')';
        text << '\n';
    }
    for (const auto& [key, t] : r.tightness) {
        text << key << ' ' << t.role << " count " << t.count << " min_slack " << io::format_text(t.min_slack)
             << " improve_frac " << io::format_text(t.improve_frac) << '\n';
    }
    return text.str();
}

int cmd_verify(const Options& o, std::ostream& out) {
    CampaignConfig config;
    if (!o.campaign_path.empty()) config = io::campaign_from_json(io::read_json_file(o.campaign_path));
    if (o.seed) config.seed = *o.seed;
    if (o.tol_ineq) config.tol_rel = *o.tol_ineq;
    if (o.threads) config.threads = *o.threads;
    if (o.self_test_mutation) config.mutate = "*";

    const SuiteReport report = run_campaign(config);
    Json j{{"config", io::to_json(config)},
           {"simd", std::string(simd::name(simd::active().isa))},
           {"report", io::to_json(report)}};
    if (o.format == "json") {
        emit(o, j.dump(2) + "\n", out);
    } else if (o.format == "csv") {
        emit(o, io::suite_csv(report), out);
    } else {
        if (!o.out_path.empty()) io::write_text_file(o.out_path, j.dump(2) + "\n");
        out << summary_text(report);
    }
    return report.ok() ? kExitOk : kExitInequalityFailure;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
    const auto rows = reproduce_rows();
    bool ok = true;
    std::ostringstream text;
    std::ostringstream csv;
    Json j = Json::array();
    csv << "row,expected,computed,difference,threshold,pass\n";
    for (const auto& r : rows) {
        ok = ok && r.pass;
        char line[256];
        std::snprintf(line, sizeof line, "%-28s expected %-18s computed %-18s diff %-12s %s\n",
                      r.name.c_str(), io::format_text(r.expected).c_str(),
                      io::format_text(r.computed).c_str(), io::format_text(r.difference).c_str(),
                      r.pass ? "ok" : "MISMATCH");
        text << line;
        csv << r.name << ',' << io::format_double(r.expected) << ',' << io::format_double(r.computed) << ','
            << io::format_double(r.difference) << ',' << io::format_double(r.threshold) << ','
            << (r.pass ? "true" : "false") << '\n';
        Json row{{"row", r.name},          {"expected", r.expected},   {"computed", r.computed},
                 {"difference", r.difference}, {"threshold", r.threshold}, {"pass", r.pass}};
        if (!r.note.empty()) row["note"] = r.note;
        j.push_back(std::move(row));
    }
    if (o.format == "json") {
        emit(o, j.dump(2) + "\n", out);
    } else if (o.format == "csv") {
        emit(o, csv.str(), out);
    } else {
        emit(o, text.str(), out);
    }
    return ok ? kExitOk : kExitInequalityFailure;
}

int cmd_lemmas(const Options& o, std::ostream& out) {
    if (!(o.count_scale > 0.0)) fail(ErrorCode::invalid_parameter, "--scale must be positive");
    const std::uint64_t seed = o.seed.value_or(20240601);
    const double tol = o.tol_ineq.value_or(1e-9);
    auto scaled = [&](double n) { return static_cast<std::size_t>(std::max(1.0, std::round(n * o.count_scale))); };

    CounterRng r1(seed, 101);
    CounterRng r2(seed, 102);
    CounterRng r3(seed, 103);
    const std::vector<std::pair<std::string, SuiteReport>> suites{
        {"buzano", lemma_buzano(r1, 8, scaled(1e5), tol)},
        {"gen_cauchy", lemma_gen_cauchy(r2, 8, scaled(1e5), {0.0, 0.5, 1.0, 10.0}, tol)},
        {"mixed_schwarz", lemma_mixed_schwarz(r3, 4, scaled(1e4), {0.25, 0.5, 0.75}, tol)},
    };
    bool ok = true;
    Json j{{"seed", seed}, {"tol_rel", tol}};
    std::ostringstream text;
    for (const auto& [name, r] : suites) {
        ok = ok && r.ok();
        j[name] = io::to_json(r);
        text << name << ": " << summary_text(r);
    }
    if (o.format == "json") {
        emit(o, j.dump(2) + "\n", out);
    } else {
        emit(o, text.str(), out);
    }
    return ok ? kExitOk : kExitInequalityFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Berezin and t-Berezin norm toolkit"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> formats{"text", "json", "csv"};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out_path, "Write the result to this file");
        sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember(formats));
    };

    auto* norms = app.add_subcommand("norms", "ber, Berezin norm, t-Berezin norms and min over t");
    norms->add_option("--model", o.model_path, "Model JSON (default: standard model of the operator size)");
    norms->add_option("--operator", o.operator_path, "Operator JSON")->required();
    norms->add_option("--t", o.ts, "t values");
    norms->add_flag("--refine", o.refine, "Refine Hardy-model suprema around the grid witness");
    common(norms);

    auto* sweep = app.add_subcommand("sweep-t", "CSV of (t, ||A||_{t-ber})");
    sweep->add_option("--model", o.model_path, "Model JSON");
    sweep->add_option("--operator", o.operator_path, "Operator JSON")->required();
    sweep->add_option("--steps", o.steps, "Number of equally spaced t values");
    common(sweep);

    auto* verify = app.add_subcommand("verify", "Run an inequality campaign");
    verify->add_option("--campaign", o.campaign_path, "Campaign JSON (default campaign if omitted)");
    verify->add_option("--seed", o.seed, "Master seed");
    verify->add_option("--tol-ineq", o.tol_ineq, "Relative inequality tolerance");
    verify->add_option("--threads", o.threads, "Worker threads (0: all cores)");
    verify->add_flag("--self-test-mutation", o.self_test_mutation, "Scale every asserted rhs by 0.9");
    common(verify);

    auto* reproduce = app.add_subcommand("reproduce", "Worked examples against computed values");
    common(reproduce);

    auto* lemmas = app.add_subcommand("lemmas", "Vector-level lemma suites");
    lemmas->add_option("--seed", o.seed, "Seed");
    lemmas->add_option("--tol-ineq", o.tol_ineq, "Relative inequality tolerance");
    lemmas->add_option("--scale", o.count_scale, "Multiplier on the default case counts");
    common(lemmas);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (*norms) return cmd_norms(o, out);
        if (*sweep) return cmd_sweep_t(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*reproduce) return cmd_reproduce(o, out);
        if (*lemmas) return cmd_lemmas(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"berezin"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace berezin
