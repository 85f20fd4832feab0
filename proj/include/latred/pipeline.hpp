#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latred/analysis.hpp"
#include "latred/basis.hpp"
#include "latred/enumerate.hpp"
#include "latred/errors.hpp"
#include "latred/gen.hpp"
#include "latred/lll.hpp"
#include "latred/obtuse.hpp"
#include "latred/sign_graph.hpp"
#include "latred/transform.hpp"

namespace latred {

using json = nlohmann::json;

struct GenSpec {
    std::string kind = "uniform";
    std::size_t n = 0;
    long long bound = 0;
    std::uint64_t seed = 0;
};

struct EnumSpec {
    bool enabled = false;
    std::optional<double> radius;  // nullopt = auto (min basis norm)
    std::string sign_mode = "auto";  // auto | on | off
    std::string profile_kind = "none";  // none | linear | file
    std::optional<std::vector<double>> profile_values;
    std::optional<std::uint64_t> node_budget;
    unsigned threads = 1;
};

struct PipelineArgs {
    std::optional<GenSpec> gen;
    std::optional<LatticeBasis> input;  // used when gen is absent
    std::string input_desc;
    std::vector<std::string> methods;  // auto | signflip | obtuse | lll, applied in order
    double delta = 0.99;
    bool allow_sublattice = false;
    EnumSpec enum_spec;
};

// Apply the reduction methods in order; "auto" follows the fallback chain
// obtuse-check -> sign flip -> full obtuse reduction and appends only the
// steps it actually ran.
inline std::vector<ReductionReport> apply_methods(const LatticeBasis& input,
                                                  const std::vector<std::string>& methods,
                                                  double delta = 0.99,
                                                  const ObtuseOptions& opts = {},
                                                  const ObtuseObserver& observer = nullptr) {
    std::vector<ReductionReport> steps;
    LatticeBasis current = input;
    for (const std::string& method : methods) {
        if (method == "auto") {
            if (is_obtuse(current)) continue;
            ReductionReport sf = sign_flip_reduce(current);
            if (sf.ok) {
                current = sf.output;
                steps.push_back(std::move(sf));
            } else {
                ReductionReport ob = obtuse_reduce(current, opts, observer);
                current = ob.output;
                steps.push_back(std::move(ob));
            }
        } else if (method == "signflip") {
            ReductionReport sf = sign_flip_reduce(current);
            if (sf.ok) current = sf.output;
            steps.push_back(std::move(sf));
        } else if (method == "obtuse") {
            ReductionReport ob = obtuse_reduce(current, opts, observer);
            current = ob.output;
            steps.push_back(std::move(ob));
        } else if (method == "lll") {
            ReductionReport r = lll_reduce(current, delta);
            current = r.output;
            steps.push_back(std::move(r));
        } else {
            throw UserError("unknown reduction method '" + method + "'");
        }
    }
    return steps;
}

namespace pipeline_detail {

inline json basis_json(const LatticeBasis& b) {
    json rows = json::array();
    for (const auto& row : b.rows) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.get_str());
        rows.push_back(std::move(r));
    }
    return rows;
}

inline json step_json(const ReductionReport& r) {
    json s;
    s["method"] = method_name(r.method);
    s["ok"] = r.ok;
    s["iterations"] = r.iterations;
    s["max_coeff_bits"] = r.max_coeff_bits;
    s["transform_det"] = r.transform_det.get_str();
    s["refined_floor_steps"] = r.refined_floor_steps;
    return s;
}

inline json stats_json(const EnumStats& st) {
    json s;
    s["nodes_visited"] = st.nodes_visited;
    s["good_nodes"] = st.good_nodes;
    s["sign_pruned"] = st.sign_pruned;
    s["interval_count"] = st.interval_count;
    s["interval_len_sum"] = st.interval_len_sum;
    s["total_nodes"] = st.total_nodes;
    return s;
}

inline json model_json(const ModelReport& m) {
    json rows = json::array();
    for (const auto& r : m.rows) {
        json row;
        row["level"] = r.level;
        row["d"] = r.d;
        row["visited"] = r.visited;
        row["good"] = r.good;
        if (r.empirical) row["empirical"] = *r.empirical;
        else row["empirical"] = nullptr;
        row["exact"] = r.exact_frac;
        row["asymptotic"] = r.asym_frac;
        rows.push_back(std::move(row));
    }
    json out;
    out["levels"] = std::move(rows);
    out["theorem_fraction"] = m.theorem_fraction;
    out["alpha"] = m.alpha;
    out["avg_interval_len"] = m.avg_interval_len;
    out["tree_size_log10"] = m.tree_size_log10;
    return out;
}

}  // namespace pipeline_detail

struct PipelineOutcome {
    LatticeBasis input;
    LatticeBasis output;
    std::vector<ReductionReport> steps;
    std::optional<std::pair<EnumResult, EnumStats>> enumeration;
    double enum_radius = 0.0;
    json report;
};

// Execute gen/reduce/enum per args and assemble the machine-readable report.
// All wall-clock measurements live under report["timings"], which replays are
// allowed to differ in; everything else is a pure function of the inputs.
inline PipelineOutcome run_pipeline(const PipelineArgs& args) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };
    auto t_total = clock::now();

    PipelineOutcome out;
    json rep;
    json timings;

    if (args.gen) {
        out.input = gen_basis(args.gen->kind, args.gen->n, args.gen->bound, args.gen->seed);
        rep["seed"] = args.gen->seed;
        rep["input"] = {{"descriptor", "gen:" + args.gen->kind},
                        {"n", out.input.n()},
                        {"m", out.input.dim()},
                        {"bound", args.gen->bound},
                        {"basis", pipeline_detail::basis_json(out.input)}};
    } else if (args.input) {
        out.input = *args.input;
        validate(out.input);
        rep["seed"] = nullptr;
        rep["input"] = {{"descriptor", args.input_desc.empty() ? "inline" : args.input_desc},
                        {"n", out.input.n()},
                        {"m", out.input.dim()},
                        {"basis", pipeline_detail::basis_json(out.input)}};
    } else {
        throw UserError("pipeline needs an input basis or a gen spec");
    }

    rep["pipeline"] = args.methods;

    auto t_reduce = clock::now();
    ObtuseOptions opts{args.allow_sublattice};
    out.steps = apply_methods(out.input, args.methods, args.delta, opts);
    out.output = out.steps.empty() ? out.input : out.steps.back().output;
    timings["reduce_ms"] = ms_since(t_reduce);

    json steps = json::array();
    for (const auto& s : out.steps) steps.push_back(pipeline_detail::step_json(s));
    rep["steps"] = std::move(steps);

    bool obtuse_out = is_obtuse(out.output);
    rep["output"] = {{"basis", pipeline_detail::basis_json(out.output)},
                     {"obtuse", obtuse_out},
                     {"obtuseness_defect", obtuseness_defect(out.output)},
                     {"same_lattice", same_lattice(out.input, out.output)},
                     {"max_coeff_bits", max_entry_bits(out.output)}};

    if (args.enum_spec.enabled) {
        auto t_enum = clock::now();
        EnumConfig cfg;
        cfg.radius = args.enum_spec.radius ? *args.enum_spec.radius : radius_default(out.output);
        out.enum_radius = cfg.radius;
        if (args.enum_spec.sign_mode == "on") cfg.sign_restricted = true;
        else if (args.enum_spec.sign_mode == "off") cfg.sign_restricted = false;
        else if (args.enum_spec.sign_mode == "auto") cfg.sign_restricted = obtuse_out;
        else throw UserError("sign-restricted mode must be auto, on or off");
        if (args.enum_spec.profile_kind == "linear")
            cfg.profile = linear_profile(out.output.n(), cfg.radius);
        else if (args.enum_spec.profile_kind == "file")
            cfg.profile = args.enum_spec.profile_values;
        else if (args.enum_spec.profile_kind != "none")
            throw UserError("profile must be none, linear or file");
        cfg.node_budget = args.enum_spec.node_budget;

        GsData gs = gram_schmidt(out.output);
        auto [res, stats] = enumerate_split(out.output, gs, cfg, args.enum_spec.threads);

        json e;
        e["radius"] = cfg.radius;
        e["sign_restricted"] = cfg.sign_restricted;
        e["profile"] = args.enum_spec.profile_kind;
        e["found"] = res.found;
        e["budget_exceeded"] = stats.budget_exceeded;
        if (res.found) {
            json vec = json::array();
            for (const auto& c : res.vec) vec.push_back(c.get_str());
            e["best"] = {{"coeffs", res.coeffs},
                         {"vector", std::move(vec)},
                         {"norm_sq", res.norm_sq.get_str()}};
        } else {
            e["best"] = nullptr;
        }
        e["stats"] = pipeline_detail::stats_json(stats);
        rep["enum"] = std::move(e);
        rep["model"] = pipeline_detail::model_json(
            compare_model(stats, static_cast<int>(out.output.n()), cfg.radius));
        out.enumeration = std::make_pair(std::move(res), std::move(stats));
        timings["enum_ms"] = ms_since(t_enum);
    } else {
        rep["enum"] = nullptr;
        rep["model"] = nullptr;
    }

    timings["total_ms"] = ms_since(t_total);
    rep["timings"] = std::move(timings);
    out.report = std::move(rep);
    return out;
}

// Comparison helper for replay checks: report with timing fields removed.
inline json strip_timings(json report) {
    report.erase("timings");
    return report;
}

}  // namespace latred
