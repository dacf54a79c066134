#include "conjcore/pipeline.hpp"

#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace conjtk {

namespace {

enum class BindType { frame, bundle, cells, hamiltonian, presentation };

const std::set<std::string> kFrameConstructors = {
    "point_frame",         "sphere_frame", "projective_frame",       "bt_frame",
    "grassmannian_frame",  "product_frame", "connected_sum_frame",   "toric_frame",
    "load_frame",          "thom_space_frame", "projective_bundle_frame"};

const std::set<std::string> kOtherConstructors = {"bundle", "whitney_sum", "cells",
                                                  "product_complex", "hamiltonian_data",
                                                  "presentation"};

const std::set<std::string> kCheckOps = {
    "verify_frame",   "check_injectivity", "halving_series",     "localize_check",
    "restrict",       "verify_naturality", "euler_check",        "chern_sw_check",
    "thom_module_check", "poincare_series", "validate_three_cell", "generic_direction",
    "morse_series",   "xi_independence",   "two_torsion_scan",   "mt2_check",
    "equivariant_series", "tw_kernel",     "stabilize",          "series",
    "canonical",      "fiber_bundle_series"};

int parse_extent(const Json& v, const char* what) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "infinity")
            return kInfinite;
        throw PipelineError(std::string(what) + ": expected an integer or \"inf\"");
    }
    if (!v.is_number_integer())
        throw PipelineError(std::string(what) + ": expected an integer or \"inf\"");
    return v.get<int>();
}

std::vector<long long> parse_vec(const Json& v) {
    if (!v.is_array())
        throw PipelineError("expected an integer vector");
    return v.get<std::vector<long long>>();
}

std::vector<Rational> parse_moment(const Json& v) {
    std::vector<Rational> out;
    for (const Json& x : v) {
        if (x.is_string())
            out.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            out.push_back(Rational(x.get<long long>()));
        else
            throw PipelineError("moment entries must be integers or \"p/q\" strings");
    }
    return out;
}

struct Env {
    std::map<std::string, ConjugationFrame> frames;
    std::map<std::string, TauBundle> bundles;
    std::map<std::string, CellSpec> cells;
    std::map<std::string, HamiltonianData> hams;
    std::map<std::string, EquivariantPresentation> press;

    const ConjugationFrame& frame(const std::string& name) const {
        const auto it = frames.find(name);
        if (it == frames.end())
            throw PipelineError("unknown frame binding '" + name + "'");
        return it->second;
    }
    const TauBundle& bundle(const std::string& name) const {
        const auto it = bundles.find(name);
        if (it == bundles.end())
            throw PipelineError("unknown bundle binding '" + name + "'");
        return it->second;
    }
    const CellSpec& cell(const std::string& name) const {
        const auto it = cells.find(name);
        if (it == cells.end())
            throw PipelineError("unknown cell binding '" + name + "'");
        return it->second;
    }
    const HamiltonianData& ham(const std::string& name) const {
        const auto it = hams.find(name);
        if (it == hams.end())
            throw PipelineError("unknown dataset binding '" + name + "'");
        return it->second;
    }
    const EquivariantPresentation& pres(const std::string& name) const {
        const auto it = press.find(name);
        if (it == press.end())
            throw PipelineError("unknown presentation binding '" + name + "'");
        return it->second;
    }
};

std::string ref(const Json& args, const char* key) {
    if (!args.contains(key) || !args.at(key).is_string())
        throw PipelineError(std::string("missing reference argument '") + key + "'");
    return args.at(key).get<std::string>();
}

ConjugationFrame build_frame(const std::string& op, const Json& args, int cutoff, const Env& env);

AlgebraMap map_from_images(const GradedAlgebra& src, const GradedAlgebra& tgt, DegreeScale scale,
                           const Json& images) {
    std::vector<Polynomial> imgs(src.ngens());
    for (const auto& [name, value] : images.items()) {
        const int gi = src.generator_index(name);
        if (gi < 0)
            throw PipelineError("map names unknown generator '" + name + "'");
        imgs[gi] = tgt.parse(value.get<std::string>());
    }
    return AlgebraMap(src, tgt, scale, std::move(imgs));
}

TauBundle bundle_from_args(const Json& args, const Env& env) {
    const ConjugationFrame& base = env.frame(ref(args, "base"));
    const int rank = args.at("rank").get<int>();
    std::vector<Polynomial> chern;
    if (args.contains("chern"))
        for (const Json& c : args.at("chern"))
            chern.push_back(base.even_ring().parse(c.get<std::string>()));
    while (static_cast<int>(chern.size()) < rank)
        chern.push_back(Polynomial());
    return TauBundle(base, rank, std::move(chern));
}

HamiltonianData ham_from_args(const Json& args, const Env& env) {
    HamiltonianData data;
    data.rank = args.at("rank").get<int>();
    for (const Json& c : args.at("components")) {
        FixedComponent fc{c.value("name", "F" + std::to_string(data.components.size())),
                          env.frame(ref(c, "frame")), parse_moment(c.at("moment")), {}};
        if (c.contains("weights"))
            for (const Json& w : c.at("weights"))
                fc.weights.push_back({parse_vec(w.at("vector")), w.value("multiplicity", 1)});
        data.components.push_back(std::move(fc));
    }
    return data;
}

EquivariantPresentation pres_from_args(const Json& args, int cutoff) {
    EquivariantPresentation pres{algebra_from_json(args.at("algebra"), cutoff),
                                 args.at("rank").get<int>(),
                                 {}};
    // Default restriction target: the polynomial ring on the torus classes.
    std::vector<Generator> tgens;
    for (int i = 1; i <= pres.rank; ++i)
        tgens.push_back({"t" + std::to_string(i), 2});
    const GradedAlgebra default_target =
        GradedAlgebra::free_algebra(tgens, pres.algebra.cutoff());
    for (const Json& r : args.at("restrictions")) {
        const GradedAlgebra target = r.contains("target")
                                         ? algebra_from_json(r.at("target"), pres.algebra.cutoff())
                                         : default_target;
        pres.restrictions.push_back(
            {r.value("point", "p" + std::to_string(pres.restrictions.size())),
             parse_moment(r.at("moment")),
             map_from_images(pres.algebra, target, DegreeScale::full, r.at("images"))});
    }
    return pres;
}

ConjugationFrame build_frame(const std::string& op, const Json& args, int cutoff, const Env& env) {
    const int local_cutoff = args.value("cutoff", cutoff);
    if (op == "point_frame")
        return point_frame(local_cutoff);
    if (op == "sphere_frame")
        return sphere_frame(args.at("k").get<int>(), local_cutoff);
    if (op == "projective_frame")
        return projective_frame(parse_extent(args.at("n"), "projective_frame"), local_cutoff);
    if (op == "bt_frame")
        return bt_frame(args.at("r").get<int>(), local_cutoff);
    if (op == "grassmannian_frame")
        return grassmannian_frame(args.at("k").get<int>(),
                                  parse_extent(args.at("n"), "grassmannian_frame"), local_cutoff);
    if (op == "product_frame")
        return product_frame(env.frame(ref(args, "left")), env.frame(ref(args, "right")));
    if (op == "connected_sum_frame")
        return connected_sum_frame(env.frame(ref(args, "left")), env.frame(ref(args, "right")),
                                   args.at("dimension").get<int>(),
                                   args.value("attest_closed", false));
    if (op == "toric_frame")
        return toric_frame(polytope_from_json(args.at("polytope")), local_cutoff);
    if (op == "load_frame")
        return frame_from_json(args.at("frame"), local_cutoff);
    if (op == "thom_space_frame")
        return thom_space_frame(env.bundle(ref(args, "bundle")));
    if (op == "projective_bundle_frame")
        return projective_bundle_frame(env.bundle(ref(args, "bundle")));
    throw PipelineError("unknown frame constructor '" + op + "'");
}

Json series_payload(const ConjugationFrame& f) {
    const HalvingResult h = halving_series(f);
    Json out;
    out["even_series"] = to_json(h.even);
    out["fixed_series"] = to_json(h.fixed);
    out["halving"] = h.halves;
    return out;
}

// Executes one step; returns the payload and whether every check passed.
std::pair<Json, bool> execute_step(const std::string& op, const Json& args, int cutoff, Env& env,
                                   const std::optional<std::string>& bind) {
    Json payload;
    bool pass = true;
    auto attach_report = [&](const Report& rep) {
        payload["checks"] = to_json(rep);
        pass = pass && rep.all_pass();
    };

    if (kFrameConstructors.count(op)) {
        ConjugationFrame f = build_frame(op, args, cutoff, env);
        payload = series_payload(f);
        if (bind)
            env.frames.insert_or_assign(*bind, std::move(f));
    } else if (op == "bundle") {
        TauBundle b = bundle_from_args(args, env);
        payload["rank"] = b.rank();
        if (bind)
            env.bundles.insert_or_assign(*bind, std::move(b));
    } else if (op == "whitney_sum") {
        TauBundle b = whitney_sum(env.bundle(ref(args, "left")), env.bundle(ref(args, "right")));
        payload["rank"] = b.rank();
        if (bind)
            env.bundles.insert_or_assign(*bind, std::move(b));
    } else if (op == "cells") {
        CellSpec spec = cellspec_from_json(args.at("stages"));
        payload["stages"] = to_json(spec);
        if (bind)
            env.cells.insert_or_assign(*bind, std::move(spec));
    } else if (op == "product_complex") {
        CellSpec spec = product_complex(env.cell(ref(args, "left")), env.cell(ref(args, "right")));
        payload["stages"] = to_json(spec);
        if (bind)
            env.cells.insert_or_assign(*bind, std::move(spec));
    } else if (op == "hamiltonian_data") {
        HamiltonianData data = ham_from_args(args, env);
        payload["components"] = data.components.size();
        if (bind)
            env.hams.insert_or_assign(*bind, std::move(data));
    } else if (op == "presentation") {
        EquivariantPresentation pres = pres_from_args(args, cutoff);
        attach_report(check_presentation(pres));
        if (bind)
            env.press.insert_or_assign(*bind, std::move(pres));
    } else if (op == "verify_frame") {
        attach_report(verify_frame(env.frame(ref(args, "frame"))));
    } else if (op == "check_injectivity") {
        const InjectivityResult r = check_injectivity_r(env.frame(ref(args, "frame")));
        Report rep;
        rep.add("injectivity-r", r.injective,
                r.injective ? ""
                            : "kernel in degree " + std::to_string(r.witness_degree) + ": " +
                                  r.witness);
        attach_report(rep);
    } else if (op == "halving_series") {
        const ConjugationFrame& f = env.frame(ref(args, "frame"));
        payload = series_payload(f);
        Report rep;
        rep.add("halving", payload["halving"].get<bool>(), "");
        attach_report(rep);
    } else if (op == "localize_check") {
        const LocalizeResult r = localize_check(env.frame(ref(args, "frame")));
        payload["finite_dimensional"] = r.finite_dimensional;
        payload["fiber_values"] = r.fiber_values;
        attach_report(r.report);
    } else if (op == "restrict") {
        const ConjugationFrame& f = env.frame(ref(args, "frame"));
        const Polynomial a = f.even_ring().parse(args.at("element").get<std::string>());
        const UPoly r = restrict_class(f, a, args.value("u_exp", 0));
        payload["result"] = r.str();
    } else if (op == "verify_naturality") {
        const ConjugationFrame& src = env.frame(ref(args, "source"));
        const ConjugationFrame& tgt = env.frame(ref(args, "target"));
        FrameMorphism m(src, tgt,
                        map_from_images(src.even_ring(), tgt.even_ring(), DegreeScale::full,
                                        args.at("even_map")),
                        map_from_images(src.fixed_ring(), tgt.fixed_ring(), DegreeScale::full,
                                        args.at("fixed_map")));
        attach_report(verify_naturality(m));
    } else if (op == "euler_check") {
        const bool ok = euler_check(env.bundle(ref(args, "bundle")));
        Report rep;
        rep.add("euler-class", ok, "");
        attach_report(rep);
    } else if (op == "chern_sw_check") {
        attach_report(chern_sw_check(env.bundle(ref(args, "bundle"))));
    } else if (op == "thom_module_check") {
        const FrameModule mod = thom_frame(env.bundle(ref(args, "bundle")));
        payload["omega"] = mod.omega().str();
        payload["thom_degree"] = mod.thom_degree();
        attach_report(mod.verify());
    } else if (op == "poincare_series") {
        const CellSeries s = poincare_series(env.cell(ref(args, "cells")), cutoff);
        payload["space_series"] = to_json(s.space);
        payload["real_series"] = to_json(s.real_locus);
        Report rep;
        rep.add("halving", Series::halving(s.space, s.real_locus, cutoff), "");
        attach_report(rep);
    } else if (op == "fiber_bundle_series") {
        const FiberSeriesResult r = fiber_bundle_series(env.cell(ref(args, "base")),
                                                        env.frame(ref(args, "fiber")), cutoff);
        payload["space_series"] = to_json(r.total);
        payload["real_series"] = to_json(r.total_real);
        Report rep;
        rep.add("halving", r.halves, "");
        attach_report(rep);
    } else if (op == "validate_three_cell") {
        const ThreeCellReport r = validate_three_cell(
            {args.at("p").get<std::int64_t>(), args.at("q").get<std::int64_t>()});
        attach_report(r.report);
    } else if (op == "generic_direction") {
        const DirectionCheck r = generic_direction(env.ham(ref(args, "data")),
                                                   parse_vec(args.at("xi")));
        Report rep;
        rep.add("generic-direction", r.generic, r.witness);
        attach_report(rep);
    } else if (op == "morse_series") {
        const MorseSeriesResult r =
            morse_series(env.ham(ref(args, "data")), parse_vec(args.at("xi")), cutoff);
        payload["space_series"] = to_json(r.total);
        payload["real_series"] = to_json(r.real_locus);
        Report rep;
        rep.add("morse-halving", r.halves, "");
        attach_report(rep);
    } else if (op == "xi_independence") {
        const bool ok = xi_independence(env.ham(ref(args, "data")), parse_vec(args.at("xi1")),
                                        parse_vec(args.at("xi2")), cutoff);
        Report rep;
        rep.add("xi-independence", ok, "");
        attach_report(rep);
    } else if (op == "two_torsion_scan") {
        const HamiltonianData& data = env.ham(ref(args, "data"));
        const auto hits = two_torsion_scan(data);
        Json list = Json::array();
        for (const TwoTorsionHit& h : hits) {
            const auto& w = data.components[h.component].weights[h.weight_index];
            list.push_back({{"component", data.components[h.component].name},
                            {"weight", w.chi}});
        }
        payload["hits"] = std::move(list);
        Report rep;
        rep.add("two-torsion", true,
                hits.empty() ? "no 2-torsion weights"
                             : std::to_string(hits.size()) + " weight(s) divisible by 2");
        attach_report(rep);
    } else if (op == "mt2_check") {
        const bool ok = mt2_check(env.ham(ref(args, "data")));
        payload["fixed_sets_agree"] = ok;
        Report rep;
        rep.add("mt2", true, ok ? "torus and 2-torus fixed sets agree"
                                : "2-torsion weight present; fixed sets differ");
        attach_report(rep);
    } else if (op == "equivariant_series") {
        const EquivariantSeriesResult r =
            equivariant_series(env.ham(ref(args, "data")), parse_vec(args.at("xi")), cutoff);
        payload["torus_series"] = to_json(r.torus);
        payload["two_torus_series"] = to_json(r.two_torus);
        Report rep;
        rep.add("equivariant-halving", r.halves, "");
        attach_report(rep);
    } else if (op == "tw_kernel") {
        std::vector<std::vector<long long>> xi_set;
        for (const Json& xi : args.at("xi_set"))
            xi_set.push_back(parse_vec(xi));
        std::optional<Series> real;
        if (args.contains("real_series"))
            real = Series(args.at("real_series").get<std::vector<std::int64_t>>());
        const TwKernelResult r =
            tw_kernel(env.pres(ref(args, "presentation")), xi_set, parse_moment(args.at("mu")), real);
        payload["kernel_series"] = to_json(r.kernel);
        payload["reduced_series"] = to_json(r.reduced);
        attach_report(r.report);
    } else if (op == "stabilize") {
        const std::string fam_op = args.at("family_op").get<std::string>();
        const Json fam_args = args.value("family_args", Json::object());
        std::vector<int> cutoffs = args.at("cutoffs").get<std::vector<int>>();
        Env empty;
        FrameFamily fam{fam_op, [&](int c) {
                            Json a = fam_args;
                            a["cutoff"] = c;
                            return build_frame(fam_op, a, c, empty);
                        }};
        attach_report(stabilize(fam, cutoffs));
    } else if (op == "series") {
        const std::string target = ref(args, "target");
        if (env.frames.count(target)) {
            payload = series_payload(env.frame(target));
            Report rep;
            rep.add("halving", payload["halving"].get<bool>(), "");
            attach_report(rep);
        } else if (env.cells.count(target)) {
            const CellSeries s = poincare_series(env.cell(target), cutoff);
            payload["space_series"] = to_json(s.space);
            payload["real_series"] = to_json(s.real_locus);
            Report rep;
            rep.add("halving", Series::halving(s.space, s.real_locus, cutoff), "");
            attach_report(rep);
        } else {
            throw PipelineError("series target '" + target + "' is not a frame or cell binding");
        }
    } else if (op == "canonical") {
        payload["frame"] = canonical_json(env.frame(ref(args, "frame")));
    } else {
        throw PipelineError("unknown op '" + op + "'");
    }
    return {std::move(payload), pass};
}

void validate_doc(const Json& doc) {
    if (!doc.is_object())
        throw PipelineError("pipeline document must be an object");
    if (!doc.contains("steps") || !doc.at("steps").is_array())
        throw PipelineError("pipeline document needs a 'steps' array");
    std::set<std::string> bound;
    for (const Json& step : doc.at("steps")) {
        if (!step.is_object() || !step.contains("op") || !step.at("op").is_string())
            throw PipelineError("each step needs an 'op' string");
        const std::string op = step.at("op").get<std::string>();
        if (!kFrameConstructors.count(op) && !kOtherConstructors.count(op) && !kCheckOps.count(op))
            throw PipelineError("unknown op '" + op + "'");
        if (step.contains("args") && !step.at("args").is_object())
            throw PipelineError("step 'args' must be an object");
        for (const char* key : {"bind-as", "bind"})
            if (step.contains(key)) {
                if (!step.at(key).is_string())
                    throw PipelineError(std::string("step '") + key + "' must be a string");
                bound.insert(step.at(key).get<std::string>());
            }
        // References must point at earlier bindings.
        if (step.contains("args"))
            for (const auto& [key, value] : step.at("args").items())
                if (value.is_string() &&
                    (key == "frame" || key == "left" || key == "right" || key == "base" ||
                     key == "bundle" || key == "cells" || key == "data" || key == "source" ||
                     key == "target" || key == "presentation" || key == "fiber"))
                    if (!bound.count(value.get<std::string>()))
                        throw PipelineError("step references '" + value.get<std::string>() +
                                            "' before it is bound");
    }
}

} // namespace

PipelineResult run_pipeline(const Json& doc, std::optional<int> cutoff_override, RunMode mode) {
    validate_doc(doc);
    const int cutoff = cutoff_override.value_or(doc.value("cutoff", 24));

    Env env;
    PipelineResult result;
    result.report["schema_version"] = 1;
    result.report["cutoff"] = cutoff;
    Json steps = Json::array();

    std::vector<std::pair<std::string, Json>> work; // op, step body
    for (const Json& step : doc.at("steps"))
        work.emplace_back(step.at("op").get<std::string>(), step);

    // Mode-dependent automatic checks over the bindings created so far are
    // appended after the explicit steps.
    auto run_one = [&](const std::string& op, const Json& step) {
        Json entry;
        entry["index"] = steps.size();
        entry["op"] = op;
        std::optional<std::string> bind;
        if (step.contains("bind-as")) // canonical spelling; "bind" accepted
            bind = step.at("bind-as").get<std::string>();
        else if (step.contains("bind"))
            bind = step.at("bind").get<std::string>();
        if (bind)
            entry["bind"] = *bind;
        if (step.contains("auto"))
            entry["auto"] = true;
        const Json args = step.value("args", Json::object());
        try {
            auto [payload, pass] = execute_step(op, args, cutoff, env, bind);
            entry["status"] = pass ? "ok" : "fail";
            if (!payload.is_null())
                entry.update(payload);
            if (!pass)
                result.any_failure = true;
        } catch (const PipelineError&) {
            throw; // malformed documents abort the run
        } catch (const Json::exception& e) {
            // wrong argument shapes are document defects, not math failures
            throw PipelineError("step " + std::to_string(steps.size()) + " (" + op +
                                "): " + e.what());
        } catch (const std::exception& e) {
            entry["status"] = "error";
            entry["error"] = e.what();
            result.any_failure = true;
        }
        steps.push_back(std::move(entry));
    };

    for (const auto& [op, step] : work)
        run_one(op, step);

    auto auto_step = [&](const std::string& op, const Json& args) {
        Json step;
        step["op"] = op;
        step["args"] = args;
        step["auto"] = true;
        run_one(op, step);
    };

    if (mode == RunMode::verify)
        for (const auto& [name, f] : env.frames) {
            (void)f;
            auto_step("verify_frame", {{"frame", name}});
            auto_step("check_injectivity", {{"frame", name}});
            auto_step("halving_series", {{"frame", name}});
        }
    if (mode == RunMode::series) {
        for (const auto& [name, f] : env.frames) {
            (void)f;
            auto_step("series", {{"target", name}});
        }
        for (const auto& [name, c] : env.cells) {
            (void)c;
            auto_step("series", {{"target", name}});
        }
    }
    if (mode == RunMode::char_classes)
        for (const auto& [name, b] : env.bundles) {
            (void)b;
            auto_step("euler_check", {{"bundle", name}});
            auto_step("chern_sw_check", {{"bundle", name}});
            auto_step("thom_module_check", {{"bundle", name}});
        }
    if (mode == RunMode::hamiltonian)
        for (const auto& [name, h] : env.hams) {
            (void)h;
            auto_step("two_torsion_scan", {{"data", name}});
            auto_step("mt2_check", {{"data", name}});
        }

    result.report["steps"] = std::move(steps);
    result.report["status"] = result.any_failure ? "fail" : "pass";
    return result;
}

namespace {

std::string series_line(const Json& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            os << ' ';
        os << s[i].get<std::int64_t>();
    }
    os << ']';
    return os.str();
}

} // namespace

namespace {

std::int64_t series_at(const Json& s, int d) {
    return (d >= 0 && d < static_cast<int>(s.size())) ? s[d].get<std::int64_t>() : 0;
}

// Per-degree table of dim_even(2m) against dim_fixed(m) with the halving
// verdict per row.
void render_series_table(std::ostringstream& os, const Json& even, const Json& fixed) {
    int top = static_cast<int>(even.size()) - 1;
    while (top > 0 && series_at(even, top) == 0 && series_at(fixed, top) == 0)
        --top;
    os << "      m | dim fixed(m) | dim even(2m) | halves\n";
    for (int m = 0; 2 * m <= static_cast<int>(even.size()) - 1 && m <= top; ++m) {
        const std::int64_t f = series_at(fixed, m);
        const std::int64_t e = series_at(even, 2 * m);
        os << "    " << std::setw(3) << m << " | " << std::setw(12) << f << " | " << std::setw(12)
           << e << " | " << (e == f ? "yes" : "NO") << "\n";
    }
}

} // namespace

std::string render_human(const Json& report) {
    std::ostringstream os;
    os << "cutoff " << report.at("cutoff").get<int>() << "\n";
    for (const Json& step : report.at("steps")) {
        const std::string op = step.at("op").get<std::string>();
        os << "step " << step.at("index").get<std::size_t>() << "  " << op;
        if (step.contains("bind"))
            os << "  -> " << step.at("bind").get<std::string>();
        os << "  [" << step.at("status").get<std::string>() << "]";
        if (step.contains("auto"))
            os << "  (auto)";
        os << "\n";
        if (step.contains("error"))
            os << "    error: " << step.at("error").get<std::string>() << "\n";
        if (step.contains("result"))
            os << "    result: " << step.at("result").get<std::string>() << "\n";
        if (step.contains("omega"))
            os << "    omega: " << step.at("omega").get<std::string>() << "\n";
        for (const char* key : {"even_series", "fixed_series", "space_series", "real_series",
                                "torus_series", "two_torus_series", "kernel_series",
                                "reduced_series"})
            if (step.contains(key))
                os << "    " << key << ": " << series_line(step.at(key)) << "\n";
        if (op == "series" && step.contains("even_series") && step.contains("fixed_series"))
            render_series_table(os, step.at("even_series"), step.at("fixed_series"));
        if (op == "series" && step.contains("space_series") && step.contains("real_series"))
            render_series_table(os, step.at("space_series"), step.at("real_series"));
        if (step.contains("halving"))
            os << "    halving: " << (step.at("halving").get<bool>() ? "true" : "false") << "\n";
        if (step.contains("checks"))
            for (const Json& c : step.at("checks")) {
                os << "    [" << c.at("status").get<std::string>() << "] "
                   << c.at("check_id").get<std::string>();
                if (c.contains("witness"))
                    os << "  -- " << c.at("witness").get<std::string>();
                os << "\n";
            }
    }
    os << "overall: " << report.at("status").get<std::string>() << "\n";
    return os.str();
}

} // namespace conjtk
