#include "conjcore/explain.hpp"
#include "conjcore/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct CommonOpts {
    std::string pipeline_file;
    int cutoff = -1;
    std::string format = "human";
    std::string out_file;
};

int run_mode(const CommonOpts& opts, conjtk::RunMode mode) {
    conjtk::Json doc;
    {
        std::ifstream in(opts.pipeline_file);
        if (!in) {
            std::cerr << "cannot open " << opts.pipeline_file << "\n";
            return 2;
        }
        try {
            in >> doc;
        } catch (const std::exception& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return 2;
        }
    }

    conjtk::PipelineResult result;
    try {
        std::optional<int> cutoff;
        if (opts.cutoff > 0)
            cutoff = opts.cutoff;
        result = conjtk::run_pipeline(doc, cutoff, mode);
    } catch (const conjtk::PipelineError& e) {
        std::cerr << "pipeline error: " << e.what() << "\n";
        return 2;
    }

    const std::string text = opts.format == "json" ? result.report.dump(2) + "\n"
                                                   : conjtk::render_human(result.report);
    if (opts.out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.out_file);
        if (!out) {
            std::cerr << "cannot write " << opts.out_file << "\n";
            return 2;
        }
        out << text;
    }
    return result.any_failure ? 1 : 0;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("pipeline", opts.pipeline_file, "pipeline document (JSON)")->required();
    cmd->add_option("--cutoff", opts.cutoff, "override the degree cutoff");
    cmd->add_option("--format", opts.format, "report format")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--out", opts.out_file, "write the report to a file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conjugation-space frame construction and verification"};
    app.require_subcommand(1);

    CommonOpts opts;
    struct Sub {
        const char* name;
        const char* help;
        conjtk::RunMode mode;
    };
    const Sub subs[] = {
        {"build", "execute the pipeline steps as written", conjtk::RunMode::run},
        {"verify", "run the pipeline, then the axiom suite on every frame", conjtk::RunMode::verify},
        {"series", "run the pipeline, then print series tables with the halving column",
         conjtk::RunMode::series},
        {"char-classes", "run the pipeline, then characteristic-class checks on every bundle",
         conjtk::RunMode::char_classes},
        {"hamiltonian", "run the pipeline, then torsion diagnostics on every dataset",
         conjtk::RunMode::hamiltonian},
        {"reduce", "run the pipeline; kernel/reduction steps are explicit steps",
         conjtk::RunMode::reduce},
    };
    std::map<std::string, conjtk::RunMode> modes;
    for (const Sub& s : subs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.help);
        add_common(cmd, opts);
        modes[s.name] = s.mode;
    }

    std::string check_id;
    CLI::App* explain = app.add_subcommand("explain", "print what a check id verifies");
    explain->add_option("check-id", check_id, "check identifier (omit to list all)");

    CLI11_PARSE(app, argc, argv);

    if (explain->parsed()) {
        if (check_id.empty()) {
            for (const std::string& id : conjtk::known_check_ids())
                std::cout << id << "\n";
            return 0;
        }
        const auto text = conjtk::explain_check(check_id);
        if (!text) {
            std::cerr << "unknown check id '" << check_id << "'\n";
            return 2;
        }
        std::cout << check_id << ": " << *text << "\n";
        return 0;
    }

    for (const auto& [name, mode] : modes)
        if (app.get_subcommand(name)->parsed())
            return run_mode(opts, mode);
    return 2;
}
