// wasp: command-line front end for the weighted answer set engine.
//
//   wasp models P1.wasp            stable models, one per line
//   wasp tchoices P1.wasp          total choices with weights and models
//   wasp classes P1.wasp           event-class census
//   wasp table P1.wasp             weight table (w_R, w_E, Pr_E) + check row
//   wasp prob P1.wasp -e "a"       probability of one event
//   wasp z P1.wasp                 the normalizing factor
//   wasp dot P1.wasp               stable-core lattice in DOT
//   wasp score P1.wasp -d obs.txt  log-likelihood of a dataset
//   wasp fit P1.wasp -d obs.txt    grid-search theta estimate (JSON)
//   wasp sample P1.wasp -n 10      draw events from the distribution
//
// Exit codes: 0 success, 1 user error (bad input, bad file), 2 internal.

#include "wasp/data.hpp"
#include "wasp/error.hpp"
#include "wasp/propagation.hpp"
#include "wasp/report_io.hpp"
#include "wasp/syntax.hpp"

#include <CLI11.hpp>

#include <deque>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct CommonArgs {
    std::string program_path;
    wasp::OutputFormat format = wasp::OutputFormat::pretty;
    std::string approx_text;
    CLI::Option* approx_opt = nullptr;
    bool hide_aux = false;
    std::size_t max_symbols = 0;

    wasp::RenderOptions render() const {
        wasp::RenderOptions options;
        options.format = format;
        options.hide_aux = hide_aux;
        options.approx = approx_opt != nullptr && approx_opt->count() > 0;
        if (options.approx && !approx_text.empty()) {
            if (approx_text.find_first_not_of("0123456789") != std::string::npos)
                throw wasp::Error("--approx expects a digit count, got '" + approx_text +
                                  "'");
            options.digits = std::stoi(approx_text);
        }
        return options;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wasp::Error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

wasp::Pipeline load_pipeline(const CommonArgs& args) {
    return wasp::analyze(wasp::parse_program(read_file(args.program_path)),
                         args.max_symbols);
}

wasp::ThetaAssignment load_theta(const wasp::Pipeline& pipeline,
                                 const std::string& path) {
    return wasp::parse_theta_json(pipeline, read_file(path));
}

wasp::Dataset load_dataset_file(const std::string& path, const wasp::SymbolTable& universe,
                                bool extend) {
    std::ifstream in(path);
    if (!in) throw wasp::Error("cannot read " + path);
    return wasp::load_dataset(in, universe,
                              extend ? wasp::EventParseMode::extend
                                     : wasp::EventParseMode::strict,
                              path);
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("program", args.program_path, "program file")->required();
    cmd->add_option("--format", args.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, wasp::OutputFormat>{
                {"pretty", wasp::OutputFormat::pretty},
                {"tsv", wasp::OutputFormat::tsv},
                {"json", wasp::OutputFormat::json}},
            CLI::ignore_case));
    args.approx_opt =
        cmd->add_option("--approx", args.approx_text,
                        "decimal output, optionally with a digit count (default 6)")
            ->expected(0, 1);
    cmd->add_flag("--hide-aux", args.hide_aux,
                  "hide generated atoms in displayed events");
    cmd->add_option("--max-symbols", args.max_symbols,
                    "enumeration cap override (default 12, env WASP_MAX_SYMBOLS)");
}

int run(int argc, char** argv) {
    CLI::App app{"weighted answer set engine"};
    app.require_subcommand(1);
    std::deque<CommonArgs> arg_sets; // one per subcommand, stable addresses

    std::string event_text;
    std::string theta_path;
    std::string dataset_path;
    bool extend = false;
    unsigned resolution = 10;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;

    CLI::App* models = app.add_subcommand("models", "list the stable models");
    CommonArgs& margs = arg_sets.emplace_back();
    add_common(models, margs);
    models->callback([&] {
        std::cout << wasp::render_models(load_pipeline(margs), margs.render());
    });

    CLI::App* tchoices = app.add_subcommand("tchoices", "list the total choices");
    CommonArgs& tcargs = arg_sets.emplace_back();
    add_common(tchoices, tcargs);
    tchoices->callback([&] {
        std::cout << wasp::render_choice_table(load_pipeline(tcargs), tcargs.render());
    });

    CLI::App* classes = app.add_subcommand("classes", "event-class census");
    CommonArgs& clargs = arg_sets.emplace_back();
    add_common(classes, clargs);
    classes->callback([&] {
        std::cout << wasp::render_class_table(load_pipeline(clargs), clargs.render());
    });

    CLI::App* table = app.add_subcommand("table", "class weight and probability table");
    CommonArgs& tbargs = arg_sets.emplace_back();
    add_common(table, tbargs);
    table->callback([&] {
        wasp::Pipeline pipeline = load_pipeline(tbargs);
        wasp::WeightReport report = wasp::propagate(pipeline);
        std::cout << wasp::render_weight_table(pipeline, report, tbargs.render());
    });

    CLI::App* prob = app.add_subcommand("prob", "probability of an event");
    CommonArgs& prargs = arg_sets.emplace_back();
    add_common(prob, prargs);
    prob->add_option("-e,--event", event_text, "event, e.g. \"a -b\" or \"{}\"")
        ->required();
    prob->add_option("--theta", theta_path, "theta assignment JSON file");
    prob->callback([&] {
        wasp::Pipeline pipeline = load_pipeline(prargs);
        wasp::WeightReport report = wasp::propagate(pipeline);
        wasp::EventMask event = wasp::parse_event(event_text, pipeline.program.symbols);
        wasp::RationalFn value = wasp::prob_event(pipeline, report, event);
        if (theta_path.empty()) {
            std::cout << wasp::render_prob(value, wasp::theta_namer(pipeline),
                                           prargs.render())
                      << "\n";
        } else {
            wasp::ThetaAssignment assignment = load_theta(pipeline, theta_path);
            std::cout << wasp::render_rational(
                             value.eval(assignment, wasp::theta_namer(pipeline)),
                             prargs.render())
                      << "\n";
        }
    });

    CLI::App* z = app.add_subcommand("z", "the normalizing factor");
    CommonArgs& zargs = arg_sets.emplace_back();
    add_common(z, zargs);
    z->add_option("--theta", theta_path, "theta assignment JSON file");
    z->callback([&] {
        wasp::Pipeline pipeline = load_pipeline(zargs);
        wasp::WeightReport report = wasp::propagate(pipeline);
        wasp::Poly value = wasp::normalizer(report);
        if (theta_path.empty()) {
            std::cout << wasp::render_poly(value, wasp::theta_namer(pipeline),
                                           zargs.render())
                      << "\n";
        } else {
            wasp::ThetaAssignment assignment = load_theta(pipeline, theta_path);
            std::cout << wasp::render_rational(
                             value.eval(assignment, wasp::theta_namer(pipeline)),
                             zargs.render())
                      << "\n";
        }
    });

    CLI::App* dot = app.add_subcommand("dot", "stable-core lattice in DOT");
    CommonArgs& dargs = arg_sets.emplace_back();
    add_common(dot, dargs);
    dot->callback([&] {
        wasp::Pipeline pipeline = load_pipeline(dargs);
        wasp::WeightReport report = wasp::propagate(pipeline);
        std::cout << wasp::emit_lattice_dot(pipeline, report, dargs.render());
    });

    CLI::App* score = app.add_subcommand("score", "log-likelihood of a dataset");
    CommonArgs& scargs = arg_sets.emplace_back();
    add_common(score, scargs);
    score->add_option("-d,--dataset", dataset_path, "event file, one per line")
        ->required();
    score->add_option("--theta", theta_path, "theta assignment JSON file");
    score->add_flag("--extend", extend, "accept out-of-universe atoms as misfits");
    score->callback([&] {
        wasp::Pipeline pipeline = load_pipeline(scargs);
        wasp::WeightReport report = wasp::propagate(pipeline);
        wasp::Dataset dataset =
            load_dataset_file(dataset_path, pipeline.program.symbols, extend);
        wasp::ThetaAssignment assignment;
        if (!theta_path.empty()) assignment = load_theta(pipeline, theta_path);
        std::cout << wasp::render_score(
            wasp::log_score(pipeline, report, dataset, assignment), scargs.render());
    });

    CLI::App* fit = app.add_subcommand("fit", "grid-search theta estimate");
    CommonArgs& ftargs = arg_sets.emplace_back();
    add_common(fit, ftargs);
    fit->add_option("-d,--dataset", dataset_path, "event file, one per line")
        ->required();
    fit->add_option("--resolution", resolution, "grid step denominator (default 10)")
        ->check(CLI::PositiveNumber);
    fit->add_flag("--extend", extend, "accept out-of-universe atoms as misfits");
    fit->callback([&] {
        wasp::Pipeline pipeline = load_pipeline(ftargs);
        wasp::WeightReport report = wasp::propagate(pipeline);
        wasp::Dataset dataset =
            load_dataset_file(dataset_path, pipeline.program.symbols, extend);
        wasp::ThetaAssignment best =
            wasp::fit_theta(pipeline, report, dataset, resolution);
        if (best.empty()) std::cerr << "note: the program has no free parameters\n";
        std::cout << wasp::theta_to_json(pipeline, best);
    });

    CLI::App* sample = app.add_subcommand("sample", "draw events from the distribution");
    CommonArgs& smargs = arg_sets.emplace_back();
    add_common(sample, smargs);
    sample->add_option("-n,--count", n, "number of draws")->required();
    sample->add_option("--seed", seed, "RNG seed (default 0)");
    sample->add_option("--theta", theta_path, "theta assignment JSON file");
    sample->callback([&] {
        wasp::Pipeline pipeline = load_pipeline(smargs);
        wasp::WeightReport report = wasp::propagate(pipeline);
        wasp::ThetaAssignment assignment;
        if (!theta_path.empty()) assignment = load_theta(pipeline, theta_path);
        wasp::Dataset draws = wasp::sample_events(pipeline, report, assignment, n, seed);
        std::cout << wasp::render_dataset(draws, smargs.render());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const wasp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (...) {
        std::cerr << "internal error\n";
        return 2;
    }
}
