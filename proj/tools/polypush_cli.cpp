#include "polypush/errors.hpp"
#include "polypush/json_io.hpp"
#include "polypush/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>

namespace {

using namespace polypush;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumeric = 4;

struct Options {
    std::string complex_path;
    std::string set_path;
    double a = 1.0;
    double epsilon = 0.1;
    std::optional<double> gamma;
    std::uint64_t seed = 0;
    std::string ladder_csv;
    std::string out_dir = ".";
    bool render = false;
    std::string project;
};

std::vector<double> parse_ladder(const std::string& csv) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            out.push_back(std::stod(tok));
        } catch (...) {
            throw parse_error("bad --ladder entry: " + tok);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

RenderOptions render_options(const Options& opt) {
    RenderOptions ro;
    if (!opt.project.empty()) {
        auto comma = opt.project.find(',');
        if (comma == std::string::npos) throw parse_error("--project expects i,j");
        try {
            ro.project = {std::stoi(opt.project.substr(0, comma)),
                          std::stoi(opt.project.substr(comma + 1))};
        } catch (...) {
            throw parse_error("--project expects integer axes");
        }
    }
    return ro;
}

void emit(const Options& opt, const std::string& name, const std::string& content) {
    std::filesystem::create_directories(opt.out_dir);
    write_file((std::filesystem::path(opt.out_dir) / name).string(), content);
}

int run_command(const std::string& cmd, const Options& opt) {
    LoadedComplex lc = complex_from_file(opt.complex_path);
    const SimplicialComplex& cx = lc.complex;

    if (cmd == "validate") {
        auto rep = cx.validate();
        if (!opt.set_path.empty()) set_model_from_file(opt.set_path, cx);
        std::string out = validation_to_json(rep, lc.report);
        emit(opt, "validate.json", out);
        // The canonical table fixes the simplex ids that set models refer to.
        emit(opt, "canonical.json", complex_to_json(cx));
        std::cout << out;
        return rep.ok() ? 0 : kExitValidation;
    }
    if (cmd == "subdivide") {
        auto sub = subdivide(cx, opt.epsilon);
        emit(opt, "subdivided.json", complex_to_json(sub.complex));
        nlohmann::json t0;
        t0["t0"] = sub.t0;
        t0["rounds"] = sub.rounds;
        t0["simplices"] = sub.complex.num_simplices();
        emit(opt, "subdivide_report.json", t0.dump(2) + "\n");
        std::cout << t0.dump(2) << "\n";
        return 0;
    }
    if (cmd == "push") {
        SetModel sm = set_model_from_file(opt.set_path, cx);
        RunResult rr = run(cx, sm, opt.a, opt.seed, opt.gamma);
        emit(opt, "s_tilde.json", set_model_to_json(rr.s_tilde));
        emit(opt, "transport.json", transport_to_json(rr.transport));
        emit(opt, "stats.json", run_stats_to_json(rr.stats));
        if (opt.render) {
            const PushRecord* last =
                rr.transport.records.empty() ? nullptr : &rr.transport.records.front();
            emit(opt, "scene.svg", render_svg(cx, &rr.s_tilde, last, render_options(opt)));
        }
        std::cout << run_stats_to_json(rr.stats);
        return 0;
    }
    if (cmd == "near") {
        SetModel sm = set_model_from_file(opt.set_path, cx);
        NearResult nr = approximate_near(cx, sm, opt.a, opt.epsilon, opt.seed);
        emit(opt, "refined.json", complex_to_json(nr.refined));
        emit(opt, "s_tilde.json", set_model_to_json(nr.s_tilde));
        emit(opt, "transport.json", transport_to_json(nr.transport));
        emit(opt, "stats.json", run_stats_to_json(nr.stats));
        if (opt.render)
            emit(opt, "scene.svg", render_svg(nr.refined, &nr.s_tilde, nullptr, render_options(opt)));
        std::cout << run_stats_to_json(nr.stats);
        return 0;
    }
    if (cmd == "measure") {
        SetModel sm = set_model_from_file(opt.set_path, cx);
        MeasureEstimate weighted = hausdorff_setmodel(cx, sm);
        emit(opt, "measure.json", measure_to_json(weighted));
        std::vector<Vec> pts;
        for (const Sample& s : sm.samples) pts.push_back(s.point);
        MeasureEstimate covering =
            hausdorff_points(pts, sm.a, opt.ladder_csv.empty() ? std::vector<double>{}
                                                               : parse_ladder(opt.ladder_csv));
        emit(opt, "measure_covering.json", measure_to_json(covering));
        std::cout << measure_to_json(weighted);
        return 0;
    }
    if (cmd == "constants") {
        ConstantsBundle kc = K_constants(cx, opt.a);
        std::string out = constants_to_json(kc);
        emit(opt, "constants.json", out);
        std::cout << out;
        return 0;
    }
    if (cmd == "retract") {
        SetModel sm = set_model_from_file(opt.set_path, cx);
        RunResult rr = run(cx, sm, opt.a, opt.seed, opt.gamma);
        RetractChain chain = retract_chain(cx, rr.transport, sm);
        emit(opt, "retract.json", retract_to_json(chain));
        std::cout << "{\"stages\": " << chain.stages() << "}\n";
        return 0;
    }
    if (cmd == "render") {
        SetModel sm;
        const SetModel* smp = nullptr;
        if (!opt.set_path.empty()) {
            sm = set_model_from_file(opt.set_path, cx);
            smp = &sm;
        }
        std::string svg = render_svg(cx, smp, nullptr, render_options(opt));
        emit(opt, "scene.svg", svg);
        std::cout << svg;
        return 0;
    }
    throw parse_error("unknown command: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polypush: polyhedral replacement of closed sets in simplicial complexes"};
    app.require_subcommand(1);

    Options opt;
    std::string gamma_raw;
    for (const char* name :
         {"validate", "subdivide", "push", "near", "measure", "constants", "retract", "render"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--complex", opt.complex_path)->required();
        sub->add_option("--set", opt.set_path);
        sub->add_option("--a", opt.a);
        sub->add_option("--epsilon", opt.epsilon);
        sub->add_option("--gamma", gamma_raw);
        sub->add_option("--seed", opt.seed);
        sub->add_option("--ladder", opt.ladder_csv);
        sub->add_option("--out", opt.out_dir);
        sub->add_flag("--render", opt.render);
        sub->add_option("--project", opt.project);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return kExitParse;
    }

    if (!gamma_raw.empty()) {
        try {
            opt.gamma = std::stod(gamma_raw);
        } catch (...) {
            std::cerr << "bad --gamma value\n";
            return kExitParse;
        }
    }

    try {
        return run_command(app.get_subcommands().front()->get_name(), opt);
    } catch (const polypush::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const polypush::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const polypush::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
