// exegete: decide Hoare-style triples under every exegesis and model-check
// the transformer / TopKAT laws.
//
// Exit codes: 0 all expectations met / all laws pass, 1 some expectation or
// law failed, 2 usage, parse or semantic error.

#include <iostream>

#include "CLI11.hpp"

#include "exegete/error.hpp"
#include "exegete/report.hpp"
#include "exegete/specfile.hpp"

namespace {

constexpr int kUsageError = 2;

template <typename Report>
int emit(const Report& report, bool json) {
    if (json)
        std::cout << exegete::to_json(report).dump(2) << "\n";
    else
        std::cout << exegete::render_text(report);
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide triple validity under every exegesis over finite relational models"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;

    auto* check = app.add_subcommand("check", "run every check in a spec file");
    check->add_option("file", file, "spec file")->required();
    check->add_flag("--json", json, "emit JSON");

    std::string triple;
    auto* matrix = app.add_subcommand("matrix", "full exegesis matrix for one triple check");
    matrix->add_option("file", file, "spec file")->required();
    matrix->add_option("--triple", triple, "name of a triple check")->required();
    matrix->add_flag("--json", json, "emit JSON");

    std::string equation;
    auto* kat = app.add_subcommand("kat", "evaluate one TopKAT equation check");
    kat->add_option("file", file, "spec file")->required();
    kat->add_option("--equation", equation, "name of a kat check")->required();
    kat->add_flag("--json", json, "emit JSON");

    exegete::LawOptions law;
    bool exhaustive = false;
    bool random = false;
    std::string fault;
    auto* laws = app.add_subcommand("laws", "model-check the transformer and TopKAT laws");
    auto* ex_flag = laws->add_flag("--exhaustive", exhaustive, "every model up to --max-size states");
    auto* rnd_flag = laws->add_flag("--random", random, "seeded random models");
    ex_flag->excludes(rnd_flag);
    laws->add_option("--max-size", law.max_size, "largest state space for --exhaustive")
        ->check(CLI::Range(std::size_t{1}, exegete::kMaxExhaustiveSize));
    laws->add_option("--samples", law.samples, "number of random models");
    laws->add_option("--seed", law.seed, "seed for --random");
    laws->add_option("--size", law.random_size, "state count of random models")
        ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    laws->add_option("--threads", law.threads, "worker threads (0: all cores)");
    laws->add_flag("--json", json, "emit JSON");
    laws->add_option("--inject-fault", fault, "test hook")->check(CLI::IsMember({"dwp-as-dwlp"}))->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (*laws) {
            law.mode = random ? exegete::SweepMode::Random : exegete::SweepMode::Exhaustive;
            law.inject_dwp_fault = !fault.empty();
            return emit(exegete::run_laws(law), json);
        }
        const auto spec = exegete::load_spec_file(file, exegete::state_cap_from_env());
        if (*check) return emit(exegete::run_check(spec), json);
        if (*matrix) return emit(exegete::run_matrix(spec, triple), json);
        return emit(exegete::run_kat(spec, equation), json);
    } catch (const exegete::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
}
