#include "qcrystal/cli.hpp"

#include "qcrystal/errors.hpp"
#include "qcrystal/q_crystal.hpp"
#include "qcrystal/qrep.hpp"
#include "qcrystal/serialize.hpp"
#include "qcrystal/tableau_crystal.hpp"
#include "qcrystal/theorems.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace qcrystal {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int rank = 0;
    bool vector = false;
    int tensor = 0;
    std::string shape;
    std::string format = "dot";
    std::string reading = "row";
    std::string output;
    std::string theorem;
    std::string qrep;
    int power = 2;
    std::size_t budget = 100000;
};

StrictPartition shape_arg(const Options& o) {
    if (o.shape.empty())
        throw UsageError("--shape is required");
    StrictPartition lambda;
    try {
        lambda = parse_strict_partition(o.shape);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (lambda.length() > o.rank)
        throw UsageError("shape " + lambda.to_string() + " has more than n parts");
    return lambda;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::filesystem::path path(o.output);
    if (path.is_relative())
        if (const char* dir = std::getenv("QCRYSTAL_OUTPUT_DIR"); dir && *dir)
            path = std::filesystem::path(dir) / path;
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
    f << text;
}

int cmd_graph(const Options& o, std::ostream& out) {
    const int sources = (o.vector ? 1 : 0) + (o.tensor > 0 ? 1 : 0) + (o.shape.empty() ? 0 : 1);
    if (sources != 1)
        throw UsageError("give exactly one of --vector, --tensor N, --shape LAMBDA");
    const Reading reading = o.reading == "col" ? Reading::Column : Reading::Row;
    CrystalGraph g;
    if (o.vector)
        g = vector_crystal(o.rank);
    else if (o.tensor > 0)
        g = tensor_power(o.rank, static_cast<std::size_t>(o.tensor));
    else
        g = crystal_of_shape(shape_arg(o), o.rank, reading);
    emit(o, o.format == "json" ? to_json(g).dump(2) + "\n" : to_dot(g), out);
    return kExitPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.theorem.empty() == o.qrep.empty())
        throw UsageError("give exactly one of --theorem or --qrep");
    Report report;
    if (!o.theorem.empty()) {
        const StrictPartition lambda = shape_arg(o);
        if (o.theorem == "b")
            report = check_theorem_b(lambda, o.rank);
        else if (o.theorem == "c")
            report = verify_hw_formula(lambda, o.rank);
        else if (o.theorem == "e3")
            report = check_theorem_e3(lambda, o.rank);
        else
            report = check_reading_independence(lambda, o.rank);
    } else {
        if (o.rank < 2)
            throw UsageError("--qrep checks need n >= 2");
        if (o.qrep == "relations")
            report = qrep::verify_relations(o.rank, o.power);
        else if (o.qrep == "comult")
            report = qrep::verify_comult_odd(o.rank);
        else
            report = qrep::residue_check(o.rank, o.power);
    }
    emit(o, to_json(report).dump(2) + "\n", out);
    return report.passed() ? kExitPass : kExitFailure;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
    emit(o, to_json(explore_conjecture(shape_arg(o), o.rank, o.budget)).dump(2) + "\n", out);
    return kExitPass;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Crystal bases for the quantum queer superalgebra"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("-n,--rank", o.rank, "rank n")->required()->check(CLI::Range(1, 64));
        sub->add_option("-o,--output", o.output, "output file");
    };

    auto* graph = app.add_subcommand("graph", "emit a crystal graph");
    add_common(graph);
    graph->add_flag("--vector", o.vector, "the vector crystal B");
    graph->add_option("--tensor", o.tensor, "tensor power B^N")->check(CLI::Range(1, 12));
    graph->add_option("--shape", o.shape, "strict partition, e.g. 2,1");
    graph->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("--reading", o.reading, "row or col")->check(CLI::IsMember({"row", "col"}));

    auto* verify = app.add_subcommand("verify", "run a verification and print a JSON report");
    add_common(verify);
    verify->add_option("--theorem", o.theorem, "b, c, e3 or reading")
        ->check(CLI::IsMember({"b", "c", "e3", "reading"}));
    verify->add_option("--qrep", o.qrep, "relations, comult or residue")
        ->check(CLI::IsMember({"relations", "comult", "residue"}));
    verify->add_option("--shape", o.shape, "strict partition, e.g. 2,1");
    verify->add_option("-N,--power", o.power, "tensor power for qrep checks")->check(CLI::Range(1, 4));

    auto* conj = app.add_subcommand("conjecture", "list highest weight vectors of B(lambda) ⊗ B with expressions");
    add_common(conj);
    conj->add_option("--shape", o.shape, "strict partition, e.g. 2,1");
    conj->add_option("--budget", o.budget, "maximum number of tableaux expanded");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (graph->parsed())
            return cmd_graph(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        return cmd_conjecture(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace qcrystal
