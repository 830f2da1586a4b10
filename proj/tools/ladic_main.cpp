#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ladic/cli/commands.hpp"
#include "ladic/core/error.hpp"

namespace {

std::string read_input(const std::string& path)
{
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ladic::Error(ladic::ErrorKind::MalformedInput, "cannot read " + path);
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ladic: certified l-adic Tate-series, formal-group and Mellin computations"};
    app.require_subcommand(1, 1);

    ladic::RunOptions opts;
    std::string json_path;
    std::string input;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--prime", opts.prime, "residue prime l (overrides the file header)");
        sub->add_option("--precision", opts.precision, "absolute precision N");
        sub->add_option("--degree", opts.degree, "total-degree truncation D");
        sub->add_option("--level", opts.level, "default torsion level n");
        sub->add_option("--ext-poly", opts.ext_poly, "coefficient extension as <kind>:<c0,c1,..>");
        sub->add_option("--seed", opts.seed, "random seed");
        sub->add_option("--json", json_path, "write the JSON report to a path, or - for stdout");
        sub->add_option("--mutate", opts.mutate, "inject a fault")
            ->check(CLI::IsMember({"none", "phi-sign", "ledger-off-by-one", "unsaturated-lattice"}));
    };

    for (const auto& name : ladic::command_names()) {
        auto* sub = app.add_subcommand(name);
        add_common(sub);
        if (name == "selftest")
            sub->add_option("--profile", opts.profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
        else
            sub->add_option("input", input, "problem file, or - for stdin")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        std::optional<std::string> text;
        if (command != "selftest") text = read_input(input);
        const auto rep = ladic::run_command(command, text, opts);
        std::ostream& human = json_path == "-" ? std::cerr : std::cout;
        human << rep.text();
        if (!json_path.empty()) {
            const std::string dumped = rep.json().dump(2) + "\n";
            if (json_path == "-") std::cout << dumped;
            else {
                std::ofstream out(json_path);
                if (!out) {
                    std::cerr << "error: cannot write " << json_path << "\n";
                    return 2;
                }
                out << dumped;
            }
        }
        return rep.exit;
    } catch (const ladic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ladic::is_precision_kind(e.kind()) ? 3 : 2;
    }
}
