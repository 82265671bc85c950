#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cobweb/chains.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/operators.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/sequence.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitNotAdmissible = 4;
constexpr int kExitCapExceeded = 5;

struct SequenceArgs {
    std::string kind;
    long q = 0;
    bool q_given = false;
    std::string file;
};

void add_sequence_options(CLI::App* cmd, SequenceArgs& args) {
    cmd->add_option("--seq", args.kind,
                    "sequence family: natural | fibonacci | gaussian | constant_one | custom")
        ->required();
    cmd->add_option("--q", args.q, "parameter for --seq gaussian")
        ->check(CLI::PositiveNumber)
        ->each([&args](const std::string&) { args.q_given = true; });
    cmd->add_option("--file", args.file, "JSON file for --seq custom");
}

cobweb::FSequence resolve_sequence(const SequenceArgs& args) {
    if (args.kind == "natural")
        return cobweb::FSequence::natural();
    if (args.kind == "fibonacci")
        return cobweb::FSequence::fibonacci();
    if (args.kind == "constant_one")
        return cobweb::FSequence::constant_one();
    if (args.kind == "gaussian") {
        if (!args.q_given)
            throw CLI::ValidationError("--seq gaussian requires --q");
        return cobweb::FSequence::gaussian(args.q);
    }
    if (args.kind == "custom") {
        if (args.file.empty())
            throw CLI::ValidationError("--seq custom requires --file");
        return cobweb::FSequence::from_json_file(args.file);
    }
    throw CLI::ValidationError("unknown sequence '" + args.kind + "'");
}

// --cap beats COBWEB_CAP beats the built-in default.
std::uint64_t effective_cap(const std::optional<std::uint64_t>& flag) {
    if (flag)
        return *flag;
    if (const char* env = std::getenv("COBWEB_CAP")) {
        try {
            std::size_t used = 0;
            std::string text(env);
            unsigned long long v = std::stoull(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return v;
        } catch (const std::exception&) {
            throw cobweb::Error(std::string("COBWEB_CAP is not a valid count: ") + env);
        }
    }
    return cobweb::kDefaultEnumerationCap;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.emplace(path);
            if (!*file_)
                throw cobweb::Error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::optional<std::ofstream> file_;
};

void write_table_text(std::ostream& os, const cobweb::FNomialTable& table) {
    for (const auto& row : table) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0)
                os << ' ';
            os << cobweb::rational_to_string(row[k].value);
        }
        os << '\n';
    }
}

int cmd_table(const SequenceArgs& seq_args, std::size_t n, const std::string& format,
              const std::string& out_path) {
    auto F = resolve_sequence(seq_args);
    auto table = cobweb::fnomial_table(F, n);
    Output out(out_path);
    if (format == "csv")
        cobweb::write_table_csv(out.stream(), table);
    else if (format == "json")
        out.stream() << cobweb::to_json(F, table).dump(2) << '\n';
    else
        write_table_text(out.stream(), table);
    return 0;
}

int cmd_admissible(const SequenceArgs& seq_args, std::size_t n, const std::string& out_path) {
    auto F = resolve_sequence(seq_args);
    auto report = cobweb::is_admissible_upto(F, n);
    Output out(out_path);
    out.stream() << cobweb::to_json(report).dump(2) << '\n';
    return report.admissible ? 0 : kExitNotAdmissible;
}

int cmd_verify(const SequenceArgs& seq_args, std::size_t n, std::size_t k, bool materialize,
               bool require_blocks, const std::optional<std::uint64_t>& cap,
               const std::string& out_path) {
    auto F = resolve_sequence(seq_args);
    auto cert = cobweb::verify_partition_theorem(F, n, k, materialize || require_blocks,
                                                 effective_cap(cap));
    Output out(out_path);
    out.stream() << cobweb::to_json(cert).dump(2) << '\n';
    if (require_blocks && !cert.blocks_materialized) {
        std::cerr << "cap exceeded: " << cert.chain_count.str()
                  << " chains, blocks not materialized\n";
        return kExitCapExceeded;
    }
    return cert.verified ? 0 : 1;
}

int cmd_chains(const SequenceArgs& seq_args, std::size_t from, std::size_t to,
               const std::optional<std::uint64_t>& cap, const std::string& out_path) {
    auto F = resolve_sequence(seq_args);
    auto poset = cobweb::build_cobweb(F, to);
    cobweb::ChainEnumerator en(poset.layer(from, to), effective_cap(cap));
    Output out(out_path);
    while (auto chain = en.next())
        out.stream() << chain->to_string() << '\n';
    return 0;
}

int cmd_dot(const SequenceArgs& seq_args, std::size_t from, std::size_t to,
            const std::vector<std::size_t>& sigma, const std::string& out_path) {
    auto F = resolve_sequence(seq_args);
    if (!sigma.empty())
        F = F.permute_prefix(sigma);
    auto poset = cobweb::build_cobweb(F, to);
    Output out(out_path);
    cobweb::write_dot(out.stream(), poset.layer(from, to));
    return 0;
}

int cmd_ghw(const SequenceArgs& seq_args, const std::string& poly, std::size_t trunc,
            const std::string& out_path) {
    auto F = resolve_sequence(seq_args);
    auto f = cobweb::PolySpec::parse(poly);
    auto report = cobweb::check_graves_identity(f, F, trunc);
    Output out(out_path);
    out.stream() << cobweb::to_json(report).dump(2) << '\n';
    return report.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cobweb poset construction, F-nomial tables and GHW identity checks"};
    app.require_subcommand(1);

    SequenceArgs seq_args;
    std::size_t n = 0, k = 0, from = 0, to = 0, trunc = 0, bound = 20;
    std::string format = "text", out_path, poly;
    bool materialize = false, require_blocks = false;
    std::optional<std::uint64_t> cap;
    std::vector<std::size_t> sigma;

    auto* table = app.add_subcommand("table", "print the F-nomial triangle up to row n");
    add_sequence_options(table, seq_args);
    table->add_option("--n", n, "largest row")->required();
    table->add_option("--format", format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_option("--out", out_path, "output file (default stdout)");

    auto* admissible =
        app.add_subcommand("admissible", "check cobweb admissibility up to a bound");
    add_sequence_options(admissible, seq_args);
    admissible->add_option("--n", bound, "bound on the checked rows (default 20)");
    admissible->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand(
        "verify", "verify the layer-partition identity fnomial(n,k) * m_F! = chain count");
    add_sequence_options(verify, seq_args);
    verify->add_option("--n", n, "layer top index")->required();
    verify->add_option("--k", k, "theorem parameter k")->required();
    verify->add_flag("--materialize", materialize, "build and check explicit blocks");
    verify->add_flag("--require-blocks", require_blocks,
                     "fail (exit 5) when blocks cannot be materialized under the cap");
    verify->add_option("--cap", cap, "enumeration cap (default 10^7 or COBWEB_CAP)");
    verify->add_option("--out", out_path, "output file (default stdout)");

    auto* chains = app.add_subcommand("chains", "list the maximal chains of a layer");
    add_sequence_options(chains, seq_args);
    chains->add_option("--from", from, "lowest level")->required();
    chains->add_option("--to", to, "highest level")->required();
    chains->add_option("--cap", cap, "enumeration cap (default 10^7 or COBWEB_CAP)");
    chains->add_option("--out", out_path, "output file (default stdout)");

    auto* dot = app.add_subcommand("dot", "emit a layer as a DOT digraph");
    add_sequence_options(dot, seq_args);
    dot->add_option("--from", from, "lowest level")->required();
    dot->add_option("--to", to, "highest level")->required();
    dot->add_option("--sigma", sigma,
                    "comma-separated images sigma(1),...,sigma(N) applied to the sequence")
        ->delimiter(',');
    dot->add_option("--out", out_path, "output file (default stdout)");

    auto* ghw = app.add_subcommand("ghw", "check the Graves identity [f(d),x] = f'(d)");
    add_sequence_options(ghw, seq_args);
    ghw->add_option("--poly", poly, "comma-separated rational coefficients, lowest first")
        ->required();
    ghw->add_option("--trunc", trunc, "truncation degree N (needs N >= deg f + 2)")->required();
    ghw->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table->parsed())
            return cmd_table(seq_args, n, format, out_path);
        if (admissible->parsed())
            return cmd_admissible(seq_args, bound, out_path);
        if (verify->parsed())
            return cmd_verify(seq_args, n, k, materialize, require_blocks, cap, out_path);
        if (chains->parsed())
            return cmd_chains(seq_args, from, to, cap, out_path);
        if (dot->parsed())
            return cmd_dot(seq_args, from, to, sigma, out_path);
        if (ghw->parsed())
            return cmd_ghw(seq_args, poly, trunc, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const cobweb::InvalidSequence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const cobweb::IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const cobweb::NotAdmissible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotAdmissible;
    } catch (const cobweb::EnumerationCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapExceeded;
    } catch (const cobweb::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
