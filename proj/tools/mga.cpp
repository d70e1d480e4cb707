// mga: batch front end for the moment-graph structure algebra library.
// Exit codes: 0 success/pass, 1 mathematical failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "mga/json_io.hpp"
#include "mga/selfcheck.hpp"

namespace {

mga::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--in", "cannot open file: " + path);
    mga::json j;
    in >> j;
    return j;
}

void emit(const mga::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure algebra of the stable moment graph for affine A1"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker count (output order is fixed)")
        ->check(CLI::PositiveNumber);
    std::uint64_t seed = 0x6d6f6d656e74ull;
    app.add_option("--seed", seed, "seed for randomized sweeps");

    // graph {stable|parabolic|regular} --trunc N
    auto* cmd_graph = app.add_subcommand("graph", "build a moment graph");
    std::string graph_kind;
    int trunc = 3;
    cmd_graph->add_option("kind", graph_kind, "graph kind")
        ->required()
        ->check(CLI::IsMember({"stable", "parabolic", "regular"}));
    cmd_graph->add_option("--trunc", trunc, "truncation window");

    // basis {u|v} n --trunc N
    auto* cmd_basis = app.add_subcommand("basis", "emit a basis section");
    std::string basis_kind;
    int basis_n = 0;
    int basis_trunc = 0;
    cmd_basis->add_option("kind", basis_kind, "u or v")
        ->required()
        ->check(CLI::IsMember({"u", "v"}));
    cmd_basis->add_option("n", basis_n, "basis index")->required();
    cmd_basis->add_option("--trunc", basis_trunc, "truncation window")
        ->required();

    std::string in_file;
    auto* cmd_verify = app.add_subcommand("verify", "check the section condition");
    cmd_verify->add_option("--in", in_file, "section JSON")->required();
    auto* cmd_decompose =
        app.add_subcommand("decompose", "decompose over the u/v basis");
    cmd_decompose->add_option("--in", in_file, "section JSON")->required();
    auto* cmd_specialize =
        app.add_subcommand("specialize", "set c to zero, emit row family");
    cmd_specialize->add_option("--in", in_file, "section JSON")->required();

    auto* cmd_congr = app.add_subcommand(
        "congruences", "check the higher-order congruence relations");
    int mmax = -1;
    cmd_congr->add_option("--in", in_file, "row family JSON")->required();
    cmd_congr->add_option("--mmax", mmax,
                          "largest relation index (default: all rows)");

    auto* cmd_oracle = app.add_subcommand(
        "oracle", "compare basis span against the brute-force solution space");
    int oracle_rows = 6, oracle_deg = 6;
    cmd_oracle->add_option("--rows", oracle_rows, "row window J");
    cmd_oracle->add_option("--deg", oracle_deg, "largest homogeneous degree");

    auto* cmd_ident =
        app.add_subcommand("identities", "verify the scalar identity suite");
    int nmax = 30, kmax = 30;
    cmd_ident->add_option("--nmax", nmax, "largest n");
    cmd_ident->add_option("--kmax", kmax, "largest k");

    auto* cmd_self = app.add_subcommand("selfcheck", "run the acceptance suite");
    bool quick = false;
    cmd_self->add_flag("--quick", quick, "reduced parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    if (const char* env_seed = std::getenv("MGA_SEED"))
        seed = std::strtoull(env_seed, nullptr, 10);

    try {
        if (*cmd_graph) {
            mga::MomentGraph g;
            if (graph_kind == "stable")
                g = mga::build_stable(trunc);
            else if (graph_kind == "parabolic")
                g = mga::build_parabolic(trunc);
            else
                g = mga::build_regular(trunc);
            if (format == "dot")
                std::cout << mga::export_dot(g);
            else
                emit(mga::graph_to_json(g));
            return 0;
        }

        if (*cmd_basis) {
            mga::Section s = basis_kind == "u" ? mga::make_u(basis_n, basis_trunc)
                                               : mga::make_v(basis_n, basis_trunc);
            emit(mga::section_to_json(s));
            return 0;
        }

        if (*cmd_verify) {
            mga::Section s = mga::section_from_json(read_json_file(in_file));
            mga::SectionVerdict v = s.verify();
            emit(mga::verdict_to_json(v));
            return v.ok ? 0 : 1;
        }

        if (*cmd_decompose) {
            mga::Section s = mga::section_from_json(read_json_file(in_file));
            emit(mga::decomposition_to_json(mga::decompose(s)));
            return 0;
        }

        if (*cmd_specialize) {
            mga::Section s = mga::section_from_json(read_json_file(in_file));
            emit(mga::rowfamily_to_json(mga::specialize_section(s)));
            return 0;
        }

        if (*cmd_congr) {
            mga::RowFamily fam = mga::rowfamily_from_json(read_json_file(in_file));
            int m = mmax < 0 ? fam.max_row() : mmax;
            mga::CongruenceReport rep = mga::check_congruences(fam, m);
            emit(mga::congruence_report_to_json(rep));
            return rep.all_pass() ? 0 : 1;
        }

        if (*cmd_oracle) {
            mga::json table = mga::json::array();
            bool all_ok = true;
            for (int d = 0; d <= oracle_deg; ++d) {
                mga::OracleComparison cmp = mga::oracle_compare(oracle_rows, d);
                bool ok = cmp.forward_ok &&
                          (d > oracle_rows || cmp.equal);
                all_ok = all_ok && ok;
                table.push_back({{"rows", oracle_rows},
                                 {"deg", d},
                                 {"oracle_dim", cmp.oracle_dim},
                                 {"span_dim", cmp.span_dim},
                                 {"forward_inclusion", cmp.forward_ok},
                                 {"equal", cmp.equal}});
            }
            emit(mga::json{{"pass", all_ok}, {"cases", table}});
            return all_ok ? 0 : 1;
        }

        if (*cmd_ident) {
            auto failure = mga::identity_suite(nmax, kmax);
            if (!failure) {
                emit(mga::json{{"pass", true}, {"nmax", nmax}, {"kmax", kmax}});
                return 0;
            }
            emit(mga::json{{"pass", false},
                           {"identity", failure->which},
                           {"n", failure->n},
                           {"k", failure->k}});
            return 1;
        }

        if (*cmd_self) {
            mga::selfcheck::Options opt;
            opt.quick = quick;
            opt.seed = seed;
            return mga::selfcheck::run(opt, std::cout) ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
