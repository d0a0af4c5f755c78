// Command-line driver for the Littelmann path model library: tensor
// product decomposition, crystal export, extremality checking, PRV
// witness construction and rank-2 figures.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage / invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "littelmann/figure.hpp"
#include "littelmann/oracle.hpp"
#include "littelmann/rootops.hpp"
#include "littelmann/serialize.hpp"

namespace {

using namespace littelmann;
using nlohmann::json;

struct GlobalOptions {
    std::string type;
    std::string matrix_file;
    std::optional<std::size_t> max_nodes;
    std::optional<int> max_depth;
    std::optional<long> root_height;
    std::string format;
    std::string output;
    int jobs = 1;
};

RootSystem load_root_system(const GlobalOptions& g) {
    if (!g.matrix_file.empty()) {
        std::ifstream in(g.matrix_file);
        if (!in) throw Error("cannot open matrix file: " + g.matrix_file);
        json j;
        in >> j;
        return root_system_from_json(j);
    }
    if (g.type.empty()) throw Error("either --type or --matrix-file is required");
    return builtin_root_system(g.type);
}

CrystalLimits limits_of(const GlobalOptions& g, const RootSystem& rs) {
    CrystalLimits lim;
    lim.max_nodes = g.max_nodes;
    lim.max_depth = g.max_depth;
    if (!rs.finite_type && !lim.any())
        throw Error("root system " + rs.name +
                    " is not of finite type: --max-nodes (or --max-depth) is mandatory");
    return lim;
}

void write_out(const GlobalOptions& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output);
    if (!out) throw Error("cannot open output file: " + g.output);
    out << text;
}

Path load_path_file(const std::string& file, int rank) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open path file: " + file);
    json j;
    in >> j;
    if (j.is_object() && j.contains("path")) j = j.at("path");
    return path_from_json(j, rank);
}

RootSet roots_for(const RootSystem& rs, const GlobalOptions& g) {
    if (rs.finite_type) return positive_real_roots(rs);
    if (!g.root_height) throw Error("--root-height is mandatory for non-finite types");
    return positive_real_roots(rs, g.root_height);
}

int cmd_decompose(const GlobalOptions& g, const std::string& mu_s, const std::string& nu_s, bool oracle) {
    const RootSystem rs = load_root_system(g);
    const ZWeight mu = parse_zweight(mu_s), nu = parse_zweight(nu_s);
    const CrystalLimits lim = rs.finite_type ? CrystalLimits{} : limits_of(g, rs);
    const auto result = decompose_tensor(rs, straight_path(mu), straight_path(nu), lim);

    std::string text;
    if (g.format == "json") {
        json j{{"components", multiset_to_json(result.components)}, {"truncated", result.truncated}};
        text = j.dump(2) + "\n";
    } else {
        text = multiset_to_tsv(result.components);
        if (result.truncated) text += "# truncated\n";
    }
    write_out(g, text);

    if (oracle) {
        const auto expected = tensor_decompose_oracle(rs, mu, nu);
        if (expected != result.components) {
            std::cerr << "path model and character oracle disagree\n--- path model ---\n"
                      << multiset_to_tsv(result.components) << "--- oracle ---\n"
                      << multiset_to_tsv(expected);
            return 1;
        }
        std::cerr << "oracle agreement: " << expected.size() << " components\n";
    }
    return 0;
}

int cmd_crystal(const GlobalOptions& g, const std::string& lambda_s, bool dot) {
    const RootSystem rs = load_root_system(g);
    const ZWeight lambda = parse_zweight(lambda_s);
    if (!is_dominant(lambda)) throw Error("lambda must be dominant");
    const CrystalLimits lim = rs.finite_type && !CrystalLimits{g.max_nodes, g.max_depth, {}}.any()
                                  ? CrystalLimits{}
                                  : limits_of(g, rs);
    const auto crystal = generate_crystal(rs, straight_path(lambda), lim);
    if (dot || g.format == "dot")
        write_out(g, crystal_to_dot(crystal));
    else
        write_out(g, crystal_to_json(crystal).dump(2) + "\n");
    return 0;
}

int cmd_extremal(const GlobalOptions& g, const std::string& path_file) {
    const RootSystem rs = load_root_system(g);
    const Path p = load_path_file(path_file, rs.rank);
    if (!is_integral(p, rs)) throw Error("path is not integral");
    const auto report = satisfies_criterion(p, roots_for(rs, g));
    const auto [extremal, w] = is_extremal(rs, p);
    json out{{"criterion", criterion_report_to_json(report)},
             {"extremal", extremal},
             {"dominating_weyl_element", weyl_to_json(w)}};
    write_out(g, out.dump(2) + "\n");
    // A passing criterion with a non-extremal path would falsify the
    // soundness contract; that is the one disagreement this command can
    // detect.
    return report.passed && !extremal ? 1 : 0;
}

int cmd_prv(const GlobalOptions& g, bool enumerate, const std::string& mu_s, const std::string& nu_s,
            const std::string& v_s, const std::string& w_s, const std::string& beta_s, long k,
            bool check_oracle, bool multi, int max_p) {
    const RootSystem rs = load_root_system(g);
    const ZWeight mu = parse_zweight(mu_s), nu = parse_zweight(nu_s);

    if (enumerate) {
        EnumerateOptions opts;
        opts.multi = multi;
        opts.max_p = max_p;
        opts.check_oracle = check_oracle;
        opts.jobs = g.jobs;
        const auto witnesses = enumerate_prv(rs, mu, nu, opts);
        json arr = json::array();
        bool all_ok = true;
        for (const auto& wit : witnesses) {
            arr.push_back(witness_to_json(wit));
            if (wit.oracle_confirmed && !*wit.oracle_confirmed) all_ok = false;
        }
        write_out(g, arr.dump(2) + "\n");
        std::cerr << witnesses.size() << " components\n";
        return all_ok ? 0 : 1;
    }

    if (beta_s.empty()) throw Error("--beta is required (or use --enumerate)");
    PRVInstance inst;
    inst.mu = mu;
    inst.nu = nu;
    inst.v = reduce_word(rs, word_from_string(v_s));
    inst.w = reduce_word(rs, word_from_string(w_s));
    const ZWeight beta_coords = parse_zweight(beta_s);
    RootSet candidates = roots_for(rs, g);
    const RealRoot* found = nullptr;
    for (const auto& r : candidates.roots)
        if (r.root_coords == beta_coords) {
            found = &r;
            break;
        }
    if (!found) throw Error("beta " + beta_s + " is not a positive real root here");
    inst.betas = {*found};
    inst.ks = {k};
    const WeylElement vi = weyl_inverse(rs, inst.v), wi = weyl_inverse(rs, inst.w);
    auto simple = [&](const RealRoot& r) {
        int ones = 0;
        for (long b : r.root_coords)
            if (b == 1)
                ++ones;
            else if (b != 0)
                return false;
        return ones == 1;
    };
    if (simple(weyl_apply(rs, vi, *found)))
        inst.kase = PRVCase::VSide;
    else if (simple(weyl_apply(rs, wi, *found)))
        inst.kase = PRVCase::WSide;
    else if (simple(*found))
        inst.kase = PRVCase::SimpleBeta;
    else
        throw CaseInvalid("none of beta, v^{-1}beta, w^{-1}beta is simple");

    PRVWitness wit = build_witness(rs, inst, g.root_height);
    try {
        wit = verify_witness(rs, std::move(wit), VerifyMode::Criterion, g.root_height);
        wit = verify_witness(rs, std::move(wit), VerifyMode::BruteForce, g.root_height);
        if (check_oracle) wit = verify_witness(rs, std::move(wit), VerifyMode::Oracle, g.root_height);
    } catch (const VerificationFailed& e) {
        write_out(g, witness_to_json(wit).dump(2) + "\n");
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    }
    write_out(g, witness_to_json(wit).dump(2) + "\n");
    return 0;
}

int cmd_figure(const GlobalOptions& g, const std::string& path_file, bool decompose,
               const std::string& mu_s, const std::string& nu_s, long unit) {
    const RootSystem rs = load_root_system(g);
    if (rs.rank != 2 || !rs.finite_type) throw Error("figure requires a finite-type rank-2 system");
    if (decompose) {
        const ZWeight mu = parse_zweight(mu_s), nu = parse_zweight(nu_s);
        const auto support = decompose_tensor(rs, straight_path(mu), straight_path(nu)).components;
        const auto classic = classic_prv_set(rs, mu, nu);
        std::vector<ZWeight> generalized;
        for (const auto& wit : enumerate_prv(rs, mu, nu)) generalized.push_back(wit.lambda);
        write_out(g, svg_decomposition_figure(rs, mu, nu, support, classic, generalized, unit));
        return 0;
    }
    if (path_file.empty()) throw Error("figure needs --path or --decompose with --mu/--nu");
    write_out(g, svg_path_figure(rs, load_path_file(path_file, rs.rank), unit));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Littelmann path model toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    GlobalOptions g;
    app.add_option("--type", g.type, "builtin root system (A2, B2, G2, A1~, ...)");
    app.add_option("--matrix-file", g.matrix_file, "JSON file with a Cartan matrix");
    app.add_option("--max-nodes", g.max_nodes, "crystal node cap (mandatory for non-finite types)");
    app.add_option("--max-depth", g.max_depth, "crystal BFS depth cap");
    app.add_option("--root-height", g.root_height, "height cutoff for real-root enumeration");
    app.add_option("--format", g.format, "output format: tsv, json, dot, svg")
        ->check(CLI::IsMember({"tsv", "json", "dot", "svg"}));
    app.add_option("--output", g.output, "output file (default stdout)");
    app.add_option("--jobs", g.jobs, "parallel workers for enumeration")->check(CLI::PositiveNumber);

    std::string mu_s, nu_s, lambda_s, path_file, v_s, w_s, beta_s;
    long k = 0, unit = 40;
    bool oracle = false, dot = false, enumerate = false, check_oracle = false, multi = false,
         decompose_fig = false;
    int max_p = 2;

    auto* dec = app.add_subcommand("decompose", "tensor product decomposition via the path model");
    dec->add_option("--mu", mu_s, "first highest weight")->required();
    dec->add_option("--nu", nu_s, "second highest weight")->required();
    dec->add_flag("--oracle", oracle, "cross-check against the character-theory oracle");

    auto* cry = app.add_subcommand("crystal", "generate and export B(pi_lambda)");
    cry->add_option("--lambda", lambda_s, "dominant highest weight")->required();
    cry->add_flag("--dot", dot, "emit DOT (same as --format dot)");

    auto* ext = app.add_subcommand("extremal", "extremality criterion + brute-force check for a path");
    ext->add_option("--path", path_file, "path JSON file")->required();

    auto* prv = app.add_subcommand("prv", "generalized PRV components and witnesses");
    prv->add_option("--mu", mu_s, "first highest weight")->required();
    prv->add_option("--nu", nu_s, "second highest weight")->required();
    prv->add_flag("--enumerate", enumerate, "enumerate all components");
    prv->add_option("--v", v_s, "Weyl word for v, dot-separated 1-based indices");
    prv->add_option("--w", w_s, "Weyl word for w");
    prv->add_option("--beta", beta_s, "positive root in root coordinates, e.g. 3,1");
    prv->add_option("--k", k, "number of beta subtracted");
    prv->add_flag("--check-oracle", check_oracle, "confirm each lambda against the oracle");
    prv->add_flag("--multi", multi, "also enumerate orthogonal families");
    prv->add_option("--max-p", max_p, "family size bound for --multi");

    auto* fig = app.add_subcommand("figure", "SVG figure for a rank-2 path or decomposition");
    fig->add_option("--path", path_file, "path JSON file");
    fig->add_flag("--decompose", decompose_fig, "draw a tensor decomposition support");
    fig->add_option("--mu", mu_s, "first highest weight");
    fig->add_option("--nu", nu_s, "second highest weight");
    fig->add_option("--unit", unit, "pixels per lattice unit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) return cmd_decompose(g, mu_s, nu_s, oracle);
        if (cry->parsed()) return cmd_crystal(g, lambda_s, dot);
        if (ext->parsed()) return cmd_extremal(g, path_file);
        if (prv->parsed())
            return cmd_prv(g, enumerate, mu_s, nu_s, v_s, w_s, beta_s, k, check_oracle, multi, max_p);
        if (fig->parsed()) return cmd_figure(g, path_file, decompose_fig, mu_s, nu_s, unit);
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
