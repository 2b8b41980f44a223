// command-line front end: every subcommand is a thin wrapper over the library
// with seeded determinism and a reproducibility manifest per result.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdis/dissim.hpp"
#include "tdis/error.hpp"
#include "tdis/fad.hpp"
#include "tdis/fad_oracle.hpp"
#include "tdis/generators.hpp"
#include "tdis/io.hpp"
#include "tdis/manifest.hpp"
#include "tdis/mds.hpp"
#include "tdis/refmodels.hpp"
#include "tdis/spreading.hpp"
#include "tdis/stats.hpp"

#include "experiments.hpp"

using nlohmann::json;
using namespace tdis;

namespace {

struct input_flags {
    std::string format = "tuv";
    bool directed = false;
    std::int64_t resolution = 1;

    parse_options to_options() const
    {
        parse_options o;
        if (format == "tuv")
            o.format = column_format::tuv;
        else if (format == "uvt")
            o.format = column_format::uvt;
        else
            throw std::invalid_argument("format must be tuv or uvt");
        o.directed = directed;
        o.resolution = resolution;
        return o;
    }
};

void add_input_flags(CLI::App* cmd, input_flags& f)
{
    cmd->add_option("--format", f.format, "input column order: tuv or uvt")
        ->check(CLI::IsMember({"tuv", "uvt"}));
    cmd->add_flag("--directed", f.directed, "treat contacts as directed u->v");
    cmd->add_option("--resolution", f.resolution, "divide timestamps by this step size")
        ->check(CLI::PositiveNumber);
}

json report_to_json(const dissimilarity_report& r)
{
    return json{{"td", r.td},
                {"mu_term", r.mu_term},
                {"tnnd_term", r.tnnd_term},
                {"tnnd_1", r.tnnd_1},
                {"tnnd_2", r.tnnd_2},
                {"mu_jsd", r.mu_jsd},
                {"aligned_support_len", r.aligned_support_len},
                {"omega_1", r.omega_1},
                {"omega_2", r.omega_2}};
}

void warn_if_outside_unit(const dissimilarity_report& r)
{
    if (r.td < 0.0 || r.td > 1.0)
        std::cerr << "warning: dissimilarity " << r.td << " outside [0, 1]\n";
}

json stats_to_json(const network_stats& st)
{
    json curve = json::array();
    for (const auto& [p, frac] : st.node_fraction_curve)
        curve.push_back({{"p", p}, {"fraction", frac}});
    return json{{"n_nodes", st.n_nodes},
                {"n_contacts", st.n_contacts},
                {"horizon", st.horizon},
                {"n_links", st.n_edges},
                {"link_density", st.link_density},
                {"avg_degree", st.avg_degree},
                {"cv_lifespan", st.cv_lifespan},
                {"cv_degenerate", st.cv_degenerate},
                {"reachable_pairs", st.reachable_pairs},
                {"reachable_fraction", st.reachable_fraction},
                {"mean_fad", st.mean_fad},
                {"node_fraction_curve", curve}};
}

void write_svg_scatter(const std::filesystem::path& path,
                       const std::vector<std::string>& labels, const embedding_result& e)
{
    double lo = 0.0, hi = 0.0;
    for (const double c : e.coords) {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    const double span = std::max(hi - lo, 1e-9);
    const double size = 640.0, margin = 60.0;
    auto sx = [&](double x) { return margin + (x - lo) / span * (size - 2 * margin); };
    auto sy = [&](double y) { return size - margin - (y - lo) / span * (size - 2 * margin); };

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot write '" + path.string() + "'");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
        << size << "\">\n";
    for (std::size_t i = 0; i < e.n_points; ++i) {
        const double x = sx(e.at(i, 0));
        const double y = sy(e.dim > 1 ? e.at(i, 1) : 0.0);
        out << "  <circle cx=\"" << format_double(x) << "\" cy=\"" << format_double(y)
            << "\" r=\"5\" fill=\"#3366aa\"/>\n";
        out << "  <text x=\"" << format_double(x + 7) << "\" y=\"" << format_double(y - 7)
            << "\" font-size=\"11\">" << (i < labels.size() ? labels[i] : "") << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"temporal network analysis toolkit: fastest-arrival distance "
                 "distributions, network dissimilarity and the associated experiments"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    unsigned workers = 1;
    app.add_option("--seed", seed, "master random seed")->capture_default_str();
    app.add_option("--workers", workers, "worker threads (results are worker-count invariant)")
        ->capture_default_str();

    // ---- ingest ----------------------------------------------------------
    auto* c_ingest = app.add_subcommand("ingest", "parse a contact file into canonical form");
    std::string ingest_in, ingest_out, ingest_labels;
    input_flags ingest_flags;
    c_ingest->add_option("input", ingest_in)->required();
    c_ingest->add_option("--out", ingest_out, "canonical t-u-v output file")->required();
    c_ingest->add_option("--labels-out", ingest_labels, "write id mapping as JSON");
    add_input_flags(c_ingest, ingest_flags);

    // ---- stats -----------------------------------------------------------
    auto* c_stats = app.add_subcommand("stats", "descriptive statistics as JSON");
    std::string stats_in;
    input_flags stats_flags;
    c_stats->add_option("input", stats_in)->required();
    add_input_flags(c_stats, stats_flags);

    // ---- fad -------------------------------------------------------------
    auto* c_fad = app.add_subcommand("fad", "fastest-arrival distance matrix as CSV");
    std::string fad_in, fad_out;
    input_flags fad_flags;
    c_fad->add_option("input", fad_in)->required();
    c_fad->add_option("--out", fad_out)->required();
    add_input_flags(c_fad, fad_flags);

    // ---- compare ---------------------------------------------------------
    auto* c_compare = app.add_subcommand("compare", "dissimilarity between two networks");
    std::string cmp_a, cmp_b;
    bool cmp_aggregate = false;
    double cmp_w1 = 0.5, cmp_w2 = 0.5;
    input_flags cmp_flags;
    c_compare->add_option("first", cmp_a)->required();
    c_compare->add_option("second", cmp_b);
    c_compare->add_flag("--aggregate", cmp_aggregate,
                        "compare the first network against its own static aggregate");
    c_compare->add_option("--w1", cmp_w1, "weight of the mean-distribution term");
    c_compare->add_option("--w2", cmp_w2, "weight of the node-dispersion term");
    add_input_flags(c_compare, cmp_flags);

    // ---- matrix ----------------------------------------------------------
    auto* c_matrix = app.add_subcommand("matrix", "pairwise dissimilarity matrix as CSV");
    std::vector<std::string> matrix_in;
    std::string matrix_out;
    double matrix_w1 = 0.5, matrix_w2 = 0.5;
    input_flags matrix_flags;
    c_matrix->add_option("inputs", matrix_in)->required()->expected(-2);
    c_matrix->add_option("--out", matrix_out)->required();
    c_matrix->add_option("--w1", matrix_w1);
    c_matrix->add_option("--w2", matrix_w2);
    add_input_flags(c_matrix, matrix_flags);

    // ---- mds -------------------------------------------------------------
    auto* c_mds = app.add_subcommand("mds", "classical multidimensional scaling of a matrix");
    std::string mds_matrix, mds_out, mds_svg;
    std::size_t mds_dim = 2;
    c_mds->add_option("--matrix", mds_matrix, "labeled dissimilarity matrix CSV")->required();
    c_mds->add_option("--out", mds_out, "coordinates CSV")->required();
    c_mds->add_option("--dim", mds_dim)->capture_default_str();
    c_mds->add_option("--svg", mds_svg, "optional scatter plot");

    // ---- generate --------------------------------------------------------
    auto* c_gen = app.add_subcommand("generate", "activity-driven synthetic network");
    std::string gen_dist = "uniform", gen_out, gen_label = "synthetic";
    double gen_amax = 1.0, gen_r = 3.0, gen_eps = 1e-3;
    node_t gen_n = 100;
    time_t gen_t = 1000;
    int gen_m = 3;
    c_gen->add_option("--dist", gen_dist)->check(CLI::IsMember({"uniform", "powerlaw"}));
    c_gen->add_option("--amax", gen_amax, "uniform activity upper bound");
    c_gen->add_option("--r", gen_r, "power-law exponent (> 2)");
    c_gen->add_option("--eps", gen_eps, "power-law lower cutoff");
    c_gen->add_option("--n", gen_n, "nodes")->capture_default_str();
    c_gen->add_option("--t", gen_t, "time horizon")->capture_default_str();
    c_gen->add_option("--m", gen_m, "contacts per activation")->capture_default_str();
    c_gen->add_option("--label", gen_label);
    c_gen->add_option("--out", gen_out)->required();

    // ---- shuffle ---------------------------------------------------------
    auto* c_shuffle = app.add_subcommand("shuffle", "randomized reference model");
    std::string shuf_in, shuf_model, shuf_out;
    int shuf_count = 1;
    input_flags shuf_flags;
    c_shuffle->add_option("input", shuf_in)->required();
    c_shuffle->add_option("--model", shuf_model, "ewlss | lss | ts | urt | cm | rn")->required();
    c_shuffle->add_option("--out", shuf_out)->required();
    c_shuffle->add_option("--count", shuf_count, "emit this many realizations with derived seeds");
    add_input_flags(c_shuffle, shuf_flags);

    // ---- perturb ---------------------------------------------------------
    auto* c_perturb = app.add_subcommand("perturb", "randomly add or delete contacts");
    std::string pert_in, pert_out;
    double pert_f = 0.0;
    input_flags pert_flags;
    c_perturb->add_option("input", pert_in)->required();
    c_perturb->add_option("--f", pert_f, "signed fraction: negative deletes, positive adds")
        ->required();
    c_perturb->add_option("--out", pert_out)->required();
    add_input_flags(c_perturb, pert_flags);

    // ---- slice -----------------------------------------------------------
    auto* c_slice = app.add_subcommand("slice", "time-window sub-network");
    std::string slice_in, slice_out;
    time_t slice_from = 0, slice_to = 0;
    bool slice_keep_all = false;
    input_flags slice_flags;
    c_slice->add_option("input", slice_in)->required();
    c_slice->add_option("--from", slice_from, "window start (inclusive)")->required();
    c_slice->add_option("--to", slice_to, "window end (exclusive)")->required();
    c_slice->add_flag("--keep-all-nodes", slice_keep_all, "retain isolated nodes");
    c_slice->add_option("--out", slice_out)->required();
    add_input_flags(c_slice, slice_flags);

    // ---- si --------------------------------------------------------------
    auto* c_si = app.add_subcommand("si", "susceptible-infected spreading as JSON");
    std::string si_in;
    double si_beta = 1.0;
    int si_runs = 0;
    input_flags si_flags;
    c_si->add_option("input", si_in)->required();
    c_si->add_option("--beta", si_beta, "infection probability")->capture_default_str();
    c_si->add_option("--runs", si_runs, "repetitions per seed node (default 1 at beta=1, else 50)");
    add_input_flags(c_si, si_flags);

    // ---- correlate -------------------------------------------------------
    auto* c_corr = app.add_subcommand(
        "correlate", "dissimilarity vs spreadability difference over network pairs");
    std::string corr_pairs, corr_out;
    double corr_beta = 1.0;
    int corr_runs = 0;
    input_flags corr_flags;
    c_corr->add_option("--pairs-file", corr_pairs, "two file paths per line")->required();
    c_corr->add_option("--out", corr_out, "per-pair table CSV")->required();
    c_corr->add_option("--beta", corr_beta)->capture_default_str();
    c_corr->add_option("--runs", corr_runs);
    add_input_flags(c_corr, corr_flags);

    // ---- experiment ------------------------------------------------------
    auto* c_exp = app.add_subcommand("experiment", "reproducible experiment batteries");
    experiments::config exp_cfg;
    std::string exp_input, exp_out = "results", exp_ms = "1,2,3", exp_rs = "2.2,2.6,3.0,3.4";
    bool exp_full_scale = false;
    input_flags exp_flags;
    c_exp->add_option("--kind", exp_cfg.kind,
                      "synthetic-grid | refmodel-battery | perturb-sweep | evolution-slices | "
                      "spreadability-correlation")
        ->required();
    c_exp->add_option("--out", exp_out, "output directory")->capture_default_str();
    c_exp->add_option("--input", exp_input, "source network (battery/sweep/slices)");
    c_exp->add_option("--reals", exp_cfg.reals, "realizations per cell");
    c_exp->add_option("--n", exp_cfg.n)->capture_default_str();
    c_exp->add_option("--t", exp_cfg.horizon)->capture_default_str();
    c_exp->add_option("--m", exp_cfg.m)->capture_default_str();
    c_exp->add_option("--amax", exp_cfg.a_max)->capture_default_str();
    c_exp->add_option("--eps", exp_cfg.eps)->capture_default_str();
    c_exp->add_option("--grid", exp_cfg.grid, "synthetic-grid: m | r | cross")
        ->capture_default_str();
    c_exp->add_option("--ms", exp_ms, "comma-separated m values");
    c_exp->add_option("--rs", exp_rs, "comma-separated power-law exponents");
    c_exp->add_option("--fmin", exp_cfg.f_min)->capture_default_str();
    c_exp->add_option("--fmax", exp_cfg.f_max)->capture_default_str();
    c_exp->add_option("--fstep", exp_cfg.f_step)->capture_default_str();
    c_exp->add_option("--slices", exp_cfg.slices)->capture_default_str();
    c_exp->add_option("--count", exp_cfg.ensemble, "ensemble size")->capture_default_str();
    c_exp->add_option("--beta", exp_cfg.beta)->capture_default_str();
    c_exp->add_option("--si-runs", exp_cfg.si_runs)->capture_default_str();
    c_exp->add_flag("--full-scale", exp_full_scale,
                    "large-scale preset (N=300, T=30000, 100 realizations)");
    add_input_flags(c_exp, exp_flags);

    // --seed/--workers may appear before or after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_ingest) {
            run_manifest mf;
            mf.command = "ingest";
            mf.seed = seed;
            mf.add_input(ingest_in);
            parse_info info;
            const auto g = load_contacts(ingest_in, ingest_flags.to_options(), &info);
            save_contacts(ingest_out, g);
            mf.params = {{"format", ingest_flags.format},
                         {"directed", ingest_flags.directed},
                         {"resolution", ingest_flags.resolution},
                         {"n_nodes", g.n_nodes},
                         {"n_contacts", g.n_contacts()},
                         {"self_contacts_dropped", info.n_self_dropped},
                         {"duplicates_dropped", info.n_duplicates_dropped}};
            mf.write_alongside(ingest_out);
            if (!ingest_labels.empty()) {
                std::ofstream lout(ingest_labels, std::ios::binary);
                if (!lout)
                    throw io_error("cannot write '" + ingest_labels + "'");
                lout << json(info.node_labels).dump() << '\n';
            }
        } else if (*c_stats) {
            run_manifest mf;
            mf.command = "stats";
            mf.seed = seed;
            mf.add_input(stats_in);
            const auto g = load_contacts(stats_in, stats_flags.to_options());
            const auto st = compute_stats(g, compute_fad(g, workers));
            auto j = stats_to_json(st);
            j["label"] = g.label;
            j["manifest"] = mf.to_json();
            std::cout << j.dump(2) << '\n';
        } else if (*c_fad) {
            run_manifest mf;
            mf.command = "fad";
            mf.seed = seed;
            mf.add_input(fad_in);
            const auto g = load_contacts(fad_in, fad_flags.to_options());
            const auto f = compute_fad(g, workers);
            std::ofstream out(fad_out, std::ios::binary);
            if (!out)
                throw io_error("cannot write '" + fad_out + "'");
            write_fad_csv(out, f);
            mf.params = {{"l_max", f.l_max}, {"reachable_pairs", f.reachable_pairs}};
            mf.write_alongside(fad_out);
        } else if (*c_compare) {
            run_manifest mf;
            mf.command = "compare";
            mf.seed = seed;
            mf.add_input(cmp_a);
            const auto g1 = load_contacts(cmp_a, cmp_flags.to_options());
            dissimilarity_report r;
            if (cmp_aggregate) {
                if (!cmp_b.empty())
                    throw std::invalid_argument("--aggregate takes a single network");
                r = static_dissimilarity(g1, aggregate(g1), cmp_w1, cmp_w2, workers);
            } else {
                if (cmp_b.empty())
                    throw std::invalid_argument("compare needs two networks or --aggregate");
                mf.add_input(cmp_b);
                const auto g2 = load_contacts(cmp_b, cmp_flags.to_options());
                r = temporal_dissimilarity(g1, g2, cmp_w1, cmp_w2, workers);
            }
            warn_if_outside_unit(r);
            mf.params = {{"w1", cmp_w1}, {"w2", cmp_w2}, {"aggregate", cmp_aggregate}};
            auto j = report_to_json(r);
            j["manifest"] = mf.to_json();
            std::cout << j.dump(2) << '\n';
        } else if (*c_matrix) {
            run_manifest mf;
            mf.command = "matrix";
            mf.seed = seed;
            std::vector<temporal_network> nets;
            std::vector<std::string> labels;
            for (const auto& path : matrix_in) {
                mf.add_input(path);
                nets.push_back(load_contacts(path, matrix_flags.to_options()));
                labels.push_back(nets.back().label);
            }
            const auto m = dissimilarity_matrix(nets, matrix_w1, matrix_w2, workers);
            std::ofstream out(matrix_out, std::ios::binary);
            if (!out)
                throw io_error("cannot write '" + matrix_out + "'");
            write_labeled_matrix_csv(out, labels, m);
            mf.params = {{"w1", matrix_w1}, {"w2", matrix_w2}, {"networks", labels}};
            mf.write_alongside(matrix_out);
        } else if (*c_mds) {
            run_manifest mf;
            mf.command = "mds";
            mf.seed = seed;
            mf.add_input(mds_matrix);
            std::ifstream in(mds_matrix);
            if (!in)
                throw io_error("cannot open '" + mds_matrix + "'");
            const auto [labels, values] = read_labeled_matrix_csv(in);
            const auto e = classical_mds(values, labels.size(), mds_dim);
            std::ofstream out(mds_out, std::ios::binary);
            if (!out)
                throw io_error("cannot write '" + mds_out + "'");
            out << "label";
            for (std::size_t k = 0; k < e.dim; ++k)
                out << ",x" << (k + 1);
            out << '\n';
            for (std::size_t i = 0; i < e.n_points; ++i) {
                out << labels[i];
                for (std::size_t k = 0; k < e.dim; ++k)
                    out << ',' << format_double(e.at(i, k));
                out << '\n';
            }
            mf.params = {{"dim", mds_dim},
                         {"stress", e.stress},
                         {"clamped_negative", e.clamped_negative},
                         {"eigenvalues", e.eigenvalues}};
            mf.write_alongside(mds_out);
            json j{{"stress", e.stress},
                   {"clamped_negative", e.clamped_negative},
                   {"eigenvalues", e.eigenvalues},
                   {"manifest", mf.to_json()}};
            std::cout << j.dump(2) << '\n';
            if (!mds_svg.empty())
                write_svg_scatter(mds_svg, labels, e);
        } else if (*c_gen) {
            run_manifest mf;
            mf.command = "generate";
            mf.seed = seed;
            activity_spec spec;
            if (gen_dist == "powerlaw") {
                spec.kind = activity_spec::dist::power_law;
                spec.exponent = gen_r;
                spec.eps = gen_eps;
            } else {
                spec.a_max = gen_amax;
            }
            rng_t rng(seed);
            const auto acts = sample_activities(spec, gen_n, rng);
            const auto g = activity_driven(gen_n, gen_t, gen_m, acts, rng, gen_label);
            save_contacts(gen_out, g);
            mf.params = {{"dist", gen_dist}, {"amax", gen_amax}, {"r", gen_r},
                         {"eps", gen_eps},   {"n", gen_n},       {"t", gen_t},
                         {"m", gen_m},       {"n_contacts", g.n_contacts()}};
            mf.write_alongside(gen_out);
        } else if (*c_shuffle) {
            const auto model = ref_model_from_name(shuf_model);
            const auto g = load_contacts(shuf_in, shuf_flags.to_options());
            if (shuf_count < 1)
                throw std::invalid_argument("count must be >= 1");
            for (int k = 0; k < shuf_count; ++k) {
                run_manifest mf;
                mf.command = "shuffle";
                mf.seed = seed;
                mf.add_input(shuf_in);
                const auto realization_seed =
                    shuf_count == 1 ? seed : derive_seed(seed, static_cast<std::uint64_t>(k));
                rng_t rng(realization_seed);
                const auto h = apply_ref_model(g, model, rng);
                std::filesystem::path out_path = shuf_out;
                if (shuf_count > 1) {
                    const auto stem = out_path.stem().string();
                    const auto ext = out_path.extension().string();
                    out_path = out_path.parent_path() /
                               (stem + "_" + std::to_string(k + 1) + ext);
                }
                save_contacts(out_path, h);
                mf.params = {{"model", shuf_model},
                             {"realization", k + 1},
                             {"realization_seed", realization_seed}};
                mf.write_alongside(out_path);
            }
        } else if (*c_perturb) {
            run_manifest mf;
            mf.command = "perturb";
            mf.seed = seed;
            mf.add_input(pert_in);
            const auto g = load_contacts(pert_in, pert_flags.to_options());
            rng_t rng(seed);
            const auto p = perturb(g, pert_f, rng);
            save_contacts(pert_out, p);
            mf.params = {{"f", pert_f}, {"n_contacts", p.n_contacts()}};
            mf.write_alongside(pert_out);
        } else if (*c_slice) {
            run_manifest mf;
            mf.command = "slice";
            mf.seed = seed;
            mf.add_input(slice_in);
            const auto g = load_contacts(slice_in, slice_flags.to_options());
            const auto s = slice(g, slice_from, slice_to, slice_keep_all);
            save_contacts(slice_out, s);
            mf.params = {{"from", slice_from},
                         {"to", slice_to},
                         {"keep_all_nodes", slice_keep_all},
                         {"n_nodes", s.n_nodes},
                         {"n_contacts", s.n_contacts()}};
            mf.write_alongside(slice_out);
        } else if (*c_si) {
            run_manifest mf;
            mf.command = "si";
            mf.seed = seed;
            mf.add_input(si_in);
            const auto g = load_contacts(si_in, si_flags.to_options());
            const int runs = si_runs > 0 ? si_runs : (si_beta >= 1.0 ? 1 : 50);
            const auto r = spreadability(g, si_beta, runs, seed, workers);
            mf.params = {{"beta", si_beta}, {"runs", r.runs}};
            json j{{"beta", r.beta},
                   {"runs", r.runs},
                   {"mean_fraction", r.mean_fraction},
                   {"std_fraction", r.std_fraction},
                   {"per_seed_fraction", r.per_seed_fraction},
                   {"manifest", mf.to_json()}};
            std::cout << j.dump(2) << '\n';
        } else if (*c_corr) {
            run_manifest mf;
            mf.command = "correlate";
            mf.seed = seed;
            mf.add_input(corr_pairs);
            std::ifstream pf(corr_pairs);
            if (!pf)
                throw io_error("cannot open '" + corr_pairs + "'");
            std::vector<std::pair<std::string, std::string>> pairs;
            std::string line;
            while (std::getline(pf, line)) {
                if (line.empty() || line[0] == '#')
                    continue;
                std::istringstream ls(line);
                std::string a, b;
                if (!(ls >> a >> b))
                    throw parse_error("pairs file: need two paths per line");
                pairs.emplace_back(a, b);
            }
            if (pairs.size() < 3)
                throw std::invalid_argument("need at least three pairs for a correlation");
            const int runs = corr_runs > 0 ? corr_runs : (corr_beta >= 1.0 ? 1 : 50);

            std::ofstream out(corr_out, std::ios::binary);
            if (!out)
                throw io_error("cannot write '" + corr_out + "'");
            out << "file_1,file_2,td,delta_i\n";
            std::vector<double> tds, dis;
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                const auto& [pa, pb] = pairs[k];
                const auto ga = load_contacts(pa, corr_flags.to_options());
                const auto gb = load_contacts(pb, corr_flags.to_options());
                const auto r = temporal_dissimilarity(ga, gb, 0.5, 0.5, workers);
                warn_if_outside_unit(r);
                const double di = delta_spreadability(ga, gb, corr_beta, runs,
                                                      derive_seed(seed, k), workers);
                tds.push_back(r.td);
                dis.push_back(di);
                out << pa << ',' << pb << ',' << format_double(r.td) << ','
                    << format_double(di) << '\n';
            }
            const double pcc = pearson(tds, dis);
            mf.params = {{"beta", corr_beta}, {"runs", runs}, {"n_pairs", pairs.size()}};
            mf.write_alongside(corr_out);
            json j{{"pcc", pcc},
                   {"n_pairs", pairs.size()},
                   {"beta", corr_beta},
                   {"manifest", mf.to_json()}};
            std::cout << j.dump(2) << '\n';
        } else if (*c_exp) {
            run_manifest mf;
            mf.command = "experiment";
            mf.seed = seed;
            exp_cfg.out_dir = exp_out;
            exp_cfg.input = exp_input;
            exp_cfg.parse = exp_flags.to_options();
            exp_cfg.seed = seed;
            exp_cfg.workers = workers;
            if (exp_full_scale) {
                exp_cfg.n = 300;
                exp_cfg.horizon = 30000;
                if (exp_cfg.reals == 0)
                    exp_cfg.reals = 100;
            }
            exp_cfg.ms.clear();
            for (const auto& tok : CLI::detail::split(exp_ms, ','))
                exp_cfg.ms.push_back(std::stoi(tok));
            exp_cfg.rs.clear();
            for (const auto& tok : CLI::detail::split(exp_rs, ','))
                exp_cfg.rs.push_back(std::stod(tok));
            mf.params = {{"kind", exp_cfg.kind}, {"out", exp_out},
                         {"reals", exp_cfg.reals}, {"n", exp_cfg.n},
                         {"t", exp_cfg.horizon},  {"m", exp_cfg.m},
                         {"grid", exp_cfg.grid},  {"ms", exp_ms},
                         {"rs", exp_rs},          {"beta", exp_cfg.beta},
                         {"count", exp_cfg.ensemble}, {"workers_note", "output invariant"}};
            experiments::run(exp_cfg, mf);
            std::cout << "experiment '" << exp_cfg.kind << "' written to " << exp_out << '\n';
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 4;
    } catch (const numeric_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 5;
    }
    return 0;
}
