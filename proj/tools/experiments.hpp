#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "tdis/dissim.hpp"
#include "tdis/error.hpp"
#include "tdis/generators.hpp"
#include "tdis/io.hpp"
#include "tdis/manifest.hpp"
#include "tdis/parallel.hpp"
#include "tdis/refmodels.hpp"
#include "tdis/spreading.hpp"
#include "tdis/stats.hpp"
#include "tdis/temporal_network.hpp"

namespace tdis::experiments {

struct config {
    std::string kind;
    std::filesystem::path out_dir = "results";
    std::filesystem::path input; // source network for refmodel/perturb/evolution kinds
    parse_options parse;

    std::uint64_t seed = 1;
    unsigned workers = 1;
    int reals = 0; // 0 = kind-specific default

    // generator scale
    node_t n = 100;
    time_t horizon = 1000;
    int m = 3;
    double a_max = 1.0;
    double eps = 1e-3;

    std::string grid = "m"; // synthetic-grid: m | r | cross
    std::vector<int> ms{1, 2, 3};
    std::vector<double> rs{2.2, 2.6, 3.0, 3.4};

    // perturb sweep
    double f_min = -0.4;
    double f_max = 0.4;
    double f_step = 0.1;

    // evolution slices
    int slices = 5;

    // spreadability correlation
    int ensemble = 12;
    double beta = 1.0;
    int si_runs = 1;
};

namespace detail {

struct mean_std {
    double mean = 0.0;
    double std_dev = 0.0;
};

inline mean_std summarize(const std::vector<double>& xs)
{
    mean_std s;
    if (xs.empty())
        return s;
    for (const double x : xs)
        s.mean += x;
    s.mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (const double x : xs)
        var += (x - s.mean) * (x - s.mean);
    s.std_dev = std::sqrt(var / static_cast<double>(xs.size()));
    return s;
}

inline std::ofstream open_csv(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot write '" + path.string() + "'");
    return out;
}

inline temporal_network generate_for(const config& cfg, bool power_law, double r, int m,
                                     std::uint64_t seed, const std::string& label)
{
    activity_spec spec;
    if (power_law) {
        spec.kind = activity_spec::dist::power_law;
        spec.exponent = r;
        spec.eps = cfg.eps;
    } else {
        spec.a_max = cfg.a_max;
    }
    rng_t rng(seed);
    const auto acts = sample_activities(spec, cfg.n, rng);
    return activity_driven(cfg.n, cfg.horizon, m, acts, rng, label);
}

} // namespace detail

/* Mean dissimilarity grids over activity-driven ensembles: pairwise over m
 * values (uniform activities), pairwise over power-law exponents, or uniform
 * vs power-law as a function of the exponent. */
inline void synthetic_grid(const config& cfg)
{
    const int reals = cfg.reals > 0 ? cfg.reals : 5;
    struct cell {
        std::string p1, p2;
        std::vector<double> tds;
    };
    std::vector<cell> cells;

    if (cfg.grid == "m") {
        for (std::size_t i = 0; i < cfg.ms.size(); ++i)
            for (std::size_t j = i; j < cfg.ms.size(); ++j)
                cells.push_back({"m=" + std::to_string(cfg.ms[i]),
                                 "m=" + std::to_string(cfg.ms[j]),
                                 {}});
    } else if (cfg.grid == "r") {
        for (std::size_t i = 0; i < cfg.rs.size(); ++i)
            for (std::size_t j = i; j < cfg.rs.size(); ++j)
                cells.push_back({"r=" + format_double(cfg.rs[i]),
                                 "r=" + format_double(cfg.rs[j]),
                                 {}});
    } else if (cfg.grid == "cross") {
        for (const double r : cfg.rs)
            cells.push_back({"uniform", "r=" + format_double(r), {}});
    } else {
        throw std::invalid_argument("grid must be one of m, r, cross");
    }

    std::vector<std::vector<double>> results(cells.size(), std::vector<double>(reals, 0.0));
    std::vector<std::pair<std::size_t, int>> tasks;
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (int rep = 0; rep < reals; ++rep)
            tasks.emplace_back(c, rep);

    parallel_for(tasks.size(), cfg.workers, [&](std::size_t ti) {
        const auto [c, rep] = tasks[ti];
        const auto tag = static_cast<std::uint64_t>(c);
        const auto rtag = static_cast<std::uint64_t>(rep);
        temporal_network g1, g2;
        if (cfg.grid == "m") {
            // recover the two m values from the cell label
            const int m1 = std::stoi(cells[c].p1.substr(2));
            const int m2 = std::stoi(cells[c].p2.substr(2));
            g1 = detail::generate_for(cfg, false, 0, m1, derive_seed(cfg.seed, 2 * tag, rtag), "g1");
            g2 = detail::generate_for(cfg, false, 0, m2,
                                      derive_seed(cfg.seed, 2 * tag + 1, rtag), "g2");
        } else if (cfg.grid == "r") {
            const double r1 = std::stod(cells[c].p1.substr(2));
            const double r2 = std::stod(cells[c].p2.substr(2));
            g1 = detail::generate_for(cfg, true, r1, cfg.m, derive_seed(cfg.seed, 2 * tag, rtag),
                                      "g1");
            g2 = detail::generate_for(cfg, true, r2, cfg.m,
                                      derive_seed(cfg.seed, 2 * tag + 1, rtag), "g2");
        } else {
            const double r = std::stod(cells[c].p2.substr(2));
            g1 = detail::generate_for(cfg, false, 0, cfg.m, derive_seed(cfg.seed, 2 * tag, rtag),
                                      "uniform");
            g2 = detail::generate_for(cfg, true, r, cfg.m,
                                      derive_seed(cfg.seed, 2 * tag + 1, rtag), "powerlaw");
        }
        results[c][static_cast<std::size_t>(rep)] = temporal_dissimilarity(g1, g2).td;
    });

    auto out = detail::open_csv(cfg.out_dir / "grid.csv");
    out << "param_1,param_2,mean_td,std_td,realizations\n";
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto s = detail::summarize(results[c]);
        out << cells[c].p1 << ',' << cells[c].p2 << ',' << format_double(s.mean) << ','
            << format_double(s.std_dev) << ',' << reals << '\n';
    }
}

// dissimilarity between a network and each of its six reference models
inline void refmodel_battery(const config& cfg, const temporal_network& g)
{
    const int reals = cfg.reals > 0 ? cfg.reals : 20;
    const auto f_orig = compute_fad(g, cfg.workers);
    const ref_model models[] = {ref_model::ewlss, ref_model::lss, ref_model::ts,
                                ref_model::urt,   ref_model::cm,  ref_model::rn};

    std::vector<std::vector<double>> tds(6, std::vector<double>(reals, 0.0));
    std::vector<std::pair<std::size_t, int>> tasks;
    for (std::size_t mi = 0; mi < 6; ++mi)
        for (int rep = 0; rep < reals; ++rep)
            tasks.emplace_back(mi, rep);
    parallel_for(tasks.size(), cfg.workers, [&](std::size_t ti) {
        const auto [mi, rep] = tasks[ti];
        rng_t rng(derive_seed(cfg.seed, mi, static_cast<std::uint64_t>(rep)));
        const auto shuffled = apply_ref_model(g, models[mi], rng);
        tds[mi][static_cast<std::size_t>(rep)] =
            td_from_matrices(f_orig, compute_fad(shuffled)).td;
    });

    auto out = detail::open_csv(cfg.out_dir / "battery.csv");
    out << "model,mean_td,std_td,realizations\n";
    for (std::size_t mi = 0; mi < 6; ++mi) {
        const auto s = detail::summarize(tds[mi]);
        out << ref_model_name(models[mi]) << ',' << format_double(s.mean) << ','
            << format_double(s.std_dev) << ',' << reals << '\n';
    }
}

// dissimilarity between a network and randomly perturbed copies over a grid of f
inline void perturb_sweep(const config& cfg, const temporal_network& g)
{
    const int reals = cfg.reals > 0 ? cfg.reals : 100;
    if (cfg.f_step <= 0.0)
        throw std::invalid_argument("fstep must be positive");
    std::vector<double> fs;
    const int n_steps =
        static_cast<int>(std::round((cfg.f_max - cfg.f_min) / cfg.f_step));
    for (int k = 0; k <= n_steps; ++k) {
        const double f = cfg.f_min + k * cfg.f_step;
        fs.push_back(std::abs(f) < 1e-12 ? 0.0 : f);
    }

    const auto f_orig = compute_fad(g, cfg.workers);
    std::vector<std::vector<double>> tds(fs.size(), std::vector<double>(reals, 0.0));
    std::vector<std::pair<std::size_t, int>> tasks;
    for (std::size_t fi = 0; fi < fs.size(); ++fi)
        for (int rep = 0; rep < reals; ++rep)
            tasks.emplace_back(fi, rep);
    parallel_for(tasks.size(), cfg.workers, [&](std::size_t ti) {
        const auto [fi, rep] = tasks[ti];
        if (fs[fi] == 0.0)
            return; // identical network, td = 0 exactly
        rng_t rng(derive_seed(cfg.seed, fi, static_cast<std::uint64_t>(rep)));
        const auto p = perturb(g, fs[fi], rng);
        tds[fi][static_cast<std::size_t>(rep)] = td_from_matrices(f_orig, compute_fad(p)).td;
    });

    auto out = detail::open_csv(cfg.out_dir / "sweep.csv");
    out << "f,mean_td,std_td,realizations\n";
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
        const auto s = detail::summarize(tds[fi]);
        out << format_double(fs[fi]) << ',' << format_double(s.mean) << ','
            << format_double(s.std_dev) << ',' << reals << '\n';
    }
}

/* Equal time windows: pairwise dissimilarity between the window sub-networks,
 * each cumulative prefix against the full network, and the size table. */
inline void evolution_slices(const config& cfg, const temporal_network& g)
{
    const int k = cfg.slices;
    if (k < 2)
        throw std::invalid_argument("need at least two slices");
    if (static_cast<time_t>(k) > g.horizon + 1)
        throw std::invalid_argument("more slices than time steps");
    // evenly spread boundaries so every window is non-degenerate
    auto boundary = [&](int i) {
        return static_cast<time_t>(static_cast<std::int64_t>(i) * (g.horizon + 1) /
                                   static_cast<std::int64_t>(k));
    };

    std::vector<temporal_network> windows;
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
        windows.push_back(slice(g, boundary(i), boundary(i + 1)));
        labels.push_back("sub" + std::to_string(i + 1));
    }

    const auto matrix = dissimilarity_matrix(windows, 0.5, 0.5, cfg.workers);
    {
        auto out = detail::open_csv(cfg.out_dir / "slices_matrix.csv");
        write_labeled_matrix_csv(out, labels, matrix);
    }

    {
        auto out = detail::open_csv(cfg.out_dir / "slices_cumulative.csv");
        out << "prefix,td_vs_full\n";
        const auto full_fad = compute_fad(g, cfg.workers);
        for (int i = 0; i < k; ++i) {
            const auto prefix = slice(g, 0, boundary(i + 1));
            const double td = td_from_matrices(compute_fad(prefix, cfg.workers), full_fad).td;
            out << "sub1-" << (i + 1) << ',' << format_double(td) << '\n';
        }
    }

    {
        auto out = detail::open_csv(cfg.out_dir / "slices_sizes.csv");
        out << "slice,n_nodes,n_links,n_contacts\n";
        for (int i = 0; i < k; ++i) {
            const auto& w = windows[static_cast<std::size_t>(i)];
            out << labels[static_cast<std::size_t>(i)] << ',' << w.n_nodes << ','
                << aggregate(w).n_edges() << ',' << w.n_contacts() << '\n';
        }
        for (int i = 0; i < k; ++i) {
            const auto prefix = slice(g, 0, boundary(i + 1));
            out << "sub1-" << (i + 1) << ',' << prefix.n_nodes << ','
                << aggregate(prefix).n_edges() << ',' << prefix.n_contacts() << '\n';
        }
    }
}

/* Mixed synthetic ensemble; for every unordered pair, the dissimilarity and
 * the spreadability difference at the given beta. Returns the correlation. */
inline double spreadability_correlation(const config& cfg)
{
    const int count = cfg.ensemble;
    if (count < 3)
        throw std::invalid_argument("ensemble needs at least three networks");

    std::vector<temporal_network> nets(static_cast<std::size_t>(count));
    std::vector<std::string> labels(static_cast<std::size_t>(count));
    parallel_for(nets.size(), cfg.workers, [&](std::size_t i) {
        // deterministic mixed parameters: alternate distribution kinds,
        // sweep m over {1,2,3} and r over the configured list
        const bool power_law = i % 2 == 1;
        const int m = 1 + static_cast<int>(i / 2) % 3;
        const double r = cfg.rs[i % cfg.rs.size()];
        nets[i] = detail::generate_for(cfg, power_law, r, m, derive_seed(cfg.seed, 100 + i),
                                       power_law ? "powerlaw" : "uniform");
        labels[i] = (power_law ? "pl_r=" + format_double(r) : "uniform") +
                    "_m=" + std::to_string(m) + "_" + std::to_string(i);
    });

    std::vector<double> spread(nets.size(), 0.0);
    parallel_for(nets.size(), cfg.workers, [&](std::size_t i) {
        spread[i] = spreadability(nets[i], cfg.beta, cfg.si_runs, derive_seed(cfg.seed, 200 + i))
                        .mean_fraction;
    });

    const auto matrix = dissimilarity_matrix(nets, 0.5, 0.5, cfg.workers);
    std::vector<double> tds, dis;
    auto out = detail::open_csv(cfg.out_dir / "pairs.csv");
    out << "label_1,label_2,td,delta_i\n";
    for (std::size_t i = 0; i < nets.size(); ++i) {
        for (std::size_t j = i + 1; j < nets.size(); ++j) {
            const double td = matrix[i * nets.size() + j];
            const double di = std::abs(spread[i] - spread[j]);
            tds.push_back(td);
            dis.push_back(di);
            out << labels[i] << ',' << labels[j] << ',' << format_double(td) << ','
                << format_double(di) << '\n';
        }
    }
    const double pcc = pearson(tds, dis);
    auto summary = detail::open_csv(cfg.out_dir / "summary.csv");
    summary << "n_networks,n_pairs,beta,pcc\n";
    summary << count << ',' << tds.size() << ',' << format_double(cfg.beta) << ','
            << format_double(pcc) << '\n';
    return pcc;
}

inline void run(const config& cfg, run_manifest& manifest)
{
    std::filesystem::create_directories(cfg.out_dir);
    temporal_network g;
    const bool needs_input = cfg.kind == "refmodel-battery" || cfg.kind == "perturb-sweep" ||
                             cfg.kind == "evolution-slices";
    if (needs_input) {
        if (cfg.input.empty())
            throw std::invalid_argument("experiment kind '" + cfg.kind + "' needs --input");
        g = load_contacts(cfg.input, cfg.parse);
        manifest.add_input(cfg.input);
    }

    if (cfg.kind == "synthetic-grid")
        synthetic_grid(cfg);
    else if (cfg.kind == "refmodel-battery")
        refmodel_battery(cfg, g);
    else if (cfg.kind == "perturb-sweep")
        perturb_sweep(cfg, g);
    else if (cfg.kind == "evolution-slices")
        evolution_slices(cfg, g);
    else if (cfg.kind == "spreadability-correlation")
        manifest.params["pcc"] = spreadability_correlation(cfg);
    else
        throw std::invalid_argument("unknown experiment kind '" + cfg.kind + "'");

    std::ofstream mf(cfg.out_dir / "manifest.json", std::ios::binary);
    if (!mf)
        throw io_error("cannot write manifest");
    mf << manifest.to_json().dump(2) << '\n';
}

} // namespace tdis::experiments
