#include <charconv>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ifd/batch.hpp"
#include "ifd/problem_spec.hpp"
#include "ifd/series.hpp"
#include "ifd/verify.hpp"

namespace {

double parse_double_strict(const std::string& s, const char* what) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    const auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc{} || res.ptr != e)
        throw ifd::DomainError(std::string("cannot parse ") + what + " from \"" + s + "\"");
    return v;
}

ifd::GridSpec parse_grid_arg(const std::string& arg) {
    const auto c1 = arg.find(':');
    const auto c2 = arg.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        arg.find(':', c2 + 1) != std::string::npos)
        throw ifd::DomainError("--grid expects LO:HI:N");
    const double lo = parse_double_strict(arg.substr(0, c1), "grid LO");
    const double hi = parse_double_strict(arg.substr(c1 + 1, c2 - c1 - 1), "grid HI");
    const std::string n_text = arg.substr(c2 + 1);
    std::size_t n = 0;
    const auto res = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
    if (res.ec != std::errc{} || res.ptr != n_text.data() + n_text.size() || n == 0)
        throw ifd::DomainError("grid N must be a positive integer");
    if (!(lo < hi))
        throw ifd::DomainError("grid requires LO < HI");
    return {lo, hi, n};
}

ifd::GridSpec pick_grid(const std::string& grid_arg, const ifd::ProblemSpec& spec) {
    if (!grid_arg.empty())
        return parse_grid_arg(grid_arg);
    if (spec.grid)
        return *spec.grid;
    throw ifd::DomainError("no grid given: pass --grid LO:HI:N or add \"grid\" to the spec");
}

template <class Writer>
void with_output(const std::string& out_path, Writer&& write) {
    if (out_path.empty()) {
        write(std::cout);
        std::cout.flush();
        if (!std::cout)
            throw ifd::DomainError("writing to standard output failed");
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os)
        throw ifd::DomainError("cannot open output file: " + out_path);
    write(os);
    os.flush();
    if (!os)
        throw ifd::DomainError("writing to " + out_path + " failed");
}

enum class SeriesKind { Density, Cdf };

void run_series(const ifd::ProblemSpec& spec, const ifd::GridSpec& grid,
                const std::string& out_path, SeriesKind kind) {
    const ifd::ImplicitDensity d = ifd::build_density(spec);
    const std::vector<double> ts = ifd::linspace(grid.lo, grid.hi, grid.n + 1);
    const std::vector<double> vs =
        kind == SeriesKind::Density ? ifd::density_series(d, ts) : ifd::cdf_series(d, ts);
    const ifd::GridSeries series = ifd::make_grid_series(ts, vs);
    const char* header = kind == SeriesKind::Density ? "pdf" : "cdf";
    with_output(out_path, [&](std::ostream& os) { ifd::write_series_csv(os, "t", header, series); });
}

const char* flag_text(bool b) { return b ? "true" : "false"; }

void print_report(std::ostream& os, const ifd::VerificationReport& r) {
    os << "normalization_integral=" << ifd::format_full(r.normalization_integral) << '\n'
       << "normalization_pass=" << flag_text(r.normalization_pass) << '\n'
       << "ks_statistic=" << ifd::format_full(r.ks_statistic) << '\n'
       << "ks_critical=" << ifd::format_full(r.ks_critical) << '\n'
       << "ks_pass=" << flag_text(r.ks_pass) << '\n'
       << "max_cdf_pdf_deviation=" << ifd::format_full(r.max_cdf_pdf_deviation) << '\n'
       << "consistency_pass=" << flag_text(r.consistency_pass) << '\n'
       << "n_samples=" << r.n_samples << '\n'
       << "seed=" << r.seed << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Law of X solving f(X) = A for strictly monotone C1 f: "
                 "density, CDF, quantiles, exact samples and verification."};
    app.require_subcommand(1);

    std::string spec_path;
    std::string grid_arg;
    std::string out_path;
    double p = 0.0;
    std::size_t n_samples = 100000;
    std::uint64_t seed = 42;
    int example_id = 0;

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("--spec", spec_path, "problem spec file (JSON)")->required();
    };

    CLI::App* density = app.add_subcommand("density", "write t,pdf over a grid");
    add_spec(density);
    density->add_option("--grid", grid_arg, "grid as LO:HI:N (N intervals, N+1 rows)");
    density->add_option("--out", out_path, "output CSV path (default: stdout)");

    CLI::App* cdf = app.add_subcommand("cdf", "write t,cdf over a grid");
    add_spec(cdf);
    cdf->add_option("--grid", grid_arg, "grid as LO:HI:N (N intervals, N+1 rows)");
    cdf->add_option("--out", out_path, "output CSV path (default: stdout)");

    CLI::App* quantile = app.add_subcommand("quantile", "print the p-quantile of X");
    add_spec(quantile);
    quantile->add_option("--p", p, "probability in (0,1)")->required();

    CLI::App* sample = app.add_subcommand("sample", "write n exact draws of X");
    add_spec(sample);
    sample->add_option("--n", n_samples, "number of draws")->required();
    sample->add_option("--seed", seed, "RNG seed (default 42)");
    sample->add_option("--out", out_path, "output CSV path (default: stdout)");

    CLI::App* verify = app.add_subcommand(
        "verify", "normalization + KS + CDF/PDF consistency; exit 0 iff all pass");
    add_spec(verify);
    verify->add_option("--n", n_samples, "sample count for the KS check (default 100000)");
    verify->add_option("--seed", seed, "RNG seed (default 42)");

    CLI::App* figure = app.add_subcommand("figure", "density CSV for a bundled example");
    figure->add_option("--example", example_id, "example id (1-4)")
        ->required()
        ->check(CLI::Range(1, 4));
    figure->add_option("--out", out_path, "output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*density || *cdf) {
            const ifd::ProblemSpec spec = ifd::load_problem_spec(spec_path);
            run_series(spec, pick_grid(grid_arg, spec), out_path,
                       *density ? SeriesKind::Density : SeriesKind::Cdf);
        } else if (*quantile) {
            const ifd::ImplicitDensity d =
                ifd::build_density(ifd::load_problem_spec(spec_path));
            std::cout << ifd::format_full(d.quantile(p)) << '\n';
        } else if (*sample) {
            const ifd::ImplicitDensity d =
                ifd::build_density(ifd::load_problem_spec(spec_path));
            const std::vector<double> xs = ifd::sample_batch(d, n_samples, seed);
            with_output(out_path,
                        [&](std::ostream& os) { ifd::write_column_csv(os, "x", xs); });
        } else if (*verify) {
            const ifd::ImplicitDensity d =
                ifd::build_density(ifd::load_problem_spec(spec_path));
            const ifd::VerificationReport r = ifd::run_full_verification(d, n_samples, seed);
            print_report(std::cout, r);
            if (!r.all_pass()) {
                std::cerr << "error: verification failed\n";
                return 5;
            }
        } else if (*figure) {
            const ifd::ProblemSpec spec = ifd::builtin_example(example_id);
            run_series(spec, ifd::builtin_figure_grid(example_id), out_path,
                       SeriesKind::Density);
        }
    } catch (const ifd::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ifd::NotMonotone& e) {
        std::cerr << "error: " << e.what() << " (t = " << ifd::format_full(e.witness())
                  << ")\n";
        return 3;
    } catch (const ifd::SupportMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const ifd::NonFinite& e) {
        std::cerr << "error: " << e.what() << " (t = " << ifd::format_full(e.witness())
                  << ")\n";
        return 5;
    } catch (const ifd::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ifd::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    }
    return 0;
}
