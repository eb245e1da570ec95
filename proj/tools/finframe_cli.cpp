// finframe: command-line front end for the frame library.
//
// Exit codes: 0 success, 1 I/O or file format, 2 usage, 3 domain error
// (not a frame, dimension mismatch, ...).

#include "finframe/finframe.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace finframe;

namespace {

enum Exit : int { kOk = 0, kIo = 1, kUsage = 2, kDomain = 3 };

class UsageError : public Error {
public:
    using Error::Error;
};

std::string g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string created_line(const Frame& f) {
    const auto b = f.bounds();
    return "Created a frame with lower bound A = " + g6(b.lower) + " and upper bound B = " + g6(b.upper);
}

Frame load_frame(const std::string& path) { return new_frame(read_matrix(path)); }

void emit_matrix(const Matrix& m, const std::string& out) {
    if (out.empty()) {
        std::cout << to_json(m);
    } else {
        write_matrix(out, m);
    }
}

void emit_text(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
}

// "2x3,4x5" or ranges "1-16x1-32" (pairs with count < dim are skipped).
std::vector<GridPoint> parse_grid(const std::string& spec) {
    auto parse_range = [&](const std::string& s) -> std::pair<std::size_t, std::size_t> {
        try {
            const auto dash = s.find('-');
            if (dash == std::string::npos) {
                const auto v = std::stoul(s);
                return {v, v};
            }
            return {std::stoul(s.substr(0, dash)), std::stoul(s.substr(dash + 1))};
        } catch (const std::exception&) {
            throw UsageError("bad grid component '" + s + "'");
        }
    };
    std::vector<GridPoint> grid;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto x = item.find('x');
        if (x == std::string::npos) {
            throw UsageError("grid items look like DIMxCOUNT, got '" + item + "'");
        }
        const auto [d0, d1] = parse_range(item.substr(0, x));
        const auto [m0, m1] = parse_range(item.substr(x + 1));
        const bool ranged = d0 != d1 || m0 != m1;
        for (std::size_t d = d0; d <= d1; ++d) {
            for (std::size_t m = m0; m <= m1; ++m) {
                if (ranged && m < d) {
                    continue;
                }
                if (d < 1 || m < d) {
                    throw UsageError("grid point " + std::to_string(d) + "x" + std::to_string(m) +
                                     ": count must be >= dim >= 1");
                }
                grid.push_back({d, m});
            }
        }
    }
    if (grid.empty()) {
        throw UsageError("empty grid");
    }
    return grid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite frames: bounds, duals, frame transformation, operation counts"};
    app.require_subcommand(1);

    std::string out;

    // gen
    std::size_t gen_dim = 0;
    std::size_t gen_count = 0;
    std::uint64_t gen_seed = 0;
    bool gen_complex = false;
    std::string gen_out = "frame.json";
    auto* gen = app.add_subcommand("gen", "Create a random frame and print its bounds");
    gen->add_option("--dim", gen_dim, "Ambient dimension N")->required();
    gen->add_option("--count", gen_count, "Number of frame elements M")->required();
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_flag("--complex", gen_complex, "Complex normal entries");
    gen->add_option("--out", gen_out, "Output matrix file (.json or .csv)");

    // bounds
    std::string file;
    auto* bounds = app.add_subcommand("bounds", "Print the optimal frame bounds");
    bounds->add_option("file", file, "Synthesis matrix file")->required();

    // dual
    auto* dual = app.add_subcommand("dual", "Write the canonical dual frame");
    dual->add_option("file", file)->required();
    dual->add_option("--out", out);

    // analyze / synth
    std::string vec_file;
    bool use_dual = false;
    auto* analyze = app.add_subcommand("analyze", "Analysis coefficients <x, g_k>");
    analyze->add_option("file", file)->required();
    analyze->add_option("--vec", vec_file, "Vector file (N x 1)")->required();
    analyze->add_flag("--dual", use_dual, "Analyze with the dual frame");
    analyze->add_option("--out", out);

    std::string coef_file;
    auto* synth = app.add_subcommand("synth", "Synthesis sum_k c_k g_k");
    synth->add_option("file", file)->required();
    synth->add_option("--coef", coef_file, "Coefficient file (M x 1)")->required();
    synth->add_flag("--dual", use_dual, "Synthesize with the dual frame");
    synth->add_option("--out", out);

    // gram / transform
    std::string file_g;
    std::string file_f;
    auto* gram_cmd = app.add_subcommand("gram", "Frame transformation matrix from frame G to frame F");
    gram_cmd->add_option("source", file_g)->required();
    gram_cmd->add_option("target", file_f)->required();
    gram_cmd->add_option("--out", out);

    auto* transform = app.add_subcommand("transform", "Map analysis coefficients of G to those of F");
    transform->add_option("source", file_g)->required();
    transform->add_option("target", file_f)->required();
    transform->add_option("--coef", coef_file)->required();
    transform->add_option("--out", out);

    // stability
    std::size_t st_dim = 0;
    std::size_t st_m1 = 0;
    std::size_t st_m2 = 0;
    std::size_t st_trials = 100;
    std::uint64_t st_seed = 0;
    auto* stability = app.add_subcommand("stability", "Repeated frame transformation error experiment");
    stability->add_option("--dim", st_dim)->required();
    stability->add_option("--m1", st_m1)->required();
    stability->add_option("--m2", st_m2)->required();
    stability->add_option("--trials", st_trials);
    stability->add_option("--seed", st_seed);

    // bench
    std::string grid_spec = "1-16x1-32";
    std::size_t repeats = 5;
    std::uint64_t bench_seed = 0;
    auto* bench = app.add_subcommand("bench", "Operation counts and timings of both frame operator algorithms");
    bench->add_option("--grid", grid_spec, "Grid, e.g. 2x3,4x5 or 1-16x1-32");
    bench->add_option("--repeats", repeats);
    bench->add_option("--seed", bench_seed);
    bench->add_option("--out", out, "CSV output (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "Check A*N <= sum ||g_k||^2 <= B*N");
    check->add_option("file", file)->required();

    // plot
    bool plot_dual = false;
    auto* plot = app.add_subcommand("plot", "SVG drawing of a 2D or 3D frame");
    plot->add_option("file", file)->required();
    plot->add_option("--out", out);
    plot->add_flag("--dual", plot_dual, "Also draw the canonical dual");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) {
            if (gen_dim < 1) {
                throw UsageError("dim must be >= 1");
            }
            if (gen_count < gen_dim) {
                throw UsageError("count must be ≥ dim");
            }
            const Frame f = random_frame(gen_dim, gen_count, gen_seed, gen_complex);
            write_matrix(gen_out, f.synthesis_matrix());
            std::cout << created_line(f) << '\n';
        } else if (*bounds) {
            const auto b = load_frame(file).bounds();
            std::cout << "A = " << g6(b.lower) << ", B = " << g6(b.upper) << '\n';
        } else if (*dual) {
            emit_matrix(load_frame(file).dual().synthesis_matrix(), out);
        } else if (*analyze) {
            const Frame f = load_frame(file);
            const Vector x = matrix_to_vector(read_matrix(vec_file));
            emit_matrix(vector_to_matrix(analysis(use_dual ? f.dual() : f, x).values()), out);
        } else if (*synth) {
            const Frame f = load_frame(file);
            const CoefficientVector c(matrix_to_vector(read_matrix(coef_file)));
            emit_matrix(vector_to_matrix(synthesis(use_dual ? f.dual() : f, c)), out);
        } else if (*gram_cmd) {
            emit_matrix(frame_transform_matrix(load_frame(file_g), load_frame(file_f)).matrix(), out);
        } else if (*transform) {
            const auto t = frame_transform_matrix(load_frame(file_g), load_frame(file_f));
            const CoefficientVector c(matrix_to_vector(read_matrix(coef_file)));
            emit_matrix(vector_to_matrix(apply_transform(t, c).values()), out);
        } else if (*stability) {
            if (st_dim < 1 || st_m1 < st_dim || st_m2 < st_dim || st_trials < 1) {
                throw UsageError("need m1, m2 >= dim >= 1 and trials >= 1");
            }
            const auto first = stability_round(st_dim, st_m1, st_m2, st_seed, 0);
            const double err = transform_stability_trial(st_dim, st_m1, st_m2, st_trials, st_seed);
            std::cout << "Dimension = " << st_dim << ", Number of frame elements, first frame = " << st_m1
                      << ", second frame = " << st_m2 << '\n'
                      << "First frame:\n"
                      << created_line(first.source) << '\n'
                      << "Second frame:\n"
                      << created_line(first.target) << '\n'
                      << "The maximal error in " << st_trials << " runs was " << g6(err) << '\n';
        } else if (*bench) {
            const auto rows = run_bench(parse_grid(grid_spec), repeats, bench_seed);
            std::ostringstream csv;
            write_bench_csv(csv, rows);
            emit_text(csv.str(), out);
        } else if (*check) {
            const auto r = norm_sum_check(load_frame(file));
            std::cout << "dim = " << r.dim << '\n'
                      << "sum of squared norms = " << g6(r.norm_sum_sq) << '\n'
                      << "A * dim = " << g6(r.lower_bound_product) << '\n'
                      << "B * dim = " << g6(r.upper_bound_product) << '\n'
                      << (r.sandwich_holds() ? "PASS" : "FAIL") << '\n';
            return r.sandwich_holds() ? kOk : kDomain;
        } else if (*plot) {
            const Frame f = load_frame(file);
            if (f.dim() != 2 && f.dim() != 3) {
                throw UsageError("plot supports dim 2 or 3");
            }
            emit_text(render_svg(f, plot_dual), out);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const NotAFrame& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    }
    return kOk;
}
