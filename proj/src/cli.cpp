#include <flatdim/cli.hpp>

#include <flatdim/bounds.hpp>
#include <flatdim/classify.hpp>
#include <flatdim/hilbert.hpp>
#include <flatdim/oracle.hpp>
#include <flatdim/render.hpp>
#include <flatdim/veneroni.hpp>
#include <flatdim/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>

namespace flatdim::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerifyFailed = 3;

// comma-separated decimal multiplicity list; empty string = empty scheme
std::vector<long long> parse_mults(const std::string& text)
{
    std::vector<long long> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t pos = text.find(',', start);
        const std::string item =
            text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--mults", "not a decimal integer: '" + item + "'");
        }
        if (used != item.size())
            throw CLI::ValidationError("--mults", "not a decimal integer: '" + item + "'");
        out.push_back(v);
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return out;
}

void emit(const std::string& rendering, const std::string& out_file, std::ostream& out)
{
    if (out_file.empty()) {
        out << rendering;
        return;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f)
        throw std::invalid_argument("cannot open output file: " + out_file);
    f << rendering;
    if (!f)
        throw std::invalid_argument("failed writing output file: " + out_file);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"dimension counts of linear systems through general codimension-2 flats"};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"table", "csv", "json"});
    std::function<void()> action;  // bound by the matched subcommand

    // vdim --n N --mults a,b,c --t T
    {
        auto* cmd = app.add_subcommand("vdim", "virtual dimension of a fat-flat system");
        auto n = std::make_shared<int>(0);
        auto t = std::make_shared<long long>(0);
        auto mults = std::make_shared<std::string>();
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--t", *t, "degree")->required();
        cmd->add_option("--mults", *mults, "comma-separated multiplicities (empty = no flats)");
        cmd->callback([&action, n, t, mults, &out] {
            auto parsed = std::make_shared<std::vector<long long>>(parse_mults(*mults));
            action = [n, t, parsed, &out] {
                const FatFlatScheme scheme(*n, *parsed);
                out << vdim_recursive(scheme, *t) << "\n";
            };
        });
    }

    // sform --n --s --t
    {
        auto* cmd = app.add_subcommand("sform", "closed-form multiplicity-1 virtual dimension");
        auto n = std::make_shared<long long>(0);
        auto s = std::make_shared<long long>(0);
        auto t = std::make_shared<long long>(0);
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--s", *s, "number of flats")->required();
        cmd->add_option("--t", *t, "degree")->required();
        cmd->callback([&action, n, s, t, &out] {
            action = [n, s, t, &out] { out << s_formula(*n, *s, *t) << "\n"; };
        });
    }

    // conds --n --codim --mult --t
    {
        auto* cmd = app.add_subcommand("conds", "conditions imposed by one fat flat");
        auto n = std::make_shared<long long>(0);
        auto k = std::make_shared<long long>(0);
        auto m = std::make_shared<long long>(0);
        auto t = std::make_shared<long long>(0);
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--codim", *k, "codimension of the flat")->required();
        cmd->add_option("--mult", *m, "multiplicity")->required();
        cmd->add_option("--t", *t, "degree")->required();
        cmd->callback([&action, n, k, m, t, &out] {
            action = [n, k, m, t, &out] { out << conditions_fat_flat(*n, *k, *m, *t) << "\n"; };
        });
    }

    // adim-bound --n --s --t
    {
        auto* cmd = app.add_subcommand("adim-bound", "peeling upper bound for multiplicity 1");
        auto n = std::make_shared<long long>(0);
        auto s = std::make_shared<long long>(0);
        auto t = std::make_shared<long long>(0);
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--s", *s, "number of flats")->required();
        cmd->add_option("--t", *t, "degree")->required();
        cmd->callback([&action, n, s, t, &out] {
            action = [n, s, t, &out] { out << adim_upper_mult1(*n, *s, *t) << "\n"; };
        });
    }

    // certify --n --s --t
    {
        auto* cmd = app.add_subcommand("certify", "lower-bound certificate (adim >= vdim)");
        auto n = std::make_shared<long long>(0);
        auto s = std::make_shared<long long>(0);
        auto t = std::make_shared<long long>(0);
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--s", *s, "number of flats")->required();
        cmd->add_option("--t", *t, "degree")->required();
        cmd->callback([&action, n, s, t, &out] {
            action = [n, s, t, &out] {
                out << (lower_certificate(*n, *s, *t) ? "true" : "false") << "\n";
            };
        });
    }

    // adim-family --n --k
    {
        auto* cmd = app.add_subcommand("adim-family", "exact family actual dimension");
        auto n = std::make_shared<long long>(0);
        auto k = std::make_shared<long long>(0);
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--k", *k, "degree offset (source degree n+k)")->required();
        cmd->callback([&action, n, k, &out] {
            action = [n, k, &out] { out << adim_family(*n, *k) << "\n"; };
        });
    }

    // transform --n --degree --mults [--format]
    {
        auto* cmd = app.add_subcommand("transform", "pull a system back through the degree-n map");
        auto n = std::make_shared<int>(0);
        auto degree = std::make_shared<long long>(0);
        auto mults = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("table");
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--degree", *degree, "system degree")->required();
        cmd->add_option("--mults", *mults, "comma-separated multiplicities (need n+1)")->required();
        cmd->add_option("--format", *format, "table, csv or json")->check(format_check);
        cmd->callback([&action, n, degree, mults, format, &out] {
            auto parsed = std::make_shared<std::vector<long long>>(parse_mults(*mults));
            action = [n, degree, parsed, format, &out] {
                const LinearSystem sys = make_system(*n, *degree, *parsed);
                out << render_system(veneroni_pullback(sys), parse_format(*format));
            };
        });
    }

    // classify --n --k [--format]
    {
        auto* cmd = app.add_subcommand("classify", "verdict for one family instance");
        auto n = std::make_shared<long long>(0);
        auto k = std::make_shared<long long>(0);
        auto format = std::make_shared<std::string>("table");
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--k", *k, "degree offset")->required();
        cmd->add_option("--format", *format, "table, csv or json")->check(format_check);
        cmd->callback([&action, n, k, format, &out] {
            action = [n, k, format, &out] {
                out << render_record(classify_family(*n, *k), parse_format(*format));
            };
        });
    }

    // scan --k --n-min --n-max [--format F] [--out FILE] [--jobs J]
    {
        auto* cmd = app.add_subcommand("scan", "classify a range of ambient dimensions");
        auto k = std::make_shared<long long>(0);
        auto n_min = std::make_shared<long long>(0);
        auto n_max = std::make_shared<long long>(0);
        auto format = std::make_shared<std::string>("table");
        auto out_file = std::make_shared<std::string>();
        auto jobs = std::make_shared<int>(1);
        cmd->add_option("--k", *k, "degree offset")->required();
        cmd->add_option("--n-min", *n_min, "first ambient dimension")->required();
        cmd->add_option("--n-max", *n_max, "last ambient dimension")->required();
        cmd->add_option("--format", *format, "table, csv or json")->check(format_check);
        cmd->add_option("--out", *out_file, "write the rendering to this file instead of stdout");
        cmd->add_option("--jobs", *jobs, "worker threads");
        cmd->callback([&action, k, n_min, n_max, format, out_file, jobs, &out] {
            action = [k, n_min, n_max, format, out_file, jobs, &out] {
                const auto records = scan(*k, *n_min, *n_max, *jobs);
                emit(render_scan(records, parse_format(*format)), *out_file, out);
            };
        });
    }

    // oracle --n --mults --t [--seed S] [--prime P]
    {
        auto* cmd = app.add_subcommand("oracle", "finite-field rank check of the actual dimension");
        auto n = std::make_shared<int>(0);
        auto t = std::make_shared<long long>(0);
        auto mults = std::make_shared<std::string>();
        auto seed = std::make_shared<std::uint64_t>(OracleConfig{}.seed);
        auto prime = std::make_shared<std::uint32_t>(OracleConfig{}.prime);
        cmd->add_option("--n", *n, "ambient dimension (2..5)")->required();
        cmd->add_option("--t", *t, "degree (0..10)")->required();
        cmd->add_option("--mults", *mults, "comma-separated multiplicities (each <= 4)");
        cmd->add_option("--seed", *seed, "RNG seed");
        cmd->add_option("--prime", *prime, "field modulus (prime, < 2^31)");
        cmd->callback([&action, n, t, mults, seed, prime, &out] {
            auto parsed = std::make_shared<std::vector<long long>>(parse_mults(*mults));
            action = [n, t, parsed, seed, prime, &out] {
                OracleConfig cfg;
                cfg.seed = *seed;
                cfg.prime = *prime;
                out << adim_rank_oracle(*n, *parsed, *t, cfg) << "\n";
            };
        });
    }

    // verify [--grid-max G]
    int verify_result = kExitOk;
    {
        auto* cmd = app.add_subcommand("verify", "run the identity grids and golden-value suites");
        auto grid_max = std::make_shared<long long>(0);
        cmd->add_option("--grid-max", *grid_max,
                        "cap the ambient-dimension range of the grids (0 = full)");
        cmd->callback([&action, grid_max, &out, &verify_result] {
            action = [grid_max, &out, &verify_result] {
                VerifyOptions opts;
                opts.grid_max = *grid_max;
                verify_result = run_verify(opts, out) == 0 ? kExitOk : kExitVerifyFailed;
            };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return verify_result;
}

}  // namespace flatdim::cli
