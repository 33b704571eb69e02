// Command-line surface: ring inspection, Salem computation, family sweeps,
// and the verification suites. Exit codes: 0 success, 1 verification
// failure, 2 usage/parse error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ringfourier/ringfourier.hpp"

namespace rf = ringfourier;

namespace {

rf::NcPolynomial resolve_poly(const std::string& poly, unsigned d) {
    if (poly == "parab" || poly == "paraboloid") return rf::NcPolynomial::paraboloid(d);
    return rf::NcPolynomial::parse(poly);
}

// Probe tokens: eIJ (matrix unit at 1-based I,J), a plain integer k
// (integer image), or idx:K (raw element index).
std::uint64_t resolve_probe_token(const rf::Ring& ring, const std::string& token) {
    if (token.size() >= 3 && token[0] == 'e' && std::isdigit(static_cast<unsigned char>(token[1]))) {
        unsigned i = static_cast<unsigned>(token[1] - '0');
        unsigned j = static_cast<unsigned>(token[2] - '0');
        if (i < 1 || j < 1) throw rf::parse_error("probe: matrix unit indices are 1-based");
        return ring.matrix_unit(i - 1, j - 1, ring.base_ring().one());
    }
    if (token.rfind("idx:", 0) == 0) return std::stoull(token.substr(4));
    return ring.integer_image(std::stoll(token));
}

std::unique_ptr<std::ofstream> open_out(const std::string& path) {
    if (path.empty()) return nullptr;
    auto f = std::make_unique<std::ofstream>(path);
    if (!*f) throw std::runtime_error("cannot open output file: " + path);
    return f;
}

struct SweepTarget {
    rf::RingSpec spec;
    bool matrix = false;
};

std::vector<SweepTarget> sweep_family(const std::string& family, std::uint64_t max_size) {
    std::vector<SweepTarget> out;
    auto prime_powers = [](std::uint64_t cap, unsigned min_k) {
        std::vector<std::uint64_t> v;
        for (std::uint64_t q = 2; q <= cap; ++q) {
            auto [p, k] = rf::detail::prime_power(q);
            if (p != 0 && k >= min_k) v.push_back(q);
        }
        return v;
    };
    if (family == "fields") {
        for (auto q : prime_powers(max_size, 1)) out.push_back({rf::RingSpec::gf(q), false});
    } else if (family == "zmod-prime-powers") {
        for (auto q : prime_powers(max_size, 2)) out.push_back({rf::RingSpec::zmod(q), false});
    } else if (family == "mat2" || family == "mat3") {
        unsigned n = family == "mat2" ? 2 : 3;
        for (auto q : prime_powers(max_size, 1))
            out.push_back({rf::RingSpec::matrix(n, rf::RingSpec::gf(q)), true});
    } else if (family == "products") {
        auto pps = prime_powers(max_size, 1);
        for (auto q1 : pps)
            for (auto q2 : pps) {
                if (q2 < q1 || q1 * q2 > max_size) continue;
                out.push_back({rf::RingSpec::product({rf::RingSpec::gf(q1), rf::RingSpec::gf(q2)}),
                               false});
            }
    } else {
        throw rf::parse_error("unknown sweep family \"" + family + "\"");
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring Fourier spectra, Salem constants, and checks"};
    app.require_subcommand(1);

    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t budget_work = 0;
    bool force = false;
    app.add_option("--threads", threads, "worker cap (output is thread-count independent)");
    app.add_option("--budget", budget_work, "work budget in character evaluations");
    app.add_flag("--force", force, "ignore the work budget guardrail");

    // ring info
    auto* ring_cmd = app.add_subcommand("ring", "ring inspection");
    auto* info_cmd = ring_cmd->add_subcommand("info", "print ring structure as JSON");
    std::string info_spec;
    info_cmd->add_option("spec", info_spec, "ring spec, e.g. zmod(6) or mat(2,gf(3))")->required();

    // salem
    auto* salem_cmd = app.add_subcommand("salem", "Salem constant of a graph variety");
    std::string salem_spec, salem_poly = "parab", salem_method = "auto";
    std::string spectrum_out, points_out, probe_list;
    unsigned salem_d = 2;
    std::int64_t salem_c = 0;
    salem_cmd->add_option("spec", salem_spec, "ring spec")->required();
    salem_cmd->add_option("--poly", salem_poly, "polynomial DSL or 'parab'");
    salem_cmd->add_option("-d,--dimension", salem_d, "ambient dimension d")->required();
    salem_cmd->add_option("-c,--shift", salem_c, "translation constant c");
    salem_cmd->add_option("--method", salem_method, "direct | fft | graph | auto");
    salem_cmd->add_option("--spectrum", spectrum_out, "write full spectrum CSV here");
    salem_cmd->add_option("--points", points_out, "write variety point CSV here");
    salem_cmd->add_option("--probe", probe_list,
                          "comma-separated trace-frequency probes (lower-bound mode), "
                          "e.g. e11 or 1,e12");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "C against |R| over a ring family");
    std::string sweep_family_name, sweep_poly = "parab", sweep_out;
    std::uint64_t sweep_max = 27;
    unsigned sweep_d = 2;
    sweep_cmd->add_option("--family", sweep_family_name,
                          "fields | zmod-prime-powers | mat2 | mat3 | products")
        ->required();
    sweep_cmd->add_option("--max-size", sweep_max, "size cap (field size for mat families)");
    sweep_cmd->add_option("--poly", sweep_poly, "polynomial DSL or 'parab'");
    sweep_cmd->add_option("-d,--dimension", sweep_d, "ambient dimension d");
    sweep_cmd->add_option("--out", sweep_out, "CSV output path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string verify_suite = "all", verify_out;
    std::uint64_t verify_seed = 7;
    bool verify_list = false;
    verify_cmd->add_option("--suite", verify_suite, "suite name or 'all'");
    verify_cmd->add_option("--seed", verify_seed, "seed for the randomized checks");
    verify_cmd->add_option("--out", verify_out, "JSONL output path");
    verify_cmd->add_flag("--list", verify_list, "list suite names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    rf::Budget budget = rf::Budget::from_env();
    if (budget_work > 0) budget.work = budget_work;
    if (force) {
        budget.work = UINT64_MAX;
        budget.mem = std::uint64_t{1} << 33;
    }

    try {
        if (*info_cmd) {
            rf::Ring ring(rf::parse_ring_spec(info_spec));
            std::cout << rf::ring_info_json(ring, budget).dump(2) << "\n";
            return 0;
        }

        if (*salem_cmd) {
            rf::Ring ring(rf::parse_ring_spec(salem_spec));
            rf::NcPolynomial f = resolve_poly(salem_poly, salem_d);
            rf::SalemReport report;
            if (!probe_list.empty()) {
                rf::FrequencySpace space(ring, salem_d);
                std::vector<rf::Frequency> probes;
                std::stringstream ss(probe_list);
                std::string token;
                while (std::getline(ss, token, ',')) {
                    std::uint64_t a = resolve_probe_token(ring, token);
                    probes.push_back(
                        space.trace_frequency(std::vector<std::uint64_t>(salem_d, a)));
                }
                report = rf::salem_lower_bound(f, salem_c, ring, salem_d, probes, budget, threads);
            } else {
                auto sc = rf::compute_salem(ring, salem_d, rf::VarietySpec::graph(f, salem_c),
                                            salem_method, budget);
                report = sc.report;
                if (auto out = open_out(spectrum_out)) rf::write_spectrum_csv(sc.spectrum, *out);
            }
            if (auto out = open_out(points_out)) {
                rf::VarietySpec v = rf::VarietySpec::graph(f, salem_c);
                rf::write_variety_csv(rf::variety_points(v, ring, salem_d, budget), v.to_string(),
                                      *out);
            }
            std::cout << rf::salem_report_json(report).dump(2) << "\n";
            return 0;
        }

        if (*sweep_cmd) {
            std::vector<rf::SweepRow> rows;
            for (const auto& target : sweep_family(sweep_family_name, sweep_max)) {
                rf::Ring ring(target.spec);
                rf::NcPolynomial f = resolve_poly(sweep_poly, sweep_d);
                rf::VarietySpec v = rf::VarietySpec::graph(f, 0);
                rf::SweepRow row;
                row.ring = ring.spec_string();
                row.size = ring.size();
                row.characteristic = ring.characteristic();
                row.d = sweep_d;
                row.variety = v.to_string();
                try {
                    auto sc = rf::compute_salem(ring, sweep_d, v, "auto", budget);
                    row.v_size = sc.report.size;
                    row.C = sc.report.C;
                    row.argmax = sc.report.argmax;
                    row.lower_bound = false;
                } catch (const rf::budget_error&) {
                    if (!target.matrix) throw;
                    // full spectrum out of reach: certified probe lower bound
                    rf::FrequencySpace space(ring, sweep_d);
                    std::uint64_t a = ring.matrix_unit(0, 0, ring.base_ring().one());
                    rf::SalemReport lb = rf::salem_lower_bound(
                        f, 0, ring, sweep_d,
                        {space.trace_frequency(std::vector<std::uint64_t>(sweep_d, a))}, budget,
                        threads);
                    row.v_size = lb.size;
                    row.C = lb.C;
                    row.argmax = lb.argmax;
                    row.lower_bound = true;
                }
                rows.push_back(std::move(row));
            }
            std::sort(rows.begin(), rows.end(), [](const rf::SweepRow& a, const rf::SweepRow& b) {
                if (a.size != b.size) return a.size < b.size;
                return a.ring < b.ring;
            });
            if (auto out = open_out(sweep_out))
                rf::write_sweep_csv(rows, *out);
            else
                rf::write_sweep_csv(rows, std::cout);
            return 0;
        }

        if (*verify_cmd) {
            if (verify_list) {
                for (const auto& n : rf::suite_names()) std::cout << n << "\n";
                return 0;
            }
            auto records = rf::run_suite(verify_suite, verify_seed, budget, threads);
            if (auto out = open_out(verify_out)) rf::write_check_jsonl(records, *out);
            rf::write_check_summary(records, std::cout);
            for (const auto& r : records)
                if (!r.skipped && !r.pass) return 1;
            return 0;
        }
    } catch (const rf::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << " (use --force or --budget)\n";
        return 3;
    } catch (const rf::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
