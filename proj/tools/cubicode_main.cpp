#include "cubicode/analysis.hpp"
#include "cubicode/gf2m.hpp"
#include "cubicode/gray.hpp"
#include "cubicode/ring.hpp"
#include "cubicode/trace_code.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using json = nlohmann::ordered_json;
using namespace cubicode;

struct RunConfig {
    int m = 0;
    std::string poly_hex; // optional override
    std::string method = "brute";
    std::string format = "json";
    int threads = 0; // 0 = resolve from env / hardware
    bool force = false;
    std::string out_path;
};

int resolve_threads(const RunConfig& cfg) {
    if (cfg.threads > 0)
        return cfg.threads;
    if (const char* env = std::getenv("CUBICODE_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0)
            return t;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

gf2m::FieldContext field_from(const RunConfig& cfg) {
    if (cfg.poly_hex.empty())
        return gf2m::make_field(cfg.m);
    const auto poly = static_cast<std::uint32_t>(std::stoul(cfg.poly_hex, nullptr, 16));
    return gf2m::make_field(cfg.m, poly);
}

json base_envelope(const ring::RingContext& ctx) {
    json j;
    j["m"] = ctx.m();
    j["parity"] = ctx.even() ? "even" : "odd";
    j["field_polynomial"] = gf2m::poly_hex(ctx.field.poly);
    j["ring_length"] = ring::unit_count(ctx.m());
    j["binary_length"] = 3 * ring::unit_count(ctx.m());
    j["dimension"] = 3 * ctx.m();
    return j;
}

json distribution_json(const trace_code::WeightDistribution& dist) {
    json arr = json::array();
    for (const auto& [w, f] : dist.entries)
        arr.push_back(json{{"weight", w}, {"frequency", f}});
    return arr;
}

void emit(const json& j, const RunConfig& cfg) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file)
            throw std::runtime_error("cannot open output path: " + cfg.out_path);
        os = &file;
    }
    if (cfg.format == "json") {
        *os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        *os << "weight,frequency\n";
        if (j.contains("distribution"))
            for (const auto& e : j["distribution"])
                *os << e["weight"] << "," << e["frequency"] << "\n";
    } else { // table
        if (j.contains("distribution")) {
            *os << "weight    frequency\n";
            for (const auto& e : j["distribution"]) {
                std::ostringstream line;
                line << e["weight"].get<std::uint64_t>();
                std::string w = line.str();
                w.resize(w.size() < 10 ? 10 : w.size() + 1, ' ');
                *os << w << e["frequency"].get<std::uint64_t>() << "\n";
            }
        }
        for (const auto& [key, val] : j.items()) {
            if (key == "distribution")
                continue;
            *os << key << ": " << val.dump() << "\n";
        }
    }
}

int cmd_info(const RunConfig& cfg) {
    const auto ctx = ring::make_ring(field_from(cfg));
    json j = base_envelope(ctx);
    const int m = ctx.m();
    std::ostringstream crt;
    if (ctx.even())
        crt << "F_{2^" << m << "}^3";
    else
        crt << "F_{2^" << m << "} (+) F_{4^" << m << "}";
    j["crt_type"] = crt.str();
    emit(j, cfg);
    return 0;
}

int cmd_weights(const RunConfig& cfg) {
    const auto ctx = ring::make_ring(field_from(cfg));
    json j = base_envelope(ctx);
    j["method"] = cfg.method;
    std::vector<std::string> flags;
    trace_code::WeightDistribution dist;
    if (cfg.method == "brute") {
        const auto spec = trace_code::make_code(ctx);
        dist = trace_code::brute_weight_distribution(spec, resolve_threads(cfg), cfg.force);
    } else {
        dist = trace_code::formula_weight_distribution(ctx);
    }
    if (trace_code::published_table_distribution(ctx).entries != dist.entries)
        flags.push_back("TableII-frequencies");
    j["distribution"] = distribution_json(dist);
    j["erratum_flags"] = flags;
    emit(j, cfg);
    return 0;
}

int cmd_griesmer(const RunConfig& cfg) {
    const auto ctx = ring::make_ring(field_from(cfg));
    json j = base_envelope(ctx);
    const auto dist = trace_code::formula_weight_distribution(ctx);
    analysis::GriesmerReport rep = analysis::griesmer_check(
        dist.n_binary(), dist.dimension, dist.min_nonzero_weight());
    if (!ctx.even() && ctx.m() > 1) {
        const auto closed = analysis::optimality_closed_form(ctx.m());
        if (closed.sum != rep.sum)
            return 1;
    }
    j["griesmer"] = json{{"sum", rep.sum}, {"optimal", rep.optimal}};
    emit(j, cfg);
    return 0;
}

int cmd_dual_distance(const RunConfig& cfg) {
    const auto ctx = ring::make_ring(field_from(cfg));
    const auto spec = trace_code::make_code(ctx);
    json j = base_envelope(ctx);
    const auto rep = analysis::dual_distance(spec);
    j["dual_lee_distance"] = rep.value;
    if (rep.witness) {
        j["witness"] = json{{"position_x", rep.witness->pos_x},
                            {"position_y", rep.witness->pos_y}};
    }
    emit(j, cfg);
    return 0;
}

int cmd_minimal(const RunConfig& cfg) {
    const auto ctx = ring::make_ring(field_from(cfg));
    json j = base_envelope(ctx);
    const auto dist = trace_code::formula_weight_distribution(ctx);
    const auto spec = trace_code::make_code(ctx);
    const bool exhaustive = ctx.m() <= 3;
    const auto rep = analysis::minimality(dist, exhaustive ? &spec : nullptr);
    j["w_min"] = rep.w_min;
    j["w_max"] = rep.w_max;
    j["bound_holds"] = rep.bound_holds;
    if (rep.exhaustive_all_minimal)
        j["all_minimal"] = *rep.exhaustive_all_minimal;
    emit(j, cfg);
    return 0;
}

int cmd_genmat(const RunConfig& cfg) {
    const auto ctx = ring::make_ring(field_from(cfg));
    const auto spec = trace_code::make_code(ctx);
    const auto mat = trace_code::generator_matrix(spec);
    if (cfg.out_path.empty())
        throw CLI::ValidationError("--out is required for genmat");
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output path: " + cfg.out_path);
    trace_code::write_genmat(file, mat, ctx.m(), ctx.field.poly, spec.n());
    std::cout << "rank " << trace_code::rank_gf2(mat) << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const auto ctx = ring::make_ring(field_from(cfg));
    const auto spec = trace_code::make_code(ctx);
    json j = base_envelope(ctx);
    j["method"] = "brute";

    const auto report =
        trace_code::verify_distribution(spec, resolve_threads(cfg), cfg.force);
    std::vector<std::string> flags = report.erratum_flags;
    j["distribution"] = distribution_json(report.brute);

    const auto mat = trace_code::generator_matrix(spec);
    const int rank = trace_code::rank_gf2(mat);
    if (rank != 3 * ctx.m()) {
        std::cerr << "verify: generator matrix rank " << rank << " != " << 3 * ctx.m()
                  << "\n";
        return 1;
    }

    const auto gr = analysis::griesmer_check(report.brute.n_binary(),
                                             report.brute.dimension,
                                             report.brute.min_nonzero_weight());
    if (!ctx.even() && ctx.m() > 1) {
        const auto closed = analysis::optimality_closed_form(ctx.m());
        if (closed.sum != gr.sum || closed.optimal != gr.optimal)
            return 1;
    }
    j["griesmer"] = json{{"sum", gr.sum}, {"optimal", gr.optimal}};

    const auto dual = analysis::dual_distance(spec);
    j["dual_lee_distance"] = dual.value;
    if (ctx.m() > 1 && dual.value != 2)
        return 1;

    const bool exhaustive = ctx.m() <= 3;
    const auto min_rep = analysis::minimality(report.brute, exhaustive ? &spec : nullptr);
    const bool all_minimal = min_rep.exhaustive_all_minimal
                                 ? *min_rep.exhaustive_all_minimal
                                 : min_rep.bound_holds;
    // exhaustion may only disagree with the bound in the safe direction
    if (min_rep.bound_holds && min_rep.exhaustive_all_minimal &&
        !*min_rep.exhaustive_all_minimal)
        return 1;
    j["all_minimal"] = all_minimal;

    if (ctx.even()) {
        // the printed margin in the even-m minimality proof does not match
        // 2*w_min - w_max computed from the actual weights
        const int m = ctx.m();
        const auto p = [](int e) { return std::uint64_t(1) << e; };
        const std::uint64_t printed = 3 * (p(3 * m - 1) - p(2 * m) + 3 * p(m - 1));
        const std::uint64_t actual = 2 * min_rep.w_min - min_rep.w_max;
        if (printed != actual)
            flags.push_back("Prop3.7-margin");
    }

    if (all_minimal && dual.value >= 2)
        j["sss_class"] = analysis::to_string(analysis::sss_classify(dual.value));

    j["erratum_flags"] = flags;
    emit(j, cfg);

    static const std::vector<std::string> allowlist = {"TableII-frequencies",
                                                       "Prop3.7-margin"};
    for (const auto& f : flags) {
        if (std::find(allowlist.begin(), allowlist.end(), f) == allowlist.end())
            return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace codes over F2+vF2+v^2F2 (v^3=1): construction and "
                 "verification of their Gray-image weight data"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string command;
    for (const char* name :
         {"info", "weights", "verify", "griesmer", "dual-distance", "minimal", "genmat"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--m", cfg.m, "extension degree m")->required();
        sub->add_option("--poly", cfg.poly_hex, "reduction polynomial (hex bitmask)");
        sub->add_option("--method", cfg.method, "brute|formula")
            ->check(CLI::IsMember({"brute", "formula"}));
        sub->add_option("--format", cfg.format, "json|csv|table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--threads", cfg.threads, "worker count");
        sub->add_flag("--force", cfg.force, "override resource guards");
        sub->add_option("--out", cfg.out_path, "output path");
        sub->callback([&command, name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (command == "info")
            return cmd_info(cfg);
        if (command == "weights")
            return cmd_weights(cfg);
        if (command == "verify")
            return cmd_verify(cfg);
        if (command == "griesmer")
            return cmd_griesmer(cfg);
        if (command == "dual-distance")
            return cmd_dual_distance(cfg);
        if (command == "minimal")
            return cmd_minimal(cfg);
        if (command == "genmat")
            return cmd_genmat(cfg);
        return 2;
    } catch (const trace_code::ResourceGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
}
