#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qshor/driver.hpp"
#include "qshor/netlist.hpp"
#include "qshor/numeric.hpp"
#include "qshor/period.hpp"
#include "qshor/pipeline.hpp"
#include "qshor/registry.hpp"

using json = nlohmann::json;
using namespace qshor;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitMismatch = 4;
constexpr std::uint64_t kMaxN = 1u << 16;
constexpr int kMaxWidth = 20;
constexpr int kMaxExhaustiveWidth = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file " + path);
    out << text;
}

void check_w(int w, int min_w) {
    if (w < min_w || w > kMaxWidth)
        throw UsageError("width must be in [" + std::to_string(min_w) + ", " +
                         std::to_string(kMaxWidth) + "]");
}

ShorParams make_params(std::uint64_t N, std::uint64_t A, int exp_bits) {
    if (N >= kMaxN) throw UsageError("N must be below 2^16");
    try {
        return ShorParams::make(N, A, exp_bits);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

ValueMap parse_inputs(const std::vector<std::string>& assignments) {
    ValueMap m;
    for (const auto& s : assignments) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("inputs must be NAME=VALUE, got '" + s + "'");
        std::string name = s.substr(0, eq), val = s.substr(eq + 1);
        try {
            std::size_t pos = 0;
            std::uint64_t v = std::stoull(val, &pos, 10);
            if (pos != val.size()) throw std::invalid_argument(val);
            m[name] = v;
        } catch (const std::exception&) {
            throw UsageError("input value for " + name + " must be a decimal integer");
        }
    }
    return m;
}

BlockParams block_params(const BlockInfo& info, int w, std::optional<std::uint64_t> N,
                         std::optional<std::uint64_t> A) {
    check_w(w, info.min_width);
    BlockParams p{w, N, A};
    if (info.needs_constants) {
        if (!N || !A) throw UsageError("block " + info.name + " needs --N and --A");
        if (*N >= kMaxN) throw UsageError("N must be below 2^16");
    }
    return p;
}

Circuit build_named(const std::string& block, int w, std::optional<std::uint64_t> N,
                    std::optional<std::uint64_t> A, int exp_bits) {
    if (block == "hadamard") {
        check_w(w, 1);
        return build_hadamard_layer(w);
    }
    if (block == "iqft") {
        check_w(w, 1);
        return build_inverse_qft(w);
    }
    if (block == "modexp") {
        if (!N || !A) throw UsageError("modexp needs --N and --A");
        return build_modexp_const(make_params(*N, *A, exp_bits)).first;
    }
    const BlockInfo* info = find_block(block);
    if (!info) throw UsageError("unknown block '" + block + "'");
    try {
        return info->build(block_params(*info, w, N, A));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string pipeline_netlist(const ShorParams& p) {
    PipelineParts parts = build_pipeline(p);
    std::ostringstream os;
    os << "qnet 1 " << parts.layout.width << "\n";
    for (const auto& r : parts.modexp.registers()) {
        os << "reg " << r.name;
        for (int wv : r.wires) os << ' ' << wv;
        os << "\n";
    }
    os << "# hadamard layer on the exponent register\n";
    for (const auto& g : parts.hadamard.gates()) os << gate_line(g) << "\n";
    os << "# modular exponentiation\n";
    for (const auto& g : parts.modexp.gates()) os << gate_line(g) << "\n";
    os << "# measure P (function register)\n";
    os << "# inverse quantum Fourier transform on the exponent register\n";
    for (const auto& g : parts.iqft.gates()) os << gate_line(g) << "\n";
    os << "# measure Y (exponent register)\n";
    return os.str();
}

json resources_entry(const std::string& block, int size, const Circuit& c) {
    ResourceReport rep = c.resources();
    json counts = json::object();
    for (const auto& [k, v] : rep.counts) counts[k] = v;
    return {{"block", block}, {"n", size},     {"width", c.width()},
            {"counts", counts}, {"total", rep.total}, {"depth", rep.depth}};
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("range must be K or K..L, got '" + text + "'");
    }
}

double loglog_slope(const std::vector<std::pair<double, double>>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double n = static_cast<double>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string verdict_name(PeriodRunRecord::Verdict v) {
    switch (v) {
        case PeriodRunRecord::Verdict::PeriodFound: return "period_found";
        case PeriodRunRecord::Verdict::Uninformative: return "uninformative";
        default: return "no_period";
    }
}

int cmd_build(const std::string& block, int w, std::optional<std::uint64_t> N,
              std::optional<std::uint64_t> A, int exp_bits, const std::string& out) {
    std::string text;
    if (block == "pipeline") {
        if (!N || !A) throw UsageError("pipeline needs --N and --A");
        text = pipeline_netlist(make_params(*N, *A, exp_bits));
    } else {
        text = to_netlist(build_named(block, w, N, A, exp_bits));
    }
    write_output(out, text);
    return 0;
}

int cmd_run(const std::string& block, int w, std::optional<std::uint64_t> N,
            std::optional<std::uint64_t> A, const std::vector<std::string>& assignments,
            bool as_json) {
    const BlockInfo* info = find_block(block);
    if (!info) throw UsageError("unknown block '" + block + "'");
    BlockParams params = block_params(*info, w, N, A);
    ValueMap inputs = parse_inputs(assignments);
    ValueMap out;
    try {
        out = run_block(*info, params, inputs);
    } catch (const std::invalid_argument& e) {
        throw PreconditionError(e.what());
    }
    if (as_json) {
        json j = json::object();
        for (const auto& name : info->outputs) j[name] = out.at(name);
        std::cout << j.dump() << "\n";
    } else {
        bool first = true;
        for (const auto& name : info->outputs) {
            std::cout << (first ? "" : " ") << name << "=" << out.at(name);
            first = false;
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& block, int w, std::optional<std::uint64_t> N,
               std::optional<std::uint64_t> A, bool exhaustive, int samples,
               std::uint64_t seed, bool as_json) {
    const BlockInfo* info = find_block(block);
    if (!info) throw UsageError("unknown block '" + block + "'");
    BlockParams params = block_params(*info, w, N, A);
    if (exhaustive && w > kMaxExhaustiveWidth)
        throw UsageError("exhaustive verification is limited to w <= " +
                         std::to_string(kMaxExhaustiveWidth));
    if (!exhaustive && samples <= 0)
        throw UsageError("choose --exhaustive or --samples K");

    std::vector<ValueMap> cases = info->enumerate(params);
    if (!exhaustive) {
        std::mt19937_64 rng(seed);
        std::vector<ValueMap> picked;
        for (int i = 0; i < samples; ++i) picked.push_back(cases[rng() % cases.size()]);
        cases = std::move(picked);
    }

    std::size_t checked = 0;
    for (const auto& in : cases) {
        ValueMap got = run_block(*info, params, in);
        ValueMap want = info->oracle(params, in);
        for (const auto& [k, v] : want) {
            if (got.count(k) && got.at(k) != v) {
                std::ostringstream os;
                os << "mismatch on " << block << " w=" << w << " inputs {";
                for (const auto& [ik, iv] : in) os << ' ' << ik << '=' << iv;
                os << " }: register " << k << " is " << got.at(k) << ", oracle says " << v;
                throw MismatchError(os.str());
            }
        }
        ++checked;
    }
    if (as_json) {
        std::cout << json{{"block", block}, {"w", w}, {"cases", checked}, {"pass", true}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "pass: " << checked << " cases\n";
    }
    return 0;
}

int cmd_resources(const std::string& block, const std::string& w_range,
                  const std::string& n_range, bool fit, bool as_json) {
    std::vector<json> rows;
    std::vector<std::pair<double, double>> pts;
    if (block == "modexp") {
        auto [lo, hi] = parse_range(n_range.empty() ? w_range : n_range);
        if (lo < 2) throw UsageError("modexp sizes start at n=2");
        for (int n = lo; n <= hi; ++n) {
            // Representative worst-case modulus of each bit length.
            std::uint64_t N = (std::uint64_t{1} << n) - 1;
            auto params = make_params(N, 2, 0);
            auto [c, lay] = build_modexp_const(params);
            rows.push_back(resources_entry(block, n, c));
            pts.emplace_back(n, static_cast<double>(c.gates().size()));
        }
    } else {
        if (w_range.empty() && n_range.empty())
            throw UsageError("resources needs --w or --n");
        auto [lo, hi] = parse_range(w_range.empty() ? n_range : w_range);
        for (int w = lo; w <= hi; ++w) {
            Circuit c = build_named(block, w, std::nullopt, std::nullopt, 0);
            rows.push_back(resources_entry(block, w, c));
            pts.emplace_back(w, static_cast<double>(c.gates().size()));
        }
    }
    std::optional<double> slope;
    if (fit) {
        if (pts.size() < 2) throw UsageError("--fit needs a range of at least two sizes");
        slope = loglog_slope(pts);
    }
    if (as_json) {
        json j{{"block", block}, {"sizes", rows}};
        if (slope) j["slope"] = *slope;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& r : rows) {
            std::cout << "block=" << block << " n=" << r["n"] << " width=" << r["width"]
                      << " total=" << r["total"] << " depth=" << r["depth"] << " counts=";
            bool first = true;
            for (auto it = r["counts"].begin(); it != r["counts"].end(); ++it) {
                std::cout << (first ? "" : ",") << it.key() << ":"
                          << it.value().get<std::size_t>();
                first = false;
            }
            std::cout << "\n";
        }
        if (slope) std::cout << "slope=" << *slope << "\n";
    }
    return 0;
}

int cmd_period(std::uint64_t N, std::uint64_t A, std::uint64_t seed, int shots,
               int exp_bits, bool as_json) {
    auto params = make_params(N, A, exp_bits);
    if (params.exp_bits > kMaxWidth) throw UsageError("exponent register too wide");
    std::mt19937_64 rng(seed);
    std::map<std::uint64_t, int> histogram;
    std::vector<PeriodRunRecord> records;
    for (int i = 0; i < shots; ++i) {
        records.push_back(sample_period(params, rng()));
        ++histogram[records.back().outcome];
    }
    if (as_json) {
        json recs = json::array();
        for (const auto& r : records) {
            json rec{{"seed", r.seed},
                     {"value", r.sampled_value},
                     {"preimage", r.preimage_size},
                     {"outcome", r.outcome},
                     {"verdict", verdict_name(r.verdict)}};
            if (r.period) rec["period"] = *r.period;
            recs.push_back(rec);
        }
        json hist = json::object();
        for (const auto& [k, v] : histogram) hist[std::to_string(k)] = v;
        std::cout << json{{"N", N},
                          {"A", A},
                          {"exp_bits", params.exp_bits},
                          {"seed", seed},
                          {"shots", shots},
                          {"histogram", hist},
                          {"records", recs}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& r : records) {
            std::cout << "value=" << r.sampled_value << " outcome=" << r.outcome
                      << " verdict=" << verdict_name(r.verdict);
            if (r.period) std::cout << " period=" << *r.period;
            std::cout << "\n";
        }
        std::cout << "histogram:";
        for (const auto& [k, v] : histogram) std::cout << " " << k << ":" << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_factor(std::uint64_t N, std::uint64_t seed, int attempts, bool as_json) {
    if (N < 2 || N >= kMaxN) throw UsageError("N must satisfy 2 <= N < 2^16");
    FactorResult res = factor(N, attempts, seed);
    if (as_json) {
        json j{{"N", N},
               {"A", res.base},
               {"attempts", res.attempts.size()},
               {"seed", seed}};
        j["factors"] = json::array();
        if (res.factors) {
            j["factors"].push_back(res.factors->first);
            j["factors"].push_back(res.factors->second);
        }
        if (res.period) j["r"] = *res.period;
        else j["r"] = nullptr;
        std::cout << j.dump() << "\n";
    } else {
        if (res.factors) {
            std::cout << res.factors->first << " x " << res.factors->second << "\n";
        } else if (is_prime(N)) {
            std::cout << "rejected: " << N << " is prime\n";
        } else {
            std::cout << "no factors found after " << res.attempts.size() << " attempts\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reversible-circuit synthesis and simulation for period finding"};
    app.require_subcommand(1);

    std::string block, out_path, w_range, n_range;
    std::vector<std::string> assignments;
    int w = 4, shots = 1, attempts = 25, samples = 0, exp_bits = 0;
    std::uint64_t seed = 0, N_pos = 0, A_pos = 0;
    std::optional<std::uint64_t> N_opt, A_opt;
    bool exhaustive = false, fit = false, as_json = false;

    auto add_common = [&](CLI::App* sub, bool with_json = true) {
        if (with_json) sub->add_flag("--json", as_json, "structured JSON output");
    };

    auto* b = app.add_subcommand("build", "synthesize a block and emit its netlist");
    b->add_option("block", block)->required();
    b->add_option("--w", w, "register width");
    b->add_option("--N", N_opt, "modulus");
    b->add_option("--A", A_opt, "base / multiplicand");
    b->add_option("--exp-bits", exp_bits, "exponent register width override");
    b->add_option("-o", out_path, "output file (default stdout)");

    auto* r = app.add_subcommand("run", "simulate a block on given register values");
    r->add_option("block", block)->required();
    r->add_option("--w", w, "register width");
    r->add_option("--N", N_opt, "modulus");
    r->add_option("--A", A_opt, "multiplicand");
    r->add_option("inputs", assignments, "NAME=VALUE register assignments");
    add_common(r);

    auto* v = app.add_subcommand("verify", "compare a block against its integer oracle");
    v->add_option("block", block)->required();
    v->add_option("--w", w, "register width");
    v->add_option("--N", N_opt, "modulus");
    v->add_option("--A", A_opt, "multiplicand");
    v->add_flag("--exhaustive", exhaustive, "sweep the whole valid domain");
    v->add_option("--samples", samples, "number of random cases");
    v->add_option("--seed", seed, "sampling seed");
    add_common(v);

    auto* res = app.add_subcommand("resources", "gate counts, width, and depth");
    res->add_option("block", block)->required();
    res->add_option("--w", w_range, "width or width range K..L");
    res->add_option("--n", n_range, "size or size range K..L");
    res->add_flag("--fit", fit, "least-squares log-log slope of total gates");
    add_common(res);

    auto* per = app.add_subcommand("period", "sample the period-finding pipeline");
    per->add_option("N", N_pos)->required();
    per->add_option("A", A_pos)->required();
    per->add_option("--seed", seed, "RNG seed");
    per->add_option("--shots", shots, "number of samples");
    per->add_option("--exp-bits", exp_bits, "exponent register width override");
    add_common(per);

    auto* f = app.add_subcommand("factor", "full factoring loop");
    f->add_option("N", N_pos)->required();
    f->add_option("--seed", seed, "RNG seed");
    f->add_option("--attempts", attempts, "attempt budget");
    add_common(f);

    CLI11_PARSE(app, argc, argv);

    try {
        if (b->parsed()) return cmd_build(block, w, N_opt, A_opt, exp_bits, out_path);
        if (r->parsed()) return cmd_run(block, w, N_opt, A_opt, assignments, as_json);
        if (v->parsed())
            return cmd_verify(block, w, N_opt, A_opt, exhaustive, samples, seed, as_json);
        if (res->parsed()) return cmd_resources(block, w_range, n_range, fit, as_json);
        if (per->parsed())
            return cmd_period(N_pos, A_pos, seed, shots, exp_bits, as_json);
        if (f->parsed()) return cmd_factor(N_pos, seed, attempts, as_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const MismatchError& e) {
        std::cerr << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
