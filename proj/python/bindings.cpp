#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qshor/arith_blocks.hpp"
#include "qshor/driver.hpp"
#include "qshor/mod_blocks.hpp"
#include "qshor/netlist.hpp"
#include "qshor/period.hpp"
#include "qshor/pipeline.hpp"
#include "qshor/registry.hpp"
#include "qshor/simulate.hpp"

namespace py = pybind11;
using namespace qshor;
using u64 = std::uint64_t;

namespace {

// Bit-level simulation keyed by register names; unnamed wires start at 0 and
// every named register is reported back.
py::dict simulate_registers(const Circuit& c, const std::map<std::string, u64>& inputs) {
    BasisState s(c.width());
    for (const auto& [name, value] : inputs) {
        const Register* r = c.find_register(name);
        if (!r) throw std::invalid_argument("no register named " + name);
        s.write(*r, value);
    }
    s = apply_classical(c, s);
    py::dict out;
    for (const auto& r : c.registers()) out[py::str(r.name)] = s.read(r);
    return out;
}

py::dict resources_dict(const Circuit& c) {
    ResourceReport r = c.resources();
    py::dict counts;
    for (const auto& [k, v] : r.counts) counts[py::str(k)] = v;
    py::dict out;
    out["counts"] = counts;
    out["total"] = r.total;
    out["depth"] = r.depth;
    out["width"] = c.width();
    return out;
}

py::dict layout_dict(const ModexpLayout& lay) {
    py::dict d;
    d["S"] = lay.S;
    d["P"] = lay.P;
    d["N"] = lay.N;
    d["C"] = lay.C;
    d["W"] = lay.W;
    d["Y"] = lay.Y;
    d["width"] = lay.width;
    d["stage_constants"] = lay.stage_constants;
    d["final_constant"] = lay.final_constant;
    return d;
}

py::dict record_dict(const PeriodRunRecord& r) {
    py::dict d;
    d["seed"] = r.seed;
    d["value"] = r.sampled_value;
    d["preimage_size"] = r.preimage_size;
    d["outcome"] = r.outcome;
    d["convergents"] = r.convergents;
    d["period"] = r.period;
    const char* verdict = r.verdict == PeriodRunRecord::Verdict::PeriodFound ? "period_found"
                          : r.verdict == PeriodRunRecord::Verdict::Uninformative
                              ? "uninformative"
                              : "no_period";
    d["verdict"] = verdict;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reversible-circuit synthesis and simulation for Shor's algorithm";

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("width", &Circuit::width)
        .def("__len__", [](const Circuit& c) { return c.gates().size(); })
        .def("inverted", &Circuit::inverted)
        .def("resources", &resources_dict)
        .def("netlist", [](const Circuit& c) { return to_netlist(c); })
        .def("registers",
             [](const Circuit& c) {
                 py::dict d;
                 for (const auto& r : c.registers()) d[py::str(r.name)] = r.wires;
                 return d;
             })
        .def("simulate", &simulate_registers, py::arg("inputs") = std::map<std::string, u64>{});

    m.def("compose", &compose);
    m.def("parse_netlist", py::overload_cast<const std::string&>(&parse_netlist));

    m.def("build_adder", &build_adder, py::arg("w"), py::arg("with_carry") = false);
    m.def("build_ctrl_adder", &build_ctrl_adder, py::arg("w"), py::arg("with_carry") = false);
    m.def("build_increment", &build_increment, py::arg("w"));
    m.def("build_decrement", &build_decrement, py::arg("w"));
    m.def("build_subtractor", &build_subtractor, py::arg("w"));
    m.def("build_ctrl_subtractor", &build_ctrl_subtractor, py::arg("w"));
    m.def("build_cmb", &build_cmb, py::arg("w"));
    m.def("build_geq", &build_geq, py::arg("w"));
    m.def("build_double", &build_double, py::arg("w"));
    m.def("build_ctrl_double", &build_ctrl_double, py::arg("w"));
    m.def("build_mod_reduce", &build_mod_reduce, py::arg("w"));
    m.def("build_mod_add", &build_mod_add, py::arg("w"));
    m.def("build_ctrl_mod_add", &build_ctrl_mod_add, py::arg("w"));
    m.def("build_mod_double", &build_mod_double, py::arg("w"),
          py::arg("known_value") = std::nullopt, py::arg("known_modulus") = std::nullopt);
    m.def("build_ctrl_mod_double", &build_ctrl_mod_double, py::arg("w"),
          py::arg("known_value") = std::nullopt, py::arg("known_modulus") = std::nullopt);
    m.def("build_mul_mod_basic", &build_mul_mod_basic, py::arg("w"),
          py::arg("known_multiplicand") = std::nullopt, py::arg("known_modulus") = std::nullopt);
    m.def("build_ctrl_mul_mod_const", &build_ctrl_mul_mod_const, py::arg("w"), py::arg("a"),
          py::arg("N"));
    m.def("build_hadamard_layer", &build_hadamard_layer, py::arg("w"));
    m.def("build_inverse_qft", &build_inverse_qft, py::arg("w"));
    m.def(
        "build_modexp",
        [](u64 N, u64 A, int exp_bits) {
            auto [c, lay] = build_modexp_const(ShorParams::make(N, A, exp_bits));
            return py::make_tuple(c, layout_dict(lay));
        },
        py::arg("N"), py::arg("A"), py::arg("exp_bits") = 0);
    m.def("qubit_count_classical", &qubit_count_classical, py::arg("n"));
    m.def("unknown_A_qubit_formula", &unknown_A_qubit_formula, py::arg("n"));

    m.def(
        "evaluate_modexp_table",
        [](u64 N, u64 A, int exp_bits) {
            return evaluate_modexp_table(ShorParams::make(N, A, exp_bits));
        },
        py::arg("N"), py::arg("A"), py::arg("exp_bits") = 0);
    m.def(
        "outcome_distribution",
        [](u64 N, u64 A, int exp_bits) {
            return outcome_distribution(ShorParams::make(N, A, exp_bits));
        },
        py::arg("N"), py::arg("A"), py::arg("exp_bits") = 0);
    m.def(
        "continued_fraction",
        [](u64 outcome, u64 M, u64 N, u64 A) { return continued_fraction(outcome, M, N, A); },
        py::arg("outcome"), py::arg("M"), py::arg("N"), py::arg("A"));
    m.def(
        "sample_period",
        [](u64 N, u64 A, u64 seed, int exp_bits, bool crosscheck) {
            return record_dict(sample_period(ShorParams::make(N, A, exp_bits), seed, crosscheck));
        },
        py::arg("N"), py::arg("A"), py::arg("seed") = 0, py::arg("exp_bits") = 0,
        py::arg("crosscheck") = true);
    m.def(
        "factor",
        [](u64 N, int attempts, u64 seed) {
            FactorResult r = factor(N, attempts, seed);
            py::dict d;
            d["N"] = r.N;
            d["seed"] = r.seed;
            d["factors"] = r.factors;
            d["base"] = r.base;
            d["period"] = r.period;
            d["attempts"] = r.attempts.size();
            d["from_precheck"] = r.from_precheck;
            return d;
        },
        py::arg("N"), py::arg("attempts") = 25, py::arg("seed") = 0);

    m.def(
        "run_block",
        [](const std::string& name, int w, const std::map<std::string, u64>& inputs,
           std::optional<u64> N, std::optional<u64> A) {
            const BlockInfo* info = find_block(name);
            if (!info) throw std::invalid_argument("unknown block " + name);
            BlockParams p{w, N, A};
            py::dict out;
            for (const auto& [k, v] : run_block(*info, p, inputs)) out[py::str(k)] = v;
            return out;
        },
        py::arg("name"), py::arg("w"), py::arg("inputs") = std::map<std::string, u64>{},
        py::arg("N") = std::nullopt, py::arg("A") = std::nullopt);
    m.def("block_names", [] {
        std::vector<std::string> names;
        for (const auto& b : block_registry()) names.push_back(b.name);
        return names;
    });
}
