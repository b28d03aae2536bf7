#include "qshor/registry.hpp"

#include <numeric>
#include <stdexcept>

#include "qshor/arith_blocks.hpp"
#include "qshor/mod_blocks.hpp"
#include "qshor/numeric.hpp"
#include "qshor/simulate.hpp"

namespace qshor {

namespace {

std::uint64_t pow2(int w) { return std::uint64_t{1} << w; }

ValueMap with(ValueMap m, const std::string& k, std::uint64_t v) {
    m[k] = v;
    return m;
}

std::vector<ValueMap> cross(const std::vector<std::pair<std::string, std::uint64_t>>& dims) {
    // dims: (name, exclusive bound) pairs; full cartesian product.
    std::vector<ValueMap> out{{}};
    for (const auto& [name, bound] : dims) {
        std::vector<ValueMap> next;
        for (const auto& m : out)
            for (std::uint64_t v = 0; v < bound; ++v) next.push_back(with(m, name, v));
        out = std::move(next);
    }
    return out;
}

// Enumerates (extra..., A-like values < N, N < 2^(w-1)) input sets shared by
// the modular blocks.
std::vector<ValueMap> mod_domain(int w, bool with_b, bool with_x, bool odd_n_only = false) {
    std::vector<ValueMap> out;
    for (std::uint64_t N = 1; N < pow2(w - 1); ++N) {
        if (odd_n_only && N % 2 == 0) continue;
        for (std::uint64_t A = 0; A < N; ++A) {
            ValueMap base{{"A", A}, {"N", N}};
            std::vector<ValueMap> items{base};
            if (with_b) {
                items.clear();
                for (std::uint64_t B = 0; B < N; ++B) items.push_back(with(base, "B", B));
            }
            for (const auto& m : items) {
                if (with_x) {
                    out.push_back(with(m, "x", 0));
                    out.push_back(with(m, "x", 1));
                } else {
                    out.push_back(m);
                }
            }
        }
    }
    return out;
}

std::string check_fits(const ValueMap& inputs, const std::string& name, std::uint64_t bound,
                       const std::string& what) {
    auto it = inputs.find(name);
    if (it != inputs.end() && it->second >= bound) return what;
    return "";
}

std::vector<BlockInfo> make_registry() {
    std::vector<BlockInfo> blocks;

    auto add = [&](BlockInfo b) { blocks.push_back(std::move(b)); };

    auto width_fits = [](const BlockParams& p, const ValueMap& in,
                         std::initializer_list<const char*> regs) -> std::string {
        for (const char* r : regs) {
            auto it = in.find(r);
            if (it != in.end() && (p.w >= 64 ? false : it->second >= pow2(p.w)))
                return std::string(r) + " must fit in " + std::to_string(p.w) + " bits";
        }
        for (const auto& [k, v] : in)
            if (k == "x" || k == "y")
                if (v > 1) return k + " must be 0 or 1";
        return "";
    };

    add({"adder", 1, false, {"A", "B"}, {"A", "B", "cout"},
         [](const BlockParams& p) { return build_adder(p.w, true); },
         [width_fits](const BlockParams& p, const ValueMap& in) {
             return width_fits(p, in, {"A", "B"});
         },
         [](const BlockParams& p, const ValueMap& in) -> ValueMap {
             std::uint64_t s = in.at("A") + in.at("B");
             return {{"A", in.at("A")}, {"B", s % pow2(p.w)}, {"cout", s >> p.w}};
         },
         [](const BlockParams& p) {
             return cross({{"A", pow2(p.w)}, {"B", pow2(p.w)}});
         }});

    add({"ctrl_adder", 1, false, {"A", "B", "x"}, {"A", "B"},
         [](const BlockParams& p) { return build_ctrl_adder(p.w, false); },
         [width_fits](const BlockParams& p, const ValueMap& in) {
             return width_fits(p, in, {"A", "B"});
         },
         [](const BlockParams& p, const ValueMap& in) -> ValueMap {
             std::uint64_t s = in.at("B") + in.at("A") * in.at("x");
             return {{"A", in.at("A")}, {"B", s % pow2(p.w)}};
         },
         [](const BlockParams& p) {
             return cross({{"A", pow2(p.w)}, {"B", pow2(p.w)}, {"x", 2}});
         }});

    add({"inc", 1, false, {"B"}, {"B", "anc"},
         [](const BlockParams& p) { return build_increment(p.w); },
         [width_fits](const BlockParams& p, const ValueMap& in) {
             return width_fits(p, in, {"B"});
         },
         [](const BlockParams& p, const ValueMap& in) -> ValueMap {
             return {{"B", (in.at("B") + 1) % pow2(p.w)}, {"anc", 0}};
         },
         [](const BlockParams& p) { return cross({{"B", pow2(p.w)}}); }});

    add({"dec", 1, false, {"B"}, {"B", "anc"},
         [](const BlockParams& p) { return build_decrement(p.w); },
         [width_fits](const BlockParams& p, const ValueMap& in) {
             return width_fits(p, in, {"B"});
         },
         [](const BlockParams& p, const ValueMap& in) -> ValueMap {
             return {{"B", (in.at("B") + pow2(p.w) - 1) % pow2(p.w)}, {"anc", 0}};
         },
         [](const BlockParams& p) { return cross({{"B", pow2(p.w)}}); }});

    add({"sub", 1, false, {"A", "B"}, {"A", "B", "anc"},
         [](const BlockParams& p) { return build_subtractor(p.w); },
         [width_fits](const BlockParams& p, const ValueMap& in) {
             return width_fits(p, in, {"A", "B"});
         },
         [](const BlockParams& p, const ValueMap& in) -> ValueMap {
             std::uint64_t d = (in.at("A") + pow2(p.w) - in.at("B")) % pow2(p.w);
             return {{"A", d}, {"B", in.at("B")}, {"anc", 0}};
         },
         [](const BlockParams& p) {
             return cross({{"A", pow2(p.w)}, {"B", pow2(p.w)}});
         }});

    add({"ctrl_sub", 1, false, {"A", "B", "x"}, {"A", "B", "anc"},
         [](const BlockParams& p) { return build_ctrl_subtractor(p.w); },
         [width_fits](const BlockParams& p, const ValueMap& in) {
             return width_fits(p, in, {"A", "B"});
         },
         [](const BlockParams& p, const ValueMap& in) -> ValueMap {
             std::uint64_t d =
                 (in.at("A") + pow2(p.w) - in.at("B") * in.at("x")) % pow2(p.w);
             return {{"A", d}, {"B", in.at("B")}, {"anc", 0}};
         },
         [](const BlockParams& p) {
             return cross({{"A", pow2(p.w)}, {"B", pow2(p.w)}, {"x", 2}});
         }});

    add({"cmb", 1, false, {"A", "B"}, {"A", "B", "flag"},
         [](const BlockParams& p) { return build_cmb(p.w); },
         [width_fits](const BlockParams& p, const ValueMap& in) {
             return width_fits(p, in, {"A", "B"});
         },
         [](const BlockParams& p, const ValueMap& in) -> ValueMap {
             return {{"A", in.at("A")},
                     {"B", in.at("B")},
                     {"flag", (in.at("A") + in.at("B")) >> p.w}};
         },
         [](const BlockParams& p) {
             return cross({{"A", pow2(p.w)}, {"B", pow2(p.w)}});
         }});

    add({"geq", 1, false, {"A", "B"}, {"A", "B", "flag"},
         [](const BlockParams& p) { return build_geq(p.w); },
         [](const BlockParams& p, const ValueMap& in) -> std::string {
             std::uint64_t bound = p.w >= 2 ? pow2(p.w - 1) : 2;
             std::string e = check_fits(in, "A", bound,
                                        "operands must be below 2^(w-1) for geq");
             if (e.empty())
                 e = check_fits(in, "B", bound, "operands must be below 2^(w-1) for geq");
             return e;
         },
         [](const BlockParams&, const ValueMap& in) -> ValueMap {
             return {{"A", in.at("A")},
                     {"B", in.at("B")},
                     {"flag", in.at("A") >= in.at("B") ? 1u : 0u}};
         },
         [](const BlockParams& p) {
             std::uint64_t bound = p.w >= 2 ? pow2(p.w - 1) : 2;
             return cross({{"A", bound}, {"B", bound}});
         }});

    add({"double", 2, false, {"A"}, {"A"},
         [](const BlockParams& p) { return build_double(p.w); },
         [](const BlockParams& p, const ValueMap& in) {
             return check_fits(in, "A", pow2(p.w - 1),
                               "value must be below 2^(w-1) for double");
         },
         [](const BlockParams&, const ValueMap& in) -> ValueMap {
             return {{"A", 2 * in.at("A")}};
         },
         [](const BlockParams& p) { return cross({{"A", pow2(p.w - 1)}}); }});

    add({"ctrl_double", 2, false, {"A", "x"}, {"A"},
         [](const BlockParams& p) { return build_ctrl_double(p.w); },
         [](const BlockParams& p, const ValueMap& in) {
             return check_fits(in, "A", pow2(p.w - 1),
                               "value must be below 2^(w-1) for ctrl_double");
         },
         [](const BlockParams&, const ValueMap& in) -> ValueMap {
             return {{"A", in.at("A") * (in.at("x") ? 2 : 1)}};
         },
         [](const BlockParams& p) { return cross({{"A", pow2(p.w - 1)}, {"x", 2}}); }});

    add({"mod_reduce", 2, false, {"A", "N"}, {"A", "N", "flag"},
         [](const BlockParams& p) { return build_mod_reduce(p.w); },
         [](const BlockParams& p, const ValueMap& in) -> std::string {
             if (in.at("N") == 0 || in.at("N") >= pow2(p.w - 1))
                 return "N must satisfy 0 < N < 2^(w-1) for mod_reduce";
             if (in.at("A") >= 2 * in.at("N")) return "A < 2N for mod_reduce";
             return "";
         },
         [](const BlockParams&, const ValueMap& in) -> ValueMap {
             return {{"A", in.at("A") % in.at("N")},
                     {"N", in.at("N")},
                     {"flag", in.at("A") >= in.at("N") ? 1u : 0u}};
         },
         [](const BlockParams& p) {
             std::vector<ValueMap> out;
             for (std::uint64_t N = 1; N < pow2(p.w - 1); ++N)
                 for (std::uint64_t A = 0; A < 2 * N; ++A)
                     out.push_back({{"A", A}, {"N", N}});
             return out;
         }});

    add({"mod_add", 2, false, {"A", "B", "N"}, {"A", "B", "N", "anc"},
         [](const BlockParams& p) { return build_mod_add(p.w); },
         [](const BlockParams& p, const ValueMap& in) -> std::string {
             if (in.at("N") == 0 || in.at("N") >= pow2(p.w - 1))
                 return "N must satisfy 0 < N < 2^(w-1) for mod_add";
             if (in.at("A") >= in.at("N") || in.at("B") >= in.at("N"))
                 return "operands must satisfy A, B < N for mod_add";
             return "";
         },
         [](const BlockParams&, const ValueMap& in) -> ValueMap {
             return {{"A", (in.at("A") + in.at("B")) % in.at("N")},
                     {"B", in.at("B")},
                     {"N", in.at("N")},
                     {"anc", 0}};
         },
         [](const BlockParams& p) { return mod_domain(p.w, true, false); }});

    add({"ctrl_mod_add", 2, false, {"A", "B", "N", "x"}, {"A", "B", "N", "anc"},
         [](const BlockParams& p) { return build_ctrl_mod_add(p.w); },
         [](const BlockParams& p, const ValueMap& in) -> std::string {
             if (in.at("N") == 0 || in.at("N") >= pow2(p.w - 1))
                 return "N must satisfy 0 < N < 2^(w-1) for ctrl_mod_add";
             if (in.at("A") >= in.at("N") || in.at("B") >= in.at("N"))
                 return "operands must satisfy A, B < N for ctrl_mod_add";
             return "";
         },
         [](const BlockParams&, const ValueMap& in) -> ValueMap {
             return {{"A", (in.at("A") + in.at("B") * in.at("x")) % in.at("N")},
                     {"B", in.at("B")},
                     {"N", in.at("N")},
                     {"anc", 0}};
         },
         [](const BlockParams& p) { return mod_domain(p.w, true, true); }});

    add({"mod_double", 2, false, {"A", "N"}, {"A", "N", "anc"},
         [](const BlockParams& p) { return build_mod_double(p.w); },
         [](const BlockParams& p, const ValueMap& in) -> std::string {
             if (in.at("N") == 0 || in.at("N") >= pow2(p.w - 1))
                 return "N must satisfy 0 < N < 2^(w-1) for mod_double";
             if (in.at("A") >= in.at("N")) return "A < N for mod_double";
             return "";
         },
         [](const BlockParams&, const ValueMap& in) -> ValueMap {
             return {{"A", 2 * in.at("A") % in.at("N")},
                     {"N", in.at("N")},
                     {"anc", 2 * in.at("A") >= in.at("N") ? 1u : 0u}};
         },
         [](const BlockParams& p) { return mod_domain(p.w, false, false); }});

    add({"ctrl_mod_double", 2, false, {"A", "N", "x"}, {"A", "N", "anc"},
         [](const BlockParams& p) { return build_ctrl_mod_double(p.w); },
         [](const BlockParams& p, const ValueMap& in) -> std::string {
             if (in.at("N") == 0 || in.at("N") >= pow2(p.w - 1))
                 return "N must satisfy 0 < N < 2^(w-1) for ctrl_mod_double";
             if (in.at("A") >= in.at("N")) return "A < N for ctrl_mod_double";
             return "";
         },
         [](const BlockParams&, const ValueMap& in) -> ValueMap {
             bool on = in.at("x") == 1;
             return {{"A", on ? 2 * in.at("A") % in.at("N") : in.at("A")},
                     {"N", in.at("N")},
                     {"anc", on && 2 * in.at("A") >= in.at("N") ? 1u : 0u}};
         },
         [](const BlockParams& p) { return mod_domain(p.w, false, true); }});

    add({"mul_mod_basic", 2, false, {"ACC", "A", "X", "N"}, {"ACC", "A", "X", "N", "W"},
         [](const BlockParams& p) { return build_mul_mod_basic(p.w); },
         [width_fits](const BlockParams& p, const ValueMap& in) -> std::string {
             if (in.at("N") == 0 || in.at("N") >= pow2(p.w - 1))
                 return "N must satisfy 0 < N < 2^(w-1) for mul_mod_basic";
             if (in.at("A") >= in.at("N")) return "multiplicand A < N for mul_mod_basic";
             if (in.count("ACC") && in.at("ACC") >= in.at("N"))
                 return "accumulator must start below N for mul_mod_basic";
             return width_fits(p, in, {"X"});
         },
         [](const BlockParams& p, const ValueMap& in) -> ValueMap {
             std::uint64_t acc = in.count("ACC") ? in.at("ACC") : 0;
             return {{"ACC", (acc + in.at("A") * in.at("X")) % in.at("N")},
                     {"A", in.at("A") * pow2(p.w) % in.at("N")},
                     {"X", in.at("X")},
                     {"N", in.at("N")},
                     {"W", 0}};
         },
         [](const BlockParams& p) {
             std::vector<ValueMap> out;
             for (std::uint64_t N = 1; N < pow2(p.w - 1); ++N)
                 for (std::uint64_t A = 0; A < N; ++A)
                     for (std::uint64_t X = 0; X < pow2(p.w); ++X)
                         out.push_back({{"ACC", 0}, {"A", A}, {"X", X}, {"N", N}});
             return out;
         }});

    add({"ctrl_mul_mod_const", 2, true, {"X", "y"}, {"X", "S", "C", "W"},
         [](const BlockParams& p) { return build_ctrl_mul_mod_const(p.w, *p.A, *p.N); },
         [](const BlockParams& p, const ValueMap& in) -> std::string {
             if (in.at("X") >= *p.N) return "X < N for ctrl_mul_mod_const";
             if (in.at("y") > 1) return "y must be 0 or 1";
             (void)p;
             return "";
         },
         [](const BlockParams& p, const ValueMap& in) -> ValueMap {
             std::uint64_t x = in.at("X");
             return {{"X", in.at("y") ? (*p.A % *p.N) * x % *p.N : x},
                     {"S", 0},
                     {"C", 0},
                     {"W", 0}};
         },
         [](const BlockParams& p) {
             std::vector<ValueMap> out;
             for (std::uint64_t X = 0; X < *p.N; ++X) {
                 out.push_back({{"X", X}, {"y", 0}});
                 out.push_back({{"X", X}, {"y", 1}});
             }
             return out;
         }});

    return blocks;
}

}  // namespace

const std::vector<BlockInfo>& block_registry() {
    static const std::vector<BlockInfo> registry = make_registry();
    return registry;
}

const BlockInfo* find_block(const std::string& name) {
    for (const auto& b : block_registry())
        if (b.name == name) return &b;
    return nullptr;
}

ValueMap run_block(const BlockInfo& info, const BlockParams& params, const ValueMap& inputs) {
    for (const auto& [k, v] : inputs) {
        (void)v;
        bool known = false;
        for (const auto& name : info.inputs)
            if (name == k) known = true;
        if (!known)
            throw std::invalid_argument("block " + info.name + " has no input register " + k);
    }
    ValueMap full = inputs;
    for (const auto& name : info.inputs)
        if (!full.count(name)) full[name] = 0;
    std::string violation = info.validate(params, full);
    if (!violation.empty()) throw std::invalid_argument(violation);

    Circuit circ = info.build(params);
    BasisState s(circ.width());
    for (const auto& name : info.inputs) {
        const Register* r = circ.find_register(name);
        if (!r) throw std::logic_error("block register missing: " + name);
        s.write(*r, full.at(name));
    }
    // Blocks parameterized by a classical modulus expect the N register
    // preloaded with it even though it is not a user-settable input.
    if (info.needs_constants && !full.count("N"))
        if (const Register* r = circ.find_register("N")) s.write(*r, *params.N);
    s = apply_classical(circ, s);
    ValueMap out;
    for (const auto& name : info.outputs) {
        const Register* r = circ.find_register(name);
        if (!r) throw std::logic_error("block register missing: " + name);
        out[name] = s.read(*r);
    }
    return out;
}

}  // namespace qshor
