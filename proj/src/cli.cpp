#include "leamer/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "leamer/arithmetical.hpp"
#include "leamer/errors.hpp"
#include "leamer/factorization.hpp"
#include "leamer/invariants.hpp"
#include "leamer/leamer_monoid.hpp"
#include "leamer/numerical_monoid.hpp"
#include "leamer/rational.hpp"

namespace leamer {
namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Small parsing helpers
// ---------------------------------------------------------------------------

std::vector<int64_t> parse_int_list(const std::string& text,
                                    const std::string& what) {
    std::vector<int64_t> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            size_t used = 0;
            int64_t v = std::stoll(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(ErrorCode::InvalidArgument,
                 what + " must be a comma-separated list of integers, got '" +
                     text + "'");
        }
    }
    if (out.empty())
        fail(ErrorCode::InvalidArgument, what + " must not be empty");
    return out;
}

std::pair<int64_t, int64_t> parse_pair(const std::string& text,
                                       const std::string& what) {
    auto v = parse_int_list(text, what);
    if (v.size() != 2)
        fail(ErrorCode::InvalidArgument,
             what + " must have exactly two comma-separated integers, got '" +
                 text + "'");
    return {v[0], v[1]};
}

std::string element_str(const Element& e) {
    return "(" + std::to_string(e.x) + "," + std::to_string(e.n) + ")";
}

std::string join_lengths(const std::vector<int64_t>& values) {
    std::string out;
    for (int64_t v : values) {
        if (!out.empty()) out += " ";
        out += std::to_string(v);
    }
    return out.empty() ? "-" : out;
}

std::string factorization_str(const Factorization& f) {
    std::string out;
    for (const auto& [atom, mult] : f.parts) {
        if (!out.empty()) out += " + ";
        out += element_str(atom);
        if (mult > 1) out += "x" + std::to_string(mult);
    }
    return out.empty() ? "(empty)" : out;
}

// Shared --gens/--step option block; every monoid-consuming subcommand uses it.
struct MonoidArgs {
    std::string gens_text;
    int64_t step = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--gens", gens_text,
                        "Generators of the numerical monoid, e.g. 7,10")
            ->required();
        cmd->add_option("--step", step, "Step s of the Leamer monoid (s not in the monoid)")
            ->required();
    }

    LeamerMonoid build() const {
        auto gens = parse_int_list(gens_text, "--gens");
        return LeamerMonoid::make(NumericalMonoid::make(gens), step);
    }
};

// ---------------------------------------------------------------------------
// info
// ---------------------------------------------------------------------------

ordered_json element_json(const Element& e) {
    return ordered_json{{"x", e.x}, {"n", e.n}};
}

int cmd_info(const LeamerMonoid& s, bool as_json, std::ostream& out) {
    const auto& gamma = s.base();
    std::optional<Rational> slope;
    std::optional<Element> slope_witness;
    try {
        slope = slope_limit(s);
        slope_witness = slope_limit_witness(s);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NoFiniteColumns) throw;
    }
    auto nstar = n_star(s);
    auto lam = lambda(s);
    int64_t xb = x_bound(s);
    auto hw = s.hw_witness();

    if (as_json) {
        ordered_json j;
        j["generators"] = gamma.generators();
        j["step"] = s.step();
        j["frobenius"] = gamma.frobenius();
        j["x0"] = s.x0();
        j["xf"] = s.xf();
        j["nf"] = s.nf();
        j["atom_bound"] = s.atom_bound();
        j["hw_witness"] = hw ? element_json(*hw) : ordered_json(nullptr);
        if (slope)
            j["s_L"] = ordered_json{{"num", slope->numerator()},
                                    {"den", slope->denominator()}};
        else
            j["s_L"] = nullptr;
        j["n_star"] = ordered_json{
            {"value", nstar.value},
            {"witness", nstar.witness ? element_json(*nstar.witness)
                                      : ordered_json(nullptr)}};
        j["lambda"] = ordered_json{
            {"value", lam.value},
            {"witness", lam.witness ? element_json(*lam.witness)
                                    : ordered_json(nullptr)}};
        j["x_B"] = xb;
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "generators: ";
    bool first = true;
    for (int64_t g : gamma.generators()) {
        if (!first) out << " ";
        out << g;
        first = false;
    }
    out << "\n";
    out << "step: " << s.step() << "\n";
    out << "frobenius: " << gamma.frobenius() << "\n";
    out << "x0: " << s.x0() << "\n";
    out << "xf: " << s.xf() << "\n";
    out << "nf: " << s.nf() << "\n";
    out << "atom_bound: " << s.atom_bound() << "\n";
    out << "hw_witness: " << (hw ? element_str(*hw) : "(none)") << "\n";
    if (slope)
        out << "s_L: " << to_string(*slope) << " at "
            << element_str(*slope_witness) << "\n";
    else
        out << "s_L: none (all columns infinite)\n";
    if (nstar.witness)
        out << "n_star: " << nstar.value << " at " << element_str(*nstar.witness)
            << "\n";
    else
        out << "n_star: " << nstar.value << " (no witness)\n";
    if (lam.witness)
        out << "lambda: " << lam.value << " at " << element_str(*lam.witness)
            << "\n";
    else
        out << "lambda: " << lam.value << " (no witness)\n";
    out << "x_B: " << xb << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// columns / atoms
// ---------------------------------------------------------------------------

int cmd_columns(const LeamerMonoid& s, int64_t from, int64_t to,
                std::ostream& out) {
    if (from < 1)
        fail(ErrorCode::InvalidArgument, "--from must be at least 1");
    if (to < from)
        fail(ErrorCode::InvalidArgument, "--to must be at least --from");
    out << "x\theight\tclass\tmin_atom\n";
    for (int64_t x = from; x <= to; ++x) {
        auto col = s.column(x);
        if (!col) continue;
        out << x << "\t";
        if (col->height.is_infinite)
            out << "inf";
        else
            out << col->height.value;
        out << "\t" << to_string(col->cls) << "\t";
        if (col->min_nontrivial_atom)
            out << *col->min_nontrivial_atom;
        else
            out << "-";
        out << "\n";
    }
    return 0;
}

int cmd_atoms(const LeamerMonoid& s, int64_t x_max, int64_t n_max,
              std::ostream& out) {
    if (x_max < 1 || n_max < 1)
        fail(ErrorCode::InvalidArgument,
             "--xmax and --nmax must be at least 1");
    out << "x\tn\n";
    for (const auto& a : s.atoms_in_window(x_max, n_max))
        out << a.x << "\t" << a.n << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// factor
// ---------------------------------------------------------------------------

int cmd_factor(const LeamerMonoid& s, const Element& e, bool enumerate,
               int64_t cap, std::ostream& out) {
    if (cap < 1) fail(ErrorCode::InvalidArgument, "--cap must be at least 1");
    LengthOracle oracle(s);
    auto summary = oracle.summary(e);
    out << "element: " << element_str(e) << "\n";
    out << "lengths: " << join_lengths(summary.lengths) << "\n";
    out << "delta: " << join_lengths(summary.delta) << "\n";
    out << "elasticity: " << to_string(summary.elasticity) << "\n";
    out << "catenary: "
        << catenary_of(s, e, static_cast<std::uint64_t>(cap)) << "\n";
    if (enumerate) {
        auto fs = factorizations(s, e, static_cast<std::uint64_t>(cap));
        out << "factorizations: " << fs.size() << "\n";
        for (const auto& f : fs) out << "  " << factorization_str(f) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// delta / elasticity / catenary
// ---------------------------------------------------------------------------

int cmd_delta(const LeamerMonoid& s, int64_t x_max, int64_t n_max,
              std::ostream& out) {
    auto observed = observed_delta(s, x_max, n_max);
    auto md = max_delta(s);
    out << "window: x <= " << x_max << ", n <= " << n_max << "\n";
    out << "observed: " << join_lengths(observed) << "\n";
    int64_t observed_max = observed.empty() ? 0 : observed.back();
    out << "observed_max: " << observed_max << "\n";
    bool interval = static_cast<int64_t>(observed.size()) == observed_max &&
                    (observed.empty() || observed.front() == 1);
    out << "interval: " << (interval ? "yes" : "no") << "\n";
    out << "max_delta: " << md.value;
    if (md.witness) out << " at " << element_str(*md.witness);
    out << "\n";
    return 0;
}

int cmd_elasticity_element(const LeamerMonoid& s, const Element& e,
                           std::ostream& out) {
    LengthOracle oracle(s);
    auto summary = oracle.summary(e);
    out << "element: " << element_str(e) << "\n";
    out << "min_length: " << summary.min_length << "\n";
    out << "max_length: " << summary.max_length << "\n";
    out << "elasticity: " << to_string(summary.elasticity) << "\n";
    return 0;
}

int cmd_elasticity_t(const LeamerMonoid& s, int64_t t, std::ostream& out) {
    auto [witness, rho] = elasticity_witness(s, t);
    out << "t: " << t << "\n";
    out << "witness: " << element_str(witness) << "\n";
    out << "elasticity: " << to_string(rho) << "\n";
    return 0;
}

int cmd_catenary(const LeamerMonoid& s, const std::optional<Element>& element,
                 int64_t x_max, int64_t n_max, int64_t cap, std::ostream& out) {
    if (cap < 1) fail(ErrorCode::InvalidArgument, "--cap must be at least 1");
    if (element) {
        out << "element: " << element_str(*element) << "\n";
        out << "catenary: "
            << catenary_of(s, *element, static_cast<std::uint64_t>(cap))
            << "\n";
        return 0;
    }
    auto obs = observed_catenary(s, x_max, n_max,
                                 static_cast<std::uint64_t>(cap));
    out << "window: x <= " << x_max << ", n <= " << n_max << "\n";
    out << "catenary_max: " << obs.value << "\n";
    if (obs.witness) out << "witness: " << element_str(*obs.witness) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// plot
// ---------------------------------------------------------------------------

std::string render_svg(const LeamerMonoid& s, int64_t x_max, int64_t n_max) {
    const int64_t cell = 8;
    const int64_t margin = 12;
    const int64_t width = 2 * margin + cell * x_max;
    const int64_t height = 2 * margin + cell * n_max;
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " +
           std::to_string(height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" fill=\"#ffffff\"/>\n";
    for (int64_t n = n_max; n >= 1; --n) {
        for (int64_t x = 1; x <= x_max; ++x) {
            if (!s.contains(x, n)) continue;
            int64_t cx = margin + cell * (x - 1) + cell / 2;
            int64_t cy = margin + cell * (n_max - n) + cell / 2;
            bool atom = s.is_atom(x, n);
            svg += "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" +
                   std::to_string(cy) + "\" r=\"" + (atom ? "3" : "1") +
                   "\" fill=\"" + (atom ? "#cc2222" : "#999999") + "\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_ascii(const LeamerMonoid& s, int64_t x_max, int64_t n_max) {
    std::string text;
    for (int64_t n = n_max; n >= 1; --n) {
        std::string row = std::to_string(n);
        row = std::string(4 - std::min<size_t>(4, row.size()), ' ') + row +
              " |";
        for (int64_t x = 1; x <= x_max; ++x) {
            if (!s.contains(x, n))
                row += ' ';
            else
                row += s.is_atom(x, n) ? "•" : "·";
        }
        // Trim trailing blanks so output is byte-stable regardless of width.
        while (!row.empty() && row.back() == ' ') row.pop_back();
        text += row + "\n";
    }
    text += "     +" + std::string(static_cast<size_t>(x_max), '-') + "\n";
    text += "      x = 1.." + std::to_string(x_max) + "\n";
    return text;
}

int cmd_plot(const LeamerMonoid& s, int64_t x_max, int64_t n_max,
             const std::string& format, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
    if (x_max < 1 || n_max < 1)
        fail(ErrorCode::InvalidArgument,
             "--xmax and --nmax must be at least 1");
    std::string rendered;
    if (format == "svg")
        rendered = render_svg(s, x_max, n_max);
    else if (format == "ascii")
        rendered = render_ascii(s, x_max, n_max);
    else
        fail(ErrorCode::InvalidArgument,
             "--format must be 'svg' or 'ascii', got '" + format + "'");
    if (out_path.empty()) {
        out << rendered;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            fail(ErrorCode::InvalidArgument,
                 "cannot open output file '" + out_path + "'");
        file << rendered;
        err << "wrote " << out_path << " (" << rendered.size() << " bytes)\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// validate-arith / sweep
// ---------------------------------------------------------------------------

int report_validation(const CrossValidation& v, std::ostream& out) {
    out << "params: (m=" << v.params.m << ", k=" << v.params.k
        << ", s=" << v.params.s << ")\n";
    out << "x_max: " << v.x_max << "\n";
    out << "columns: " << v.columns_checked << " compared, "
        << (v.columns_ok ? "ok" : "MISMATCH") << "\n";
    out << "xf: closed " << v.xf_closed << ", engine " << v.xf_engine << ", "
        << (v.xf_ok ? "ok" : "MISMATCH") << "\n";
    out << "max_delta: closed " << v.max_delta_closed << ", engine "
        << v.max_delta_engine << ", " << (v.delta_ok ? "ok" : "MISMATCH")
        << "\n";
    out << "catenary: closed " << v.catenary_closed << ", engine "
        << v.catenary_engine << ", " << (v.catenary_ok ? "ok" : "MISMATCH")
        << "\n";
    out << "witnesses: " << (v.witnesses_ok ? "ok" : "MISMATCH") << "\n";
    out << "hw_witness: " << (v.hw_ok ? "ok" : "MISMATCH") << "\n";
    for (const auto& m : v.mismatches) out << "mismatch: " << m << "\n";
    out << (v.pass ? "PASS" : "FAIL") << "\n";
    return v.pass ? 0 : 2;
}

int cmd_sweep(int64_t m_max, int64_t s_max, int64_t threads,
              std::ostream& out) {
    auto result = sweep(m_max, s_max, threads);
    for (const auto& v : result.entries) {
        out << "(m=" << v.params.m << ", k=" << v.params.k
            << ", s=" << v.params.s << ") " << (v.pass ? "PASS" : "FAIL")
            << "\n";
        if (!v.pass)
            for (const auto& m : v.mismatches) out << "  mismatch: " << m << "\n";
    }
    out << "checked: " << result.checked << "\n";
    out << "failed: " << result.failed << "\n";
    return result.failed == 0 ? 0 : 2;
}

} // namespace

// ---------------------------------------------------------------------------
// run_cli
// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Explore Leamer monoids: membership grids, atoms, "
                 "factorization lengths, and closed-form cross-validation "
                 "for arithmetical families."};
    app.require_subcommand(1);
    std::function<int()> action;

    // --- info ---
    auto* info = app.add_subcommand(
        "info", "Print the core invariants of one Leamer monoid");
    auto info_args = std::make_shared<MonoidArgs>();
    info_args->attach(info);
    auto info_json = std::make_shared<bool>(false);
    info->add_flag("--json", *info_json, "Emit machine-readable JSON");
    info->callback([&action, info_args, info_json, &out]() {
        action = [info_args, info_json, &out]() {
            return cmd_info(info_args->build(), *info_json, out);
        };
    });

    // --- columns ---
    auto* columns = app.add_subcommand(
        "columns", "Tab-separated column profiles: height, class, least "
                   "nontrivial atom");
    auto col_args = std::make_shared<MonoidArgs>();
    col_args->attach(columns);
    auto col_from = std::make_shared<int64_t>(1);
    auto col_to = std::make_shared<int64_t>(0);
    columns->add_option("--from", *col_from, "First column (default 1)");
    columns->add_option("--to", *col_to,
                        "Last column (default: the automatic window)");
    columns->callback([&action, col_args, col_from, col_to, &out]() {
        action = [col_args, col_from, col_to, &out]() {
            auto s = col_args->build();
            int64_t to = *col_to > 0 ? *col_to : default_window(s).first;
            return cmd_columns(s, *col_from, to, out);
        };
    });

    // --- atoms ---
    auto* atoms = app.add_subcommand(
        "atoms", "Tab-separated list of atoms inside a window");
    auto atom_args = std::make_shared<MonoidArgs>();
    atom_args->attach(atoms);
    auto atom_xmax = std::make_shared<int64_t>(0);
    auto atom_nmax = std::make_shared<int64_t>(0);
    atoms->add_option("--xmax", *atom_xmax,
                      "Largest x (default: the automatic window)");
    atoms->add_option("--nmax", *atom_nmax,
                      "Largest n (default: the automatic window)");
    atoms->callback([&action, atom_args, atom_xmax, atom_nmax, &out]() {
        action = [atom_args, atom_xmax, atom_nmax, &out]() {
            auto s = atom_args->build();
            auto window = default_window(s);
            int64_t xm = *atom_xmax > 0 ? *atom_xmax : window.first;
            int64_t nm = *atom_nmax > 0 ? *atom_nmax : window.second;
            return cmd_atoms(s, xm, nm, out);
        };
    });

    // --- factor ---
    auto* factor = app.add_subcommand(
        "factor", "Length set, Delta set, elasticity, and catenary degree of "
                  "one element");
    auto fac_args = std::make_shared<MonoidArgs>();
    fac_args->attach(factor);
    auto fac_element = std::make_shared<std::string>();
    factor->add_option("--element", *fac_element, "Element as x,n (e.g. 77,8)")
        ->required();
    auto fac_enumerate = std::make_shared<bool>(false);
    factor->add_flag("--enumerate", *fac_enumerate,
                     "Also list every factorization");
    auto fac_cap = std::make_shared<int64_t>(1000000);
    factor->add_option("--cap", *fac_cap,
                       "Abort if the element has more factorizations than "
                       "this (default 1000000)");
    factor->callback(
        [&action, fac_args, fac_element, fac_enumerate, fac_cap, &out]() {
            action = [fac_args, fac_element, fac_enumerate, fac_cap, &out]() {
                auto [x, n] = parse_pair(*fac_element, "--element");
                return cmd_factor(fac_args->build(), Element{x, n},
                                  *fac_enumerate, *fac_cap, out);
            };
        });

    // --- delta ---
    auto* delta = app.add_subcommand(
        "delta", "Observed Delta set over a window plus the proven maximum");
    auto del_args = std::make_shared<MonoidArgs>();
    del_args->attach(delta);
    auto del_window = std::make_shared<std::string>();
    delta->add_option("--window", *del_window,
                      "Window as xmax,nmax (default: automatic)");
    delta->callback([&action, del_args, del_window, &out]() {
        action = [del_args, del_window, &out]() {
            auto s = del_args->build();
            int64_t xm, nm;
            if (del_window->empty()) {
                auto w = default_window(s);
                xm = w.first;
                nm = w.second;
            } else {
                std::tie(xm, nm) = parse_pair(*del_window, "--window");
            }
            return cmd_delta(s, xm, nm, out);
        };
    });

    // --- elasticity ---
    auto* elas = app.add_subcommand(
        "elasticity", "Elasticity of one element, or a max-elasticity witness "
                      "with denominator t");
    auto ela_args = std::make_shared<MonoidArgs>();
    ela_args->attach(elas);
    auto ela_element = std::make_shared<std::string>();
    auto ela_t = std::make_shared<int64_t>(0);
    auto* opt_elem =
        elas->add_option("--element", *ela_element, "Element as x,n");
    auto* opt_t = elas->add_option(
        "--t", *ela_t, "Build the canonical witness with t atoms (t >= 4)");
    opt_elem->excludes(opt_t);
    elas->callback([&action, ela_args, ela_element, ela_t, &out]() {
        action = [ela_args, ela_element, ela_t, &out]() {
            auto s = ela_args->build();
            if (!ela_element->empty()) {
                auto [x, n] = parse_pair(*ela_element, "--element");
                return cmd_elasticity_element(s, Element{x, n}, out);
            }
            if (*ela_t > 0) return cmd_elasticity_t(s, *ela_t, out);
            fail(ErrorCode::InvalidArgument,
                 "elasticity requires exactly one of --element or --t");
        };
    });

    // --- catenary ---
    auto* cat = app.add_subcommand(
        "catenary", "Catenary degree of one element, or the observed maximum "
                    "over a window");
    auto cat_args = std::make_shared<MonoidArgs>();
    cat_args->attach(cat);
    auto cat_element = std::make_shared<std::string>();
    cat->add_option("--element", *cat_element, "Element as x,n");
    auto cat_window = std::make_shared<std::string>();
    cat->add_option("--window", *cat_window,
                    "Window as xmax,nmax (default: automatic)");
    auto cat_cap = std::make_shared<int64_t>(1000000);
    cat->add_option("--cap", *cat_cap,
                    "Abort if an element has more factorizations than this");
    cat->callback([&action, cat_args, cat_element, cat_window, cat_cap, &out]() {
        action = [cat_args, cat_element, cat_window, cat_cap, &out]() {
            auto s = cat_args->build();
            std::optional<Element> elem;
            if (!cat_element->empty()) {
                auto [x, n] = parse_pair(*cat_element, "--element");
                elem = Element{x, n};
            }
            int64_t xm = 0, nm = 0;
            if (!elem) {
                if (cat_window->empty()) {
                    auto w = default_window(s);
                    xm = w.first;
                    nm = w.second;
                } else {
                    std::tie(xm, nm) = parse_pair(*cat_window, "--window");
                }
            }
            return cmd_catenary(s, elem, xm, nm, *cat_cap, out);
        };
    });

    // --- plot ---
    auto* plot = app.add_subcommand(
        "plot", "Render the membership grid (atoms highlighted) as SVG or "
                "ASCII");
    auto plot_args = std::make_shared<MonoidArgs>();
    plot_args->attach(plot);
    auto plot_xmax = std::make_shared<int64_t>(0);
    auto plot_nmax = std::make_shared<int64_t>(0);
    auto plot_format = std::make_shared<std::string>("svg");
    auto plot_out = std::make_shared<std::string>();
    plot->add_option("--xmax", *plot_xmax,
                     "Largest x (default: the automatic window)");
    plot->add_option("--nmax", *plot_nmax,
                     "Largest n (default: the automatic window)");
    plot->add_option("--format", *plot_format, "svg (default) or ascii");
    plot->add_option("--out", *plot_out,
                     "Write to this file instead of standard output");
    plot->callback([&action, plot_args, plot_xmax, plot_nmax, plot_format,
                    plot_out, &out, &err]() {
        action = [plot_args, plot_xmax, plot_nmax, plot_format, plot_out, &out,
                  &err]() {
            auto s = plot_args->build();
            auto window = default_window(s);
            int64_t xm = *plot_xmax > 0 ? *plot_xmax : window.first;
            int64_t nm = *plot_nmax > 0 ? *plot_nmax : window.second;
            return cmd_plot(s, xm, nm, *plot_format, *plot_out, out, err);
        };
    });

    // --- validate-arith ---
    auto* va = app.add_subcommand(
        "validate-arith", "Cross-check the closed forms for an arithmetical "
                          "family against the brute-force engine");
    auto va_m = std::make_shared<int64_t>(0);
    auto va_k = std::make_shared<int64_t>(0);
    auto va_s = std::make_shared<int64_t>(0);
    auto va_xmax = std::make_shared<int64_t>(0);
    va->add_option("--m", *va_m, "Smallest generator m")->required();
    va->add_option("--k", *va_k, "Number of steps k (1 <= k <= m-1)")
        ->required();
    va->add_option("--s", *va_s, "Common difference and Leamer step s")
        ->required();
    va->add_option("--xmax", *va_xmax,
                   "Columns to compare (default: 3 * xf)");
    va->callback([&action, va_m, va_k, va_s, va_xmax, &out]() {
        action = [va_m, va_k, va_s, va_xmax, &out]() {
            auto p = ArithParams::make(*va_m, *va_k, *va_s);
            int64_t xm = *va_xmax > 0 ? *va_xmax : 3 * xf_formula(p);
            return report_validation(cross_validate(p, xm), out);
        };
    });

    // --- sweep ---
    auto* sw = app.add_subcommand(
        "sweep", "Cross-validate every arithmetical family in a grid");
    auto sw_mmax = std::make_shared<int64_t>(9);
    auto sw_smax = std::make_shared<int64_t>(10);
    auto sw_threads = std::make_shared<int64_t>(0);
    sw->add_option("--m-max", *sw_mmax, "Largest m (default 9)");
    sw->add_option("--s-max", *sw_smax, "Largest s (default 10)");
    sw->add_option("--threads", *sw_threads,
                   "Worker threads (default: LEAMER_THREADS or 1)");
    sw->callback([&action, sw_mmax, sw_smax, sw_threads, &out]() {
        action = [sw_mmax, sw_smax, sw_threads, &out]() {
            return cmd_sweep(*sw_mmax, *sw_smax, *sw_threads, out);
        };
    });

    // CLI11 consumes the vector back-to-front, so feed it reversed.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        return action ? action() : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace leamer
