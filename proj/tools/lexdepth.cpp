#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexdepth/lexdepth.hpp"

using nlohmann::json;
using namespace lexdepth;

namespace {

// ------------------------------------------------------------
//  Shared argument bundles
// ------------------------------------------------------------

struct HilbertArgs {
    int n = 0;
    std::string h;
    std::string hfile;
    std::string tail = "max";
};

void add_h_options(CLI::App* sub, HilbertArgs& args) {
    sub->add_option("--n", args.n, "number of ambient variables")->required();
    auto* inline_opt = sub->add_option("--h", args.h, "comma-separated Hilbert values h(0),h(1),...");
    auto* file_opt = sub->add_option("--hfile", args.hfile, "file containing the same comma syntax");
    inline_opt->excludes(file_opt);
    file_opt->excludes(inline_opt);
    sub->add_option("--tail", args.tail, "window continuation: max (Macaulay growth) or zero")
        ->check(CLI::IsMember({"max", "zero"}))
        ->capture_default_str();
}

OSequence resolve_h(const HilbertArgs& args) {
    std::string text = args.h;
    if (!args.hfile.empty()) {
        std::ifstream in(args.hfile);
        if (!in) throw ParseError("cannot open value file '" + args.hfile + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    }
    if (text.empty()) throw ParseError("no Hilbert values given (use --h or --hfile)");
    if (args.n < 0) throw DomainError("variable count must be nonnegative");
    return OSequence{args.n, parse_int_list(text), parse_tail(args.tail)};
}

// ------------------------------------------------------------
//  JSON builders (big integers serialized as strings)
// ------------------------------------------------------------

json to_json(const Int& v) { return v.get_str(); }

json to_json(const std::vector<Int>& values) {
    json a = json::array();
    for (const auto& v : values) a.push_back(to_json(v));
    return a;
}

json to_json(const std::optional<OSeqViolation>& v) {
    if (!v) return nullptr;
    return json{{"q", v->q}, {"value", to_json(v->value)}, {"bound", to_json(v->bound)},
                {"reason", v->reason}};
}

json gens_json(const MonomialIdeal& I) {
    json a = json::array();
    for (const auto& g : I.gens) a.push_back(monomial_to_string(g));
    return a;
}

json to_json(const Classification& c) {
    return json{{"critical", c.critical}, {"delta", c.delta}, {"degrees", c.degrees}, {"n", c.n}};
}

json to_json(const DepthSet& s) {
    return json{{"min", s.min_depth}, {"max", s.max_depth}, {"values", s.values()}};
}

json per_p_json(const std::vector<PDiagnostic>& diags) {
    json a = json::array();
    for (const auto& d : diags) {
        a.push_back(json{{"p", d.p},
                         {"passes", d.passes},
                         {"growth_only_passes", d.growth_only_passes},
                         {"first_violation", to_json(d.violation)}});
    }
    return a;
}

json to_json(const GradedBetti& B) {
    json entries = json::array();
    for (const auto& [key, mult] : B.entries)
        entries.push_back(json{{"i", key.first}, {"j", key.second}, {"multiplicity", to_json(mult)}});
    return json{{"convention", B.convention == BettiConvention::Quotient ? "quotient" : "ideal"},
                {"entries", entries}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

// ------------------------------------------------------------
//  Subcommands
// ------------------------------------------------------------

struct Options {
    HilbertArgs h;
    bool json_out = false;
    bool verbose = false;
    int depth = 0;
    long q = 0;
    long qmax = 0;
    bool q_set = false;
    bool qmax_set = false;
    std::string ideal_path;
    std::string method = "auto";
    std::optional<long> degcap;
    long node_limit = kDefaultNodeLimit;
    int exit_code = 0;
};

void run_check_oseq(Options& opt) {
    const OSequence H = resolve_h(opt.h);
    const OSeqReport rep = is_o_sequence(H);
    if (opt.json_out) {
        emit(json{{"ok", rep.ok}, {"violation", to_json(rep.violation)}});
    } else if (rep.ok) {
        std::cout << "PASS\n";
    } else {
        std::cout << "FAIL: " << rep.message() << "\n";
    }
    if (!rep.ok) opt.exit_code = 1;
}

void run_lexify(Options& opt) {
    const OSequence H = resolve_h(opt.h);
    const MonomialIdeal L = lexify(H);
    if (opt.json_out) {
        emit(json{{"delta", L.delta()}, {"generators", gens_json(L)}, {"n", L.n}});
        return;
    }
    for (const auto& g : L.gens) std::cout << monomial_to_string(g) << "\n";
    std::cout << "delta=" << L.delta() << "\n";
}

void run_classify(Options& opt) {
    const OSequence H = resolve_h(opt.h);
    const Classification c = classify(H);
    if (opt.json_out) {
        emit(to_json(c));
        return;
    }
    if (c.critical)
        std::cout << "critical delta=" << c.delta << " degrees=" << join_longs(c.degrees) << "\n";
    else
        std::cout << "noncritical delta=" << c.delta << "\n";
}

void run_depth_set(Options& opt) {
    const OSequence H = resolve_h(opt.h);
    const DepthAnalysis a = depth_analysis(H);
    if (opt.json_out) {
        json witnesses = json::array();
        for (int r = a.set.min_depth; r <= a.set.max_depth; ++r) {
            const MonomialIdeal W = witness_ideal(H, r);
            witnesses.push_back(json{{"r", r}, {"generators", gens_json(W)}});
        }
        emit(json{{"classification", to_json(a.cls)},
                  {"depth_set", to_json(a.set)},
                  {"per_p", per_p_json(a.diagnostics)},
                  {"witnesses", witnesses}});
        return;
    }
    std::cout << a.set.to_string() << "\n";
    if (opt.verbose) {
        for (const auto& d : a.diagnostics) {
            std::cout << "p=" << d.p << ": " << (d.passes ? "PASS" : "FAIL");
            if (!d.passes && d.violation) std::cout << " (" << OSeqReport{false, d.violation}.message() << ")";
            if (!d.passes && d.growth_only_passes) std::cout << " [growth-only: PASS]";
            std::cout << "\n";
        }
    }
}

void run_witness(Options& opt) {
    const OSequence H = resolve_h(opt.h);
    const MonomialIdeal W = witness_ideal(H, opt.depth);
    if (opt.json_out) {
        emit(json{{"depth", opt.depth}, {"generators", gens_json(W)}, {"n", W.n}});
        return;
    }
    for (const auto& g : W.gens) std::cout << monomial_to_string(g) << "\n";
}

void run_hilbert(Options& opt) {
    const MonomialIdeal I = read_ideal_file(opt.ideal_path);
    if (opt.q_set == opt.qmax_set)
        throw ParseError("hilbert requires exactly one of --q or --qmax");
    if (opt.q_set) {
        if (opt.q < 0) throw DomainError("degree must be nonnegative");
        const Int v = hilbert_function(I, opt.q);
        if (opt.json_out) emit(json{{"q", opt.q}, {"value", to_json(v)}});
        else std::cout << v.get_str() << "\n";
        return;
    }
    if (opt.qmax < 0) throw DomainError("degree must be nonnegative");
    std::vector<Int> values;
    for (long q = 0; q <= opt.qmax; ++q) values.push_back(hilbert_function(I, q));
    if (opt.json_out) {
        emit(json{{"qmax", opt.qmax}, {"values", to_json(values)}});
        return;
    }
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << values[i].get_str();
    }
    std::cout << "\n";
}

void run_series(Options& opt) {
    const MonomialIdeal I = read_ideal_file(opt.ideal_path);
    auto [reduced, mult] = reduce_k_polynomial(k_polynomial_auto(I));
    const int dim = I.n - mult;
    if (opt.json_out) {
        emit(json{{"numerator", to_json(reduced.coeffs)}, {"dim", dim}});
        return;
    }
    if (dim == 0) std::cout << kpoly_to_string(reduced) << "\n";
    else std::cout << "(" << kpoly_to_string(reduced) << ") / (1 - t)^" << dim << "\n";
}

void run_dim(Options& opt) {
    const MonomialIdeal I = read_ideal_file(opt.ideal_path);
    const int d = krull_dim(I);
    if (opt.json_out) emit(json{{"dim", d}});
    else std::cout << d << "\n";
}

void run_betti(Options& opt) {
    const MonomialIdeal I = read_ideal_file(opt.ideal_path);
    std::string method = opt.method;
    if (method == "auto") method = is_stable(I) ? "ek" : "koszul";
    GradedBetti B;
    if (method == "ek") B = to_quotient(ek_betti(I));
    else B = koszul_betti(I);
    if (opt.json_out) {
        json j = to_json(B);
        j["method"] = method;
        emit(j);
        return;
    }
    std::cout << "method: " << method << "\n" << betti_to_string(B);
}

void run_explore(Options& opt) {
    const OSequence H = resolve_h(opt.h);
    const ExploreReport rep = explore(H, opt.degcap, opt.node_limit);
    json observed = json::object();
    for (const auto& [depth, count] : rep.observed_depths) observed[std::to_string(depth)] = count;
    json samples = json::array();
    for (const auto& I : rep.samples) samples.push_back(gens_json(I));
    emit(json{{"classification", to_json(rep.cls)},
              {"depth_set", to_json(rep.set)},
              {"degree_cap", rep.degree_cap},
              {"nodes", rep.nodes},
              {"complete", rep.complete},
              {"ideals_matched", rep.ideals_matched},
              {"observed_depths", observed},
              {"samples", samples},
              {"all_in_depth_set", rep.all_in_depth_set}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert functions, lexsegment ideals, and attainable depths"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    Options opt;

    auto* check = app.add_subcommand("check-oseq", "test Macaulay's growth criterion");
    add_h_options(check, opt.h);
    check->add_flag("--json", opt.json_out, "JSON output");
    check->callback([&] { run_check_oseq(opt); });

    auto* lexify_cmd = app.add_subcommand("lexify", "lexsegment ideal attaining the Hilbert function");
    add_h_options(lexify_cmd, opt.h);
    lexify_cmd->add_flag("--json", opt.json_out, "JSON output");
    lexify_cmd->callback([&] { run_lexify(opt); });

    auto* classify_cmd = app.add_subcommand("classify", "critical / noncritical classification");
    add_h_options(classify_cmd, opt.h);
    classify_cmd->add_flag("--json", opt.json_out, "JSON output");
    classify_cmd->callback([&] { run_classify(opt); });

    auto* depth_cmd = app.add_subcommand("depth-set", "attainable depths for the Hilbert function");
    add_h_options(depth_cmd, opt.h);
    depth_cmd->add_flag("--json", opt.json_out, "JSON output");
    depth_cmd->add_flag("--verbose", opt.verbose, "per-p difference diagnostics");
    depth_cmd->callback([&] { run_depth_set(opt); });

    auto* witness_cmd = app.add_subcommand("witness", "ideal attaining the function with given depth");
    add_h_options(witness_cmd, opt.h);
    witness_cmd->add_option("--depth", opt.depth, "target depth")->required();
    witness_cmd->add_flag("--json", opt.json_out, "JSON output");
    witness_cmd->callback([&] { run_witness(opt); });

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of a monomial ideal file");
    hilbert_cmd->add_option("--ideal", opt.ideal_path, "ideal file")->required();
    hilbert_cmd->add_option("--q", opt.q, "single degree");
    hilbert_cmd->add_option("--qmax", opt.qmax, "all degrees 0..qmax");
    hilbert_cmd->add_flag("--json", opt.json_out, "JSON output");
    hilbert_cmd->callback([&] {
        opt.q_set = hilbert_cmd->count("--q") > 0;
        opt.qmax_set = hilbert_cmd->count("--qmax") > 0;
        run_hilbert(opt);
    });

    auto* series_cmd = app.add_subcommand("series", "reduced Hilbert series numerator and dimension");
    series_cmd->add_option("--ideal", opt.ideal_path, "ideal file")->required();
    series_cmd->add_flag("--json", opt.json_out, "JSON output");
    series_cmd->callback([&] { run_series(opt); });

    auto* dim_cmd = app.add_subcommand("dim", "Krull dimension of the quotient");
    dim_cmd->add_option("--ideal", opt.ideal_path, "ideal file")->required();
    dim_cmd->add_flag("--json", opt.json_out, "JSON output");
    dim_cmd->callback([&] { run_dim(opt); });

    auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of the quotient");
    betti_cmd->add_option("--ideal", opt.ideal_path, "ideal file")->required();
    betti_cmd->add_option("--method", opt.method, "auto, ek (stable closed form), or koszul")
        ->check(CLI::IsMember({"auto", "ek", "koszul"}))
        ->capture_default_str();
    betti_cmd->add_flag("--json", opt.json_out, "JSON output");
    betti_cmd->callback([&] { run_betti(opt); });

    auto* explore_cmd = app.add_subcommand("explore", "enumerate monomial ideals attaining the function");
    add_h_options(explore_cmd, opt.h);
    explore_cmd->add_option("--degcap", opt.degcap, "maximum generator degree searched");
    explore_cmd->add_option("--limit", opt.node_limit, "search node guardrail")->capture_default_str();
    explore_cmd->callback([&] { run_explore(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardrailError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return opt.exit_code;
}
