#include "bindinfo/cli.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bindinfo/bounds.hpp"
#include "bindinfo/estimate.hpp"
#include "bindinfo/io.hpp"
#include "bindinfo/markov.hpp"
#include "bindinfo/maximizer.hpp"
#include "bindinfo/measures.hpp"
#include "bindinfo/processes.hpp"
#include "bindinfo/prover.hpp"

namespace bindinfo::cli {

namespace {

/*
 * Output conventions: JSON objects are assembled by hand so key order and
 * the 12-significant-digit number format are under direct control, which is
 * what makes reruns byte-identical.  CSV always carries a header row.
 */

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

class JsonObject {
public:
    JsonObject& number(const std::string& key, double value) {
        return raw(key, format_number(value));
    }
    JsonObject& integer(const std::string& key, std::int64_t value) {
        return raw(key, std::to_string(value));
    }
    JsonObject& boolean(const std::string& key, bool value) {
        return raw(key, value ? "true" : "false");
    }
    JsonObject& text(const std::string& key, const std::string& value) {
        return raw(key, '"' + json_escape(value) + '"');
    }
    JsonObject& raw(const std::string& key, const std::string& json_value) {
        if (!body_.empty()) body_ += ',';
        body_ += '"' + json_escape(key) + "\":" + json_value;
        return *this;
    }
    std::string str() const { return '{' + body_ + '}'; }

private:
    std::string body_;
};

std::string json_numbers(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_number(values[i]);
    }
    return out + ']';
}

std::string json_numbers(const Eigen::ArrayXd& values) {
    return json_numbers(std::vector<double>(values.begin(), values.end()));
}

std::string json_integers(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out + ']';
}

// Always the explicit "p/q" form, so readers never guess at integers.
std::string rational_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string json_rationals(const std::vector<Rational>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += '"' + rational_string(values[i]) + '"';
    }
    return out + ']';
}

// Writes to the path when given (atomically, via a temp file and rename),
// otherwise to the stream.
void deliver(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    const std::filesystem::path target(out_path);
    const std::filesystem::path tmp(out_path + ".tmp");
    {
        std::ofstream file(tmp);
        if (!file) throw IoError("cannot write " + out_path);
        file << text;
    }
    std::filesystem::rename(tmp, target);
}

JointTable load_joint(const std::string& path, std::istream& in) {
    return path.empty() || path == "-" ? read_joint_table(in) : read_joint_table(path);
}

MarkovModel load_transition(const std::string& path, std::istream& in) {
    return path.empty() || path == "-" ? read_transition(in) : read_transition(path);
}

// ---------------------------------------------------------------- measure

struct MeasureArgs {
    std::string joint = "-";
    std::vector<int> ordering;  // 1-based at the boundary
    std::string format = "json";
    std::string out;
};

int run_measure(const MeasureArgs& a, std::istream& in, std::ostream& out) {
    const JointTable joint = load_joint(a.joint, in);
    const MeasureReport report = measure_report(joint);

    std::vector<double> profile;
    if (!a.ordering.empty()) {
        std::vector<int> ordering0;
        ordering0.reserve(a.ordering.size());
        for (const int v : a.ordering) ordering0.push_back(v - 1);
        profile = pir_profile(joint, ordering0);
    }
    double pir_sum = 0.0;
    for (const double step : profile) pir_sum += step;

    std::string text;
    if (a.format == "json") {
        JsonObject o;
        o.integer("n", report.n_vars)
            .integer("k", report.alphabet_size)
            .number("joint_entropy", report.joint_entropy)
            .number("multi_information", report.multi_information)
            .number("binding_information", report.binding_information)
            .number("residual_entropy", report.residual_entropy)
            .raw("per_variable_entropy", json_numbers(report.per_variable_entropies));
        if (!profile.empty()) {
            o.raw("ordering", json_integers(a.ordering))
                .raw("pir_profile", json_numbers(profile))
                .number("pir_sum", pir_sum);
        }
        text = o.str() + '\n';
    } else {
        std::string header = "n,k,joint_entropy,multi_information,binding_information,residual_entropy";
        std::string row = std::to_string(report.n_vars) + ',' +
                          std::to_string(report.alphabet_size) + ',' +
                          format_number(report.joint_entropy) + ',' +
                          format_number(report.multi_information) + ',' +
                          format_number(report.binding_information) + ',' +
                          format_number(report.residual_entropy);
        for (std::size_t i = 0; i < report.per_variable_entropies.size(); ++i) {
            header += ",H_" + std::to_string(i + 1);
            row += ',' + format_number(report.per_variable_entropies[i]);
        }
        if (!profile.empty()) {
            for (std::size_t i = 0; i < profile.size(); ++i) {
                header += ",pir_" + std::to_string(i + 1);
                row += ',' + format_number(profile[i]);
            }
            header += ",pir_sum";
            row += ',' + format_number(pir_sum);
        }
        text = header + '\n' + row + '\n';
    }
    deliver(text, a.out, out);
    return 0;
}

// ---------------------------------------------------------------- process

struct ProcessArgs {
    std::string kind;
    int n = 0;
    int k = 2;
    int m = 0;
    std::vector<int> b_set;  // 1-based variable indices
    std::vector<int> state;  // symbol values
    std::uint64_t seed = 0;
    std::string out;
};

int run_process(const ProcessArgs& a, std::ostream& out) {
    JointTable joint = [&] {
        if (a.kind == "parity" || a.kind == "modulo") return modulo_process(a.n, a.k, a.m);
        if (a.kind == "giant_bit") {
            if (a.k != 2) throw IoError("giant_bit is binary; use --k 2");
            SubsetMask b = a.b_set.empty() ? SubsetMask::full(a.n) : SubsetMask::none();
            for (const int v : a.b_set) {
                if (v < 1 || v > a.n)
                    throw IoError("--b-set entries must be in 1.." + std::to_string(a.n));
                b = b | SubsetMask::single(v - 1);
            }
            return giant_bit_process(a.n, b);
        }
        if (a.kind == "independent") return independent_uniform(a.n, a.k);
        if (a.kind == "known") {
            const Configuration config =
                a.state.empty() ? Configuration(static_cast<std::size_t>(a.n), 0) : a.state;
            return known_state(a.n, a.k, config);
        }
        if (a.kind == "random") return random_simplex(a.n, a.k, a.seed);
        throw IoError("unknown --kind '" + a.kind +
                      "' (parity|modulo|giant_bit|independent|known|random)");
    }();

    std::ostringstream text;
    write_joint_table(text, joint);
    deliver(text.str(), a.out, out);
    return 0;
}

// ----------------------------------------------------------------- markov

struct MarkovArgs {
    std::string transition = "-";
    int nmax = 8;
    std::string format = "json";
    std::string out;
};

int run_markov(const MarkovArgs& a, std::istream& in, std::ostream& out) {
    const MarkovModel model = load_transition(a.transition, in);
    const RateReport rates = rate_report(model);
    const IdentityReport identities = identity_checks(model, a.nmax);

    std::string text;
    if (a.format == "json") {
        std::string checks = "[";
        for (std::size_t i = 0; i < identities.checks.size(); ++i) {
            const IdentityCheck& c = identities.checks[i];
            if (i) checks += ',';
            checks += JsonObject()
                          .integer("n", c.block_length)
                          .number("block_entropy", c.block_entropy)
                          .number("extensive_residual", c.extensive_residual)
                          .number("multi_information_residual", c.multi_information_residual)
                          .str();
        }
        checks += ']';
        text = JsonObject()
                   .integer("k", rates.alphabet_size)
                   .number("marginal_entropy", rates.marginal_entropy)
                   .number("entropy_rate", rates.entropy_rate)
                   .number("multi_information_rate", rates.multi_information_rate)
                   .number("residual_rate", rates.residual_rate)
                   .number("pir_rate", rates.pir_rate)
                   .raw("identity_checks", checks)
                   .number("max_violation", identities.max_violation)
                   .str() +
               '\n';
    } else {
        text =
            "k,marginal_entropy,entropy_rate,multi_information_rate,residual_rate,pir_rate,"
            "identity_max_violation\n" +
            std::to_string(rates.alphabet_size) + ',' + format_number(rates.marginal_entropy) +
            ',' + format_number(rates.entropy_rate) + ',' +
            format_number(rates.multi_information_rate) + ',' +
            format_number(rates.residual_rate) + ',' + format_number(rates.pir_rate) + ',' +
            format_number(identities.max_violation) + '\n';
    }
    deliver(text, a.out, out);
    return 0;
}

// ----------------------------------------------------------------- bounds

struct BoundsArgs {
    std::string joint = "-";
    bool random = false;
    int n = 0;
    int k = 0;
    int samples = 10000;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out;
};

std::string bounds_margin_headers(const BoundsReport& report) {
    std::string out;
    for (const BoundRecord& r : report.records) out += ',' + r.name;
    return out;
}

std::string bounds_margin_row(const BoundsReport& report) {
    std::string out;
    for (const BoundRecord& r : report.records) out += ',' + format_number(r.margin);
    return out;
}

int run_bounds(const BoundsArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    if (a.random) {
        if (a.format != "csv") throw IoError("--random emits csv only");
        if (a.n < 2 || a.k < 2) throw IoError("--random needs --n >= 2 and --k >= 2");
        if (a.samples < 1) throw IoError("--samples must be positive");
        bool all_ok = true;
        std::string text;
        for (int i = 0; i < a.samples; ++i) {
            const std::uint64_t sample_seed = a.seed + static_cast<std::uint64_t>(i);
            const JointTable joint = random_simplex(a.n, a.k, sample_seed);
            const BoundsReport report = check_bounds(joint);
            if (text.empty())
                text = "seed,H,I,B" + bounds_margin_headers(report) + '\n';
            text += std::to_string(sample_seed) + ',' + format_number(report.joint_entropy) +
                    ',' + format_number(report.multi_information) + ',' +
                    format_number(report.binding_information) + bounds_margin_row(report) + '\n';
            if (!report.all_satisfied) {
                all_ok = false;
                const std::string dump = "bounds_violation_" + std::to_string(sample_seed) + ".txt";
                std::ostringstream table;
                write_joint_table(table, joint);
                deliver(table.str(), dump, out);
                err << "bound violated at seed " << sample_seed << "; table dumped to " << dump
                    << '\n';
            }
        }
        deliver(text, a.out, out);
        return all_ok ? 0 : 2;
    }

    const JointTable joint = load_joint(a.joint, in);
    const BoundsReport report = check_bounds(joint);
    std::string text;
    if (a.format == "json") {
        std::string records = "[";
        for (std::size_t i = 0; i < report.records.size(); ++i) {
            const BoundRecord& r = report.records[i];
            if (i) records += ',';
            records += JsonObject()
                           .text("name", r.name)
                           .number("lhs", r.lhs)
                           .number("rhs", r.rhs)
                           .number("margin", r.margin)
                           .boolean("satisfied", r.satisfied)
                           .str();
        }
        records += ']';
        text = JsonObject()
                   .integer("n", report.n_vars)
                   .integer("k", report.alphabet_size)
                   .number("joint_entropy", report.joint_entropy)
                   .number("multi_information", report.multi_information)
                   .number("binding_information", report.binding_information)
                   .raw("records", records)
                   .boolean("all_satisfied", report.all_satisfied)
                   .str() +
               '\n';
    } else {
        text = "H,I,B" + bounds_margin_headers(report) + '\n' +
               format_number(report.joint_entropy) + ',' +
               format_number(report.multi_information) + ',' +
               format_number(report.binding_information) + bounds_margin_row(report) + '\n';
    }
    deliver(text, a.out, out);
    return report.all_satisfied ? 0 : 2;
}

// ------------------------------------------------------------------ prove

struct ProveArgs {
    std::string target;
    int n = 0;
    std::string cone = "symmetric";
    std::string certificate;
    std::string out;
};

MeasureTarget parse_target(const std::string& target) {
    if (target == "(N-1)B-I") return MeasureTarget::scaled_binding_minus_multi;
    if (target == "(N-1)I-B") return MeasureTarget::scaled_multi_minus_binding;
    if (target == "I-B") return MeasureTarget::multi_minus_binding;
    if (target == "B-I") return MeasureTarget::binding_minus_multi;
    throw IoError("unknown --target '" + target +
                  "' ((N-1)B-I | (N-1)I-B | I-B | B-I)");
}

const char* cone_name(ConeKind cone) {
    return cone == ConeKind::symmetric_reduced ? "symmetric_reduced" : "elemental";
}

int run_prove(const ProveArgs& a, std::ostream& out) {
    const MeasureTarget which = parse_target(a.target);
    const EntropyFunctional functional = functional_from_measure(a.n, which);
    const ProofResult result = [&] {
        if (a.cone == "general") return prove_general(functional);
        if (a.cone == "symmetric") return prove_symmetric(symmetrize(functional));
        throw IoError("unknown --cone '" + a.cone + "' (symmetric | general)");
    }();

    JsonObject o;
    o.text("target", a.target).integer("n", a.n);
    if (result.proven) {
        o.text("cone", cone_name(result.certificate.cone))
            .boolean("proven", true)
            .raw("multipliers", json_rationals(result.certificate.multipliers));
    } else {
        o.text("cone", cone_name(result.refutation.cone)).boolean("proven", false);
        o.raw("refutation", JsonObject()
                                .raw("coordinates", json_rationals(result.refutation.coordinates))
                                .text("target_value", rational_string(result.refutation.target_value))
                                .str());
    }
    deliver(o.str() + '\n', a.out, out);

    if (!a.certificate.empty() && result.proven) {
        const std::string certificate_json =
            JsonObject()
                .text("target", a.target)
                .integer("n", result.certificate.n_vars)
                .text("cone", cone_name(result.certificate.cone))
                .raw("multipliers", json_rationals(result.certificate.multipliers))
                .str() +
            '\n';
        deliver(certificate_json, a.certificate, out);
    }
    return result.proven ? 0 : 2;
}

// --------------------------------------------------------------- maximize

struct MaximizeArgs {
    std::string objective = "binding";
    int n = 0;
    int k = 0;
    MaximizeConfig config;
    double classify_tol = 0.02;
    std::string out_table;
};

int run_maximize(const MaximizeArgs& a, std::ostream& out) {
    Objective objective;
    if (a.objective == "binding")
        objective = Objective::binding;
    else if (a.objective == "multi")
        objective = Objective::multi;
    else
        throw IoError("unknown --objective '" + a.objective + "' (binding | multi)");

    const OptimizationResult result = maximize(objective, a.n, a.k, a.config);
    const OptimumDiagnosis diagnosis = classify_optimum(result.best_table, a.classify_tol);
    const double cap = (a.n - 1) * std::log2(static_cast<double>(a.k));

    JsonObject o;
    o.text("objective", a.objective)
        .integer("n", a.n)
        .integer("k", a.k)
        .integer("restarts", a.config.restarts)
        .integer("max_iters", a.config.max_iters)
        .number("tol", a.config.tol)
        .integer("seed", static_cast<std::int64_t>(a.config.seed))
        .number("best_value", result.best_value)
        .number("cap", cap)
        .integer("iterations", result.iterations)
        .boolean("converged", result.converged)
        .boolean("pseudo_independent", diagnosis.pseudo_independent)
        .number("max_marginal_deviation", diagnosis.max_marginal_deviation)
        .number("max_conditional_entropy", diagnosis.max_conditional_entropy);
    if (a.out_table.empty()) {
        o.raw("table", json_numbers(result.best_table.probs));
    } else {
        std::ostringstream table;
        write_joint_table(table, result.best_table);
        deliver(table.str(), a.out_table, out);
        o.text("table_file", a.out_table);
    }
    out << o.str() << '\n';
    return 0;
}

// --------------------------------------------------------------- estimate

struct EstimateArgs {
    std::string data = "-";
    int k = 0;
    int nmax = 4;
    std::string format = "csv";
    std::string out;
};

int run_estimate(const EstimateArgs& a, std::istream& in, std::ostream& out) {
    const SymbolSequence seq = a.data.empty() || a.data == "-"
                                   ? read_sequence(in, a.k)
                                   : read_sequence(a.data, a.k);
    const EstimatedRates rates = estimated_rates(seq, a.nmax);

    std::string text;
    if (a.format == "json") {
        text = JsonObject()
                   .integer("k", rates.alphabet_size)
                   .integer("sequence_length", rates.sequence_length)
                   .integer("n_max", a.nmax)
                   .raw("block_entropy", json_numbers(rates.block_entropy))
                   .raw("entropy_rate", json_numbers(rates.entropy_rate))
                   .raw("excess_entropy", json_numbers(rates.excess_entropy))
                   .raw("multi_information_rate", json_numbers(rates.multi_information_rate))
                   .number("block_binding", rates.block_binding)
                   .str() +
               '\n';
    } else {
        text = "n,block_entropy,entropy_rate,excess_entropy,multi_information_rate,block_binding\n";
        for (std::size_t i = 0; i < rates.block_entropy.size(); ++i) {
            text += std::to_string(i + 1) + ',' + format_number(rates.block_entropy[i]) + ',' +
                    format_number(rates.entropy_rate[i]) + ',' +
                    format_number(rates.excess_entropy[i]) + ',' +
                    format_number(rates.multi_information_rate[i]) + ',' +
                    format_number(rates.block_binding) + '\n';
        }
    }
    deliver(text, a.out, out);
    return 0;
}

// ----------------------------------------------------------------- sample

struct SampleArgs {
    std::string transition = "-";
    std::int64_t length = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_sample(const SampleArgs& a, std::istream& in, std::ostream& out) {
    const MarkovModel model = load_transition(a.transition, in);
    const std::vector<int> symbols = sample_sequence(model, a.length, a.seed);
    std::string text;
    text.reserve(symbols.size() * 2);
    for (const int s : symbols) {
        text += std::to_string(s);
        text += '\n';
    }
    deliver(text, a.out, out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Structure measures of finite variable sets and Markov chains: "
                 "exact computation, bounds, certified inequalities, optimization, "
                 "and estimation from data"};
    app.name("bindinfo");
    app.require_subcommand(1);

    MeasureArgs measure_args;
    CLI::App* measure_cmd =
        app.add_subcommand("measure", "Entropy, multi-information, binding information of a joint table");
    measure_cmd->add_option("--joint", measure_args.joint, "Joint-table file, - for stdin");
    measure_cmd
        ->add_option("--ordering", measure_args.ordering,
                     "1-based variable ordering; adds the per-step information profile")
        ->delimiter(',');
    measure_cmd->add_option("--format", measure_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    measure_cmd->add_option("--out", measure_args.out, "Output file (default stdout)");

    ProcessArgs process_args;
    CLI::App* process_cmd = app.add_subcommand("process", "Write a canonical joint table");
    process_cmd
        ->add_option("--kind", process_args.kind,
                     "parity|modulo|giant_bit|independent|known|random")
        ->required();
    process_cmd->add_option("--n", process_args.n, "Number of variables")->required();
    process_cmd->add_option("--k", process_args.k, "Alphabet size (default 2)");
    process_cmd->add_option("--m", process_args.m, "Residue for parity/modulo (default 0)");
    process_cmd
        ->add_option("--b-set", process_args.b_set,
                     "giant_bit: 1-based variables set to one (default all)")
        ->delimiter(',');
    process_cmd
        ->add_option("--state", process_args.state, "known: symbol per variable (default zeros)")
        ->delimiter(',');
    process_cmd->add_option("--seed", process_args.seed, "random: RNG seed");
    process_cmd->add_option("--out", process_args.out, "Output file (default stdout)");

    MarkovArgs markov_args;
    CLI::App* markov_cmd =
        app.add_subcommand("markov", "Analytic rates and identity checks of a stationary chain");
    markov_cmd->add_option("--transition", markov_args.transition,
                           "Transition-matrix file, - for stdin");
    markov_cmd->add_option("--nmax", markov_args.nmax, "Largest block length checked (default 8)");
    markov_cmd->add_option("--format", markov_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    markov_cmd->add_option("--out", markov_args.out, "Output file (default stdout)");

    BoundsArgs bounds_args;
    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "Check the seven information bounds, on a table or a batch");
    bounds_cmd->add_option("--joint", bounds_args.joint, "Joint-table file, - for stdin");
    bounds_cmd->add_flag("--random", bounds_args.random,
                         "Check seeded uniform-simplex samples instead of one table");
    bounds_cmd->add_option("--n", bounds_args.n, "Variables (with --random)");
    bounds_cmd->add_option("--k", bounds_args.k, "Alphabet size (with --random)");
    bounds_cmd->add_option("--samples", bounds_args.samples,
                           "Sample count for --random (default 10000)");
    bounds_cmd->add_option("--seed", bounds_args.seed, "Base seed; sample i uses seed+i");
    bounds_cmd->add_option("--format", bounds_args.format, "csv or json (json: single table only)")
        ->check(CLI::IsMember({"json", "csv"}));
    bounds_cmd->add_option("--out", bounds_args.out, "Output file (default stdout)");

    ProveArgs prove_args;
    CLI::App* prove_cmd =
        app.add_subcommand("prove", "Certify or refute a nonnegativity claim for a given N");
    prove_cmd
        ->add_option("--target", prove_args.target, "(N-1)B-I | (N-1)I-B | I-B | B-I")
        ->required();
    prove_cmd->add_option("--n", prove_args.n, "Number of variables")->required();
    prove_cmd->add_option("--cone", prove_args.cone,
                          "symmetric (any N) or general (N <= 6; full elemental cone)");
    prove_cmd->add_option("--emit-certificate", prove_args.certificate,
                          "Write the exact certificate JSON to this file when proven");
    prove_cmd->add_option("--out", prove_args.out, "Output file (default stdout)");

    MaximizeArgs maximize_args;
    CLI::App* maximize_cmd =
        app.add_subcommand("maximize", "Mirror-ascent search for maximal binding or multi-information");
    maximize_cmd->add_option("--objective", maximize_args.objective, "binding or multi");
    maximize_cmd->add_option("--n", maximize_args.n, "Number of variables")->required();
    maximize_cmd->add_option("--k", maximize_args.k, "Alphabet size")->required();
    maximize_cmd->add_option("--restarts", maximize_args.config.restarts,
                             "Independent seeded starts (default 20)");
    maximize_cmd->add_option("--max-iters", maximize_args.config.max_iters,
                             "Ascent steps per restart (default 2000)");
    maximize_cmd->add_option("--tol", maximize_args.config.tol,
                             "Projected-gradient convergence tolerance (default 1e-6)");
    maximize_cmd->add_option("--seed", maximize_args.config.seed, "RNG seed");
    maximize_cmd->add_option("--classify-tol", maximize_args.classify_tol,
                             "Tolerance for the structure diagnosis (default 0.02)");
    maximize_cmd->add_option("--out", maximize_args.out_table,
                             "Write the best table here; summary stays on stdout");

    EstimateArgs estimate_args;
    CLI::App* estimate_cmd =
        app.add_subcommand("estimate", "Plug-in block entropies and rates from a symbol sequence");
    estimate_cmd->add_option("--data", estimate_args.data, "Sequence file, - for stdin");
    estimate_cmd->add_option("--k", estimate_args.k, "Alphabet size")->required();
    estimate_cmd->add_option("--nmax", estimate_args.nmax,
                             "Largest block length reported (default 4)");
    estimate_cmd->add_option("--format", estimate_args.format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}));
    estimate_cmd->add_option("--out", estimate_args.out, "Output file (default stdout)");

    SampleArgs sample_args;
    CLI::App* sample_cmd =
        app.add_subcommand("sample", "Sample a symbol sequence from a stationary chain");
    sample_cmd->add_option("--transition", sample_args.transition,
                           "Transition-matrix file, - for stdin");
    sample_cmd->add_option("--length", sample_args.length, "Sequence length")->required();
    sample_cmd->add_option("--seed", sample_args.seed, "RNG seed");
    sample_cmd->add_option("--out", sample_args.out, "Output file (default stdout)");

    int exit_code = 0;
    measure_cmd->callback([&] { exit_code = run_measure(measure_args, in, out); });
    process_cmd->callback([&] { exit_code = run_process(process_args, out); });
    markov_cmd->callback([&] { exit_code = run_markov(markov_args, in, out); });
    bounds_cmd->callback([&] { exit_code = run_bounds(bounds_args, in, out, err); });
    prove_cmd->callback([&] { exit_code = run_prove(prove_args, out); });
    maximize_cmd->callback([&] { exit_code = run_maximize(maximize_args, out); });
    estimate_cmd->callback([&] { exit_code = run_estimate(estimate_args, in, out); });
    sample_cmd->callback([&] { exit_code = run_sample(sample_args, in, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        const auto subs = app.get_subcommands();
        err << "error: " << e.what() << '\n'
            << (subs.empty() ? app.help() : subs.front()->help());
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}

} // namespace bindinfo::cli
