#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trmod/io.hpp"

using namespace trmod;
using json = io::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kRefuted = 1, kInconclusive = 2, kInputError = 3 };

struct Options {
    bool json = false;
    bool allow_gorenstein = false;
    long long budget = 5'000'000;
    std::string ring;
    unsigned seed = 0;
    int jobs = 1;
    int depth = 32;
};

struct Outcome {
    int code = kOk;
    json result;
    std::string text;
};

// Positional arguments of one subcommand, with --ring standing in for the
// leading ring argument.
struct Inputs {
    std::string ring;
    std::vector<std::string> files;
};

Inputs split_inputs(const Options& opt, std::vector<std::string> args, std::size_t files) {
    Inputs in;
    if (!opt.ring.empty()) {
        in.ring = opt.ring;
    } else {
        if (args.empty()) throw ValidationError("missing ring argument (a ring file or --ring S:p)");
        in.ring = args.front();
        args.erase(args.begin());
    }
    if (args.size() != files)
        throw ValidationError("expected " + std::to_string(files) + " matrix file(s), got " + std::to_string(args.size()));
    in.files = std::move(args);
    return in;
}

std::vector<std::string> gorenstein_warnings(const Algebra& A, const Options& opt) {
    if (opt.allow_gorenstein) return {};
    auto report = ring_preconditions(A);
    if (!report.gorenstein) return {};
    return {"ring is Gorenstein; the non-Gorenstein structure results are not applied (pass --allow-gorenstein to "
            "silence)"};
}

std::string grid(const Algebra& A, const Matrix& M) { return to_string(A, M); }

Outcome run_ring_check(const Algebra& A) {
    auto r = ring_preconditions(A);
    std::ostringstream out;
    out << "Hilbert series (" << r.hilbert.h0 << "," << r.hilbert.h1 << "," << r.hilbert.h2 << "), length " << r.length
        << ", socle dim " << r.socle_dim << (r.socle_equals_m2 ? " (= m^2)" : "") << "\n";
    out << "admits nontrivial totally reflexive modules: " << (r.admits_nontrivial_tr ? "yes" : "no") << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    return {r.admits_nontrivial_tr ? kOk : kRefuted, io::to_json(r), out.str()};
}

Outcome run_ezd(const Algebra& A) {
    auto pairs = enumerate_ezd(A);
    std::ostringstream out;
    out << pairs.size() << " exact zero divisors (up to the ideal they generate)\n";
    for (const auto& p : pairs) out << "  " << A.format(p.a()) << "  partner " << A.format(p.b()) << "\n";
    return {kOk, io::to_json(A, pairs), out.str()};
}

Outcome run_tr(const Algebra& A, const Matrix& M, const Options& opt) {
    auto cert = check_totally_reflexive(A, M, opt.depth);
    std::ostringstream out;
    out << to_string(cert.verdict);
    int code = kOk;
    switch (cert.verdict) {
        case Verdict::Certified:
            out << ": preperiod " << cert.preperiod << ", period " << cert.period << "\n";
            for (std::size_t i = 0; i < cert.forward.size(); ++i)
                out << "  d" << i + 1 << " = " << grid(A, cert.forward[i]) << "\n";
            for (std::size_t i = 0; i < cert.backward.size(); ++i)
                out << "  d" << -int(i) << " = " << grid(A, cert.backward[i]) << "\n";
            break;
        case Verdict::Refuted:
            code = kRefuted;
            out << ": " << to_string(cert.refutation->kind) << " at step " << cert.refutation->step << "\n";
            out << "  " << cert.refutation->detail << "\n";
            break;
        case Verdict::Inconclusive:
            code = kInconclusive;
            out << " at depth " << cert.depth << "\n";
            break;
    }
    if (cert.free_rank > 0) out << "free summands removed: " << cert.free_rank << "\n";
    if (!cert.note.empty()) out << "note: " << cert.note << "\n";
    return {code, io::to_json(A, cert), out.str()};
}

std::optional<RingElement> cyclic_ezd(const Algebra& A, const Matrix& M) {
    if (M.rows != 1 || M.cols != 1) return std::nullopt;
    const auto& a = M.at(0, 0);
    if (A.is_zero(a) || A.is_unit(a) || !is_exact_zero_divisor(A, a)) return std::nullopt;
    return a;
}

Outcome run_ext(const Algebra& A, const Matrix& N, const Matrix& M) {
    auto e = ext1(A, N, M);
    json j = io::to_json(A, e);
    std::ostringstream out;
    out << "rank Ext^1 = " << e.rank << "\n";
    if (cyclic_ezd(A, N) && cyclic_ezd(A, M)) {
        auto g = gamma(A, N, M);
        j["cyclic"] = {{"rank", g.rank}, {"unit_part", g.unit_part}, {"gamma", g.gamma}};
        out << "Gamma = " << g.gamma << " (unit part " << g.unit_part << ")\n";
    }
    for (std::size_t i = 0; i < e.basis.size(); ++i) out << "  class " << i << ": " << grid(A, e.basis[i].lift) << "\n";
    return {kOk, j, out.str()};
}

Outcome run_pushout(const Algebra& A, const std::string& u, const std::string& v, const std::string& alpha) {
    auto X = pushout_middle(A, A.parse(u), A.parse(v), A.parse(alpha));
    auto minimal = minimize(A, X);
    json j = {{"middle", io::to_json(A, X)}, {"minimized", io::to_json(A, minimal)}, {"free_rank", free_rank(A, X)}};
    std::ostringstream out;
    out << "middle term " << grid(A, X) << "\nminimized " << grid(A, minimal) << "\n";
    return {kOk, j, out.str()};
}

Outcome run_filtrate(const Algebra& A, const Matrix& M, const Options& opt) {
    Budget budget{opt.budget, 0};
    auto search = find_ut_form(A, M, budget);
    json j = {{"search", io::to_json(A, search)}};
    std::ostringstream out;
    if (!search.found) {
        out << "no UT form exists (exhaustive, " << search.pairs_examined << " of " << search.pairs_total
            << " flag pairs)\n";
        return {kRefuted, j, out.str()};
    }
    out << "UT form " << grid(A, *search.form) << "\n";
    try {
        auto f = filtrate_ut(A, *search.form);
        j["filtration"] = io::to_json(A, f);
        for (std::size_t i = 0; i < f.chain.size(); ++i)
            out << "  T" << i + 1 << " = " << grid(A, f.chain[i]) << "  length " << f.lengths[i] << "  quotient "
                << A.format(f.quotients[i]) << "\n";
        return {kOk, j, out.str()};
    } catch (const ValidationError& e) {
        j["filtration_error"] = e.what();
        out << "not totally reflexive: " << e.what() << "\n";
        return {kRefuted, j, out.str()};
    }
}

Outcome run_classify(const Algebra& A, int size, bool swap, const Options& opt) {
    if (size != 2) throw ValidationError("only --size 2 is supported");
    Budget budget{opt.budget, 0};
    auto table = classify_ut2(A, budget, opt.jobs);
    json j = io::to_json(A, table);
    std::ostringstream out;
    out << table.classes.size() << " classes (" << table.enumerated << " enumerated, " << table.indecomposable
        << " indecomposable)\n"
        << render_table(A, table);
    if (swap) {
        Budget sb{opt.budget, 0};
        auto report = swap_isomorphism_check(A, sb);
        j["swap"] = io::to_json(A, report);
        out << "swap u<->t: " << report.isomorphic << " of " << report.cases.size() << " admissible cases isomorphic\n";
    }
    return {kOk, j, out.str()};
}

Outcome run_mb(const Algebra& A, int b, const std::string& s, const std::string& t, const std::string& u,
               const std::string& v, const Options& opt) {
    auto S = A.parse(s), T = A.parse(t), U = A.parse(u), V = A.parse(v);
    auto cond = mb_conditions(A, S, T, U, V);
    auto M = mb_matrix(A, b, S, T, U, V);
    auto cert = check_totally_reflexive(A, M, opt.depth);
    auto ind = is_indecomposable(A, M);
    json j = {{"matrix", io::to_json(A, M)},
              {"conditions", io::to_json(cond)},
              {"certificate", io::to_json(A, cert)},
              {"indecomposable", ind.indecomposable}};
    std::ostringstream out;
    out << "M_" << b << " = " << grid(A, M) << "\n";
    out << "conditions " << (cond.satisfied() ? "satisfied" : "not satisfied") << "\n";
    for (const auto& w : cond.warnings) out << "warning: " << w << "\n";
    out << "total reflexivity: " << to_string(cert.verdict);
    if (!cert.betti.empty()) out << ", Betti " << cert.betti.front() << (cert.betti_constant ? " (constant)" : "");
    out << "\nindecomposable: " << (ind.indecomposable ? "yes" : "no") << "\n";
    int code = cert.verdict == Verdict::Certified ? kOk : cert.verdict == Verdict::Refuted ? kRefuted : kInconclusive;
    return {code, j, out.str()};
}

Outcome run_equiv(const Algebra& A, const Matrix& X, const Matrix& Y, const Options& opt) {
    Budget budget{opt.budget, 0};
    auto w = is_equivalent(A, X, Y, budget);
    json j = {{"equivalent", w.has_value()}};
    if (w) j["witness"] = io::to_json(A, *w);
    std::ostringstream out;
    if (w) out << "equivalent\n  P = " << grid(A, w->P) << "\n  Q = " << grid(A, w->Q) << "\n";
    else out << "not equivalent\n";
    return {w ? kOk : kRefuted, j, out.str()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Totally reflexive modules over short local rings"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "Emit a JSON run report on stdout");
    app.add_flag("--allow-gorenstein", opt.allow_gorenstein, "Silence the Gorenstein-ring warning");
    app.add_option("--budget", opt.budget, "Work limit for bounded searches")->check(CLI::PositiveNumber);
    app.add_option("--ring", opt.ring, "Built-in ring S:p or a ring file, replacing the ring argument");
    app.add_option("--seed", opt.seed, "Seed for randomized search (all searches are currently deterministic)");
    app.add_option("--jobs", opt.jobs, "Worker threads for classification")->check(CLI::PositiveNumber);
    app.add_option("--depth", opt.depth, "Resolution depth bound")->check(CLI::PositiveNumber);

    std::vector<std::string> args;
    auto positional = [&](CLI::App* sub, const char* what) { sub->add_option("args", args, what); };

    auto* ring = app.add_subcommand("ring", "Ring operations");
    auto* ring_check = ring->add_subcommand("check", "Check the ring preconditions");
    ring->require_subcommand(1);
    positional(ring_check, "ring");
    auto* ezd = app.add_subcommand("ezd", "Enumerate exact zero divisors");
    positional(ezd, "ring");
    auto* tr = app.add_subcommand("tr", "Certify or refute total reflexivity of coker M");
    positional(tr, "ring matrix");
    auto* ext = app.add_subcommand("ext", "Ext^1(coker N, coker M)");
    positional(ext, "ring N M");
    auto* pushout = app.add_subcommand("pushout", "Middle term of a cyclic extension");
    positional(pushout, "ring");
    std::string u, v, alpha, s, t;
    pushout->add_option("--u", u)->required();
    pushout->add_option("--v", v)->required();
    pushout->add_option("--alpha", alpha)->required();
    auto* filtrate = app.add_subcommand("filtrate", "Upper triangular form and saturated filtration");
    positional(filtrate, "ring matrix");
    auto* classify = app.add_subcommand("classify", "Classify indecomposable 2x2 upper triangular modules");
    positional(classify, "ring");
    int size = 2;
    bool swap = false;
    classify->add_option("--size", size);
    classify->add_flag("--swap", swap, "Also test the u <-> t swap isomorphism");
    auto* mb = app.add_subcommand("mb", "The M_b family");
    positional(mb, "ring");
    int b = 1;
    mb->add_option("--b", b)->required()->check(CLI::PositiveNumber);
    mb->add_option("--s", s)->required();
    mb->add_option("--t", t)->required();
    mb->add_option("--u", u)->required();
    mb->add_option("--v", v)->required();
    auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two presentation matrices");
    positional(equiv, "ring M1 M2");

    for (auto* sub : {ring, ring_check, ezd, tr, ext, pushout, filtrate, classify, mb, equiv}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    std::string command;
    for (const auto* sub : app.get_subcommands()) {
        command = sub->get_name();
        for (const auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
    }

    json report = {{"command", command}, {"tool_version", kVersion}, {"seed", opt.seed}};
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        const std::size_t files = tr->parsed() || filtrate->parsed() ? 1 : ext->parsed() || equiv->parsed() ? 2 : 0;
        Inputs in = split_inputs(opt, args, files);
        Algebra A = io::load_ring(in.ring);
        std::vector<Matrix> mats;
        json inputs = {{"ring", in.ring}, {"ring_spec", io::to_json(A.spec())}};
        for (const auto& f : in.files) {
            mats.push_back(io::load_matrix(A, f));
            inputs["matrices"].push_back({{"path", f}, {"matrix", io::to_json(A, mats.back())}});
        }
        report["inputs"] = inputs;
        auto warnings = gorenstein_warnings(A, opt);

        if (ring_check->parsed()) outcome = run_ring_check(A);
        else if (ezd->parsed()) outcome = run_ezd(A);
        else if (tr->parsed()) outcome = run_tr(A, mats[0], opt);
        else if (ext->parsed()) outcome = run_ext(A, mats[0], mats[1]);
        else if (pushout->parsed()) outcome = run_pushout(A, u, v, alpha);
        else if (filtrate->parsed()) outcome = run_filtrate(A, mats[0], opt);
        else if (classify->parsed()) outcome = run_classify(A, size, swap, opt);
        else if (mb->parsed()) outcome = run_mb(A, b, s, t, u, v, opt);
        else if (equiv->parsed()) outcome = run_equiv(A, mats[0], mats[1], opt);

        report["warnings"] = warnings;
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    } catch (const BudgetExceeded& e) {
        outcome = {kInconclusive, {{"error", e.what()}}, std::string("budget exceeded: ") + e.what() + "\n"};
    } catch (const ValidationError& e) {
        outcome = {kInputError, {{"error", e.what()}}, std::string("input error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        outcome = {kInputError, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n"};
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    report["exit_code"] = outcome.code;
    report["result"] = outcome.result;
    report["timing"] = {{"elapsed_ms", elapsed}};
    if (opt.json) {
        std::cout << report.dump(2) << "\n";
    } else if (outcome.code == kInputError || (outcome.code == kInconclusive && outcome.result.contains("error"))) {
        std::cerr << outcome.text;
    } else {
        std::cout << outcome.text;
    }
    return outcome.code;
}
