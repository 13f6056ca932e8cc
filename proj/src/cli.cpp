// Copyright 2026-present the cyclosum project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cyclosum/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "cyclosum/errors.hpp"
#include "cyclosum/parallel.hpp"
#include "cyclosum/serialize.hpp"

namespace cyclosum {

namespace {

struct Range {
    std::int64_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const std::string& flag) {
    static const std::regex re(R"(^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$)");
    std::smatch mt;
    if (!std::regex_match(text, mt, re)) throw UsageError(flag + " expects a..b or a single integer, got '" + text + "'");
    Range r;
    r.lo = std::stoll(mt[1].str());
    r.hi = mt[2].matched ? std::stoll(mt[2].str()) : r.lo;
    if (r.hi < r.lo) throw UsageError(flag + " range is empty: " + text);
    return r;
}

BigInt parse_budget(const std::string& text) {
    static const std::regex re(R"(^\d+$)");
    if (!std::regex_match(text, re)) throw UsageError("--budget expects a non-negative integer, got '" + text + "'");
    return BigInt(text);
}

enum class Format { Json, Csv, Table };

struct Common {
    std::string format = "json";
    std::string output;
    unsigned threads = 1;
    std::string budget = "10000000";
};

struct Params {
    std::int64_t N = 0, l = 0, m = 0;
    std::uint64_t k_max = 8;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::int64_t> rows;
    std::string n_range, l_policy = "all", m_policy = "all";
    std::vector<std::int64_t> l_list, m_list;
    std::vector<std::string> only;
    std::int64_t N_max = 0;
    bool literal_range = false;
    std::string identity = "all";
    std::string range;
    std::int64_t mask_budget = kDefaultMaskBudget;
    bool cross = false;
    bool pairs = false;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}))->capture_default_str();
    sub->add_option("--output", c.output, "Write the report to this path instead of stdout");
    sub->add_option("--threads", c.threads, "Worker threads (default from CYCLOSUM_THREADS, else 1)")
        ->check(CLI::Range(1u, 1024u));
}

void add_budget(CLI::App* sub, Common& c) {
    sub->add_option("--budget", c.budget, "Maximum number of m-subsets C(N,m) to enumerate")->capture_default_str();
}

void add_nlm(CLI::App* sub, Params& p) {
    sub->add_option("--N", p.N, "Number of samples; the roots are the N-th roots of unity")->required();
    sub->add_option("--l", p.l, "Frequency index l in [0, N-1]; w = exp(-2 pi i l / N)")->required();
    sub->add_option("--m", p.m, "Number of retained samples, 1 <= m <= N")->required();
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + c.output + "'");
    f << text;
    if (!f) throw UsageError("failed writing output file '" + c.output + "'");
}

std::string render(const Common& c, const Json& j, const Table& t) {
    if (c.format == "json") return dump(j);
    if (c.format == "csv") return to_csv(t);
    return to_text(t);
}

EnumerationOptions enum_opts(const Common& c) { return {parse_budget(c.budget), c.threads}; }

int cmd_pmf(const Common& c, const Params& p, std::ostream& out) {
    const CyclotomicContext ctx(p.N, p.l);
    const EnumerationOptions opts = enum_opts(c);
    const ExactPMF pmf = pmf_X(ctx, p.m, opts);
    Json j = pmf_json(pmf);
    if (c.format == "json") {
        j["components"] = components_json(ctx, pmf_components(pmf));
        j["uniformity"] = uniformity_json(uniformity_report(ctx, p.m, opts));
    }
    emit(c, out, render(c, j, pmf_table(pmf)));
    return kExitOk;
}

int cmd_moments(const Common& c, const Params& p, std::ostream& out) {
    if (p.k_max < 1) throw UsageError("--k-max must be >= 1");
    const CyclotomicContext ctx(p.N, p.l);
    const ExactPMF pmf = pmf_X(ctx, p.m, enum_opts(c));
    Json moments = Json::array();
    Table t{{"k", "re", "im", "exact", "is_real", "is_rational", "predicted_zero"}, {}};
    for (std::uint64_t k = 1; k <= p.k_max; ++k) {
        const MomentReport r = moment(pmf, k);
        moments.push_back(moment_json(ctx, r));
        const auto exact = ctx.rational_value(r.value);
        const auto z = ctx.to_complex(r.value);
        t.rows.push_back({std::to_string(k), format_double(z.real()), format_double(z.imag()),
                          exact ? to_string(*exact) : "", r.is_real ? "true" : "false",
                          r.is_rational ? "true" : "false", r.predicted_zero ? "true" : "false"});
    }
    Json components = Json::array();
    for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; a + b <= 2; ++b) {
            if (a + b == 0) continue;
            components.push_back(Json{{"a", a}, {"b", b}, {"value", rat_json(ctx, component_moments(pmf, a, b))}});
        }
    Json j{{"N", p.N},
           {"l", p.l},
           {"m", p.m},
           {"order", ctx.order()},
           {"moments", std::move(moments)},
           {"variance", to_string(variance(pmf))},
           {"component_moments_convention", "E[(z + conj z)^a (z - conj z)^b] = E[(2U)^a (2iV)^b]"},
           {"component_moments", std::move(components)},
           {"componentwise_square_expectation", rat_json(ctx, componentwise_square_expectation(pmf))}};
    emit(c, out, render(c, j, t));
    return kExitOk;
}

IndexSelection selection(const std::string& policy, const std::vector<std::int64_t>& list) {
    if (!list.empty()) return {IndexPolicy::List, list};
    return {policy == "coprime" ? IndexPolicy::CoprimeOnly : IndexPolicy::All, {}};
}

int cmd_verify(const Common& c, const Params& p, std::ostream& out) {
    SweepSpec spec;
    if (!p.n_range.empty()) {
        const Range r = parse_range(p.n_range, "--N-range");
        spec.N_lo = r.lo;
        spec.N_hi = r.hi;
    } else if (p.N > 0) {
        spec.N_lo = spec.N_hi = p.N;
    } else {
        throw UsageError("verify needs --N or --N-range");
    }
    spec.l = selection(p.l_policy, p.l_list);
    spec.m = selection(p.m_policy, p.m_list);
    spec.verify.k_max = p.k_max;
    const auto names = checks::all();
    for (const auto& name : p.only) {
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw UsageError("unknown check '" + name + "'");
        spec.verify.only.insert(name);
    }
    spec.verify.enumeration = enum_opts(c);
    spec.threads = c.threads;
    const SweepReport rep = run_sweep(spec);
    emit(c, out, render(c, sweep_json(rep), sweep_table(rep)));
    return rep.passed() ? kExitOk : kExitMathFailure;
}

int cmd_scan(const Common& c, const Params& p, std::ostream& out) {
    ConjectureScanOptions opts;
    opts.literal_range = p.literal_range;
    opts.enumeration = enum_opts(c);
    const SweepReport rep = conjecture_scan(p.N_max, opts);
    emit(c, out, render(c, sweep_json(rep), sweep_table(rep)));
    return rep.passed() ? kExitOk : kExitMathFailure;
}

int cmd_identities(const Common& c, const Params& p, std::ostream& out) {
    const Range r = parse_range(p.range, "--range");
    std::vector<IdentityCase> cases;
    if (p.identity == "all") {
        for (auto name : identity_names()) {
            auto part = check_identity(name, r.lo, r.hi);
            cases.insert(cases.end(), part.begin(), part.end());
        }
    } else {
        cases = check_identity(p.identity, r.lo, r.hi);
    }
    const bool ok = std::all_of(cases.begin(), cases.end(), [](const IdentityCase& x) { return x.holds; });
    emit(c, out, render(c, identities_json(cases), identities_table(cases)));
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_bernoulli(const Common& c, const Params& p, std::ostream& out) {
    if (p.k_max < 1) throw UsageError("--k-max must be >= 1");
    const CyclotomicContext ctx(p.N, p.l);
    const MaskPMF law = pmf_tilde(ctx, p.m, p.mask_budget, c.threads);
    const TildeComparison cmp = tilde_moments(ctx, p.m, p.k_max, p.mask_budget, enum_opts(c));
    Json j = mask_pmf_json(law);
    j["comparison"] = tilde_json(ctx, cmp);
    Table t{{"coeffs", "re", "im", "weight", "probability"}, {}};
    for (const auto& [key, w] : law.entries) {
        std::string coeffs;
        for (std::size_t i = 0; i < key.coeffs.size(); ++i) coeffs += (i ? " " : "") + key.coeffs[i].str();
        const auto z = ctx.to_complex(key);
        t.rows.push_back({coeffs, format_double(z.real()), format_double(z.imag()), w.str(),
                          to_string(BigRational(w, law.denominator))});
    }
    emit(c, out, render(c, j, t));
    return kExitOk;
}

int cmd_sample(const Common& c, const Params& p, std::ostream& out) {
    const SampleEstimate est = sample_estimate(p.N, p.l, p.m, p.trials, p.seed, c.threads);
    const bool z_ok = std::abs(est.z_score) <= kSigmaBand;
    const bool mean_ok = std::abs(est.mean_hat) <= est.mean_band || std::abs(est.mean_hat) == 0.0;
    Json j = sample_json(est);
    j["z_within_band"] = z_ok;
    j["mean_within_band"] = mean_ok;
    bool ok = z_ok && mean_ok;
    if (p.cross) {
        const CrossCheckReport cc = cross_check(p.N, p.l, p.m, p.trials, p.seed, enum_opts(c));
        j["cross_check"] = cross_check_json(CyclotomicContext(p.N, p.l), cc);
        ok = ok && cc.passed;
    }
    emit(c, out, render(c, j, sample_table(est)));
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_coherence(const Common& c, const Params& p, std::ostream& out) {
    if (p.rows.empty()) {
        if (p.m < 1) throw UsageError("coherence needs --rows, or --m for the bound alone");
        const WelchBound w = welch_bound(p.N, p.m);
        Json j{{"N", p.N}, {"m", p.m}, {"welch", round_sig(w.welch)}, {"sigma_ratio", round_sig(w.sigma_ratio)},
               {"approx", round_sig(w.approx)}};
        Table t{{"N", "m", "welch", "sigma_ratio", "approx"},
                {{std::to_string(p.N), std::to_string(p.m), format_double(w.welch), format_double(w.sigma_ratio),
                  format_double(w.approx)}}};
        emit(c, out, render(c, j, t));
        return kExitOk;
    }
    const CoherenceReport rep = partial_fourier_coherence(p.N, p.rows, c.threads);
    if (p.pairs) {
        if (c.format == "json") throw UsageError("--pairs writes CSV or table output");
        emit(c, out, c.format == "csv" ? to_csv(pairwise_table(pairwise_magnitudes(p.N, p.rows)))
                                       : to_text(pairwise_table(pairwise_magnitudes(p.N, p.rows))));
    } else {
        emit(c, out, render(c, coherence_json(rep), coherence_table(rep)));
    }
    return rep.satisfied ? kExitOk : kExitMathFailure;
}

std::string one_line(std::string s) {
    for (char& ch : s)
        if (ch == '\n' || ch == '\r') ch = ' ';
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact laws, moments and checks for sums of randomly chosen roots of unity", "cyclosum"};
    app.require_subcommand(1);
    Common common;
    common.threads = default_threads();
    Params p;

    auto* pmf = app.add_subcommand("pmf", "Exact law of the subset sum, its real/imaginary parts and uniformity");
    add_nlm(pmf, p);
    add_common(pmf, common);
    add_budget(pmf, common);

    auto* mom = app.add_subcommand("moments", "Exact moments E[X^k], variance and real/imaginary second moments");
    add_nlm(mom, p);
    mom->add_option("--k-max", p.k_max, "Highest power k of E[X^k]")->capture_default_str();
    add_common(mom, common);
    add_budget(mom, common);

    auto* ver = app.add_subcommand("verify", "Exact structural checks over (N, l, m) ranges");
    ver->add_option("--N", p.N, "Single N");
    ver->add_option("--N-range", p.n_range, "Inclusive N range a..b");
    ver->add_option("--l-policy", p.l_policy, "l in [0, N-1]: all, or coprime to N")
        ->check(CLI::IsMember({"all", "coprime"}))->capture_default_str();
    ver->add_option("--l", p.l_list, "Explicit l values (comma separated)")->delimiter(',');
    ver->add_option("--m-policy", p.m_policy, "m in [1, N]: all, or coprime to N")
        ->check(CLI::IsMember({"all", "coprime"}))->capture_default_str();
    ver->add_option("--m", p.m_list, "Explicit m values (comma separated)")->delimiter(',');
    ver->add_option("--k-max", p.k_max, "Highest moment order for the vanishing/reality checks")->capture_default_str();
    ver->add_option("--checks", p.only, "Restrict to these checks (comma separated)")->delimiter(',');
    add_common(ver, common);
    add_budget(ver, common);

    auto* scan = app.add_subcommand("scan-conjecture", "Compare uniformity of the law with primality of N, l and m coprime to N");
    scan->add_option("--N-max", p.N_max, "Largest N scanned (from 3)")->required();
    scan->add_flag("--literal-range", p.literal_range, "Scan 2 <= m <= N-1 instead of 2 <= m <= N-2");
    add_common(scan, common);
    add_budget(scan, common);

    auto* ids = app.add_subcommand("identities", "Big-integer checks of binomial sum identities");
    std::vector<std::string> id_choices{"all"};
    for (auto n : identity_names()) id_choices.emplace_back(n);
    ids->add_option("--name", p.identity, "Identity to check")->check(CLI::IsMember(id_choices))->capture_default_str();
    ids->add_option("--range", p.range, "Inclusive range a..b of l (two-parameter identities, all valid m) or m")
        ->required();
    add_common(ids, common);

    auto* ber = app.add_subcommand("bernoulli", "Exact law and moments of the independent Bernoulli(m/N) mask companion");
    add_nlm(ber, p);
    ber->add_option("--k-max", p.k_max, "Highest moment order")->capture_default_str();
    ber->add_option("--mask-budget", p.mask_budget, "Largest N for exhaustive 2^N mask enumeration")->capture_default_str();
    add_common(ber, common);
    add_budget(ber, common);

    auto* smp = app.add_subcommand("sample", "Monte Carlo estimate of the mean and variance by uniform m-subset sampling");
    add_nlm(smp, p);
    smp->add_option("--trials", p.trials, "Number of sampled subsets")->required();
    smp->add_option("--seed", p.seed, "64-bit seed; output is identical for any thread count")->required();
    smp->add_flag("--cross-check", p.cross, "Also compare atom frequencies with the enumerated law");
    add_common(smp, common);
    add_budget(smp, common);

    auto* coh = app.add_subcommand("coherence", "Welch bound and coherence of a partial Fourier matrix");
    coh->add_option("--N", p.N, "Number of columns (N <= 4096)")->required();
    coh->add_option("--rows", p.rows, "Selected 0-based row indices (comma separated)")->delimiter(',');
    coh->add_option("--m", p.m, "Row count, for the bound alone when --rows is absent");
    coh->add_flag("--pairs", p.pairs, "Emit every column-pair magnitude (csv or table)");
    add_common(coh, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << one_line(e.what()) << "\n";
        return kExitUsage;
    }

    try {
        if (*pmf) return cmd_pmf(common, p, out);
        if (*mom) return cmd_moments(common, p, out);
        if (*ver) return cmd_verify(common, p, out);
        if (*scan) return cmd_scan(common, p, out);
        if (*ids) return cmd_identities(common, p, out);
        if (*ber) return cmd_bernoulli(common, p, out);
        if (*smp) return cmd_sample(common, p, out);
        if (*coh) return cmd_coherence(common, p, out);
    } catch (const UsageError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return kExitUsage;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << one_line(e.what()) << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "failure: " << one_line(e.what()) << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}

}  // namespace cyclosum
