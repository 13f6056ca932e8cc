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

#include "cyclosum/theorem_verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "cyclosum/errors.hpp"
#include "cyclosum/identities.hpp"
#include "cyclosum/moments.hpp"
#include "cyclosum/parallel.hpp"

namespace cyclosum {

namespace {

std::string show(const CyclotomicContext& ctx, const CycRat& v) {
    if (auto q = ctx.rational_value(v)) return to_string(*q);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.num.coeffs.size(); ++i) os << (i ? "," : "") << v.num.coeffs[i];
    os << "]";
    if (v.den != 1) os << "/" << v.den;
    return os.str();
}

std::string show_list(const std::vector<std::uint64_t>& ks) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
    return os.str();
}

CheckResult pass_or_fail(std::string_view name, bool ok, std::string expected, std::string got) {
    return CheckResult{std::string(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(expected),
                       std::move(got), {}};
}

CheckResult not_run(std::string_view name, CheckStatus status, std::string reason, std::string got = {}) {
    return CheckResult{std::string(name), status, {}, std::move(got), std::move(reason)};
}

bool is_rational_equal(const CyclotomicContext& ctx, const CycRat& v, const BigRational& want) {
    const auto q = ctx.rational_value(v);
    return q && *q == want;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::NotApplicable: return "not_applicable";
        case CheckStatus::Info: return "info";
    }
    return "?";
}

bool CaseReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* CaseReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<std::string_view> checks::all() {
    return {kMeanZero,         kVariance,          kComponentMeans,     kComponentSecondMoments,
            kSquareExpectation, kComponentVariances, kMomentVanishing,   kMomentReal,
            kMomentRational,   kOddVMoments,       kAntisymmetry,       kVSymmetry};
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

CaseReport verify_case(std::int64_t N, std::int64_t l, std::int64_t m, const VerifyOptions& opts) {
    if (opts.k_max < 1) throw UsageError("k_max must be >= 1");
    const CyclotomicContext ctx(N, l);
    const ExactPMF pmf = pmf_X(ctx, m, opts.enumeration);
    auto wanted = [&](std::string_view name) { return opts.only.empty() || opts.only.contains(name); };

    CaseReport rep{"case", N, l, m, {}};
    auto& out = rep.checks;
    const bool generic = l >= 1;  // the variable is non-constant
    const bool real_valued_family = generic && N == 2 * l;
    const BigRational var_formula = generic ? BigRational(BigInt(m) * (N - m), BigInt(N - 1)) : BigRational(0);
    const BigRational half_var = var_formula / 2;

    // Powers z^k and component keys for every atom, built incrementally.
    const std::uint64_t kmax = opts.k_max;
    std::vector<CycElem> moment_sums(kmax + 1, ctx.zero());   // sum count * z^k
    std::vector<CycElem> v_sums(kmax + 1, ctx.zero());        // sum count * (z - conj z)^b
    CycElem u_sum = ctx.zero(), uu_sum = ctx.zero(), vv_sum = ctx.zero(), uv_sum = ctx.zero();
    for (const auto& [z, count] : pmf.entries) {
        CycElem zk = z;
        for (std::uint64_t k = 1; k <= kmax; ++k) {
            if (k > 1) zk = ctx.multiply(zk, z);
            moment_sums[k] = ctx.add(moment_sums[k], ctx.scale(zk, count));
        }
        const CycElem zc = ctx.conjugate(z);
        const CycElem u = ctx.add(z, zc);
        const CycElem v = ctx.subtract(z, zc);
        CycElem vb = v;
        for (std::uint64_t b = 1; b <= kmax; ++b) {
            if (b > 1) vb = ctx.multiply(vb, v);
            v_sums[b] = ctx.add(v_sums[b], ctx.scale(vb, count));
        }
        u_sum = ctx.add(u_sum, ctx.scale(u, count));
        uu_sum = ctx.add(uu_sum, ctx.scale(ctx.multiply(u, u), count));
        vv_sum = ctx.add(vv_sum, ctx.scale(ctx.multiply(v, v), count));
        uv_sum = ctx.add(uv_sum, ctx.scale(ctx.multiply(u, v), count));
    }
    auto expect = [&](const CycElem& s) { return ctx.make_rat(s, pmf.denominator); };
    const CycRat mean = expect(moment_sums[1]);

    if (wanted(checks::kMeanZero)) {
        if (generic)
            out.push_back(pass_or_fail(checks::kMeanZero, mean.is_zero(), "0", show(ctx, mean)));
        else
            out.push_back(not_run(checks::kMeanZero, CheckStatus::NotApplicable,
                                  "requires l >= 1; X is the constant m", show(ctx, mean)));
    }
    if (wanted(checks::kVariance)) {
        const BigRational var = variance(pmf);
        out.push_back(pass_or_fail(checks::kVariance, var == var_formula, to_string(var_formula), to_string(var)));
    }
    if (wanted(checks::kComponentMeans)) {
        const CycRat eu = expect(u_sum);
        const CycRat ev = expect(v_sums[1]);
        if (generic)
            out.push_back(pass_or_fail(checks::kComponentMeans, eu.is_zero() && ev.is_zero(), "E[2U]=0, E[2jV]=0",
                                       "E[2U]=" + show(ctx, eu) + ", E[2jV]=" + show(ctx, ev)));
        else
            out.push_back(not_run(checks::kComponentMeans, CheckStatus::NotApplicable, "requires l >= 1",
                                  "E[2U]=" + show(ctx, eu) + ", E[2jV]=" + show(ctx, ev)));
    }
    const CycRat euu = expect(uu_sum);
    const CycRat evv = expect(vv_sum);
    const CycRat euv = expect(uv_sum);
    // E[U^2] = E[u^2]/4 and E[V^2] = -E[v^2]/4.
    const auto eu2 = ctx.rational_value(euu);
    const auto ev2 = ctx.rational_value(evv);
    const std::string second_got = "E[U^2]=" + (eu2 ? to_string(*eu2 / 4) : show(ctx, euu) + "/4") +
                                   ", E[V^2]=" + (ev2 ? to_string(-*ev2 / 4) : show(ctx, evv) + "/-4");
    for (std::string_view name : {checks::kComponentSecondMoments, checks::kComponentVariances}) {
        if (!wanted(name)) continue;
        if (!generic) {
            out.push_back(not_run(name, CheckStatus::NotApplicable, "requires l >= 1", second_got));
        } else if (real_valued_family) {
            out.push_back(not_run(name, CheckStatus::Skipped, "N = 2l: X is real-valued, V == 0", second_got));
        } else if (name == checks::kComponentSecondMoments) {
            const bool ok = eu2 && ev2 && *eu2 / 4 == half_var && -*ev2 / 4 == half_var && euv.is_zero();
            out.push_back(pass_or_fail(name, ok,
                                       "E[U^2]=" + to_string(half_var) + ", E[V^2]=" + to_string(half_var) +
                                           ", E[UV]=0",
                                       second_got + ", E[UV]*4j=" + show(ctx, euv)));
        } else {
            // Var[U] = E[U^2] - E[U]^2; the means are zero for l >= 1.
            const CycRat eu = expect(u_sum);
            const CycRat ev = expect(v_sums[1]);
            const auto mu = ctx.rational_value(ctx.multiply(eu, eu));
            const auto mv = ctx.rational_value(ctx.multiply(ev, ev));
            bool ok = eu2 && ev2 && mu && mv;
            std::string got = "unavailable";
            if (ok) {
                const BigRational var_u = (*eu2 - *mu) / 4;
                const BigRational var_v = -(*ev2 - *mv) / 4;
                ok = var_u == half_var && var_v == half_var;
                got = "Var[U]=" + to_string(var_u) + ", Var[V]=" + to_string(var_v);
            }
            out.push_back(pass_or_fail(name, ok, "Var[U]=Var[V]=" + to_string(half_var), got));
        }
    }
    if (wanted(checks::kSquareExpectation)) {
        const CycRat sq = componentwise_square_expectation(pmf);
        if (generic)
            out.push_back(pass_or_fail(checks::kSquareExpectation, is_rational_equal(ctx, sq, var_formula),
                                       to_string(var_formula), show(ctx, sq)));
        else
            out.push_back(not_run(checks::kSquareExpectation, CheckStatus::NotApplicable, "requires l >= 1",
                                  show(ctx, sq)));
    }
    if (wanted(checks::kMomentVanishing)) {
        std::vector<std::uint64_t> bad, tested;
        const auto d = static_cast<std::uint64_t>(ctx.order());
        for (std::uint64_t k = 1; k <= kmax; ++k) {
            if (k % d == 0) continue;
            tested.push_back(k);
            if (!moment_sums[k].is_zero()) bad.push_back(k);
        }
        if (tested.empty())
            out.push_back(not_run(checks::kMomentVanishing, CheckStatus::NotApplicable,
                                  "d = " + std::to_string(d) + " divides every k <= k_max"));
        else
            out.push_back(pass_or_fail(checks::kMomentVanishing, bad.empty(), "E[X^k]=0 for k in {" + show_list(tested) + "}",
                                       bad.empty() ? "all zero" : "nonzero for k in {" + show_list(bad) + "}"));
    }
    if (wanted(checks::kMomentReal) || wanted(checks::kMomentRational)) {
        std::vector<std::uint64_t> not_real, not_rational;
        for (std::uint64_t k = 1; k <= kmax; ++k) {
            const Classification c = ctx.classify(moment_sums[k]);
            if (!c.is_real) not_real.push_back(k);
            if (!c.is_rational) not_rational.push_back(k);
        }
        if (wanted(checks::kMomentReal))
            out.push_back(pass_or_fail(checks::kMomentReal, not_real.empty(), "real for k <= " + std::to_string(kmax),
                                       not_real.empty() ? "all real" : "non-real for k in {" + show_list(not_real) + "}"));
        if (wanted(checks::kMomentRational))
            out.push_back(CheckResult{std::string(checks::kMomentRational), CheckStatus::Info, {},
                                      not_rational.empty() ? "all rational"
                                                           : "irrational for k in {" + show_list(not_rational) + "}",
                                      "observation only; rationality is recorded, not required"});
    }
    if (wanted(checks::kOddVMoments)) {
        std::vector<std::uint64_t> bad, tested;
        for (std::uint64_t b = 1; b <= kmax; b += 2) {
            tested.push_back(b);
            if (!v_sums[b].is_zero()) bad.push_back(b);
        }
        out.push_back(pass_or_fail(checks::kOddVMoments, bad.empty(), "E[V^b]=0 for odd b in {" + show_list(tested) + "}",
                                   bad.empty() ? "all zero" : "nonzero for b in {" + show_list(bad) + "}"));
    }
    if (wanted(checks::kAntisymmetry)) {
        if (!generic) {
            out.push_back(not_run(checks::kAntisymmetry, CheckStatus::NotApplicable, "l = 0: the full sum is N, not 0"));
        } else if (N >= 2 && m <= N - 1) {
            const ExactPMF other = negated(pmf_X(ctx, N - m, opts.enumeration));
            const bool ok = pmf.entries == other.entries && pmf.denominator == other.denominator;
            out.push_back(pass_or_fail(checks::kAntisymmetry, ok, "law(X_m) == law(-X_{N-m})",
                                       ok ? "equal" : "laws differ"));
        } else {
            out.push_back(not_run(checks::kAntisymmetry, CheckStatus::NotApplicable, "requires N >= 2 and m <= N-1"));
        }
    }
    if (wanted(checks::kVSymmetry)) {
        const ComponentLaws laws = pmf_components(pmf);
        bool ok = true;
        for (const auto& [key, count] : laws.V.entries) {
            const auto it = laws.V.entries.find(ctx.negate(key));
            if (it == laws.V.entries.end() || it->second != count) {
                ok = false;
                break;
            }
        }
        out.push_back(pass_or_fail(checks::kVSymmetry, ok, "P(V=x) == P(V=-x)", ok ? "symmetric" : "asymmetric"));
    }
    return rep;
}

namespace {

std::vector<std::int64_t> select_indices(const IndexSelection& sel, std::int64_t N, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    if (sel.policy == IndexPolicy::List) {
        for (std::int64_t v : sel.values)
            if (v >= lo && v <= hi) out.push_back(v);
        return out;
    }
    for (std::int64_t v = lo; v <= hi; ++v)
        if (sel.policy == IndexPolicy::All || std::gcd(v, N) == 1) out.push_back(v);
    return out;
}

}  // namespace

SweepReport run_sweep(const SweepSpec& spec) {
    if (spec.N_lo < 1 || spec.N_hi < spec.N_lo) throw UsageError("N range must be non-empty with N >= 1");
    if (spec.verify.k_max < 1) throw UsageError("k_max must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    struct Job {
        std::int64_t N, l, m;
    };
    std::vector<Job> jobs;
    for (std::int64_t N = spec.N_lo; N <= spec.N_hi; ++N)
        for (std::int64_t l : select_indices(spec.l, N, 0, N - 1))
            for (std::int64_t m : select_indices(spec.m, N, 1, N)) jobs.push_back({N, l, m});

    std::vector<std::optional<CaseReport>> results(jobs.size());
    std::vector<std::string> budget_notes(jobs.size());
    parallel_chunks(jobs.size(), spec.threads, [&](std::size_t, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t i = b; i < e; ++i) {
            try {
                results[i] = verify_case(jobs[i].N, jobs[i].l, jobs[i].m, spec.verify);
            } catch (const BudgetError& err) {
                budget_notes[i] = err.what();
            }
        }
    });

    SweepReport rep;
    rep.kind = "sweep";
    rep.notes.push_back("N in [" + std::to_string(spec.N_lo) + ", " + std::to_string(spec.N_hi) +
                        "], k_max = " + std::to_string(spec.verify.k_max));
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!results[i]) {
            rep.skipped.push_back("N=" + std::to_string(jobs[i].N) + " l=" + std::to_string(jobs[i].l) +
                                  " m=" + std::to_string(jobs[i].m) + ": " + budget_notes[i]);
            continue;
        }
        ++rep.cases_run;
        for (const auto& c : results[i]->checks)
            if (c.status == CheckStatus::Fail)
                rep.failures.push_back({jobs[i].N, jobs[i].l, jobs[i].m, c.name, c.expected, c.got});
        rep.cases.push_back(std::move(*results[i]));
    }
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

SweepReport conjecture_scan(std::int64_t N_max, const ConjectureScanOptions& opts) {
    if (N_max < 3) throw UsageError("conjecture scan needs N_max >= 3");
    const auto start = std::chrono::steady_clock::now();
    SweepReport rep;
    rep.kind = "conjecture_scan";
    rep.notes.push_back(opts.literal_range
                            ? "m range: 2 <= m <= N-1, gcd(m, N) = 1 (literal range; m = N-1 is always uniform)"
                            : "m range: 2 <= m <= N-2, gcd(m, N) = 1");
    rep.notes.push_back("l range: 1 <= l <= N-1, gcd(l, N) = 1");
    rep.notes.push_back("violation: uniform(X_l(m,N)) != (N is prime)");
    for (std::int64_t N = 3; N <= N_max; ++N) {
        const std::int64_t m_hi = opts.literal_range ? N - 1 : N - 2;
        std::vector<std::int64_t> ms;
        for (std::int64_t m = 2; m <= m_hi; ++m)
            if (std::gcd(m, N) == 1) ms.push_back(m);
        if (ms.empty()) {
            rep.notes.push_back("N=" + std::to_string(N) + ": vacuous (no m in range coprime to N)");
            continue;
        }
        const bool prime = is_prime(N);
        for (std::int64_t l = 1; l < N; ++l) {
            if (std::gcd(l, N) != 1) continue;
            for (std::int64_t m : ms) {
                try {
                    const UniformityReport u = uniformity_report(CyclotomicContext(N, l), m, opts.enumeration);
                    ScanCase sc{N, l, m, u.is_uniform, prime, u.support_size, u.binom};
                    ++rep.cases_run;
                    if (sc.is_uniform != prime) rep.counterexamples.push_back(sc);
                    rep.scan.push_back(std::move(sc));
                } catch (const BudgetError& err) {
                    rep.skipped.push_back("N=" + std::to_string(N) + " l=" + std::to_string(l) +
                                          " m=" + std::to_string(m) + ": " + err.what());
                }
            }
        }
    }
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

CaseReport closed_form_check(std::int64_t l, std::int64_t m) {
    if (l < 1 || m < 1 || m > 2 * l) throw UsageError("closed_form_check needs 1 <= m <= 2l");
    const std::int64_t N = 2 * l;
    const CyclotomicContext ctx(N, l);
    const ExactPMF pmf = pmf_X(ctx, m);
    CaseReport rep{"closed_form", N, l, m, {}};

    AtomMap expected;
    for (std::int64_t k = std::max<std::int64_t>(0, m - l); k <= std::min(m, l); ++k)
        expected[ctx.constant(2 * k - m)] += binomial(l, k) * binomial(l, m - k);
    const bool law_ok = expected == pmf.entries && pmf.denominator == binomial(2 * l, m);
    rep.checks.push_back(pass_or_fail("hypergeometric_law", law_ok, "C(l,k)C(l,m-k)/C(2l,m) at 2k-m",
                                      law_ok ? "equal" : "laws differ"));

    if (m == l) {
        bool ok = true;
        for (std::int64_t k = 0; k <= l; ++k) {
            const BigInt b = binomial(l, k);
            ok = ok && pmf.probability(ctx.constant(2 * k - l)) == BigRational(b * b, binomial(2 * l, l));
        }
        rep.checks.push_back(pass_or_fail("central_law", ok, "C(l,k)^2/C(2l,l) at 2k-l", ok ? "equal" : "laws differ"));
    } else {
        rep.checks.push_back(not_run("central_law", CheckStatus::NotApplicable, "requires m = l"));
    }

    const BigRational want(BigInt(m) * (2 * l - m), BigInt(2 * l - 1));
    const BigRational var = variance(pmf);
    rep.checks.push_back(pass_or_fail("variance", var == want, to_string(want), to_string(var)));

    const std::int64_t args[] = {l, m};
    const IdentityCase id = evaluate_identity("half_turn_square_sum", args);
    rep.checks.push_back(pass_or_fail("half_turn_square_sum", id.holds, id.rhs.str(), id.lhs.str()));
    return rep;
}

CaseReport trig_sum_check(std::int64_t N, std::int64_t l) {
    if (N < 2 || l < 1 || l > N - 1) throw UsageError("trig_sum_check needs 1 <= l <= N-1");
    CaseReport rep{"trig_sum", N, l, 0, {}};
    auto sums = [&](double factor) {
        double c = 0.0, s = 0.0;
        for (std::int64_t k = 1; k <= N; ++k) {
            // Reduce the argument exactly before scaling to keep large N accurate.
            const auto r = static_cast<double>((static_cast<__int128>(k) * l * static_cast<std::int64_t>(factor)) %
                                               static_cast<__int128>(N));
            const double angle = 2.0 * std::numbers::pi * r / static_cast<double>(N);
            c += std::cos(angle);
            s += std::sin(angle);
        }
        return std::pair{c, s};
    };
    auto fmt = [](double c, double s) {
        std::ostringstream os;
        os.precision(3);
        os << "cos_sum=" << c << ", sin_sum=" << s;
        return os.str();
    };
    const auto [c1, s1] = sums(1);
    rep.checks.push_back(pass_or_fail("trig_sum", std::abs(c1) < kTrigTolerance && std::abs(s1) < kTrigTolerance,
                                      "|sums| < 1e-9", fmt(c1, s1)));
    const auto [c2, s2] = sums(2);
    if (N == 2 * l)
        rep.checks.push_back(not_run("trig_sum_double_angle", CheckStatus::Skipped,
                                     "N = 2l: every term is 1 and the cosine sum equals N", fmt(c2, s2)));
    else
        rep.checks.push_back(pass_or_fail("trig_sum_double_angle",
                                          std::abs(c2) < kTrigTolerance && std::abs(s2) < kTrigTolerance,
                                          "|sums| < 1e-9", fmt(c2, s2)));
    return rep;
}

}  // namespace cyclosum
