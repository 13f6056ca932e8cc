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

#include "cyclosum/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace cyclosum {

namespace {

Json complex_json(std::complex<double> z) { return Json::array({round_sig(z.real()), round_sig(z.imag())}); }

Json strings(const std::vector<std::string>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s);
    return out;
}

Json coeffs_json(const CycElem& e) {
    Json out = Json::array();
    for (const auto& c : e.coeffs) out.push_back(c.str());
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join_ints(const std::vector<std::int64_t>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

Json atoms_json(const CyclotomicContext& ctx, const AtomMap& atoms, const BigInt& den) {
    Json out = Json::array();
    for (const auto& [key, count] : atoms) {
        Json a = elem_json(ctx, key);
        a["count"] = count.str();
        a["probability"] = to_string(BigRational(count, den));
        out.push_back(std::move(a));
    }
    return out;
}

Json scan_case_json(const ScanCase& s) {
    return Json{{"N", s.N},
                {"l", s.l},
                {"m", s.m},
                {"n_is_prime", s.n_is_prime},
                {"is_uniform", s.is_uniform},
                {"support_size", s.support_size.str()},
                {"binom", s.binom.str()}};
}

}  // namespace

double round_sig(double x) {
    if (!std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", round_sig(x));
    return buf;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_csv(const Table& t) {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_field(cells[i]);
        }
        out += '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return out;
}

std::string to_text(const Table& t) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto measure = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    };
    measure(t.header);
    for (const auto& r : t.rows) measure(r);
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s += "  ";
            s += cells[i];
            if (i + 1 < cells.size() && i < width.size()) s.append(width[i] - cells[i].size(), ' ');
        }
        out += s + '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return out;
}

Json elem_json(const CyclotomicContext& ctx, const CycElem& e) {
    Json j{{"coeffs", coeffs_json(e)}, {"approx", complex_json(ctx.to_complex(e))}};
    const Classification c = ctx.classify(e);
    if (c.rational_value) j["exact"] = c.rational_value->str();
    return j;
}

Json rat_json(const CyclotomicContext& ctx, const CycRat& q) {
    Json j{{"coeffs", coeffs_json(q.num)}, {"den", q.den.str()}, {"approx", complex_json(ctx.to_complex(q))}};
    if (auto r = ctx.rational_value(q)) j["exact"] = to_string(*r);
    return j;
}

Json pmf_json(const ExactPMF& pmf) {
    const auto& ctx = pmf.ctx;
    return Json{{"N", ctx.N()},
                {"l", ctx.l()},
                {"m", pmf.m},
                {"order", ctx.order()},
                {"basis", "coefficients of 1, z, ..., z^(phi-1) with z = exp(-2 pi i / order)"},
                {"denominator", pmf.denominator.str()},
                {"atoms", atoms_json(ctx, pmf.entries, pmf.denominator)}};
}

Table pmf_table(const ExactPMF& pmf) {
    Table t{{"coeffs", "re", "im", "count", "probability"}, {}};
    for (const auto& [key, count] : pmf.entries) {
        std::string coeffs;
        for (std::size_t i = 0; i < key.coeffs.size(); ++i) coeffs += (i ? " " : "") + key.coeffs[i].str();
        const auto z = pmf.ctx.to_complex(key);
        t.rows.push_back({coeffs, format_double(z.real()), format_double(z.imag()), count.str(),
                          to_string(BigRational(count, pmf.denominator))});
    }
    return t;
}

Json components_json(const CyclotomicContext& ctx, const ComponentLaws& laws) {
    auto law = [&](const ComponentPMF& p) {
        Json out = Json::array();
        for (const auto& [key, count] : p.entries) {
            Json a = elem_json(ctx, key);
            a["value"] = round_sig(p.numeric_value(ctx, key));
            a["count"] = count.str();
            a["probability"] = to_string(BigRational(count, p.denominator));
            out.push_back(std::move(a));
        }
        return out;
    };
    Json joint = Json::array();
    for (const auto& [keys, count] : laws.joint) {
        joint.push_back(Json{{"U", round_sig(laws.U.numeric_value(ctx, keys.first))},
                             {"V", round_sig(laws.V.numeric_value(ctx, keys.second))},
                             {"count", count.str()},
                             {"probability", to_string(BigRational(count, laws.U.denominator))}});
    }
    return Json{{"key_convention", "U atoms keyed by 2U = z + conj(z); V atoms keyed by 2iV = z - conj(z)"},
                {"U", law(laws.U)},
                {"V", law(laws.V)},
                {"joint", std::move(joint)}};
}

Json uniformity_json(const UniformityReport& u) {
    Json w = Json::array();
    for (const auto& c : u.collision_witnesses)
        w.push_back(Json{{"first", c.first}, {"second", c.second}, {"sum", coeffs_json(c.sum)}});
    return Json{{"support_size", u.support_size.str()},
                {"binom", u.binom.str()},
                {"is_uniform", u.is_uniform},
                {"collision_witnesses", std::move(w)}};
}

Json moment_json(const CyclotomicContext& ctx, const MomentReport& r) {
    return Json{{"k", r.k},
                {"value", rat_json(ctx, r.value)},
                {"is_real", r.is_real},
                {"is_rational", r.is_rational},
                {"predicted_zero", r.predicted_zero}};
}

Json case_json(const CaseReport& c) {
    Json checks = Json::array();
    for (const auto& r : c.checks) {
        Json j{{"name", r.name}, {"status", std::string(to_string(r.status))}};
        if (!r.expected.empty()) j["expected"] = r.expected;
        if (!r.got.empty()) j["got"] = r.got;
        if (!r.reason.empty()) j["reason"] = r.reason;
        checks.push_back(std::move(j));
    }
    return Json{{"kind", c.kind}, {"N", c.N}, {"l", c.l}, {"m", c.m}, {"passed", c.passed()}, {"checks", std::move(checks)}};
}

Table case_table(const CaseReport& c) {
    Table t{{"N", "l", "m", "check", "status", "expected", "got", "reason"}, {}};
    for (const auto& r : c.checks)
        t.rows.push_back({std::to_string(c.N), std::to_string(c.l), std::to_string(c.m), r.name,
                          std::string(to_string(r.status)), r.expected, r.got, r.reason});
    return t;
}

Json sweep_json(const SweepReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back(Json{{"N", f.N}, {"l", f.l}, {"m", f.m}, {"check", f.check}, {"expected", f.expected}, {"got", f.got}});
    Json j{{"kind", r.kind},
           {"notes", strings(r.notes)},
           {"cases_run", r.cases_run},
           {"passed", r.passed()},
           {"failures", std::move(failures)}};
    if (r.kind == "conjecture_scan") {
        Json ce = Json::array();
        for (const auto& s : r.counterexamples) ce.push_back(scan_case_json(s));
        Json scan = Json::array();
        for (const auto& s : r.scan) scan.push_back(scan_case_json(s));
        j["counterexamples"] = std::move(ce);
        j["scan"] = std::move(scan);
    } else {
        Json cases = Json::array();
        for (const auto& c : r.cases) cases.push_back(case_json(c));
        j["cases"] = std::move(cases);
    }
    j["skipped"] = strings(r.skipped);
    return j;
}

Table sweep_table(const SweepReport& r) {
    if (r.kind == "conjecture_scan") {
        Table t{{"N", "l", "m", "n_is_prime", "is_uniform", "support_size", "binom", "counterexample"}, {}};
        for (const auto& s : r.scan)
            t.rows.push_back({std::to_string(s.N), std::to_string(s.l), std::to_string(s.m), bool_str(s.n_is_prime),
                              bool_str(s.is_uniform), s.support_size.str(), s.binom.str(),
                              bool_str(s.is_uniform != s.n_is_prime)});
        return t;
    }
    Table t{{"N", "l", "m", "check", "status", "expected", "got", "reason"}, {}};
    for (const auto& c : r.cases)
        for (const auto& row : case_table(c).rows) t.rows.push_back(row);
    return t;
}

Json identities_json(const std::vector<IdentityCase>& cases) {
    Json arr = Json::array();
    std::size_t failures = 0;
    for (const auto& c : cases) {
        failures += c.holds ? 0 : 1;
        arr.push_back(Json{{"name", c.name},
                           {"params", c.params},
                           {"lhs", c.lhs.str()},
                           {"rhs", c.rhs.str()},
                           {"divisible", c.divisible},
                           {"holds", c.holds}});
    }
    return Json{{"cases_run", cases.size()}, {"failures", failures}, {"cases", std::move(arr)}};
}

Table identities_table(const std::vector<IdentityCase>& cases) {
    Table t{{"name", "params", "lhs", "rhs", "holds"}, {}};
    for (const auto& c : cases) t.rows.push_back({c.name, join_ints(c.params, ' '), c.lhs.str(), c.rhs.str(), bool_str(c.holds)});
    return t;
}

Json mask_pmf_json(const MaskPMF& pmf) {
    const auto& ctx = pmf.ctx;
    return Json{{"N", ctx.N()},
                {"l", ctx.l()},
                {"m", pmf.m},
                {"denominator", pmf.denominator.str()},
                {"atoms", atoms_json(ctx, pmf.entries, pmf.denominator)}};
}

Json tilde_json(const CyclotomicContext& ctx, const TildeComparison& t) {
    Json moments = Json::array();
    for (const auto& r : t.tilde_moments) moments.push_back(moment_json(ctx, r));
    Json deltas = Json::array();
    for (const auto& d : t.moment_deltas) deltas.push_back(Json{{"k", d.k}, {"delta", rat_json(ctx, d.delta)}});
    Json j{{"tilde_mean", rat_json(ctx, t.tilde_mean)},
           {"tilde_variance", to_string(t.tilde_variance)},
           {"x_variance", to_string(t.x_variance)}};
    j["variance_ratio"] = t.variance_ratio ? Json(to_string(*t.variance_ratio)) : Json(nullptr);
    j["tilde_moments"] = std::move(moments);
    j["moment_deltas"] = std::move(deltas);
    return j;
}

Json sample_json(const SampleEstimate& s) {
    return Json{{"N", s.N},
                {"l", s.l},
                {"m", s.m},
                {"trials", s.trials},
                {"seed", s.seed},
                {"rng", s.rng},
                {"sampler", s.strategy},
                {"mean_hat", complex_json(s.mean_hat)},
                {"mean_band", round_sig(s.mean_band)},
                {"var_hat", round_sig(s.var_hat)},
                {"stderr_var", round_sig(s.stderr_var)},
                {"closed_form_var", round_sig(s.closed_form_var)},
                {"z_score", round_sig(s.z_score)}};
}

Table sample_table(const SampleEstimate& s) {
    return Table{{"N", "l", "m", "trials", "seed", "mean_re", "mean_im", "var_hat", "stderr_var", "closed_form_var", "z_score"},
                 {{std::to_string(s.N), std::to_string(s.l), std::to_string(s.m), std::to_string(s.trials),
                   std::to_string(s.seed), format_double(s.mean_hat.real()), format_double(s.mean_hat.imag()),
                   format_double(s.var_hat), format_double(s.stderr_var), format_double(s.closed_form_var),
                   format_double(s.z_score)}}};
}

Json cross_check_json(const CyclotomicContext& ctx, const CrossCheckReport& r) {
    Json atoms = Json::array();
    for (const auto& a : r.atoms) {
        Json j = elem_json(ctx, a.key);
        j["probability"] = to_string(a.probability);
        j["frequency"] = round_sig(a.frequency);
        j["band"] = round_sig(a.band);
        j["within"] = a.within;
        atoms.push_back(std::move(j));
    }
    return Json{{"trials", r.trials}, {"seed", r.seed}, {"passed", r.passed}, {"unexpected", r.unexpected}, {"atoms", std::move(atoms)}};
}

Json coherence_json(const CoherenceReport& r) {
    return Json{{"N", r.N},
                {"rows", r.rows},
                {"mu", round_sig(r.mu)},
                {"welch", round_sig(r.welch)},
                {"sigma_ratio", round_sig(r.sigma_ratio)},
                {"satisfied", r.satisfied}};
}

Table coherence_table(const CoherenceReport& r) {
    return Table{{"N", "rows", "mu", "welch", "sigma_ratio", "satisfied"},
                 {{std::to_string(r.N), join_ints(r.rows, ' '), format_double(r.mu), format_double(r.welch),
                   format_double(r.sigma_ratio), bool_str(r.satisfied)}}};
}

Table pairwise_table(const std::vector<PairMagnitude>& pairs) {
    Table t{{"i", "j", "magnitude"}, {}};
    for (const auto& p : pairs) t.rows.push_back({std::to_string(p.i), std::to_string(p.j), format_double(p.magnitude)});
    return t;
}

}  // namespace cyclosum
