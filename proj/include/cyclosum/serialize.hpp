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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cyclosum/bernoulli.hpp"
#include "cyclosum/coherence.hpp"
#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/identities.hpp"
#include "cyclosum/moments.hpp"
#include "cyclosum/monte_carlo.hpp"
#include "cyclosum/subset_distribution.hpp"
#include "cyclosum/theorem_verifier.hpp"

namespace cyclosum {

using Json = nlohmann::ordered_json;

/// Rows rendered as CSV or as an aligned text table.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);
std::string to_text(const Table& t);
/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

/// 12 significant digits, with -0 mapped to 0.
double round_sig(double x);
std::string format_double(double x);

Json elem_json(const CyclotomicContext& ctx, const CycElem& e);
Json rat_json(const CyclotomicContext& ctx, const CycRat& q);

Json pmf_json(const ExactPMF& pmf);
Table pmf_table(const ExactPMF& pmf);
Json components_json(const CyclotomicContext& ctx, const ComponentLaws& laws);
Json uniformity_json(const UniformityReport& u);

Json moment_json(const CyclotomicContext& ctx, const MomentReport& r);

Json case_json(const CaseReport& c);
Table case_table(const CaseReport& c);
Json sweep_json(const SweepReport& r);
/// Failures for a sweep; every scanned case for a conjecture scan.
Table sweep_table(const SweepReport& r);

Json identities_json(const std::vector<IdentityCase>& cases);
Table identities_table(const std::vector<IdentityCase>& cases);

Json mask_pmf_json(const MaskPMF& pmf);
Json tilde_json(const CyclotomicContext& ctx, const TildeComparison& t);

Json sample_json(const SampleEstimate& s);
Table sample_table(const SampleEstimate& s);
Json cross_check_json(const CyclotomicContext& ctx, const CrossCheckReport& r);

Json coherence_json(const CoherenceReport& r);
Table coherence_table(const CoherenceReport& r);
Table pairwise_table(const std::vector<PairMagnitude>& pairs);

}  // namespace cyclosum
