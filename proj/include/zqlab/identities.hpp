#pragma once

// One verifier per identity: both sides computed along independent code paths,
// packaged as IdentityReports.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zqlab/report.hpp"
#include "zqlab/testfunction.hpp"
#include "zqlab/zeta.hpp"

namespace zqlab::identities {

IdentityReport verify_lambda_exp(double y, const VerifierConfig& cfg);
IdentityReport verify_lambda_gauss(double y, const VerifierConfig& cfg);
IdentityReport verify_lambda_k0(double y, const VerifierConfig& cfg);
IdentityReport verify_lambda_riesz(double y, const VerifierConfig& cfg);
IdentityReport verify_cohen_lambda(double x, const VerifierConfig& cfg);
IdentityReport verify_rg_lambda(double x, const VerifierConfig& cfg);
IdentityReport verify_mu_ramanujan(double alpha, const VerifierConfig& cfg);
IdentityReport verify_cohen_sigma(double a, double b, double x, const VerifierConfig& cfg);
IdentityReport verify_cohen_d2(double x, const VerifierConfig& cfg);
IdentityReport verify_rg_sigma(double a, double b, double x, const VerifierConfig& cfg);
IdentityReport verify_rg_d2(double x, const VerifierConfig& cfg);
std::vector<IdentityReport> verify_cn_sums(const VerifierConfig& cfg);
IdentityReport verify_d2_residue_constants(const VerifierConfig& cfg);
std::vector<IdentityReport> verify_lemmas(const VerifierConfig& cfg);
std::vector<IdentityReport> verify_baselines(const VerifierConfig& cfg);
IdentityReport verify_d2_kernel_experimental(const VerifierConfig& cfg);

// Shared zero table; refined once per process for the largest count requested.
const zeta::ZeroTable& shared_zero_table(int count);

using ParamMap = std::map<std::string, double>;

struct RegistryEntry {
  std::string id;
  std::string param_hint;
  std::function<std::vector<IdentityReport>(const ParamMap&, const VerifierConfig&)> run;
};

// Registered ids: lambda-exp, lambda-gauss, lambda-k0, lambda-riesz,
// cohen-lambda, rg-lambda, mu-ramanujan, cohen-sigma, rg-sigma, cohen-d2,
// rg-d2, cn-sums, d2-residues, lemmas, baselines.
const std::vector<RegistryEntry>& registry();
std::optional<RegistryEntry> find_identity(const std::string& id);

// Per-identity default tolerances and parameters (the acceptance values).
VerifierConfig default_config(const std::string& id);

}  // namespace zqlab::identities
