#ifndef OWDVV_PIPELINE_HPP
#define OWDVV_PIPELINE_HPP

#include "owdvv/catalog.hpp"

namespace owdvv {

struct PaperComparison {
    bool has_paper = false;
    bool f_available = false;
    bool f_match = false;
    std::string f_difference;  // transported minus printed, canonical string
    bool omega_available = false;
    bool omega_match = false;
    std::string omega_difference;
};

struct SkippedCheck {
    std::string name;
    std::string reason;
};

/// Result of the derive pipeline on an exact superpotential.
struct DeriveOutcome {
    SuperpotentialSpec spec;
    FrobeniusData frob;
    CheckReport unit_axiom, closed, main_identity, first_line;
    std::optional<CheckReport> quasi_homog;
    std::optional<IntegrationConstants> ic;
    std::optional<CoefElement> F_transported;
    std::optional<OmegaFunction> omega, omega_transported;
    std::optional<CheckReport> open, oriented;
    CheckReport unit_conditions;
    std::vector<SkippedCheck> skipped;
    PaperComparison paper;
    bool eta_constant_warning = false;

    bool all_passed() const;
    std::vector<const CheckReport*> reports() const;
};

DeriveOutcome run_derive(const SuperpotentialSpec& spec);
DeriveOutcome run_derive_entry(const CatalogEntry& entry);

/// Verification-only pipeline for a user-supplied pair (F, Omega); eta is
/// read off F as c_{1ab} and must be constant and nondegenerate.
struct VerifyOutcome {
    bool eta_constant = false;
    bool eta_nondegenerate = false;
    FracMatrix eta;
    CheckReport closed, open, oriented, unit_conditions;
    bool all_passed() const;
};

VerifyOutcome run_verify(const CoefElement& F, const OmegaFunction& omega, int n,
                         const std::vector<std::string>& names);

}  // namespace owdvv

#endif
