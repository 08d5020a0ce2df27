#ifndef OWDVV_CATALOG_HPP
#define OWDVV_CATALOG_HPP

#include <cstdint>

#include "owdvv/open.hpp"

namespace owdvv {

/// Linear transport from the derived normalization to the paper's printed
/// one: t is unchanged for every family here, F and Omega pick up scalars.
struct Calibration {
    Rational f_scale{1};
    Rational omega_scale{1};
};

struct NumericDefaults {
    int q_terms = 40;
    double tol = 1e-9;
    int samples = 20;
    std::uint64_t seed = 20250809ULL;
};

enum class CatalogMode { Exact, Numeric };

struct PaperSolution {
    CoefElement F;
    OmegaFunction omega;
};

struct CatalogEntry {
    std::string name;
    std::string family;
    CatalogMode mode = CatalogMode::Exact;
    std::optional<SuperpotentialSpec> spec;  // absent for the numeric h1_1 entry
    Calibration calibration;
    std::optional<PaperSolution> paper_solution;
    std::string paper_f_text, paper_omega_text;
    /// false: eta/c/main-identity only (the potential leaves the ring).
    bool full_pipeline = true;
    NumericDefaults numeric;
    std::string description;
};

/// name in {h0_1, h0_2, h0_n, h0_n_0, trig1, trig2, h1_1}; parameter is the
/// n of the parametric families.
CatalogEntry catalog_get(const std::string& name, std::optional<long> parameter = std::nullopt);

struct CatalogInfo {
    std::string name;
    CatalogMode mode;
    int arity;  // number of required parameters
    std::string description;
};
std::vector<CatalogInfo> catalog_list();

class unknown_catalog_entry : public std::runtime_error {
public:
    explicit unknown_catalog_entry(const std::string& w) : std::runtime_error(w) {}
};

}  // namespace owdvv

#endif
