#pragma once

#include "nilcoh/spectral.hpp"
#include "nilcoh/deformation.hpp"

namespace nilcoh {

// Report renderers. Formats: "text", "csv" (scan and diamond tables only),
// "json". Output is deterministic: fixed key order, no timestamps.

std::string render_hodge(const std::string& name, const HodgeTable& t, const std::string& format);
std::string render_hodge_single(const std::string& name, std::size_t p, std::size_t q,
                                std::size_t value, const std::vector<std::string>& reps,
                                const std::string& format);

// Cohomology class representatives at one bidegree as monomial combinations
// (w1^w2, w1^cw2, …).
std::vector<std::string> representative_strings(const BigradedComplex& c, std::size_t p,
                                                std::size_t q);
std::string render_betti(const std::string& name, const std::vector<std::size_t>& betti,
                         const std::string& format);

struct SeriesData {
    std::string name;
    DescendingSeries descending;
    JSeries j;
    std::vector<Subspace> annihilators;
};
std::string render_series(const SeriesData& s, const std::string& format);

std::string render_basis(const std::string& name, const AdaptedBasis& ab,
                         const GeneratorDerivatives& gd, const std::string& format);

std::string render_spectral(const LadderReport& r, const std::string& format);

std::string render_scan(const ScanReport& r, std::size_t n, const std::string& format);

struct ClassifyData {
    std::string name;
    bool integrable = false;
    bool rational = false;
    bool abelian = false;
    bool parallelizable = false;
};
std::string render_classify(const ClassifyData& c, const std::string& format);

// Pretty-printers shared by renderers and error messages.
std::string linear_combo(const std::vector<Scalar>& row, const std::string& prefix);
std::string subspace_str(const Subspace& s, const std::string& prefix);

} // namespace nilcoh
