#pragma once

#include <random>

#include "nilcoh/catalog.hpp"

// Shared fixtures: catalog structures and deterministic random generators.
namespace helpers {

using namespace nilcoh;

inline ComplexStructure catalog_structure(const std::string& name) {
    return document_structure(catalog_document(name));
}

inline Scalar random_rational(std::mt19937& rng, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 4);
    return Scalar(Rational(num(rng), den(rng)));
}

inline std::vector<Scalar> random_vector(std::mt19937& rng, std::size_t n) {
    std::vector<Scalar> v(n);
    for (auto& s : v) s = random_rational(rng);
    return v;
}

inline ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                 FieldTag field = FieldTag::Q) {
    ExactMatrix m(rows, cols, field);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_rational(rng));
    return m;
}

// Random rational almost-complex structure: conjugate the block J by a
// random invertible rational matrix. Integrability is *not* guaranteed.
inline ExactMatrix random_acs_matrix(std::mt19937& rng, std::size_t n2) {
    ExactMatrix jstd(n2, n2, FieldTag::Q);
    for (std::size_t k = 0; k + 1 < n2; k += 2) {
        jstd.set(k + 1, k, Scalar(1));
        jstd.set(k, k + 1, Scalar(-1));
    }
    while (true) {
        ExactMatrix p = random_matrix(rng, n2, n2);
        try {
            ExactMatrix pinv = inverse(p);
            return p * jstd * pinv;
        } catch (const Error&) {
            continue; // singular sample; retry
        }
    }
}

} // namespace helpers
