#include "nilcoh/deformation.hpp"

#include <algorithm>
#include <thread>

namespace nilcoh {

ComplexFamily family_from_rows(const ComplexStructure& J, const ExactMatrix& const_rows,
                               const ExactMatrix& t_rows) {
    AdaptedBasis ab = adapted_basis(J);
    const std::size_t n = ab.n;
    if (const_rows.rows() != n || t_rows.rows() != n || const_rows.cols() != 2 * n ||
        t_rows.cols() != 2 * n)
        fail_validation("family: expected n x 2n constant and parameter rows");
    return ComplexFamily{J, std::move(ab), const_rows, t_rows, "explicit spans"};
}

ComplexFamily family_from_rule(const ComplexStructure& J, std::size_t deform_index,
                               std::size_t conjugate_index) {
    AdaptedBasis ab = adapted_basis(J);
    const std::size_t n = ab.n;
    if (deform_index < 1 || deform_index > n || conjugate_index < 1 || conjugate_index > n)
        fail_validation("family: rule indices out of range");
    ExactMatrix t_rows(n, 2 * n, ab.field);
    {
        auto conj_row = ab.omegas.row(conjugate_index - 1);
        for (std::size_t c = 0; c < 2 * n; ++c)
            if (!conj_row[c].is_zero()) t_rows.set(deform_index - 1, c, conj_row[c].conj());
    }
    std::string rule = "omega" + std::to_string(deform_index) + " -> omega" +
                       std::to_string(deform_index) + " + t*conj(omega" +
                       std::to_string(conjugate_index) + ")";
    ExactMatrix const_rows = ab.omegas;
    return ComplexFamily{J, std::move(ab), std::move(const_rows), std::move(t_rows),
                         std::move(rule)};
}

ComplexFamily general_deformation(const ComplexStructure& J) {
    AdaptedBasis ab = adapted_basis(J);
    if (ab.n < 2)
        fail_validation("general_deformation: needs n >= 2 (a closed omega_1 distinct from "
                        "the deformed form)");
    return family_from_rule(J, ab.n, 1);
}

ComplexStructure instantiate(const ComplexFamily& fam, const Scalar& t) {
    const std::size_t n = fam.basis.n;
    const std::size_t d = 2 * n;
    const FieldTag field = join(fam.basis.field, t.field());

    ExactMatrix span(n, d, field);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            Scalar v = fam.const_rows.at(r, c) + t * fam.t_rows.at(r, c);
            if (!v.is_zero()) span.set(r, c, v);
        }
    try {
        return structure_from_span(fam.base.algebra(), span,
                                   fam.base.name() + "[t=" + t.str() + "]");
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::degenerate_parameter)
            fail(ErrorKind::degenerate_parameter,
                 "degenerate parameter t = " + t.str() + ": deformed span meets its conjugate");
        throw;
    }
}

ScanReport scan(const ComplexFamily& fam, std::vector<Scalar> samples, std::size_t threads) {
    bool has_zero = std::any_of(samples.begin(), samples.end(),
                                [](const Scalar& s) { return s.is_zero(); });
    if (!has_zero) samples.insert(samples.begin(), Scalar(0));

    ScanReport report;
    report.family_rule = fam.rule;
    report.samples.resize(samples.size());

    auto evaluate = [&](std::size_t idx) {
        ScanSample sample;
        sample.t = samples[idx];
        try {
            ComplexStructure jt = instantiate(fam, samples[idx]);
            sample.rational = jt.is_rational();
            sample.integrable = jt.is_integrable();
            if (sample.integrable) {
                AdaptedBasis ab = adapted_basis(jt);
                BigradedComplex cx = BigradedComplex::build(jt, ab);
                sample.hodge = full_diamond(cx);
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::degenerate_parameter) throw;
            sample.degenerate = true;
            sample.reason = e.what();
        }
        report.samples[idx] = std::move(sample);
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < samples.size(); ++i) evaluate(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        std::size_t nt = std::min(threads, samples.size());
        for (std::size_t w = 0; w < nt; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < samples.size(); i += nt) evaluate(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    const ScanSample* base = nullptr;
    for (const auto& s : report.samples)
        if (s.t.is_zero()) base = &s;
    if (base == nullptr || !base->hodge)
        fail_internal("scan: base sample t = 0 did not produce a diamond");
    const std::size_t n = base->hodge->n;
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; q <= n; ++q) {
            auto& set = report.constancy[{p, q}];
            for (std::size_t i = 0; i < report.samples.size(); ++i) {
                const auto& s = report.samples[i];
                if (s.hodge && s.hodge->h[p][q] == base->hodge->h[p][q]) set.push_back(i);
            }
        }
    return report;
}

} // namespace nilcoh
