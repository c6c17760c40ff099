#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qhom/constructions.hpp"
#include "qhom/io.hpp"

namespace qhom {

struct BoundEntry {
    std::string id;
    std::string formula;
    std::string provenance;
    bool applicable = false;
    long long value = 0;     // meaningful when applicable
    std::string status;      // "ok" or the reason the entry is absent
};

struct CertSummary {
    int m = 0, n = 0;
    std::string provenance;
    int bound = 0;
    int samples_checked = 0;
};

template <class F>
struct BoundReport {
    std::string algebra_name;
    int dim = 0;
    int LL = 0;
    std::string field;
    std::vector<std::pair<std::string, std::string>> pd_simples;
    std::string gldim;
    std::string V_str, V_complement_str;
    int layer_length_lambda = 0;
    std::string pdV_str;
    std::vector<BoundEntry> entries;
    std::optional<long long> best;
    std::vector<CertSummary> certificates;
    std::vector<std::string> warnings;
};

namespace detail {

inline BoundEntry bound_entry(std::string id, std::string formula, std::string provenance, bool applicable,
                              long long value, std::string status) {
    return BoundEntry{std::move(id), std::move(formula), std::move(provenance), applicable, value,
                      std::move(status)};
}

} // namespace detail

// Evaluate the derived-dimension upper-bound family over the stored
// invariants, with hypothesis tracking instead of silent skipping.
template <class F>
BoundReport<F> derived_dim_bounds(const AlgebraPtr<F>& A, const SimpleSet& V,
                                  const ITCertificate<F>* cert, int cutoff, std::uint64_t seed = 0) {
    if (!V.valid_for(A)) throw InputError("V contains unknown vertices");
    BoundReport<F> rep;
    rep.algebra_name = A->name();
    rep.dim = A->dim();
    Representation<F> lambda = regular_module(A);
    rep.LL = loewy_length(lambda);

    std::vector<PdResult<F>> pd_table;
    for (int v = 0; v < A->quiver().num_vertices(); ++v) {
        pd_table.push_back(projective_dimension(simple(A, v), cutoff, seed));
        rep.pd_simples.emplace_back(A->quiver().vertex_name(v), pd_table.back().to_string());
        if (pd_table.back().is_undetermined())
            rep.warnings.push_back("pd S(" + A->quiver().vertex_name(v) + ") undetermined at cutoff " +
                                   std::to_string(cutoff) + "; treated as infinite");
    }
    PdResult<F> gld = detail::pd_max(pd_table);
    rep.gldim = gld.to_string();

    rep.V_str = V.to_string(A);
    SimpleSet comp = SimpleSet::of(V.complement(A));
    rep.V_complement_str = comp.to_string(A);
    const int ll = layer_length(lambda, V);
    rep.layer_length_lambda = ll;

    PdResult<F> pdV = PdResult<F>::minus_one();
    {
        std::vector<PdResult<F>> parts;
        for (int v : V.vertices) parts.push_back(pd_table[v]);
        if (!parts.empty()) pdV = detail::pd_max(parts);
    }
    rep.pdV_str = pdV.to_string();
    const bool pdV_fin = pdV.is_finite();
    const long long pv = pdV_fin ? pdV.finite_value() : 0;
    const std::string pd_reason = pdV.is_undetermined() ? "inapplicable (pd undetermined)"
                                                        : "inapplicable (pd V infinite)";

    rep.entries.push_back(detail::bound_entry("B1", "LL(Lambda)-1", "loewy length", true, rep.LL - 1, "ok"));

    if (gld.is_finite())
        rep.entries.push_back(detail::bound_entry("B2", "gldim(Lambda)", "global dimension", true,
                                                  gld.finite_value(), "ok"));
    else
        rep.entries.push_back(detail::bound_entry("B2", "gldim(Lambda)", "global dimension", false, 0,
                                                  gld.is_undetermined() ? "inapplicable (pd undetermined)"
                                                                        : "inapplicable (gldim infinite)"));

    auto layered = [&](std::string id, std::string formula, std::string prov, bool extra_ok,
                       const std::string& extra_reason, long long value) {
        if (!pdV_fin)
            rep.entries.push_back(detail::bound_entry(id, formula, prov, false, 0, pd_reason));
        else if (!extra_ok)
            rep.entries.push_back(detail::bound_entry(id, formula, prov, false, 0, extra_reason));
        else
            rep.entries.push_back(detail::bound_entry(id, formula, prov, true, value, "ok"));
    };

    layered("B3", "(pdV+2)(ll+1)-2", "layer length product", true, "", (pv + 2) * (ll + 1) - 2);
    layered("B4", "2(pdV+ll)+1", "layer length sum", true, "", 2 * (pv + ll) + 1);
    layered("B5", "pdV+3", "small layer length", ll <= 2, "inapplicable (needs ll <= 2)", pv + 3);
    layered("B6", "2ll+pdV-1", "torsion layer certificate bound", ll >= 2, "inapplicable (needs ll >= 2)",
            2 * ll + pv - 1);
    layered("B7", "max(2ll+pdV-1, pdV+3)", "combined layer bound", true, "",
            std::max(2 * ll + pv - 1, pv + 3));

    if (cert) {
        rep.entries.push_back(detail::bound_entry("B8", "2m+n+1", "supplied certificate", true, cert->bound(),
                                                  "ok"));
        if (cert->m == 1)
            rep.entries.push_back(detail::bound_entry("B9", "n+3", "(1,n) certificate", true,
                                                      static_cast<long long>(cert->n) + 3, "ok"));
        else
            rep.entries.push_back(detail::bound_entry("B9", "n+3", "(1,n) certificate", false, 0,
                                                      "inapplicable (certificate is not (1,n))"));
        rep.certificates.push_back(CertSummary{cert->m, cert->n, cert->provenance, cert->bound(),
                                               static_cast<int>(cert->evidence.size())});
    } else {
        rep.entries.push_back(
            detail::bound_entry("B8", "2m+n+1", "supplied certificate", false, 0, "inapplicable (no certificate)"));
        rep.entries.push_back(
            detail::bound_entry("B9", "n+3", "(1,n) certificate", false, 0, "inapplicable (no certificate)"));
    }

    for (const auto& e : rep.entries)
        if (e.applicable) rep.best = rep.best ? std::min(*rep.best, e.value) : e.value;

    if (A->name() == "example2") {
        rep.warnings.push_back("example2 reference values state layer_length(Lambda) as both m and m+1; "
                               "computed value is " + std::to_string(ll));
        rep.warnings.push_back("example2 reference values state pd V = 2 next to bound arithmetic using "
                               "pd V = 1; computed value is " + pdV.to_string());
    }
    return rep;
}

// Catalog of (m, n) certificate parameters available for this algebra,
// each carrying the bound 2m+n+1.
struct CatalogEntry {
    int m = 0, n = 0;
    std::string provenance;
    int bound = 0;
};

template <class F>
std::vector<CatalogEntry> it_certificates(const AlgebraPtr<F>& A, int cutoff, std::uint64_t seed = 0) {
    std::vector<CatalogEntry> base;
    auto push = [&](int m, int n, const std::string& prov) {
        base.push_back(CatalogEntry{m, n, prov, 2 * m + n + 1});
    };

    PdResult<F> gld = global_dimension(A, cutoff, seed);
    if (gld.is_finite() && gld.finite_value() >= 0) push(gld.finite_value(), 0, "finite global dimension");

    Representation<F> lambda = regular_module(A);
    int LL = loewy_length(lambda);
    if (LL >= 2) {
        push(LL - 1, 0, "loewy chain");
        push(LL - 2, 1, "loewy chain, projective base term");
        push(LL - 2, 2, "loewy chain, index shift");
    }

    // torsion layer certificates for the full finite-pd simple set and for V = {}
    std::vector<int> fin;
    for (int v = 0; v < A->quiver().num_vertices(); ++v)
        if (projective_dimension(simple(A, v), cutoff, seed).is_finite()) fin.push_back(v);
    std::vector<SimpleSet> cands{SimpleSet::of(fin), SimpleSet::none()};
    for (const SimpleSet& V : cands) {
        int ll = layer_length(lambda, V);
        PdResult<F> pdV = pd_set(A, V, cutoff, seed);
        if (ll >= 2 && pdV.is_finite())
            push(ll - 2, pdV.finite_value() + 2, "torsion layer (V=" + (V.size() ? V.to_string(A) : "none") + ")");
    }

    // closure under index shifts
    std::vector<CatalogEntry> out;
    auto add_unique = [&](CatalogEntry e) {
        for (const auto& o : out)
            if (o.m == e.m && o.n == e.n) return;
        out.push_back(std::move(e));
    };
    for (const auto& e : base) add_unique(e);
    for (const auto& e : base) {
        for (int i = 1; i <= e.n; ++i)
            add_unique(CatalogEntry{e.m + i, e.n - i, "index shift of (" + std::to_string(e.m) + "," +
                                                          std::to_string(e.n) + ")",
                                    2 * (e.m + i) + (e.n - i) + 1});
        for (int i = 1; i <= 2; ++i)
            add_unique(CatalogEntry{e.m, e.n + i, "index shift of (" + std::to_string(e.m) + "," +
                                                      std::to_string(e.n) + ")",
                                    2 * e.m + (e.n + i) + 1});
    }
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.bound != b.bound) return a.bound < b.bound;
        if (a.m != b.m) return a.m < b.m;
        return a.n < b.n;
    });
    return out;
}

// Exhaustive search over subsets of the finite-pd simples, reporting the
// subset minimizing the best applicable layer bound (B3..B7).
template <class F>
struct SearchRow {
    std::string V_str;
    std::string pdV;
    int ll = 0;
    std::optional<long long> B3, B4, B5, B6, B7;
    std::optional<long long> best;
};

template <class F>
struct SearchResult {
    SimpleSet best_V;
    BoundReport<F> report;
    std::vector<SearchRow<F>> table;
};

template <class F>
SearchResult<F> search_best_V(const AlgebraPtr<F>& A, int cutoff, int cap = 20, std::uint64_t seed = 0) {
    std::vector<int> fin;
    std::vector<long long> pdvals;
    for (int v = 0; v < A->quiver().num_vertices(); ++v) {
        PdResult<F> pd = projective_dimension(simple(A, v), cutoff, seed);
        if (pd.is_finite()) {
            fin.push_back(v);
            pdvals.push_back(pd.finite_value());
        }
    }
    if (static_cast<int>(fin.size()) > cap)
        throw InputError("search-v: " + std::to_string(fin.size()) + " finite-pd simples exceed cap " +
                         std::to_string(cap) + "; raise --cap or pass an explicit --V");

    Representation<F> lambda = regular_module(A);
    SearchResult<F> res;
    std::optional<long long> best_val;
    std::optional<size_t> best_size;
    std::string best_str;
    bool have_best = false;

    const size_t k = fin.size();
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        std::vector<int> vs;
        long long pv = -1;
        for (size_t t = 0; t < k; ++t)
            if (mask & (size_t(1) << t)) {
                vs.push_back(fin[t]);
                pv = std::max(pv, pdvals[t]);
            }
        SimpleSet V = SimpleSet::of(vs);
        int ll = layer_length(lambda, V);

        SearchRow<F> row;
        row.V_str = V.size() ? V.to_string(A) : "none";
        row.pdV = vs.empty() ? "-1" : std::to_string(pv);
        row.ll = ll;
        row.B3 = (pv + 2) * (ll + 1) - 2;
        row.B4 = 2 * (pv + ll) + 1;
        if (ll <= 2) row.B5 = pv + 3;
        if (ll >= 2) row.B6 = 2 * ll + pv - 1;
        row.B7 = std::max(2 * ll + pv - 1, pv + 3);
        for (auto b : {row.B3, row.B4, row.B5, row.B6, row.B7})
            if (b) row.best = row.best ? std::min(*row.best, *b) : *b;
        res.table.push_back(row);

        if (row.best) {
            bool better = !have_best || *row.best < *best_val ||
                          (*row.best == *best_val && vs.size() < *best_size) ||
                          (*row.best == *best_val && vs.size() == *best_size && row.V_str < best_str);
            if (better) {
                have_best = true;
                best_val = row.best;
                best_size = vs.size();
                best_str = row.V_str;
                res.best_V = V;
            }
        }
    }
    res.report = derived_dim_bounds<F>(A, res.best_V, nullptr, cutoff, seed);
    return res;
}

// ---------------------------------------------------------------------------
// JSON report assembly (stable keys, insertion-ordered)

template <class F>
Json report_to_json(const BoundReport<F>& r) {
    Json j;
    j["algebra"] = Json{{"name", r.algebra_name}, {"dim", r.dim}, {"LL", r.LL}};
    j["field"] = r.field;
    Json pds = Json::object();
    for (const auto& [name, pd] : r.pd_simples) pds[name] = pd;
    j["pd_simples"] = pds;
    j["gldim"] = r.gldim;
    j["V"] = r.V_str;
    j["V_complement"] = r.V_complement_str;
    j["layer_length"] = r.layer_length_lambda;
    j["pdV"] = r.pdV_str;
    Json bounds = Json::array();
    for (const auto& e : r.entries) {
        Json je;
        je["id"] = e.id;
        je["formula"] = e.formula;
        je["applicable"] = e.applicable;
        if (e.applicable)
            je["value"] = e.value;
        else
            je["value"] = e.status;
        je["provenance"] = e.provenance;
        bounds.push_back(je);
    }
    j["bounds"] = bounds;
    if (r.best)
        j["best"] = *r.best;
    else
        j["best"] = nullptr;
    Json certs = Json::array();
    for (const auto& c : r.certificates)
        certs.push_back(Json{{"m", c.m},
                             {"n", c.n},
                             {"provenance", c.provenance},
                             {"bound", c.bound},
                             {"samples_checked", c.samples_checked}});
    j["certificates"] = certs;
    j["warnings"] = r.warnings;
    return j;
}

} // namespace qhom
