#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhom/rep.hpp"
#include "qhom/torsion.hpp"

namespace qhom {

// Minimal projective resolution data, possibly truncated at a cutoff.
template <class F>
struct Resolution {
    Representation<F> M;
    std::vector<Representation<F>> terms;      // P_0, P_1, ...
    std::vector<ModuleMap<F>> differentials;   // d_0: P_0 -> M, d_k: P_k -> P_{k-1}
    std::vector<Representation<F>> syzygies;   // Omega^1, Omega^2, ...
    bool truncated = false;

    void validate() const {
        for (const auto& d : differentials) d.validate();
        if (terms.empty()) {
            verify(M.is_zero(), "resolution: empty resolution of a nonzero module");
            return;
        }
        verify(differentials[0].is_surjective(), "resolution: augmentation not surjective");
        for (size_t k = 0; k < differentials.size(); ++k) {
            if (k + 1 < differentials.size())
                verify(compose(differentials[k], differentials[k + 1]).is_zero(), "resolution: d o d != 0");
            // exactness at P_{k-1} / M position by rank count
            int dim_here = k == 0 ? M.total_dim() : terms[k - 1].total_dim();
            (void)dim_here;
        }
        // exactness: rank d_k + rank d_{k+1} = dim P_k, for interior k
        for (size_t k = 0; k + 1 < differentials.size(); ++k)
            verify(differentials[k].rank() + differentials[k + 1].rank() == terms[k].total_dim(),
                   "resolution: not exact");
        if (!truncated && !terms.empty())
            verify(differentials.back().is_injective(), "resolution: last differential not injective");
        // minimality: im d_{k+1} <= rad P_k
        for (size_t k = 0; k + 1 < differentials.size(); ++k) {
            SubRep<F> rad = radical(terms[k]);
            for (size_t v = 0; v < rad.incl.blocks.size(); ++v) {
                Matrix<F> both = rad.incl.blocks[v].hstack(differentials[k + 1].blocks[v]);
                verify(both.rank() == rad.incl.blocks[v].rank(), "resolution: not minimal");
            }
        }
    }
};

template <class F>
Resolution<F> minimal_resolution(const Representation<F>& M, int cutoff) {
    if (cutoff < 0) throw InputError("cutoff must be nonnegative");
    Resolution<F> res;
    res.M = M;
    if (M.is_zero()) return res;

    Representation<F> cur = M;
    std::optional<ModuleMap<F>> prev_incl;
    for (int k = 0; k <= cutoff; ++k) {
        SyzygyStep<F> st = syzygy_step(cur);
        res.terms.push_back(st.cover.P);
        if (k == 0)
            res.differentials.push_back(st.cover.epi);
        else
            res.differentials.push_back(compose(*prev_incl, st.cover.epi));
        if (st.omega.rep.is_zero()) return res; // finite resolution found
        res.syzygies.push_back(st.omega.rep);
        prev_incl = st.omega.incl;
        cur = st.omega.rep;
    }
    res.truncated = true;
    return res;
}

// Projective dimension with the conventions: pd 0 = -1; infinite dimensions
// are certified by a repeated syzygy (verified isomorphism); otherwise the
// only honest answer after `cutoff` steps is a lower bound.
template <class F>
struct PdResult {
    enum class Kind { MinusOne, Finite, InfinitePeriodic, AtLeast };
    Kind kind = Kind::MinusOne;
    int value = -1;  // d for Finite, bound for AtLeast
    int offset = 0, period = 0;
    std::optional<ModuleMap<F>> witness; // Omega^offset ~ Omega^(offset+period)

    static PdResult minus_one() { return PdResult{}; }
    static PdResult finite(int d) { return PdResult{Kind::Finite, d, 0, 0, std::nullopt}; }
    static PdResult periodic(int off, int per, ModuleMap<F> w) {
        return PdResult{Kind::InfinitePeriodic, -1, off, per, std::move(w)};
    }
    static PdResult at_least(int b) { return PdResult{Kind::AtLeast, b, 0, 0, std::nullopt}; }

    bool is_finite() const { return kind == Kind::Finite || kind == Kind::MinusOne; }
    bool is_infinite() const { return kind == Kind::InfinitePeriodic; }
    bool is_undetermined() const { return kind == Kind::AtLeast; }
    int finite_value() const {
        verify(is_finite(), "pd: not finite");
        return kind == Kind::MinusOne ? -1 : value;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::MinusOne: return "-1";
            case Kind::Finite: return std::to_string(value);
            case Kind::InfinitePeriodic:
                return "inf(periodic " + std::to_string(offset) + "," + std::to_string(period) + ")";
            case Kind::AtLeast: return ">=" + std::to_string(value);
        }
        return "?";
    }
};

template <class F>
PdResult<F> projective_dimension(const Representation<F>& M, int cutoff, std::uint64_t seed = 0) {
    if (cutoff < 1) throw InputError("cutoff must be >= 1");
    if (M.is_zero()) return PdResult<F>::minus_one();

    std::vector<Representation<F>> syz{M};
    for (int k = 1; k <= cutoff + 1; ++k) {
        Representation<F> next = syzygy_step(syz.back()).omega.rep;
        if (next.is_zero()) return PdResult<F>::finite(k - 1);
        for (size_t j = 0; j < syz.size(); ++j) {
            if (syz[j].dims != next.dims) continue;
            IsoResult<F> iso = is_isomorphic(syz[j], next, seed);
            if (iso.yes())
                return PdResult<F>::periodic(static_cast<int>(j), k - static_cast<int>(j), *iso.witness);
        }
        syz.push_back(next);
    }
    return PdResult<F>::at_least(cutoff + 1);
}

namespace detail {
// max-combine pd results: any certified-infinite wins, then undetermined,
// then the largest finite value
template <class F>
PdResult<F> pd_max(std::vector<PdResult<F>> parts) {
    PdResult<F> best = PdResult<F>::minus_one();
    bool have = false;
    for (auto& p : parts) {
        if (p.is_infinite()) return p;
        if (!have) {
            best = p;
            have = true;
            continue;
        }
        if (p.is_undetermined() && !best.is_undetermined()) best = p;
        else if (p.is_undetermined() && best.is_undetermined() && p.value > best.value) best = p;
        else if (p.is_finite() && best.is_finite() && p.finite_value() > best.finite_value()) best = p;
    }
    return best;
}
} // namespace detail

template <class F>
PdResult<F> global_dimension(const AlgebraPtr<F>& A, int cutoff, std::uint64_t seed = 0) {
    if (cutoff < 1) throw InputError("cutoff must be >= 1");
    std::vector<PdResult<F>> parts;
    for (int v = 0; v < A->quiver().num_vertices(); ++v)
        parts.push_back(projective_dimension(simple(A, v), cutoff, seed));
    return detail::pd_max(std::move(parts));
}

template <class F>
int loewy_length(const Representation<F>& M) {
    Representation<F> cur = M;
    int i = 0;
    while (!cur.is_zero()) {
        cur = radical(cur).rep;
        ++i;
    }
    return i;
}

template <class F>
PdResult<F> pd_set(const AlgebraPtr<F>& A, const SimpleSet& V, int cutoff, std::uint64_t seed = 0) {
    if (cutoff < 1) throw InputError("cutoff must be >= 1");
    if (V.vertices.empty()) return PdResult<F>::minus_one();
    std::vector<PdResult<F>> parts;
    for (int v : V.vertices) parts.push_back(projective_dimension(simple(A, v), cutoff, seed));
    return detail::pd_max(std::move(parts));
}

template <class F>
int default_cutoff(const AlgebraPtr<F>& A) {
    return 2 * A->dim() + 4;
}

} // namespace qhom
