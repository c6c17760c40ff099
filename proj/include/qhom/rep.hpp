#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qhom/algebra.hpp"
#include "qhom/matrix.hpp"

namespace qhom {

// A finite-dimensional right module, stored vertexwise.  An arrow a: i -> j
// acts as a linear map (component at i) -> (component at j); the matrix for a
// has shape dims[j] x dims[i].
template <class F>
struct Representation {
    AlgebraPtr<F> algebra;
    std::vector<int> dims;
    std::vector<Matrix<F>> action; // indexed by arrow

    static Representation zero(const AlgebraPtr<F>& A) {
        Representation r;
        r.algebra = A;
        r.dims.assign(A->quiver().num_vertices(), 0);
        for (int a = 0; a < A->quiver().num_arrows(); ++a)
            r.action.push_back(Matrix<F>(A->field(), 0, 0));
        return r;
    }

    const F& field() const { return algebra->field(); }
    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
    bool is_zero() const { return total_dim() == 0; }

    // matrix of the action of a path (identity for trivial paths)
    Matrix<F> path_action(const PathWord& p) const {
        Matrix<F> m = Matrix<F>::identity(field(), dims[p.src]);
        for (int a : p.arrows) m = action[a] * m;
        return m;
    }

    void validate() const {
        const Quiver& q = algebra->quiver();
        verify(static_cast<int>(dims.size()) == q.num_vertices(), "representation: dims size");
        verify(static_cast<int>(action.size()) == q.num_arrows(), "representation: action size");
        for (int a = 0; a < q.num_arrows(); ++a) {
            verify(action[a].rows() == dims[q.arrow(a).tgt] && action[a].cols() == dims[q.arrow(a).src],
                   "representation: action shape for arrow " + q.arrow(a).name);
        }
        for (const Relation<F>& rel : algebra->relations()) {
            Matrix<F> s(field(), dims[rel.tgt], dims[rel.src]);
            for (const RelationTerm<F>& t : rel.terms)
                s = s + path_action(t.path).scaled(t.coeff);
            verify(s.is_zero(), "representation: relation does not vanish");
        }
    }

    bool operator==(const Representation& o) const {
        return algebra == o.algebra && dims == o.dims && action == o.action;
    }
};

template <class F>
inline void require_same_algebra(const Representation<F>& a, const Representation<F>& b) {
    if (a.algebra != b.algebra) throw InputError("algebra mismatch");
}

template <class F>
struct ModuleMap {
    Representation<F> dom, cod;
    std::vector<Matrix<F>> blocks; // per vertex: cod.dims[v] x dom.dims[v]

    static ModuleMap identity(const Representation<F>& M) {
        ModuleMap f;
        f.dom = f.cod = M;
        for (int d : M.dims) f.blocks.push_back(Matrix<F>::identity(M.field(), d));
        return f;
    }
    static ModuleMap zero(const Representation<F>& M, const Representation<F>& N) {
        require_same_algebra(M, N);
        ModuleMap f;
        f.dom = M;
        f.cod = N;
        for (size_t v = 0; v < M.dims.size(); ++v)
            f.blocks.push_back(Matrix<F>(M.field(), N.dims[v], M.dims[v]));
        return f;
    }

    const F& field() const { return dom.field(); }

    void validate() const {
        require_same_algebra(dom, cod);
        const Quiver& q = dom.algebra->quiver();
        verify(static_cast<int>(blocks.size()) == q.num_vertices(), "map: block count");
        for (int v = 0; v < q.num_vertices(); ++v)
            verify(blocks[v].rows() == cod.dims[v] && blocks[v].cols() == dom.dims[v], "map: block shape");
        for (int a = 0; a < q.num_arrows(); ++a) {
            int i = q.arrow(a).src, j = q.arrow(a).tgt;
            verify(blocks[j] * dom.action[a] == cod.action[a] * blocks[i],
                   "map: not a module map at arrow " + q.arrow(a).name);
        }
    }

    int rank() const {
        int r = 0;
        for (const auto& b : blocks) r += b.rank();
        return r;
    }
    bool is_injective() const { return rank() == dom.total_dim(); }
    bool is_surjective() const { return rank() == cod.total_dim(); }
    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }
    bool is_isomorphism() const { return dom.dims == cod.dims && is_injective(); }

    ModuleMap operator+(const ModuleMap& o) const {
        ModuleMap r = *this;
        for (size_t v = 0; v < blocks.size(); ++v) r.blocks[v] = blocks[v] + o.blocks[v];
        return r;
    }
    ModuleMap scaled(const typename F::Elt& c) const {
        ModuleMap r = *this;
        for (auto& b : r.blocks) b = b.scaled(c);
        return r;
    }

    ModuleMap inverse() const {
        verify(dom.dims == cod.dims, "inverse: dimension vectors differ");
        ModuleMap r;
        r.dom = cod;
        r.cod = dom;
        for (const auto& b : blocks) {
            auto inv = b.inverse();
            verify(inv.has_value(), "inverse: block not invertible");
            r.blocks.push_back(*inv);
        }
        return r;
    }
};

template <class F>
inline bool rep_equal(const Representation<F>& a, const Representation<F>& b) {
    return a == b;
}

// g after f
template <class F>
ModuleMap<F> compose(const ModuleMap<F>& g, const ModuleMap<F>& f) {
    verify(rep_equal(f.cod, g.dom), "compose: middle objects differ");
    ModuleMap<F> r;
    r.dom = f.dom;
    r.cod = g.cod;
    for (size_t v = 0; v < f.blocks.size(); ++v) r.blocks.push_back(g.blocks[v] * f.blocks[v]);
    return r;
}

template <class F>
struct ShortExactSequence {
    ModuleMap<F> f; // A -> B, injective
    ModuleMap<F> g; // B -> C, surjective, ker g = im f

    const Representation<F>& A() const { return f.dom; }
    const Representation<F>& B() const { return f.cod; }
    const Representation<F>& C() const { return g.cod; }

    void validate() const {
        f.validate();
        g.validate();
        verify(rep_equal(f.cod, g.dom), "ses: middle objects differ");
        verify(compose(g, f).is_zero(), "ses: g o f != 0");
        int ra = f.rank(), rb = g.rank();
        verify(ra == f.dom.total_dim(), "ses: f not injective");
        verify(rb == g.cod.total_dim(), "ses: g not surjective");
        verify(f.cod.total_dim() == f.dom.total_dim() + g.cod.total_dim(), "ses: dim B != dim A + dim C");
        // ker g = im f now follows from rank counting, per vertex:
        for (size_t v = 0; v < f.blocks.size(); ++v) {
            // im f_v <= ker g_v and dim ker g_v = dom_v - rank g_v
            verify((g.blocks[v] * f.blocks[v]).is_zero(), "ses: vertexwise composite");
        }
        verify(f.rank() + g.rank() == f.cod.total_dim(), "ses: exactness rank count");
    }
};

// ---------------------------------------------------------------------------
// submodules, quotients, kernels, images

template <class F>
struct SubRep {
    Representation<F> rep;
    ModuleMap<F> incl;
};

template <class F>
struct QuotRep {
    Representation<F> rep;
    ModuleMap<F> proj;
    std::vector<Matrix<F>> section; // per vertex; proj * section = id
};

// Subrepresentation spanned by the given columns (per vertex, in ambient
// coordinates).  The span must be arrow-stable; the stored basis is canonical.
template <class F>
SubRep<F> sub_from_columns(const Representation<F>& M, const std::vector<Matrix<F>>& spans) {
    const Quiver& q = M.algebra->quiver();
    SubRep<F> s;
    s.rep.algebra = M.algebra;
    std::vector<Matrix<F>> basis;
    for (size_t v = 0; v < M.dims.size(); ++v) {
        Matrix<F> b = spans[v].column_space_basis();
        s.rep.dims.push_back(b.cols());
        basis.push_back(b);
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrow(a).src, j = q.arrow(a).tgt;
        auto x = basis[j].solve(M.action[a] * basis[i]);
        verify(x.has_value(), "sub_from_columns: span not arrow-stable");
        s.rep.action.push_back(*x);
    }
    s.incl.dom = s.rep;
    s.incl.cod = M;
    s.incl.blocks = basis;
    return s;
}

template <class F>
SubRep<F> kernel(const ModuleMap<F>& f) {
    const Quiver& q = f.dom.algebra->quiver();
    SubRep<F> s;
    s.rep.algebra = f.dom.algebra;
    std::vector<Matrix<F>> basis;
    for (size_t v = 0; v < f.dom.dims.size(); ++v) {
        Matrix<F> k = f.blocks[v].kernel_basis();
        s.rep.dims.push_back(k.cols());
        basis.push_back(k);
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrow(a).src, j = q.arrow(a).tgt;
        auto x = basis[j].solve(f.dom.action[a] * basis[i]);
        verify(x.has_value(), "kernel: not arrow-stable (bug)");
        s.rep.action.push_back(*x);
    }
    s.incl.dom = s.rep;
    s.incl.cod = f.dom;
    s.incl.blocks = basis;
    return s;
}

template <class F>
SubRep<F> image(const ModuleMap<F>& f) {
    std::vector<Matrix<F>> spans = f.blocks;
    return sub_from_columns(f.cod, spans);
}

template <class F>
QuotRep<F> cokernel(const ModuleMap<F>& f) {
    const Quiver& q = f.cod.algebra->quiver();
    const F& fld = f.field();
    QuotRep<F> r;
    r.rep.algebra = f.cod.algebra;
    std::vector<Matrix<F>> projs, secs;
    for (size_t v = 0; v < f.cod.dims.size(); ++v) {
        int n = f.cod.dims[v];
        Matrix<F> rows = f.blocks[v].transpose(); // rows span the image
        std::vector<int> piv = rows.rref_in_place();
        std::vector<char> is_piv(n, 0);
        for (int c : piv) is_piv[c] = 1;
        std::vector<int> free;
        for (int c = 0; c < n; ++c)
            if (!is_piv[c]) free.push_back(c);
        Matrix<F> p(fld, static_cast<int>(free.size()), n);
        Matrix<F> s(fld, n, static_cast<int>(free.size()));
        for (int t = 0; t < static_cast<int>(free.size()); ++t) {
            p(t, free[t]) = fld.one();
            for (int k = 0; k < static_cast<int>(piv.size()); ++k)
                p(t, piv[k]) = fld.neg(rows(k, free[t]));
            s(free[t], t) = fld.one();
        }
        r.rep.dims.push_back(static_cast<int>(free.size()));
        projs.push_back(p);
        secs.push_back(s);
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrow(a).src, j = q.arrow(a).tgt;
        Matrix<F> act = projs[j] * f.cod.action[a] * secs[i];
        r.rep.action.push_back(act);
        verify(act * projs[i] == projs[j] * f.cod.action[a], "cokernel: induced action (bug)");
    }
    r.proj.dom = f.cod;
    r.proj.cod = r.rep;
    r.proj.blocks = projs;
    r.section = secs;
    return r;
}

template <class F>
struct Factorization {
    SubRep<F> ker;
    SubRep<F> im;
    QuotRep<F> coker;
};

template <class F>
Factorization<F> factorize(const ModuleMap<F>& f) {
    Factorization<F> r{kernel(f), image(f), cokernel(f)};
    for (size_t v = 0; v < f.dom.dims.size(); ++v) {
        verify(r.ker.rep.dims[v] + r.im.rep.dims[v] == f.dom.dims[v], "factorize: rank-nullity (dom)");
        verify(r.im.rep.dims[v] + r.coker.rep.dims[v] == f.cod.dims[v], "factorize: rank-nullity (cod)");
    }
    return r;
}

// map induced on the quotient by f: X -> T, where f kills the subobject
template <class F>
ModuleMap<F> induced_on_quotient(const ModuleMap<F>& f, const QuotRep<F>& quot) {
    ModuleMap<F> r;
    r.dom = quot.rep;
    r.cod = f.cod;
    for (size_t v = 0; v < f.blocks.size(); ++v) r.blocks.push_back(f.blocks[v] * quot.section[v]);
    verify(compose(r, quot.proj).blocks == f.blocks, "induced_on_quotient: f does not kill the subobject");
    return r;
}

// tau with mono o tau = rho (requires im rho <= im mono)
template <class F>
ModuleMap<F> factor_through_mono(const ModuleMap<F>& rho, const ModuleMap<F>& mono) {
    ModuleMap<F> r;
    r.dom = rho.dom;
    r.cod = mono.dom;
    for (size_t v = 0; v < rho.blocks.size(); ++v) {
        auto x = mono.blocks[v].solve(rho.blocks[v]);
        verify(x.has_value(), "factor_through_mono: image not contained");
        r.blocks.push_back(*x);
    }
    verify(compose(mono, r).blocks == rho.blocks, "factor_through_mono: solve check");
    return r;
}

// ---------------------------------------------------------------------------
// direct sums

template <class F>
struct DirectSum {
    Representation<F> rep;
    std::vector<ModuleMap<F>> injections;
    std::vector<ModuleMap<F>> projections;
};

template <class F>
DirectSum<F> direct_sum(const AlgebraPtr<F>& A, const std::vector<Representation<F>>& parts) {
    const Quiver& q = A->quiver();
    const F& fld = A->field();
    DirectSum<F> r;
    r.rep.algebra = A;
    r.rep.dims.assign(q.num_vertices(), 0);
    std::vector<std::vector<int>> offset(parts.size(), std::vector<int>(q.num_vertices(), 0));
    for (size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].algebra != A) throw InputError("algebra mismatch");
        for (int v = 0; v < q.num_vertices(); ++v) {
            offset[p][v] = r.rep.dims[v];
            r.rep.dims[v] += parts[p].dims[v];
        }
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrow(a).src, j = q.arrow(a).tgt;
        Matrix<F> m(fld, r.rep.dims[j], r.rep.dims[i]);
        for (size_t p = 0; p < parts.size(); ++p)
            for (int rr = 0; rr < parts[p].dims[j]; ++rr)
                for (int cc = 0; cc < parts[p].dims[i]; ++cc)
                    m(offset[p][j] + rr, offset[p][i] + cc) = parts[p].action[a](rr, cc);
        r.rep.action.push_back(m);
    }
    for (size_t p = 0; p < parts.size(); ++p) {
        ModuleMap<F> inj, prj;
        inj.dom = parts[p];
        inj.cod = r.rep;
        prj.dom = r.rep;
        prj.cod = parts[p];
        for (int v = 0; v < q.num_vertices(); ++v) {
            Matrix<F> mi(fld, r.rep.dims[v], parts[p].dims[v]);
            Matrix<F> mp(fld, parts[p].dims[v], r.rep.dims[v]);
            for (int k = 0; k < parts[p].dims[v]; ++k) {
                mi(offset[p][v] + k, k) = fld.one();
                mp(k, offset[p][v] + k) = fld.one();
            }
            inj.blocks.push_back(mi);
            prj.blocks.push_back(mp);
        }
        r.injections.push_back(inj);
        r.projections.push_back(prj);
    }
    return r;
}

// ---------------------------------------------------------------------------
// radical, top, socle

template <class F>
SubRep<F> radical(const Representation<F>& M) {
    const Quiver& q = M.algebra->quiver();
    std::vector<Matrix<F>> spans;
    for (size_t v = 0; v < M.dims.size(); ++v) spans.push_back(Matrix<F>(M.field(), M.dims[v], 0));
    for (int a = 0; a < q.num_arrows(); ++a) {
        int j = q.arrow(a).tgt;
        spans[j] = spans[j].hstack(M.action[a]);
    }
    return sub_from_columns(M, spans);
}

template <class F>
QuotRep<F> top(const Representation<F>& M) {
    QuotRep<F> t = cokernel(radical(M).incl);
    for (const auto& act : t.rep.action) verify(act.is_zero(), "top: nonzero action (bug)");
    return t;
}

template <class F>
std::pair<SubRep<F>, QuotRep<F>> radical_top(const Representation<F>& M) {
    SubRep<F> r = radical(M);
    QuotRep<F> t = cokernel(r.incl);
    for (const auto& act : t.rep.action) verify(act.is_zero(), "top: nonzero action (bug)");
    return {r, t};
}

template <class F>
SubRep<F> socle(const Representation<F>& M) {
    const Quiver& q = M.algebra->quiver();
    const F& fld = M.field();
    std::vector<Matrix<F>> spans;
    for (int v = 0; v < q.num_vertices(); ++v) {
        Matrix<F> stack(fld, 0, M.dims[v]);
        for (int a = 0; a < q.num_arrows(); ++a)
            if (q.arrow(a).src == v) stack = stack.vstack(M.action[a]);
        spans.push_back(stack.kernel_basis());
    }
    SubRep<F> s = sub_from_columns(M, spans);
    for (const auto& act : s.rep.action) verify(act.is_zero(), "socle: nonzero action (bug)");
    return s;
}

// ---------------------------------------------------------------------------
// canonical modules attached to the algebra

template <class F>
Representation<F> simple(const AlgebraPtr<F>& A, int vertex) {
    if (vertex < 0 || vertex >= A->quiver().num_vertices()) throw InputError("unknown vertex index");
    Representation<F> r = Representation<F>::zero(A);
    r.dims[vertex] = 1;
    for (int a = 0; a < A->quiver().num_arrows(); ++a) {
        const Arrow& ar = A->quiver().arrow(a);
        r.action[a] = Matrix<F>(A->field(), r.dims[ar.tgt], r.dims[ar.src]);
    }
    return r;
}

// P(i) = e_i Lambda; vertex-j component has the normal-form paths i -> j as
// basis, the arrow action is the multiplication table.
template <class F>
Representation<F> projective(const AlgebraPtr<F>& A, int vertex) {
    if (vertex < 0 || vertex >= A->quiver().num_vertices()) throw InputError("unknown vertex index");
    const Quiver& q = A->quiver();
    const F& fld = A->field();
    Representation<F> r;
    r.algebra = A;
    // local index of each basis path from `vertex` within its target component
    std::vector<int> local(A->dim(), -1);
    std::vector<std::vector<int>> comp(q.num_vertices());
    for (int k : A->basis_indices_from(vertex)) {
        int j = A->basis_path(k).tgt;
        local[k] = static_cast<int>(comp[j].size());
        comp[j].push_back(k);
    }
    for (int v = 0; v < q.num_vertices(); ++v) r.dims.push_back(static_cast<int>(comp[v].size()));
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrow(a).src, j = q.arrow(a).tgt;
        Matrix<F> m(fld, r.dims[j], r.dims[i]);
        for (int c = 0; c < r.dims[i]; ++c)
            for (const auto& [bk, coeff] : A->mult(comp[i][c], a)) m(local[bk], c) = coeff;
        r.action.push_back(m);
    }
    return r;
}

// Lambda/rad^k Lambda: basis paths of length < k, products of length >= k cut
// off.  Columns are ordered by (source vertex, length, lex), matching the
// direct sum of the P(i)/rad^k.
template <class F>
Representation<F> radical_power_quotient(const AlgebraPtr<F>& A, int k) {
    if (k < 0) throw InputError("radical power must be nonnegative");
    const Quiver& q = A->quiver();
    const F& fld = A->field();
    Representation<F> r;
    r.algebra = A;
    std::vector<int> local(A->dim(), -1);
    std::vector<std::vector<int>> comp(q.num_vertices());
    for (int src = 0; src < q.num_vertices(); ++src)
        for (int bk : A->basis_indices_from(src)) {
            if (A->basis_path(bk).length() >= k) continue;
            int j = A->basis_path(bk).tgt;
            local[bk] = static_cast<int>(comp[j].size());
            comp[j].push_back(bk);
        }
    for (int v = 0; v < q.num_vertices(); ++v) r.dims.push_back(static_cast<int>(comp[v].size()));
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrow(a).src, j = q.arrow(a).tgt;
        Matrix<F> m(fld, r.dims[j], r.dims[i]);
        for (int c = 0; c < r.dims[i]; ++c)
            for (const auto& [bk, coeff] : A->mult(comp[i][c], a))
                if (local[bk] >= 0) m(local[bk], c) = coeff;
        r.action.push_back(m);
    }
    return r;
}

template <class F>
Representation<F> regular_module(const AlgebraPtr<F>& A) {
    return radical_power_quotient(A, A->nilpotency_degree());
}

// ---------------------------------------------------------------------------
// projective covers and syzygies

template <class F>
struct Cover {
    Representation<F> P;
    ModuleMap<F> epi;
};

template <class F>
Cover<F> projective_cover(const Representation<F>& M) {
    const Quiver& q = M.algebra->quiver();
    const F& fld = M.field();
    auto [rad, tp] = radical_top(M);

    std::vector<Representation<F>> parts;
    std::vector<std::pair<int, int>> origin; // (vertex, representative column)
    for (int v = 0; v < q.num_vertices(); ++v)
        for (int k = 0; k < tp.rep.dims[v]; ++k) {
            parts.push_back(projective(M.algebra, v));
            origin.emplace_back(v, k);
        }
    DirectSum<F> ds = direct_sum(M.algebra, parts);

    ModuleMap<F> epi;
    epi.dom = ds.rep;
    epi.cod = M;
    for (int v = 0; v < q.num_vertices(); ++v) epi.blocks.push_back(Matrix<F>(fld, M.dims[v], ds.rep.dims[v]));

    for (size_t p = 0; p < parts.size(); ++p) {
        auto [src, col] = origin[p];
        // representative in M of the chosen top basis vector
        Matrix<F> rep_vec(fld, M.dims[src], 1);
        for (int r = 0; r < M.dims[src]; ++r) rep_vec(r, 0) = tp.section[src](r, col);
        // each basis path of P(src) maps to (path action)(representative)
        const auto& from = M.algebra->basis_indices_from(src);
        std::vector<int> pos_in_comp(q.num_vertices(), 0);
        for (int bk : from) {
            const PathWord& path = M.algebra->basis_path(bk);
            int j = path.tgt;
            Matrix<F> val = M.path_action(path) * rep_vec;
            // this basis path is column pos_in_comp[j] of P(src) at vertex j
            // and sits at injection offset inside the sum
            int local_col = pos_in_comp[j]++;
            // column index inside the direct sum block at vertex j:
            // find via the injection matrix (unit column)
            for (int rr = 0; rr < ds.rep.dims[j]; ++rr)
                if (!fld.is_zero(ds.injections[p].blocks[j](rr, local_col))) {
                    for (int t = 0; t < M.dims[j]; ++t) epi.blocks[j](t, rr) = val(t, 0);
                    break;
                }
        }
    }

    epi.validate();
    verify(epi.is_surjective(), "projective_cover: lift not surjective");
    // minimality: ker(epi) lies in rad P, i.e. top(P) -> top(M) is injective
    SubRep<F> ker_epi = kernel(epi);
    SubRep<F> radP = radical(ds.rep);
    for (size_t v = 0; v < radP.incl.blocks.size(); ++v) {
        Matrix<F> both = radP.incl.blocks[v].hstack(ker_epi.incl.blocks[v]);
        verify(both.rank() == radP.incl.blocks[v].rank(), "projective_cover: kernel not in rad P");
    }
    return Cover<F>{ds.rep, epi};
}

template <class F>
struct SyzygyStep {
    Cover<F> cover;
    SubRep<F> omega; // kernel of the cover
};

template <class F>
SyzygyStep<F> syzygy_step(const Representation<F>& M) {
    Cover<F> c = projective_cover(M);
    SubRep<F> om = kernel(c.epi);
    return SyzygyStep<F>{std::move(c), std::move(om)};
}

template <class F>
Representation<F> syzygy(const Representation<F>& M, int k) {
    if (k < 0) throw InputError("syzygy index must be nonnegative");
    Representation<F> cur = M;
    for (int t = 0; t < k; ++t) {
        if (cur.is_zero()) return cur;
        cur = syzygy_step(cur).omega.rep;
    }
    return cur;
}

template <class F>
bool is_projective_rep(const Representation<F>& M) {
    if (M.is_zero()) return true;
    return syzygy_step(M).omega.rep.is_zero();
}

// multiplicities of the composition factors: S(v) appears dim M_v times
template <class F>
std::vector<std::pair<int, int>> composition_factors(const Representation<F>& M) {
    std::vector<std::pair<int, int>> out;
    for (size_t v = 0; v < M.dims.size(); ++v)
        if (M.dims[v] > 0) out.emplace_back(static_cast<int>(v), M.dims[v]);
    return out;
}

// ---------------------------------------------------------------------------
// hom spaces

template <class F>
std::vector<ModuleMap<F>> hom_basis(const Representation<F>& M, const Representation<F>& N) {
    require_same_algebra(M, N);
    const Quiver& q = M.algebra->quiver();
    const F& fld = M.field();

    std::vector<int> off(M.dims.size() + 1, 0);
    for (size_t v = 0; v < M.dims.size(); ++v) off[v + 1] = off[v] + N.dims[v] * M.dims[v];
    int unknowns = off.back();

    int rows = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
        rows += N.dims[q.arrow(a).tgt] * M.dims[q.arrow(a).src];

    Matrix<F> sys(fld, rows, unknowns);
    int row = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrow(a).src, j = q.arrow(a).tgt;
        // X_j * A^M_a - A^N_a * X_i = 0, entry (r, c): r < N_j, c < M_i
        for (int r = 0; r < N.dims[j]; ++r)
            for (int c = 0; c < M.dims[i]; ++c) {
                for (int k = 0; k < M.dims[j]; ++k)
                    sys(row, off[j] + r * M.dims[j] + k) =
                        fld.add(sys(row, off[j] + r * M.dims[j] + k), M.action[a](k, c));
                for (int k = 0; k < N.dims[i]; ++k)
                    sys(row, off[i] + k * M.dims[i] + c) =
                        fld.sub(sys(row, off[i] + k * M.dims[i] + c), N.action[a](r, k));
                ++row;
            }
    }

    Matrix<F> ker = sys.kernel_basis();
    std::vector<ModuleMap<F>> out;
    for (int col = 0; col < ker.cols(); ++col) {
        ModuleMap<F> h;
        h.dom = M;
        h.cod = N;
        for (size_t v = 0; v < M.dims.size(); ++v) {
            Matrix<F> b(fld, N.dims[v], M.dims[v]);
            for (int r = 0; r < N.dims[v]; ++r)
                for (int c = 0; c < M.dims[v]; ++c) b(r, c) = ker(off[v] + r * M.dims[v] + c, col);
            h.blocks.push_back(b);
        }
        out.push_back(h);
    }
    return out;
}

// ---------------------------------------------------------------------------
// isomorphism testing

enum class IsoVerdict { Yes, No, Undetermined };

template <class F>
struct IsoResult {
    IsoVerdict verdict;
    std::optional<ModuleMap<F>> witness;
    std::string reason;

    bool yes() const { return verdict == IsoVerdict::Yes; }
    bool no() const { return verdict == IsoVerdict::No; }
};

template <class F>
bool blocks_invertible(const ModuleMap<F>& h) {
    for (const auto& b : h.blocks) {
        if (b.rows() != b.cols()) return false;
        if (b.rank() != b.rows()) return false;
    }
    return true;
}

namespace detail {
template <class F>
ModuleMap<F> combine(const std::vector<ModuleMap<F>>& H, const std::vector<typename F::Elt>& coeff) {
    ModuleMap<F> h = ModuleMap<F>::zero(H[0].dom, H[0].cod);
    for (size_t t = 0; t < H.size(); ++t) h = h + H[t].scaled(coeff[t]);
    return h;
}
} // namespace detail

// Sound one-sided test: "Yes" always carries a verified invertible witness;
// "No" only on dimension obstructions.  Sampling is seeded and reproducible.
template <class F>
IsoResult<F> is_isomorphic(const Representation<F>& M, const Representation<F>& N,
                           std::uint64_t seed = 0, int samples = 64);

template <>
inline IsoResult<PrimeField> is_isomorphic<PrimeField>(const Representation<PrimeField>& M,
                                                       const Representation<PrimeField>& N,
                                                       std::uint64_t seed, int samples) {
    using F = PrimeField;
    require_same_algebra(M, N);
    if (M.dims != N.dims) return {IsoVerdict::No, std::nullopt, "dimension vectors differ"};
    if (M.total_dim() == 0) return {IsoVerdict::Yes, ModuleMap<F>::identity(M), "zero modules"};

    auto H = hom_basis(M, N);
    if (H.empty()) return {IsoVerdict::No, std::nullopt, "hom space is zero"};
    size_t hNM = hom_basis(N, M).size();
    size_t eM = hom_basis(M, M).size();
    size_t eN = hom_basis(N, N).size();
    if (H.size() != hNM || eM != eN || H.size() != eM)
        return {IsoVerdict::No, std::nullopt, "hom space dimensions obstruct"};

    const F& fld = M.field();
    auto check = [&](const ModuleMap<F>& h) -> bool { return blocks_invertible(h); };

    for (const auto& h : H)
        if (check(h)) return {IsoVerdict::Yes, h, "basis element"};

    // exhaustive when |F|^h is small; a single basis element covers h = 1,
    // since invertibility of c*H_1 does not depend on c != 0
    double logsize = static_cast<double>(H.size()) * std::log2(static_cast<double>(fld.modulus()));
    if (H.size() == 1)
        return {IsoVerdict::No, std::nullopt, "exhausted hom space, no invertible element"};
    if (logsize <= 16.0) {
        std::vector<typename F::Elt> coeff(H.size(), 0);
        while (true) {
            size_t t = 0;
            while (t < coeff.size()) {
                coeff[t] = fld.add(coeff[t], 1);
                if (coeff[t] != 0) break;
                ++t;
            }
            if (t == coeff.size()) break;
            ModuleMap<F> h = detail::combine(H, coeff);
            if (check(h)) return {IsoVerdict::Yes, h, "exhaustive combination"};
        }
        return {IsoVerdict::No, std::nullopt, "exhausted hom space, no invertible element"};
    }

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::uint64_t> dist(0, fld.modulus() - 1);
    for (int it = 0; it < samples; ++it) {
        std::vector<typename F::Elt> coeff(H.size());
        for (auto& c : coeff) c = dist(rng);
        ModuleMap<F> h = detail::combine(H, coeff);
        if (check(h)) return {IsoVerdict::Yes, h, "sampled combination"};
    }
    return {IsoVerdict::Undetermined, std::nullopt, "sampling found no invertible element"};
}

template <>
inline IsoResult<RationalField> is_isomorphic<RationalField>(const Representation<RationalField>& M,
                                                             const Representation<RationalField>& N,
                                                             std::uint64_t seed, int samples) {
    using F = RationalField;
    require_same_algebra(M, N);
    if (M.dims != N.dims) return {IsoVerdict::No, std::nullopt, "dimension vectors differ"};
    if (M.total_dim() == 0) return {IsoVerdict::Yes, ModuleMap<F>::identity(M), "zero modules"};
    auto H = hom_basis(M, N);
    if (H.empty()) return {IsoVerdict::No, std::nullopt, "hom space is zero"};
    size_t hNM = hom_basis(N, M).size();
    size_t eM = hom_basis(M, M).size();
    size_t eN = hom_basis(N, N).size();
    if (H.size() != hNM || eM != eN || H.size() != eM)
        return {IsoVerdict::No, std::nullopt, "hom space dimensions obstruct"};

    for (const auto& h : H)
        if (blocks_invertible(h)) return {IsoVerdict::Yes, h, "basis element"};

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long long> dist(-8, 8);
    F fld;
    for (int it = 0; it < samples; ++it) {
        std::vector<typename F::Elt> coeff(H.size());
        for (auto& c : coeff) c = fld.from_int(dist(rng));
        ModuleMap<F> h = detail::combine(H, coeff);
        if (blocks_invertible(h)) return {IsoVerdict::Yes, h, "sampled combination"};
    }
    return {IsoVerdict::Undetermined, std::nullopt, "sampling found no invertible element"};
}

// ---------------------------------------------------------------------------
// add-membership by the trace criterion: X lies in add Y iff id_X is a sum of
// composites X -> Y -> X.

template <class F>
bool in_add(const Representation<F>& X, const Representation<F>& Y) {
    require_same_algebra(X, Y);
    if (X.total_dim() == 0) return true;
    auto to_Y = hom_basis(X, Y);
    auto from_Y = hom_basis(Y, X);
    if (to_Y.empty() || from_Y.empty()) return false;

    const F& fld = X.field();
    std::vector<int> off(X.dims.size() + 1, 0);
    for (size_t v = 0; v < X.dims.size(); ++v) off[v + 1] = off[v] + X.dims[v] * X.dims[v];
    int len = off.back();

    Matrix<F> span(fld, len, static_cast<int>(to_Y.size() * from_Y.size()));
    int col = 0;
    for (const auto& g : from_Y)
        for (const auto& f : to_Y) {
            ModuleMap<F> c = compose(g, f);
            for (size_t v = 0; v < X.dims.size(); ++v)
                for (int r = 0; r < X.dims[v]; ++r)
                    for (int cc = 0; cc < X.dims[v]; ++cc)
                        span(off[v] + r * X.dims[v] + cc, col) = c.blocks[v](r, cc);
            ++col;
        }
    Matrix<F> id_vec(fld, len, 1);
    for (size_t v = 0; v < X.dims.size(); ++v)
        for (int r = 0; r < X.dims[v]; ++r) id_vec(off[v] + r * X.dims[v] + r, 0) = fld.one();
    return span.solve(id_vec).has_value();
}

// lift target through an epimorphism: h with epi o h = target (dom of target
// must be projective for existence)
template <class F>
ModuleMap<F> lift_through_epi(const ModuleMap<F>& target, const ModuleMap<F>& epi) {
    verify(rep_equal(target.cod, epi.cod), "lift: codomain mismatch");
    const Representation<F>& P = target.dom;
    const Representation<F>& B = epi.dom;
    const Quiver& q = P.algebra->quiver();
    const F& fld = P.field();

    std::vector<int> off(P.dims.size() + 1, 0);
    for (size_t v = 0; v < P.dims.size(); ++v) off[v + 1] = off[v] + B.dims[v] * P.dims[v];
    int unknowns = off.back();

    int rows = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
        rows += B.dims[q.arrow(a).tgt] * P.dims[q.arrow(a).src];
    for (size_t v = 0; v < P.dims.size(); ++v) rows += target.cod.dims[v] * P.dims[v];

    Matrix<F> sys(fld, rows, unknowns);
    Matrix<F> rhs(fld, rows, 1);
    int row = 0;
    // intertwining: H_j A^P_a - A^B_a H_i = 0
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrow(a).src, j = q.arrow(a).tgt;
        for (int r = 0; r < B.dims[j]; ++r)
            for (int c = 0; c < P.dims[i]; ++c) {
                for (int k = 0; k < P.dims[j]; ++k)
                    sys(row, off[j] + r * P.dims[j] + k) =
                        fld.add(sys(row, off[j] + r * P.dims[j] + k), P.action[a](k, c));
                for (int k = 0; k < B.dims[i]; ++k)
                    sys(row, off[i] + k * P.dims[i] + c) = fld.sub(sys(row, off[i] + k * P.dims[i] + c),
                                                                   B.action[a](r, k));
                ++row;
            }
    }
    // composition: epi_v H_v = target_v
    for (size_t v = 0; v < P.dims.size(); ++v)
        for (int r = 0; r < target.cod.dims[v]; ++r)
            for (int c = 0; c < P.dims[v]; ++c) {
                for (int k = 0; k < B.dims[v]; ++k)
                    sys(row, off[v] + k * P.dims[v] + c) =
                        fld.add(sys(row, off[v] + k * P.dims[v] + c), epi.blocks[v](r, k));
                rhs(row, 0) = target.blocks[v](r, c);
                ++row;
            }

    auto x = sys.solve(rhs);
    verify(x.has_value(), "lift_through_epi: no lift (domain not projective?)");
    ModuleMap<F> h;
    h.dom = P;
    h.cod = B;
    for (size_t v = 0; v < P.dims.size(); ++v) {
        Matrix<F> b(fld, B.dims[v], P.dims[v]);
        for (int r = 0; r < B.dims[v]; ++r)
            for (int c = 0; c < P.dims[v]; ++c) b(r, c) = (*x)(off[v] + r * P.dims[v] + c, 0);
        h.blocks.push_back(b);
    }
    h.validate();
    verify(compose(epi, h).blocks == target.blocks, "lift_through_epi: composite check");
    return h;
}

} // namespace qhom
