#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "qhom/rep.hpp"

namespace qhom {

// A chosen set V of simple modules, identified by their vertices.
struct SimpleSet {
    std::vector<int> vertices; // sorted, unique

    static SimpleSet of(std::vector<int> vs) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return SimpleSet{std::move(vs)};
    }
    static SimpleSet none() { return SimpleSet{}; }
    template <class F>
    static SimpleSet all(const AlgebraPtr<F>& A) {
        std::vector<int> vs(A->quiver().num_vertices());
        for (size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<int>(i);
        return SimpleSet{vs};
    }

    // "3,4,5" | "all" | "none" against the algebra's vertex names
    template <class F>
    static SimpleSet parse(const AlgebraPtr<F>& A, const std::string& text) {
        if (text == "all") return all(A);
        if (text == "none" || text.empty()) return none();
        std::vector<int> vs;
        std::string cur;
        for (char c : text + ",") {
            if (c == ',') {
                if (cur.empty()) throw InputError("empty vertex name in V");
                vs.push_back(A->quiver().vertex_index(cur));
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        return of(std::move(vs));
    }

    bool contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
    size_t size() const { return vertices.size(); }

    template <class F>
    bool valid_for(const AlgebraPtr<F>& A) const {
        for (int v : vertices)
            if (v < 0 || v >= A->quiver().num_vertices()) return false;
        return true;
    }
    template <class F>
    std::vector<int> complement(const AlgebraPtr<F>& A) const {
        std::vector<int> out;
        for (int v = 0; v < A->quiver().num_vertices(); ++v)
            if (!contains(v)) out.push_back(v);
        return out;
    }
    template <class F>
    std::string to_string(const AlgebraPtr<F>& A) const {
        std::string s;
        for (size_t i = 0; i < vertices.size(); ++i) {
            if (i) s += ",";
            s += A->quiver().vertex_name(vertices[i]);
        }
        return s;
    }
};

// Torsion radical of the pair (T, F(V)): the largest submodule whose top has
// no factor in V.  Computed as the limit of the descending chain
//   K_0 = M,  K_{t+1} = preimage in K_t of the non-V part of top K_t,
// which keeps the component at vertices outside V and replaces the component
// at V-vertices by the corresponding radical slice.
template <class F>
SubRep<F> torsion_radical(const Representation<F>& M, const SimpleSet& V) {
    if (!V.valid_for(M.algebra)) throw InputError("V contains unknown vertices");
    std::vector<Matrix<F>> basis; // current K_t in ambient coordinates
    for (size_t v = 0; v < M.dims.size(); ++v)
        basis.push_back(Matrix<F>::identity(M.field(), M.dims[v]));

    while (true) {
        SubRep<F> K = sub_from_columns(M, basis);
        SubRep<F> radK = radical(K.rep);
        std::vector<Matrix<F>> next;
        bool changed = false;
        for (size_t v = 0; v < M.dims.size(); ++v) {
            if (V.contains(static_cast<int>(v))) {
                Matrix<F> nb = K.incl.blocks[v] * radK.incl.blocks[v];
                if (nb.cols() != K.incl.blocks[v].cols()) changed = true;
                next.push_back(nb);
            } else {
                next.push_back(K.incl.blocks[v]);
            }
        }
        if (!changed) return K;
        basis = std::move(next);
    }
}

template <class F>
QuotRep<F> torsion_quotient(const Representation<F>& M, const SimpleSet& V) {
    return cokernel(torsion_radical(M, V).incl);
}

// F_{t_V} = rad o t_V, iterated i times
template <class F>
Representation<F> layer_functor(const Representation<F>& M, const SimpleSet& V, int i) {
    if (i < 0) throw InputError("layer index must be nonnegative");
    Representation<F> cur = M;
    for (int t = 0; t < i; ++t) cur = radical(torsion_radical(cur, V).rep).rep;
    return cur;
}

// least i >= 0 with t_V(F^i(M)) = 0
template <class F>
int layer_length(const Representation<F>& M, const SimpleSet& V) {
    Representation<F> cur = M;
    int i = 0;
    while (true) {
        SubRep<F> t = torsion_radical(cur, V);
        if (t.rep.is_zero()) return i;
        cur = radical(t.rep).rep;
        ++i;
    }
}

} // namespace qhom
