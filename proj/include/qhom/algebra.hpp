#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qhom/matrix.hpp"
#include "qhom/quiver.hpp"

namespace qhom {

template <class F>
struct RelationTerm {
    typename F::Elt coeff;
    PathWord path;
};

// A length-homogeneous combination of parallel paths of length >= 2.
template <class F>
struct Relation {
    std::vector<RelationTerm<F>> terms; // nonzero coefficients only
    int src = 0, tgt = 0, length = 0;

    static Relation make(const F& f, std::vector<RelationTerm<F>> in, const std::string& where) {
        std::vector<RelationTerm<F>> kept;
        for (auto& t : in)
            if (!f.is_zero(t.coeff)) kept.push_back(std::move(t));
        if (kept.empty())
            throw InputError(where + ": relation has no nonzero coefficient over this field");
        Relation r;
        r.src = kept[0].path.src;
        r.tgt = kept[0].path.tgt;
        r.length = kept[0].path.length();
        for (const auto& t : kept) {
            if (t.path.src != r.src || t.path.tgt != r.tgt)
                throw InputError(where + ": relation terms are not parallel paths");
            if (t.path.length() != r.length)
                throw InputError(where + ": non-homogeneous relation (unsupported in v1)");
        }
        if (r.length < 2)
            throw InputError(where + ": non-admissible ideal (relation of length < 2)");
        r.terms = std::move(kept);
        return r;
    }
};

// Lambda = kQ/I for a length-homogeneous admissible ideal I, presented by a
// normal-form path basis computed degree by degree:
// the degree-d slice of I is the row space of all p*g*q with g a generator,
// reduced inside the span of all degree-d paths; non-pivot paths survive.
template <class F>
class BoundQuiverAlgebra {
public:
    using Elt = typename F::Elt;
    using Combo = std::vector<std::pair<int, Elt>>; // basis index -> coefficient

    BoundQuiverAlgebra(const F& f, Quiver quiver, std::vector<Relation<F>> relations, int nilpotency_cap)
        : f_(f), quiver_(std::move(quiver)), relations_(std::move(relations)), cap_(nilpotency_cap) {
        build();
    }

    const F& field() const { return f_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation<F>>& relations() const { return relations_; }
    int nilpotency_degree() const { return L_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    const std::vector<PathWord>& basis() const { return basis_; }
    const PathWord& basis_path(int k) const { return basis_[k]; }

    // normal-form basis paths src -> tgt, sorted length then lexicographic
    std::vector<PathWord> path_basis(int src, int tgt) const {
        check_vertex(src);
        check_vertex(tgt);
        std::vector<PathWord> out;
        auto it = by_src_tgt_.find({src, tgt});
        if (it != by_src_tgt_.end())
            for (int k : it->second) out.push_back(basis_[k]);
        return out;
    }
    const std::vector<int>& basis_indices(int src, int tgt) const {
        static const std::vector<int> empty;
        auto it = by_src_tgt_.find({src, tgt});
        return it == by_src_tgt_.end() ? empty : it->second;
    }
    const std::vector<int>& basis_indices_from(int src) const { return by_src_[src]; }

    // normal form of (basis path k) * (arrow a); empty when endpoints do not
    // compose or the product lies in I
    const Combo& mult(int basis_idx, int arrow) const { return mult_[basis_idx][arrow]; }

    // descriptive metadata set by corpus generators
    const std::string& name() const { return name_; }
    const std::vector<long long>& params() const { return params_; }
    void set_meta(std::string name, std::vector<long long> params) {
        name_ = std::move(name);
        params_ = std::move(params);
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= quiver_.num_vertices()) throw InputError("unknown vertex index");
    }

    void build() {
        const int nv = quiver_.num_vertices();
        // degree 0: trivial paths
        for (int v = 0; v < nv; ++v) append_basis(PathWord::trivial_at(v));

        // all walks per degree; generation order is (length, lex)
        std::vector<std::vector<PathWord>> walks(1);
        for (int v = 0; v < nv; ++v) walks[0].push_back(PathWord::trivial_at(v));

        L_ = -1;
        for (int d = 1; d <= cap_; ++d) {
            std::vector<PathWord> wd;
            for (const PathWord& w : walks[d - 1])
                for (int a = 0; a < quiver_.num_arrows(); ++a)
                    if (quiver_.arrow(a).src == w.tgt) {
                        PathWord e = w;
                        e.arrows.push_back(a);
                        e.tgt = quiver_.arrow(a).tgt;
                        wd.push_back(std::move(e));
                    }
            walks.push_back(wd);

            // group degree-d walks by (src, tgt)
            std::map<std::pair<int, int>, std::vector<int>> groups;
            for (int i = 0; i < static_cast<int>(wd.size()); ++i)
                groups[{wd[i].src, wd[i].tgt}].push_back(i);
            std::map<std::vector<int>, int> pos;
            for (int i = 0; i < static_cast<int>(wd.size()); ++i) pos[wd[i].arrows] = i;

            std::vector<char> is_basis_walk(wd.size(), 0);
            // NF of every degree-d walk over the degree-d free walks
            std::vector<std::vector<std::pair<int, Elt>>> nf_over_walks(wd.size());

            for (const auto& [st, members] : groups) {
                std::vector<int> back(wd.size(), -1);
                for (int c = 0; c < static_cast<int>(members.size()); ++c) back[members[c]] = c;

                // rows p*g*q landing in this group
                std::vector<std::vector<Elt>> rows;
                for (const Relation<F>& rel : relations_) {
                    if (rel.length > d) continue;
                    for (int a = 0; a + rel.length <= d; ++a) {
                        int b = d - rel.length - a;
                        for (const PathWord& p : walks[a]) {
                            if (p.src != st.first || p.tgt != rel.src) continue;
                            for (const PathWord& q : walks[b]) {
                                if (q.src != rel.tgt || q.tgt != st.second) continue;
                                std::vector<Elt> row(members.size(), f_.zero());
                                for (const RelationTerm<F>& t : rel.terms) {
                                    std::vector<int> arr = p.arrows;
                                    arr.insert(arr.end(), t.path.arrows.begin(), t.path.arrows.end());
                                    arr.insert(arr.end(), q.arrows.begin(), q.arrows.end());
                                    int wi = pos.at(arr);
                                    row[back[wi]] = f_.add(row[back[wi]], t.coeff);
                                }
                                rows.push_back(std::move(row));
                            }
                        }
                    }
                }

                Matrix<F> m(f_, static_cast<int>(rows.size()), static_cast<int>(members.size()));
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
                std::vector<int> piv = m.rref_in_place();
                std::vector<char> piv_col(members.size(), 0);
                for (int c : piv) piv_col[c] = 1;

                for (int c = 0; c < static_cast<int>(members.size()); ++c)
                    if (!piv_col[c]) {
                        is_basis_walk[members[c]] = 1;
                        nf_over_walks[members[c]] = {{members[c], f_.one()}};
                    }
                for (int r = 0; r < static_cast<int>(piv.size()); ++r) {
                    std::vector<std::pair<int, Elt>> combo;
                    for (int c = 0; c < static_cast<int>(members.size()); ++c)
                        if (!piv_col[c] && !f_.is_zero(m(r, c)))
                            combo.emplace_back(members[c], f_.neg(m(r, c)));
                    nf_over_walks[members[piv[r]]] = std::move(combo);
                }
            }

            // register this degree's surviving paths (walk order is already lex)
            std::vector<int> walk_to_basis(wd.size(), -1);
            int added = 0;
            for (int i = 0; i < static_cast<int>(wd.size()); ++i)
                if (is_basis_walk[i]) {
                    walk_to_basis[i] = append_basis(wd[i]);
                    ++added;
                }

            // multiplication table rows for degree d-1 basis paths
            for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
                if (basis_[k].length() != d - 1) continue;
                for (int a = 0; a < quiver_.num_arrows(); ++a) {
                    if (quiver_.arrow(a).src != basis_[k].tgt) continue;
                    std::vector<int> arr = basis_[k].arrows;
                    arr.push_back(a);
                    int wi = pos.at(arr);
                    Combo combo;
                    for (const auto& [wj, c] : nf_over_walks[wi]) combo.emplace_back(walk_to_basis[wj], c);
                    mult_[k][a] = std::move(combo);
                }
            }

            if (added == 0) {
                L_ = d;
                break;
            }
        }
        if (L_ < 0)
            throw InputError("nilpotency cap " + std::to_string(cap_) +
                             " exceeded: ideal not certified admissible");
    }

    int append_basis(PathWord p) {
        int idx = static_cast<int>(basis_.size());
        by_src_.resize(quiver_.num_vertices());
        by_src_[p.src].push_back(idx);
        by_src_tgt_[{p.src, p.tgt}].push_back(idx);
        basis_.push_back(std::move(p));
        mult_.emplace_back(quiver_.num_arrows());
        return idx;
    }

    F f_;
    Quiver quiver_;
    std::vector<Relation<F>> relations_;
    int cap_;
    int L_ = 0;

    std::vector<PathWord> basis_;
    std::vector<std::vector<int>> by_src_;
    std::map<std::pair<int, int>, std::vector<int>> by_src_tgt_;
    std::vector<std::vector<Combo>> mult_;

    std::string name_ = "algebra";
    std::vector<long long> params_;
};

template <class F>
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra<F>>;

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace detail

// Line-oriented algebra description:
//   vertices: 1 2 3
//   arrow a: 1 -> 2
//   relation: a*b            (terms: optional integer coefficient, '*'-joined arrows)
//   relation: g1*d - g2*d
//   relation: 2 a*b + -1 c*d
// '#' starts a comment.
template <class F>
std::shared_ptr<BoundQuiverAlgebra<F>> parse_algebra(const std::string& text, const F& field,
                                                     int nilpotency_cap = 64) {
    std::vector<std::string> vertices;
    struct RawArrow {
        std::string name, src, tgt;
        int line;
    };
    std::vector<RawArrow> raw_arrows;
    struct RawRel {
        std::string expr;
        int line;
    };
    std::vector<RawRel> raw_rels;
    bool have_vertices = false;
    std::string meta_name;
    std::vector<long long> meta_params;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);

        if (toks[0] == "name:") {
            if (toks.size() < 2) throw InputError(where + ": empty name");
            meta_name = toks[1];
            for (size_t i = 2; i < toks.size(); ++i) meta_params.push_back(std::stoll(toks[i]));
        } else if (toks[0] == "vertices:") {
            vertices.assign(toks.begin() + 1, toks.end());
            if (vertices.empty()) throw InputError(where + ": empty vertex list");
            have_vertices = true;
        } else if (toks[0] == "arrow") {
            if (!have_vertices) throw InputError(where + ": arrow before vertices");
            if (toks.size() != 5 || toks[3] != "->")
                throw InputError(where + ": expected 'arrow NAME: SRC -> TGT'");
            std::string name = toks[1];
            if (name.empty() || name.back() != ':')
                throw InputError(where + ": expected ':' after arrow name");
            name.pop_back();
            raw_arrows.push_back(RawArrow{name, toks[2], toks[4], lineno});
        } else if (toks[0] == "relation:") {
            std::string expr;
            for (size_t i = 1; i < toks.size(); ++i) expr += toks[i] + " ";
            raw_rels.push_back(RawRel{expr, lineno});
        } else {
            throw InputError(where + ": unrecognized directive '" + toks[0] + "'");
        }
    }
    if (!have_vertices) throw InputError("missing 'vertices:' line");

    std::map<std::string, int> vidx;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) vidx[vertices[i]] = i;
    std::vector<Arrow> arrows;
    for (const auto& ra : raw_arrows) {
        auto is_ = vidx.find(ra.src);
        auto it_ = vidx.find(ra.tgt);
        const std::string where = "line " + std::to_string(ra.line);
        if (is_ == vidx.end()) throw InputError(where + ": unknown vertex '" + ra.src + "'");
        if (it_ == vidx.end()) throw InputError(where + ": unknown vertex '" + ra.tgt + "'");
        arrows.push_back(Arrow{ra.name, is_->second, it_->second});
    }

    Quiver quiver(vertices, arrows);

    std::vector<Relation<F>> rels;
    for (const auto& rr : raw_rels) {
        const std::string where = "line " + std::to_string(rr.line);
        auto toks = detail::split_ws(rr.expr);
        if (toks.empty()) throw InputError(where + ": empty relation");
        std::vector<RelationTerm<F>> terms;
        long long sign = 1;
        bool have_coeff = false;
        long long coeff = 1;
        for (const std::string& t : toks) {
            if (t == "+") {
                sign = 1;
                continue;
            }
            if (t == "-") {
                sign = -1;
                continue;
            }
            if (detail::is_integer_token(t)) {
                if (have_coeff) throw InputError(where + ": two coefficients in one term");
                coeff = std::stoll(t);
                have_coeff = true;
                continue;
            }
            // a path token
            std::vector<int> arrow_ids;
            std::string cur;
            for (char c : t + "*") {
                if (c == '*') {
                    if (cur.empty()) throw InputError(where + ": empty arrow name in path");
                    arrow_ids.push_back(quiver.arrow_index(cur));
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            PathWord p = PathWord::from_arrows(quiver, arrow_ids);
            terms.push_back(RelationTerm<F>{field.from_int(sign * coeff), p});
            sign = 1;
            coeff = 1;
            have_coeff = false;
        }
        if (terms.empty()) throw InputError(where + ": relation without any path");
        rels.push_back(Relation<F>::make(field, std::move(terms), where));
    }

    auto A = std::make_shared<BoundQuiverAlgebra<F>>(field, std::move(quiver), std::move(rels), nilpotency_cap);
    if (!meta_name.empty()) A->set_meta(meta_name, meta_params);
    return A;
}

} // namespace qhom
