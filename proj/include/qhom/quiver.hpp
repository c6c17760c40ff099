#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhom/errors.hpp"

namespace qhom {

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
        for (int i = 0; i < num_vertices(); ++i) {
            if (!vertex_idx_.emplace(vertices_[i], i).second)
                throw InputError("duplicate vertex name '" + vertices_[i] + "'");
        }
        for (int a = 0; a < num_arrows(); ++a) {
            const Arrow& ar = arrows_[a];
            if (!arrow_idx_.emplace(ar.name, a).second)
                throw InputError("duplicate arrow name '" + ar.name + "'");
            if (ar.src < 0 || ar.src >= num_vertices() || ar.tgt < 0 || ar.tgt >= num_vertices())
                throw InputError("arrow '" + ar.name + "' has an undeclared endpoint");
        }
    }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_name(int i) const { return vertices_[i]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_index(const std::string& name) const {
        auto it = vertex_idx_.find(name);
        if (it == vertex_idx_.end()) throw InputError("unknown vertex '" + name + "'");
        return it->second;
    }
    int arrow_index(const std::string& name) const {
        auto it = arrow_idx_.find(name);
        if (it == arrow_idx_.end()) throw InputError("unknown arrow '" + name + "'");
        return it->second;
    }
    bool has_vertex(const std::string& name) const { return vertex_idx_.count(name) != 0; }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_idx_;
    std::map<std::string, int> arrow_idx_;
};

// A path written left to right: arrows[0] is traversed first, so
// p followed by q is the concatenation pq.  Empty arrow list with
// src == tgt encodes the trivial path e_src.
struct PathWord {
    int src = 0;
    int tgt = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }

    bool operator==(const PathWord& o) const {
        return src == o.src && tgt == o.tgt && arrows == o.arrows;
    }
    // length, then lexicographic in the declared arrow order, then source
    bool operator<(const PathWord& o) const {
        if (length() != o.length()) return length() < o.length();
        if (arrows != o.arrows) return arrows < o.arrows;
        return src < o.src;
    }

    static PathWord trivial_at(int v) { return PathWord{v, v, {}}; }

    static PathWord from_arrows(const Quiver& q, const std::vector<int>& arrow_ids) {
        if (arrow_ids.empty()) throw InputError("path needs at least one arrow");
        PathWord p;
        p.src = q.arrow(arrow_ids.front()).src;
        p.tgt = q.arrow(arrow_ids.front()).tgt;
        p.arrows = {arrow_ids.front()};
        for (size_t k = 1; k < arrow_ids.size(); ++k) {
            const Arrow& a = q.arrow(arrow_ids[k]);
            if (a.src != p.tgt)
                throw InputError("arrows '" + q.arrow(arrow_ids[k - 1]).name + "' and '" + a.name +
                                 "' do not compose");
            p.arrows.push_back(arrow_ids[k]);
            p.tgt = a.tgt;
        }
        return p;
    }

    PathWord concat(const Quiver& q, const PathWord& o) const {
        if (tgt != o.src) throw VerifyError("path concat endpoint mismatch");
        PathWord r = *this;
        r.arrows.insert(r.arrows.end(), o.arrows.begin(), o.arrows.end());
        r.tgt = o.tgt;
        (void)q;
        return r;
    }

    std::string to_string(const Quiver& q) const {
        if (trivial()) return "e_" + q.vertex_name(src);
        std::string s;
        for (size_t k = 0; k < arrows.size(); ++k) {
            if (k) s += "*";
            s += q.arrow(arrows[k]).name;
        }
        return s;
    }
};

} // namespace qhom
