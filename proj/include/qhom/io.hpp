#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "qhom/constructions.hpp"

namespace qhom {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// module file format:
//   dims: 1=2 2=1
//   matrix a: [[1,0],[0,1]]
// Row-major, exact entries (integers, or p/q over the rationals).  Emission is
// canonical, so emit(parse(emit(M))) == emit(M) byte for byte.

template <class F>
std::string emit_module(const Representation<F>& M) {
    const Quiver& q = M.algebra->quiver();
    const F& fld = M.field();
    std::string out = "dims:";
    for (int v = 0; v < q.num_vertices(); ++v)
        out += " " + q.vertex_name(v) + "=" + std::to_string(M.dims[v]);
    out += "\n";
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Matrix<F>& m = M.action[a];
        if (m.rows() == 0 || m.cols() == 0) continue;
        out += "matrix " + q.arrow(a).name + ": [";
        for (int r = 0; r < m.rows(); ++r) {
            if (r) out += ",";
            out += "[";
            for (int c = 0; c < m.cols(); ++c) {
                if (c) out += ",";
                out += fld.to_string(m(r, c));
            }
            out += "]";
        }
        out += "]\n";
    }
    return out;
}

template <class F>
Representation<F> parse_module(const std::string& text, const AlgebraPtr<F>& A) {
    const Quiver& q = A->quiver();
    const F& fld = A->field();
    Representation<F> M = Representation<F>::zero(A);
    bool have_dims = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        const std::string where = "module line " + std::to_string(lineno);

        if (toks[0] == "dims:") {
            for (size_t t = 1; t < toks.size(); ++t) {
                auto eq = toks[t].find('=');
                if (eq == std::string::npos) throw InputError(where + ": expected NAME=DIM");
                int v = q.vertex_index(toks[t].substr(0, eq));
                int d = std::stoi(toks[t].substr(eq + 1));
                if (d < 0) throw InputError(where + ": negative dimension");
                M.dims[v] = d;
            }
            have_dims = true;
        } else if (toks[0] == "matrix") {
            if (!have_dims) throw InputError(where + ": matrix before dims");
            if (toks.size() < 3 || toks[1].empty() || toks[1].back() != ':')
                throw InputError(where + ": expected 'matrix NAME: [[..]]'");
            std::string name = toks[1].substr(0, toks[1].size() - 1);
            int a = q.arrow_index(name);
            std::string body;
            for (size_t t = 2; t < toks.size(); ++t) body += toks[t];
            // parse [[e,e],[e,e]]
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> cur_row;
            std::string cur;
            int depth = 0;
            for (char c : body) {
                if (c == '[') {
                    ++depth;
                    if (depth > 2) throw InputError(where + ": nesting too deep");
                } else if (c == ']') {
                    if (depth == 2) {
                        if (!cur.empty()) cur_row.push_back(cur);
                        cur.clear();
                        rows.push_back(cur_row);
                        cur_row.clear();
                    }
                    --depth;
                    if (depth < 0) throw InputError(where + ": unbalanced brackets");
                } else if (c == ',') {
                    if (depth == 2) {
                        cur_row.push_back(cur);
                        cur.clear();
                    }
                } else {
                    cur += c;
                }
            }
            if (depth != 0) throw InputError(where + ": unbalanced brackets");
            int i = q.arrow(a).src, j = q.arrow(a).tgt;
            Matrix<F> m(fld, M.dims[j], M.dims[i]);
            if (static_cast<int>(rows.size()) != m.rows())
                throw InputError(where + ": expected " + std::to_string(m.rows()) + " rows");
            for (int r = 0; r < m.rows(); ++r) {
                if (static_cast<int>(rows[r].size()) != m.cols())
                    throw InputError(where + ": expected " + std::to_string(m.cols()) + " columns");
                for (int c = 0; c < m.cols(); ++c) m(r, c) = fld.from_string(rows[r][c]);
            }
            M.action[a] = m;
        } else {
            throw InputError(where + ": unrecognized directive '" + toks[0] + "'");
        }
    }
    if (!have_dims) throw InputError("module file: missing 'dims:' line");
    // rebuild empty matrices with the right shapes
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrow(a).src, j = q.arrow(a).tgt;
        if (M.action[a].rows() != M.dims[j] || M.action[a].cols() != M.dims[i]) {
            if (M.action[a].rows() == 0 && M.action[a].cols() == 0 && (M.dims[j] == 0 || M.dims[i] == 0))
                M.action[a] = Matrix<F>(fld, M.dims[j], M.dims[i]);
            else
                throw InputError("module file: matrix for arrow '" + q.arrow(a).name + "' has the wrong shape");
        }
    }
    M.validate();
    return M;
}

// ---------------------------------------------------------------------------
// JSON forms of modules, maps and chains

template <class F>
Json module_to_json(const Representation<F>& M) {
    const Quiver& q = M.algebra->quiver();
    const F& fld = M.field();
    Json jd = Json::object();
    for (int v = 0; v < q.num_vertices(); ++v) jd[q.vertex_name(v)] = M.dims[v];
    Json jm = Json::object();
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Matrix<F>& m = M.action[a];
        if (m.rows() == 0 || m.cols() == 0) continue;
        Json rows = Json::array();
        for (int r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(fld.to_string(m(r, c)));
            rows.push_back(row);
        }
        jm[q.arrow(a).name] = rows;
    }
    return Json{{"dims", jd}, {"matrices", jm}};
}

template <class F>
Representation<F> module_from_json(const Json& j, const AlgebraPtr<F>& A) {
    const Quiver& q = A->quiver();
    const F& fld = A->field();
    Representation<F> M = Representation<F>::zero(A);
    for (auto& [name, d] : j.at("dims").items()) M.dims[q.vertex_index(name)] = d.template get<int>();
    for (int a = 0; a < q.num_arrows(); ++a) {
        int i = q.arrow(a).src, jv = q.arrow(a).tgt;
        M.action[a] = Matrix<F>(fld, M.dims[jv], M.dims[i]);
    }
    for (auto& [name, rows] : j.at("matrices").items()) {
        int a = q.arrow_index(name);
        Matrix<F>& m = M.action[a];
        if (static_cast<int>(rows.size()) != m.rows()) throw InputError("chain json: matrix rows mismatch");
        for (int r = 0; r < m.rows(); ++r) {
            if (static_cast<int>(rows[r].size()) != m.cols())
                throw InputError("chain json: matrix cols mismatch");
            for (int c = 0; c < m.cols(); ++c) m(r, c) = fld.from_string(rows[r][c].template get<std::string>());
        }
    }
    M.validate();
    return M;
}

template <class F>
Json map_to_json(const ModuleMap<F>& f) {
    const Quiver& q = f.dom.algebra->quiver();
    const F& fld = f.field();
    Json jb = Json::object();
    for (int v = 0; v < q.num_vertices(); ++v) {
        const Matrix<F>& m = f.blocks[v];
        if (m.rows() == 0 || m.cols() == 0) continue;
        Json rows = Json::array();
        for (int r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(fld.to_string(m(r, c)));
            rows.push_back(row);
        }
        jb[q.vertex_name(v)] = rows;
    }
    return Json{{"blocks", jb}};
}

template <class F>
ModuleMap<F> map_from_json(const Json& j, const Representation<F>& dom, const Representation<F>& cod) {
    const Quiver& q = dom.algebra->quiver();
    const F& fld = dom.field();
    ModuleMap<F> f = ModuleMap<F>::zero(dom, cod);
    for (auto& [name, rows] : j.at("blocks").items()) {
        int v = q.vertex_index(name);
        Matrix<F>& m = f.blocks[v];
        if (static_cast<int>(rows.size()) != m.rows()) throw InputError("chain json: block rows mismatch");
        for (int r = 0; r < m.rows(); ++r) {
            if (static_cast<int>(rows[r].size()) != m.cols()) throw InputError("chain json: block cols mismatch");
            for (int c = 0; c < m.cols(); ++c) m(r, c) = fld.from_string(rows[r][c].template get<std::string>());
        }
    }
    return f;
}

template <class F>
Json chain_to_json(const LongExactChain<F>& chain) {
    Json j;
    j["target"] = module_to_json(chain.target);
    Json mods = Json::array();
    for (const auto& m : chain.modules) mods.push_back(module_to_json(m));
    j["modules"] = mods;
    Json maps = Json::array();
    for (const auto& f : chain.maps) maps.push_back(map_to_json(f));
    j["maps"] = maps;
    j["aug"] = chain.aug ? map_to_json(*chain.aug) : Json(nullptr);
    return j;
}

template <class F>
LongExactChain<F> chain_from_json(const Json& j, const AlgebraPtr<F>& A) {
    LongExactChain<F> chain;
    chain.target = module_from_json<F>(j.at("target"), A);
    for (const auto& jm : j.at("modules")) chain.modules.push_back(module_from_json<F>(jm, A));
    const auto& jmaps = j.at("maps");
    for (size_t t = 0; t < jmaps.size(); ++t)
        chain.maps.push_back(map_from_json<F>(jmaps[t], chain.modules.at(t), chain.modules.at(t + 1)));
    if (!j.at("aug").is_null())
        chain.aug = map_from_json<F>(j.at("aug"), chain.modules.back(), chain.target);
    return chain;
}

} // namespace qhom
