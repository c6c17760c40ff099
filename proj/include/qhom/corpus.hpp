#pragma once

#include <string>
#include <vector>

#include "qhom/algebra.hpp"

namespace qhom {

struct CorpusText {
    std::string name;
    std::vector<long long> params;
    std::string text;
    std::vector<std::string> warnings;
};

// The built-in algebra family.  Every generator emits the line format that
// parse_algebra consumes, so the parser is the single construction path.
inline CorpusText corpus_text(const std::string& name, const std::vector<long long>& params) {
    CorpusText out;
    out.name = name;
    out.params = params;
    std::string& t = out.text;

    auto need = [&](size_t n, const std::string& what) {
        if (params.size() < n) throw InputError("corpus " + name + " needs " + what);
    };

    if (name == "A2" || name == "a2") {
        out.name = "A2";
        t = "# A2: 1 -> 2, hereditary\nvertices: 1 2\narrow a: 1 -> 2\n";
    } else if (name == "dual_numbers" || name == "dual") {
        out.name = "dual_numbers";
        t = "# dual numbers: one loop, x^2 = 0\nvertices: 1\narrow x: 1 -> 1\nrelation: x*x\n";
    } else if (name == "semisimple") {
        need(1, "a vertex count k >= 1");
        long long k = params[0];
        if (k < 1) throw InputError("semisimple needs k >= 1");
        t = "# semisimple: " + std::to_string(k) + " isolated vertices\nvertices:";
        for (long long i = 1; i <= k; ++i) t += " " + std::to_string(i);
        t += "\n";
    } else if (name == "loop_nilpotent") {
        // one loop x with x^L = 0; handy corner-case family
        need(1, "a nilpotency parameter L >= 2");
        long long L = params[0];
        if (L < 2) throw InputError("loop_nilpotent needs L >= 2");
        t = "vertices: 1\narrow x: 1 -> 1\nrelation:";
        for (long long i = 0; i < L; ++i) t += std::string(i ? "*" : " ") + "x";
        t += "\n";
    } else if (name == "example1") {
        need(1, "parameter m >= 3");
        long long m = params[0];
        if (m < 3) throw InputError("example1 needs m >= 3");
        if (m < 10) out.warnings.push_back("example1: reference values assume m >= 10 (got m=" + std::to_string(m) + ")");
        t += "# one loop at 1, a chain 1->2->...->" + std::to_string(m) + ", and two pendant vertices\n";
        t += "vertices:";
        for (long long i = 1; i <= m + 2; ++i) t += " " + std::to_string(i);
        t += "\n";
        t += "arrow a1: 1 -> 1\n";
        t += "arrow a2: 1 -> 2\n";
        for (long long i = 3; i <= m; ++i)
            t += "arrow a" + std::to_string(i) + ": " + std::to_string(i - 1) + " -> " + std::to_string(i) + "\n";
        t += "arrow a" + std::to_string(m + 1) + ": 1 -> " + std::to_string(m + 1) + "\n";
        t += "arrow a" + std::to_string(m + 2) + ": 1 -> " + std::to_string(m + 2) + "\n";
        t += "relation: a1*a1\n";
        t += "relation: a1*a" + std::to_string(m + 1) + "\n";
        t += "relation: a1*a" + std::to_string(m + 2) + "\n";
        t += "relation: a1*a2\n";
        t += "relation:";
        for (long long i = 2; i <= m; ++i) t += std::string(i > 2 ? "*" : " ") + "a" + std::to_string(i);
        t += "\n";
    } else if (name == "example2") {
        need(2, "parameters m >= 3 and n > 2m+1");
        long long m = params[0], n = params[1];
        if (m < 3) throw InputError("example2 needs m >= 3");
        if (n <= 2 * m + 1) throw InputError("example2 needs n > 2m+1");
        if (m < 5) out.warnings.push_back("example2: reference values assume m >= 5 (got m=" + std::to_string(m) + ")");
        t += "# big cycle 1->2->3->4->...->" + std::to_string(n + 4) + "->1 with a loop at 1,\n";
        t += "# double arrows 2=>3 and " + std::to_string(n + 4) + "=>1\n";
        t += "vertices:";
        for (long long i = 1; i <= n + 4; ++i) t += " " + std::to_string(i);
        t += "\n";
        t += "arrow al: 1 -> 1\n";
        t += "arrow be: 1 -> 2\n";
        t += "arrow ga1: 2 -> 3\n";
        t += "arrow ga2: 2 -> 3\n";
        t += "arrow de: 3 -> 4\n";
        for (long long j = 1; j <= n; ++j)
            t += "arrow rho" + std::to_string(j) + ": " + std::to_string(j + 3) + " -> " + std::to_string(j + 4) + "\n";
        t += "arrow mu1: " + std::to_string(n + 4) + " -> 1\n";
        t += "arrow mu2: " + std::to_string(n + 4) + " -> 1\n";
        t += "relation:";
        for (long long i = 0; i < m; ++i) t += std::string(i ? "*" : " ") + "al";
        t += "\n";
        t += "relation: al*be\n";
        t += "relation: ga1*de - ga2*de\n";
        t += "relation: rho" + std::to_string(n) + "*mu1*al\n";
        t += "relation: rho" + std::to_string(n) + "*mu2*al\n";
        t += "relation: mu1*be - mu2*be\n";
        // The published generator list stops here, but then the cyclic paths
        // through be,ga,de,rho*,mu* never die and the quotient is infinite
        // dimensional.  All published invariants of the family (projective
        // diagrams, LL = n+5, the pd table) need the two monomials as well.
        t += "relation: mu1*be\n";
        t += "relation: mu2*be\n";
    } else {
        throw InputError("unknown corpus algebra '" + name +
                         "' (known: example1, example2, A2, dual_numbers, semisimple, loop_nilpotent)");
    }
    std::string header = "name: " + out.name;
    for (long long p : out.params) header += " " + std::to_string(p);
    out.text = header + "\n" + out.text;
    return out;
}

template <class F>
AlgebraPtr<F> generate_corpus(const std::string& name, const std::vector<long long>& params, const F& field,
                              int nilpotency_cap = 64, std::vector<std::string>* warnings = nullptr) {
    CorpusText ct = corpus_text(name, params);
    if (warnings) *warnings = ct.warnings;
    return parse_algebra<F>(ct.text, field, nilpotency_cap);
}

} // namespace qhom
