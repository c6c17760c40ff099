#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhom/bounds.hpp"
#include "qhom/corpus.hpp"

namespace qhom::cli {

struct Options {
    std::string field = "32003";
    int nilpotency_cap = 64;
    int cutoff = 0; // 0 means 2*dim+4
    std::string V_text = "none";
    int samples = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    int cap = 20;
    std::string algebra_path;

    // subcommand payloads
    std::string corpus_name;
    long long m = -1, n = -1, k = -1;
    std::string from_vertex, to_vertex, vertex;
    std::string module_spec = "lambda";
    std::string gen_spec = "lambda";
    std::string what;
    int shift_i = 0;
    int cert_m = 0, cert_n = 0;
    bool with_certificate = false;
    bool verify_only = false;
    std::string chain_path;
};

inline std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string field_desc(const PrimeField& f) { return std::to_string(f.modulus()); }
inline std::string field_desc(const RationalField&) { return "Q"; }

template <class F>
Representation<F> resolve_module_spec(const std::string& spec, const AlgebraPtr<F>& A) {
    if (spec == "lambda" || spec == "Lambda") return regular_module(A);
    if (!spec.empty() && spec[0] == '@') return parse_module<F>(slurp_file(spec.substr(1)), A);
    auto named = [&](char kind, const std::string& name) -> Representation<F> {
        int v = A->quiver().vertex_index(name);
        return kind == 'S' ? simple(A, v) : projective(A, v);
    };
    if (spec.size() >= 3 && (spec[0] == 'S' || spec[0] == 'P') && spec[1] == ':')
        return named(spec[0], spec.substr(2));
    if (spec.size() >= 2 && (spec[0] == 'S' || spec[0] == 'P') && A->quiver().has_vertex(spec.substr(1)))
        return named(spec[0], spec.substr(1));
    throw InputError("bad module spec '" + spec + "' (use S:<vertex>, P:<vertex>, lambda, or @file)");
}

template <class F>
LongExactChain<F> ses_as_chain(const ShortExactSequence<F>& ses) {
    LongExactChain<F> c;
    c.target = ses.C();
    c.modules = {ses.A(), ses.B()};
    c.maps = {ses.f};
    c.aug = ses.g;
    return c;
}

template <class F>
int run_typed(const Options& o, const std::string& subcommand, const F& field, const std::string& stdin_text,
              std::ostream& out, std::ostream& err) {
    auto algebra_text = [&]() -> std::string {
        if (!o.algebra_path.empty()) return slurp_file(o.algebra_path);
        if (stdin_text.empty())
            throw InputError("no algebra given: pass --algebra FILE or pipe the description on stdin");
        return stdin_text;
    };
    std::string output;

    if (subcommand == "corpus") {
        std::vector<long long> params;
        if (o.corpus_name == "example1") {
            if (o.m < 0) throw InputError("corpus example1 needs --m");
            params = {o.m};
        } else if (o.corpus_name == "example2") {
            if (o.m < 0 || o.n < 0) throw InputError("corpus example2 needs --m and --n");
            params = {o.m, o.n};
        } else if (o.corpus_name == "semisimple" || o.corpus_name == "loop_nilpotent") {
            if (o.k < 0) throw InputError("corpus " + o.corpus_name + " needs --k");
            params = {o.k};
        }
        CorpusText ct = corpus_text(o.corpus_name, params);
        for (const auto& w : ct.warnings) err << "warning: " << w << "\n";
        output = ct.text;
    } else {
        AlgebraPtr<F> A = parse_algebra<F>(algebra_text(), field, o.nilpotency_cap);
        const int cutoff = o.cutoff > 0 ? o.cutoff : default_cutoff(A);
        const Quiver& q = A->quiver();

        if (subcommand == "parse") {
            Json j;
            j["algebra"] = Json{{"name", A->name()}, {"dim", A->dim()}, {"LL", loewy_length(regular_module(A))}};
            j["field"] = field_desc(field);
            j["vertices"] = q.vertices();
            Json arrows = Json::array();
            for (const Arrow& a : q.arrows())
                arrows.push_back(Json{{"name", a.name},
                                      {"src", q.vertex_name(a.src)},
                                      {"tgt", q.vertex_name(a.tgt)}});
            j["arrows"] = arrows;
            j["relations"] = static_cast<int>(A->relations().size());
            j["nilpotency_degree"] = A->nilpotency_degree();
            Json by_len = Json::object();
            std::map<int, int> counts;
            for (const PathWord& p : A->basis()) counts[p.length()]++;
            for (auto& [len, c] : counts) by_len[std::to_string(len)] = c;
            j["basis_by_length"] = by_len;
            output = j.dump(2) + "\n";
        } else if (subcommand == "basis") {
            int s = q.vertex_index(o.from_vertex), t = q.vertex_index(o.to_vertex);
            Json j;
            j["from"] = o.from_vertex;
            j["to"] = o.to_vertex;
            Json paths = Json::array();
            for (const PathWord& p : A->path_basis(s, t)) paths.push_back(p.to_string(q));
            j["paths"] = paths;
            output = j.dump(2) + "\n";
        } else if (subcommand == "proj") {
            Representation<F> P = projective(A, q.vertex_index(o.vertex));
            output = emit_module(P);
        } else if (subcommand == "resolve") {
            Representation<F> M = resolve_module_spec(o.module_spec, A);
            Resolution<F> res = minimal_resolution(M, cutoff);
            res.validate();
            Json j;
            j["module"] = module_to_json(M)["dims"];
            Json terms = Json::array();
            for (const auto& P : res.terms) terms.push_back(module_to_json(P)["dims"]);
            j["terms"] = terms;
            Json syz = Json::array();
            for (const auto& s : res.syzygies) syz.push_back(module_to_json(s)["dims"]);
            j["syzygies"] = syz;
            j["truncated"] = res.truncated;
            output = j.dump(2) + "\n";
        } else if (subcommand == "pd") {
            Representation<F> M = resolve_module_spec(o.module_spec, A);
            Json j;
            j["module"] = o.module_spec;
            j["pd"] = projective_dimension(M, cutoff, o.seed).to_string();
            output = j.dump(2) + "\n";
        } else if (subcommand == "layer") {
            Representation<F> M = resolve_module_spec(o.module_spec, A);
            SimpleSet V = SimpleSet::parse(A, o.V_text);
            Json j;
            j["module"] = o.module_spec;
            j["V"] = V.size() ? V.to_string(A) : "none";
            j["layer_length"] = layer_length(M, V);
            Json layers = Json::array();
            Representation<F> cur = M;
            while (true) {
                layers.push_back(cur.total_dim());
                SubRep<F> t = torsion_radical(cur, V);
                if (t.rep.is_zero()) break;
                cur = radical(t.rep).rep;
            }
            j["layer_dims"] = layers;
            output = j.dump(2) + "\n";
        } else if (subcommand == "torsion") {
            Representation<F> M = resolve_module_spec(o.module_spec, A);
            SimpleSet V = SimpleSet::parse(A, o.V_text);
            SubRep<F> t = torsion_radical(M, V);
            QuotRep<F> quo = cokernel(t.incl);
            Json j;
            j["module"] = o.module_spec;
            j["V"] = V.size() ? V.to_string(A) : "none";
            j["t_dims"] = module_to_json(t.rep)["dims"];
            j["q_dims"] = module_to_json(quo.rep)["dims"];
            j["t_module"] = emit_module(t.rep);
            j["q_module"] = emit_module(quo.rep);
            output = j.dump(2) + "\n";
        } else if (subcommand == "bounds") {
            SimpleSet V = SimpleSet::parse(A, o.V_text);
            BoundReport<F> rep;
            if (o.with_certificate) {
                auto samples = default_sample_set(A, o.samples, o.seed);
                ITCertificate<F> cert = thm47_certificate(A, V, samples, cutoff, o.seed);
                rep = derived_dim_bounds<F>(A, V, &cert, cutoff, o.seed);
            } else {
                rep = derived_dim_bounds<F>(A, V, nullptr, cutoff, o.seed);
            }
            rep.field = field_desc(field);
            output = report_to_json(rep).dump(2) + "\n";
        } else if (subcommand == "certify") {
            SimpleSet V = SimpleSet::parse(A, o.V_text);
            auto samples = default_sample_set(A, o.samples, o.seed);
            ITCertificate<F> cert = thm47_certificate(A, V, samples, cutoff, o.seed);
            cert.verify_all();
            Json j;
            j["m"] = cert.m;
            j["n"] = cert.n;
            j["bound"] = cert.bound();
            j["provenance"] = cert.provenance;
            j["generator_dims"] = module_to_json(cert.generator)["dims"];
            j["samples_checked"] = static_cast<int>(cert.evidence.size());
            Json evs = Json::array();
            for (const auto& ev : cert.evidence) {
                Json je;
                je["sample_dims"] = module_to_json(ev.sample)["dims"];
                je["chain_length"] = ev.chain.length();
                je["used_levels"] = ev.used_levels;
                evs.push_back(je);
            }
            j["evidence"] = evs;
            output = j.dump(2) + "\n";
        } else if (subcommand == "construct") {
            if (o.verify_only) {
                if (o.chain_path.empty()) throw InputError("--verify-only needs --chain FILE");
                Json j = Json::parse(slurp_file(o.chain_path));
                LongExactChain<F> chain = chain_from_json<F>(j, A);
                chain.validate();
                Json r;
                r["verified"] = true;
                r["modules"] = chain.length();
                output = r.dump(2) + "\n";
            } else if (o.what == "horseshoe") {
                Representation<F> M = resolve_module_spec(o.module_spec, A);
                SyzygyStep<F> st = syzygy_step(M);
                ShortExactSequence<F> ses{st.omega.incl, st.cover.epi};
                Horseshoe<F> hs = horseshoe(ses);
                Json j;
                j["input"] = chain_to_json(ses_as_chain(ses));
                j["output"] = chain_to_json(ses_as_chain(hs.ses));
                j["middle_cover_dims"] = module_to_json(hs.middle_cover)["dims"];
                output = j.dump(2) + "\n";
            } else if (o.what == "shift") {
                Representation<F> M = resolve_module_spec(o.module_spec, A);
                SyzygyStep<F> st = syzygy_step(M);
                ShortExactSequence<F> ses{st.omega.incl, st.cover.epi};
                SyzygyShift<F> sh = syzygy_shift_ses(ses, o.shift_i);
                Json j;
                j["input"] = chain_to_json(ses_as_chain(ses));
                j["i"] = o.shift_i;
                j["output"] = chain_to_json(ses_as_chain(sh.ses));
                j["Q_dims"] = module_to_json(sh.Q)["dims"];
                output = j.dump(2) + "\n";
            } else if (o.what == "loewy") {
                Representation<F> M = resolve_module_spec(o.module_spec, A);
                LongExactChain<F> chain = loewy_resolution(M);
                output = chain_to_json(chain).dump(2) + "\n";
            } else if (o.what == "thm47") {
                SimpleSet V = SimpleSet::parse(A, o.V_text);
                auto samples = default_sample_set(A, o.samples, o.seed);
                ITCertificate<F> cert = thm47_certificate(A, V, samples, cutoff, o.seed);
                Json j;
                j["m"] = cert.m;
                j["n"] = cert.n;
                j["bound"] = cert.bound();
                Json chains = Json::array();
                for (const auto& ev : cert.evidence) chains.push_back(chain_to_json(ev.chain));
                j["chains"] = chains;
                output = j.dump(2) + "\n";
            } else if (o.what == "check-it") {
                Representation<F> M = resolve_module_spec(o.module_spec, A);
                Representation<F> gen = resolve_module_spec(o.gen_spec, A);
                AddVCheck<F> chk = check_addV_resolution(M, gen, o.cert_m, o.cert_n);
                Json j;
                j["certified"] = chk.certified;
                j["reason"] = chk.reason;
                if (chk.certified) j["chain"] = chain_to_json(chk.chain);
                output = j.dump(2) + "\n";
            } else {
                throw InputError("construct: --what must be horseshoe|shift|loewy|thm47|check-it");
            }
        } else if (subcommand == "search-v") {
            SearchResult<F> sr = search_best_V(A, cutoff, o.cap, o.seed);
            sr.report.field = field_desc(field);
            Json j;
            j["best_V"] = sr.best_V.size() ? sr.best_V.to_string(A) : "none";
            j["report"] = report_to_json(sr.report);
            Json table = Json::array();
            for (const auto& row : sr.table) {
                Json jr;
                jr["V"] = row.V_str;
                jr["pdV"] = row.pdV;
                jr["ll"] = row.ll;
                auto put = [&](const char* k, const std::optional<long long>& v) {
                    if (v)
                        jr[k] = *v;
                    else
                        jr[k] = nullptr;
                };
                put("B3", row.B3);
                put("B4", row.B4);
                put("B5", row.B5);
                put("B6", row.B6);
                put("B7", row.B7);
                put("best", row.best);
                table.push_back(jr);
            }
            j["table"] = table;
            output = j.dump(2) + "\n";
        } else {
            throw InputError("unknown subcommand '" + subcommand + "'");
        }
    }

    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw InputError("cannot write '" + o.out_path + "'");
        f << output;
    } else {
        out << output;
    }
    return 0;
}

// Parse argv, dispatch on the field, map errors to exit codes:
// 0 ok, 1 input error, 2 hypothesis violation, 3 internal verification failure.
inline int run_cli(const std::vector<std::string>& args, const std::string& stdin_text, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"exact homological invariants of bound quiver algebras"};
    app.require_subcommand(1);
    Options o;

    app.add_option("--field", o.field, "ground field: a prime p or Q");
    app.add_option("--nilpotency-cap", o.nilpotency_cap, "max degree checked for admissibility");
    app.add_option("--cutoff", o.cutoff, "syzygy cutoff (default 2 dim + 4)");
    app.add_option("--seed", o.seed, "seed for randomized sampling");
    app.add_option("--out", o.out_path, "write output to a file instead of stdout");
    app.add_option("--algebra", o.algebra_path, "algebra description file (default: stdin)");

    auto* c_corpus = app.add_subcommand("corpus", "emit a built-in algebra description")->fallthrough();
    c_corpus->add_option("name", o.corpus_name)->required();
    c_corpus->add_option("--m", o.m);
    c_corpus->add_option("--n", o.n);
    c_corpus->add_option("--k", o.k);

    app.add_subcommand("parse", "parse and summarize an algebra")->fallthrough();

    auto* c_basis = app.add_subcommand("basis", "normal-form path basis between two vertices")->fallthrough();
    c_basis->add_option("--from", o.from_vertex)->required();
    c_basis->add_option("--to", o.to_vertex)->required();

    auto* c_proj = app.add_subcommand("proj", "emit an indecomposable projective as a module file")->fallthrough();
    c_proj->add_option("--vertex", o.vertex)->required();

    auto* c_resolve = app.add_subcommand("resolve", "minimal projective resolution")->fallthrough();
    c_resolve->add_option("--module", o.module_spec);

    auto* c_pd = app.add_subcommand("pd", "projective dimension")->fallthrough();
    c_pd->add_option("--module", o.module_spec);

    auto* c_layer = app.add_subcommand("layer", "torsion radical layer length")->fallthrough();
    c_layer->add_option("--module", o.module_spec);
    c_layer->add_option("--V", o.V_text);

    auto* c_torsion = app.add_subcommand("torsion", "torsion radical and quotient")->fallthrough();
    c_torsion->add_option("--module", o.module_spec);
    c_torsion->add_option("--V", o.V_text);

    auto* c_bounds = app.add_subcommand("bounds", "derived-dimension upper bound report")->fallthrough();
    c_bounds->add_option("--V", o.V_text);
    c_bounds->add_flag("--with-certificate", o.with_certificate);
    c_bounds->add_option("--samples", o.samples);

    auto* c_certify = app.add_subcommand("certify", "constructive torsion-layer certificate")->fallthrough();
    c_certify->add_option("--V", o.V_text);
    c_certify->add_option("--samples", o.samples);

    auto* c_construct = app.add_subcommand("construct", "run a proof construction and emit the chain")->fallthrough();
    c_construct->add_option("--what", o.what);
    c_construct->add_option("--module", o.module_spec);
    c_construct->add_option("--gen", o.gen_spec);
    c_construct->add_option("--i", o.shift_i);
    c_construct->add_option("--m", o.cert_m);
    c_construct->add_option("--n", o.cert_n);
    c_construct->add_option("--V", o.V_text);
    c_construct->add_option("--samples", o.samples);
    c_construct->add_flag("--verify-only", o.verify_only);
    c_construct->add_option("--chain", o.chain_path);

    auto* c_search = app.add_subcommand("search-v", "exhaustive search over simple sets")->fallthrough();
    c_search->add_option("--cap", o.cap);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::string sub = app.get_subcommands().front()->get_name();
    try {
        FieldDesc fd = FieldDesc::parse(o.field);
        if (fd.rational)
            return run_typed<RationalField>(o, sub, RationalField{}, stdin_text, out, err);
        return run_typed<PrimeField>(o, sub, PrimeField(fd.p), stdin_text, out, err);
    } catch (const HypothesisError& e) {
        err << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const VerifyError& e) {
        err << "internal verification failure: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace qhom::cli
