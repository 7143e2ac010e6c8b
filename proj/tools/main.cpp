// Command-line front end: exact cohomology queries, reports, and the
// verification suites.  All compute subcommands emit canonical JSON by
// default (byte-identical across reruns) and honor an optional
// content-addressed result cache (--cache-dir or LIECOH_CACHE_DIR).
//
// Exit codes: 0 success, 1 input error or failed verification,
// 2 honest refusal (a result the engine could not certify).

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "liecoh/cache.hpp"
#include "liecoh/json_io.hpp"
#include "liecoh/verify.hpp"

namespace {

using namespace liecoh;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty())
        return out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        out.push_back(std::stoi(tok, &pos));
        if (pos != tok.size())
            throw std::invalid_argument("cannot parse integer list entry '" + tok + "'");
    }
    return out;
}

struct CommonOpts {
    std::string type;
    std::string output = "json";
    std::string cache_dir;
    std::string mode = "greedy";

    DecomposeMode decompose_mode() const {
        if (mode == "greedy")
            return DecomposeMode::Greedy;
        if (mode == "strict")
            return DecomposeMode::Strict;
        throw std::invalid_argument("mode must be greedy or strict");
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_mode = false) {
    cmd->add_option("--type", o.type, "Cartan type, e.g. A2, B2, D4")->required();
    cmd->add_option("--output", o.output, "json or table")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--cache-dir", o.cache_dir, "content-addressed result store");
    if (with_mode)
        cmd->add_option("--mode", o.mode, "string decomposition mode")
            ->check(CLI::IsMember({"greedy", "strict"}));
}

Weight read_weight(const RootSystem& rs, const std::string& omega, const std::string& root_basis) {
    if (!omega.empty() && !root_basis.empty())
        throw std::invalid_argument("give the weight in one basis only");
    if (!omega.empty()) {
        Weight w = parse_int_list(omega);
        check_weight(rs, w);
        return w;
    }
    if (!root_basis.empty())
        return rs.from_root_coords(parse_int_list(root_basis));
    throw std::invalid_argument("a weight is required (--weight or --weight-root-basis)");
}

std::string render_character_table(const RootSystem& rs, const FormalCharacter& f) {
    std::ostringstream os;
    for (const auto& [w, m] : f.terms())
        os << "  " << rs.weight_str(w) << " x " << m << "\n";
    if (f.terms().empty())
        os << "  (zero)\n";
    return os.str();
}

std::string render_graded_table(const RootSystem& rs, const GradedCharacter& g) {
    std::ostringstream os;
    os << "status: " << (g.exact ? "exact" : "bounds") << "\n";
    if (g.degrees.empty())
        os << "H^*: zero\n";
    for (const auto& [d, f] : g.degrees) {
        os << "H^" << d << " (dim " << f.dimension() << "):\n";
        os << render_character_table(rs, f);
    }
    return os.str();
}

// Emits through the cache when one is configured.  `compute` must be a
// deterministic function of the canonical request; a cache hit skips it
// entirely, replaying the stored bytes and exit code.
int emit(const CommonOpts& o, const json& request, const std::function<CachedResult()>& compute) {
    std::string cache_dir = o.cache_dir;
    if (cache_dir.empty())
        if (const char* env = std::getenv("LIECOH_CACHE_DIR"))
            cache_dir = env;
    if (cache_dir.empty()) {
        CachedResult r = compute();
        std::cout << r.output;
        return r.exit_code;
    }
    ResultCache cache(cache_dir);
    std::string key = dump_canonical(request);
    if (auto hit = cache.lookup(key)) {
        std::cout << hit->output;
        return hit->exit_code;
    }
    CachedResult r = compute();
    cache.store(key, r);
    std::cout << r.output;
    return r.exit_code;
}

json base_request(const std::string& command, const CommonOpts& o) {
    return json{{"command", command}, {"type", o.type}, {"output", o.output}, {"mode", o.mode}};
}

int run_roots(const CommonOpts& o) {
    RootSystem rs = RootSystem::build(o.type);
    json req = base_request("roots", o);
    return emit(o, req, [&]() -> CachedResult {
        if (o.output == "table") {
            std::ostringstream os;
            os << rs.type().str() << ": rank " << rs.rank() << ", "
               << (rs.simply_laced() ? "simply-laced" : "not simply-laced") << ", |R+| = "
               << rs.positive_roots().size() << "\n";
            for (const Root& r : rs.positive_roots()) {
                os << "  root ";
                for (size_t k = 0; k < r.root_coords.size(); ++k)
                    os << (k ? "," : "") << r.root_coords[k];
                os << "  weight " << rs.weight_str(r.weight) << "\n";
            }
            os << "rho " << rs.weight_str(rs.rho()) << ", highest root "
               << rs.weight_str(rs.highest_root().weight) << "\n";
            return {os.str(), 0};
        }
        json out;
        out["type"] = rs.type().str();
        out["rank"] = rs.rank();
        out["simply_laced"] = rs.simply_laced();
        out["cartan_matrix"] = rs.cartan_matrix();
        out["rho"] = rs.rho();
        json roots = json::array();
        for (const Root& r : rs.positive_roots())
            roots.push_back(json{{"root_coords", r.root_coords}, {"weight", r.weight}});
        out["positive_roots"] = roots;
        out["highest_root"] = json{{"root_coords", rs.highest_root().root_coords},
                                   {"weight", rs.highest_root().weight}};
        return {dump_canonical(out) + "\n", 0};
    });
}

int run_weyl(const CommonOpts& o, const std::string& word_s, bool all_words, bool do_enum,
             const std::string& subset_s, bool longest, const std::string& leq_s) {
    RootSystem rs = RootSystem::build(o.type);
    json req = base_request("weyl", o);
    req["word"] = word_s;
    req["all_words"] = all_words;
    req["enumerate"] = do_enum;
    req["subset"] = subset_s;
    req["longest"] = longest;
    req["leq"] = leq_s;
    return emit(o, req, [&]() -> CachedResult {
        json out;
        std::set<int> j;
        if (subset_s.empty())
            for (int i = 0; i < rs.rank(); ++i)
                j.insert(i);
        else
            for (int v : parse_int_list(subset_s))
                j.insert(v - 1);
        if (!word_s.empty()) {
            WeylElt w = evaluate(rs, word_parse(word_s));
            out["length"] = w.length();
            out["canonical_word"] = word_str(ReducedWord{w.word()});
            out["left_descents"] = subset_to_1based(left_descents(rs, w));
            if (all_words) {
                json words = json::array();
                for (const ReducedWord& rw : all_reduced_words(rs, w))
                    words.push_back(word_str(rw));
                out["reduced_words"] = words;
            }
            if (!leq_s.empty()) {
                WeylElt v = evaluate(rs, word_parse(leq_s));
                out["bruhat_leq"] = bruhat_leq(rs, w, v);
            }
        }
        if (longest) {
            out["longest"] = word_str(ReducedWord{longest_element(rs, j).word()});
        }
        if (do_enum) {
            auto elems = enumerate(rs, j);
            out["order"] = elems.size();
            json list = json::array();
            for (const WeylElt& w : elems)
                list.push_back(word_str(ReducedWord{w.word()}));
            out["elements"] = list;
        }
        if (o.output == "table") {
            std::ostringstream os;
            for (const auto& [k, v] : out.items())
                os << k << ": " << v.dump() << "\n";
            return {os.str(), 0};
        }
        return {dump_canonical(out) + "\n", 0};
    });
}

int run_demazure(const CommonOpts& o, const std::string& word_s, const std::string& weight_s,
                 const std::string& weight_rb) {
    RootSystem rs = RootSystem::build(o.type);
    ReducedWord word = word_parse(word_s);
    Weight lambda = read_weight(rs, weight_s, weight_rb);
    json req = base_request("demazure", o);
    req["word"] = word_str(word);
    req["weight"] = lambda;
    return emit(o, req, [&]() -> CachedResult {
        FormalCharacter f = demazure_char(rs, word, lambda);
        if (o.output == "table")
            return {render_character_table(rs, f), 0};
        json out{{"character", character_json(f)}, {"signed_dimension", f.signed_dimension()}};
        return {dump_canonical(out) + "\n", 0};
    });
}

int graded_exit(const GradedCharacter& g) {
    return g.exact ? 0 : 2;
}

int run_hcoh(const CommonOpts& o, const std::string& word_s, const std::string& weight_s,
             const std::string& weight_rb) {
    RootSystem rs = RootSystem::build(o.type);
    ReducedWord word = word_parse(word_s);
    Weight lambda = read_weight(rs, weight_s, weight_rb);
    json req = base_request("hcoh", o);
    req["word"] = word_str(word);
    req["weight"] = lambda;
    return emit(o, req, [&]() -> CachedResult {
        GradedCharacter g = h_line_bundle(rs, word, lambda, o.decompose_mode());
        if (o.output == "table")
            return {render_graded_table(rs, g), graded_exit(g)};
        return {dump_canonical(graded_json(g)) + "\n", graded_exit(g)};
    });
}

int run_hcoh_mod(const CommonOpts& o, const std::string& module_json_s,
                 const std::string& module_file, const std::string& preset,
                 const std::string& subset_s) {
    RootSystem rs = RootSystem::build(o.type);
    FormalCharacter module;
    if (!module_json_s.empty()) {
        module = character_from_json(json::parse(module_json_s), rs.rank());
    } else if (!module_file.empty()) {
        std::ifstream in(module_file);
        if (!in)
            throw std::invalid_argument("cannot open module file " + module_file);
        json j;
        in >> j;
        module = character_from_json(j, rs.rank());
    } else if (!preset.empty()) {
        std::set<int> j;
        for (int v : parse_int_list(subset_s))
            j.insert(v - 1);
        if (preset == "g")
            module = adjoint_weights(rs);
        else if (preset == "g-mod-b")
            module = g_mod_b_weights(rs);
        else if (preset == "b")
            module = p_j_weights(rs, {});
        else if (preset == "p")
            module = p_j_weights(rs, j);
        else
            throw std::invalid_argument("unknown module preset '" + preset + "'");
    } else {
        throw std::invalid_argument("a coefficient module is required "
                                    "(--module-json, --module-file, or --module)");
    }
    ReducedWord w0 = w0_word(rs);
    json req = base_request("hcoh-mod", o);
    req["module"] = character_json(module);
    return emit(o, req, [&]() -> CachedResult {
        GradedCharacter g = h_module_coefficients(rs, w0, module, o.decompose_mode());
        if (o.output == "table")
            return {render_graded_table(rs, g), graded_exit(g)};
        json out = graded_json(g);
        out["word"] = word_str(w0);
        return {dump_canonical(out) + "\n", graded_exit(g)};
    });
}

int run_bwb(const CommonOpts& o, const std::string& weight_s, const std::string& weight_rb) {
    RootSystem rs = RootSystem::build(o.type);
    Weight lambda = read_weight(rs, weight_s, weight_rb);
    json req = base_request("bwb", o);
    req["weight"] = lambda;
    return emit(o, req, [&]() -> CachedResult {
        GradedCharacter g = h_full_flag(rs, lambda);
        if (o.output == "table")
            return {render_graded_table(rs, g), 0};
        return {dump_canonical(graded_json(g)) + "\n", 0};
    });
}

int run_bsdh_tangent(const CommonOpts& o, const std::string& word_s) {
    RootSystem rs = RootSystem::build(o.type);
    ReducedWord word = word_parse(word_s);
    json req = base_request("bsdh-tangent", o);
    req["word"] = word_str(word);
    return emit(o, req, [&]() -> CachedResult {
        GradedCharacter g = bsdh_tangent(rs, word, o.decompose_mode());
        json out = graded_json(g);
        out["j_set"] = subset_to_1based(j_set(rs, word));
        if (rs.simply_laced()) {
            ParabolicBoundReport rep = h0_parabolic_check(rs, word, o.decompose_mode());
            out["h0_parabolic_bound"] = json{{"pass", rep.pass}, {"excess", character_json(rep.excess)}};
        } else {
            out["h0_parabolic_bound"] = json{{"skipped", "asserted for simply-laced types only"}};
        }
        if (o.output == "table") {
            std::ostringstream os;
            os << render_graded_table(rs, g);
            os << "j_set: " << json(out["j_set"]).dump() << "\n";
            return {os.str(), graded_exit(g)};
        }
        return {dump_canonical(out) + "\n", graded_exit(g)};
    });
}

int run_stab(const CommonOpts& o, const std::string& word_s) {
    RootSystem rs = RootSystem::build(o.type);
    WeylElt w = evaluate(rs, word_parse(word_s));
    json req = base_request("stab", o);
    req["word"] = word_str(ReducedWord{w.word()});
    return emit(o, req, [&]() -> CachedResult {
        json out;
        out["I"] = subset_to_1based(schubert_stabilizer(rs, w));
        out["length"] = w.length();
        if (o.output == "table")
            return {"I(w) = " + json(out["I"]).dump() + "\n", 0};
        return {dump_canonical(out) + "\n", 0};
    });
}

int report_exit(const TwistedReport& rep, bool require_h1) {
    if (rep.aut0 != Aut0Kind::ExactlyG && !rep.kernel_character.empty())
        return 0; // a determined nonzero kernel is an answer, not a refusal
    if (require_h1 && !rep.h1_determined())
        return 2;
    if (rep.aut0 != Aut0Kind::ExactlyG)
        return 2;
    return 0;
}

int run_twisted_schubert(const CommonOpts& o, const std::string& word_s) {
    RootSystem rs = RootSystem::build(o.type);
    WeylElt w = evaluate(rs, word_parse(word_s));
    json req = base_request("twisted-schubert", o);
    req["word"] = word_str(ReducedWord{w.word()});
    return emit(o, req, [&]() -> CachedResult {
        TwistedReport rep = twisted_schubert_report(rs, w, o.decompose_mode());
        int code = report_exit(rep, /*require_h1=*/false);
        if (o.output == "table") {
            std::ostringstream os;
            os << "Aut^0: " << (rep.aut0 == Aut0Kind::ExactlyG ? "G" : "inconclusive") << "\n";
            os << "H^1: " << (rep.h1_determined() ? "determined" : rep.h1_reason) << "\n";
            return {os.str(), code};
        }
        return {dump_canonical(twisted_report_json(rep)) + "\n", code};
    });
}

int run_twisted_bsdh(const CommonOpts& o, const std::string& word_s) {
    RootSystem rs = RootSystem::build(o.type);
    ReducedWord word = word_parse(word_s);
    json req = base_request("twisted-bsdh", o);
    req["word"] = word_str(word);
    return emit(o, req, [&]() -> CachedResult {
        TwistedReport rep = twisted_bsdh_report(rs, word, o.decompose_mode());
        int code = report_exit(rep, /*require_h1=*/true);
        if (o.output == "table") {
            std::ostringstream os;
            os << "Aut^0: " << (rep.aut0 == Aut0Kind::ExactlyG ? "G" : "inconclusive") << "\n";
            if (rep.h1_determined())
                os << "H^1(E, Theta_E): dim " << rep.h1_twisted->at(0).dimension() << "\n";
            else
                os << "H^1(E, Theta_E): not determined: " << rep.h1_reason << "\n";
            return {os.str(), code};
        }
        return {dump_canonical(twisted_report_json(rep)) + "\n", code};
    });
}

int run_verify(const std::string& suite, bool all, const std::string& output) {
    std::vector<verify::CheckResult> results;
    if (all) {
        results = verify::run_all();
    } else if (!suite.empty()) {
        results = verify::run_suite(suite);
    } else {
        throw std::invalid_argument("verify needs --suite NAME or --all");
    }
    bool ok = true;
    if (output == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(json{{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
            ok &= r.pass;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " — " << r.detail << "\n";
            ok &= r.pass;
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology calculator for flag varieties and fibration towers"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string word_s, weight_s, weight_rb, subset_s, leq_s, module_json_s, module_file, preset;
    bool all_words = false, do_enum = false, longest = false;

    auto* roots = app.add_subcommand("roots", "print the root system");
    add_common(roots, o);

    auto* weyl = app.add_subcommand("weyl", "Weyl group queries");
    add_common(weyl, o);
    weyl->add_option("--word", word_s, "element given by a word, 1-based letters");
    weyl->add_flag("--all-words", all_words, "list all reduced words of --word");
    weyl->add_flag("--enumerate", do_enum, "list the parabolic subgroup W_J");
    weyl->add_option("--subset", subset_s, "J as 1-based indices, default all");
    weyl->add_flag("--longest", longest, "longest element of W_J");
    weyl->add_option("--leq", leq_s, "test --word <= this word in Bruhat order");

    auto* dem = app.add_subcommand("demazure", "divided-difference composite character");
    add_common(dem, o);
    dem->add_option("--word", word_s)->required();
    dem->add_option("--weight", weight_s, "fundamental-weight coordinates");
    dem->add_option("--weight-root-basis", weight_rb, "simple-root coordinates");

    auto* hcoh = app.add_subcommand("hcoh", "cohomology of a line bundle over the tower of a word");
    add_common(hcoh, o, true);
    hcoh->add_option("--word", word_s)->required();
    hcoh->add_option("--weight", weight_s);
    hcoh->add_option("--weight-root-basis", weight_rb);

    auto* hmod = app.add_subcommand("hcoh-mod",
                                    "cohomology of weight-module coefficients on the full flag variety");
    add_common(hmod, o, true);
    hmod->add_option("--module-json", module_json_s, "inline character JSON");
    hmod->add_option("--module-file", module_file, "path to character JSON");
    hmod->add_option("--module", preset, "preset: g, g-mod-b, b, p");
    hmod->add_option("--j", subset_s, "J for the p preset, 1-based");

    auto* bwb = app.add_subcommand("bwb", "closed-form cohomology on the full flag variety");
    add_common(bwb, o);
    bwb->add_option("--weight", weight_s);
    bwb->add_option("--weight-root-basis", weight_rb);

    auto* tang = app.add_subcommand("bsdh-tangent", "tangent-sheaf cohomology of the tower of a word");
    add_common(tang, o, true);
    tang->add_option("--word", word_s)->required();

    auto* stab = app.add_subcommand("stab", "stabilizer subset I(w) of the Schubert variety");
    add_common(stab, o);
    stab->add_option("--word", word_s)->required();

    auto* tsch = app.add_subcommand("twisted-schubert", "automorphism report for a twisted Schubert variety");
    add_common(tsch, o, true);
    tsch->add_option("--word", word_s)->required();

    auto* tbsdh = app.add_subcommand("twisted-bsdh", "automorphism report for a twisted tower");
    add_common(tbsdh, o, true);
    tbsdh->add_option("--word", word_s)->required();

    std::string suite;
    bool ver_all = false;
    std::string ver_output = "table";
    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    ver->add_option("--suite", suite, "euler | bwb | facts | simply-laced-vanishing | example-4-12");
    ver->add_flag("--all", ver_all, "run every suite");
    ver->add_option("--output", ver_output)->check(CLI::IsMember({"json", "table"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (roots->parsed())
            return run_roots(o);
        if (weyl->parsed())
            return run_weyl(o, word_s, all_words, do_enum, subset_s, longest, leq_s);
        if (dem->parsed())
            return run_demazure(o, word_s, weight_s, weight_rb);
        if (hcoh->parsed())
            return run_hcoh(o, word_s, weight_s, weight_rb);
        if (hmod->parsed())
            return run_hcoh_mod(o, module_json_s, module_file, preset, subset_s);
        if (bwb->parsed())
            return run_bwb(o, weight_s, weight_rb);
        if (tang->parsed())
            return run_bsdh_tangent(o, word_s);
        if (stab->parsed())
            return run_stab(o, word_s);
        if (tsch->parsed())
            return run_twisted_schubert(o, word_s);
        if (tbsdh->parsed())
            return run_twisted_bsdh(o, word_s);
        if (ver->parsed())
            return run_verify(suite, ver_all, ver_output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
