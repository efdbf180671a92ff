#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "lrb/branching.hpp"
#include "lrb/flags.hpp"
#include "lrb/genexp.hpp"
#include "lrb/json_io.hpp"
#include "lrb/lr.hpp"
#include "lrb/verify.hpp"

namespace lrb {

namespace {

// thrown when a result breaks an identity the library promises
struct InvariantViolation : std::runtime_error {
    json dump;
    InvariantViolation(const std::string& what, json d) : std::runtime_error(what), dump(std::move(d)) {}
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

const char* kSchemas = R"(JSON formats:
  partition   [5,4,4]  (on the command line: "5,4,4", "" for the empty partition)
  tableau     {"outer":[...],"inner":[...],"rows":[[...],...]}  rows top to bottom,
              skew cells omitted, each row starting after its inner indent
  element     {"n":8,"mu":[4,3,3,2],"components":[{"kind":"T","a":2,"left":[...],"right":[...]},...]}
              components left to right; kind is T, TBAR0, SP_PLUS or SP_MINUS
  polynomial  {"coeffs":{"1":1,"3":1}}
Exit codes: 0 ok, 1 invalid input, 2 internal invariant violation.)";

json do_branch(int n, const std::string& lam, const std::string& mu, const std::string& group, const std::string& method) {
    BranchingQuery q{n, parse_partition(lam), parse_partition(mu), parse_group(group)};
    unsigned m = method == "direct" ? DIRECT : method == "barred" ? BARRED : method == "flagged" ? FLAGGED : ALL_METHODS;
    if (m == ALL_METHODS && q.group != Group::O) m = BARRED | FLAGGED;
    auto r = multiplicity(q, m);
    json terms = json::array();
    for (auto& t : r.terms) {
        json j{{"delta", t.delta}};
        if (m & BARRED) j["barred"] = t.barred;
        if (m & FLAGGED) j["flagged"] = t.flagged;
        terms.push_back(j);
    }
    json out{{"n", n}, {"lambda", q.lambda}, {"mu", q.mu}, {"group", group_name(q.group)}, {"terms", terms}};
    std::vector<long long> vals;
    if (m & DIRECT) out["direct"] = r.direct, vals.push_back(r.direct);
    if (m & BARRED) out["barred"] = r.barred, vals.push_back(r.barred);
    if (m & FLAGGED) out["flagged"] = r.flagged, vals.push_back(r.flagged);
    bool agree = std::all_of(vals.begin(), vals.end(), [&](long long v) { return v == vals[0]; });
    out["agree"] = agree;
    out["total"] = vals[0];
    if (!agree) throw InvariantViolation("branching methods disagree", out);
    return out;
}

json do_genexp(const std::string& type, int rank, const std::string& mu, int check_identity) {
    if (type != "B" && type != "D") throw std::invalid_argument("type must be B or D");
    Partition p = parse_partition(mu);
    Poly K = type == "B" ? K_so_odd(p, rank) : K_so_even(p, rank);
    json out = to_json(K);
    if (check_identity >= 0) {
        int n = type == "B" ? 2 * rank + 1 : 2 * rank;
        if (!in_P_O(n, p)) throw std::invalid_argument("mu is not in P(O_n)");
        auto r = graded_identity_check(p, n, check_identity);
        out["identity"] = {{"n", n}, {"degree", check_identity}, {"lhs", to_json(r.lhs)["coeffs"]},
                           {"rhs", to_json(r.rhs)["coeffs"]}, {"equal", r.equal}};
        if (!r.equal) throw InvariantViolation("graded identity fails", out);
    }
    return out;
}

json do_separate(const std::string& input, bool trace, int pad) {
    SpinorElement e = element_from_json(read_json_file(input));
    if (!validate_element(e)) throw std::invalid_argument("element is not admissible");
    if (!is_l_highest_element(e)) throw std::invalid_argument("element is not l-highest");
    std::vector<SlideTrace> steps;
    SlideAudit audit;
    auto r = separate(e, pad, &audit, &steps);
    json out = to_json(r);
    json js = json::array();
    for (auto& s : steps) {
        if (trace) js.push_back(to_json(s));
        else js.push_back({{"left", s.left}, {"left_tail", s.left_tail}});
    }
    out["steps"] = js;
    if (!audit.clean()) {
        out["audit"] = audit.failures;
        throw InvariantViolation("sliding audit failed", out);
    }
    if (!r.barred) throw InvariantViolation("tail is not barred", out);
    return out;
}

json do_lr(const std::string& outer, const std::string& inner, const std::string& content, const std::string& kind) {
    LrKind k = kind == "anti" ? LrKind::ANTI_LATTICE : LrKind::LATTICE;
    json out = json::array();
    for (auto& w : enumerate_lr(parse_partition(outer), parse_partition(inner), parse_partition(content), k))
        out.push_back({{"filling", to_json(w.filling)}, {"companion", to_json(w.companion)}});
    return out;
}

json do_flags(int n, const std::string& mu, const std::string& delta, const std::string& file, const std::string& side) {
    Partition p = parse_partition(mu), d = parse_partition(delta);
    if (!in_P_O(n, p)) throw std::invalid_argument("mu is not in P(O_n)");
    Tableau t = tableau_from_json(read_json_file(file));
    if (!is_semistandard(t)) throw std::invalid_argument("tableau is not semistandard");
    auto ctx = make_context(n, p);
    FlagSequences fs;
    bool verdict = false;
    if (side == "companion") {
        if (t.outer.size() && (t.outer != rotated_empty(p).outer || t.inner != rotated_empty(p).inner))
            throw std::invalid_argument("companion must have shape mu^pi");
        fs = flag_sequences_companion(t, ctx);
        verdict = is_flagged_D_companion(t, ctx);
    } else if (side == "row") {
        if (shape(t) != conjugate(p)) throw std::invalid_argument("row side needs a tableau of shape mu'");
        fs = flag_sequences_row(t, ctx, d);
        verdict = is_barred_D_row(t, ctx, d);
    } else {
        fs = flag_from_skew(t, ctx);
        verdict = is_flagged_D_skew(t, ctx);
    }
    return {{"m", fs.m}, {"n", fs.nseq}, {"not_in_set", fs.not_in_set}, {"verdict", verdict}};
}

json do_verify(const std::string& suite, double budget, std::ostream& err) {
    auto reps = run_suite(suite, budget);
    json crit = json::array();
    bool all = true;
    for (auto& r : reps) {
        crit.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        err << r.id << " " << r.name << ": " << r.seconds << " s\n";  // timings stay off stdout
        all = all && r.pass;
    }
    json out{{"suite", suite}, {"criteria", crit}, {"pass", all}};
    if (!all) throw InvariantViolation("verification failed", out);
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Branching multiplicities for GL_n to O_n and generalized exponents"};
    app.footer(kSchemas);
    app.require_subcommand(1);

    int n = 0, rank = 0, identity = -1, pad = -1;
    double budget = 1800;
    bool trace = false;
    std::string lam, mu, delta, group = "O", method = "all", type, input, outer, inner, content, kind = "lattice",
                tableau, side, suite = "all";

    auto* branch = app.add_subcommand("branch", "multiplicity of an O_n, Sp_n, B or C irreducible in a GL_n one");
    branch->add_option("--n", n, "rank of GL_n")->required();
    branch->add_option("--lambda", lam, "GL_n highest weight")->required();
    branch->add_option("--mu", mu, "highest weight of the subgroup")->required();
    branch->add_option("--group", group)->check(CLI::IsMember({"O", "Sp", "B", "C"}));
    branch->add_option("--method", method)->check(CLI::IsMember({"direct", "barred", "flagged", "all"}));

    auto* gen = app.add_subcommand("genexp", "generalized exponents of so_n");
    gen->add_option("--type", type)->required()->check(CLI::IsMember({"B", "D"}));
    gen->add_option("--rank", rank)->required();
    gen->add_option("--mu", mu)->required();
    gen->add_option("--check-identity", identity, "also check the graded branching identity up to this degree");

    auto* sep = app.add_subcommand("separate", "separation of an l-highest spinor element");
    sep->add_option("--input", input, "element JSON file")->required();
    sep->add_flag("--trace", trace, "include every slide step");
    sep->add_option("--padding", pad, "padding height for the negative case (even)");

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson tableaux");
    lr->require_subcommand(1);
    auto* lre = lr->add_subcommand("enumerate", "list LR tableaux of outer/inner with the given content");
    lre->add_option("--outer", outer)->required();
    lre->add_option("--inner", inner)->required();
    lre->add_option("--content", content)->required();
    lre->add_option("--kind", kind)->check(CLI::IsMember({"lattice", "anti"}));

    auto* fl = app.add_subcommand("flags", "flag sequences and the flagged or barred verdict");
    fl->add_option("--n", n)->required();
    fl->add_option("--mu", mu)->required();
    fl->add_option("--delta", delta, "needed for --side row");
    fl->add_option("--tableau", tableau, "tableau JSON file")->required();
    fl->add_option("--side", side)->required()->check(CLI::IsMember({"companion", "row", "skew"}));

    auto* ver = app.add_subcommand("verify", "run the cross-check matrix");
    ver->add_option("--suite", suite)->check(CLI::IsMember({"all", "branching", "genexp", "separation"}));
    ver->add_option("--budget", budget, "seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        json res;
        if (*branch) res = do_branch(n, lam, mu, group, method);
        else if (*gen) res = do_genexp(type, rank, mu, identity);
        else if (*sep) res = do_separate(input, trace, pad);
        else if (*lre) res = do_lr(outer, inner, content, kind);
        else if (*fl) res = do_flags(n, mu, delta, tableau, side);
        else res = do_verify(suite, budget, err);
        out << res.dump() << "\n";
        return 0;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n" << e.dump.dump(2) << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lrb
