#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "linord/coloured.hpp"
#include "linord/constructions.hpp"
#include "linord/lclass.hpp"
#include "linord/parse.hpp"
#include "linord/relation.hpp"
#include "linord/report.hpp"
#include "linord/zcalculus.hpp"

using namespace linord;
using nlohmann::json;

namespace {

constexpr int kUsage = 1;

std::uint64_t default_budget() {
    if (const char* s = std::getenv("LINORD_BUDGET")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
        }
    }
    return 10000;
}

int report(const Verdict& v, bool as_json) {
    if (as_json) {
        std::cout << to_json(v).dump(2) << "\n";
    } else {
        std::cout << status_name(v.status) << " [" << v.rule << "] " << v.message << "\n";
        if (v.witness) {
            std::cout << "  index order: " << v.witness->index_order.str() << "\n";
            for (const auto& p : v.witness->pieces) {
                std::cout << "  " << p.src;
                if (!p.src_type.empty()) std::cout << " (" << p.src_type << ")";
                std::cout << " -> " << p.dst << "\n";
            }
            if (v.witness->sum) std::cout << "  sum: " << normalize(*v.witness->sum).str() << "\n";
        }
    }
    return exit_code(v);
}

int report_bool(bool ok, const std::string& text, bool as_json) {
    if (as_json) std::cout << json{{"result", ok}, {"message", text}}.dump(2) << "\n";
    else std::cout << text << "\n";
    return ok ? 0 : 2;
}

EventuallyConstant parse_sequence(const std::string& s) {
    // "x0,x1,...;tail"
    const auto semi = s.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("sequence needs the form 'x0,x1,...;tail'");
    EventuallyConstant x;
    std::string head = s.substr(0, semi), tok;
    for (char ch : head + ",") {
        if (ch == ',') {
            if (!tok.empty()) x.prefix.push_back(parse_rational(tok));
            tok.clear();
        } else if (ch != ' ') {
            tok += ch;
        }
    }
    x.tail = parse_rational(s.substr(semi + 1));
    return x;
}

std::vector<bool> bits(const std::string& s) {
    std::vector<bool> out;
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("expected a 0/1 string, got '" + s + "'");
        out.push_back(ch == '1');
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision procedures for convex embeddability of countable linear orders"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON reports");

    std::string cls = "one", a, b;
    bool embed = false, convex = false, bi = false;
    auto* rel = app.add_subcommand("rel", "Decide a <=^L b for a class L");
    rel->add_option("--class", cls, "Class of index orders");
    auto* mode = rel->add_option_group("mode");
    mode->add_flag("--embed", embed, "Plain embeddability");
    mode->add_flag("--convex", convex, "Convex embeddability");
    mode->add_flag("--bi", bi, "Both directions");
    mode->require_option(0, 1);
    rel->add_option("a", a)->required();
    rel->add_option("b", b)->required();
    rel->add_flag("--json", as_json);

    auto* iso = app.add_subcommand("iso", "Decide isomorphism");
    iso->add_option("a", a)->required();
    iso->add_option("b", b)->required();
    iso->add_flag("--json", as_json);

    auto* rank = app.add_subcommand("rank", "Hausdorff rank of a scattered term");
    rank->add_option("term", a)->required();
    rank->add_flag("--json", as_json);

    std::string norm_term;
    auto* norm = app.add_subcommand("normalize", "Print the normal form");
    norm->add_option("term", norm_term)->required();

    bool with_witness = false;
    auto* ccs = app.add_subcommand("ccs", "Is the class closed under convex sums");
    ccs->add_option("class", cls)->required();
    ccs->add_flag("--witness", with_witness, "Print the violation witness as JSON");
    ccs->add_flag("--json", as_json);

    std::uint64_t budget = default_budget();
    auto* search = app.add_subcommand("ccs-search", "Search for a ccs violation");
    search->add_option("class", cls)->required();
    search->add_option("--budget", budget, "Instances to try (default: LINORD_BUDGET or 10000)");
    search->add_flag("--json", as_json);

    auto* mem = app.add_subcommand("member", "Class membership");
    mem->add_option("class", cls)->required();
    mem->add_option("term", a)->required();
    mem->add_flag("--json", as_json);

    auto* col = app.add_subcommand("coloured", "Decide the relation on finite coloured orders");
    col->add_option("--class", cls);
    col->add_option("a", a, "Colours, e.g. a,b,a")->required();
    col->add_option("b", b)->required();
    col->add_flag("--json", as_json);

    std::string x_seq, y_seq;
    auto* e1 = app.add_subcommand("e1", "Decide the image relation of two eventually constant sequences");
    e1->add_option("x", x_seq, "x0,x1,...;tail")->required();
    e1->add_option("y", y_seq)->required();
    e1->add_flag("--json", as_json);

    std::string map_name;
    std::vector<std::string> map_args;
    auto* construct = app.add_subcommand("construct", "Apply a reduction map: cong T M | succ T | fractal T T0 ALPHA | "
                                                      "threshold T GAMMA | finzeta T | coloured COLOURS | e1 SEQ");
    construct->add_option("map", map_name)->required();
    construct->add_option("args", map_args);

    std::string corpus;
    std::uint64_t seed = 1;
    auto* probe = app.add_subcommand("probe-transitivity", "List triples violating transitivity");
    probe->add_option("--class", cls);
    probe->add_option("--corpus", corpus, "One term per line")->required();
    probe->add_flag("--json", as_json);

    std::string family;
    std::vector<std::string> gen_args;
    auto* gen = app.add_subcommand("gen", "Generate family members: shuffle PREFIX PERIOD | ishuffle LO HI | random N");
    gen->add_option("family", family)->required();
    gen->add_option("args", gen_args);
    gen->add_option("--seed", seed, "Seed for random terms");

    std::string witness_file;
    auto* check = app.add_subcommand("check-witness", "Re-validate a JSON witness");
    check->add_option("--class", cls);
    check->add_option("file", witness_file)->required();
    check->add_option("a", a);
    check->add_option("b", b);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsage;
    }

    try {
        if (*rel) {
            const Term ta = parse_term(a), tb = parse_term(b);
            const ClassId c = parse_class(cls);
            if (embed) return report(embeds(ta, tb), as_json);
            if (convex) return report(convex_embeds(ta, tb), as_json);
            if (bi) return report(biembeds(c, ta, tb), as_json);
            return report(l_convex_embeds(c, ta, tb), as_json);
        }
        if (*iso) return report(iso_check(parse_term(a), parse_term(b)), as_json);
        if (*rank) {
            const Ordinal r = hausdorff_rank(parse_term(a));
            if (as_json) std::cout << json{{"rank", r.str()}}.dump(2) << "\n";
            else std::cout << r.str() << "\n";
            return 0;
        }
        if (*norm) {
            std::cout << normalize(parse_term(norm_term)).str() << "\n";
            return 0;
        }
        if (*ccs) {
            const Verdict v = ccs_check(parse_class(cls));
            if (with_witness) {
                std::cout << to_json(v).dump(2) << "\n";
                return exit_code(v);
            }
            return report(v, as_json);
        }
        if (*search) {
            const ClassId c = parse_class(cls);
            if (auto w = ccs_witness_search(c, budget)) {
                const Verdict check_v = verify_ccs_witness(c, *w);
                return report(Verdict::fails("ccs-search", "violation found; " + check_v.message, *w), as_json);
            }
            return report(Verdict::unknown("ccs-search", "no violation within " + std::to_string(budget) + " instances"),
                          as_json);
        }
        if (*mem) return report(member(parse_class(cls), parse_term(a)), as_json);
        if (*col) return report(coloured_l_convex_embeds(parse_class(cls), parse_colours(a), parse_colours(b)), as_json);
        if (*e1) return report(e1_decide(parse_sequence(x_seq), parse_sequence(y_seq)), as_json);
        if (*construct) {
            const auto need = [&](std::size_t n) {
                if (map_args.size() != n)
                    throw std::invalid_argument(map_name + " takes " + std::to_string(n) + " argument(s)");
            };
            Term out = Term::fin(1);
            if (map_name == "cong") need(2), out = phi_cong(parse_term(map_args[0]), parse_term(map_args[1]));
            else if (map_name == "succ") need(1), out = phi_succ(parse_term(map_args[0]));
            else if (map_name == "fractal")
                need(3), out = phi_fractal(parse_term(map_args[0]), parse_term(map_args[1]), Ordinal::parse(map_args[2]));
            else if (map_name == "threshold") need(2), out = phi_threshold(parse_term(map_args[0]), Ordinal::parse(map_args[1]));
            else if (map_name == "finzeta") need(1), out = phi_fin_zeta(parse_term(map_args[0]));
            else if (map_name == "coloured") need(1), out = phi_coloured(parse_colours(map_args[0]));
            else if (map_name == "e1") need(1), out = phi_e1(parse_sequence(map_args[0]));
            else throw std::invalid_argument("unknown map '" + map_name + "'");
            std::cout << out.str() << "\n";
            return 0;
        }
        if (*probe) {
            std::ifstream in(corpus);
            if (!in) throw std::invalid_argument("cannot read corpus " + corpus);
            std::vector<Term> terms;
            for (std::string line; std::getline(in, line);)
                if (!line.empty() && line[0] != '#') terms.push_back(parse_term(line));
            const auto triples = transitivity_probe(parse_class(cls), terms);
            if (as_json) {
                json out = json::array();
                for (const auto& t : triples) out.push_back({t.a.str(), t.b.str(), t.c.str()});
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& t : triples) std::cout << t.a.str() << " | " << t.b.str() << " | " << t.c.str() << "\n";
                std::cout << triples.size() << " violating triple(s)\n";
            }
            return triples.empty() ? 0 : 2;
        }
        if (*gen) {
            if (family == "shuffle" && gen_args.size() == 2) {
                std::cout << gen_shuffle_family(LabelSet::periodic(bits(gen_args[0]), bits(gen_args[1]))).str() << "\n";
            } else if (family == "ishuffle" && gen_args.size() == 2) {
                std::cout << gen_interval_shuffle(parse_rational(gen_args[0]), parse_rational(gen_args[1])).str() << "\n";
            } else if (family == "random" && gen_args.size() == 1) {
                std::mt19937_64 rng(seed);
                const std::vector<std::string> letters{"1", "2", "3", "w", "w*", "z", "q"};
                std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1), len(1, 4);
                for (int i = 0, n = std::stoi(gen_args[0]); i < n; ++i) {
                    std::string t;
                    for (std::size_t k = 0, l = len(rng); k < l; ++k) t += (k ? "+" : "") + letters[pick(rng)];
                    std::cout << t << "\n";
                }
            } else {
                throw std::invalid_argument("usage: gen shuffle PREFIX PERIOD | gen ishuffle LO HI | gen random N");
            }
            return 0;
        }
        if (*check) {
            std::ifstream in(witness_file);
            if (!in) throw std::invalid_argument("cannot read " + witness_file);
            const json j = json::parse(in);
            const Witness w = witness_from_json(j);
            const ClassId c = parse_class(cls);
            const Verdict v = w.family ? verify_ccs_witness(c, w)
                                       : verify_relation_witness(c, parse_term(a), parse_term(b), w);
            return report(v, as_json);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
