#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperhopf/antipode.hpp"
#include "hyperhopf/generate.hpp"
#include "hyperhopf/invariants.hpp"
#include "hyperhopf/json_io.hpp"
#include "hyperhopf/orientations.hpp"
#include "hyperhopf/verify.hpp"

using namespace hyperhopf;

namespace {

json read_json_input(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return json::parse(in);
}

RestrictMode parse_mode(const std::string& s) {
    if (s == "subset") return RestrictMode::Subset;
    if (s == "cap") return RestrictMode::Cap;
    throw CLI::ValidationError("mode must be subset or cap");
}

std::string hilbert_text(const RationalPolynomial& p) {
    std::vector<Rational> c = to_hilbert_basis(p);
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        if (!first) out << " + ";
        out << rational_to_string(c[k]) << " H" << k;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

void print_polynomial(const RationalPolynomial& p, const std::string& basis,
                      bool as_json, bool at_minus_one) {
    if (as_json) {
        json j = serialize_polynomial(p, basis == "hilbert");
        if (at_minus_one) j["value_at_minus_one"] = rational_to_string(p.evaluate(-1));
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << (basis == "hilbert" ? hilbert_text(p) : p.to_string()) << "\n";
    if (at_minus_one)
        std::cout << "value at -1: " << rational_to_string(p.evaluate(-1)) << "\n";
}

void print_sum(const HgSum& s) { std::cout << serialize_sum(s).dump() << "\n"; }

SetPartition parse_blocks(const Hypergraph& g, const std::string& spec) {
    // "a,b|c,d" style block list
    std::vector<Mask> blocks;
    std::stringstream ss(spec);
    std::string block;
    while (std::getline(ss, block, '|')) {
        Mask m = 0;
        std::stringstream bs(block);
        std::string label;
        while (std::getline(bs, label, ',')) {
            int v = g.index_of(label);
            if (v < 0) throw std::invalid_argument("unknown vertex in blocks: " + label);
            m |= Mask(1) << v;
        }
        if (m) blocks.push_back(m);
    }
    return SetPartition(blocks);
}

std::string orientation_text(const Hypergraph& g, const QuasiOrder& q) {
    std::ostringstream out;
    for (int b = 0; b < q.num_classes(); ++b) {
        if (b) out << " ";
        out << "{";
        bool first = true;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (q.classes.blocks[b] >> v & 1) {
                out << (first ? "" : ",") << g.label(v);
                first = false;
            }
        out << "}";
    }
    out << " |";
    for (int i = 0; i < q.num_classes(); ++i)
        for (int j = 0; j < q.num_classes(); ++j)
            if (q.below[j] >> i & 1) out << " " << i << "<" << j;
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for hypergraph and multi-complex bialgebras"};
    app.require_subcommand(1);

    int enum_cap = -1, orient_cap = -1;
    long long work_bound = -1;
    app.add_option("--enum-cap", enum_cap, "max vertices for subset/partition enumeration");
    app.add_option("--orient-cap", orient_cap, "max vertices for quasi-order enumeration");
    app.add_option("--work-bound", work_bound, "max steps for brute-force oracles");

    std::string input = "-", variant = "subset", basis = "monomial";
    std::string left = "subset", right = "subset", method = "takeuchi", op = "sums";
    std::string contract, blocks, suite = "all";
    bool as_json = false, at_minus_one = false, reduced = false;
    int max_n = 4, count = 100;
    std::uint64_t seed = 1;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "JSON input file, or - for stdin");
        cmd->add_flag("--json", as_json, "JSON output");
    };

    auto* chromatic_cmd = app.add_subcommand("chromatic", "chromatic polynomials");
    add_input(chromatic_cmd);
    chromatic_cmd->add_option("--variant", variant)->check(CLI::IsMember({"subset", "cap", "mixed"}));
    chromatic_cmd->add_option("--basis", basis)->check(CLI::IsMember({"monomial", "hilbert"}));
    chromatic_cmd->add_flag("--at-minus-one", at_minus_one, "also evaluate at -1");

    auto* coproduct_cmd = app.add_subcommand("coproduct", "pairwise or contraction coproducts");
    add_input(coproduct_cmd);
    coproduct_cmd->add_option("--left", left)->check(CLI::IsMember({"subset", "cap"}));
    coproduct_cmd->add_option("--right", right)->check(CLI::IsMember({"subset", "cap"}));
    coproduct_cmd->add_option("--contract", contract, "contraction-extraction mode instead")
        ->check(CLI::IsMember({"subset", "cap"}));
    coproduct_cmd->add_flag("--reduced", reduced, "subtract the primitive part");

    auto* antipode_cmd = app.add_subcommand("antipode", "antipode formulas");
    add_input(antipode_cmd);
    antipode_cmd->add_option("--left", left)->check(CLI::IsMember({"subset", "cap"}));
    antipode_cmd->add_option("--right", right)->check(CLI::IsMember({"subset", "cap"}));
    antipode_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"takeuchi", "closed", "mixed"}));

    auto* orient_cmd = app.add_subcommand("orientations", "acyclic orientations");
    add_input(orient_cmd);
    orient_cmd->add_option("--op", op)->check(CLI::IsMember({"list", "sums", "classify"}));
    orient_cmd->add_option("--classes", blocks, "vertex classes a,b|c for classify");
    std::string below_spec;
    orient_cmd->add_option("--below", below_spec, "strict relations i<j;k<l on class indices");

    auto* character_cmd = app.add_subcommand("character", "lambda character values");
    add_input(character_cmd);
    character_cmd->add_option("--mode", variant)->check(CLI::IsMember({"subset", "cap"}));

    auto* eulerian_cmd = app.add_subcommand("eulerian", "eulerian idempotent");
    add_input(eulerian_cmd);

    auto* mc_cmd = app.add_subcommand("mc", "multi-complex operations");
    add_input(mc_cmd);
    std::string mc_op = "kappa";
    mc_cmd->add_option("--op", mc_op)
        ->check(CLI::IsMember({"kappa", "chromatic", "coproduct", "contract", "antipode",
                               "eulerian", "quotient", "restrict"}));
    mc_cmd->add_option("--method", method)->check(CLI::IsMember({"takeuchi", "closed"}));
    mc_cmd->add_option("--blocks", blocks, "vertex blocks a,b|c,d for quotient/restrict");
    mc_cmd->add_option("--basis", basis)->check(CLI::IsMember({"monomial", "hilbert"}));

    auto* verify_cmd = app.add_subcommand("verify", "property suites");
    verify_cmd->add_option("--suite", suite);
    verify_cmd->add_option("--max-n", max_n);
    verify_cmd->add_option("--count", count);
    verify_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enum_cap > 0) caps().enumeration = enum_cap;
        if (orient_cap > 0) caps().orientation = orient_cap;
        if (work_bound > 0) caps().work_bound = work_bound;

        if (chromatic_cmd->parsed()) {
            Hypergraph g = parse_hypergraph(read_json_input(input));
            auto v = chromatic_variant_from_name(variant);
            print_polynomial(chromatic(g, *v), basis, as_json, at_minus_one);
        } else if (coproduct_cmd->parsed()) {
            Hypergraph g = parse_hypergraph(read_json_input(input));
            if (!contract.empty()) {
                print_sum(delta_contract(g, parse_mode(contract)));
            } else {
                CoproductMode m{parse_mode(left), parse_mode(right)};
                print_sum(reduced ? reduced_coproduct(g, m) : coproduct_pair(g, m));
            }
        } else if (antipode_cmd->parsed()) {
            Hypergraph g = parse_hypergraph(read_json_input(input));
            CoproductMode m{parse_mode(left), parse_mode(right)};
            if (method == "closed") {
                if (!m.equal_modes())
                    throw std::invalid_argument("closed antipode needs equal modes");
                print_sum(antipode_closed(g, m.left));
            } else if (method == "mixed") {
                print_sum(antipode_mixed(g));
            } else {
                print_sum(takeuchi_antipode(g, m));
            }
        } else if (orient_cmd->parsed()) {
            Hypergraph g = parse_hypergraph(read_json_input(input));
            if (op == "sums") {
                OrientationSums s = orientation_sums(g);
                json j{{"signed_all", s.signed_all},
                       {"total_count", s.total_count},
                       {"signed_one_max", s.signed_one_max},
                       {"count", s.count_all}};
                std::cout << j.dump() << "\n";
            } else if (op == "list") {
                for_each_quasi_order(g.num_vertices(), [&](const QuasiOrder& q) {
                    OrientationClass c = classify_orientation(g, q);
                    if (!c.is_acyclic) return;
                    std::cout << orientation_text(g, q)
                              << (c.is_total ? " total" : "")
                              << (c.is_one_max ? " 1-max" : "") << "\n";
                });
            } else {
                QuasiOrder q;
                q.classes = parse_blocks(g, blocks);
                q.below.assign(q.classes.num_blocks(), 0);
                std::stringstream ss(below_spec);
                std::string rel;
                while (std::getline(ss, rel, ';')) {
                    auto lt = rel.find('<');
                    if (lt == std::string::npos)
                        throw std::invalid_argument("relations look like i<j");
                    int lo = std::stoi(rel.substr(0, lt));
                    int hi = std::stoi(rel.substr(lt + 1));
                    q.below[hi] |= Mask(1) << lo;
                }
                // transitive closure of the user relation
                for (bool ch = true; ch;) {
                    ch = false;
                    for (int i = 0; i < q.num_classes(); ++i)
                        for (int j = 0; j < q.num_classes(); ++j)
                            if ((q.below[i] >> j & 1) && (q.below[j] & ~q.below[i])) {
                                q.below[i] |= q.below[j];
                                ch = true;
                            }
                }
                OrientationClass c = classify_orientation(g, q);
                json j{{"acyclic", c.is_acyclic},
                       {"total", c.is_total},
                       {"one_max", c.is_one_max}};
                std::cout << j.dump() << "\n";
            }
        } else if (character_cmd->parsed()) {
            Hypergraph g = parse_hypergraph(read_json_input(input));
            RestrictMode m = parse_mode(variant);
            std::cout << rational_to_string(lambda_character(m)(g)) << "\n";
        } else if (eulerian_cmd->parsed()) {
            Hypergraph g = parse_hypergraph(read_json_input(input));
            print_sum(eulerian_idempotent(g));
        } else if (mc_cmd->parsed()) {
            MultiComplex c = parse_multicomplex(read_json_input(input));
            if (mc_op == "kappa") {
                std::cout << serialize_hypergraph(kappa(c)).dump() << "\n";
            } else if (mc_op == "chromatic") {
                print_polynomial(mc_chromatic(c), basis, as_json, false);
            } else if (mc_op == "coproduct") {
                std::cout << serialize_sum(mc_coproduct(c)).dump() << "\n";
            } else if (mc_op == "contract") {
                std::cout << serialize_sum(mc_delta_contract(c)).dump() << "\n";
            } else if (mc_op == "antipode") {
                McSum s = method == "takeuchi" ? mc_takeuchi(c) : mc_antipode(c);
                std::cout << serialize_sum(s).dump() << "\n";
            } else if (mc_op == "eulerian") {
                std::cout << serialize_sum(mc_eulerian(c)).dump() << "\n";
            } else {
                Hypergraph shape(c.labels());
                SetPartition p = parse_blocks(shape, blocks);
                if (mc_op == "quotient") {
                    std::cout << serialize_multicomplex(mc_quotient(c, p)).dump() << "\n";
                } else {
                    Mask m = 0;
                    for (Mask b : p.blocks) m |= b;
                    std::cout << serialize_multicomplex(mc_restrict(c, m)).dump() << "\n";
                }
            }
        } else if (verify_cmd->parsed()) {
            VerifyOptions opt{max_n, count, seed};
            VerifyResult r = run_suite(suite, opt);
            if (r.ok) {
                std::cout << "PASS " << suite << " (" << r.checked << " checks)\n";
            } else {
                std::cout << "FAIL " << suite << ": " << r.failure << "\n";
                std::cerr << json{{"suite", suite},
                                  {"failure", r.failure},
                                  {"counterexample", r.counterexample}}
                                 .dump()
                          << "\n";
                return 1;
            }
        }
    } catch (const resource_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
