#ifndef HYPERHOPF_VERIFY_HPP
#define HYPERHOPF_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "hyperhopf/json_io.hpp"

namespace hyperhopf {

struct VerifyOptions {
    int max_n = 4;               // largest vertex count exercised
    int count = 100;             // random cases beyond the exhaustive basis
    std::uint64_t seed = 1;
};

struct VerifyResult {
    bool ok = true;
    long long checked = 0;
    std::string failure;         // which check failed
    json counterexample = json::object();

    void fail(const std::string& what, json witness) {
        if (!ok) return;
        ok = false;
        failure = what;
        counterexample = std::move(witness);
    }
};

/// Named property suites shared by the CLI and the acceptance tests.
std::vector<std::string> verify_suite_names();
VerifyResult run_suite(const std::string& name, const VerifyOptions& opt);

/// The exhaustive basis up to min(max_n, 4) plus seeded random hypergraphs
/// of sizes 5..max_n.
std::vector<Hypergraph> verify_corpus(const VerifyOptions& opt);

}  // namespace hyperhopf

#endif
