#pragma once

// Named verification suites. Each returns a report of (name, expected,
// actual, pass) checks; a suite passes when every check does.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "constaclass/factor.hpp"
#include "constaclass/ideal_enum.hpp"
#include "constaclass/json_io.hpp"

namespace constaclass {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const noexcept;
    std::size_t failures() const noexcept;
    /// Records a check; pass is expected == actual.
    void add(std::string name, std::string expected, std::string actual);
    void add(std::string name, std::string expected, std::string actual, bool pass);
    void append(const Report& other);

    Json to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    Scheme scheme = Scheme::Stated;
    std::uint64_t seed = kDefaultSeed;
    unsigned m = 1;
    unsigned n = 3;
    unsigned d = 1;
    std::uint32_t delta = 1;
    std::uint32_t alpha = 1;
    std::size_t sample = 100;
};

/// The (1 + u^2), length 14 reference data over GF(2).
Report verify_worked_example(const VerifyOptions& opt);
/// Exhaustive ideals of K + vK for a factor of degree d over GF(2^m).
Report verify_brute_ideals(const VerifyOptions& opt);
/// Random descriptor tuples at (m, n): shift and u closure, independence, size.
/// When the whole code list is small, also pairwise distinctness.
Report verify_closure(const VerifyOptions& opt);
/// Unit identities and square-root counts over a fixed list of (m, n, delta, alpha).
Report verify_units(const VerifyOptions& opt);
/// Length-2 submodules of GF(2^m)[x]/<x^4>, restricted and unrestricted.
Report verify_length2(const VerifyOptions& opt);

/// "worked-example", "brute-ideals", "closure", "units", "length2" or "all".
Report run_suite(std::string_view name, const VerifyOptions& opt);
std::vector<std::string_view> suite_names();

/// Smallest odd n for which x^n - 1 over GF(2^m) has an irreducible factor of degree d.
unsigned smallest_length_with_degree(unsigned m, unsigned d);

}  // namespace constaclass
