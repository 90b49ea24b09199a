#ifndef PLANRAM_RAMSEY_HPP
#define PLANRAM_RAMSEY_HPP

#include "planram/construct.hpp"
#include "planram/graph.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace planram {

// Release string of the toolkit, recorded in every certificate.
const char* toolkit_version() noexcept;

enum class Verdict { verified, refuted, infeasible };

const char* verdict_name(Verdict v) noexcept;

struct Certificate {
    std::string claim_id;
    Verdict verdict = Verdict::infeasible;
    // True only when every enumeration behind the verdict ran to completion.
    bool exhaustive = false;
    // graph6 strings, in canonical order where they come from an enumeration.
    std::vector<std::string> witnesses;
    std::map<std::string, std::int64_t> counts;
    std::map<std::string, std::int64_t> params;
    // Method names and reasons.
    std::map<std::string, std::string> notes;
    std::int64_t runtime_ms = 0;
    std::string version = toolkit_version();
};

// Sorted keys, integers only, two-space indent, trailing newline.
std::string to_json(const Certificate& c, bool with_runtime = true);
Certificate certificate_from_json(std::string_view text);
// 0 if all verified, 1 if any refuted, otherwise 2 if any infeasible.
int exit_code(std::span<const Certificate> certs);

struct VerifyOptions {
    // 0: OpenMP default.
    int workers = 0;
    // 0: environment or built-in default.
    std::uint64_t budget_nodes = 0;
    bool long_running = false;
};

// Every maximal C4-free planar graph on `host` vertices has W_{n_wheel} in its complement.
Certificate verify_pr_upper(int n_wheel, int host, const VerifyOptions& opt = {});
// A witness on claimed_pr(n_wheel) - 1 vertices with no W_{n_wheel} in its complement.
Certificate verify_pr_lower(int n_wheel, const VerifyOptions& opt = {});
Certificate verify_delta(int n, const VerifyOptions& opt = {});
// fact1, fact2, fact3, fact1_property, fact2_property.
Certificate check_fact(std::string_view fact_id, const VerifyOptions& opt = {});
std::vector<std::string> fact_ids();
Certificate lemma_property_suite(int n_max, const VerifyOptions& opt = {});

struct RamseyVerdict {
    int n_wheel = 0;
    int claimed_pr = 0;
    bool lower_ok = false;
    bool upper_ok = false;
    Graph lower_witness;
};

// Table value plus status taken from `stored` certificates with matching claim ids.
RamseyVerdict pr_table(int n_wheel, std::span<const Certificate> stored = {});

enum class UpperBoundMethod { enumeration, edge_bound, none };

struct DeltaVerdict {
    int n = 0;
    int claimed_delta = 0;
    ConstructionTrace witness;
    UpperBoundMethod upper_bound_method = UpperBoundMethod::none;
};

const char* method_name(UpperBoundMethod m) noexcept;
// The analytic route: no C4-free planar graph on n vertices has minimum degree d.
bool edge_bound_excludes(int n, int d);
DeltaVerdict delta_verdict(int n);

std::string pr_upper_id(int n_wheel, int host);
std::string pr_lower_id(int n_wheel);
std::string delta_id(int n);

// Re-checks every witness of a certificate from its graph6 text with code independent
// of the routines that produced it. Returns one line per problem; empty when clean.
std::vector<std::string> revalidate(const Certificate& c);

} // namespace planram

#endif
