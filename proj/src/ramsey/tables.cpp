#include "planram/ramsey.hpp"

#include "planram/error.hpp"
#include "planram/graph6.hpp"

namespace planram {

std::string pr_upper_id(int n_wheel, int host)
{
    return "thm2.pr.w" + std::to_string(n_wheel) + ".upper.n" + std::to_string(host);
}

std::string pr_lower_id(int n_wheel)
{
    return "thm2.pr.w" + std::to_string(n_wheel) + ".lower";
}

std::string delta_id(int n)
{
    return "thm1.delta.n" + std::to_string(n);
}

const char* method_name(UpperBoundMethod m) noexcept
{
    switch (m) {
    case UpperBoundMethod::enumeration:
        return "enumeration";
    case UpperBoundMethod::edge_bound:
        return "edge_bound";
    case UpperBoundMethod::none:
        return "none";
    }
    return "none";
}

bool edge_bound_excludes(int n, int d)
{
    // Minimum degree d forces at least ceil(dn/2) edges; C4-free planar graphs have 7e <= 15(n-2).
    const long long e = (static_cast<long long>(d) * n + 1) / 2;
    return 7 * e > 15LL * (n - 2);
}

DeltaVerdict delta_verdict(int n)
{
    DeltaVerdict v;
    v.n = n;
    v.claimed_delta = claimed_delta(n);
    v.witness = build_delta_witness(n);
    if (n <= 12)
        v.upper_bound_method = UpperBoundMethod::enumeration;
    else if (edge_bound_excludes(n, v.claimed_delta + 1))
        v.upper_bound_method = UpperBoundMethod::edge_bound;
    return v;
}

RamseyVerdict pr_table(int n_wheel, std::span<const Certificate> stored)
{
    RamseyVerdict r;
    r.n_wheel = n_wheel;
    r.claimed_pr = claimed_pr(n_wheel);
    for (const Certificate& c : stored) {
        if (c.verdict != Verdict::verified)
            continue;
        if (c.claim_id == pr_lower_id(n_wheel)) {
            r.lower_ok = true;
            if (!c.witnesses.empty())
                r.lower_witness = from_graph6(c.witnesses.front());
        }
        if (c.claim_id == pr_upper_id(n_wheel, r.claimed_pr) && c.exhaustive)
            r.upper_ok = true;
    }
    return r;
}

} // namespace planram
