#ifndef PLANRAM_RAMSEY_COMMON_HPP
#define PLANRAM_RAMSEY_COMMON_HPP

#include "planram/enumerate.hpp"
#include "planram/ramsey.hpp"

#include <chrono>

namespace planram::detail {

class Stopwatch {
public:
    std::int64_t ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline EnumerationTask task_for(int n, EnumerationMode mode, const VerifyOptions& opt)
{
    EnumerationTask t;
    t.n = n;
    t.mode = mode;
    t.workers = opt.workers;
    t.budget_nodes = opt.budget_nodes;
    t.allow_large = opt.long_running;
    return t;
}

inline Certificate infeasible(Certificate c, const std::string& why)
{
    c.verdict = Verdict::infeasible;
    c.exhaustive = false;
    c.notes["reason"] = why;
    return c;
}

} // namespace planram::detail

#endif
