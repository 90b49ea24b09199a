#include "planram/construct.hpp"

#include "planram/error.hpp"

#include <charconv>
#include <sstream>

namespace planram {

namespace {

const char* kind_word(OperationKind k)
{
    switch (k) {
    case OperationKind::a:
        return "A";
    case OperationKind::b:
        return "B";
    case OperationKind::b_inverse:
        return "Binv";
    case OperationKind::c:
        return "C";
    }
    return "?";
}

std::size_t param_count(OperationKind k)
{
    return k == OperationKind::a ? 3 : 2 + (k == OperationKind::c ? 1 : 0);
}

int parse_int(std::string_view s)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "' in trace");
    return v;
}

} // namespace

PlaneEmbedding seed_embedding(const std::string& seed)
{
    constexpr std::string_view cycle_prefix = "cycle:";
    if (seed.rfind(cycle_prefix, 0) == 0) {
        const int n = parse_int(std::string_view(seed).substr(cycle_prefix.size()));
        if (n < 3 || n > kMaxOrder)
            throw Error(ErrorKind::UnsupportedOrder, "cycle seed needs 3..64 vertices");
        return embed(graphs::cycle(n));
    }
    return load_seed(seed).embedding;
}

PlaneEmbedding apply(const PlaneEmbedding& e, const TraceStep& s)
{
    if (s.params.size() != param_count(s.kind))
        throw Error(ErrorKind::ParseError, std::string("operation ") + kind_word(s.kind) + " has the wrong number of parameters");
    const auto& p = s.params;
    switch (s.kind) {
    case OperationKind::a:
        return operation_a(e, p[0], p[1], p[2]);
    case OperationKind::b:
        return operation_b(e, p[0], p[1] < 0 ? std::optional<int>{} : std::optional<int>{p[1]});
    case OperationKind::b_inverse:
        return operation_b_inverse(e, p[0], p[1]);
    case OperationKind::c:
        return operation_c(e, p[0], p[1], p[2] != 0);
    }
    return e;
}

PlaneEmbedding replay(const ConstructionTrace& trace)
{
    PlaneEmbedding e = seed_embedding(trace.seed);
    for (const TraceStep& s : trace.steps)
        e = apply(e, s);
    return e;
}

std::string trace_to_text(const ConstructionTrace& trace)
{
    std::ostringstream out;
    out << "planram-trace v1\nseed " << trace.seed << '\n';
    for (const TraceStep& s : trace.steps) {
        out << kind_word(s.kind);
        for (int v : s.params)
            out << ' ' << v;
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

ConstructionTrace trace_from_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    auto next = [&]() {
        while (std::getline(in, line))
            if (!line.empty() && line[0] != '#')
                return true;
        return false;
    };
    if (!next() || line != "planram-trace v1")
        throw Error(ErrorKind::ParseError, "missing trace header");
    if (!next() || line.rfind("seed ", 0) != 0)
        throw Error(ErrorKind::ParseError, "missing seed line");
    ConstructionTrace t;
    t.seed = line.substr(5);
    bool ended = false;
    while (next()) {
        if (line == "end") {
            ended = true;
            break;
        }
        std::istringstream ls(line);
        std::string word, tok;
        ls >> word;
        TraceStep s;
        if (word == "A")
            s.kind = OperationKind::a;
        else if (word == "B")
            s.kind = OperationKind::b;
        else if (word == "Binv")
            s.kind = OperationKind::b_inverse;
        else if (word == "C")
            s.kind = OperationKind::c;
        else
            throw Error(ErrorKind::ParseError, "unknown operation '" + word + "'");
        while (ls >> tok)
            s.params.push_back(parse_int(tok));
        if (s.params.size() != param_count(s.kind))
            throw Error(ErrorKind::ParseError, "wrong parameter count in '" + line + "'");
        t.steps.push_back(std::move(s));
    }
    if (!ended)
        throw Error(ErrorKind::ParseError, "trace is missing its end line");
    t.final_embedding = replay(t);
    return t;
}

} // namespace planram
