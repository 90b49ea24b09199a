#include "planram/cli.hpp"

#include "planram/construct.hpp"
#include "planram/enumerate.hpp"
#include "planram/error.hpp"
#include "planram/graph6.hpp"
#include "planram/planar_code.hpp"
#include "planram/ramsey.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace planram {

namespace {

struct Common {
    int workers = 0;
    std::uint64_t budget_nodes = 0;
    bool long_running = false;
    std::string format;
    std::string out_path;
    bool omit_runtime = false;

    VerifyOptions verify() const { return {workers, budget_nodes, long_running}; }
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format, const std::vector<std::string>& formats)
{
    c.format = default_format;
    cmd->add_option("--workers", c.workers, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
    cmd->add_option("--budget-nodes", c.budget_nodes, "search node budget (default: PLANRAM_BUDGET_NODES or 2e8)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--long-running", c.long_running, "allow searches beyond the desk-scale limits");
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
    cmd->add_option("--out", c.out_path, "write the output here instead of standard output");
}

std::string slurp(std::istream& in)
{
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool looks_like_planar_code(std::string_view bytes)
{
    if (bytes.rfind(kPlanarCodeHeader, 0) == 0)
        return true;
    // graph6 text starts with a printable byte >= 63; a planar_code body starts with its order.
    return !bytes.empty() && static_cast<unsigned char>(bytes[0]) < 63 && bytes[0] != '\n' && bytes[0] != '\r';
}

// Embeddings from standard input; graph6 input is embedded on the fly.
std::vector<PlaneEmbedding> read_embeddings(std::istream& in)
{
    const std::string bytes = slurp(in);
    if (looks_like_planar_code(bytes))
        return read_planar_code(bytes);
    std::istringstream text(bytes);
    std::vector<PlaneEmbedding> out;
    for (const Graph& g : read_graph6_lines(text))
        out.push_back(embed(g));
    return out;
}

std::vector<Graph> read_graphs(std::istream& in)
{
    const std::string bytes = slurp(in);
    std::vector<Graph> out;
    if (looks_like_planar_code(bytes)) {
        for (const PlaneEmbedding& e : read_planar_code(bytes))
            out.push_back(e.graph());
        return out;
    }
    std::istringstream text(bytes);
    return read_graph6_lines(text);
}

std::string rotation_lines(const PlaneEmbedding& e)
{
    return to_rotation_text(e);
}

nlohmann::json graph_json(const PlaneEmbedding& e)
{
    nlohmann::json j;
    j["graph6"] = to_graph6(e.graph());
    j["order"] = e.order();
    j["edges"] = e.graph().edge_count();
    j["min_degree"] = e.graph().min_degree();
    j["rotation"] = rotation_lines(e);
    return j;
}

std::string write_embeddings(const std::vector<PlaneEmbedding>& es, const std::string& format)
{
    std::ostringstream s;
    if (format == "planar_code") {
        write_planar_code(s, es);
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const PlaneEmbedding& e : es)
            arr.push_back(graph_json(e));
        s << arr.dump(2) << '\n';
    } else {
        for (const PlaneEmbedding& e : es)
            s << to_graph6(e.graph()) << '\n';
    }
    return s.str();
}

class Runner {
public:
    Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    int run(const std::vector<std::string>& args);

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;

    void emit(const Common& c, const std::string& text)
    {
        if (c.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(c.out_path, std::ios::binary);
        if (!f)
            throw Error(ErrorKind::OutOfRange, "cannot write " + c.out_path);
        f << text;
    }

    int finish(const Common& c, const Certificate& cert)
    {
        emit(c, to_json(cert, !c.omit_runtime));
        int code = exit_code(std::span<const Certificate>(&cert, 1));
        const auto problems = revalidate(cert);
        for (const std::string& p : problems)
            err_ << "revalidation: " << p << '\n';
        if (!problems.empty())
            code = kExitRefuted;
        return code;
    }
};

int Runner::run(const std::vector<std::string>& args)
{
    CLI::App app{"Planar Ramsey numbers and C4-free planar graphs", "planram"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("planram ") + toolkit_version());

    // enumerate
    Common en;
    int en_n = 0, en_min_degree = 0;
    bool en_maximal = false, en_connected = false, en_triangulations = false;
    std::string en_split, en_checkpoint;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list C4-free planar graphs or triangulations, one per isomorphism class");
    enumerate_cmd->add_option("--n", en_n, "order")->required()->check(CLI::Range(1, kMaxOrder));
    enumerate_cmd->add_option("--min-degree", en_min_degree, "minimum degree")->check(CLI::Range(0, 5));
    enumerate_cmd->add_flag("--maximal-only", en_maximal, "only maximal C4-free planar graphs");
    enumerate_cmd->add_flag("--connected", en_connected, "only connected graphs");
    enumerate_cmd->add_flag("--triangulations", en_triangulations, "enumerate plane triangulations instead");
    enumerate_cmd->add_option("--split", en_split, "i/k: this run handles frontier items with index = i mod k");
    enumerate_cmd->add_option("--checkpoint", en_checkpoint, "resumable progress file");
    add_common(enumerate_cmd, en, "graph6", {"graph6", "planar_code", "json"});

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a claim and print its certificate");
    verify_cmd->require_subcommand(1);
    Common vc;
    int v_wheel = 0, v_host = 0, v_n = 0;
    std::string v_id;
    auto* pr_upper = verify_cmd->add_subcommand("pr-upper", "every maximal host graph has the wheel in its complement");
    pr_upper->add_option("--wheel", v_wheel, "rim length")->required()->check(CLI::Range(3, kMaxOrder));
    pr_upper->add_option("--host", v_host, "host order")->required()->check(CLI::Range(1, kMaxOrder));
    auto* pr_lower = verify_cmd->add_subcommand("pr-lower", "a witness one below the table value");
    pr_lower->add_option("--wheel", v_wheel, "rim length")->required()->check(CLI::Range(3, kMaxOrder));
    auto* delta = verify_cmd->add_subcommand("delta", "maximum minimum degree of C4-free planar graphs on n vertices");
    delta->add_option("--n", v_n, "order")->required()->check(CLI::Range(5, kMaxOrder));
    auto* fact = verify_cmd->add_subcommand("fact", "triangulation census facts and their property checks");
    fact->add_option("--id", v_id, "fact id")->required()->check(CLI::IsMember(fact_ids()));
    auto* lemmas = verify_cmd->add_subcommand("lemmas", "lemma property suite over all small C4-free planar graphs");
    v_n = 11;
    lemmas->add_option("--n", v_n, "largest order (default 11)")->check(CLI::Range(1, 11));
    for (CLI::App* sub : {pr_upper, pr_lower, delta, fact, lemmas}) {
        add_common(sub, vc, "json", {"json"});
        sub->add_flag("--omit-runtime", vc.omit_runtime, "leave runtime_ms out of the certificate");
    }

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "seed graphs, growth operations and witnesses");
    construct_cmd->require_subcommand(1);
    Common cc;
    std::string c_name, c_trace_in, c_trace_out;
    std::vector<std::string> c_ops;
    int c_n = 0, c_wheel = 0;
    auto* seed = construct_cmd->add_subcommand("seed", "load a seed drawing and check its claimed properties");
    seed->add_option("--name", c_name, "seed name")->required()->check(CLI::IsMember(seed_names()));
    auto* grow = construct_cmd->add_subcommand("grow", "apply operations to a seed or an existing trace");
    auto* grow_seed = grow->add_option("--seed", c_name, "seed name or cycle:<n>");
    auto* grow_trace = grow->add_option("--trace", c_trace_in, "start from this trace file");
    grow_seed->excludes(grow_trace);
    grow->add_option("--op", c_ops, "operation, e.g. \"A 3 0 5\", \"B 7 -1\", \"Binv 3 30\", \"C 1 2 0\"");
    auto* witness = construct_cmd->add_subcommand("witness", "minimum-degree or Ramsey lower-bound witness");
    auto* w_n = witness->add_option("--n", c_n, "order of a minimum-degree witness")->check(CLI::Range(5, kMaxOrder));
    auto* w_wheel = witness->add_option("--wheel", c_wheel, "rim length of a Ramsey lower-bound witness")->check(CLI::Range(3, kMaxOrder));
    w_n->excludes(w_wheel);
    for (CLI::App* sub : {seed, grow, witness}) {
        add_common(sub, cc, "planar_code", {"graph6", "planar_code", "json"});
        sub->add_option("--trace-out", c_trace_out, "write the construction trace here");
    }

    // dual, identity, stats read graphs from standard input.
    Common dc, ic, sc;
    auto* dual = app.add_subcommand("dual", "vertex-edge dual of each input embedding");
    add_common(dual, dc, "graph6", {"graph6", "json"});
    auto* identity = app.add_subcommand("identity", "face identity residual of each input embedding");
    add_common(identity, ic, "text", {"text", "json"});
    auto* stats = app.add_subcommand("stats", "degree sequence, tau and face census of each input graph");
    add_common(stats, sc, "text", {"text", "json"});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // Help and version requests carry a zero exit code.
        const int code = app.exit(e, out_, err_);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enumerate_cmd->parsed()) {
            EnumerationTask task;
            task.n = en_n;
            task.mode = en_triangulations ? EnumerationMode::triangulation : EnumerationMode::c4free_planar;
            task.min_degree = en_min_degree;
            task.maximal_only = en_maximal;
            task.connected_only = en_connected;
            task.workers = en.workers;
            task.budget_nodes = en.budget_nodes;
            task.allow_large = en.long_running;
            if (!en_split.empty()) {
                int i = 0, k = 0;
                char slash = 0;
                std::istringstream s(en_split);
                if (!(s >> i >> slash >> k) || slash != '/' || !s.eof())
                    throw Error(ErrorKind::OutOfRange, "--split expects i/k");
                task.split = {i, k};
            }
            validate(task);
            EnumerationResult r = en_checkpoint.empty() ? enumerate(task) : enumerate_resumable(task, en_checkpoint);
            if (en.format == "json") {
                nlohmann::json j;
                j["n"] = en_n;
                j["mode"] = en_triangulations ? "triangulation" : "c4free_planar";
                j["count"] = r.count;
                j["exhaustive"] = r.exhaustive;
                j["nodes"] = r.nodes;
                j["graphs"] = nlohmann::json::array();
                for (const Graph& g : r.graphs)
                    j["graphs"].push_back(to_graph6(g));
                emit(en, j.dump(2) + "\n");
            } else if (en.format == "planar_code") {
                std::vector<PlaneEmbedding> es = r.embeddings;
                if (es.empty())
                    for (const Graph& g : r.graphs)
                        es.push_back(embed(g));
                emit(en, write_embeddings(es, "planar_code"));
            } else {
                std::string text;
                for (const Graph& g : r.graphs)
                    text += to_graph6(g) + "\n";
                emit(en, text);
            }
            return r.exhaustive ? kExitOk : kExitInfeasible;
        }

        if (verify_cmd->parsed()) {
            const VerifyOptions opt = vc.verify();
            if (pr_upper->parsed())
                return finish(vc, verify_pr_upper(v_wheel, v_host, opt));
            if (pr_lower->parsed())
                return finish(vc, verify_pr_lower(v_wheel, opt));
            if (delta->parsed())
                return finish(vc, verify_delta(v_n, opt));
            if (fact->parsed())
                return finish(vc, check_fact(v_id, opt));
            return finish(vc, lemma_property_suite(v_n, opt));
        }

        if (construct_cmd->parsed()) {
            std::optional<ConstructionTrace> trace;
            PlaneEmbedding result;
            if (seed->parsed()) {
                SeedGraphRecord r = load_seed(c_name);
                result = r.embedding;
                trace = ConstructionTrace{c_name, {}, result};
            } else if (grow->parsed()) {
                ConstructionTrace t;
                if (!c_trace_in.empty()) {
                    std::ifstream f(c_trace_in);
                    if (!f)
                        throw Error(ErrorKind::ParseError, "cannot read " + c_trace_in);
                    t = trace_from_text(slurp(f));
                } else if (!c_name.empty()) {
                    t.seed = c_name;
                } else {
                    throw Error(ErrorKind::OutOfRange, "grow needs --seed or --trace");
                }
                std::string extra;
                for (const std::string& op : c_ops)
                    extra += op + "\n";
                std::string text = trace_to_text(t);
                text.insert(text.size() - 4, extra);
                t = trace_from_text(text);
                result = t.final_embedding;
                trace = std::move(t);
            } else if (c_n > 0) {
                trace = build_delta_witness(c_n);
                result = trace->final_embedding;
            } else if (c_wheel > 0) {
                result = embed(build_ramsey_lower_witness(c_wheel));
            } else {
                throw Error(ErrorKind::OutOfRange, "witness needs --n or --wheel");
            }
            if (!c_trace_out.empty()) {
                if (!trace)
                    throw Error(ErrorKind::OutOfRange, "Ramsey witnesses have no construction trace");
                std::ofstream f(c_trace_out);
                f << trace_to_text(*trace);
            }
            if (cc.format == "json") {
                nlohmann::json j = graph_json(result);
                if (trace)
                    j["trace"] = trace_to_text(*trace);
                emit(cc, j.dump(2) + "\n");
            } else {
                emit(cc, write_embeddings({result}, cc.format));
            }
            return kExitOk;
        }

        if (dual->parsed()) {
            std::vector<PlaneEmbedding> es = read_embeddings(in_);
            nlohmann::json arr = nlohmann::json::array();
            std::string text;
            for (const PlaneEmbedding& e : es) {
                const Graph d = vertex_edge_dual(e);
                text += to_graph6(d) + "\n";
                arr.push_back({{"graph6", to_graph6(d)}, {"order", d.order()}, {"edges", d.edge_count()}});
            }
            emit(dc, dc.format == "json" ? arr.dump(2) + "\n" : text);
            return kExitOk;
        }

        if (identity->parsed()) {
            std::vector<PlaneEmbedding> es = read_embeddings(in_);
            nlohmann::json arr = nlohmann::json::array();
            std::string text;
            for (const PlaneEmbedding& e : es) {
                const EdgeIdentity id = edge_identity(e);
                text += "residual " + std::to_string(id.residual) + " within_bound " + (id.within_bound ? "1" : "0") + "\n";
                arr.push_back({{"residual", id.residual}, {"within_bound", id.within_bound}});
            }
            emit(ic, ic.format == "json" ? arr.dump(2) + "\n" : text);
            return kExitOk;
        }

        // stats
        std::vector<Graph> graphs = read_graphs(in_);
        nlohmann::json arr = nlohmann::json::array();
        std::string text;
        for (const Graph& g : graphs) {
            nlohmann::json j;
            j["order"] = g.order();
            j["edges"] = g.edge_count();
            j["degrees"] = g.degree_sequence().to_string();
            const GammaReport gr = gamma(g);
            j["tau"] = gr.tau;
            j["triangles"] = triangle_count(g);
            std::string faces = "-";
            if (g.is_connected() && is_planar(g)) {
                nlohmann::json census = nlohmann::json::object();
                faces.clear();
                for (const auto& [len, cnt] : embed(g).face_census()) {
                    census[std::to_string(len)] = cnt;
                    faces += (faces.empty() ? "" : " ") + std::to_string(len) + "^" + std::to_string(cnt);
                }
                j["faces"] = census;
            }
            arr.push_back(j);
            text += "n " + std::to_string(g.order()) + " e " + std::to_string(g.edge_count()) + " degrees " +
                    g.degree_sequence().to_string() + " tau " + std::to_string(gr.tau) + " triangles " +
                    std::to_string(triangle_count(g)) + " faces " + faces + "\n";
        }
        emit(sc, sc.format == "json" ? arr.dump(2) + "\n" : text);
        return kExitOk;
    } catch (const Error& e) {
        err_ << "planram: " << e.what() << '\n';
        switch (e.kind()) {
        case ErrorKind::InfeasibleScale:
            return kExitInfeasible;
        case ErrorKind::OutOfRange:
        case ErrorKind::UnknownSeed:
        case ErrorKind::UnsupportedOrder:
        case ErrorKind::BadFace:
        case ErrorKind::BadDistance:
        case ErrorKind::BadVertex:
        case ErrorKind::BadEdge:
            return kExitUsage;
        default:
            return kExitBadInput;
        }
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    return Runner(in, out, err).run(args);
}

} // namespace planram
