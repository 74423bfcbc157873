#include "vcrit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "vcrit/catalog.hpp"
#include "vcrit/certify.hpp"
#include "vcrit/coloring.hpp"
#include "vcrit/criticality.hpp"
#include "vcrit/detect.hpp"
#include "vcrit/expansion.hpp"
#include "vcrit/graph6.hpp"
#include "vcrit/parallel.hpp"

namespace vcrit::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6 text never contains spaces and is never empty, so "" means unset
std::vector<Graph> load_graphs(const std::string& g6, const std::string& file, std::istream& in) {
    if (!g6.empty()) return {decode_graph6(g6)};
    if (!file.empty()) return read_graph6_file(file);
    return read_graph6(in);
}

void print_vertices(std::ostream& out, const VertexSet& s) {
    for (int v : s) out << ' ' << v;
}

int cmd_freecheck(const std::string& forbid, const std::vector<Graph>& graphs,
                  std::ostream& out) {
    std::vector<ForbiddenFamily> fams;
    std::stringstream ss(forbid);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto fam = parse_family(item);
        if (!fam) throw UsageError("unknown forbidden family: " + item);
        fams.push_back(std::move(*fam));
    }
    if (fams.empty()) throw UsageError("--forbid needs at least one family");

    bool all_free = true;
    for (const Graph& g : graphs)
        for (const auto& fam : fams) {
            if (auto w = freeness_witness(g, fam)) {
                out << fam.name << " witness";
                print_vertices(out, w->vertices);
                out << '\n';
                all_free = false;
            } else {
                out << fam.name << " free\n";
            }
        }
    return all_free ? 0 : 1;
}

int cmd_chi(const std::vector<Graph>& graphs, std::ostream& out) {
    for (const Graph& g : graphs) {
        const ChromaticResult r = chromatic_number(g);
        out << "chi " << r.chi << '\n';
        out << "coloring";
        for (int c : r.coloring.assignment) out << ' ' << c;
        out << '\n';
    }
    return 0;
}

int cmd_critical(int k, bool verbose, const std::vector<Graph>& graphs, std::ostream& out) {
    bool all = true;
    for (const Graph& g : graphs) {
        const CriticalityReport r = is_k_vertex_critical(g, k, verbose);
        out << "chi " << r.chi << '\n';
        out << "critical " << (r.verdict ? "true" : "false") << '\n';
        if (verbose)
            for (std::size_t v = 0; v < r.chi_minus_vertex.size(); ++v)
                out << "deleted " << v << " chi " << r.chi_minus_vertex[v] << '\n';
        all = all && r.verdict;
    }
    return all ? 0 : 1;
}

int cmd_enumerate(int k, bool profiles, std::ostream& out) {
    if (profiles) {
        out << 'K' << k << '\n';
        for (const auto& p : critical_profiles(k)) {
            for (int i = 0; i < 5; ++i) out << (i ? "," : "") << p[i];
            out << '\n';
        }
    } else {
        for (const Graph& g : enumerate_k_critical(k)) out << encode_graph6(g) << '\n';
    }
    return 0;
}

int cmd_table(int max_k, std::ostream& out) {
    const auto counts = count_table(max_k);
    for (int k = 1; k <= max_k; ++k) out << k << ' ' << counts[k - 1] << '\n';
    return 0;
}

int cmd_certify(int k, const std::vector<Graph>& graphs, std::ostream& out) {
    bool all_yes = true;
    for (const Graph& g : graphs) {
        const Certificate cert = certify(g, k);
        out << certificate_to_json(cert) << '\n';
        all_yes = all_yes && cert.verdict == Certificate::Verdict::yes;
    }
    return all_yes ? 0 : 1;
}

int cmd_verify(int k, const std::string& cert_path, const std::vector<Graph>& graphs,
               std::ostream& out) {
    if (graphs.size() != 1) throw UsageError("verify needs exactly one input graph");
    std::ifstream f(cert_path);
    if (!f) throw UsageError("cannot open certificate file " + cert_path);
    std::stringstream buf;
    buf << f.rdbuf();
    const Certificate cert = certificate_from_json(buf.str());
    const bool ok = verify_certificate(graphs[0], k, cert);
    out << (ok ? "accept" : "reject") << '\n';
    return ok ? 0 : 1;
}

int cmd_catalog(int id, bool verbose, std::ostream& out) {
    const CatalogEntry& e = base_graph(id);
    out << encode_graph6(e.graph) << '\n';
    if (verbose && !e.marked.empty()) {
        out << "marked";
        print_vertices(out, e.marked);
        out << '\n';
    }
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-vertex-critical (gem, co-gem)-free graphs: recognition, "
                 "enumeration and certified coloring"};
    app.name("vcrit");
    int threads = 0;
    bool verbose = false;
    app.add_option("--threads", threads, "worker threads (default: all hardware threads)");
    app.add_flag("--verbose", verbose, "extra human-oriented output");
    app.require_subcommand(1);

    std::string g6, file, forbid, cert_path;
    int k = 0, max_k = 0, id = 0;
    bool profiles = false;

    auto add_graph_inputs = [&](CLI::App* cmd) {
        cmd->add_option("g6", g6, "graph6 string (omit to read --file or stdin)");
        cmd->add_option("--file", file, "newline-delimited graph6 file");
    };

    CLI::App* freecheck = app.add_subcommand("freecheck", "report induced forbidden subgraphs");
    freecheck->add_option("--forbid", forbid, "families, e.g. gem,co-gem,p4,c5,p3+2p1")
        ->required();
    add_graph_inputs(freecheck);

    CLI::App* chi = app.add_subcommand("chi", "exact chromatic number and a coloring");
    add_graph_inputs(chi);

    CLI::App* critical = app.add_subcommand("critical", "k-vertex-criticality report");
    critical->add_option("--k", k, "criticality order")->required();
    add_graph_inputs(critical);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "all k-vertex-critical graphs in the class");
    enumerate->add_option("--k", k, "criticality order")->required();
    enumerate->add_flag("--profiles", profiles, "print bag-size profiles instead of graph6");

    CLI::App* table = app.add_subcommand("table", "counts of k-vertex-critical graphs");
    table->add_option("--max-k", max_k, "largest k")->required();

    CLI::App* certify_cmd =
        app.add_subcommand("certify", "certified k-colorability for in-class graphs");
    certify_cmd->add_option("--k", k, "color budget")->required();
    add_graph_inputs(certify_cmd);

    CLI::App* verify = app.add_subcommand("verify", "re-check a certificate");
    verify->add_option("--k", k, "color budget the certificate claims")->required();
    verify->add_option("--cert", cert_path, "certificate JSON file")->required();
    add_graph_inputs(verify);

    CLI::App* catalog = app.add_subcommand("catalog", "base graphs of the characterization");
    catalog->add_option("--id", id, "base graph id (1..10)")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    set_parallelism(threads);

    try {
        if (app.got_subcommand(freecheck)) return cmd_freecheck(forbid, load_graphs(g6, file, in), out);
        if (app.got_subcommand(chi)) return cmd_chi(load_graphs(g6, file, in), out);
        if (app.got_subcommand(critical))
            return cmd_critical(k, verbose, load_graphs(g6, file, in), out);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(k, profiles, out);
        if (app.got_subcommand(table)) return cmd_table(max_k, out);
        if (app.got_subcommand(certify_cmd)) return cmd_certify(k, load_graphs(g6, file, in), out);
        if (app.got_subcommand(verify)) return cmd_verify(k, cert_path, load_graphs(g6, file, in), out);
        if (app.got_subcommand(catalog)) return cmd_catalog(id, verbose, out);
    } catch (const graph6_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace vcrit::cli
