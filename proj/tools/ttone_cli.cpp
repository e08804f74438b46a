// Command-line front end. Talks to the library exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ttone.h"

namespace {

// Exit codes: 0 ok/valid, 1 invalid coloring or hypothesis violated,
// 2 input error, 3 resource limit.
int exit_code_for(ttone_status st) {
    switch (st) {
    case TTONE_OK:
        return 0;
    case TTONE_INVALID:
        return 1;
    case TTONE_INPUT_ERROR:
    case TTONE_UNSUPPORTED:
        return 2;
    case TTONE_LIMIT:
        return 3;
    case TTONE_INTERNAL_ERROR:
    default:
        return 1;
    }
}

int fail(ttone_status st) {
    std::cerr << "error: " << ttone_last_error() << "\n";
    return exit_code_for(st);
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GraphInput {
    std::string graph6;
    std::string edgelist_path;
    std::string name;

    void add_flags(CLI::App* cmd) {
        auto* a = cmd->add_option("--graph6", graph6, "graph6 string");
        auto* b = cmd->add_option("--edgelist", edgelist_path, "edge list file ('-' for stdin)");
        auto* c = cmd->add_option("--name", name, "catalog graph name");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }

    ttone_status load(ttone_graph** out) const {
        int given = !graph6.empty() + !edgelist_path.empty() + !name.empty();
        if (given != 1) {
            std::cerr << "error: exactly one of --graph6, --edgelist, --name is required\n";
            exit(2);
        }
        if (!graph6.empty())
            return ttone_graph_from_graph6(graph6.c_str(), out);
        if (!name.empty())
            return ttone_graph_catalog(name.c_str(), out);
        std::string text = read_file(edgelist_path);
        return ttone_graph_from_edgelist(text.c_str(), out);
    }
};

long long env_node_limit() {
    const char* v = std::getenv("TTONE_NODE_LIMIT");
    if (!v || !*v)
        return 0;
    return std::atoll(v);
}

void print_string(char* s, std::ostream& os) {
    if (s) {
        os << s;
        ttone_string_free(s);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"t-tone edge coloring toolkit"};
    app.require_subcommand(1);

    GraphInput gin;

    auto* cmd_exact = app.add_subcommand("exact", "exact t-tone chromatic index");
    GraphInput gin_exact;
    gin_exact.add_flags(cmd_exact);
    int exact_t = 2;
    long long exact_nodes = 0, exact_ms = 0;
    bool exact_no_witness = false;
    cmd_exact->add_option("--t", exact_t, "tone")->capture_default_str();
    cmd_exact->add_option("--node-limit", exact_nodes, "search node limit");
    cmd_exact->add_option("--time-limit-ms", exact_ms, "time limit in milliseconds");
    cmd_exact->add_flag("--no-witness", exact_no_witness, "print only the index");

    auto* cmd_verify = app.add_subcommand("verify", "check a coloring document");
    GraphInput gin_verify;
    gin_verify.add_flags(cmd_verify);
    std::string verify_coloring;
    int verify_t = 0;
    cmd_verify->add_option("--coloring", verify_coloring, "coloring document file ('-' for stdin)")
        ->required();
    cmd_verify->add_option("--t", verify_t, "expected tone (consistency check)");

    auto* cmd_color = app.add_subcommand("color", "run a constructive colorer");
    GraphInput gin_color;
    gin_color.add_flags(cmd_color);
    std::string color_strategy = "auto";
    bool color_trace = false;
    cmd_color->add_option("--strategy", color_strategy,
                          "auto|tree_exact|subcubic_outerplanar|sp_subcubic|degen2_subcubic|"
                          "clawfree_subcubic|outerplanar|planar|t1_6d4|exact")
        ->capture_default_str();
    cmd_color->add_flag("--trace", color_trace, "emit the audit trace");

    auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bound report");
    GraphInput gin_bounds;
    gin_bounds.add_flags(cmd_bounds);
    int bounds_t = 2;
    std::string bounds_format = "table";
    cmd_bounds->add_option("--t", bounds_t, "tone")->capture_default_str();
    cmd_bounds->add_option("--format", bounds_format, "table|kv")->capture_default_str();

    auto* cmd_classify = app.add_subcommand("classify", "structural class report");
    GraphInput gin_classify;
    gin_classify.add_flags(cmd_classify);

    auto* cmd_gen = app.add_subcommand("gen", "print a catalog graph");
    std::string gen_name;
    std::string gen_format = "graph6";
    cmd_gen->add_option("--name", gen_name, "catalog graph name")->required();
    cmd_gen->add_option("--format", gen_format, "graph6|edgelist")->capture_default_str();

    auto* cmd_search = app.add_subcommand("search", "extremal scan over cubic graphs");
    std::string search_family = "cubic";
    int search_max_n = 8, search_t = 2, search_threshold = 8, search_jobs = 1;
    std::string search_forbid;
    std::string search_g6_file;
    std::string search_witness_file;
    cmd_search->add_option("--family", search_family, "graph family (cubic)")->capture_default_str();
    cmd_search->add_option("--max-n", search_max_n, "largest order (even, <= 14)")->capture_default_str();
    cmd_search->add_option("--t", search_t, "tone")->capture_default_str();
    cmd_search->add_option("--threshold", search_threshold, "report indices >= threshold")
        ->capture_default_str();
    cmd_search->add_option("--forbid", search_forbid, "comma-separated: k4,k4me,claw");
    cmd_search->add_option("--jobs", search_jobs, "worker threads")->capture_default_str();
    cmd_search->add_option("--g6-file", search_g6_file,
                           "newline-delimited graph6 stream instead of enumeration ('-' for stdin)");
    cmd_search->add_option("--witnesses", search_witness_file, "write witness colorings to this file");

    CLI11_PARSE(app, argc, argv);

    if (cmd_exact->parsed()) {
        ttone_graph* g = nullptr;
        ttone_status st = gin_exact.load(&g);
        if (st != TTONE_OK)
            return fail(st);
        if (exact_nodes == 0)
            exact_nodes = env_node_limit();
        int index = -1, lo = 0, hi = -1;
        ttone_coloring* witness = nullptr;
        st = ttone_exact_index(g, exact_t, exact_nodes, exact_ms, &index, &witness, &lo, &hi);
        if (st == TTONE_LIMIT) {
            std::cerr << "error: " << ttone_last_error() << " (bracket " << lo << ".."
                      << (hi < 0 ? std::string("?") : std::to_string(hi)) << ")\n";
            ttone_graph_free(g);
            return 3;
        }
        if (st != TTONE_OK) {
            ttone_graph_free(g);
            return fail(st);
        }
        std::cout << index << "\n";
        if (!exact_no_witness && witness) {
            char* doc = nullptr;
            if (ttone_coloring_to_text(witness, &doc) == TTONE_OK)
                print_string(doc, std::cout);
        }
        ttone_coloring_free(witness);
        ttone_graph_free(g);
        return 0;
    }

    if (cmd_verify->parsed()) {
        ttone_graph* g = nullptr;
        ttone_status st = gin_verify.load(&g);
        if (st != TTONE_OK)
            return fail(st);
        std::string doc = read_file(verify_coloring);
        ttone_coloring* c = nullptr;
        st = ttone_coloring_parse(doc.c_str(), &c);
        if (st != TTONE_OK) {
            ttone_graph_free(g);
            return fail(st);
        }
        if (verify_t > 0 && ttone_coloring_t(c) != verify_t) {
            std::cerr << "error: coloring document has t=" << ttone_coloring_t(c) << ", expected "
                      << verify_t << "\n";
            ttone_coloring_free(c);
            ttone_graph_free(g);
            return 2;
        }
        char* viols = nullptr;
        size_t count = 0;
        st = ttone_verify(g, c, &viols, &count);
        ttone_coloring_free(c);
        ttone_graph_free(g);
        if (st != TTONE_OK)
            return fail(st);
        print_string(viols, std::cout);
        if (count == 0) {
            std::cerr << "valid\n";
            return 0;
        }
        std::cerr << count << " violation(s)\n";
        return 1;
    }

    if (cmd_color->parsed()) {
        ttone_graph* g = nullptr;
        ttone_status st = gin_color.load(&g);
        if (st != TTONE_OK)
            return fail(st);
        ttone_coloring* c = nullptr;
        int k_used = 0, fallback = 0;
        char* trace = nullptr;
        st = ttone_color(g, color_strategy.c_str(), &c, &k_used, &fallback,
                         color_trace ? &trace : nullptr);
        if (st != TTONE_OK) {
            ttone_graph_free(g);
            return fail(st);
        }
        if (color_trace) {
            print_string(trace, std::cout);
        } else {
            char* doc = nullptr;
            if (ttone_coloring_to_text(c, &doc) == TTONE_OK)
                print_string(doc, std::cout);
        }
        std::cerr << "k " << k_used << (fallback ? " (fallback used)" : "") << "\n";
        ttone_coloring_free(c);
        ttone_graph_free(g);
        return 0;
    }

    if (cmd_bounds->parsed()) {
        ttone_graph* g = nullptr;
        ttone_status st = gin_bounds.load(&g);
        if (st != TTONE_OK)
            return fail(st);
        char* text = nullptr;
        st = ttone_bounds_text(g, bounds_t, bounds_format.c_str(), &text);
        ttone_graph_free(g);
        if (st != TTONE_OK)
            return fail(st);
        print_string(text, std::cout);
        return 0;
    }

    if (cmd_classify->parsed()) {
        ttone_graph* g = nullptr;
        ttone_status st = gin_classify.load(&g);
        if (st != TTONE_OK)
            return fail(st);
        char* text = nullptr;
        st = ttone_classify_text(g, &text);
        ttone_graph_free(g);
        if (st != TTONE_OK)
            return fail(st);
        print_string(text, std::cout);
        return 0;
    }

    if (cmd_gen->parsed()) {
        ttone_graph* g = nullptr;
        ttone_status st = ttone_graph_catalog(gen_name.c_str(), &g);
        if (st != TTONE_OK)
            return fail(st);
        char* text = nullptr;
        st = (gen_format == "edgelist") ? ttone_graph_to_edgelist(g, &text)
                                        : ttone_graph_to_graph6(g, &text);
        ttone_graph_free(g);
        if (st != TTONE_OK)
            return fail(st);
        print_string(text, std::cout);
        if (gen_format != "edgelist")
            std::cout << "\n";
        return 0;
    }

    if (cmd_search->parsed()) {
        if (search_family != "cubic") {
            std::cerr << "error: only the cubic family is supported\n";
            return 2;
        }
        std::string stream;
        bool have_stream = !search_g6_file.empty();
        if (have_stream)
            stream = read_file(search_g6_file);
        char* tsv = nullptr;
        char* witnesses = nullptr;
        ttone_status st = ttone_search(search_max_n, search_forbid.c_str(), search_t,
                                       search_threshold, search_jobs, env_node_limit(),
                                       have_stream ? stream.c_str() : nullptr, &tsv,
                                       search_witness_file.empty() ? nullptr : &witnesses);
        if (st != TTONE_OK)
            return fail(st);
        print_string(tsv, std::cout);
        if (!search_witness_file.empty() && witnesses) {
            std::ofstream out(search_witness_file, std::ios::binary);
            out << witnesses;
            ttone_string_free(witnesses);
        }
        return 0;
    }

    return 2;
}
