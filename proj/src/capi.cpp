#include "ttone.h"

#include <cstring>
#include <sstream>
#include <string>

#include "ttone/bounds.hpp"
#include "ttone/canonical.hpp"
#include "ttone/catalog.hpp"
#include "ttone/classify.hpp"
#include "ttone/colorers.hpp"
#include "ttone/coloring.hpp"
#include "ttone/errors.hpp"
#include "ttone/graph.hpp"
#include "ttone/graph_io.hpp"
#include "ttone/search.hpp"
#include "ttone/solver.hpp"

struct ttone_graph {
    ttone::Multigraph g;
};
struct ttone_coloring {
    ttone::PartialColoring c;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
ttone_status guard(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const ttone::input_error& e) {
        g_last_error = e.what();
        return TTONE_INPUT_ERROR;
    } catch (const ttone::unsupported_error& e) {
        g_last_error = e.what();
        return TTONE_UNSUPPORTED;
    } catch (const ttone::hypothesis_error& e) {
        g_last_error = e.what();
        return TTONE_INVALID;
    } catch (const ttone::defect_error& e) {
        g_last_error = e.what();
        return TTONE_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TTONE_INTERNAL_ERROR;
    } catch (...) {
        g_last_error = "unknown error";
        return TTONE_INTERNAL_ERROR;
    }
}

} // namespace

extern "C" {

const char* ttone_version(void) {
    return "1.0.0";
}

const char* ttone_last_error(void) {
    return g_last_error.c_str();
}

void ttone_string_free(char* s) {
    delete[] s;
}

ttone_status ttone_graph_from_graph6(const char* text, ttone_graph** out) {
    return guard([&]() {
        if (!text || !out)
            throw ttone::input_error("null argument");
        *out = new ttone_graph{ttone::parse_graph6(text)};
        return TTONE_OK;
    });
}

ttone_status ttone_graph_from_edgelist(const char* text, ttone_graph** out) {
    return guard([&]() {
        if (!text || !out)
            throw ttone::input_error("null argument");
        *out = new ttone_graph{ttone::parse_edgelist(text)};
        return TTONE_OK;
    });
}

ttone_status ttone_graph_catalog(const char* name, ttone_graph** out) {
    return guard([&]() {
        if (!name || !out)
            throw ttone::input_error("null argument");
        *out = new ttone_graph{ttone::catalog(name)};
        return TTONE_OK;
    });
}

void ttone_graph_free(ttone_graph* g) {
    delete g;
}

int ttone_graph_order(const ttone_graph* g) {
    return g ? g->g.vertex_count() : -1;
}

int ttone_graph_size(const ttone_graph* g) {
    return g ? g->g.edge_count() : -1;
}

ttone_status ttone_graph_to_graph6(const ttone_graph* g, char** out) {
    return guard([&]() {
        if (!g || !out)
            throw ttone::input_error("null argument");
        *out = dup_string(ttone::to_graph6(g->g));
        return TTONE_OK;
    });
}

ttone_status ttone_graph_to_edgelist(const ttone_graph* g, char** out) {
    return guard([&]() {
        if (!g || !out)
            throw ttone::input_error("null argument");
        *out = dup_string(ttone::to_edgelist(g->g));
        return TTONE_OK;
    });
}

ttone_status ttone_classify_text(const ttone_graph* g, char** out) {
    return guard([&]() {
        if (!g || !out)
            throw ttone::input_error("null argument");
        *out = dup_string(ttone::classify_to_text(ttone::classify(g->g)));
        return TTONE_OK;
    });
}

ttone_status ttone_bounds_text(const ttone_graph* g, int t, const char* format, char** out) {
    return guard([&]() {
        if (!g || !out)
            throw ttone::input_error("null argument");
        auto report = ttone::upper_bounds(g->g, t, ttone::classify(g->g));
        std::string fmt = format ? format : "table";
        if (fmt == "table")
            *out = dup_string(ttone::bound_report_table(report));
        else if (fmt == "kv")
            *out = dup_string(ttone::bound_report_kv(report));
        else
            throw ttone::input_error("unknown format '" + fmt + "'");
        return TTONE_OK;
    });
}

ttone_status ttone_coloring_parse(const char* text, ttone_coloring** out) {
    return guard([&]() {
        if (!text || !out)
            throw ttone::input_error("null argument");
        *out = new ttone_coloring{ttone::coloring_from_text(text)};
        return TTONE_OK;
    });
}

ttone_status ttone_coloring_to_text(const ttone_coloring* c, char** out) {
    return guard([&]() {
        if (!c || !out)
            throw ttone::input_error("null argument");
        *out = dup_string(ttone::coloring_to_text(c->c));
        return TTONE_OK;
    });
}

void ttone_coloring_free(ttone_coloring* c) {
    delete c;
}

int ttone_coloring_t(const ttone_coloring* c) {
    return c ? c->c.t : -1;
}

int ttone_coloring_k(const ttone_coloring* c) {
    return c ? c->c.k : -1;
}

ttone_status ttone_verify(const ttone_graph* g, const ttone_coloring* c, char** violations,
                          size_t* count) {
    return guard([&]() {
        if (!g || !c || !violations || !count)
            throw ttone::input_error("null argument");
        auto viols = ttone::verify(g->g, c->c);
        std::ostringstream os;
        for (const auto& v : viols)
            os << v.str() << "\n";
        *violations = dup_string(os.str());
        *count = viols.size();
        return TTONE_OK;
    });
}

ttone_status ttone_exact_index(const ttone_graph* g, int t, long long node_limit,
                               long long time_limit_ms, int* index, ttone_coloring** witness,
                               int* bracket_lo, int* bracket_hi) {
    return guard([&]() {
        if (!g || !index)
            throw ttone::input_error("null argument");
        ttone::SolveOptions opts;
        if (node_limit > 0)
            opts.node_limit = node_limit;
        if (time_limit_ms > 0)
            opts.time_limit_ms = time_limit_ms;
        auto res = ttone::exact_index(g->g, t, opts);
        if (bracket_lo)
            *bracket_lo = res.bracket_lo;
        if (bracket_hi)
            *bracket_hi = res.bracket_hi;
        if (res.status != ttone::SolveStatus::Yes) {
            g_last_error = "solver limit reached before a decision";
            return TTONE_LIMIT;
        }
        *index = res.value;
        if (witness)
            *witness = new ttone_coloring{std::move(*res.witness)};
        return TTONE_OK;
    });
}

ttone_status ttone_color(const ttone_graph* g, const char* strategy, ttone_coloring** out,
                         int* k_used, int* fallback_used, char** trace_doc) {
    return guard([&]() {
        if (!g || !out)
            throw ttone::input_error("null argument");
        std::string s = strategy ? strategy : "auto";
        ttone::ColorerOutcome outcome;
        if (s == "auto")
            outcome = ttone::auto_color(g->g);
        else if (s == "tree_exact")
            outcome = ttone::color_tree(g->g);
        else if (s == "subcubic_outerplanar")
            outcome = ttone::color_subcubic_outerplanar(g->g);
        else if (s == "sp_subcubic")
            outcome = ttone::color_sp_subcubic(g->g);
        else if (s == "degen2_subcubic")
            outcome = ttone::color_2degenerate_subcubic(g->g);
        else if (s == "clawfree_subcubic")
            outcome = ttone::color_clawfree_subcubic(g->g);
        else if (s == "outerplanar")
            outcome = ttone::color_outerplanar(g->g);
        else if (s == "planar")
            outcome = ttone::color_planar(g->g);
        else if (s == "t1_6d4")
            outcome = ttone::color_general(g->g);
        else if (s == "exact") {
            auto res = ttone::exact_index(g->g, 2);
            if (res.status != ttone::SolveStatus::Yes) {
                g_last_error = "solver limit reached before a decision";
                return TTONE_LIMIT;
            }
            outcome.coloring = std::move(*res.witness);
            outcome.strategy = "exact";
        } else {
            throw ttone::input_error("unknown strategy '" + s + "'");
        }
        if (k_used)
            *k_used = outcome.coloring.k;
        if (fallback_used)
            *fallback_used = outcome.fallback_used ? 1 : 0;
        if (trace_doc)
            *trace_doc = dup_string(ttone::outcome_to_text(outcome));
        *out = new ttone_coloring{std::move(outcome.coloring)};
        return TTONE_OK;
    });
}

ttone_status ttone_search(int max_n, const char* forbid, int t, int threshold, int jobs,
                          long long node_limit, const char* graph6_stream, char** findings_tsv,
                          char** witness_docs) {
    return guard([&]() {
        if (!findings_tsv)
            throw ttone::input_error("null argument");
        ttone::SearchTask task;
        task.max_n = max_n;
        task.t = t;
        task.report_threshold = threshold;
        task.jobs = jobs;
        if (node_limit > 0)
            task.solve.node_limit = node_limit;
        if (graph6_stream)
            task.graph6_stream = std::string(graph6_stream);
        if (forbid && *forbid) {
            std::istringstream in(forbid);
            std::string tok;
            while (std::getline(in, tok, ',')) {
                if (tok == "k4")
                    task.forbidden.insert(ttone::Pattern::K4);
                else if (tok == "k4me")
                    task.forbidden.insert(ttone::Pattern::K4MinusE);
                else if (tok == "claw")
                    task.forbidden.insert(ttone::Pattern::ClawInduced);
                else
                    throw ttone::input_error("unknown forbidden pattern '" + tok + "'");
            }
        }
        auto findings = ttone::run_search(task);
        *findings_tsv = dup_string(ttone::findings_tsv(findings));
        if (witness_docs) {
            std::ostringstream os;
            for (const auto& f : findings)
                if (f.witness) {
                    os << "graph " << f.graph6 << "\n";
                    os << ttone::coloring_to_text(*f.witness);
                    os << "\n";
                }
            *witness_docs = dup_string(os.str());
        }
        return TTONE_OK;
    });
}

} // extern "C"
