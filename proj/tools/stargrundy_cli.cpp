// stargrundy: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or input error,
// 3 resource limit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stargrundy/stargrundy.hpp"

namespace sg = stargrundy;
using nlohmann::ordered_json;

namespace {

enum class Format { text, csv, json };

struct RunConfig {
    std::uint64_t node_budget = sg::kDefaultNodeBudget;
    std::uint64_t step_budget = sg::kDefaultStepBudget;
    Format format = Format::text;
    std::string out_path;
};

constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kResourceLimit = 3;

ordered_json envelope(const char* command) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

template <typename T>
std::string joined(const std::vector<T>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

// ---------------------------------------------------------------------------

std::string render_eval(const std::string& text, const RunConfig& cfg) {
    sg::GrundyTable table(cfg.node_budget);
    const sg::EvalReport r = sg::evaluate(sg::parse_position(text), table);
    const std::string pos = sg::format_position(r.position);
    const std::string cls = r.is_p() ? "P" : "N";
    std::ostringstream os;
    switch (cfg.format) {
        case Format::json: {
            auto j = envelope("eval");
            j["position"] = pos;
            j["value"] = r.value;
            j["class"] = cls;
            j["route"] = sg::route_name(r.route);
            if (r.winning_move) {
                j["winning_move"] = {{"strip", r.winning_move->strip_index},
                                     {"from", r.winning_move->from_square},
                                     {"to", r.winning_move->to_square}};
                j["after"] = sg::format_position(*r.after_move);
            } else {
                j["winning_move"] = nullptr;
            }
            os << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "position,value,class,route,winning_move,after\n";
            os << '"' << pos << "\"," << r.value << ',' << cls << ',' << sg::route_name(r.route) << ',';
            if (r.winning_move) os << '"' << sg::format_move(*r.winning_move) << "\",\"" << sg::format_position(*r.after_move) << '"';
            else os << ',';
            os << '\n';
            break;
        case Format::text:
            os << "position: " << pos << '\n'
               << "value: " << r.value << '\n'
               << "class: " << cls << "-position\n"
               << "route: " << sg::route_name(r.route) << '\n';
            if (r.winning_move) {
                os << "winning move: " << sg::format_move(*r.winning_move) << '\n'
                   << "after move: " << sg::format_position(*r.after_move) << " (value 0, re-checked)\n";
            }
            break;
    }
    return os.str();
}

std::string render_table(std::uint64_t a_max, std::uint64_t b_max, const RunConfig& cfg) {
    sg::TwoStarNimTable table(cfg.node_budget);
    table.reserve(a_max, b_max);
    std::ostringstream os;
    switch (cfg.format) {
        case Format::json: {
            auto j = envelope("table");
            j["a_max"] = a_max;
            j["b_max"] = b_max;
            j["rows"] = ordered_json::array();
            for (std::uint64_t a = 0; a <= a_max; ++a) {
                ordered_json row;
                const std::uint64_t first = a == 0 ? 1 : a;
                row["a"] = a;
                row["b_from"] = first;
                row["values"] = ordered_json::array();
                for (std::uint64_t b = first; b <= b_max; ++b) row["values"].push_back(table.value(a, b));
                j["rows"].push_back(std::move(row));
            }
            os << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "a\\b";
            for (std::uint64_t b = 1; b <= b_max; ++b) os << ',' << b;
            os << '\n';
            for (std::uint64_t a = 0; a <= a_max; ++a) {
                os << a;
                for (std::uint64_t b = 1; b <= b_max; ++b) {
                    os << ',';
                    if (b >= a) os << table.value(a, b);
                }
                os << '\n';
            }
            break;
        case Format::text: {
            const std::size_t w = std::to_string(a_max + b_max).size() + 1;
            auto cell = [&](const std::string& s) { os << std::string(w > s.size() ? w - s.size() : 0, ' ') << s; };
            cell("a\\b");
            for (std::uint64_t b = 1; b <= b_max; ++b) cell(std::to_string(b));
            os << '\n';
            for (std::uint64_t a = 0; a <= a_max; ++a) {
                cell(std::to_string(a));
                for (std::uint64_t b = 1; b <= b_max; ++b) cell(b >= a ? std::to_string(table.value(a, b)) : "");
                os << '\n';
            }
            break;
        }
    }
    return os.str();
}

std::string render_gseq(unsigned g, std::size_t n_max, int algorithm, const RunConfig& cfg) {
    std::vector<sg::GSeqEntry> seq;
    switch (algorithm) {
        case 1: seq = sg::gseq_alg1(g, n_max, cfg.step_budget); break;
        case 2: seq = sg::gseq_alg2(g, n_max); break;
        default: seq = sg::gseq_alg3(g, n_max); break;
    }
    std::ostringstream os;
    if (cfg.format == Format::json) {
        auto j = envelope("gseq");
        j["g"] = g;
        j["algorithm"] = algorithm;
        j["entries"] = ordered_json::array();
        for (const auto& e : seq) j["entries"].push_back({{"n", e.n}, {"x", e.x}, {"y", e.y}, {"diff", e.diff()}});
        os << j.dump(2) << '\n';
        return os.str();
    }
    const char* sep = cfg.format == Format::csv ? "," : " ";
    if (cfg.format == Format::csv) os << "n,x,y,diff\n";
    for (const auto& e : seq) os << e.n << sep << e.x << sep << e.y << sep << e.diff() << '\n';
    return os.str();
}

// Shared layout of the three period records.
struct PeriodRecord {
    const char* command;
    std::vector<std::pair<std::string, std::int64_t>> keys;  // leading identifiers
    std::uint64_t n0 = 0;
    std::uint64_t p = 0;
    std::vector<std::int64_t> block;
    std::pair<std::uint64_t, std::uint64_t> evidence{0, 0};
    bool has_evidence = true;
    bool certified = true;
};

std::string render_period(const PeriodRecord& r, const RunConfig& cfg) {
    std::ostringstream os;
    switch (cfg.format) {
        case Format::json: {
            auto j = envelope(r.command);
            for (const auto& [k, v] : r.keys) j[k] = v;
            j["n0"] = r.n0;
            j["p"] = r.p;
            j["block"] = r.block;
            if (r.has_evidence) j["evidence"] = {r.evidence.first, r.evidence.second};
            j["certified"] = r.certified;
            os << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            for (const auto& [k, v] : r.keys) os << k << ',';
            os << "n0,p,block,evidence,certified\n";
            for (const auto& [k, v] : r.keys) os << v << ',';
            os << r.n0 << ',' << r.p << ",\"" << joined(r.block, " ") << "\",";
            if (r.has_evidence) os << '"' << r.evidence.first << ' ' << r.evidence.second << '"';
            os << ',' << (r.certified ? "true" : "false") << '\n';
            break;
        case Format::text:
            for (const auto& [k, v] : r.keys) os << k << ": " << v << '\n';
            os << "n0: " << r.n0 << '\n' << "p: " << r.p << '\n' << "block: " << joined(r.block, ",") << '\n';
            if (r.has_evidence) os << "evidence: state at " << r.evidence.first << " recurs at " << r.evidence.second << '\n';
            os << "certified: " << (r.certified ? "true" : "false (heuristic)") << '\n';
            break;
    }
    return os.str();
}

std::string render_diag(std::uint64_t a, std::uint64_t b, std::uint64_t horizon, const RunConfig& cfg) {
    sg::TwoStarNimTable table(cfg.node_budget);
    const auto r = sg::explore_diagonal(a, b, horizon, table);
    if (!r.found) throw sg::NotFound("no period with two full repetitions inside the horizon");
    if (cfg.format == Format::json) {
        auto j = envelope("diag");
        j["a"] = a;
        j["b"] = b;
        j["horizon"] = horizon;
        j["n0"] = r.preperiod;
        j["p"] = r.period;
        j["block"] = r.block;
        j["certified"] = false;
        j["values"] = r.values;
        std::ostringstream os;
        os << j.dump(2) << '\n';
        return os.str();
    }
    PeriodRecord rec{"diag", {{"a", a}, {"b", b}, {"horizon", horizon}}, r.preperiod, r.period, r.block, {}, false, false};
    std::string out = render_period(rec, cfg);
    if (cfg.format == Format::text) out += "values: " + joined(r.values, ",") + '\n';
    return out;
}

std::string render_census(unsigned m, std::uint64_t bound, const RunConfig& cfg) {
    const auto r = sg::census_star_nim(m, bound, cfg.node_budget);
    std::ostringstream os;
    switch (cfg.format) {
        case Format::json: {
            auto j = envelope("census");
            j["strips"] = r.strips;
            j["max"] = r.bound;
            j["nim_p"] = r.nim_p_count;
            j["star_p"] = r.star_p_count;
            os << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "strips,max,nim_p,star_p\n" << r.strips << ',' << r.bound << ',' << r.nim_p_count << ',' << r.star_p_count << '\n';
            break;
        case Format::text:
            os << "strips: " << r.strips << "\nentries: 1.." << r.bound << "\nNim P-positions: " << r.nim_p_count
               << "\nof which Star Nim P-positions: " << r.star_p_count << '\n';
            break;
    }
    return os.str();
}

std::string render_verify(const std::string& suite, const RunConfig& cfg, bool& passed) {
    sg::VerifyContext ctx(cfg.node_budget, cfg.step_budget);
    const auto results = sg::run_suite(suite, ctx);
    passed = sg::all_passed(results);
    std::ostringstream os;
    switch (cfg.format) {
        case Format::json: {
            auto j = envelope("verify");
            j["suite"] = suite;
            j["passed"] = passed;
            j["checks"] = ordered_json::array();
            for (const auto& r : results) {
                j["checks"].push_back(
                    {{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
            }
            os << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "suite,check,passed,cases,detail\n";
            for (const auto& r : results) {
                os << r.suite << ",\"" << r.name << "\"," << (r.passed ? "true" : "false") << ',' << r.cases << ",\""
                   << r.detail << "\"\n";
            }
            break;
        case Format::text: {
            std::size_t failures = 0;
            for (const auto& r : results) {
                os << (r.passed ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.name << " (" << r.cases << " cases)\n";
                if (!r.passed) {
                    ++failures;
                    os << "       counterexample: " << r.detail << '\n';
                }
            }
            os << results.size() - failures << '/' << results.size() << " checks passed\n";
            break;
        }
    }
    return os.str();
}

void emit(const std::string& text, const RunConfig& cfg) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw sg::PreconditionError("cannot open " + cfg.out_path + " for writing");
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sprague-Grundy values, g-sequences and periodicity certificates for Star Nim and Star Silver Dollar"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    app.add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
    app.add_option("--node-budget", cfg.node_budget, "Maximum number of stored states")
        ->envname("NODE_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_option("--step-budget", cfg.step_budget, "Maximum number of machine steps")
        ->envname("STEP_BUDGET")
        ->check(CLI::PositiveNumber);

    std::string position;
    auto* eval = app.add_subcommand("eval", "Evaluate a position such as \"[2,5];[3];[1,4]\"");
    eval->add_option("position", position)->required();

    std::uint64_t a_max = 0, b_max = 0;
    auto* table = app.add_subcommand("table", "2-Star Nim values G(a,b), 0 <= a <= A_MAX, a <= b <= B_MAX");
    table->add_option("a_max", a_max)->required();
    table->add_option("b_max", b_max)->required();

    unsigned g = 0;
    std::size_t n_max = 0;
    int algorithm = 2;
    auto* gseq = app.add_subcommand("gseq", "Pairs (x_n, y_n) of value g, as lines `n x y diff`");
    gseq->add_option("--g", g)->required();
    gseq->add_option("--n", n_max, "Last index")->required();
    gseq->add_option("--algorithm", algorithm, "1 reference, 2 windowed, 3 normalized")->check(CLI::Range(1, 3));

    auto* gseq_period = app.add_subcommand("gseq-period", "Certified period of y_n - x_n");
    gseq_period->add_option("--g", g)->required();

    unsigned row = 0;
    auto* row_period = app.add_subcommand("row-period", "Certified additive period of row a");
    row_period->add_option("--a", row)->required()->check(CLI::Range(1u, sg::kMaxMachineRow));

    std::uint64_t da = 0, db = 0, horizon = 0;
    auto* diag = app.add_subcommand("diag", "Heuristic period of the diagonal G(a+i, b+i)");
    diag->add_option("--a", da)->required();
    diag->add_option("--b", db)->required();
    diag->add_option("--horizon", horizon)->required();

    unsigned strips = 0;
    std::uint64_t bound = 0;
    auto* census = app.add_subcommand("census", "Nim and Star Nim P-positions with entries 1..max");
    census->add_option("--strips", strips)->required();
    census->add_option("--max", bound)->required();

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run the property sweeps");
    verify->add_option("--suite", suite)->check(
        CLI::IsMember({"all", "decomposition", "p-rules", "small-g", "bounds", "sequences", "rows"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        int status = 0;
        std::string out;
        if (*eval) {
            out = render_eval(position, cfg);
        } else if (*table) {
            out = render_table(a_max, b_max, cfg);
        } else if (*gseq) {
            out = render_gseq(g, n_max, algorithm, cfg);
        } else if (*gseq_period) {
            const auto c = sg::certify_diff_period(g, cfg.step_budget);
            out = render_period({"gseq-period", {{"g", g}}, c.preperiod, c.period, c.block, c.evidence, true, true}, cfg);
        } else if (*row_period) {
            sg::TwoStarNimTable t(cfg.node_budget);
            const auto c = sg::certify_row_period(row, t, cfg.step_budget);
            out = render_period({"row-period", {{"a", row}}, c.preperiod, c.period, c.block, c.evidence, true, true}, cfg);
        } else if (*diag) {
            out = render_diag(da, db, horizon, cfg);
        } else if (*census) {
            out = render_census(strips, bound, cfg);
        } else if (*verify) {
            bool passed = false;
            out = render_verify(suite, cfg, passed);
            status = passed ? 0 : kVerifyFailed;
        }
        emit(out, cfg);
        return status;
    } catch (const sg::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kInputError;
    } catch (const sg::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << " (" << e.partial().size() << " values computed)\n";
        return kResourceLimit;
    } catch (const sg::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const sg::InvariantError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInputError;
    } catch (const sg::PreconditionError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInputError;
    } catch (const sg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    }
}
