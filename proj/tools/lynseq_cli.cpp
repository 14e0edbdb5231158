// lynseq: lexicographically smallest and Lyndon subsequence toolkit.
//
// Subcommands: lex-smallest, most-competitive, lcls, longest-lyndon,
// common-lyndon, factorize, verify, bench. One JSON object per input on
// stdout (CSV for bench); diagnostics on stderr. Exit codes: 0 success,
// 1 input error, 2 verification mismatch, 3 resource-cap abort.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lynseq/lynseq.hpp"
#include "lynseq/verify.hpp"

using namespace lynseq;
using nlohmann::json;
using clock_type = std::chrono::steady_clock;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_mismatch = 2;
constexpr int exit_resource_cap = 3;

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return read_stream(std::cin);
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    return read_stream(f);
}

// byte inputs usually end with a newline that is not part of the string
void strip_trailing_newline(std::string& s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

struct loaded_text {
    text t;
    std::string digest;
};

loaded_text load_text(const std::string& path, bool tokens) {
    auto raw = read_input(path);
    loaded_text out;
    out.digest = fnv1a_digest(raw);
    if (tokens) {
        out.t = normalize_tokens(raw);
    } else {
        strip_trailing_newline(raw);
        out.t = normalize(bytes_to_symbols(raw));
    }
    return out;
}

std::pair<loaded_text, loaded_text> load_pair(const std::string& px, const std::string& py,
                                              bool tokens) {
    auto rx = read_input(px);
    auto ry = read_input(py);
    loaded_text ox, oy;
    ox.digest = fnv1a_digest(rx);
    oy.digest = fnv1a_digest(ry);
    std::vector<int> sx, sy;
    if (tokens) {
        sx = tokens_to_symbols(rx);
        sy = tokens_to_symbols(ry);
    } else {
        strip_trailing_newline(rx);
        strip_trailing_newline(ry);
        sx = bytes_to_symbols(rx);
        sy = bytes_to_symbols(ry);
    }
    auto [tx, ty] = normalize_union(sx, sy);
    tx.token_mode = ty.token_mode = tokens;
    ox.t = std::move(tx);
    oy.t = std::move(ty);
    return {std::move(ox), std::move(oy)};
}

// RunReport invariant: the emitted positions must re-extract to the
// emitted string.
void self_check_witness(const text& t, const position_seq& p, const std::string& witness) {
    if (display(t, extract(t, p)) != witness)
        throw std::logic_error("internal: witness does not re-extract to the reported string");
}

json stats_json(const traversal_stats& st) {
    return json{{"nodes_visited", st.nodes_visited},
                {"nodes_pruned", st.nodes_pruned},
                {"l_updates", st.prune_table_lowerings},
                {"range_queries", st.range_queries}};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

long long elapsed_ns(clock_type::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(clock_type::now() - start).count();
}

int run_longest_lyndon_offline(const std::string& input, bool tokens, const std::string& algo) {
    auto lt = load_text(input, tokens);
    if (lt.t.empty()) throw std::invalid_argument("longest-lyndon: empty input");
    auto start = clock_type::now();
    lyndon_result res = algo == "basic" ? longest_lyndon_basic(lt.t) : longest_lyndon_fast(lt.t);
    auto ns = elapsed_ns(start);
    auto witness = display(lt.t, extract(lt.t, res.positions));
    self_check_witness(lt.t, res.positions, witness);
    emit(json{{"command", "longest-lyndon"},
              {"algo", algo},
              {"input_digest", lt.digest},
              {"n", lt.t.size()},
              {"sigma", lt.t.sigma},
              {"length", res.length},
              {"witness", witness},
              {"positions", res.positions},
              {"elapsed_ns", ns},
              {"counters", stats_json(res.stats)}});
    return exit_ok;
}

int run_longest_lyndon_online(const std::string& input, bool tokens, int sigma,
                              std::uint64_t node_cap) {
    // stream characters one at a time, reporting after each
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!input.empty() && input != "-") {
        file.open(input, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open input file: " + input);
        in = &file;
    }
    int effective_sigma = tokens ? sigma : 256;
    if (tokens && sigma <= 0)
        throw std::invalid_argument("online token mode requires --sigma (alphabet declared upfront)");
    online_lyndon ol(effective_sigma, node_cap);
    auto start = clock_type::now();
    std::string consumed;
    if (tokens) {
        int v;
        while (*in >> v) {
            if (v < 1 || v > effective_sigma)
                throw std::invalid_argument("online token outside [1..sigma]: " + std::to_string(v));
            int len = ol.push(v);
            consumed += (consumed.empty() ? "" : " ") + std::to_string(v);
            emit(json{{"i", ol.consumed()}, {"ch", std::to_string(v)}, {"length", len}});
        }
        if (in->fail() && !in->eof())
            throw std::invalid_argument("token mode: stream contains a non-integer token");
    } else {
        char c;
        while (in->get(c)) {
            if (c == '\n' && in->peek() == EOF) break;  // ignore the final newline
            int len = ol.push(static_cast<unsigned char>(c) + 1);
            consumed.push_back(c);
            emit(json{{"i", ol.consumed()}, {"ch", std::string(1, c)}, {"length", len}});
        }
    }
    if (ol.consumed() == 0) throw std::invalid_argument("longest-lyndon: empty input");
    auto ns = elapsed_ns(start);
    auto res = ol.result();
    std::string witness;
    {
        // map best-node labels back to input symbols
        auto s = ol.best_string(res.length);
        for (std::size_t k = 0; k < s.ranks.size(); ++k) {
            if (tokens) {
                if (k) witness += ' ';
                witness += std::to_string(s.ranks[k]);
            } else {
                witness.push_back(static_cast<char>(s.ranks[k] - 1));
            }
        }
    }
    emit(json{{"command", "longest-lyndon"},
              {"algo", "online"},
              {"input_digest", fnv1a_digest(consumed)},
              {"n", ol.consumed()},
              {"sigma", effective_sigma},
              {"length", res.length},
              {"witness", witness},
              {"positions", res.positions},
              {"elapsed_ns", ns},
              {"counters", stats_json(res.stats)}});
    return exit_ok;
}

int run_verify(const std::string& suite, int max_n, int sigma, std::uint64_t seed, int count,
               unsigned jobs) {
    struct row {
        std::string name;
        int effective_max_n;
        verify::summary s;
    };
    // pair suites enumerate all string pairs; cap their exhaustive depth
    int pair_n = std::min(max_n, 6);
    std::vector<row> rows;
    auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
    if (want("longest-lyndon"))
        rows.push_back({"longest-lyndon", max_n, verify::longest_lyndon_suite(sigma, max_n, jobs)});
    if (want("lex-smallest"))
        rows.push_back({"lex-smallest", max_n, verify::lex_smallest_suite(sigma, max_n, jobs)});
    if (want("lcls"))
        rows.push_back({"lcls", pair_n, verify::lcls_suite(sigma, pair_n, jobs)});
    if (want("common-lyndon"))
        rows.push_back({"common-lyndon", pair_n, verify::common_lyndon_suite(sigma, pair_n, jobs)});
    if (want("most-competitive"))
        rows.push_back({"most-competitive", 40, verify::most_competitive_suite(seed, count)});
    if (want("online"))
        rows.push_back({"online", 60, verify::online_prefix_suite(seed, std::min(count, 500), 60, 4, jobs)});
    if (want("structures")) {
        auto s = verify::succinct_suite(seed, count * 10);
        s.merge(verify::precedes_suite(seed + 1, 60));
        rows.push_back({"structures", 64, s});
    }
    if (rows.empty())
        throw std::invalid_argument("unknown suite: " + suite);
    bool all_ok = true;
    for (const auto& r : rows) {
        emit(json{{"command", "verify"},
                  {"suite", r.name},
                  {"max_n", r.effective_max_n},
                  {"sigma", sigma},
                  {"cases", r.s.cases},
                  {"mismatches", r.s.mismatches},
                  {"bound_violations", r.s.bound_violations},
                  {"ok", r.s.ok()}});
        all_ok = all_ok && r.s.ok();
    }
    return all_ok ? exit_ok : exit_mismatch;
}

int run_bench(const std::string& algo, const std::vector<int>& sizes, int sigma,
              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::cout << "n,sigma,algo,elapsed_ns,nodes_visited,nodes_pruned\n";
    std::vector<std::string> algos;
    if (algo == "all")
        algos = {"basic", "fast", "online"};
    else
        algos = {algo};
    for (int n : sizes) {
        std::vector<int> raw(static_cast<std::size_t>(n));
        for (auto& v : raw) v = 1 + static_cast<int>(rng() % static_cast<unsigned>(sigma));
        auto t = normalize(raw);
        for (const auto& a : algos) {
            auto start = clock_type::now();
            lyndon_result res;
            if (a == "basic")
                res = longest_lyndon_basic(t);
            else if (a == "fast")
                res = longest_lyndon_fast(t);
            else
                res = longest_lyndon_online(t);
            auto ns = elapsed_ns(start);
            std::cout << n << "," << t.sigma << "," << a << "," << ns << ","
                      << res.stats.nodes_visited << "," << res.stats.nodes_pruned << "\n";
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexicographically smallest and Lyndon subsequence toolkit"};
    app.require_subcommand(1);

    bool tokens = false;
    app.add_flag("--tokens", tokens,
                 "treat input as whitespace-separated decimal integers instead of bytes");

    std::string input = "-";
    std::string input_x, input_y;
    int length = 0;
    bool all_lengths = false;
    std::string algo = "fast";
    int online_sigma = 0;
    int verify_sigma = 2;
    int bench_sigma = 4;
    int max_n = 8;
    std::uint64_t seed = 1;
    int count = 1000;
    unsigned jobs = 2;
    std::uint64_t node_cap = online_lyndon::default_node_cap;
    std::string suite = "all";
    std::vector<int> bench_sizes{25, 50, 100, 200};

    auto* cmd_lex = app.add_subcommand("lex-smallest",
                                       "smallest subsequence per length (table algorithm)");
    cmd_lex->add_option("input", input, "input file, or - for stdin");
    auto* lex_len = cmd_lex->add_option("--length", length, "only this length");
    cmd_lex->add_flag("--all-lengths", all_lengths, "every length 1..n (default)")
        ->excludes(lex_len);

    auto* cmd_mc = app.add_subcommand("most-competitive",
                                      "smallest fixed-length subsequence (stack algorithm)");
    cmd_mc->add_option("input", input, "input file, or - for stdin");
    cmd_mc->add_option("--length", length, "subsequence length")->required();

    auto* cmd_lcls = app.add_subcommand("lcls", "smallest common subsequence per length");
    cmd_lcls->add_option("x", input_x, "first input file")->required();
    cmd_lcls->add_option("y", input_y, "second input file")->required();
    cmd_lcls->add_option("--length", length, "only this length");

    auto* cmd_ll = app.add_subcommand("longest-lyndon", "longest Lyndon subsequence");
    cmd_ll->add_option("input", input, "input file, or - for stdin");
    cmd_ll->add_option("--algo", algo, "basic | fast | online")
        ->check(CLI::IsMember({"basic", "fast", "online"}));
    cmd_ll->add_option("--sigma", online_sigma, "alphabet size (required for online token streams)");
    cmd_ll->add_option("--node-cap", node_cap, "online trie node cap");

    auto* cmd_cl = app.add_subcommand("common-lyndon", "longest common Lyndon subsequence");
    cmd_cl->add_option("x", input_x, "first input file")->required();
    cmd_cl->add_option("y", input_y, "second input file")->required();

    auto* cmd_fac = app.add_subcommand("factorize", "Lyndon factorization (Duval)");
    cmd_fac->add_option("input", input, "input file, or - for stdin");

    auto* cmd_ver = app.add_subcommand("verify", "differential verification against the oracle");
    cmd_ver->add_option("--suite", suite,
                        "longest-lyndon | lex-smallest | lcls | common-lyndon | "
                        "most-competitive | online | structures | all");
    cmd_ver->add_option("--max-n", max_n, "max text length for exhaustive suites")
        ->check(CLI::Range(1, 16));
    cmd_ver->add_option("--sigma", verify_sigma, "alphabet size for exhaustive suites")
        ->check(CLI::Range(1, 10));
    cmd_ver->add_option("--seed", seed, "seed for randomized suites");
    cmd_ver->add_option("--count", count, "case count for randomized suites")
        ->check(CLI::Range(1, 1000000));
    cmd_ver->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));

    auto* cmd_bench = app.add_subcommand("bench", "timing and node-count CSV");
    cmd_bench->add_option("--algo", algo, "basic | fast | online | all")
        ->check(CLI::IsMember({"basic", "fast", "online", "all"}));
    cmd_bench->add_option("--sizes", bench_sizes, "text lengths to benchmark");
    cmd_bench->add_option("--sigma", bench_sigma, "alphabet size")->check(CLI::Range(1, 255));
    cmd_bench->add_option("--seed", seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the message or requested help
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (cmd_lex->parsed()) {
            auto lt = load_text(input, tokens);
            if (lt.t.empty()) throw std::invalid_argument("lex-smallest: empty input");
            auto start = clock_type::now();
            lex_table_fast table(lt.t);
            int n = lt.t.size();
            if (length > 0) {
                if (length > n) throw std::invalid_argument("lex-smallest: length exceeds input");
                auto s = table.smallest(n, length);
                emit(json{{"command", "lex-smallest"},
                          {"input_digest", lt.digest},
                          {"n", n},
                          {"length", length},
                          {"string", display(lt.t, s)},
                          {"elapsed_ns", elapsed_ns(start)}});
            } else {
                json results = json::array();
                for (int l = 1; l <= n; ++l)
                    results.push_back(
                        json{{"length", l}, {"string", display(lt.t, table.smallest(n, l))}});
                emit(json{{"command", "lex-smallest"},
                          {"input_digest", lt.digest},
                          {"n", n},
                          {"results", results},
                          {"elapsed_ns", elapsed_ns(start)}});
            }
            return exit_ok;
        }
        if (cmd_mc->parsed()) {
            auto lt = load_text(input, tokens);
            if (lt.t.empty()) throw std::invalid_argument("most-competitive: empty input");
            auto start = clock_type::now();
            auto p = most_competitive(lt.t, length);
            auto ns = elapsed_ns(start);
            auto witness = display(lt.t, extract(lt.t, p));
            self_check_witness(lt.t, p, witness);
            emit(json{{"command", "most-competitive"},
                      {"input_digest", lt.digest},
                      {"n", lt.t.size()},
                      {"length", length},
                      {"string", witness},
                      {"positions", p},
                      {"elapsed_ns", ns}});
            return exit_ok;
        }
        if (cmd_lcls->parsed()) {
            auto [lx, ly] = load_pair(input_x, input_y, tokens);
            if (lx.t.empty() || ly.t.empty()) throw std::invalid_argument("lcls: empty input");
            auto start = clock_type::now();
            auto per_len = lex_smallest_common_per_length(lx.t, ly.t);
            auto ns = elapsed_ns(start);
            auto str_of = [&](int l) {
                const auto& s = per_len[static_cast<std::size_t>(l)];
                return s.is_bottom() ? json(nullptr) : json(display(lx.t, s));
            };
            if (length > 0) {
                if (length >= static_cast<int>(per_len.size()))
                    throw std::invalid_argument("lcls: length exceeds min input length");
                emit(json{{"command", "lcls"},
                          {"input_digest_x", lx.digest},
                          {"input_digest_y", ly.digest},
                          {"length", length},
                          {"string", str_of(length)},
                          {"elapsed_ns", ns}});
            } else {
                json results = json::array();
                for (int l = 1; l < static_cast<int>(per_len.size()); ++l)
                    results.push_back(json{{"length", l}, {"string", str_of(l)}});
                emit(json{{"command", "lcls"},
                          {"input_digest_x", lx.digest},
                          {"input_digest_y", ly.digest},
                          {"results", results},
                          {"elapsed_ns", ns}});
            }
            return exit_ok;
        }
        if (cmd_ll->parsed()) {
            if (algo == "online") return run_longest_lyndon_online(input, tokens, online_sigma, node_cap);
            return run_longest_lyndon_offline(input, tokens, algo);
        }
        if (cmd_cl->parsed()) {
            auto [lx, ly] = load_pair(input_x, input_y, tokens);
            if (lx.t.empty() || ly.t.empty())
                throw std::invalid_argument("common-lyndon: empty input");
            auto start = clock_type::now();
            auto res = longest_common_lyndon(lx.t, ly.t);
            auto ns = elapsed_ns(start);
            std::string witness =
                res.length ? display(lx.t, extract(lx.t, res.positions_x)) : "";
            if (res.length) {
                self_check_witness(lx.t, res.positions_x, witness);
                self_check_witness(ly.t, res.positions_y, witness);
            }
            emit(json{{"command", "common-lyndon"},
                      {"input_digest_x", lx.digest},
                      {"input_digest_y", ly.digest},
                      {"length", res.length},
                      {"witness", witness},
                      {"positions_x", res.positions_x},
                      {"positions_y", res.positions_y},
                      {"elapsed_ns", ns},
                      {"counters", stats_json(res.stats)},
                      {"pair_insertions", res.pair_insertions}});
            return exit_ok;
        }
        if (cmd_fac->parsed()) {
            auto lt = load_text(input, tokens);
            auto start = clock_type::now();
            auto factors = duval_factorize(lt.t);
            auto ns = elapsed_ns(start);
            json spans = json::array();
            json words = json::array();
            for (auto [s, e] : factors) {
                spans.push_back(json::array({s, e}));
                position_seq p;
                for (int i = s; i <= e; ++i) p.push_back(i);
                words.push_back(display(lt.t, extract(lt.t, p)));
            }
            json out{{"command", "factorize"},
                     {"input_digest", lt.digest},
                     {"n", lt.t.size()},
                     {"spans", spans},
                     {"factors", words},
                     {"elapsed_ns", ns}};
            if (!lt.t.empty()) {
                auto [s, e] = longest_lyndon_substring(lt.t);
                position_seq p;
                for (int i = s; i <= e; ++i) p.push_back(i);
                out["longest"] = json{{"start", s},
                                      {"end", e},
                                      {"factor", display(lt.t, extract(lt.t, p))}};
            }
            emit(out);
            return exit_ok;
        }
        if (cmd_ver->parsed()) return run_verify(suite, max_n, verify_sigma, seed, count, jobs);
        if (cmd_bench->parsed()) return run_bench(algo, bench_sizes, bench_sigma, seed);
    } catch (const node_cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource_cap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
