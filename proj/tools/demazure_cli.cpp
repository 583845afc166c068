// Command line front end: parses weights, dispatches to the library and
// renders aligned text or JSON. Exit codes: 0 ok, 1 verification failure,
// 2 usage error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "demazure.hpp"

namespace dm = demazure;
using dm::Int;
using dm::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Int> parse_coords(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError("empty coordinate list");
    return out;
}

// Display width of a UTF-8 string (one column per code point).
std::size_t width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

void print_table(std::ostream& os, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) w[c] = width(head[c]);
    for (auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], width(r[c]));
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            os << r[c];
            if (c + 1 < r.size()) os << std::string(w[c] - width(r[c]) + 2, ' ');
        }
        os << '\n';
    };
    line(head);
    for (auto& r : rows) line(r);
}

// One "key<TAB>json" line per entry; later lines win.
class FileCache {
public:
    explicit FileCache(const std::string& dir) {
        if (dir.empty()) return;
        std::filesystem::create_directories(dir);
        path_ = std::filesystem::path(dir) / "demazure-cache.tsv";
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) {
            const auto tab = line.find('\t');
            if (tab == std::string::npos) continue;
            try {
                entries_[line.substr(0, tab)] = json::parse(line.substr(tab + 1));
            } catch (const json::exception&) {
                // skip corrupt lines
            }
        }
    }

    std::optional<json> get(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void put(const std::string& key, const json& value) {
        if (path_.empty()) return;
        entries_[key] = value;
        std::ofstream(path_, std::ios::app) << key << '\t' << value.dump() << '\n';
    }

private:
    std::filesystem::path path_;
    std::map<std::string, json> entries_;
};

struct Options {
    bool json = false;
    std::string cache_dir;
    int n = 0;
    Int level = 1;
    std::string lambda;
    int i = 1;
    Int bound = 2;
    std::string affine;
    std::string eps;
    std::string edges;
    std::string suite = "all";
    Int max_coord = 2;
    Int max_level = 3;
    bool lemma_domain = false;
};

struct Output {
    json input = json::object();
    json result;
    std::string text;
    int code = kExitOk;
};

dm::Weight weight_arg(const Options& o, const std::string& text) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    const auto c = parse_coords(text);
    if (static_cast<int>(c.size()) != o.n) throw UsageError("weight needs exactly " + std::to_string(o.n) + " coordinates");
    for (Int x : c)
        if (x < 0) throw UsageError("weight coordinates must be non-negative");
    return dm::Weight(c);
}

void check_level(const Options& o) {
    if (o.level < 1) throw UsageError("--level must be at least 1");
}

void check_index(const Options& o) {
    if (o.i < 1 || o.i > o.n) throw UsageError("--i must lie in [1, n]");
}

Output cmd_pieri(const Options& o) {
    const auto lambda = weight_arg(o, o.lambda);
    check_level(o);
    check_index(o);
    const auto terms = dm::pieri_expand(dm::LevelContext(lambda, o.level), o.i);
    Output out;
    out.input = {{"n", o.n}, {"level", o.level}, {"lambda", lambda}, {"i", o.i}};
    out.result = terms;
    std::vector<std::vector<std::string>> rows;
    for (auto& t : terms) {
        std::string dec;
        for (auto& a : t.decomposition) dec += (dec.empty() ? "" : " ") + dm::to_string(a);
        rows.push_back({dm::to_string(t.chi), dm::to_string(t.mu), dm::to_string(t.target), "q^" + std::to_string(t.shift),
                        dec.empty() ? "∅" : dec});
    }
    std::ostringstream os;
    print_table(os, {"chi", "mu", "target", "shift", "o(mu)"}, rows);
    out.text = os.str();
    return out;
}

Output cmd_socle(const Options& o) {
    const auto lambda = weight_arg(o, o.lambda);
    check_level(o);
    const auto d = dm::socle_of_weight(lambda, o.level);
    Output out;
    out.input = {{"n", o.n}, {"level", o.level}, {"lambda", lambda}};
    out.result = d;
    out.text = dm::to_string(d.soc) + "\n" + dm::to_string(d.Lambda) + "\n";
    return out;
}

Output cmd_dominantize(const Options& o) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    const auto a = parse_coords(o.affine);
    if (static_cast<int>(a.size()) != o.n + 1) throw UsageError("--affine needs n+1 coefficients");
    std::vector<int> T;
    for (Int k : parse_coords(o.eps)) T.push_back(static_cast<int>(k));
    const dm::AffineWeight Lambda(a);
    if (!Lambda.dominant() || Lambda.level() < 1) throw UsageError("--affine must be dominant of positive level");
    const auto r = dm::dominantize_positions(Lambda, T);
    Output out;
    out.input = {{"n", o.n}, {"affine", Lambda}, {"eps", T}};
    out.result = r;
    std::string word;
    for (int j : r.word) word += (word.empty() ? "s" : " s") + std::to_string(j);
    out.text = dm::to_string(r.weight) + "\n" + (word.empty() ? "(identity)" : word) + "\n";
    return out;
}

Output cmd_rset(const Options& o) {
    const auto lambda = weight_arg(o, o.lambda);
    check_level(o);
    check_index(o);
    const dm::LevelContext ctx(lambda, o.level);
    const auto set = dm::pieri_set(ctx, o.i);
    Output out;
    out.input = {{"n", o.n}, {"level", o.level}, {"lambda", lambda}, {"i", o.i}};
    out.result = json::array();
    std::vector<std::vector<std::string>> rows;
    for (auto& chi : set) {
        const auto mu = dm::varpi_minus_chi(chi, o.i);
        out.result.push_back({{"chi", chi}, {"mu", mu}});
        rows.push_back({dm::to_string(chi), dm::to_string(mu)});
    }
    std::ostringstream os;
    print_table(os, {"chi", "varpi_i - chi"}, rows);
    out.text = os.str();
    return out;
}

Output cmd_mults(const Options& o, FileCache& cache) {
    const auto lambda = weight_arg(o, o.lambda);
    check_level(o);
    const std::string key = "mults n=" + std::to_string(o.n) + " level=" + std::to_string(o.level) + " lambda=" +
                            dm::coords_string(lambda.coords);
    dm::MultiplicityTable table;
    if (auto hit = cache.get(key)) {
        table = hit->get<dm::MultiplicityTable>();
    } else {
        table = dm::mult_table_level1(o.n, o.level, lambda);
        cache.put(key, table);
    }
    Output out;
    out.input = {{"n", o.n}, {"level", o.level}, {"lambda", lambda}};
    out.result = json(table)["entries"];
    std::vector<std::vector<std::string>> rows;
    for (auto& [w, c] : table.entries) rows.push_back({dm::to_string(w), std::to_string(c)});
    std::ostringstream os;
    print_table(os, {"mu", "mult"}, rows);
    out.text = os.str();
    return out;
}

Output cmd_series(const Options& o, FileCache& cache) {
    const auto mu = weight_arg(o, o.lambda);
    check_level(o);
    if (o.bound < 0) throw UsageError("--bound must be non-negative");
    const std::string key = "series n=" + std::to_string(o.n) + " level=" + std::to_string(o.level) + " mu=" +
                            dm::coords_string(mu.coords) + " bound=" + std::to_string(o.bound);
    dm::SeriesTruncation s;
    if (auto hit = cache.get(key)) {
        s = hit->get<dm::SeriesTruncation>();
    } else {
        s = dm::series_truncation(o.n, o.level, mu, o.bound);
        cache.put(key, s);
    }
    Output out;
    out.input = {{"n", o.n}, {"level", o.level}, {"mu", mu}, {"bound", o.bound}};
    out.result = json::object();
    std::vector<std::vector<std::string>> rows;
    for (auto& [k, c] : s.coeffs) {
        out.result[dm::to_string(k)] = c;
        rows.push_back({dm::to_string(k), std::to_string(c)});
    }
    std::ostringstream os;
    print_table(os, {"k", "coeff"}, rows);
    out.text = os.str();
    return out;
}

Output cmd_crystal(const Options& o, bool with_bound) {
    const auto lambda = weight_arg(o, o.lambda);
    check_level(o);
    for (Int c : lambda.coords)
        if (c > o.level) throw UsageError("crystal needs every coordinate at most the level");
    const auto B = dm::tensor_of_weight(lambda);
    if (B.size() > dm::max_cells()) throw UsageError("tensor product exceeds DEMAZURE_MAX_CELLS");
    const auto comp = dm::demazure_component(B, o.level);
    Output out;
    out.input = {{"n", o.n}, {"level", o.level}, {"lambda", lambda}};
    out.result = {{"highest_weights", comp.highest_weights},
                  {"labels", json::array()},
                  {"size", comp.ids.size()},
                  {"tensor_size", B.size()}};
    std::ostringstream os;
    for (auto& w : comp.highest_weights) {
        out.result["labels"].push_back(dm::to_string(w));
        os << dm::to_string(w) << '\n';
    }
    os << "demazure crystal size " << comp.ids.size() << " of " << B.size() << '\n';
    if (with_bound) {
        check_index(o);
        const auto b = dm::pieri_crystal_bound(o.n, o.level, lambda, o.i);
        out.input["i"] = o.i;
        out.result["bound"] = b;
        os << "bound i=" << o.i << ": " << b.lhs << (b.equality() ? " = " : b.inequality() ? " >= " : " < ") << b.rhs
           << '\n';
    }
    if (!o.edges.empty()) {
        if (o.edges == "-") {
            dm::write_edges(std::cout, B, comp, o.level);
        } else {
            std::ofstream f(o.edges);
            if (!f) throw UsageError("cannot write " + o.edges);
            dm::write_edges(f, B, comp, o.level);
        }
        out.input["edges"] = o.edges;
    }
    out.text = os.str();
    return out;
}

Output cmd_verify(const Options& o) {
    dm::GridParams g;
    g.max_rank = o.n > 0 ? o.n : 2;
    g.max_coord = o.max_coord;
    g.max_level = o.max_level;
    g.bound = o.bound;
    g.scope = o.lemma_domain ? dm::RecursionScope::LemmaDomain : dm::RecursionScope::Full;
    if (g.max_coord < 0 || g.max_level < 1 || g.bound < 0) throw UsageError("grid parameters out of range");
    std::vector<std::string> names;
    if (o.suite == "all") {
        names = dm::suite_names();
    } else {
        const auto& known = dm::suite_names();
        if (std::find(known.begin(), known.end(), o.suite) == known.end()) throw UsageError("unknown suite '" + o.suite + "'");
        names = {o.suite};
    }
    Output out;
    out.input = {{"suite", o.suite}, {"n", g.max_rank}, {"max_coord", g.max_coord}, {"max_level", g.max_level},
                 {"bound", g.bound}, {"lemma_domain", o.lemma_domain}};
    out.result = json::array();
    std::ostringstream os;
    for (auto& name : names) {
        const auto rep = dm::run_suite(name, g);
        out.result.push_back(rep);
        if (!rep.passed) out.code = kExitVerify;
        os << (rep.passed ? "PASS " : "FAIL ") << rep.name << "  checked=" << rep.checked << " failed=" << rep.failed << '\n';
        for (auto& f : rep.failures) os << "  counterexample: " << f << '\n';
        for (auto& n : rep.notes) os << "  note: " << n << '\n';
    }
    out.text = os.str();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pieri expansions, socles and multiplicities for higher-level Demazure modules of affine sl(n+1)"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of aligned text");
    app.add_option("--cache-dir", o.cache_dir, "Directory for memoised tables (mults, series)");

    auto add_common = [&](CLI::App* sub, bool weight, bool index) {
        sub->add_option("--n", o.n, "Rank n of sl(n+1)")->required();
        sub->add_option("--level", o.level, "Level ell")->required();
        if (weight) sub->add_option("--lambda", o.lambda, "Comma-separated fundamental coordinates")->required();
        if (index) sub->add_option("--i", o.i, "Fundamental index i")->required();
    };

    auto* pieri = app.add_subcommand("pieri", "Pieri terms with grading shifts");
    add_common(pieri, true, true);
    auto* socle = app.add_subcommand("socle", "Socle weight and its affine weight");
    add_common(socle, true, false);
    auto* dominantize = app.add_subcommand("dominantize", "Dominant weight in the stabiliser orbit of Lambda + eps_K");
    dominantize->add_option("--n", o.n, "Rank n")->required();
    dominantize->add_option("--affine", o.affine, "Coefficients a_0,...,a_n of Lambda")->required();
    dominantize->add_option("--eps", o.eps, "Positions k_1,...,k_i in [1, n+1]")->required();
    auto* rset = app.add_subcommand("rset", "The Pieri subset of the orbit of varpi_i");
    add_common(rset, true, true);
    auto* mults = app.add_subcommand("mults", "Level-one numerical multiplicities [D^1_lambda : D^ell_mu]");
    add_common(mults, true, false);
    auto* series = app.add_subcommand("series", "Truncated generating series A^{1->ell}_mu");
    series->add_option("--n", o.n, "Rank n")->required();
    series->add_option("--level", o.level, "Level ell")->required();
    series->add_option("--mu", o.lambda, "Comma-separated fundamental coordinates")->required();
    series->add_option("--bound", o.bound, "Per-variable degree cap")->required();
    auto* crystal = app.add_subcommand("crystal", "Classical decomposition of a Demazure crystal");
    add_common(crystal, true, false);
    auto* crystal_i = crystal->add_option("--i", o.i, "Also compare crystal totals for the Pieri expansion at i");
    crystal->add_option("--edges", o.edges, "Write the Demazure subgraph as 'src i dst' lines ('-' for stdout)");
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite, "Suite name or 'all'");
    verify->add_option("--n", o.n, "Largest rank in the grid");
    verify->add_option("--max-coord", o.max_coord, "Largest weight coordinate");
    verify->add_option("--max-level", o.max_level, "Largest level");
    verify->add_option("--bound", o.bound, "Per-variable degree cap for series");
    verify->add_flag("--lemma-domain", o.lemma_domain, "Compare series only where lambda + k is dominant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    Output out;
    try {
        FileCache cache(o.cache_dir);
        if (*pieri) out = cmd_pieri(o);
        else if (*socle) out = cmd_socle(o);
        else if (*dominantize) out = cmd_dominantize(o);
        else if (*rset) out = cmd_rset(o);
        else if (*mults) out = cmd_mults(o, cache);
        else if (*series) out = cmd_series(o, cache);
        else if (*crystal) out = cmd_crystal(o, crystal_i->count() > 0);
        else if (*verify) out = cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const dm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
        case dm::ErrorKind::mismatch:
        case dm::ErrorKind::antisymmetry_violation:
        case dm::ErrorKind::not_a_partial_order:
        case dm::ErrorKind::no_dominant_found:
        case dm::ErrorKind::nonzero_residual:
        case dm::ErrorKind::negative_coefficient: return kExitVerify;
        default: return kExitUsage;
        }
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    if (o.json) {
        json doc = {{"input", out.input}, {"result", out.result}, {"meta", {{"version", DEMAZURE_VERSION}, {"elapsed_ms", ms}}}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << out.text;
    }
    return out.code;
}
