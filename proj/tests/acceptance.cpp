// Acceptance gate: one PASS/FAIL line per criterion. Grids and runtime limits
// are fixed here. With --expect-fail the exit status is 0 iff the failing
// criteria are exactly the listed ones, so an unexpected pass is also an error.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "demazure.hpp"

using namespace demazure;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_s;  // wall-clock limit in seconds
    std::function<Outcome()> run;
};

Outcome from_report(const CheckReport& r) {
    Outcome o{r.passed, std::to_string(r.checked) + " checks, " + std::to_string(r.failed) + " failed"};
    if (!r.failures.empty()) o.detail += "; first: " + r.failures.front();
    for (auto& n : r.notes) o.detail += "; " + n;
    return o;
}

AffineWeight lambdas(int n, std::initializer_list<int> js) {
    AffineWeight x(std::vector<Int>(static_cast<std::size_t>(n + 1), 0));
    for (int j : js) x[j] += 1;
    return x;
}

Outcome ac1() { return from_report(verify_pieri_examples()); }

Outcome ac2() {
    Outcome o;
    const auto d = socle_of_weight(Weight({4, 3, 5, 1, 3}), 5);
    const Weight want_soc({1, 0, 1, 1, 1});
    const AffineWeight want_Lambda = lambdas(5, {0, 2, 3, 4, 5});
    o.ok = d.soc == want_soc && d.Lambda == want_Lambda;
    o.detail = "expected soc " + to_string(want_soc) + " with " + to_string(want_Lambda) + "; got soc " + to_string(d.soc) +
               " with " + to_string(d.Lambda) + (d.Lambda == want_Lambda ? " (affine weight matches; its finite part is " +
                                                                                 to_string(want_Lambda.finite_part()) + ")"
                                                                           : "");
    for (Int l = 1; l <= 5; ++l) {
        const auto z = socle_of_weight(Weight::zero(5), l);
        AffineWeight want(std::vector<Int>(6, 0));
        want[0] = l;
        if (z.Lambda != want) {
            o.ok = false;
            o.detail += "; lambda=0 level " + std::to_string(l) + " gave " + to_string(z.Lambda);
        }
    }
    return o;
}

Outcome ac3() {
    Outcome o;
    const AffineWeight Lambda = lambdas(7, {0, 1, 6});
    const AffineWeight want = lambdas(7, {0, 3, 6});
    const auto r = dominantize(Lambda, eps_vector(7, {4, 5, 8}));
    bool letters_fix = true;
    std::string word;
    for (int j : r.word) {
        letters_fix = letters_fix && Lambda[j] == 0;
        word += (word.empty() ? "s" : " s") + std::to_string(j);
    }
    o.ok = r.weight == want && letters_fix;
    o.detail = "expected " + to_string(want) + "; got " + to_string(r.weight) + " via " + word +
               (letters_fix ? " (every letter fixes Lambda)" : " (a letter moves Lambda)");
    return o;
}

Outcome ac9() {
    CheckReport r = verify_recursion_suite({.max_rank = 2, .max_coord = 3, .max_level = 4, .bound = 3});
    auto o = from_report(r);
    return o;
}

Outcome ac10() { return from_report(verify_sl3_crystal({.max_rank = 2, .max_coord = 3, .max_level = 3})); }

std::set<std::string> split_ids(const std::string& s) {
    std::set<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto end = s.find(',', start);
        const auto tok = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (!tok.empty()) out.insert(tok);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::string expect;
    std::string only;
    app.add_option("--expect-fail", expect, "Comma-separated criteria known to fail, e.g. AC2,AC3");
    app.add_option("--only", only, "Comma-separated criteria to run");
    CLI11_PARSE(app, argc, argv);

    std::vector<Criterion> criteria{
        {"AC1", "worked Pieri examples", 1.0, ac1},
        {"AC2", "worked socle example", 1.0, ac2},
        {"AC3", "worked dominantization example", 1.0, ac3},
        {"AC4", "poset axioms, n<=6 coords<=4 level<=5", 300.0,
         [] { return from_report(verify_poset({.max_rank = 6, .max_coord = 4, .max_level = 5})); }},
        {"AC5", "socle injectivity, n<=4 coords<=3 level<=4", 300.0,
         [] { return from_report(verify_socle({.max_rank = 4, .max_coord = 3, .max_level = 4})); }},
        {"AC6", "orbit consistency, n<=4 coords<=3 level<=4", 300.0,
         [] { return from_report(verify_orbit_consistency({.max_rank = 4, .max_coord = 3, .max_level = 4})); }},
        {"AC7", "character and dimension identity, n<=2 coords<=6 level<=4", 120.0,
         [] { return from_report(verify_character_identity({.max_rank = 2, .max_coord = 6, .max_level = 4})); }},
        {"AC8", "recursion tables vs character oracle, n<=2 coords<=5 level<=4", 120.0,
         [] { return from_report(verify_oracle_equivalence({.max_rank = 2, .max_coord = 5, .max_level = 4})); }},
        {"AC9", "series recursion, n<=2 coords<=3 level<=4 bound 3", 300.0, ac9},
        {"AC10", "sl3 crystal tables, decomposition and totals, level<=3", 300.0, ac10},
    };

    const auto wanted = split_ids(only);
    const auto expected_fail = split_ids(expect);
    std::set<std::string> failed, ran;
    for (auto& c : criteria) {
        if (!wanted.empty() && !wanted.count(c.id) && !(wanted.count("AC11") && (c.id == "AC1" || c.id == "AC7" || c.id == "AC8")))
            continue;
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs > c.limit_s) {
            o.ok = false;
            o.detail += "; runtime limit exceeded";
        }
        ran.insert(c.id);
        if (!o.ok) failed.insert(c.id);
        std::printf("%s %-5s %-62s %8.2fs (limit %.0fs)  %s\n", o.ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                    secs, c.limit_s, o.detail.c_str());
        std::fflush(stdout);
    }

    // graded statement: rests on the q-shifts of AC1 and the q=1 identities of AC7 and AC8
    if (ran.count("AC1") && ran.count("AC7") && ran.count("AC8")) {
        const bool ok = !failed.count("AC1") && !failed.count("AC7") && !failed.count("AC8");
        if (!ok) failed.insert("AC11");
        std::printf("%s %-5s %-62s %8s             %s\n", ok ? "PASS" : "FAIL", "AC11", "graded statement via AC1, AC7, AC8", "-",
                    "q-shifts plus q=1 identities");
    }

    std::string failed_list;
    for (auto& f : failed) failed_list += (failed_list.empty() ? "" : ",") + f;
    std::printf("failing: %s\n", failed_list.empty() ? "none" : failed_list.c_str());
    if (expected_fail.empty()) return failed.empty() ? 0 : 1;
    std::set<std::string> expected_ran;
    for (auto& id : expected_fail)
        if (ran.count(id) || id == "AC11") expected_ran.insert(id);
    if (failed != expected_ran) {
        std::printf("failing set differs from --expect-fail\n");
        return 1;
    }
    return 0;
}
