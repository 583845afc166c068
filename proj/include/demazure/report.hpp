#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace demazure {

/// Outcome of a verification run. Only the first few failures are kept.
struct CheckReport {
    std::string name;
    bool passed = true;
    std::int64_t checked = 0;
    std::int64_t failed = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    static constexpr std::size_t kMaxFailures = 10;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        passed = false;
        ++failed;
        if (failures.size() < kMaxFailures) failures.push_back(what);
    }

    /// Like check, but only builds the message on failure.
    template <class F>
    void check_with(bool ok, F&& what) {
        if (ok) {
            ++checked;
            return;
        }
        check(false, what());
    }

    void merge(const CheckReport& other) {
        passed = passed && other.passed;
        checked += other.checked;
        failed += other.failed;
        for (auto& f : other.failures)
            if (failures.size() < kMaxFailures) failures.push_back(f);
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
};

}  // namespace demazure
