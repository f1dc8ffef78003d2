#pragma once

/**
 * @file report.hpp
 * @brief Check outcomes as data: verdict, witnesses, stats.
 *
 * Checkers never throw on law violations; they return a report carrying
 * the offending elements so callers (CLI, suites, tests) can decide what
 * to do.  Machine rendering is deterministic: identical inputs and seeds
 * give byte-identical output, so wall-clock timing only appears in the
 * text rendering.
 */

#include <string>
#include <utility>
#include <vector>

namespace oml {

enum class Verdict { pass, fail, truncated };

const char* to_string(Verdict v);

struct CheckReport {
    std::string check;
    std::string target;
    Verdict verdict = Verdict::pass;
    std::vector<std::string> witnesses;
    std::vector<std::pair<std::string, std::string>> stats;
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;

    bool ok() const { return verdict == Verdict::pass; }

    CheckReport& witness(std::string w) {
        verdict = Verdict::fail;
        if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(w));
        ++violations;
        return *this;
    }

    CheckReport& stat(std::string key, std::string value) {
        stats.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    CheckReport& stat(std::string key, long long value) {
        return stat(std::move(key), std::to_string(value));
    }

    CheckReport& note(std::string n) {
        for (const auto& have : notes)
            if (have == n) return *this;
        notes.push_back(std::move(n));
        return *this;
    }

    /// Called once at the end of a checker; records the violation count.
    CheckReport& finish() {
        stat("violations", static_cast<long long>(violations));
        if (violations > static_cast<long long>(max_witnesses))
            note("witness list capped at " + std::to_string(max_witnesses));
        return *this;
    }

    long long violations = 0;
    static constexpr std::size_t max_witnesses = 16;
};

std::string render_text(const CheckReport& r);
std::string render_text(const std::vector<CheckReport>& rs);

/// Deterministic JSON array; no timing fields.
std::string render_machine(const std::vector<CheckReport>& rs);

bool all_ok(const std::vector<CheckReport>& rs);

} // namespace oml
