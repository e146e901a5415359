#pragma once

#include <string>
#include <utility>

namespace farey {

// Outcome of a structural verification. On failure `detail` describes the
// first counterexample found; on success it may carry a short summary.
struct Verdict {
    bool pass = true;
    std::string detail;

    explicit operator bool() const { return pass; }

    static Verdict ok(std::string info = {}) { return {true, std::move(info)}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

}  // namespace farey
