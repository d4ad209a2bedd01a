#pragma once

#include <string>
#include <utility>

namespace rift {

enum class SolveStatus { solved, unsolvable, budget_exhausted };

/// Outcome of a solution verifier: ok, or the first rule found broken.
class ValidityReport {
public:
    static ValidityReport valid() { return ValidityReport(); }
    static ValidityReport violation(std::string rule, std::string detail)
    {
        ValidityReport r;
        r.ok_ = false;
        r.rule_ = std::move(rule);
        r.detail_ = std::move(detail);
        return r;
    }

    bool ok() const noexcept { return ok_; }
    explicit operator bool() const noexcept { return ok_; }
    const std::string& rule() const noexcept { return rule_; }
    const std::string& detail() const noexcept { return detail_; }
    std::string describe() const { return ok_ ? "ok" : rule_ + ": " + detail_; }

private:
    bool ok_ = true;
    std::string rule_;
    std::string detail_;
};

}  // namespace rift
