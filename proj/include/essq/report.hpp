#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace essq {

enum class CheckStatus { Pass, Fail, Info };

struct Check {
    std::string id;
    CheckStatus status;
    std::string message;
    nlohmann::json witness;  // null when absent
};

// Ordered list of named checks; the overall status is pass iff every
// non-info check passes.  Ids are stable strings like "products.prop-ess10-4".
class Report {
public:
    void pass(std::string id, std::string message, nlohmann::json witness = nullptr);
    void fail(std::string id, std::string message, nlohmann::json witness = nullptr);
    void info(std::string id, std::string message, nlohmann::json witness = nullptr);
    void check(bool ok, std::string id, std::string ok_msg, std::string fail_msg,
               nlohmann::json witness = nullptr);

    const std::vector<Check>& checks() const { return checks_; }
    void append(Report other);

    int pass_count() const;
    int fail_count() const;
    int info_count() const;
    bool all_passed() const { return fail_count() == 0; }

    nlohmann::json to_json() const;
    std::string to_text() const;

private:
    std::vector<Check> checks_;
};

}  // namespace essq
