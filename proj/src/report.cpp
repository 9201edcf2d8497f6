#include "essq/report.hpp"

namespace essq {

namespace {
const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Info: return "info";
    }
    return "?";
}
}  // namespace

void Report::pass(std::string id, std::string message, nlohmann::json witness) {
    checks_.push_back({std::move(id), CheckStatus::Pass, std::move(message), std::move(witness)});
}

void Report::fail(std::string id, std::string message, nlohmann::json witness) {
    checks_.push_back({std::move(id), CheckStatus::Fail, std::move(message), std::move(witness)});
}

void Report::info(std::string id, std::string message, nlohmann::json witness) {
    checks_.push_back({std::move(id), CheckStatus::Info, std::move(message), std::move(witness)});
}

void Report::check(bool ok, std::string id, std::string ok_msg, std::string fail_msg,
                   nlohmann::json witness) {
    if (ok)
        pass(std::move(id), std::move(ok_msg), std::move(witness));
    else
        fail(std::move(id), std::move(fail_msg), std::move(witness));
}

void Report::append(Report other) {
    for (auto& c : other.checks_) checks_.push_back(std::move(c));
}

int Report::pass_count() const {
    int n = 0;
    for (const auto& c : checks_) n += c.status == CheckStatus::Pass;
    return n;
}

int Report::fail_count() const {
    int n = 0;
    for (const auto& c : checks_) n += c.status == CheckStatus::Fail;
    return n;
}

int Report::info_count() const {
    int n = 0;
    for (const auto& c : checks_) n += c.status == CheckStatus::Info;
    return n;
}

nlohmann::json Report::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks_) {
        arr.push_back({{"id", c.id},
                       {"status", status_name(c.status)},
                       {"message", c.message},
                       {"witness", c.witness}});
    }
    return {{"checks", arr},
            {"summary",
             {{"pass", pass_count()}, {"fail", fail_count()}, {"info", info_count()}}}};
}

std::string Report::to_text() const {
    std::string out;
    for (const auto& c : checks_) {
        out += c.id;
        out += ": ";
        out += status_name(c.status);
        if (!c.message.empty()) {
            out += " (";
            out += c.message;
            out += ")";
        }
        out += "\n";
    }
    out += "summary: " + std::to_string(pass_count()) + " pass, " +
           std::to_string(fail_count()) + " fail, " + std::to_string(info_count()) + " info\n";
    return out;
}

}  // namespace essq
