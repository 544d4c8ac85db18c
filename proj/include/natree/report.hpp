#ifndef NATREE_REPORT_HPP
#define NATREE_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace natree {

enum class Status { pass, fail, skip };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "skip";
    }
}

// Structured outcome of one verification run: a named command with its
// parameters and a flat list of checks. A failing check always carries a
// witness describing the offending instance.
struct Report {
    struct Check {
        std::string name;
        Status status = Status::pass;
        std::string witness;
    };

    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;

    void param(std::string name, std::string value) {
        params.emplace_back(std::move(name), std::move(value));
    }

    void add(std::string name, Status status, std::string witness = {}) {
        checks.push_back({std::move(name), status, std::move(witness)});
    }

    void expect(std::string name, bool ok, std::string witness = {}) {
        add(std::move(name), ok ? Status::pass : Status::fail, std::move(witness));
    }

    int count(Status s) const {
        int n = 0;
        for (const auto& c : checks) n += (c.status == s) ? 1 : 0;
        return n;
    }

    bool ok() const { return count(Status::fail) == 0; }
};

}  // namespace natree

#endif
