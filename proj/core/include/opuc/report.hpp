#pragma once

#include <string>
#include <vector>

namespace opuc {

/// One verified identity: an equation tag, its normalized residual, and
/// whether the check applied at all (degenerate parameters can make an
/// equation vacuous, which is reported rather than silently dropped).
struct ResidualReport {
    enum class Status { Ok, Skipped, NotApplicable };

    std::string id;
    double residual = 0.0;
    Status status = Status::Ok;

    static ResidualReport ok(std::string id, double residual) {
        return {std::move(id), residual, Status::Ok};
    }
    static ResidualReport skipped(std::string id) { return {std::move(id), 0.0, Status::Skipped}; }
    static ResidualReport not_applicable(std::string id) {
        return {std::move(id), 0.0, Status::NotApplicable};
    }
};

std::string status_name(ResidualReport::Status s);

}  // namespace opuc
