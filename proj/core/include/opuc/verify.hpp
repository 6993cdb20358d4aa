#pragma once

#include <string>
#include <vector>

#include "opuc/moments.hpp"
#include "opuc/opuc_sequence.hpp"
#include "opuc/weights.hpp"

namespace opuc {

enum class Scope { Pearson, Recurrence, Structure, Difference, Ode1, Ode2, All };

std::string scope_name(Scope s);
Scope scope_from_name(const std::string& name);

/// One line of a verification sweep; equation_id tags which identity was
/// evaluated, status is "ok" / "skipped" / "n/a".
struct CheckRow {
    std::string family;
    std::string param_set;
    int n = 0;
    std::string equation_id;
    double residual = 0.0;
    std::string status = "ok";
};

/// Runs every check of the scope for n up to n_max_check (each check
/// applies its own lower bound and sequence headroom). The sequence must
/// extend at least to n_max_check + 2.
std::vector<CheckRow> run_scope(Scope scope, const WeightSpec& spec, const MomentTable& table,
                                const OpucSequence& seq, int n_max_check);

/// Worst "ok" row, or nullptr when all rows pass `tol`.
const CheckRow* worst_breach(const std::vector<CheckRow>& rows, double tol);

}  // namespace opuc
