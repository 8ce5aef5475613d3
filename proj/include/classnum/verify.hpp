#pragma once

#include "classnum/congruence.hpp"
#include "classnum/datasets.hpp"
#include "classnum/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace classnum {

/* One (record, prime factor) verification outcome. */
struct ReportRow {
    Family family = Family::Custom;
    std::string label;
    Integer p;
    unsigned e_p = 1;
    unsigned r_used = 1;
    bool rank_assumed = false;
    bool rank_uncertain = false;
    Verdict verdict = Verdict::inconclusive("");
    std::optional<Integer> witness;
    bool subfield_checked = false;
    bool subfield_confirmed = false;
    std::optional<Verdict> corollary;             /* odd-degree families */
    std::optional<Verdict> geometric;             /* when a bound applies */
    std::optional<Integer> geometric_q;
};

struct VerificationReport {
    std::vector<ReportRow> rows;

    std::size_t count(VerdictKind kind) const;
    bool has_violation() const;
};

/*
 * Runs the congruence checks over every prime factor of the record's class
 * number: the coprimality trichotomy against N1 (with any annotated
 * subfield class number), the odd-degree corollary when N is odd, and the
 * geometric-bound congruence when the family pins down a subfield F with
 * known discriminant:
 *   - N an odd prime q: F is the rationals, H_F computed from (m=1, D=1);
 *   - N = 2q for an odd prime q, imaginary family (cyclotomic_minus or
 *     decimic) with prime conductor c = 3 mod 4: F = Q(sqrt(-c)) with
 *     discriminant -c, H_F from (m=2, D=-c).
 * A Violation from any side check escalates the row verdict.  Anomalous
 * rows degrade to Inconclusive or Violation; nothing throws.
 */
std::vector<ReportRow> verify_record(const FieldRecord& record);

/* Verifies many records and sorts rows by (family, label, p). */
VerificationReport verify_records(const std::vector<FieldRecord>& records);

/*
 * Report renderings.  Both start with comment headers recording the
 * logarithm convention of the H_F bound; the TSV body carries the columns
 *   family label p e_p r_used rank_uncertain verdict witness subfield_confirmed
 * and a trailing summary comment.  Output is deterministic.
 */
std::string report_tsv(const VerificationReport& report);
std::string report_text(const VerificationReport& report);

} // namespace classnum
